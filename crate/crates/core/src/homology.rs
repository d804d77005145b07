//! Exact reduced simplicial homology over the integers.
//!
//! Boundary matrices are built with alternating signs under the lexicographic
//! vertex order and diagonalized by Smith normal form. The elimination runs
//! in two phases: a sparse phase that pivots only on unit entries (minimal
//! fill-in, no coefficient growth concerns), then a dense phase on whatever
//! remains, with minimal-absolute-value pivoting and gcd reduction. Ranks are
//! recomputed over a word-sized prime field and must agree with the exact
//! count of invariant factors.
//!
//! The sparse phase first runs in checked `i128` arithmetic and falls back to
//! arbitrary-precision integers on overflow; values exposed publicly are
//! always `BigInt`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Sparse integer matrix; only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(u32, u32, BigInt)>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, mut entries: Vec<(u32, u32, BigInt)>) -> Self {
        entries.retain(|(_, _, v)| !v.is_zero());
        entries.sort_by_key(|&(r, c, _)| (r, c));
        for w in entries.windows(2) {
            assert!(
                (w[0].0, w[0].1) != (w[1].0, w[1].1),
                "duplicate entry at ({}, {})",
                w[0].0,
                w[0].1
            );
        }
        for &(r, c, _) in &entries {
            assert!((r as usize) < rows && (c as usize) < cols, "entry out of range");
        }
        Self { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn from_dense(dense: &[Vec<i64>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, |r| r.len());
        let mut entries = Vec::new();
        for (r, row) in dense.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    entries.push((r as u32, c as u32, BigInt::from(v)));
                }
            }
        }
        Self::new(rows, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.entries.iter().map(|(r, c, v)| (*r, *c, v))
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, r: u32, c: u32) -> BigInt {
        match self.entries.binary_search_by_key(&(r, c), |&(er, ec, _)| (er, ec)) {
            Ok(i) => self.entries[i].2.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Sparse product `self * other`.
    pub fn matmul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut by_col: HashMap<u32, Vec<(u32, &BigInt)>> = HashMap::new();
        for (r, c, v) in self.entries() {
            by_col.entry(c).or_default().push((r, v));
        }
        let mut acc: HashMap<(u32, u32), BigInt> = HashMap::new();
        for (r2, c2, v2) in other.entries() {
            if let Some(col) = by_col.get(&r2) {
                for &(r1, v1) in col {
                    let e = acc.entry((r1, c2)).or_insert_with(BigInt::zero);
                    *e += v1 * v2;
                }
            }
        }
        let entries = acc
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|((r, c), v)| (r, c, v))
            .collect();
        IntegerMatrix::new(self.rows, other.cols, entries)
    }

    /// Same matrix with rows and columns relabeled by the given permutations.
    pub fn permuted(&self, row_perm: &[u32], col_perm: &[u32]) -> IntegerMatrix {
        assert_eq!(row_perm.len(), self.rows);
        assert_eq!(col_perm.len(), self.cols);
        let entries = self
            .entries
            .iter()
            .map(|(r, c, v)| (row_perm[*r as usize], col_perm[*c as usize], v.clone()))
            .collect();
        IntegerMatrix::new(self.rows, self.cols, entries)
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}x{} matrix, {} nonzero entries",
            self.rows,
            self.cols,
            self.nnz()
        )
    }
}

// ---------------------------------------------------------------------------
// Elimination scalars
// ---------------------------------------------------------------------------

trait ElimScalar: Clone + Sized {
    /// None if the value cannot be represented in this scalar type.
    fn from_bigint(v: &BigInt) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;
    fn zero_value() -> Self;
    fn vanishes(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// Multiplicative inverse; defined exactly for units.
    fn unit_inverse(&self) -> Self;
    /// `a * b`, None on overflow.
    fn try_mul(a: &Self, b: &Self) -> Option<Self>;
    /// `a - b * c`, None on overflow.
    fn try_mul_sub(a: &Self, b: &Self, c: &Self) -> Option<Self>;
}

impl ElimScalar for i128 {
    fn from_bigint(v: &BigInt) -> Option<Self> {
        i128::try_from(v).ok()
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn zero_value() -> Self {
        0
    }
    fn vanishes(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn unit_inverse(&self) -> Self {
        *self
    }
    fn try_mul(a: &Self, b: &Self) -> Option<Self> {
        a.checked_mul(*b)
    }
    fn try_mul_sub(a: &Self, b: &Self, c: &Self) -> Option<Self> {
        a.checked_sub(b.checked_mul(*c)?)
    }
}

impl ElimScalar for BigInt {
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn zero_value() -> Self {
        BigInt::zero()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn unit_inverse(&self) -> Self {
        self.clone()
    }
    fn try_mul(a: &Self, b: &Self) -> Option<Self> {
        Some(a * b)
    }
    fn try_mul_sub(a: &Self, b: &Self, c: &Self) -> Option<Self> {
        Some(a - b * c)
    }
}

/// Arithmetic in the prime field of order 2^61 - 1.
pub const RANK_CHECK_PRIME: u64 = (1 << 61) - 1;

#[derive(Clone, Copy, PartialEq)]
struct ModP(u64);

fn mod_p(v: &BigInt) -> u64 {
    let p = BigInt::from(RANK_CHECK_PRIME);
    let r = ((v % &p) + &p) % &p;
    u64::try_from(r).expect("reduced value fits")
}

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % RANK_CHECK_PRIME as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        exp >>= 1;
    }
    acc
}

impl ElimScalar for ModP {
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(ModP(mod_p(v)))
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(self.0)
    }
    fn zero_value() -> Self {
        ModP(0)
    }
    fn vanishes(&self) -> bool {
        self.0 == 0
    }
    fn is_unit(&self) -> bool {
        self.0 != 0
    }
    fn unit_inverse(&self) -> Self {
        ModP(pow_mod(self.0, RANK_CHECK_PRIME - 2))
    }
    fn try_mul(a: &Self, b: &Self) -> Option<Self> {
        Some(ModP(mul_mod(a.0, b.0)))
    }
    fn try_mul_sub(a: &Self, b: &Self, c: &Self) -> Option<Self> {
        let prod = mul_mod(b.0, c.0);
        Some(ModP((a.0 + RANK_CHECK_PRIME - prod) % RANK_CHECK_PRIME))
    }
}

// ---------------------------------------------------------------------------
// Sparse elimination (phase 1)
// ---------------------------------------------------------------------------

struct SparseElim<S> {
    row_entries: Vec<HashMap<u32, S>>,
    col_rows: Vec<HashSet<u32>>,
    col_units: Vec<u32>,
    col_alive: Vec<bool>,
}

impl<S: ElimScalar> SparseElim<S> {
    fn build(m: &IntegerMatrix) -> Option<Self> {
        let mut elim = SparseElim {
            row_entries: vec![HashMap::new(); m.rows],
            col_rows: vec![HashSet::new(); m.cols],
            col_units: vec![0; m.cols],
            col_alive: vec![true; m.cols],
        };
        for (r, c, v) in m.entries() {
            let s = S::from_bigint(v)?;
            if s.vanishes() {
                continue;
            }
            if s.is_unit() {
                elim.col_units[c as usize] += 1;
            }
            elim.col_rows[c as usize].insert(r);
            elim.row_entries[r as usize].insert(c, s);
        }
        Some(elim)
    }

    fn write(&mut self, r: u32, c: u32, val: S) {
        let row = &mut self.row_entries[r as usize];
        let old_unit = row.get(&c).map(|v| v.is_unit());
        if val.vanishes() {
            if row.remove(&c).is_some() {
                self.col_rows[c as usize].remove(&r);
                if old_unit == Some(true) {
                    self.col_units[c as usize] -= 1;
                }
            }
            return;
        }
        let new_unit = val.is_unit();
        row.insert(c, val);
        match old_unit {
            None => {
                self.col_rows[c as usize].insert(r);
                if new_unit {
                    self.col_units[c as usize] += 1;
                }
            }
            Some(was) => {
                if was && !new_unit {
                    self.col_units[c as usize] -= 1;
                } else if !was && new_unit {
                    self.col_units[c as usize] += 1;
                }
            }
        }
    }

    /// Eliminates with unit pivots until none remain; returns the pivot count.
    fn run(&mut self) -> Result<usize> {
        let mut pivots = 0usize;
        loop {
            // column with a unit entry and minimal fill potential
            let mut best: Option<(usize, u32)> = None;
            for c in 0..self.col_rows.len() {
                if !self.col_alive[c] || self.col_units[c] == 0 {
                    continue;
                }
                let key = (self.col_rows[c].len(), c as u32);
                if best.map_or(true, |b| key < b) {
                    best = Some(key);
                }
            }
            let Some((_, c)) = best else { break };
            // unit row in that column with the fewest entries
            let r = self.col_rows[c as usize]
                .iter()
                .filter(|&&r| self.row_entries[r as usize][&c].is_unit())
                .map(|&r| (self.row_entries[r as usize].len(), r))
                .min()
                .map(|(_, r)| r)
                .expect("column reported a unit");
            self.pivot(r, c)?;
            pivots += 1;
        }
        Ok(pivots)
    }

    fn pivot(&mut self, r: u32, c: u32) -> Result<()> {
        let pval = self.row_entries[r as usize]
            .get(&c)
            .expect("pivot entry present")
            .clone();
        let pinv = pval.unit_inverse();

        // retire the pivot row from all column indexes
        let prow: Vec<(u32, S)> = {
            let row = std::mem::take(&mut self.row_entries[r as usize]);
            row.into_iter().collect()
        };
        for (cc, v) in &prow {
            self.col_rows[*cc as usize].remove(&r);
            if v.is_unit() {
                self.col_units[*cc as usize] -= 1;
            }
        }

        let touching: Vec<u32> = self.col_rows[c as usize].iter().copied().collect();
        for r2 in touching {
            let a = self.row_entries[r2 as usize][&c].clone();
            let factor = S::try_mul(&a, &pinv).ok_or(Error::Overflow)?;
            for (cc, pv) in &prow {
                let old = self.row_entries[r2 as usize]
                    .get(cc)
                    .cloned()
                    .unwrap_or_else(S::zero_value);
                let new = S::try_mul_sub(&old, &factor, pv).ok_or(Error::Overflow)?;
                self.write(r2, *cc, new);
            }
        }
        debug_assert!(self.col_rows[c as usize].is_empty());
        self.col_alive[c as usize] = false;
        Ok(())
    }

    /// Remaining nonzero entries as a dense arbitrary-precision block.
    fn remainder(&self) -> Vec<Vec<BigInt>> {
        let mut live_rows: Vec<u32> = self
            .row_entries
            .iter()
            .enumerate()
            .filter(|(_, row)| !row.is_empty())
            .map(|(r, _)| r as u32)
            .collect();
        live_rows.sort_unstable();
        let mut live_cols: Vec<u32> = self
            .col_rows
            .iter()
            .enumerate()
            .filter(|(_, rows)| !rows.is_empty())
            .map(|(c, _)| c as u32)
            .collect();
        live_cols.sort_unstable();
        let col_of: HashMap<u32, usize> = live_cols
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i))
            .collect();
        let mut dense = vec![vec![BigInt::zero(); live_cols.len()]; live_rows.len()];
        for (i, &r) in live_rows.iter().enumerate() {
            for (c, v) in &self.row_entries[r as usize] {
                dense[i][col_of[c]] = v.to_bigint();
            }
        }
        dense
    }
}

// ---------------------------------------------------------------------------
// Dense Smith normal form (phase 2)
// ---------------------------------------------------------------------------

fn dense_min_entry(a: &[Vec<BigInt>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(k) {
        for (j, v) in row.iter().enumerate().skip(k) {
            if v.is_zero() {
                continue;
            }
            let mag = v.abs();
            if best.as_ref().map_or(true, |(m, _, _)| mag < *m) {
                best = Some((mag, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

fn swap_cols(a: &mut [Vec<BigInt>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    }
}

/// Invariant factors of a dense integer matrix, in divisibility order.
fn dense_snf(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut factors = Vec::new();
    let mut k = 0;
    while k < rows.min(cols) {
        let Some((pi, pj)) = dense_min_entry(&a, k) else {
            break;
        };
        a.swap(k, pi);
        swap_cols(&mut a, k, pj);
        'reduce: loop {
            // clear the pivot column
            for i in (k + 1)..rows {
                if a[i][k].is_zero() {
                    continue;
                }
                let q = &a[i][k] / &a[k][k];
                if !q.is_zero() {
                    for j in k..cols {
                        let sub = &q * &a[k][j];
                        a[i][j] -= sub;
                    }
                }
                if !a[i][k].is_zero() {
                    // remainder is strictly smaller; promote it
                    a.swap(k, i);
                    continue 'reduce;
                }
            }
            // clear the pivot row; other rows have a zero pivot column now,
            // so these column operations touch only row k
            for j in (k + 1)..cols {
                if a[k][j].is_zero() {
                    continue;
                }
                let q = &a[k][j] / &a[k][k];
                if !q.is_zero() {
                    let sub = &q * &a[k][k];
                    a[k][j] -= sub;
                }
                if !a[k][j].is_zero() {
                    swap_cols(&mut a, k, j);
                    continue 'reduce;
                }
            }
            // divisibility: the pivot must divide every remaining entry
            for i in (k + 1)..rows {
                for j in (k + 1)..cols {
                    if (&a[i][j] % &a[k][k]).is_zero() {
                        continue;
                    }
                    let extra: Vec<BigInt> = a[i].clone();
                    for (j2, v) in extra.into_iter().enumerate() {
                        a[k][j2] += v;
                    }
                    continue 'reduce;
                }
            }
            break;
        }
        factors.push(a[k][k].abs());
        k += 1;
    }
    debug_assert!(factors
        .windows(2)
        .all(|w| (&w[1] % &w[0]).is_zero()));
    factors
}

// ---------------------------------------------------------------------------
// Public operations
// ---------------------------------------------------------------------------

fn smith_with<S: ElimScalar>(m: &IntegerMatrix) -> Result<Vec<BigInt>> {
    let mut elim = SparseElim::<S>::build(m).ok_or(Error::Overflow)?;
    let unit_pivots = elim.run()?;
    let dense = elim.remainder();
    let mut factors = vec![BigInt::one(); unit_pivots];
    factors.extend(dense_snf(dense));
    Ok(factors)
}

/// Nonzero invariant factors d_1 | d_2 | ... of an integer matrix.
pub fn smith_invariant_factors(m: &IntegerMatrix) -> Vec<BigInt> {
    match smith_with::<i128>(m) {
        Ok(f) => f,
        Err(Error::Overflow) => {
            smith_with::<BigInt>(m).expect("arbitrary-precision elimination cannot overflow")
        }
        Err(e) => unreachable!("unexpected elimination error: {e}"),
    }
}

/// Rank over the prime field of order 2^61 - 1.
pub fn rank_mod_p(m: &IntegerMatrix) -> usize {
    let mut elim = SparseElim::<ModP>::build(m).expect("mod-p scalars always representable");
    elim.run().expect("mod-p elimination cannot overflow")
}

/// Integer rank, from the invariant factor count.
pub fn rank(m: &IntegerMatrix) -> usize {
    smith_invariant_factors(m).len()
}

/// Boundary matrices of a complex under the reduced convention:
/// `boundary(0)` is the 1 x f_0 augmentation row.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    boundaries: Vec<IntegerMatrix>,
}

impl ChainComplex {
    pub fn boundaries(&self) -> &[IntegerMatrix] {
        &self.boundaries
    }

    /// The map from k-chains to (k-1)-chains.
    pub fn boundary(&self, k: usize) -> &IntegerMatrix {
        &self.boundaries[k]
    }

    pub fn top_dim(&self) -> usize {
        self.boundaries.len() - 1
    }
}

/// Builds the chain complex of a simplicial complex and verifies that every
/// composite boundary vanishes.
pub fn chain_complex(c: &SimplicialComplex) -> ChainComplex {
    let dim = c.dim();
    let mut boundaries = Vec::with_capacity(dim + 1);

    let f0 = c.dim_range(0).len();
    let aug = IntegerMatrix::new(
        1,
        f0,
        (0..f0 as u32).map(|j| (0, j, BigInt::one())).collect(),
    );
    boundaries.push(aug);

    for k in 1..=dim {
        let lower = c.dim_range(k - 1);
        let upper = c.dim_range(k);
        let mut entries = Vec::new();
        for (local, id) in upper.clone().enumerate() {
            let face = c.face(id);
            for (drop_pos, sub) in face.boundary_facets().enumerate() {
                let row = c.face_id(&sub).expect("closed") - lower.start;
                let sign = if drop_pos % 2 == 0 { 1 } else { -1 };
                entries.push((row, local as u32, BigInt::from(sign)));
            }
        }
        boundaries.push(IntegerMatrix::new(lower.len(), upper.len(), entries));
    }

    for k in 1..boundaries.len() {
        let prod = boundaries[k - 1].matmul(&boundaries[k]);
        assert!(
            prod.is_zero_matrix(),
            "composite boundary {} . {} is nonzero",
            k - 1,
            k
        );
    }

    ChainComplex { boundaries }
}

/// Reduced integer homology: Betti numbers plus invariant-factor torsion
/// per dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroups {
    betti: Vec<u64>,
    torsion: Vec<Vec<BigInt>>,
}

impl HomologyGroups {
    pub fn dim(&self) -> usize {
        self.betti.len() - 1
    }

    pub fn betti(&self, k: usize) -> u64 {
        self.betti.get(k).copied().unwrap_or(0)
    }

    pub fn betti_numbers(&self) -> &[u64] {
        &self.betti
    }

    pub fn torsion(&self, k: usize) -> &[BigInt] {
        self.torsion.get(k).map_or(&[], |t| t.as_slice())
    }

    pub fn torsion_lists(&self) -> &[Vec<BigInt>] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.betti.iter().all(|&b| b == 0) && self.torsion.iter().all(|t| t.is_empty())
    }

    /// The group in dimension k rendered as `0`, `Z^b`, or `Z^b (+) Z/d ...`.
    pub fn group_string(&self, k: usize) -> String {
        let b = self.betti(k);
        let tors = self.torsion(k);
        let mut parts = Vec::new();
        match b {
            0 => {}
            1 => parts.push("Z".to_string()),
            _ => parts.push(format!("Z^{b}")),
        }
        for t in tors {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" (+) ")
        }
    }

    /// Alternating sum of Betti numbers (reduced Euler characteristic when
    /// all groups are finitely generated and torsion is ignored).
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

impl fmt::Display for HomologyGroups {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 0..=self.dim() {
            writeln!(f, "H~_{k} = {}", self.group_string(k))?;
        }
        Ok(())
    }
}

/// Reduced homology of a complex; see [`reduced_homology_threaded`].
pub fn reduced_homology(c: &SimplicialComplex) -> Result<HomologyGroups> {
    reduced_homology_threaded(c, 1)
}

/// Reduced homology with the Smith computations for different boundary
/// matrices distributed over `threads` workers. The result is identical for
/// every worker count.
pub fn reduced_homology_threaded(c: &SimplicialComplex, threads: usize) -> Result<HomologyGroups> {
    let cc = chain_complex(c);
    let n = cc.boundaries.len();

    let mut factors: Vec<Vec<BigInt>> = vec![Vec::new(); n];
    if threads <= 1 {
        for (k, m) in cc.boundaries.iter().enumerate() {
            factors[k] = smith_invariant_factors(m);
        }
    } else {
        let results: Vec<(usize, Vec<BigInt>)> = std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for chunk in cc
                .boundaries
                .iter()
                .enumerate()
                .collect::<Vec<_>>()
                .chunks((n + threads - 1) / threads)
            {
                let chunk: Vec<(usize, &IntegerMatrix)> = chunk.to_vec();
                handles.push(scope.spawn(move || {
                    chunk
                        .into_iter()
                        .map(|(k, m)| (k, smith_invariant_factors(m)))
                        .collect::<Vec<_>>()
                }));
            }
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("homology worker panicked"))
                .collect()
        });
        for (k, f) in results {
            factors[k] = f;
        }
    }

    // prime-field cross-check on every boundary matrix
    for (k, m) in cc.boundaries.iter().enumerate() {
        let modp = rank_mod_p(m);
        if modp != factors[k].len() {
            return Err(Error::RankMismatch {
                dim: k,
                snf: factors[k].len(),
                modp,
            });
        }
    }

    let fvec = c.f_vector();
    let dim = c.dim();
    let mut betti = vec![0u64; dim + 1];
    let mut torsion = vec![Vec::new(); dim + 1];
    for k in 0..=dim {
        let f_k = fvec.counts()[k];
        let rank_k = factors[k].len() as u64;
        let rank_up = if k + 1 <= dim {
            factors[k + 1].len() as u64
        } else {
            0
        };
        betti[k] = f_k - rank_k - rank_up;
        if k + 1 <= dim {
            torsion[k] = factors[k + 1]
                .iter()
                .filter(|d| !d.is_one())
                .cloned()
                .collect();
        }
    }
    Ok(HomologyGroups { betti, torsion })
}

/// Order of the (finite) group in dimension k: the product of its torsion
/// coefficients. Errors when the group has positive rank.
pub fn torsion_order(h: &HomologyGroups, k: usize) -> Result<BigInt> {
    if h.betti(k) != 0 {
        return Err(Error::InfiniteGroup(k));
    }
    Ok(h.torsion(k).iter().product())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn facets(list: &[&[u32]]) -> SimplicialComplex {
        let v: Vec<Vec<u32>> = list.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::from_facets(&v).unwrap()
    }

    #[test]
    fn smith_identity() {
        let m = IntegerMatrix::from_dense(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(smith_invariant_factors(&m), vec![BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn smith_diagonal_with_zero() {
        let m = IntegerMatrix::from_dense(&[vec![2, 0], vec![0, 0]]);
        assert_eq!(smith_invariant_factors(&m), vec![BigInt::from(2)]);
    }

    #[test]
    fn smith_triangle_boundary() {
        let c = SimplicialComplex::cycle_graph(3).unwrap();
        let cc = chain_complex(&c);
        let factors = smith_invariant_factors(cc.boundary(1));
        assert_eq!(factors, vec![BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn smith_known_divisibility_chain() {
        let m = IntegerMatrix::from_dense(&[
            vec![2, 4, 4],
            vec![-6, 6, 12],
            vec![10, 4, 16],
        ]);
        // classical example with invariant factors 2, 2, 156
        assert_eq!(
            smith_invariant_factors(&m),
            vec![BigInt::from(2), BigInt::from(2), BigInt::from(156)]
        );
    }

    #[test]
    fn rank_paths_agree() {
        let m = IntegerMatrix::from_dense(&[vec![3, 1, 2], vec![1, 1, 0], vec![4, 2, 2]]);
        assert_eq!(rank(&m), rank_mod_p(&m));
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn boundary_of_edge() {
        let c = facets(&[&[0, 1]]);
        let cc = chain_complex(&c);
        let d1 = cc.boundary(1);
        assert_eq!((d1.rows(), d1.cols()), (2, 1));
        let col: Vec<BigInt> = vec![d1.get(0, 0), d1.get(1, 0)];
        assert_eq!(col[0].clone() + col[1].clone(), BigInt::zero());
        assert_eq!(col[0].abs(), BigInt::one());
    }

    #[test]
    fn triangle_boundary_column_sums() {
        let c = SimplicialComplex::cycle_graph(3).unwrap();
        let cc = chain_complex(&c);
        let d1 = cc.boundary(1);
        for j in 0..3u32 {
            let sum: BigInt = (0..3u32).map(|i| d1.get(i, j)).sum();
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn circle_homology() {
        let c = SimplicialComplex::cycle_graph(3).unwrap();
        let h = reduced_homology(&c).unwrap();
        assert_eq!(h.betti_numbers(), &[0, 1]);
        assert!(h.torsion(1).is_empty());
    }

    #[test]
    fn sphere_homology() {
        // boundary of the tetrahedron
        let c = facets(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        let h = reduced_homology(&c).unwrap();
        assert_eq!(h.betti_numbers(), &[0, 0, 1]);
        assert!(h.is_trivial() == false);
        assert_eq!(h.group_string(2), "Z");
    }

    #[test]
    fn projective_plane_torsion() {
        // 6-vertex triangulation of the real projective plane
        let c = facets(&[
            &[0, 1, 2],
            &[0, 1, 3],
            &[0, 2, 4],
            &[0, 3, 5],
            &[0, 4, 5],
            &[1, 2, 5],
            &[1, 3, 4],
            &[1, 4, 5],
            &[2, 3, 4],
            &[2, 3, 5],
        ]);
        assert_eq!(c.f_vector().counts(), &[6, 15, 10]);
        let h = reduced_homology(&c).unwrap();
        assert_eq!(h.betti_numbers(), &[0, 0, 0]);
        assert_eq!(h.torsion(1), &[BigInt::from(2)]);
        assert_eq!(torsion_order(&h, 1).unwrap(), BigInt::from(2));
    }

    #[test]
    fn torsion_order_errors_on_infinite_group() {
        let c = SimplicialComplex::cycle_graph(4).unwrap();
        let h = reduced_homology(&c).unwrap();
        assert!(matches!(torsion_order(&h, 1), Err(Error::InfiniteGroup(1))));
        assert_eq!(torsion_order(&h, 0).unwrap(), BigInt::one());
    }

    #[test]
    fn cone_homology_trivial() {
        // a cone over C_4: join every facet to a new apex
        let c = facets(&[&[0, 1, 4], &[1, 2, 4], &[2, 3, 4], &[0, 3, 4]]);
        let h = reduced_homology(&c).unwrap();
        assert!(h.is_trivial());
        // a simplex is a cone as well
        let h = reduced_homology(&SimplicialComplex::simplex(4)).unwrap();
        assert!(h.is_trivial());
    }

    #[test]
    fn permuted_matrix_same_factors() {
        let c = facets(&[
            &[0, 1, 2],
            &[0, 1, 3],
            &[0, 2, 4],
            &[0, 3, 5],
            &[0, 4, 5],
            &[1, 2, 5],
            &[1, 3, 4],
            &[1, 4, 5],
            &[2, 3, 4],
            &[2, 3, 5],
        ]);
        let cc = chain_complex(&c);
        let d2 = cc.boundary(2);
        let rows = d2.rows();
        let cols = d2.cols();
        // a fixed, nontrivial relabeling
        let row_perm: Vec<u32> = (0..rows as u32).map(|r| (r * 7 + 3) % rows as u32).collect();
        let col_perm: Vec<u32> = (0..cols as u32).map(|c| (c * 3 + 1) % cols as u32).collect();
        let permuted = d2.permuted(&row_perm, &col_perm);
        assert_eq!(
            smith_invariant_factors(d2),
            smith_invariant_factors(&permuted)
        );
    }

    #[test]
    fn betti_euler_consistency() {
        for c in [
            facets(&[&[0, 1, 2], &[2, 3], &[3, 4], &[4, 0]]),
            SimplicialComplex::cycle_graph(6).unwrap(),
            SimplicialComplex::simplex(3),
        ] {
            let h = reduced_homology(&c).unwrap();
            assert_eq!(
                h.reduced_euler_characteristic(),
                c.reduced_euler_characteristic()
            );
        }
    }

    #[test]
    fn threaded_homology_matches() {
        let c = facets(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        let h1 = reduced_homology_threaded(&c, 1).unwrap();
        let h3 = reduced_homology_threaded(&c, 3).unwrap();
        assert_eq!(h1, h3);
    }
}
