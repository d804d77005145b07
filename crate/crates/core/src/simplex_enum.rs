//! The cube model of a simplex's face poset, and everything counted on it.
//!
//! The face poset of the (d-1)-simplex, with the empty set added, is the
//! Boolean lattice on d points; its Hasse diagram is the graph of the d-cube,
//! directed toward lower coordinate sum. Perfect Morse matchings of the
//! simplex correspond to perfect matchings of the cube graph whose reversal
//! is acyclic, which is how the counts here are produced. On top of that sit
//! the Kalai (k,n)-tree extraction, the weighted tree identity, and the four
//! counting bounds with the recursion for the lower one.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use itertools::Itertools;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::hasse::HasseDiagram;
use crate::homology;
use crate::morse::{self, MorseMatching};

/// Largest cube dimension enumerated by default; the 6-cube count is a
/// literature value and out of budget.
pub const DEFAULT_MAX_CUBE_DIM: u32 = 5;

/// Default cap on the number of subsets scanned by the tree-sum identity.
pub const DEFAULT_SUBSET_BUDGET: u128 = 10_000_000;

// ---------------------------------------------------------------------------
// Cube digraph
// ---------------------------------------------------------------------------

/// The directed d-cube: vertices are the 0/1 vectors of length d (as masks),
/// arcs point toward lower coordinate sum.
#[derive(Clone, Debug)]
pub struct CubeDigraph {
    dim: u32,
    arcs: Vec<(u32, u32)>,
}

impl CubeDigraph {
    pub fn new(dim: u32) -> Self {
        assert!(dim >= 1 && dim <= 30, "cube dimension out of range");
        let mut arcs = Vec::with_capacity((dim as usize) << (dim - 1));
        for u in 0..1u32 << dim {
            for bit in 0..dim {
                if u & (1 << bit) != 0 {
                    arcs.push((u, u & !(1 << bit)));
                }
            }
        }
        Self { dim, arcs }
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        1 << self.dim
    }

    /// Arcs sorted by (tail, flipped bit).
    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }
}

/// The characteristic-vector isomorphism between cube vertices and simplex
/// faces: the mask with bits S corresponds to the face with vertex set S;
/// the zero mask is the empty set, which the simplicial diagram lacks.
#[derive(Clone, Debug)]
pub struct CubeIso {
    /// face id of each nonzero mask
    pub face_of_mask: Vec<Option<u32>>,
    /// cover-edge id of each arc; `None` exactly for arcs into the zero mask
    pub cover_of_arc: Vec<Option<u32>>,
}

/// Builds the isomorphism between the d-cube digraph and the Hasse diagram
/// of the (d-1)-simplex extended over all subsets.
pub fn cube_simplex_iso(cube: &CubeDigraph, hasse: &HasseDiagram) -> CubeIso {
    let face_of_mask: Vec<Option<u32>> = (0..cube.vertex_count() as u32)
        .map(|mask| {
            if mask == 0 {
                return None;
            }
            let verts: Vec<u32> = (0..cube.dim()).filter(|b| mask >> b & 1 == 1).collect();
            let simplex = Simplex::new(verts).expect("mask bits are distinct");
            let id = hasse
                .faces()
                .iter()
                .position(|s| *s == simplex)
                .expect("every nonempty subset is a face of the simplex");
            Some(id as u32)
        })
        .collect();
    let cover_of_arc = cube
        .arcs()
        .iter()
        .map(|&(tail, head)| {
            let upper = face_of_mask[tail as usize].expect("tail mask is nonzero");
            let lower = face_of_mask[head as usize]?;
            Some(
                hasse
                    .edge_id(lower, upper)
                    .expect("subset covers map to cover edges"),
            )
        })
        .collect();
    CubeIso {
        face_of_mask,
        cover_of_arc,
    }
}

// ---------------------------------------------------------------------------
// Perfect matchings of the cube graph
// ---------------------------------------------------------------------------

const UNMATCHED: u32 = u32::MAX;

/// Visits every perfect matching of the undirected d-cube graph; `partner`
/// is indexed by vertex mask. Matching the lowest unmatched vertex first
/// makes the order canonical.
fn visit_cube_matchings(d: u32, visit: &mut dyn FnMut(&[u32])) {
    let n = 1usize << d;
    let mut partner = vec![UNMATCHED; n];
    fn rec(d: u32, partner: &mut Vec<u32>, from: usize, visit: &mut dyn FnMut(&[u32])) {
        let n = partner.len();
        let mut v = from;
        while v < n && partner[v] != UNMATCHED {
            v += 1;
        }
        if v == n {
            visit(partner);
            return;
        }
        for bit in 0..d {
            let w = (v as u32 ^ (1 << bit)) as usize;
            if partner[w] == UNMATCHED {
                partner[v] = w as u32;
                partner[w] = v as u32;
                rec(d, partner, v + 1, visit);
                partner[v] = UNMATCHED;
                partner[w] = UNMATCHED;
            }
        }
    }
    rec(d, &mut partner, 0, visit);
}

/// Is the cube digraph acyclic after reversing the matched arcs?
/// Kahn's algorithm with reusable buffers.
struct CubeAcyclicity {
    d: u32,
    indeg: Vec<u32>,
    queue: Vec<u32>,
}

impl CubeAcyclicity {
    fn new(d: u32) -> Self {
        Self {
            d,
            indeg: vec![0; 1 << d],
            queue: Vec::with_capacity(1 << d),
        }
    }

    fn acyclic(&mut self, partner: &[u32]) -> bool {
        let n = partner.len();
        let d = self.d;
        self.indeg[..n].fill(0);
        for u in 0..n as u32 {
            for bit in 0..d {
                if u & (1 << bit) != 0 {
                    let v = u & !(1 << bit);
                    // arc u -> v, reversed when matched
                    if partner[u as usize] == v {
                        self.indeg[u as usize] += 1;
                    } else {
                        self.indeg[v as usize] += 1;
                    }
                }
            }
        }
        self.queue.clear();
        for u in 0..n as u32 {
            if self.indeg[u as usize] == 0 {
                self.queue.push(u);
            }
        }
        let mut seen = 0usize;
        while let Some(u) = self.queue.pop() {
            seen += 1;
            for bit in 0..d {
                // out-arcs of u: downward unless matched, upward when matched
                let v = u ^ (1 << bit);
                let downward = u & (1 << bit) != 0;
                let matched = partner[u as usize] == v;
                let out_arc = if downward { !matched } else { matched };
                if out_arc {
                    self.indeg[v as usize] -= 1;
                    if self.indeg[v as usize] == 0 {
                        self.queue.push(v);
                    }
                }
            }
        }
        seen == n
    }
}

fn check_cube_budget(d: u32, max_dim: u32) -> Result<()> {
    if d > max_dim {
        return Err(Error::CubeBudget { dim: d, max: max_dim });
    }
    Ok(())
}

/// Number of perfect matchings of the undirected d-cube graph.
pub fn count_perfect_matchings_cube(d: u32, max_dim: u32) -> Result<BigUint> {
    check_cube_budget(d, max_dim)?;
    let mut count = 0u64;
    visit_cube_matchings(d, &mut |_| count += 1);
    Ok(BigUint::from(count))
}

/// Perfect-matching counts of the directed cube split by acyclicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeMatchingCounts {
    pub total: BigUint,
    pub acyclic: BigUint,
    pub rejected_cyclic: BigUint,
}

/// Counts perfect matchings of the d-cube whose reversal leaves the digraph
/// acyclic; through the characteristic-vector isomorphism this is the number
/// of perfect Morse matchings of the (d-1)-simplex.
pub fn count_perfect_acyclic_matchings_cube(d: u32, max_dim: u32) -> Result<CubeMatchingCounts> {
    check_cube_budget(d, max_dim)?;
    let mut total = 0u64;
    let mut acyclic = 0u64;
    let mut checker = CubeAcyclicity::new(d);
    visit_cube_matchings(d, &mut |partner| {
        total += 1;
        if checker.acyclic(partner) {
            acyclic += 1;
        }
    });
    Ok(CubeMatchingCounts {
        total: BigUint::from(total),
        acyclic: BigUint::from(acyclic),
        rejected_cyclic: BigUint::from(total - acyclic),
    })
}

/// Materialized perfect acyclic matchings as partner tables (small d only).
pub fn perfect_acyclic_matchings_cube(d: u32, max_dim: u32) -> Result<Vec<Vec<u32>>> {
    check_cube_budget(d, max_dim)?;
    let mut out = Vec::new();
    let mut checker = CubeAcyclicity::new(d);
    visit_cube_matchings(d, &mut |partner| {
        if checker.acyclic(partner) {
            out.push(partner.to_vec());
        }
    });
    Ok(out)
}

/// Distinct directions used by a matching given as a partner table.
pub fn direction_set(partner: &[u32]) -> u32 {
    let mut dirs = 0u32;
    for (u, &w) in partner.iter().enumerate() {
        if (u as u32) < w && w != UNMATCHED {
            dirs |= u as u32 ^ w;
        }
    }
    dirs
}

/// Counts of perfect acyclic matchings by the number of distinct directions
/// they use (index = direction count, 0..=d).
pub fn direction_profile(d: u32, max_dim: u32) -> Result<Vec<u64>> {
    check_cube_budget(d, max_dim)?;
    let mut counts = vec![0u64; d as usize + 1];
    let mut checker = CubeAcyclicity::new(d);
    visit_cube_matchings(d, &mut |partner| {
        if checker.acyclic(partner) {
            counts[direction_set(partner).count_ones() as usize] += 1;
        }
    });
    Ok(counts)
}

// ---------------------------------------------------------------------------
// Kalai trees
// ---------------------------------------------------------------------------

/// A candidate (k,n)-tree: a set of k-faces of the (n-1)-simplex of
/// cardinality C(n-1, k).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct KTree {
    pub k: usize,
    pub n: u32,
    pub faces: Vec<Simplex>,
}

/// Extracts T_k of a perfect Morse matching of the (n-1)-simplex: the
/// k-faces paired downward. For k = 0 the critical vertex is the face paired
/// with the (implicit) empty set.
pub fn extract_tk(hasse: &HasseDiagram, m: &MorseMatching, k: usize) -> Result<KTree> {
    let critical = morse::critical_faces(hasse, m);
    if critical.len() > 1
        || critical
            .face_ids()
            .iter()
            .any(|&f| hasse.face_dim(f) > 0)
    {
        return Err(Error::NotPerfect(critical.len()));
    }
    let n = hasse.vertex_face_count() as u32;
    let mut faces: Vec<Simplex> = Vec::new();
    if k == 0 {
        faces.extend(
            critical
                .face_ids()
                .iter()
                .map(|&f| hasse.face(f).clone()),
        );
    } else {
        for &e in m.edge_ids() {
            let ce = hasse.cover_edge(e);
            if hasse.face_dim(ce.upper) == k {
                faces.push(hasse.face(ce.upper).clone());
            }
        }
    }
    faces.sort();
    Ok(KTree { k, n, faces })
}

/// Result of the (k,n)-tree test.
#[derive(Clone, Debug)]
pub struct KnTreeCheck {
    pub cardinality_ok: bool,
    /// H_k of the skeleton-plus-faces complex vanishes.
    pub hk_zero: bool,
    /// |H_{k-1}| when that group is finite.
    pub torsion_below: Option<BigInt>,
}

impl KnTreeCheck {
    pub fn is_tree(&self) -> bool {
        self.cardinality_ok && self.hk_zero
    }
}

/// Builds the complex `full (k-1)-skeleton of the (n-1)-simplex, plus T`.
fn tree_complex(faces: &[Simplex], k: usize, n: u32) -> Result<SimplicialComplex> {
    for f in faces {
        if f.dim() != k {
            return Err(Error::WrongFaceDimension {
                expected: k,
                found: f.vertices().to_vec(),
            });
        }
        if f.vertices().last().copied().unwrap_or(0) >= n {
            return Err(Error::WrongFaceDimension {
                expected: k,
                found: f.vertices().to_vec(),
            });
        }
    }
    let mut all: Vec<Vec<u32>> = Vec::new();
    for size in 1..=k {
        for sub in (0..n).combinations(size) {
            all.push(sub);
        }
    }
    all.extend(faces.iter().map(|f| f.vertices().to_vec()));
    SimplicialComplex::from_closed_faces(all)
}

/// Checks the tree property of a k-face set: correct cardinality and
/// vanishing H_k; reports the order of H_{k-1} alongside.
pub fn is_kn_tree(t: &KTree) -> Result<KnTreeCheck> {
    let expected = binomial_u128(t.n as u128 - 1, t.k as u128);
    let cardinality_ok = t.faces.len() as u128 == expected;
    let complex = tree_complex(&t.faces, t.k, t.n)?;
    let h = homology::reduced_homology(&complex)?;
    let hk_zero = h.betti(t.k) == 0 && h.torsion(t.k).is_empty();
    let torsion_below = if t.k == 0 {
        Some(BigInt::one())
    } else if h.betti(t.k - 1) == 0 {
        Some(homology::torsion_order(&h, t.k - 1)?)
    } else {
        None
    };
    Ok(KnTreeCheck {
        cardinality_ok,
        hk_zero,
        torsion_below,
    })
}

/// The weighted tree count of the identity
/// `sum over (k,n)-trees of |H_{k-1}|^2 = n^C(n-2, k)`.
#[derive(Clone, Debug)]
pub struct KalaiSum {
    pub n: u32,
    pub k: usize,
    pub sum: BigInt,
    pub tree_count: u64,
    pub expected: BigInt,
}

impl KalaiSum {
    pub fn matches(&self) -> bool {
        self.sum == self.expected
    }
}

/// Scans every candidate subset of k-faces of the (n-1)-simplex and adds the
/// squared torsion order of each tree found.
pub fn kalai_sum(n: u32, k: usize, subset_budget: u128) -> Result<KalaiSum> {
    let k_faces: Vec<Vec<u32>> = (0..n).combinations(k + 1).collect();
    let choose = binomial_u128(n as u128 - 1, k as u128) as usize;
    let subsets = binomial_u128(k_faces.len() as u128, choose as u128);
    if subsets > subset_budget {
        return Err(Error::SubsetBudget {
            subsets,
            budget: subset_budget,
        });
    }
    let mut sum = BigInt::zero();
    let mut tree_count = 0u64;
    for subset in k_faces.iter().combinations(choose) {
        let faces: Vec<Simplex> = subset
            .into_iter()
            .map(|vs| Simplex::new(vs.clone()).expect("valid face"))
            .collect();
        let t = KTree { k, n, faces };
        let check = is_kn_tree(&t)?;
        if check.is_tree() {
            tree_count += 1;
            let torsion = check
                .torsion_below
                .expect("H_{k-1} of a tree is finite");
            sum += &torsion * &torsion;
        }
    }
    let expected = BigInt::from(n).pow(binomial_u128(n as u128 - 2, k as u128) as u32);
    Ok(KalaiSum {
        n,
        k,
        sum,
        tree_count,
        expected,
    })
}

// ---------------------------------------------------------------------------
// Bounds
// ---------------------------------------------------------------------------

fn binomial_u128(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn factorial(m: u32) -> BigInt {
    (1..=m as u64).map(BigInt::from).product()
}

/// Values r(1)..=r(upto) of the recursion
/// `r(n+1) = (n+1)(n-1)/n * r(n)^2` with r(1)=1, r(2)=2, r(3)=9.
pub fn r_values(upto: u32) -> Vec<BigInt> {
    assert!(upto >= 1);
    let mut r: Vec<BigRational> = vec![
        BigRational::from(BigInt::one()),
        BigRational::from(BigInt::from(2)),
        BigRational::from(BigInt::from(9)),
    ];
    while (r.len() as u32) < upto {
        let n = r.len() as i64; // r.len() = n means r(n) is last
        let prev = &r[n as usize - 1];
        let factor = BigRational::new(BigInt::from((n + 1) * (n - 1)), BigInt::from(n));
        r.push(factor * prev * prev);
    }
    r.truncate(upto as usize);
    r.into_iter()
        .map(|x| {
            assert!(x.is_integer(), "recursion values stay integral");
            x.to_integer()
        })
        .collect()
}

/// The unrolled product `prod_{k=1}^{n-1} k^(2^(n-k-1))`; the empty product
/// at n = 1 is 1.
pub fn product_lower_bound(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 1..n {
        let exp = 1u32 << (n - k - 1);
        acc *= BigInt::from(k).pow(exp);
    }
    acc
}

/// The tree-identity upper bound `(n+1)^(2^(n-1))`.
pub fn kalai_upper_bound(n: u32) -> BigInt {
    BigInt::from(n + 1).pow(1 << (n - 1))
}

/// The cube-matching upper bound `((n+1)!)^(2^n/(n+1))`, kept in exact form:
/// a factorial base with a rational exponent, plus a certified interval for
/// its natural logarithm.
#[derive(Clone, Debug)]
pub struct CgpBound {
    /// the bound is (factorial_of)! raised to `exponent`
    pub factorial_of: u32,
    pub base: BigInt,
    pub exponent: BigRational,
    pub ln_lo: BigRational,
    pub ln_hi: BigRational,
}

impl CgpBound {
    pub fn new(n: u32) -> Self {
        let m = n + 1;
        let base = factorial(m);
        let exponent = BigRational::new(BigInt::from(1u8) << n, BigInt::from(m));
        let (lo, hi) = ln_interval(&BigRational::from(base.clone()), 48);
        CgpBound {
            factorial_of: m,
            base,
            exponent: exponent.clone(),
            ln_lo: &exponent * lo,
            ln_hi: &exponent * hi,
        }
    }

    /// Decimal log10 interval, handy for display.
    pub fn log10_interval(&self) -> (f64, f64) {
        let ln10 = std::f64::consts::LN_10;
        (
            self.ln_lo.to_f64().unwrap_or(f64::NAN) / ln10,
            self.ln_hi.to_f64().unwrap_or(f64::NAN) / ln10,
        )
    }
}

/// Certified interval for ln(x), x > 0, by the atanh series with an exact
/// rational tail bound. `terms` controls the truncation.
pub fn ln_interval(x: &BigRational, terms: usize) -> (BigRational, BigRational) {
    assert!(x.is_positive(), "logarithm needs a positive argument");
    // scale x into [1, 2) by powers of two
    let one = BigRational::one();
    let two = BigRational::from(BigInt::from(2));
    let mut e: i64 = 0;
    let mut r = x.clone();
    while r >= two {
        r /= &two;
        e += 1;
    }
    while r < one {
        r *= &two;
        e -= 1;
    }
    let (r_lo, r_hi) = atanh_ln(&r, terms);
    let (ln2_lo, ln2_hi) = atanh_ln(&two, terms);
    let scale = BigRational::from(BigInt::from(e));
    if e >= 0 {
        (&scale * &ln2_lo + r_lo, &scale * &ln2_hi + r_hi)
    } else {
        (&scale * &ln2_hi + r_lo, &scale * &ln2_lo + r_hi)
    }
}

/// ln(r) for r in [1, 4) via `2 atanh((r-1)/(r+1))`, truncated with an exact
/// tail bound.
fn atanh_ln(r: &BigRational, terms: usize) -> (BigRational, BigRational) {
    let one = BigRational::one();
    let z = (r - &one) / (r + &one);
    let z2 = &z * &z;
    let mut sum = BigRational::zero();
    let mut pow = z.clone();
    for i in 0..terms {
        sum += &pow / BigRational::from(BigInt::from(2 * i as i64 + 1));
        pow *= &z2;
    }
    let sum = &sum * BigRational::from(BigInt::from(2));
    // tail: 2 sum_{i>=terms} z^(2i+1)/(2i+1) <= 2 z^(2 terms + 1) / ((2 terms + 1)(1 - z^2))
    let tail = BigRational::from(BigInt::from(2)) * &pow
        / (BigRational::from(BigInt::from(2 * terms as i64 + 1)) * (&one - &z2));
    (sum.clone(), sum + tail)
}

/// Exact three-way comparison of the two upper bounds. Raising both to the
/// positive power (n+1)/2^(n-1) preserves order and reduces the comparison
/// to `(n+1)^(n+1)` against `((n+1)!)^2`.
pub fn compare_kalai_cgp(n: u32) -> Ordering {
    let m = BigInt::from(n + 1);
    let lhs = m.pow(n + 1);
    let rhs = factorial(n + 1).pow(2);
    lhs.cmp(&rhs)
}

/// All four bounds for one n, with the exact count attached when the cube
/// dimension is within budget.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub n: u32,
    pub lower_product: BigInt,
    pub lower_r: BigInt,
    pub upper_kalai: BigInt,
    pub upper_cgp: CgpBound,
    pub computed_f: Option<BigUint>,
    /// comparison of upper_kalai against upper_cgp
    pub dominance: Ordering,
}

impl BoundReport {
    /// `lower_product < lower_r <= f <= upper_kalai` whenever f is present.
    pub fn bracket_holds(&self) -> bool {
        if self.lower_product >= self.lower_r {
            return false;
        }
        match &self.computed_f {
            None => true,
            Some(f) => {
                let f = BigInt::from(f.clone());
                self.lower_r <= f && f <= self.upper_kalai
            }
        }
    }
}

pub fn bounds_report(n: u32, max_cube_dim: u32) -> Result<BoundReport> {
    assert!(n >= 1);
    let lower_r = r_values(n + 1).pop().expect("r(n+1) exists");
    let computed_f = if n + 1 <= max_cube_dim {
        Some(count_perfect_acyclic_matchings_cube(n + 1, max_cube_dim)?.acyclic)
    } else {
        None
    };
    Ok(BoundReport {
        n,
        lower_product: product_lower_bound(n),
        lower_r,
        upper_kalai: kalai_upper_bound(n),
        upper_cgp: CgpBound::new(n),
        computed_f,
        dominance: compare_kalai_cgp(n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_digraph_counts() {
        let c2 = CubeDigraph::new(2);
        assert_eq!(c2.vertex_count(), 4);
        assert_eq!(c2.arcs().len(), 4);
        for d in 1..=5u32 {
            let c = CubeDigraph::new(d);
            assert_eq!(c.arcs().len(), (d as usize) << (d - 1));
            for &(tail, head) in c.arcs() {
                assert_eq!(tail.count_ones(), head.count_ones() + 1);
            }
        }
    }

    #[test]
    fn cube_iso_with_tetrahedron() {
        let cube = CubeDigraph::new(4);
        let h = HasseDiagram::new(&SimplicialComplex::simplex(3));
        let iso = cube_simplex_iso(&cube, &h);
        let mapped: Vec<u32> = iso.cover_of_arc.iter().flatten().copied().collect();
        assert_eq!(mapped.len(), 28);
        let into_empty = iso.cover_of_arc.iter().filter(|c| c.is_none()).count();
        assert_eq!(into_empty, 4);
        // the arc map is injective onto all cover edges
        let mut sorted = mapped.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), h.edge_count());
    }

    #[test]
    fn square_has_two_perfect_matchings() {
        assert_eq!(
            count_perfect_matchings_cube(2, DEFAULT_MAX_CUBE_DIM).unwrap(),
            BigUint::from(2u32)
        );
        let counts = count_perfect_acyclic_matchings_cube(2, DEFAULT_MAX_CUBE_DIM).unwrap();
        assert_eq!(counts.acyclic, BigUint::from(2u32));
        assert_eq!(counts.rejected_cyclic, BigUint::from(0u32));
    }

    #[test]
    fn three_cube_nine_matchings_all_acyclic() {
        let counts = count_perfect_acyclic_matchings_cube(3, DEFAULT_MAX_CUBE_DIM).unwrap();
        assert_eq!(counts.total, BigUint::from(9u32));
        assert_eq!(counts.acyclic, BigUint::from(9u32));
    }

    #[test]
    fn four_cube_272_and_256() {
        let counts = count_perfect_acyclic_matchings_cube(4, DEFAULT_MAX_CUBE_DIM).unwrap();
        assert_eq!(counts.total, BigUint::from(272u32));
        assert_eq!(counts.acyclic, BigUint::from(256u32));
        assert_eq!(counts.rejected_cyclic, BigUint::from(16u32));
    }

    #[test]
    fn budget_guard() {
        assert!(matches!(
            count_perfect_matchings_cube(6, DEFAULT_MAX_CUBE_DIM),
            Err(Error::CubeBudget { dim: 6, max: 5 })
        ));
    }

    #[test]
    fn tk_extraction_for_triangle() {
        let c = SimplicialComplex::simplex(2);
        let h = HasseDiagram::new(&c);
        for m in morse::enumerate_matchings(&h, morse::MatchMode::Perfect) {
            let t1 = extract_tk(&h, &m, 1).unwrap();
            assert_eq!(t1.faces.len(), 2); // C(2,1) edges: a spanning tree
            let check = is_kn_tree(&t1).unwrap();
            assert!(check.is_tree());
            assert_eq!(check.torsion_below, Some(BigInt::one()));
            let t0 = extract_tk(&h, &m, 0).unwrap();
            assert_eq!(t0.faces.len(), 1);
        }
    }

    #[test]
    fn non_perfect_matching_rejected() {
        let c = SimplicialComplex::simplex(2);
        let h = HasseDiagram::new(&c);
        let empty = MorseMatching::new(&h, vec![]).unwrap();
        assert!(matches!(
            extract_tk(&h, &empty, 1),
            Err(Error::NotPerfect(_))
        ));
    }

    #[test]
    fn kalai_small_cases() {
        let s = kalai_sum(3, 1, DEFAULT_SUBSET_BUDGET).unwrap();
        assert_eq!(s.sum, BigInt::from(3));
        assert!(s.matches());
        assert_eq!(s.tree_count, 3);

        let s = kalai_sum(4, 1, DEFAULT_SUBSET_BUDGET).unwrap();
        assert_eq!(s.sum, BigInt::from(16));
        assert!(s.matches());
        assert_eq!(s.tree_count, 16); // the spanning trees of K_4

        let s = kalai_sum(4, 2, DEFAULT_SUBSET_BUDGET).unwrap();
        assert_eq!(s.sum, BigInt::from(4));
        assert!(s.matches());
    }

    #[test]
    fn kalai_budget_guard() {
        assert!(matches!(
            kalai_sum(5, 2, 10),
            Err(Error::SubsetBudget { .. })
        ));
    }

    #[test]
    fn r_recursion_values() {
        let r = r_values(5);
        assert_eq!(
            r,
            vec![
                BigInt::from(1),
                BigInt::from(2),
                BigInt::from(9),
                BigInt::from(216),
                BigInt::from(174960)
            ]
        );
    }

    #[test]
    fn product_bound_values() {
        assert_eq!(product_lower_bound(2), BigInt::from(1));
        assert_eq!(product_lower_bound(4), BigInt::from(12)); // 1^4 * 2^2 * 3^1
        for n in 2..=8u32 {
            assert!(
                product_lower_bound(n) < r_values(n + 1).pop().unwrap(),
                "product bound must sit below the recursion at n = {n}"
            );
        }
    }

    #[test]
    fn kalai_upper_small() {
        assert_eq!(kalai_upper_bound(2), BigInt::from(9));
        assert_eq!(kalai_upper_bound(3), BigInt::from(256));
    }

    #[test]
    fn ln_interval_sanity() {
        let (lo, hi) = ln_interval(&BigRational::from(BigInt::from(2)), 32);
        assert!(lo <= hi);
        let lo = lo.to_f64().unwrap();
        let hi = hi.to_f64().unwrap();
        assert!(lo <= std::f64::consts::LN_2 && std::f64::consts::LN_2 <= hi);
        assert!(hi - lo < 1e-12);
    }

    #[test]
    fn dominance_comparison() {
        // equality at n = 1: both bounds are 2
        assert_eq!(compare_kalai_cgp(1), Ordering::Equal);
        for n in 2..=20u32 {
            assert_eq!(compare_kalai_cgp(n), Ordering::Less, "n = {n}");
        }
        // cross-check against the certified logarithm intervals where they
        // separate
        for n in 2..=10u32 {
            let cgp = CgpBound::new(n);
            let kal = BigRational::from(BigInt::from(1u8) << (n - 1))
                * ln_interval(&BigRational::from(BigInt::from(n + 1)), 48).1;
            assert!(kal < cgp.ln_lo, "log separation at n = {n}");
        }
    }

    #[test]
    fn bound_report_small() {
        let report = bounds_report(3, DEFAULT_MAX_CUBE_DIM).unwrap();
        assert_eq!(report.lower_r, BigInt::from(216));
        assert_eq!(report.upper_kalai, BigInt::from(256));
        assert_eq!(report.computed_f, Some(BigUint::from(256u32)));
        assert!(report.bracket_holds());

        let report = bounds_report(2, DEFAULT_MAX_CUBE_DIM).unwrap();
        assert_eq!(report.upper_kalai, BigInt::from(9));
        assert_eq!(report.computed_f, Some(BigUint::from(9u32)));
        assert!(report.bracket_holds());
    }

    #[test]
    fn direction_profile_small() {
        // the 3-cube: all 9 perfect matchings are acyclic; 3 use one
        // direction, 6 use two, none use all three
        let profile = direction_profile(3, DEFAULT_MAX_CUBE_DIM).unwrap();
        assert_eq!(profile, vec![0, 3, 6, 0]);
    }
}
