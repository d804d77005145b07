//! Morse matchings of graphs: the rooted-forest correspondence.
//!
//! For a graph, the Hasse diagram is the once-subdivided graph and a Morse
//! matching pairs nodes with incident edges. Orienting each matched edge
//! away from its node yields an oriented forest in which every node has
//! out-degree at most one and every component has a unique root; the
//! correspondence is a bijection. This module enumerates rooted forests
//! directly, and verifies the identity between the characteristic polynomial
//! of the graph Laplacian and the alternating sum over the f-vector of the
//! Morse complex.
//!
//! The characteristic polynomial is computed by two independent exact
//! routes — evaluation at integer points with fraction-free (Bareiss)
//! determinants followed by exact interpolation, and the trace recursion of
//! Faddeev and LeVerrier — which the test suite compares on the whole
//! verification corpus.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::complex::{FVector, SimplicialComplex};
use crate::error::{Error, Result};
use crate::hasse::HasseDiagram;
use crate::homology::IntegerMatrix;
use crate::morse::MorseMatching;

/// A finite simple graph: `n` nodes and sorted undirected edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: u32,
    edges: Vec<(u32, u32)>,
}

impl Graph {
    pub fn new(n: u32, edges: &[(u32, u32)]) -> Result<Self> {
        let mut sorted: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at node {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) exceeds node count {n}"
                )));
            }
            sorted.push((a.min(b), a.max(b)));
        }
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph("repeated edge".into()));
        }
        Ok(Self { n, edges: sorted })
    }

    pub fn node_count(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut dsu = Dsu::new(self.n as usize);
        for &(a, b) in &self.edges {
            dsu.union(a as usize, b as usize);
        }
        let root = dsu.find(0);
        (1..self.n as usize).all(|v| dsu.find(v) == root)
    }

    /// The graph as a 1-dimensional simplicial complex; isolated nodes
    /// become vertex facets.
    pub fn as_complex(&self) -> SimplicialComplex {
        let mut facets: Vec<Vec<u32>> = self.edges.iter().map(|&(a, b)| vec![a, b]).collect();
        for v in 0..self.n {
            if self.degree(v) == 0 {
                facets.push(vec![v]);
            }
        }
        SimplicialComplex::from_facets(&facets).expect("graph facets are valid")
    }

    pub fn complete(n: u32) -> Self {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                edges.push((i, j));
            }
        }
        Self::new(n, &edges).expect("complete graph is simple")
    }

    pub fn cycle(n: u32) -> Self {
        let edges: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges).expect("cycle is simple for n >= 3")
    }

    pub fn path(edges: u32) -> Self {
        let list: Vec<(u32, u32)> = (0..edges).map(|i| (i, i + 1)).collect();
        Self::new(edges + 1, &list).expect("path is simple")
    }

    /// The d-dimensional hypercube graph on 2^d nodes.
    pub fn cube(d: u32) -> Self {
        let n = 1u32 << d;
        let mut edges = Vec::new();
        for u in 0..n {
            for bit in 0..d {
                if u & (1 << bit) == 0 {
                    edges.push((u, u | (1 << bit)));
                }
            }
        }
        Self::new(n, &edges).expect("cube is simple")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5)); // outer cycle
            edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
            edges.push((i, i + 5)); // spokes
        }
        Self::new(10, &edges).expect("Petersen graph is simple")
    }
}

/// The fixed verification corpus used by the graph identity checks.
pub fn verification_corpus() -> Vec<(&'static str, Graph)> {
    vec![
        ("K3", Graph::complete(3)),
        ("K4", Graph::complete(4)),
        ("K5", Graph::complete(5)),
        ("C4", Graph::cycle(4)),
        ("C5", Graph::cycle(5)),
        ("C6", Graph::cycle(6)),
        ("C7", Graph::cycle(7)),
        ("C8", Graph::cycle(8)),
        ("P2", Graph::path(2)),
        ("P3", Graph::path(3)),
        ("P4", Graph::path(4)),
        ("Q3", Graph::cube(3)),
        ("Petersen", Graph::petersen()),
    ]
}

/// An oriented forest: every node has out-degree at most one, the underlying
/// edge set is acyclic, and each component's unique sink is its root.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct RootedForest {
    arcs: Vec<(u32, u32)>,
}

impl RootedForest {
    /// Validates the forest invariants against a graph, naming the violated
    /// one on failure.
    pub fn new(graph: &Graph, mut arcs: Vec<(u32, u32)>) -> Result<Self> {
        arcs.sort_unstable();
        let mut out_deg = vec![0u32; graph.node_count() as usize];
        let mut dsu = Dsu::new(graph.node_count() as usize);
        let mut seen_edges = std::collections::HashSet::new();
        for &(tail, head) in &arcs {
            if tail >= graph.node_count() || head >= graph.node_count() {
                return Err(Error::InvalidForest(format!(
                    "arc ({tail}, {head}) exceeds node count"
                )));
            }
            let und = (tail.min(head), tail.max(head));
            if graph.edges().binary_search(&und).is_err() {
                return Err(Error::InvalidForest(format!(
                    "arc ({tail}, {head}) is not an edge of the graph"
                )));
            }
            if !seen_edges.insert(und) {
                return Err(Error::InvalidForest(format!(
                    "edge {und:?} used by two arcs"
                )));
            }
            out_deg[tail as usize] += 1;
            if out_deg[tail as usize] > 1 {
                return Err(Error::InvalidForest(format!(
                    "node {tail} has out-degree greater than one"
                )));
            }
            if !dsu.union(tail as usize, head as usize) {
                return Err(Error::InvalidForest(
                    "underlying edge set contains a cycle".into(),
                ));
            }
        }
        Ok(Self { arcs })
    }

    pub(crate) fn from_sorted_unchecked(arcs: Vec<(u32, u32)>) -> Self {
        Self { arcs }
    }

    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// The out-degree-0 node of each component that has at least one arc.
    pub fn roots(&self) -> Vec<u32> {
        let mut nodes: Vec<u32> = self
            .arcs
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .collect();
        nodes.sort_unstable();
        nodes.dedup();
        let tails: std::collections::HashSet<u32> =
            self.arcs.iter().map(|&(t, _)| t).collect();
        nodes.into_iter().filter(|v| !tails.contains(v)).collect()
    }
}

// ---------------------------------------------------------------------------
// Matching <-> forest
// ---------------------------------------------------------------------------

/// Converts a Morse matching of the graph's Hasse diagram to the rooted
/// forest that orients each matched edge away from its matched node.
pub fn matching_to_rooted_forest(
    graph: &Graph,
    hasse: &HasseDiagram,
    m: &MorseMatching,
) -> Result<RootedForest> {
    let m = MorseMatching::new(hasse, m.edge_ids().to_vec())?;
    let mut arcs = Vec::with_capacity(m.len());
    for &e in m.edge_ids() {
        let ce = hasse.cover_edge(e);
        let vertex = hasse.face(ce.lower);
        let edge = hasse.face(ce.upper);
        debug_assert_eq!(vertex.dim(), 0);
        debug_assert_eq!(edge.dim(), 1);
        let v = vertex.vertices()[0];
        let w = edge
            .vertices()
            .iter()
            .copied()
            .find(|&x| x != v)
            .expect("edge has two distinct endpoints");
        arcs.push((v, w));
    }
    arcs.sort_unstable();
    RootedForest::new(graph, arcs)
}

/// Inverse of [`matching_to_rooted_forest`].
pub fn rooted_forest_to_matching(
    graph: &Graph,
    hasse: &HasseDiagram,
    f: &RootedForest,
) -> Result<MorseMatching> {
    let f = RootedForest::new(graph, f.arcs().to_vec())?;
    let mut edges = Vec::with_capacity(f.len());
    for &(v, w) in f.arcs() {
        let vertex = crate::complex::Simplex::new(vec![v]).expect("valid vertex");
        let edge = crate::complex::Simplex::new(vec![v, w]).expect("valid edge");
        let lower = hasse
            .faces()
            .iter()
            .position(|s| *s == vertex)
            .ok_or_else(|| Error::InvalidForest(format!("node {v} not in diagram")))?
            as u32;
        let upper = hasse
            .faces()
            .iter()
            .position(|s| *s == edge)
            .ok_or_else(|| Error::InvalidForest(format!("edge ({v}, {w}) not in diagram")))?
            as u32;
        let id = hasse
            .edge_id(lower, upper)
            .expect("vertex-edge incidence is a cover pair");
        edges.push(id);
    }
    MorseMatching::new(hasse, edges)
}

// ---------------------------------------------------------------------------
// Forest enumeration
// ---------------------------------------------------------------------------

#[derive(Clone)]
struct Dsu {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut x = x;
        while self.parent[x] as usize != x {
            self.parent[x] = self.parent[self.parent[x] as usize];
            x = self.parent[x] as usize;
        }
        x
    }

    /// False when the two nodes were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big as u32;
        self.size[big] += self.size[small];
        true
    }
}

fn forest_subsets(graph: &Graph, visit: &mut dyn FnMut(&[usize], &mut Dsu)) {
    fn rec(
        edges: &[(u32, u32)],
        i: usize,
        dsu: &Dsu,
        included: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize], &mut Dsu),
    ) {
        if i == edges.len() {
            let mut dsu = dsu.clone();
            visit(included, &mut dsu);
            return;
        }
        rec(edges, i + 1, dsu, included, visit);
        let (a, b) = edges[i];
        let mut next = dsu.clone();
        if next.union(a as usize, b as usize) {
            included.push(i);
            rec(edges, i + 1, &next, included, visit);
            included.pop();
        }
    }
    let dsu = Dsu::new(graph.node_count() as usize);
    rec(graph.edges(), 0, &dsu, &mut Vec::new(), visit);
}

/// All rooted forests, in a deterministic order, grouped in the stream by
/// the underlying edge subset (enumerated exclude-first) and then by root
/// choices in ascending node order. Includes the empty forest.
pub fn enumerate_rooted_forests(graph: &Graph) -> Vec<RootedForest> {
    let mut out = Vec::new();
    forest_subsets(graph, &mut |included, dsu| {
        let arcs_per_choice = orientations(graph, included, dsu);
        out.extend(arcs_per_choice.into_iter().map(RootedForest::from_sorted_unchecked));
    });
    out
}

/// Rooted forest counts indexed by edge count, 0..=n-1.
pub fn count_rooted_forests_by_size(graph: &Graph) -> Vec<u64> {
    let n = graph.node_count() as usize;
    let mut counts = vec![0u64; n.max(1)];
    forest_subsets(graph, &mut |included, dsu| {
        let mut product = 1u64;
        let mut roots: Vec<usize> = included
            .iter()
            .map(|&i| {
                let (a, _) = graph.edges()[i];
                dsu.find(a as usize)
            })
            .collect();
        roots.sort_unstable();
        roots.dedup();
        for r in roots {
            product *= dsu.size[r] as u64;
        }
        counts[included.len()] += product;
    });
    counts
}

/// All orientations of an undirected forest that make each component a tree
/// rooted at one of its nodes, arcs pointing toward the root.
fn orientations(graph: &Graph, included: &[usize], dsu: &mut Dsu) -> Vec<Vec<(u32, u32)>> {
    if included.is_empty() {
        return vec![Vec::new()];
    }
    // group component nodes by representative
    let mut comp_nodes: std::collections::BTreeMap<usize, Vec<u32>> =
        std::collections::BTreeMap::new();
    let mut nodes: Vec<u32> = included
        .iter()
        .flat_map(|&i| {
            let (a, b) = graph.edges()[i];
            [a, b]
        })
        .collect();
    nodes.sort_unstable();
    nodes.dedup();
    for &v in &nodes {
        comp_nodes.entry(dsu.find(v as usize)).or_default().push(v);
    }
    let comps: Vec<Vec<u32>> = comp_nodes.into_values().collect();

    // adjacency within the forest
    let mut adj: std::collections::HashMap<u32, Vec<u32>> = std::collections::HashMap::new();
    for &i in included {
        let (a, b) = graph.edges()[i];
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }

    // cartesian product over components of root choices
    let mut out = Vec::new();
    let mut choice = vec![0usize; comps.len()];
    loop {
        let mut arcs: Vec<(u32, u32)> = Vec::with_capacity(included.len());
        for (c, comp) in comps.iter().enumerate() {
            let root = comp[choice[c]];
            // BFS from the root; each non-root node points to its parent
            let mut parent: std::collections::HashMap<u32, u32> =
                std::collections::HashMap::new();
            let mut queue = std::collections::VecDeque::from([root]);
            let mut seen: std::collections::HashSet<u32> = [root].into();
            while let Some(x) = queue.pop_front() {
                for &y in adj.get(&x).into_iter().flatten() {
                    if seen.insert(y) {
                        parent.insert(y, x);
                        queue.push_back(y);
                    }
                }
            }
            for &v in comp {
                if v != root {
                    arcs.push((v, parent[&v]));
                }
            }
        }
        arcs.sort_unstable();
        out.push(arcs);

        // advance the mixed-radix counter
        let mut c = comps.len();
        loop {
            if c == 0 {
                return out;
            }
            c -= 1;
            choice[c] += 1;
            if choice[c] < comps[c].len() {
                break;
            }
            choice[c] = 0;
        }
    }
}

// ---------------------------------------------------------------------------
// Closed forms and the Laplacian identity
// ---------------------------------------------------------------------------

/// Closed-form f-vector of the Morse complex of the complete graph:
/// `f_{i-1} = C(n, i) (n - i) n^{i-1}` rooted forests with `i` edges.
pub fn kn_fvector(n: u32) -> FVector {
    let mut counts = Vec::new();
    for i in 1..n as u128 {
        let c = binomial_u128(n as u128, i);
        let val = c * (n as u128 - i) * (n as u128).pow(i as u32 - 1);
        counts.push(u64::try_from(val).expect("complete-graph f-vector fits in u64"));
    }
    FVector::new(counts)
}

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

/// Degree matrix minus adjacency matrix.
pub fn laplacian(graph: &Graph) -> IntegerMatrix {
    let n = graph.node_count() as usize;
    let mut dense = vec![vec![0i64; n]; n];
    for &(a, b) in graph.edges() {
        dense[a as usize][b as usize] = -1;
        dense[b as usize][a as usize] = -1;
        dense[a as usize][a as usize] += 1;
        dense[b as usize][b as usize] += 1;
    }
    IntegerMatrix::from_dense(&dense)
}

/// An integer polynomial, coefficients by ascending degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && self.degree() > 0 {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match d {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag.is_one() {
                        write!(f, "x")?;
                    } else {
                        write!(f, "{mag} x")?;
                    }
                    if d > 1 {
                        write!(f, "^{d}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Fraction-free determinant (Bareiss).
pub fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                let (q, r) = num_integer::Integer::div_rem(&num, &prev);
                debug_assert!(r.is_zero(), "Bareiss division is exact");
                a[i][j] = q;
            }
        }
        for i in k + 1..n {
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

fn to_dense(m: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    let mut dense = vec![vec![BigInt::zero(); m.cols()]; m.rows()];
    for (r, c, v) in m.entries() {
        dense[r as usize][c as usize] = v.clone();
    }
    dense
}

/// Exact characteristic polynomial det(xI - A) by evaluation at the integer
/// points 0..=n and Lagrange interpolation over the rationals.
pub fn char_poly(a: &IntegerMatrix) -> Result<IntegerPolynomial> {
    if a.rows() != a.cols() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let dense = to_dense(a);
    let mut values = Vec::with_capacity(n + 1);
    for t in 0..=n as i64 {
        let mut m = dense.clone();
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = -v.clone();
                if i == j {
                    *v += BigInt::from(t);
                }
            }
        }
        values.push(bareiss_determinant(m));
    }

    // Lagrange basis over the points 0..=n, exact rational arithmetic
    let mut acc = vec![BigRational::zero(); n + 1];
    for (j, y) in values.iter().enumerate() {
        let mut numer = vec![BigRational::one()]; // product of (x - k), k != j
        let mut denom = BigRational::one();
        for k in 0..=n {
            if k == j {
                continue;
            }
            let root = BigRational::from(BigInt::from(k as i64));
            let mut next = vec![BigRational::zero(); numer.len() + 1];
            for (d, c) in numer.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * &root;
            }
            numer = next;
            denom *= BigRational::from(BigInt::from(j as i64 - k as i64));
        }
        let scale = BigRational::from(y.clone()) / denom;
        for (d, c) in numer.into_iter().enumerate() {
            acc[d] += c * &scale;
        }
    }
    let coeffs = acc
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "characteristic polynomial is integral");
            c.to_integer()
        })
        .collect();
    Ok(IntegerPolynomial::new(coeffs))
}

/// The same polynomial by the Faddeev-LeVerrier trace recursion; every
/// division is exact over the integers.
pub fn char_poly_leverrier(a: &IntegerMatrix) -> Result<IntegerPolynomial> {
    if a.rows() != a.cols() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let dense = to_dense(a);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    for k in 1..=n {
        // m <- dense * m
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for l in 0..n {
                if dense[i][l].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !m[l][j].is_zero() {
                        next[i][j] += &dense[i][l] * &m[l][j];
                    }
                }
            }
        }
        m = next;
        let trace: BigInt = (0..n).map(|i| m[i][i].clone()).sum();
        let (c, r) = num_integer::Integer::div_rem(&(-trace), &BigInt::from(k as i64));
        debug_assert!(r.is_zero(), "trace recursion divides exactly");
        coeffs[n - k] = c.clone();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &c;
        }
    }
    Ok(IntegerPolynomial::new(coeffs))
}

/// Outcome of the Laplacian identity check: the characteristic polynomial of
/// the Laplacian against the alternating sum over the Morse-complex f-vector
/// (rooted-forest counts), with the empty face contributing the leading
/// `x^n` term.
#[derive(Clone, Debug)]
pub struct LaplacianIdentity {
    pub holds: bool,
    pub laplacian_side: IntegerPolynomial,
    pub forest_side: IntegerPolynomial,
}

pub fn verify_laplacian_identity(graph: &Graph) -> Result<LaplacianIdentity> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = graph.node_count() as usize;
    let laplacian_side = char_poly(&laplacian(graph))?;

    let by_size = count_rooted_forests_by_size(graph);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (i, count) in by_size.iter().enumerate() {
        // term f_{i-1} (-1)^i x^(n-i); the i = 0 entry counts the empty
        // forest alone, which is exactly the explicit f_{-1} = 1 term
        let sign = if i % 2 == 0 { 1i64 } else { -1i64 };
        coeffs[n - i] = BigInt::from(sign) * BigInt::from(*count);
    }
    let forest_side = IntegerPolynomial::new(coeffs);
    Ok(LaplacianIdentity {
        holds: laplacian_side == forest_side,
        laplacian_side,
        forest_side,
    })
}

/// Number of spanning trees by the matrix-tree cofactor.
pub fn spanning_tree_count(graph: &Graph) -> BigInt {
    let n = graph.node_count() as usize;
    if n <= 1 {
        return BigInt::one();
    }
    let q = laplacian(graph);
    let dense = to_dense(&q);
    let minor: Vec<Vec<BigInt>> = dense[1..]
        .iter()
        .map(|row| row[1..].to_vec())
        .collect();
    bareiss_determinant(minor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morse::{enumerate_matchings, MatchMode};

    #[test]
    fn laplacian_small() {
        let k2 = laplacian(&Graph::complete(2));
        assert_eq!(k2.get(0, 0), BigInt::from(1));
        assert_eq!(k2.get(0, 1), BigInt::from(-1));
        let k3 = laplacian(&Graph::complete(3));
        for i in 0..3 {
            assert_eq!(k3.get(i, i), BigInt::from(2));
            let row_sum: BigInt = (0..3).map(|j| k3.get(i, j)).sum();
            assert!(row_sum.is_zero());
        }
    }

    #[test]
    fn char_poly_basics() {
        let zero1 = IntegerMatrix::from_dense(&[vec![0]]);
        let p = char_poly(&zero1).unwrap();
        assert_eq!(p.coeffs(), &[BigInt::zero(), BigInt::one()]); // x

        let k3 = char_poly(&laplacian(&Graph::complete(3))).unwrap();
        // x^3 - 6x^2 + 9x
        assert_eq!(
            k3.coeffs(),
            &[
                BigInt::zero(),
                BigInt::from(9),
                BigInt::from(-6),
                BigInt::one()
            ]
        );
        assert_eq!(k3.to_string(), "x^3 - 6 x^2 + 9 x");
    }

    #[test]
    fn char_poly_trace_coefficient() {
        let m = IntegerMatrix::from_dense(&[vec![3, 1, 2], vec![0, -1, 4], vec![2, 2, 5]]);
        let p = char_poly(&m).unwrap();
        // coefficient of x^(n-1) is -trace
        assert_eq!(p.coeffs()[2], BigInt::from(-7));
    }

    #[test]
    fn both_char_poly_routes_agree() {
        for (name, g) in verification_corpus() {
            let q = laplacian(&g);
            assert_eq!(
                char_poly(&q).unwrap(),
                char_poly_leverrier(&q).unwrap(),
                "disagreement on {name}"
            );
        }
    }

    #[test]
    fn forest_counts_k3() {
        let g = Graph::complete(3);
        let counts = count_rooted_forests_by_size(&g);
        assert_eq!(counts[0], 1);
        assert_eq!(counts[1], 6);
        assert_eq!(counts[2], 9);
        assert_eq!(kn_fvector(3).counts(), &[6, 9]);
    }

    #[test]
    fn kn_formula_values() {
        assert_eq!(kn_fvector(4).counts(), &[12, 48, 64]);
        for n in 2..=5u32 {
            let counts = count_rooted_forests_by_size(&Graph::complete(n));
            assert_eq!(
                kn_fvector(n).counts(),
                &counts[1..],
                "complete graph on {n} nodes"
            );
        }
    }

    #[test]
    fn square_has_16_rooted_spanning_trees() {
        let g = Graph::cycle(4);
        let counts = count_rooted_forests_by_size(&g);
        assert_eq!(counts[3], 16); // 4 spanning trees x 4 roots
        assert_eq!(spanning_tree_count(&g), BigInt::from(4));
        // and the total grouped by size: 1, 8, 20, 16
        assert_eq!(counts, vec![1, 8, 20, 16]);
    }

    #[test]
    fn forests_match_enumeration() {
        let g = Graph::cycle(4);
        let forests = enumerate_rooted_forests(&g);
        assert_eq!(forests.len() as u64, count_rooted_forests_by_size(&g).iter().sum());
        for f in &forests {
            // every enumerated forest revalidates
            RootedForest::new(&g, f.arcs().to_vec()).unwrap();
        }
        // all distinct
        let mut sorted = forests.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), forests.len());
    }

    #[test]
    fn matching_forest_bijection_on_square() {
        let g = Graph::cycle(4);
        let complex = g.as_complex();
        let h = HasseDiagram::new(&complex);
        let matchings = enumerate_matchings(&h, MatchMode::All);
        let forests = enumerate_rooted_forests(&g);
        assert_eq!(matchings.len(), forests.len());
        // size-by-size agreement
        for k in 0..=4usize {
            assert_eq!(
                matchings.iter().filter(|m| m.len() == k).count(),
                forests.iter().filter(|f| f.len() == k).count(),
                "size {k}"
            );
        }
        // round trips
        for m in &matchings {
            let f = matching_to_rooted_forest(&g, &h, m).unwrap();
            let back = rooted_forest_to_matching(&g, &h, &f).unwrap();
            assert_eq!(&back, m);
        }
    }

    #[test]
    fn single_arc_forest() {
        let g = Graph::cycle(3);
        let complex = g.as_complex();
        let h = HasseDiagram::new(&complex);
        // match node 0 with edge (0,1)
        let v = complex
            .face_id(&crate::complex::Simplex::new(vec![0]).unwrap())
            .unwrap();
        let e = complex
            .face_id(&crate::complex::Simplex::new(vec![0, 1]).unwrap())
            .unwrap();
        let m = MorseMatching::new(&h, vec![h.edge_id(v, e).unwrap()]).unwrap();
        let f = matching_to_rooted_forest(&g, &h, &m).unwrap();
        assert_eq!(f.arcs(), &[(0, 1)]);
        assert_eq!(f.roots(), vec![1]);
    }

    #[test]
    fn forest_validation_errors() {
        let g = Graph::cycle(4);
        assert!(matches!(
            RootedForest::new(&g, vec![(0, 2)]),
            Err(Error::InvalidForest(_))
        ));
        // out-degree two
        assert!(RootedForest::new(&g, vec![(0, 1), (0, 3)]).is_err());
        // cycle
        assert!(RootedForest::new(&g, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).is_err());
        // fine: a rooted spanning tree
        assert!(RootedForest::new(&g, vec![(1, 0), (2, 3), (3, 0)]).is_ok());
    }

    #[test]
    fn laplacian_identity_small_graphs() {
        for name in ["K3", "C4", "K4"] {
            let g = verification_corpus()
                .into_iter()
                .find(|(n, _)| *n == name)
                .unwrap()
                .1;
            let report = verify_laplacian_identity(&g).unwrap();
            assert!(report.holds, "identity fails on {name}");
        }
        let k3 = verify_laplacian_identity(&Graph::complete(3)).unwrap();
        assert_eq!(k3.laplacian_side.to_string(), "x^3 - 6 x^2 + 9 x");
    }

    #[test]
    fn disconnected_identity_is_error() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            verify_laplacian_identity(&g),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn petersen_spanning_trees() {
        assert_eq!(spanning_tree_count(&Graph::petersen()), BigInt::from(2000));
    }

    #[test]
    fn matrix_tree_consistency() {
        for (name, g) in verification_corpus() {
            let n = g.node_count() as u64;
            let t = spanning_tree_count(&g);
            let rooted = count_rooted_forests_by_size(&g)[g.node_count() as usize - 1];
            assert_eq!(
                BigInt::from(rooted),
                t * BigInt::from(n),
                "rooted spanning trees of {name}"
            );
        }
    }
}
