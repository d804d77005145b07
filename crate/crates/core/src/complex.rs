//! Abstract simplicial complexes with a canonical face order.
//!
//! Faces are stored sorted by (dimension, lexicographic vertex order), so
//! every downstream indexing — Hasse diagrams, matchings, boundary
//! matrices — is reproducible bit for bit from the facet input alone.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A single face: a nonempty, strictly increasing sequence of vertex ids.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Simplex {
    vertices: Vec<u32>,
}

impl Simplex {
    /// Builds a simplex from an arbitrary vertex list; sorts and rejects
    /// duplicates.
    pub fn new(mut vertices: Vec<u32>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyFacet);
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(vertices));
        }
        Ok(Self { vertices })
    }

    /// Wraps a vertex list already known to be nonempty and strictly sorted.
    pub(crate) fn from_sorted_unchecked(vertices: Vec<u32>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Self { vertices }
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// The faces obtained by dropping one vertex, in order of the dropped
    /// position. Empty for a vertex.
    pub fn boundary_facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.vertices.len();
        (0..n).filter(move |_| n > 1).map(move |skip| {
            let vs = self
                .vertices
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, v)| *v)
                .collect();
            Simplex::from_sorted_unchecked(vs)
        })
    }

    /// Subset test on sorted vertex lists.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        let mut it = other.vertices.iter();
        self.vertices.iter().all(|v| it.any(|w| w == v))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Simplex {
    /// Canonical order: by dimension first, then lexicographic.
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertices
            .len()
            .cmp(&other.vertices.len())
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.vertices.iter().join(" "))
    }
}

/// Face counts per dimension; the empty face is excluded throughout.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FVector {
    counts: Vec<u64>,
}

impl FVector {
    pub fn new(counts: Vec<u64>) -> Self {
        Self { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Alternating sum over nonempty faces.
    pub fn euler_characteristic(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Euler characteristic with the empty face counted, i.e. chi - 1.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.euler_characteristic() - 1
    }

    /// Counts prefixed by the f_{-1} = 1 term for identities that need the
    /// empty face made explicit.
    pub fn including_empty_face(&self) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.counts.len() + 1);
        v.push(1);
        v.extend_from_slice(&self.counts);
        v
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.counts.iter().join(", "))
    }
}

/// A finite abstract simplicial complex: the materialized downward-closed
/// face family, with facets marked.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    vertex_universe: u32,
    faces: Vec<Simplex>,
    index: HashMap<Simplex, u32>,
    dim_starts: Vec<usize>,
    facets: Vec<u32>,
}

impl SimplicialComplex {
    /// Downward closure of a facet list. Redundant (non-maximal) input
    /// facets are absorbed.
    pub fn from_facets(facets: &[Vec<u32>]) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let mut all = BTreeSet::new();
        for facet in facets {
            let top = Simplex::new(facet.clone())?;
            for k in 1..=top.vertices().len() {
                for sub in top.vertices().iter().copied().combinations(k) {
                    all.insert(Simplex::from_sorted_unchecked(sub));
                }
            }
        }
        Ok(Self::from_sorted_faces(all.into_iter().collect()))
    }

    /// Builds a complex from a face family that is already downward closed,
    /// e.g. an enumerated family of matchings. Closure is verified.
    pub fn from_closed_faces(faces: Vec<Vec<u32>>) -> Result<Self> {
        if faces.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let mut all = BTreeSet::new();
        for face in faces {
            all.insert(Simplex::new(face)?);
        }
        let faces: Vec<Simplex> = all.into_iter().collect();
        let present: BTreeSet<&Simplex> = faces.iter().collect();
        for face in &faces {
            for sub in face.boundary_facets() {
                if !present.contains(&sub) {
                    return Err(Error::NotClosed(sub.vertices().to_vec()));
                }
            }
        }
        Ok(Self::from_sorted_faces(faces))
    }

    /// `faces` must be deduplicated and sorted in the canonical order.
    fn from_sorted_faces(faces: Vec<Simplex>) -> Self {
        debug_assert!(faces.windows(2).all(|w| w[0] < w[1]));
        let dim = faces.last().map(|s| s.dim()).unwrap_or(0);
        let vertex_universe = faces
            .iter()
            .map(|s| s.vertices().last().unwrap() + 1)
            .max()
            .unwrap_or(0);

        let mut dim_starts = vec![0usize; dim + 2];
        for s in &faces {
            dim_starts[s.dim() + 1] += 1;
        }
        for d in 0..=dim {
            dim_starts[d + 1] += dim_starts[d];
        }

        let index: HashMap<Simplex, u32> = faces
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i as u32))
            .collect();

        // A face is a facet iff no one-vertex extension is present.
        let mut facets = Vec::new();
        for (id, face) in faces.iter().enumerate() {
            let mut maximal = true;
            'outer: for v in 0..vertex_universe {
                if face.vertices().binary_search(&v).is_err() {
                    let mut vs = face.vertices().to_vec();
                    vs.push(v);
                    vs.sort_unstable();
                    if index.contains_key(&Simplex::from_sorted_unchecked(vs)) {
                        maximal = false;
                        break 'outer;
                    }
                }
            }
            if maximal {
                facets.push(id as u32);
            }
        }

        Self {
            vertex_universe,
            faces,
            index,
            dim_starts,
            facets,
        }
    }

    /// The full `d`-dimensional simplex on vertices `0..=d`.
    pub fn simplex(d: usize) -> Self {
        let facet: Vec<u32> = (0..=d as u32).collect();
        Self::from_facets(&[facet]).expect("simplex facets are valid")
    }

    /// The cycle graph on `n >= 3` nodes as a 1-dimensional complex.
    pub fn cycle_graph(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::CycleTooSmall(n));
        }
        let facets: Vec<Vec<u32>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
        Self::from_facets(&facets)
    }

    /// The path with `edges >= 1` edges on `edges + 1` nodes.
    pub fn path_graph(edges: u32) -> Result<Self> {
        if edges < 1 {
            return Err(Error::PathTooSmall(edges));
        }
        let facets: Vec<Vec<u32>> = (0..edges).map(|i| vec![i, i + 1]).collect();
        Self::from_facets(&facets)
    }

    /// The complete graph on `n >= 1` nodes as a 1-dimensional complex
    /// (a single vertex for n = 1).
    pub fn complete_graph(n: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::CompleteTooSmall(n));
        }
        if n == 1 {
            return Self::from_facets(&[vec![0]]);
        }
        let mut facets = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                facets.push(vec![i, j]);
            }
        }
        Self::from_facets(&facets)
    }

    pub fn f_vector(&self) -> FVector {
        let counts = (0..=self.dim())
            .map(|d| (self.dim_starts[d + 1] - self.dim_starts[d]) as u64)
            .collect();
        FVector::new(counts)
    }

    pub fn dim(&self) -> usize {
        self.dim_starts.len() - 2
    }

    /// Size of the dense vertex universe (largest vertex id + 1). Unused ids
    /// below the maximum are permitted, e.g. in complexes whose vertices are
    /// a sparse subset of another indexing.
    pub fn vertex_universe(&self) -> u32 {
        self.vertex_universe
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[Simplex] {
        &self.faces
    }

    pub fn face(&self, id: u32) -> &Simplex {
        &self.faces[id as usize]
    }

    pub fn face_id(&self, s: &Simplex) -> Option<u32> {
        self.index.get(s).copied()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index.contains_key(s)
    }

    /// Face ids of dimension `d`, as a contiguous id range.
    pub fn dim_range(&self, d: usize) -> std::ops::Range<u32> {
        if d > self.dim() {
            return 0..0;
        }
        self.dim_starts[d] as u32..self.dim_starts[d + 1] as u32
    }

    pub fn facet_ids(&self) -> &[u32] {
        &self.facets
    }

    pub fn facets(&self) -> impl Iterator<Item = &Simplex> {
        self.facets.iter().map(|&id| &self.faces[id as usize])
    }

    /// True iff all facets share one dimension.
    pub fn is_pure(&self) -> bool {
        let mut dims = self.facets().map(|s| s.dim());
        match dims.next() {
            None => true,
            Some(first) => dims.all(|d| d == first),
        }
    }

    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector().reduced_euler_characteristic()
    }
}
