//! Hasse diagrams of simplicial complexes.
//!
//! Faces keep the complex's canonical (dimension, lexicographic) ids; cover
//! edges are sorted by (lower id, upper id) and densely indexed. The cover
//! edges are exactly the candidate Morse pairings, i.e. the vertices of the
//! Morse complex.

use std::fmt;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// A covering pair: `lower` is a face of `upper` of one dimension less.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CoverEdge {
    pub lower: u32,
    pub upper: u32,
}

/// The face poset's covering relation, densely indexed.
#[derive(Clone, Debug)]
pub struct HasseDiagram {
    faces: Vec<Simplex>,
    face_dims: Vec<u8>,
    cover_edges: Vec<CoverEdge>,
    /// Edge ids where the face is the lower endpoint.
    up_edges: Vec<Vec<u32>>,
    /// Edge ids where the face is the upper endpoint.
    down_edges: Vec<Vec<u32>>,
}

impl HasseDiagram {
    pub fn new(complex: &SimplicialComplex) -> Self {
        let faces: Vec<Simplex> = complex.faces().to_vec();
        let face_dims: Vec<u8> = faces.iter().map(|s| s.dim() as u8).collect();

        let mut cover_edges = Vec::new();
        for (upper, face) in faces.iter().enumerate() {
            for sub in face.boundary_facets() {
                let lower = complex.face_id(&sub).expect("complex is downward closed");
                cover_edges.push(CoverEdge {
                    lower,
                    upper: upper as u32,
                });
            }
        }
        cover_edges.sort_by_key(|e| (e.lower, e.upper));

        let mut up_edges = vec![Vec::new(); faces.len()];
        let mut down_edges = vec![Vec::new(); faces.len()];
        for (id, e) in cover_edges.iter().enumerate() {
            up_edges[e.lower as usize].push(id as u32);
            down_edges[e.upper as usize].push(id as u32);
        }

        Self {
            faces,
            face_dims,
            cover_edges,
            up_edges,
            down_edges,
        }
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edge_count(&self) -> usize {
        self.cover_edges.len()
    }

    pub fn faces(&self) -> &[Simplex] {
        &self.faces
    }

    pub fn face(&self, id: u32) -> &Simplex {
        &self.faces[id as usize]
    }

    pub fn face_dim(&self, id: u32) -> usize {
        self.face_dims[id as usize] as usize
    }

    pub fn dim(&self) -> usize {
        self.face_dims.iter().copied().max().unwrap_or(0) as usize
    }

    pub fn cover_edges(&self) -> &[CoverEdge] {
        &self.cover_edges
    }

    pub fn cover_edge(&self, id: u32) -> CoverEdge {
        self.cover_edges[id as usize]
    }

    pub fn check_edge_id(&self, id: u32) -> Result<()> {
        if (id as usize) < self.cover_edges.len() {
            Ok(())
        } else {
            Err(Error::InvalidEdgeId {
                id,
                count: self.cover_edges.len(),
            })
        }
    }

    /// Dense id of the cover pair `(lower, upper)`, if it is one.
    pub fn edge_id(&self, lower: u32, upper: u32) -> Option<u32> {
        self.cover_edges
            .binary_search_by_key(&(lower, upper), |e| (e.lower, e.upper))
            .ok()
            .map(|i| i as u32)
    }

    /// Edges in which `face` is the lower endpoint.
    pub fn up_edges(&self, face: u32) -> &[u32] {
        &self.up_edges[face as usize]
    }

    /// Edges in which `face` is the upper endpoint.
    pub fn down_edges(&self, face: u32) -> &[u32] {
        &self.down_edges[face as usize]
    }

    /// Human-readable form of a cover edge: `({0} ⊂ {0 1})`.
    pub fn describe_edge(&self, id: u32) -> String {
        let e = self.cover_edge(id);
        format!(
            "({} ⊂ {})",
            self.face(e.lower),
            self.face(e.upper)
        )
    }

    /// The number of vertices of the underlying complex (0-dimensional faces).
    pub fn vertex_face_count(&self) -> usize {
        self.face_dims.iter().filter(|&&d| d == 0).count()
    }
}

impl fmt::Display for HasseDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Hasse diagram: {} faces, {} cover edges",
            self.face_count(),
            self.edge_count()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_hasse_is_double_cycle() {
        // C_5 subdivides to a 10-cycle: 10 faces, 10 cover edges.
        let c = SimplicialComplex::cycle_graph(5).unwrap();
        let h = HasseDiagram::new(&c);
        assert_eq!(h.face_count(), 10);
        assert_eq!(h.edge_count(), 10);
        // every face is incident to exactly two cover edges
        for id in 0..h.face_count() as u32 {
            assert_eq!(h.up_edges(id).len() + h.down_edges(id).len(), 2);
        }
    }

    #[test]
    fn triangle_hasse() {
        let c = SimplicialComplex::simplex(2);
        let h = HasseDiagram::new(&c);
        assert_eq!(h.face_count(), 7);
        assert_eq!(h.edge_count(), 9);
    }

    #[test]
    fn tetrahedron_hasse() {
        let c = SimplicialComplex::simplex(3);
        let h = HasseDiagram::new(&c);
        assert_eq!(h.face_count(), 15);
        assert_eq!(h.edge_count(), 28);
    }

    #[test]
    fn simplex_hasse_counts() {
        // the d-simplex has 2^(d+1)-1 faces and (d+1)(2^d - 1) cover edges;
        // the d+1 subset-covers of the empty set are not part of the diagram
        for d in 1..=5usize {
            let h = HasseDiagram::new(&SimplicialComplex::simplex(d));
            assert_eq!(h.face_count(), (1 << (d + 1)) - 1);
            assert_eq!(h.edge_count(), (d + 1) * ((1 << d) - 1));
        }
    }

    #[test]
    fn cover_edges_drop_single_vertex() {
        let c = SimplicialComplex::from_facets(&[vec![0, 1, 2], vec![2, 3]]).unwrap();
        let h = HasseDiagram::new(&c);
        for e in h.cover_edges() {
            let lower = h.face(e.lower);
            let upper = h.face(e.upper);
            assert_eq!(upper.dim(), lower.dim() + 1);
            assert!(lower.is_face_of(upper));
        }
    }

    #[test]
    fn deterministic_construction() {
        let build = || {
            let c = SimplicialComplex::from_facets(&[vec![3, 1, 0], vec![1, 2, 3]]).unwrap();
            let h = HasseDiagram::new(&c);
            h.cover_edges().to_vec()
        };
        assert_eq!(build(), build());
    }

    #[test]
    fn edge_lookup() {
        let c = SimplicialComplex::simplex(2);
        let h = HasseDiagram::new(&c);
        for (id, e) in h.cover_edges().iter().enumerate() {
            assert_eq!(h.edge_id(e.lower, e.upper), Some(id as u32));
        }
        assert_eq!(h.edge_id(0, 1), None); // two vertices never cover
    }
}
