//! Text formats: facet lists, edge lists, and sparse matrix triples.
//!
//! Facet-list format: one facet per line as whitespace-separated nonnegative
//! integers; `#` starts a comment; blank lines are ignored. Edge lists are
//! the same format restricted to two vertices per line. Vertex ids may be
//! sparse; they are remapped to a dense range on ingestion and the map is
//! reported.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph_morse::Graph;
use crate::homology::IntegerMatrix;

/// Dense-to-original vertex id map produced on ingestion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexRemap {
    /// `original[dense]` is the id that appeared in the input.
    pub original: Vec<u32>,
}

impl VertexRemap {
    /// True when the input already used ids 0..n densely.
    pub fn is_identity(&self) -> bool {
        self.original.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }
}

/// Parses facet lines into raw vertex lists (original ids, unnormalized).
fn parse_lines(text: &str) -> Result<Vec<(usize, Vec<u32>)>> {
    let mut rows = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut verts = Vec::new();
        for tok in line.split_whitespace() {
            let v: u32 = tok.parse().map_err(|_| Error::Parse {
                line: lineno + 1,
                msg: format!("expected a nonnegative integer, found {tok:?}"),
            })?;
            verts.push(v);
        }
        rows.push((lineno + 1, verts));
    }
    Ok(rows)
}

/// Remaps sparse vertex ids to 0..n, preserving numeric order.
fn densify(rows: &mut [(usize, Vec<u32>)]) -> VertexRemap {
    let mut seen: Vec<u32> = rows.iter().flat_map(|(_, vs)| vs.iter().copied()).collect();
    seen.sort_unstable();
    seen.dedup();
    let dense_of = |v: u32| seen.binary_search(&v).unwrap() as u32;
    for (_, vs) in rows.iter_mut() {
        for v in vs.iter_mut() {
            *v = dense_of(*v);
        }
    }
    VertexRemap { original: seen }
}

/// Parses a facet list into a complex, remapping sparse vertex ids.
pub fn parse_complex(text: &str) -> Result<(SimplicialComplex, VertexRemap)> {
    let mut rows = parse_lines(text)?;
    if rows.is_empty() {
        return Err(Error::EmptyComplex);
    }
    for (line, vs) in &rows {
        if vs.is_empty() {
            return Err(Error::Parse {
                line: *line,
                msg: "empty facet".into(),
            });
        }
        let mut sorted = vs.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse {
                line: *line,
                msg: format!("facet {vs:?} contains a duplicate vertex"),
            });
        }
    }
    let remap = densify(&mut rows);
    let facets: Vec<Vec<u32>> = rows.into_iter().map(|(_, vs)| vs).collect();
    let complex = SimplicialComplex::from_facets(&facets)?;
    Ok((complex, remap))
}

/// Parses an edge list (pairs only) into a graph, remapping sparse ids.
pub fn parse_graph(text: &str) -> Result<(Graph, VertexRemap)> {
    let mut rows = parse_lines(text)?;
    if rows.is_empty() {
        return Err(Error::EmptyComplex);
    }
    for (line, vs) in &rows {
        if vs.len() != 2 {
            return Err(Error::Parse {
                line: *line,
                msg: format!("expected an edge `u v`, found {} ids", vs.len()),
            });
        }
        if vs[0] == vs[1] {
            return Err(Error::Parse {
                line: *line,
                msg: "loops are not allowed".into(),
            });
        }
    }
    let remap = densify(&mut rows);
    let n = remap.original.len() as u32;
    let edges: Vec<(u32, u32)> = rows.into_iter().map(|(_, vs)| (vs[0], vs[1])).collect();
    let graph = Graph::new(n, &edges)?;
    Ok((graph, remap))
}

/// Writes the facet list of a complex, one facet per line.
pub fn write_facets(complex: &SimplicialComplex) -> String {
    let mut out = String::new();
    for facet in complex.facets() {
        let words: Vec<String> = facet.vertices().iter().map(|v| v.to_string()).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out
}

/// Sparse `row col value` triples, one entry per line, for external
/// cross-checking of Smith normal form computations.
pub fn write_matrix_triples(m: &IntegerMatrix) -> String {
    let mut out = format!("# {} {}\n", m.rows(), m.cols());
    for (r, c, v) in m.entries() {
        out.push_str(&format!("{r} {c} {v}\n"));
    }
    out
}
