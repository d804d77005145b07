//! The discrete Morse complex and its pure part.
//!
//! The Morse complex of a complex has one vertex per cover edge of the Hasse
//! diagram; its faces are the nonempty acyclic matchings. The pure Morse
//! complex is the subcomplex generated by the matchings of maximal
//! cardinality (the optimal Morse functions). Both are materialized as
//! explicit face lists so that homology can run on them directly; a face
//! budget guards against runaway inputs.

use std::collections::BTreeSet;

use crate::complex::{FVector, SimplicialComplex};
use crate::error::{Error, Result};
use crate::hasse::HasseDiagram;
use crate::morse::{self, MatchMode};

pub const DEFAULT_FACE_BUDGET: usize = 1_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MorseKind {
    Full,
    Pure,
}

/// A Morse complex: a simplicial complex whose vertex ids are the cover-edge
/// ids of the base diagram.
#[derive(Clone, Debug)]
pub struct MorseComplex {
    kind: MorseKind,
    base_hasse: HasseDiagram,
    complex: SimplicialComplex,
}

impl MorseComplex {
    pub fn kind(&self) -> MorseKind {
        self.kind
    }

    /// The Hasse diagram of the base complex; its edge ids label the
    /// vertices of `complex()`.
    pub fn base_hasse(&self) -> &HasseDiagram {
        &self.base_hasse
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn f_vector(&self) -> FVector {
        self.complex.f_vector()
    }

    /// True iff all facets share one dimension.
    pub fn is_pure(&self) -> bool {
        self.complex.is_pure()
    }
}

fn collect_matchings(
    h: &HasseDiagram,
    budget: usize,
    threads: usize,
) -> Result<Vec<Vec<u32>>> {
    let mut faces: Vec<Vec<u32>> = Vec::new();
    if threads <= 1 {
        let mut over = false;
        morse::visit_matchings(h, MatchMode::All, &mut |edges| {
            if edges.is_empty() {
                return true; // the empty matching is the empty face
            }
            if faces.len() >= budget {
                over = true;
                return false;
            }
            faces.push(edges.to_vec());
            true
        });
        if over {
            return Err(Error::FaceBudget {
                budget,
                partial: counts_by_size(&faces),
            });
        }
    } else {
        faces = morse::enumerate_matchings_threaded(h, MatchMode::All, threads)
            .into_iter()
            .filter(|m| !m.is_empty())
            .map(|m| m.edge_ids().to_vec())
            .collect();
        if faces.len() > budget {
            return Err(Error::FaceBudget {
                budget,
                partial: counts_by_size(&faces),
            });
        }
    }
    Ok(faces)
}

fn counts_by_size(faces: &[Vec<u32>]) -> Vec<u64> {
    let max = faces.iter().map(|f| f.len()).max().unwrap_or(0);
    let mut counts = vec![0u64; max];
    for f in faces {
        counts[f.len() - 1] += 1;
    }
    counts
}

/// The full Morse complex: every nonempty acyclic matching is a face.
pub fn discrete_morse_complex(
    delta: &SimplicialComplex,
    budget: usize,
    threads: usize,
) -> Result<MorseComplex> {
    let h = HasseDiagram::new(delta);
    let faces = collect_matchings(&h, budget, threads)?;
    let complex = SimplicialComplex::from_closed_faces(faces)?;
    debug_assert_eq!(complex.dim_range(0).len(), h.edge_count());
    Ok(MorseComplex {
        kind: MorseKind::Full,
        base_hasse: h,
        complex,
    })
}

/// The pure Morse complex: the subcomplex generated by the matchings of
/// maximal cardinality.
pub fn pure_morse_complex(
    delta: &SimplicialComplex,
    budget: usize,
    threads: usize,
) -> Result<MorseComplex> {
    let h = HasseDiagram::new(delta);
    let all = collect_matchings(&h, budget, threads)?;
    let top = all.iter().map(|m| m.len()).max().unwrap_or(0);

    let mut faces: BTreeSet<Vec<u32>> = BTreeSet::new();
    for m in all.into_iter().filter(|m| m.len() == top) {
        // all nonempty subsets of each maximum matching
        let k = m.len();
        for mask in 1u64..(1 << k) {
            let sub: Vec<u32> = (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| m[i])
                .collect();
            faces.insert(sub);
            if faces.len() > budget {
                return Err(Error::FaceBudget {
                    budget,
                    partial: Vec::new(),
                });
            }
        }
    }
    let complex = SimplicialComplex::from_closed_faces(faces.into_iter().collect())?;
    Ok(MorseComplex {
        kind: MorseKind::Pure,
        base_hasse: h,
        complex,
    })
}

/// Closed-form f-vector of the Morse complex of the cycle graph on `n`
/// nodes, resolved against enumeration: the faces with `k` matched pairs are
/// the `k`-edge matchings of the `2n`-cycle, counted by
/// `(2n / (2n - k)) * C(2n - k, k)`, minus the two cyclic perfect matchings
/// at `k = n`.
#[derive(Clone, Debug)]
pub struct CircleFVector {
    pub n: u32,
    pub fvector: FVector,
    /// The index convention the closed form was pinned to.
    pub convention: &'static str,
}

pub const CIRCLE_FVECTOR_CONVENTION: &str = "f_{k-1} = (2n/(2n-k)) C(2n-k, k) \
     (k-edge matchings of the 2n-cycle), minus 2 at k = n";

pub fn circle_fvector_formula(n: u32) -> Result<CircleFVector> {
    if n < 3 {
        return Err(Error::CycleTooSmall(n));
    }
    let m = 2u128 * n as u128;
    let mut counts: Vec<u64> = Vec::new();
    for k in 1..=n as u128 {
        // m/(m-k) * C(m-k, k), an integer for k-matchings of an m-cycle
        let c = binomial_u128(m - k, k);
        let val = c * m / (m - k);
        debug_assert_eq!(val * (m - k), c * m);
        let val = if k == n as u128 { val - 2 } else { val };
        counts.push(u64::try_from(val).expect("circle f-vector fits in u64"));
    }
    while counts.last() == Some(&0) {
        counts.pop();
    }
    Ok(CircleFVector {
        n,
        fvector: FVector::new(counts),
        convention: CIRCLE_FVECTOR_CONVENTION,
    })
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
