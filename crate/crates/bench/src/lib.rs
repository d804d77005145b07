//! Shared fixtures for the benchmark targets.

use morse_core::complex::SimplicialComplex;
use morse_core::morse_complex::{discrete_morse_complex, DEFAULT_FACE_BUDGET};

pub fn simplex(d: usize) -> SimplicialComplex {
    SimplicialComplex::simplex(d)
}

pub fn cycle(n: u32) -> SimplicialComplex {
    SimplicialComplex::cycle_graph(n).expect("n >= 3")
}

/// The Morse complex of the 3-simplex, the largest standing instance.
pub fn morse_of_tetrahedron() -> SimplicialComplex {
    discrete_morse_complex(&simplex(3), DEFAULT_FACE_BUDGET, 1)
        .expect("within budget")
        .complex()
        .clone()
}
