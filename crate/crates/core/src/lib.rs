//! Structured graph families and the algebraic checks that go with them.
//!
//! The crate builds hypercubes, their squares, Johnson graphs, cycles and
//! Cayley graphs over the elementary abelian group Z₂ⁿ, and verifies at
//! desk scale the properties that make the square of a hypercube
//! interesting: its automorphism group, distance-transitivity, intersection
//! array, integral spectrum, primitivity and line-graph exclusion,
//! connectivity and panconnectedness.
//!
//! Everything here is `no_std` with `alloc`; file formats, JSON and the
//! command-line tool live in the companion `drglab` crate.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod aut;
pub mod bitset;
pub mod connect;
pub mod drg;
mod error;
pub mod families;
pub mod graph;
pub mod group;
pub mod iso;
pub mod jacobi;
pub mod perm;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, DistanceRow, Graph, UNREACHABLE};
pub use perm::Permutation;

/// Binomial coefficient, exact; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::binomial;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(4096, 1), 4096);
    }
}
