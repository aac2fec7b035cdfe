//! The s-shifted factorial `(z)_{s;t} = z (z+s) ... (z+(t-1)s)` and its continuation to
//! complex `t`, with generalized Vandermonde determinants ([`detform`]), sums over arithmetic
//! progressions ([`apsum`]) and determinant moments of unitary random-matrix ensembles
//! ([`rmtpdd`]) built on it.
//!
//! Every closed form has an independent second route, and [`selftest`] compares the two.
//! The guide in `book/` walks through each module; its snippets are compiled and run as
//! doctests of this crate.

pub mod error;
pub mod numkernel;
pub mod sfact;
pub mod detform;
pub mod apsum;
pub mod rmtpdd;
pub mod selftest;

pub use error::{Error, PoleError, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    mod scalars {}
    #[doc = include_str!("../../../book/src/shifted-factorial.md")]
    mod shifted_factorial {}
    #[doc = include_str!("../../../book/src/determinants.md")]
    mod determinants {}
    #[doc = include_str!("../../../book/src/progression-sums.md")]
    mod progression_sums {}
    #[doc = include_str!("../../../book/src/random-matrices.md")]
    mod random_matrices {}
    #[doc = include_str!("../../../book/src/self-test.md")]
    mod self_test {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    mod command_line {}
}
