//! Element-order spectra of symmetric and alternating groups, their largest
//! element orders, Gruenberg–Kegel prime graphs, and a harness that checks
//! the arithmetic behind recognizing `A_n` by its order and largest element
//! order.
//!
//! Modules, bottom up:
//!
//! - [`arith`]: primes, factored naturals, exact comparison, `n!/2`.
//! - [`spectrum`]: membership, enumeration, Landau values and `m1` by DP.
//! - [`primegraph`]: prime graphs and their independent sets.
//! - [`groupdata`]: the embedded reference table and exceptional groups.
//! - [`verifier`]: table re-derivation, range sweeps and case replay.
//! - [`cli`]: the `altrec` command line.

pub mod arith;
pub mod cli;
pub mod error;
pub mod groupdata;
pub mod primegraph;
pub mod spectrum;
pub mod verifier;

pub use arith::Factorization;
pub use error::{Error, Result};
pub use spectrum::{Family, GroupFamilyPoint, OrderSet};
