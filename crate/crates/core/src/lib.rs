//! Exact integer combinatorics of k-Schur functions.
//!
//! The crate is organized around the bijection between k-bounded
//! partitions and (k+1)-cores:
//!
//! - [`shapes`]: partitions, hooks, residues, the core bijection,
//!   k-conjugation, strips and admissible pairs.
//! - [`tableaux`]: k-tableaux (straight, skew, transposed), two
//!   enumeration engines, restriction, entry classification, admissible
//!   chains, and k-Kostka numbers.
//! - [`involutions`]: the weight-permuting involution on k-tableaux and
//!   the sign-reversing involution on two-letter fillings.
//! - [`symfunc`]: symmetric-function arithmetic over h, e, Schur and
//!   k-Schur bases; Kostka matrices and their exact integer inverses;
//!   Pieri operators; the omega involution; k-rectangle products.
//! - [`verify`]: exhaustive desk-scale property sweeps used by the test
//!   suite and the `verify` CLI subcommand.
//!
//! All arithmetic on counts and coefficients is checked 64-bit integer
//! arithmetic; overflow is an error, never a wrap.

pub mod error;
pub mod involutions;
pub mod shapes;
pub mod symfunc;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use shapes::{Cell, Composition, Partition, SkewShape};
pub use tableaux::{KTableau, TableauMode};
