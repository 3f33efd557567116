//! Exact computation of graded decomposition numbers of q-Schur algebras at
//! an e-th root of unity, by two independent routes:
//!
//! * the deformed Fock space: the LLT algorithm for canonical basis elements
//!   of e-restricted columns, extended to all columns through the hat/tilde
//!   partition transform and the shift statistic;
//! * exact matrix models of Hecke algebras: Murphy's cellular basis, graded
//!   Specht modules with their Khovanov-Lauda (KLR) generator matrices, and
//!   graded characters of the simple heads.
//!
//! Everything is computed over Q(zeta_e) and Z[v, v^-1]; there is no
//! floating point anywhere.

pub mod combinatorics;
pub mod error;
pub mod exactmath;
pub mod fock;
pub mod hecke;

pub use error::{Error, Result};
