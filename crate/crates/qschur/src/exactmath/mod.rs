//! Exact arithmetic: Laurent polynomials over Z, the cyclotomic field
//! Q(zeta_e), and dense exact linear algebra over it.

pub mod cyclo;
pub mod laurent;
pub mod matrix;

pub use cyclo::CycloNum;
pub use laurent::{quantum_factorial, quantum_integer, LaurentPoly};
pub use matrix::{CycloMatrix, Echelon, SpanSolver};
