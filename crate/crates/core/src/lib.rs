//! Complete elliptic integrals of the first kind, the sharp logarithmic
//! bounds attached to them, and machinery that certifies the underlying
//! monotonicity/convexity claims: exact rational recurrences for every
//! coefficient sequence, certified sign analysis for power series, and
//! dense grid sweeps with explicit error accounting.

pub mod bounds;
pub mod coeffseq;
pub mod elliptic;
pub mod error;
pub mod exact;
pub mod gamma;
pub mod grid;
pub mod hypergeom;
pub mod real;
pub mod signcheck;
pub mod verify;

pub use error::{Error, Result};
pub use real::{Dd, Precision, Real};
