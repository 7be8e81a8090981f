//! Exact computation of generalized Stirling numbers, generalized Bell
//! polynomials, and higher-order r-Dowling polynomials.
//!
//! Everything exact lives on arbitrary-precision integers and rationals:
//! triangles come from three independent routes (recurrence, explicit
//! alternating sum, EGF coefficients), polynomial identities are checked
//! coefficient-wise in the indeterminates `x` and `λ`, and brute-force
//! enumeration of the underlying combinatorial models provides ground truth
//! at small sizes. Floating point appears only in the quadrature module,
//! which validates the integral representations numerically.

pub mod asymptotics;
pub mod bipoly;
pub mod dowling;
pub mod error;
pub mod exact;
pub mod gbell;
pub mod gstirling;
pub mod hurwitz;
pub mod oracle;
pub mod quadrature;
pub mod report;

pub use error::{Error, Result};
