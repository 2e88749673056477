//! Exact computations for unitary highest weight modules of u(p,q|n).
//!
//! - [`superweights`]: weights, ρ, dominance, partitions and λ♭.
//! - [`superalgebra`]: matrix units, brackets, star-operations, Killing form.
//! - [`classifier`]: the U1–U6 test and its companions.
//! - [`verma`]: Gram matrices of Verma modules and exact PSD checks.
//! - [`oscillator`]: the polynomial model of (gl_d, gl(p+q|n)) Howe duality.

pub mod catalog;
pub mod classifier;
pub mod error;
pub mod linalg;
pub mod oscillator;
pub mod rational;
pub mod sampling;
pub mod superalgebra;
pub mod superweights;
pub mod verma;

pub use error::{Error, Result};
pub use rational::Rational;
pub use superweights::{GeneralizedPartition, Signature, ThetaShift, Weight};
