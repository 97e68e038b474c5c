//! Canonical and dual canonical bases on mixed tensor spaces `V^{⊗m} ⊗ W^{⊗n}`
//! for quantum `gl_∞`, computed exactly over `Z[q, q^-1]`.
//!
//! The usual entry point is [`Engine`], which owns the memoised bar
//! involutions and canonical elements and is shared by every solver.

pub mod bilinear;
pub mod canonical;
pub mod engine;
mod error;
pub mod fock;
pub mod io;
pub mod laurent;
pub mod order;
pub mod registry;
pub mod rmatrix;
pub mod suites;
pub mod transport;

pub use engine::Engine;
pub use error::{Error, Result};
pub use fock::FockVector;
pub use laurent::{Coeff, LaurentPoly};
pub use order::{WeightFunction, ZeroOneSequence};
