//! The quasi-R-matrix `Θ^(k)` and the bar involution built from it.
//!
//! On a tensor product whose right (or left) factor is a single `V` or `W`,
//! every divided power `E^(r) ⊗ F^(r)` with `r ≥ 2` acts by zero, so each
//! factor of `Θ^(k)` reduces to `1 + (q - q^-1) Eβ_t ⊗ Fβ_t` and all
//! arithmetic stays integral.

mod bar;
mod expr;
mod theta;

pub use bar::{BarInvolution, Peel};
pub use expr::{braid_t, UExpression};
pub use theta::{is_reduced_longest, RootPair, ThetaFactorization, ThetaRecord, WordScheme};
