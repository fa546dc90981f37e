//! Exact newform Whittaker values on the diagonal torus of `GL(n)` over a
//! non-archimedean local field.
//!
//! Values are computed in closed form as `δ_B^{1/2}(ϖ^f) s_f(α)` from the
//! Satake parameters `α` (inverse roots of the local L-factor), and checked
//! against the Hecke difference equations, an exact linear solve of those
//! equations, the zeta integral `Z(s, W) = L(s, π)`, and a finite-ring
//! enumeration of the Hecke coset decomposition.
//!
//! All arithmetic is exact. Half-integral powers of `q` are carried by the
//! formal variable `v` with `v^2 = q`.

pub mod cli;
pub mod coset;
pub mod error;
pub mod linalg;
pub mod scalar;
pub mod symfunc;
pub mod whittaker;
pub mod zeta;

pub use error::{Error, Result};
pub use scalar::{LaurentScalar, Rational, TruncSeries, XPoly};
pub use symfunc::{SatakeParams, Signature};
