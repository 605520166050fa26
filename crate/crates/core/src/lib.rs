//! Exact algebra of second-order frame bundles over the chart `ℝⁿ`.
//!
//! - [`rational`], [`matrix`], [`bilinear`]: exact scalars, invertible
//!   matrices and bilinear maps `ℝⁿ × ℝⁿ → ℝⁿ`.
//! - [`groups`]: the jet groups `G̃²`, `Ĝ²`, `G²`, `G̃²₁`, `G̃²₂`, `T¹ₙL¹ₙ` and
//!   two further laws on `G¹ × L₂`, with quotients and isomorphisms.
//! - [`frames`]: non-holonomic, semi-holonomic and holonomic frames, their
//!   right actions and the projections between frame bundles.
//! - [`jets`]: truncated second-order Taylor calculus, used as an independent
//!   check of the group laws and frame actions.

pub mod bilinear;
pub mod error;
pub mod frames;
pub mod groups;
pub mod jets;
pub mod matrix;
pub mod random;
pub mod rational;

pub use bilinear::Bilinear;
pub use error::{Error, Result};
pub use matrix::{GlMatrix, SquareMatrix};
pub use rational::Rational;
