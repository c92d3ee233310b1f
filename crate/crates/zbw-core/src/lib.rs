//! Worldline dynamics of a quasi-classical spinning particle in curved
//! (pseudo)Riemannian space.
//!
//! The library is organised around a second-order parameter-invariant
//! variational problem with Lagrangian `L = (k² + A)·√γ`, where `k` is the
//! first Frenet curvature of the worldline and `γ = u·u`. Its canonical
//! (Ostrohrads'kyj) counterpart evolves the state `(x, u, π, π¹)` under the
//! Hamilton function `𝔥 = π·u + (γ^{3/2}/4)·π¹·π¹ − A·√γ`. Composing the spin
//! bivector `S = u ∧ π¹` out of the canonical variables reproduces the Dixon
//! momentum/spin evolution equations, and in flat space the natural-parameter
//! form of the dynamics reduces to the classic fourth-order "Zitterbewegung"
//! (quiver) equation with frequency `ω = √(3k₀²/2 − A/2)` on the manifold
//! `k = k₀`.
//!
//! Module map:
//! - [`geometry`]: metric catalog, Christoffel symbols, curvature tensor
//!   (with finite-difference oracles), covariant rates, Hodge duals.
//! - [`lagrangian`]: covariant jets, scalar invariants, the Lagrangian,
//!   Zermelo residuals and the closed-form Legendre map.
//! - [`hamiltonian`]: the concrete Hamilton function, canonical equations,
//!   gauge choices, and lifting of initial data.
//! - [`dixon`]: spin bivectors, the σ spin vector, Dixon/Mathisson residual
//!   verifiers, and the quiver frequency formulas.
//! - [`dynamics`]: RK4 / RKF45 steppers, the two trajectory engines, the
//!   closed-form flat-space reference solution, per-sample diagnostics.

pub mod dixon;
pub mod dynamics;
pub mod error;
pub mod geometry;
pub mod hamiltonian;
pub mod lagrangian;

mod linalg;

pub use error::{Error, Result};
