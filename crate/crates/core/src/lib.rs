//! Exact-arithmetic toolkit for tilt stability on a polarized fourfold.
//!
//! The default setting is a smooth cubic fourfold `Y ⊂ P^5` with hyperplane
//! class `H` and `H^4 = 3`. Chern characters are stored as rational vectors in
//! the `H^k` basis, truncated characters `(ch_0, ch_1, ch_2)` live in the rank
//! three lattice of [`chern::TruncatedClass`], and every comparison is done in
//! exact rationals. Floating point only appears when an SVG is serialized.
//!
//! Module map:
//!
//! - [`chern`]: characters, twists, duals, truncation.
//! - [`riemannroch`]: Todd class, Euler characteristics and pairings, Hilbert polynomials.
//! - [`tilt`]: the slopes `mu_beta`, `nu_{alpha,beta}` and the discriminant.
//! - [`walls`]: numerical walls in the `(beta, alpha)` half-plane.
//! - [`destab`]: certified enumeration of destabilizing classes.
//! - [`kuznetsov`]: formal K-classes, mutations, projection, Mukai lattice.
//! - [`catalog`]: named sheaves on the cubic fourfold and their constructions.
//! - [`checks`]: a registry of named verification checks.
//! - [`plot`]: SVG rendering of wall diagrams.

pub mod catalog;
pub mod checks;
pub mod chern;
pub mod destab;
pub mod error;
pub mod kuznetsov;
pub mod plot;
pub mod rational;
pub mod riemannroch;
pub mod series;
pub mod surd;
pub mod tilt;
pub mod walls;

pub use error::{Error, Result};
pub use rational::Q;
