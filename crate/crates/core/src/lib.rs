//! Exact local factors at good non-archimedean places for periods of
//! spherical Eisenstein series on rank-one orthogonal groups.
//!
//! The crate has two independent halves that are played against each other:
//!
//! * [`formulas`] evaluates the closed forms — the counting generating
//!   functions `X^n(beta; rho)`, the integrals `Pi^n(alpha, beta)`, local
//!   periods, Weil local zeta functions, and the constant-term factor — as
//!   exact rational functions of `a = q^(-alpha)` and `z = q^(-beta)` built
//!   on the symbolic layer in [`algebra`].
//! * [`oracle`] counts solutions of quadratic congruences over `Z/p^l` by
//!   brute-force enumeration and convolution, producing the same quantities
//!   as exact coefficient tables.
//!
//! [`verify`] compares the two over a parameter grid; [`local`] models good
//! places and the isomorphism classes of quadratic forms on them.
//!
//! All arithmetic is exact; no floating point appears anywhere.

pub mod algebra;
pub mod error;
pub mod formulas;
pub mod local;
pub mod oracle;
pub mod output;
pub mod verify;

pub use error::{Error, Result};
