//! Exact symbolic substrate: rationals, bivariate polynomials and rational
//! functions in `a = q^(-alpha)` and `z = q^(-beta)`, truncated series, and
//! geometric sums over the valuation parameter `T`.

pub mod exponent;
pub mod exppoly;
pub mod poly;
pub mod rat;
pub mod ratfun;
pub mod series;

pub use exponent::ExponentForm;
pub use exppoly::{ExpPolyT, ExpTerm};
pub use poly::{Monomial2, Poly2, Var};
pub use rat::{rat, rat_int, rat_pow, Rat};
pub use ratfun::RatFun2;
pub use series::Series2;
