//! Functions of a nonnegative integer `T` of the shape
//! `sum_i c_i(z) * r_i(z)^T`.
//!
//! The counting generating functions `X(beta; t^2)` all take this form with
//! `|t| = q^(-T)`.  Summing such a function against `a^T` over `T >= 0`
//! (the multiplicative integral over `t` with `meas{ord t = T} = 1`) turns
//! each term into `c_i(z) / (1 - a*r_i(z))`.

use super::poly::Var;
use super::rat::abs_at_most_one;
use super::ratfun::RatFun2;
use crate::error::Result;

/// One geometric term `c(z) * r(z)^T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpTerm {
    coeff: RatFun2,
    ratio: RatFun2,
}

impl ExpTerm {
    /// Both parts must be z-only, and the ratio's constant term must have
    /// absolute value at most 1 so the T-summation converges formally.
    pub fn new(coeff: RatFun2, ratio: RatFun2) -> ExpTerm {
        assert!(
            coeff.is_z_only() && ratio.is_z_only(),
            "terms must be z-only"
        );
        assert!(
            abs_at_most_one(&ratio.num().constant_term()),
            "ratio constant term must lie in the closed unit interval"
        );
        ExpTerm { coeff, ratio }
    }

    pub fn coeff(&self) -> &RatFun2 {
        &self.coeff
    }

    pub fn ratio(&self) -> &RatFun2 {
        &self.ratio
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpPolyT {
    terms: Vec<ExpTerm>,
}

impl ExpPolyT {
    pub fn new(terms: Vec<ExpTerm>) -> ExpPolyT {
        ExpPolyT { terms }
    }

    pub fn terms(&self) -> &[ExpTerm] {
        &self.terms
    }

    /// The value at a specific `T`, as a z-only rational function.
    pub fn eval_at(&self, t: u32) -> RatFun2 {
        let mut acc = RatFun2::zero();
        for term in &self.terms {
            acc = acc.add(&term.coeff.mul(&term.ratio.pow(t)));
        }
        acc
    }

    /// The part with ratio identically 1 (the `T -> infinity` limit when all
    /// other ratios decay).
    pub fn t_free_part(&self) -> RatFun2 {
        let one = RatFun2::one();
        let mut acc = RatFun2::zero();
        for term in &self.terms {
            if term.ratio == one {
                acc = acc.add(&term.coeff);
            }
        }
        acc
    }

    /// Multiply every coefficient by a fixed z-only factor.
    pub fn scale(&self, factor: &RatFun2) -> ExpPolyT {
        ExpPolyT {
            terms: self
                .terms
                .iter()
                .map(|t| ExpTerm::new(t.coeff.mul(factor), t.ratio.clone()))
                .collect(),
        }
    }

    /// Apply `z -> c * z^j` to every coefficient and ratio.
    pub fn substitute_z(&self, c: &super::rat::Rat, jz: u32) -> Result<ExpPolyT> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(ExpTerm::new(
                t.coeff.substitute_monomial(Var::Z, c, 0, jz)?,
                t.ratio.substitute_monomial(Var::Z, c, 0, jz)?,
            ));
        }
        Ok(ExpPolyT { terms })
    }

    /// `sum_{T>=0} a^T * self(T)` as a rational function of `(a, z)`.
    ///
    /// Each geometric term contributes `c_i / (1 - a*r_i)`; the denominator
    /// keeps constant term 1, so the result is always origin-normal.
    pub fn sum_over_t(&self) -> Result<RatFun2> {
        let a = RatFun2::var(Var::A);
        let mut acc = RatFun2::zero();
        for term in &self.terms {
            let den = RatFun2::one().sub(&a.mul(&term.ratio));
            acc = acc.add(&term.coeff.div(&den)?);
        }
        Ok(acc)
    }
}
