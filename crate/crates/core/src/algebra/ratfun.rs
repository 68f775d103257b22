//! Rational functions in the two formal variables `a = q^(-alpha)` and
//! `z = q^(-beta)`.
//!
//! Every value is kept in *origin-normal form*: common monomial factors of
//! numerator and denominator are cancelled and the denominator is rescaled
//! so its constant term equals 1.  That makes the power-series expansion at
//! the origin well defined and gives a decidable equality by
//! cross-multiplication; no polynomial gcd is ever needed.

use std::fmt;

use num_traits::{One, Zero};

use super::poly::{Poly2, Var};
use super::rat::Rat;
use super::series::Series2;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct RatFun2 {
    num: Poly2,
    den: Poly2,
}

impl RatFun2 {
    /// Build `num/den` in origin-normal form.
    pub fn new(num: Poly2, den: Poly2) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFun2 {
                num: Poly2::zero(),
                den: Poly2::one(),
            });
        }
        // Cancel common powers of a and of z.
        let ia = num.min_dega().min(den.min_dega());
        let jz = num.min_degz().min(den.min_degz());
        let (mut num, mut den) = if ia > 0 || jz > 0 {
            (num.shift_down(ia, jz), den.shift_down(ia, jz))
        } else {
            (num, den)
        };
        let c = den.constant_term();
        if c.is_zero() {
            return Err(Error::PoleAtOrigin);
        }
        if !c.is_one() {
            let inv = Rat::one() / c;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        if num == den {
            return Ok(RatFun2::one());
        }
        Ok(RatFun2 { num, den })
    }

    pub fn from_poly(p: Poly2) -> Self {
        RatFun2 {
            num: p,
            den: Poly2::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly2::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly2::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(Poly2::constant(c))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(Poly2::var(v))
    }

    pub fn num(&self) -> &Poly2 {
        &self.num
    }

    pub fn den(&self) -> &Poly2 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &RatFun2::one()
    }

    /// True when neither numerator nor denominator involves `a`.
    pub fn is_z_only(&self) -> bool {
        self.num.is_z_only() && self.den.is_z_only()
    }

    pub fn add(&self, rhs: &RatFun2) -> RatFun2 {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFun2::new(num, den).expect("denominator stays unital")
    }

    pub fn sub(&self, rhs: &RatFun2) -> RatFun2 {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFun2::new(num, den).expect("denominator stays unital")
    }

    pub fn mul(&self, rhs: &RatFun2) -> RatFun2 {
        RatFun2::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("denominator stays unital")
    }

    pub fn neg(&self) -> RatFun2 {
        RatFun2 {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn div(&self, rhs: &RatFun2) -> Result<RatFun2> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFun2::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn pow(&self, e: u32) -> RatFun2 {
        let mut acc = RatFun2::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Replace `var` by the monomial `c * a^ia * z^jz` and renormalize.
    pub fn substitute_monomial(&self, var: Var, c: &Rat, ia: u32, jz: u32) -> Result<RatFun2> {
        if c.is_zero() {
            return Err(Error::ZeroSubstitution);
        }
        let num = self.num.substitute_monomial(var, c, ia, jz);
        let den = self.den.substitute_monomial(var, c, ia, jz);
        RatFun2::new(num, den)
    }

    /// Specialize `z = 1`, cancelling spurious `1 - z` factors first.
    ///
    /// The summed generating functions can carry a common `1 - z` factor in
    /// numerator and denominator; it is removed exactly before evaluating.
    /// Errors when the denominator genuinely vanishes at `z = 1`.
    pub fn specialize_z_one(&self) -> Result<RatFun2> {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        while den.eval_z_one().is_zero() {
            match (num.divide_one_minus_z(), den.divide_one_minus_z()) {
                (Some(n), Some(d)) => {
                    num = n;
                    den = d;
                }
                _ => return Err(Error::SpecializationPole),
            }
        }
        RatFun2::new(num.eval_z_one(), den.eval_z_one())
    }

    /// Exact value at the point `(a, z)`.
    pub fn eval(&self, a: &Rat, z: &Rat) -> Result<Rat> {
        let d = self.den.eval(a, z);
        if d.is_zero() {
            return Err(Error::EvaluationPole);
        }
        Ok(self.num.eval(a, z) / d)
    }

    /// Power-series coefficients at the origin, exact, for `a`-degree
    /// `<= max_dega` and `z`-degree `<= max_degz`.
    pub fn series_expand(&self, max_dega: u32, max_degz: u32) -> Series2 {
        Series2::expand(&self.num, &self.den, max_dega, max_degz)
    }

    /// True when the value does not depend on `a`.
    ///
    /// Checked exactly: a rational function equals its own image under
    /// `a -> 2a` only if it is constant in `a`.
    pub fn is_independent_of_a(&self) -> bool {
        if self.num.is_z_only() && self.den.is_z_only() {
            return true;
        }
        let scaled = self
            .substitute_monomial(Var::A, &Rat::from_integer(2.into()), 1, 0)
            .expect("monomial image is nonzero");
        self == &scaled
    }
}

/// Equality as rational functions: `f = g` iff
/// `f.num * g.den - g.num * f.den` is the zero polynomial.
impl PartialEq for RatFun2 {
    fn eq(&self, other: &Self) -> bool {
        (&(&self.num * &other.den) - &(&other.num * &self.den)).is_zero()
    }
}

impl Eq for RatFun2 {}

impl fmt::Display for RatFun2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly2::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
