//! Stable structured representations of the computed quantities.
//!
//! Exact rationals are always rendered as `"numer/denom"` strings (plain
//! `"numer"` when the denominator is 1); rational functions as numerator and
//! denominator monomial lists `[coeff, dega, degz]` in canonical term order.
//! Serialization order is fixed by the struct definitions, so identical
//! inputs produce byte-identical output.

use serde::Serialize;

use crate::algebra::rat::{rat_to_string, Rat};
use crate::algebra::ratfun::RatFun2;
use crate::algebra::series::Series2;
use crate::formulas::{ConstantTerm, LocalFactorReport};

#[derive(Debug, Clone, Serialize)]
pub struct RatFunDto {
    pub num: Vec<(String, u32, u32)>,
    pub den: Vec<(String, u32, u32)>,
}

impl From<&RatFun2> for RatFunDto {
    fn from(f: &RatFun2) -> Self {
        let encode = |p: &crate::algebra::poly::Poly2| {
            p.monomials()
                .map(|m| (rat_to_string(&m.coeff), m.dega, m.degz))
                .collect()
        };
        RatFunDto {
            num: encode(f.num()),
            den: encode(f.den()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesDto {
    pub max_dega: u32,
    pub max_degz: u32,
    /// Row `i` holds the coefficients of `a^i z^j` for `j = 0..=max_degz`.
    pub coeffs: Vec<Vec<String>>,
}

impl From<&Series2> for SeriesDto {
    fn from(s: &Series2) -> Self {
        SeriesDto {
            max_dega: s.max_dega(),
            max_degz: s.max_degz(),
            coeffs: s
                .rows()
                .iter()
                .map(|row| row.iter().map(rat_to_string).collect())
                .collect(),
        }
    }
}

pub fn rat_list(rs: &[Rat]) -> Vec<String> {
    rs.iter().map(rat_to_string).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct PeriodDto {
    pub raw: RatFunDto,
    pub normalized: RatFunDto,
    pub adjusted: RatFunDto,
    pub constant_ratio: RatFunDto,
}

impl From<&LocalFactorReport> for PeriodDto {
    fn from(r: &LocalFactorReport) -> Self {
        PeriodDto {
            raw: (&r.raw).into(),
            normalized: (&r.normalized).into(),
            adjusted: (&r.adjusted).into(),
            constant_ratio: (&r.constant_ratio).into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstantTermDto {
    /// Exponent of `|lambda|` on the prefactor, as `c0 + ca*alpha + cb*beta`.
    pub lambda_exponent: crate::algebra::exponent::ExponentForm,
    pub factor: RatFunDto,
}

impl From<&ConstantTerm> for ConstantTermDto {
    fn from(c: &ConstantTerm) -> Self {
        ConstantTermDto {
            lambda_exponent: c.lambda_exponent,
            factor: (&c.factor).into(),
        }
    }
}

/// Canonical JSON rendering used for reports and baselines.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serializable");
    out.push('\n');
    out
}
