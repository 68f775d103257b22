//! Closed forms for the local quantities: zeta and L factors, the counting
//! generating functions `X^n(beta; t^2)` and `X^n(beta; 0)`, the double
//! integrals `Pi^n(alpha, beta)`, local periods, Weil local zeta functions,
//! the unramified Hecke shift, and the constant-term factor.
//!
//! Conventions: `a = q^(-alpha)`, `z = q^(-beta)`, `|t| = q^(-T)`, and
//! `alpha = (n+1)s`.  Everything is an exact rational function of `(a, z)`
//! with `q` a fixed exact rational carried by the [`GoodPlace`].
//!
//! The generating functions for dimensions 0, 1, 2 are built directly; for
//! `n > 2` the form splits off hyperbolic planes and
//! `X^(n+2k)(beta; rho) = Z(beta+1)/Z(beta+k+1) * X^n(beta+k; rho)`,
//! which shifts `z -> z*q^(-k)` and multiplies by an explicit prefactor.
//! `Pi` is always assembled constructively by summing the generating
//! function against `a^T`; the factored displays are provided separately so
//! the two routes can be compared.

use crate::algebra::exponent::ExponentForm;
use crate::algebra::exppoly::{ExpPolyT, ExpTerm};
use crate::algebra::poly::{Poly2, Var};
use crate::algebra::rat::Rat;
use crate::algebra::ratfun::RatFun2;
use crate::error::{Error, Result};
use crate::local::{make_shape, GoodPlace, Sign};

/// `1 - c * a^ia * z^jz`
fn one_minus_mono(c: Rat, ia: u32, jz: u32) -> Poly2 {
    &Poly2::one() - &Poly2::monomial(c, ia, jz)
}

fn require_admissible(n: u32, place: &GoodPlace) -> Result<()> {
    make_shape(n, place.epsilon()).map(|_| ())
}

/// The local zeta factor `Z(e) = 1/(1 - q^(-e))` for an exponent form `e`.
pub fn zeta_z(e: ExponentForm, place: &GoodPlace) -> Result<RatFun2> {
    scaled_zeta(e, place, Sign::Plus)
}

/// The quadratic L-factor `L(e, chi) = 1/(1 - epsilon*q^(-e))`, with
/// `epsilon` taken from the place.
pub fn l_factor(e: ExponentForm, place: &GoodPlace) -> Result<RatFun2> {
    scaled_zeta(e, place, place.epsilon())
}

/// The quadratic-extension factor `Z(e) * L(e, chi)`.
pub fn zeta_quad_ext(e: ExponentForm, place: &GoodPlace) -> Result<RatFun2> {
    Ok(zeta_z(e, place)?.mul(&l_factor(e, place)?))
}

fn scaled_zeta(e: ExponentForm, place: &GoodPlace, sign: Sign) -> Result<RatFun2> {
    if e.is_zero() {
        return Err(Error::ZeroExponent);
    }
    if e.ca < 0 {
        return Err(Error::NegativeDegree(e.ca));
    }
    if e.cb < 0 {
        return Err(Error::NegativeDegree(e.cb));
    }
    let coeff = place.q_pow(-e.c0) * sign.as_rat();
    RatFun2::new(
        Poly2::one(),
        one_minus_mono(coeff, e.ca as u32, e.cb as u32),
    )
}

/// `X^n(beta; t^2)` as a function of `T` (with `|t| = q^(-T)`), as a sum of
/// geometric terms `c_i(z) * r_i(z)^T`.
pub fn x_exp_poly(n: u32, place: &GoodPlace) -> Result<ExpPolyT> {
    require_admissible(n, place)?;
    let q_inv = place.q_pow(-1);
    let eps = place.epsilon().as_rat();
    match n {
        0 => {
            // (1 - z^(2T+1))/(1 - z) = 1/(1-z) - z/(1-z) * (z^2)^T
            let den = one_minus_mono(Rat::from_integer(1.into()), 0, 1);
            let c1 = RatFun2::new(Poly2::one(), den.clone())?;
            let c2 = RatFun2::new(-&Poly2::var(Var::Z), den)?;
            let r2 = RatFun2::from_poly(Poly2::monomial(Rat::from_integer(1.into()), 0, 2));
            Ok(ExpPolyT::new(vec![
                ExpTerm::new(c1, RatFun2::one()),
                ExpTerm::new(c2, r2),
            ]))
        }
        1 => {
            // (1+w)/(1-u) * [1 - (u - eps*w)/(1 - eps*w) * u^T]
            // with w = z/q, u = z^2/q.
            let w = Poly2::monomial(q_inv.clone(), 0, 1);
            let u = Poly2::monomial(q_inv, 0, 2);
            let one_plus_w = &Poly2::one() + &w;
            let one_minus_u = &Poly2::one() - &u;
            let one_minus_eps_w = &Poly2::one() - &w.scale(&eps);
            let c1 = RatFun2::new(one_plus_w.clone(), one_minus_u.clone())?;
            let c2 = RatFun2::new(
                -&(&one_plus_w * &(&u - &w.scale(&eps))),
                &one_minus_u * &one_minus_eps_w,
            )?;
            let r2 = RatFun2::from_poly(u);
            Ok(ExpPolyT::new(vec![
                ExpTerm::new(c1, RatFun2::one()),
                ExpTerm::new(c2, r2),
            ]))
        }
        2 => {
            // c * (1 - eps * w^(2T+1)) with
            // c = (1 - eps*w/q) / ((1-w)(1-eps*w)) and w = z/q.
            let w = Poly2::monomial(q_inv.clone(), 0, 1);
            let c = RatFun2::new(
                &Poly2::one() - &w.scale(&(&eps * &q_inv)),
                &(&Poly2::one() - &w) * &(&Poly2::one() - &w.scale(&eps)),
            )?;
            let c2 = c.mul(&RatFun2::from_poly(-&w.scale(&eps)));
            let r2 = RatFun2::from_poly(Poly2::monomial(&q_inv * &q_inv, 0, 2));
            Ok(ExpPolyT::new(vec![
                ExpTerm::new(c, RatFun2::one()),
                ExpTerm::new(c2, r2),
            ]))
        }
        _ => {
            let base = 2 - n % 2;
            let k = (n - base) / 2;
            let shifted = x_exp_poly(base, place)?.substitute_z(&place.q_pow(-(k as i64)), 1)?;
            Ok(shifted.scale(&plane_prefactor(k, place)))
        }
    }
}

/// `Z(beta+1)/Z(beta+k+1) = (1 - z*q^(-k-1)) / (1 - z*q^(-1))`, the factor
/// introduced by splitting off `k` hyperbolic planes.
fn plane_prefactor(k: u32, place: &GoodPlace) -> RatFun2 {
    RatFun2::new(
        one_minus_mono(place.q_pow(-(k as i64) - 1), 0, 1),
        one_minus_mono(place.q_pow(-1), 0, 1),
    )
    .expect("unit constant term")
}

/// `X^n(beta; 0)`: the generating function of the measures of
/// `B = 0 mod varpi^l`.
pub fn x_at_zero(n: u32, place: &GoodPlace) -> Result<RatFun2> {
    require_admissible(n, place)?;
    let one = Rat::from_integer(1.into());
    if n == 0 {
        return RatFun2::new(Poly2::one(), one_minus_mono(one, 0, 1));
    }
    let eps = place.epsilon().as_rat();
    if n % 2 == 1 {
        // (1 - z^2 q^(-n-1)) / ((1 - z/q)(1 - z^2 q^(-n)))
        RatFun2::new(
            one_minus_mono(place.q_pow(-(n as i64) - 1), 0, 2),
            &one_minus_mono(place.q_pow(-1), 0, 1)
                * &one_minus_mono(place.q_pow(-(n as i64)), 0, 2),
        )
    } else {
        // (1 - eps z q^(-n/2-1)) / ((1 - z/q)(1 - eps z q^(-n/2)))
        let half = (n / 2) as i64;
        RatFun2::new(
            one_minus_mono(&eps * &place.q_pow(-half - 1), 0, 1),
            &one_minus_mono(place.q_pow(-1), 0, 1)
                * &one_minus_mono(&eps * &place.q_pow(-half), 0, 1),
        )
    }
}

/// `Pi^n(alpha, beta)`, assembled constructively: the generating function
/// `X^n(beta; t^2)` summed against `a^T` over the valuation `T` of `t`.
pub fn pi(n: u32, place: &GoodPlace) -> Result<RatFun2> {
    x_exp_poly(n, place)?.sum_over_t()
}

/// The factored display of `Pi^n(alpha, beta)` in zeta and L factors
/// (for `n > 2`, the hyperbolic reduction applied to the base display).
pub fn pi_display(n: u32, place: &GoodPlace) -> Result<RatFun2> {
    require_admissible(n, place)?;
    let e = ExponentForm::new;
    match n {
        // Z(a) Z(a+b) Z(a+2b) / Z(2a+2b)
        0 => zeta_z(e(0, 1, 0), place)?
            .mul(&zeta_z(e(0, 1, 1), place)?)
            .mul(&zeta_z(e(0, 1, 2), place)?)
            .div(&zeta_z(e(0, 2, 2), place)?),
        // Z(a) Z_ext(b+1) Z(a+2b+1) / (Z(2b+2) L(a+b+1))
        1 => zeta_z(e(0, 1, 0), place)?
            .mul(&zeta_quad_ext(e(1, 0, 1), place)?)
            .mul(&zeta_z(e(1, 1, 2), place)?)
            .div(&zeta_z(e(2, 0, 2), place)?)?
            .div(&l_factor(e(1, 1, 1), place)?),
        // Z(a) Z(b+1) Z(a+2b+2) L(a+b+1) / (L(b+2) Z(2a+2b+2))
        2 => zeta_z(e(0, 1, 0), place)?
            .mul(&zeta_z(e(1, 0, 1), place)?)
            .mul(&zeta_z(e(2, 1, 2), place)?)
            .mul(&l_factor(e(1, 1, 1), place)?)
            .div(&l_factor(e(2, 0, 1), place)?)?
            .div(&zeta_z(e(2, 2, 2), place)?),
        _ => {
            let base = 2 - n % 2;
            let k = (n - base) / 2;
            let inner = pi_display(base, place)?.substitute_monomial(
                Var::Z,
                &place.q_pow(-(k as i64)),
                0,
                1,
            )?;
            Ok(plane_prefactor(k, place).mul(&inner))
        }
    }
}

/// The local period factor in its several normalizations.
///
/// `raw` is `Pi^n(alpha - n, 0)`; `normalized` divides by `phi(1) = Z(alpha)`;
/// `adjusted` is the display with the `s`-independent convergence factors
/// dropped; and `constant_ratio = adjusted / normalized` records exactly the
/// constant that was dropped (it never involves `a`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalFactorReport {
    pub raw: RatFun2,
    pub normalized: RatFun2,
    pub adjusted: RatFun2,
    pub constant_ratio: RatFun2,
}

/// The local period at a good place, for `H = O(n+2)` inside `G = O(n+3)`.
pub fn local_period(n: u32, place: &GoodPlace) -> Result<LocalFactorReport> {
    local_period_shifted(n, place, 0)
}

/// The local period with `alpha` shifted to `alpha + beta0` throughout,
/// i.e. the period of the Eisenstein series twisted by the unramified
/// character `|.|^beta0` at this place.
pub fn local_period_shifted(n: u32, place: &GoodPlace, beta0: i64) -> Result<LocalFactorReport> {
    let e = |c0: i64, ca: i64| ExponentForm::new(c0, ca, 0).shift_alpha(beta0);
    let z_alpha = zeta_z(e(0, 1), place)?;

    if n == 0 && place.epsilon() == Sign::Minus {
        // The ambient plane is anisotropic (no generating function exists):
        // the quotient is compact with normalized volume 1, so the period
        // is 1 without any integral.
        let adjusted = zeta_quad_ext(e(0, 1), place)?.div(&zeta_z(e(0, 2), place)?)?;
        let normalized = RatFun2::one();
        let constant_ratio = adjusted.div(&normalized)?;
        return Ok(LocalFactorReport {
            raw: z_alpha,
            normalized,
            adjusted,
            constant_ratio,
        });
    }
    require_admissible(n, place)?;

    // Pi(alpha + beta0 - n, 0): shift alpha, set beta = 0 (z -> 1), then
    // replace alpha by alpha - n (a -> a*q^n).
    let shifted = hecke_shift(&pi(n, place)?, beta0, place)?;
    let raw =
        shifted
            .specialize_z_one()?
            .substitute_monomial(Var::A, &place.q_pow(n as i64), 1, 0)?;
    let normalized = raw.div(&z_alpha)?;

    let adjusted = if n == 0 {
        // Z_ext(alpha) / Z(2*alpha)
        zeta_quad_ext(e(0, 1), place)?.div(&zeta_z(e(0, 2), place)?)?
    } else if n % 2 == 1 {
        // Z(alpha - n) / L(alpha - (n-1)/2)
        let k = ((n - 1) / 2) as i64;
        zeta_z(e(-(n as i64), 1), place)?.div(&l_factor(e(-k, 1), place)?)?
    } else {
        // Z(alpha - n) L(alpha - n/2) / Z(2*alpha - n)
        let half = (n / 2) as i64;
        zeta_z(e(-(n as i64), 1), place)?
            .mul(&l_factor(e(-half, 1), place)?)
            .div(&zeta_z(e(-(n as i64), 2), place)?)?
    };
    let constant_ratio = adjusted.div(&normalized)?;
    Ok(LocalFactorReport {
        raw,
        normalized,
        adjusted,
        constant_ratio,
    })
}

/// The Weil local zeta integral `int_{o^n} |B(x)|^beta dx`, computed from
/// `X = X^n(beta; 0)` through the identity
/// `(1 - q^beta) X + q^beta = ((z-1) X + 1)/z`.
pub fn weil_zeta(n: u32, place: &GoodPlace) -> Result<RatFun2> {
    if n == 0 {
        return Err(Error::InadmissiblePair {
            n,
            epsilon: place.epsilon().as_i32(),
        });
    }
    let x = x_at_zero(n, place)?;
    let z = Poly2::var(Var::Z);
    let z_minus_one = &z - &Poly2::one();
    let num = &(&z_minus_one * x.num()) + x.den();
    let den = &z * x.den();
    RatFun2::new(num, den)
}

/// The factored display of the Weil local zeta integral.
pub fn weil_zeta_display(n: u32, place: &GoodPlace) -> Result<RatFun2> {
    if n == 0 {
        return Err(Error::InadmissiblePair {
            n,
            epsilon: place.epsilon().as_i32(),
        });
    }
    require_admissible(n, place)?;
    let one = Rat::from_integer(1.into());
    let q_inv = place.q_pow(-1);
    let unit_mass = Poly2::constant(&one - &q_inv); // 1 - 1/q
    if n % 2 == 1 {
        // (1 - z q^(-n))(1 - 1/q) / ((1 - z/q)(1 - z^2 q^(-n)))
        RatFun2::new(
            &one_minus_mono(place.q_pow(-(n as i64)), 0, 1) * &unit_mass,
            &one_minus_mono(q_inv, 0, 1) * &one_minus_mono(place.q_pow(-(n as i64)), 0, 2),
        )
    } else {
        // (1 - eps q^(-n/2))(1 - 1/q) / ((1 - z/q)(1 - eps z q^(-n/2)))
        let eps = place.epsilon().as_rat();
        let half = (n / 2) as i64;
        let const_factor = Poly2::constant(&one - &(&eps * &place.q_pow(-half)));
        RatFun2::new(
            &const_factor * &unit_mass,
            &one_minus_mono(q_inv, 0, 1) * &one_minus_mono(&eps * &place.q_pow(-half), 0, 1),
        )
    }
}

/// Substitute `alpha -> alpha + beta0`, i.e. `a -> a*q^(-beta0)`: the effect
/// of twisting by an unramified character `|.|^beta0`.
pub fn hecke_shift(f: &RatFun2, beta0: i64, place: &GoodPlace) -> Result<RatFun2> {
    f.substitute_monomial(Var::A, &place.q_pow(-beta0), 1, 0)
}

/// The non-principal constant-term factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantTerm {
    /// Exponent of `|lambda|` on the prefactor: `(n+1)(1-s) = (n+1) - alpha`.
    pub lambda_exponent: ExponentForm,
    /// `X^(n+1)(alpha - (n+1); 0) / Z(alpha)` as a rational function of `a`.
    pub factor: RatFun2,
}

/// The factor through which the non-principal part of the constant term of
/// the Eisenstein series on `O(n+3)` passes: `X^(n+1)(beta; 0)` at
/// `beta = alpha - (n+1)` (the substitution `z -> a*q^(n+1)`), divided by
/// `Z(alpha)`.
pub fn constant_term_factor(n: u32, place: &GoodPlace) -> Result<ConstantTerm> {
    let x = x_at_zero(n + 1, place)?;
    let factor = x
        .substitute_monomial(Var::Z, &place.q_pow(n as i64 + 1), 1, 0)?
        .div(&zeta_z(ExponentForm::alpha_plus(0), place)?)?;
    Ok(ConstantTerm {
        lambda_exponent: ExponentForm::new(n as i64 + 1, -1, 0),
        factor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{rat, rat_int};

    fn sym(q: i64, eps: Sign) -> GoodPlace {
        GoodPlace::symbolic(rat_int(q), eps).unwrap()
    }

    /// `1 / (1 - c * a^ia * z^jz)`
    fn geom(c: Rat, ia: u32, jz: u32) -> RatFun2 {
        RatFun2::new(Poly2::one(), one_minus_mono(c, ia, jz)).unwrap()
    }

    #[test]
    fn zeta_factor_shapes() {
        let place = sym(5, Sign::Plus);
        let alpha = ExponentForm::alpha_plus(0);
        assert_eq!(
            zeta_z(alpha, &place).unwrap(),
            geom(rat_int(1), 1, 0) // 1/(1-a)
        );
        assert_eq!(
            zeta_z(ExponentForm::beta_plus(1), &place).unwrap(),
            geom(rat(1, 5), 0, 1) // 1/(1-z/5)
        );
        assert_eq!(
            zeta_z(ExponentForm::new(0, 1, 2), &place).unwrap(),
            geom(rat_int(1), 1, 2) // 1/(1-a z^2)
        );
        // Z(2) at q=5 is the constant 25/24
        assert_eq!(
            zeta_z(ExponentForm::new(2, 0, 0), &place).unwrap(),
            RatFun2::constant(rat(25, 24))
        );
        assert_eq!(
            zeta_z(ExponentForm::new(0, 0, 0), &place),
            Err(Error::ZeroExponent)
        );
        assert_eq!(
            zeta_z(ExponentForm::new(0, -1, 0), &place),
            Err(Error::NegativeDegree(-1))
        );
    }

    #[test]
    fn l_factor_signs() {
        let split = sym(5, Sign::Plus);
        let e = ExponentForm::beta_plus(1);
        assert_eq!(l_factor(e, &split).unwrap(), zeta_z(e, &split).unwrap());

        let inert = sym(5, Sign::Minus);
        assert_eq!(l_factor(e, &inert).unwrap(), geom(rat(-1, 5), 0, 1)); // 1/(1+z/5)
                                                                          // Z_ext(beta+1) = 1/(1 - z^2/25) when eps = -1
        assert_eq!(zeta_quad_ext(e, &inert).unwrap(), geom(rat(1, 25), 0, 2));
    }

    #[test]
    fn x0_at_small_t() {
        let place = sym(5, Sign::Plus);
        let x = x_exp_poly(0, &place).unwrap();
        // T=1: 1 + z + z^2
        let poly = &(&Poly2::one() + &Poly2::var(Var::Z)) + &Poly2::monomial(rat_int(1), 0, 2);
        assert_eq!(x.eval_at(1), RatFun2::from_poly(poly));
        // n=0 requires eps = +1
        assert!(x_exp_poly(0, &sym(5, Sign::Minus)).is_err());
    }

    #[test]
    fn x1_collapses_at_t_zero() {
        for eps in [Sign::Plus, Sign::Minus] {
            let place = sym(5, eps);
            let x = x_exp_poly(1, &place).unwrap();
            // (1+w)/(1-eps*w) with w = z/5
            let w = Poly2::monomial(rat(1, 5), 0, 1);
            let expect =
                RatFun2::new(&Poly2::one() + &w, &Poly2::one() - &w.scale(&eps.as_rat())).unwrap();
            assert_eq!(x.eval_at(0), expect, "eps={eps:?}");
        }
    }

    #[test]
    fn x3_matches_direct_summary_shape() {
        // Reduction from dimension 1 with one extra plane against the
        // directly assembled (1-w^2)/((1-z/q)(1-u)) [1 - (u-eps w)/(1-eps w) u^T]
        // with w = z*q^(-2), u = z^2*q^(-3).
        for eps in [Sign::Plus, Sign::Minus] {
            let place = sym(5, eps);
            let reduced = x_exp_poly(3, &place).unwrap();
            let e = eps.as_rat();
            let w = Poly2::monomial(rat(1, 25), 0, 1);
            let u = Poly2::monomial(rat(1, 125), 0, 2);
            let front = RatFun2::new(
                &Poly2::one() - &(&w * &w),
                &one_minus_mono(rat(1, 5), 0, 1) * &(&Poly2::one() - &u),
            )
            .unwrap();
            let bracket_t =
                RatFun2::new(-&(&u - &w.scale(&e)), &Poly2::one() - &w.scale(&e)).unwrap();
            for t in 0..=4 {
                let ut = RatFun2::from_poly(u.clone()).pow(t);
                let direct = front.mul(&RatFun2::one().add(&bracket_t.mul(&ut)));
                assert_eq!(reduced.eval_at(t), direct, "eps={eps:?} T={t}");
            }
        }
    }

    #[test]
    fn x2_isotropic_agrees_with_pure_plane_reduction() {
        // For eps = +1 the two-dimensional form is a hyperbolic plane, so
        // X^2 must also arise from X^0 by the plane reduction.
        let place = sym(7, Sign::Plus);
        let direct = x_exp_poly(2, &place).unwrap();
        let reduced = x_exp_poly(0, &place)
            .unwrap()
            .substitute_z(&rat(1, 7), 1)
            .unwrap()
            .scale(&plane_prefactor(1, &place));
        for t in 0..=4 {
            assert_eq!(direct.eval_at(t), reduced.eval_at(t), "T={t}");
        }
        assert_eq!(direct.sum_over_t().unwrap(), reduced.sum_over_t().unwrap());
    }

    #[test]
    fn x_at_zero_displays() {
        let place = sym(5, Sign::Plus);
        assert_eq!(
            x_at_zero(0, &place).unwrap(),
            geom(rat_int(1), 0, 1) // 1/(1-z)
        );
        // n=1: (1 - z^2/25) / ((1-z/5)(1-z^2/5))
        let expect = RatFun2::new(
            one_minus_mono(rat(1, 25), 0, 2),
            &one_minus_mono(rat(1, 5), 0, 1) * &one_minus_mono(rat(1, 5), 0, 2),
        )
        .unwrap();
        assert_eq!(x_at_zero(1, &place).unwrap(), expect);
        // n=2, eps=-1: (1 + z/25) / ((1-z/5)(1+z/5))
        let place = sym(5, Sign::Minus);
        let expect = RatFun2::new(
            one_minus_mono(rat(-1, 25), 0, 1),
            &one_minus_mono(rat(1, 5), 0, 1) * &one_minus_mono(rat(-1, 5), 0, 1),
        )
        .unwrap();
        assert_eq!(x_at_zero(2, &place).unwrap(), expect);
    }

    #[test]
    fn x_at_zero_is_the_t_free_part() {
        for q in [3i64, 5] {
            for eps in [Sign::Plus, Sign::Minus] {
                for n in 0..=6u32 {
                    let place = sym(q, eps);
                    let Ok(x) = x_exp_poly(n, &place) else {
                        continue;
                    };
                    assert_eq!(
                        x.t_free_part(),
                        x_at_zero(n, &place).unwrap(),
                        "q={q} eps={eps:?} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn pi_matches_displays_in_low_dimension() {
        for eps in [Sign::Plus, Sign::Minus] {
            let place = sym(5, eps);
            for n in 0..=2u32 {
                if n == 0 && eps == Sign::Minus {
                    continue;
                }
                assert_eq!(
                    pi(n, &place).unwrap(),
                    pi_display(n, &place).unwrap(),
                    "eps={eps:?} n={n}"
                );
            }
        }
    }

    #[test]
    fn pi0_literal_shape() {
        // The summed n=0 generating function is
        // (1 - a^2 z^2) / ((1-a)(1-a z^2)(1-a z)).
        let place = sym(5, Sign::Plus);
        let num = one_minus_mono(rat_int(1), 2, 2);
        let den = &(&one_minus_mono(rat_int(1), 1, 0) * &one_minus_mono(rat_int(1), 1, 2))
            * &one_minus_mono(rat_int(1), 1, 1);
        assert_eq!(pi(0, &place).unwrap(), RatFun2::new(num, den).unwrap());
    }

    #[test]
    fn x_at_zero_shift_is_z_substitution() {
        // Replacing z by z*q^(-k) in X^1(beta; 0) lands on the odd-n display
        // with beta replaced by beta + k.
        let place = sym(5, Sign::Plus);
        let shifted = x_at_zero(1, &place)
            .unwrap()
            .substitute_monomial(Var::Z, &rat(1, 5), 0, 1)
            .unwrap();
        // (1 - z^2 q^(-4)) / ((1 - z q^(-2))(1 - z^2 q^(-3)))
        let expect = RatFun2::new(
            one_minus_mono(rat(1, 625), 0, 2),
            &one_minus_mono(rat(1, 25), 0, 1) * &one_minus_mono(rat(1, 125), 0, 2),
        )
        .unwrap();
        assert_eq!(shifted, expect);
    }

    #[test]
    fn pi0_spot_value() {
        // alpha=2, beta=0 at q=5: a = 1/25, z = 1 gives 325/288.  The
        // constructive sum carries a removable 1-z factor, so beta = 0 goes
        // through the specialization that cancels it.
        let place = sym(5, Sign::Plus);
        let v = pi(0, &place)
            .unwrap()
            .specialize_z_one()
            .unwrap()
            .eval(&rat(1, 25), &rat_int(0))
            .unwrap();
        assert_eq!(v, rat(325, 288));
    }

    #[test]
    fn period_spot_values() {
        // n=0, eps=+1, q=5, alpha=2: normalized period 13/12.
        let place = sym(5, Sign::Plus);
        let report = local_period(0, &place).unwrap();
        let v = report.normalized.eval(&rat(1, 25), &rat_int(0)).unwrap();
        assert_eq!(v, rat(13, 12));

        // n=0, eps=-1: identically 1, and the adjusted display collapses too.
        let place = sym(5, Sign::Minus);
        let report = local_period(0, &place).unwrap();
        assert_eq!(report.normalized, RatFun2::one());
        assert_eq!(report.adjusted, RatFun2::one());
        assert_eq!(report.constant_ratio, RatFun2::one());
    }

    #[test]
    fn period_constant_ratio_is_a_free() {
        for eps in [Sign::Plus, Sign::Minus] {
            let place = sym(5, eps);
            for n in 0..=6u32 {
                let Ok(report) = local_period(n, &place) else {
                    continue;
                };
                assert!(
                    report.constant_ratio.is_independent_of_a(),
                    "eps={eps:?} n={n}"
                );
                // normalized = raw / Z(alpha)
                let z_alpha = zeta_z(ExponentForm::alpha_plus(0), &place).unwrap();
                assert_eq!(report.normalized.mul(&z_alpha), report.raw);
            }
        }
    }

    #[test]
    fn period_constant_ratio_exact_values() {
        // Dropped convergence factors: Z(2k+2)/(Z(1)L(k+1)) for n = 2k+1 and
        // L(k+2)/Z(1) for n = 2k+2.
        for eps in [Sign::Plus, Sign::Minus] {
            let place = sym(5, eps);
            let c = |c0: i64| ExponentForm::new(c0, 0, 0);

            let r1 = local_period(1, &place).unwrap().constant_ratio;
            let expect = zeta_z(c(2), &place)
                .unwrap()
                .div(
                    &zeta_z(c(1), &place)
                        .unwrap()
                        .mul(&l_factor(c(1), &place).unwrap()),
                )
                .unwrap();
            assert_eq!(r1, expect, "n=1 eps={eps:?}");

            let r2 = local_period(2, &place).unwrap().constant_ratio;
            let expect = l_factor(c(2), &place)
                .unwrap()
                .div(&zeta_z(c(1), &place).unwrap())
                .unwrap();
            assert_eq!(r2, expect, "n=2 eps={eps:?}");

            let r3 = local_period(3, &place).unwrap().constant_ratio;
            let expect = zeta_z(c(4), &place)
                .unwrap()
                .div(
                    &zeta_z(c(1), &place)
                        .unwrap()
                        .mul(&l_factor(c(2), &place).unwrap()),
                )
                .unwrap();
            assert_eq!(r3, expect, "n=3 eps={eps:?}");
        }
    }

    #[test]
    fn weil_zeta_displays() {
        // n=1: (1 - 1/q)/(1 - z^2/q), independent of eps.
        for eps in [Sign::Plus, Sign::Minus] {
            let place = sym(5, eps);
            let w = weil_zeta(1, &place).unwrap();
            let expect =
                RatFun2::new(Poly2::constant(rat(4, 5)), one_minus_mono(rat(1, 5), 0, 2)).unwrap();
            assert_eq!(w, expect);
        }
        // n=2, eps=-1 at q=5: (24/25)/(1 - z^2/25)
        let place = sym(5, Sign::Minus);
        let w = weil_zeta(2, &place).unwrap();
        let expect = RatFun2::new(
            Poly2::constant(rat(24, 25)),
            one_minus_mono(rat(1, 25), 0, 2),
        )
        .unwrap();
        assert_eq!(w, expect);
        assert!(weil_zeta(0, &place).is_err());
    }

    #[test]
    fn weil_bridge_equals_display() {
        for q in [3i64, 5, 7] {
            for eps in [Sign::Plus, Sign::Minus] {
                let place = sym(q, eps);
                for n in 1..=6u32 {
                    assert_eq!(
                        weil_zeta(n, &place).unwrap(),
                        weil_zeta_display(n, &place).unwrap(),
                        "q={q} eps={eps:?} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn hecke_shift_on_zeta() {
        let place = sym(5, Sign::Plus);
        let z_alpha = zeta_z(ExponentForm::alpha_plus(0), &place).unwrap();
        // beta0 = 0 is the identity
        assert_eq!(hecke_shift(&z_alpha, 0, &place).unwrap(), z_alpha);
        // Z(alpha) -> Z(alpha+1) = 1/(1 - a/5)
        assert_eq!(
            hecke_shift(&z_alpha, 1, &place).unwrap(),
            geom(rat(1, 5), 1, 0)
        );
    }

    #[test]
    fn constant_term_factor_shapes() {
        // n=0: X^1(alpha-1; 0)/Z(alpha) = (1 - a^2)/(1 - a^2 q)
        let place = sym(5, Sign::Plus);
        let ct = constant_term_factor(0, &place).unwrap();
        assert_eq!(ct.lambda_exponent, ExponentForm::new(1, -1, 0));
        let expect = RatFun2::new(
            one_minus_mono(rat_int(1), 2, 0),
            one_minus_mono(rat_int(5), 2, 0),
        )
        .unwrap();
        assert_eq!(ct.factor, expect);

        // n=1, eps=-1, q=5 at alpha=4 (a = 5^-4): frozen exact value.
        let place = sym(5, Sign::Minus);
        let ct = constant_term_factor(1, &place).unwrap();
        let v = ct.factor.eval(&rat(1, 625), &rat_int(0)).unwrap();
        assert_eq!(v, rat(16276, 16275));
    }
}
