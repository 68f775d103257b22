//! The local model at a good non-archimedean place.
//!
//! A *good place* is one where 2 and the discriminant of the quadratic form
//! are units.  There, the residue field has odd cardinality `q`, and a
//! quadratic form on `k^n` is classified up to isomorphism by its dimension
//! `n` together with the value `epsilon` of the quadratic character `chi` on
//! its discriminant class.
//!
//! Discriminant convention: we use the signed determinant
//! `disc(B) = (-1)^(n(n-1)/2) * det(Gram B)`, under which a hyperbolic plane
//! `xy` contributes the square class of 1 and the model kernels below have
//! `chi(disc) = epsilon` on the nose.

use crate::algebra::rat::{rat_int, Rat};
use crate::error::{Error, Result};

/// Discriminant sign: the value of the quadratic character on the
/// discriminant class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_rat(self) -> Rat {
        rat_int(self.as_i32() as i64)
    }

    pub fn from_i32(v: i32) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % m as u128) as u64;
        }
        base = (base as u128 * base as u128 % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// The nontrivial character on units modulo squares: `+1` on nonzero squares
/// mod `p`, `-1` on non-squares (Euler criterion).
pub fn chi(u: i64, p: u64) -> Result<Sign> {
    if !is_odd_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    let r = u.rem_euclid(p as i64) as u64;
    if r == 0 {
        return Err(Error::NonUnitResidue { value: u, p });
    }
    if mod_pow(r, (p - 1) / 2, p) == 1 {
        Ok(Sign::Plus)
    } else {
        Ok(Sign::Minus)
    }
}

/// The least positive quadratic non-residue mod `p`.
pub fn least_non_residue(p: u64) -> Result<u64> {
    for u in 2..p {
        if chi(u as i64, p)? == Sign::Minus {
            return Ok(u);
        }
    }
    Err(Error::InvalidPrime(p))
}

/// Residue-level data attached to a place: the odd prime `p` (so `q = p` and
/// the residue rings are `Z/p^l`) and a unit representative of the
/// discriminant class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidueData {
    pub p: u64,
    pub delta: u64,
}

/// A good non-archimedean place together with the discriminant sign of the
/// ambient quadratic form.
///
/// For purely symbolic work `q` may be any exact rational `>= 3`; oracle
/// work additionally needs `residue` data, with `q = p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodPlace {
    q: Rat,
    epsilon: Sign,
    residue: Option<ResidueData>,
}

impl GoodPlace {
    /// A symbolic place with residue cardinality `q` (no residue data).
    pub fn symbolic(q: Rat, epsilon: Sign) -> Result<GoodPlace> {
        if q < rat_int(3) {
            return Err(Error::InvalidCardinality);
        }
        Ok(GoodPlace {
            q,
            epsilon,
            residue: None,
        })
    }

    /// A degree-one place with `q = p`.  The discriminant representative
    /// defaults to 1 for `epsilon = +1` and to the least positive
    /// non-residue for `epsilon = -1`.
    pub fn residue(p: u64, epsilon: Sign) -> Result<GoodPlace> {
        if !is_odd_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        let delta = match epsilon {
            Sign::Plus => 1,
            Sign::Minus => least_non_residue(p)?,
        };
        Ok(GoodPlace {
            q: rat_int(p as i64),
            epsilon,
            residue: Some(ResidueData { p, delta }),
        })
    }

    /// Override the discriminant representative; it must be a unit of the
    /// square class matching `epsilon`.
    pub fn with_delta(mut self, delta: u64) -> Result<GoodPlace> {
        let data = self.residue.ok_or(Error::MissingResidueData)?;
        if chi(delta as i64, data.p)? != self.epsilon {
            return Err(Error::InconsistentDiscriminant {
                delta,
                epsilon: self.epsilon.as_i32(),
            });
        }
        self.residue = Some(ResidueData { p: data.p, delta });
        Ok(self)
    }

    pub fn q(&self) -> &Rat {
        &self.q
    }

    pub fn epsilon(&self) -> Sign {
        self.epsilon
    }

    pub fn residue_data(&self) -> Result<ResidueData> {
        self.residue.ok_or(Error::MissingResidueData)
    }

    /// `q^e` as an exact rational (negative exponents allowed).
    pub fn q_pow(&self, e: i64) -> Rat {
        crate::algebra::rat::rat_pow(&self.q, e)
    }
}

/// Anisotropic kernel of a form shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kernel {
    Empty,
    Unary,
    BinaryAnisotropic,
    BinaryHyperbolic,
}

impl Kernel {
    pub fn dim(self) -> u32 {
        match self {
            Kernel::Empty => 0,
            Kernel::Unary => 1,
            Kernel::BinaryAnisotropic | Kernel::BinaryHyperbolic => 2,
        }
    }
}

/// Isomorphism class of a quadratic form at a good place: a kernel plus a
/// number of hyperbolic planes, with the discriminant sign recorded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormShape {
    pub n: u32,
    pub kernel: Kernel,
    pub hyp_count: u32,
    pub epsilon: Sign,
}

/// The shape of the `n`-dimensional form with discriminant sign `epsilon`.
///
/// Odd `n` uses a unary kernel `delta x^2`; even `n` splits as hyperbolic
/// planes when `epsilon = +1` and as a binary anisotropic kernel plus planes
/// when `epsilon = -1`.  There is no 0-dimensional form with nontrivial
/// discriminant class.
pub fn make_shape(n: u32, epsilon: Sign) -> Result<FormShape> {
    let kernel = if n % 2 == 1 {
        Kernel::Unary
    } else if epsilon == Sign::Plus {
        Kernel::Empty
    } else if n == 0 {
        return Err(Error::InadmissiblePair {
            n,
            epsilon: epsilon.as_i32(),
        });
    } else {
        Kernel::BinaryAnisotropic
    };
    Ok(FormShape {
        n,
        kernel,
        hyp_count: (n - kernel.dim()) / 2,
        epsilon,
    })
}

/// A concrete diagonal-plus-hyperbolic realization over `Z/p^l`: square
/// terms `c_i x_i^2` with unit coefficients, plus `hyp_count` blocks `xy`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcreteForm {
    pub square_coeffs: Vec<i64>,
    pub hyp_count: u32,
}

impl ConcreteForm {
    pub fn dim(&self) -> u32 {
        self.square_coeffs.len() as u32 + 2 * self.hyp_count
    }
}

/// Realize a shape over the residue rings of a place.
///
/// Kernels become `delta x^2` (unary), `x^2 - delta y^2` (binary
/// anisotropic), or `xy` blocks; hyperbolic planes become further `xy`
/// blocks.
pub fn realize_form(shape: &FormShape, place: &GoodPlace) -> Result<ConcreteForm> {
    let data = place.residue_data()?;
    if chi(data.delta as i64, data.p)? != shape.epsilon {
        return Err(Error::InconsistentDiscriminant {
            delta: data.delta,
            epsilon: shape.epsilon.as_i32(),
        });
    }
    let mut hyp_count = shape.hyp_count;
    let square_coeffs = match shape.kernel {
        Kernel::Empty => vec![],
        Kernel::Unary => vec![data.delta as i64],
        Kernel::BinaryAnisotropic => vec![1, -(data.delta as i64)],
        Kernel::BinaryHyperbolic => {
            hyp_count += 1;
            vec![]
        }
    };
    Ok(ConcreteForm {
        square_coeffs,
        hyp_count,
    })
}

/// `chi` of the signed discriminant of a realized form (see the module
/// docs for the convention).  Used to check that realization preserves
/// `epsilon`.
pub fn discriminant_sign(form: &ConcreteForm, p: u64) -> Result<Sign> {
    let n = form.dim();
    let h = form.hyp_count;
    // disc = (-1)^(n(n-1)/2) * prod(c_i) * (-1/4)^h; the (1/4)^h part is a
    // square, leaving (-1)^(n(n-1)/2 + h) * prod(c_i).
    let sign_exp = (n * n.saturating_sub(1) / 2 + h) % 2;
    let mut s = if sign_exp == 0 {
        Sign::Plus
    } else {
        chi(-1, p)?
    };
    for &c in &form.square_coeffs {
        s = s * chi(c, p)?;
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    #[test]
    fn chi_basic_values() {
        assert_eq!(chi(1, 5).unwrap(), Sign::Plus);
        // squares mod 5 are {1, 4}
        assert_eq!(chi(2, 5).unwrap(), Sign::Minus);
        assert_eq!(chi(4, 5).unwrap(), Sign::Plus);
        assert_eq!(chi(3, 5).unwrap(), Sign::Minus);
        // 2^2 = 4
        assert_eq!(chi(4, 7).unwrap(), Sign::Plus);
        assert_eq!(chi(10, 5), Err(Error::NonUnitResidue { value: 10, p: 5 }));
        assert_eq!(chi(1, 4), Err(Error::InvalidPrime(4)));
        assert_eq!(chi(1, 2), Err(Error::InvalidPrime(2)));
    }

    #[test]
    fn chi_is_multiplicative() {
        for p in [3u64, 5, 7, 11, 13] {
            for u in 1..p as i64 {
                for v in 1..p as i64 {
                    let lhs = chi(u * v, p).unwrap();
                    let rhs = chi(u, p).unwrap() * chi(v, p).unwrap();
                    assert_eq!(lhs, rhs, "p={p} u={u} v={v}");
                }
            }
        }
    }

    #[test]
    fn chi_of_negative_argument() {
        // -1 is a square mod 5 (2^2 = 4 = -1) but not mod 3 or 7.
        assert_eq!(chi(-1, 5).unwrap(), Sign::Plus);
        assert_eq!(chi(-1, 3).unwrap(), Sign::Minus);
        assert_eq!(chi(-1, 7).unwrap(), Sign::Minus);
    }

    #[test]
    fn least_non_residues() {
        assert_eq!(least_non_residue(3).unwrap(), 2);
        assert_eq!(least_non_residue(5).unwrap(), 2);
        assert_eq!(least_non_residue(7).unwrap(), 3);
    }

    #[test]
    fn shapes_by_parity() {
        let s = make_shape(3, Sign::Minus).unwrap();
        assert_eq!(s.kernel, Kernel::Unary);
        assert_eq!(s.hyp_count, 1);

        let s = make_shape(2, Sign::Plus).unwrap();
        assert_eq!(s.kernel, Kernel::Empty);
        assert_eq!(s.hyp_count, 1);

        let s = make_shape(0, Sign::Plus).unwrap();
        assert_eq!(s.kernel, Kernel::Empty);
        assert_eq!(s.hyp_count, 0);

        assert_eq!(
            make_shape(0, Sign::Minus),
            Err(Error::InadmissiblePair { n: 0, epsilon: -1 })
        );
    }

    #[test]
    fn realizations_use_delta_witness() {
        let place = GoodPlace::residue(5, Sign::Minus).unwrap();
        let f = realize_form(&make_shape(1, Sign::Minus).unwrap(), &place).unwrap();
        assert_eq!(f.square_coeffs, vec![2]);
        assert_eq!(f.hyp_count, 0);

        let place = GoodPlace::residue(5, Sign::Plus).unwrap();
        let f = realize_form(&make_shape(2, Sign::Plus).unwrap(), &place).unwrap();
        assert!(f.square_coeffs.is_empty());
        assert_eq!(f.hyp_count, 1);

        let place = GoodPlace::residue(3, Sign::Minus).unwrap();
        let f = realize_form(&make_shape(4, Sign::Minus).unwrap(), &place).unwrap();
        assert_eq!(f.square_coeffs, vec![1, -2]);
        assert_eq!(f.hyp_count, 1);
    }

    #[test]
    fn realization_preserves_discriminant_sign() {
        for p in [3u64, 5, 7] {
            for eps in [Sign::Plus, Sign::Minus] {
                let place = GoodPlace::residue(p, eps).unwrap();
                for n in 0..=6u32 {
                    let Ok(shape) = make_shape(n, eps) else {
                        continue;
                    };
                    let form = realize_form(&shape, &place).unwrap();
                    assert_eq!(form.dim(), n);
                    if n > 0 {
                        assert_eq!(
                            discriminant_sign(&form, p).unwrap(),
                            eps,
                            "p={p} eps={eps:?} n={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn delta_override_checks_square_class() {
        let place = GoodPlace::residue(5, Sign::Minus).unwrap();
        assert!(place.clone().with_delta(3).is_ok()); // 3 is a non-residue mod 5
        assert_eq!(
            place.with_delta(4),
            Err(Error::InconsistentDiscriminant {
                delta: 4,
                epsilon: -1
            })
        );
    }

    #[test]
    fn symbolic_place_validates_cardinality() {
        assert!(GoodPlace::symbolic(rat(9, 1), Sign::Plus).is_ok());
        assert_eq!(
            GoodPlace::symbolic(rat(2, 1), Sign::Plus),
            Err(Error::InvalidCardinality)
        );
    }
}
