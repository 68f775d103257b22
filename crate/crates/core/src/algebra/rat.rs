//! Arbitrary-precision rational numbers.
//!
//! `Rat` is the coefficient field for every polynomial, rational function,
//! and counting measure in this crate.  It is kept in lowest terms with a
//! positive denominator by construction, and all arithmetic is exact.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// `n/d` as an exact rational.  Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as an exact rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `base^exp` for a signed integer exponent.  Panics if `base == 0` and
/// `exp < 0`.
pub fn rat_pow(base: &Rat, exp: i64) -> Rat {
    if exp >= 0 {
        let mut acc = Rat::one();
        for _ in 0..exp {
            acc *= base;
        }
        acc
    } else {
        let mut acc = Rat::one();
        for _ in 0..(-exp) {
            acc /= base;
        }
        acc
    }
}

/// `count / p^(ell*n)`: the Haar measure of a residue count.
pub fn measure(count: &BigUint, p: u64, ell_times_n: u32) -> Rat {
    let denom = BigInt::from(p).pow(ell_times_n);
    Rat::new(BigInt::from(count.clone()), denom)
}

/// True when `|r| <= 1`.
pub fn abs_at_most_one(r: &Rat) -> bool {
    r.numer().abs() <= r.denom().abs()
}

/// Render as `numer/denom`, or just `numer` when the denominator is 1.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `"n"` or `"n/d"` into an exact rational.
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_with_positive_denominator() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn pow_negative_exponent() {
        assert_eq!(rat_pow(&rat_int(5), -2), rat(1, 25));
        assert_eq!(rat_pow(&rat(2, 3), 3), rat(8, 27));
        assert_eq!(rat_pow(&rat(2, 3), 0), rat_int(1));
    }

    #[test]
    fn string_round_trip() {
        assert_eq!(rat_to_string(&rat(13, 12)), "13/12");
        assert_eq!(rat_to_string(&rat_int(-7)), "-7");
        assert_eq!(rat_from_str("13/12"), Some(rat(13, 12)));
        assert_eq!(rat_from_str(" -7 "), Some(rat_int(-7)));
        assert_eq!(rat_from_str("1/0"), None);
        assert_eq!(rat_from_str("x"), None);
    }
}
