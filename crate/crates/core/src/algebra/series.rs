//! Truncated power-series expansion at the origin.
//!
//! A `Series2` is a dense table of exact coefficients of `a^i z^j` for
//! `i <= max_dega`, `j <= max_degz`.  Expansion of `num/den` uses the linear
//! recurrence `num = den * series`, which is exact because the denominator
//! has constant term 1.

use num_traits::Zero;

use super::poly::Poly2;
use super::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series2 {
    max_dega: u32,
    max_degz: u32,
    coeffs: Vec<Vec<Rat>>,
}

impl Series2 {
    pub fn max_dega(&self) -> u32 {
        self.max_dega
    }

    pub fn max_degz(&self) -> u32 {
        self.max_degz
    }

    pub fn coeff(&self, dega: u32, degz: u32) -> &Rat {
        &self.coeffs[dega as usize][degz as usize]
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.coeffs
    }

    /// Coefficients of `num/den` with `den` of constant term 1.
    pub(crate) fn expand(num: &Poly2, den: &Poly2, max_dega: u32, max_degz: u32) -> Series2 {
        assert!(
            den.constant_term() == Rat::from_integer(1.into()),
            "expansion requires origin-normal form"
        );
        let rows = max_dega as usize + 1;
        let cols = max_degz as usize + 1;
        let mut coeffs = vec![vec![Rat::zero(); cols]; rows];
        for i in 0..rows {
            for j in 0..cols {
                // s_{ij} = n_{ij} - sum_{(k,l) != (0,0)} d_{kl} s_{i-k, j-l}
                let mut acc = num.coeff(i as u32, j as u32);
                for m in den.monomials() {
                    if m.dega == 0 && m.degz == 0 {
                        continue;
                    }
                    let (k, l) = (m.dega as usize, m.degz as usize);
                    if k <= i && l <= j {
                        acc -= m.coeff * &coeffs[i - k][j - l];
                    }
                }
                coeffs[i][j] = acc;
            }
        }
        Series2 {
            max_dega,
            max_degz,
            coeffs,
        }
    }

    /// The truncation as a polynomial (used to verify `den * series = num`).
    pub fn to_poly(&self) -> Poly2 {
        let mut p = Poly2::zero();
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                p = &p + &Poly2::monomial(c.clone(), i as u32, j as u32);
            }
        }
        p
    }
}
