//! Brute-force ground truth over the residue rings `Z/p^l`.
//!
//! The oracle counts solutions of `B(x) = rho mod p^l` by building the full
//! value distribution of `B` on `(Z/p^l)^n`: each square term `c*x^2` is
//! enumerated directly, each hyperbolic block `xy` is enumerated over all
//! pairs, and independent blocks combine by cyclic convolution mod `p^l`.
//! No closed formula is used anywhere, so these counts are an independent
//! check on every generating function in [`crate::formulas`].
//!
//! Counts are arbitrary-precision integers; measures are exact rationals
//! `count / p^(l*n)`, matching the additive Haar normalization
//! `vol(o^n) = 1`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::algebra::rat::{measure, Rat};
use crate::error::{Error, Result};
use crate::local::{chi, ConcreteForm, GoodPlace, Sign};

/// Exact counts of `B(x) mod p^l` over all of `(Z/p^l)^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueHistogram {
    modulus: u64,
    counts: Vec<BigUint>,
}

impl ValueHistogram {
    fn point_mass(modulus: u64) -> ValueHistogram {
        let mut counts = vec![BigUint::zero(); modulus as usize];
        counts[0] = BigUint::one();
        ValueHistogram { modulus, counts }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn count(&self, residue: u64) -> &BigUint {
        &self.counts[(residue % self.modulus) as usize]
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }
}

/// Cyclic convolution mod the common modulus: the value distribution of an
/// orthogonal direct sum.
pub fn convolve(h1: &ValueHistogram, h2: &ValueHistogram) -> ValueHistogram {
    assert_eq!(h1.modulus, h2.modulus, "mismatched moduli");
    let m = h1.modulus as usize;
    let mut counts = vec![BigUint::zero(); m];
    for (i, c1) in h1.counts.iter().enumerate() {
        if c1.is_zero() {
            continue;
        }
        for (j, c2) in h2.counts.iter().enumerate() {
            if c2.is_zero() {
                continue;
            }
            let k = (i + j) % m;
            counts[k] += c1 * c2;
        }
    }
    ValueHistogram {
        modulus: h1.modulus,
        counts,
    }
}

fn square_term_histogram(c: i64, modulus: u64) -> ValueHistogram {
    let c_red = c.rem_euclid(modulus as i64) as u64;
    let mut counts = vec![BigUint::zero(); modulus as usize];
    for x in 0..modulus {
        let v = c_red * (x * x % modulus) % modulus;
        counts[v as usize] += 1u32;
    }
    ValueHistogram { modulus, counts }
}

fn xy_histogram(modulus: u64) -> ValueHistogram {
    let mut raw = vec![0u64; modulus as usize];
    for x in 0..modulus {
        for y in 0..modulus {
            raw[(x * y % modulus) as usize] += 1;
        }
    }
    ValueHistogram {
        modulus,
        counts: raw.into_iter().map(BigUint::from).collect(),
    }
}

fn checked_pow(p: u64, e: u32) -> Result<u64> {
    p.checked_pow(e).ok_or(Error::BudgetExceeded {
        required: u64::MAX,
        budget: 0,
    })
}

/// Enumeration-plus-convolution cost of one histogram, in visited cells.
fn work_estimate(form: &ConcreteForm, modulus: u64) -> u64 {
    let nsq = form.square_coeffs.len() as u64;
    let h = form.hyp_count as u64;
    let m2 = modulus.saturating_mul(modulus);
    let components = nsq + h;
    let mut work = nsq.saturating_mul(modulus);
    if h > 0 {
        work = work.saturating_add(m2);
    }
    work.saturating_add(components.saturating_sub(1).saturating_mul(m2))
}

/// The value distribution of `form` on `(Z/p^l)^n`.
pub fn value_distribution(
    form: &ConcreteForm,
    ell: u32,
    place: &GoodPlace,
    budget_cells: u64,
) -> Result<ValueHistogram> {
    let data = place.residue_data()?;
    let modulus = checked_pow(data.p, ell)?;
    let required = work_estimate(form, modulus);
    if required > budget_cells {
        return Err(Error::BudgetExceeded {
            required,
            budget: budget_cells,
        });
    }
    let mut acc: Option<ValueHistogram> = None;
    let merge = |h: ValueHistogram, acc: &mut Option<ValueHistogram>| {
        *acc = Some(match acc.take() {
            None => h,
            Some(prev) => convolve(&prev, &h),
        });
    };
    for &c in &form.square_coeffs {
        merge(square_term_histogram(c, modulus), &mut acc);
    }
    if form.hyp_count > 0 {
        let plane = xy_histogram(modulus);
        for _ in 1..form.hyp_count {
            merge(plane.clone(), &mut acc);
        }
        merge(plane, &mut acc);
    }
    Ok(acc.unwrap_or_else(|| ValueHistogram::point_mass(modulus)))
}

/// The same distribution by a single odometer sweep over `(Z/p^l)^n`,
/// sharing no code with the convolution path.  Intended for cross-checks at
/// small sizes.
pub fn value_distribution_direct(
    form: &ConcreteForm,
    ell: u32,
    place: &GoodPlace,
    budget_cells: u64,
) -> Result<ValueHistogram> {
    let data = place.residue_data()?;
    let modulus = checked_pow(data.p, ell)?;
    let n = form.dim();
    let mut required: u64 = 1;
    for _ in 0..n {
        required = required.saturating_mul(modulus);
    }
    if required > budget_cells {
        return Err(Error::BudgetExceeded {
            required,
            budget: budget_cells,
        });
    }
    let mut counts = vec![BigUint::zero(); modulus as usize];
    let mut coords = vec![0u64; n as usize];
    loop {
        let mut v: u64 = 0;
        let mut idx = 0;
        for &c in &form.square_coeffs {
            let c_red = c.rem_euclid(modulus as i64) as u64;
            let x = coords[idx];
            v = (v + c_red * (x * x % modulus)) % modulus;
            idx += 1;
        }
        for _ in 0..form.hyp_count {
            let (x, y) = (coords[idx], coords[idx + 1]);
            v = (v + x * y) % modulus;
            idx += 2;
        }
        counts[v as usize] += 1u32;
        // odometer
        let mut pos = 0;
        loop {
            if pos == coords.len() {
                return Ok(ValueHistogram { modulus, counts });
            }
            coords[pos] += 1;
            if coords[pos] < modulus {
                break;
            }
            coords[pos] = 0;
            pos += 1;
        }
    }
}

/// The measure of `{x : B(x) = rho mod p^l}`, exactly.
pub fn count_measure(
    form: &ConcreteForm,
    rho: u64,
    ell: u32,
    place: &GoodPlace,
    budget_cells: u64,
) -> Result<Rat> {
    if ell == 0 {
        return Ok(Rat::one());
    }
    let data = place.residue_data()?;
    let hist = value_distribution(form, ell, place, budget_cells)?;
    Ok(measure(hist.count(rho), data.p, ell * form.dim()))
}

/// Which `rho` a series is taken at: `rho = 0` exactly, or `rho = p^(2T)`
/// (the square of a uniformizer power with unit part 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhoSpec {
    Zero,
    Valuation(u32),
}

impl RhoSpec {
    fn residue(self, p: u64, modulus: u64) -> u64 {
        match self {
            RhoSpec::Zero => 0,
            RhoSpec::Valuation(t) => {
                // p^(2T) mod modulus
                let mut acc: u64 = 1 % modulus;
                for _ in 0..2 * t {
                    acc = acc * (p % modulus) % modulus;
                }
                acc
            }
        }
    }
}

/// The measures `X_l(rho)` for `l = 0..=lmax`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleSeries {
    pub rho: RhoSpec,
    pub coeffs: Vec<Rat>,
}

pub fn x_series_oracle(
    form: &ConcreteForm,
    rho: RhoSpec,
    lmax: u32,
    place: &GoodPlace,
    budget_cells: u64,
) -> Result<OracleSeries> {
    let data = place.residue_data()?;
    let mut coeffs = vec![Rat::one()];
    for ell in 1..=lmax {
        let hist = value_distribution(form, ell, place, budget_cells)?;
        let r = rho.residue(data.p, hist.modulus());
        coeffs.push(measure(hist.count(r), data.p, ell * form.dim()));
    }
    Ok(OracleSeries { rho, coeffs })
}

/// The table of `X_l(p^(2T))` for `T <= tmax`, `l <= lmax`, indexed
/// `[T][l]`.  Each histogram is built once and shared across `T`.
pub fn pi_table_oracle(
    form: &ConcreteForm,
    tmax: u32,
    lmax: u32,
    place: &GoodPlace,
    budget_cells: u64,
) -> Result<Vec<Vec<Rat>>> {
    let data = place.residue_data()?;
    let mut table = vec![vec![Rat::one()]; tmax as usize + 1];
    for ell in 1..=lmax {
        let hist = value_distribution(form, ell, place, budget_cells)?;
        for (t, row) in table.iter_mut().enumerate() {
            let r = RhoSpec::Valuation(t as u32).residue(data.p, hist.modulus());
            row.push(measure(hist.count(r), data.p, ell * form.dim()));
        }
    }
    Ok(table)
}

/// Coefficients of the Weil local zeta integral: `X_l(0) - X_(l+1)(0)` for
/// `l <= lmax`.  Needs histograms one level deeper than `lmax`.
pub fn weil_zeta_oracle(
    form: &ConcreteForm,
    lmax: u32,
    place: &GoodPlace,
    budget_cells: u64,
) -> Result<Vec<Rat>> {
    let series = x_series_oracle(form, RhoSpec::Zero, lmax + 1, place, budget_cells)?;
    Ok(series.coeffs.windows(2).map(|w| &w[0] - &w[1]).collect())
}

/// Exhaustive check, at precision `p^l`, that an anisotropic diagonal form
/// satisfies `ord B(x) = min_i ord(c_i x_i^2)`.
///
/// Coordinates whose terms all have order `>= l` are indeterminate at this
/// precision and are skipped.  Errors unless the form has square terms only
/// and is anisotropic (dimension 1, or dimension 2 with non-square
/// `-c_1*c_2`).
pub fn aniso_valuation_check(form: &ConcreteForm, ell: u32, place: &GoodPlace) -> Result<bool> {
    let data = place.residue_data()?;
    if form.hyp_count != 0 || form.square_coeffs.is_empty() || form.square_coeffs.len() > 2 {
        return Err(Error::NonAnisotropic);
    }
    if form.square_coeffs.len() == 2 {
        let prod = -form.square_coeffs[0] * form.square_coeffs[1];
        if chi(prod, data.p)? != Sign::Minus {
            return Err(Error::NonAnisotropic);
        }
    }
    let modulus = checked_pow(data.p, ell)?;
    let ord_of = |v: u64| -> u32 {
        if v == 0 {
            return ell;
        }
        let mut v = v;
        let mut ord = 0;
        while v.is_multiple_of(data.p) {
            v /= data.p;
            ord += 1;
        }
        ord
    };
    let coeffs: Vec<u64> = form
        .square_coeffs
        .iter()
        .map(|c| c.rem_euclid(modulus as i64) as u64)
        .collect();
    let n = coeffs.len();
    let mut coords = vec![0u64; n];
    loop {
        let mut total: u64 = 0;
        let mut min_ord = ell;
        for (i, &c) in coeffs.iter().enumerate() {
            let term = c * (coords[i] * coords[i] % modulus) % modulus;
            total = (total + term) % modulus;
            min_ord = min_ord.min(ord_of(term));
        }
        if min_ord < ell && ord_of(total) != min_ord {
            return Ok(false);
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(true);
            }
            coords[pos] += 1;
            if coords[pos] < modulus {
                break;
            }
            coords[pos] = 0;
            pos += 1;
        }
    }
}
