//! Bivariate polynomials over the exact rationals.
//!
//! The two formal variables are `a = q^(-alpha)` and `z = q^(-beta)`.  Terms
//! are stored sparsely, keyed by `(dega, degz)` in a `BTreeMap`, so the term
//! order is canonical and equality is structural.  Zero coefficients are
//! never stored; the zero polynomial has no terms.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::rat::{rat_to_string, Rat};

/// One of the two formal variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    A,
    Z,
}

/// A single term `coeff * a^dega * z^degz` with `coeff != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial2 {
    pub coeff: Rat,
    pub dega: u32,
    pub degz: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2::default()
    }

    pub fn one() -> Self {
        Poly2::constant(Rat::from_integer(1.into()))
    }

    pub fn constant(c: Rat) -> Self {
        Poly2::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rat, dega: u32, degz: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((dega, degz), c);
        }
        Poly2 { terms }
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::A => Poly2::monomial(Rat::from_integer(1.into()), 1, 0),
            Var::Z => Poly2::monomial(Rat::from_integer(1.into()), 0, 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Rat {
        self.terms.get(&(0, 0)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeff(&self, dega: u32, degz: u32) -> Rat {
        self.terms
            .get(&(dega, degz))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Terms in canonical `(dega, degz)` order.
    pub fn monomials(&self) -> impl Iterator<Item = Monomial2> + '_ {
        self.terms.iter().map(|(&(dega, degz), coeff)| Monomial2 {
            coeff: coeff.clone(),
            dega,
            degz,
        })
    }

    pub fn max_dega(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn max_degz(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    pub fn min_dega(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).min().unwrap_or(0)
    }

    pub fn min_degz(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).min().unwrap_or(0)
    }

    /// True when no term involves `a`.
    pub fn is_z_only(&self) -> bool {
        self.max_dega() == 0
    }

    fn insert(&mut self, key: (u32, u32), c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Poly2 {
        if c.is_zero() {
            return Poly2::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Divide every term by `a^i z^j`.  Panics unless every term is divisible.
    pub fn shift_down(&self, i: u32, j: u32) -> Poly2 {
        Poly2 {
            terms: self
                .terms
                .iter()
                .map(|(&(da, dz), v)| {
                    assert!(da >= i && dz >= j, "term not divisible by monomial");
                    ((da - i, dz - j), v.clone())
                })
                .collect(),
        }
    }

    /// Replace `var` by the monomial `c * a^ia * z^jz` in every term.
    pub fn substitute_monomial(&self, var: Var, c: &Rat, ia: u32, jz: u32) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(da, dz), v) in &self.terms {
            let (deg_var, da0, dz0) = match var {
                Var::A => (da, 0, dz),
                Var::Z => (dz, da, 0),
            };
            let mut coeff = v.clone();
            let mut cp = Rat::from_integer(1.into());
            for _ in 0..deg_var {
                cp *= c;
            }
            coeff *= cp;
            out.insert((da0 + ia * deg_var, dz0 + jz * deg_var), coeff);
        }
        out
    }

    pub fn eval(&self, a: &Rat, z: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(da, dz), v) in &self.terms {
            let mut t = v.clone();
            for _ in 0..da {
                t *= a;
            }
            for _ in 0..dz {
                t *= z;
            }
            acc += t;
        }
        acc
    }

    /// Evaluate `z = 1`, leaving a polynomial in `a`.
    pub fn eval_z_one(&self) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(da, _), v) in &self.terms {
            out.insert((da, 0), v.clone());
        }
        out
    }

    /// Exact quotient by `1 - z`, or `None` when not divisible.
    ///
    /// Divisibility is equivalent to the vanishing of `self` at `z = 1`.
    pub fn divide_one_minus_z(&self) -> Option<Poly2> {
        if self.is_zero() {
            return Some(Poly2::zero());
        }
        if !self.eval_z_one().is_zero() {
            return None;
        }
        // Group by z-degree: p = sum_j p_j(a) z^j, with p = (1-z) s and
        // s = sum_j s_j z^j given by the partial sums s_j = p_0 + ... + p_j.
        let maxz = self.max_degz();
        let mut out = Poly2::zero();
        let mut partial: BTreeMap<u32, Rat> = BTreeMap::new();
        for j in 0..maxz {
            for (&(da, dz), v) in &self.terms {
                if dz == j {
                    *partial.entry(da).or_insert_with(Rat::zero) += v.clone();
                }
            }
            for (&da, c) in &partial {
                out.insert((da, j), c.clone());
            }
        }
        Some(out)
    }
}

impl Add for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.insert(*k, v.clone());
        }
        out
    }
}

impl Sub for &Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.insert(*k, -v.clone());
        }
        out
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(i1, j1), v1) in &self.terms {
            for (&(i2, j2), v2) in &rhs.terms {
                out.insert((i1 + i2, j1 + j2), v1 * v2);
            }
        }
        out
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        Poly2 {
            terms: self.terms.iter().map(|(k, v)| (*k, -v.clone())).collect(),
        }
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for m in self.monomials() {
            let mut body = String::new();
            if m.dega > 0 {
                body.push('a');
                if m.dega > 1 {
                    body.push_str(&format!("^{}", m.dega));
                }
            }
            if m.degz > 0 {
                if !body.is_empty() {
                    body.push('*');
                }
                body.push('z');
                if m.degz > 1 {
                    body.push_str(&format!("^{}", m.degz));
                }
            }
            let c = m.coeff;
            let (sign, mag) = if c < Rat::zero() { ("-", -c) } else { ("+", c) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let one = Rat::from_integer(1.into());
            if body.is_empty() {
                write!(f, "{}", rat_to_string(&mag))?;
            } else if mag == one {
                write!(f, "{}", body)?;
            } else {
                write!(f, "{}*{}", rat_to_string(&mag), body)?;
            }
        }
        Ok(())
    }
}
