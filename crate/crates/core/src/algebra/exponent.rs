//! Integer linear forms `c0 + ca*alpha + cb*beta`.
//!
//! Every exponent appearing in the local factors is of this shape, so a
//! zeta or L factor is determined by three integers: `q^-(c0+ca*a+cb*b)`
//! becomes the monomial `q^(-c0) * a^ca * z^cb`.

use std::fmt;

/// The linear form `c0 + ca*alpha + cb*beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ExponentForm {
    pub c0: i64,
    pub ca: i64,
    pub cb: i64,
}

impl ExponentForm {
    pub fn new(c0: i64, ca: i64, cb: i64) -> Self {
        ExponentForm { c0, ca, cb }
    }

    /// `alpha + c0`
    pub fn alpha_plus(c0: i64) -> Self {
        ExponentForm::new(c0, 1, 0)
    }

    /// `beta + c0`
    pub fn beta_plus(c0: i64) -> Self {
        ExponentForm::new(c0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.c0 == 0 && self.ca == 0 && self.cb == 0
    }

    /// Substitute `alpha -> alpha + beta0`.
    pub fn shift_alpha(&self, beta0: i64) -> Self {
        ExponentForm::new(self.c0 + self.ca * beta0, self.ca, self.cb)
    }
}

impl fmt::Display for ExponentForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let var = |c: i64, name: &str| -> Option<String> {
            match c {
                0 => None,
                1 => Some(name.to_string()),
                -1 => Some(format!("-{name}")),
                c => Some(format!("{c}{name}")),
            }
        };
        if let Some(s) = var(self.ca, "alpha") {
            parts.push(s);
        }
        if let Some(s) = var(self.cb, "beta") {
            parts.push(s);
        }
        if self.c0 != 0 || parts.is_empty() {
            parts.push(self.c0.to_string());
        }
        // lead with a positive term when there is one
        if parts[0].starts_with('-') {
            if let Some(i) = parts.iter().position(|p| !p.starts_with('-')) {
                let lead = parts.remove(i);
                parts.insert(0, lead);
            }
        }
        let mut out = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i == 0 {
                out.push_str(p);
            } else if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(ExponentForm::alpha_plus(0).to_string(), "alpha");
        assert_eq!(ExponentForm::new(1, 1, 2).to_string(), "alpha + 2beta + 1");
        assert_eq!(ExponentForm::new(-2, 1, 0).to_string(), "alpha - 2");
        assert_eq!(ExponentForm::new(2, -1, 0).to_string(), "2 - alpha");
        assert_eq!(ExponentForm::new(0, 0, 0).to_string(), "0");
        assert_eq!(ExponentForm::new(-1, -1, 0).to_string(), "-alpha - 1");
    }

    #[test]
    fn alpha_shift() {
        let e = ExponentForm::new(-3, 2, 1);
        assert_eq!(e.shift_alpha(2), ExponentForm::new(1, 2, 1));
        assert_eq!(
            ExponentForm::new(5, 0, 1).shift_alpha(7),
            ExponentForm::new(5, 0, 1)
        );
    }
}
