//! Text and JSON forms of polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use super::{FactoredPoly, IntPoly, PolyError};

/// Renders like `x^4 - 3x^2 + 1`, highest degree first.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Renders like `x^2 (x^2 - 3)`; the unit is omitted when it is 1.
impl fmt::Display for FactoredPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.factors.is_empty() || !self.unit.is_one() {
            if self.unit == -BigInt::one() && !self.factors.is_empty() {
                parts.push("-".to_string());
            } else {
                parts.push(self.unit.to_string());
            }
        }
        for (root, e) in &self.factors {
            let base = if root.is_zero_root() {
                "x".to_string()
            } else {
                format!("({})", root.minpoly())
            };
            if *e == 1 {
                parts.push(base);
            } else {
                parts.push(format!("{base}^{e}"));
            }
        }
        let mut out = parts.join(" ");
        if out.starts_with("- ") {
            out.remove(1);
        }
        f.write_str(&out)
    }
}

/// Decimal coefficient strings, index = degree.
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs().len()))?;
        for c in self.coeffs() {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl IntPoly {
    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.coeffs().iter().map(ToString::to_string).collect()
    }

    /// Parses a comma-separated coefficient list, constant term first:
    /// `"-3,0,1"` is `x^2 - 3`.
    pub fn parse_coeff_list(text: &str) -> Result<IntPoly, PolyError> {
        let coeffs = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<BigInt>()
                    .map_err(|e| PolyError::Parse(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::super::factor;
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn polynomial_text() {
        assert_eq!(p(&[0, 0, -3, 0, 1]).to_string(), "x^4 - 3x^2");
        assert_eq!(p(&[0, -3, 0, 1]).to_string(), "x^3 - 3x");
        assert_eq!(p(&[1, -1]).to_string(), "-x + 1");
        assert_eq!(p(&[-7]).to_string(), "-7");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn factored_text() {
        assert_eq!(
            factor(&p(&[0, 0, -3, 0, 1])).unwrap().to_string(),
            "x^2 (x^2 - 3)"
        );
        assert_eq!(factor(&p(&[0, 0, 1])).unwrap().to_string(), "x^2");
        assert_eq!(factor(&p(&[0, 0, -2])).unwrap().to_string(), "-2 x^2");
        assert_eq!(factor(&p(&[1, -1])).unwrap().to_string(), "-(x - 1)");
        assert_eq!(factor(&p(&[5])).unwrap().to_string(), "5");
    }

    #[test]
    fn json_coefficients() {
        let s = serde_json::to_string(&p(&[-3, 0, 1])).unwrap();
        assert_eq!(s, r#"["-3","0","1"]"#);
    }

    #[test]
    fn coefficient_list_parsing() {
        assert_eq!(
            IntPoly::parse_coeff_list("-3, 0,1").unwrap(),
            p(&[-3, 0, 1])
        );
        assert!(IntPoly::parse_coeff_list("1,a").is_err());
    }
}
