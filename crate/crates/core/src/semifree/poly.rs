//! Laurent polynomials with non-negative integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, u64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(degree: i64, coeff: u64) -> Self {
        let mut p = Self::zero();
        p.add_term(degree, coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, u64)>) -> Self {
        let mut p = Self::zero();
        for (d, c) in terms {
            p.add_term(d, c);
        }
        p
    }

    pub fn add_term(&mut self, degree: i64, coeff: u64) {
        if coeff > 0 {
            *self.coeffs.entry(degree).or_insert(0) += coeff;
        }
    }

    pub fn coeff(&self, degree: i64) -> u64 {
        self.coeffs.get(&degree).copied().unwrap_or(0)
    }

    /// Nonzero terms in ascending degree.
    pub fn terms(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.coeffs.iter().map(|(&d, &c)| (d, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Sum of coefficients.
    pub fn weight(&self) -> u64 {
        self.coeffs.values().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(self.terms().chain(other.terms()))
    }

    /// Multiplication by `t^n`.
    pub fn shift(&self, n: i64) -> Self {
        Self::from_terms(self.terms().map(|(d, c)| (d + n, c)))
    }

    /// Terms whose degree has the given parity.
    pub fn parity_part(&self, parity: i64) -> Self {
        Self::from_terms(self.terms().filter(|(d, _)| d.rem_euclid(2) == parity))
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending degree: `1+t^2`, `2t^-1+t`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .terms()
            .map(|(d, c)| {
                let var = match d {
                    0 => String::new(),
                    1 => "t".into(),
                    _ => format!("t^{d}"),
                };
                match (c, var.is_empty()) {
                    (_, true) => c.to_string(),
                    (1, false) => var,
                    (_, false) => format!("{c}{var}"),
                }
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Accepts sums of terms `c`, `t`, `ct`, `t^n`, `ct^n`, `c*t^n` with
    /// optional braces around the exponent, e.g. `1+t^2`, `2t^{-2}+3`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |why: &str| Error::MalformedPoly(format!("{s:?}: {why}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        let mut p = LaurentPoly::zero();
        for term in compact.split('+') {
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let (coeff_str, var) = match term.find('t') {
                Some(i) => (&term[..i], Some(&term[i + 1..])),
                None => (term, None),
            };
            let coeff_str = coeff_str.strip_suffix('*').unwrap_or(coeff_str);
            let coeff: u64 = if coeff_str.is_empty() {
                if var.is_none() {
                    return Err(bad("empty term"));
                }
                1
            } else {
                coeff_str.parse().map_err(|_| bad("coefficients must be non-negative integers"))?
            };
            let degree: i64 = match var {
                None => 0,
                Some("") => 1,
                Some(rest) => {
                    let e = rest.strip_prefix('^').ok_or_else(|| bad("expected '^' after t"))?;
                    let e = e.strip_prefix('{').and_then(|x| x.strip_suffix('}')).unwrap_or(e);
                    e.parse().map_err(|_| bad("exponent must be an integer"))?
                }
            };
            p.add_term(degree, coeff);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p: LaurentPoly = "1 + t^2".parse().unwrap();
        assert_eq!(p, LaurentPoly::from_terms([(0, 1), (2, 1)]));
        assert_eq!(p.to_string(), "1+t^2");
        let q: LaurentPoly = "2t^{-2}+t+3*t^5+t".parse().unwrap();
        assert_eq!(q.to_string(), "2t^-2+2t+3t^5");
        assert_eq!("0".parse::<LaurentPoly>().unwrap(), LaurentPoly::zero());
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        for bad in ["", "1+", "t^", "x^2", "-1", "t^a"] {
            assert!(bad.parse::<LaurentPoly>().is_err(), "{bad}");
        }
    }

    #[test]
    fn arithmetic() {
        let p: LaurentPoly = "1+t^2".parse().unwrap();
        assert_eq!(p.shift(-2).to_string(), "t^-2+1");
        assert_eq!(p.add(&p).weight(), 4);
        assert_eq!(p.parity_part(1), LaurentPoly::zero());
        let r: LaurentPoly = "t+t^-1+1".parse().unwrap();
        assert_eq!(r.parity_part(1).to_string(), "t^-1+t");
    }
}
