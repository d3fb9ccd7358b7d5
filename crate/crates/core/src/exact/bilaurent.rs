//! Sparse Laurent polynomials in two variables `t`, `x` over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Exponent pair `(t-exponent, x-exponent)`. The derived lexicographic
/// order is a group order on `Z^2`, used as the term order for division.
pub type BiExp = (i64, i64);

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiLaurentPoly {
    terms: BTreeMap<BiExp, Scalar>,
}

impl BiLaurentPoly {
    pub fn zero() -> Self {
        BiLaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Scalar::one(), (0, 0))
    }

    pub fn monomial(c: Scalar, e: BiExp) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (BiExp, Scalar)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Embed a polynomial in `t` alone.
    pub fn from_t(p: &LaurentPoly) -> Self {
        Self::from_terms(p.terms().map(|(e, c)| ((e, 0), c.clone())))
    }

    pub fn add_term(&mut self, e: BiExp, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (BiExp, &Scalar)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: BiExp) -> Scalar {
        self.terms.get(&e).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Multiply by `t^a x^b`.
    pub fn shift(&self, (a, b): BiExp) -> Self {
        BiLaurentPoly { terms: self.terms.iter().map(|(&(i, j), c)| ((i + a, j + b), c.clone())).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiLaurentPoly { terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect() }
    }

    pub fn x_degree_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().map(|e| e.1).min()?;
        let hi = self.terms.keys().map(|e| e.1).max()?;
        Some((lo, hi))
    }

    pub fn t_degree_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().map(|e| e.0).min()?;
        let hi = self.terms.keys().map(|e| e.0).max()?;
        Some((lo, hi))
    }

    /// Coefficients as a polynomial in `x` over `Q[t, t^-1]`.
    pub fn x_coeffs(&self) -> BTreeMap<i64, LaurentPoly> {
        let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            out.entry(j).or_default().add_term(i, c.clone());
        }
        out
    }

    /// Substitute `x = 1`.
    pub fn at_x_one(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(&(i, _), c)| (i, c.clone())))
    }

    /// Substitute `t = T^a`, `x = T^b`.
    pub fn subs_monomial(&self, a: i64, b: i64) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(&(i, j), c)| (a * i + b * j, c.clone())))
    }

    /// Sum of coefficients, i.e. the value at `t = x = 1`.
    pub fn eval_one(&self) -> Scalar {
        self.terms.values().fold(Scalar::zero(), |acc, c| acc + c)
    }

    /// Canonical representative of `{+-t^a x^b P}`: both exponent minima
    /// shifted to 0, coefficient of the lexicographically least exponent positive.
    pub fn normalize_unit(&self) -> Result<Self> {
        let (tlo, _) = self.t_degree_range().ok_or(Error::ZeroNormalization)?;
        let (xlo, _) = self.x_degree_range().unwrap();
        let p = self.shift((-tlo, -xlo));
        if p.terms.values().next().unwrap().is_negative() {
            Ok(-p)
        } else {
            Ok(p)
        }
    }

    pub fn unit_equivalent(&self, other: &Self) -> bool {
        match (self.normalize_unit(), other.normalize_unit()) {
            (Ok(a), Ok(b)) => a == b,
            _ => self.is_zero() && other.is_zero(),
        }
    }

    /// Exact division in `Q[t^+-1, x^+-1]`.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        let (&dlead, dlc) = d.terms.iter().next_back().ok_or(Error::ZeroPolynomial("division by zero"))?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // degrees in each variable are additive, so an exact quotient lives
        // in this box; lex steps strictly decrease, so the loop terminates
        let (ft, dt) = (self.t_degree_range().unwrap(), d.t_degree_range().unwrap());
        let (fx, dx) = (self.x_degree_range().unwrap(), d.x_degree_range().unwrap());
        let t_box = (ft.0 - dt.0)..=(ft.1 - dt.1);
        let x_box = (fx.0 - dx.0)..=(fx.1 - dx.1);
        let dlc_inv = dlc.recip();
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some((&rlead, rlc)) = r.terms.iter().next_back() {
            let qe = (rlead.0 - dlead.0, rlead.1 - dlead.1);
            if !t_box.contains(&qe.0) || !x_box.contains(&qe.1) {
                return Err(Error::InexactDivision);
            }
            let qc = rlc * &dlc_inv;
            for (&(i, j), c) in &d.terms {
                r.add_term((i + qe.0, j + qe.1), -(&qc * c));
            }
            q.add_term(qe, qc);
        }
        Ok(q)
    }
}

impl fmt::Debug for BiLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BiLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_terms(self.terms.iter().map(|(&e, c)| (e, c)), true))
    }
}

impl std::str::FromStr for BiLaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::text::parse_bilaurent(s)
    }
}

impl Neg for BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn neg(mut self) -> BiLaurentPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Add<&BiLaurentPoly> for &BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn add(self, rhs: &BiLaurentPoly) -> BiLaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub<&BiLaurentPoly> for &BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn sub(self, rhs: &BiLaurentPoly) -> BiLaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul<&BiLaurentPoly> for &BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn mul(self, rhs: &BiLaurentPoly) -> BiLaurentPoly {
        let mut out = BiLaurentPoly::zero();
        for (&(a, b), ca) in &self.terms {
            for (&(c, d), cb) in &rhs.terms {
                out.add_term((a + c, b + d), ca * cb);
            }
        }
        out
    }
}

impl Add for BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn add(self, rhs: BiLaurentPoly) -> BiLaurentPoly {
        &self + &rhs
    }
}

impl Sub for BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn sub(self, rhs: BiLaurentPoly) -> BiLaurentPoly {
        &self - &rhs
    }
}

impl Mul for BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn mul(self, rhs: BiLaurentPoly) -> BiLaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BiLaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(b("t^2*x - t^3*x^2").normalize_unit().unwrap(), b("1 - t*x"));
        assert_eq!(b("-1 - t*x").normalize_unit().unwrap(), b("1 + t*x"));
        let d35 = b("t^15*x^7 + t^12*x^6 + t^10*x^5 + t^9*x^4 + t^6*x^3 + t^5*x^2 + t^3*x + 1");
        assert_eq!(d35.normalize_unit().unwrap(), d35);
        assert!(BiLaurentPoly::zero().normalize_unit().is_err());
    }

    #[test]
    fn exact_division() {
        // (t^{pq} x^p - 1) / (t^q x - 1) at p = 3, q = 2
        let num = b("t^6*x^3 - 1");
        let den = b("t^2*x - 1");
        assert_eq!(num.exact_div(&den).unwrap(), b("1 + t^2*x + t^4*x^2"));
        assert_eq!(b("x + t").exact_div(&b("x")).unwrap(), b("1 + t*x^-1"));
        assert_eq!(b("x + t").exact_div(&b("x - 1")), Err(Error::InexactDivision));
        let f = b("t^-1*x + 3*x^-2 - t^4");
        let g = b("2 - t*x^-1 + x^5");
        assert_eq!((&f * &g).exact_div(&g).unwrap(), f);
    }

    #[test]
    fn substitutions() {
        let d = b("1 + t^2*x + t^3*x^2 + t^4*x^3 + t^6*x^4");
        assert_eq!(d.at_x_one(), "1 + t^2 + t^3 + t^4 + t^6".parse().unwrap());
        assert_eq!(d.eval_one(), crate::exact::scalar::int(5));
    }
}
