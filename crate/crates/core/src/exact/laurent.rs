//! Sparse Laurent polynomials in one variable `t` over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::scalar::{int, Scalar};
use crate::error::{Error, Result};

/// `sum c_e t^e`, stored sparsely with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Scalar>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Scalar, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    /// `t^e`
    pub fn t_pow(e: i64) -> Self {
        Self::monomial(Scalar::one(), e)
    }

    /// `t^e - 1`
    pub fn t_pow_minus_one(e: i64) -> Self {
        Self::t_pow(e) - Self::one()
    }

    /// Dense integer coefficients for `t^0, t^1, ...`.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(e, &c)| (e as i64, int(c))))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Scalar)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// `1 + t + ... + t^{n-1}`
    pub fn geometric(n: u64) -> Self {
        Self::from_terms((0..n as i64).map(|e| (e, Scalar::one())))
    }

    pub fn add_term(&mut self, e: i64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Scalar)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> Scalar {
        self.terms.get(&e).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Leading coefficient (of the highest power).
    pub fn lc(&self) -> Option<&Scalar> {
        self.terms.values().next_back()
    }

    /// `max exponent - min exponent`.
    pub fn span(&self) -> Result<i64> {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => Ok(hi - lo),
            _ => Err(Error::ZeroPolynomial("span of zero")),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect() }
    }

    /// The substitution `t -> t^k`.
    pub fn subs_power(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, c)| (e * k, c.clone())))
    }

    pub fn eval(&self, x: &Scalar) -> Result<Scalar> {
        if x.is_zero() && !self.is_polynomial() {
            return Err(Error::InvalidParameters("negative power evaluated at 0".into()));
        }
        let mut acc = Scalar::zero();
        for (&e, c) in &self.terms {
            let p =
                if e >= 0 { num_traits::pow(x.clone(), e as usize) } else { num_traits::pow(x.recip(), (-e) as usize) };
            acc += c * p;
        }
        Ok(acc)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Canonical representative of `{+-t^k P}`: lowest exponent 0, lowest
    /// coefficient positive.
    pub fn normalize_unit(&self) -> Result<Self> {
        let lo = self.min_exp().ok_or(Error::ZeroNormalization)?;
        let p = self.shift(-lo);
        if p.coeff(0).is_negative() {
            Ok(-p)
        } else {
            Ok(p)
        }
    }

    /// `self ≐ other`, i.e. equal up to `+-t^k`.
    pub fn unit_equivalent(&self, other: &Self) -> bool {
        match (self.normalize_unit(), other.normalize_unit()) {
            (Ok(a), Ok(b)) => a == b,
            _ => self.is_zero() && other.is_zero(),
        }
    }

    pub fn monic(&self) -> Result<Self> {
        let lc = self.lc().ok_or(Error::ZeroPolynomial("monic of zero"))?;
        Ok(self.scale(&lc.recip()))
    }

    /// Euclidean division in `Q[t]`; both operands must be polynomials.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial("division by zero"));
        }
        if !self.is_polynomial() || !d.is_polynomial() {
            return Err(Error::InvalidParameters("div_rem needs nonnegative exponents".into()));
        }
        let dd = d.max_exp().unwrap();
        let dlc_inv = d.lc().unwrap().recip();
        let mut q = Self::zero();
        let mut r = self.clone();
        while let Some(rd) = r.max_exp() {
            if rd < dd {
                break;
            }
            let c = r.lc().unwrap() * &dlc_inv;
            let k = rd - dd;
            for (e, dc) in d.terms() {
                r.add_term(e + k, -(&c * dc));
            }
            q.add_term(k, c);
        }
        Ok((q, r))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.div_rem(d)?.1)
    }

    /// Exact division in `Q[t, t^-1]`.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial("division by zero"));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (sa, sd) = (self.min_exp().unwrap(), d.min_exp().unwrap());
        let (q, r) = self.shift(-sa).div_rem(&d.shift(-sd))?;
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(q.shift(sa - sd))
    }

    /// Extended Euclid in `Q[t]`: `(g, s, u)` with `s*self + u*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial("gcd(0, 0)"));
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut u0, mut u1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s2 = &s0 - &(&q * &s1);
            let u2 = &u0 - &(&q * &u1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            u0 = std::mem::replace(&mut u1, u2);
        }
        let inv = r0.lc().unwrap().recip();
        Ok((r0.scale(&inv), s0.scale(&inv), u0.scale(&inv)))
    }

    pub fn gcd(&self, other: &Self) -> Result<Self> {
        Ok(self.ext_gcd(other)?.0)
    }

    /// Formal derivative (polynomial part only is meaningful for Laurent input too).
    pub fn derivative(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, c)| (e - 1, c * int(e))))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|(&e, c)| ((e, 0), c));
        f.write_str(&super::text::format_terms(terms, false))
    }
}

impl std::str::FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::text::parse_laurent(s)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c.clone());
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$f(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$f(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::ratio;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(p("-t^3 + t^5").normalize_unit().unwrap(), p("1 - t^2"));
        assert_eq!(p("7").normalize_unit().unwrap(), p("7"));
        assert_eq!(p("-7").normalize_unit().unwrap(), p("7"));
        assert_eq!(p("t^-2 + t").normalize_unit().unwrap(), p("1 + t^3"));
        assert_eq!(LaurentPoly::zero().normalize_unit(), Err(Error::ZeroNormalization));
    }

    #[test]
    fn division() {
        let f = p("t^5 - 1");
        let (q, r) = f.div_rem(&p("t - 1")).unwrap();
        assert_eq!(q, p("1 + t + t^2 + t^3 + t^4"));
        assert!(r.is_zero());
        let (q, r) = p("t^2 + 1").div_rem(&p("2*t")).unwrap();
        assert_eq!(q, LaurentPoly::monomial(ratio(1, 2), 1));
        assert_eq!(r, LaurentPoly::one());
        assert_eq!(p("t^2 + 1").exact_div(&p("t + 1")), Err(Error::InexactDivision));
        assert_eq!(p("t^-1 - t^3").exact_div(&p("1 - t")).unwrap(), p("t^-1 + 1 + t + t^2"));
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = p("t^4 - 1");
        let b = p("t^3 + t^2 + t + 1");
        let (g, s, u) = a.ext_gcd(&b).unwrap();
        assert_eq!(g, b);
        assert_eq!(&(&s * &a) + &(&u * &b), g);
        let (g, s, u) = p("t - 1").ext_gcd(&p("t^2 + t + 1")).unwrap();
        assert!(g.is_one());
        assert!((&(&s * &p("t - 1")) + &(&u * &p("t^2 + t + 1"))).is_one());
    }

    #[test]
    fn substitution_and_eval() {
        assert_eq!(p("1 + t").subs_power(-2), p("1 + t^-2"));
        assert_eq!(p("1 + t^2 + t^-1").eval(&int(2)).unwrap(), ratio(11, 2));
        assert_eq!(p("t^3 - t").span().unwrap(), 2);
    }
}
