//! Residues in `Q[t]/(m(t))` for `m = t^N - 1`, `nu_N = 1 + t + ... + t^{N-1}`
//! or `Phi_d`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::Serialize;

use super::arith::gcd;
use super::cyclotomic::cyclotomic_poly;
use super::laurent::LaurentPoly;
use super::scalar::{int, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Modulus {
    /// `t^N - 1`
    FullCycle(u64),
    /// `t^{N-1} + ... + t + 1`
    AugCycle(u64),
    /// `Phi_d(t)`
    Cyclotomic(u64),
}

impl Modulus {
    /// The order of `t` in the quotient ring (an exponent period).
    pub fn period(&self) -> u64 {
        match *self {
            Modulus::FullCycle(n) | Modulus::AugCycle(n) | Modulus::Cyclotomic(n) => n,
        }
    }

    pub fn poly(&self) -> LaurentPoly {
        match *self {
            Modulus::FullCycle(n) => LaurentPoly::t_pow_minus_one(n as i64),
            Modulus::AugCycle(n) => LaurentPoly::geometric(n),
            Modulus::Cyclotomic(d) => cyclotomic_poly(d),
        }
    }

    pub fn degree(&self) -> u64 {
        match *self {
            Modulus::FullCycle(n) => n,
            Modulus::AugCycle(n) => n - 1,
            Modulus::Cyclotomic(d) => super::arith::euler_phi(d),
        }
    }

    fn check(&self) -> Result<()> {
        match *self {
            Modulus::FullCycle(n) | Modulus::Cyclotomic(n) if n >= 1 => Ok(()),
            Modulus::AugCycle(n) if n >= 2 => Ok(()),
            _ => Err(Error::InvalidParameters(format!("degenerate modulus {self}"))),
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Modulus::FullCycle(n) => write!(f, "t^{n} - 1"),
            Modulus::AugCycle(n) => write!(f, "nu_{n}"),
            Modulus::Cyclotomic(d) => write!(f, "Phi_{d}"),
        }
    }
}

/// A class in `Q[t]/(modulus)`, stored as its canonical remainder.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Residue {
    modulus: Modulus,
    rep: LaurentPoly,
}

fn reduce(p: &LaurentPoly, m: Modulus) -> LaurentPoly {
    let n = m.period() as i64;
    let mut folded = LaurentPoly::zero();
    for (e, c) in p.terms() {
        folded.add_term(e.rem_euclid(n), c.clone());
    }
    match m {
        Modulus::FullCycle(_) => folded,
        Modulus::AugCycle(_) => {
            let top = folded.coeff(n - 1);
            if top.is_zero() {
                folded
            } else {
                &folded - &LaurentPoly::geometric(n as u64).scale(&top)
            }
        }
        Modulus::Cyclotomic(d) => folded.rem(&cyclotomic_poly(d)).expect("Phi_d is nonzero"),
    }
}

impl Residue {
    pub fn new(p: &LaurentPoly, modulus: Modulus) -> Result<Self> {
        modulus.check()?;
        Ok(Residue { modulus, rep: reduce(p, modulus) })
    }

    pub fn from_scalar(c: Scalar, modulus: Modulus) -> Result<Self> {
        Self::new(&LaurentPoly::constant(c), modulus)
    }

    pub fn from_int(c: i64, modulus: Modulus) -> Result<Self> {
        Self::from_scalar(int(c), modulus)
    }

    /// The class of `t^k`.
    pub fn t_pow(k: i64, modulus: Modulus) -> Result<Self> {
        Self::new(&LaurentPoly::t_pow(k), modulus)
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn rep(&self) -> &LaurentPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rep.is_one()
    }

    fn same_ring(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "residues from different rings");
    }

    fn wrap(&self, p: &LaurentPoly) -> Self {
        Residue { modulus: self.modulus, rep: reduce(p, self.modulus) }
    }

    /// Embed a polynomial into the same ring as `self`.
    pub fn lift(&self, p: &LaurentPoly) -> Self {
        self.wrap(p)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Residue { modulus: self.modulus, rep: self.rep.scale(c) }
    }

    /// Multiplicative inverse by extended Euclid against the modulus.
    pub fn inverse(&self) -> Result<Self> {
        let m = self.modulus.poly();
        if self.rep.is_zero() {
            return Err(Error::NotInvertible { factor: m.to_string() });
        }
        let (g, s, _) = self.rep.ext_gcd(&m)?;
        if !g.is_one() {
            return Err(Error::NotInvertible { factor: g.to_string() });
        }
        Ok(self.wrap(&s))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = self.wrap(&LaurentPoly::one());
        let mut b = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        Ok(acc)
    }

    /// The ring automorphism `t -> t^k`, `gcd(k, period) = 1`.
    pub fn automorphism(&self, k: i64) -> Result<Self> {
        let n = self.modulus.period() as i64;
        if gcd(k, n) != 1 {
            return Err(Error::InvalidParameters(format!("t -> t^{k} is not an automorphism modulo {}", self.modulus)));
        }
        Ok(self.wrap(&self.rep.subs_power(k)))
    }

    /// Complex conjugation `t -> t^-1`.
    pub fn conj(&self) -> Self {
        self.automorphism(-1).expect("-1 is always a unit")
    }

    /// Image in `Q(zeta_d) = Q[t]/Phi_d` for `d` dividing the period.
    pub fn to_cyclotomic(&self, d: u64) -> Result<Self> {
        let n = self.modulus.period();
        let ok = match self.modulus {
            Modulus::FullCycle(_) => n.is_multiple_of(d),
            Modulus::AugCycle(_) => n.is_multiple_of(d) && d >= 2,
            Modulus::Cyclotomic(e) => e == d,
        };
        if !ok {
            return Err(Error::InvalidParameters(format!("Phi_{d} does not divide {}", self.modulus)));
        }
        Residue::new(&self.rep, Modulus::Cyclotomic(d))
    }

    /// Change modulus along a divisibility `new | old`.
    pub fn project(&self, modulus: Modulus) -> Result<Self> {
        let (m_old, m_new) = (self.modulus.poly(), modulus.poly());
        if !m_old.rem(&m_new)?.is_zero() {
            return Err(Error::InvalidParameters(format!("{modulus} does not divide {}", self.modulus)));
        }
        Residue::new(&self.rep, modulus)
    }

    /// `(sign, k)` with `self = sign * t^k * other`, searching all trivial
    /// units `+-t^k`, `0 <= k < period`.
    pub fn unit_ratio(&self, other: &Self) -> Option<(i8, i64)> {
        self.same_ring(other);
        let n = self.modulus.period() as i64;
        for k in 0..n {
            let shifted = self.wrap(&other.rep.shift(k));
            if shifted == *self {
                return Some((1, k));
            }
            if (-&shifted) == *self {
                return Some((-1, k));
            }
        }
        None
    }
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.rep, self.modulus)
    }
}

impl Add<&Residue> for &Residue {
    type Output = Residue;
    fn add(self, rhs: &Residue) -> Residue {
        self.same_ring(rhs);
        Residue { modulus: self.modulus, rep: &self.rep + &rhs.rep }
    }
}

impl Sub<&Residue> for &Residue {
    type Output = Residue;
    fn sub(self, rhs: &Residue) -> Residue {
        self.same_ring(rhs);
        Residue { modulus: self.modulus, rep: &self.rep - &rhs.rep }
    }
}

impl Mul<&Residue> for &Residue {
    type Output = Residue;
    fn mul(self, rhs: &Residue) -> Residue {
        self.same_ring(rhs);
        self.wrap(&(&self.rep * &rhs.rep))
    }
}

impl Neg for &Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        Residue { modulus: self.modulus, rep: -&self.rep }
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        -&self
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        &self + &rhs
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        &self - &rhs
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_reps() {
        let r = Residue::new(&p("t^7 + t^-1"), Modulus::FullCycle(5)).unwrap();
        assert_eq!(r.rep(), &p("t^2 + t^4"));
        let r = Residue::new(&p("t^4"), Modulus::AugCycle(5)).unwrap();
        assert_eq!(r.rep(), &p("-1 - t - t^2 - t^3"));
        let r = Residue::new(&p("t^2"), Modulus::Cyclotomic(4)).unwrap();
        assert_eq!(r.rep(), &p("-1"));
        assert!(Residue::new(&p("1"), Modulus::AugCycle(1)).is_err());
    }

    #[test]
    fn inverse_examples() {
        let x = Residue::new(&p("t - 1"), Modulus::AugCycle(5)).unwrap();
        let y = x.inverse().unwrap();
        assert!((&x * &y).is_one());
        let one = Residue::from_int(1, Modulus::AugCycle(7)).unwrap();
        assert_eq!(one.inverse().unwrap(), one);
        let t = Residue::t_pow(1, Modulus::FullCycle(9)).unwrap();
        assert_eq!(t.inverse().unwrap().rep(), &p("t^8"));
        let bad = Residue::new(&p("t^2 - 1"), Modulus::AugCycle(6)).unwrap();
        match bad.inverse() {
            Err(Error::NotInvertible { factor }) => assert_eq!(factor, "1 + t"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn automorphisms_and_units() {
        let m = Modulus::AugCycle(8);
        let x = Residue::new(&p("2 + t + 3*t^3"), m).unwrap();
        assert_eq!(x.automorphism(3).unwrap().automorphism(3).unwrap(), x);
        assert_eq!(x.conj().conj(), x);
        assert!(x.automorphism(2).is_err());
        let y = -&(&x * &Residue::t_pow(5, m).unwrap());
        assert_eq!(y.unit_ratio(&x), Some((-1, 5)));
        assert_eq!(x.to_cyclotomic(4).unwrap().rep(), &p("2 - 2*t"));
    }
}
