//! Symmetric Laurent polynomials `a_0 + sum a_i <t^i>` with
//! `<t^i> = t^i + t^-i`, their reduction modulo `t^N - 1`, and equality of
//! the value sequences they induce at the roots of unity `zeta_d`, `d | N`,
//! `d >= 2`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::scalar::{format, int, Scalar};
use crate::exact::{LaurentPoly, Modulus, Residue};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SymPoly {
    a0: Scalar,
    coeffs: BTreeMap<u64, Scalar>,
}

/// A trivial unit `sign * t^shift`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TrivialUnit {
    pub sign: i8,
    pub shift: i64,
}

impl fmt::Display for TrivialUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign < 0 { "-" } else { "+" };
        match self.shift {
            0 => write!(f, "{s}1"),
            1 => write!(f, "{s}t"),
            k => write!(f, "{s}t^{k}"),
        }
    }
}

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        SymPoly { a0: c, coeffs: BTreeMap::new() }
    }

    /// `<t^i>`; `<t^0>` is the constant 2.
    pub fn basis(i: u64) -> Self {
        let mut p = Self::zero();
        p.add_basis(i, Scalar::one());
        p
    }

    /// `sum c_i <t^i>` with index 0 meaning the constant term itself.
    pub fn from_terms(a0: Scalar, terms: impl IntoIterator<Item = (u64, Scalar)>) -> Self {
        let mut p = Self::constant(a0);
        for (i, c) in terms {
            p.add_basis(i, c);
        }
        p
    }

    pub fn from_ints(a0: i64, terms: &[(u64, i64)]) -> Self {
        Self::from_terms(int(a0), terms.iter().map(|&(i, c)| (i, int(c))))
    }

    /// Add `c * <t^i>`.
    pub fn add_basis(&mut self, i: u64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        if i == 0 {
            self.a0 += c * int(2);
            return;
        }
        let slot = self.coeffs.entry(i).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    pub fn a0(&self) -> &Scalar {
        &self.a0
    }

    /// `a_i`; index 0 returns `a_0`.
    pub fn coeff(&self, i: u64) -> Scalar {
        if i == 0 {
            return self.a0.clone();
        }
        self.coeffs.get(&i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Scalar)> + '_ {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.a0.is_zero() && self.coeffs.is_empty()
    }

    pub fn max_index(&self) -> u64 {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    pub fn is_reduced(&self, n: u64) -> bool {
        self.max_index() <= n / 2
    }

    /// The value at `t = 1`.
    pub fn at_one(&self) -> Scalar {
        self.coeffs.values().fold(self.a0.clone(), |acc, c| acc + c * int(2))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SymPoly { a0: &self.a0 * c, coeffs: self.coeffs.iter().map(|(&i, v)| (i, v * c)).collect() }
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        let mut p = LaurentPoly::constant(self.a0.clone());
        for (&i, c) in &self.coeffs {
            p.add_term(i as i64, c.clone());
            p.add_term(-(i as i64), c.clone());
        }
        p
    }

    /// Inverse of [`SymPoly::to_laurent`]; fails unless `p(t) = p(t^-1)`.
    pub fn from_laurent(p: &LaurentPoly) -> Result<Self> {
        let mut out = Self::constant(p.coeff(0));
        for (e, c) in p.terms() {
            if p.coeff(-e) != *c {
                return Err(Error::InvalidParameters(format!("{p} is not symmetric")));
            }
            if e > 0 {
                out.add_basis(e as u64, c.clone());
            }
        }
        Ok(out)
    }

    /// The class in `Q[t]/nu_N`.
    pub fn to_residue(&self, n: u64) -> Result<Residue> {
        Residue::new(&self.to_laurent(), Modulus::AugCycle(n))
    }

    pub fn parse(s: &str) -> Result<Self> {
        s.parse()
    }
}

/// `red(F)`: the representative modulo `t^N - 1` with all indices `<= N/2`.
pub fn sym_reduce(f: &SymPoly, n: u64) -> SymPoly {
    assert!(n >= 1, "sym_reduce needs N >= 1");
    let mut out = SymPoly::constant(f.a0.clone());
    for (&i, c) in &f.coeffs {
        let r = i % n;
        out.add_basis(r.min(n - r), c.clone());
    }
    out
}

/// `2 * (largest index with a nonzero coefficient)`.
pub fn sym_span(f: &SymPoly) -> Result<u64> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("span of zero"));
    }
    Ok(2 * f.max_index())
}

/// `red(t^{N/2} F)` by the index reflection `j -> N/2 - j`.
pub fn sym_shift_half(f: &SymPoly, n: u64) -> Result<SymPoly> {
    if n % 2 == 1 {
        return Err(Error::InvalidParameters(format!("N = {n} is odd")));
    }
    let f = sym_reduce(f, n);
    let h = n / 2;
    let mut out = SymPoly::constant(f.coeff(h) * int(2));
    out.add_basis(h, &f.a0 / int(2));
    for j in 1..h {
        out.add_basis(j, f.coeff(h - j));
    }
    Ok(out)
}

/// Whether `F` and `G` induce the same value sequence on `d | N`, `d >= 2`,
/// i.e. `F = G mod nu_N`.
pub fn value_seq_equal(f: &SymPoly, g: &SymPoly, n: u64) -> Result<bool> {
    Ok((f - g).to_residue(n)?.is_zero())
}

/// The trivial units that can relate real value sequences, in search order.
pub fn unit_candidates(n: u64) -> Vec<TrivialUnit> {
    let mut out = vec![TrivialUnit { sign: 1, shift: 0 }, TrivialUnit { sign: -1, shift: 0 }];
    if n.is_multiple_of(2) {
        let h = (n / 2) as i64;
        out.push(TrivialUnit { sign: 1, shift: h });
        out.push(TrivialUnit { sign: -1, shift: h });
    }
    out
}

/// The first unit `u` with `u * F = G` as value sequences.
pub fn control_equivalent(f: &SymPoly, g: &SymPoly, n: u64) -> Result<Option<TrivialUnit>> {
    let (fr, gr) = (f.to_residue(n)?, g.to_residue(n)?);
    for u in unit_candidates(n) {
        let uf = &fr * &Residue::t_pow(u.shift, Modulus::AugCycle(n))?;
        let uf = if u.sign < 0 { -uf } else { uf };
        if uf == gr {
            return Ok(Some(u));
        }
    }
    Ok(None)
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(Option<u64>, &Scalar)> = Vec::new();
        if !self.a0.is_zero() {
            parts.push((None, &self.a0));
        }
        parts.extend(self.coeffs.iter().map(|(&i, c)| (Some(i), c)));
        if parts.is_empty() {
            return f.write_str("0");
        }
        for (k, (idx, c)) in parts.into_iter().enumerate() {
            let neg = c.is_negative();
            f.write_str(match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            })?;
            let mag = c.abs();
            match idx {
                None => f.write_str(&format(&mag))?,
                Some(i) if mag.is_one() => write!(f, "<{i}>")?,
                Some(i) => write!(f, "{}<{i}>", format(&mag))?,
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for SymPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let b = s.as_bytes();
        let mut pos = 0;
        let err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.into() };
        let skip = |pos: &mut usize| {
            while *pos < b.len() && b[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let digits = |pos: &mut usize| -> Option<BigInt> {
            let start = *pos;
            while *pos < b.len() && b[*pos].is_ascii_digit() {
                *pos += 1;
            }
            (start < *pos).then(|| s[start..*pos].parse().unwrap())
        };
        let mut out = SymPoly::zero();
        let mut first = true;
        loop {
            skip(&mut pos);
            if pos == b.len() {
                if first {
                    return Err(err(pos, "empty input"));
                }
                break;
            }
            let mut neg = false;
            if b[pos] == b'+' || b[pos] == b'-' {
                neg = b[pos] == b'-';
                pos += 1;
                skip(&mut pos);
            } else if !first {
                return Err(err(pos, "expected '+' or '-'"));
            }
            first = false;
            let mut coeff: Option<Scalar> = None;
            if let Some(num) = digits(&mut pos) {
                let mut den = BigInt::one();
                if pos < b.len() && b[pos] == b'/' {
                    pos += 1;
                    den = digits(&mut pos).ok_or_else(|| err(pos, "expected denominator"))?;
                    if den.is_zero() {
                        return Err(err(pos, "zero denominator"));
                    }
                }
                coeff = Some(Scalar::new(num, den));
                skip(&mut pos);
                if pos < b.len() && b[pos] == b'*' {
                    pos += 1;
                    skip(&mut pos);
                }
            }
            let mut index = None;
            if pos < b.len() && b[pos] == b'<' {
                pos += 1;
                skip(&mut pos);
                let i = digits(&mut pos).ok_or_else(|| err(pos, "expected index"))?;
                skip(&mut pos);
                if pos >= b.len() || b[pos] != b'>' {
                    return Err(err(pos, "expected '>'"));
                }
                pos += 1;
                index = Some(u64::try_from(&i).map_err(|_| err(pos, "index out of range"))?);
            }
            if coeff.is_none() && index.is_none() {
                return Err(err(pos, "expected a term"));
            }
            let c = coeff.unwrap_or_else(Scalar::one);
            let c = if neg { -c } else { c };
            match index {
                None => out.a0 += c,
                Some(i) => out.add_basis(i, c),
            }
        }
        Ok(out)
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        self.scale(&int(-1))
    }
}

impl Add<&SymPoly> for &SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        out.a0 += &rhs.a0;
        for (&i, c) in &rhs.coeffs {
            out.add_basis(i, c.clone());
        }
        out
    }
}

impl Sub<&SymPoly> for &SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &SymPoly) -> SymPoly {
        self + &(-rhs)
    }
}

impl Mul<&SymPoly> for &SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: &SymPoly) -> SymPoly {
        SymPoly::from_laurent(&(&self.to_laurent() * &rhs.to_laurent()))
            .expect("products of symmetric polynomials are symmetric")
    }
}
