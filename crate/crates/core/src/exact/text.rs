//! Polynomial text format: `3*t^-2*x^5 - 1/2*t + 4`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::bilaurent::{BiExp, BiLaurentPoly};
use super::laurent::LaurentPoly;
use super::scalar::{format, Scalar};
use crate::error::{Error, Result};

fn var_text(name: char, e: i64) -> Option<String> {
    match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    }
}

/// Print terms in the given (ascending) order.
pub(crate) fn format_terms<'a>(terms: impl Iterator<Item = (BiExp, &'a Scalar)>, bivariate: bool) -> String {
    let mut out = String::new();
    for (i, ((te, xe), c)) in terms.enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mut factors: Vec<String> = Vec::new();
        let mag = c.abs();
        factors.extend(var_text('t', te));
        if bivariate {
            factors.extend(var_text('x', xe));
        }
        if factors.is_empty() || !mag.is_one() {
            factors.insert(0, format(&mag));
        }
        out.push_str(&factors.join("*"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { src: s.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn exponent(&mut self) -> Result<i64> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let paren = self.eat(b'(');
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let at = self.pos;
        let d = self.digits()?;
        let v: i64 = match i64::try_from(&d) {
            Ok(v) => v,
            Err(_) => return Err(Error::Parse { pos: at, msg: "exponent out of range".into() }),
        };
        if paren && !self.eat(b')') {
            return self.err("expected ')'");
        }
        Ok(if neg { -v } else { v })
    }

    /// One product of factors; returns coefficient and exponent.
    fn term(&mut self, bivariate: bool) -> Result<(Scalar, BiExp)> {
        let mut c = Scalar::one();
        let mut e = (0i64, 0i64);
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let num = self.digits()?;
                    let den = if self.eat(b'/') { self.digits()? } else { BigInt::one() };
                    if den.is_zero() {
                        return self.err("zero denominator");
                    }
                    c *= Scalar::new(num, den);
                }
                Some(b't') => {
                    self.pos += 1;
                    e.0 += self.exponent()?;
                }
                Some(b'x') if bivariate => {
                    self.pos += 1;
                    e.1 += self.exponent()?;
                }
                Some(b'(') => {
                    // parenthesized rational like (-3/2)
                    self.pos += 1;
                    let neg = self.eat(b'-');
                    let num = self.digits()?;
                    let den = if self.eat(b'/') { self.digits()? } else { BigInt::one() };
                    if den.is_zero() {
                        return self.err("zero denominator");
                    }
                    if !self.eat(b')') {
                        return self.err("expected ')'");
                    }
                    let v = Scalar::new(num, den);
                    c *= if neg { -v } else { v };
                }
                Some(_) => return self.err("unexpected character"),
                None => return self.err("unexpected end of input"),
            }
            if !self.eat(b'*') {
                break;
            }
        }
        Ok((c, e))
    }

    fn sum(&mut self, bivariate: bool) -> Result<Vec<(BiExp, Scalar)>> {
        let mut out = Vec::new();
        let mut neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let (c, e) = self.term(bivariate)?;
            out.push((e, if neg { -c } else { c }));
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                break;
            }
        }
        if self.peek().is_some() {
            return self.err("trailing input");
        }
        Ok(out)
    }
}

pub fn parse_bilaurent(s: &str) -> Result<BiLaurentPoly> {
    let mut p = Parser::new(s);
    Ok(BiLaurentPoly::from_terms(p.sum(true)?))
}

pub fn parse_laurent(s: &str) -> Result<LaurentPoly> {
    let mut p = Parser::new(s);
    Ok(LaurentPoly::from_terms(p.sum(false)?.into_iter().map(|((t, _), c)| (t, c))))
}

pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let p = parse_laurent(s)?;
    match p.max_exp() {
        None => Ok(Scalar::zero()),
        Some(0) if p.len() == 1 => Ok(p.coeff(0)),
        _ => Err(Error::Parse { pos: 0, msg: "expected a rational constant".into() }),
    }
}
