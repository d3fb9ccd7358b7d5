//! Integer helpers: gcd, modular inverses, divisors, and the 2x2 Smith form
//! used for first homology of two-component surgeries.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a as i128, b as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (r0, s0, t0) = (-r0, -s0, -t0);
    }
    (r0 as i64, s0 as i64, t0 as i64)
}

/// `[x]_n`: the representative of `x` in `0..n`.
pub fn residue(x: i64, n: i64) -> i64 {
    x.rem_euclid(n)
}

/// The inverse of `x` modulo `n`, as an integer in `[1, n-1]` (or `0` when `n = 1`).
pub fn mod_inverse(x: i64, n: i64) -> Result<i64> {
    if n < 1 {
        return Err(Error::InvalidParameters(format!("modulus {n} must be positive")));
    }
    let (g, s, _) = ext_gcd(residue(x, n), n);
    if g != 1 {
        return Err(Error::NoModularInverse { x: x.to_string(), modulus: n.to_string() });
    }
    Ok(residue(s, n))
}

/// Integers `(gamma, delta)` with `alpha*delta - beta*gamma = -1`.
pub fn unimodular_complement(alpha: i64, beta: i64) -> Result<(i64, i64)> {
    let (g, s, t) = ext_gcd(alpha, beta);
    if g != 1 {
        return Err(Error::InvalidParameters(format!("gcd({alpha}, {beta}) = {g} != 1")));
    }
    // alpha*s + beta*t = 1  =>  alpha*(-s) - beta*(t) = -1
    Ok((t, -s))
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// `Some(l)` when `d = l^k` for a prime `l` and `k >= 1`.
pub fn prime_power_base(d: u64) -> Option<u64> {
    if d < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            let mut m = d;
            while m.is_multiple_of(p) {
                m /= p;
            }
            return (m == 1).then_some(p);
        }
        p += 1;
    }
    Some(d)
}

/// A 2x2 integer presentation matrix of a finitely generated abelian group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationMatrix2 {
    pub entries: [[BigInt; 2]; 2],
}

/// Order and cyclicity of the group presented by a [`PresentationMatrix2`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct H1Summary {
    /// `|det|`; zero means `H_1` is infinite.
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub order: BigInt,
    pub cyclic: bool,
}

impl PresentationMatrix2 {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        PresentationMatrix2 { entries: [[a.into(), b.into()], [c.into(), d.into()]] }
    }

    /// Smith normal form `(d1, d2)` with `d1 | d2`, `d1, d2 >= 0`.
    pub fn smith_form(&self) -> (BigInt, BigInt) {
        let [[a, b], [c, d]] = &self.entries;
        // d1 = gcd of all entries, d1*d2 = |det|
        let d1 = a.gcd(b).gcd(c).gcd(d);
        let det = (a * d - b * c).abs();
        if d1.is_zero() {
            return (BigInt::zero(), BigInt::zero());
        }
        let d2 = &det / &d1;
        (d1, d2)
    }
}

/// First homology of surgery on a two-component link with linking number `l`
/// and slopes `a1/b1`, `a2/b2`.
pub fn h1_of_surgery(l: i64, a1: i64, b1: i64, a2: i64, b2: i64) -> Result<H1Summary> {
    if gcd(a1, b1) != 1 || gcd(a2, b2) != 1 {
        return Err(Error::InvalidParameters(format!("surgery slopes {a1}/{b1}, {a2}/{b2} must be reduced")));
    }
    let m = PresentationMatrix2::new(a1, b1 * l, b2 * l, a2);
    let (d1, d2) = m.smith_form();
    let order = &d1 * &d2;
    Ok(H1Summary { cyclic: d1.is_one(), order })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(5, 64).unwrap(), 13);
        assert_eq!(mod_inverse(3, 25).unwrap(), 17);
        assert_eq!(mod_inverse(1, 9).unwrap(), 1);
        assert_eq!(mod_inverse(-7, 25).unwrap(), 7);
        assert!(matches!(mod_inverse(4, 6), Err(Error::NoModularInverse { .. })));
    }

    #[test]
    fn mod_inverse_involution() {
        for n in 2..60 {
            for x in -40..40 {
                if gcd(x, n) == 1 {
                    let y = mod_inverse(x, n).unwrap();
                    assert!((1..n).contains(&y) || n == 1);
                    assert_eq!(mod_inverse(y, n).unwrap(), residue(x, n));
                }
            }
        }
    }

    #[test]
    fn unimodular() {
        for (a, b) in [(7, 1), (0, 1), (5, 2), (-3, 4), (1, 1), (25, 3)] {
            let (g, d) = unimodular_complement(a, b).unwrap();
            assert_eq!(a * d - b * g, -1);
        }
    }

    #[test]
    fn phi_and_prime_powers() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(8), 4);
        assert_eq!(euler_phi(60), 16);
        assert_eq!(prime_power_base(8), Some(2));
        assert_eq!(prime_power_base(6), None);
        assert_eq!(prime_power_base(49), Some(7));
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn homology_examples() {
        let h = h1_of_surgery(5, 7, 1, 0, 1).unwrap();
        assert_eq!(h.order, BigInt::from(25));
        assert!(h.cyclic);
        let h = h1_of_surgery(8, 23, 1, 0, 1).unwrap();
        assert_eq!(h.order, BigInt::from(64));
        assert!(h.cyclic);
        let h = h1_of_surgery(5, 5, 1, 0, 1).unwrap();
        assert_eq!(h.order, BigInt::from(25));
        assert!(!h.cyclic);
        assert_eq!(PresentationMatrix2::new(5, 5, 5, 0).smith_form(), (BigInt::from(5), BigInt::from(5)));
    }

    #[test]
    fn homology_order_is_abs_det() {
        for l in -4..5 {
            for a1 in -6..7 {
                for b1 in 1..4 {
                    for a2 in -5..6 {
                        for b2 in 1..3 {
                            if gcd(a1, b1) != 1 || gcd(a2, b2) != 1 {
                                continue;
                            }
                            let h = h1_of_surgery(l, a1, b1, a2, b2).unwrap();
                            assert_eq!(h.order, BigInt::from((a1 * a2 - b1 * b2 * l * l).abs()));
                        }
                    }
                }
            }
        }
    }
}
