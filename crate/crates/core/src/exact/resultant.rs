//! Resultants by the subresultant pseudo-remainder sequence.

use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::scalar::Scalar;
use crate::error::{Error, Result};

fn degree(p: &LaurentPoly) -> i64 {
    p.max_exp().unwrap_or(-1)
}

/// `lc(b)^{deg a - deg b + 1} * a mod b`
fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
    let k = (degree(a) - degree(b) + 1) as usize;
    let factor = num_traits::pow(b.lc().unwrap().clone(), k);
    a.scale(&factor).rem(b)
}

fn pow_signed(x: &Scalar, e: i64) -> Scalar {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

/// `Res(f, g) = lc(f)^{deg g} * prod_{f(r) = 0} g(r)`.
pub fn resultant(f: &LaurentPoly, g: &LaurentPoly) -> Result<Scalar> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial("resultant of zero"));
    }
    if !f.is_polynomial() || !g.is_polynomial() {
        return Err(Error::InvalidParameters("resultant needs nonnegative exponents".into()));
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut s = Scalar::one();
    if degree(&a) < degree(&b) {
        std::mem::swap(&mut a, &mut b);
        if degree(&a) % 2 == 1 && degree(&b) % 2 == 1 {
            s = -s;
        }
    }
    let (mut gg, mut h) = (Scalar::one(), Scalar::one());
    while degree(&b) > 0 {
        let delta = degree(&a) - degree(&b);
        if degree(&a) % 2 == 1 && degree(&b) % 2 == 1 {
            s = -s;
        }
        let r = pseudo_rem(&a, &b)?;
        a = b;
        let div = &gg * pow_signed(&h, delta);
        b = r.scale(&div.recip());
        gg = a.lc().unwrap().clone();
        h = pow_signed(&h, 1 - delta) * pow_signed(&gg, delta);
    }
    if b.is_zero() {
        return Ok(Scalar::zero());
    }
    let da = degree(&a);
    Ok(s * pow_signed(&h, 1 - da) * pow_signed(b.lc().unwrap(), da))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::cyclotomic::cyclotomic_poly;
    use crate::exact::scalar::int;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    /// Sylvester determinant by Gaussian elimination over the rationals.
    fn sylvester(f: &LaurentPoly, g: &LaurentPoly) -> Scalar {
        let (m, n) = (degree(f) as usize, degree(g) as usize);
        let size = m + n;
        if size == 0 {
            return Scalar::one();
        }
        let mut a = vec![vec![Scalar::zero(); size]; size];
        for i in 0..n {
            for k in 0..=m {
                a[i][i + k] = f.coeff((m - k) as i64);
            }
        }
        for i in 0..m {
            for k in 0..=n {
                a[n + i][i + k] = g.coeff((n - k) as i64);
            }
        }
        let mut det = Scalar::one();
        for c in 0..size {
            let Some(piv) = (c..size).find(|&r| !a[r][c].is_zero()) else {
                return Scalar::zero();
            };
            if piv != c {
                a.swap(piv, c);
                det = -det;
            }
            det *= a[c][c].clone();
            let (top, rest) = a.split_at_mut(c + 1);
            let pivot = &top[c];
            for row in rest {
                let f = &row[c] / &pivot[c];
                for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x -= &f * p;
                }
            }
        }
        det
    }

    #[test]
    fn examples() {
        assert_eq!(resultant(&p("t^2 + 1"), &p("t - 1")).unwrap(), int(2));
        assert_eq!(resultant(&cyclotomic_poly(5), &p("t")).unwrap(), int(1));
        // single roots: Res(t - a, t - b) = g(a) = a - b
        assert_eq!(resultant(&p("t - 3"), &p("t - 7")).unwrap(), int(-4));
        assert_eq!(resultant(&p("5"), &p("t^2 + 1")).unwrap(), int(25));
        assert_eq!(resultant(&p("t^2 - 1"), &p("t - 1")).unwrap(), int(0));
        assert!(resultant(&LaurentPoly::zero(), &p("t")).is_err());
    }

    #[test]
    fn agrees_with_sylvester() {
        let polys = [
            "t^3 - 2*t + 5",
            "2*t^2 + 3*t - 1",
            "t^4 + t + 1",
            "3*t - 4",
            "t^5 - t^3 + 2*t^2 - 7",
            "1 + t + t^2 + t^3 + t^4 + t^5 + t^6",
            "t^2",
            "6",
            "-t^3 + 1/2*t",
        ];
        for a in polys {
            for b in polys {
                let (f, g) = (p(a), p(b));
                assert_eq!(resultant(&f, &g).unwrap(), sylvester(&f, &g), "{a} / {b}");
            }
        }
    }
}
