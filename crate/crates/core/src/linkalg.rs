//! The cut set `I(m, n)` and exact Alexander polynomials of the links
//! `A(m, n)` and `B(p, q)`.

use num_traits::One;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::exact::arith::{gcd, mod_inverse};
use crate::exact::scalar::Scalar;
use crate::exact::{BiLaurentPoly, LaurentPoly};

/// Check the standing assumptions `gcd(m, n) = 1`, `2 <= m < n`.
pub fn validate_mn(m: i64, n: i64) -> Result<()> {
    if !(2 <= m && m < n) {
        return Err(invalid(format!("A({m},{n}) needs 2 <= m < n")));
    }
    if gcd(m, n) != 1 {
        return Err(invalid(format!("A({m},{n}) needs gcd(m, n) = 1")));
    }
    Ok(())
}

/// Check `gcd(p, q) = 1`, `p >= 2`, `q >= 1`.
pub fn validate_pq(p: i64, q: i64) -> Result<()> {
    if p < 2 || q < 1 {
        return Err(invalid(format!("B({p},{q}) needs p >= 2 and q >= 1")));
    }
    if gcd(p, q) != 1 {
        return Err(invalid(format!("B({p},{q}) needs gcd(p, q) = 1")));
    }
    Ok(())
}

/// The sorted cut set `k_0 < ... < k_{m+n-1}` and its index bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutSequence {
    pub m: i64,
    pub n: i64,
    /// `k_i`, the sorted multiples of `m` or `n` in `[0, mn]`.
    pub k: Vec<i64>,
    /// `k[u_j] = j*m`, `j = 0..=n`.
    pub u: Vec<usize>,
    /// `k[w_j] = j*n`, `j = 0..=m`.
    pub w: Vec<usize>,
    /// `sigma(i) = [i * mbar]_n` on `0..n`.
    pub sigma: Vec<i64>,
    /// `rho(i) = (sigma(i) m - i) / n` for `i = 1..m`; index 0 unused.
    pub rho: Vec<i64>,
    /// `s_j = [j n]_m`, `j = 0..m`.
    pub s: Vec<i64>,
}

impl CutSequence {
    pub fn new(m: i64, n: i64) -> Result<Self> {
        validate_mn(m, n)?;
        let mut k: Vec<i64> = (0..=n).map(|j| j * m).chain((1..m).map(|j| j * n)).collect();
        k.sort_unstable();
        let pos = |v: i64| k.binary_search(&v).expect("multiple lies in the cut set");
        let u = (0..=n).map(|j| pos(j * m)).collect();
        let w = (0..=m).map(|j| pos(j * n)).collect();
        let mbar = mod_inverse(m, n)?;
        let sigma: Vec<i64> = (0..n).map(|i| (i * mbar).rem_euclid(n)).collect();
        let mut rho = vec![0];
        rho.extend((1..m).map(|i| (sigma[i as usize] * m - i) / n));
        let s = (0..m).map(|j| (j * n).rem_euclid(m)).collect();
        let cs = CutSequence { m, n, k, u, w, sigma, rho, s };
        cs.verify()?;
        Ok(cs)
    }

    pub fn len(&self) -> usize {
        self.k.len()
    }

    pub fn is_empty(&self) -> bool {
        self.k.is_empty()
    }

    fn verify(&self) -> Result<()> {
        let (m, n) = (self.m, self.n);
        let top = (m + n - 1) as usize;
        let fail = |what: &str| Err(Error::Invariant(format!("cut sequence ({m},{n}): {what}")));
        if self.k.len() != top + 1 || self.k[0] != 0 || self.k[top] != m * n {
            return fail("size or endpoints");
        }
        if (0..=top).any(|i| self.k[i] + self.k[top - i] != m * n) {
            return fail("k_i + k_{m+n-1-i} = mn");
        }
        for j in 1..n {
            if self.u[j as usize] as i64 != (j * m) / n + j {
                return fail("u_j = floor(jm/n) + j");
            }
        }
        for j in 1..m {
            if self.w[j as usize] as i64 != (j * n) / m + j {
                return fail("w_j = floor(jn/m) + j");
            }
        }
        if self.u.windows(2).any(|p| p[0] >= p[1]) || self.w.windows(2).any(|p| p[0] >= p[1]) {
            return fail("u, w increasing");
        }
        if (0..=n as usize).any(|j| self.u[j] + self.u[n as usize - j] != top)
            || (0..=m as usize).any(|j| self.w[j] + self.w[m as usize - j] != top)
        {
            return fail("u_j + u_{n-j} = w_j + w_{m-j} = m+n-1");
        }
        if !is_permutation(&self.sigma, 0, n) || !is_permutation(&self.rho[1..], 1, m) {
            return fail("sigma, rho bijective");
        }
        for i in 1..m as usize {
            if self.w[self.rho[i] as usize] != self.u[self.sigma[i] as usize] - 1 {
                return fail("w_rho(i) = u_sigma(i) - 1");
            }
        }
        Ok(())
    }

    /// The structural laws of `sigma`, `u` and `rho` used to build the
    /// eigenvector; returns the first violated law.
    pub fn permutation_laws(&self) -> std::result::Result<(), String> {
        let (m, n) = (self.m, self.n);
        let sg = |i: i64| self.sigma[i as usize];
        let uu = |j: i64| self.u[j as usize] as i64;
        if sg(0) != 0 || sg(m) != 1 || sg(n - m) != n - 1 {
            return Err("sigma(0)=0, sigma(m)=1, sigma(n-m)=n-1".into());
        }
        for i in 1..n {
            if i == n - m {
                continue;
            }
            let gap = uu(sg(i) + 1) - uu(sg(i));
            if !(gap == 1 || gap == 2) || ((gap == 2) != (n - m < i)) {
                return Err(format!("u gap at i={i}"));
            }
        }
        for i in 1..n - m {
            if sg(m + i) != sg(i) + 1 || uu(sg(m + i)) != uu(sg(i)) + 1 {
                return Err(format!("sigma(m+i) at i={i}"));
            }
        }
        for i in 1..m {
            if sg(n - m + i) != sg(i) - 1 || uu(sg(n - m + i)) != uu(sg(i)) - 2 {
                return Err(format!("sigma(n-m+i) at i={i}"));
            }
            let nbar = mod_inverse(n, m).map_err(|e| e.to_string())?;
            if self.rho[i as usize] != ((m - i) * nbar).rem_euclid(m) {
                return Err(format!("rho closed form at i={i}"));
            }
        }
        Ok(())
    }
}

fn is_permutation(v: &[i64], lo: i64, hi: i64) -> bool {
    let mut seen = vec![false; (hi - lo).max(0) as usize];
    v.len() == seen.len()
        && v.iter().all(|&x| (lo..hi).contains(&x) && !std::mem::replace(&mut seen[(x - lo) as usize], true))
}

pub fn cut_sequence(m: i64, n: i64) -> Result<CutSequence> {
    CutSequence::new(m, n)
}

/// `sum_i t^{k_i} x^i`.
pub fn alexander_a(m: i64, n: i64) -> Result<BiLaurentPoly> {
    let cs = CutSequence::new(m, n)?;
    Ok(BiLaurentPoly::from_terms(cs.k.iter().enumerate().map(|(i, &k)| ((k, i as i64), Scalar::one()))))
}

/// `M(m, n)`, entries in `Z[t]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexMatrix {
    pub size: usize,
    pub entries: Vec<Vec<LaurentPoly>>,
}

impl AlexMatrix {
    /// `I - x M`.
    pub fn alexander_matrix(&self) -> Vec<Vec<BiLaurentPoly>> {
        (0..self.size)
            .map(|r| {
                (0..self.size)
                    .map(|c| {
                        let mut e = BiLaurentPoly::from_t(&self.entries[r][c]).shift((0, 1));
                        e = -e;
                        if r == c {
                            e = &e + &BiLaurentPoly::one();
                        }
                        e
                    })
                    .collect()
            })
            .collect()
    }
}

pub fn alexander_a_matrix(m: i64, n: i64) -> Result<AlexMatrix> {
    validate_mn(m, n)?;
    let size = (m + n - 1) as usize;
    let (mu, nu) = (m as usize, n as usize);
    let mut e = vec![vec![LaurentPoly::zero(); size]; size];
    let tn = LaurentPoly::t_pow(n);
    let col = mu - 1;
    for i in 0..nu - 1 {
        e[i][col] = -LaurentPoly::t_pow(i as i64 + 1);
        e[i][mu + i] = LaurentPoly::one();
    }
    e[nu - 1][col] = -&tn;
    for j in 0..mu - 1 {
        e[nu + j][j] = tn.clone();
        e[nu + j][col] = -&tn;
    }
    Ok(AlexMatrix { size, entries: e })
}

/// Fraction-free (Bareiss) determinant over `Q[t^+-1, x^+-1]`.
pub fn bareiss_det(mut a: Vec<Vec<BiLaurentPoly>>) -> Result<BiLaurentPoly> {
    let size = a.len();
    if size == 0 {
        return Ok(BiLaurentPoly::one());
    }
    let mut sign = Scalar::one();
    let mut prev = BiLaurentPoly::one();
    for k in 0..size {
        if a[k][k].is_zero() {
            match (k + 1..size).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(BiLaurentPoly::zero()),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev)?;
            }
            a[i][k] = BiLaurentPoly::zero();
        }
        prev = a[k][k].clone();
    }
    Ok(a[size - 1][size - 1].scale(&sign))
}

/// `det(I - x M(m, n))`, unit-normalized.
pub fn alexander_a_det_oracle(m: i64, n: i64) -> Result<BiLaurentPoly> {
    let mat = alexander_a_matrix(m, n)?;
    bareiss_det(mat.alexander_matrix())?.normalize_unit()
}

/// Reduce a bivariate polynomial modulo `sum t^{k_i} x^i`, used as the
/// rewriting rule `x^{m+n-1} -> -sum_{i<m+n-1} t^{k_i - mn} x^i`.
fn reduce_mod_delta(p: &BiLaurentPoly, cs: &CutSequence) -> BiLaurentPoly {
    let Some((xlo, _)) = p.x_degree_range() else {
        return BiLaurentPoly::zero();
    };
    let top = cs.m + cs.n - 1;
    let mn = cs.m * cs.n;
    let mut coeffs = p.shift((0, -xlo)).x_coeffs();
    while let Some((&deg, _)) = coeffs.iter().next_back() {
        if deg < top {
            break;
        }
        let c = coeffs.remove(&deg).unwrap();
        for i in 0..top as usize {
            let term = c.shift(cs.k[i] - mn).scale(&-Scalar::one());
            let slot = coeffs.entry(deg - top + i as i64).or_default();
            *slot += &term;
            if slot.is_zero() {
                coeffs.remove(&(deg - top + i as i64));
            }
        }
    }
    BiLaurentPoly::from_terms(
        coeffs.into_iter().flat_map(|(j, c)| c.terms().map(|(e, v)| ((e, j), v.clone())).collect::<Vec<_>>()),
    )
}

/// The row vector `v = [e | f | g]` with `v M = x^{-1} v`.
pub fn eigenvector(m: i64, n: i64) -> Result<Vec<BiLaurentPoly>> {
    let cs = CutSequence::new(m, n)?;
    let e_mono = |i: i64| -> (i64, i64) {
        let s = cs.sigma[i as usize];
        (s * m - i, cs.u[s as usize] as i64)
    };
    let mono = |e: (i64, i64)| BiLaurentPoly::monomial(Scalar::one(), e);
    let mut v: Vec<BiLaurentPoly> = (1..n).map(|i| mono(e_mono(i))).collect();
    let en_m = e_mono(n - m);
    v.push(mono((en_m.0, en_m.1 + 1)));
    for i in 1..m {
        let ei = e_mono(i);
        v.push(mono((ei.0 - n, ei.1 - 1)));
    }
    Ok(v)
}

/// Whether `v M x - v` vanishes modulo the Alexander polynomial.
pub fn eigen_identity_check(m: i64, n: i64) -> Result<bool> {
    let cs = CutSequence::new(m, n)?;
    let mat = alexander_a_matrix(m, n)?;
    let v = eigenvector(m, n)?;
    for c in 0..mat.size {
        let mut acc = BiLaurentPoly::zero();
        for (r, vr) in v.iter().enumerate() {
            if !mat.entries[r][c].is_zero() {
                acc = &acc + &(vr * &BiLaurentPoly::from_t(&mat.entries[r][c]));
            }
        }
        let diff = &acc.shift((0, 1)) - &v[c];
        if !reduce_mod_delta(&diff, &cs).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(t^{pq} x^p - 1) / (t^q x - 1)`.
pub fn alexander_b(p: i64, q: i64) -> Result<BiLaurentPoly> {
    validate_pq(p, q)?;
    let one = BiLaurentPoly::one();
    let num = &BiLaurentPoly::monomial(Scalar::one(), (p * q, p)) - &one;
    let den = &BiLaurentPoly::monomial(Scalar::one(), (q, 1)) - &one;
    num.exact_div(&den)
}

/// The torus knot polynomial `(t^{mn} - 1)(t - 1) / ((t^m - 1)(t^n - 1))`.
pub fn torus_knot_poly(m: i64, n: i64) -> Result<LaurentPoly> {
    let c = |k| LaurentPoly::t_pow_minus_one(k);
    (&c(m * n) * &c(1)).exact_div(&(&c(m) * &c(n)))
}

/// `Delta_A(t, 1) ≐ (t^{m+n} - 1)/(t - 1) * Delta_{T(m,n)}(t)`.
pub fn torres_check_a(m: i64, n: i64) -> Result<bool> {
    let lhs = alexander_a(m, n)?.at_x_one();
    let c = |k| LaurentPoly::t_pow_minus_one(k);
    let num = &(&c(m + n) * &c(m * n)) * &c(1);
    let den = &(&c(1) * &c(m)) * &c(n);
    let rhs = num.exact_div(&den)?;
    Ok(lhs.unit_equivalent(&rhs) && rhs == &LaurentPoly::geometric((m + n) as u64) * &torus_knot_poly(m, n)?)
}

/// `Delta_A(T^{m+n}, T^{-mn})` has exponent set exactly `I(m, n)`.
pub fn selfsym_check_a(m: i64, n: i64) -> Result<bool> {
    let cs = CutSequence::new(m, n)?;
    let delta = alexander_a(m, n)?;
    let sub = delta.subs_monomial(m + n, -m * n);
    let primed: Vec<i64> = cs.k.iter().enumerate().map(|(i, &k)| k * (m + n) - i as i64 * m * n).collect();
    let endpoints = primed[0] == 0 && primed[primed.len() - 1] == m * n;
    let in_range = primed.iter().all(|&k| 0 <= k && k <= m * n);
    let exps: Vec<i64> = sub.terms().map(|(e, _)| e).collect();
    let ones = sub.terms().all(|(_, c)| c.is_one());
    Ok(endpoints && in_range && ones && exps == cs.k && sub.unit_equivalent(&delta.at_x_one()))
}
