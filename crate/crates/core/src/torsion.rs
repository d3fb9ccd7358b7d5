//! Torsion value sequences of the surgered manifolds, lens space torsions,
//! `R(m, n)`, cyclotomic norms, Franz multiset tests and lens types.
//!
//! A torsion sequence `{tau(zeta_d)}_{d | N, d >= 2}` is stored as one residue
//! modulo `nu_N = 1 + t + ... + t^{N-1}`; reducing it modulo `Phi_d` recovers
//! the value at `zeta_d`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::exact::arith::{divisors, gcd, mod_inverse, unimodular_complement};
use crate::exact::scalar::{int, Scalar};
use crate::exact::{cyclotomic_poly, resultant, LaurentPoly, Modulus, Residue};
use crate::linkalg::{validate_mn, validate_pq, CutSequence};
use crate::symlaurent::TrivialUnit;

/// A torsion value sequence over the divisors `d >= 2` of `N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorsionSequence {
    #[serde(serialize_with = "crate::report::ser_display")]
    pub n: u64,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub value: Residue,
    pub label: String,
}

impl TorsionSequence {
    /// The value at `zeta_d`, as a residue modulo `Phi_d`.
    pub fn at(&self, d: u64) -> Result<Residue> {
        if d < 2 || !self.n.is_multiple_of(d) {
            return Err(invalid(format!("{d} is not a divisor >= 2 of {}", self.n)));
        }
        self.value.to_cyclotomic(d)
    }

    /// A trivial unit `u` with `self = u * other`, if any.
    pub fn unit_ratio(&self, other: &Self) -> Option<TrivialUnit> {
        if self.n != other.n {
            return None;
        }
        self.value.unit_ratio(&other.value).map(|(sign, shift)| TrivialUnit { sign, shift })
    }

    /// Whether the sequences agree up to a trivial unit and a change of
    /// generator `t -> t^k`.
    pub fn equivalent_up_to_generator(&self, other: &Self) -> bool {
        if self.n != other.n {
            return false;
        }
        let n = self.n as i64;
        (1..n.max(2)).filter(|&k| gcd(k, n) == 1).any(|k| match other.value.automorphism(k) {
            Ok(v) => self.value.unit_ratio(&v).is_some(),
            Err(_) => false,
        })
    }
}

impl fmt::Display for TorsionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.value, self.label)
    }
}

fn aug(n: u64) -> Modulus {
    Modulus::AugCycle(n)
}

/// `(t^k - 1)^{-1}` modulo `nu_N`, after checking `gcd(k, N) = 1`.
fn inv_root_factor(k: i64, n: u64) -> Result<Residue> {
    let g = gcd(k, n as i64);
    if g != 1 {
        return Err(Error::NotInvertible { factor: format!("t^{k} - 1 (gcd with {n} is {g})") });
    }
    Residue::new(&LaurentPoly::t_pow_minus_one(k), aug(n))?.inverse()
}

fn check_slope(alpha: i64, beta: i64) -> Result<()> {
    if beta < 1 {
        return Err(invalid(format!("slope {alpha}/{beta} needs beta >= 1")));
    }
    if gcd(alpha, beta) != 1 {
        return Err(invalid(format!("slope {alpha}/{beta} is not reduced")));
    }
    Ok(())
}

/// `R(m, n)` in one of its five closed forms, modulo `nu_{m+n}`.
///
/// Forms 1-3 are written in `zeta`, forms 4-5 in `xi = zeta^{mbar}` where
/// `m * mbar = 1 mod m+n`; `automorphism(m)` carries the former to the latter.
pub fn r_value(m: i64, n: i64, form: u8) -> Result<Residue> {
    let cs = CutSequence::new(m, n)?;
    let big_n = (m + n) as u64;
    let mn = int(m * n);
    let p = match form {
        1 => {
            let sum = LaurentPoly::from_terms(cs.k.iter().enumerate().map(|(i, &k)| (i as i64, int(k))));
            &LaurentPoly::t_pow_minus_one(1) * &sum
        }
        2 => {
            let half = Scalar::new(1.into(), 2.into());
            let mut p = LaurentPoly::constant(mn);
            for i in 1..cs.len() {
                let c = int(cs.k[i - 1] - cs.k[i]) * &half;
                p.add_term(i as i64, c.clone());
                p.add_term(-(i as i64), c);
            }
            p
        }
        3 => {
            let mut p = LaurentPoly::constant(int(m * (n + 1)));
            for j in 1..m as usize {
                let c = int(m - cs.s[j]);
                let w = cs.w[j] as i64;
                p.add_term(w, c.clone());
                p.add_term(-w, c);
            }
            p
        }
        4 => {
            let mut p = LaurentPoly::constant(int(m * (n + 1)));
            for j in 1..m {
                p.add_term(j, int(m - j));
                p.add_term(-j, int(m - j));
            }
            p
        }
        5 => {
            let g = LaurentPoly::geometric(m as u64);
            &(&g * &g).shift(-(m - 1)) + &LaurentPoly::constant(mn)
        }
        _ => return Err(invalid(format!("R(m, n) has forms 1..5, not {form}"))),
    };
    Residue::new(&p, aug(big_n))
}

/// The torsion of `(A(m,n); alpha/beta, 0)`:
/// `xi^{-m} (beta R - alpha) (xi^m - 1)^{-2}` modulo `nu_{m+n}`.
pub fn torsion_a_r0(m: i64, n: i64, alpha: i64, beta: i64) -> Result<TorsionSequence> {
    validate_mn(m, n)?;
    check_slope(alpha, beta)?;
    let big_n = (m + n) as u64;
    if gcd(m + n, alpha) != 1 {
        return Err(Error::NonCyclicHomology(format!("gcd({}, {alpha}) != 1", m + n)));
    }
    let r = r_value(m, n, 4)?;
    let num = &r.scale(&int(beta)) - &Residue::from_int(alpha, aug(big_n))?;
    let inv = inv_root_factor(m, big_n)?;
    let value = &(&num * &(&inv * &inv)) * &Residue::t_pow(-m, aug(big_n))?;
    Ok(TorsionSequence { n: big_n, value, label: "psi'_d, variable xi".into() })
}

/// The torsion `(t - 1)^{-1} (t^{qbar} - 1)^{-1}` of `L(P, q)` on the divisors of `N`.
pub fn torsion_lens(p: i64, q: i64, n: i64) -> Result<TorsionSequence> {
    if n < 2 || p % n != 0 {
        return Err(invalid(format!("torsion of L({p},{q}) over N = {n} needs N >= 2 dividing P")));
    }
    let qbar = mod_inverse(q, n)?;
    let big_n = n as u64;
    let value = &inv_root_factor(1, big_n)? * &inv_root_factor(qbar, big_n)?;
    Ok(TorsionSequence { n: big_n, value, label: format!("L({p},{q}), variable zeta") })
}

/// `N_d(x(zeta_d))`, the product of the Galois conjugates, as `Res(Phi_d, x)`.
///
/// A Laurent input is first written `t^e x'` with `x'` a polynomial; the
/// factor `N_d(zeta_d)^e` is `1` except for `d = 2`, where it is `(-1)^e`.
pub fn dnorm(x: &LaurentPoly, d: u64) -> Result<Scalar> {
    if d < 1 {
        return Err(invalid("dnorm needs d >= 1"));
    }
    let Some(e) = x.min_exp() else {
        return Ok(Scalar::zero());
    };
    let r = resultant(&cyclotomic_poly(d), &x.shift(-e))?;
    Ok(if d == 2 && e.rem_euclid(2) == 1 { -r } else { r })
}

/// One `N_d` value in a norm table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormValue {
    #[serde(serialize_with = "crate::report::ser_display")]
    pub d: u64,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub value: Scalar,
}

/// The norm conditions for `(A(m,n); alpha/beta, 0)` to be a lens space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormCondition {
    pub passes: bool,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub alpha_prime: i64,
    pub values: Vec<NormValue>,
}

impl NormCondition {
    pub fn first_failure(&self) -> Option<&NormValue> {
        self.values.iter().find(|v| v.value.abs() != Scalar::one())
    }
}

/// `|N_d(beta R - alpha)| = 1` for all `d | m+n`, `d >= 2`, and `alpha' >= 0`.
pub fn dnorm_condition_a(m: i64, n: i64, alpha: i64, beta: i64) -> Result<NormCondition> {
    validate_mn(m, n)?;
    check_slope(alpha, beta)?;
    let big_n = (m + n) as u64;
    let r = r_value(m, n, 4)?;
    let x = &r.scale(&int(beta)) - &Residue::from_int(alpha, aug(big_n))?;
    let mut values = Vec::new();
    for d in divisors(big_n).into_iter().filter(|&d| d >= 2) {
        values.push(NormValue { d, value: dnorm(x.rep(), d)? });
    }
    let alpha_prime = alpha - m * n * beta;
    let passes = alpha_prime >= 0 && values.iter().all(|v| v.value.abs().is_one());
    Ok(NormCondition { passes, alpha_prime, values })
}

/// The torsion `(alpha - pq beta)(t^alpha - 1)^{-2}` of `(B(p,q); alpha/beta, 0)`
/// on the divisors of `p`.
pub fn torsion_b_r0(p: i64, q: i64, alpha: i64, beta: i64) -> Result<TorsionSequence> {
    validate_pq(p, q)?;
    check_slope(alpha, beta)?;
    if gcd(p, alpha) != 1 {
        return Err(Error::NonCyclicHomology(format!("gcd({p}, {alpha}) != 1")));
    }
    let big_n = p as u64;
    let inv = inv_root_factor(alpha.rem_euclid(p), big_n)?;
    let value = (&inv * &inv).scale(&int(alpha - p * q * beta));
    Ok(TorsionSequence { n: big_n, value, label: "psi_d, variable zeta".into() })
}

fn sign_class(x: i64, p: i64) -> Result<i64> {
    if gcd(x, p) != 1 {
        return Err(invalid(format!("{x} is not coprime to {p}")));
    }
    let r = x.rem_euclid(p);
    Ok(r.min(p - r))
}

/// Whether `{+-a_i mod p} = {+-b_i mod p}` as multisets.
pub fn franz_equal(a: &[i64], b: &[i64], p: i64) -> Result<bool> {
    if p < 2 {
        return Err(invalid(format!("Franz comparison needs p >= 2, got {p}")));
    }
    let classes = |v: &[i64]| -> Result<Vec<i64>> {
        let mut c = v.iter().map(|&x| sign_class(x, p)).collect::<Result<Vec<_>>>()?;
        c.sort_unstable();
        Ok(c)
    };
    Ok(classes(a)? == classes(b)?)
}

/// All `(m, n, i, j)` with `m + n <= bound` solving
/// `{+-(m-1), +-(m+1), +-i, +-j} = {+-1, +-1, +-m, +-m} (mod m+n)`.
///
/// `(i, j)` is reported with `1 <= i <= j`, `i + j` even and `i + j <= m+n-1`.
pub fn franz_solve_mnplus1(bound: i64) -> Result<Vec<(i64, i64, i64, i64)>> {
    if bound < 5 {
        return Err(invalid(format!("bound {bound} < 5")));
    }
    let mut out = Vec::new();
    for s in 5..=bound {
        for m in 2..s {
            let n = s - m;
            if m >= n || gcd(m, n) != 1 || gcd(m - 1, s) != 1 || gcd(m + 1, s) != 1 {
                continue;
            }
            let reps: Vec<i64> = (1..=s / 2).filter(|&x| gcd(x, s) == 1).collect();
            for (a, &i) in reps.iter().enumerate() {
                for &j in &reps[a..] {
                    if franz_equal(&[m - 1, m + 1, i, j], &[1, 1, m, m], s)? {
                        let (i, j) = if s % 2 == 1 && (i + j) % 2 == 1 { (i, s - j) } else { (i, j) };
                        out.push((m, n, i.min(j), i.max(j)));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// A lens space `L(P, Q)`, with `L(0, Q)` read as `S^1 x S^2` and
/// `L(1, Q)` as `S^3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct LensType {
    #[serde(rename = "P", serialize_with = "crate::report::ser_display")]
    pub p: i64,
    #[serde(rename = "Q", serialize_with = "crate::report::ser_display")]
    pub q: i64,
    pub oriented: bool,
}

impl LensType {
    /// Normalize `L(-a, b)` to `L(a, -b)`, reduce `Q` modulo `P`, and fix
    /// the degenerate orders `0` and `1` to `L(0, 1)` and `L(1, 0)`.
    pub fn new(p: i64, q: i64, oriented: bool) -> Result<Self> {
        let (p, q) = if p < 0 { (-p, -q) } else { (p, q) };
        let (p, q) = match p {
            0 => (0, 1),
            1 => (1, 0),
            _ => (p, q.rem_euclid(p)),
        };
        if p >= 2 && gcd(p, q) != 1 {
            return Err(invalid(format!("L({p},{q}) needs gcd(P, Q) = 1")));
        }
        Ok(LensType { p, q, oriented })
    }

    pub fn is_degenerate(&self) -> bool {
        self.p <= 1
    }

    /// Homeomorphism of lens spaces, oriented or not per `oriented`.
    pub fn equivalent(&self, other: &LensType, oriented: bool) -> bool {
        if self.p != other.p {
            return false;
        }
        self.is_degenerate() || lens_equivalent(self.p, self.q, other.q, oriented).unwrap_or(false)
    }

    /// `S^3`, `S^1 x S^2`, or `L(P,Q)`.
    pub fn describe(&self) -> String {
        match self.p {
            0 => "S^1 x S^2".into(),
            1 => "S^3".into(),
            _ => self.to_string(),
        }
    }
}

impl fmt::Display for LensType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// `L((m+n)^2, m nbar)`, the result of `(mn, 0)`-surgery on `A(m,n)`.
///
/// Torsion alone fixes `Q` up to `+-m nbar`; the negative sign is excluded by a
/// gcd argument, so the positive branch is taken.
pub fn lens_type_a_mn(m: i64, n: i64) -> Result<LensType> {
    validate_mn(m, n)?;
    let p = (m + n) * (m + n);
    LensType::new(p, m * mod_inverse(n, p)?, true)
}

/// `L(P, q1) = L(P, q2)`: oriented iff `q2 = q1^{+-1}`, unoriented iff
/// `q2 = +-q1^{+-1}` modulo `P`.
pub fn lens_equivalent(p: i64, q1: i64, q2: i64, oriented: bool) -> Result<bool> {
    if p < 1 {
        return Err(invalid(format!("lens order {p} must be positive")));
    }
    let inv = mod_inverse(q1, p)?;
    mod_inverse(q2, p)?;
    let q2 = q2.rem_euclid(p);
    let mut candidates = vec![q1.rem_euclid(p), inv];
    if !oriented {
        candidates.extend([(-q1).rem_euclid(p), (p - inv) % p]);
    }
    Ok(candidates.contains(&q2))
}

fn abs_order(p: i64) -> Result<u64> {
    if p.abs() < 2 {
        return Err(invalid(format!("torsion needs |P| >= 2, got P = {p}")));
    }
    Ok(p.unsigned_abs())
}

/// The exponent `(m+n)^2 delta - mn gamma` of the core of the second
/// surgery torus in `(A(m,n); mn, alpha/beta)`, with `alpha delta - beta gamma = -1`.
pub fn core_exponent_a_mn_r(m: i64, n: i64, alpha: i64, beta: i64, gamma: i64, delta: i64) -> i64 {
    debug_assert_eq!(alpha * delta - beta * gamma, -1);
    (m + n) * (m + n) * delta - m * n * gamma
}

/// The torsion of `(A(m,n); mn, alpha/beta)` on the divisors of
/// `|P|`, `P = (m+n)^2 beta - mn alpha`:
/// `(t^{mn} - 1) / ((t^m - 1)(t^n - 1)(t^E - 1))`.
pub fn torsion_a_mn_r(m: i64, n: i64, alpha: i64, beta: i64) -> Result<TorsionSequence> {
    let (gamma, delta) = unimodular_complement(alpha, beta)?;
    torsion_a_mn_r_with(m, n, alpha, beta, gamma, delta)
}

/// As [`torsion_a_mn_r`] for a given `(gamma, delta)`.
pub fn torsion_a_mn_r_with(m: i64, n: i64, alpha: i64, beta: i64, gamma: i64, delta: i64) -> Result<TorsionSequence> {
    validate_mn(m, n)?;
    check_slope(alpha, beta)?;
    if alpha * delta - beta * gamma != -1 {
        return Err(invalid(format!("{alpha}*{delta} - {beta}*{gamma} != -1")));
    }
    let big_p = (m + n) * (m + n) * beta - m * n * alpha;
    let order = abs_order(big_p)?;
    let e = core_exponent_a_mn_r(m, n, alpha, beta, gamma, delta).rem_euclid(order as i64);
    let num = Residue::new(&LaurentPoly::t_pow_minus_one(m * n), aug(order))?;
    let value = &(&num * &inv_root_factor(m, order)?) * &(&inv_root_factor(n, order)? * &inv_root_factor(e, order)?);
    Ok(TorsionSequence { n: order, value, label: format!("psi_d, variable zeta, E = {e}") })
}

/// The exponent `7 gamma - 25 delta` for `(A(2,3); 7, alpha/beta)`.
pub fn core_exponent_a_23_7_r(gamma: i64, delta: i64) -> i64 {
    7 * gamma - 25 * delta
}

/// The torsion `(t - 1)^{-1} (t^{7 gamma - 25 delta} - 1)^{-1}` of
/// `(A(2,3); 7, alpha/beta)` on the divisors of `|25 beta - 7 alpha|`.
pub fn torsion_a_23_7_r(alpha: i64, beta: i64) -> Result<TorsionSequence> {
    check_slope(alpha, beta)?;
    let (gamma, delta) = unimodular_complement(alpha, beta)?;
    let order = abs_order(25 * beta - 7 * alpha)?;
    let e = core_exponent_a_23_7_r(gamma, delta).rem_euclid(order as i64);
    let value = &inv_root_factor(1, order)? * &inv_root_factor(e, order)?;
    Ok(TorsionSequence { n: order, value, label: format!("psi_d, variable zeta, E = {e}") })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::arith::{euler_phi, prime_power_base};

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn res(s: &str, n: u64) -> Residue {
        Residue::new(&lp(s), aug(n)).unwrap()
    }

    #[test]
    fn r_forms_small() {
        assert_eq!(r_value(2, 3, 4).unwrap(), res("8 + t + t^-1", 5));
        assert_eq!(r_value(2, 3, 3).unwrap(), res("8 + t^2 + t^-2", 5));
        assert_eq!(r_value(3, 5, 1).unwrap(), r_value(3, 5, 2).unwrap());
        assert!(r_value(2, 4, 1).is_err());
        assert!(r_value(2, 3, 6).is_err());
    }

    #[test]
    fn r_forms_agree() {
        for s in 5..=16i64 {
            for m in 2..s {
                let n = s - m;
                if m >= n || gcd(m, n) != 1 {
                    continue;
                }
                let f: Vec<Residue> = (1..=5).map(|k| r_value(m, n, k).unwrap()).collect();
                assert_eq!(f[0], f[1]);
                assert_eq!(f[1], f[2]);
                assert_eq!(f[2].automorphism(m).unwrap(), f[3], "({m},{n})");
                assert_eq!(f[3], f[4]);
                assert_eq!(f[3].conj(), f[3]);
            }
        }
    }

    #[test]
    fn norms() {
        assert_eq!(dnorm(&lp("1 - t"), 4).unwrap(), int(2));
        assert_eq!(dnorm(&lp("1 - t"), 6).unwrap(), int(1));
        assert_eq!(dnorm(&lp("t"), 5).unwrap(), int(1));
        assert_eq!(dnorm(&lp("t"), 2).unwrap(), int(-1));
        assert_eq!(dnorm(&lp("t^-3 + t^-2"), 2).unwrap(), int(0));
        assert_eq!(dnorm(&lp("-2"), 7).unwrap(), int(64));
        for d in 2..=40 {
            let expect = prime_power_base(d).map(|l| l as i64).unwrap_or(1);
            assert_eq!(dnorm(&lp("1 - t"), d).unwrap(), int(expect), "d = {d}");
            assert_eq!(dnorm(&lp("3"), d).unwrap(), int(3i64.pow(euler_phi(d) as u32)));
        }
    }

    #[test]
    fn norm_condition_examples() {
        let c = dnorm_condition_a(2, 3, 7, 1).unwrap();
        assert!(c.passes);
        assert_eq!(c.values, vec![NormValue { d: 5, value: int(1) }]);
        let c = dnorm_condition_a(2, 3, 5, 1).unwrap();
        assert!(!c.passes);
        assert_eq!(c.alpha_prime, -1);
        let c = dnorm_condition_a(3, 5, 15, 1).unwrap();
        assert!(c.passes && c.alpha_prime == 0);
        // <xi> is a unit at d = 5, so only the (e, f) scan excludes slope 8
        assert!(dnorm_condition_a(2, 3, 8, 1).unwrap().passes);
        assert_eq!(dnorm_condition_a(2, 3, 11, 1).unwrap().first_failure().unwrap().value, int(121));
    }

    #[test]
    fn torsion_r0_examples() {
        let t = torsion_a_r0(2, 3, 6, 1).unwrap();
        let inv = inv_root_factor(1, 5).unwrap();
        assert!(t.value.unit_ratio(&(&inv * &inv)).is_some());
        assert!(t.unit_ratio(&torsion_lens(25, 1, 5).unwrap()).is_some());
        assert!(matches!(torsion_a_r0(2, 3, 5, 1), Err(Error::NonCyclicHomology(_))));
        assert!(matches!(torsion_a_r0(2, 3, 10, 1), Err(Error::NonCyclicHomology(_))));
    }

    #[test]
    fn torsion_r0_from_cut_sequence() {
        // {beta (zeta - 1) sum k_i zeta^i - alpha} (zeta - 1)^{-2}, then zeta = xi^m
        let (m, n, alpha, beta) = (3, 5, 15, 1);
        let big_n = 8;
        let r1 = r_value(m, n, 1).unwrap();
        let inv = inv_root_factor(1, big_n).unwrap();
        let zeta_form = &(&r1.scale(&int(beta)) - &Residue::from_int(alpha, aug(big_n)).unwrap()) * &(&inv * &inv);
        let xi_form = zeta_form.automorphism(m).unwrap();
        let t = torsion_a_r0(m, n, alpha, beta).unwrap();
        assert!(t.value.unit_ratio(&xi_form).is_some());
    }

    #[test]
    fn lens_torsions() {
        let a = torsion_lens(25, 7, 5).unwrap();
        let b = &inv_root_factor(1, 5).unwrap() * &inv_root_factor(3, 5).unwrap();
        assert_eq!(a.value, b);
        assert_eq!(torsion_lens(5, 2, 5).unwrap().value, b);
        assert!(torsion_lens(25, 5, 5).is_err());
        assert!(torsion_lens(25, 2, 3).is_err());
    }

    #[test]
    fn torsion_b_examples() {
        let t = torsion_b_r0(8, 3, 23, 1).unwrap();
        let inv = inv_root_factor(7, 8).unwrap();
        assert_eq!(t.value, -(&inv * &inv));
        let t = torsion_b_r0(8, 3, 25, 1).unwrap();
        let inv = inv_root_factor(1, 8).unwrap();
        assert_eq!(t.value, &inv * &inv);
        assert!(torsion_b_r0(8, 3, 22, 1).is_err());
    }

    #[test]
    fn franz() {
        assert!(franz_equal(&[1, 2], &[1, 3], 5).unwrap());
        assert!(!franz_equal(&[1, 1], &[1, 2], 7).unwrap());
        assert!(franz_equal(&[1, 3, 1, 3], &[1, 1, 2, 2], 5).unwrap());
        assert!(franz_equal(&[2, 5], &[1, 2], 5).is_err());
        assert_eq!(franz_solve_mnplus1(5).unwrap(), vec![(2, 3, 1, 3)]);
        assert_eq!(franz_solve_mnplus1(16).unwrap(), vec![(2, 3, 1, 3)]);
    }

    #[test]
    fn lens_types() {
        assert_eq!(lens_type_a_mn(2, 3).unwrap().to_string(), "L(25,9)");
        assert_eq!(lens_type_a_mn(3, 5).unwrap().to_string(), "L(64,39)");
        assert_eq!(lens_type_a_mn(2, 5).unwrap().to_string(), "L(49,20)");
        assert!(lens_equivalent(25, 7, 18, true).unwrap());
        assert!(!lens_equivalent(4, 1, 3, true).unwrap());
        assert!(lens_equivalent(4, 1, 3, false).unwrap());
        assert!(lens_equivalent(4, 1, 2, false).is_err());
        assert_eq!(LensType::new(-5, 2, true).unwrap().to_string(), "L(5,3)");
        assert_eq!(LensType::new(-1, 7, true).unwrap().describe(), "S^3");
        assert_eq!(LensType::new(0, -1, true).unwrap().describe(), "S^1 x S^2");
        assert!(LensType::new(6, 2, true).is_err());
    }

    #[test]
    fn mn_r_torsion() {
        let t = torsion_a_mn_r(2, 3, 1, 1).unwrap();
        assert_eq!(t.n, 19);
        assert!(t.label.ends_with("E = 13"));
        // the class is independent of (gamma, delta)
        let u = torsion_a_mn_r_with(2, 3, 1, 1, 2, 1).unwrap();
        assert!(t.unit_ratio(&u).is_some());
        // (mn, 0) on A(2,3) is L(25, 9)
        let t = torsion_a_mn_r(2, 3, 0, 1).unwrap();
        assert!(t.equivalent_up_to_generator(&torsion_lens(25, 9, 25).unwrap()));
        assert!(torsion_a_mn_r(2, 3, 4, 1).is_err());
    }

    #[test]
    fn seven_r_torsion() {
        let t = torsion_a_23_7_r(0, 1).unwrap();
        assert_eq!(t.n, 25);
        assert_eq!(t.value, torsion_lens(25, 18, 25).unwrap().value);
        let t = torsion_a_23_7_r(1, 1).unwrap();
        assert_eq!(t.n, 18);
        let t = torsion_a_23_7_r(-1, 1).unwrap();
        assert_eq!(t.n, 32);
        let e: i64 = t.label.rsplit(' ').next().unwrap().parse().unwrap();
        assert_eq!(e % 2, 1);
    }
}
