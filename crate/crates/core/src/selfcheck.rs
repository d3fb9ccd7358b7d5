//! Invariant suites shared by the `selfcheck` command and the test targets.

use serde::Serialize;

use crate::exact::arith::{gcd, prime_power_base};
use crate::exact::scalar::int;
use crate::exact::LaurentPoly;
use crate::linkalg::CutSequence;
use crate::torsion::{dnorm, franz_solve_mnplus1, r_value};

/// A named check over a finite family of instances.
pub struct Suite {
    pub name: &'static str,
    pub run: Box<dyn Fn() -> SuiteResult + Send + Sync>,
}

impl Suite {
    pub fn new(name: &'static str, run: impl Fn() -> SuiteResult + Send + Sync + 'static) -> Self {
        Suite { name, run: Box::new(run) }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub checked: usize,
    /// `(instance, invariant)` pairs that failed.
    pub failures: Vec<(String, String)>,
}

impl SuiteResult {
    fn check(&mut self, ok: bool, instance: impl FnOnce() -> String, invariant: &str) {
        self.checked += 1;
        if !ok {
            self.failures.push((instance(), invariant.to_string()));
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    #[serde(flatten)]
    pub result: SuiteResult,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.result.failures.is_empty()
    }
}

pub fn coprime_pairs(max_mn: i64) -> impl Iterator<Item = (i64, i64)> {
    (5..=max_mn).flat_map(|s| (2..s).map(move |m| (m, s - m))).filter(|&(m, n)| m < n && gcd(m, n) == 1)
}

fn cut_sequence_suite(max_mn: i64) -> SuiteResult {
    let mut r = SuiteResult::default();
    for (m, n) in coprime_pairs(max_mn) {
        match CutSequence::new(m, n) {
            Ok(cs) => {
                let laws = cs.permutation_laws();
                let what = laws.as_ref().err().cloned().unwrap_or_default();
                r.check(laws.is_ok(), || format!("({m},{n})"), &what);
            }
            Err(e) => r.check(false, || format!("({m},{n})"), &e.to_string()),
        }
    }
    r
}

fn r_forms_suite(max_mn: i64) -> SuiteResult {
    let mut r = SuiteResult::default();
    for (m, n) in coprime_pairs(max_mn) {
        let forms: Result<Vec<_>, _> = (1..=5).map(|k| r_value(m, n, k)).collect();
        let f = match forms {
            Ok(f) => f,
            Err(e) => {
                r.check(false, || format!("({m},{n})"), &e.to_string());
                continue;
            }
        };
        let tag = || format!("({m},{n})");
        r.check(f[0] == f[1], tag, "form 1 = form 2");
        r.check(f[1] == f[2], tag, "form 2 = form 3");
        r.check(f[2].automorphism(m).as_ref() == Ok(&f[3]), tag, "form 3 under zeta -> xi = form 4");
        r.check(f[3] == f[4], tag, "form 4 = form 5");
        r.check(f[3].conj() == f[3], tag, "R is conjugation invariant");
    }
    r
}

fn norm_table_suite(max_d: u64) -> SuiteResult {
    let mut r = SuiteResult::default();
    let one_minus_t = LaurentPoly::from_ints(&[1, -1]);
    let t = LaurentPoly::t_pow(1);
    for d in 2..=max_d {
        let expect = int(prime_power_base(d).map(|l| l as i64).unwrap_or(1));
        r.check(dnorm(&one_minus_t, d).as_ref() == Ok(&expect), || format!("d={d}"), "N_d(1-t) = l or 1");
        let unit = int(if d == 2 { -1 } else { 1 });
        r.check(dnorm(&t, d).as_ref() == Ok(&unit), || format!("d={d}"), "N_d(t) = 1, -1 at d=2");
    }
    r
}

fn franz_suite(bound: i64) -> SuiteResult {
    let mut r = SuiteResult::default();
    let sols = franz_solve_mnplus1(bound);
    r.check(
        sols.as_ref().map(|s| s.as_slice() == [(2, 3, 1, 3)]).unwrap_or(false),
        || format!("bound={bound} -> {sols:?}"),
        "unique solution (2,3,1,3)",
    );
    r
}

/// The default suites, with pairs up to `m + n <= max_mn`.
pub fn default_suites(max_mn: i64) -> Vec<Suite> {
    vec![
        Suite::new("cut-sequence laws", move || cut_sequence_suite(max_mn)),
        Suite::new("R-form agreement", move || r_forms_suite(max_mn)),
        Suite::new("norm tables", || norm_table_suite(60)),
        Suite::new("Franz solve", || franz_suite(16)),
    ]
}

pub fn run_suites(suites: &[Suite]) -> Vec<SuiteReport> {
    suites.iter().map(|s| SuiteReport { suite: s.name, result: (s.run)() }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_pass() {
        for rep in run_suites(&default_suites(12)) {
            assert!(rep.passed(), "{}: {:?}", rep.suite, rep.result.failures);
            assert!(rep.result.checked > 0);
        }
    }

    #[test]
    fn injected_failure_is_named() {
        let bad = Suite::new("injected", || {
            let mut r = SuiteResult::default();
            r.check(false, || "x".into(), "always false");
            r
        });
        let reps = run_suites(&[bad]);
        assert!(!reps[0].passed());
        assert_eq!(reps[0].result.failures[0].1, "always false");
    }
}
