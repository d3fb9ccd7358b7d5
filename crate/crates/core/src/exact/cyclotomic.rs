//! Cyclotomic polynomials.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::arith::divisors;
use super::laurent::LaurentPoly;

fn cache() -> &'static Mutex<HashMap<u64, LaurentPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, LaurentPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `Phi_d(t)`, computed as `(t^d - 1) / prod_{e | d, e < d} Phi_e`.
pub fn cyclotomic_poly(d: u64) -> LaurentPoly {
    assert!(d >= 1, "cyclotomic_poly needs d >= 1");
    if let Some(p) = cache().lock().unwrap().get(&d) {
        return p.clone();
    }
    let mut num = LaurentPoly::t_pow_minus_one(d as i64);
    for e in divisors(d) {
        if e < d {
            num = num.exact_div(&cyclotomic_poly(e)).expect("Phi_e divides t^d - 1 for e | d");
        }
    }
    cache().lock().unwrap().insert(d, num.clone());
    num
}
