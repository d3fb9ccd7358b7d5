//! Browser bindings: each export returns a JSON string with exact decimal
//! strings for every number.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use lens_surgery::decider::{decide_a, decide_b, VerdictKind};
use lens_surgery::exact::arith::divisors;
use lens_surgery::exact::text::parse_laurent;
use lens_surgery::linkalg::{alexander_a, alexander_b, cut_sequence};
use lens_surgery::torsion::dnorm;

/// Longest slope range `surgery_strip` will decide in one call.
pub const MAX_STRIP: i64 = 400;

fn s<T: ToString>(x: T) -> String {
    x.to_string()
}

/// The Alexander polynomial of `A(m,n)` or `B(m,n)` with its exponent grid.
pub fn alexander_diagram_json(family: &str, m: i64, n: i64) -> Result<Value, String> {
    let poly = match family {
        "A" => alexander_a(m, n),
        "B" => alexander_b(m, n),
        _ => return Err(format!("unknown family {family:?}")),
    }
    .map_err(s)?;
    let terms: Vec<Value> = poly.terms().map(|((t, x), c)| json!({"t": s(t), "x": s(x), "c": s(c)})).collect();
    let mut out = json!({"family": family, "m": s(m), "n": s(n), "polynomial": s(&poly), "terms": terms});
    if family == "A" {
        let cs = cut_sequence(m, n).map_err(s)?;
        out["cut"] = json!(cs.k.iter().map(s).collect::<Vec<_>>());
    }
    Ok(out)
}

/// Verdicts for `(alpha/beta, 0)`-surgery over `alpha_min..=alpha_max`.
pub fn surgery_strip_json(
    family: &str,
    m: i64,
    n: i64,
    beta: i64,
    alpha_min: i64,
    alpha_max: i64,
) -> Result<Value, String> {
    if alpha_max < alpha_min || alpha_max - alpha_min >= MAX_STRIP {
        return Err(format!("alpha range must hold 1..={MAX_STRIP} values"));
    }
    let decide = match family {
        "A" => decide_a,
        "B" => decide_b,
        _ => return Err(format!("unknown family {family:?}")),
    };
    let mut cells = Vec::new();
    for alpha in alpha_min..=alpha_max {
        let cell = match decide(m, n, alpha, beta) {
            Ok(v) => {
                let kind = match &v.kind {
                    VerdictKind::Lens { .. } => "lens",
                    VerdictKind::ConnectedSum { .. } => "connected_sum",
                    VerdictKind::SmallSeifert { .. } => "seifert",
                    VerdictKind::NotLens { .. } => "not_lens",
                    VerdictKind::Inconclusive => "inconclusive",
                };
                json!({"alpha": s(alpha), "kind": kind, "headline": v.headline()})
            }
            Err(e) => json!({"alpha": s(alpha), "kind": "invalid", "headline": s(e)}),
        };
        cells.push(cell);
    }
    Ok(json!({"family": family, "m": s(m), "n": s(n), "beta": s(beta), "cells": cells}))
}

/// `N_d(poly)` for every divisor `d >= 2` of `big_n`.
pub fn norm_table_json(poly: &str, big_n: u32) -> Result<Value, String> {
    let p = parse_laurent(poly).map_err(s)?;
    if big_n < 2 {
        return Err("N must be at least 2".into());
    }
    let mut rows = Vec::new();
    for d in divisors(big_n.into()).into_iter().filter(|&d| d >= 2) {
        rows.push(json!({"d": s(d), "value": s(dnorm(&p, d).map_err(s)?)}));
    }
    Ok(json!({"poly": s(&p), "n": s(big_n), "rows": rows}))
}

fn to_js(r: Result<Value, String>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn alexander_diagram(family: &str, m: i32, n: i32) -> Result<String, JsError> {
    to_js(alexander_diagram_json(family, m.into(), n.into()))
}

#[wasm_bindgen]
pub fn surgery_strip(
    family: &str,
    m: i32,
    n: i32,
    beta: i32,
    alpha_min: i32,
    alpha_max: i32,
) -> Result<String, JsError> {
    to_js(surgery_strip_json(family, m.into(), n.into(), beta.into(), alpha_min.into(), alpha_max.into()))
}

#[wasm_bindgen]
pub fn norm_table(poly: &str, n: u32) -> Result<String, JsError> {
    to_js(norm_table_json(poly, n))
}
