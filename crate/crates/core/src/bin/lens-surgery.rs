use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lens_surgery::decider::{self, ScanAConfig, ScanBConfig, Verdict};
use lens_surgery::exact::text::parse_laurent;
use lens_surgery::exact::BiLaurentPoly;
use lens_surgery::selfcheck::{default_suites, run_suites, Suite, SuiteResult};
use lens_surgery::torsion::{self, TorsionSequence};
use lens_surgery::{linkalg, Error};

/// Exact Alexander polynomials, torsion and lens space surgery decisions for
/// the link families A(m,n) and B(p,q).
#[derive(Parser)]
#[command(name = "lens-surgery", version)]
struct Cli {
    /// Print JSON instead of text; numbers are decimal strings.
    #[arg(long, global = true)]
    json: bool,
    /// Compare lens spaces up to orientation-preserving homeomorphism.
    #[arg(long, global = true)]
    oriented: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

#[derive(Subcommand)]
enum Cmd {
    /// Alexander polynomial of A(m,n) or B(p,q).
    Alexander {
        family: Family,
        m: i64,
        n: i64,
        /// Also run the determinant oracle and compare (A only).
        #[arg(long)]
        oracle: bool,
    },
    /// Decide whether (alpha/beta, 0)-surgery is a lens space.
    #[command(allow_negative_numbers = true)]
    Decide { family: Family, m: i64, n: i64, alpha: i64, beta: i64 },
    /// Classify surgeries with two nontrivial slopes.
    #[command(subcommand)]
    Classify(Classify),
    /// Torsion value sequences.
    #[command(subcommand)]
    Torsion(Torsion),
    /// d-norms N_d of a polynomial in t.
    #[command(allow_negative_numbers = true)]
    Norm {
        /// Polynomial such as "1 - t" or "t^-1 + 3".
        poly: String,
        /// Divisors d >= 1.
        #[arg(required_unless_present = "divisors_of")]
        d: Vec<u64>,
        /// Use every divisor d >= 2 of N.
        #[arg(long, value_name = "N")]
        divisors_of: Option<u64>,
    },
    /// Whether L(p,q1) and L(p,q2) are homeomorphic.
    #[command(name = "lens-eq", allow_negative_numbers = true)]
    LensEq { p: i64, q1: i64, q2: i64 },
    /// Solve (zeta^{mn+1} - 1)(zeta - 1) = (zeta^i - 1)(zeta^j - 1) up to units.
    #[command(name = "franz-solve")]
    FranzSolve {
        #[arg(long, default_value_t = 16)]
        bound: i64,
    },
    /// Scan a window of slopes.
    #[command(subcommand)]
    Scan(Scan),
    /// Run the invariant suites.
    Selfcheck {
        #[arg(long, default_value_t = 16)]
        max_mn: i64,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Subcommand)]
#[command(rename_all = "kebab-case")]
enum Classify {
    /// (B(p,q); a1/b1, a2/b2).
    #[command(allow_negative_numbers = true)]
    BFull { p: i64, q: i64, a1: i64, b1: i64, a2: i64, b2: i64 },
    /// (A(m,n); mn, a2/b2).
    #[command(allow_negative_numbers = true)]
    AMnR { m: i64, n: i64, a2: i64, b2: i64 },
    /// (A(2,3); 7/1, a2/b2).
    #[command(name = "a-23-7-r", allow_negative_numbers = true)]
    A237R { a2: i64, b2: i64 },
}

#[derive(Subcommand)]
#[command(rename_all = "kebab-case")]
enum Torsion {
    /// Torsion of (A(m,n); alpha/beta, 0).
    #[command(name = "a-r0", allow_negative_numbers = true)]
    AR0 { m: i64, n: i64, alpha: i64, beta: i64 },
    /// Torsion of (B(p,q); alpha/beta, 0).
    #[command(name = "b-r0", allow_negative_numbers = true)]
    BR0 { p: i64, q: i64, alpha: i64, beta: i64 },
    /// Torsion of L(p,q) modulo nu_N.
    #[command(allow_negative_numbers = true)]
    Lens { p: i64, q: i64, n: i64 },
    /// Torsion of (A(m,n); mn, alpha/beta).
    #[command(allow_negative_numbers = true)]
    AMnR { m: i64, n: i64, alpha: i64, beta: i64 },
    /// Torsion of (A(2,3); 7, alpha/beta).
    #[command(name = "a-23-7-r", allow_negative_numbers = true)]
    A237R { alpha: i64, beta: i64 },
    /// The residue R(m,n) in one of its five forms.
    R {
        m: i64,
        n: i64,
        #[arg(long, default_value_t = 4)]
        form: u8,
    },
}

#[derive(Subcommand)]
enum Scan {
    /// Scan (A(m,n); alpha/beta, 0).
    #[command(name = "A", alias = "a")]
    A {
        #[command(flatten)]
        a: ScanAArgs,
        #[command(flatten)]
        common: ScanCommon,
    },
    /// Scan (B(p,q); alpha/beta, 0).
    #[command(name = "B", alias = "b")]
    B {
        #[command(flatten)]
        b: ScanBArgs,
        #[command(flatten)]
        common: ScanCommon,
    },
}

#[derive(Args)]
struct ScanCommon {
    /// Print the hit list and counts only.
    #[arg(long)]
    summary: bool,
    /// Worker threads; output order does not depend on it.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct ScanAArgs {
    #[arg(long, default_value_t = 16)]
    max_mn: i64,
    #[arg(long, default_value_t = 4)]
    beta_max: i64,
    #[arg(long, default_value_t = 120)]
    alpha_window: i64,
    #[arg(long, default_value_t = 5)]
    below_window: i64,
}

#[derive(Args)]
struct ScanBArgs {
    #[arg(long, default_value_t = 8)]
    p_max: i64,
    #[arg(long, default_value_t = 7)]
    q_max: i64,
    #[arg(long, default_value_t = 3)]
    beta_max: i64,
    #[arg(long, default_value_t = 60)]
    alpha_window: i64,
}

/// A failure after parsing, mapped to an exit code.
enum Fail {
    Input(String),
    Internal(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) => Fail::Internal(e.to_string()),
            _ => Fail::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Fail {
    fn from(e: io::Error) -> Self {
        Fail::Internal(e.to_string())
    }
}

type Out<'a> = BufWriter<io::StdoutLock<'a>>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let res = run(&cli, &mut out).and_then(|()| out.flush().map_err(Fail::from));
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Fail::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: &mut Out, v: &Value) -> Result<(), Fail> {
    writeln!(out, "{v}")?;
    Ok(())
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn print_verdict(cli: &Cli, out: &mut Out, v: &Verdict) -> Result<(), Fail> {
    if cli.json {
        let mut j = to_json(v);
        j["headline"] = json!(v.headline());
        emit(out, &j)
    } else {
        write!(out, "{v}")?;
        Ok(())
    }
}

fn run(cli: &Cli, out: &mut Out) -> Result<(), Fail> {
    match &cli.cmd {
        Cmd::Alexander { family, m, n, oracle } => {
            let (poly, label) = match family {
                Family::A => (linkalg::alexander_a(*m, *n)?, "A"),
                Family::B => (linkalg::alexander_b(*m, *n)?, "B"),
            };
            let check = if *oracle {
                if matches!(family, Family::B) {
                    return Err(Fail::Input("the determinant oracle exists for A(m,n) only".into()));
                }
                let det: BiLaurentPoly = linkalg::alexander_a_det_oracle(*m, *n)?;
                Some(if det.unit_equivalent(&poly) { "MATCH" } else { "MISMATCH" })
            } else {
                None
            };
            if cli.json {
                let mut j =
                    json!({"family": label, "params": [m.to_string(), n.to_string()], "polynomial": poly.to_string()});
                if let Some(c) = check {
                    j["oracle"] = json!(c);
                }
                emit(out, &j)?;
            } else {
                writeln!(out, "{poly}")?;
                if let Some(c) = check {
                    writeln!(out, "{c}")?;
                }
            }
            if check == Some("MISMATCH") {
                return Err(Fail::Internal(format!("determinant oracle disagrees for {label}({m},{n})")));
            }
        }
        Cmd::Decide { family, m, n, alpha, beta } => {
            let v = match family {
                Family::A => decider::decide_a(*m, *n, *alpha, *beta)?,
                Family::B => decider::decide_b(*m, *n, *alpha, *beta)?,
            };
            print_verdict(cli, out, &v)?;
        }
        Cmd::Classify(c) => {
            let v = match *c {
                Classify::BFull { p, q, a1, b1, a2, b2 } => decider::classify_b_full(p, q, a1, b1, a2, b2)?,
                Classify::AMnR { m, n, a2, b2 } => decider::classify_a_mn_r(m, n, a2, b2)?,
                Classify::A237R { a2, b2 } => decider::classify_a_23_7_r(a2, b2)?,
            };
            print_verdict(cli, out, &v)?;
        }
        Cmd::Torsion(t) => {
            let seq = match *t {
                Torsion::AR0 { m, n, alpha, beta } => torsion::torsion_a_r0(m, n, alpha, beta)?,
                Torsion::BR0 { p, q, alpha, beta } => torsion::torsion_b_r0(p, q, alpha, beta)?,
                Torsion::Lens { p, q, n } => torsion::torsion_lens(p, q, n)?,
                Torsion::AMnR { m, n, alpha, beta } => torsion::torsion_a_mn_r(m, n, alpha, beta)?,
                Torsion::A237R { alpha, beta } => torsion::torsion_a_23_7_r(alpha, beta)?,
                Torsion::R { m, n, form } => {
                    let r = torsion::r_value(m, n, form)?;
                    if cli.json {
                        emit(
                            out,
                            &json!({"m": m.to_string(), "n": n.to_string(), "form": form.to_string(), "value": r.to_string()}),
                        )?;
                    } else {
                        writeln!(out, "{r}")?;
                    }
                    return Ok(());
                }
            };
            print_torsion(cli, out, &seq)?;
        }
        Cmd::Norm { poly, d, divisors_of } => {
            let p = parse_laurent(poly)?;
            let ds: Vec<u64> = match divisors_of {
                Some(n) => lens_surgery::exact::arith::divisors(*n).into_iter().filter(|&d| d >= 2).collect(),
                None => d.clone(),
            };
            let mut rows = Vec::new();
            for d in ds {
                rows.push((d, torsion::dnorm(&p, d)?));
            }
            if cli.json {
                let vals: Vec<Value> =
                    rows.iter().map(|(d, v)| json!({"d": d.to_string(), "value": v.to_string()})).collect();
                emit(out, &json!({"poly": p.to_string(), "values": vals}))?;
            } else {
                for (d, v) in rows {
                    writeln!(out, "N_{d} = {v}")?;
                }
            }
        }
        Cmd::LensEq { p, q1, q2 } => {
            let eq = torsion::lens_equivalent(*p, *q1, *q2, cli.oriented)?;
            let mode = if cli.oriented { "oriented" } else { "unoriented" };
            if cli.json {
                emit(
                    out,
                    &json!({"P": p.to_string(), "q1": q1.to_string(), "q2": q2.to_string(), "mode": mode, "equivalent": eq}),
                )?;
            } else {
                let word = if eq { "EQUIVALENT" } else { "NOT-EQUIVALENT" };
                writeln!(out, "L({p},{q1}) L({p},{q2}) {word} ({mode})")?;
            }
        }
        Cmd::FranzSolve { bound } => {
            let sols = torsion::franz_solve_mnplus1(*bound)?;
            if cli.json {
                let s: Vec<Value> = sols
                    .iter()
                    .map(|(m, n, i, j)| json!({"m": m.to_string(), "n": n.to_string(), "i": i.to_string(), "j": j.to_string()}))
                    .collect();
                emit(out, &json!({"bound": bound.to_string(), "solutions": s}))?;
            } else {
                for (m, n, i, j) in &sols {
                    writeln!(out, "(m,n)=({m},{n}) (i,j)=({i},{j})")?;
                }
                writeln!(out, "{} solutions", sols.len())?;
            }
        }
        Cmd::Scan(Scan::A { a, common }) => {
            let cfg = ScanAConfig {
                max_mn: a.max_mn,
                beta_max: a.beta_max,
                alpha_window: a.alpha_window,
                below_window: a.below_window,
                jobs: common.jobs,
            };
            let rep = decider::scan_a(&cfg)?;
            if !common.summary {
                for v in &rep.records {
                    emit(out, &record(v))?;
                }
            }
            if cli.json || !common.summary {
                emit(out, &json!({"summary": to_json(&rep)}))?;
            } else {
                for h in &rep.hits {
                    writeln!(out, "{h}")?;
                }
                writeln!(
                    out,
                    "{} instances, {} lens, {} inconclusive, {} violations",
                    rep.instances,
                    rep.hits.len(),
                    rep.inconclusive.len(),
                    rep.violations.len()
                )?;
                for v in &rep.violations {
                    writeln!(out, "violation: {v}")?;
                }
                for v in &rep.inconclusive {
                    writeln!(out, "inconclusive: {}", v.surgery)?;
                }
            }
            if !rep.violations.is_empty() {
                return Err(Fail::Internal(format!("{} structural violations", rep.violations.len())));
            }
        }
        Cmd::Scan(Scan::B { b, common }) => {
            let cfg = ScanBConfig {
                p_max: b.p_max,
                q_max: b.q_max,
                beta_max: b.beta_max,
                alpha_window: b.alpha_window,
                oriented: cli.oriented,
                jobs: common.jobs,
            };
            let rep = decider::scan_b(&cfg)?;
            if !common.summary {
                for v in &rep.records {
                    emit(out, &record(v))?;
                }
            }
            if cli.json || !common.summary {
                emit(out, &json!({"summary": to_json(&rep)}))?;
            } else {
                for h in &rep.hits {
                    writeln!(out, "{h}")?;
                }
                writeln!(
                    out,
                    "{} instances, {} lens, {} orientation flips",
                    rep.instances,
                    rep.hits.len(),
                    rep.orientation_flips
                )?;
                for m in &rep.mismatches {
                    writeln!(out, "mismatch: {m}")?;
                }
                writeln!(out, "{} mismatches", rep.mismatches.len())?;
            }
        }
        Cmd::Selfcheck { max_mn, inject_fault } => {
            if *max_mn < 5 {
                return Err(Fail::Input(format!("max-mn {max_mn} < 5")));
            }
            let mut suites = default_suites(*max_mn);
            if *inject_fault {
                suites.push(Suite::new("injected fault", || SuiteResult {
                    checked: 1,
                    failures: vec![("(none)".into(), "deliberately false".into())],
                }));
            }
            let reps = run_suites(&suites);
            let ok = reps.iter().all(|r| r.passed());
            if cli.json {
                emit(out, &json!({"passed": ok, "suites": to_json(&reps)}))?;
            } else {
                for r in &reps {
                    let tag = if r.passed() { "PASS" } else { "FAIL" };
                    writeln!(out, "{tag} {} ({} checks)", r.suite, r.result.checked)?;
                    for (inst, inv) in &r.result.failures {
                        writeln!(out, "  {inv} at {inst}")?;
                    }
                }
                writeln!(out, "{}", if ok { "PASS" } else { "FAIL" })?;
            }
            if !ok {
                return Err(Fail::Internal("selfcheck failed".into()));
            }
        }
    }
    Ok(())
}

fn print_torsion(cli: &Cli, out: &mut Out, seq: &TorsionSequence) -> Result<(), Fail> {
    let divs: Vec<u64> = lens_surgery::exact::arith::divisors(seq.n).into_iter().filter(|&d| d >= 2).collect();
    let mut at = Vec::new();
    for d in divs {
        at.push((d, seq.at(d)?));
    }
    if cli.json {
        let vals: Vec<Value> =
            at.iter().map(|(d, r)| json!({"d": d.to_string(), "value": r.rep().to_string()})).collect();
        let mut j = to_json(seq);
        j["values"] = json!(vals);
        emit(out, &j)
    } else {
        writeln!(out, "{seq}")?;
        for (d, r) in at {
            writeln!(out, "  zeta_{d}: {}", r.rep())?;
        }
        Ok(())
    }
}

/// One JSON line of a scan report.
fn record(v: &Verdict) -> Value {
    let (family, mut params) = match v.surgery.family {
        decider::Family::A { m, n } => ("A", json!({"m": m.to_string(), "n": n.to_string()})),
        decider::Family::B { p, q } => ("B", json!({"p": p.to_string(), "q": q.to_string()})),
    };
    params["alpha"] = json!(v.surgery.coeff1.num.to_string());
    params["beta"] = json!(v.surgery.coeff1.den.to_string());
    let mut verdict = to_json(&v.kind);
    verdict["headline"] = json!(v.headline());
    if let Some(s) = v.source {
        verdict["source"] = json!(s);
    }
    if !v.witnesses.is_empty() {
        verdict["witnesses"] = to_json(&v.witnesses);
    }
    json!({"family": family, "params": params, "verdict": verdict, "certificates": to_json(&v.certificates)})
}
