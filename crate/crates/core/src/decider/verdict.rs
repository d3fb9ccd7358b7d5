use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::exact::Scalar;
use crate::symlaurent::TrivialUnit;
use crate::torsion::{LensType, NormValue};

/// The link family a surgery is performed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "link")]
pub enum Family {
    A {
        #[serde(serialize_with = "crate::report::ser_display")]
        m: i64,
        #[serde(serialize_with = "crate::report::ser_display")]
        n: i64,
    },
    B {
        #[serde(serialize_with = "crate::report::ser_display")]
        p: i64,
        #[serde(serialize_with = "crate::report::ser_display")]
        q: i64,
    },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A { m, n } => write!(f, "A({m},{n})"),
            Family::B { p, q } => write!(f, "B({p},{q})"),
        }
    }
}

/// A reduced fraction `num/den` with `den >= 1`, serialized as `"num/den"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    pub num: i64,
    pub den: i64,
}

impl Slope {
    pub fn new(num: i64, den: i64) -> Self {
        let g = crate::exact::arith::gcd(num, den).max(1);
        let s = if den < 0 { -1 } else { 1 };
        Slope { num: s * num / g, den: s * den / g }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Slope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `(family; coeff1, coeff2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SurgerySpec {
    pub family: Family,
    pub coeff1: Slope,
    pub coeff2: Slope,
}

impl fmt::Display for SurgerySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}, {})", self.family, self.coeff1, self.coeff2)
    }
}

/// A solution `(e, f)` of `red(F) = eta G`, with `i = f - e`, `j = f + e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ObstructionWitness {
    #[serde(serialize_with = "crate::report::ser_display")]
    pub e: i64,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub f: i64,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub i: i64,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub j: i64,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub unit: TrivialUnit,
    #[serde(rename = "alphaPrime", serialize_with = "crate::report::ser_display")]
    pub alpha_prime: i64,
}

impl ObstructionWitness {
    pub fn new(e: i64, f: i64, unit: TrivialUnit, alpha_prime: i64) -> Self {
        ObstructionWitness { e, f, i: f - e, j: f + e, unit, alpha_prime }
    }
}

impl fmt::Display for ObstructionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(e,f)=({},{}) (i,j)=({},{}) unit {}", self.e, self.f, self.i, self.j, self.unit)
    }
}

/// The necessary condition a non-lens surgery fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "failed", rename_all = "snake_case")]
pub enum NotLensReason {
    /// `H_1` is not cyclic.
    Homology {
        #[serde(serialize_with = "crate::report::ser_bigint")]
        order: BigInt,
    },
    /// `alpha' = alpha - mn beta < 0`.
    AlphaPrime {
        #[serde(serialize_with = "crate::report::ser_display")]
        alpha_prime: i64,
    },
    /// Some `|N_d|` differs from `1`; `epsilon` is set when every norm is a
    /// power `epsilon^{phi(d)}` of one integer.
    Norm {
        #[serde(serialize_with = "ser_opt")]
        epsilon: Option<i64>,
        values: Vec<NormValue>,
    },
    /// `red(F) = +-G` has no solution `(e, f)`.
    NoWitness,
}

fn ser_opt<S: serde::Serializer>(x: &Option<i64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

impl fmt::Display for NotLensReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotLensReason::Homology { order } => write!(f, "H_1 of order {order} not cyclic"),
            NotLensReason::AlphaPrime { alpha_prime } => write!(f, "alpha' = {alpha_prime} < 0"),
            NotLensReason::Norm { epsilon: Some(e), .. } => write!(f, "norm={}^phi(d)", e.abs()),
            NotLensReason::Norm { epsilon: None, values } => {
                let bad = values.iter().find(|v| !is_unit(&v.value));
                match bad {
                    Some(v) => write!(f, "norm: N_{} = {}", v.d, v.value),
                    None => write!(f, "norm"),
                }
            }
            NotLensReason::NoWitness => write!(f, "no (e,f) witness"),
        }
    }
}

/// Seifert invariants `(b; r_1, r_2, r_3)` of a fibration over `S^2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeifertInvariants {
    #[serde(serialize_with = "crate::report::ser_display")]
    pub base: i64,
    pub fibers: Vec<Slope>,
    /// Multiplicities of the singular fibers, `1` entries included.
    #[serde(serialize_with = "ser_vec")]
    pub multiplicities: Vec<i64>,
}

fn ser_vec<S: serde::Serializer>(x: &[i64], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(x.iter().map(|v| v.to_string()))
}

impl fmt::Display for SeifertInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fibers: Vec<String> = self.fibers.iter().map(|s| s.to_string()).collect();
        write!(f, "({}; {})", self.base, fibers.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VerdictKind {
    Lens {
        lens: LensType,
    },
    ConnectedSum {
        left: LensType,
        right: LensType,
    },
    SmallSeifert {
        invariants: SeifertInvariants,
    },
    NotLens {
        reason: NotLensReason,
    },
    /// The obstruction found witnesses but no constructive result applies.
    Inconclusive,
}

/// One check performed on the way to a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub check: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Certificate {
    pub fn new(check: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Certificate { check, passed, detail: detail.into() }
    }
}

/// A decision about one surgery, with the checks that support it.
///
/// `Lens`, `ConnectedSum` and `SmallSeifert` verdicts name the constructive
/// result in `source`; the torsion obstruction alone never yields `Lens`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub surgery: SurgerySpec,
    #[serde(flatten)]
    pub kind: VerdictKind,
    pub source: Option<&'static str>,
    pub certificates: Vec<Certificate>,
    /// Solutions of the `(e, f)` equation, when that scan ran.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<ObstructionWitness>,
}

impl Verdict {
    pub fn is_lens(&self) -> bool {
        matches!(self.kind, VerdictKind::Lens { .. })
    }

    pub fn lens(&self) -> Option<&LensType> {
        match &self.kind {
            VerdictKind::Lens { lens } => Some(lens),
            _ => None,
        }
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self.kind, VerdictKind::Inconclusive)
    }

    /// The one-line summary, e.g. `LENS L(25,7)` or `NOT-LENS (no (e,f) witness)`.
    pub fn headline(&self) -> String {
        match &self.kind {
            VerdictKind::Lens { lens } if lens.is_degenerate() => format!("LENS {} = {}", lens, lens.describe()),
            VerdictKind::Lens { lens } => format!("LENS {lens}"),
            VerdictKind::ConnectedSum { left, right } => {
                format!("CONNECTED-SUM {} # {}", left, right)
            }
            VerdictKind::SmallSeifert { invariants } => format!("SEIFERT {invariants}"),
            VerdictKind::NotLens { reason } => format!("NOT-LENS ({reason})"),
            VerdictKind::Inconclusive => format!("INCONCLUSIVE ({} witnesses)", self.witnesses.len()),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.surgery, self.headline())?;
        if let Some(src) = self.source {
            writeln!(f, "  by: {src}")?;
        }
        for w in &self.witnesses {
            writeln!(f, "  witness: {w}")?;
        }
        for c in &self.certificates {
            writeln!(f, "  [{}] {}: {}", if c.passed { "pass" } else { "FAIL" }, c.check, c.detail)?;
        }
        Ok(())
    }
}

pub(crate) fn norm_list(values: &[NormValue]) -> String {
    let parts: Vec<String> = values.iter().map(|v| format!("N_{}={}", v.d, v.value)).collect();
    if parts.is_empty() {
        "no divisors".into()
    } else {
        parts.join(", ")
    }
}

pub(crate) fn is_unit(x: &Scalar) -> bool {
    crate::exact::scalar::is_unit_magnitude(x)
}
