//! Congruences restricting real schemes, each producing a
//! [`CongruenceReport`] with residues, hypotheses and a verdict.

mod cover;
mod ellipsoid;
mod orientation;
mod projective;
mod theorem1;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

pub use cover::{cover_separation, viro_loop_value, viro_path_value, CoverComponent, CoverError};
pub use ellipsoid::{ellipsoid_check, ellipsoid_residues, fiedler_check, fiedler_residues};
pub use orientation::{
    hyperboloid_chi_check, hyperboloid_comparisons, hyperboloid_orientation_check, plane_orientation_check,
    OrientationError,
};
pub use projective::{projective_check, ProjectiveHypotheses, ProjectiveMode};
pub use theorem1::{
    addendum_filter, addendum_residues, ash_signature, guillou_marin_check, surface_congruence, theorem1_residue,
};

use crate::model::TypeFlag;
use crate::zform::BrownValue;

/// Sign with which the Brown invariant enters every congruence.
pub const BROWN_SIGN: i64 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CongruenceError {
    #[error("sigma(CB) - chi(RB) = {0} is odd")]
    Parity(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "forces-type-I")]
    ForcesTypeI,
    #[serde(rename = "hypothesis-violated")]
    HypothesisViolated,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::ForcesTypeI => "forces-type-I",
            Verdict::HypothesisViolated => "hypothesis-violated",
        }
    }

    /// Pass or forces-type-I.
    pub fn is_ok(self) -> bool {
        matches!(self, Verdict::Pass | Verdict::ForcesTypeI)
    }

    /// Several checks of one scheme: any failure wins; if every check is
    /// inapplicable so is the whole; otherwise forces-type-I beats pass.
    pub fn combine<I: IntoIterator<Item = Verdict>>(items: I) -> Verdict {
        let mut any = false;
        let mut all_hv = true;
        let mut forces = false;
        for v in items {
            any = true;
            match v {
                Verdict::Fail => return Verdict::Fail,
                Verdict::HypothesisViolated => {}
                Verdict::ForcesTypeI => {
                    all_hv = false;
                    forces = true;
                }
                Verdict::Pass => all_hv = false,
            }
        }
        if !any || (!all_hv && !forces) {
            Verdict::Pass
        } else if all_hv {
            Verdict::HypothesisViolated
        } else {
            Verdict::ForcesTypeI
        }
    }

    /// Preference among alternative readings of the same input (unknown
    /// separation, unknown Brown invariant): the scheme is admissible if
    /// any reading is.
    fn rank(self) -> u8 {
        match self {
            Verdict::Pass => 0,
            Verdict::ForcesTypeI => 1,
            Verdict::Fail => 2,
            Verdict::HypothesisViolated => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub ok: bool,
}

/// One residue test `lhs ∈ rhs (mod modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub label: String,
    pub lhs: i64,
    pub rhs: Vec<i64>,
    pub modulus: i64,
}

impl Condition {
    pub fn new(label: &str, value: i64, rhs: &[i64], modulus: i64) -> Self {
        let mut set: Vec<i64> = rhs.iter().map(|r| r.rem_euclid(modulus)).collect();
        set.sort_unstable();
        set.dedup();
        Condition { label: label.to_string(), lhs: value.rem_euclid(modulus), rhs: set, modulus }
    }

    /// No restriction: every residue allowed.
    pub fn any(label: &str, value: i64, modulus: i64) -> Self {
        Condition::new(label, value, &(0..modulus).collect::<Vec<_>>(), modulus)
    }

    pub fn holds(&self) -> bool {
        self.rhs.contains(&self.lhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub theorem: String,
    pub hypotheses: Vec<Hypothesis>,
    pub lhs: Option<i64>,
    pub rhs: Vec<i64>,
    pub modulus: i64,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub conditions: Vec<Condition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assignment: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CongruenceReport {
    pub fn hypotheses_ok(&self) -> bool {
        self.hypotheses.iter().all(|h| h.ok)
    }

    pub fn hypothesis(&self, name: &str) -> Option<bool> {
        self.hypotheses.iter().find(|h| h.name == name).map(|h| h.ok)
    }

    /// Picks the most favourable of alternative reports, keeping the first
    /// among equals.
    pub fn best(reports: Vec<CongruenceReport>) -> Option<CongruenceReport> {
        let mut best: Option<CongruenceReport> = None;
        for r in reports {
            match &best {
                Some(b) if b.verdict.rank() <= r.verdict.rank() => {}
                _ => best = Some(r),
            }
        }
        best
    }
}

/// Accumulates hypotheses and residue tests, then settles the verdict.
#[derive(Debug, Clone)]
pub(crate) struct ReportBuilder {
    theorem: String,
    modulus: i64,
    hypotheses: Vec<Hypothesis>,
    conditions: Vec<Condition>,
    forces_type_i: bool,
    contradiction: bool,
    assignment: Option<String>,
    values: BTreeMap<String, i64>,
    note: Option<String>,
}

impl ReportBuilder {
    pub fn new(theorem: &str, modulus: i64) -> Self {
        ReportBuilder {
            theorem: theorem.to_string(),
            modulus,
            hypotheses: Vec::new(),
            conditions: Vec::new(),
            forces_type_i: false,
            contradiction: false,
            assignment: None,
            values: BTreeMap::new(),
            note: None,
        }
    }

    pub fn hypothesis(mut self, name: &str, ok: bool) -> Self {
        self.hypotheses.push(Hypothesis { name: name.to_string(), ok });
        self
    }

    pub fn hypotheses_ok(&self) -> bool {
        self.hypotheses.iter().all(|h| h.ok)
    }

    pub fn condition(mut self, c: Condition) -> Self {
        self.conditions.push(c);
        self
    }

    pub fn conditions(mut self, cs: impl IntoIterator<Item = Condition>) -> Self {
        self.conditions.extend(cs);
        self
    }

    pub fn forces_type_i(mut self, yes: bool) -> Self {
        self.forces_type_i |= yes;
        self
    }

    /// The curve is forced to be of type I but is declared of type II.
    pub fn contradiction(mut self, yes: bool) -> Self {
        self.contradiction |= yes;
        self
    }

    pub fn assignment(mut self, a: &str) -> Self {
        self.assignment = Some(a.to_string());
        self
    }

    pub fn value(mut self, key: &str, v: i64) -> Self {
        self.values.insert(key.to_string(), v);
        self
    }

    pub fn note(mut self, n: &str) -> Self {
        self.note = Some(n.to_string());
        self
    }

    pub fn finish(self) -> CongruenceReport {
        let verdict = if !self.hypotheses_ok() {
            Verdict::HypothesisViolated
        } else if self.contradiction || self.conditions.iter().any(|c| !c.holds()) {
            Verdict::Fail
        } else if self.forces_type_i {
            Verdict::ForcesTypeI
        } else {
            Verdict::Pass
        };
        let (lhs, rhs) = match self.conditions.first() {
            Some(c) => (Some(c.lhs), c.rhs.clone()),
            None => (None, Vec::new()),
        };
        let modulus = self.conditions.first().map(|c| c.modulus).unwrap_or(self.modulus);
        CongruenceReport {
            theorem: self.theorem,
            hypotheses: self.hypotheses,
            lhs,
            rhs,
            modulus,
            verdict,
            conditions: self.conditions,
            assignment: self.assignment,
            values: self.values,
            note: self.note,
        }
    }
}

/// Residue tests of the four-point pattern shared by the Addendum, the
/// ellipsoid theorem, the hyperboloid addendum and the generalized
/// projective congruence, for a single surface: M gives `k`, (M−1) gives
/// `k ± 1`, (M−2) with `k + 4` forces type I, and type I gives `k0 (mod 4)`.
pub(crate) struct PointOutcome {
    pub conditions: Vec<Condition>,
    pub forces_type_i: bool,
    pub contradiction: bool,
}

pub(crate) fn single_surface_points(
    label: &str,
    chi: i64,
    k: i64,
    k0: Option<i64>,
    deficiency: u32,
    type_flag: TypeFlag,
    with_c_and_d: bool,
) -> Option<PointOutcome> {
    let mut out = PointOutcome { conditions: Vec::new(), forces_type_i: false, contradiction: false };
    match deficiency {
        0 => out.conditions.push(Condition::new(&format!("a: {label}"), chi, &[k], 8)),
        1 => out.conditions.push(Condition::new(&format!("b: {label}"), chi, &[k - 1, k + 1], 8)),
        2 if with_c_and_d && (chi - k - 4).rem_euclid(8) == 0 => {
            out.forces_type_i = true;
            out.contradiction = type_flag == TypeFlag::II;
        }
        _ => {}
    }
    if let Some(k0) = k0.filter(|_| with_c_and_d && (type_flag == TypeFlag::I || out.forces_type_i)) {
        out.conditions.push(Condition::new(&format!("d: {label}"), chi, &[k0], 4));
    }
    if out.conditions.is_empty() && !out.forces_type_i {
        if deficiency == 2 && with_c_and_d {
            let allowed: Vec<i64> = (0..8).filter(|&r| r != (k + 4).rem_euclid(8)).collect();
            out.conditions.push(Condition::new(&format!("c: {label}"), chi, &allowed, 8));
            return Some(out);
        }
        return None;
    }
    Some(out)
}

pub(crate) fn brown_value(beta: BrownValue) -> Option<i64> {
    beta.value().map(i64::from)
}
