use std::collections::BTreeMap;

use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::graph::Graph;

/// Rounds to 12 significant digits; non-finite values serialize as `null`.
pub fn round_sig12(x: f64) -> Option<f64> {
    if !x.is_finite() {
        return None;
    }
    format!("{x:.11e}").parse().ok()
}

/// Text form used in CSV cells and plain output.
pub fn fmt_sig12(x: f64) -> String {
    match round_sig12(x) {
        Some(r) => format!("{r}"),
        None if x.is_nan() => "nan".into(),
        None if x > 0.0 => "inf".into(),
        None => "-inf".into(),
    }
}

pub(crate) fn ser_f64<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    round_sig12(*x).serialize(s)
}

pub(crate) fn ser_f64_vec<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    xs.iter().map(|&x| round_sig12(x)).collect::<Vec<_>>().serialize(s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Indeterminate,
    Fail,
}

impl Verdict {
    /// Process exit code for this verdict.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Indeterminate => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub label: String,
    pub graph6: String,
    #[serde(serialize_with = "ser_f64_vec")]
    pub values: Vec<f64>,
}

impl Witness {
    pub fn new(label: impl Into<String>, g: &Graph, values: Vec<f64>) -> Self {
        Witness {
            label: label.into(),
            graph6: g.to_string(),
            values,
        }
    }
}

/// Outcome of one check. Field order is the JSON key order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub params: BTreeMap<String, Value>,
    pub verdict: Verdict,
    /// Smallest slack observed; a pass has `margin >= tolerance`.
    #[serde(serialize_with = "ser_f64")]
    pub margin: f64,
    #[serde(serialize_with = "ser_f64")]
    pub tolerance: f64,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub csv: Option<String>,
}

impl VerificationReport {
    pub fn new(check_id: &str, tolerance: f64) -> Self {
        VerificationReport {
            check_id: check_id.to_string(),
            params: BTreeMap::new(),
            verdict: Verdict::Pass,
            margin: f64::INFINITY,
            tolerance,
            witnesses: Vec::new(),
            notes: Vec::new(),
            csv: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    /// Records a slack; anything below the tolerance turns the verdict to fail
    /// and stores `witness`.
    pub fn observe(&mut self, slack: f64, witness: impl FnOnce() -> Witness) {
        self.observe_with(slack, self.tolerance, witness);
    }

    /// As [`observe`](Self::observe) with a sub-check threshold at least as
    /// strict as the report tolerance.
    pub fn observe_with(&mut self, slack: f64, threshold: f64, witness: impl FnOnce() -> Witness) {
        debug_assert!(threshold >= self.tolerance);
        if slack < self.margin || slack.is_nan() {
            self.margin = slack;
        }
        if slack.is_nan() || slack < threshold {
            self.fail(witness());
        }
    }

    pub fn fail(&mut self, witness: Witness) {
        self.verdict = Verdict::Fail;
        self.witnesses.push(witness);
    }

    pub fn indeterminate(&mut self, note: impl Into<String>, witness: Witness) {
        if self.verdict == Verdict::Pass {
            self.verdict = Verdict::Indeterminate;
        }
        self.notes.push(note.into());
        self.witnesses.push(witness);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Folds sub-reports into one: worst verdict, smallest margin, all
    /// witnesses and notes.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.verdict = self.verdict.max(other.verdict);
        if other.margin < self.margin {
            self.margin = other.margin;
        }
        self.witnesses.extend(other.witnesses);
        self.notes.extend(other.notes);
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
