//! Verdict trees produced by every checker.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::mat::Mat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<CheckReport>,
}

impl CheckReport {
    pub fn leaf(id: impl Into<String>, verdict: Verdict) -> Self {
        CheckReport { id: id.into(), verdict, witness: None, timing_ms: None, children: Vec::new() }
    }

    pub fn pass(id: impl Into<String>) -> Self {
        Self::leaf(id, Verdict::Pass)
    }

    pub fn fail(id: impl Into<String>, witness: Value) -> Self {
        Self::leaf(id, Verdict::Fail).with_witness(witness)
    }

    pub fn inapplicable(id: impl Into<String>, reason: impl Into<String>) -> Self {
        Self::leaf(id, Verdict::Inapplicable).with_witness(Value::String(reason.into()))
    }

    /// Pass when `ok`, otherwise fail with the lazily built witness.
    pub fn check(id: impl Into<String>, ok: bool, witness: impl FnOnce() -> Value) -> Self {
        if ok {
            Self::pass(id)
        } else {
            Self::fail(id, witness())
        }
    }

    pub fn with_witness(mut self, w: Value) -> Self {
        self.witness = Some(w);
        self
    }

    /// Group node whose verdict summarizes its children: any failure fails,
    /// otherwise any pass passes, otherwise inapplicable.
    pub fn group(id: impl Into<String>, children: Vec<CheckReport>) -> Self {
        let verdict = summarize(children.iter().map(|c| c.verdict));
        CheckReport { id: id.into(), verdict, witness: None, timing_ms: None, children }
    }

    pub fn push(&mut self, child: CheckReport) {
        self.children.push(child);
        self.verdict = summarize(self.children.iter().map(|c| c.verdict));
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    /// Depth-first search by id.
    pub fn find(&self, id: &str) -> Option<&CheckReport> {
        if self.id == id {
            return Some(self);
        }
        self.children.iter().find_map(|c| c.find(id))
    }

    pub fn leaves(&self) -> Vec<&CheckReport> {
        if self.children.is_empty() {
            return vec![self];
        }
        self.children.iter().flat_map(|c| c.leaves()).collect()
    }

    pub fn count(&self, v: Verdict) -> usize {
        self.leaves().iter().filter(|l| l.verdict == v).count()
    }

    pub fn strip_timings(&mut self) {
        self.timing_ms = None;
        for c in &mut self.children {
            c.strip_timings();
        }
    }
}

fn summarize(vs: impl Iterator<Item = Verdict>) -> Verdict {
    let mut any_pass = false;
    for v in vs {
        match v {
            Verdict::Fail => return Verdict::Fail,
            Verdict::Pass => any_pass = true,
            Verdict::Inapplicable => {}
        }
    }
    if any_pass {
        Verdict::Pass
    } else {
        Verdict::Inapplicable
    }
}

/// JSON witness for a matrix: shape plus sparse entries.
pub fn mat_witness(m: &Mat) -> Value {
    serde_json::json!({
        "rows": m.nrows(),
        "cols": m.ncols(),
        "entries": m.to_triples(),
    })
}

/// JSON witness for the difference of two maps that should agree.
pub fn diff_witness(lhs: &Mat, rhs: &Mat) -> Value {
    if lhs.shape() != rhs.shape() {
        return serde_json::json!({ "shape_mismatch": [lhs.shape(), rhs.shape()] });
    }
    serde_json::json!({ "difference": mat_witness(&lhs.sub(rhs)) })
}
