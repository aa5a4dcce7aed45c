//! Per-identity verification records.

use serde::Serialize;

use crate::poly::{Names, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn of(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub id: String,
    pub degree: Option<usize>,
    pub lhs: String,
    pub rhs: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub records: Vec<Record>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn pass(&self) -> bool {
        self.records.iter().all(|r| r.verdict == Verdict::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.verdict == Verdict::Fail)
    }

    pub fn push(&mut self, id: impl Into<String>, degree: Option<usize>, lhs: String, rhs: String, ok: bool) {
        self.records.push(Record {
            id: id.into(),
            degree,
            lhs,
            rhs,
            verdict: Verdict::of(ok),
        });
    }

    /// Record `lhs == rhs` with both sides rendered; returns the verdict.
    pub fn check_eq(&mut self, id: impl Into<String>, degree: Option<usize>, names: &Names, lhs: &Poly, rhs: &Poly) -> bool {
        let ok = lhs == rhs;
        self.push(id, degree, names.render(lhs), names.render(rhs), ok);
        ok
    }

    pub fn flag(&mut self, id: impl Into<String>, ok: bool) -> bool {
        self.push(id, None, ok.to_string(), "true".into(), ok);
        ok
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn prefixed(mut self, prefix: &str) -> Report {
        for r in &mut self.records {
            r.id = format!("{prefix}{}", r.id);
        }
        self
    }
}
