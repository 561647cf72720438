//! Structured results for axiom suites and invariant checks.
//!
//! Every checkable law gets a stable string identifier (e.g.
//! `"va.partial_derivation"`). A suite run emits one `Pass` entry per law
//! that held on every tuple, and one `Fail` entry per violating tuple,
//! carrying the witness and the nonzero residual. Entries are sorted by
//! identifier and then witness, so reports are byte-identical across runs.

use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Indeterminate,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Indeterminate => "indeterminate",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckEntry {
    /// Stable machine-readable identifier of the law or invariant.
    pub id: String,
    pub status: Status,
    /// Basis tuple (or other site) at which a failure was observed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Residual, computed value, or reason for a skip.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport { entries: Vec::new() }
    }

    pub fn pass(&mut self, id: &str) {
        self.entries.push(CheckEntry {
            id: id.to_string(),
            status: Status::Pass,
            witness: None,
            detail: None,
        });
    }

    pub fn pass_with(&mut self, id: &str, detail: String) {
        self.entries.push(CheckEntry {
            id: id.to_string(),
            status: Status::Pass,
            witness: None,
            detail: Some(detail),
        });
    }

    pub fn fail(&mut self, id: &str, witness: String, detail: String) {
        self.entries.push(CheckEntry {
            id: id.to_string(),
            status: Status::Fail,
            witness: Some(witness),
            detail: Some(detail),
        });
    }

    pub fn skip(&mut self, id: &str, reason: String) {
        self.entries.push(CheckEntry {
            id: id.to_string(),
            status: Status::Skipped,
            witness: None,
            detail: Some(reason),
        });
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }

    /// Sorts entries by (id, witness); call once after assembly.
    pub fn finish(mut self) -> Self {
        self.entries
            .sort_by(|a, b| (&a.id, &a.witness).cmp(&(&b.id, &b.witness)));
        self
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    /// Identifiers of all laws that failed somewhere, deduplicated.
    pub fn failed_ids(&self) -> Vec<String> {
        let mut ids: Vec<String> = self.failures().map(|e| e.id.clone()).collect();
        ids.dedup();
        ids
    }

    pub fn status_of(&self, id: &str) -> Option<Status> {
        // A Fail entry for an id wins over a Pass entry.
        let mut seen = None;
        for e in self.entries.iter().filter(|e| e.id == id) {
            match e.status {
                Status::Fail => return Some(Status::Fail),
                s => seen = Some(s),
            }
        }
        seen
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            write!(f, "{:<40} {}", e.id, e.status)?;
            if let Some(w) = &e.witness {
                write!(f, "  at {w}")?;
            }
            if let Some(d) = &e.detail {
                write!(f, "  [{d}]")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
