//! Verification suites producing auditable pass/fail/skipped reports.

mod analysis;
mod catalog;
mod instances;
pub mod oracle;

use std::time::Instant;

use serde::Serialize;

use crate::group::FiniteGroup;
use crate::lattice::Subgroup;

pub use analysis::{Analysis, CATALOG_LATTICE_CAP};
pub use catalog::{run_catalog_suite, run_suite, verify_bounds};
pub use instances::{
    verify_example, verify_prop1_instance, verify_theorem1_instance, verify_theorem3_instance,
    verify_theorem4,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Evidence attached to a report.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Witness {
    Subgroup {
        order: usize,
        generators: Vec<String>,
        members: Vec<usize>,
    },
    Number {
        name: String,
        value: u64,
    },
    Real {
        name: String,
        value: f64,
    },
    Note {
        text: String,
    },
}

impl Witness {
    pub fn subgroup(g: &FiniteGroup, h: &Subgroup) -> Witness {
        Witness::Subgroup {
            order: h.order(),
            generators: h.generators().iter().map(|&x| g.label(x).to_string()).collect(),
            members: h.members().to_vec(),
        }
    }

    pub fn number(name: &str, value: impl TryInto<u64>) -> Witness {
        Witness::Number {
            name: name.to_string(),
            value: value.try_into().unwrap_or(u64::MAX),
        }
    }

    pub fn real(name: &str, value: f64) -> Witness {
        Witness::Real {
            name: name.to_string(),
            value,
        }
    }

    pub fn note(text: impl Into<String>) -> Witness {
        Witness::Note { text: text.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    /// Wall-clock time spent on the claim; `None` once stripped for
    /// reproducible output.
    pub elapsed_ms: Option<f64>,
}

impl VerificationReport {
    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Result of evaluating one claim.
#[derive(Clone, Debug)]
pub(crate) enum Outcome {
    Pass(Vec<Witness>),
    Fail(Vec<Witness>),
    Skipped(String),
}

impl Outcome {
    pub(crate) fn check(holds: bool, witnesses: Vec<Witness>) -> Outcome {
        if holds {
            Outcome::Pass(witnesses)
        } else {
            Outcome::Fail(witnesses)
        }
    }
}

/// Collects timed reports under a claim-id prefix.
pub(crate) struct Recorder {
    prefix: String,
    reports: Vec<VerificationReport>,
}

impl Recorder {
    pub(crate) fn new(prefix: impl Into<String>) -> Recorder {
        Recorder {
            prefix: prefix.into(),
            reports: Vec::new(),
        }
    }

    pub(crate) fn claim(&mut self, id: &str, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed().as_secs_f64() * 1000.0;
        self.push(id, outcome, Some(elapsed));
    }

    pub(crate) fn push(&mut self, id: &str, outcome: Outcome, elapsed_ms: Option<f64>) {
        let (status, mut witnesses) = match outcome {
            Outcome::Pass(w) => (Status::Pass, w),
            Outcome::Fail(w) => (Status::Fail, w),
            Outcome::Skipped(why) => (Status::Skipped, vec![Witness::note(why)]),
        };
        if status == Status::Fail && witnesses.is_empty() {
            witnesses.push(Witness::note("claim evaluated to false"));
        }
        let claim = if self.prefix.is_empty() {
            id.to_string()
        } else {
            format!("{}.{id}", self.prefix)
        };
        self.reports.push(VerificationReport {
            claim,
            status,
            witnesses,
            elapsed_ms: elapsed_ms.map(|ms| (ms * 1000.0).round() / 1000.0),
        });
    }

    pub(crate) fn extend(&mut self, reports: Vec<VerificationReport>) {
        self.reports.extend(reports);
    }

    pub(crate) fn finish(self) -> Vec<VerificationReport> {
        self.reports
    }
}

/// Counts per status.
pub fn summarize(reports: &[VerificationReport]) -> (usize, usize, usize) {
    reports.iter().fold((0, 0, 0), |(p, f, s), r| match r.status {
        Status::Pass => (p + 1, f, s),
        Status::Fail => (p, f + 1, s),
        Status::Skipped => (p, f, s + 1),
    })
}

/// Drops timing so that the serialized reports are byte-identical between
/// runs.
pub fn strip_timing(reports: &mut [VerificationReport]) {
    for r in reports {
        r.elapsed_ms = None;
    }
}
