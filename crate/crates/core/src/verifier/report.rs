use serde::{Deserialize, Serialize};

use super::{Convention, Mode};
use crate::combinatorics::{DimVector, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Data locating one failed case. Absent fields are omitted from the JSON.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dimvec: Option<DimVector>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub shape: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub left: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub right: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl Witness {
    pub fn at(lambda: &Partition, dimvec: &DimVector) -> Self {
        Witness {
            lambda: Some(lambda.clone()),
            dimvec: Some(dimvec.clone()),
            ..Default::default()
        }
    }

    pub fn sides(mut self, left: impl ToString, right: impl ToString) -> Self {
        self.left = Some(left.to_string());
        self.right = Some(right.to_string());
        self
    }

    pub fn detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn with_shape(mut self, shape: &Partition) -> Self {
        self.shape = Some(shape.clone());
        self
    }

    pub fn with_q(mut self, q: u64) -> Self {
        self.q = Some(q);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub cases: usize,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl CheckResult {
    /// Pass iff there are no witnesses. Witnesses are put in canonical order.
    pub fn from_witnesses(name: &str, cases: usize, mut witnesses: Vec<Witness>) -> Self {
        witnesses.sort();
        let status = if witnesses.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        CheckResult {
            name: name.to_string(),
            status,
            cases,
            witnesses,
            note: None,
        }
    }

    pub fn skipped(name: &str, note: impl Into<String>) -> Self {
        CheckResult {
            name: name.to_string(),
            status: Status::Skipped,
            cases: 0,
            witnesses: Vec::new(),
            note: Some(note.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn has_witness(&self, lambda: &Partition, dimvec: &DimVector) -> bool {
        self.witnesses
            .iter()
            .any(|w| w.lambda.as_ref() == Some(lambda) && w.dimvec.as_ref() == Some(dimvec))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportParams {
    pub n: usize,
    pub d: usize,
    pub mode: Mode,
    pub primes: Vec<u64>,
    pub convention: Convention,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub params: ReportParams,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new(params: ReportParams, mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        VerificationReport { params, checks }
    }

    /// No check failed (skipped checks do not count against the report).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let report = VerificationReport::new(
            ReportParams {
                n: 2,
                d: 3,
                mode: Mode::Polynomial,
                primes: vec![2, 3, 5],
                convention: Convention::Standard,
            },
            vec![
                CheckResult::from_witnesses("trace_identity", 12, vec![]),
                CheckResult::skipped("a_skipped", "why"),
            ],
        );
        assert_eq!(
            report.to_json(),
            concat!(
                r#"{"params":{"n":2,"d":3,"mode":"polynomial","primes":[2,3,5],"convention":"standard"},"#,
                r#""checks":[{"name":"a_skipped","status":"skipped","cases":0,"witnesses":[],"note":"why"},"#,
                r#"{"name":"trace_identity","status":"pass","cases":12,"witnesses":[]}]}"#
            )
        );
        assert!(report.passed());
        let back: VerificationReport = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn failing_witness() {
        let lam: Partition = "2".parse().unwrap();
        let dv: DimVector = "2,0".parse().unwrap();
        let c =
            CheckResult::from_witnesses("x", 1, vec![Witness::at(&lam, &dv).sides("0", "q^-1")]);
        assert_eq!(c.status, Status::Fail);
        assert!(c.has_witness(&lam, &dv));
        assert_eq!(
            serde_json::to_string(&c.witnesses[0]).unwrap(),
            r#"{"lambda":[2],"dimvec":[2,0],"left":"0","right":"q^-1"}"#
        );
    }
}
