//! Suite reports: deterministic JSON and a plain text rendering.

use std::fmt::Write as _;
use std::time::Duration;

use mzv_core::genfun::GenFunReport;
use mzv_core::Verdict;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseVerdict {
    ExactEqual,
    Certified,
    NotCertified,
    NumericPass,
    NumericFail,
}

impl CaseVerdict {
    pub fn is_ok(self) -> bool {
        !matches!(self, CaseVerdict::NotCertified | CaseVerdict::NumericFail)
    }

    pub fn name(self) -> &'static str {
        match self {
            CaseVerdict::ExactEqual => "exact-equal",
            CaseVerdict::Certified => "certified",
            CaseVerdict::NotCertified => "not-certified",
            CaseVerdict::NumericPass => "numeric-pass",
            CaseVerdict::NumericFail => "numeric-fail",
        }
    }

    pub fn numeric(pass: bool) -> Self {
        if pass {
            CaseVerdict::NumericPass
        } else {
            CaseVerdict::NumericFail
        }
    }

    pub fn exact(holds: bool) -> Self {
        if holds {
            CaseVerdict::ExactEqual
        } else {
            CaseVerdict::NotCertified
        }
    }
}

impl From<Verdict> for CaseVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::ExactEqual => CaseVerdict::ExactEqual,
            Verdict::Certified => CaseVerdict::Certified,
            Verdict::NotCertified => CaseVerdict::NotCertified,
        }
    }
}

/// One checked statement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Case {
    pub id: String,
    pub statement: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flavor: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
    /// Subspaces summed for the congruence; `"0"` for exact identities.
    pub modulus: String,
    pub verdict: CaseVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Case {
    pub fn new(id: impl Into<String>, statement: impl Into<String>, modulus: impl ToString, verdict: CaseVerdict) -> Self {
        Case {
            id: id.into(),
            statement: statement.into(),
            flavor: None,
            weight: None,
            depth: None,
            modulus: modulus.to_string(),
            verdict,
            note: None,
        }
    }

    pub fn flavor(mut self, f: impl ToString) -> Self {
        self.flavor = Some(f.to_string());
        self
    }

    pub fn weight(mut self, l: usize) -> Self {
        self.weight = Some(l);
        self
    }

    pub fn depth(mut self, n: usize) -> Self {
        self.depth = Some(n);
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Parameters {
    #[serde(rename = "maxWeight", skip_serializing_if = "Option::is_none")]
    pub max_weight: Option<usize>,
    #[serde(rename = "nMax", skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub flavors: Vec<String>,
    #[serde(rename = "numericN", skip_serializing_if = "Option::is_none")]
    pub numeric_n: Option<u64>,
    #[serde(rename = "numericTol", skip_serializing_if = "Option::is_none")]
    pub numeric_tol: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    #[serde(rename = "exact-equal")]
    pub exact_equal: usize,
    pub certified: usize,
    #[serde(rename = "not-certified")]
    pub not_certified: usize,
    #[serde(rename = "numeric-pass")]
    pub numeric_pass: usize,
    #[serde(rename = "numeric-fail")]
    pub numeric_fail: usize,
}

/// Results of one suite. Timings are kept out of the JSON so that identical
/// runs produce identical bytes.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub parameters: Parameters,
    pub summary: Summary,
    pub cases: Vec<Case>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, parameters: Parameters) -> Self {
        SuiteReport {
            suite: suite.into(),
            parameters,
            summary: Summary::default(),
            cases: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn push(&mut self, case: Case) {
        let s = &mut self.summary;
        s.total += 1;
        match case.verdict {
            CaseVerdict::ExactEqual => s.exact_equal += 1,
            CaseVerdict::Certified => s.certified += 1,
            CaseVerdict::NotCertified => s.not_certified += 1,
            CaseVerdict::NumericPass => s.numeric_pass += 1,
            CaseVerdict::NumericFail => s.numeric_fail += 1,
        }
        self.cases.push(case);
    }

    pub fn ok(&self) -> bool {
        self.summary.not_certified == 0 && self.summary.numeric_fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.verdict.is_ok())
    }

    pub fn find(&self, id: &str) -> Option<&Case> {
        self.cases.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_text(&self, verbose: bool) -> String {
        let mut out = String::new();
        let s = &self.summary;
        let _ = writeln!(
            out,
            "suite {}: {} cases, {} exact-equal, {} certified, {} not-certified, {} numeric-pass, {} numeric-fail ({:.2?})",
            self.suite, s.total, s.exact_equal, s.certified, s.not_certified, s.numeric_pass, s.numeric_fail, self.elapsed
        );
        for c in &self.cases {
            if !verbose && c.verdict.is_ok() {
                continue;
            }
            let _ = write!(out, "  [{}] {}: {}  mod {}", c.verdict.name(), c.id, c.statement, c.modulus);
            if let Some(n) = &c.note {
                let _ = write!(out, "  ({n})");
            }
            out.push('\n');
        }
        out
    }
}

/// JSON array of several reports.
pub fn reports_json(reports: &[SuiteReport]) -> String {
    serde_json::to_string_pretty(reports).expect("serializable") + "\n"
}

/// `{check, l, n, j?, verdict, failures}` for a generating-function check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenFunSummary {
    pub check: String,
    pub l: usize,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    pub verdict: CaseVerdict,
    pub failures: Vec<Vec<u32>>,
}

impl GenFunSummary {
    pub fn from_report(r: &GenFunReport) -> Self {
        let verdict = if !r.all_ok() {
            CaseVerdict::NotCertified
        } else if r.cases.iter().all(|c| c.verdict == Verdict::ExactEqual) {
            CaseVerdict::ExactEqual
        } else {
            CaseVerdict::Certified
        };
        GenFunSummary { check: r.check.to_string(), l: r.l, n: r.n, j: r.j, verdict, failures: r.failures() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}
