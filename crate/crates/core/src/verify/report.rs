//! Check reports.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::bidegree::Bidegree;

/// Bounds of a run: `p <= p_max`, `q <= q_max` for bigraded checks and
/// `m <= m_max` for classical ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CheckBox {
    pub p_max: i64,
    pub q_max: i64,
    pub m_max: i64,
}

impl CheckBox {
    pub const DEFAULT: CheckBox = CheckBox { p_max: 20, q_max: 12, m_max: 24 };

    pub fn new(p_max: i64, q_max: i64, m_max: i64) -> Self {
        CheckBox { p_max, q_max, m_max }
    }

    /// All `(p, q)` with `0 <= p <= p_max`, `0 <= q <= q_max`.
    pub fn bidegrees(&self) -> impl Iterator<Item = Bidegree> + '_ {
        (0..=self.p_max).flat_map(move |p| (0..=self.q_max).map(move |q| Bidegree::new(p, q)))
    }
}

impl Default for CheckBox {
    fn default() -> Self {
        Self::DEFAULT
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Report,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Report => "report",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Finding {
    pub bidegree: [i64; 2],
    pub expected: String,
    pub computed: String,
    /// Sorted in the monomial order, least first.
    pub witness: Vec<String>,
}

impl Finding {
    pub fn degree(&self) -> Bidegree {
        Bidegree::new(self.bidegree[0], self.bidegree[1])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    #[serde(rename = "box")]
    pub bounds: CheckBox,
    pub status: Status,
    pub findings: Vec<Finding>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn is_report_only(&self) -> bool {
        self.status == Status::Report
    }

    /// Whether the report lets a run succeed: passed, or report-only.
    pub fn is_ok(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Accumulates findings for one check.
#[derive(Debug)]
pub struct ReportBuilder {
    check: String,
    bounds: CheckBox,
    report_only: bool,
    findings: Vec<Finding>,
}

impl ReportBuilder {
    pub fn new(check: &str, bounds: CheckBox) -> Self {
        ReportBuilder { check: check.into(), bounds, report_only: false, findings: Vec::new() }
    }

    pub fn report_only(mut self) -> Self {
        self.report_only = true;
        self
    }

    pub fn add(
        &mut self,
        deg: Bidegree,
        expected: impl Into<String>,
        computed: impl Into<String>,
        witness: Vec<String>,
    ) {
        self.findings.push(Finding {
            bidegree: [deg.p, deg.q],
            expected: expected.into(),
            computed: computed.into(),
            witness,
        });
    }

    pub fn is_clean(&self) -> bool {
        self.findings.is_empty()
    }

    pub fn finish(mut self) -> CheckReport {
        self.findings.sort();
        self.findings.dedup();
        let status = if self.report_only {
            Status::Report
        } else if self.findings.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        CheckReport { check: self.check, bounds: self.bounds, status, findings: self.findings }
    }
}
