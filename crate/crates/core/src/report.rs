//! Named checks with exact verdicts.

use serde::{Deserialize, Serialize};

use num_traits::Zero;

use crate::scalar::{format_rational, max_abs, Rational};
use crate::tensor::Tensor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    /// Reported fact that is neither a pass nor a failure (truth tables,
    /// discrepancies with a claimed value).
    Info,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
            Status::Info => "INFO",
        }
    }
}

/// Size of a residual: how many entries are nonzero and the largest magnitude.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualSummary {
    pub nonzero: usize,
    pub max_abs: String,
}

impl ResidualSummary {
    pub fn of<'a>(values: impl IntoIterator<Item = &'a Rational> + Clone) -> Self {
        Self {
            nonzero: values.clone().into_iter().filter(|v| !v.is_zero()).count(),
            max_abs: format_rational(&max_abs(values)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.nonzero == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub check_id: String,
    /// Equation tag, e.g. `"b2"` or `"cc2"`.
    pub equation: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual_summary: Option<ResidualSummary>,
    pub details: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a residual; passes iff every entry is zero.
    pub fn residual<'a>(
        &mut self,
        id: impl Into<String>,
        equation: &str,
        values: impl IntoIterator<Item = &'a Rational> + Clone,
        details: impl Into<String>,
    ) -> bool {
        let summary = ResidualSummary::of(values);
        let ok = summary.is_zero();
        self.checks.push(Check {
            check_id: id.into(),
            equation: equation.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            residual_summary: Some(summary),
            details: details.into(),
        });
        ok
    }

    pub fn tensor(&mut self, id: impl Into<String>, equation: &str, t: &Tensor, details: impl Into<String>) -> bool {
        self.residual(id, equation, t.components(), details)
    }

    pub fn verdict(&mut self, id: impl Into<String>, equation: &str, ok: bool, details: impl Into<String>) -> bool {
        self.status(id, equation, if ok { Status::Pass } else { Status::Fail }, details);
        ok
    }

    pub fn status(&mut self, id: impl Into<String>, equation: &str, status: Status, details: impl Into<String>) {
        self.checks.push(Check {
            check_id: id.into(),
            equation: equation.to_string(),
            status,
            residual_summary: None,
            details: details.into(),
        });
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.check_id == id)
    }

    /// Pass iff no check failed; skipped and informational checks are ignored.
    pub fn overall(&self) -> Status {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else {
            Status::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.overall() == Status::Pass
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn residual_summary() {
        let s = ResidualSummary::of(&[int(0), frac(-3, 2), int(1)]);
        assert_eq!(s.nonzero, 2);
        assert_eq!(s.max_abs, "3/2");
        assert!(ResidualSummary::of(&[int(0)]).is_zero());
    }

    #[test]
    fn overall_ignores_skipped_and_info() {
        let mut r = CheckReport::new();
        r.residual("a", "a1", &[int(0)], "");
        r.status("b", "b1", Status::Skipped, "");
        r.status("c", "c1", Status::Info, "");
        assert!(r.passed());
        r.residual("d", "d1", &[int(1)], "");
        assert_eq!(r.overall(), Status::Fail);
        assert_eq!(r.get("d").unwrap().status, Status::Fail);
    }
}
