//! Deterministic text reports for law checks.

use std::fmt;
use std::time::Duration;

use crate::exactlin::BudgetExceeded;
use crate::laws::LawFailure;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// A law failed; carries the first witness.
    Fail(String),
    /// An enumeration would exceed the budget.
    Budget(String),
    /// The case could not be set up.
    Error(String),
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail(_) => "FAIL",
            Status::Budget(_) => "BUDGET",
            Status::Error(_) => "ERROR",
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Status::Pass)
    }
}

impl From<LawFailure> for Status {
    fn from(f: LawFailure) -> Status {
        Status::Fail(f.to_string())
    }
}

impl From<BudgetExceeded> for Status {
    fn from(e: BudgetExceeded) -> Status {
        Status::Budget(e.to_string())
    }
}

/// One checked case.
#[derive(Clone, Debug)]
pub struct LawReport {
    pub suite: String,
    pub case: String,
    pub status: Status,
    /// Highest degree the case checked (0 for ungraded checks).
    pub degree: usize,
    /// Extra deterministic detail, such as counts.
    pub note: Option<String>,
    pub elapsed: Duration,
}

impl LawReport {
    /// Formats the line; `timings` adds the elapsed time, which makes the
    /// output nondeterministic.
    pub fn render(&self, timings: bool) -> String {
        let mut s = format!("{:<6} {} :: {} (degree {})", self.status.label(), self.suite, self.case, self.degree);
        if let Some(n) = &self.note {
            s.push_str(&format!(" [{n}]"));
        }
        if timings {
            s.push_str(&format!(" {:.3}s", self.elapsed.as_secs_f64()));
        }
        match &self.status {
            Status::Pass => {}
            Status::Fail(w) | Status::Budget(w) | Status::Error(w) => s.push_str(&format!("\n       witness: {w}")),
        }
        s
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// Totals over a list of reports.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub budget: usize,
    pub errors: usize,
}

impl Summary {
    pub fn of(reports: &[LawReport]) -> Summary {
        let mut s = Summary::default();
        for r in reports {
            match r.status {
                Status::Pass => s.passed += 1,
                Status::Fail(_) => s.failed += 1,
                Status::Budget(_) => s.budget += 1,
                Status::Error(_) => s.errors += 1,
            }
        }
        s
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.budget == 0 && self.errors == 0
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} passed, {} failed, {} over budget, {} errors", self.passed, self.failed, self.budget, self.errors)
    }
}
