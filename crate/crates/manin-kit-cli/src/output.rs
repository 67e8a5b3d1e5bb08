use std::fmt::Write;

use manin_kit::exactlin::BudgetExceeded;
use manin_kit::fixture::FixtureError;
use manin_kit::quadalg::AlgError;
use manin_kit::report::{LawReport, Status, Summary};

/// Failures that stop a command before any check runs.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl From<FixtureError> for CliError {
    fn from(e: FixtureError) -> CliError {
        CliError::Input(e.to_string())
    }
}

impl From<BudgetExceeded> for CliError {
    fn from(e: BudgetExceeded) -> CliError {
        CliError::Budget(e.to_string())
    }
}

impl From<AlgError> for CliError {
    fn from(e: AlgError) -> CliError {
        match e {
            AlgError::Budget(b) => b.into(),
            e => CliError::Input(e.to_string()),
        }
    }
}

/// Text written to stdout plus the reports that decide the exit code.
#[derive(Default)]
pub struct Output {
    pub text: String,
    reports: Vec<LawReport>,
    timings: bool,
}

impl Output {
    pub fn new(timings: bool) -> Output {
        Output { timings, ..Output::default() }
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    pub fn report(&mut self, r: LawReport) {
        let line = r.render(self.timings);
        self.line(line);
        self.reports.push(r);
    }

    pub fn summary(&mut self) {
        let s = Summary::of(&self.reports);
        let _ = writeln!(self.text, "{s}");
    }

    /// 1 for a law failure, then 3 for budget, then 2 for a broken case.
    pub fn exit_code(&self) -> u8 {
        let worst = |f: fn(&Status) -> bool| self.reports.iter().any(|r| f(&r.status));
        if worst(|s| matches!(s, Status::Fail(_))) {
            1
        } else if worst(|s| matches!(s, Status::Budget(_))) {
            3
        } else if worst(|s| matches!(s, Status::Error(_))) {
            2
        } else {
            0
        }
    }
}
