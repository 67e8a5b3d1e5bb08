//! Named law failures shared by the law suites.

use std::fmt;

use crate::exactlin::Matrix;
use crate::quadalg::{GradedMap, Witness};

/// A named law that failed, with the first witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawFailure {
    pub law: String,
    pub witness: Witness,
}

impl fmt::Display for LawFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {}", self.law, self.witness)
    }
}

impl std::error::Error for LawFailure {}

pub type LawResult = Result<(), LawFailure>;

impl LawFailure {
    pub fn new(law: impl Into<String>, degree: usize, basis: usize, detail: impl Into<String>) -> LawFailure {
        LawFailure { law: law.into(), witness: Witness { degree, basis, detail: detail.into() } }
    }
}

/// Compares two graded maps up to degree `upto`.
pub fn law(name: &str, lhs: &GradedMap, rhs: &GradedMap, upto: usize) -> LawResult {
    lhs.agree(rhs, upto).map_err(|witness| LawFailure { law: name.to_string(), witness })
}

/// Compares two matrices entrywise; the witness names the first differing
/// column (a basis vector of the source).
pub fn matrix_law(name: &str, lhs: &Matrix, rhs: &Matrix) -> LawResult {
    if lhs.shape() != rhs.shape() {
        return Err(LawFailure::new(name, 0, 0, format!("shapes differ: {}x{} vs {}x{}", lhs.rows(), lhs.cols(), rhs.rows(), rhs.cols())));
    }
    for j in 0..lhs.cols() {
        for i in 0..lhs.rows() {
            if lhs.get(i, j) != rhs.get(i, j) {
                return Err(LawFailure::new(name, 0, j, format!("entry ({i},{j}) is {} on the left and {} on the right", lhs.get(i, j), rhs.get(i, j))));
            }
        }
    }
    Ok(())
}
