use super::{Field, Matrix, Scalar};

/// Default cap on the number of candidates a brute-force search may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A brute-force enumeration larger than the allowed budget.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("enumeration needs {needed} candidates but the budget is {budget}")]
pub struct BudgetExceeded {
    pub needed: u128,
    pub budget: u64,
}

/// `base^exp`, saturating at `u128::MAX`.
pub fn saturating_pow(base: u128, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base))
}

/// Fails when `needed` exceeds `budget`.
pub fn check_budget(needed: u128, budget: u64) -> Result<(), BudgetExceeded> {
    if needed > budget as u128 {
        Err(BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

/// Iterates over every `rows × cols` matrix over a finite field, in
/// lexicographic order of the row-major entry list.
pub struct MatrixIter {
    field: Field,
    rows: usize,
    cols: usize,
    elems: Vec<Scalar>,
    digits: Option<Vec<usize>>,
}

impl Iterator for MatrixIter {
    type Item = Matrix;

    fn next(&mut self) -> Option<Matrix> {
        let digits = self.digits.as_mut()?;
        let rows: Vec<Vec<Scalar>> = (0..self.rows).map(|i| (0..self.cols).map(|j| self.elems[digits[i * self.cols + j]].clone()).collect()).collect();
        let out = Matrix::from_rows_with_cols(self.field, self.cols, rows).expect("entries share the field");
        let q = self.elems.len();
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                self.digits = None;
                break;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < q {
                break;
            }
            digits[pos] = 0;
        }
        Some(out)
    }
}

/// All matrices of the given shape over a finite field, or an error when
/// there are more than `budget` of them. Over `Q` the count is infinite.
pub fn all_matrices(field: Field, rows: usize, cols: usize, budget: u64) -> Result<MatrixIter, BudgetExceeded> {
    let elems = field.elements().ok_or(BudgetExceeded { needed: u128::MAX, budget })?;
    check_budget(saturating_pow(elems.len() as u128, rows * cols), budget)?;
    Ok(MatrixIter { field, rows, cols, elems, digits: Some(vec![0; rows * cols]) })
}
