//! Exact linear algebra over `Q` and `F_p`.
//!
//! Tensor products of coordinate spaces use the lexicographic index
//! `(i, j) ↦ i·dim(b) + j` everywhere; permutations of tensor factors are
//! materialized as permutation matrices under this convention.
//!
//! ```
//! use manin_kit::exactlin::{Field, Matrix};
//!
//! let f5 = Field::prime(5).unwrap();
//! let m = Matrix::from_ints(f5, &[&[1, 2], &[3, 4]]);
//! let inv = m.inverse().unwrap();
//! assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(f5, 2));
//! assert_eq!(inv, Matrix::from_ints(f5, &[&[3, 1], &[4, 2]]));
//! ```

mod enumerate;
mod matrix;
mod scalar;
mod sparse;
mod subspace;

pub use enumerate::{all_matrices, check_budget, saturating_pow, BudgetExceeded, MatrixIter, DEFAULT_BUDGET};
pub use matrix::Matrix;
pub use scalar::{parse_scalar, Field, Scalar};
pub use sparse::SparseVec;
pub use subspace::{kernel, Subspace};

/// Errors from the linear-algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime below 2^16")]
    NotPrime(u16),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
}

/// Splits a mixed-radix index into digits (most significant first).
pub fn split_index(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (o, &d) in out.iter_mut().zip(dims).rev() {
        *o = idx % d;
        idx /= d;
    }
    out
}

/// Inverse of [`split_index`].
pub fn join_index(digits: &[usize], dims: &[usize]) -> usize {
    digits.iter().zip(dims).fold(0, |acc, (&x, &d)| acc * d + x)
}

/// Index map for permuting tensor factors.
///
/// Factor `t` of the target is factor `perm[t]` of the source, so
/// `σ^{(23)}` on four factors is `perm = [0, 2, 1, 3]`. Entry `s` of the
/// result is the target index of source index `s`.
pub fn factor_permutation(dims: &[usize], perm: &[usize]) -> Vec<usize> {
    let total: usize = dims.iter().product();
    let tdims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    (0..total)
        .map(|s| {
            let d = split_index(s, dims);
            let td: Vec<usize> = perm.iter().map(|&p| d[p]).collect();
            join_index(&td, &tdims)
        })
        .collect()
}

/// The permutation matrix sending `e_s` to `e_{map[s]}`.
pub fn permutation_matrix(field: Field, map: &[usize]) -> Matrix {
    let n = map.len();
    let mut m = Matrix::zero(field, n, n);
    for (s, &t) in map.iter().enumerate() {
        m.set(t, s, field.one());
    }
    m
}

/// `σ^{(23)}: A⊗B⊗C⊗D → A⊗C⊗B⊗D` as a matrix.
pub fn sigma23(field: Field, a: usize, b: usize, c: usize, d: usize) -> Matrix {
    permutation_matrix(field, &factor_permutation(&[a, b, c, d], &[0, 2, 1, 3]))
}
