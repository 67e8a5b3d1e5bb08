use std::fmt;

use super::{Field, LinError, Scalar, SparseVec};

/// A dense matrix over an exact field, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Builds a matrix from rows of scalars, checking shape and field tags.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix, LinError> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows_with_cols(field, cols, rows)
    }

    /// Like [`Matrix::from_rows`] but keeps the column count for zero rows.
    pub fn from_rows_with_cols(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Matrix, LinError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinError::Shape(format!("ragged row of length {} (expected {cols})", r.len())));
            }
            for s in r {
                if s.field() != field {
                    return Err(LinError::FieldMismatch(field, s.field()));
                }
                data.push(s);
            }
        }
        Ok(Matrix { field, rows: n, cols, data })
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Matrix::zero(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged integer rows");
            for (j, &x) in r.iter().enumerate() {
                m.data[i * cols + j] = field.int(x);
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given sparse vectors.
    pub fn from_sparse_cols(field: Field, rows: usize, cols: &[SparseVec]) -> Matrix {
        let mut m = Matrix::zero(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, s) in c.iter() {
                m.set(*i, j, s.clone());
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, s: Scalar) {
        assert_eq!(s.field(), self.field, "field mismatch in Matrix::set");
        self.data[i * self.cols + j] = s;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Scalar> {
        self.row(i).to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn col_sparse(&self, j: usize) -> SparseVec {
        SparseVec::from_dense(&self.col(j))
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    fn same_field(&self, other: &Matrix) -> Result<(), LinError> {
        if self.field != other.field {
            return Err(LinError::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinError> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(LinError::Shape(format!("cannot multiply {}x{} by {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinError> {
        self.same_field(other)?;
        if self.shape() != other.shape() {
            return Err(LinError::Shape("cannot add matrices of different shapes".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Matrix { field: self.field, rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LinError> {
        self.add(&other.scale(&self.field.int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinError> {
        if v.len() != self.cols {
            return Err(LinError::Shape(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        let mut out = vec![self.field.zero(); self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            for (a, b) in self.row(i).iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    o.add_mul(a, b);
                }
            }
        }
        Ok(out)
    }

    /// Applies the matrix to a sparse column vector.
    pub fn apply_sparse(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, c) in v.iter() {
            for i in 0..self.rows {
                let a = self.get(i, *j);
                if !a.is_zero() {
                    out.add_term(i, &(a * c));
                }
            }
        }
        out
    }

    /// Kronecker product with the lexicographic index `(i,j) ↦ i·dim(b)+j`.
    pub fn kron(&self, other: &Matrix) -> Result<Matrix, LinError> {
        self.same_field(other)?;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zero(self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * other.rows + k) * c + j * other.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Stacks rows of `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinError> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(LinError::Shape("vstack of different widths".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Reduced row-echelon form with zero rows dropped, plus the pivot columns.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let x = m.get(r, j) * &inv;
                m.data[r * m.cols + j] = x;
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                let nf = -f;
                for j in c..m.cols {
                    let (src, dst) = (r * m.cols + j, i * m.cols + j);
                    if m.data[src].is_zero() {
                        continue;
                    }
                    let s = m.data[src].clone();
                    m.data[dst].add_mul(&nf, &s);
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.data.truncate(r * m.cols);
        m.rows = r;
        (m, pivots)
    }

    /// The unique reduced row-echelon form; zero rows are dropped.
    pub fn rref(&self) -> Matrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zero(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i * 2 * n + j] = self.get(i, j).clone();
            }
            aug.data[i * 2 * n + n + i] = self.field.one();
        }
        let (r, piv) = aug.rref_with_pivots();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zero(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.data[i * n + j] = r.get(i, n + j).clone();
            }
        }
        Some(inv)
    }

    /// Restricts to the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zero(self.field, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.data[a * cols.len() + b] = self.get(i, j).clone();
            }
        }
        m
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|s| s.to_string()).collect();
        let w = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>w$}", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
