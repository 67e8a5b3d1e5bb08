use std::fmt;

use super::{Field, LinError, Matrix, Scalar};

/// A subspace of `K^n` stored by its canonical RREF basis.
///
/// Two subspaces are equal exactly when their basis matrices are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The span of the rows of `m`.
    pub fn row_space(m: &Matrix) -> Subspace {
        let (basis, pivots) = m.rref_with_pivots();
        Subspace { ambient: m.cols(), basis, pivots }
    }

    /// The span of the given vectors in `K^ambient`.
    pub fn span(field: Field, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Result<Subspace, LinError> {
        let m = Matrix::from_rows_with_cols(field, ambient, vectors)?;
        Ok(Subspace::row_space(&m))
    }

    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace::row_space(&Matrix::zero(field, 0, ambient))
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace::row_space(&Matrix::identity(field, ambient))
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// The RREF basis, one basis vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn compatible(&self, other: &Subspace) -> Result<(), LinError> {
        if self.field() != other.field() {
            return Err(LinError::FieldMismatch(self.field(), other.field()));
        }
        if self.ambient != other.ambient {
            return Err(LinError::Shape(format!("ambient dims {} and {}", self.ambient, other.ambient)));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinError> {
        self.compatible(other)?;
        Ok(Subspace::row_space(&self.basis.vstack(&other.basis)?))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinError> {
        self.compatible(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// Functionals (in dual-basis coordinates) vanishing on the subspace.
    pub fn annihilator(&self) -> Subspace {
        kernel(&self.basis)
    }

    /// Reduces `v` modulo the subspace; the result vanishes at every pivot.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            let nc = -c;
            for (o, b) in out.iter_mut().zip(self.basis.row(r)) {
                if !b.is_zero() {
                    o.add_mul(&nc, b);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, LinError> {
        if v.len() != self.ambient {
            return Err(LinError::Shape(format!("vector of length {} in ambient {}", v.len(), self.ambient)));
        }
        if let Some(s) = v.iter().find(|s| s.field() != self.field()) {
            return Err(LinError::FieldMismatch(self.field(), s.field()));
        }
        Ok(self.reduce(v).iter().all(Scalar::is_zero))
    }

    /// Whether `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinError> {
        self.compatible(other)?;
        for r in self.basis.row_iter() {
            if !other.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The first basis vector of `self` outside `other`, if any.
    pub fn first_outside(&self, other: &Subspace) -> Result<Option<Vec<Scalar>>, LinError> {
        self.compatible(other)?;
        for r in self.basis.row_iter() {
            if !other.contains(r)? {
                return Ok(Some(r.to_vec()));
            }
        }
        Ok(None)
    }

    /// The image of the subspace under a linear map.
    pub fn image(&self, m: &Matrix) -> Result<Subspace, LinError> {
        if m.cols() != self.ambient {
            return Err(LinError::Shape("map does not start at the ambient space".into()));
        }
        // rows of (m · basisᵀ)ᵀ = basis · mᵀ
        let img = self.basis.mul(&m.transpose())?;
        Ok(Subspace::row_space(&img))
    }

    /// The image under the coordinate permutation `e_s ↦ e_{map[s]}`.
    pub fn permuted(&self, map: &[usize]) -> Result<Subspace, LinError> {
        if map.len() != self.ambient {
            return Err(LinError::Shape("permutation does not match the ambient space".into()));
        }
        let zero = self.field().zero();
        let rows = self
            .basis
            .row_iter()
            .map(|r| {
                let mut v = vec![zero.clone(); self.ambient];
                for (s, &t) in map.iter().enumerate() {
                    v[t] = r[s].clone();
                }
                v
            })
            .collect();
        Subspace::span(self.field(), self.ambient, rows)
    }

    /// `self ⊗ other` inside `K^a ⊗ K^b`.
    pub fn tensor(&self, other: &Subspace) -> Result<Subspace, LinError> {
        Ok(Subspace::row_space(&self.basis.kron(&other.basis)?))
    }

    /// Non-pivot coordinates in increasing order: a basis of a complement.
    pub fn complement_coords(&self) -> Vec<usize> {
        let mut is_piv = vec![false; self.ambient];
        for &p in &self.pivots {
            is_piv[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_piv[i]).collect()
    }
}

/// `{v : m·v = 0}` as a canonical subspace.
pub fn kernel(m: &Matrix) -> Subspace {
    let (r, pivots) = m.rref_with_pivots();
    let field = m.field();
    let n = m.cols();
    let mut is_piv = vec![None; n];
    for (row, &p) in pivots.iter().enumerate() {
        is_piv[p] = Some(row);
    }
    let mut vecs = Vec::new();
    for f in (0..n).filter(|&c| is_piv[c].is_none()) {
        let mut v = vec![field.zero(); n];
        v[f] = field.one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(row, f);
        }
        vecs.push(v);
    }
    Subspace::span(field, n, vecs).expect("kernel vectors have the ambient length")
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "subspace of dim {} in K^{}", self.dim(), self.ambient)?;
        write!(f, "{}", self.basis)
    }
}
