use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::exactlin::{factor_permutation, Field, Scalar, Subspace};

use super::{AlgError, GradedAlgebra, Presented};

/// A quadratic algebra `T(V)/(R)` with `R ⊆ V⊗V`.
///
/// Generators are ordered; `V⊗V` uses the index `i·n + j` for `x_i ⊗ x_j`.
#[derive(Clone)]
pub struct QuadraticAlgebra {
    field: Field,
    labels: Vec<String>,
    relations: Subspace,
    cache: Arc<Mutex<BTreeMap<usize, Arc<Presented>>>>,
}

impl PartialEq for QuadraticAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.labels.len() == other.labels.len() && self.relations == other.relations
    }
}

impl Eq for QuadraticAlgebra {}

impl fmt::Debug for QuadraticAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuadraticAlgebra").field("field", &self.field).field("labels", &self.labels).field("relations", &self.relations.dim()).finish()
    }
}

impl QuadraticAlgebra {
    pub fn new(field: Field, labels: Vec<String>, relations: Subspace) -> Result<QuadraticAlgebra, AlgError> {
        let n = labels.len();
        if relations.ambient_dim() != n * n {
            return Err(AlgError::Invalid(format!("relation space lives in dimension {}, expected {}", relations.ambient_dim(), n * n)));
        }
        if relations.field() != field {
            return Err(AlgError::Lin(crate::exactlin::LinError::FieldMismatch(field, relations.field())));
        }
        Ok(QuadraticAlgebra { field, labels, relations, cache: Arc::default() })
    }

    /// Generators named `x0, x1, ...` (or the given prefix).
    pub fn default_labels(prefix: &str, n: usize) -> Vec<String> {
        (0..n).map(|i| format!("{prefix}{i}")).collect()
    }

    /// The free algebra `T(V)` on `n` generators.
    pub fn free(field: Field, n: usize) -> QuadraticAlgebra {
        let labels = if n <= 3 { ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect() } else { Self::default_labels("x", n) };
        QuadraticAlgebra::new(field, labels, Subspace::zero(field, n * n)).expect("free algebra is well formed")
    }

    /// The unit object `K[u]`.
    pub fn unit(field: Field) -> QuadraticAlgebra {
        QuadraticAlgebra::new(field, vec!["u".into()], Subspace::zero(field, 1)).expect("K[u] is well formed")
    }

    /// The quantum plane `K⟨x,y⟩/(xy − q·yx)`.
    pub fn quantum_plane(field: Field, q: Scalar) -> QuadraticAlgebra {
        let rel = vec![field.zero(), field.one(), -q, field.zero()];
        let r = Subspace::span(field, 4, vec![rel]).expect("one relation of length 4");
        QuadraticAlgebra::new(field, vec!["x".into(), "y".into()], r).expect("quantum plane is well formed")
    }

    /// Dual numbers `K[e]/(e²)`.
    pub fn dual_numbers(field: Field) -> QuadraticAlgebra {
        QuadraticAlgebra::new(field, vec!["e".into()], Subspace::full(field, 1)).expect("dual numbers are well formed")
    }

    /// The symmetric algebra: relations are the antisymmetric tensors.
    pub fn symmetric(field: Field, labels: Vec<String>) -> QuadraticAlgebra {
        let n = labels.len();
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut v = vec![field.zero(); n * n];
                v[i * n + j] = field.one();
                v[j * n + i] = field.int(-1);
                rows.push(v);
            }
        }
        let r = Subspace::span(field, n * n, rows).expect("antisymmetric tensors");
        QuadraticAlgebra::new(field, labels, r).expect("symmetric algebra is well formed")
    }

    /// The free algebra on the given labels.
    pub fn free_on(field: Field, labels: Vec<String>) -> QuadraticAlgebra {
        let n = labels.len();
        QuadraticAlgebra::new(field, labels, Subspace::zero(field, n * n)).expect("free algebra is well formed")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn gens(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// Replaces the generator labels (same count).
    pub fn relabel(&self, labels: Vec<String>) -> QuadraticAlgebra {
        assert_eq!(labels.len(), self.gens());
        QuadraticAlgebra { field: self.field, labels, relations: self.relations.clone(), cache: Arc::default() }
    }

    /// The degreewise truncation up to degree `top`, cached.
    pub fn truncate(&self, top: usize) -> Arc<Presented> {
        let mut cache = self.cache.lock().expect("truncation cache poisoned");
        if let Some(p) = cache.get(&top) {
            return p.clone();
        }
        let gens: Vec<(usize, Vec<Scalar>)> = self.relations.basis().row_iter().map(|r| (2, r.to_vec())).collect();
        let p = Arc::new(Presented::new(self.field, self.labels.clone(), &gens, top).expect("quadratic relations are valid"));
        cache.insert(top, p.clone());
        p
    }

    /// The truncation as a graded algebra.
    pub fn graded(&self, top: usize) -> GradedAlgebra {
        GradedAlgebra::Presented(self.truncate(top))
    }

    /// The quadratic dual `A^!`: dual generators and relations `R^⊥`.
    pub fn dual(&self) -> QuadraticAlgebra {
        let labels = self.labels.iter().map(|l| dual_label(l)).collect();
        QuadraticAlgebra::new(self.field, labels, self.relations.annihilator()).expect("annihilator has the right ambient")
    }

    fn check_field(&self, other: &QuadraticAlgebra) -> Result<(), AlgError> {
        if self.field != other.field {
            return Err(AlgError::Lin(crate::exactlin::LinError::FieldMismatch(self.field, other.field)));
        }
        Ok(())
    }

    fn pair_labels(&self, other: &QuadraticAlgebra) -> Vec<String> {
        let mut out = Vec::new();
        for a in &self.labels {
            for b in &other.labels {
                out.push(format!("{a}.{b}"));
            }
        }
        out
    }

    /// Manin white product: generators `V⊗W`, relations
    /// `σ^{(23)}(R_A⊗W⊗W + V⊗V⊗R_B)`.
    pub fn white(&self, other: &QuadraticAlgebra) -> Result<QuadraticAlgebra, AlgError> {
        self.check_field(other)?;
        let f = self.field;
        let (n, m) = (self.gens(), other.gens());
        let left = self.relations.tensor(&Subspace::full(f, m * m))?;
        let right = Subspace::full(f, n * n).tensor(&other.relations)?;
        let r = left.sum(&right)?.permuted(&self.sigma(other))?;
        QuadraticAlgebra::new(f, self.pair_labels(other), r)
    }

    /// Manin black product: generators `V⊗W`, relations `σ^{(23)}(R_A⊗R_B)`.
    pub fn black(&self, other: &QuadraticAlgebra) -> Result<QuadraticAlgebra, AlgError> {
        self.check_field(other)?;
        let r = self.relations.tensor(&other.relations)?.permuted(&self.sigma(other))?;
        QuadraticAlgebra::new(self.field, self.pair_labels(other), r)
    }

    /// `σ^{(23)}: V⊗V⊗W⊗W → V⊗W⊗V⊗W`.
    fn sigma(&self, other: &QuadraticAlgebra) -> Vec<usize> {
        let (n, m) = (self.gens(), other.gens());
        factor_permutation(&[n, n, m, m], &[0, 2, 1, 3])
    }

    /// Writes a relation vector as a readable polynomial.
    pub fn format_quadratic(&self, v: &[Scalar]) -> String {
        let n = self.gens();
        let mut parts = Vec::new();
        for (w, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = format!("{}*{}", self.labels[w / n], self.labels[w % n]);
            parts.push(if c.is_one() { mono } else { format!("{c} {mono}") });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Label of a dual generator: `x` ↔ `x'`.
pub fn dual_label(l: &str) -> String {
    match l.strip_suffix('\'') {
        Some(base) => base.to_string(),
        None => format!("{l}'"),
    }
}
