//! Quadratic algebras, their truncations, Manin products and graded maps.
//!
//! ```
//! use manin_kit::exactlin::Field;
//! use manin_kit::quadalg::QuadraticAlgebra;
//!
//! let q = Field::Rational;
//! let a = QuadraticAlgebra::quantum_plane(q, q.int(2));
//! assert_eq!(a.dual().graded(3).dims(), vec![1, 2, 1, 0]);
//! assert_eq!(a.white(&a).unwrap().graded(2).dims(), vec![1, 4, 9]);
//! ```

mod algebra;
mod graded;
mod presented;

pub use algebra::{dual_label, QuadraticAlgebra};
pub use graded::{GradedAlgebra, GradedMap, GradedTruncation, Witness};
pub use presented::Presented;

use crate::exactlin::{all_matrices, kernel, BudgetExceeded, LinError, Matrix, SparseVec, Subspace};

/// Errors raised while building algebras and maps.
#[derive(Debug, Clone, thiserror::Error)]
pub enum AlgError {
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("relation not preserved: {relation} maps outside the target relations")]
    RelationNotPreserved { relation: String },
    #[error("truncation too shallow: need degree at least {0}")]
    TooShallow(usize),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// The graded morphism `A → B` with degree-1 part `f1` (`dim B_1 × dim A_1`).
///
/// Succeeds iff `(f1⊗f1)(R_A) ⊆ R_B`; otherwise reports the first basis
/// relation of `A` whose image leaves `R_B`.
pub fn morphism_from_degree1(f1: &Matrix, a: &QuadraticAlgebra, b: &QuadraticAlgebra, top: usize) -> Result<GradedMap, AlgError> {
    if f1.shape() != (b.gens(), a.gens()) {
        return Err(AlgError::Invalid(format!("degree-1 matrix is {}x{}, expected {}x{}", f1.rows(), f1.cols(), b.gens(), a.gens())));
    }
    let ff = f1.kron(f1)?;
    for r in a.relations().basis().row_iter() {
        let img = ff.apply(r)?;
        if !b.relations().contains(&img)? {
            return Err(AlgError::RelationNotPreserved { relation: a.format_quadratic(r) });
        }
    }
    GradedMap::generated(a.graded(top), b.graded(top), f1.clone())
}

/// The multiplication `C_1⊗C_1 → C_2` of a graded algebra as a matrix.
pub fn degree_two_product(t: &GradedAlgebra) -> Matrix {
    let d = t.dim(1);
    let cols: Vec<SparseVec> = (0..d).flat_map(|a| (0..d).map(move |b| (a, b))).map(|(a, b)| t.mul_basis(1, a, 1, b)).collect();
    Matrix::from_sparse_cols(t.field(), t.dim(2), &cols)
}

/// The coreflection of a graded algebra into quadratic algebras.
pub struct Coreflection {
    /// `G(T) = T(C_1)/(ker m_{1,1})`.
    pub algebra: QuadraticAlgebra,
    /// The counit `G(T) → T`, the identity in degree 1.
    pub counit: GradedMap,
}

/// Builds `G(T)` and its counit. Needs `T` truncated at degree `≥ 2`.
pub fn coreflection(t: &GradedAlgebra) -> Result<Coreflection, AlgError> {
    if t.top() < 2 {
        return Err(AlgError::TooShallow(2));
    }
    let d = t.dim(1);
    let i2: Subspace = kernel(&degree_two_product(t));
    let labels = match t {
        GradedAlgebra::Presented(p) => p.labels().to_vec(),
        _ => QuadraticAlgebra::default_labels("c", d),
    };
    let algebra = QuadraticAlgebra::new(t.field(), labels, i2)?;
    let counit = GradedMap::generated(algebra.graded(t.top()), t.clone(), Matrix::identity(t.field(), d))?;
    counit.check_multiplicative(t.top()).map_err(|w| AlgError::Internal(format!("counit is not multiplicative: {w}")))?;
    Ok(Coreflection { algebra, counit })
}

/// Exhaustive check of the counit's universal property for one pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreflectionReport {
    /// Degree-1 matrices `B_1 → T_1` examined.
    pub candidates: usize,
    /// Graded morphisms `B → T`.
    pub morphisms: usize,
    /// Morphisms with exactly one lift through the counit.
    pub unique_lifts: usize,
    /// Lifts `B → G(T)` whose composite with the counit is not a morphism.
    pub stray_lifts: usize,
}

impl CoreflectionReport {
    pub fn passed(&self) -> bool {
        self.unique_lifts == self.morphisms && self.stray_lifts == 0
    }
}

/// For every `f: B → T`, counts the `h: B → G(T)` with `ε·h = f` over a
/// finite field, comparing maps up to the truncation of `T`.
pub fn coreflection_universal(b: &QuadraticAlgebra, t: &GradedAlgebra, budget: u64) -> Result<CoreflectionReport, AlgError> {
    let top = t.top();
    let g = coreflection(t)?;
    let bg = b.graded(top);
    let mut morphisms = Vec::new();
    let mut lifts = Vec::new();
    let mut candidates = 0;
    for m in all_matrices(b.field(), t.dim(1), b.gens(), budget)? {
        candidates += 1;
        let f = GradedMap::generated(bg.clone(), t.clone(), m.clone())?;
        if f.check_multiplicative(top).is_ok() {
            morphisms.push(f);
        }
        if let Ok(h) = morphism_from_degree1(&m, b, &g.algebra, top) {
            lifts.push(h.then(&g.counit)?);
        }
    }
    let mut unique_lifts = 0;
    for f in &morphisms {
        if lifts.iter().filter(|l| l.agree(f, top).is_ok()).count() == 1 {
            unique_lifts += 1;
        }
    }
    let stray_lifts = lifts.iter().filter(|l| !morphisms.iter().any(|f| l.agree(f, top).is_ok())).count();
    Ok(CoreflectionReport { candidates, morphisms: morphisms.len(), unique_lifts, stray_lifts })
}

/// Whether `G(A∘A′)`, taken on the componentwise white product, has the
/// same degree-2 relations as the presented white product.
pub fn white_relations_agree(a: &QuadraticAlgebra, a2: &QuadraticAlgebra) -> Result<bool, AlgError> {
    let componentwise = GradedAlgebra::white(&a.graded(2), &a2.graded(2));
    let g = coreflection(&componentwise)?;
    Ok(g.algebra.relations() == a.white(a2)?.relations())
}
