//! Internal cohom objects in graded algebras relative to quadratic ones.
//!
//! `cohom(A,B) = A^!•B` has generators `z^i_j = v^i⊗w_j` (index `i·m + j`)
//! and the coevaluation `B → cohom(A,B)∘A` sends `w_j ↦ Σ_i z^i_j ⊗ v_i`.
//!
//! ```
//! use manin_kit::cohomcoend::coend_comonoid;
//! use manin_kit::exactlin::Field;
//! use manin_kit::quadalg::QuadraticAlgebra;
//!
//! let f3 = Field::prime(3).unwrap();
//! let c = coend_comonoid(&QuadraticAlgebra::dual_numbers(f3), 3).unwrap();
//! assert_eq!(c.graded().dims(), vec![1, 1, 1, 1]);
//! assert!(c.as_comonoid().check(3).is_ok());
//! ```

use crate::coreps::GradedComonoid;
use crate::exactlin::{all_matrices, Matrix};
use crate::quadalg::{AlgError, GradedAlgebra, GradedMap, QuadraticAlgebra};

/// `cohom(A,B)` together with its coevaluation.
#[derive(Clone, Debug)]
pub struct CohomObject {
    pub source: QuadraticAlgebra,
    pub target: QuadraticAlgebra,
    pub algebra: QuadraticAlgebra,
    pub coev: GradedMap,
    pub top: usize,
}

impl CohomObject {
    pub fn graded(&self) -> GradedAlgebra {
        self.algebra.graded(self.top)
    }
}

/// Builds `cohom(A,B) = A^!•B` and validates the coevaluation.
pub fn cohom(a: &QuadraticAlgebra, b: &QuadraticAlgebra, top: usize) -> Result<CohomObject, AlgError> {
    let algebra = a.dual().black(b)?;
    let (n, m) = (a.gens(), b.gens());
    let f = a.field();
    let mut deg1 = Matrix::zero(f, n * m * n, m);
    for i in 0..n {
        for j in 0..m {
            deg1.set((i * m + j) * n + i, j, f.one());
        }
    }
    let target = GradedAlgebra::white(&algebra.graded(top), &a.graded(top));
    let coev = GradedMap::generated(b.graded(top), target, deg1)?;
    coev.check_multiplicative(top.min(2)).map_err(|w| AlgError::Internal(format!("coevaluation does not respect relations: {w}")))?;
    Ok(CohomObject { source: a.clone(), target: b.clone(), algebra, coev, top })
}

/// `ϑ(f) = (f∘id_A)·coev` for `f: cohom(A,B) → Z`.
pub fn vartheta(f: &GradedMap, c: &CohomObject) -> Result<GradedMap, AlgError> {
    let id_a = GradedMap::identity(c.source.graded(c.top));
    c.coev.then(&GradedMap::white(vec![f.clone(), id_a]))
}

/// Recovers `f: cohom → Z` from `g: B → Z∘A` by transposing degree-1 data.
///
/// `n_a` is `dim A_1`; the result is checked against the relations of
/// `cohom` and a failure is an internal-consistency error.
pub fn vartheta_inverse_raw(g: &GradedMap, cohom: &QuadraticAlgebra, n_a: usize, z: &GradedAlgebra, top: usize) -> Result<GradedMap, AlgError> {
    let g1 = g.degree1();
    let m = g1.cols();
    let zd = z.dim(1);
    if g1.rows() != zd * n_a || cohom.gens() != n_a * m {
        return Err(AlgError::Invalid(format!(
            "ϑ⁻¹ shape mismatch: g is {}x{}, Z_1 = {zd}, A_1 = {n_a}, cohom has {} generators",
            g1.rows(),
            g1.cols(),
            cohom.gens()
        )));
    }
    let f = cohom.field();
    let mut f1 = Matrix::zero(f, zd, n_a * m);
    for zi in 0..zd {
        for i in 0..n_a {
            for j in 0..m {
                f1.set(zi, i * m + j, g1.get(zi * n_a + i, j).clone());
            }
        }
    }
    let out = GradedMap::generated(cohom.graded(top), z.clone(), f1)?;
    out.check_multiplicative(top.min(2)).map_err(|w| AlgError::Internal(format!("ϑ⁻¹ produced a map that breaks relations: {w}")))?;
    Ok(out)
}

/// `ϑ⁻¹` relative to a cohom object.
pub fn vartheta_inverse(g: &GradedMap, c: &CohomObject, z: &GradedAlgebra) -> Result<GradedMap, AlgError> {
    vartheta_inverse_raw(g, &c.algebra, c.source.gens(), z, c.top)
}

/// Cocomposition `cohom(U,W) → cohom(V,W)∘cohom(U,V)`.
pub fn cocomposition(u: &QuadraticAlgebra, v: &QuadraticAlgebra, w: &QuadraticAlgebra, top: usize) -> Result<GradedMap, AlgError> {
    cocomposition_of(&cohom(v, w, top)?, &cohom(u, v, top)?, &cohom(u, w, top)?)
}

fn cocomposition_of(c_vw: &CohomObject, c_uv: &CohomObject, c_uw: &CohomObject) -> Result<GradedMap, AlgError> {
    let id_vw = GradedMap::identity(c_vw.graded());
    let g = c_vw.coev.then(&GradedMap::white(vec![id_vw, c_uv.coev.clone()]))?;
    let z = GradedAlgebra::white(&c_vw.graded(), &c_uv.graded());
    vartheta_inverse(&g, c_uw, &z)
}

/// The embedding `B → K[u]∘B`, the identity on degree-1 coordinates.
pub fn unit_embedding(b: &QuadraticAlgebra, top: usize) -> Result<GradedMap, AlgError> {
    let f = b.field();
    let target = GradedAlgebra::white(&QuadraticAlgebra::unit(f).graded(top), &b.graded(top));
    GradedMap::generated(b.graded(top), target, Matrix::identity(f, b.gens()))
}

/// The counit `v_B = ϑ⁻¹(id_B): coend(B) → K[u]`.
pub fn counit_v(b: &QuadraticAlgebra, top: usize) -> Result<GradedMap, AlgError> {
    counit_of(&cohom(b, b, top)?)
}

fn counit_of(c: &CohomObject) -> Result<GradedMap, AlgError> {
    let (b, top) = (&c.source, c.top);
    let unit = QuadraticAlgebra::unit(b.field()).graded(top);
    vartheta_inverse(&unit_embedding(b, top)?, c, &unit)
}

/// `coend(B)` with cocomposition and counit.
#[derive(Clone, Debug)]
pub struct CoendComonoid {
    pub base: QuadraticAlgebra,
    pub cohom: CohomObject,
    pub delta: GradedMap,
    pub counit: GradedMap,
}

impl CoendComonoid {
    pub fn algebra(&self) -> &QuadraticAlgebra {
        &self.cohom.algebra
    }

    pub fn graded(&self) -> GradedAlgebra {
        self.cohom.graded()
    }

    pub fn as_comonoid(&self) -> GradedComonoid {
        GradedComonoid { carrier: self.graded(), delta: self.delta.clone().cached(), counit: self.counit.clone() }
    }
}

pub fn coend_comonoid(b: &QuadraticAlgebra, top: usize) -> Result<CoendComonoid, AlgError> {
    let c = cohom(b, b, top)?;
    Ok(CoendComonoid { base: b.clone(), delta: cocomposition_of(&c, &c, &c)?, counit: counit_of(&c)?, cohom: c })
}

/// The canonical map from the white presentation `A∘B` to the
/// componentwise white product, the identity on generators.
pub fn white_comparison(a: &QuadraticAlgebra, b: &QuadraticAlgebra, top: usize) -> Result<GradedMap, AlgError> {
    let p = a.white(b)?;
    let target = GradedAlgebra::white(&a.graded(top), &b.graded(top));
    GradedMap::generated(p.graded(top), target, Matrix::identity(a.field(), p.gens()))
}

/// `κ: cohom(V∘V′, W∘W′) → cohom(V,W)∘cohom(V′,W′)`.
pub fn kappa(v: &QuadraticAlgebra, v2: &QuadraticAlgebra, w: &QuadraticAlgebra, w2: &QuadraticAlgebra, top: usize) -> Result<GradedMap, AlgError> {
    let c1 = cohom(v, w, top)?;
    let c2 = cohom(v2, w2, top)?;
    let vv = v.white(v2)?;
    let ww = w.white(w2)?;
    let big = cohom(&vv, &ww, top)?;
    let sigma = GradedMap::sigma23(&c1.graded(), &v.graded(top), &c2.graded(), &v2.graded(top));
    let g = GradedMap::compose(vec![white_comparison(w, w2, top)?, GradedMap::white(vec![c1.coev.clone(), c2.coev.clone()]), sigma])?;
    let z = GradedAlgebra::white(&c1.graded(), &c2.graded());
    vartheta_inverse(&g, &big, &z)
}

/// `cohom(f, g): cohom(V,W) → cohom(V′,W′)` for `f: V′ → V`, `g: W → W′`.
pub fn cohom_map(
    f: &GradedMap,
    g: &GradedMap,
    v: &QuadraticAlgebra,
    w: &QuadraticAlgebra,
    v2: &QuadraticAlgebra,
    w2: &QuadraticAlgebra,
    top: usize,
) -> Result<GradedMap, AlgError> {
    let src = cohom(v, w, top)?;
    let dst = cohom(v2, w2, top)?;
    let id = GradedMap::identity(dst.graded());
    let h = GradedMap::compose(vec![g.clone(), dst.coev.clone(), GradedMap::white(vec![id, f.clone()])])?;
    vartheta_inverse(&h, &src, &dst.graded())
}

/// Whether `(f1⊗f1)(R_A) ⊆ R_B`, i.e. `f1` extends to a morphism `A → B`.
pub fn preserves_relations(f1: &Matrix, a: &QuadraticAlgebra, b: &QuadraticAlgebra) -> Result<bool, AlgError> {
    let ff = f1.kron(f1)?;
    for r in a.relations().basis().row_iter() {
        if !b.relations().contains(&ff.apply(r)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Degree-1 parts of all morphisms `A → B` over a finite field.
pub fn enumerate_morphisms(a: &QuadraticAlgebra, b: &QuadraticAlgebra, budget: u64) -> Result<Vec<Matrix>, AlgError> {
    let mut out = Vec::new();
    for f in all_matrices(a.field(), b.gens(), a.gens(), budget)? {
        if preserves_relations(&f, a, b)? {
            out.push(f);
        }
    }
    Ok(out)
}

/// Exhaustive comparison of `Hom(cohom(A,B), Z)` and `Hom(B, Z∘A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjunctionReport {
    pub lhs: usize,
    pub rhs: usize,
    /// `f` with `ϑ⁻¹ϑf ≠ f` or `ϑf` outside the right-hand set.
    pub lhs_failures: usize,
    /// `g` with `ϑϑ⁻¹g ≠ g`, or where `ϑ⁻¹` fails.
    pub rhs_failures: usize,
}

impl AdjunctionReport {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs && self.lhs_failures == 0 && self.rhs_failures == 0
    }
}

/// Enumerates both hom-sets and checks `ϑ` and `ϑ⁻¹` are mutually inverse
/// bijections between them, comparing maps up to `top`.
pub fn verify_adjunction(a: &QuadraticAlgebra, b: &QuadraticAlgebra, z: &QuadraticAlgebra, top: usize, budget: u64) -> Result<AdjunctionReport, AlgError> {
    let top = top.max(2);
    let c = cohom(a, b, top)?;
    let za = z.white(a)?;
    let lhs = enumerate_morphisms(&c.algebra, z, budget)?;
    let rhs = enumerate_morphisms(b, &za, budget)?;
    let rhs_set: std::collections::HashSet<&Matrix> = rhs.iter().collect();
    let zg = z.graded(top);
    let target = GradedAlgebra::white(&zg, &a.graded(top));
    let mut lhs_failures = 0;
    for f1 in &lhs {
        let f = GradedMap::generated(c.graded(), zg.clone(), f1.clone())?;
        let g = vartheta(&f, &c)?;
        let ok = rhs_set.contains(&g.degree1()) && vartheta_inverse(&g, &c, &zg).map(|back| back.agree(&f, top).is_ok()).unwrap_or(false);
        if !ok {
            lhs_failures += 1;
        }
    }
    let mut rhs_failures = 0;
    for g1 in &rhs {
        let g = GradedMap::generated(b.graded(top), target.clone(), g1.clone())?;
        let ok = vartheta_inverse(&g, &c, &zg).and_then(|f| vartheta(&f, &c)).map(|back| back.agree(&g, top).is_ok()).unwrap_or(false);
        if !ok {
            rhs_failures += 1;
        }
    }
    Ok(AdjunctionReport { lhs: lhs.len(), rhs: rhs.len(), lhs_failures, rhs_failures })
}
