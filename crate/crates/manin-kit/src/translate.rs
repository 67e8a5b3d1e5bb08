//! Contravariant monoidal functors `FVect → FQA` and the translation of
//! representations into corepresentations.
//!
//! `T*` sends `V` to the free algebra on `V*` and is strong monoidal;
//! `S*` sends `V` to the symmetric algebra on `V*` and is only colax.
//! Both act on a linear map `a` by the algebra map with degree-1 part `aᵀ`.

use crate::cohomcoend::{cohom, cohom_map, vartheta_inverse};
use crate::coreps::{corep_check, corep_morphism_check, tensor_corep, Corepresentation, GradedBimonoid, GradedComonoid};
use crate::exactlin::{Field, Matrix};
use crate::laws::{law, LawFailure, LawResult};
use crate::linrep::{ev, hom_map, tensor_rep, VecBimonoid, VecMonoid};
use crate::quadalg::{morphism_from_degree1, AlgError, GradedAlgebra, GradedMap, QuadraticAlgebra};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Functor {
    TStar,
    SStar,
}

impl Functor {
    pub fn name(self) -> &'static str {
        match self {
            Functor::TStar => "tstar",
            Functor::SStar => "sstar",
        }
    }

    pub fn is_strong(self) -> bool {
        self == Functor::TStar
    }

    /// `F(K^dim)`.
    pub fn object(self, field: Field, dim: usize) -> Result<QuadraticAlgebra, AlgError> {
        let labels = if dim == 1 { vec!["u".to_string()] } else { QuadraticAlgebra::default_labels("t", dim) };
        match self {
            Functor::TStar => Ok(QuadraticAlgebra::free_on(field, labels)),
            Functor::SStar => {
                if field.characteristic() == 2 {
                    return Err(AlgError::Invalid("S* needs a field of characteristic other than 2".into()));
                }
                Ok(QuadraticAlgebra::symmetric(field, labels))
            }
        }
    }

    /// `F(a): F(W) → F(V)` for `a: V → W`.
    pub fn arrow(self, a: &Matrix, top: usize) -> Result<GradedMap, AlgError> {
        let f = a.field();
        let (w, v) = a.shape();
        morphism_from_degree1(&a.transpose(), &self.object(f, w)?, &self.object(f, v)?, top)
    }

    /// `φ_{V,W}: F(V⊗W) → F(V)∘F(W)`, the identity on generators.
    pub fn phi(self, field: Field, v: usize, w: usize, top: usize) -> Result<GradedMap, AlgError> {
        let target = GradedAlgebra::white(&self.object(field, v)?.graded(top), &self.object(field, w)?.graded(top));
        GradedMap::generated(self.object(field, v * w)?.graded(top), target, Matrix::identity(field, v * w))
    }

    /// The comonoid `(FX, φ·F(μ), F(η))` of an algebra `X`.
    pub fn comonoid(self, m: &VecMonoid, top: usize) -> Result<GradedComonoid, AlgError> {
        let f = m.field();
        let fx = self.object(f, m.dim)?.graded(top);
        let delta = GradedMap::generated(fx.clone(), GradedAlgebra::white(&fx, &fx), m.mul.transpose())?;
        let unit = QuadraticAlgebra::unit(f).graded(top);
        let counit = GradedMap::generated(fx.clone(), unit, m.unit.transpose())?;
        Ok(GradedComonoid { carrier: fx, delta, counit })
    }

    /// The bimonoid translated from a bialgebra: `μ = F(Δ)·φ⁻¹`,
    /// `η = φ·F(ε)` on top of [`Functor::comonoid`]. Needs a strong functor.
    pub fn bimonoid(self, b: &VecBimonoid, top: usize) -> Result<GradedBimonoid, AlgError> {
        if !self.is_strong() {
            return Err(AlgError::Invalid(format!("{} is not strong, so φ has no inverse", self.name())));
        }
        let f = b.field();
        let comonoid = self.comonoid(&b.monoid, top)?;
        let fx = comonoid.carrier.clone();
        let mul = GradedMap::generated(GradedAlgebra::white(&fx, &fx), fx.clone(), b.comul.transpose())?;
        let unit = GradedMap::generated(QuadraticAlgebra::unit(f).graded(top), fx, b.counit.transpose())?;
        Ok(GradedBimonoid { comonoid, mul, unit })
    }
}

/// `Φ_{V,W}: cohom(FV, FW) → F(hom(V,W))` with a per-degree isomorphism report.
#[derive(Clone, Debug)]
pub struct PhiTransform {
    pub map: GradedMap,
    /// `iso[k]` tells whether the degree-`k` part is invertible.
    pub iso: Vec<bool>,
}

impl PhiTransform {
    pub fn is_iso(&self) -> bool {
        self.iso.iter().all(|&b| b)
    }
}

/// `Φ_{V,W} = ϑ⁻¹(φ_{hom(V,W),V}·F(ev_{V,W}))`.
pub fn phi_transform(functor: Functor, field: Field, v: usize, w: usize, top: usize) -> Result<PhiTransform, AlgError> {
    let fv = functor.object(field, v)?;
    let fw = functor.object(field, w)?;
    let fhom = functor.object(field, w * v)?.graded(top);
    let target = GradedAlgebra::white(&fhom, &fv.graded(top));
    let g = GradedMap::generated(fw.graded(top), target, ev(field, v, w).transpose())?;
    let c = cohom(&fv, &fw, top)?;
    let map = vartheta_inverse(&g, &c, &fhom)?;
    let iso = (0..=top)
        .map(|k| {
            let m = map.matrix(k);
            m.rows() == m.cols() && m.rank() == m.rows()
        })
        .collect();
    Ok(PhiTransform { map, iso })
}

/// Naturality of `Φ` in both arguments for `b: V′ → V` and `a: W → W′`.
pub fn phi_naturality_check(functor: Functor, b: &Matrix, a: &Matrix, top: usize) -> LawResult {
    let f = a.field();
    let (v, v2) = b.shape();
    let (w2, w) = a.shape();
    let run = || -> Result<(GradedMap, GradedMap, GradedMap, GradedMap), AlgError> {
        let (fv, fv2) = (functor.object(f, v)?, functor.object(f, v2)?);
        let (fw, fw2) = (functor.object(f, w)?, functor.object(f, w2)?);
        let phi_vw = phi_transform(functor, f, v, w, top)?.map;
        let phi_vw2 = phi_transform(functor, f, v, w2, top)?.map;
        let phi_v2w = phi_transform(functor, f, v2, w, top)?.map;
        let id_fv = GradedMap::identity(fv.graded(top));
        let id_fw = GradedMap::identity(fw.graded(top));
        let fa = functor.arrow(a, top)?;
        let fb = functor.arrow(b, top)?;
        let w_side_l = cohom_map(&id_fv, &fa, &fv, &fw2, &fv, &fw, top)?.then(&phi_vw)?;
        let w_side_r = phi_vw2.then(&functor.arrow(&hom_map(&Matrix::identity(f, v), a), top)?)?;
        let v_side_l = cohom_map(&fb, &id_fw, &fv2, &fw, &fv, &fw, top)?.then(&phi_vw)?;
        let v_side_r = phi_v2w.then(&functor.arrow(&hom_map(b, &Matrix::identity(f, w)), top)?)?;
        Ok((w_side_l, w_side_r, v_side_l, v_side_r))
    };
    let (wl, wr, vl, vr) = run().map_err(|e| LawFailure::new("Φ naturality", 0, 0, e.to_string()))?;
    law("Φ·cohom(id, Fa) = F(hom(V,a))·Φ", &wl, &wr, top)?;
    law("Φ·cohom(Fb, id) = F(hom(b,W))·Φ", &vl, &vr, top)
}

/// `Φ_{V,V}` is a comonoid morphism `coend(FV) → F(end V)`.
pub fn phi_comonoid_check(functor: Functor, field: Field, v: usize, top: usize) -> LawResult {
    let run = || -> Result<(Corepresentation, GradedComonoid), AlgError> {
        let phi = phi_transform(functor, field, v, v, top)?;
        let rep = Corepresentation::new(&functor.object(field, v)?, phi.map, top)?;
        Ok((rep, functor.comonoid(&VecMonoid::end(field, v), top)?))
    };
    let (rep, c) = run().map_err(|e| LawFailure::new("Φ comonoid morphism", 0, 0, e.to_string()))?;
    corep_check(&rep, &c, top)
}

/// `ω̃ = Fρ·Φ_{V,V}: coend(FV) → FX` for a representation `ρ: X → end(V)`.
pub fn lift_rep(functor: Functor, rho: &Matrix, v: usize, top: usize) -> Result<Corepresentation, AlgError> {
    let f = rho.field();
    let phi = phi_transform(functor, f, v, v, top)?;
    let frho = functor.arrow(rho, top)?;
    let omega = phi.map.then(&frho)?.cached();
    Corepresentation::new(&functor.object(f, v)?, omega, top)
}

/// Lifts `ρ` and checks the result against `Comon(F)(X)`.
pub fn lift_and_check(functor: Functor, x: &VecMonoid, rho: &Matrix, v: usize, top: usize) -> Result<Corepresentation, LawFailure> {
    let wrap = |e: AlgError| LawFailure::new("lift", 0, 0, e.to_string());
    let rep = lift_rep(functor, rho, v, top).map_err(wrap)?;
    let c = functor.comonoid(x, top).map_err(wrap)?;
    c.check(top)?;
    corep_check(&rep, &c, top)?;
    Ok(rep)
}

/// Checks that `φ_{V,V′}` is an isomorphism of corepresentations between
/// the lift of `ρ⊗ρ′` and the tensor product of the lifts.
pub fn verify_lift_monoidality(functor: Functor, b: &VecBimonoid, rho: &Matrix, v: usize, rho2: &Matrix, v2: usize, top: usize) -> LawResult {
    let wrap = |e: AlgError| LawFailure::new("lift monoidality", 0, 0, e.to_string());
    let f = b.field();
    let x = functor.bimonoid(b, top).map_err(wrap)?;
    x.check(top)?;
    let l1 = lift_and_check(functor, &b.monoid, rho, v, top)?;
    let l2 = lift_and_check(functor, &b.monoid, rho2, v2, top)?;
    let joint = tensor_rep(rho, v, rho2, v2, b);
    let l12 = lift_and_check(functor, &b.monoid, &joint, v * v2, top)?;
    let t = tensor_corep(&l1, &l2, &x).map_err(wrap)?;
    corep_check(&t, &x.comonoid, top)?;
    let fvv = functor.object(f, v * v2).map_err(wrap)?;
    let white = functor.object(f, v).and_then(|a| a.white(&functor.object(f, v2)?)).map_err(wrap)?;
    let phi = morphism_from_degree1(&Matrix::identity(f, v * v2), &fvv, &white, top).map_err(wrap)?;
    corep_morphism_check(&phi, &l12, &t, top)?;
    for k in 0..=top {
        let m = phi.matrix(k);
        if m.rows() != m.cols() || m.rank() != m.rows() {
            return Err(LawFailure::new("φ is invertible", k, 0, "degree component is not invertible"));
        }
    }
    Ok(())
}

/// `σ^{(23)}·(φ∘φ)·φ = (φ∘φ)·φ·F(σ^{(23)})` on `F(V⊗W⊗V′⊗W′)`.
pub fn phi_sigma_check(functor: Functor, field: Field, dims: [usize; 4], top: usize) -> LawResult {
    let [v, w, v2, w2] = dims;
    let run = || -> Result<(GradedMap, GradedMap), AlgError> {
        let g = |d: usize| -> Result<GradedAlgebra, AlgError> { Ok(functor.object(field, d)?.graded(top)) };
        let lhs = GradedMap::compose(vec![
            functor.phi(field, v * w, v2 * w2, top)?,
            GradedMap::white(vec![functor.phi(field, v, w, top)?, functor.phi(field, v2, w2, top)?]),
            GradedMap::sigma23(&g(v)?, &g(w)?, &g(v2)?, &g(w2)?),
        ])?;
        let sigma = crate::exactlin::sigma23(field, v, v2, w, w2);
        let rhs = GradedMap::compose(vec![
            functor.arrow(&sigma, top)?,
            functor.phi(field, v * v2, w * w2, top)?,
            GradedMap::white(vec![functor.phi(field, v, v2, top)?, functor.phi(field, w, w2, top)?]),
        ])?;
        Ok((lhs, rhs))
    };
    let (l, r) = run().map_err(|e| LawFailure::new("φ and σ", 0, 0, e.to_string()))?;
    law("σ·(φ∘φ)·φ = (φ∘φ)·φ·Fσ", &l, &r, top)
}
