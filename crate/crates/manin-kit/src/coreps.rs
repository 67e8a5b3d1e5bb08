//! Comonoids and bimonoids in `(GrAlg, ∘)`, corepresentations of them and
//! their coactions.

use crate::cohomcoend::{coend_comonoid, cohom_map, kappa, unit_embedding, vartheta, vartheta_inverse, white_comparison, CoendComonoid};
use crate::exactlin::Matrix;
use crate::laws::{law, LawFailure, LawResult};
use crate::quadalg::{AlgError, GradedAlgebra, GradedMap, QuadraticAlgebra, Witness};

fn multiplicative(name: &str, f: &GradedMap, upto: usize) -> LawResult {
    f.check_multiplicative(upto).map_err(|witness| LawFailure { law: format!("{name} is multiplicative"), witness })
}

fn built<T>(name: &str, r: Result<T, AlgError>) -> Result<T, LawFailure> {
    r.map_err(|e| LawFailure { law: name.to_string(), witness: Witness { degree: 0, basis: 0, detail: format!("could not build the diagram: {e}") } })
}

/// The unit `K[u]` truncated at `top`.
pub fn unit_algebra(field: crate::exactlin::Field, top: usize) -> GradedAlgebra {
    QuadraticAlgebra::unit(field).graded(top)
}

/// `(X, Δ, ε)` with `Δ: X → X∘X` and `ε: X → K[u]`.
#[derive(Clone, Debug)]
pub struct GradedComonoid {
    pub carrier: GradedAlgebra,
    pub delta: GradedMap,
    pub counit: GradedMap,
}

impl GradedComonoid {
    /// The trivial comonoid on `K[u]`.
    pub fn trivial(field: crate::exactlin::Field, top: usize) -> GradedComonoid {
        let k = unit_algebra(field, top);
        let kk = GradedAlgebra::white(&k, &k);
        let one = Matrix::identity(field, 1);
        GradedComonoid {
            carrier: k.clone(),
            delta: GradedMap::generated(k.clone(), kk, one.clone()).expect("K[u] → K[u]∘K[u]"),
            counit: GradedMap::identity(k),
        }
    }

    /// Coassociativity and both counit laws up to degree `upto`.
    pub fn check(&self, upto: usize) -> LawResult {
        let x = &self.carrier;
        let id = GradedMap::identity(x.clone());
        let d = &self.delta;
        let left = built("coassociativity", d.then(&GradedMap::white(vec![d.clone(), id.clone()])))?;
        let right = built("coassociativity", d.then(&GradedMap::white(vec![id.clone(), d.clone()])))?;
        law("coassociativity", &left, &right, upto)?;
        let lc = built("left counit", d.then(&GradedMap::white(vec![self.counit.clone(), id.clone()])))?;
        law("left counit", &lc, &id, upto)?;
        let rc = built("right counit", d.then(&GradedMap::white(vec![id.clone(), self.counit.clone()])))?;
        law("right counit", &rc, &id, upto)
    }
}

/// `(X, μ, η, Δ, ε)` with `μ: X∘X → X` and `η: K[u] → X`.
#[derive(Clone, Debug)]
pub struct GradedBimonoid {
    pub comonoid: GradedComonoid,
    pub mul: GradedMap,
    pub unit: GradedMap,
}

impl GradedBimonoid {
    pub fn carrier(&self) -> &GradedAlgebra {
        &self.comonoid.carrier
    }

    pub fn trivial(field: crate::exactlin::Field, top: usize) -> GradedBimonoid {
        let c = GradedComonoid::trivial(field, top);
        let k = c.carrier.clone();
        let kk = GradedAlgebra::white(&k, &k);
        let mul = GradedMap::generated(kk, k.clone(), Matrix::identity(field, 1)).expect("K[u]∘K[u] → K[u]");
        GradedBimonoid { comonoid: c, mul, unit: GradedMap::identity(k) }
    }

    /// Monoid, comonoid and compatibility laws up to degree `upto`.
    pub fn check(&self, upto: usize) -> LawResult {
        self.comonoid.check(upto)?;
        let x = self.carrier().clone();
        let id = GradedMap::identity(x.clone());
        let (m, e) = (&self.mul, &self.unit);
        let (d, eps) = (&self.comonoid.delta, &self.comonoid.counit);
        multiplicative("μ", m, upto)?;
        multiplicative("η", e, upto)?;
        multiplicative("Δ", d, upto)?;
        multiplicative("ε", eps, upto)?;
        let l = built("associativity", GradedMap::white(vec![m.clone(), id.clone()]).then(m))?;
        let r = built("associativity", GradedMap::white(vec![id.clone(), m.clone()]).then(m))?;
        law("associativity", &l, &r, upto)?;
        let lu = built("left unit", GradedMap::white(vec![e.clone(), id.clone()]).then(m))?;
        law("left unit", &lu, &GradedMap::identity(lu.source()), upto)?;
        let ru = built("right unit", GradedMap::white(vec![id.clone(), e.clone()]).then(m))?;
        law("right unit", &ru, &GradedMap::identity(ru.source()), upto)?;
        let lhs = built("Δ·μ", m.then(d))?;
        let rhs = built(
            "Δ·μ",
            GradedMap::compose(vec![
                GradedMap::white(vec![d.clone(), d.clone()]),
                GradedMap::sigma23(&x, &x, &x, &x),
                GradedMap::white(vec![m.clone(), m.clone()]),
            ]),
        )?;
        law("Δ·μ = (μ∘μ)·σ·(Δ∘Δ)", &lhs.cached(), &rhs, upto)?;
        let em = built("ε·μ", m.then(eps))?;
        let ee = GradedMap::white(vec![eps.clone(), eps.clone()]);
        law("ε·μ = ε∘ε", &em, &ee, upto)?;
        let de = built("Δ·η", e.then(d))?;
        law("Δ·η = η∘η", &de, &GradedMap::white(vec![e.clone(), e.clone()]), upto)?;
        let ee = built("ε·η", e.then(eps))?;
        law("ε·η = id", &ee, &GradedMap::identity(ee.source()), upto)
    }
}

/// A corepresentation `ω: coend(B) → X` of a comonoid.
#[derive(Clone, Debug)]
pub struct Corepresentation {
    pub coend: CoendComonoid,
    pub omega: GradedMap,
}

impl Corepresentation {
    pub fn new(base: &QuadraticAlgebra, omega: GradedMap, top: usize) -> Result<Corepresentation, AlgError> {
        let coend = coend_comonoid(base, top)?;
        if omega.source().dims() != coend.graded().dims() {
            return Err(AlgError::Invalid("ω must start at coend(B)".into()));
        }
        Ok(Corepresentation { coend, omega })
    }

    /// The identity corepresentation of `coend(B)`.
    pub fn identity(base: &QuadraticAlgebra, top: usize) -> Result<(Corepresentation, GradedComonoid), AlgError> {
        let coend = coend_comonoid(base, top)?;
        let comonoid = coend.as_comonoid();
        let omega = GradedMap::identity(coend.graded());
        Ok((Corepresentation { coend, omega }, comonoid))
    }

    pub fn base(&self) -> &QuadraticAlgebra {
        &self.coend.base
    }

    pub fn top(&self) -> usize {
        self.coend.cohom.top
    }

    /// The corresponding coaction `δ = ϑ(ω): B → X∘B`.
    pub fn coaction(&self) -> Result<GradedMap, AlgError> {
        vartheta(&self.omega, &self.coend.cohom)
    }

    /// `ω = ϑ⁻¹(δ)` for a coaction `δ: B → X∘B`.
    pub fn from_coaction(base: &QuadraticAlgebra, delta: &GradedMap, x: &GradedAlgebra, top: usize) -> Result<Corepresentation, AlgError> {
        let coend = coend_comonoid(base, top)?;
        let omega = vartheta_inverse(delta, &coend.cohom, x)?;
        Ok(Corepresentation { coend, omega })
    }
}

/// The two corepresentation squares: `Δ·ω = (ω∘ω)·d` and `ε·ω = v`.
pub fn corep_check(rep: &Corepresentation, x: &GradedComonoid, upto: usize) -> LawResult {
    let w = &rep.omega;
    multiplicative("ω", w, upto)?;
    let lhs = built("Δ·ω", w.then(&x.delta))?;
    let rhs = built("Δ·ω", rep.coend.delta.then(&GradedMap::white(vec![w.clone(), w.clone()])))?;
    law("Δ·ω = (ω∘ω)·d", &lhs, &rhs, upto)?;
    let eo = built("ε·ω", w.then(&x.counit))?;
    law("ε·ω = v", &eo, &rep.coend.counit, upto)
}

/// Coaction laws `(Δ∘id)·δ = (id∘δ)·δ` and `(ε∘id)·δ = id`.
pub fn coaction_check(delta: &GradedMap, x: &GradedComonoid, base: &QuadraticAlgebra, upto: usize) -> LawResult {
    let top = delta.top();
    let b = base.graded(top);
    let id_b = GradedMap::identity(b.clone());
    let id_x = GradedMap::identity(x.carrier.clone());
    let l = built("coaction", delta.then(&GradedMap::white(vec![x.delta.clone(), id_b.clone()])))?;
    let r = built("coaction", delta.then(&GradedMap::white(vec![id_x, delta.clone()])))?;
    law("(Δ∘id)·δ = (id∘δ)·δ", &l, &r, upto)?;
    let c = built("counit", delta.then(&GradedMap::white(vec![x.counit.clone(), id_b])))?;
    let emb = built("counit", unit_embedding(base, top))?;
    law("(ε∘id)·δ = id", &c, &emb, upto)
}

/// Checks that `f: B → B′` intertwines `ω` and `ν`:
/// `ω·cohom(f, id_B) = ν·cohom(id_{B′}, f)` on `cohom(B′, B)`.
pub fn corep_morphism_check(f: &GradedMap, omega: &Corepresentation, nu: &Corepresentation, upto: usize) -> LawResult {
    let (b, b2) = (omega.base(), nu.base());
    let top = omega.top().min(nu.top());
    let id_b = GradedMap::identity(b.graded(top));
    let id_b2 = GradedMap::identity(b2.graded(top));
    let left = built("corep morphism", cohom_map(f, &id_b, b2, b, b, b, top).and_then(|m| m.then(&omega.omega)))?;
    let right = built("corep morphism", cohom_map(&id_b2, f, b2, b, b2, b2, top).and_then(|m| m.then(&nu.omega)))?;
    law("ω·cohom(f,id) = ν·cohom(id,f)", &left, &right, upto)
}

/// `ω″ = μ·(ω∘ω′)·κ` on `B∘B′`.
pub fn tensor_corep(a: &Corepresentation, b: &Corepresentation, x: &GradedBimonoid) -> Result<Corepresentation, AlgError> {
    let top = a.top().min(b.top());
    let (v, v2) = (a.base(), b.base());
    let k = kappa(v, v2, v, v2, top)?;
    let omega = GradedMap::compose(vec![k, GradedMap::white(vec![a.omega.clone(), b.omega.clone()]), x.mul.clone()])?.cached();
    Corepresentation::new(&v.white(v2)?, omega, top)
}

/// The unit corepresentation `(K[u], η)`.
pub fn unit_corep(x: &GradedBimonoid, top: usize) -> Result<Corepresentation, AlgError> {
    let f = x.carrier().field();
    let k = QuadraticAlgebra::unit(f);
    let coend = coend_comonoid(&k, top)?;
    let omega = GradedMap::generated(coend.graded(), x.carrier().clone(), x.unit.degree1())?;
    Ok(Corepresentation { coend, omega })
}

/// The composite `(μ∘id∘id)·σ^{(23)}·(δ∘δ′)` precomposed with the comparison
/// from the white presentation, against `ϑ(ω″)` landing in `X∘B∘B′`.
pub fn coaction_tensor_check(a: &Corepresentation, b: &Corepresentation, tensor: &Corepresentation, x: &GradedBimonoid, upto: usize) -> LawResult {
    let top = tensor.top();
    let (v, v2) = (a.base(), b.base());
    let xa = x.carrier().clone();
    let (gv, gv2) = (v.graded(top), v2.graded(top));
    let direct = built(
        "coaction of a tensor product",
        (|| {
            let d = tensor.coaction()?;
            d.then(&GradedMap::white(vec![GradedMap::identity(xa.clone()), white_comparison(v, v2, top)?]))
        })(),
    )?;
    let composite = built(
        "coaction of a tensor product",
        (|| {
            GradedMap::compose(vec![
                white_comparison(v, v2, top)?,
                GradedMap::white(vec![a.coaction()?, b.coaction()?]),
                GradedMap::sigma23(&xa, &gv, &xa, &gv2),
                GradedMap::white(vec![x.mul.clone(), GradedMap::identity(gv.clone()), GradedMap::identity(gv2.clone())]),
            ])
        })(),
    )?;
    law("ϑ(ω″) = (μ∘id∘id)·σ·(δ∘δ′)", &direct, &composite, upto)
}

/// `X∘Y` with `Δ = σ^{(23)}·(Δ_X∘Δ_Y)` and `ε = ε_X∘ε_Y`.
pub fn tensor_comonoid(x: &GradedComonoid, y: &GradedComonoid) -> Result<GradedComonoid, AlgError> {
    let (a, b) = (&x.carrier, &y.carrier);
    let delta = GradedMap::white(vec![x.delta.clone(), y.delta.clone()]).then(&GradedMap::sigma23(a, a, b, b))?;
    Ok(GradedComonoid { carrier: GradedAlgebra::white(a, b), delta, counit: GradedMap::white(vec![x.counit.clone(), y.counit.clone()]) })
}

/// `κ: coend(V∘V′) → coend(V)∘coend(V′)` is a comonoid morphism.
pub fn kappa_comonoid_check(v: &QuadraticAlgebra, v2: &QuadraticAlgebra, top: usize) -> LawResult {
    let build = || -> Result<(GradedMap, CoendComonoid, GradedComonoid), AlgError> {
        let k = kappa(v, v2, v, v2, top)?.cached();
        let big = coend_comonoid(&v.white(v2)?, top)?;
        let small = tensor_comonoid(&coend_comonoid(v, top)?.as_comonoid(), &coend_comonoid(v2, top)?.as_comonoid())?;
        Ok((k, big, small))
    };
    let (k, big, small) =
        build().map_err(|e| LawFailure { law: "κ".into(), witness: Witness { degree: 0, basis: 0, detail: format!("could not build the diagram: {e}") } })?;
    let lhs = built("κ and Δ", big.delta.then(&GradedMap::white(vec![k.clone(), k.clone()])))?;
    let rhs = built("κ and Δ", k.then(&small.delta))?;
    law("(κ∘κ)·d = Δ·κ", &lhs, &rhs, top)?;
    let lhs = built("κ and ε", k.then(&small.counit))?;
    law("(v∘v′)·κ = v", &lhs, &big.counit, top)
}

fn same_base(name: &str, a: &QuadraticAlgebra, b: &QuadraticAlgebra) -> LawResult {
    if a.gens() != b.gens() || a.relations() != b.relations() {
        return Err(LawFailure::new(name, 1, 0, "the two bases have different presentations"));
    }
    Ok(())
}

/// Associativity of the tensor product of corepresentations, compared on
/// the common base `V∘V′∘V″`.
pub fn tensor_corep_associativity(a: &Corepresentation, b: &Corepresentation, c: &Corepresentation, x: &GradedBimonoid, upto: usize) -> LawResult {
    let name = "(ω⊗ω′)⊗ω″ = ω⊗(ω′⊗ω″)";
    let left = built(name, tensor_corep(a, b, x).and_then(|ab| tensor_corep(&ab, c, x)))?;
    let right = built(name, tensor_corep(b, c, x).and_then(|bc| tensor_corep(a, &bc, x)))?;
    same_base(name, left.base(), right.base())?;
    law(name, &left.omega, &right.omega, upto)
}

/// Both unit laws `η⊗ω = ω = ω⊗η` on `K[u]∘V = V = V∘K[u]`.
pub fn tensor_corep_unit(a: &Corepresentation, x: &GradedBimonoid, upto: usize) -> LawResult {
    let unit = built("unit corepresentation", unit_corep(x, a.top()))?;
    let left = built("η⊗ω = ω", tensor_corep(&unit, a, x))?;
    same_base("η⊗ω = ω", left.base(), a.base())?;
    law("η⊗ω = ω", &left.omega, &a.omega, upto)?;
    let right = built("ω⊗η = ω", tensor_corep(a, &unit, x))?;
    same_base("ω⊗η = ω", right.base(), a.base())?;
    law("ω⊗η = ω", &right.omega, &a.omega, upto)
}
