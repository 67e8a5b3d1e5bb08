//! The closed instances: finite-dimensional vector spaces and finite
//! semi-linear sets.
//!
//! `hom(V,W)` has the matrix-unit basis `E_{ij}` (`i` in `W`, `j` in `V`)
//! at index `i·dim V + j`, so a linear map is stored as its row-major
//! coordinate vector.

use crate::exactlin::{all_matrices, check_budget, factor_permutation, permutation_matrix, saturating_pow, sigma23, BudgetExceeded, Field, Matrix};
use crate::laws::{matrix_law, LawFailure, LawResult};

fn mm(a: &Matrix, b: &Matrix) -> Matrix {
    a.mul(b).expect("shapes are fixed by construction")
}

fn kr(a: &Matrix, b: &Matrix) -> Matrix {
    a.kron(b).expect("same field")
}

fn id(f: Field, n: usize) -> Matrix {
    Matrix::identity(f, n)
}

/// `ev: hom(V,W)⊗V → W`.
pub fn ev(f: Field, v: usize, w: usize) -> Matrix {
    let mut m = Matrix::zero(f, w, w * v * v);
    for i in 0..w {
        for j in 0..v {
            m.set(i, (i * v + j) * v + j, f.one());
        }
    }
    m
}

/// Composition `c: hom(V,W)⊗hom(U,V) → hom(U,W)`, `g⊗f ↦ g·f`.
pub fn comp(f: Field, u: usize, v: usize, w: usize) -> Matrix {
    let mut m = Matrix::zero(f, w * u, w * v * v * u);
    for i in 0..w {
        for j in 0..v {
            for l in 0..u {
                m.set(i * u + l, (i * v + j) * (v * u) + j * u + l, f.one());
            }
        }
    }
    m
}

/// `u_V: K → hom(V,V)`, the identity matrix.
pub fn unit(f: Field, v: usize) -> Matrix {
    let mut m = Matrix::zero(f, v * v, 1);
    for i in 0..v {
        m.set(i * v + i, 0, f.one());
    }
    m
}

/// `π: hom(V,W)⊗hom(V′,W′) → hom(V⊗V′, W⊗W′)`, `f⊗g ↦ f⊗g` (Kronecker).
pub fn pi(f: Field, v: usize, w: usize, v2: usize, w2: usize) -> Matrix {
    let mut m = Matrix::zero(f, w * w2 * v * v2, w * v * w2 * v2);
    for i in 0..w {
        for j in 0..v {
            for k in 0..w2 {
                for l in 0..v2 {
                    let row = (i * w2 + k) * (v * v2) + j * v2 + l;
                    let col = (i * v + j) * (w2 * v2) + k * v2 + l;
                    m.set(row, col, f.one());
                }
            }
        }
    }
    m
}

/// `hom(b, a): hom(V,W) → hom(V₂,W₂)` for `b: V₂ → V`, `a: W → W₂`.
pub fn hom_map(b: &Matrix, a: &Matrix) -> Matrix {
    kr(a, &b.transpose())
}

/// The swap `A⊗B → B⊗A`.
pub fn swap(f: Field, a: usize, b: usize) -> Matrix {
    permutation_matrix(f, &factor_permutation(&[a, b], &[1, 0]))
}

/// Row-major coordinates of a matrix as a column.
pub fn vec_of(m: &Matrix) -> Matrix {
    let f = m.field();
    let mut out = Matrix::zero(f, m.rows() * m.cols(), 1);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out.set(i * m.cols() + j, 0, m.get(i, j).clone());
        }
    }
    out
}

/// Inverse of [`vec_of`] for column `c` of `coords`.
pub fn unvec(coords: &Matrix, c: usize, rows: usize, cols: usize) -> Matrix {
    let mut out = Matrix::zero(coords.field(), rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            out.set(i, j, coords.get(i * cols + j, c).clone());
        }
    }
    out
}

/// `θ(f) = ev·(f⊗id_V)` for `f: X → hom(V,W)`.
pub fn theta(f: &Matrix, v: usize) -> Matrix {
    let w = f.rows() / v;
    mm(&ev(f.field(), v, w), &kr(f, &id(f.field(), v)))
}

/// `θ⁻¹(g)` for `g: X⊗V → W`.
pub fn theta_inverse(g: &Matrix, v: usize) -> Matrix {
    let (w, x) = (g.rows(), g.cols() / v);
    let mut out = Matrix::zero(g.field(), w * v, x);
    for i in 0..w {
        for j in 0..v {
            for a in 0..x {
                out.set(i * v + j, a, g.get(i, a * v + j).clone());
            }
        }
    }
    out
}

/// `π` against its defining diagram:
/// `ev·(π⊗id) = (ev⊗ev)·σ^{(23)}` on `hom(V,W)⊗hom(V′,W′)⊗V⊗V′`.
pub fn pi_defining_law(f: Field, v: usize, w: usize, v2: usize, w2: usize) -> LawResult {
    let lhs = mm(&ev(f, v * v2, w * w2), &kr(&pi(f, v, w, v2, w2), &id(f, v * v2)));
    let rhs = mm(&kr(&ev(f, v, w), &ev(f, v2, w2)), &sigma23(f, w * v, w2 * v2, v, v2));
    matrix_law("ev·(π⊗id) = (ev⊗ev)·σ", &lhs, &rhs)
}

/// Naturality of `π` in all four arguments, for `b: V₂ → V`, `a: W → W₂`,
/// `b′: V₂′ → V′`, `a′: W′ → W₂′`.
pub fn pi_naturality_law(b: &Matrix, a: &Matrix, b2: &Matrix, a2: &Matrix) -> LawResult {
    let f = a.field();
    let (v, vv, w, ww) = (b.rows(), b.cols(), a.cols(), a.rows());
    let (v2, vv2, w2, ww2) = (b2.rows(), b2.cols(), a2.cols(), a2.rows());
    let lhs = mm(&pi(f, vv, ww, vv2, ww2), &kr(&hom_map(b, a), &hom_map(b2, a2)));
    let rhs = mm(&hom_map(&kr(b, b2), &kr(a, a2)), &pi(f, v, w, v2, w2));
    matrix_law("π naturality", &lhs, &rhs)
}

/// `c·(π⊗π) = π·(c⊗c)·σ^{(23)}` on
/// `hom(V,W)⊗hom(V′,W′)⊗hom(U,V)⊗hom(U′,V′)`.
pub fn pi_composition_law(f: Field, dims: [usize; 6]) -> LawResult {
    let [u, v, w, u2, v2, w2] = dims;
    let lhs = mm(&comp(f, u * u2, v * v2, w * w2), &kr(&pi(f, v, w, v2, w2), &pi(f, u, v, u2, v2)));
    let rhs = mm(&mm(&pi(f, u, w, u2, w2), &kr(&comp(f, u, v, w), &comp(f, u2, v2, w2))), &sigma23(f, w * v, w2 * v2, v * u, v2 * u2));
    matrix_law("c·(π⊗π) = π·(c⊗c)·σ", &lhs, &rhs)
}

/// `π·(π⊗id) = π·(id⊗π)` for three pairs of spaces.
pub fn pi_associativity_law(f: Field, dims: [usize; 6]) -> LawResult {
    let [v, w, v2, w2, v3, w3] = dims;
    let lhs = mm(&pi(f, v * v2, w * w2, v3, w3), &kr(&pi(f, v, w, v2, w2), &id(f, w3 * v3)));
    let rhs = mm(&pi(f, v, w, v2 * v3, w2 * w3), &kr(&id(f, w * v), &pi(f, v2, w2, v3, w3)));
    matrix_law("π·(π⊗id) = π·(id⊗π)", &lhs, &rhs)
}

/// `π·(id⊗u_K) = id` and `π·(u_K⊗id) = id` on `hom(V,W)`.
pub fn pi_unit_law(f: Field, v: usize, w: usize) -> LawResult {
    let one = id(f, w * v);
    let uk = unit(f, 1);
    matrix_law("π·(id⊗u_K) = id", &mm(&pi(f, v, w, 1, 1), &kr(&one, &uk)), &one)?;
    matrix_law("π·(u_K⊗id) = id", &mm(&pi(f, 1, 1, v, w), &kr(&uk, &one)), &one)
}

/// `π: end(V)⊗end(V′) → end(V⊗V′)` is a monoid morphism.
pub fn pi_monoid_law(f: Field, v: usize, v2: usize) -> LawResult {
    let (e, e2) = (v * v, v2 * v2);
    let lhs = mm(&pi(f, v, v, v2, v2), &mm(&kr(&comp(f, v, v, v), &comp(f, v2, v2, v2)), &sigma23(f, e, e2, e, e2)));
    let rhs = mm(&comp(f, v * v2, v * v2, v * v2), &kr(&pi(f, v, v, v2, v2), &pi(f, v, v, v2, v2)));
    matrix_law("π·μ = c·(π⊗π)", &lhs, &rhs)?;
    let lhs = mm(&pi(f, v, v, v2, v2), &kr(&unit(f, v), &unit(f, v2)));
    matrix_law("π·(u⊗u) = u", &lhs, &unit(f, v * v2))
}

/// `π_{V′,W′,V,W}·σ = hom(σ_{V′,V}, σ_{W,W′})·π_{V,W,V′,W′}`.
pub fn pi_symmetry_law(f: Field, v: usize, w: usize, v2: usize, w2: usize) -> LawResult {
    let lhs = mm(&pi(f, v2, w2, v, w), &swap(f, w * v, w2 * v2));
    let rhs = mm(&hom_map(&swap(f, v2, v), &swap(f, w, w2)), &pi(f, v, w, v2, w2));
    matrix_law("π·σ = hom(σ,σ)·π", &lhs, &rhs)
}

/// `c·(u_W⊗id) = id = c·(id⊗u_V)` on `hom(V,W)`.
pub fn unit_composition_law(f: Field, v: usize, w: usize) -> LawResult {
    let one = id(f, w * v);
    matrix_law("c·(u⊗id) = id", &mm(&comp(f, v, w, w), &kr(&unit(f, w), &one)), &one)?;
    matrix_law("c·(id⊗u) = id", &mm(&comp(f, v, v, w), &kr(&one, &unit(f, v))), &one)
}

/// `c·(c⊗id) = c·(id⊗c)` on `hom(V,W)⊗hom(U,V)⊗hom(T,U)`.
pub fn composition_associativity_law(f: Field, dims: [usize; 4]) -> LawResult {
    let [t, u, v, w] = dims;
    let lhs = mm(&comp(f, t, u, w), &kr(&comp(f, u, v, w), &id(f, u * t)));
    let rhs = mm(&comp(f, t, v, w), &kr(&id(f, w * v), &comp(f, t, u, v)));
    matrix_law("c·(c⊗id) = c·(id⊗c)", &lhs, &rhs)
}

/// An algebra `(X, μ, η)` in `(Vect, ⊗)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VecMonoid {
    pub dim: usize,
    pub mul: Matrix,
    pub unit: Matrix,
}

/// A bialgebra `(X, μ, η, Δ, ε)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VecBimonoid {
    pub monoid: VecMonoid,
    pub comul: Matrix,
    pub counit: Matrix,
}

impl VecMonoid {
    pub fn field(&self) -> Field {
        self.mul.field()
    }

    /// `end(V) = (hom(V,V), c, u)`.
    pub fn end(f: Field, v: usize) -> VecMonoid {
        VecMonoid { dim: v * v, mul: comp(f, v, v, v), unit: unit(f, v) }
    }

    /// The monoid algebra `K[M]` of a finite monoid table.
    pub fn monoid_algebra(f: Field, m: &FiniteMonoid) -> VecMonoid {
        let n = m.size();
        let mut mul = Matrix::zero(f, n, n * n);
        for x in 0..n {
            for y in 0..n {
                mul.set(m.times(x, y), x * n + y, f.one());
            }
        }
        let mut unit = Matrix::zero(f, n, 1);
        unit.set(m.identity(), 0, f.one());
        VecMonoid { dim: n, mul, unit }
    }

    /// `K[t]/(t²)` with basis `1, t`.
    pub fn dual_numbers(f: Field) -> VecMonoid {
        let mul = Matrix::from_ints(f, &[&[1, 0, 0, 0], &[0, 1, 1, 0]]);
        VecMonoid { dim: 2, mul, unit: Matrix::from_ints(f, &[&[1], &[0]]) }
    }

    /// `K×K` with the idempotent basis.
    pub fn diagonal(f: Field) -> VecMonoid {
        let mul = Matrix::from_ints(f, &[&[1, 0, 0, 0], &[0, 0, 0, 1]]);
        VecMonoid { dim: 2, mul, unit: Matrix::from_ints(f, &[&[1], &[1]]) }
    }

    /// The base field `K` with scalar multiplication.
    pub fn trivial(f: Field) -> VecMonoid {
        VecMonoid { dim: 1, mul: id(f, 1), unit: id(f, 1) }
    }

    pub fn check(&self) -> LawResult {
        let f = self.field();
        let n = self.dim;
        if self.mul.shape() != (n, n * n) || self.unit.shape() != (n, 1) {
            return Err(LawFailure::new("monoid shape", 0, 0, "μ must be n×n² and η must be n×1"));
        }
        let (m, e, i) = (&self.mul, &self.unit, id(f, n));
        matrix_law("μ·(μ⊗id) = μ·(id⊗μ)", &mm(m, &kr(m, &i)), &mm(m, &kr(&i, m)))?;
        matrix_law("μ·(η⊗id) = id", &mm(m, &kr(e, &i)), &i)?;
        matrix_law("μ·(id⊗η) = id", &mm(m, &kr(&i, e)), &i)
    }
}

impl VecBimonoid {
    /// `K[M]` with group-like comultiplication `Δ(x) = x⊗x`, `ε(x) = 1`.
    pub fn monoid_bialgebra(f: Field, m: &FiniteMonoid) -> VecBimonoid {
        let monoid = VecMonoid::monoid_algebra(f, m);
        let n = m.size();
        let mut comul = Matrix::zero(f, n * n, n);
        for x in 0..n {
            comul.set(x * n + x, x, f.one());
        }
        let counit = Matrix::from_rows(f, vec![vec![f.one(); n]]).expect("one row");
        VecBimonoid { monoid, comul, counit }
    }

    pub fn trivial(f: Field) -> VecBimonoid {
        VecBimonoid { monoid: VecMonoid::trivial(f), comul: id(f, 1), counit: id(f, 1) }
    }

    pub fn dim(&self) -> usize {
        self.monoid.dim
    }

    pub fn field(&self) -> Field {
        self.monoid.field()
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        mm(&swap(self.field(), n, n), &self.comul) == self.comul
    }

    pub fn check(&self) -> LawResult {
        self.monoid.check()?;
        let f = self.field();
        let n = self.dim();
        if self.comul.shape() != (n * n, n) || self.counit.shape() != (1, n) {
            return Err(LawFailure::new("comonoid shape", 0, 0, "Δ must be n²×n and ε must be 1×n"));
        }
        let (d, e, i) = (&self.comul, &self.counit, id(f, n));
        let (m, u) = (&self.monoid.mul, &self.monoid.unit);
        matrix_law("(Δ⊗id)·Δ = (id⊗Δ)·Δ", &mm(&kr(d, &i), d), &mm(&kr(&i, d), d))?;
        matrix_law("(ε⊗id)·Δ = id", &mm(&kr(e, &i), d), &i)?;
        matrix_law("(id⊗ε)·Δ = id", &mm(&kr(&i, e), d), &i)?;
        let rhs = mm(&kr(m, m), &mm(&sigma23(f, n, n, n, n), &kr(d, d)));
        matrix_law("Δ·μ = (μ⊗μ)·σ·(Δ⊗Δ)", &mm(d, m), &rhs)?;
        matrix_law("ε·μ = ε⊗ε", &mm(e, m), &kr(e, e))?;
        matrix_law("Δ·η = η⊗η", &mm(d, u), &kr(u, u))?;
        matrix_law("ε·η = 1", &mm(e, u), &id(f, 1))
    }
}

/// Checks the representation squares `c·(ρ⊗ρ) = ρ·μ` and `ρ·η = u`.
pub fn rep_check(rho: &Matrix, x: &VecMonoid, v: usize) -> LawResult {
    let f = x.field();
    if rho.shape() != (v * v, x.dim) {
        return Err(LawFailure::new("representation shape", 0, 0, format!("ρ must be {}x{}", v * v, x.dim)));
    }
    matrix_law("c·(ρ⊗ρ) = ρ·μ", &mm(&comp(f, v, v, v), &kr(rho, rho)), &mm(rho, &x.mul))?;
    matrix_law("ρ·η = u", &mm(rho, &x.unit), &unit(f, v))
}

/// Checks the action squares `a·(μ⊗id) = a·(id⊗a)` and `a·(η⊗id) = id`.
pub fn action_check(a: &Matrix, x: &VecMonoid, v: usize) -> LawResult {
    let f = x.field();
    if a.shape() != (v, x.dim * v) {
        return Err(LawFailure::new("action shape", 0, 0, format!("a must be {}x{}", v, x.dim * v)));
    }
    let i = id(f, v);
    matrix_law("a·(μ⊗id) = a·(id⊗a)", &mm(a, &kr(&x.mul, &i)), &mm(a, &kr(&id(f, x.dim), a)))?;
    matrix_law("a·(η⊗id) = id", &mm(a, &kr(&x.unit, &i)), &i)
}

pub fn action_from_rep(rho: &Matrix, v: usize) -> Matrix {
    theta(rho, v)
}

pub fn rep_from_action(a: &Matrix, v: usize) -> Matrix {
    theta_inverse(a, v)
}

/// `f: V → W` intertwines `ρ` (on `V`) and `ρ′` (on `W`).
pub fn rep_morphism_check(f: &Matrix, rho: &Matrix, rho2: &Matrix) -> LawResult {
    let k = f.field();
    let (w, v) = f.shape();
    let lhs = mm(&hom_map(&id(k, v), f), rho);
    let rhs = mm(&hom_map(f, &id(k, w)), rho2);
    matrix_law("hom(V,f)·ρ = hom(f,W)·ρ′", &lhs, &rhs)
}

/// `ρ″ = π·(ρ⊗ρ′)·Δ` on `V⊗V′`.
pub fn tensor_rep(rho: &Matrix, v: usize, rho2: &Matrix, v2: usize, b: &VecBimonoid) -> Matrix {
    mm(&mm(&pi(b.field(), v, v, v2, v2), &kr(rho, rho2)), &b.comul)
}

/// The action of a tensor product computed as `(a⊗a′)·σ^{(23)}·(Δ⊗id)`.
pub fn tensor_action(a: &Matrix, v: usize, a2: &Matrix, v2: usize, b: &VecBimonoid) -> Matrix {
    let f = b.field();
    let n = b.dim();
    mm(&mm(&kr(a, a2), &sigma23(f, n, v, n, v2)), &kr(&b.comul, &id(f, v * v2)))
}

/// The counit as a representation on `K`.
pub fn unit_rep(b: &VecBimonoid) -> Matrix {
    b.counit.clone()
}

/// Counts of representations and actions found by exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepActionCount {
    pub reps: u64,
    pub actions: u64,
    /// `θ` maps every representation to an action and back.
    pub bijective: bool,
}

/// Enumerates every `ρ: X → end(V)` and every `a: X⊗V → V`.
pub fn count_reps_and_actions(x: &VecMonoid, v: usize, budget: u64) -> Result<RepActionCount, BudgetExceeded> {
    let f = x.field();
    let n = x.dim;
    let mut reps = 0;
    let mut bijective = true;
    for rho in all_matrices(f, v * v, n, budget)? {
        if rep_check(&rho, x, v).is_ok() {
            reps += 1;
            let a = action_from_rep(&rho, v);
            bijective &= action_check(&a, x, v).is_ok() && rep_from_action(&a, v) == rho;
        }
    }
    let mut actions = 0;
    for a in all_matrices(f, v, n * v, budget)? {
        if action_check(&a, x, v).is_ok() {
            actions += 1;
            bijective &= rep_check(&rep_from_action(&a, v), x, v).is_ok();
        }
    }
    Ok(RepActionCount { reps, actions, bijective: bijective && reps == actions })
}

/// A finite monoid given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMonoid {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteMonoid {
    /// Validates associativity and finds the identity.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteMonoid, String> {
        let n = names.len();
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&z| z >= n)) {
            return Err("multiplication table must be a square table of element indices".into());
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if table[table[x][y]][z] != table[x][table[y][z]] {
                        return Err(format!("not associative at ({}, {}, {})", names[x], names[y], names[z]));
                    }
                }
            }
        }
        let identity = (0..n).find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x)).ok_or_else(|| "the table has no identity element".to_string())?;
        Ok(FiniteMonoid { names, table, identity })
    }

    /// `Z/n` written additively with elements `0..n`.
    pub fn cyclic(n: usize) -> FiniteMonoid {
        let names = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect();
        FiniteMonoid::new(names, table).expect("cyclic groups are monoids")
    }

    /// `{1, 0}` under multiplication.
    pub fn one_zero() -> FiniteMonoid {
        FiniteMonoid::new(vec!["1".into(), "0".into()], vec![vec![0, 1], vec![1, 1]]).expect("{1,0} is a monoid")
    }

    pub fn trivial() -> FiniteMonoid {
        FiniteMonoid::new(vec!["e".into()], vec![vec![0]]).expect("one element")
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn times(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// The semi-linear monoid `M×K`.
    pub fn semi_linear(&self, f: Field) -> (SemiLinearSet, SemiLinearMap, SemiLinearMap) {
        let n = self.size();
        let s = SemiLinearSet::new(f, n, 1);
        let ss = s.tensor(&s);
        let mul =
            SemiLinearMap::new(ss.clone(), s.clone(), (0..n * n).map(|p| self.times(p / n, p % n)).collect(), vec![id(f, 1); n * n]).expect("shapes match");
        let unit = SemiLinearMap::new(SemiLinearSet::unit(f), s, vec![self.identity], vec![id(f, 1)]).expect("shapes match");
        (ss, mul, unit)
    }
}

/// `X×V` with `X` a finite set of points and `V = K^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiLinearSet {
    pub field: Field,
    pub points: usize,
    pub dim: usize,
}

/// `(φ, (f_x))`: a point map and a linear map `V → W` per point of `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiLinearMap {
    pub source: SemiLinearSet,
    pub target: SemiLinearSet,
    pub phi: Vec<usize>,
    pub maps: Vec<Matrix>,
}

impl SemiLinearSet {
    pub fn new(field: Field, points: usize, dim: usize) -> SemiLinearSet {
        SemiLinearSet { field, points, dim }
    }

    /// The unit `{0}×K`.
    pub fn unit(field: Field) -> SemiLinearSet {
        SemiLinearSet::new(field, 1, 1)
    }

    /// `(X×V)⊗(Y×W) = (X×Y)×(V⊗W)`, points indexed `x·|Y| + y`.
    pub fn tensor(&self, other: &SemiLinearSet) -> SemiLinearSet {
        SemiLinearSet::new(self.field, self.points * other.points, self.dim * other.dim)
    }

    /// The internal hom `Y^X × hom(V,W)^X` and its evaluation map.
    ///
    /// Point maps `φ` are indexed as mixed-radix numbers with digits
    /// `φ(0), φ(1), ...`; the linear part at point `x` occupies coordinates
    /// `x·dim W·dim V ..` in matrix-unit order.
    pub fn hom(&self, other: &SemiLinearSet) -> (SemiLinearSet, SemiLinearMap) {
        let f = self.field;
        let (nx, ny) = (self.points, other.points);
        let (v, w) = (self.dim, other.dim);
        let maps_count = ny.checked_pow(nx as u32).expect("point-map count overflows");
        let hom = SemiLinearSet::new(f, maps_count, nx * w * v);
        let src = hom.tensor(self);
        let mut phi = Vec::with_capacity(src.points);
        let mut maps = Vec::with_capacity(src.points);
        for p in 0..maps_count {
            let digits = crate::exactlin::split_index(p, &vec![ny; nx]);
            for (x, &d) in digits.iter().enumerate() {
                phi.push(d);
                let mut m = Matrix::zero(f, w, nx * w * v * v);
                for i in 0..w {
                    for j in 0..v {
                        m.set(i, ((x * w + i) * v + j) * v + j, f.one());
                    }
                }
                maps.push(m);
            }
        }
        let ev = SemiLinearMap::new(src, other.clone(), phi, maps).expect("evaluation is well formed");
        (hom, ev)
    }
}

impl SemiLinearMap {
    pub fn new(source: SemiLinearSet, target: SemiLinearSet, phi: Vec<usize>, maps: Vec<Matrix>) -> Result<SemiLinearMap, String> {
        if phi.len() != source.points || maps.len() != source.points {
            return Err("one point image and one matrix per source point".into());
        }
        if phi.iter().any(|&y| y >= target.points) {
            return Err("point image out of range".into());
        }
        if maps.iter().any(|m| m.shape() != (target.dim, source.dim)) {
            return Err("linear parts have the wrong shape".into());
        }
        Ok(SemiLinearMap { source, target, phi, maps })
    }

    pub fn identity(s: &SemiLinearSet) -> SemiLinearMap {
        SemiLinearMap { source: s.clone(), target: s.clone(), phi: (0..s.points).collect(), maps: vec![id(s.field, s.dim); s.points] }
    }

    /// `self · g` (apply `g` first): `(ψφ, g_{φ(x)} f_x)`.
    pub fn after(&self, g: &SemiLinearMap) -> SemiLinearMap {
        let phi = g.phi.iter().map(|&y| self.phi[y]).collect();
        let maps = g.phi.iter().zip(&g.maps).map(|(&y, m)| mm(&self.maps[y], m)).collect();
        SemiLinearMap { source: g.source.clone(), target: self.target.clone(), phi, maps }
    }

    /// `(φ×φ′, f_x⊗f′_{x′})`.
    pub fn tensor(&self, other: &SemiLinearMap) -> SemiLinearMap {
        let (n2, t2) = (other.source.points, other.target.points);
        let mut phi = Vec::new();
        let mut maps = Vec::new();
        for x in 0..self.source.points {
            for x2 in 0..n2 {
                phi.push(self.phi[x] * t2 + other.phi[x2]);
                maps.push(kr(&self.maps[x], &other.maps[x2]));
            }
        }
        SemiLinearMap { source: self.source.tensor(&other.source), target: self.target.tensor(&other.target), phi, maps }
    }

    /// The first point where two maps differ.
    pub fn compare(&self, other: &SemiLinearMap, name: &str) -> LawResult {
        for x in 0..self.source.points.min(other.source.points) {
            if self.phi[x] != other.phi[x] {
                return Err(LawFailure::new(name, 0, x, format!("point {x} goes to {} vs {}", self.phi[x], other.phi[x])));
            }
            if self.maps[x] != other.maps[x] {
                return Err(LawFailure::new(name, 0, x, format!("linear parts at point {x} differ")));
            }
        }
        if self.source != other.source || self.target != other.target {
            return Err(LawFailure::new(name, 0, 0, "maps have different shapes"));
        }
        Ok(())
    }
}

/// `end({0}×V)` as a semi-linear monoid `(hom, c, u)`.
pub fn semi_linear_end(f: Field, v: usize) -> (SemiLinearSet, SemiLinearMap, SemiLinearMap) {
    let e = SemiLinearSet::new(f, 1, v * v);
    let c = SemiLinearMap::new(e.tensor(&e), e.clone(), vec![0], vec![comp(f, v, v, v)]).expect("shapes match");
    let u = SemiLinearMap::new(SemiLinearSet::unit(f), e.clone(), vec![0], vec![unit(f, v)]).expect("shapes match");
    (e, c, u)
}

/// Result of the universal-property search for `hom`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomUniversality {
    /// Number of maps `Z → hom(A,B)`.
    pub candidates: u64,
    /// Number of distinct maps `Z⊗A → B` reached via `h ↦ ev·(h⊗id)`.
    pub images: u64,
    /// Number of all maps `Z⊗A → B`.
    pub targets: u128,
}

impl HomUniversality {
    pub fn is_bijection(&self) -> bool {
        self.candidates as u128 == self.targets && self.images == self.candidates
    }
}

fn all_semi_linear(s: &SemiLinearSet, t: &SemiLinearSet, budget: u64) -> Result<Vec<SemiLinearMap>, BudgetExceeded> {
    let f = s.field;
    let elems = f.elements().ok_or(BudgetExceeded { needed: u128::MAX, budget })?.len() as u128;
    let per_point = (t.points as u128).saturating_mul(saturating_pow(elems, t.dim * s.dim));
    check_budget(saturating_pow(per_point, s.points), budget)?;
    let mats: Vec<Matrix> = all_matrices(f, t.dim, s.dim, budget)?.collect();
    let choices: Vec<(usize, usize)> = (0..t.points).flat_map(|y| (0..mats.len()).map(move |m| (y, m))).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; s.points];
    loop {
        let phi = idx.iter().map(|&i| choices[i].0).collect();
        let maps = idx.iter().map(|&i| mats[choices[i].1].clone()).collect();
        out.push(SemiLinearMap { source: s.clone(), target: t.clone(), phi, maps });
        let mut pos = s.points;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < choices.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Exhaustively checks that `h ↦ ev·(h⊗id_A)` is a bijection
/// `Hom(Z, hom(A,B)) → Hom(Z⊗A, B)` over a finite field.
pub fn hom_universality(z: &SemiLinearSet, a: &SemiLinearSet, b: &SemiLinearSet, budget: u64) -> Result<HomUniversality, BudgetExceeded> {
    let (hom, ev) = a.hom(b);
    let za = z.tensor(a);
    let elems = z.field.elements().ok_or(BudgetExceeded { needed: u128::MAX, budget })?.len() as u128;
    let per_point = (b.points as u128).saturating_mul(saturating_pow(elems, b.dim * za.dim));
    let targets = saturating_pow(per_point, za.points);
    let id_a = SemiLinearMap::identity(a);
    let mut seen = std::collections::HashSet::new();
    let hs = all_semi_linear(z, &hom, budget)?;
    for h in &hs {
        let g = ev.after(&h.tensor(&id_a));
        seen.insert((g.phi, g.maps));
    }
    Ok(HomUniversality { candidates: hs.len() as u64, images: seen.len() as u64, targets })
}

/// Checks that `(0, ρ_x): M×K → end({0}×V)` is a morphism of semi-linear
/// monoids.
pub fn semi_linear_monoid_morphism_check(m: &FiniteMonoid, rho: &[Matrix], v: usize) -> LawResult {
    let f = rho[0].field();
    let (_, mul, unit_m) = m.semi_linear(f);
    let (e, c, u) = semi_linear_end(f, v);
    let big = SemiLinearMap::new(SemiLinearSet::new(f, m.size(), 1), e, vec![0; m.size()], rho.iter().map(vec_of).collect())
        .map_err(|err| LawFailure::new("semi-linear map", 0, 0, err))?;
    big.after(&mul).compare(&c.after(&big.tensor(&big)), "F·μ = c·(F⊗F)")?;
    big.after(&unit_m).compare(&u, "F·η = u")
}

/// Checks that `ρ: M → End(V)` is a monoid homomorphism.
pub fn monoid_hom_check(m: &FiniteMonoid, rho: &[Matrix]) -> LawResult {
    let f = rho[0].field();
    let v = rho[0].rows();
    assert!(rho.iter().all(|r| r.shape() == (v, v)), "every action must be a {v}x{v} matrix");
    if rho[m.identity()] != id(f, v) {
        return Err(LawFailure::new("ρ(e) = id", 0, m.identity(), format!("ρ({}) is not the identity", m.names()[m.identity()])));
    }
    let n = m.size();
    for x in 0..n {
        for y in 0..n {
            if rho[m.times(x, y)] != mm(&rho[x], &rho[y]) {
                return Err(LawFailure::new("ρ(xy) = ρ(x)ρ(y)", 0, x * n + y, format!("at ({}, {})", m.names()[x], m.names()[y])));
            }
        }
    }
    Ok(())
}

/// Runs both sides of the bridge between monoid representations and
/// semi-linear representations; the outcomes must agree.
pub fn monoid_rep_bridge(m: &FiniteMonoid, rho: &[Matrix]) -> (LawResult, LawResult) {
    let v = rho[0].rows();
    (monoid_hom_check(m, rho), semi_linear_monoid_morphism_check(m, rho, v))
}

/// The linear representation of `K[M]` induced by `ρ`.
pub fn linearize(rho: &[Matrix]) -> Matrix {
    let f = rho[0].field();
    let v = rho[0].rows();
    assert!(rho.iter().all(|r| r.shape() == (v, v)), "every action must be a {v}x{v} matrix");
    let mut out = Matrix::zero(f, v * v, rho.len());
    for (x, r) in rho.iter().enumerate() {
        let col = vec_of(r);
        for i in 0..v * v {
            out.set(i, x, col.get(i, 0).clone());
        }
    }
    out
}

/// Every π law, `cAss` and the defining diagram for all dims in
/// `1..=max_dim`, plus naturality on all matrix units.
pub fn pi_law_suite(f: Field, max_dim: usize) -> Vec<(String, LawResult)> {
    let ds: Vec<usize> = (1..=max_dim).collect();
    let mut out = Vec::new();
    let tuple = |n: usize| -> Vec<Vec<usize>> {
        let mut acc = vec![vec![]];
        for _ in 0..n {
            acc = acc.into_iter().flat_map(|p: Vec<usize>| ds.iter().map(move |&d| [p.clone(), vec![d]].concat())).collect();
        }
        acc
    };
    let fmt = |d: &[usize]| d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    for d in tuple(4) {
        let [v, w, v2, w2] = [d[0], d[1], d[2], d[3]];
        out.push((format!("defining diagram ({})", fmt(&d)), pi_defining_law(f, v, w, v2, w2)));
        out.push((format!("σ-compatibility ({})", fmt(&d)), pi_symmetry_law(f, v, w, v2, w2)));
        out.push((format!("c associativity ({})", fmt(&d)), composition_associativity_law(f, [v, w, v2, w2])));
        let mut nat = Ok(());
        'outer: for b in units(f, v, v2) {
            for a in units(f, w2, w) {
                for b2 in units(f, v2, v) {
                    for a2 in units(f, w, w2) {
                        nat = pi_naturality_law(&b, &a, &b2, &a2);
                        if nat.is_err() {
                            break 'outer;
                        }
                    }
                }
            }
        }
        out.push((format!("naturality ({})", fmt(&d)), nat));
    }
    for d in tuple(6) {
        out.push((format!("c-compatibility ({})", fmt(&d)), pi_composition_law(f, [d[0], d[1], d[2], d[3], d[4], d[5]])));
        out.push((format!("associativity ({})", fmt(&d)), pi_associativity_law(f, [d[0], d[1], d[2], d[3], d[4], d[5]])));
    }
    for d in tuple(2) {
        out.push((format!("unit degeneration ({})", fmt(&d)), pi_unit_law(f, d[0], d[1])));
        out.push((format!("monoid morphism ({})", fmt(&d)), pi_monoid_law(f, d[0], d[1])));
        out.push((format!("unit-composition ({})", fmt(&d)), unit_composition_law(f, d[0], d[1])));
    }
    out
}

/// Matrix units of shape `rows × cols`.
fn units(f: Field, rows: usize, cols: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            let mut m = Matrix::zero(f, rows, cols);
            m.set(i, j, f.one());
            out.push(m);
        }
    }
    out
}
