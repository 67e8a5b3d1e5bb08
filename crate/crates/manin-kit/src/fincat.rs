//! Finite categories and exhaustive search for universal morphisms,
//! relative adjoints and internal cohom objects.

use std::fmt::Debug;
use std::hash::Hash;

use crate::exactlin::BudgetExceeded;

/// Largest explicit category (objects, and arrows per hom-set).
pub const EXPLICIT_CAP: usize = 64;
/// Largest thin category; hom-sets have at most one arrow.
pub const THIN_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatError {
    #[error("invalid category: {0}")]
    Invalid(String),
    #[error("invalid functor: {0}")]
    Functor(String),
    #[error("category too large: {0}")]
    TooLarge(String),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// A finite category with objects `0..objects()`.
pub trait Category {
    type Arrow: Clone + Eq + Hash + Debug;

    fn objects(&self) -> usize;
    fn hom(&self, x: usize, y: usize) -> Vec<Self::Arrow>;
    /// `g ∘ f`.
    fn compose(&self, g: &Self::Arrow, f: &Self::Arrow) -> Self::Arrow;
    fn id(&self, x: usize) -> Self::Arrow;
    fn source(&self, f: &Self::Arrow) -> usize;
    fn target(&self, f: &Self::Arrow) -> usize;
    fn object_name(&self, x: usize) -> String {
        x.to_string()
    }
}

/// A strict symmetric monoidal structure on a finite category.
pub trait Monoidal: Category {
    fn tensor(&self, x: usize, y: usize) -> usize;
    fn tensor_arrow(&self, f: &Self::Arrow, g: &Self::Arrow) -> Self::Arrow;
    fn unit(&self) -> usize;
    /// `σ_{X,Y}: X⊗Y → Y⊗X`.
    fn sym(&self, x: usize, y: usize) -> Self::Arrow;
}

/// A functor between finite categories.
pub trait Functor<C: Category, D: Category> {
    fn obj(&self, x: usize) -> usize;
    fn arr(&self, f: &C::Arrow) -> D::Arrow;
}

/// Order in which candidate objects are tried; the first universal one wins.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    #[default]
    Ascending,
    Descending,
}

impl TieBreak {
    fn order(self, n: usize) -> Box<dyn Iterator<Item = usize>> {
        match self {
            TieBreak::Ascending => Box::new(0..n),
            TieBreak::Descending => Box::new((0..n).rev()),
        }
    }
}

/// A preorder: at most one arrow `x → y`, present iff `x ≤ y`.
#[derive(Clone, Debug)]
pub struct ThinCategory {
    n: usize,
    leq: Vec<bool>,
    names: Vec<String>,
    tensor: Option<(Vec<usize>, usize)>,
}

impl ThinCategory {
    /// Builds the reflexive-transitive closure of the given relation.
    pub fn new(n: usize, relations: &[(usize, usize)]) -> Result<ThinCategory, CatError> {
        if n == 0 || n > THIN_CAP {
            return Err(CatError::TooLarge(format!("{n} objects (thin categories allow 1..={THIN_CAP})")));
        }
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
        }
        for &(x, y) in relations {
            if x >= n || y >= n {
                return Err(CatError::Invalid(format!("relation {x} ≤ {y} mentions an unknown object")));
            }
            leq[x * n + y] = true;
        }
        for k in 0..n {
            for x in 0..n {
                if leq[x * n + k] {
                    for y in 0..n {
                        if leq[k * n + y] {
                            leq[x * n + y] = true;
                        }
                    }
                }
            }
        }
        Ok(ThinCategory { n, leq, names: (0..n).map(|i| i.to_string()).collect(), tensor: None })
    }

    /// A preorder given directly by its comparison function.
    pub fn from_fn(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<ThinCategory, CatError> {
        if n == 0 || n > THIN_CAP {
            return Err(CatError::TooLarge(format!("{n} objects (thin categories allow 1..={THIN_CAP})")));
        }
        let table: Vec<bool> = (0..n * n).map(|i| leq(i / n, i % n)).collect();
        for x in 0..n {
            if !table[x * n + x] {
                return Err(CatError::Invalid(format!("{x} ≤ {x} must hold")));
            }
            for y in 0..n {
                for z in 0..n {
                    if table[x * n + y] && table[y * n + z] && !table[x * n + z] {
                        return Err(CatError::Invalid(format!("not transitive at {x} ≤ {y} ≤ {z}")));
                    }
                }
            }
        }
        Ok(ThinCategory { n, leq: table, names: (0..n).map(|i| i.to_string()).collect(), tensor: None })
    }

    /// A monoidal preorder whose laws hold by construction; skips the
    /// O(n³) and O(n⁴) validation passes.
    pub(crate) fn trusted(n: usize, leq: impl Fn(usize, usize) -> bool, tensor: impl Fn(usize, usize) -> usize, unit: usize) -> Result<ThinCategory, CatError> {
        if n == 0 || n > THIN_CAP {
            return Err(CatError::TooLarge(format!("{n} objects (thin categories allow 1..={THIN_CAP})")));
        }
        let leq = (0..n * n).map(|i| leq(i / n, i % n)).collect();
        let table = (0..n * n).map(|i| tensor(i / n, i % n)).collect();
        Ok(ThinCategory { n, leq, names: (0..n).map(|i| i.to_string()).collect(), tensor: Some((table, unit)) })
    }

    pub fn with_names(mut self, names: Vec<String>) -> ThinCategory {
        assert_eq!(names.len(), self.n);
        self.names = names;
        self
    }

    /// Attaches `x⊗y` and the unit, validating monotonicity, strict
    /// associativity and unitality, and symmetry up to isomorphism.
    pub fn with_tensor(mut self, table: Vec<usize>, unit: usize) -> Result<ThinCategory, CatError> {
        let n = self.n;
        if table.len() != n * n || table.iter().any(|&z| z >= n) || unit >= n {
            return Err(CatError::Invalid("tensor table must list an object for every pair".into()));
        }
        let t = |x: usize, y: usize| table[x * n + y];
        for x in 0..n {
            if t(unit, x) != x || t(x, unit) != x {
                return Err(CatError::Invalid(format!("unit law fails at {}", self.names[x])));
            }
            for y in 0..n {
                let (a, b) = (t(x, y), t(y, x));
                if !(self.leq(a, b) && self.leq(b, a)) {
                    return Err(CatError::Invalid(format!("no symmetry {}⊗{} → {}⊗{}", self.names[x], self.names[y], self.names[y], self.names[x])));
                }
                for z in 0..n {
                    if t(t(x, y), z) != t(x, t(y, z)) {
                        return Err(CatError::Invalid("tensor is not strictly associative".into()));
                    }
                }
            }
        }
        for x in 0..n {
            for x2 in 0..n {
                if !self.leq(x, x2) {
                    continue;
                }
                for y in 0..n {
                    for y2 in 0..n {
                        if self.leq(y, y2) && !self.leq(t(x, y), t(x2, y2)) {
                            return Err(CatError::Invalid("tensor is not monotone".into()));
                        }
                    }
                }
            }
        }
        self.tensor = Some((table, unit));
        Ok(self)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }

    pub fn has_tensor(&self) -> bool {
        self.tensor.is_some()
    }
}

impl Category for ThinCategory {
    type Arrow = (usize, usize);

    fn objects(&self) -> usize {
        self.n
    }

    fn hom(&self, x: usize, y: usize) -> Vec<(usize, usize)> {
        if self.leq(x, y) {
            vec![(x, y)]
        } else {
            vec![]
        }
    }

    fn compose(&self, g: &(usize, usize), f: &(usize, usize)) -> (usize, usize) {
        debug_assert_eq!(f.1, g.0);
        (f.0, g.1)
    }

    fn id(&self, x: usize) -> (usize, usize) {
        (x, x)
    }

    fn source(&self, f: &(usize, usize)) -> usize {
        f.0
    }

    fn target(&self, f: &(usize, usize)) -> usize {
        f.1
    }

    fn object_name(&self, x: usize) -> String {
        self.names[x].clone()
    }
}

impl Monoidal for ThinCategory {
    fn tensor(&self, x: usize, y: usize) -> usize {
        let (t, _) = self.tensor.as_ref().expect("no tensor attached");
        t[x * self.n + y]
    }

    fn tensor_arrow(&self, f: &(usize, usize), g: &(usize, usize)) -> (usize, usize) {
        (self.tensor(f.0, g.0), self.tensor(f.1, g.1))
    }

    fn unit(&self) -> usize {
        self.tensor.as_ref().expect("no tensor attached").1
    }

    fn sym(&self, x: usize, y: usize) -> (usize, usize) {
        (self.tensor(x, y), self.tensor(y, x))
    }
}

/// A category given by explicit arrow and composition tables.
#[derive(Clone, Debug)]
pub struct FinCategory {
    names: Vec<String>,
    /// `(source, target, name)` per arrow.
    arrows: Vec<(usize, usize, String)>,
    ids: Vec<usize>,
    /// `comp[g][f] = g∘f` when composable.
    comp: Vec<Vec<Option<usize>>>,
    monoidal: Option<ExplicitTensor>,
}

#[derive(Clone, Debug)]
struct ExplicitTensor {
    objects: Vec<usize>,
    arrows: Vec<Vec<usize>>,
    unit: usize,
    sym: Vec<usize>,
}

impl FinCategory {
    /// `arrows` lists `(source, target, name)`; `ids[x]` is the identity of
    /// `x`; `compose` lists `(g, f, g∘f)` for every composable pair.
    pub fn new(names: Vec<String>, arrows: Vec<(usize, usize, String)>, ids: Vec<usize>, compose: &[(usize, usize, usize)]) -> Result<FinCategory, CatError> {
        let n = names.len();
        if n == 0 || n > EXPLICIT_CAP {
            return Err(CatError::TooLarge(format!("{n} objects (explicit categories allow 1..={EXPLICIT_CAP})")));
        }
        if ids.len() != n {
            return Err(CatError::Invalid("one identity per object".into()));
        }
        let m = arrows.len();
        for (s, t, name) in &arrows {
            if *s >= n || *t >= n {
                return Err(CatError::Invalid(format!("arrow {name} has an unknown endpoint")));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let c = arrows.iter().filter(|a| a.0 == x && a.1 == y).count();
                if c > EXPLICIT_CAP {
                    return Err(CatError::TooLarge(format!("hom({}, {}) has {c} arrows", names[x], names[y])));
                }
            }
        }
        for (x, &i) in ids.iter().enumerate() {
            if i >= m || arrows[i].0 != x || arrows[i].1 != x {
                return Err(CatError::Invalid(format!("identity of {} is not an endomorphism of it", names[x])));
            }
        }
        let mut comp = vec![vec![None; m]; m];
        for &(g, f, h) in compose {
            if g >= m || f >= m || h >= m {
                return Err(CatError::Invalid("composition mentions an unknown arrow".into()));
            }
            if arrows[f].1 != arrows[g].0 || arrows[h].0 != arrows[f].0 || arrows[h].1 != arrows[g].1 {
                return Err(CatError::Invalid(format!("{} ∘ {} = {} has the wrong endpoints", arrows[g].2, arrows[f].2, arrows[h].2)));
            }
            comp[g][f] = Some(h);
        }
        for (f, a) in arrows.iter().enumerate() {
            comp[f][ids[a.0]] = Some(f);
            comp[ids[a.1]][f] = Some(f);
        }
        for g in 0..m {
            for f in 0..m {
                if arrows[f].1 == arrows[g].0 && comp[g][f].is_none() {
                    return Err(CatError::Invalid(format!("missing composite {} ∘ {}", arrows[g].2, arrows[f].2)));
                }
            }
        }
        for h in 0..m {
            for g in 0..m {
                if arrows[g].1 != arrows[h].0 {
                    continue;
                }
                for f in 0..m {
                    if arrows[f].1 != arrows[g].0 {
                        continue;
                    }
                    let hg_f = comp[comp[h][g].expect("checked")][f];
                    let h_gf = comp[h][comp[g][f].expect("checked")];
                    if hg_f != h_gf {
                        return Err(CatError::Invalid(format!("composition is not associative at {}, {}, {}", arrows[h].2, arrows[g].2, arrows[f].2)));
                    }
                }
            }
        }
        Ok(FinCategory { names, arrows, ids, comp, monoidal: None })
    }

    /// Attaches a strict symmetric monoidal structure: object table,
    /// arrow table `f⊗g`, unit and symmetries `σ_{X,Y}` (index `x·n + y`).
    pub fn with_tensor(mut self, objects: Vec<usize>, arrows: Vec<Vec<usize>>, unit: usize, sym: Vec<usize>) -> Result<FinCategory, CatError> {
        let n = self.names.len();
        let m = self.arrows.len();
        if objects.len() != n * n || arrows.len() != m || arrows.iter().any(|r| r.len() != m) || sym.len() != n * n || unit >= n {
            return Err(CatError::Invalid("tensor tables have the wrong size".into()));
        }
        let t = ExplicitTensor { objects, arrows, unit, sym };
        self.monoidal = Some(t);
        let tc = &self;
        for f in 0..m {
            for g in 0..m {
                let fg = tc.tensor_arrow(&f, &g);
                if fg >= m || tc.source(&fg) != tc.tensor(tc.source(&f), tc.source(&g)) || tc.target(&fg) != tc.tensor(tc.target(&f), tc.target(&g)) {
                    return Err(CatError::Invalid(format!("{} ⊗ {} has the wrong endpoints", tc.arrows[f].2, tc.arrows[g].2)));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if tc.tensor_arrow(&tc.id(x), &tc.id(y)) != tc.id(tc.tensor(x, y)) {
                    return Err(CatError::Invalid("tensor does not preserve identities".into()));
                }
                let s = tc.sym(x, y);
                if s >= m || tc.source(&s) != tc.tensor(x, y) || tc.target(&s) != tc.tensor(y, x) {
                    return Err(CatError::Invalid("symmetry has the wrong endpoints".into()));
                }
                if tc.compose(&tc.sym(y, x), &s) != tc.id(tc.tensor(x, y)) {
                    return Err(CatError::Invalid("σ∘σ is not the identity".into()));
                }
                for z in 0..n {
                    if tc.tensor(tc.tensor(x, y), z) != tc.tensor(x, tc.tensor(y, z)) {
                        return Err(CatError::Invalid("tensor is not strictly associative".into()));
                    }
                }
            }
            if tc.tensor(tc.unit(), x) != x || tc.tensor(x, tc.unit()) != x {
                return Err(CatError::Invalid("tensor is not strictly unital".into()));
            }
        }
        for f in 0..m {
            for f2 in 0..m {
                if tc.arrows[f].1 != tc.arrows[f2].0 {
                    continue;
                }
                for g in 0..m {
                    for g2 in 0..m {
                        if tc.arrows[g].1 != tc.arrows[g2].0 {
                            continue;
                        }
                        let lhs = tc.tensor_arrow(&tc.compose(&f2, &f), &tc.compose(&g2, &g));
                        let rhs = tc.compose(&tc.tensor_arrow(&f2, &g2), &tc.tensor_arrow(&f, &g));
                        if lhs != rhs {
                            return Err(CatError::Invalid("tensor is not a bifunctor".into()));
                        }
                    }
                }
                let _ = f2;
            }
            for g in 0..m {
                let (x, y) = (tc.source(&f), tc.source(&g));
                let (x2, y2) = (tc.target(&f), tc.target(&g));
                let lhs = tc.compose(&tc.sym(x2, y2), &tc.tensor_arrow(&f, &g));
                let rhs = tc.compose(&tc.tensor_arrow(&g, &f), &tc.sym(x, y));
                if lhs != rhs {
                    return Err(CatError::Invalid("σ is not natural".into()));
                }
            }
        }
        Ok(self)
    }

    pub fn arrow_name(&self, f: usize) -> &str {
        &self.arrows[f].2
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }
}

impl Category for FinCategory {
    type Arrow = usize;

    fn objects(&self) -> usize {
        self.names.len()
    }

    fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&f| self.arrows[f].0 == x && self.arrows[f].1 == y).collect()
    }

    fn compose(&self, g: &usize, f: &usize) -> usize {
        self.comp[*g][*f].expect("composable arrows")
    }

    fn id(&self, x: usize) -> usize {
        self.ids[x]
    }

    fn source(&self, f: &usize) -> usize {
        self.arrows[*f].0
    }

    fn target(&self, f: &usize) -> usize {
        self.arrows[*f].1
    }

    fn object_name(&self, x: usize) -> String {
        self.names[x].clone()
    }
}

impl Monoidal for FinCategory {
    fn tensor(&self, x: usize, y: usize) -> usize {
        let t = self.monoidal.as_ref().expect("no tensor attached");
        t.objects[x * self.names.len() + y]
    }

    fn tensor_arrow(&self, f: &usize, g: &usize) -> usize {
        self.monoidal.as_ref().expect("no tensor attached").arrows[*f][*g]
    }

    fn unit(&self) -> usize {
        self.monoidal.as_ref().expect("no tensor attached").unit
    }

    fn sym(&self, x: usize, y: usize) -> usize {
        self.monoidal.as_ref().expect("no tensor attached").sym[x * self.names.len() + y]
    }
}

/// The identity functor.
pub struct IdentityFunctor;

impl<C: Category> Functor<C, C> for IdentityFunctor {
    fn obj(&self, x: usize) -> usize {
        x
    }

    fn arr(&self, f: &C::Arrow) -> C::Arrow {
        f.clone()
    }
}

/// `− ⊗ V`.
pub struct TensorRight<'a, M: Monoidal> {
    pub cat: &'a M,
    pub v: usize,
}

impl<M: Monoidal> Functor<M, M> for TensorRight<'_, M> {
    fn obj(&self, x: usize) -> usize {
        self.cat.tensor(x, self.v)
    }

    fn arr(&self, f: &M::Arrow) -> M::Arrow {
        self.cat.tensor_arrow(f, &self.cat.id(self.v))
    }
}

/// A functor between explicit categories given by tables.
pub struct TableFunctor {
    pub objects: Vec<usize>,
    pub arrows: Vec<usize>,
}

impl TableFunctor {
    /// Checks that the tables preserve endpoints, identities and composites.
    pub fn new(c: &FinCategory, d: &FinCategory, objects: Vec<usize>, arrows: Vec<usize>) -> Result<TableFunctor, CatError> {
        if objects.len() != c.objects() || arrows.len() != c.arrow_count() {
            return Err(CatError::Functor("tables do not cover the source category".into()));
        }
        if objects.iter().any(|&y| y >= d.objects()) || arrows.iter().any(|&g| g >= d.arrow_count()) {
            return Err(CatError::Functor("tables mention unknown targets".into()));
        }
        for f in 0..c.arrow_count() {
            let g = arrows[f];
            if d.source(&g) != objects[c.source(&f)] || d.target(&g) != objects[c.target(&f)] {
                return Err(CatError::Functor(format!("arrow {} lands between the wrong objects", c.arrow_name(f))));
            }
        }
        for x in 0..c.objects() {
            if arrows[c.id(x)] != d.id(objects[x]) {
                return Err(CatError::Functor(format!("identity of {} is not preserved", c.object_name(x))));
            }
        }
        for g in 0..c.arrow_count() {
            for f in 0..c.arrow_count() {
                if c.target(&f) == c.source(&g) && arrows[c.compose(&g, &f)] != d.compose(&arrows[g], &arrows[f]) {
                    return Err(CatError::Functor(format!("composite {} ∘ {} is not preserved", c.arrow_name(g), c.arrow_name(f))));
                }
            }
        }
        Ok(TableFunctor { objects, arrows })
    }
}

impl Functor<FinCategory, FinCategory> for TableFunctor {
    fn obj(&self, x: usize) -> usize {
        self.objects[x]
    }

    fn arr(&self, f: &usize) -> usize {
        self.arrows[*f]
    }
}

/// Whether `η: X → G P` is universal from `X` to `G`: for every object `Z`
/// of `D`, `f ↦ Gf·η` is a bijection `Hom(P, Z) → Hom(X, GZ)`.
pub fn is_universal_from_object<C: Category, D: Category, G: Functor<D, C>>(c: &C, d: &D, g: &G, p: usize, eta: &C::Arrow) -> bool {
    let x = c.source(eta);
    for z in 0..d.objects() {
        let targets = c.hom(x, g.obj(z));
        let homs = d.hom(p, z);
        if homs.len() != targets.len() {
            return false;
        }
        let mut images: Vec<C::Arrow> = homs.iter().map(|f| c.compose(&g.arr(f), eta)).collect();
        images.sort_by_key(|a| targets.iter().position(|t| t == a));
        images.dedup();
        if images.len() != targets.len() || !images.iter().all(|a| targets.contains(a)) {
            return false;
        }
    }
    true
}

/// A universal morphism `(P, η: X → GP)` from `X` to `G`, if any.
pub fn universal_from_object<C: Category, D: Category, G: Functor<D, C>>(c: &C, d: &D, g: &G, x: usize, tie: TieBreak) -> Option<(usize, C::Arrow)> {
    for p in tie.order(d.objects()) {
        for eta in c.hom(x, g.obj(p)) {
            if is_universal_from_object(c, d, g, p, &eta) {
                return Some((p, eta));
            }
        }
    }
    None
}

/// A universal morphism `(P, ε: FP → Z)` from `F` to `Z`, if any.
pub fn universal_from_functor_to_object<C: Category, D: Category, F: Functor<C, D>>(c: &C, d: &D, f: &F, z: usize, tie: TieBreak) -> Option<(usize, D::Arrow)> {
    'cand: for p in tie.order(c.objects()) {
        'eps: for eps in d.hom(f.obj(p), z) {
            for x in 0..c.objects() {
                let targets = d.hom(f.obj(x), z);
                let homs = c.hom(x, p);
                if homs.len() != targets.len() {
                    continue 'eps;
                }
                let mut images: Vec<D::Arrow> = homs.iter().map(|h| d.compose(&eps, &f.arr(h))).collect();
                images.sort_by_key(|a| targets.iter().position(|t| t == a));
                images.dedup();
                if images.len() != targets.len() || !images.iter().all(|a| targets.contains(a)) {
                    continue 'eps;
                }
            }
            return Some((p, eps));
        }
        continue 'cand;
    }
    None
}

/// A left adjoint of `G: D → C` relative to the objects `c_prime` of `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeAdjoint<A> {
    pub domain: Vec<usize>,
    /// `F X` per object of `domain`.
    pub objects: Vec<usize>,
    /// The unit `η_X: X → G F X`.
    pub unit: Vec<A>,
}

impl<A: Clone + Eq> RelativeAdjoint<A> {
    fn position(&self, x: usize) -> Option<usize> {
        self.domain.iter().position(|&y| y == x)
    }

    pub fn object(&self, x: usize) -> Option<usize> {
        self.position(x).map(|i| self.objects[i])
    }

    pub fn eta(&self, x: usize) -> Option<&A> {
        self.position(x).map(|i| &self.unit[i])
    }
}

/// Finds `F` with universal units for every object of `c_prime`, or `None`
/// when some object has no universal morphism.
pub fn relative_left_adjoint<C: Category, D: Category, G: Functor<D, C>>(
    c: &C,
    d: &D,
    g: &G,
    c_prime: &[usize],
    tie: TieBreak,
) -> Option<RelativeAdjoint<C::Arrow>> {
    let mut objects = Vec::new();
    let mut unit = Vec::new();
    for &x in c_prime {
        let (p, eta) = universal_from_object(c, d, g, x, tie)?;
        objects.push(p);
        unit.push(eta);
    }
    Some(RelativeAdjoint { domain: c_prime.to_vec(), objects, unit })
}

/// `F a` for an arrow `a: X → X′` of `C′`: the unique `f` with
/// `Gf·η_X = η_{X′}·a`.
pub fn adjoint_arrow<C: Category, D: Category, G: Functor<D, C>>(c: &C, d: &D, g: &G, adj: &RelativeAdjoint<C::Arrow>, a: &C::Arrow) -> Option<D::Arrow> {
    let (x, x2) = (c.source(a), c.target(a));
    let (p, p2) = (adj.object(x)?, adj.object(x2)?);
    let want = c.compose(adj.eta(x2)?, a);
    let eta = adj.eta(x)?;
    let hits: Vec<D::Arrow> = d.hom(p, p2).into_iter().filter(|f| c.compose(&g.arr(f), eta) == want).collect();
    if hits.len() == 1 {
        hits.into_iter().next()
    } else {
        None
    }
}

/// Checks `h ↦ Gh·η_X` is a bijection `Hom(FX, Z) → Hom(X, GZ)` for all
/// `X` in `C′` and all `Z`, and that `η` is natural on arrows of `C′`.
pub fn verify_relative_adjoint<C: Category, D: Category, G: Functor<D, C>>(c: &C, d: &D, g: &G, adj: &RelativeAdjoint<C::Arrow>) -> Result<(), String> {
    for (i, &x) in adj.domain.iter().enumerate() {
        if !is_universal_from_object(c, d, g, adj.objects[i], &adj.unit[i]) {
            return Err(format!("η at {} is not universal", c.object_name(x)));
        }
    }
    for &x in &adj.domain {
        for &x2 in &adj.domain {
            for a in c.hom(x, x2) {
                let fa = adjoint_arrow(c, d, g, adj, &a).ok_or_else(|| format!("no unique F on an arrow {} → {}", c.object_name(x), c.object_name(x2)))?;
                let lhs = c.compose(&g.arr(&fa), adj.eta(x).expect("in domain"));
                let rhs = c.compose(adj.eta(x2).expect("in domain"), &a);
                if lhs != rhs {
                    return Err(format!("η is not natural on an arrow {} → {}", c.object_name(x), c.object_name(x2)));
                }
            }
        }
    }
    Ok(())
}

/// The internal cohom relative to `P`: `cohom(V,W)` with
/// `coev: W → cohom(V,W)⊗V` for `V, W ∈ P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomTable<A> {
    pub params: Vec<usize>,
    /// `entries[i][j] = (cohom(P_i, P_j), coev)`.
    pub entries: Vec<Vec<(usize, A)>>,
}

impl<A: Clone> CohomTable<A> {
    pub fn get(&self, v: usize, w: usize) -> Option<&(usize, A)> {
        let i = self.params.iter().position(|&x| x == v)?;
        let j = self.params.iter().position(|&x| x == w)?;
        Some(&self.entries[i][j])
    }
}

/// Builds the cohom table for `V, W ∈ P` by searching universal morphisms
/// from `W` to `−⊗V`; `None` when some pair has none.
pub fn relative_adjunction_with_parameter<M: Monoidal>(m: &M, params: &[usize], tie: TieBreak) -> Option<CohomTable<M::Arrow>> {
    let mut entries = Vec::with_capacity(params.len());
    for &v in params {
        let g = TensorRight { cat: m, v };
        let adj = relative_left_adjoint(m, m, &g, params, tie)?;
        entries.push(adj.objects.into_iter().zip(adj.unit).collect());
    }
    Some(CohomTable { params: params.to_vec(), entries })
}

/// `cohom(f, g): cohom(V,W) → cohom(V′,W′)` for `f: V′ → V`, `g: W → W′`:
/// the unique `k` with `(k⊗id_V)·coev_{V,W} = (id⊗f)·coev_{V′,W′}·g`.
pub fn cohom_arrow<M: Monoidal>(m: &M, table: &CohomTable<M::Arrow>, f: &M::Arrow, g: &M::Arrow) -> Option<M::Arrow> {
    let (v2, v) = (m.source(f), m.target(f));
    let (w, w2) = (m.source(g), m.target(g));
    let (c, coev) = table.get(v, w)?;
    let (c2, coev2) = table.get(v2, w2)?;
    let want = m.compose(&m.tensor_arrow(&m.id(*c2), f), &m.compose(coev2, g));
    let hits: Vec<M::Arrow> = m.hom(*c, *c2).into_iter().filter(|k| m.compose(&m.tensor_arrow(k, &m.id(v)), coev) == want).collect();
    if hits.len() == 1 {
        hits.into_iter().next()
    } else {
        None
    }
}

/// Bifunctoriality of `cohom` on all composable arrows of `P` and
/// preservation of identities.
pub fn verify_cohom_bifunctor<M: Monoidal>(m: &M, table: &CohomTable<M::Arrow>) -> Result<(), String> {
    let p = &table.params;
    for &v in p {
        for &w in p {
            let c = table.get(v, w).expect("in table").0;
            if cohom_arrow(m, table, &m.id(v), &m.id(w)) != Some(m.id(c)) {
                return Err(format!("cohom(id, id) ≠ id at ({}, {})", m.object_name(v), m.object_name(w)));
            }
        }
    }
    let arrows: Vec<M::Arrow> = p.iter().flat_map(|&x| p.iter().flat_map(move |&y| m.hom(x, y))).collect();
    for f in &arrows {
        for f2 in &arrows {
            if m.source(f) != m.target(f2) {
                continue;
            }
            for g in &arrows {
                for g2 in &arrows {
                    if m.target(g) != m.source(g2) {
                        continue;
                    }
                    let (Some(a), Some(b)) = (cohom_arrow(m, table, f, g), cohom_arrow(m, table, f2, g2)) else {
                        return Err("cohom is undefined on an arrow of P".into());
                    };
                    let composite = cohom_arrow(m, table, &m.compose(f, f2), &m.compose(g2, g));
                    if composite != Some(m.compose(&b, &a)) {
                        return Err("cohom does not preserve composites".into());
                    }
                }
            }
        }
    }
    Ok(())
}

/// The unique isomorphisms `γ_X: F₁X → F₂X` with `Gγ_X·η₁ = η₂` relating
/// two relative left adjoints of the same functor.
pub fn uniqueness_iso<C: Category, D: Category, G: Functor<D, C>>(
    c: &C,
    d: &D,
    g: &G,
    a1: &RelativeAdjoint<C::Arrow>,
    a2: &RelativeAdjoint<C::Arrow>,
) -> Result<Vec<D::Arrow>, CatError> {
    let mut out = Vec::new();
    for (i, &x) in a1.domain.iter().enumerate() {
        let j = a2.position(x).ok_or_else(|| CatError::Invalid(format!("{} is missing from the second adjoint", c.object_name(x))))?;
        let (p1, p2) = (a1.objects[i], a2.objects[j]);
        let hits: Vec<D::Arrow> = d
            .hom(p1, p2)
            .into_iter()
            .filter(|h| c.compose(&g.arr(h), &a1.unit[i]) == a2.unit[j])
            .filter(|h| d.hom(p2, p1).iter().any(|k| d.compose(k, h) == d.id(p1) && d.compose(h, k) == d.id(p2)))
            .collect();
        if hits.len() != 1 {
            return Err(CatError::Internal(format!("{} compatible isomorphisms at {}", hits.len(), c.object_name(x))));
        }
        out.extend(hits);
    }
    Ok(out)
}
