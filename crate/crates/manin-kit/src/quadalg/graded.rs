use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::exactlin::{factor_permutation, join_index, split_index, Field, Matrix, SparseVec};

use super::{AlgError, Presented};

/// An explicit truncated graded algebra: component dimensions and
/// multiplication matrices `m_{i,j}: C_i⊗C_j → C_{i+j}`.
///
/// `C_0` is one-dimensional and spanned by the unit.
#[derive(Clone, Debug)]
pub struct GradedTruncation {
    field: Field,
    dims: Vec<usize>,
    mult: BTreeMap<(usize, usize), Matrix>,
}

impl GradedTruncation {
    /// Builds and validates a truncation; missing `m_{i,j}` with `i, j ≥ 1`
    /// are an error.
    pub fn new(field: Field, dims: Vec<usize>, mult: BTreeMap<(usize, usize), Matrix>) -> Result<GradedTruncation, AlgError> {
        if dims.first() != Some(&1) {
            return Err(AlgError::Invalid("C_0 must be one-dimensional".into()));
        }
        let top = dims.len() - 1;
        for i in 1..=top {
            for j in 1..=top - i {
                let m = mult.get(&(i, j)).ok_or_else(|| AlgError::Invalid(format!("missing m_{{{i},{j}}}")))?;
                if m.shape() != (dims[i + j], dims[i] * dims[j]) || m.field() != field {
                    return Err(AlgError::Invalid(format!("m_{{{i},{j}}} has the wrong shape or field")));
                }
            }
        }
        let t = GradedTruncation { field, dims, mult };
        t.check_associative()?;
        Ok(t)
    }

    /// Materializes any graded algebra as an explicit table.
    pub fn from_graded(a: &GradedAlgebra) -> GradedTruncation {
        let top = a.top();
        let dims: Vec<usize> = (0..=top).map(|k| a.dim(k)).collect();
        let mut mult = BTreeMap::new();
        for i in 1..=top {
            for j in 1..=top - i {
                let cols: Vec<SparseVec> = (0..dims[i]).flat_map(|x| (0..dims[j]).map(move |y| (x, y))).map(|(x, y)| a.mul_basis(i, x, j, y)).collect();
                mult.insert((i, j), Matrix::from_sparse_cols(a.field(), dims[i + j], &cols));
            }
        }
        GradedTruncation { field: a.field(), dims, mult }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn mult(&self, i: usize, j: usize) -> Option<&Matrix> {
        self.mult.get(&(i, j))
    }

    pub fn mul_basis(&self, i: usize, a: usize, j: usize, b: usize) -> SparseVec {
        if i == 0 {
            return SparseVec::unit(b, self.field.one());
        }
        if j == 0 {
            return SparseVec::unit(a, self.field.one());
        }
        self.mult[&(i, j)].col_sparse(a * self.dims[j] + b)
    }

    fn check_associative(&self) -> Result<(), AlgError> {
        let top = self.top();
        for i in 1..=top {
            for j in 1..=top - i {
                for k in 1..=top - i - j {
                    for a in 0..self.dims[i] {
                        for b in 0..self.dims[j] {
                            for c in 0..self.dims[k] {
                                let ab = self.mul_basis(i, a, j, b);
                                let bc = self.mul_basis(j, b, k, c);
                                let mut l = SparseVec::new();
                                for (x, s) in ab.iter() {
                                    l.add_scaled(&self.mul_basis(i + j, *x, k, c), s);
                                }
                                let mut r = SparseVec::new();
                                for (y, s) in bc.iter() {
                                    r.add_scaled(&self.mul_basis(i, a, j + k, *y), s);
                                }
                                if l != r {
                                    return Err(AlgError::Invalid(format!("multiplication is not associative in degrees ({i},{j},{k})")));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// A truncated graded algebra in one of its concrete forms.
///
/// `White` holds the factors of an iterated white product, flattened, so
/// `(A∘B)∘C` and `A∘(B∘C)` coincide on the nose. Its component `k` is
/// `⊗_t (A_t)_k` with lexicographic indexing and componentwise product.
#[derive(Clone)]
pub enum GradedAlgebra {
    Presented(Arc<Presented>),
    Table(Arc<GradedTruncation>),
    White(Arc<Vec<GradedAlgebra>>),
}

impl fmt::Debug for GradedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradedAlgebra::Presented(p) => write!(f, "Presented({} gens, dims {:?})", p.gens(), p.dims()),
            GradedAlgebra::Table(t) => write!(f, "Table(dims {:?})", t.dims()),
            GradedAlgebra::White(fs) => f.debug_list().entries(fs.iter()).finish(),
        }
    }
}

impl GradedAlgebra {
    /// The white product `a∘b` (componentwise), flattening nested products.
    pub fn white(a: &GradedAlgebra, b: &GradedAlgebra) -> GradedAlgebra {
        GradedAlgebra::white_all(&[a.clone(), b.clone()])
    }

    pub fn white_all(parts: &[GradedAlgebra]) -> GradedAlgebra {
        let mut fs = Vec::new();
        for p in parts {
            match p {
                GradedAlgebra::White(inner) => fs.extend(inner.iter().cloned()),
                other => fs.push(other.clone()),
            }
        }
        if fs.len() == 1 {
            return fs.pop().expect("one factor");
        }
        GradedAlgebra::White(Arc::new(fs))
    }

    /// Flattened white factors (a single factor for a non-product).
    pub fn factors(&self) -> Vec<GradedAlgebra> {
        match self {
            GradedAlgebra::White(fs) => fs.as_ref().clone(),
            other => vec![other.clone()],
        }
    }

    pub fn field(&self) -> Field {
        match self {
            GradedAlgebra::Presented(p) => p.field(),
            GradedAlgebra::Table(t) => t.field(),
            GradedAlgebra::White(fs) => fs[0].field(),
        }
    }

    pub fn top(&self) -> usize {
        match self {
            GradedAlgebra::Presented(p) => p.top(),
            GradedAlgebra::Table(t) => t.top(),
            GradedAlgebra::White(fs) => fs.iter().map(GradedAlgebra::top).min().unwrap_or(0),
        }
    }

    pub fn dim(&self, k: usize) -> usize {
        match self {
            GradedAlgebra::Presented(p) => p.dim(k),
            GradedAlgebra::Table(t) => t.dims()[k],
            GradedAlgebra::White(fs) => fs.iter().map(|f| f.dim(k)).product(),
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.top()).map(|k| self.dim(k)).collect()
    }

    fn factor_dims(&self, k: usize) -> Vec<usize> {
        match self {
            GradedAlgebra::White(fs) => fs.iter().map(|f| f.dim(k)).collect(),
            _ => vec![self.dim(k)],
        }
    }

    /// The unit `1 ∈ C_0`.
    pub fn one(&self) -> SparseVec {
        SparseVec::unit(0, self.field().one())
    }

    pub fn mul_basis(&self, i: usize, a: usize, j: usize, b: usize) -> SparseVec {
        match self {
            GradedAlgebra::Presented(p) => p.mul_basis(i, a, j, b),
            GradedAlgebra::Table(t) => t.mul_basis(i, a, j, b),
            GradedAlgebra::White(fs) => {
                let da: Vec<usize> = fs.iter().map(|f| f.dim(i)).collect();
                let db: Vec<usize> = fs.iter().map(|f| f.dim(j)).collect();
                let (xa, xb) = (split_index(a, &da), split_index(b, &db));
                let mut acc = SparseVec::unit(0, self.field().one());
                for (t, f) in fs.iter().enumerate() {
                    let p = f.mul_basis(i, xa[t], j, xb[t]);
                    if p.is_zero() {
                        return SparseVec::new();
                    }
                    acc = acc.kron(&p, f.dim(i + j));
                }
                acc
            }
        }
    }

    /// Product of homogeneous elements `x ∈ C_i`, `y ∈ C_j`.
    pub fn mul(&self, i: usize, x: &SparseVec, j: usize, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (a, s) in x.iter() {
            for (b, t) in y.iter() {
                out.add_scaled(&self.mul_basis(i, *a, j, *b), &(s * t));
            }
        }
        out
    }

    /// Whether every basis element is a product of degree-1 basis elements
    /// in a way [`GradedAlgebra::split_last`] can recover.
    pub fn is_word_based(&self) -> bool {
        match self {
            GradedAlgebra::Presented(_) => true,
            GradedAlgebra::Table(_) => false,
            GradedAlgebra::White(fs) => fs.iter().all(GradedAlgebra::is_word_based),
        }
    }

    /// For a basis element of degree `k ≥ 1` of a word-based algebra: the
    /// basis element `p ∈ C_{k-1}` and letter `l ∈ C_1` with `b = p·l`.
    pub fn split_last(&self, k: usize, b: usize) -> Option<(usize, usize)> {
        match self {
            GradedAlgebra::Presented(p) => Some(p.split_last(k, b)),
            GradedAlgebra::Table(_) => None,
            GradedAlgebra::White(fs) => {
                let digits = split_index(b, &self.factor_dims(k));
                let mut pre = Vec::with_capacity(fs.len());
                let mut let_ = Vec::with_capacity(fs.len());
                for (f, d) in fs.iter().zip(digits) {
                    let (p, l) = f.split_last(k, d)?;
                    pre.push(p);
                    let_.push(l);
                }
                Some((join_index(&pre, &self.factor_dims(k - 1)), join_index(&let_, &self.factor_dims(1))))
            }
        }
    }

    /// Human-readable name of a basis element.
    pub fn basis_name(&self, k: usize, b: usize) -> String {
        match self {
            GradedAlgebra::Presented(p) => p.monomial_name(k, b),
            GradedAlgebra::Table(_) => format!("c{k}_{b}"),
            GradedAlgebra::White(fs) => {
                let digits = split_index(b, &self.factor_dims(k));
                let parts: Vec<String> = fs.iter().zip(digits).map(|(f, d)| f.basis_name(k, d)).collect();
                format!("({})", parts.join(" ⊗ "))
            }
        }
    }

    /// Formats a vector of `C_k` using basis names.
    pub fn format_vec(&self, k: usize, v: &SparseVec) -> String {
        if v.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = v.iter().map(|(b, c)| if c.is_one() { self.basis_name(k, *b) } else { format!("{c} {}", self.basis_name(k, *b)) }).collect();
        parts.join(" + ")
    }
}

/// Where two maps (or a map and the algebra structure) first disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub degree: usize,
    pub basis: usize,
    pub detail: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "degree {}, basis element {}: {}", self.degree, self.basis, self.detail)
    }
}

/// A graded linear map between truncated graded algebras.
///
/// `Generated` maps are algebra maps fixed by their degree-1 matrix; their
/// degree-`k` part is computed by multiplying images letter by letter, so
/// a map that does not respect relations shows up as a failed law check
/// rather than being silently corrected.
#[derive(Clone)]
pub enum GradedMap {
    Generated(Arc<Generated>),
    White(Arc<WhiteMap>),
    Compose(Arc<Composite>),
    Identity(GradedAlgebra),
    Permute(Arc<Permutation>),
    Degreewise(Arc<Degreewise>),
    Cached(Arc<CachedMap>),
}

pub struct Generated {
    source: GradedAlgebra,
    target: GradedAlgebra,
    deg1: Matrix,
    images: Vec<OnceLock<Vec<SparseVec>>>,
}

pub struct WhiteMap {
    parts: Vec<GradedMap>,
    source: GradedAlgebra,
    target: GradedAlgebra,
}

pub struct Composite {
    /// Applied first to last.
    steps: Vec<GradedMap>,
}

pub struct Permutation {
    blocks: Vec<GradedAlgebra>,
    perm: Vec<usize>,
    source: GradedAlgebra,
    target: GradedAlgebra,
}

pub struct Degreewise {
    source: GradedAlgebra,
    target: GradedAlgebra,
    mats: Vec<Matrix>,
}

pub struct CachedMap {
    inner: GradedMap,
    images: Vec<OnceLock<Vec<SparseVec>>>,
}

impl fmt::Debug for GradedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedMap({:?} -> {:?})", self.source().dims(), self.target().dims())
    }
}

impl GradedMap {
    /// The algebra map with the given degree-1 part (`target.dim(1) × source.dim(1)`).
    pub fn generated(source: GradedAlgebra, target: GradedAlgebra, deg1: Matrix) -> Result<GradedMap, AlgError> {
        if !source.is_word_based() {
            return Err(AlgError::Invalid("a generated map needs a source generated in degree 1".into()));
        }
        if deg1.shape() != (target.dim(1), source.dim(1)) {
            return Err(AlgError::Invalid(format!("degree-1 matrix is {}x{}, expected {}x{}", deg1.rows(), deg1.cols(), target.dim(1), source.dim(1))));
        }
        let top = source.top().min(target.top());
        let images = (0..=top).map(|_| OnceLock::new()).collect();
        Ok(GradedMap::Generated(Arc::new(Generated { source, target, deg1, images })))
    }

    /// `f_1 ∘ f_2 ∘ ...` componentwise on white products.
    pub fn white(parts: Vec<GradedMap>) -> GradedMap {
        let source = GradedAlgebra::white_all(&parts.iter().map(GradedMap::source).collect::<Vec<_>>());
        let target = GradedAlgebra::white_all(&parts.iter().map(GradedMap::target).collect::<Vec<_>>());
        GradedMap::White(Arc::new(WhiteMap { parts, source, target }))
    }

    /// Composite applying `steps[0]` first. Checks that dimensions match.
    pub fn compose(steps: Vec<GradedMap>) -> Result<GradedMap, AlgError> {
        for w in steps.windows(2) {
            let (a, b) = (w[0].target(), w[1].source());
            let top = a.top().min(b.top());
            if (0..=top).any(|k| a.dim(k) != b.dim(k)) {
                return Err(AlgError::Invalid(format!("cannot compose: target dims {:?} vs source dims {:?}", a.dims(), b.dims())));
            }
        }
        if steps.is_empty() {
            return Err(AlgError::Invalid("empty composite".into()));
        }
        let flat: Vec<GradedMap> = steps
            .into_iter()
            .flat_map(|s| match s {
                GradedMap::Compose(c) => c.steps.clone(),
                other => vec![other],
            })
            .collect();
        Ok(GradedMap::Compose(Arc::new(Composite { steps: flat })))
    }

    /// `g · f` (apply `f` first).
    pub fn then(&self, g: &GradedMap) -> Result<GradedMap, AlgError> {
        GradedMap::compose(vec![self.clone(), g.clone()])
    }

    pub fn identity(a: GradedAlgebra) -> GradedMap {
        GradedMap::Identity(a)
    }

    /// Permutes white-product blocks: target block `t` is source block `perm[t]`.
    pub fn permute(blocks: Vec<GradedAlgebra>, perm: Vec<usize>) -> GradedMap {
        let source = GradedAlgebra::white_all(&blocks);
        let target = GradedAlgebra::white_all(&perm.iter().map(|&p| blocks[p].clone()).collect::<Vec<_>>());
        GradedMap::Permute(Arc::new(Permutation { blocks, perm, source, target }))
    }

    /// `σ^{(23)}: A∘B∘C∘D → A∘C∘B∘D` on four blocks.
    pub fn sigma23(a: &GradedAlgebra, b: &GradedAlgebra, c: &GradedAlgebra, d: &GradedAlgebra) -> GradedMap {
        GradedMap::permute(vec![a.clone(), b.clone(), c.clone(), d.clone()], vec![0, 2, 1, 3])
    }

    /// A map given by explicit per-degree matrices.
    pub fn degreewise(source: GradedAlgebra, target: GradedAlgebra, mats: Vec<Matrix>) -> Result<GradedMap, AlgError> {
        for (k, m) in mats.iter().enumerate() {
            if m.shape() != (target.dim(k), source.dim(k)) {
                return Err(AlgError::Invalid(format!("degree-{k} matrix has the wrong shape")));
            }
        }
        Ok(GradedMap::Degreewise(Arc::new(Degreewise { source, target, mats })))
    }

    /// Memoizes all basis images degree by degree.
    pub fn cached(self) -> GradedMap {
        if matches!(self, GradedMap::Generated(_) | GradedMap::Cached(_) | GradedMap::Identity(_)) {
            return self;
        }
        let top = self.top();
        GradedMap::Cached(Arc::new(CachedMap { inner: self, images: (0..=top).map(|_| OnceLock::new()).collect() }))
    }

    pub fn source(&self) -> GradedAlgebra {
        match self {
            GradedMap::Generated(g) => g.source.clone(),
            GradedMap::White(w) => w.source.clone(),
            GradedMap::Compose(c) => c.steps[0].source(),
            GradedMap::Identity(a) => a.clone(),
            GradedMap::Permute(p) => p.source.clone(),
            GradedMap::Degreewise(d) => d.source.clone(),
            GradedMap::Cached(c) => c.inner.source(),
        }
    }

    pub fn target(&self) -> GradedAlgebra {
        match self {
            GradedMap::Generated(g) => g.target.clone(),
            GradedMap::White(w) => w.target.clone(),
            GradedMap::Compose(c) => c.steps.last().expect("nonempty").target(),
            GradedMap::Identity(a) => a.clone(),
            GradedMap::Permute(p) => p.target.clone(),
            GradedMap::Degreewise(d) => d.target.clone(),
            GradedMap::Cached(c) => c.inner.target(),
        }
    }

    /// Highest degree on which the map is defined.
    pub fn top(&self) -> usize {
        match self {
            GradedMap::Generated(g) => g.images.len() - 1,
            GradedMap::White(w) => w.parts.iter().map(GradedMap::top).min().unwrap_or(0),
            GradedMap::Compose(c) => c.steps.iter().map(GradedMap::top).min().unwrap_or(0),
            GradedMap::Identity(a) => a.top(),
            GradedMap::Permute(p) => p.source.top(),
            GradedMap::Degreewise(d) => d.mats.len().saturating_sub(1),
            GradedMap::Cached(c) => c.inner.top(),
        }
    }

    /// The degree-1 matrix.
    pub fn degree1(&self) -> Matrix {
        self.matrix(1)
    }

    /// The degree-`k` part as a dense matrix.
    pub fn matrix(&self, k: usize) -> Matrix {
        let (s, t) = (self.source(), self.target());
        let cols: Vec<SparseVec> = (0..s.dim(k)).map(|b| self.image(k, b)).collect();
        Matrix::from_sparse_cols(s.field(), t.dim(k), &cols)
    }

    /// Image of the `b`-th basis element of the source in degree `k`.
    pub fn image(&self, k: usize, b: usize) -> SparseVec {
        match self {
            GradedMap::Generated(g) => g.images(k)[b].clone(),
            GradedMap::Cached(c) => c.images(k)[b].clone(),
            GradedMap::Identity(a) => SparseVec::unit(b, a.field().one()),
            _ => self.apply(k, &SparseVec::unit(b, self.source().field().one())),
        }
    }

    /// Applies the degree-`k` part to a vector.
    pub fn apply(&self, k: usize, v: &SparseVec) -> SparseVec {
        match self {
            GradedMap::Generated(g) => combine(g.images(k), v),
            GradedMap::Cached(c) => combine(c.images(k), v),
            GradedMap::Identity(_) => v.clone(),
            GradedMap::Compose(c) => c.steps.iter().fold(v.clone(), |acc, s| s.apply(k, &acc)),
            GradedMap::Degreewise(d) => d.mats[k].apply_sparse(v),
            GradedMap::Permute(p) => {
                let dims: Vec<usize> = p.blocks.iter().map(|b| b.dim(k)).collect();
                let map = factor_permutation(&dims, &p.perm);
                v.iter().map(|(i, c)| (map[*i], c.clone())).collect()
            }
            GradedMap::White(w) => {
                let sdims: Vec<usize> = w.parts.iter().map(|p| p.source().dim(k)).collect();
                let tdims: Vec<usize> = w.parts.iter().map(|p| p.target().dim(k)).collect();
                let mut out = SparseVec::new();
                for (i, c) in v.iter() {
                    let digits = split_index(*i, &sdims);
                    let mut acc = SparseVec::unit(0, c.clone());
                    for ((p, d), td) in w.parts.iter().zip(digits).zip(&tdims) {
                        let img = p.image(k, d);
                        if img.is_zero() {
                            acc = SparseVec::new();
                            break;
                        }
                        acc = acc.kron(&img, *td);
                    }
                    for (j, s) in acc.iter() {
                        out.add_term(*j, s);
                    }
                }
                out
            }
        }
    }

    /// Compares two maps on every source basis element up to degree `upto`.
    pub fn agree(&self, other: &GradedMap, upto: usize) -> Result<(), Witness> {
        let (s, s2) = (self.source(), other.source());
        let top = upto.min(self.top()).min(other.top());
        for k in 0..=top {
            if s.dim(k) != s2.dim(k) || self.target().dim(k) != other.target().dim(k) {
                return Err(Witness { degree: k, basis: 0, detail: "maps have different shapes".into() });
            }
            for b in 0..s.dim(k) {
                let (x, y) = (self.image(k, b), other.image(k, b));
                if x != y {
                    let t = self.target();
                    return Err(Witness {
                        degree: k,
                        basis: b,
                        detail: format!("{} ↦ {} vs {}", s.basis_name(k, b), t.format_vec(k, &x), t.format_vec(k, &y)),
                    });
                }
            }
        }
        Ok(())
    }

    /// Checks `f(x·l) = f(x)·f(l)` for basis `x` of degree `< upto` and
    /// letters `l`. For a source generated in degree 1 this is equivalent to
    /// the map being multiplicative up to degree `upto`.
    pub fn check_multiplicative(&self, upto: usize) -> Result<(), Witness> {
        let (s, t) = (self.source(), self.target());
        let top = upto.min(self.top());
        for k in 2..=top {
            for x in 0..s.dim(k - 1) {
                for l in 0..s.dim(1) {
                    let prod = s.mul_basis(k - 1, x, 1, l);
                    let lhs = self.apply(k, &prod);
                    let rhs = t.mul(k - 1, &self.image(k - 1, x), 1, &self.image(1, l));
                    if lhs != rhs {
                        return Err(Witness {
                            degree: k,
                            basis: x,
                            detail: format!(
                                "f({}·{}) = {} but f({})·f({}) = {}",
                                s.basis_name(k - 1, x),
                                s.basis_name(1, l),
                                t.format_vec(k, &lhs),
                                s.basis_name(k - 1, x),
                                s.basis_name(1, l),
                                t.format_vec(k, &rhs)
                            ),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

fn combine(images: &[SparseVec], v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (b, c) in v.iter() {
        out.add_scaled(&images[*b], c);
    }
    out
}

impl Generated {
    fn images(&self, k: usize) -> &Vec<SparseVec> {
        self.images[k].get_or_init(|| {
            let (s, t) = (&self.source, &self.target);
            if k == 0 {
                return vec![t.one()];
            }
            if k == 1 {
                return (0..s.dim(1)).map(|b| self.deg1.col_sparse(b)).collect();
            }
            let prev = self.images(k - 1);
            let first = self.images(1);
            (0..s.dim(k))
                .map(|b| {
                    let (p, l) = s.split_last(k, b).expect("source is word based");
                    t.mul(k - 1, &prev[p], 1, &first[l])
                })
                .collect()
        })
    }
}

impl CachedMap {
    fn images(&self, k: usize) -> &Vec<SparseVec> {
        self.images[k].get_or_init(|| {
            let s = self.inner.source();
            let one = s.field().one();
            (0..s.dim(k)).map(|b| self.inner.apply(k, &SparseVec::unit(b, one.clone()))).collect()
        })
    }
}
