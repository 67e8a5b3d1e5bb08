use crate::exactlin::{Field, Matrix, Scalar, SparseVec, Subspace};

use super::AlgError;

#[derive(Clone, Copy, Debug)]
enum Slot {
    Basis(usize),
    Pivot(usize),
}

#[derive(Debug)]
struct Component {
    /// Word indices (base `n`, most significant letter first) of the normal monomials.
    basis: Vec<usize>,
    slots: Vec<Slot>,
    /// Normal forms of the pivot monomials, indexed by ideal row.
    pivot_forms: Vec<SparseVec>,
    ideal: Subspace,
}

/// A degreewise truncation of `T(V)/(I)` for a homogeneous ideal `I`
/// generated in degrees `≥ 2`.
///
/// Component `C_k` has as basis the monomials outside the pivot set of the
/// RREF of `I_k`, in lexicographic order. That set is closed under taking
/// prefixes and suffixes, which is what lets algebra maps be extended from
/// degree 1 one letter at a time.
#[derive(Debug)]
pub struct Presented {
    field: Field,
    labels: Vec<String>,
    top: usize,
    comps: Vec<Component>,
}

fn pow(n: usize, k: usize) -> usize {
    n.checked_pow(k as u32).expect("tensor power overflows usize")
}

impl Presented {
    /// Truncates `T(V)/(generators)` at degree `top`.
    ///
    /// `generators` lists `(degree, vector in V^⊗degree)`; degrees above
    /// `top` are ignored.
    pub fn new(field: Field, labels: Vec<String>, generators: &[(usize, Vec<Scalar>)], top: usize) -> Result<Presented, AlgError> {
        let n = labels.len();
        for (d, v) in generators {
            if *d < 2 {
                return Err(AlgError::Invalid("ideal generators must have degree at least 2".into()));
            }
            if *d <= top && v.len() != pow(n, *d) {
                return Err(AlgError::Invalid(format!("generator of degree {d} has length {}", v.len())));
            }
        }
        let mut comps: Vec<Component> = Vec::with_capacity(top + 1);
        for k in 0..=top {
            let dim = pow(n, k);
            let ideal = if k < 2 {
                Subspace::zero(field, dim)
            } else {
                let prev = &comps[k - 1].ideal;
                let mut rows: Vec<Vec<Scalar>> = Vec::new();
                let sub = pow(n, k - 1);
                for r in prev.basis().row_iter() {
                    for x in 0..n {
                        // r ⊗ e_x and e_x ⊗ r
                        let mut a = vec![field.zero(); dim];
                        let mut b = vec![field.zero(); dim];
                        for (w, c) in r.iter().enumerate() {
                            if !c.is_zero() {
                                a[w * n + x] = c.clone();
                                b[x * sub + w] = c.clone();
                            }
                        }
                        rows.push(a);
                        rows.push(b);
                    }
                }
                for (d, v) in generators {
                    if *d == k {
                        rows.push(v.clone());
                    }
                }
                if rows.is_empty() {
                    Subspace::zero(field, dim)
                } else {
                    Subspace::span(field, dim, rows)?
                }
            };
            comps.push(Component::build(ideal));
        }
        Ok(Presented { field, labels, top, comps })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn gens(&self) -> usize {
        self.labels.len()
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn dim(&self, k: usize) -> usize {
        self.comps[k].basis.len()
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.top).map(|k| self.dim(k)).collect()
    }

    /// The ideal component `I_k ⊆ V^⊗k`.
    pub fn ideal(&self, k: usize) -> &Subspace {
        &self.comps[k].ideal
    }

    /// Word index of the `b`-th basis monomial of degree `k`.
    pub fn basis_word(&self, k: usize, b: usize) -> usize {
        self.comps[k].basis[b]
    }

    /// Letters of a word index of length `k`.
    pub fn letters(&self, k: usize, mut w: usize) -> Vec<usize> {
        let n = self.gens();
        let mut out = vec![0; k];
        for i in (0..k).rev() {
            out[i] = w % n;
            w /= n;
        }
        out
    }

    pub fn monomial_name(&self, k: usize, b: usize) -> String {
        if k == 0 {
            return "1".into();
        }
        let w = self.basis_word(k, b);
        self.letters(k, w).iter().map(|&x| self.labels[x].as_str()).collect::<Vec<_>>().join("*")
    }

    /// Normal form of an arbitrary monomial (given by word index) in `C_k`.
    pub fn reduce_word(&self, k: usize, w: usize) -> SparseVec {
        let c = &self.comps[k];
        match c.slots[w] {
            Slot::Basis(b) => SparseVec::unit(b, self.field.one()),
            Slot::Pivot(r) => c.pivot_forms[r].clone(),
        }
    }

    /// Normal form of a vector of `V^⊗k`.
    pub fn reduce(&self, k: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (w, c) in v.iter() {
            out.add_scaled(&self.reduce_word(k, *w), c);
        }
        out
    }

    /// The product of basis monomials `a ∈ C_i` and `b ∈ C_j`.
    pub fn mul_basis(&self, i: usize, a: usize, j: usize, b: usize) -> SparseVec {
        let w = self.basis_word(i, a) * pow(self.gens(), j) + self.basis_word(j, b);
        self.reduce_word(i + j, w)
    }

    /// For a basis monomial of degree `k ≥ 1`: its prefix position in
    /// `C_{k-1}` and its last letter.
    pub fn split_last(&self, k: usize, b: usize) -> (usize, usize) {
        let n = self.gens();
        let w = self.basis_word(k, b);
        match self.comps[k - 1].slots[w / n] {
            Slot::Basis(p) => (p, w % n),
            Slot::Pivot(_) => unreachable!("normal monomials are prefix closed"),
        }
    }

    /// The multiplication map `C_i ⊗ C_j → C_{i+j}` as a matrix.
    pub fn mult_matrix(&self, i: usize, j: usize) -> Matrix {
        let (di, dj) = (self.dim(i), self.dim(j));
        let cols: Vec<SparseVec> = (0..di).flat_map(|a| (0..dj).map(move |b| (a, b))).map(|(a, b)| self.mul_basis(i, a, j, b)).collect();
        Matrix::from_sparse_cols(self.field, self.dim(i + j), &cols)
    }
}

impl Component {
    fn build(ideal: Subspace) -> Component {
        let total = ideal.ambient_dim();
        let mut slots = vec![Slot::Basis(0); total];
        let basis = ideal.complement_coords();
        for (b, &w) in basis.iter().enumerate() {
            slots[w] = Slot::Basis(b);
        }
        let mut pivot_forms = Vec::with_capacity(ideal.dim());
        for (r, &p) in ideal.pivots().iter().enumerate() {
            slots[p] = Slot::Pivot(r);
            let row = ideal.basis().row(r);
            let form: SparseVec = basis.iter().enumerate().filter(|(_, &w)| !row[w].is_zero()).map(|(b, &w)| (b, -&row[w])).collect();
            pivot_forms.push(form);
        }
        Component { basis, slots, pivot_forms, ideal }
    }
}
