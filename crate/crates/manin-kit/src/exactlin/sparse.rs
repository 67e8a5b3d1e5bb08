use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use super::Scalar;

/// A sparse vector: index → nonzero coefficient, ordered by index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    terms: BTreeMap<usize, Scalar>,
}

impl SparseVec {
    pub fn new() -> SparseVec {
        SparseVec::default()
    }

    pub fn unit(i: usize, one: Scalar) -> SparseVec {
        let mut v = SparseVec::new();
        v.add_term(i, &one);
        v
    }

    pub fn from_dense(v: &[Scalar]) -> SparseVec {
        let terms = v.iter().enumerate().filter(|(_, s)| !s.is_zero()).map(|(i, s)| (i, s.clone())).collect();
        SparseVec { terms }
    }

    pub fn to_dense(&self, len: usize, zero: &Scalar) -> Vec<Scalar> {
        let mut out = vec![zero.clone(); len];
        for (i, s) in &self.terms {
            out[*i] = s.clone();
        }
        out
    }

    /// Adds `c · e_i`, dropping the entry if it cancels.
    pub fn add_term(&mut self, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(i) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &SparseVec, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (i, s) in &other.terms {
            self.add_term(*i, &(s * c));
        }
    }

    pub fn scaled(&self, c: &Scalar) -> SparseVec {
        let mut out = SparseVec::new();
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        for (i, s) in &other.terms {
            out.add_term(*i, &-s);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.terms.get(&i)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, usize, Scalar> {
        self.terms.iter()
    }

    /// Tensor product of vectors, index `(i,j) ↦ i·dim_b + j`.
    pub fn kron(&self, other: &SparseVec, dim_b: usize) -> SparseVec {
        let mut terms = BTreeMap::new();
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                terms.insert(i * dim_b + j, a * b);
            }
        }
        SparseVec { terms }
    }

    /// Largest index present, if any.
    pub fn max_index(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }
}

impl FromIterator<(usize, Scalar)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, Scalar)>>(iter: T) -> Self {
        let mut v = SparseVec::new();
        for (i, s) in iter {
            v.add_term(i, &s);
        }
        v
    }
}

impl fmt::Display for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(i, s)| format!("{s}*e{i}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
