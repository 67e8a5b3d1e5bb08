//! Two finite posets that share a coclosed subcategory but disagree on its
//! cohom: `{0..n}` under `max`, and subsets of `{1..n}` under union.
//!
//! ```
//! use manin_kit::posetcat::{check_downset_table, SubsetCategory};
//!
//! let c = SubsetCategory::new(3).unwrap();
//! assert!(check_downset_table(&c).unwrap().passed());
//! ```

use crate::fincat::{relative_adjunction_with_parameter, CatError, CohomTable, Monoidal, ThinCategory, TieBreak};

/// Default size bound.
pub const DEFAULT_N: usize = 8;
/// Ground sets are bitmasks, so they stay small.
pub const MAX_GROUND: usize = 12;

/// `{0..n}` with the usual order, `x⊗y = max(x,y)` and unit `0`.
#[derive(Clone, Debug)]
pub struct MaxPoset {
    pub n: usize,
    pub cat: ThinCategory,
}

impl MaxPoset {
    pub fn new(n: usize) -> Result<MaxPoset, CatError> {
        let size = n + 1;
        Ok(MaxPoset { n, cat: ThinCategory::trusted(size, |x, y| x <= y, usize::max, 0)? })
    }
}

/// Subsets of `{1..n}` ordered by inclusion, `X⊗Y = X∪Y`, unit `∅`.
///
/// Object ids are bitmasks: element `i` is bit `i-1`.
#[derive(Clone, Debug)]
pub struct SubsetCategory {
    pub n: usize,
    pub cat: ThinCategory,
}

impl SubsetCategory {
    pub fn new(n: usize) -> Result<SubsetCategory, CatError> {
        if n > MAX_GROUND {
            return Err(CatError::TooLarge(format!("ground set of size {n} (at most {MAX_GROUND})")));
        }
        let size = 1usize << n;
        let cat = ThinCategory::trusted(size, |x, y| x & !y == 0, |x, y| x | y, 0)?;
        Ok(SubsetCategory { n, cat: cat.with_names((0..size).map(subset_name).collect()) })
    }

    /// `D_x = {1..x}`.
    pub fn downset(x: usize) -> usize {
        (1usize << x) - 1
    }

    pub fn downsets(&self) -> Vec<usize> {
        (0..=self.n).map(Self::downset).collect()
    }
}

/// `{1,3}`-style rendering of a bitmask.
pub fn subset_name(mask: usize) -> String {
    let elems: Vec<String> = (0..usize::BITS as usize).filter(|b| mask >> b & 1 == 1).map(|b| (b + 1).to_string()).collect();
    format!("{{{}}}", elems.join(","))
}

/// A union-closed family of subsets as a thin monoidal category; object
/// `i` is `masks[i]`.
pub fn union_family(masks: &[usize]) -> Result<ThinCategory, CatError> {
    let size = masks.len();
    let index = |m: usize| masks.iter().position(|&x| x == m);
    let unit = index(0).ok_or_else(|| CatError::Invalid("family must contain ∅".into()))?;
    let mut table = Vec::with_capacity(size * size);
    for &a in masks {
        for &b in masks {
            table.push(index(a | b).ok_or_else(|| CatError::Invalid(format!("{} ∪ {} is missing", subset_name(a), subset_name(b))))?);
        }
    }
    ThinCategory::from_fn(size, |x, y| masks[x] & !masks[y] == 0)?.with_names(masks.iter().map(|&m| subset_name(m)).collect()).with_tensor(table, unit)
}

/// `cohom_P(x, y)`: `0` if `x ≥ y`, else `y`.
pub fn cohom_p(n: usize, x: usize, y: usize) -> Result<usize, CatError> {
    if x > n || y > n {
        return Err(CatError::Invalid(format!("({x}, {y}) is outside 0..={n}")));
    }
    Ok(if x >= y { 0 } else { y })
}

/// `cohom_C(X, Y) = Y ∖ X`. On downsets this is `{x+1..y}`.
pub fn cohom_c(x: usize, y: usize) -> usize {
    y & !x
}

/// The cohom table of the max poset found by search.
pub fn searched_p_table(p: &MaxPoset) -> Option<CohomTable<(usize, usize)>> {
    let params: Vec<usize> = (0..=p.n).collect();
    relative_adjunction_with_parameter(&p.cat, &params, TieBreak::Ascending)
}

/// The cohom table of the subset category on downsets, found by search.
pub fn searched_downset_table(c: &SubsetCategory) -> Option<CohomTable<(usize, usize)>> {
    relative_adjunction_with_parameter(&c.cat, &c.downsets(), TieBreak::Ascending)
}

/// Outcome of comparing a searched table against a closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableCheck {
    pub pairs: usize,
    pub mismatches: Vec<(usize, usize)>,
}

impl TableCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn check_p_table(p: &MaxPoset) -> Option<TableCheck> {
    let table = searched_p_table(p)?;
    let mut mismatches = Vec::new();
    for x in 0..=p.n {
        for y in 0..=p.n {
            if table.get(x, y).map(|e| e.0) != cohom_p(p.n, x, y).ok() {
                mismatches.push((x, y));
            }
        }
    }
    Some(TableCheck { pairs: (p.n + 1) * (p.n + 1), mismatches })
}

pub fn check_downset_table(c: &SubsetCategory) -> Option<TableCheck> {
    let table = searched_downset_table(c)?;
    let mut mismatches = Vec::new();
    for x in 0..=c.n {
        for y in 0..=c.n {
            let (dx, dy) = (SubsetCategory::downset(x), SubsetCategory::downset(y));
            if table.get(dx, dy).map(|e| e.0) != Some(cohom_c(dx, dy)) {
                mismatches.push((x, y));
            }
        }
    }
    Some(TableCheck { pairs: (c.n + 1) * (c.n + 1), mismatches })
}

/// Pairs `(x, y)` where the cohom of the max poset, embedded as `D_{cohom_P}`,
/// differs from the cohom of the subset category on downsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffersReport {
    pub n: usize,
    /// `(x, y, D_{cohom_P(x,y)}, cohom_C(D_x, D_y))`.
    pub witnesses: Vec<(usize, usize, usize, usize)>,
}

pub fn verify_subcategory_cohom_differs(n: usize) -> Result<DiffersReport, CatError> {
    if n > MAX_GROUND {
        return Err(CatError::TooLarge(format!("ground set of size {n} (at most {MAX_GROUND})")));
    }
    let mut witnesses = Vec::new();
    for x in 0..=n {
        for y in 0..=n {
            let p = SubsetCategory::downset(cohom_p(n, x, y)?);
            let c = cohom_c(SubsetCategory::downset(x), SubsetCategory::downset(y));
            if p != c {
                witnesses.push((x, y, p, c));
            }
        }
    }
    Ok(DiffersReport { n, witnesses })
}

/// Checks `|Hom(cohom(V,W), Z)| = |Hom(W, Z⊗V)|` for every `V, W` in the
/// table and every object `Z`. Returns the first failing triple.
pub fn check_adjunction_counts<M: Monoidal>(m: &M, table: &CohomTable<M::Arrow>) -> Result<usize, (usize, usize, usize)> {
    let mut checked = 0;
    for &v in &table.params {
        for &w in &table.params {
            let c = table.get(v, w).expect("in table").0;
            for z in 0..m.objects() {
                if m.hom(c, z).len() != m.hom(w, m.tensor(z, v)).len() {
                    return Err((v, w, z));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// Aligned text rendering of the two tables for `0..=n`.
pub fn render_tables(n: usize) -> String {
    let mut out = String::new();
    let width = 3;
    out.push_str("cohom_P(x,y)\n  x\\y");
    for y in 0..=n {
        out.push_str(&format!("{y:>width$}"));
    }
    out.push('\n');
    for x in 0..=n {
        out.push_str(&format!("{x:>6}"));
        for y in 0..=n {
            out.push_str(&format!("{:>width$}", cohom_p(n, x, y).expect("in range")));
        }
        out.push('\n');
    }
    out.push_str("\ncohom_C(D_x,D_y)\n");
    let cw = 2 + subset_name(cohom_c(0, SubsetCategory::downset(n))).len();
    out.push_str("  x\\y");
    for y in 0..=n {
        out.push_str(&format!("{y:>cw$}"));
    }
    out.push('\n');
    for x in 0..=n {
        out.push_str(&format!("{x:>6}"));
        for y in 0..=n {
            let s = subset_name(cohom_c(SubsetCategory::downset(x), SubsetCategory::downset(y)));
            out.push_str(&format!("{s:>cw$}"));
        }
        out.push('\n');
    }
    out
}
