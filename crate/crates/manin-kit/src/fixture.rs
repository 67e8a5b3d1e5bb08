//! Plain-text fixture files.
//!
//! A file holds one `@field` line followed by named sections. Entries are
//! whitespace-separated tokens and `#` starts a comment.
//!
//! ```text
//! @field Q
//!
//! @algebra qp2
//! gens x y
//! rel 1 x y -2 y x          # x⊗y − 2·y⊗x
//!
//! @monoid z2
//! elements e g
//! times g g e               # unlisted products with e are filled in
//!
//! @bimonoid kz2
//! elements e g
//! times g g e
//!
//! @rep sign
//! over kz2
//! dim 1
//! act e 1
//! act g -1
//!
//! @category p3
//! kind preorder
//! objects 0 1 2
//! leq 0 1
//! leq 1 2
//! ```
//!
//! Monoids and bimonoids can also be given by structure constants:
//! `basis`, `mul a b c l ...`, `unit c l ...`, `comul a c l l ...`,
//! `counit a c`. Explicit categories use `objects`, `arrow f x y` and
//! `compose g f h` (meaning `g∘f = h`); identities `id_x` are implicit.
//! A `tensor x y z` table with `unit x` makes a preorder monoidal.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use crate::exactlin::{parse_scalar, Field, Matrix, Scalar, Subspace};
use crate::fincat::{FinCategory, ThinCategory};
use crate::linrep::{linearize, FiniteMonoid, VecBimonoid, VecMonoid};
use crate::quadalg::QuadraticAlgebra;

/// A parse or validation error at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

#[derive(Clone, Debug)]
struct Tok<'a> {
    text: &'a str,
    line: usize,
    col: usize,
}

impl Tok<'_> {
    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError { line: self.line, col: self.col, message: msg.into() }
    }
}

type Line<'a> = Vec<Tok<'a>>;

fn tokenize(src: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let text = raw.split('#').next().unwrap_or("");
        let mut toks = Vec::new();
        let mut start = None;
        for (b, ch) in text.char_indices().chain(std::iter::once((text.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(b),
                (true, Some(s)) => {
                    toks.push(Tok { text: &text[s..b], line: i + 1, col: text[..s].chars().count() + 1 });
                    start = None;
                }
                _ => {}
            }
        }
        if !toks.is_empty() {
            out.push(toks);
        }
    }
    out
}

/// A monoid section: the algebra plus its basis labels and, when given as
/// a multiplication table, the finite monoid itself.
#[derive(Clone, Debug)]
pub struct MonoidDef {
    pub labels: Vec<String>,
    pub monoid: VecMonoid,
    pub finite: Option<FiniteMonoid>,
}

#[derive(Clone, Debug)]
pub struct BimonoidDef {
    pub labels: Vec<String>,
    pub bimonoid: VecBimonoid,
    pub finite: Option<FiniteMonoid>,
}

/// A representation `ρ: X → hom(V,V)` of a named monoid or bimonoid.
#[derive(Clone, Debug)]
pub struct RepDef {
    pub over: String,
    pub dim: usize,
    /// One `dim × dim` matrix per basis element of `over`.
    pub actions: Vec<Matrix>,
}

impl RepDef {
    /// `ρ` as a `dim² × dim X` matrix.
    pub fn rho(&self) -> Matrix {
        linearize(&self.actions)
    }
}

#[derive(Clone, Debug)]
pub enum CategoryDef {
    Explicit(FinCategory),
    Preorder(ThinCategory),
}

/// A parsed fixture file.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub field: Field,
    pub algebras: BTreeMap<String, QuadraticAlgebra>,
    pub monoids: BTreeMap<String, MonoidDef>,
    pub bimonoids: BTreeMap<String, BimonoidDef>,
    pub reps: BTreeMap<String, RepDef>,
    pub categories: BTreeMap<String, CategoryDef>,
}

impl Fixture {
    pub fn load(path: &Path) -> Result<Fixture, FixtureError> {
        let src = std::fs::read_to_string(path).map_err(|e| FixtureError::Io(path.display().to_string(), e.to_string()))?;
        parse(&src).map_err(|e| FixtureError::Parse(path.display().to_string(), e))
    }

    /// The only algebra of the file, or the one with the given name.
    pub fn algebra(&self, name: Option<&str>) -> Option<&QuadraticAlgebra> {
        match name {
            Some(n) => self.algebras.get(n),
            None if self.algebras.len() == 1 => self.algebras.values().next(),
            None => None,
        }
    }

    /// The basis labels of a monoid or bimonoid.
    fn labels_of(&self, name: &str) -> Option<&[String]> {
        self.monoids.get(name).map(|m| &m.labels[..]).or_else(|| self.bimonoids.get(name).map(|b| &b.labels[..]))
    }

    /// The monoid underlying a named monoid or bimonoid.
    pub fn monoid_of(&self, name: &str) -> Option<&VecMonoid> {
        self.monoids.get(name).map(|m| &m.monoid).or_else(|| self.bimonoids.get(name).map(|b| &b.bimonoid.monoid))
    }
}

/// Renders `a` as an `@algebra` section that [`parse`] reads back.
pub fn write_algebra(name: &str, a: &QuadraticAlgebra) -> String {
    let n = a.gens();
    let mut out = format!("@algebra {name}\ngens {}\n", a.labels().join(" "));
    for r in a.relations().basis().row_iter() {
        let mut line = String::from("rel");
        for (w, c) in r.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            line.push_str(&format!(" {c} {} {}", a.labels()[w / n], a.labels()[w % n]));
        }
        out.push_str(&line);
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum FixtureError {
    #[error("{0}: {1}")]
    Io(String, String),
    #[error("{0}:{1}")]
    Parse(String, ParseError),
}

fn field_of(tok: &Tok) -> Result<Field, ParseError> {
    let t = tok.text;
    if t == "Q" {
        return Ok(Field::Rational);
    }
    let p = t.strip_prefix("F_").or_else(|| t.strip_prefix('F')).and_then(|s| s.parse::<u16>().ok());
    match p.map(Field::prime) {
        Some(Ok(f)) => Ok(f),
        _ => Err(tok.err(format!("unknown field `{t}` (expected Q or Fp with p prime)"))),
    }
}

fn scalar(field: Field, tok: &Tok) -> Result<Scalar, ParseError> {
    parse_scalar(field, tok.text).map_err(|_| tok.err(format!("`{}` is not a scalar", tok.text)))
}

fn usize_tok(tok: &Tok) -> Result<usize, ParseError> {
    tok.text.parse().map_err(|_| tok.err(format!("`{}` is not a count", tok.text)))
}

fn label_index(labels: &[String], tok: &Tok) -> Result<usize, ParseError> {
    labels.iter().position(|l| l == tok.text).ok_or_else(|| tok.err(format!("undeclared label `{}`", tok.text)))
}

fn arity(line: &Line, n: usize, what: &str) -> Result<(), ParseError> {
    if line.len() != n {
        return Err(line[0].err(format!("`{}` takes {} argument(s): {what}", line[0].text, n - 1)));
    }
    Ok(())
}

fn declare(line: &Line, slot: &mut Option<Vec<String>>) -> Result<(), ParseError> {
    if slot.is_some() {
        return Err(line[0].err(format!("`{}` given twice", line[0].text)));
    }
    let labels: Vec<String> = line[1..].iter().map(|t| t.text.to_string()).collect();
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(line[i + 1].err(format!("duplicate label `{l}`")));
        }
    }
    *slot = Some(labels);
    Ok(())
}

/// Parses a coefficient list `c l₁ … l_k c l₁ … l_k …` into a vector of
/// length `n^k`.
fn linear_combination(field: Field, labels: &[String], toks: &[Tok], k: usize, head: &Tok) -> Result<Vec<Scalar>, ParseError> {
    let n = labels.len();
    if toks.is_empty() || toks.len() % (k + 1) != 0 {
        return Err(head.err(format!("expected groups of a coefficient and {k} label(s)")));
    }
    let mut v = vec![field.zero(); n.pow(k as u32)];
    for group in toks.chunks(k + 1) {
        let c = scalar(field, &group[0])?;
        let mut idx = 0;
        for t in &group[1..] {
            idx = idx * n + label_index(labels, t)?;
        }
        v[idx] = &v[idx] + &c;
    }
    Ok(v)
}

struct Section<'a> {
    kind: Tok<'a>,
    name: Tok<'a>,
    body: Vec<Line<'a>>,
}

/// Parses a fixture file.
pub fn parse(src: &str) -> Result<Fixture, ParseError> {
    let lines = tokenize(src);
    let mut field = None;
    let mut sections: Vec<Section> = Vec::new();
    for line in lines {
        let head = &line[0];
        if head.text == "@field" {
            arity(&line, 2, "Q or Fp")?;
            if field.is_some() {
                return Err(head.err("only one @field line is allowed"));
            }
            field = Some(field_of(&line[1])?);
        } else if head.text.starts_with('@') {
            if !matches!(head.text, "@algebra" | "@monoid" | "@bimonoid" | "@rep" | "@category") {
                return Err(head.err(format!("unknown section `{}`", head.text)));
            }
            arity(&line, 2, "a section name")?;
            sections.push(Section { kind: head.clone(), name: line[1].clone(), body: Vec::new() });
        } else {
            match sections.last_mut() {
                Some(s) => s.body.push(line),
                None => return Err(head.err("entry before any section header")),
            }
        }
    }
    let field = field.ok_or(ParseError { line: 1, col: 1, message: "missing @field line".into() })?;
    let mut fx =
        Fixture { field, algebras: BTreeMap::new(), monoids: BTreeMap::new(), bimonoids: BTreeMap::new(), reps: BTreeMap::new(), categories: BTreeMap::new() };
    let mut seen: Vec<String> = Vec::new();
    for s in &sections {
        let name = s.name.text.to_string();
        if seen.contains(&name) {
            return Err(s.name.err(format!("section name `{name}` is used twice")));
        }
        seen.push(name.clone());
        match s.kind.text {
            "@algebra" => {
                fx.algebras.insert(name, algebra(field, s)?);
            }
            "@monoid" => {
                let (labels, bi, finite) = monoid_like(field, s, false)?;
                fx.monoids.insert(name, MonoidDef { labels, monoid: bi.monoid, finite });
            }
            "@bimonoid" => {
                let (labels, bimonoid, finite) = monoid_like(field, s, true)?;
                fx.bimonoids.insert(name, BimonoidDef { labels, bimonoid, finite });
            }
            "@rep" => {
                let r = rep(field, s, &fx)?;
                fx.reps.insert(name, r);
            }
            _ => {
                fx.categories.insert(name, category(s)?);
            }
        }
    }
    Ok(fx)
}

fn algebra(field: Field, s: &Section) -> Result<QuadraticAlgebra, ParseError> {
    let mut gens = None;
    let mut rels = Vec::new();
    for line in &s.body {
        match line[0].text {
            "gens" => declare(line, &mut gens)?,
            "rel" => {
                let labels = gens.as_ref().ok_or_else(|| line[0].err("`rel` before `gens`"))?;
                rels.push(linear_combination(field, labels, &line[1..], 2, &line[0])?);
            }
            other => return Err(line[0].err(format!("unknown algebra entry `{other}`"))),
        }
    }
    let labels = gens.ok_or_else(|| s.name.err("algebra has no `gens` line"))?;
    let n = labels.len();
    let r = Subspace::span(field, n * n, rels).map_err(|e| s.name.err(e.to_string()))?;
    QuadraticAlgebra::new(field, labels, r).map_err(|e| s.name.err(e.to_string()))
}

type MonoidParts = (Vec<String>, VecBimonoid, Option<FiniteMonoid>);

fn monoid_like(field: Field, s: &Section, bi: bool) -> Result<MonoidParts, ParseError> {
    let mut elements = None;
    let mut basis = None;
    let mut times = Vec::new();
    let mut mul = Vec::new();
    let mut unit_line = None;
    let mut comul = Vec::new();
    let mut counit = Vec::new();
    for line in &s.body {
        match line[0].text {
            "elements" => declare(line, &mut elements)?,
            "basis" => declare(line, &mut basis)?,
            "times" => times.push(line),
            "mul" => mul.push(line),
            "unit" => unit_line = Some(line),
            "comul" if bi => comul.push(line),
            "counit" if bi => counit.push(line),
            other => return Err(line[0].err(format!("unknown entry `{other}`"))),
        }
    }
    match (elements, basis) {
        (Some(labels), None) => {
            if !mul.is_empty() || unit_line.is_some() || !comul.is_empty() || !counit.is_empty() {
                return Err(s.name.err("a monoid given by `elements` takes only `times` lines"));
            }
            let n = labels.len();
            let mut table = vec![vec![None; n]; n];
            for line in &times {
                arity(line, 4, "x y x·y")?;
                let (x, y, z) = (label_index(&labels, &line[1])?, label_index(&labels, &line[2])?, label_index(&labels, &line[3])?);
                if table[x][y].replace(z).is_some() {
                    return Err(line[0].err("product given twice"));
                }
            }
            // The first element is the identity unless the table says otherwise.
            for (x, row) in table.iter_mut().enumerate() {
                row[0].get_or_insert(x);
            }
            for (x, cell) in table[0].iter_mut().enumerate() {
                cell.get_or_insert(x);
            }
            let mut full = vec![vec![0; n]; n];
            for x in 0..n {
                for y in 0..n {
                    full[x][y] = table[x][y].ok_or_else(|| s.name.err(format!("missing product {} {}", labels[x], labels[y])))?;
                }
            }
            let m = FiniteMonoid::new(labels.clone(), full).map_err(|e| s.name.err(e))?;
            let b = VecBimonoid::monoid_bialgebra(field, &m);
            Ok((labels, b, Some(m)))
        }
        (None, Some(labels)) => {
            if !times.is_empty() {
                return Err(s.name.err("`times` needs `elements`, not `basis`"));
            }
            let n = labels.len();
            let mut mm = Matrix::zero(field, n, n * n);
            for line in &mul {
                if line.len() < 3 {
                    return Err(line[0].err("`mul a b` needs a product"));
                }
                let (a, b) = (label_index(&labels, &line[1])?, label_index(&labels, &line[2])?);
                let v = linear_combination(field, &labels, &line[3..], 1, &line[0])?;
                for (c, x) in v.into_iter().enumerate() {
                    mm.set(c, a * n + b, x);
                }
            }
            let unit_line = unit_line.ok_or_else(|| s.name.err("missing `unit` line"))?;
            let u = linear_combination(field, &labels, &unit_line[1..], 1, &unit_line[0])?;
            let unit = Matrix::from_rows(field, u.into_iter().map(|x| vec![x]).collect()).map_err(|e| s.name.err(e.to_string()))?;
            let monoid = VecMonoid { dim: n, mul: mm, unit };
            let mut d = Matrix::zero(field, n * n, n);
            let mut e = Matrix::zero(field, 1, n);
            if bi {
                if comul.is_empty() || counit.is_empty() {
                    return Err(s.name.err("a bimonoid needs `comul` and `counit` lines"));
                }
                for line in &comul {
                    if line.len() < 2 {
                        return Err(line[0].err("`comul a` needs a value"));
                    }
                    let a = label_index(&labels, &line[1])?;
                    for (c, x) in linear_combination(field, &labels, &line[2..], 2, &line[0])?.into_iter().enumerate() {
                        d.set(c, a, x);
                    }
                }
                for line in &counit {
                    arity(line, 3, "a basis label and a scalar")?;
                    e.set(0, label_index(&labels, &line[1])?, scalar(field, &line[2])?);
                }
            }
            Ok((labels, VecBimonoid { monoid, comul: d, counit: e }, None))
        }
        _ => Err(s.name.err("give exactly one of `elements` or `basis`")),
    }
}

fn rep(field: Field, s: &Section, fx: &Fixture) -> Result<RepDef, ParseError> {
    let mut over: Option<&Tok> = None;
    let mut dim = None;
    let mut acts: Vec<&Line> = Vec::new();
    for line in &s.body {
        match line[0].text {
            "over" => {
                arity(line, 2, "a monoid or bimonoid name")?;
                over = Some(&line[1]);
            }
            "dim" => {
                arity(line, 2, "the dimension")?;
                dim = Some(usize_tok(&line[1])?);
            }
            "act" => acts.push(line),
            other => return Err(line[0].err(format!("unknown rep entry `{other}`"))),
        }
    }
    let over = over.ok_or_else(|| s.name.err("missing `over` line"))?;
    let labels = fx.labels_of(over.text).ok_or_else(|| over.err(format!("no monoid or bimonoid named `{}` above this section", over.text)))?;
    let v = dim.ok_or_else(|| s.name.err("missing `dim` line"))?;
    let mut actions: Vec<Option<Matrix>> = vec![None; labels.len()];
    for line in acts {
        arity(line, 2 + v * v, &format!("a basis label and {} entries", v * v))?;
        let x = label_index(labels, &line[1])?;
        let entries = line[2..].iter().map(|t| scalar(field, t)).collect::<Result<Vec<_>, _>>()?;
        let rows = entries.chunks(v).map(|r| r.to_vec()).collect();
        actions[x] = Some(Matrix::from_rows_with_cols(field, v, rows).map_err(|e| line[0].err(e.to_string()))?);
    }
    let actions = actions
        .into_iter()
        .enumerate()
        .map(|(i, a)| a.ok_or_else(|| s.name.err(format!("no action given for `{}`", labels[i]))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RepDef { over: over.text.to_string(), dim: v, actions })
}

fn category(s: &Section) -> Result<CategoryDef, ParseError> {
    let mut kind = "explicit";
    let mut objects = None;
    let mut body = Vec::new();
    for line in &s.body {
        match line[0].text {
            "kind" => {
                arity(line, 2, "explicit or preorder")?;
                kind = match line[1].text {
                    "explicit" => "explicit",
                    "preorder" => "preorder",
                    other => return Err(line[1].err(format!("unknown category kind `{other}`"))),
                };
            }
            "objects" => declare(line, &mut objects)?,
            _ => body.push(line),
        }
    }
    let objects = objects.ok_or_else(|| s.name.err("missing `objects` line"))?;
    let n = objects.len();
    let mut tensor = vec![None; n * n];
    let mut unit = None;
    let mut any_tensor = false;
    let mut tensor_entry = |line: &Line| -> Result<bool, ParseError> {
        match line[0].text {
            "tensor" => {
                arity(line, 4, "x y x⊗y")?;
                let (x, y, z) = (label_index(&objects, &line[1])?, label_index(&objects, &line[2])?, label_index(&objects, &line[3])?);
                tensor[x * n + y] = Some(z);
                any_tensor = true;
                Ok(true)
            }
            "unit" => {
                arity(line, 2, "the unit object")?;
                unit = Some(label_index(&objects, &line[1])?);
                Ok(true)
            }
            _ => Ok(false),
        }
    };
    if kind == "preorder" {
        let mut rel = Vec::new();
        for line in &body {
            if tensor_entry(line)? {
                continue;
            }
            match line[0].text {
                "leq" => {
                    arity(line, 3, "x y")?;
                    rel.push((label_index(&objects, &line[1])?, label_index(&objects, &line[2])?));
                }
                other => return Err(line[0].err(format!("unknown preorder entry `{other}`"))),
            }
        }
        let cat = ThinCategory::new(n, &rel).map_err(|e| s.name.err(e.to_string()))?.with_names(objects.clone());
        if !any_tensor && unit.is_none() {
            return Ok(CategoryDef::Preorder(cat));
        }
        let unit = unit.ok_or_else(|| s.name.err("a tensor table needs a `unit` line"))?;
        let table = (0..n * n)
            .map(|i| tensor[i].ok_or_else(|| s.name.err(format!("missing tensor {} {}", objects[i / n], objects[i % n]))))
            .collect::<Result<Vec<_>, _>>()?;
        return cat.with_tensor(table, unit).map(CategoryDef::Preorder).map_err(|e| s.name.err(e.to_string()));
    }
    let mut arrows: Vec<(usize, usize, String)> = objects.iter().enumerate().map(|(i, o)| (i, i, format!("id_{o}"))).collect();
    let mut compose_lines = Vec::new();
    for line in &body {
        match line[0].text {
            "arrow" => {
                arity(line, 4, "name source target")?;
                if arrows.iter().any(|a| a.2 == line[1].text) {
                    return Err(line[1].err(format!("duplicate arrow `{}`", line[1].text)));
                }
                arrows.push((label_index(&objects, &line[2])?, label_index(&objects, &line[3])?, line[1].text.to_string()));
            }
            "compose" => compose_lines.push(line),
            "tensor" | "unit" => return Err(line[0].err("monoidal tables are only supported for preorders")),
            other => return Err(line[0].err(format!("unknown category entry `{other}`"))),
        }
    }
    let names: Vec<String> = arrows.iter().map(|a| a.2.clone()).collect();
    let mut comp = Vec::new();
    for line in compose_lines {
        arity(line, 4, "g f g∘f")?;
        comp.push((label_index(&names, &line[1])?, label_index(&names, &line[2])?, label_index(&names, &line[3])?));
    }
    FinCategory::new(objects, arrows, (0..n).collect(), &comp).map(CategoryDef::Explicit).map_err(|e| s.name.err(e.to_string()))
}
