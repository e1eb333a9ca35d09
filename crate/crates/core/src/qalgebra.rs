//! Quivers, paths and finite-dimensional bound quiver algebras `kQ/I`.
//!
//! Paths compose left to right: `p * q` means "first `p`, then `q`", so a
//! path from `i` to `j` followed by one from `j` to `l` is a path from `i` to
//! `l`. Modules are right modules; see [`crate::reps`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::{Arc, Weak};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::exactmat::Matrix;
use crate::reps::Representation;
use crate::scalar::{Field, Scalar};

/// Default bound on path length when certifying admissibility.
pub const DEFAULT_PATH_LENGTH_CAP: usize = 32;

/// Upper bound on the number of paths examined while certifying admissibility.
const MAX_PATHS: usize = 40_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Self> {
        for (i, a) in arrows.iter().enumerate() {
            if a.source >= vertex_count || a.target >= vertex_count {
                return Err(Error::InvalidQuiver(format!(
                    "arrow {} has an endpoint outside [0, {})",
                    a.name, vertex_count
                )));
            }
            if arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow name {}", a.name)));
            }
        }
        Ok(Quiver { vertex_count, arrows })
    }

    /// Convenience constructor with generated arrow names `a0, a1, ...`.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let arrows = edges
            .iter()
            .enumerate()
            .map(|(i, &(s, t))| Arrow { name: format!("a{}", i), source: s, target: t })
            .collect();
        Quiver::new(vertex_count, arrows)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn reversed(&self) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
            .collect();
        Quiver { vertex_count: self.vertex_count, arrows }
    }

    /// Connected components of the underlying undirected graph.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.vertex_count];
        let mut out = Vec::new();
        for start in 0..self.vertex_count {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp[start] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for a in &self.arrows {
                    for (x, y) in [(a.source, a.target), (a.target, a.source)] {
                        if x == v && comp[y] == usize::MAX {
                            comp[y] = id;
                            stack.push(y);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

/// A path in a quiver. A trivial path has no arrows and `source == target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<Self> {
        let Some(&first) = arrows.first() else {
            return Err(Error::InvalidRelation("empty arrow list".into()));
        };
        if arrows.iter().any(|&a| a >= q.arrows.len()) {
            return Err(Error::InvalidRelation("arrow index out of range".into()));
        }
        for w in arrows.windows(2) {
            if q.arrow(w[0]).target != q.arrow(w[1]).source {
                return Err(Error::InvalidRelation(format!(
                    "arrows {} and {} are not composable",
                    q.arrow(w[0]).name,
                    q.arrow(w[1]).name
                )));
            }
        }
        let last = *arrows.last().unwrap();
        Ok(Path { source: q.arrow(first).source, target: q.arrow(last).target, arrows })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self * other` (self first), if composable.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { source: self.source, target: other.target, arrows })
    }

    pub fn reversed(&self) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path { source: self.target, target: self.source, arrows }
    }

    /// Degree-lexicographic order: length, then endpoints, then arrows.
    pub fn deglex_cmp(&self, other: &Path) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then(self.source.cmp(&other.source))
            .then(self.target.cmp(&other.target))
            .then(self.arrows.cmp(&other.arrows))
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.is_trivial() {
            return format!("e{}", self.source + 1);
        }
        let names: Vec<&str> = self.arrows.iter().map(|&a| q.arrow(a).name.as_str()).collect();
        names.join("*")
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deglex_cmp(other)
    }
}

/// A linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

impl Relation {
    pub fn new(terms: Vec<(Scalar, Path)>) -> Result<Self> {
        let terms: Vec<_> = terms.into_iter().filter(|(c, _)| !c.is_zero()).collect();
        let Some((_, first)) = terms.first() else {
            return Err(Error::InvalidRelation("relation has no nonzero term".into()));
        };
        let (s, t) = (first.source, first.target);
        for (_, p) in &terms {
            if p.len() < 2 {
                return Err(Error::InvalidRelation("relation term of length below two".into()));
            }
            if p.source != s || p.target != t {
                return Err(Error::InvalidRelation("relation terms are not parallel".into()));
            }
        }
        Ok(Relation { terms })
    }

    /// The single-path relation `p = 0`.
    pub fn zero_path(field: Field, p: Path) -> Result<Self> {
        Relation::new(vec![(field.one(), p)])
    }

    pub fn source(&self) -> usize {
        self.terms[0].1.source
    }

    pub fn target(&self) -> usize {
        self.terms[0].1.target
    }

    pub fn min_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0)
    }

    pub fn reversed(&self) -> Relation {
        Relation { terms: self.terms.iter().map(|(c, p)| (c.clone(), p.reversed())).collect() }
    }

    pub fn display(&self, q: &Quiver) -> String {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, p)| {
                if c.is_one() {
                    p.display(q)
                } else {
                    format!("{}*{}", c, p.display(q))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

/// A finite-dimensional quotient `kQ/I` with an explicit path basis and
/// structure constants.
pub struct BoundQuiverAlgebra {
    field: Field,
    quiver: Quiver,
    relations: Vec<Relation>,
    basis: Vec<Path>,
    products: BTreeMap<(usize, usize), Vec<(usize, Scalar)>>,
    loewy_length: usize,
    by_endpoints: BTreeMap<(usize, usize), Vec<usize>>,
    vertex_index: Vec<usize>,
    arrow_index: Vec<usize>,
    opposite: OnceBox<Arc<BoundQuiverAlgebra>>,
    dual_of: Option<Weak<BoundQuiverAlgebra>>,
}

impl fmt::Debug for BoundQuiverAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BoundQuiverAlgebra")
            .field("field", &self.field)
            .field("vertices", &self.quiver.vertex_count)
            .field("arrows", &self.quiver.arrows.len())
            .field("dimension", &self.basis.len())
            .finish()
    }
}

impl PartialEq for BoundQuiverAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.quiver == other.quiver
            && self.basis == other.basis
            && self.products == other.products
    }
}

/// Paths of length exactly `len`, in deglex order.
fn paths_of_length(q: &Quiver, len: usize) -> Vec<Path> {
    let mut layer: Vec<Path> = (0..q.vertex_count).map(Path::trivial).collect();
    for _ in 0..len {
        let mut next = Vec::new();
        for p in &layer {
            for (i, a) in q.arrows.iter().enumerate() {
                if a.source == p.target {
                    let mut arrows = p.arrows.clone();
                    arrows.push(i);
                    next.push(Path { source: p.source, target: a.target, arrows });
                }
            }
        }
        layer = next;
    }
    layer.sort();
    layer
}

fn paths_from(q: &Quiver, v: usize, max_len: usize) -> Vec<Path> {
    let mut out = vec![Path::trivial(v)];
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            for (i, a) in q.arrows.iter().enumerate() {
                if a.source == p.target {
                    let mut arrows = p.arrows.clone();
                    arrows.push(i);
                    next.push(Path { source: v, target: a.target, arrows });
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn paths_to(q: &Quiver, v: usize, max_len: usize) -> Vec<Path> {
    paths_from(&q.reversed(), v, max_len).into_iter().map(|p| p.reversed()).collect()
}

/// Builds `kQ/I` for the ideal generated by `relations`.
///
/// The basis is found degree by degree in the truncations `kQ/J^(m+1)`,
/// stopping at the first `m` for which every path of length `m` lies in
/// `I + J^(m+1)`. The result is `kQ/(I + J^m)`, which equals `kQ/I` whenever
/// the relations are homogeneous.
pub fn build_algebra(
    field: Field,
    quiver: Quiver,
    relations: Vec<Relation>,
    path_length_cap: usize,
) -> Result<Arc<BoundQuiverAlgebra>> {
    for r in &relations {
        for (c, p) in &r.terms {
            if c.field() != field {
                return Err(Error::InvalidRelation("coefficient from another field".into()));
            }
            Path::from_arrows(&quiver, p.arrows.clone())?;
        }
    }
    let mut all_paths: Vec<Path> = paths_of_length(&quiver, 0);
    for m in 1..=path_length_cap {
        let layer = paths_of_length(&quiver, m);
        all_paths.extend(layer.iter().cloned());
        if all_paths.len() > MAX_PATHS {
            return Err(Error::NotAdmissible { cap: m });
        }
        // Columns: paths of length <= m, largest first, so that pivots land on
        // long paths and short paths survive as basis representatives.
        let mut cols: Vec<Path> = all_paths.clone();
        cols.sort_by(|a, b| b.cmp(a));
        let index: BTreeMap<Path, usize> =
            cols.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let ideal = truncated_ideal(field, &quiver, &relations, m, &index);
        let rank_ideal = ideal.rank();
        let mut with_layer = ideal.clone();
        for p in &layer {
            let mut row = Matrix::zeros(field, 1, cols.len());
            row.set(0, index[p], field.one());
            with_layer = with_layer.vstack(&row);
        }
        if with_layer.rank() == rank_ideal {
            return assemble(field, quiver, relations, cols, Some(ideal), m);
        }
    }
    Err(Error::NotAdmissible { cap: path_length_cap })
}

/// Rows spanning `(I + J^(m+1)) / J^(m+1)` in the coordinates of `index`.
fn truncated_ideal(
    field: Field,
    q: &Quiver,
    relations: &[Relation],
    m: usize,
    index: &BTreeMap<Path, usize>,
) -> Matrix {
    let n = index.len();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for r in relations {
        let min = r.min_len();
        if min > m {
            continue;
        }
        let slack = m - min;
        let lefts = paths_to(q, r.source(), slack);
        let rights = paths_from(q, r.target(), slack);
        for p in &lefts {
            for s in &rights {
                if p.len() + s.len() > slack {
                    continue;
                }
                let mut row = vec![field.zero(); n];
                let mut any = false;
                for (c, t) in &r.terms {
                    let full = p.concat(t).and_then(|x| x.concat(s)).expect("composable");
                    if full.len() > m {
                        continue;
                    }
                    let i = index[&full];
                    row[i] = &row[i] + c;
                    any = true;
                }
                if any && row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let mat = Matrix::from_rows(field, n, rows);
    if mat.rows() == 0 {
        return mat;
    }
    let (r, pivots) = mat.rref();
    r.select_rows(&(0..pivots.len()).collect::<Vec<_>>())
}

fn assemble(
    field: Field,
    quiver: Quiver,
    relations: Vec<Relation>,
    paths: Vec<Path>,
    ideal: Option<Matrix>,
    loewy_length: usize,
) -> Result<Arc<BoundQuiverAlgebra>> {
    // Normal forms: path -> coordinates over surviving paths.
    let mut cols = paths;
    cols.sort_by(|a, b| b.cmp(a));
    let (pivot_of, reduced) = match &ideal {
        Some(m) if m.rows() > 0 => {
            let (r, pivots) = m.rref();
            (pivots, Some(r))
        }
        _ => (Vec::new(), None),
    };
    let mut is_pivot = vec![None; cols.len()];
    for (row, &c) in pivot_of.iter().enumerate() {
        is_pivot[c] = Some(row);
    }
    let mut basis: Vec<Path> = cols
        .iter()
        .enumerate()
        .filter(|(i, p)| is_pivot[*i].is_none() && p.len() < loewy_length)
        .map(|(_, p)| p.clone())
        .collect();
    basis.sort();
    let basis_pos: BTreeMap<Path, usize> =
        basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let col_pos: BTreeMap<Path, usize> =
        cols.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

    let normal_form = |p: &Path| -> Vec<(usize, Scalar)> {
        if p.len() >= loewy_length {
            return Vec::new();
        }
        if let Some(&b) = basis_pos.get(p) {
            return vec![(b, field.one())];
        }
        let c = col_pos[p];
        let row = is_pivot[c].expect("non-basis path must be a pivot");
        let r = reduced.as_ref().unwrap();
        let mut out = Vec::new();
        for (j, path) in cols.iter().enumerate() {
            if j == c {
                continue;
            }
            let v = r.get(row, j);
            if !v.is_zero() {
                let b = *basis_pos.get(path).expect("reduced row touches only basis paths");
                out.push((b, -v));
            }
        }
        out.sort_by_key(|(b, _)| *b);
        out
    };

    let mut products = BTreeMap::new();
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            if let Some(p) = a.concat(b) {
                let nf = normal_form(&p);
                if !nf.is_empty() {
                    products.insert((i, j), nf);
                }
            }
        }
    }
    let alg = BoundQuiverAlgebra::from_parts(field, quiver, relations, basis, products, loewy_length);
    alg.check_structure()?;
    Ok(Arc::new(alg))
}

impl BoundQuiverAlgebra {
    fn from_parts(
        field: Field,
        quiver: Quiver,
        relations: Vec<Relation>,
        basis: Vec<Path>,
        products: BTreeMap<(usize, usize), Vec<(usize, Scalar)>>,
        loewy_length: usize,
    ) -> Self {
        let mut by_endpoints: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (i, p) in basis.iter().enumerate() {
            by_endpoints.entry((p.source, p.target)).or_default().push(i);
        }
        let vertex_index = (0..quiver.vertex_count)
            .map(|v| basis.iter().position(|p| *p == Path::trivial(v)).expect("idempotent in basis"))
            .collect();
        let arrow_index = (0..quiver.arrows.len())
            .map(|a| {
                basis
                    .iter()
                    .position(|p| p.arrows.len() == 1 && p.arrows[0] == a)
                    .unwrap_or(usize::MAX)
            })
            .collect();
        BoundQuiverAlgebra {
            field,
            quiver,
            relations,
            basis,
            products,
            loewy_length,
            by_endpoints,
            vertex_index,
            arrow_index,
            opposite: OnceBox::new(),
            dual_of: None,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count
    }

    pub fn arrow_count(&self) -> usize {
        self.quiver.arrows.len()
    }

    /// Smallest `m` with `J^m = 0`.
    pub fn loewy_length(&self) -> usize {
        self.loewy_length
    }

    /// Basis indices of paths from `s` to `t`, in basis order.
    pub fn basis_between(&self, s: usize, t: usize) -> &[usize] {
        self.by_endpoints.get(&(s, t)).map_or(&[], Vec::as_slice)
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.vertex_index[v]
    }

    /// Basis index of an arrow (arrows are never killed by admissible ideals).
    pub fn arrow_basis_index(&self, a: usize) -> usize {
        self.arrow_index[a]
    }

    /// Structure constants of `basis[i] * basis[j]`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        self.products.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    /// Product of two coordinate vectors.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dimension()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.product(i, j) {
                    let t = &ab * c;
                    out[*k] = &out[*k] + &t;
                }
            }
        }
        out
    }

    pub fn unit_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dimension()];
        v[i] = self.field.one();
        v
    }

    /// Exhaustive associativity and identity checks on the basis.
    pub fn check_structure(&self) -> Result<()> {
        let n = self.dimension();
        let mut one = vec![self.field.zero(); n];
        for v in 0..self.vertex_count() {
            one[self.idempotent(v)] = self.field.one();
        }
        for i in 0..n {
            let e = self.unit_vector(i);
            if self.multiply(&one, &e) != e || self.multiply(&e, &one) != e {
                return Err(Error::Sentinel(format!("identity law fails on basis element {}", i)));
            }
        }
        let combine = |acc: &mut BTreeMap<usize, Scalar>, c: &Scalar, terms: &[(usize, Scalar)]| {
            for (m, d) in terms {
                let t = c * d;
                let e = acc.entry(*m).or_insert_with(|| self.field.zero());
                *e = &*e + &t;
            }
        };
        for i in 0..n {
            for j in 0..n {
                if self.basis[i].target != self.basis[j].source {
                    continue;
                }
                for k in 0..n {
                    if self.basis[j].target != self.basis[k].source {
                        continue;
                    }
                    let mut left = BTreeMap::new();
                    for (l, c) in self.product(i, j) {
                        combine(&mut left, c, self.product(*l, k));
                    }
                    let mut right = BTreeMap::new();
                    for (l, c) in self.product(j, k) {
                        combine(&mut right, c, self.product(i, *l));
                    }
                    left.retain(|_, v: &mut Scalar| !v.is_zero());
                    right.retain(|_, v: &mut Scalar| !v.is_zero());
                    if left != right {
                        return Err(Error::Sentinel(format!(
                            "associativity fails on basis triple ({}, {}, {})",
                            i, j, k
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The opposite algebra: arrows reversed, basis paths reversed, products
    /// transposed. Basis indices are shared with `self`.
    pub fn opposite(self: &Arc<Self>) -> Arc<BoundQuiverAlgebra> {
        if let Some(orig) = self.dual_of.as_ref().and_then(Weak::upgrade) {
            return orig;
        }
        self.opposite
            .get_or_init(|| {
                let products = self
                    .products
                    .iter()
                    .map(|(&(i, j), v)| ((j, i), v.clone()))
                    .collect();
                let mut alg = BoundQuiverAlgebra::from_parts(
                    self.field,
                    self.quiver.reversed(),
                    self.relations.iter().map(Relation::reversed).collect(),
                    self.basis.iter().map(Path::reversed).collect(),
                    products,
                    self.loewy_length,
                );
                alg.dual_of = Some(Arc::downgrade(self));
                alloc::boxed::Box::new(Arc::new(alg))
            })
            .clone()
    }

    /// Whether `other` is (structurally) the same algebra.
    pub fn same_as(&self, other: &BoundQuiverAlgebra) -> bool {
        core::ptr::eq(self, other) || self == other
    }
}

/// Which structural module to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructuralKind {
    Projective,
    Injective,
    Simple,
    Regular,
}

/// Projective `e_v A`, injective `D(A e_v)`, simple `S_v`, or the regular
/// module `A_A`.
pub fn structural_module(
    alg: &Arc<BoundQuiverAlgebra>,
    kind: StructuralKind,
    vertex: Option<usize>,
) -> Result<Representation> {
    let n = alg.vertex_count();
    let v = match (kind, vertex) {
        (StructuralKind::Regular, _) => 0,
        (_, None) => return Err(Error::Precondition("vertex required".into())),
        (_, Some(v)) if v >= n => return Err(Error::VertexOutOfRange { vertex: v, count: n }),
        (_, Some(v)) => v,
    };
    Ok(match kind {
        StructuralKind::Projective => projective(alg, v),
        StructuralKind::Injective => injective(alg, v),
        StructuralKind::Simple => simple(alg, v),
        StructuralKind::Regular => {
            let parts: Vec<Representation> = (0..n).map(|v| projective(alg, v)).collect();
            Representation::direct_sum_all(alg, &parts)
        }
    })
}

pub fn projective(alg: &Arc<BoundQuiverAlgebra>, v: usize) -> Representation {
    let f = alg.field();
    let q = alg.quiver();
    let dims: Vec<usize> = (0..q.vertex_count).map(|w| alg.basis_between(v, w).len()).collect();
    let maps = q
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let src = alg.basis_between(v, a.source);
            let tgt = alg.basis_between(v, a.target);
            let mut m = Matrix::zeros(f, tgt.len(), src.len());
            let ab = alg.arrow_basis_index(ai);
            for (c, &b) in src.iter().enumerate() {
                for (k, coef) in alg.product(b, ab) {
                    let r = tgt.iter().position(|x| x == k).expect("product stays in e_v A e_t");
                    m.set(r, c, coef.clone());
                }
            }
            m
        })
        .collect();
    Representation::from_parts(alg.clone(), dims, maps)
}

pub fn injective(alg: &Arc<BoundQuiverAlgebra>, v: usize) -> Representation {
    let f = alg.field();
    let q = alg.quiver();
    let dims: Vec<usize> = (0..q.vertex_count).map(|w| alg.basis_between(w, v).len()).collect();
    let maps = q
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            // (f . a)(x) = f(a x) for x in e_t A e_v.
            let src = alg.basis_between(a.source, v);
            let tgt = alg.basis_between(a.target, v);
            let mut m = Matrix::zeros(f, tgt.len(), src.len());
            let ab = alg.arrow_basis_index(ai);
            for (r, &x) in tgt.iter().enumerate() {
                for (k, coef) in alg.product(ab, x) {
                    let c = src.iter().position(|y| y == k).expect("product stays in e_s A e_v");
                    m.set(r, c, coef.clone());
                }
            }
            m
        })
        .collect();
    Representation::from_parts(alg.clone(), dims, maps)
}

pub fn simple(alg: &Arc<BoundQuiverAlgebra>, v: usize) -> Representation {
    let f = alg.field();
    let q = alg.quiver();
    let dims: Vec<usize> = (0..q.vertex_count).map(|w| usize::from(w == v)).collect();
    let maps = q
        .arrows
        .iter()
        .map(|a| Matrix::zeros(f, dims[a.target], dims[a.source]))
        .collect();
    Representation::from_parts(alg.clone(), dims, maps)
}

pub fn opposite_algebra(alg: &Arc<BoundQuiverAlgebra>) -> Arc<BoundQuiverAlgebra> {
    alg.opposite()
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn a2() -> Arc<BoundQuiverAlgebra> {
        build_algebra(Q, Quiver::from_edges(2, &[(0, 1)]).unwrap(), vec![], DEFAULT_PATH_LENGTH_CAP).unwrap()
    }

    fn n2() -> Arc<BoundQuiverAlgebra> {
        let q = Quiver::from_edges(1, &[(0, 0)]).unwrap();
        let rel = Relation::zero_path(Q, Path::from_arrows(&q, vec![0, 0]).unwrap()).unwrap();
        build_algebra(Q, q, vec![rel], DEFAULT_PATH_LENGTH_CAP).unwrap()
    }

    #[test]
    fn a2_has_dimension_three() {
        let a = a2();
        assert_eq!(a.dimension(), 3);
        assert_eq!(a.basis()[0], Path::trivial(0));
        assert_eq!(a.basis()[1], Path::trivial(1));
        assert_eq!(a.basis()[2].arrows, vec![0]);
        assert_eq!(a.loewy_length(), 2);
    }

    #[test]
    fn n2_has_dimension_two() {
        let a = n2();
        assert_eq!(a.dimension(), 2);
        assert_eq!(a.loewy_length(), 2);
    }

    #[test]
    fn free_loop_is_not_admissible() {
        let q = Quiver::from_edges(1, &[(0, 0)]).unwrap();
        assert_eq!(build_algebra(Q, q, vec![], 10).unwrap_err(), Error::NotAdmissible { cap: 10 });
    }

    #[test]
    fn commutative_square_dimension() {
        // 0 -> 1 -> 3, 0 -> 2 -> 3 with a*b - c*d: paths e0..e3, 4 arrows, one
        // surviving length-2 class.
        let q = Quiver::from_edges(4, &[(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
        let r = Relation::new(vec![
            (Q.one(), Path::from_arrows(&q, vec![0, 1]).unwrap()),
            (Q.from_i64(-1), Path::from_arrows(&q, vec![2, 3]).unwrap()),
        ])
        .unwrap();
        let a = build_algebra(Q, q, vec![r], 32).unwrap();
        assert_eq!(a.dimension(), 9);
    }

    #[test]
    fn non_homogeneous_relation_uses_truncation() {
        // x^2 - x^3 is equivalent to x^2 once J^3 is discarded.
        let q = Quiver::from_edges(1, &[(0, 0)]).unwrap();
        let r = Relation::new(vec![
            (Q.one(), Path::from_arrows(&q, vec![0, 0]).unwrap()),
            (Q.from_i64(-1), Path::from_arrows(&q, vec![0, 0, 0]).unwrap()),
        ])
        .unwrap();
        let a = build_algebra(Q, q, vec![r], 32).unwrap();
        assert_eq!(a.dimension(), 2);
    }

    #[test]
    fn relation_validation() {
        let q = Quiver::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(Path::from_arrows(&q, vec![1, 0]).is_err());
        let short = Path::from_arrows(&q, vec![2]).unwrap();
        assert!(Relation::zero_path(Q, short).is_err());
        assert!(Quiver::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn opposite_is_an_involution() {
        let a = a2();
        let op = a.opposite();
        assert_eq!(op.quiver().arrow(0).source, 1);
        assert_eq!(op.dimension(), 3);
        let opop = op.opposite();
        assert!(Arc::ptr_eq(&opop, &a));
        let n = n2();
        assert!(n.opposite().same_as(&n));
    }

    #[test]
    fn structural_dimensions() {
        let a = a2();
        let reg = structural_module(&a, StructuralKind::Regular, None).unwrap();
        assert_eq!(reg.total_dim(), a.dimension());
        let s = structural_module(&a, StructuralKind::Simple, Some(1)).unwrap();
        assert_eq!(s.dims(), &[0, 1]);
        assert!(structural_module(&a, StructuralKind::Projective, Some(5)).is_err());
        assert!(structural_module(&a, StructuralKind::Injective, None).is_err());
        let n = n2();
        assert_eq!(projective(&n, 0).total_dim(), 2);
        assert_eq!(injective(&n, 0).total_dim(), 2);
        let total: usize = (0..a.vertex_count()).map(|v| projective(&a, v).total_dim()).sum();
        assert_eq!(total, a.dimension());
    }
}
