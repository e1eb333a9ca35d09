//! Auslander algebras as bound quiver algebras, the subcategory `C_Λ` with
//! its canonical tilting module, the Auslander test and claim verification.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::artheory::{self, IndecompList};
use crate::error::{Error, Result};
use crate::exactmat::Matrix;
use crate::homology::{self, DomDim, GlobalDimension};
use crate::qalgebra::{self, Arrow, BoundQuiverAlgebra, Path, Quiver, Relation};
use crate::reps::{self, ModuleMorphism, Representation};
use crate::scalar::{Field, Scalar};
use crate::tilting::{self, Category, PairOutcome, PairSource};

/// Caps shared by the higher-level constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub size: usize,
    pub count: usize,
    pub resolution: usize,
    pub path_length: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            size: artheory::DEFAULT_SIZE_CAP,
            count: artheory::DEFAULT_COUNT_CAP,
            resolution: homology::DEFAULT_RESOLUTION_CAP,
            path_length: qalgebra::DEFAULT_PATH_LENGTH_CAP,
        }
    }
}

const MAX_PRESENTATION_PATHS: usize = 40_000;

/// `End(⊕ mods)` as a bound quiver algebra. Vertex `i` is `mods[i]`; an
/// arrow `i -> j` is a morphism `mods[i] -> mods[j]` and the path "a then b"
/// is the composite `b ∘ a`, so the quiver is the Hom-quiver of `mods`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub algebra: Arc<BoundQuiverAlgebra>,
    pub modules: Vec<Representation>,
    /// Morphism realizing each arrow.
    pub arrow_maps: Vec<ModuleMorphism>,
}

impl Presentation {
    /// Morphism realizing a path of the presented algebra.
    pub fn evaluate(&self, p: &Path) -> ModuleMorphism {
        let mut h = self.modules[p.source].identity();
        for &a in &p.arrows {
            h = h.then(&self.arrow_maps[a]);
        }
        h
    }
}

fn flatten(h: &ModuleMorphism) -> Vec<Scalar> {
    h.maps.iter().flat_map(|m| m.entries().iter().cloned()).collect()
}

/// A Hom space with a fixed basis and a coordinate map.
struct HomSpace {
    basis: Vec<ModuleMorphism>,
    coords: Option<Matrix>,
}

impl HomSpace {
    fn new(field: Field, basis: Vec<ModuleMorphism>, width: usize) -> Self {
        let coords = if basis.is_empty() {
            None
        } else {
            let cols = Matrix::from_rows(field, width, basis.iter().map(flatten).collect()).transpose();
            cols.left_inverse()
        };
        HomSpace { basis, coords }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn coordinates(&self, field: Field, h: &ModuleMorphism) -> Vec<Scalar> {
        match &self.coords {
            None => Vec::new(),
            Some(li) => li.mul(&Matrix::column_vector(field, flatten(h))).column(0),
        }
    }
}

/// Incremental row echelon basis of a subspace.
struct Echelon {
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Echelon {
    fn reduce(&self, v: &mut [Scalar]) {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let c = v[*p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x = &*x - &(&c * r);
                    }
                }
            }
        }
    }

    /// Adds `v`; false when it was already in the span.
    fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else { return false };
        let inv = v[p].inv();
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    *x = &*x - &(&c * r);
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Scalar::is_zero)
    }
}

/// Presents `End(⊕ mods)` by quiver and relations and verifies the result.
pub fn endomorphism_presentation(mods: &[Representation], cap: usize) -> Result<Presentation> {
    let Some(first) = mods.first() else {
        return Err(Error::Precondition("empty module list".into()));
    };
    let alg = first.algebra().clone();
    let f = alg.field();
    if mods.iter().any(|m| !m.algebra().same_as(&alg)) {
        return Err(Error::AlgebraMismatch);
    }
    let r = mods.len();
    let mut infos = Vec::with_capacity(r);
    for m in mods {
        let info = reps::end_info(m)?;
        if m.is_zero() || info.top_dim() != 1 {
            return Err(Error::Precondition("modules must be indecomposable".into()));
        }
        infos.push(info);
    }
    for i in 0..r {
        for j in i + 1..r {
            if mods[i].dims() == mods[j].dims() && reps::is_isomorphic_indecomposable(&mods[i], &mods[j]) {
                return Err(Error::Precondition(format!("modules {} and {} are isomorphic", i, j)));
            }
        }
    }
    let mut homs: Vec<Vec<HomSpace>> = Vec::with_capacity(r);
    for mi in mods {
        let mut row = Vec::with_capacity(r);
        for mj in mods {
            let width: usize = mi.dims().iter().zip(mj.dims()).map(|(a, b)| a * b).sum();
            row.push(HomSpace::new(f, reps::hom_basis(mi, mj)?, width));
        }
        homs.push(row);
    }
    let rad: Vec<Vec<Vec<ModuleMorphism>>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| if i == j { infos[i].radical_morphisms(&mods[i]) } else { homs[i][j].basis.clone() })
                .collect()
        })
        .collect();

    // Arrows: a complement of rad² in rad for each ordered pair.
    let mut arrows = Vec::new();
    let mut arrow_maps = Vec::new();
    for i in 0..r {
        for j in 0..r {
            if rad[i][j].is_empty() {
                continue;
            }
            let d = homs[i][j].dim();
            let mut cols: Vec<Vec<Scalar>> = Vec::new();
            for k in 0..r {
                for g in &rad[i][k] {
                    for h in &rad[k][j] {
                        cols.push(homs[i][j].coordinates(f, &g.then(h)));
                    }
                }
            }
            let sq = cols.len();
            cols.extend(rad[i][j].iter().map(|h| homs[i][j].coordinates(f, h)));
            let m = Matrix::from_rows(f, d, cols).transpose();
            let (_, pivots) = m.rref();
            for p in pivots.into_iter().filter(|&p| p >= sq) {
                arrows.push(Arrow { name: format!("a{}", arrows.len() + 1), source: i, target: j });
                arrow_maps.push(rad[i][j][p - sq].clone());
            }
        }
    }
    let quiver = Quiver::new(r, arrows)?;

    // Paths of length >= 2 with their values, until every path vanishes.
    let mut layers: Vec<Vec<(Path, ModuleMorphism)>> = vec![Vec::new(), Vec::new()];
    for (a, h) in arrow_maps.iter().enumerate() {
        layers[1].push((Path::from_arrows(&quiver, vec![a])?, h.clone()));
    }
    let mut total = layers[1].len();
    loop {
        let last = layers.last().unwrap();
        if last.iter().all(|(_, h)| h.is_zero()) {
            break;
        }
        if layers.len() > cap {
            return Err(Error::PresentationCapExceeded { cap });
        }
        let mut next = Vec::new();
        for (p, h) in last {
            for (a, g) in arrow_maps.iter().enumerate() {
                if quiver.arrow(a).source == p.target {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    next.push((Path { source: p.source, target: quiver.arrow(a).target, arrows }, h.then(g)));
                }
            }
        }
        total += next.len();
        if total > MAX_PRESENTATION_PATHS {
            return Err(Error::PresentationCapExceeded { cap });
        }
        layers.push(next);
    }
    let top = layers.len() - 1;
    let mut all_paths: Vec<(Path, ModuleMorphism)> = layers.into_iter().skip(2).flatten().collect();
    all_paths.sort_by(|a, b| a.0.deglex_cmp(&b.0));
    let index = |p: &Path| all_paths.binary_search_by(|q| q.0.deglex_cmp(p)).ok();

    // Kernel of the evaluation map on each span of parallel paths.
    let mut candidates: Vec<Vec<(usize, Scalar)>> = Vec::new();
    for s in 0..r {
        for t in 0..r {
            let ids: Vec<usize> = (0..all_paths.len())
                .filter(|&k| all_paths[k].0.source == s && all_paths[k].0.target == t)
                .collect();
            if ids.is_empty() {
                continue;
            }
            let d = homs[s][t].dim();
            let cols: Vec<Vec<Scalar>> = ids.iter().map(|&k| homs[s][t].coordinates(f, &all_paths[k].1)).collect();
            let ker = if d == 0 {
                Matrix::identity(f, ids.len())
            } else {
                Matrix::from_rows(f, d, cols).transpose().kernel_basis()
            };
            for c in 0..ker.cols() {
                let v = ker.column(c);
                candidates.push(ids.iter().zip(v).filter(|(_, x)| !x.is_zero()).map(|(&k, x)| (k, x)).collect());
            }
        }
    }
    // Normalize each candidate to leading coefficient one at its largest path.
    for c in candidates.iter_mut() {
        let lead = c.iter().map(|(k, _)| *k).max().unwrap();
        let inv = c.iter().find(|(k, _)| *k == lead).unwrap().1.inv();
        for (_, x) in c.iter_mut() {
            *x = &*x * &inv;
        }
    }
    candidates.sort_by_key(|c| c.iter().map(|(k, _)| *k).max());

    // Greedy minimal generating set of the ideal, truncated above `top`.
    let n_paths = all_paths.len();
    let mut span = Echelon { rows: Vec::new() };
    let mut left: Vec<Vec<Path>> = vec![Vec::new(); r];
    let mut right: Vec<Vec<Path>> = vec![Vec::new(); r];
    for v in 0..r {
        left[v].push(Path::trivial(v));
        right[v].push(Path::trivial(v));
    }
    for (a, arrow) in quiver.arrows().iter().enumerate() {
        let p = Path::from_arrows(&quiver, vec![a])?;
        left[arrow.target].push(p.clone());
        right[arrow.source].push(p);
    }
    for (p, _) in &all_paths {
        left[p.target].push(p.clone());
        right[p.source].push(p.clone());
    }
    let mut chosen: Vec<Vec<(usize, Scalar)>> = Vec::new();
    for c in candidates {
        let mut dense = vec![f.zero(); n_paths];
        for (k, x) in &c {
            dense[*k] = x.clone();
        }
        if span.contains(&dense) {
            continue;
        }
        let s = all_paths[c[0].0].0.source;
        let t = all_paths[c[0].0].0.target;
        let shortest = c.iter().map(|(k, _)| all_paths[*k].0.len()).min().unwrap();
        for u in &left[s] {
            for w in &right[t] {
                if u.len() + shortest + w.len() > top {
                    continue;
                }
                let mut v = vec![f.zero(); n_paths];
                for (k, x) in &c {
                    let p = u.concat(&all_paths[*k].0).and_then(|p| p.concat(w)).unwrap();
                    if let Some(i) = index(&p) {
                        v[i] = &v[i] + x;
                    }
                }
                span.insert(v);
            }
        }
        chosen.push(c);
    }
    let to_relation = |c: &[(usize, Scalar)]| {
        let mut terms: Vec<(Scalar, Path)> = c.iter().map(|(k, x)| (x.clone(), all_paths[*k].0.clone())).collect();
        terms.sort_by(|a, b| b.1.deglex_cmp(&a.1));
        Relation::new(terms)
    };
    let relations: Vec<Relation> = chosen.iter().map(|c| to_relation(c)).collect::<Result<_>>()?;
    let algebra = qalgebra::build_algebra(f, quiver, relations, cap)?;
    let pres = Presentation { algebra, modules: mods.to_vec(), arrow_maps };
    verify_presentation(&pres, &homs)?;
    Ok(pres)
}

/// The presented algebra must have the dimension of `End(⊕ mods)` and the
/// evaluation map must be an injective algebra map on all basis pairs.
fn verify_presentation(pres: &Presentation, homs: &[Vec<HomSpace>]) -> Result<()> {
    let a = &pres.algebra;
    let f = a.field();
    let expected: usize = homs.iter().flatten().map(HomSpace::dim).sum();
    if a.dimension() != expected {
        return Err(Error::Sentinel(format!(
            "presented algebra has dimension {}, endomorphism algebra {}",
            a.dimension(),
            expected
        )));
    }
    let values: Vec<ModuleMorphism> = a.basis().iter().map(|p| pres.evaluate(p)).collect();
    let r = pres.modules.len();
    for s in 0..r {
        for t in 0..r {
            let ids = a.basis_between(s, t);
            let rows: Vec<Vec<Scalar>> = ids.iter().map(|&i| homs[s][t].coordinates(f, &values[i])).collect();
            if Matrix::from_rows(f, homs[s][t].dim(), rows).rank() != ids.len() {
                return Err(Error::Sentinel("evaluation of the presentation is not injective".into()));
            }
        }
    }
    for (i, pi) in a.basis().iter().enumerate() {
        for (j, pj) in a.basis().iter().enumerate() {
            let prod = a.product(i, j);
            if pi.target != pj.source {
                if !prod.is_empty() {
                    return Err(Error::Sentinel("product of non-composable basis paths".into()));
                }
                continue;
            }
            let mut lhs = values[i].then(&values[j]);
            for (k, c) in prod {
                lhs = lhs.sub(&values[*k].scale(c));
            }
            if !lhs.is_zero() {
                return Err(Error::Sentinel(format!("presentation fails on basis pair ({}, {})", i, j)));
            }
        }
    }
    Ok(())
}

/// A base algebra, its indecomposables and its Auslander algebra.
#[derive(Clone, Debug)]
pub struct AuslanderContext {
    pub base: Arc<BoundQuiverAlgebra>,
    pub base_list: IndecompList,
    pub presentation: Presentation,
    /// Indecomposables of the Auslander algebra, when certified within caps.
    pub list: Option<IndecompList>,
}

impl AuslanderContext {
    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.presentation.algebra
    }
}

/// Builds the Auslander algebra of a representation-finite algebra.
pub fn auslander_algebra(base: &Arc<BoundQuiverAlgebra>, caps: Caps) -> Result<AuslanderContext> {
    let base_list = artheory::enumerate_indecomposables(base, caps.size, caps.count, caps.resolution)?;
    if !base_list.is_certified() {
        return Err(Error::NotCertified);
    }
    let mods: Vec<Representation> = base_list.entries.iter().map(|e| e.module.clone()).collect();
    let presentation = endomorphism_presentation(&mods, caps.path_length)?;
    let list = artheory::enumerate_indecomposables(&presentation.algebra, caps.size, caps.count, caps.resolution)?;
    let list = if list.is_certified() { Some(list) } else { None };
    Ok(AuslanderContext { base: base.clone(), base_list, presentation, list })
}

/// Ids of the indecomposable projective-injectives (summands of `Q̃`).
pub fn projective_injective_generator(cat: &Category<'_>) -> Vec<usize> {
    cat.list.entries.iter().filter(|e| e.projective_injective()).map(|e| e.id).collect()
}

/// Projectives or injectives in `C_Λ` that are not projective-injective.
fn prelim1_violations(c: &[usize], cat: &Category<'_>) -> Vec<usize> {
    c.iter()
        .copied()
        .filter(|&i| {
            let e = &cat.list.entries[i];
            (e.projective || e.injective) && !e.projective_injective()
        })
        .collect()
}

/// Ids of the indecomposables in `C_Λ = Gen Q̃ ∩ Cogen Q̃`.
pub fn c_lambda(cat: &Category<'_>) -> Result<Vec<usize>> {
    let q = projective_injective_generator(cat);
    let c = c_members(&q, cat)?;
    let bad = prelim1_violations(&c, cat);
    if !bad.is_empty() {
        return Err(Error::Sentinel(format!("projective or injective in C_Λ not projective-injective: {:?}", bad)));
    }
    Ok(c)
}

fn c_members(q: &[usize], cat: &Category<'_>) -> Result<Vec<usize>> {
    if q.is_empty() {
        return Ok(Vec::new());
    }
    let gen = cat.gen_set(q)?;
    let cogen = cat.cogen_set(q)?;
    Ok((0..cat.len()).filter(|&i| gen[i] && cogen[i]).collect())
}

/// `Q̃ ⊕ X`, with `X` the indecomposables of `C_Λ` of projective dimension one.
fn q_plus_x(cat: &Category<'_>, c: &[usize]) -> Vec<usize> {
    let mut t: Vec<usize> = projective_injective_generator(cat);
    t.extend(c.iter().copied().filter(|&i| cat.pd(i).is(1)));
    t.sort_unstable();
    t.dedup();
    t
}

/// `T_C = Q̃ ⊕ X` when it is tilting, `None` when `C_Λ` holds no tilting module.
pub fn canonical_tilting(cat: &Category<'_>) -> Result<Option<Vec<usize>>> {
    let c = c_lambda(cat)?;
    let t = q_plus_x(cat, &c);
    if t.is_empty() {
        return Ok(None);
    }
    let flags = tilting::classify_ids(&t, cat)?;
    if !flags.partial_tilting {
        return Err(Error::Sentinel("Q̃ ⊕ X is not partial tilting".into()));
    }
    if !flags.tilting {
        return Ok(None);
    }
    if q_plus_x(cat, &c_lambda(cat)?) != t {
        return Err(Error::Sentinel("T_C is not unique".into()));
    }
    Ok(Some(t))
}

/// Outcome of the Auslander test with both routes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuslanderVerdict {
    pub value: bool,
    pub global_dimension: GlobalDimension,
    pub dominant_dimension: DomDim,
    pub li_zhang: bool,
    /// Vertices whose indecomposable injective is projective.
    pub projective_injective: Vec<usize>,
    /// Vertices whose simple socle has projective dimension at most one.
    pub socle_pd_at_most_one: Vec<usize>,
}

/// gl.dim ≤ 2 and domdim ≥ 2, cross-checked against the Li–Zhang
/// characterization through the socles of the indecomposable injectives.
pub fn is_auslander(alg: &Arc<BoundQuiverAlgebra>, cap: usize) -> Result<AuslanderVerdict> {
    let gl = homology::global_dimension(alg, cap)?;
    let dd = homology::dominant_dimension(alg, cap)?;
    let value = gl.value.at_most(2) && dd.at_least(2);
    let n = alg.vertex_count();
    let pi = homology::projective_injective_vertices(alg);
    let projective_injective: Vec<usize> = (0..n).filter(|&v| pi[v]).collect();
    let socle_pd_at_most_one: Vec<usize> = (0..n)
        .filter(|&v| homology::projective_dimension(&qalgebra::simple(alg, v), cap).at_most(1))
        .collect();
    let li_zhang = gl.value.at_most(2) && projective_injective == socle_pd_at_most_one;
    if li_zhang != value {
        return Err(Error::CharacterizationDisagreement(format!(
            "gl.dim {} and domdim {} give {}, Li–Zhang gives {}",
            gl.value, dd, value, li_zhang
        )));
    }
    Ok(AuslanderVerdict {
        value,
        global_dimension: gl,
        dominant_dimension: dd,
        li_zhang,
        projective_injective,
        socle_pd_at_most_one,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    T1,
    T2,
    T3,
    T4,
    Cbs,
    Char,
    MineProp,
    Prelim1,
    Prelim2,
    Prelim3,
    TorsionCount,
    Corollary,
    SepProp,
}

impl Claim {
    pub const ALL: [Claim; 13] = [
        Claim::T1,
        Claim::T2,
        Claim::T3,
        Claim::T4,
        Claim::Cbs,
        Claim::Char,
        Claim::MineProp,
        Claim::Prelim1,
        Claim::Prelim2,
        Claim::Prelim3,
        Claim::TorsionCount,
        Claim::Corollary,
        Claim::SepProp,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::T1 => "T1",
            Claim::T2 => "T2",
            Claim::T3 => "T3",
            Claim::T4 => "T4",
            Claim::Cbs => "CBS",
            Claim::Char => "CHAR",
            Claim::MineProp => "MINE-PROP",
            Claim::Prelim1 => "PRELIM1",
            Claim::Prelim2 => "PRELIM2",
            Claim::Prelim3 => "PRELIM3",
            Claim::TorsionCount => "TORSION-COUNT",
            Claim::Corollary => "COROLLARY",
            Claim::SepProp => "SEP-PROP",
        }
    }

    pub fn parse(s: &str) -> Option<Claim> {
        Claim::ALL.iter().copied().find(|c| c.id() == s)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not_applicable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactValue {
    Bool(bool),
    Count(usize),
    Ids(Vec<usize>),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimReport {
    pub claim: Claim,
    pub verdict: Verdict,
    /// Named sub-results and witnesses, in a fixed order.
    pub facts: Vec<(String, FactValue)>,
}

struct Facts(Vec<(String, FactValue)>);

impl Facts {
    fn bool(&mut self, k: &str, v: bool) -> bool {
        self.0.push((k.into(), FactValue::Bool(v)));
        v
    }

    fn count(&mut self, k: &str, v: usize) {
        self.0.push((k.into(), FactValue::Count(v)));
    }

    fn ids(&mut self, k: &str, v: Vec<usize>) {
        self.0.push((k.into(), FactValue::Ids(v)));
    }

    fn text(&mut self, k: &str, v: String) {
        self.0.push((k.into(), FactValue::Text(v)));
    }
}

fn sym_diff(a: &[usize], b: &[usize]) -> Vec<usize> {
    let a: BTreeSet<usize> = a.iter().copied().collect();
    let b: BTreeSet<usize> = b.iter().copied().collect();
    a.symmetric_difference(&b).copied().collect()
}

/// Shared data for claim checks over one algebra.
struct Claims<'a> {
    cat: Category<'a>,
    verdict: AuslanderVerdict,
    c: Vec<usize>,
    t_c: Option<Vec<usize>>,
    p1: Vec<usize>,
    i1: Vec<usize>,
    tiltings: Option<Vec<Vec<usize>>>,
}

/// Runs the requested claim checks over a certified list of indecomposables.
pub fn verify_claims(list: &IndecompList, claims: &[Claim], cap: usize) -> Result<Vec<ClaimReport>> {
    if claims.is_empty() {
        return Ok(Vec::new());
    }
    let cat = Category::new(list, cap)?;
    let verdict = is_auslander(&list.algebra, cap)?;
    let q = projective_injective_generator(&cat);
    let c = c_members(&q, &cat)?;
    let t_c = if prelim1_violations(&c, &cat).is_empty() { canonical_tilting(&cat)? } else { None };
    let p1 = (0..cat.len()).filter(|&i| cat.pd(i).at_most(1)).collect();
    let i1 = (0..cat.len()).filter(|&i| cat.id(i).at_most(1)).collect();
    let mut ctx = Claims { cat, verdict, c, t_c, p1, i1, tiltings: None };
    let mut out = Vec::with_capacity(claims.len());
    for &claim in claims {
        let mut facts = Facts(Vec::new());
        let verdict = ctx.check(claim, &mut facts)?;
        out.push(ClaimReport { claim, verdict, facts: facts.0 });
    }
    Ok(out)
}

fn pass_if(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

impl<'a> Claims<'a> {
    fn tiltings(&mut self) -> Result<Vec<Vec<usize>>> {
        if self.tiltings.is_none() {
            self.tiltings = Some(tilting::enumerate_tilting(&self.cat)?);
        }
        Ok(self.tiltings.clone().unwrap())
    }

    fn check(&mut self, claim: Claim, facts: &mut Facts) -> Result<Verdict> {
        let aus = self.verdict.value;
        let cat = &self.cat;
        match claim {
            Claim::T1 => {
                facts.bool("is_auslander", aus);
                let inj_pd1: Vec<usize> = cat.injective_ids().into_iter().filter(|&i| cat.pd(i).is(1)).collect();
                let mut forward = true;
                if aus {
                    let Some(t) = &self.t_c else {
                        facts.bool("canonical_tilting_exists", false);
                        return Ok(Verdict::Fail);
                    };
                    facts.ids("canonical_tilting", t.clone());
                    match tilting::torsion_pair_from(PairSource::Cotilting(t.clone()), cat)? {
                        PairOutcome::Valid(tp) => {
                            forward &= facts.bool("forward_hereditary", tilting::is_hereditary_pair(&tp, cat)?);
                            let diff = sym_diff(&tp.free, &self.p1);
                            forward &= facts.bool("forward_free_is_p1", diff.is_empty());
                            if !diff.is_empty() {
                                facts.ids("witness_free_vs_p1", diff);
                            }
                        }
                        PairOutcome::NotATorsionPair { reason, witness, .. } => {
                            forward = false;
                            facts.text("forward_not_a_torsion_pair", reason);
                            facts.ids("witness", vec![witness]);
                        }
                    }
                    forward &= facts.bool("forward_no_injective_pd_1", inj_pd1.is_empty());
                }
                let backward = match tilting::torsion_pair_from(PairSource::CandidateFree(self.p1.clone()), cat)? {
                    PairOutcome::Valid(tp) => {
                        facts.bool("candidate_is_torsion_pair", true);
                        let her = facts.bool("candidate_hereditary", tilting::is_hereditary_pair(&tp, cat)?);
                        her && inj_pd1.is_empty()
                    }
                    PairOutcome::NotATorsionPair { reason, witness, .. } => {
                        facts.bool("candidate_is_torsion_pair", false);
                        facts.text("candidate_failure", reason);
                        facts.ids("candidate_witness", vec![witness]);
                        false
                    }
                };
                facts.ids("injectives_with_pd_1", inj_pd1);
                facts.bool("backward_verdict", backward);
                Ok(pass_if(forward && backward == aus))
            }
            Claim::T2 => {
                if !aus {
                    facts.text("reason", "not an Auslander algebra".into());
                    return Ok(Verdict::NotApplicable);
                }
                facts.ids("p1", self.p1.clone());
                let (tl, ctl) = torsionless_counts(cat)?;
                facts.count("torsionless", tl);
                facts.count("co_torsionless", ctl);
                let mut ok = tl == ctl;
                match &self.t_c {
                    Some(t) => {
                        let cogen = cat.cogen_set(t)?;
                        let ids: Vec<usize> = (0..cat.len()).filter(|&i| cogen[i]).collect();
                        let diff = sym_diff(&ids, &self.p1);
                        ok &= facts.bool("cogen_t_c_is_p1", diff.is_empty());
                        if !diff.is_empty() {
                            facts.ids("witness", diff);
                        }
                    }
                    None => ok &= facts.bool("canonical_tilting_exists", false),
                }
                facts.text("representation_infinite_direction", "not_applicable".into());
                Ok(pass_if(ok))
            }
            Claim::T3 => {
                if !aus {
                    facts.text("reason", "not an Auslander algebra".into());
                    return Ok(Verdict::NotApplicable);
                }
                let Some(t) = self.t_c.clone() else {
                    facts.bool("canonical_tilting_exists", false);
                    return Ok(Verdict::Fail);
                };
                facts.ids("canonical_tilting", t.clone());
                let h = tilting::has_hereditary_property(&t, cat)?;
                let c = tilting::has_cohereditary_property(&t, cat)?;
                facts.count("gen_modules_checked", h.checks.len());
                facts.count("cogen_modules_checked", c.checks.len());
                let hf: Vec<usize> = h.failures().map(|x| x.module).collect();
                let cf: Vec<usize> = c.failures().map(|x| x.module).collect();
                facts.bool("hereditary_property", h.holds);
                facts.bool("cohereditary_property", c.holds);
                if !hf.is_empty() {
                    facts.ids("witness_hereditary", hf);
                }
                if !cf.is_empty() {
                    facts.ids("witness_cohereditary", cf);
                }
                Ok(pass_if(h.holds && c.holds))
            }
            Claim::T4 => {
                let gl = self.verdict.global_dimension.value;
                facts.text("global_dimension", format!("{}", gl));
                if gl.at_most(1) {
                    let tilts = self.tiltings()?;
                    let cat = &self.cat;
                    facts.count("tilting_modules", tilts.len());
                    let mut bad = Vec::new();
                    for t in &tilts {
                        if !tilting::has_hereditary_property(t, cat)?.holds {
                            bad.extend(t.iter().copied());
                        }
                    }
                    let ok = facts.bool("all_have_hereditary_property", bad.is_empty());
                    if !ok {
                        facts.ids("witness", bad);
                    }
                    Ok(pass_if(ok))
                } else {
                    let reg = cat.projective_ids();
                    let report = tilting::has_hereditary_property(&reg, cat)?;
                    facts.bool("regular_has_hereditary_property", report.holds);
                    let witness = report.failures().map(|x| x.module).find(|&m| !cat.pd(m).at_most(1));
                    match witness {
                        Some(m) => {
                            facts.ids("witness", vec![m]);
                            facts.text("witness_pd", format!("{}", cat.pd(m)));
                        }
                        None => {
                            facts.bool("pd_2_witness_found", false);
                        }
                    }
                    Ok(pass_if(!report.holds && witness.is_some()))
                }
            }
            Claim::Cbs => {
                let gl = self.verdict.global_dimension.value;
                if !gl.is(2) {
                    facts.text("reason", format!("global dimension {}", gl));
                    return Ok(Verdict::NotApplicable);
                }
                let tc = match &self.t_c {
                    Some(t) => {
                        facts.ids("canonical_tilting", t.clone());
                        tilting::classify_ids(t, cat)?.cotilting
                    }
                    None => false,
                };
                facts.bool("tilting_cotilting_in_c", tc);
                facts.bool("is_auslander", aus);
                Ok(pass_if(tc == aus))
            }
            Claim::Char => {
                let v = &self.verdict;
                facts.text("global_dimension", format!("{}", v.global_dimension.value));
                facts.text("dominant_dimension", format!("{}", v.dominant_dimension));
                facts.bool("domdim_route", v.value);
                facts.bool("li_zhang_route", v.li_zhang);
                facts.ids("projective_injective_vertices", v.projective_injective.clone());
                facts.ids("socle_pd_at_most_one_vertices", v.socle_pd_at_most_one.clone());
                let eq = facts.bool("set_equality", v.projective_injective == v.socle_pd_at_most_one);
                Ok(pass_if(v.value == v.li_zhang && (!v.value || eq)))
            }
            Claim::MineProp => {
                if !aus {
                    facts.text("reason", "not an Auslander algebra".into());
                    return Ok(Verdict::NotApplicable);
                }
                let Some(t) = &self.t_c else {
                    facts.bool("canonical_tilting_exists", false);
                    return Ok(Verdict::Fail);
                };
                let cogen = cat.cogen_set(t)?;
                let gen = cat.gen_set(t)?;
                let cogen_ids: Vec<usize> = (0..cat.len()).filter(|&i| cogen[i]).collect();
                let gen_ids: Vec<usize> = (0..cat.len()).filter(|&i| gen[i]).collect();
                facts.ids("p1", self.p1.clone());
                facts.ids("i1", self.i1.clone());
                let d1 = sym_diff(&cogen_ids, &self.p1);
                let d2 = sym_diff(&gen_ids, &self.i1);
                let ok1 = facts.bool("p1_is_cogen_t_c", d1.is_empty());
                let ok2 = facts.bool("i1_is_gen_t_c", d2.is_empty());
                if !ok1 {
                    facts.ids("witness_p1", d1);
                }
                if !ok2 {
                    facts.ids("witness_i1", d2);
                }
                Ok(pass_if(ok1 && ok2))
            }
            Claim::Prelim1 => {
                facts.ids("c_lambda", self.c.clone());
                let bad = prelim1_violations(&self.c, cat);
                let ok = bad.is_empty();
                if !ok {
                    facts.ids("witness", bad);
                }
                Ok(pass_if(ok))
            }
            Claim::Prelim2 => {
                let ys: Vec<usize> = (0..cat.len()).filter(|&i| cat.pd(i).is(1)).collect();
                let mut bad = Vec::new();
                for &x in &self.c {
                    for &y in &ys {
                        if cat.ext1(y, x)? != 0 {
                            bad.push(y);
                            bad.push(x);
                        }
                    }
                }
                facts.count("pairs_checked", self.c.len() * ys.len());
                let ok = bad.is_empty();
                if !ok {
                    facts.ids("witness_pairs", bad);
                }
                Ok(pass_if(ok))
            }
            Claim::Prelim3 => {
                let t = q_plus_x(cat, &self.c);
                let x: Vec<usize> = self.c.iter().copied().filter(|&i| cat.pd(i).is(1)).collect();
                facts.ids("x", x);
                facts.ids("q_plus_x", t.clone());
                let partial = !t.is_empty() && tilting::classify_ids(&t, cat)?.partial_tilting;
                let partial = facts.bool("partial_tilting", partial || t.is_empty());
                let inside = tilting_in(&self.c, cat)?;
                facts.count("tilting_modules_in_c", inside.len());
                let bad: Vec<usize> = inside.iter().filter(|s| **s != t).flatten().copied().collect();
                let unique = facts.bool("equal_to_q_plus_x", bad.is_empty());
                if !unique {
                    facts.ids("witness", bad);
                }
                Ok(pass_if(partial && unique))
            }
            Claim::TorsionCount => {
                let (tl, ctl) = torsionless_counts(cat)?;
                facts.count("torsionless", tl);
                facts.count("co_torsionless", ctl);
                Ok(pass_if(tl == ctl))
            }
            Claim::Corollary => {
                let tilts = self.tiltings()?;
                let cat = &self.cat;
                let mut applicable = 0;
                let mut bad = Vec::new();
                for t in &tilts {
                    let gen = cat.gen_set(t)?;
                    if (0..cat.len()).filter(|&i| gen[i]).all(|i| cat.id(i).at_most(1)) {
                        applicable += 1;
                        if !tilting::has_hereditary_property(t, cat)?.holds {
                            bad.extend(t.iter().copied());
                        }
                    }
                }
                facts.count("tilting_modules", tilts.len());
                facts.count("hypothesis_holds", applicable);
                let ok = bad.is_empty();
                if !ok {
                    facts.ids("witness", bad);
                }
                Ok(pass_if(ok))
            }
            Claim::SepProp => {
                let gl = self.verdict.global_dimension.value;
                let tilts = self.tiltings()?;
                let cat = &self.cat;
                let mut separating = 0;
                let mut bad = Vec::new();
                for t in &tilts {
                    let PairOutcome::Valid(tp) = tilting::torsion_pair_from(PairSource::Tilting(t.clone()), cat)? else {
                        return Err(Error::Sentinel(format!("tilting module {:?} induces no torsion pair", t)));
                    };
                    if tilting::is_splitting_pair(&tp, cat)? {
                        separating += 1;
                        if tilting::has_hereditary_property(t, cat)?.holds && !gl.at_most(2) {
                            bad.extend(t.iter().copied());
                        }
                    }
                }
                facts.count("tilting_modules", tilts.len());
                facts.count("separating", separating);
                facts.text("global_dimension", format!("{}", gl));
                let ok = bad.is_empty();
                if !ok {
                    facts.ids("witness", bad);
                }
                Ok(pass_if(ok))
            }
        }
    }
}

/// Numbers of indecomposable torsionless and co-torsionless modules.
pub fn torsionless_counts(cat: &Category<'_>) -> Result<(usize, usize)> {
    let cogen = cat.cogen_set(&cat.projective_ids())?;
    let gen = cat.gen_set(&cat.injective_ids())?;
    Ok((cogen.iter().filter(|&&b| b).count(), gen.iter().filter(|&&b| b).count()))
}

/// Basic tilting modules all of whose summands lie in `ids`.
fn tilting_in(ids: &[usize], cat: &Category<'_>) -> Result<Vec<Vec<usize>>> {
    let n = cat.list.algebra.vertex_count();
    let mut cands = Vec::new();
    for &x in ids {
        if cat.pd(x).at_most(1) && cat.ext1(x, x)? == 0 {
            cands.push(x);
        }
    }
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    grow(&cands, n, 0, &mut stack, cat, &mut out)?;
    Ok(out)
}

fn grow(
    cands: &[usize],
    n: usize,
    start: usize,
    stack: &mut Vec<usize>,
    cat: &Category<'_>,
    out: &mut Vec<Vec<usize>>,
) -> Result<()> {
    if stack.len() == n {
        out.push(stack.clone());
        return Ok(());
    }
    for k in start..cands.len() {
        let x = cands[k];
        let mut ok = true;
        for &y in stack.iter() {
            if cat.ext1(x, y)? != 0 || cat.ext1(y, x)? != 0 {
                ok = false;
                break;
            }
        }
        if ok {
            stack.push(x);
            grow(cands, n, k + 1, stack, cat, out)?;
            stack.pop();
        }
    }
    Ok(())
}
