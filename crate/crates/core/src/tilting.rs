//! Gen/Cogen, tilting and cotilting recognition, torsion pairs over an
//! enumerated list of indecomposables, approximations and the hereditary
//! property.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::artheory::{self, IndecompList, TauDirection};
use crate::error::{Error, Result};
use crate::exactmat::Matrix;
use crate::homology::{self, HomDim};
use crate::qalgebra;
use crate::reps::{self, dualize, ModuleMorphism, Representation};
use crate::scalar::Scalar;

/// Trace of `T` in `M`: the sum of the images of all maps `T -> M`.
pub fn trace(t: &Representation, m: &Representation) -> Result<(Representation, ModuleMorphism)> {
    let maps = reps::hom_basis(t, m)?;
    Ok(m.submodule(&image_sum(&maps, m)))
}

fn image_sum(maps: &[ModuleMorphism], m: &Representation) -> Vec<Matrix> {
    let f = m.field();
    (0..m.dims().len())
        .map(|v| {
            let cols: Vec<Matrix> = maps.iter().map(|h| h.maps[v].clone()).collect();
            Matrix::hstack_all(f, m.dims()[v], &cols).column_basis()
        })
        .collect()
}

/// Reject of `C` in `M`: the joint kernel of all maps `M -> C`.
pub fn reject(c: &Representation, m: &Representation) -> Result<(Representation, ModuleMorphism)> {
    let maps = reps::hom_basis(m, c)?;
    let f = m.field();
    let bases: Vec<Matrix> = (0..m.dims().len())
        .map(|v| {
            let rows: Vec<Matrix> = maps.iter().map(|h| h.maps[v].clone()).collect();
            Matrix::vstack_all(f, m.dims()[v], &rows).kernel_basis()
        })
        .collect();
    Ok(m.submodule(&bases))
}

/// `M ∈ Gen T`, with the trace of `T` in `M` as witness.
pub fn gen_membership(t: &Representation, m: &Representation) -> Result<(bool, Representation)> {
    let (tr, _) = trace(t, m)?;
    Ok((tr.total_dim() == m.total_dim(), tr))
}

/// `M ∈ Cogen C`, with the reject of `C` in `M` as witness.
pub fn cogen_membership(c: &Representation, m: &Representation) -> Result<(bool, Representation)> {
    let (rj, _) = reject(c, m)?;
    Ok((rj.is_zero(), rj))
}

/// A short exact sequence `0 -> A -> B -> C -> 0` certifying condition (3)
/// of tilting (`A = Λ`) or its dual (`C = DΛ`).
#[derive(Clone, Debug)]
pub struct SequenceWitness {
    pub left: Representation,
    pub middle: Representation,
    pub right: Representation,
    pub mono: ModuleMorphism,
    pub epi: ModuleMorphism,
}

#[derive(Clone, Debug, Default)]
pub struct TiltingFlags {
    pub partial_tilting: bool,
    pub tilting: bool,
    pub partial_cotilting: bool,
    pub cotilting: bool,
    pub tilting_witness: Option<SequenceWitness>,
    pub cotilting_witness: Option<SequenceWitness>,
}

/// Whether every indecomposable summand of `x` is isomorphic to one of `parts`.
fn in_add(x: &Representation, parts: &[Representation]) -> Result<bool> {
    for (s, _) in reps::decompose(x)? {
        if !parts.iter().any(|p| reps::is_isomorphic_indecomposable(p, &s)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decides conditions (1)-(3) of tilting and their duals. Condition (3) is
/// decided by counting summands; affirmative answers carry a constructed
/// and verified sequence.
pub fn classify_tilting(t: &Representation, cap: usize) -> Result<TiltingFlags> {
    let alg = t.algebra().clone();
    let n = alg.vertex_count();
    let parts: Vec<Representation> = reps::decompose(t)?.into_iter().map(|(s, _)| s).collect();
    let self_ext = homology::ext_dim(1, t, t, cap)?;
    let mut flags = TiltingFlags::default();
    flags.partial_tilting = self_ext == 0 && homology::projective_dimension(t, cap).at_most(1);
    flags.partial_cotilting = self_ext == 0 && homology::injective_dimension(t, cap).at_most(1);
    if flags.partial_tilting && parts.len() == n {
        // Λ -> T' summed over the minimal left approximations of each P(v).
        let mut pieces = Vec::with_capacity(n);
        for v in 0..n {
            let p = qalgebra::projective(&alg, v);
            let a = minimal_left_approximation(&parts, &p)?;
            let (right, epi) = a.map.cokernel(&a.module);
            if !a.map.is_injective() || !in_add(&right, &parts)? {
                return Err(Error::Sentinel("tilting module without a coresolution of Λ in add T".into()));
            }
            pieces.push((p, a, right, epi));
        }
        flags.tilting = true;
        flags.tilting_witness = Some(assemble(&alg, pieces));
    }
    if flags.partial_cotilting && parts.len() == n {
        let mut pieces = Vec::with_capacity(n);
        for v in 0..n {
            let i = qalgebra::injective(&alg, v);
            let a = minimal_right_approximation(&parts, &i)?;
            let (left, mono) = a.map.kernel(&a.module);
            if !a.map.is_surjective() || !in_add(&left, &parts)? {
                return Err(Error::Sentinel("cotilting module without a resolution of DΛ in add T".into()));
            }
            pieces.push((left, Approximation { map: mono, ..a.clone() }, i, a.map));
        }
        flags.cotilting = true;
        flags.cotilting_witness = Some(assemble(&alg, pieces));
    }
    Ok(flags)
}

/// Direct sum of short exact sequences `(left, middle with mono, right, epi)`.
fn assemble(
    alg: &alloc::sync::Arc<crate::qalgebra::BoundQuiverAlgebra>,
    pieces: Vec<(Representation, Approximation, Representation, ModuleMorphism)>,
) -> SequenceWitness {
    let f = alg.field();
    let lefts: Vec<Representation> = pieces.iter().map(|p| p.0.clone()).collect();
    let mids: Vec<Representation> = pieces.iter().map(|p| p.1.module.clone()).collect();
    let rights: Vec<Representation> = pieces.iter().map(|p| p.2.clone()).collect();
    let monos: Vec<ModuleMorphism> = pieces.iter().map(|p| p.1.map.clone()).collect();
    let epis: Vec<ModuleMorphism> = pieces.iter().map(|p| p.3.clone()).collect();
    SequenceWitness {
        left: Representation::direct_sum_all(alg, &lefts),
        middle: Representation::direct_sum_all(alg, &mids),
        right: Representation::direct_sum_all(alg, &rights),
        mono: ModuleMorphism::block_diag(&monos, f),
        epi: ModuleMorphism::block_diag(&epis, f),
    }
}

/// Cached homological data over a certified list of indecomposables.
pub struct Category<'a> {
    pub list: &'a IndecompList,
    pub cap: usize,
    pd: Vec<HomDim>,
    id: Vec<HomDim>,
    hom: RefCell<BTreeMap<(usize, usize), usize>>,
    ext: RefCell<BTreeMap<(usize, usize), usize>>,
    tau: RefCell<BTreeMap<(usize, bool), Option<usize>>>,
    resolutions: Vec<homology::Resolution>,
}

impl<'a> Category<'a> {
    pub fn new(list: &'a IndecompList, cap: usize) -> Result<Self> {
        if !list.is_certified() {
            return Err(Error::NotCertified);
        }
        let resolutions: Vec<homology::Resolution> = list
            .entries
            .iter()
            .map(|e| homology::minimal_resolution(&e.module, homology::Direction::Projective, cap.max(2)))
            .collect();
        let pd = resolutions.iter().map(|r| limit(r.length(), cap)).collect();
        let id = list.entries.iter().map(|e| homology::injective_dimension(&e.module, cap)).collect();
        Ok(Category {
            list,
            cap,
            pd,
            id,
            hom: RefCell::new(BTreeMap::new()),
            ext: RefCell::new(BTreeMap::new()),
            tau: RefCell::new(BTreeMap::new()),
            resolutions,
        })
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn module(&self, i: usize) -> &Representation {
        self.list.module(i)
    }

    pub fn pd(&self, i: usize) -> HomDim {
        self.pd[i]
    }

    pub fn id(&self, i: usize) -> HomDim {
        self.id[i]
    }

    pub fn hom(&self, i: usize, j: usize) -> Result<usize> {
        if let Some(&v) = self.hom.borrow().get(&(i, j)) {
            return Ok(v);
        }
        let v = reps::hom_dim(self.module(i), self.module(j))?;
        self.hom.borrow_mut().insert((i, j), v);
        Ok(v)
    }

    pub fn ext1(&self, i: usize, j: usize) -> Result<usize> {
        if let Some(&v) = self.ext.borrow().get(&(i, j)) {
            return Ok(v);
        }
        let v = homology::ext_with_resolution(&self.resolutions[i], 1, self.module(j))?.dimension;
        self.ext.borrow_mut().insert((i, j), v);
        Ok(v)
    }

    /// Id of `τ X_i` (forward) or `τ⁻¹ X_i`, `None` when zero.
    pub fn tau(&self, i: usize, forward: bool) -> Result<Option<usize>> {
        if let Some(&v) = self.tau.borrow().get(&(i, forward)) {
            return Ok(v);
        }
        let e = &self.list.entries[i];
        let zero = if forward { e.projective } else { e.injective };
        let v = if zero {
            None
        } else {
            let dir = if forward { TauDirection::Forward } else { TauDirection::Inverse };
            let t = artheory::tau(&e.module, dir);
            Some(self.list.find(&t).ok_or_else(|| Error::Sentinel(format!("τ of entry {} not listed", i)))?)
        };
        self.tau.borrow_mut().insert((i, forward), v);
        Ok(v)
    }

    pub fn sum(&self, ids: &[usize]) -> Representation {
        self.list.sum(ids)
    }

    /// Ids of the summands of `m` (with repetition).
    pub fn summand_ids(&self, m: &Representation) -> Result<Vec<usize>> {
        self.list.summand_ids(m)
    }

    /// `Gen T` over the list, for `T = ⊕` of the given ids.
    pub fn gen_set(&self, t: &[usize]) -> Result<Vec<bool>> {
        self.list
            .entries
            .iter()
            .map(|e| {
                let mut maps = Vec::new();
                for &k in t {
                    maps.extend(reps::hom_basis(self.module(k), &e.module)?);
                }
                let span: usize = image_sum(&maps, &e.module).iter().map(Matrix::cols).sum();
                Ok(span == e.module.total_dim())
            })
            .collect()
    }

    /// `Cogen C` over the list.
    pub fn cogen_set(&self, c: &[usize]) -> Result<Vec<bool>> {
        let f = self.list.algebra.field();
        self.list
            .entries
            .iter()
            .map(|e| {
                let mut maps = Vec::new();
                for &k in c {
                    maps.extend(reps::hom_basis(&e.module, self.module(k))?);
                }
                let ok = (0..e.dims.len()).all(|v| {
                    let rows: Vec<Matrix> = maps.iter().map(|h| h.maps[v].clone()).collect();
                    Matrix::vstack_all(f, e.dims[v], &rows).rank() == e.dims[v]
                });
                Ok(ok)
            })
            .collect()
    }

    pub fn projective_ids(&self) -> Vec<usize> {
        self.list.entries.iter().filter(|e| e.projective).map(|e| e.id).collect()
    }

    pub fn injective_ids(&self) -> Vec<usize> {
        self.list.entries.iter().filter(|e| e.injective).map(|e| e.id).collect()
    }
}

fn limit(d: HomDim, cap: usize) -> HomDim {
    match d {
        HomDim::Finite(k) if k > cap => HomDim::ExceedsCap(cap),
        other => other,
    }
}

/// Where a torsion pair came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairSource {
    Tilting(Vec<usize>),
    Cotilting(Vec<usize>),
    CandidateFree(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionPair {
    pub torsion: Vec<usize>,
    pub free: Vec<usize>,
    pub source: PairSource,
}

impl TorsionPair {
    pub fn is_torsion(&self, i: usize) -> bool {
        self.torsion.binary_search(&i).is_ok()
    }

    pub fn is_free(&self, i: usize) -> bool {
        self.free.binary_search(&i).is_ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairOutcome {
    Valid(TorsionPair),
    /// The candidate classes violate a torsion-pair condition; `witness` is
    /// an offending indecomposable.
    NotATorsionPair { candidate: TorsionPair, reason: String, witness: usize },
}

impl PairOutcome {
    pub fn pair(&self) -> Option<&TorsionPair> {
        match self {
            PairOutcome::Valid(p) => Some(p),
            PairOutcome::NotATorsionPair { .. } => None,
        }
    }
}

/// The torsion pair induced by a tilting module, a cotilting module or a
/// candidate torsion-free class, with every invariant checked.
pub fn torsion_pair_from(source: PairSource, cat: &Category<'_>) -> Result<PairOutcome> {
    let n = cat.len();
    let mut torsion = Vec::new();
    let mut free = Vec::new();
    match &source {
        PairSource::Tilting(t) => {
            for x in 0..n {
                if sum_over(t, |k| cat.ext1(k, x))? == 0 {
                    torsion.push(x);
                }
                if sum_over(t, |k| cat.hom(k, x))? == 0 {
                    free.push(x);
                }
            }
        }
        PairSource::Cotilting(c) => {
            for x in 0..n {
                if sum_over(c, |k| cat.hom(x, k))? == 0 {
                    torsion.push(x);
                }
                if sum_over(c, |k| cat.ext1(x, k))? == 0 {
                    free.push(x);
                }
            }
        }
        PairSource::CandidateFree(f0) => {
            for x in 0..n {
                if sum_over(f0, |k| cat.hom(x, k))? == 0 {
                    torsion.push(x);
                }
            }
            free = f0.clone();
            free.sort_unstable();
            free.dedup();
        }
    }
    let candidate = TorsionPair { torsion, free, source };
    if let Some((reason, witness)) = pair_violation(&candidate, cat)? {
        return Ok(PairOutcome::NotATorsionPair { candidate, reason, witness });
    }
    Ok(PairOutcome::Valid(candidate))
}

fn sum_over(ids: &[usize], mut f: impl FnMut(usize) -> Result<usize>) -> Result<usize> {
    let mut acc = 0;
    for &k in ids {
        acc += f(k)?;
    }
    Ok(acc)
}

/// First violated torsion-pair condition, if any.
fn pair_violation(tp: &TorsionPair, cat: &Category<'_>) -> Result<Option<(String, usize)>> {
    for &x in &tp.torsion {
        for &y in &tp.free {
            if cat.hom(x, y)? != 0 {
                return Ok(Some((format!("Hom({}, {}) is nonzero", x, y), x)));
            }
        }
    }
    for x in 0..cat.len() {
        let in_t = tp.is_torsion(x);
        let orth_f = sum_over(&tp.free, |y| cat.hom(x, y))? == 0;
        if in_t != orth_f {
            return Ok(Some((format!("torsion class is not the left orthogonal of the free class at {}", x), x)));
        }
        let in_f = tp.is_free(x);
        let orth_t = sum_over(&tp.torsion, |t| cat.hom(t, x))? == 0;
        if in_f != orth_t {
            return Ok(Some((format!("free class is not the right orthogonal of the torsion class at {}", x), x)));
        }
    }
    // Canonical sequence: tM has torsion summands and M/tM has free summands.
    for x in 0..cat.len() {
        let m = cat.module(x);
        let mut maps = Vec::new();
        for &t in &tp.torsion {
            maps.extend(reps::hom_basis(cat.module(t), m)?);
        }
        let bases = image_sum(&maps, m);
        let (sub, _) = m.submodule(&bases);
        let (quot, _) = m.quotient(&bases);
        let ok_sub = cat.summand_ids(&sub)?.iter().all(|&i| tp.is_torsion(i));
        let ok_quot = cat.summand_ids(&quot)?.iter().all(|&i| tp.is_free(i));
        if !ok_sub || !ok_quot {
            return Ok(Some((format!("canonical sequence of {} leaves the classes", x), x)));
        }
    }
    Ok(None)
}

/// A torsion pair is hereditary iff its free class is closed under
/// injective envelopes.
pub fn is_hereditary_pair(tp: &TorsionPair, cat: &Category<'_>) -> Result<bool> {
    let alg = &cat.list.algebra;
    for &y in &tp.free {
        let env = reps::injective_envelope(cat.module(y))?;
        for v in env.vertices {
            let id = cat
                .list
                .find(&qalgebra::injective(alg, v))
                .ok_or_else(|| Error::Sentinel("indecomposable injective missing".into()))?;
            if !tp.is_free(id) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Splitting test with the three equivalent criteria compared.
pub fn is_splitting_pair(tp: &TorsionPair, cat: &Category<'_>) -> Result<bool> {
    let direct = (0..cat.len()).all(|x| tp.is_torsion(x) || tp.is_free(x));
    let mut by_inverse = true;
    for &m in &tp.torsion {
        if let Some(t) = cat.tau(m, false)? {
            if !tp.is_torsion(t) {
                by_inverse = false;
            }
        }
    }
    let mut by_forward = true;
    for &m in &tp.free {
        if let Some(t) = cat.tau(m, true)? {
            if !tp.is_free(t) {
                by_forward = false;
            }
        }
    }
    if direct != by_inverse || direct != by_forward {
        return Err(Error::EquivalenceViolated(format!(
            "splitting criteria disagree: direct {}, τ⁻¹ {}, τ {}",
            direct, by_inverse, by_forward
        )));
    }
    Ok(direct)
}

/// A right `add T`-approximation `T_0 -> M`. `summands` lists, with
/// repetition, which summand of `T` each copy in `T_0` is.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub module: Representation,
    pub map: ModuleMorphism,
    pub summands: Vec<usize>,
}

fn flatten(h: &ModuleMorphism) -> Vec<Scalar> {
    h.maps.iter().flat_map(|m| m.entries().iter().cloned()).collect()
}

/// Minimal right `add T`-approximation of `M`, where `t` lists pairwise
/// non-isomorphic indecomposables. For each `T_i` only maps not factoring
/// through radical maps `T_i -> T_j` are kept.
pub fn minimal_right_approximation(t: &[Representation], m: &Representation) -> Result<Approximation> {
    let f = m.field();
    let homs: Vec<Vec<ModuleMorphism>> = t.iter().map(|ti| reps::hom_basis(ti, m)).collect::<Result<_>>()?;
    let mut chosen: Vec<ModuleMorphism> = Vec::new();
    let mut summands = Vec::new();
    for (i, ti) in t.iter().enumerate() {
        if homs[i].is_empty() {
            continue;
        }
        let mut factoring: Vec<Vec<Scalar>> = Vec::new();
        for (j, tj) in t.iter().enumerate() {
            if homs[j].is_empty() {
                continue;
            }
            let rad: Vec<ModuleMorphism> = if i == j {
                reps::end_info(ti)?.radical_morphisms(ti)
            } else {
                reps::hom_basis(ti, tj)?
            };
            for h in &rad {
                for g in &homs[j] {
                    factoring.push(flatten(&h.then(g)));
                }
            }
        }
        let width = flatten(&homs[i][0]).len();
        let fac = Matrix::from_rows(f, width, factoring).transpose();
        let all = Matrix::from_rows(f, width, homs[i].iter().map(flatten).collect()).transpose();
        let joint = fac.hstack(&all);
        let (_, pivots) = joint.rref();
        for p in pivots.into_iter().filter(|&p| p >= fac.cols()) {
            chosen.push(homs[i][p - fac.cols()].clone());
            summands.push(i);
        }
    }
    let parts: Vec<Representation> = summands.iter().map(|&i| t[i].clone()).collect();
    let module = Representation::direct_sum_all(m.algebra(), &parts);
    let map = if chosen.is_empty() {
        ModuleMorphism::zero(&module, m)
    } else {
        ModuleMorphism::from_sum(&chosen, m)
    };
    Ok(Approximation { module, map, summands })
}

/// Minimal left `add C`-approximation `M -> C_0`, by duality.
pub fn minimal_left_approximation(c: &[Representation], m: &Representation) -> Result<Approximation> {
    let dc: Vec<Representation> = c.iter().map(dualize).collect();
    let a = minimal_right_approximation(&dc, &dualize(m))?;
    Ok(Approximation { module: dualize(&a.module), map: a.map.dual(), summands: a.summands })
}

/// Per-module outcome of the hereditary-property test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyCheck {
    pub module: usize,
    /// Ids of the summands of the approximation kernel (or cokernel).
    pub end_term: Vec<usize>,
    pub passes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub holds: bool,
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    pub fn failures(&self) -> impl Iterator<Item = &PropertyCheck> {
        self.checks.iter().filter(|c| !c.passes)
    }
}

/// Re-verifies `0 -> A -f-> B -g-> C -> 0`.
fn check_exact(f: &ModuleMorphism, g: &ModuleMorphism, a: usize, b: usize, c: usize) -> Result<()> {
    if !f.is_injective() || !g.is_surjective() || !f.then(g).is_zero() || a + c != b {
        return Err(Error::Sentinel("approximation sequence is not exact".into()));
    }
    Ok(())
}

/// For every indecomposable `M ∈ Gen T`, the kernel of the minimal right
/// `add T`-approximation lies in `add T`.
pub fn has_hereditary_property(t: &[usize], cat: &Category<'_>) -> Result<PropertyReport> {
    let parts: Vec<Representation> = t.iter().map(|&i| cat.module(i).clone()).collect();
    let gen = cat.gen_set(t)?;
    let mut checks = Vec::new();
    for x in (0..cat.len()).filter(|&x| gen[x]) {
        let a = minimal_right_approximation(&parts, cat.module(x))?;
        if !a.map.is_surjective() {
            return Err(Error::Sentinel(format!("approximation of {} in Gen T is not onto", x)));
        }
        let (l, incl) = a.map.kernel(&a.module);
        check_exact(&incl, &a.map, l.total_dim(), a.module.total_dim(), cat.module(x).total_dim())?;
        let end_term = cat.summand_ids(&l)?;
        let passes = end_term.iter().all(|i| t.contains(i));
        checks.push(PropertyCheck { module: x, end_term, passes });
    }
    Ok(PropertyReport { holds: checks.iter().all(|c| c.passes), checks })
}

/// For every indecomposable `M ∈ Cogen C`, the cokernel of the minimal left
/// `add C`-approximation lies in `add C`.
pub fn has_cohereditary_property(c: &[usize], cat: &Category<'_>) -> Result<PropertyReport> {
    let parts: Vec<Representation> = c.iter().map(|&i| cat.module(i).clone()).collect();
    let cogen = cat.cogen_set(c)?;
    let mut checks = Vec::new();
    for x in (0..cat.len()).filter(|&x| cogen[x]) {
        let a = minimal_left_approximation(&parts, cat.module(x))?;
        if !a.map.is_injective() {
            return Err(Error::Sentinel(format!("approximation of {} in Cogen C is not mono", x)));
        }
        let (q, proj) = a.map.cokernel(&a.module);
        check_exact(&a.map, &proj, cat.module(x).total_dim(), a.module.total_dim(), q.total_dim())?;
        let end_term = cat.summand_ids(&q)?;
        let passes = end_term.iter().all(|i| c.contains(i));
        checks.push(PropertyCheck { module: x, end_term, passes });
    }
    Ok(PropertyReport { holds: checks.iter().all(|c| c.passes), checks })
}

/// Tilting and cotilting flags for a summand id-set, from cached data.
pub fn classify_ids(t: &[usize], cat: &Category<'_>) -> Result<TiltingFlags> {
    let n = cat.list.algebra.vertex_count();
    let mut rigid = true;
    for &a in t {
        for &b in t {
            if cat.ext1(a, b)? != 0 {
                rigid = false;
            }
        }
    }
    let pd1 = t.iter().all(|&i| cat.pd(i).at_most(1));
    let id1 = t.iter().all(|&i| cat.id(i).at_most(1));
    let mut distinct = t.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if (rigid && pd1 && distinct.len() == n) || (rigid && id1 && distinct.len() == n) {
        // Affirmative answers are rebuilt with witnesses.
        return classify_tilting(&cat.sum(&distinct), cat.cap);
    }
    Ok(TiltingFlags { partial_tilting: rigid && pd1, partial_cotilting: rigid && id1, ..TiltingFlags::default() })
}

/// All basic tilting modules, as sorted summand id-sets.
pub fn enumerate_tilting(cat: &Category<'_>) -> Result<Vec<Vec<usize>>> {
    let n = cat.list.algebra.vertex_count();
    let mut cands = Vec::new();
    for x in 0..cat.len() {
        if cat.pd(x).at_most(1) && cat.ext1(x, x)? == 0 {
            cands.push(x);
        }
    }
    let k = cands.len();
    let mut compatible = vec![vec![false; k]; k];
    for a in 0..k {
        for b in a + 1..k {
            let ok = cat.ext1(cands[a], cands[b])? == 0 && cat.ext1(cands[b], cands[a])? == 0;
            compatible[a][b] = ok;
            compatible[b][a] = ok;
        }
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    cliques(&compatible, n, 0, &mut stack, &mut out);
    let mut result = Vec::new();
    for clique in out {
        let ids: Vec<usize> = clique.iter().map(|&i| cands[i]).collect();
        let flags = classify_tilting(&cat.sum(&ids), cat.cap)?;
        if !flags.tilting {
            return Err(Error::Sentinel(format!("enumerated set {:?} is not tilting", ids)));
        }
        result.push(ids);
    }
    Ok(result)
}

fn cliques(adj: &[Vec<bool>], size: usize, start: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if stack.len() == size {
        out.push(stack.clone());
        return;
    }
    for v in start..adj.len() {
        if stack.iter().all(|&u| adj[u][v]) {
            stack.push(v);
            cliques(adj, size, v + 1, stack, out);
            stack.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artheory::enumerate_indecomposables;
    use crate::qalgebra::{build_algebra, injective, projective, simple, Path, Quiver, Relation, StructuralKind};
    use crate::scalar::Field;
    use alloc::sync::Arc;

    const Q: Field = Field::Rational;

    fn linear(n: usize) -> Arc<crate::qalgebra::BoundQuiverAlgebra> {
        let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        build_algebra(Q, Quiver::from_edges(n, &edges).unwrap(), vec![], 32).unwrap()
    }

    fn n2() -> Arc<crate::qalgebra::BoundQuiverAlgebra> {
        let q = Quiver::from_edges(1, &[(0, 0)]).unwrap();
        let rel = Relation::zero_path(Q, Path::from_arrows(&q, vec![0, 0]).unwrap()).unwrap();
        build_algebra(Q, q, vec![rel], 32).unwrap()
    }

    #[test]
    fn gen_and_cogen() {
        let a = linear(2);
        let reg = qalgebra::structural_module(&a, StructuralKind::Regular, None).unwrap();
        let s0 = simple(&a, 0);
        assert!(gen_membership(&s0, &s0).unwrap().0);
        assert!(gen_membership(&reg, &s0).unwrap().0);
        let n = n2();
        // soc P ≅ S, so S embeds into P.
        let (ok, rj) = cogen_membership(&projective(&n, 0), &simple(&n, 0)).unwrap();
        assert!(ok && rj.is_zero());
        let di = injective(&a, 0).direct_sum(&injective(&a, 1)).unwrap();
        assert!(cogen_membership(&di, &simple(&a, 1)).unwrap().0);
    }

    #[test]
    fn classification_on_a2() {
        let a = linear(2);
        let reg = qalgebra::structural_module(&a, StructuralKind::Regular, None).unwrap();
        let flags = classify_tilting(&reg, 12).unwrap();
        assert!(flags.tilting && flags.tilting_witness.is_some());
        let ss = simple(&a, 0).direct_sum(&simple(&a, 1)).unwrap();
        // Ext^1(S(0), S(1)) is one-dimensional.
        assert!(!classify_tilting(&ss, 12).unwrap().partial_tilting);
        let di = injective(&a, 0).direct_sum(&injective(&a, 1)).unwrap();
        let flags = classify_tilting(&di, 12).unwrap();
        assert!(flags.tilting && flags.cotilting);
    }

    #[test]
    fn pairs_and_enumeration_on_a2() {
        let a = linear(2);
        let list = enumerate_indecomposables(&a, 64, 512, 12).unwrap();
        let cat = Category::new(&list, 12).unwrap();
        let proj = cat.projective_ids();
        let tp = torsion_pair_from(PairSource::Tilting(proj.clone()), &cat).unwrap();
        let tp = tp.pair().unwrap().clone();
        assert_eq!(tp.torsion, list.ids());
        assert!(tp.free.is_empty());
        assert!(is_hereditary_pair(&tp, &cat).unwrap());
        assert!(is_splitting_pair(&tp, &cat).unwrap());
        let inj = cat.injective_ids();
        let cp = torsion_pair_from(PairSource::Cotilting(inj), &cat).unwrap();
        let cp = cp.pair().unwrap();
        assert!(cp.torsion.is_empty());
        assert_eq!(cp.free, list.ids());
        assert!(is_hereditary_pair(cp, &cat).unwrap());
        let tilts = enumerate_tilting(&cat).unwrap();
        assert_eq!(tilts.len(), 2);
        for t in &tilts {
            assert!(has_hereditary_property(t, &cat).unwrap().holds);
        }
        let report = has_cohereditary_property(&cat.injective_ids(), &cat).unwrap();
        assert!(report.holds);
    }

    #[test]
    fn approximations() {
        let a = linear(2);
        let reg = [projective(&a, 0), projective(&a, 1)];
        let s0 = simple(&a, 0);
        let ap = minimal_right_approximation(&reg, &s0).unwrap();
        // T = Λ gives the projective cover.
        assert_eq!(ap.summands, vec![0]);
        assert!(ap.map.is_surjective());
        let p0 = projective(&a, 0);
        let ap = minimal_right_approximation(&reg, &p0).unwrap();
        assert_eq!(ap.module.total_dim(), 2);
        assert!(ap.map.is_invertible());
    }
}
