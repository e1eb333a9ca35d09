//! Minimal resolutions, Ext spaces, projective and injective dimension,
//! global and dominant dimension.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactmat::Matrix;
use crate::qalgebra::{self, BoundQuiverAlgebra, StructuralKind};
use crate::reps::{self, dualize, ModuleMorphism, Representation};
use crate::scalar::Scalar;

/// Default length cap for resolutions.
pub const DEFAULT_RESOLUTION_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Projective,
    Injective,
}

/// A homological dimension: an exact value or "exceeds cap".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HomDim {
    Finite(usize),
    ExceedsCap(usize),
}

impl HomDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            HomDim::Finite(n) => Some(n),
            HomDim::ExceedsCap(_) => None,
        }
    }

    /// Whether the value is known to be at most `n`.
    pub fn at_most(self, n: usize) -> bool {
        matches!(self, HomDim::Finite(k) if k <= n)
    }

    pub fn is(self, n: usize) -> bool {
        self == HomDim::Finite(n)
    }
}

impl fmt::Display for HomDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomDim::Finite(n) => write!(f, "{}", n),
            HomDim::ExceedsCap(_) => f.write_str("exceeds_cap"),
        }
    }
}

/// Dominant dimension: an exact value or "at least cap".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DomDim {
    Finite(usize),
    AtLeastCap(usize),
}

impl DomDim {
    pub fn at_least(self, n: usize) -> bool {
        match self {
            DomDim::Finite(k) => k >= n,
            DomDim::AtLeastCap(c) => c >= n,
        }
    }
}

impl fmt::Display for DomDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomDim::Finite(n) => write!(f, "{}", n),
            DomDim::AtLeastCap(_) => f.write_str("at_least_cap"),
        }
    }
}

/// A minimal projective resolution `... -> P_1 -> P_0 -> M -> 0`, or a
/// minimal injective coresolution `0 -> M -> I_0 -> I_1 -> ...`.
///
/// For the projective case `maps[0]` is the augmentation `P_0 -> M` and
/// `maps[i]` is `P_i -> P_(i-1)`. For the injective case `maps[0]` is
/// `M -> I_0` and `maps[i]` is `I_(i-1) -> I_i`. `vertices[i]` lists the
/// vertex of each indecomposable summand of the `i`-th term.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub direction: Direction,
    pub terms: Vec<Representation>,
    pub maps: Vec<ModuleMorphism>,
    pub vertices: Vec<Vec<usize>>,
    /// Syzygies (projective case) or cosyzygies: `syzygies[i]` is the image
    /// of the map into the `i`-th term (kernel of `P_i -> P_(i-1)`).
    pub syzygies: Vec<Representation>,
    pub truncated: bool,
    pub cap: usize,
}

impl Resolution {
    /// Length of the resolution, if it terminated within the cap.
    pub fn length(&self) -> HomDim {
        if self.truncated {
            HomDim::ExceedsCap(self.cap)
        } else {
            HomDim::Finite(self.terms.len().saturating_sub(1))
        }
    }
}

/// Minimal projective resolution (iterated projective covers of syzygies) or
/// minimal injective coresolution (dual construction), computing terms
/// `0..=cap`.
pub fn minimal_resolution(m: &Representation, direction: Direction, cap: usize) -> Resolution {
    match direction {
        Direction::Projective => projective_resolution(m, cap),
        Direction::Injective => {
            let r = projective_resolution(&dualize(m), cap);
            Resolution {
                direction: Direction::Injective,
                terms: r.terms.iter().map(dualize).collect(),
                maps: r.maps.iter().map(ModuleMorphism::dual).collect(),
                vertices: r.vertices,
                syzygies: r.syzygies.iter().map(dualize).collect(),
                truncated: r.truncated,
                cap,
            }
        }
    }
}

fn projective_resolution(m: &Representation, cap: usize) -> Resolution {
    let mut terms = Vec::new();
    let mut maps = Vec::new();
    let mut vertices = Vec::new();
    let mut syzygies = Vec::new();
    let mut current = m.clone();
    // Inclusion of the current syzygy into the previous term.
    let mut inclusion: Option<ModuleMorphism> = None;
    let mut truncated = false;
    for i in 0..=cap + 1 {
        if current.is_zero() {
            break;
        }
        if i == cap + 1 {
            truncated = true;
            break;
        }
        let cover = reps::projective_cover(&current).expect("nonzero module has a cover");
        let map = match &inclusion {
            None => cover.map.clone(),
            Some(inc) => cover.map.then(inc),
        };
        let (k, inc) = cover.map.kernel(&cover.module);
        syzygies.push(current);
        terms.push(cover.module);
        maps.push(map);
        vertices.push(cover.vertices);
        current = k;
        inclusion = Some(inc);
    }
    Resolution { direction: Direction::Projective, terms, maps, vertices, syzygies, truncated, cap }
}

pub fn projective_dimension(m: &Representation, cap: usize) -> HomDim {
    minimal_resolution(m, Direction::Projective, cap).length()
}

pub fn injective_dimension(m: &Representation, cap: usize) -> HomDim {
    minimal_resolution(m, Direction::Injective, cap).length()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimKind {
    Projective,
    Injective,
}

pub fn hom_dimension(m: &Representation, kind: DimKind, cap: usize) -> HomDim {
    match kind {
        DimKind::Projective => projective_dimension(m, cap),
        DimKind::Injective => injective_dimension(m, cap),
    }
}

/// Offsets of the summand blocks of `⊕ P(v_i)` at vertex `w`.
pub fn summand_offsets(alg: &BoundQuiverAlgebra, vertices: &[usize], w: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(vertices.len() + 1);
    let mut acc = 0;
    for &v in vertices {
        out.push(acc);
        acc += alg.basis_between(v, w).len();
    }
    out.push(acc);
    out
}

/// Offsets of the blocks `N_(v_i)` inside `⊕ N_(v_i) ≅ Hom(⊕ P(v_i), N)`.
pub fn generator_offsets(n: &Representation, vertices: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(vertices.len() + 1);
    let mut acc = 0;
    for &v in vertices {
        out.push(acc);
        acc += n.dims()[v];
    }
    out.push(acc);
    out
}

/// Position of the idempotent `e_v` inside `P(v)` at vertex `v`.
fn idempotent_position(alg: &BoundQuiverAlgebra, v: usize) -> usize {
    let e = alg.idempotent(v);
    alg.basis_between(v, v).iter().position(|&b| b == e).expect("idempotent present")
}

/// The matrix of `Hom(d, N): Hom(P, N) -> Hom(P', N)` for a morphism
/// `d: P' -> P` between direct sums of indecomposable projectives, using
/// `Hom(⊕ P(v_i), N) ≅ ⊕ N_(v_i)`.
pub fn hom_into_matrix(
    d: &ModuleMorphism,
    src_vertices: &[usize],
    tgt_vertices: &[usize],
    n: &Representation,
) -> Matrix {
    let alg = n.algebra();
    let f = n.field();
    let col_off = generator_offsets(n, tgt_vertices);
    let row_off = generator_offsets(n, src_vertices);
    let mut out = Matrix::zeros(f, *row_off.last().unwrap(), *col_off.last().unwrap());
    let actions: Vec<Matrix> = (0..alg.dimension()).map(|b| n.basis_action(b)).collect();
    for (j, &w) in src_vertices.iter().enumerate() {
        // Image of the generator e_j of P' inside P at vertex w.
        let src_off = summand_offsets(alg, src_vertices, w);
        let col = src_off[j] + idempotent_position(alg, w);
        let tgt_off = summand_offsets(alg, tgt_vertices, w);
        for (i, &v) in tgt_vertices.iter().enumerate() {
            let mut block = Matrix::zeros(f, n.dims()[w], n.dims()[v]);
            for (k, &b) in alg.basis_between(v, w).iter().enumerate() {
                let c = d.maps[w].get(tgt_off[i] + k, col);
                if !c.is_zero() {
                    block = block.add(&actions[b].scale(c));
                }
            }
            out.set_block(row_off[j], col_off[i], &block);
        }
    }
    out
}

/// The morphism `⊕ P(v_i) -> N` sending the `i`-th generator to `y_i`.
pub fn morphism_from_projective(vertices: &[usize], y: &[Scalar], n: &Representation) -> ModuleMorphism {
    let alg = n.algebra();
    let f = n.field();
    let off = generator_offsets(n, vertices);
    let maps = (0..alg.vertex_count())
        .map(|w| {
            let mut cols: Vec<Matrix> = Vec::new();
            for (i, &v) in vertices.iter().enumerate() {
                let yi = Matrix::column_vector(f, y[off[i]..off[i + 1]].to_vec());
                for &b in alg.basis_between(v, w) {
                    cols.push(n.basis_action(b).mul(&yi));
                }
            }
            Matrix::hstack_all(f, n.dims()[w], &cols)
        })
        .collect();
    ModuleMorphism { maps }
}

/// Coordinates in `⊕ N_(v_i)` of a morphism `⊕ P(v_i) -> N`.
pub fn morphism_to_coordinates(g: &ModuleMorphism, vertices: &[usize], n: &Representation) -> Vec<Scalar> {
    let alg = n.algebra();
    let mut out = Vec::new();
    for (i, &v) in vertices.iter().enumerate() {
        let off = summand_offsets(alg, vertices, v);
        let col = off[i] + idempotent_position(alg, v);
        out.extend(g.maps[v].column(col));
    }
    out
}

/// `Ext^n(M, N)` as the cohomology of `Hom(P_•, N)`.
#[derive(Clone, Debug)]
pub struct ExtSpace {
    pub degree: usize,
    pub dimension: usize,
    /// Columns: cocycles in `Hom(P_n, N)` coordinates representing a basis of
    /// the classes.
    pub cocycles: Matrix,
    /// Columns: a basis of the coboundaries.
    pub coboundaries: Matrix,
    pub resolution: Resolution,
}

impl ExtSpace {
    /// Coordinates of the class of a cocycle in the class basis.
    pub fn class_of(&self, z: &[Scalar]) -> Result<Vec<Scalar>> {
        let f = self.cocycles.field();
        let sys = self.cocycles.hstack(&self.coboundaries);
        let rhs = Matrix::column_vector(f, z.to_vec());
        let x = sys
            .solve(&rhs)?
            .ok_or_else(|| Error::Sentinel("vector is not a cocycle".into()))?;
        Ok((0..self.dimension).map(|i| x.get(i, 0).clone()).collect())
    }

    /// The cocycle `Σ xi_i z_i`.
    pub fn cocycle(&self, xi: &[Scalar]) -> Result<Vec<Scalar>> {
        if xi.len() != self.dimension {
            return Err(Error::MalformedCoordinates { expected: self.dimension, found: xi.len() });
        }
        let f = self.cocycles.field();
        let x = Matrix::column_vector(f, xi.to_vec());
        Ok(self.cocycles.mul(&x).column(0))
    }
}

/// Cochain differential `Hom(P_n, N) -> Hom(P_(n+1), N)`.
fn cochain_map(res: &Resolution, n: usize, target: &Representation) -> Matrix {
    let f = target.field();
    let rows = res.vertices.get(n + 1).map_or(0, |v| generator_offsets(target, v)[v.len()]);
    let cols = res.vertices.get(n).map_or(0, |v| generator_offsets(target, v)[v.len()]);
    if rows == 0 || cols == 0 {
        return Matrix::zeros(f, rows, cols);
    }
    hom_into_matrix(&res.maps[n + 1], &res.vertices[n + 1], &res.vertices[n], target)
}

pub fn ext_with_resolution(res: &Resolution, n: usize, target: &Representation) -> Result<ExtSpace> {
    if res.truncated && res.terms.len() < n + 2 {
        return Err(Error::UndecidableAtCap { degree: n, cap: res.cap });
    }
    let f = target.field();
    let d_n = cochain_map(res, n, target);
    let z = d_n.kernel_basis();
    let b = if n == 0 {
        Matrix::zeros(f, z.rows(), 0)
    } else {
        cochain_map(res, n - 1, target).column_basis()
    };
    // Classes: columns of z completing the span of b.
    let joint = b.hstack(&z);
    let (_, pivots) = joint.rref();
    let picks: Vec<usize> = pivots.into_iter().filter(|&p| p >= b.cols()).map(|p| p - b.cols()).collect();
    let cocycles = z.select_columns(&picks);
    Ok(ExtSpace {
        degree: n,
        dimension: cocycles.cols(),
        cocycles,
        coboundaries: b,
        resolution: res.clone(),
    })
}

/// `Ext^n(M, N)` with an explicit basis of cocycle classes.
pub fn ext_basis(n: usize, m: &Representation, target: &Representation, cap: usize) -> Result<ExtSpace> {
    if !m.algebra().same_as(target.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let depth = (n + 1).min(cap);
    let res = minimal_resolution(m, Direction::Projective, depth);
    if res.truncated && res.terms.len() < n + 2 {
        return Err(Error::UndecidableAtCap { degree: n, cap });
    }
    ext_with_resolution(&res, n, target)
}

pub fn ext_dim(n: usize, m: &Representation, target: &Representation, cap: usize) -> Result<usize> {
    Ok(ext_basis(n, m, target, cap)?.dimension)
}

/// `dim Ext^n(M, N)` from the complex `Hom(M, I^•)` over a minimal injective
/// coresolution of `N`; independent of the projective route.
pub fn ext_dim_injective(n: usize, m: &Representation, target: &Representation, cap: usize) -> Result<usize> {
    let res = minimal_resolution(target, Direction::Injective, cap);
    if res.truncated && res.terms.len() < n + 2 {
        return Err(Error::UndecidableAtCap { degree: n, cap });
    }
    let f = m.field();
    let basis = |k: usize| -> Result<Vec<ModuleMorphism>> {
        match res.terms.get(k) {
            Some(t) => reps::hom_basis(m, t),
            None => Ok(Vec::new()),
        }
    };
    // Rank of Hom(M, I^k) -> Hom(M, I^(k+1)).
    let rank = |k: usize| -> Result<usize> {
        let src = basis(k)?;
        if src.is_empty() || k + 1 >= res.terms.len() {
            return Ok(0);
        }
        let rows: Vec<Vec<Scalar>> = src
            .iter()
            .map(|h| h.then(&res.maps[k + 1]).maps.iter().flat_map(|x| x.entries().iter().cloned()).collect())
            .collect();
        let width = rows[0].len();
        Ok(Matrix::from_rows(f, width, rows).rank())
    };
    let here = basis(n)?.len();
    let below = if n == 0 { 0 } else { rank(n - 1)? };
    Ok(here - rank(n)? - below)
}

/// A short exact sequence `0 -> N -> E -> M -> 0`.
#[derive(Clone, Debug)]
pub struct Extension {
    pub module: Representation,
    pub mono: ModuleMorphism,
    pub epi: ModuleMorphism,
}

/// The middle term of the extension with class `xi` (coordinates in the
/// basis of `ext`, which must be `Ext^1(M, N)`): the pushout of
/// `N <- P_1 -> P_0`.
pub fn extension_module(ext: &ExtSpace, xi: &[Scalar], m: &Representation, n: &Representation) -> Result<Extension> {
    if ext.degree != 1 {
        return Err(Error::Precondition("extension classes live in degree one".into()));
    }
    let z = ext.cocycle(xi)?;
    extension_from_cocycle(&ext.resolution, &z, m, n)
}

pub fn extension_from_cocycle(
    res: &Resolution,
    z: &[Scalar],
    m: &Representation,
    n: &Representation,
) -> Result<Extension> {
    let alg = m.algebra();
    let f = m.field();
    let p0 = res.terms.first().cloned().unwrap_or_else(|| Representation::zero(alg));
    let (p1, d1, v1) = match res.terms.get(1) {
        Some(p1) => (p1.clone(), res.maps[1].clone(), res.vertices[1].clone()),
        None => {
            let z0 = Representation::zero(alg);
            let d = ModuleMorphism::zero(&z0, &p0);
            (z0, d, Vec::new())
        }
    };
    let expected = generator_offsets(n, &v1)[v1.len()];
    if z.len() != expected {
        return Err(Error::MalformedCoordinates { expected, found: z.len() });
    }
    let xi = morphism_from_projective(&v1, z, n);
    let sum = n.direct_sum(&p0)?;
    // x -> (xi(x), -d1(x))
    let rel = ModuleMorphism::into_sum(&[xi, d1.scale(&f.from_i64(-1))], &p1);
    let image: Vec<Matrix> = rel.maps.iter().map(Matrix::column_basis).collect();
    let (e, proj, section) = sum.quotient_with_section(&image);
    let inc_n = ModuleMorphism::into_sum(&[n.identity(), ModuleMorphism::zero(n, &p0)], n);
    let mono = inc_n.then(&proj);
    let aug = if res.terms.is_empty() { ModuleMorphism::zero(&p0, m) } else { res.maps[0].clone() };
    let onto_m = ModuleMorphism::from_sum(&[ModuleMorphism::zero(n, m), aug], m);
    let epi = ModuleMorphism { maps: onto_m.maps.iter().zip(&section).map(|(g, s)| g.mul(s)).collect() };
    debug_assert!(mono.is_morphism(n, &e) && epi.is_morphism(&e, m));
    Ok(Extension { module: e, mono, epi })
}

/// Global dimension with both routes recorded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GlobalDimension {
    pub value: HomDim,
    /// `max pd S` over the simples.
    pub simple_route: HomDim,
    /// `1 + max pd(rad P)` over indecomposable projectives (0 if semisimple).
    pub radical_route: HomDim,
}

pub fn global_dimension(alg: &Arc<BoundQuiverAlgebra>, cap: usize) -> Result<GlobalDimension> {
    let n = alg.vertex_count();
    let mut simple_route = HomDim::Finite(0);
    for v in 0..n {
        let d = projective_dimension(&qalgebra::simple(alg, v), cap);
        simple_route = max_dim(simple_route, d);
    }
    let mut radical_route = HomDim::Finite(0);
    for v in 0..n {
        let (r, _) = reps::radical(&qalgebra::projective(alg, v));
        if r.is_zero() {
            continue;
        }
        let d = match projective_dimension(&r, cap.saturating_sub(1)) {
            HomDim::Finite(k) if cap > 0 => HomDim::Finite(k + 1),
            _ => HomDim::ExceedsCap(cap),
        };
        radical_route = max_dim(radical_route, d);
    }
    if simple_route != radical_route {
        return Err(Error::Sentinel(alloc::format!(
            "global dimension routes disagree: simples give {}, radicals give {}",
            simple_route, radical_route
        )));
    }
    Ok(GlobalDimension { value: simple_route, simple_route, radical_route })
}

fn max_dim(a: HomDim, b: HomDim) -> HomDim {
    match (a, b) {
        (HomDim::ExceedsCap(c), _) | (_, HomDim::ExceedsCap(c)) => HomDim::ExceedsCap(c),
        (HomDim::Finite(x), HomDim::Finite(y)) => HomDim::Finite(x.max(y)),
    }
}

/// Which indecomposable injectives are projective, by vertex.
pub fn projective_injective_vertices(alg: &Arc<BoundQuiverAlgebra>) -> Vec<bool> {
    (0..alg.vertex_count()).map(|v| reps::is_projective(&qalgebra::injective(alg, v))).collect()
}

/// Number of initial projective terms in the minimal injective coresolution
/// of the regular module.
pub fn dominant_dimension(alg: &Arc<BoundQuiverAlgebra>, cap: usize) -> Result<DomDim> {
    let proj = projective_injective_vertices(alg);
    let reg = qalgebra::structural_module(alg, StructuralKind::Regular, None)?;
    let res = minimal_resolution(&reg, Direction::Injective, cap);
    for (i, vs) in res.vertices.iter().enumerate() {
        if vs.iter().any(|&v| !proj[v]) {
            return Ok(DomDim::Finite(i));
        }
    }
    Ok(DomDim::AtLeastCap(cap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::{build_algebra, injective, projective, simple, Path, Quiver, Relation};
    use crate::scalar::Field;

    const Q: Field = Field::Rational;

    fn a2() -> Arc<BoundQuiverAlgebra> {
        build_algebra(Q, Quiver::from_edges(2, &[(0, 1)]).unwrap(), vec![], 32).unwrap()
    }

    fn nilpotent(n: usize) -> Arc<BoundQuiverAlgebra> {
        let q = Quiver::from_edges(1, &[(0, 0)]).unwrap();
        let rel = Relation::zero_path(Q, Path::from_arrows(&q, vec![0; n]).unwrap()).unwrap();
        build_algebra(Q, q, vec![rel], 32).unwrap()
    }

    #[test]
    fn resolution_lengths() {
        let a = a2();
        assert_eq!(projective_dimension(&projective(&a, 0), 12), HomDim::Finite(0));
        // S(0) = P(0)/P(1) is the non-projective simple.
        let r = minimal_resolution(&simple(&a, 0), Direction::Projective, 12);
        assert_eq!(r.length(), HomDim::Finite(1));
        assert!(reps::is_projective(&r.syzygies[1]));
        let n2 = nilpotent(2);
        for cap in [0, 1, 5] {
            assert_eq!(projective_dimension(&simple(&n2, 0), cap), HomDim::ExceedsCap(cap));
        }
    }

    #[test]
    fn resolution_is_exact() {
        let a = nilpotent(3);
        let m = projective(&a, 0);
        let (r, _) = reps::radical(&m);
        let res = minimal_resolution(&r, Direction::Projective, 4);
        for i in 1..res.maps.len() {
            let comp = res.maps[i].then(&res.maps[i - 1]);
            assert!(comp.is_zero());
            let (k, _) = res.maps[i - 1].kernel(&res.terms[i - 1]);
            assert_eq!(res.maps[i].rank(), k.total_dim());
        }
    }

    #[test]
    fn ext_values() {
        let a = a2();
        let p = projective(&a, 0);
        for v in 0..2 {
            assert_eq!(ext_dim(1, &p, &simple(&a, v), 12).unwrap(), 0);
            assert_eq!(ext_dim(2, &simple(&a, 0), &simple(&a, v), 12).unwrap(), 0);
        }
        assert_eq!(ext_dim(1, &simple(&a, 0), &simple(&a, 1), 12).unwrap(), 1);
        assert_eq!(ext_dim(0, &simple(&a, 0), &simple(&a, 0), 12).unwrap(), 1);
        let n2 = nilpotent(2);
        let s = simple(&n2, 0);
        // Oracle: Hom(ΩS, S) = Hom(S, S) is one-dimensional, and every map
        // factoring through P -> S vanishes on rad P = ΩS.
        assert_eq!(ext_dim(1, &s, &s, 12).unwrap(), 1);
        assert_eq!(ext_dim(3, &s, &s, 2), Err(Error::UndecidableAtCap { degree: 3, cap: 2 }));
    }

    #[test]
    fn extensions() {
        let a = a2();
        let (m, n) = (simple(&a, 0), simple(&a, 1));
        let ext = ext_basis(1, &m, &n, 12).unwrap();
        let zero = extension_module(&ext, &[Q.zero()], &m, &n).unwrap();
        assert!(reps::is_isomorphic(&zero.module, &n.direct_sum(&m).unwrap()).unwrap());
        let e = extension_module(&ext, &[Q.one()], &m, &n).unwrap();
        assert_eq!(e.module.dims(), &[1, 1]);
        assert!(reps::is_indecomposable(&e.module).unwrap());
        assert!(e.mono.is_morphism(&n, &e.module) && e.mono.is_injective());
        assert!(e.epi.is_morphism(&e.module, &m) && e.epi.is_surjective());
        assert!(extension_module(&ext, &[], &m, &n).is_err());
    }

    #[test]
    fn global_and_dominant_dimension() {
        let one = build_algebra(Q, Quiver::from_edges(1, &[]).unwrap(), vec![], 32).unwrap();
        assert_eq!(global_dimension(&one, 12).unwrap().value, HomDim::Finite(0));
        assert_eq!(global_dimension(&a2(), 12).unwrap().value, HomDim::Finite(1));
        assert_eq!(global_dimension(&nilpotent(2), 6).unwrap().value, HomDim::ExceedsCap(6));
        assert_eq!(dominant_dimension(&nilpotent(2), 6).unwrap(), DomDim::AtLeastCap(6));
        // Oracle for A2: 0 -> Λ -> I(1) ⊕ I(1) -> I(0) -> 0, where I(1) = P(0)
        // is projective and I(0) = S(0) is not.
        let a = a2();
        assert!(reps::is_projective(&injective(&a, 1)) && !reps::is_projective(&injective(&a, 0)));
        let res = minimal_resolution(
            &qalgebra::structural_module(&a, StructuralKind::Regular, None).unwrap(),
            Direction::Injective,
            12,
        );
        assert_eq!(res.vertices, vec![vec![1, 1], vec![0]]);
        assert_eq!(dominant_dimension(&a, 12).unwrap(), DomDim::Finite(1));
    }

    #[test]
    fn injective_dimensions() {
        let a = a2();
        assert_eq!(injective_dimension(&injective(&a, 0), 12), HomDim::Finite(0));
        assert_eq!(injective_dimension(&simple(&a, 1), 12), HomDim::Finite(1));
        assert_eq!(hom_dimension(&simple(&a, 1), DimKind::Projective, 12), HomDim::Finite(0));
    }
}
