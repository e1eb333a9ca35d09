//! Representations of bound quivers (right modules), morphisms, duality,
//! radical/socle/top, projective covers, injective envelopes and
//! Krull-Schmidt decomposition.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactmat::Matrix;
use crate::qalgebra::{self, BoundQuiverAlgebra, Path};
use crate::scalar::{Field, Scalar};

pub use crate::homology::extension_module;

/// Seed used by all randomized searches in this crate.
pub const DEFAULT_SEED: u64 = 0x5EED_0001;

static SEARCH_SEED: AtomicU64 = AtomicU64::new(DEFAULT_SEED);

pub fn set_search_seed(seed: u64) {
    SEARCH_SEED.store(seed, AtomicOrdering::Relaxed);
}

pub fn search_seed() -> u64 {
    SEARCH_SEED.load(AtomicOrdering::Relaxed)
}

pub(crate) fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(search_seed() ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// A finite-dimensional right module: a space per vertex and, for every arrow
/// `a: i -> j`, a matrix from the space at `i` to the space at `j`.
#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<BoundQuiverAlgebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same_as(&other.algebra) && self.dims == other.dims && self.maps == other.maps
    }
}

impl Representation {
    /// Validates shapes, relations and nilpotency before accepting the data.
    pub fn new(algebra: Arc<BoundQuiverAlgebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() {
            return Err(Error::DimensionMismatch { expected: q.vertex_count(), found: dims.len() });
        }
        if maps.len() != q.arrows().len() {
            return Err(Error::DimensionMismatch { expected: q.arrows().len(), found: maps.len() });
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::InvalidRepresentation(format!(
                    "map for arrow {} has shape {}x{}, expected {}x{}",
                    a.name,
                    m.rows(),
                    m.cols(),
                    dims[a.target],
                    dims[a.source]
                )));
            }
            if m.field() != algebra.field() {
                return Err(Error::InvalidRepresentation("matrix over another field".into()));
            }
        }
        let rep = Representation { algebra, dims, maps };
        for r in rep.algebra.relations() {
            let mut acc = Matrix::zeros(rep.field(), rep.dims[r.target()], rep.dims[r.source()]);
            for (c, p) in &r.terms {
                acc = acc.add(&rep.path_action(p).scale(c));
            }
            if !acc.is_zero() {
                return Err(Error::InvalidRepresentation(format!(
                    "relation {} does not vanish",
                    r.display(rep.algebra.quiver())
                )));
            }
        }
        // J^L M = 0 where L is the Loewy length of the algebra.
        let mut layer: Vec<Matrix> =
            rep.dims.iter().map(|&d| Matrix::identity(rep.field(), d)).collect();
        for _ in 0..rep.algebra.loewy_length() {
            layer = rep.arrow_images(&layer);
        }
        if layer.iter().any(|m| m.cols() > 0) {
            return Err(Error::InvalidRepresentation("arrow ideal does not act nilpotently".into()));
        }
        Ok(rep)
    }

    pub(crate) fn from_parts(algebra: Arc<BoundQuiverAlgebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        debug_assert_eq!(dims.len(), algebra.vertex_count());
        debug_assert_eq!(maps.len(), algebra.arrow_count());
        Representation { algebra, dims, maps }
    }

    pub fn zero(algebra: &Arc<BoundQuiverAlgebra>) -> Self {
        let dims = vec![0; algebra.vertex_count()];
        let maps = (0..algebra.arrow_count()).map(|_| Matrix::zeros(algebra.field(), 0, 0)).collect();
        Representation { algebra: algebra.clone(), dims, maps }
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    /// Start offsets of the vertex spaces inside the total space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for &d in &self.dims {
            out.push(acc);
            acc += d;
        }
        out
    }

    /// The linear map `M_s -> M_t` induced by a path.
    pub fn path_action(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.field(), self.dims[p.source]);
        for &a in &p.arrows {
            m = self.maps[a].mul(&m);
        }
        m
    }

    /// Action of the `i`-th basis element of the algebra.
    pub fn basis_action(&self, i: usize) -> Matrix {
        self.path_action(&self.algebra.basis()[i])
    }

    /// For per-vertex subspaces (as column bases), the sum of their images
    /// under all arrows, as column bases.
    fn arrow_images(&self, spaces: &[Matrix]) -> Vec<Matrix> {
        let f = self.field();
        let mut acc: Vec<Matrix> = self.dims.iter().map(|&d| Matrix::zeros(f, d, 0)).collect();
        for (a, arrow) in self.algebra.quiver().arrows().iter().enumerate() {
            let img = self.maps[a].mul(&spaces[arrow.source]);
            acc[arrow.target] = acc[arrow.target].hstack(&img);
        }
        acc.into_iter().map(|m| m.column_basis()).collect()
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if !self.algebra.same_as(&other.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Representation::direct_sum_all(&self.algebra, &[self.clone(), other.clone()]))
    }

    pub fn direct_sum_all(algebra: &Arc<BoundQuiverAlgebra>, parts: &[Representation]) -> Representation {
        let f = algebra.field();
        let n = algebra.vertex_count();
        let dims = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..algebra.arrow_count())
            .map(|a| {
                let blocks: Vec<Matrix> = parts.iter().map(|p| p.maps[a].clone()).collect();
                Matrix::block_diag(f, &blocks)
            })
            .collect();
        Representation { algebra: algebra.clone(), dims, maps }
    }

    pub fn power(&self, k: usize) -> Representation {
        Representation::direct_sum_all(&self.algebra, &vec![self.clone(); k])
    }

    pub fn identity(&self) -> ModuleMorphism {
        ModuleMorphism {
            maps: self.dims.iter().map(|&d| Matrix::identity(self.field(), d)).collect(),
        }
    }

    /// Restriction to the submodule spanned by per-vertex column bases
    /// (assumed independent and closed under the arrow maps), with inclusion.
    pub fn submodule(&self, bases: &[Matrix]) -> (Representation, ModuleMorphism) {
        let f = self.field();
        let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
        let lefts: Vec<Matrix> = bases
            .iter()
            .map(|b| b.left_inverse().unwrap_or_else(|| Matrix::zeros(f, 0, b.rows())))
            .collect();
        let maps = self
            .algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| lefts[arrow.target].mul(&self.maps[a].mul(&bases[arrow.source])))
            .collect();
        let sub = Representation { algebra: self.algebra.clone(), dims, maps };
        (sub, ModuleMorphism { maps: bases.to_vec() })
    }

    /// Quotient by the submodule spanned by per-vertex column bases, with the
    /// projection.
    pub fn quotient(&self, bases: &[Matrix]) -> (Representation, ModuleMorphism) {
        let (q, p, _) = self.quotient_with_section(bases);
        (q, p)
    }

    /// As [`Representation::quotient`], also returning the linear section
    /// (per-vertex complement columns) used to coordinatize the quotient.
    pub fn quotient_with_section(&self, bases: &[Matrix]) -> (Representation, ModuleMorphism, Vec<Matrix>) {
        let mut comps = Vec::with_capacity(bases.len());
        let mut projs = Vec::with_capacity(bases.len());
        for b in bases {
            let c = b.complement_columns();
            let full = b.hstack(&c).inverse().expect("basis plus complement is invertible");
            let rows: Vec<usize> = (b.cols()..b.rows()).collect();
            projs.push(full.select_rows(&rows));
            comps.push(c);
        }
        let dims: Vec<usize> = comps.iter().map(Matrix::cols).collect();
        let maps = self
            .algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| projs[arrow.target].mul(&self.maps[a].mul(&comps[arrow.source])))
            .collect();
        let q = Representation { algebra: self.algebra.clone(), dims, maps };
        (q, ModuleMorphism { maps: projs }, comps)
    }

    /// Whether per-vertex subspaces (column bases) are closed under the arrows.
    pub fn is_submodule(&self, bases: &[Matrix]) -> bool {
        self.algebra.quiver().arrows().iter().enumerate().all(|(a, arrow)| {
            bases[arrow.target].spans(&self.maps[a].mul(&bases[arrow.source]))
        })
    }

    pub fn dimension_vector(&self) -> Vec<usize> {
        self.dims.clone()
    }
}

/// A module homomorphism given by one matrix per vertex. Source and target
/// are supplied by the caller where needed.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleMorphism {
    pub maps: Vec<Matrix>,
}

impl ModuleMorphism {
    pub fn zero(source: &Representation, target: &Representation) -> Self {
        let f = source.field();
        ModuleMorphism {
            maps: source.dims.iter().zip(&target.dims).map(|(&s, &t)| Matrix::zeros(f, t, s)).collect(),
        }
    }

    /// Checks shapes and all commuting squares.
    pub fn is_morphism(&self, source: &Representation, target: &Representation) -> bool {
        if self.maps.len() != source.dims.len() || !source.algebra.same_as(&target.algebra) {
            return false;
        }
        for (v, m) in self.maps.iter().enumerate() {
            if m.shape() != (target.dims[v], source.dims[v]) {
                return false;
            }
        }
        source.algebra.quiver().arrows().iter().enumerate().all(|(a, arrow)| {
            target.maps[a].mul(&self.maps[arrow.source]) == self.maps[arrow.target].mul(&source.maps[a])
        })
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ModuleMorphism) -> ModuleMorphism {
        ModuleMorphism { maps: self.maps.iter().zip(&other.maps).map(|(f, g)| g.mul(f)).collect() }
    }

    pub fn add(&self, other: &ModuleMorphism) -> ModuleMorphism {
        ModuleMorphism { maps: self.maps.iter().zip(&other.maps).map(|(f, g)| f.add(g)).collect() }
    }

    pub fn sub(&self, other: &ModuleMorphism) -> ModuleMorphism {
        ModuleMorphism { maps: self.maps.iter().zip(&other.maps).map(|(f, g)| f.sub(g)).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> ModuleMorphism {
        ModuleMorphism { maps: self.maps.iter().map(|m| m.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.maps.iter().map(Matrix::rank).sum()
    }

    pub fn trace(&self, field: Field) -> Scalar {
        self.maps.iter().fold(field.zero(), |acc, m| &acc + &m.trace())
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_invertible(&self) -> bool {
        self.maps.iter().all(Matrix::is_invertible)
    }

    pub fn inverse(&self) -> Option<ModuleMorphism> {
        let maps = self.maps.iter().map(Matrix::inverse).collect::<Option<Vec<_>>>()?;
        Some(ModuleMorphism { maps })
    }

    pub fn kernel(&self, source: &Representation) -> (Representation, ModuleMorphism) {
        let bases: Vec<Matrix> = self.maps.iter().map(Matrix::kernel_basis).collect();
        source.submodule(&bases)
    }

    pub fn image(&self, target: &Representation) -> (Representation, ModuleMorphism) {
        let bases: Vec<Matrix> = self.maps.iter().map(Matrix::column_basis).collect();
        target.submodule(&bases)
    }

    pub fn cokernel(&self, target: &Representation) -> (Representation, ModuleMorphism) {
        let bases: Vec<Matrix> = self.maps.iter().map(Matrix::column_basis).collect();
        target.quotient(&bases)
    }

    /// The dual morphism `D N -> D M`.
    pub fn dual(&self) -> ModuleMorphism {
        ModuleMorphism { maps: self.maps.iter().map(Matrix::transpose).collect() }
    }

    /// Horizontal block `[f_1 ... f_k]` out of a direct sum.
    pub fn from_sum(parts: &[ModuleMorphism], target: &Representation) -> ModuleMorphism {
        let f = target.field();
        let maps = (0..target.dims.len())
            .map(|v| {
                let blocks: Vec<Matrix> = parts.iter().map(|p| p.maps[v].clone()).collect();
                Matrix::hstack_all(f, target.dims[v], &blocks)
            })
            .collect();
        ModuleMorphism { maps }
    }

    /// Vertical block into a direct sum.
    pub fn into_sum(parts: &[ModuleMorphism], source: &Representation) -> ModuleMorphism {
        let f = source.field();
        let maps = (0..source.dims.len())
            .map(|v| {
                let blocks: Vec<Matrix> = parts.iter().map(|p| p.maps[v].clone()).collect();
                Matrix::vstack_all(f, source.dims[v], &blocks)
            })
            .collect();
        ModuleMorphism { maps }
    }

    pub fn block_diag(parts: &[ModuleMorphism], field: Field) -> ModuleMorphism {
        let n = parts.first().map_or(0, |p| p.maps.len());
        let maps = (0..n)
            .map(|v| {
                let blocks: Vec<Matrix> = parts.iter().map(|p| p.maps[v].clone()).collect();
                Matrix::block_diag(field, &blocks)
            })
            .collect();
        ModuleMorphism { maps }
    }
}

pub fn linear_combination(basis: &[ModuleMorphism], coeffs: &[Scalar], zero: ModuleMorphism) -> ModuleMorphism {
    basis
        .iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .fold(zero, |acc, (b, c)| acc.add(&b.scale(c)))
}

fn check_same(m: &Representation, n: &Representation) -> Result<()> {
    if m.algebra.same_as(&n.algebra) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

/// Basis of `Hom(M, N)` from the commuting-square linear system.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<ModuleMorphism>> {
    check_same(m, n)?;
    let f = m.field();
    let verts = m.dims.len();
    let mut offset = vec![0; verts + 1];
    for v in 0..verts {
        offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = offset[verts];
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    // Unknown (v, r, c) is entry (r, c) of f_v, stored at offset[v] + r * dimM_v + c.
    let var = |v: usize, r: usize, c: usize| offset[v] + r * m.dims[v] + c;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (a, arrow) in m.algebra.quiver().arrows().iter().enumerate() {
        let (s, t) = (arrow.source, arrow.target);
        let na = &n.maps[a];
        let ma = &m.maps[a];
        // (N_a f_s - f_t M_a)[i][j] = 0
        for i in 0..n.dims[t] {
            for j in 0..m.dims[s] {
                let mut row = vec![f.zero(); unknowns];
                for k in 0..n.dims[s] {
                    let c = na.get(i, k);
                    if !c.is_zero() {
                        let idx = var(s, k, j);
                        row[idx] = &row[idx] + c;
                    }
                }
                for k in 0..m.dims[t] {
                    let c = ma.get(k, j);
                    if !c.is_zero() {
                        let idx = var(t, i, k);
                        row[idx] = &row[idx] - c;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let sys = Matrix::from_rows(f, unknowns, rows);
    let ker = sys.kernel_basis();
    Ok((0..ker.cols())
        .map(|k| ModuleMorphism {
            maps: (0..verts)
                .map(|v| {
                    let mut mat = Matrix::zeros(f, n.dims[v], m.dims[v]);
                    for r in 0..n.dims[v] {
                        for c in 0..m.dims[v] {
                            mat.set(r, c, ker.get(var(v, r, c), k).clone());
                        }
                    }
                    mat
                })
                .collect(),
        })
        .collect())
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    Ok(hom_basis(m, n)?.len())
}

/// `D M = Hom_k(M, k)` as a module over the opposite algebra.
pub fn dualize(m: &Representation) -> Representation {
    Representation {
        algebra: m.algebra.opposite(),
        dims: m.dims.clone(),
        maps: m.maps.iter().map(Matrix::transpose).collect(),
    }
}

/// Whether `M` and `N` are isomorphic: dimension vectors, then a seeded
/// random search for an invertible homomorphism, then an exact comparison of
/// Krull-Schmidt decompositions.
pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<bool> {
    check_same(m, n)?;
    if m.dims != n.dims {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    if m == n {
        return Ok(true);
    }
    let basis = hom_basis(m, n)?;
    if basis.is_empty() {
        return Ok(false);
    }
    if find_invertible(&basis, m, n, 8).is_some() {
        return Ok(true);
    }
    let dm = decompose(m)?;
    let dn = decompose(n)?;
    if dm.len() != dn.len() {
        return Ok(false);
    }
    let mut used = vec![false; dn.len()];
    for (x, k) in &dm {
        let hit = dn
            .iter()
            .enumerate()
            .position(|(i, (y, l))| !used[i] && l == k && is_isomorphic_indecomposable(x, y));
        match hit {
            Some(i) => used[i] = true,
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// Random combinations of a Hom basis, returning an invertible one if found.
pub fn find_invertible(
    basis: &[ModuleMorphism],
    m: &Representation,
    n: &Representation,
    tries: usize,
) -> Option<ModuleMorphism> {
    let f = m.field();
    if basis.len() == 1 {
        return basis[0].is_invertible().then(|| basis[0].clone());
    }
    let mut rng = rng(m.total_dim() as u64 * 31 + basis.len() as u64);
    for _ in 0..tries {
        let coeffs: Vec<Scalar> = basis.iter().map(|_| f.from_i64(rng.gen_range(-7..=7))).collect();
        let g = linear_combination(basis, &coeffs, ModuleMorphism::zero(m, n));
        if g.is_invertible() {
            return Some(g);
        }
    }
    None
}

/// Exact isomorphism test for two indecomposables: `X ≅ Y` iff some
/// composite `g ∘ f` over Hom bases has nonzero trace.
pub fn is_isomorphic_indecomposable(x: &Representation, y: &Representation) -> bool {
    if x.dims != y.dims || !x.algebra.same_as(&y.algebra) {
        return false;
    }
    if x == y {
        return true;
    }
    let Ok(fs) = hom_basis(x, y) else { return false };
    if fs.is_empty() {
        return false;
    }
    let Ok(gs) = hom_basis(y, x) else { return false };
    let field = x.field();
    fs.iter().any(|f| gs.iter().any(|g| !f.then(g).trace(field).is_zero()))
}

/// The radical of `End(M)` and its dimension data.
pub struct EndInfo {
    pub basis: Vec<ModuleMorphism>,
    /// Coordinates (columns) of a basis of `rad End(M)` in `basis`.
    pub radical: Matrix,
}

impl EndInfo {
    pub fn top_dim(&self) -> usize {
        self.basis.len() - self.radical.cols()
    }

    pub fn radical_morphisms(&self, m: &Representation) -> Vec<ModuleMorphism> {
        (0..self.radical.cols())
            .map(|j| linear_combination(&self.basis, &self.radical.column(j), ModuleMorphism::zero(m, m)))
            .collect()
    }
}

fn check_characteristic(field: Field, dim: usize) -> Result<()> {
    if let Field::Prime(p) = field {
        if (dim as u64) >= p {
            return Err(Error::FieldTooSmall { p, dim });
        }
    }
    Ok(())
}

/// `End(M)` with its Jacobson radical, computed as the kernel of the trace
/// form `(x, y) -> tr(x ∘ y)`.
pub fn end_info(m: &Representation) -> Result<EndInfo> {
    check_characteristic(m.field(), m.total_dim())?;
    let basis = hom_basis(m, m)?;
    let f = m.field();
    let d = basis.len();
    let mut gram = Matrix::zeros(f, d, d);
    for i in 0..d {
        for j in i..d {
            let t = basis[j].then(&basis[i]).trace(f);
            let t2 = basis[i].then(&basis[j]).trace(f);
            debug_assert_eq!(t, t2);
            gram.set(i, j, t.clone());
            gram.set(j, i, t);
        }
    }
    Ok(EndInfo { basis, radical: gram.kernel_basis() })
}

/// Whether `M` is indecomposable with local endomorphism ring of residue
/// field `k`.
pub fn is_indecomposable(m: &Representation) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    Ok(end_info(m)?.top_dim() == 1)
}

/// Krull-Schmidt decomposition: pairwise non-isomorphic indecomposable
/// summands with multiplicities, ordered by dimension vector.
pub fn decompose(m: &Representation) -> Result<Vec<(Representation, usize)>> {
    let mut pieces = Vec::new();
    split_fully(m, &mut pieces)?;
    let mut groups: Vec<(Representation, usize)> = Vec::new();
    for p in pieces {
        match groups.iter_mut().find(|(g, _)| is_isomorphic_indecomposable(g, &p)) {
            Some(g) => g.1 += 1,
            None => groups.push((p, 1)),
        }
    }
    groups.sort_by(|a, b| (a.0.total_dim(), &a.0.dims).cmp(&(b.0.total_dim(), &b.0.dims)));
    Ok(groups)
}

/// Indecomposable summands listed with repetition.
pub fn indecomposable_summands(m: &Representation) -> Result<Vec<Representation>> {
    let mut pieces = Vec::new();
    split_fully(m, &mut pieces)?;
    Ok(pieces)
}

fn split_fully(m: &Representation, out: &mut Vec<Representation>) -> Result<()> {
    if m.is_zero() {
        return Ok(());
    }
    let info = end_info(m)?;
    if info.top_dim() == 1 {
        out.push(m.clone());
        return Ok(());
    }
    let (a, b) = fitting_split(m, &info)?;
    split_fully(&a, out)?;
    split_fully(&b, out)
}

/// Splits `M = ker ψ^d ⊕ im ψ^d` for `ψ = φ - λ` with `φ ∈ End(M)`, searching
/// for a `φ` with an eigenvalue in the base field.
fn fitting_split(m: &Representation, info: &EndInfo) -> Result<(Representation, Representation)> {
    let f = m.field();
    let basis = &info.basis;
    let mut candidates: Vec<ModuleMorphism> = basis.clone();
    for i in 0..basis.len().min(12) {
        for j in i + 1..basis.len().min(12) {
            candidates.push(basis[i].add(&basis[j]));
        }
    }
    let mut rng = rng(0xF177 + m.total_dim() as u64);
    for _ in 0..24 {
        let coeffs: Vec<Scalar> = basis.iter().map(|_| f.from_i64(rng.gen_range(-3..=3))).collect();
        candidates.push(linear_combination(basis, &coeffs, ModuleMorphism::zero(m, m)));
    }
    for phi in &candidates {
        for lambda in eigenvalue_candidates(phi, f) {
            let mut ker = Vec::with_capacity(m.dims.len());
            let mut img = Vec::with_capacity(m.dims.len());
            for (v, pv) in phi.maps.iter().enumerate() {
                let shifted = pv.sub(&Matrix::identity(f, m.dims[v]).scale(&lambda));
                let power = shifted.pow(m.dims[v]);
                ker.push(power.kernel_basis());
                img.push(power.column_basis());
            }
            let kd: usize = ker.iter().map(Matrix::cols).sum();
            if kd == 0 || kd == m.total_dim() {
                continue;
            }
            let (a, _) = m.submodule(&ker);
            let (b, _) = m.submodule(&img);
            return Ok((a, b));
        }
    }
    Err(Error::DecompositionFailed(format!(
        "no endomorphism with a rational eigenvalue splits a module of dimension vector {:?}",
        m.dims
    )))
}

fn eigenvalue_candidates(phi: &ModuleMorphism, f: Field) -> Vec<Scalar> {
    let mut seen: BTreeSet<alloc::string::String> = BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |s: Scalar, out: &mut Vec<Scalar>| {
        if seen.insert(s.to_text()) {
            out.push(s);
        }
    };
    for v in [0i64, 1, -1, 2, -2] {
        push(f.from_i64(v), &mut out);
    }
    for m in &phi.maps {
        for i in 0..m.rows() {
            push(m.get(i, i).clone(), &mut out);
        }
    }
    for m in &phi.maps {
        if m.rows() == 0 {
            continue;
        }
        for r in polynomial_roots(&m.char_poly(), f) {
            push(r, &mut out);
        }
    }
    out
}

/// Roots in the base field of a polynomial (coefficients lowest first).
/// Exhaustive for prime fields up to `10^5`; for the rationals uses the
/// rational root theorem when the extreme coefficients are small.
fn polynomial_roots(coeffs: &[Scalar], f: Field) -> Vec<Scalar> {
    let eval = |x: &Scalar| coeffs.iter().rev().fold(f.zero(), |acc, c| &(&acc * x) + c);
    match f {
        Field::Prime(p) if p <= 100_000 => {
            (0..p as i64).map(|v| f.from_i64(v)).filter(|x| eval(x).is_zero()).collect()
        }
        Field::Prime(_) => Vec::new(),
        Field::Rational => {
            let lo = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
            let trimmed = &coeffs[lo..];
            let ints = integer_coefficients(trimmed);
            let (Some(a0), Some(an)) = (ints.first(), ints.last()) else { return Vec::new() };
            let (Some(a0), Some(an)) = (a0.abs().to_u64(), an.abs().to_u64()) else { return Vec::new() };
            if a0 > 10_000_000 || an > 10_000_000 || a0 == 0 {
                return Vec::new();
            }
            let mut roots = Vec::new();
            for p in divisors(a0) {
                for q in divisors(an) {
                    for sign in [1i64, -1] {
                        let x = f
                            .from_fraction(&BigInt::from(sign * p as i64), &BigInt::from(q))
                            .expect("nonzero denominator");
                        if eval(&x).is_zero() && !roots.contains(&x) {
                            roots.push(x);
                        }
                    }
                }
            }
            roots
        }
    }
}

fn integer_coefficients(coeffs: &[Scalar]) -> Vec<BigInt> {
    use num_integer::Integer;
    let mut lcm = BigInt::from(1);
    let parts: Vec<(BigInt, BigInt)> = coeffs
        .iter()
        .map(|c| match c {
            Scalar::Q(r) => r.numer_denom(),
            Scalar::P(_) => (BigInt::zero(), BigInt::from(1)),
        })
        .collect();
    for (_, d) in &parts {
        lcm = lcm.lcm(d);
    }
    parts.into_iter().map(|(n, d)| n * (&lcm / d)).collect()
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i * i != n {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// Radical `rad M` (sum of arrow images) with its inclusion.
pub fn radical(m: &Representation) -> (Representation, ModuleMorphism) {
    let all: Vec<Matrix> = m.dims.iter().map(|&d| Matrix::identity(m.field(), d)).collect();
    let bases = m.arrow_images(&all);
    m.submodule(&bases)
}

fn radical_bases(m: &Representation) -> Vec<Matrix> {
    let all: Vec<Matrix> = m.dims.iter().map(|&d| Matrix::identity(m.field(), d)).collect();
    m.arrow_images(&all)
}

fn socle_bases(m: &Representation) -> Vec<Matrix> {
    let f = m.field();
    (0..m.dims.len())
        .map(|v| {
            let outgoing: Vec<Matrix> = m
                .algebra
                .quiver()
                .arrows()
                .iter()
                .enumerate()
                .filter(|(_, a)| a.source == v)
                .map(|(i, _)| m.maps[i].clone())
                .collect();
            Matrix::vstack_all(f, m.dims[v], &outgoing).kernel_basis()
        })
        .collect()
}

/// Socle `soc M` (joint kernel of the arrows) with its inclusion.
pub fn socle(m: &Representation) -> (Representation, ModuleMorphism) {
    m.submodule(&socle_bases(m))
}

/// Top `M / rad M` with the projection.
pub fn top(m: &Representation) -> (Representation, ModuleMorphism) {
    m.quotient(&radical_bases(m))
}

pub struct RadicalSocleTop {
    pub radical: (Representation, ModuleMorphism),
    pub socle: (Representation, ModuleMorphism),
    pub top: (Representation, ModuleMorphism),
}

pub fn radical_socle_top(m: &Representation) -> RadicalSocleTop {
    RadicalSocleTop { radical: radical(m), socle: socle(m), top: top(m) }
}

/// Multiplicities of the simples in the top of `M`.
pub fn top_vector(m: &Representation) -> Vec<usize> {
    radical_bases(m).iter().zip(&m.dims).map(|(b, &d)| d - b.cols()).collect()
}

/// Multiplicities of the simples in the socle of `M`.
pub fn socle_vector(m: &Representation) -> Vec<usize> {
    socle_bases(m).iter().map(Matrix::cols).collect()
}

/// A projective cover together with the vertex of each indecomposable
/// projective summand, in order.
#[derive(Clone, Debug)]
pub struct Cover {
    pub module: Representation,
    pub map: ModuleMorphism,
    pub vertices: Vec<usize>,
}

/// Projective cover `P -> M`, built from a basis of a complement of `rad M`.
pub fn projective_cover(m: &Representation) -> Result<Cover> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let alg = m.algebra.clone();
    let f = m.field();
    let rad = radical_bases(m);
    let mut gens: Vec<(usize, Vec<Scalar>)> = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        let c = r.complement_columns();
        for j in 0..c.cols() {
            gens.push((v, c.column(j)));
        }
    }
    let parts: Vec<Representation> = gens.iter().map(|(v, _)| qalgebra::projective(&alg, *v)).collect();
    let p = Representation::direct_sum_all(&alg, &parts);
    let maps = (0..alg.vertex_count())
        .map(|w| {
            let mut cols: Vec<Matrix> = Vec::new();
            for (v, y) in &gens {
                let y = Matrix::column_vector(f, y.clone());
                for &b in alg.basis_between(*v, w) {
                    cols.push(m.basis_action(b).mul(&y));
                }
            }
            Matrix::hstack_all(f, m.dims[w], &cols)
        })
        .collect();
    let vertices = gens.into_iter().map(|(v, _)| v).collect();
    Ok(Cover { module: p, map: ModuleMorphism { maps }, vertices })
}

/// Injective envelope `M -> I` with the vertex of each indecomposable
/// injective summand, in order; computed as the dual of a projective cover.
pub fn injective_envelope(m: &Representation) -> Result<Cover> {
    let dm = dualize(m);
    let c = projective_cover(&dm)?;
    Ok(Cover { module: dualize(&c.module), map: c.map.dual(), vertices: c.vertices })
}

pub fn is_projective(m: &Representation) -> bool {
    if m.is_zero() {
        return true;
    }
    let alg = m.algebra();
    let dim: usize = top_vector(m)
        .iter()
        .enumerate()
        .map(|(v, &k)| k * qalgebra::projective(alg, v).total_dim())
        .sum();
    dim == m.total_dim()
}

pub fn is_injective(m: &Representation) -> bool {
    is_projective(&dualize(m))
}
