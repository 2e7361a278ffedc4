//! Concrete representations, structured symplectic/orthogonal representations,
//! Hom/Ext via d^V_W, and random representations and group elements.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{q, qf, RationalMatrix, Q};
use crate::quiver::{Dim, Quiver};
use crate::symmetric::{Part, SymmetricQuiver};

/// Deterministic generator used for every seeded construction.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub dim: Dim,
    /// One matrix per arrow (by arrow index), of shape dim(ha) × dim(ta).
    pub mats: Vec<RationalMatrix>,
}

impl Representation {
    pub fn new(qv: &Quiver, dim: Dim, mats: Vec<RationalMatrix>) -> Result<Self> {
        if dim.len() != qv.n() || mats.len() != qv.arrows().len() || dim.iter().any(|&d| d < 0) {
            return Err(Error::ShapeMismatch("dimension vector or arrow count".into()));
        }
        for (a, m) in mats.iter().enumerate() {
            let (t, h) = (qv.tail(a), qv.head(a));
            if m.rows() != dim[h] as usize || m.cols() != dim[t] as usize {
                return Err(Error::ShapeMismatch(format!("arrow {}", qv.arrows()[a].name)));
            }
        }
        Ok(Representation { dim, mats })
    }

    pub fn zero(qv: &Quiver, dim: Dim) -> Self {
        let mats = (0..qv.arrows().len())
            .map(|a| RationalMatrix::zeros(dim[qv.head(a)] as usize, dim[qv.tail(a)] as usize))
            .collect();
        Representation { dim, mats }
    }

    pub fn random(qv: &Quiver, dim: Dim, seed: u64) -> Self {
        let mut r = rng(seed);
        let mats = (0..qv.arrows().len())
            .map(|a| random_matrix(&mut r, dim[qv.head(a)] as usize, dim[qv.tail(a)] as usize))
            .collect();
        Representation { dim, mats }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let dim = self.dim.iter().zip(&other.dim).map(|(a, b)| a + b).collect();
        let mats = self.mats.iter().zip(&other.mats).map(|(a, b)| RationalMatrix::block_diag(&[a.clone(), b.clone()])).collect();
        Representation { dim, mats }
    }

    pub fn is_zero(&self) -> bool {
        self.dim.iter().all(|&d| d == 0)
    }

    /// Composite matrix along a path (first arrow applied first); the empty
    /// path at position `x` is the identity of V(x).
    pub fn path_matrix(&self, qv: &Quiver, path: &[usize], x: usize) -> RationalMatrix {
        let mut m = RationalMatrix::identity(self.dim[x] as usize);
        for &a in path {
            m = self.mats[a].mul(&m);
        }
        let _ = qv;
        m
    }
}

pub fn random_matrix<R: Rng>(r: &mut R, rows: usize, cols: usize) -> RationalMatrix {
    let data = (0..rows * cols).map(|_| q(r.gen_range(-9..=9))).collect();
    RationalMatrix::from_vec(rows, cols, data)
}

/// Equioriented A_n interval module V_{j,i} (1-based, j ≤ i).
pub fn interval_module(n: usize, j: usize, i: usize) -> Result<(SymmetricQuiver, Representation)> {
    if j < 1 || j > i || i > n {
        return Err(Error::BadInterval(j, i));
    }
    let sq = crate::families::finite_a(n);
    let qv = sq.quiver();
    let dim: Dim = (1..=n).map(|x| i64::from(j <= x && x <= i)).collect();
    let mats = (0..qv.arrows().len())
        .map(|a| {
            let (t, h) = (qv.tail(a), qv.head(a));
            let mut m = RationalMatrix::zeros(dim[h] as usize, dim[t] as usize);
            if dim[h] == 1 && dim[t] == 1 {
                m[(0, 0)] = Q::one();
            }
            m
        })
        .collect();
    Ok((sq, Representation { dim, mats }))
}

/// d^V_W, homDim and extDim.
#[derive(Clone, Debug)]
pub struct HomExt {
    pub matrix: RationalMatrix,
    pub hom_dim: usize,
    pub ext_dim: usize,
}

fn vertex_offsets(qv: &Quiver, v: &Representation, w: &Representation) -> Vec<usize> {
    let mut off = vec![0];
    for x in 0..qv.n() {
        off.push(off[x] + (v.dim[x] * w.dim[x]) as usize);
    }
    off
}

/// The map f ↦ f(ha)V(a) − W(a)f(ta), with Hom(V(x),W(x)) vectorized row-major.
pub fn dvw(qv: &Quiver, v: &Representation, w: &Representation) -> Result<RationalMatrix> {
    if v.dim.len() != qv.n() || w.dim.len() != qv.n() || v.mats.len() != w.mats.len() {
        return Err(Error::QuiverMismatch);
    }
    let voff = vertex_offsets(qv, v, w);
    let mut aoff = vec![0];
    for a in 0..qv.arrows().len() {
        let (t, h) = (qv.tail(a), qv.head(a));
        aoff.push(aoff[a] + (v.dim[t] * w.dim[h]) as usize);
    }
    let mut d = RationalMatrix::zeros(*aoff.last().unwrap(), *voff.last().unwrap());
    for a in 0..qv.arrows().len() {
        let (t, h) = (qv.tail(a), qv.head(a));
        let (vt, wh) = (v.dim[t] as usize, w.dim[h] as usize);
        let (vh, wt) = (v.dim[h] as usize, w.dim[t] as usize);
        let va = &v.mats[a];
        let wa = &w.mats[a];
        // f_h V(a): basis E_{rc} at h gives V(a)[c][j] at (r, j)
        for r in 0..wh {
            for c in 0..vh {
                let col = voff[h] + r * vh + c;
                for jj in 0..vt {
                    let x = &va[(c, jj)];
                    if !x.is_zero() {
                        d[(aoff[a] + r * vt + jj, col)] += x;
                    }
                }
            }
        }
        // −W(a) f_t: basis E_{rc} at t gives W(a)[i][r] at (i, c)
        for r in 0..wt {
            for c in 0..vt {
                let col = voff[t] + r * vt + c;
                for ii in 0..wh {
                    let x = &wa[(ii, r)];
                    if !x.is_zero() {
                        d[(aoff[a] + ii * vt + c, col)] -= x;
                    }
                }
            }
        }
    }
    Ok(d)
}

pub fn dvw_and_homext(qv: &Quiver, v: &Representation, w: &Representation) -> Result<HomExt> {
    let matrix = dvw(qv, v, w)?;
    let rank = matrix.rank();
    Ok(HomExt { hom_dim: matrix.cols() - rank, ext_dim: matrix.rows() - rank, matrix })
}

/// Basis of Hom(V, W), each element a list of per-vertex matrices.
pub fn hom_basis(qv: &Quiver, v: &Representation, w: &Representation) -> Vec<Vec<RationalMatrix>> {
    let d = dvw(qv, v, w).expect("same quiver");
    let off = vertex_offsets(qv, v, w);
    d.kernel()
        .into_iter()
        .map(|k| {
            (0..qv.n())
                .map(|x| {
                    let (r, c) = (w.dim[x] as usize, v.dim[x] as usize);
                    RationalMatrix::from_vec(r, c, k[off[x]..off[x + 1]].to_vec())
                })
                .collect()
        })
        .collect()
}

/// Randomized isomorphism test: a random element of Hom(V, W) invertible at
/// every vertex certifies V ≅ W.
pub fn isomorphic(qv: &Quiver, v: &Representation, w: &Representation, seed: u64) -> bool {
    if v.dim != w.dim {
        return false;
    }
    let basis = hom_basis(qv, v, w);
    let mut r = rng(seed);
    for _ in 0..4 {
        let coeffs: Vec<Q> = basis.iter().map(|_| q(r.gen_range(-20..=20))).collect();
        let ok = (0..qv.n()).all(|x| {
            let n = v.dim[x] as usize;
            let mut m = RationalMatrix::zeros(n, n);
            for (b, c) in basis.iter().zip(&coeffs) {
                m = m.add(&b[x].scale(c));
            }
            !m.det().unwrap().is_zero()
        });
        if ok {
            return true;
        }
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Symplectic,
    Orthogonal,
}

impl Flavor {
    /// Sign of the form: ⟨u,w⟩ = ε⟨w,u⟩.
    pub fn eps(self) -> i64 {
        match self {
            Flavor::Symplectic => -1,
            Flavor::Orthogonal => 1,
        }
    }

    pub fn dual(self) -> Flavor {
        match self {
            Flavor::Symplectic => Flavor::Orthogonal,
            Flavor::Orthogonal => Flavor::Symplectic,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Symplectic => "sp",
            Flavor::Orthogonal => "o",
        }
    }
}

/// J = ((0, I), (−I, 0)) of size 2m.
pub fn j_matrix(n: usize) -> RationalMatrix {
    let m = n / 2;
    let mut j = RationalMatrix::zeros(n, n);
    for i in 0..m {
        j[(i, m + i)] = Q::one();
        j[(m + i, i)] = -Q::one();
    }
    j
}

/// Gram block G_{x,σx} of the canonical form: I on Q₀⁺, εI on Q₀⁻, and on
/// σ-fixed vertices I (orthogonal) or J (symplectic).
pub fn gram(sq: &SymmetricQuiver, flavor: Flavor, dim: &Dim, x: usize) -> RationalMatrix {
    let n = dim[x] as usize;
    match sq.vpart(x) {
        Part::Plus => RationalMatrix::identity(n),
        Part::Minus => RationalMatrix::identity(n).scale(&q(flavor.eps())),
        Part::Fixed => match flavor {
            Flavor::Orthogonal => RationalMatrix::identity(n),
            Flavor::Symplectic => j_matrix(n),
        },
    }
}

fn gram_inv(sq: &SymmetricQuiver, flavor: Flavor, dim: &Dim, x: usize) -> RationalMatrix {
    let g = gram(sq, flavor, dim, x);
    match (sq.vpart(x), flavor) {
        (Part::Fixed, Flavor::Symplectic) => g.neg(),
        _ => g,
    }
}

/// V(σa) = −G_{ta}⁻¹ V(a)ᵗ G_{ha}.
pub fn sigma_image(sq: &SymmetricQuiver, flavor: Flavor, dim: &Dim, a: usize, va: &RationalMatrix) -> RationalMatrix {
    let qv = sq.quiver();
    let (t, h) = (qv.tail(a), qv.head(a));
    gram_inv(sq, flavor, dim, t).mul(&va.transpose()).mul(&gram(sq, flavor, dim, h)).neg()
}

/// Stores only the positive and σ-fixed arrows; the rest is derived.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuredRep {
    pub flavor: Flavor,
    pub dim: Dim,
    pub mats: BTreeMap<usize, RationalMatrix>,
}

impl StructuredRep {
    pub fn check_dim(sq: &SymmetricQuiver, flavor: Flavor, dim: &Dim) -> Result<()> {
        if dim.len() != sq.n() {
            return Err(Error::ShapeMismatch("dimension vector length".into()));
        }
        if !sq.is_symmetric_dim(dim) {
            return Err(Error::AsymmetricDimension);
        }
        if flavor == Flavor::Symplectic {
            for x in sq.vertices_in(Part::Fixed) {
                if dim[x] % 2 != 0 {
                    return Err(Error::OddSymplecticDimension(sq.quiver().vertices()[x]));
                }
            }
        }
        Ok(())
    }

    pub fn zero(sq: &SymmetricQuiver, flavor: Flavor, dim: Dim) -> Result<Self> {
        Self::check_dim(sq, flavor, &dim)?;
        let full = Representation::zero(sq.quiver(), dim.clone());
        Ok(Self::from_full(sq, flavor, &full))
    }

    pub fn random(sq: &SymmetricQuiver, flavor: Flavor, dim: Dim, seed: u64) -> Result<Self> {
        Self::check_dim(sq, flavor, &dim)?;
        let mut r = rng(seed);
        let qv = sq.quiver();
        let mut mats = BTreeMap::new();
        for a in 0..qv.arrows().len() {
            let (t, h) = (qv.tail(a), qv.head(a));
            let (rows, cols) = (dim[h] as usize, dim[t] as usize);
            match sq.apart(a) {
                Part::Plus => {
                    mats.insert(a, random_matrix(&mut r, rows, cols));
                }
                Part::Fixed => {
                    mats.insert(a, random_fixed(&mut r, rows, flavor));
                }
                Part::Minus => {}
            }
        }
        Ok(StructuredRep { flavor, dim, mats })
    }

    /// Reads the positive and fixed arrows off a full representation.
    pub fn from_full(sq: &SymmetricQuiver, flavor: Flavor, v: &Representation) -> Self {
        let mats = (0..sq.quiver().arrows().len())
            .filter(|&a| sq.apart(a) != Part::Minus)
            .map(|a| (a, v.mats[a].clone()))
            .collect();
        StructuredRep { flavor, dim: v.dim.clone(), mats }
    }

    pub fn full(&self, sq: &SymmetricQuiver) -> Representation {
        let qv = sq.quiver();
        let mats = (0..qv.arrows().len())
            .map(|a| match sq.apart(a) {
                Part::Minus => {
                    let b = sq.sigma_a(a);
                    sigma_image(sq, self.flavor, &self.dim, b, &self.mats[&b])
                }
                _ => self.mats[&a].clone(),
            })
            .collect();
        Representation { dim: self.dim.clone(), mats }
    }
}

/// Symmetric (symplectic flavor) or skew (orthogonal flavor) random square matrix.
fn random_fixed<R: Rng>(r: &mut R, n: usize, flavor: Flavor) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let x = q(r.gen_range(-9..=9));
            match flavor {
                Flavor::Symplectic => {
                    m[(i, j)] = x.clone();
                    m[(j, i)] = x;
                }
                Flavor::Orthogonal if i != j => {
                    m[(j, i)] = -x.clone();
                    m[(i, j)] = x;
                }
                Flavor::Orthogonal => {}
            }
        }
    }
    m
}

/// Checks that a full representation is the one induced by a structured
/// representation of the given flavor.
pub fn check_structured(sq: &SymmetricQuiver, flavor: Flavor, v: &Representation) -> Result<()> {
    StructuredRep::check_dim(sq, flavor, &v.dim)?;
    let qv = sq.quiver();
    if Representation::new(qv, v.dim.clone(), v.mats.clone()).is_err() {
        return Err(Error::ShapeMismatch("matrix shapes".into()));
    }
    for a in 0..qv.arrows().len() {
        let b = sq.sigma_a(a);
        if v.mats[b] != sigma_image(sq, flavor, &v.dim, a, &v.mats[a]) {
            return Err(Error::ShapeMismatch(format!("arrow {} breaks the form", qv.arrows()[b].name)));
        }
    }
    Ok(())
}

impl StructuredRep {
    pub fn check(&self, sq: &SymmetricQuiver) -> Result<()> {
        check_structured(sq, self.flavor, &self.full(sq))
    }
}

/// ∇V: (∇V)(x) = V(σx)*, (∇V)(a) = −V(σa)ᵗ.
pub fn dual_rep(sq: &SymmetricQuiver, v: &Representation) -> Representation {
    let dim = sq.delta(&v.dim);
    let mats = (0..sq.quiver().arrows().len()).map(|a| v.mats[sq.sigma_a(a)].transpose().neg()).collect();
    Representation { dim, mats }
}

/// Element of the structured group; blocks on Q₀⁺ (det 1) and on Q₀^σ
/// (form-preserving). Blocks on Q₀⁻ are derived as (g_x⁻¹)ᵗ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub flavor: Flavor,
    pub blocks: BTreeMap<usize, RationalMatrix>,
}

impl GroupElement {
    pub fn identity(sq: &SymmetricQuiver, flavor: Flavor, dim: &Dim) -> Self {
        let blocks = (0..sq.n())
            .filter(|&x| sq.vpart(x) != Part::Minus)
            .map(|x| (x, RationalMatrix::identity(dim[x] as usize)))
            .collect();
        GroupElement { flavor, blocks }
    }

    pub fn random(sq: &SymmetricQuiver, flavor: Flavor, dim: &Dim, seed: u64) -> Self {
        let mut r = rng(seed);
        let mut blocks = BTreeMap::new();
        for x in 0..sq.n() {
            let n = dim[x] as usize;
            let b = match sq.vpart(x) {
                Part::Plus => random_sl(&mut r, n),
                Part::Fixed => match flavor {
                    Flavor::Orthogonal => random_so(&mut r, n),
                    Flavor::Symplectic => random_sp(&mut r, n),
                },
                Part::Minus => continue,
            };
            blocks.insert(x, b);
        }
        GroupElement { flavor, blocks }
    }

    /// The block acting on V(x) for any position x.
    pub fn block(&self, sq: &SymmetricQuiver, x: usize) -> RationalMatrix {
        match sq.vpart(x) {
            Part::Minus => self.blocks[&sq.sigma_v(x)].inverse().expect("invertible").transpose(),
            _ => self.blocks[&x].clone(),
        }
    }

    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        let blocks = self.blocks.iter().map(|(x, b)| (*x, b.mul(&other.blocks[x]))).collect();
        GroupElement { flavor: self.flavor, blocks }
    }

    pub fn act_full(&self, sq: &SymmetricQuiver, v: &Representation) -> Representation {
        let qv = sq.quiver();
        let g: Vec<RationalMatrix> = (0..sq.n()).map(|x| self.block(sq, x)).collect();
        let ginv: Vec<RationalMatrix> = g.iter().map(|m| m.inverse().expect("invertible")).collect();
        let mats = (0..qv.arrows().len())
            .map(|a| g[qv.head(a)].mul(&v.mats[a]).mul(&ginv[qv.tail(a)]))
            .collect();
        Representation { dim: v.dim.clone(), mats }
    }

    pub fn act(&self, sq: &SymmetricQuiver, w: &StructuredRep) -> Result<StructuredRep> {
        for (x, b) in &self.blocks {
            if b.rows() != w.dim[*x] as usize {
                return Err(Error::ShapeMismatch(format!("group block at position {x}")));
            }
        }
        Ok(StructuredRep::from_full(sq, w.flavor, &self.act_full(sq, &w.full(sq))))
    }

    pub fn preserves_forms(&self, sq: &SymmetricQuiver, dim: &Dim) -> bool {
        self.blocks.iter().all(|(&x, b)| match sq.vpart(x) {
            Part::Plus => b.det().map(|d| d.is_one()).unwrap_or(false),
            _ => {
                let gm = gram(sq, self.flavor, dim, x);
                b.transpose().mul(&gm).mul(b) == gm && b.det().map(|d| d.is_one()).unwrap_or(false)
            }
        })
    }
}

fn random_sl<R: Rng>(r: &mut R, n: usize) -> RationalMatrix {
    let mut g = RationalMatrix::identity(n);
    if n < 2 {
        return g;
    }
    for _ in 0..2 * n {
        let i = r.gen_range(0..n);
        let mut j = r.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = q(r.gen_range(-2..=2));
        let mut t = RationalMatrix::identity(n);
        t[(i, j)] = c;
        g = t.mul(&g);
    }
    g
}

const TRIPLES: [(i64, i64, i64); 4] = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25)];

fn random_so<R: Rng>(r: &mut R, n: usize) -> RationalMatrix {
    let mut g = RationalMatrix::identity(n);
    if n < 2 {
        return g;
    }
    for _ in 0..n {
        let i = r.gen_range(0..n);
        let mut j = r.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let (a, b, c) = TRIPLES[r.gen_range(0..TRIPLES.len())];
        let s = if r.gen_bool(0.5) { 1 } else { -1 };
        let mut t = RationalMatrix::identity(n);
        t[(i, i)] = qf(a, c);
        t[(j, j)] = qf(a, c);
        t[(i, j)] = qf(-s * b, c);
        t[(j, i)] = qf(s * b, c);
        g = t.mul(&g);
    }
    g
}

/// Products of symplectic transvections x ↦ x + c·ω(v,x)·v.
fn random_sp<R: Rng>(r: &mut R, n: usize) -> RationalMatrix {
    let mut g = RationalMatrix::identity(n);
    if n == 0 {
        return g;
    }
    let j = j_matrix(n);
    for _ in 0..n + 1 {
        let v: Vec<Q> = (0..n).map(|_| q(r.gen_range(-1..=1))).collect();
        let c = q(if r.gen_bool(0.5) { 1 } else { -1 });
        let vcol = RationalMatrix::from_cols(n, &[v]);
        let t = RationalMatrix::identity(n).add(&vcol.mul(&vcol.transpose()).mul(&j).scale(&c));
        g = t.mul(&g);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn simple_homs() {
        let sq = families::finite_a(2);
        let qv = sq.quiver();
        let s1 = Representation::zero(qv, vec![1, 0]);
        let s2 = Representation::zero(qv, vec![0, 1]);
        let he = dvw_and_homext(qv, &s1, &s1).unwrap();
        assert_eq!((he.hom_dim, he.ext_dim), (1, 0));
        let he = dvw_and_homext(qv, &s1, &s2).unwrap();
        assert_eq!((he.hom_dim, he.ext_dim), (0, 1));
    }

    #[test]
    fn interval_homs() {
        let (sq, v12) = interval_module(4, 1, 2).unwrap();
        let (_, v23) = interval_module(4, 2, 3).unwrap();
        assert_eq!(v23.dim, vec![0, 1, 1, 0]);
        // arrows i -> i+1: V_{2,3} maps onto the socle of V_{1,2}, not back
        let he = dvw_and_homext(sq.quiver(), &v23, &v12).unwrap();
        assert_eq!(he.hom_dim, 1);
        let he = dvw_and_homext(sq.quiver(), &v12, &v23).unwrap();
        assert_eq!(he.hom_dim, 0);
        assert!(interval_module(4, 3, 2).is_err());
    }

    #[test]
    fn structured_random_is_structured_and_selfdual() {
        for (sq, dim) in [
            (families::a201(0, 0).unwrap(), vec![2, 2]),
            (families::a11(0, 2).unwrap(), vec![1, 2, 1]),
            (families::d01(3).unwrap(), vec![1, 1, 2, 1, 1]),
            (families::a00(2).unwrap(), vec![1, 2, 1, 2]),
        ] {
            for flavor in [Flavor::Symplectic, Flavor::Orthogonal] {
                let w = StructuredRep::random(&sq, flavor, dim.clone(), 7).unwrap();
                let full = w.full(&sq);
                check_structured(&sq, flavor, &full).unwrap();
                let dual = dual_rep(&sq, &full);
                assert_eq!(dual.dim, full.dim);
                assert!(isomorphic(sq.quiver(), &full, &dual, 1));
                let g = GroupElement::random(&sq, flavor, &dim, 3);
                assert!(g.preserves_forms(&sq, &dim));
                let moved = g.act(&sq, &w).unwrap();
                moved.check(&sq).unwrap();
            }
        }
    }

    #[test]
    fn orthogonal_one_dimensional_fixed_arrows_vanish() {
        let sq = families::a201(0, 0).unwrap();
        let w = StructuredRep::random(&sq, Flavor::Orthogonal, vec![1, 1], 5).unwrap();
        assert!(w.mats.values().all(|m| m.is_zero()));
    }

    #[test]
    fn odd_symplectic_rejected() {
        let sq = families::a11(0, 2).unwrap();
        assert_eq!(
            StructuredRep::random(&sq, Flavor::Symplectic, vec![1, 1, 1], 0).unwrap_err(),
            Error::OddSymplecticDimension(2)
        );
    }
}
