//! Path matrices: formal matrices of path combinations between indecomposable
//! projectives. A path matrix T with row vertices y_r and column vertices x_c
//! stands for a map ⊕P_{y_r} → ⊕P_{x_c}; Hom(T, W) is the block matrix whose
//! (r, c) block is the evaluation of entry (r, c) on W.
//!
//! Also computes minimal projective presentations of concrete representations.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{q, qf, RationalMatrix, Q};
use crate::quiver::{Path, Quiver};
use crate::rep::{gram, Flavor, Representation, StructuredRep};
use crate::symmetric::SymmetricQuiver;

/// Formal combination of paths sharing endpoints.
pub type Combo = Vec<(Q, Path)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathMatrix {
    /// Vertex positions of the P₁ summands.
    pub rows: Vec<usize>,
    /// Vertex positions of the P₀ summands.
    pub cols: Vec<usize>,
    pub entries: Vec<Vec<Combo>>,
}

fn normalize(c: &mut Combo) {
    c.sort_by(|a, b| a.1.cmp(&b.1));
    let mut out: Combo = Vec::with_capacity(c.len());
    for (k, p) in c.drain(..) {
        match out.last_mut() {
            Some(last) if last.1 == p => last.0 += k,
            _ => out.push((k, p)),
        }
    }
    out.retain(|(k, _)| !k.is_zero());
    *c = out;
}

impl PathMatrix {
    pub fn zero(rows: Vec<usize>, cols: Vec<usize>) -> Self {
        let entries = vec![vec![Vec::new(); cols.len()]; rows.len()];
        PathMatrix { rows, cols, entries }
    }

    /// 1×1 template holding a single path.
    pub fn single(qv: &Quiver, path: Path) -> Self {
        let (x, y) = endpoints(qv, &path).expect("nonempty path");
        let mut t = Self::zero(vec![y], vec![x]);
        t.entries[0][0] = vec![(Q::one(), path)];
        t
    }

    pub fn push(&mut self, r: usize, c: usize, coef: Q, path: Path) {
        self.entries[r][c].push((coef, path));
        normalize(&mut self.entries[r][c]);
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty() && self.cols.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|c| c.is_empty())
    }

    /// Checks that every path runs from its column vertex to its row vertex.
    pub fn validate(&self, qv: &Quiver) -> Result<()> {
        for (r, row) in self.entries.iter().enumerate() {
            for (c, combo) in row.iter().enumerate() {
                for (_, p) in combo {
                    let ok = match endpoints(qv, p) {
                        Some((x, y)) => x == self.cols[c] && y == self.rows[r],
                        None => self.cols[c] == self.rows[r],
                    };
                    if !ok {
                        return Err(Error::ShapeMismatch(format!("entry ({r},{c}) has a path with wrong endpoints")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Hom(T, W): rows indexed by ⊕W(y_r), columns by ⊕W(x_c).
    pub fn evaluate(&self, qv: &Quiver, w: &Representation) -> RationalMatrix {
        let rdims: Vec<usize> = self.rows.iter().map(|&y| w.dim[y] as usize).collect();
        let cdims: Vec<usize> = self.cols.iter().map(|&x| w.dim[x] as usize).collect();
        let mut m = RationalMatrix::zeros(rdims.iter().sum(), cdims.iter().sum());
        let mut r0 = 0;
        for (r, row) in self.entries.iter().enumerate() {
            let mut c0 = 0;
            for (c, combo) in row.iter().enumerate() {
                if !combo.is_empty() {
                    let mut block = RationalMatrix::zeros(rdims[r], cdims[c]);
                    for (k, p) in combo {
                        block = block.add(&w.path_matrix(qv, p, self.cols[c]).scale(k));
                    }
                    m.set_block(r0, c0, &block);
                }
                c0 += cdims[c];
            }
            r0 += rdims[r];
        }
        m
    }

    pub fn evaluate_structured(&self, sq: &SymmetricQuiver, w: &StructuredRep) -> RationalMatrix {
        self.evaluate(sq.quiver(), &w.full(sq))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(self.rows == other.rows && self.cols == other.cols);
        let mut t = self.clone();
        for (r, row) in other.entries.iter().enumerate() {
            for (c, combo) in row.iter().enumerate() {
                t.entries[r][c].extend(combo.iter().cloned());
                normalize(&mut t.entries[r][c]);
            }
        }
        t
    }

    pub fn scale(&self, k: &Q) -> Self {
        let mut t = self.clone();
        for combo in t.entries.iter_mut().flatten() {
            for (c, _) in combo.iter_mut() {
                *c *= k;
            }
            normalize(combo);
        }
        t
    }

    /// Reorders rows so that row r sits at σ(cols[r]). None if the row
    /// vertices are not the σ-image of the column vertices.
    pub fn align_rows(&self, sq: &SymmetricQuiver) -> Option<Self> {
        if self.rows.len() != self.cols.len() {
            return None;
        }
        let mut used = vec![false; self.rows.len()];
        let mut order = Vec::with_capacity(self.rows.len());
        for &x in &self.cols {
            let target = sq.sigma_v(x);
            let r = (0..self.rows.len()).find(|&r| !used[r] && self.rows[r] == target)?;
            used[r] = true;
            order.push(r);
        }
        Some(PathMatrix {
            rows: order.iter().map(|&r| self.rows[r]).collect(),
            cols: self.cols.clone(),
            entries: order.iter().map(|&r| self.entries[r].clone()).collect(),
        })
    }

    /// T^σ(r, c) = ε(−1)^{len} σ(T(c, r)); needs aligned rows. On structured
    /// points the paired matrix of T^σ is the transpose of the paired matrix of T.
    pub fn sigma_transpose(&self, sq: &SymmetricQuiver, flavor: Flavor) -> Self {
        let n = self.cols.len();
        let mut t = Self::zero(self.rows.clone(), self.cols.clone());
        for r in 0..n {
            for c in 0..n {
                for (k, p) in &self.entries[c][r] {
                    let sp: Path = p.iter().rev().map(|&a| sq.sigma_a(a)).collect();
                    let sign = if (p.len() % 2 == 0) == (flavor.eps() == 1) { 1 } else { -1 };
                    t.entries[r][c].push((k * q(sign), sp));
                }
                normalize(&mut t.entries[r][c]);
            }
        }
        t
    }

    /// (T − T^σ)/2, whose paired matrix is skew on every structured point.
    pub fn skew_part(&self, sq: &SymmetricQuiver, flavor: Flavor) -> Self {
        self.add(&self.sigma_transpose(sq, flavor).scale(&q(-1))).scale(&qf(1, 2))
    }

    /// diag(G_{x_r, σx_r}) · Hom(T, W) for an aligned template.
    pub fn paired(&self, sq: &SymmetricQuiver, w: &StructuredRep) -> RationalMatrix {
        self.paired_full(sq, w.flavor, &w.full(sq))
    }

    /// Same, for a full representation known to carry the form of `flavor`.
    pub fn paired_full(&self, sq: &SymmetricQuiver, flavor: Flavor, w: &Representation) -> RationalMatrix {
        let hom = self.evaluate(sq.quiver(), w);
        let blocks: Vec<RationalMatrix> = self.cols.iter().map(|&x| gram(sq, flavor, &w.dim, x)).collect();
        RationalMatrix::block_diag(&blocks).mul(&hom)
    }

    /// Per-vertex counts: columns minus rows.
    pub fn column_minus_row(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0; n];
        for &x in &self.cols {
            v[x] += 1;
        }
        for &y in &self.rows {
            v[y] -= 1;
        }
        v
    }

    pub fn describe(&self, qv: &Quiver) -> String {
        let vid = |i: usize| qv.vertices()[i].to_string();
        let rows: Vec<String> = self.rows.iter().map(|&y| vid(y)).collect();
        let cols: Vec<String> = self.cols.iter().map(|&x| vid(x)).collect();
        let mut out = format!("rows [{}] cols [{}]", rows.join(","), cols.join(","));
        for (r, row) in self.entries.iter().enumerate() {
            for (c, combo) in row.iter().enumerate() {
                if !combo.is_empty() {
                    out.push_str(&format!(" ({r},{c})={}", combo_string(qv, combo)));
                }
            }
        }
        out
    }
}

/// Text form of a combination: `coef*arrow.arrow + ...`, arrows listed in
/// application order, `e` for a trivial path.
pub fn combo_string(qv: &Quiver, combo: &Combo) -> String {
    combo
        .iter()
        .map(|(k, p)| {
            let names = if p.is_empty() { "e".to_string() } else { qv.path_names(p).join(".") };
            format!("{}*{}", crate::linalg::fmt_q(k), names)
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// (tail, head) positions of a nonempty path.
pub fn endpoints(qv: &Quiver, p: &[usize]) -> Option<(usize, usize)> {
    let (first, last) = (*p.first()?, *p.last()?);
    for w in p.windows(2) {
        if qv.head(w[0]) != qv.tail(w[1]) {
            return None;
        }
    }
    Some((qv.tail(first), qv.head(last)))
}

fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut e = vec![Q::zero(); n];
    e[i] = Q::one();
    e
}

/// Extends `span` greedily by candidates not already in its span; returns the
/// indices of accepted candidates.
fn greedy_complement(dim: usize, span: &[Vec<Q>], candidates: &[Vec<Q>]) -> Vec<usize> {
    let mut basis: Vec<Vec<Q>> = span.to_vec();
    let mut rank = if basis.is_empty() { 0 } else { RationalMatrix::from_cols(dim, &basis).rank() };
    let mut chosen = Vec::new();
    for (i, v) in candidates.iter().enumerate() {
        if rank == dim {
            break;
        }
        basis.push(v.clone());
        let r = RationalMatrix::from_cols(dim, &basis).rank();
        if r > rank {
            rank = r;
            chosen.push(i);
        } else {
            basis.pop();
        }
    }
    chosen
}

/// Minimal projective presentation 0 → ⊕P_{y_r} → ⊕P_{x_c} → V → 0 of a
/// representation of an acyclic quiver.
pub fn minimal_presentation(qv: &Quiver, v: &Representation) -> Result<PathMatrix> {
    qv.topological_order()?;
    let n = qv.n();
    // Top of V: generators g at each vertex.
    let mut gens: Vec<(usize, Vec<Q>)> = Vec::new();
    for x in 0..n {
        let d = v.dim[x] as usize;
        if d == 0 {
            continue;
        }
        let mut rad = Vec::new();
        for a in 0..qv.arrows().len() {
            if qv.head(a) == x {
                rad.extend(v.mats[a].column_space());
            }
        }
        let cands: Vec<Vec<Q>> = (0..d).map(|i| unit(d, i)).collect();
        for i in greedy_complement(d, &rad, &cands) {
            gens.push((x, cands[i].clone()));
        }
    }
    let cols: Vec<usize> = gens.iter().map(|g| g.0).collect();

    // P₀(y) has coordinates (generator c, path from x_c to y).
    let coords: Vec<Vec<(usize, Path)>> = (0..n)
        .map(|y| {
            let mut cs = Vec::new();
            for (c, &x) in cols.iter().enumerate() {
                for p in qv.paths(x, y) {
                    cs.push((c, p));
                }
            }
            cs
        })
        .collect();
    // K(y) = ker(P₀(y) → V(y)).
    let kernels: Vec<Vec<Vec<Q>>> = (0..n)
        .map(|y| {
            let d = v.dim[y] as usize;
            if coords[y].is_empty() {
                return Vec::new();
            }
            let images: Vec<Vec<Q>> =
                coords[y].iter().map(|(c, p)| v.path_matrix(qv, p, cols[*c]).mul_vec(&gens[*c].1)).collect();
            if d == 0 {
                return (0..coords[y].len()).map(|i| unit(coords[y].len(), i)).collect();
            }
            RationalMatrix::from_cols(d, &images).kernel()
        })
        .collect();

    let mut rows = Vec::new();
    let mut row_entries = Vec::new();
    for y in 0..n {
        let m = coords[y].len();
        if kernels[y].is_empty() {
            continue;
        }
        // Radical of K at y: images of K(ta) along arrows into y.
        let mut rad = Vec::new();
        for a in 0..qv.arrows().len() {
            if qv.head(a) != y {
                continue;
            }
            let t = qv.tail(a);
            for k in &kernels[t] {
                let mut img = vec![Q::zero(); m];
                for (i, (c, p)) in coords[t].iter().enumerate() {
                    if k[i].is_zero() {
                        continue;
                    }
                    let mut pa = p.clone();
                    pa.push(a);
                    let j = coords[y].iter().position(|(c2, p2)| c2 == c && *p2 == pa).expect("path coordinate");
                    img[j] += &k[i];
                }
                rad.push(img);
            }
        }
        for i in greedy_complement(m, &rad, &kernels[y]) {
            let k = &kernels[y][i];
            let mut row = vec![Vec::new(); cols.len()];
            for (j, (c, p)) in coords[y].iter().enumerate() {
                if !k[j].is_zero() {
                    row[*c].push((k[j].clone(), p.clone()));
                }
            }
            for combo in row.iter_mut() {
                normalize(combo);
            }
            rows.push(y);
            row_entries.push(row);
        }
    }
    Ok(PathMatrix { rows, cols, entries: row_entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::rep::{dvw, interval_module};

    fn ratio_constant(pairs: &[(Q, Q)]) -> bool {
        let nz: Vec<&(Q, Q)> = pairs.iter().filter(|(a, b)| !a.is_zero() || !b.is_zero()).collect();
        if nz.is_empty() || nz.iter().any(|(a, b)| a.is_zero() || b.is_zero()) {
            return false;
        }
        let r = &nz[0].0 / &nz[0].1;
        nz.iter().all(|(a, b)| a / b == r)
    }

    #[test]
    fn interval_presentation_is_single_path() {
        let (sq, v) = interval_module(5, 2, 3).unwrap();
        let t = minimal_presentation(sq.quiver(), &v).unwrap();
        assert_eq!(t.cols, vec![1]);
        assert_eq!(t.rows, vec![3]);
        assert_eq!(t.entries[0][0].len(), 1);
        assert_eq!(t.entries[0][0][0].1.len(), 2);
    }

    #[test]
    fn presentation_det_matches_dvw() {
        let sq = families::a201(2, 2).unwrap();
        let qv = sq.quiver();
        let h = qv.null_root().unwrap();
        // a random module of dimension h − e_x for several x is rigid enough to test with
        for (seed, x) in [(1u64, 1usize), (2, 2)] {
            let mut d = h.clone();
            d[x] -= 1;
            let v = Representation::random(qv, d.clone(), seed);
            let t = minimal_presentation(qv, &v).unwrap();
            t.validate(qv).unwrap();
            let w_dim: Vec<i64> = h.iter().map(|k| 2 * k).collect();
            if qv.euler(&d, &w_dim) != 0 {
                continue;
            }
            let pairs: Vec<(Q, Q)> = (0..4)
                .map(|s| {
                    let w = Representation::random(qv, w_dim.clone(), 100 + s);
                    (t.evaluate(qv, &w).det().unwrap(), dvw(qv, &v, &w).unwrap().det().unwrap())
                })
                .collect();
            assert!(ratio_constant(&pairs));
        }
    }

    #[test]
    fn sigma_transpose_transposes_paired_matrix() {
        for flavor in [Flavor::Symplectic, Flavor::Orthogonal] {
            let sq = families::d10(4).unwrap();
            let qv = sq.quiver();
            let h = qv.null_root().unwrap();
            let x = qv.idx(1);
            let y = sq.sigma_v(qv.idx(2));
            let mut t = PathMatrix::zero(vec![sq.sigma_v(x), y], vec![x, qv.idx(2)]);
            for (r, &yy) in t.rows.clone().iter().enumerate() {
                for (c, &xx) in t.cols.clone().iter().enumerate() {
                    for (i, p) in qv.paths(xx, yy).into_iter().enumerate() {
                        t.push(r, c, q(i as i64 + r as i64 + 2 * c as i64 + 1), p);
                    }
                }
            }
            let t = t.align_rows(&sq).unwrap();
            let ts = t.sigma_transpose(&sq, flavor);
            let d: Vec<i64> = h.iter().map(|k| 2 * k).collect();
            let w = StructuredRep::random(&sq, flavor, d, 7).unwrap();
            assert_eq!(ts.paired(&sq, &w), t.paired(&sq, &w).transpose());
            assert!(t.skew_part(&sq, flavor).paired(&sq, &w).is_skew());
        }
    }
}
