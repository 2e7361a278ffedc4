//! Quivers, dimension vectors, the Euler form and the Dynkin/Euclidean shape
//! of the underlying graph.

use std::collections::{BTreeSet, HashMap};

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;

/// Dimension vectors are indexed by vertex position (ascending id order).
pub type Dim = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub tail: u32,
    pub head: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub name: String,
    vertices: Vec<u32>,
    arrows: Vec<Arrow>,
    pos: HashMap<u32, usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    DynkinA(usize),
    DynkinD(usize),
    DynkinE(usize),
    EuclideanA(usize),
    EuclideanD(usize),
    EuclideanE(usize),
    Other,
}

impl Classification {
    pub fn is_euclidean(self) -> bool {
        matches!(self, Self::EuclideanA(_) | Self::EuclideanD(_) | Self::EuclideanE(_))
    }
}

/// A path as a list of arrow indices, first arrow applied first.
pub type Path = Vec<usize>;

impl Quiver {
    pub fn new(name: &str, vertices: &[u32], arrows: Vec<Arrow>) -> Result<Self> {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        if vs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidQuiver("repeated vertex id".into()));
        }
        if vs.contains(&0) {
            return Err(Error::InvalidQuiver("vertex ids must be positive".into()));
        }
        let pos: HashMap<u32, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut names = BTreeSet::new();
        for a in &arrows {
            if !names.insert(a.name.clone()) {
                return Err(Error::InvalidQuiver(format!("repeated arrow name {}", a.name)));
            }
            if !pos.contains_key(&a.tail) || !pos.contains_key(&a.head) {
                return Err(Error::InvalidQuiver(format!("arrow {} has an unknown endpoint", a.name)));
            }
        }
        let q = Quiver { name: name.to_string(), vertices: vs, arrows, pos };
        q.topological_order()?;
        Ok(q)
    }

    /// Convenience constructor from `(name, tail, head)` triples.
    pub fn from_edges(name: &str, vertices: &[u32], arrows: &[(&str, u32, u32)]) -> Result<Self> {
        let arrows = arrows
            .iter()
            .map(|&(n, t, h)| Arrow { name: n.to_string(), tail: t, head: h })
            .collect();
        Self::new(name, vertices, arrows)
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn idx(&self, v: u32) -> usize {
        self.pos[&v]
    }

    pub fn try_idx(&self, v: u32) -> Option<usize> {
        self.pos.get(&v).copied()
    }

    pub fn arrow_idx(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn tail(&self, a: usize) -> usize {
        self.idx(self.arrows[a].tail)
    }

    pub fn head(&self, a: usize) -> usize {
        self.idx(self.arrows[a].head)
    }

    pub fn unit(&self, v: u32) -> Dim {
        let mut d = vec![0; self.n()];
        d[self.idx(v)] = 1;
        d
    }

    pub fn dim_from_map(&self, m: &[(u32, i64)]) -> Result<Dim> {
        let mut d = vec![0; self.n()];
        for &(v, x) in m {
            let i = self.try_idx(v).ok_or_else(|| Error::DomainMismatch(format!("vertex {v}")))?;
            d[i] = x;
        }
        Ok(d)
    }

    /// Kahn's algorithm, smallest available id first.
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let n = self.n();
        let mut indeg = vec![0usize; n];
        for a in 0..self.arrows.len() {
            indeg[self.head(a)] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(&i) = ready.iter().next() {
            ready.remove(&i);
            order.push(i);
            for a in 0..self.arrows.len() {
                if self.tail(a) == i {
                    let h = self.head(a);
                    indeg[h] -= 1;
                    if indeg[h] == 0 {
                        ready.insert(h);
                    }
                }
            }
        }
        if order.len() < n {
            return Err(Error::CyclicQuiver);
        }
        Ok(order)
    }

    fn check_dim(&self, a: &Dim) -> Result<()> {
        if a.len() != self.n() {
            return Err(Error::DomainMismatch(format!("expected {} entries, got {}", self.n(), a.len())));
        }
        Ok(())
    }

    pub fn euler_form(&self, a: &Dim, b: &Dim) -> Result<i64> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        Ok(self.euler(a, b))
    }

    /// Unchecked Euler form.
    pub fn euler(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s: i64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
        for i in 0..self.arrows.len() {
            s -= a[self.tail(i)] * b[self.head(i)];
        }
        s
    }

    pub fn tits(&self, a: &[i64]) -> i64 {
        self.euler(a, a)
    }

    /// Number of edges between positions `i` and `j` in the underlying graph.
    pub fn edges_between(&self, i: usize, j: usize) -> i64 {
        (0..self.arrows.len())
            .filter(|&a| {
                let (t, h) = (self.tail(a), self.head(a));
                (t == i && h == j) || (t == j && h == i)
            })
            .count() as i64
    }

    pub fn is_sink(&self, i: usize) -> bool {
        (0..self.arrows.len()).all(|a| self.tail(a) != i)
    }

    pub fn is_source(&self, i: usize) -> bool {
        (0..self.arrows.len()).all(|a| self.head(a) != i)
    }

    /// The quiver with every arrow at position `i` reversed.
    pub fn reversed_at(&self, i: usize) -> Quiver {
        self.reversed_at_all(&[i])
    }

    pub fn reversed_at_all(&self, is: &[usize]) -> Quiver {
        let mut q = self.clone();
        for a in 0..q.arrows.len() {
            let (t, h) = (self.tail(a), self.head(a));
            let flips = is.iter().filter(|&&i| i == t || i == h).count();
            if flips % 2 == 1 {
                let arr = &mut q.arrows[a];
                std::mem::swap(&mut arr.tail, &mut arr.head);
            }
        }
        q
    }

    fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n()];
        for a in 0..self.arrows.len() {
            d[self.tail(a)] += 1;
            d[self.head(a)] += 1;
        }
        d
    }

    fn neighbours(&self, i: usize) -> Vec<usize> {
        let mut v = Vec::new();
        for a in 0..self.arrows.len() {
            if self.tail(a) == i {
                v.push(self.head(a));
            } else if self.head(a) == i {
                v.push(self.tail(a));
            }
        }
        v
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in self.neighbours(i) {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    pub fn classify(&self) -> Classification {
        use Classification::*;
        let n = self.n();
        let m = self.arrows.len();
        if n == 0 || !self.is_connected() {
            return Other;
        }
        let deg = self.degrees();
        if m == n {
            return if deg.iter().all(|&d| d == 2) { EuclideanA(n - 1) } else { Other };
        }
        if m != n - 1 {
            return Other;
        }
        let branch: Vec<usize> = (0..n).filter(|&i| deg[i] >= 3).collect();
        match branch.len() {
            0 => DynkinA(n),
            1 => {
                let c = branch[0];
                let mut arms: Vec<usize> =
                    self.neighbours(c).into_iter().map(|s| self.arm_length(c, s)).collect();
                arms.sort_unstable();
                match arms.as_slice() {
                    [1, 1, 1, 1] => EuclideanD(4),
                    [1, 1, _] => DynkinD(n),
                    [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => DynkinE(n),
                    [2, 2, 2] | [1, 3, 3] | [1, 2, 5] => EuclideanE(n - 1),
                    _ => Other,
                }
            }
            2 => {
                let ok = branch.iter().all(|&b| {
                    deg[b] == 3
                        && self.neighbours(b).into_iter().filter(|&s| deg[s] == 1).count() == 2
                });
                if ok {
                    EuclideanD(n - 1)
                } else {
                    Other
                }
            }
            _ => Other,
        }
    }

    /// Number of vertices on the arm starting at `start` away from `centre`,
    /// or a large value if the arm branches.
    fn arm_length(&self, centre: usize, start: usize) -> usize {
        let (mut prev, mut cur, mut len) = (centre, start, 1);
        loop {
            let next: Vec<usize> = self.neighbours(cur).into_iter().filter(|&x| x != prev).collect();
            match next.len() {
                0 => return len,
                1 => {
                    prev = cur;
                    cur = next[0];
                    len += 1;
                }
                _ => return usize::MAX / 4,
            }
        }
    }

    /// Symmetric Cartan matrix 2I − (edge counts).
    pub fn cartan(&self) -> RationalMatrix {
        let n = self.n();
        let mut c = RationalMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let v = if i == j { 2 } else { 0 } - if i == j { 0 } else { self.edges_between(i, j) };
                c[(i, j)] = crate::linalg::q(v);
            }
        }
        c
    }

    /// Minimal positive radical vector of the Tits form.
    pub fn null_root(&self) -> Result<Dim> {
        if !self.classify().is_euclidean() {
            return Err(Error::NotEuclidean);
        }
        let ker = self.cartan().kernel();
        if ker.len() != 1 {
            return Err(Error::NotEuclidean);
        }
        let v = &ker[0];
        let l = v.iter().fold(num_bigint::BigInt::from(1), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<num_bigint::BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
        let g = ints.iter().fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
        let sign = if ints.iter().any(|x| x.is_negative()) { -1 } else { 1 };
        Ok(ints.iter().map(|x| (x / &g).to_i64().unwrap() * sign).collect())
    }

    pub fn defect(&self, d: &Dim) -> Result<i64> {
        let h = self.null_root()?;
        self.euler_form(&h, d)
    }

    /// All paths from position `x` to position `z`, in depth-first order with
    /// arrows taken in declaration order. The trivial path at `x` is `[]`.
    pub fn paths(&self, x: usize, z: usize) -> Vec<Path> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.paths_rec(x, z, &mut cur, &mut out);
        out
    }

    fn paths_rec(&self, at: usize, z: usize, cur: &mut Path, out: &mut Vec<Path>) {
        if at == z {
            out.push(cur.clone());
        }
        for a in 0..self.arrows.len() {
            if self.tail(a) == at {
                cur.push(a);
                self.paths_rec(self.head(a), z, cur, out);
                cur.pop();
            }
        }
    }

    pub fn path_names(&self, p: &Path) -> Vec<String> {
        p.iter().map(|&a| self.arrows[a].name.clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Classification::*;

    #[test]
    fn classify_examples() {
        let p = Quiver::from_edges("p", &[1, 2, 3], &[("a", 1, 2), ("b", 2, 3)]).unwrap();
        assert_eq!(p.classify(), DynkinA(3));
        let c = Quiver::from_edges("c", &[1, 2, 3, 4], &[("a", 1, 2), ("b", 3, 2), ("c", 3, 4), ("d", 1, 4)])
            .unwrap();
        assert_eq!(c.classify(), EuclideanA(3));
        let k = Quiver::from_edges("k", &[1, 2], &[("a", 1, 2), ("b", 1, 2)]).unwrap();
        assert_eq!(k.classify(), EuclideanA(1));
        let d4 = Quiver::from_edges("d", &[1, 2, 3, 4, 5], &[("a", 1, 5), ("b", 2, 5), ("c", 3, 5), ("d", 4, 5)])
            .unwrap();
        assert_eq!(d4.classify(), EuclideanD(4));
        assert_eq!(d4.null_root().unwrap(), vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn cyclic_rejected() {
        let r = Quiver::from_edges("c", &[1, 2], &[("a", 1, 2), ("b", 2, 1)]);
        assert_eq!(r.unwrap_err(), Error::CyclicQuiver);
    }

    #[test]
    fn euler_examples() {
        let q = Quiver::from_edges("a2", &[1, 2], &[("a", 1, 2)]).unwrap();
        assert_eq!(q.euler_form(&vec![1, 0], &vec![0, 1]).unwrap(), -1);
        assert_eq!(q.euler_form(&vec![1, 1], &vec![1, 1]).unwrap(), 1);
        assert!(q.euler_form(&vec![1], &vec![1, 1]).is_err());
    }

    #[test]
    fn kronecker_projective_has_negative_defect() {
        let k = Quiver::from_edges("k", &[1, 2], &[("a", 1, 2), ("b", 1, 2)]).unwrap();
        let h = k.null_root().unwrap();
        assert_eq!(h, vec![1, 1]);
        assert_eq!(k.defect(&h).unwrap(), 0);
        // P_1 has dimension (1,2)
        assert!(k.defect(&vec![1, 2]).unwrap() < 0);
    }
}
