//! Symmetric quivers: the involution σ, the partition into positive, fixed and
//! negative parts, the δ involution, family classification and orientation
//! normalization by admissible sink-source pairs.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::families;
use crate::quiver::{Classification, Dim, Quiver};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Part {
    Plus,
    Fixed,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricQuiver {
    quiver: Quiver,
    sigma_v: Vec<usize>,
    sigma_a: Vec<usize>,
    part_v: Vec<Part>,
    part_a: Vec<Part>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymTag {
    FiniteA(usize),
    A201(usize, usize),
    A202(usize, usize),
    A02(usize, usize),
    A11(usize, usize),
    A00(usize, usize),
    D10(usize),
    D01(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetricType {
    pub tag: SymTag,
    /// (s, t, k, l) for type Ã.
    pub signature: Option<(usize, usize, usize, usize)>,
}

impl SymTag {
    pub fn is_tame(self) -> bool {
        !matches!(self, SymTag::FiniteA(_))
    }
}

impl fmt::Display for SymTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SymTag::FiniteA(n) => write!(f, "FiniteA n={n}"),
            SymTag::A201(k, l) => write!(f, "A201 k={k} l={l}"),
            SymTag::A202(k, l) => write!(f, "A202 k={k} l={l}"),
            SymTag::A02(k, l) => write!(f, "A02 k={k} l={l}"),
            SymTag::A11(k, l) => write!(f, "A11 k={k} l={l}"),
            SymTag::A00(k, l) => write!(f, "A00 k={k} l={l}"),
            SymTag::D10(n) => write!(f, "D10 n={n}"),
            SymTag::D01(n) => write!(f, "D01 n={n}"),
        }
    }
}

impl SymmetricQuiver {
    /// Builds and validates from vertex and arrow involutions given as pairs
    /// (a fixed point is the pair `(i, i)`).
    pub fn validate(quiver: Quiver, vpairs: &[(u32, u32)], apairs: &[(String, String)]) -> Result<Self> {
        let n = quiver.n();
        let mut sv: Vec<Option<usize>> = vec![None; n];
        for &(i, j) in vpairs {
            let (Some(a), Some(b)) = (quiver.try_idx(i), quiver.try_idx(j)) else {
                return Err(Error::NotInvolutive(format!("unknown vertex in sigma pair ({i},{j})")));
            };
            for (x, y) in [(a, b), (b, a)] {
                match sv[x] {
                    Some(z) if z != y => {
                        return Err(Error::NotInvolutive(format!("vertex {} mapped twice", quiver.vertices()[x])))
                    }
                    _ => sv[x] = Some(y),
                }
            }
        }
        let m = quiver.arrows().len();
        let mut sa: Vec<Option<usize>> = vec![None; m];
        for (x, y) in apairs {
            let (Some(a), Some(b)) = (quiver.arrow_idx(x), quiver.arrow_idx(y)) else {
                return Err(Error::NotInvolutive(format!("unknown arrow in sigma pair ({x},{y})")));
            };
            for (s, t) in [(a, b), (b, a)] {
                match sa[s] {
                    Some(z) if z != t => {
                        return Err(Error::NotInvolutive(format!("arrow {} mapped twice", quiver.arrows()[s].name)))
                    }
                    _ => sa[s] = Some(t),
                }
            }
        }
        let sigma_v: Vec<usize> = sv
            .into_iter()
            .enumerate()
            .map(|(i, x)| x.ok_or_else(|| Error::NotInvolutive(format!("sigma undefined at vertex {}", quiver.vertices()[i]))))
            .collect::<Result<_>>()?;
        let sigma_a: Vec<usize> = sa
            .into_iter()
            .enumerate()
            .map(|(i, x)| x.ok_or_else(|| Error::NotInvolutive(format!("sigma undefined at arrow {}", quiver.arrows()[i].name))))
            .collect::<Result<_>>()?;
        Self::from_maps(quiver, sigma_v, sigma_a)
    }

    pub fn from_maps(quiver: Quiver, sigma_v: Vec<usize>, sigma_a: Vec<usize>) -> Result<Self> {
        let n = quiver.n();
        let m = quiver.arrows().len();
        if sigma_v.len() != n || sigma_a.len() != m {
            return Err(Error::NotInvolutive("sigma must be total".into()));
        }
        for i in 0..n {
            if sigma_v[i] >= n || sigma_v[sigma_v[i]] != i {
                return Err(Error::NotInvolutive(format!("vertex {}", quiver.vertices()[i])));
            }
        }
        for a in 0..m {
            if sigma_a[a] >= m || sigma_a[sigma_a[a]] != a {
                return Err(Error::NotInvolutive(format!("arrow {}", quiver.arrows()[a].name)));
            }
        }
        for a in 0..m {
            let b = sigma_a[a];
            if quiver.tail(b) != sigma_v[quiver.head(a)] || quiver.head(b) != sigma_v[quiver.tail(a)] {
                return Err(Error::NotContravariant(format!("arrow {}", quiver.arrows()[a].name)));
            }
            if sigma_v[quiver.tail(a)] == quiver.head(a) && b != a {
                return Err(Error::PartitionViolation(format!(
                    "arrow {} joins x and sigma(x) but is not fixed",
                    quiver.arrows()[a].name
                )));
            }
        }
        let part_v = choose_positive(&quiver, &sigma_v, &sigma_a);
        let part_a = choose_positive_arrows(&quiver, &sigma_a, &part_v);
        Ok(SymmetricQuiver { quiver, sigma_v, sigma_a, part_v, part_a })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn n(&self) -> usize {
        self.quiver.n()
    }

    pub fn sigma_v(&self, i: usize) -> usize {
        self.sigma_v[i]
    }

    pub fn sigma_a(&self, a: usize) -> usize {
        self.sigma_a[a]
    }

    pub fn vpart(&self, i: usize) -> Part {
        self.part_v[i]
    }

    pub fn apart(&self, a: usize) -> Part {
        self.part_a[a]
    }

    pub fn vertices_in(&self, p: Part) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.part_v[i] == p).collect()
    }

    pub fn arrows_in(&self, p: Part) -> Vec<usize> {
        (0..self.quiver.arrows().len()).filter(|&a| self.part_a[a] == p).collect()
    }

    /// (δα)(i) = α(σ(i)).
    pub fn delta(&self, a: &[i64]) -> Dim {
        (0..self.n()).map(|i| a[self.sigma_v[i]]).collect()
    }

    pub fn is_symmetric_dim(&self, a: &[i64]) -> bool {
        self.delta(a) == a
    }

    /// Sinks x ∉ Q₀^σ with no arrow between x and σ(x), as positions.
    pub fn admissible_sinks(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&x| {
                let s = self.sigma_v[x];
                s != x && self.quiver.is_sink(x) && self.quiver.edges_between(x, s) == 0
            })
            .collect()
    }

    pub fn is_admissible(&self, x: usize) -> bool {
        let s = self.sigma_v[x];
        s != x
            && (self.quiver.is_sink(x) || self.quiver.is_source(x))
            && self.quiver.edges_between(x, s) == 0
    }

    /// Orientation after c_{(x,σx)}: every arrow at x or σ(x) reversed.
    pub fn reflect_pair(&self, x: usize) -> Result<SymmetricQuiver> {
        if !self.is_admissible(x) {
            return Err(Error::NotAdmissible(self.quiver.vertices()[x]));
        }
        let q = self.quiver.reversed_at_all(&[x, self.sigma_v[x]]);
        SymmetricQuiver::from_maps(q, self.sigma_v.clone(), self.sigma_a.clone())
    }

    pub fn classify(&self) -> Result<SymmetricType> {
        let unsupported = |c: Classification| Error::UnsupportedSymmetricType(format!("{c:?}"));
        let q = &self.quiver;
        let c = q.classify();
        let s = self.arrows_in(Part::Fixed).len();
        let t = self.vertices_in(Part::Fixed).len();
        match c {
            Classification::DynkinA(n) => Ok(SymmetricType { tag: SymTag::FiniteA(n), signature: None }),
            Classification::EuclideanA(_) => {
                let (k, l, fixed_dirs) = self.cycle_counts();
                let tag = match (s, t) {
                    (2, 0) => {
                        if fixed_dirs.len() == 2 && fixed_dirs[0] != fixed_dirs[1] {
                            SymTag::A201(k, l)
                        } else {
                            SymTag::A202(k, l)
                        }
                    }
                    (0, 2) => SymTag::A02(k, l),
                    (1, 1) => SymTag::A11(k, l),
                    (0, 0) => SymTag::A00(k, l),
                    _ => return Err(unsupported(c)),
                };
                if k % 2 == 1 || l % 2 == 1 {
                    return Err(unsupported(c));
                }
                Ok(SymmetricType { tag, signature: Some((s, t, k, l)) })
            }
            Classification::EuclideanD(_) => {
                let n = q.n();
                let tag = match (s, t) {
                    (1, 0) if n.is_multiple_of(2) => SymTag::D10(n / 2),
                    (0, 1) if n % 2 == 1 => SymTag::D01(n.div_ceil(2)),
                    _ => return Err(unsupported(c)),
                };
                Ok(SymmetricType { tag, signature: None })
            }
            other => Err(unsupported(other)),
        }
    }

    /// Walks the cycle of an Ã quiver and returns (backward non-fixed count,
    /// forward non-fixed count, directions of fixed arrows in walk order).
    fn cycle_counts(&self) -> (usize, usize, Vec<bool>) {
        let q = &self.quiver;
        let m = q.arrows().len();
        let fixed_a = self.arrows_in(Part::Fixed);
        let fixed_v = self.vertices_in(Part::Fixed);
        let (start, first) = if let Some(&x) = fixed_v.first() {
            let a = (0..m).find(|&a| q.tail(a) == x).expect("fixed vertex has an outgoing arrow");
            (x, a)
        } else if let Some(&a) = fixed_a.first() {
            (q.tail(a), a)
        } else {
            let a = (0..m)
                .filter(|&a| q.tail(a) == 0 || q.head(a) == 0)
                .min_by_key(|&a| if q.tail(a) == 0 { q.head(a) } else { q.tail(a) })
                .expect("vertex 0 lies on the cycle");
            (0, a)
        };
        let (mut k, mut l) = (0, 0);
        let mut dirs = Vec::new();
        let mut used = vec![false; m];
        let (mut at, mut a) = (start, first);
        for _ in 0..m {
            used[a] = true;
            let forward = q.tail(a) == at;
            if self.part_a[a] == Part::Fixed {
                dirs.push(forward);
            } else if forward {
                l += 1;
            } else {
                k += 1;
            }
            at = if forward { q.head(a) } else { q.tail(a) };
            match (0..m).find(|&b| !used[b] && (q.tail(b) == at || q.head(b) == at)) {
                Some(b) => a = b,
                None => break,
            }
        }
        (k, l, dirs)
    }

    /// Shortest word of admissible pair reflections (ascending ids explored
    /// first) reaching the canonical orientation of the family.
    pub fn normalize_orientation(&self) -> Result<(Vec<(u32, u32)>, SymmetricQuiver)> {
        let ty = self.classify()?;
        let target = families::canonical(ty.tag)?;
        let key = |s: &SymmetricQuiver| -> Vec<bool> {
            s.quiver.arrows().iter().zip(self.quiver.arrows()).map(|(a, b)| a.tail == b.tail).collect()
        };
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(key(self));
        queue.push_back((self.clone(), Vec::new()));
        while let Some((s, word)) = queue.pop_front() {
            if s.is_isomorphic(&target) {
                return Ok((word, s));
            }
            if seen.len() > 200_000 {
                break;
            }
            for x in s.admissible_sinks() {
                let r = s.reflect_pair(x)?;
                if seen.insert(key(&r)) {
                    let mut w = word.clone();
                    let v = s.quiver.vertices();
                    w.push((v[x], v[s.sigma_v[x]]));
                    queue.push_back((r, w));
                }
            }
        }
        Err(Error::UnsupportedSymmetricType(format!("{} has no reachable canonical orientation", ty.tag)))
    }

    /// Bijection of vertices commuting with σ and preserving arrow counts.
    pub fn is_isomorphic(&self, other: &SymmetricQuiver) -> bool {
        let n = self.n();
        if n != other.n() || self.quiver.arrows().len() != other.quiver.arrows().len() {
            return false;
        }
        let count = |s: &SymmetricQuiver| {
            let mut c: HashMap<(usize, usize), usize> = HashMap::new();
            for a in 0..s.quiver.arrows().len() {
                *c.entry((s.quiver.tail(a), s.quiver.head(a))).or_default() += 1;
            }
            c
        };
        let (c1, c2) = (count(self), count(other));
        let sig = |s: &SymmetricQuiver, i: usize| {
            let q = &s.quiver;
            let out = (0..q.arrows().len()).filter(|&a| q.tail(a) == i).count();
            let inn = (0..q.arrows().len()).filter(|&a| q.head(a) == i).count();
            (out, inn, s.sigma_v[i] == i)
        };
        let mut f: Vec<Option<usize>> = vec![None; n];
        let mut used = vec![false; n];
        fn consistent(
            s: &SymmetricQuiver,
            o: &SymmetricQuiver,
            c1: &HashMap<(usize, usize), usize>,
            c2: &HashMap<(usize, usize), usize>,
            f: &[Option<usize>],
            i: usize,
        ) -> bool {
            let fi = f[i].unwrap();
            if let Some(g) = f[s.sigma_v[i]] {
                if g != o.sigma_v[fi] {
                    return false;
                }
            }
            for j in 0..f.len() {
                if let Some(fj) = f[j] {
                    let a = c1.get(&(i, j)).copied().unwrap_or(0);
                    let b = c2.get(&(fi, fj)).copied().unwrap_or(0);
                    let a2 = c1.get(&(j, i)).copied().unwrap_or(0);
                    let b2 = c2.get(&(fj, fi)).copied().unwrap_or(0);
                    if a != b || a2 != b2 {
                        return false;
                    }
                }
            }
            true
        }
        #[allow(clippy::too_many_arguments)]
        fn go(
            s: &SymmetricQuiver,
            o: &SymmetricQuiver,
            c1: &HashMap<(usize, usize), usize>,
            c2: &HashMap<(usize, usize), usize>,
            sig: &dyn Fn(&SymmetricQuiver, usize) -> (usize, usize, bool),
            f: &mut Vec<Option<usize>>,
            used: &mut Vec<bool>,
            i: usize,
        ) -> bool {
            if i == f.len() {
                return true;
            }
            for cand in 0..f.len() {
                if used[cand] || sig(s, i) != sig(o, cand) {
                    continue;
                }
                f[i] = Some(cand);
                used[cand] = true;
                if consistent(s, o, c1, c2, f, i) && go(s, o, c1, c2, sig, f, used, i + 1) {
                    return true;
                }
                f[i] = None;
                used[cand] = false;
            }
            false
        }
        go(self, other, &c1, &c2, &sig, &mut f, &mut used, 0)
    }

    /// Vertex and arrow σ pairs in file order (each pair listed once).
    pub fn sigma_pairs(&self) -> (Vec<(u32, u32)>, Vec<(String, String)>) {
        let v = self.quiver.vertices();
        let vp = (0..self.n()).filter(|&i| self.sigma_v[i] >= i).map(|i| (v[i], v[self.sigma_v[i]])).collect();
        let ar = self.quiver.arrows();
        let ap = (0..ar.len())
            .filter(|&a| self.sigma_a[a] >= a)
            .map(|a| (ar[a].name.clone(), ar[self.sigma_a[a]].name.clone()))
            .collect();
        (vp, ap)
    }
}

/// Positive part: per connected component of the non-fixed graph, the one of
/// {C, σC} with the smaller minimal id. A σ-stable component (type Ã^{0,0})
/// is split by a breadth-first walk from its smallest vertex.
fn choose_positive(q: &Quiver, sv: &[usize], sa: &[usize]) -> Vec<Part> {
    let n = q.n();
    let mut part: Vec<Option<Part>> = (0..n).map(|i| if sv[i] == i { Some(Part::Fixed) } else { None }).collect();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for a in 0..q.arrows().len() {
        let (t, h) = (q.tail(a), q.head(a));
        if sa[a] != a && sv[t] != t && sv[h] != h {
            adj[t].insert(h);
            adj[h].insert(t);
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if sv[s] == s || comp[s] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut stack = vec![s];
        while let Some(i) = stack.pop() {
            for &j in &adj[i] {
                if comp[j] == usize::MAX {
                    comp[j] = id;
                    members.push(j);
                    stack.push(j);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }
    for c in &comps {
        if part[c[0]].is_some() {
            continue;
        }
        let image = comp[sv[c[0]]];
        if image != comp[c[0]] {
            for &i in c {
                part[i] = Some(Part::Plus);
                part[sv[i]] = Some(Part::Minus);
            }
        } else {
            let mut queue = VecDeque::from([c[0]]);
            let mut seen = BTreeSet::from([c[0]]);
            while let Some(i) = queue.pop_front() {
                if part[i].is_none() {
                    part[i] = Some(Part::Plus);
                    part[sv[i]] = Some(Part::Minus);
                }
                for &j in &adj[i] {
                    if seen.insert(j) {
                        queue.push_back(j);
                    }
                }
            }
        }
    }
    part.into_iter().map(|p| p.expect("every vertex assigned")).collect()
}

/// Positive arrows: of each pair {a, σa}, the one with both endpoints in
/// Q₀⁺ ∪ Q₀^σ; failing that the one with tail in Q₀⁺; failing that the one
/// declared first.
fn choose_positive_arrows(q: &Quiver, sa: &[usize], pv: &[Part]) -> Vec<Part> {
    let m = q.arrows().len();
    let score = |a: usize| {
        let (t, h) = (pv[q.tail(a)], pv[q.head(a)]);
        if t != Part::Minus && h != Part::Minus {
            0
        } else if t == Part::Plus {
            1
        } else {
            2
        }
    };
    (0..m)
        .map(|a| {
            let b = sa[a];
            if a == b {
                Part::Fixed
            } else if (score(a), a) < (score(b), b) {
                Part::Plus
            } else {
                Part::Minus
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(vs: &[u32], arrows: &[(&str, u32, u32)], vp: &[(u32, u32)], ap: &[(&str, &str)]) -> Result<SymmetricQuiver> {
        let q = Quiver::from_edges("t", vs, arrows)?;
        let ap: Vec<(String, String)> = ap.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        SymmetricQuiver::validate(q, vp, &ap)
    }

    #[test]
    fn a3_with_fixed_vertex() {
        let s = sq(&[1, 2, 3], &[("a1", 1, 2), ("a2", 2, 3)], &[(1, 3), (2, 2)], &[("a1", "a2")]).unwrap();
        assert_eq!(s.vertices_in(Part::Fixed), vec![1]);
        assert!(s.arrows_in(Part::Fixed).is_empty());
        assert_eq!(s.admissible_sinks(), vec![2]);
    }

    #[test]
    fn a4_with_fixed_arrow() {
        let s = sq(
            &[1, 2, 3, 4],
            &[("a1", 1, 2), ("a2", 2, 3), ("a3", 3, 4)],
            &[(1, 4), (2, 3)],
            &[("a1", "a3"), ("a2", "a2")],
        )
        .unwrap();
        assert_eq!(s.arrows_in(Part::Fixed), vec![1]);
        assert_eq!(s.delta(&[1, 2, 0, 0]), vec![0, 0, 2, 1]);
        assert_eq!(s.classify().unwrap().tag, SymTag::FiniteA(4));
    }

    #[test]
    fn a2_swap_needs_fixed_arrow() {
        let r = sq(&[1, 2], &[("a", 1, 2), ("b", 1, 2)], &[(1, 2)], &[("a", "b")]);
        assert!(matches!(r, Err(Error::PartitionViolation(_))));
        let s = sq(&[1, 2], &[("a", 1, 2)], &[(1, 2)], &[("a", "a")]).unwrap();
        assert!(s.admissible_sinks().is_empty());
    }

    #[test]
    fn kronecker_is_a201() {
        let s = sq(&[1, 2], &[("a", 1, 2), ("b", 1, 2)], &[(1, 2)], &[("a", "a"), ("b", "b")]).unwrap();
        let t = s.classify().unwrap();
        assert_eq!(t.tag, SymTag::A201(0, 0));
        assert_eq!(t.signature, Some((2, 0, 0, 0)));
        assert!(s.admissible_sinks().is_empty());
    }

    #[test]
    fn a4_internal_sink_normalizes() {
        // 1 -> 2 <- 3 -> 4 with the fixed arrow 3 -> 2
        let s = sq(
            &[1, 2, 3, 4],
            &[("a1", 1, 2), ("a2", 3, 2), ("a3", 3, 4)],
            &[(1, 4), (2, 3)],
            &[("a1", "a3"), ("a2", "a2")],
        )
        .unwrap();
        let (word, canon) = s.normalize_orientation().unwrap();
        assert_eq!(word, vec![(4, 1)]);
        assert_eq!(canon.classify().unwrap().tag, SymTag::FiniteA(4));
        let q = canon.quiver();
        let dirs: Vec<(u32, u32)> = q.arrows().iter().map(|a| (a.tail, a.head)).collect();
        assert_eq!(dirs, vec![(2, 1), (3, 2), (4, 3)]);
    }
}
