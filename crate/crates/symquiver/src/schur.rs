//! Partition combinatorics: Littlewood-Richardson coefficients, rectangle
//! products, invariants of classical groups in Schur modules, and a weight
//! space dimension count for symplectic and orthogonal semi-invariants built
//! from the Cauchy formulas.

use std::collections::{BTreeMap, HashMap};

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::families;
use crate::linalg::Q;
use crate::rep::Flavor;
use crate::symmetric::{Part, SymTag, SymmetricQuiver};

/// Weakly decreasing, trailing zeros trimmed.
pub type Partition = Vec<usize>;

pub fn trim(mut p: Partition) -> Partition {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn is_partition(p: &[usize]) -> bool {
    p.windows(2).all(|w| w[0] >= w[1])
}

pub fn size(p: &[usize]) -> usize {
    p.iter().sum()
}

pub fn conjugate(p: &[usize]) -> Partition {
    let w = p.first().copied().unwrap_or(0);
    (1..=w).map(|j| p.iter().filter(|&&r| r >= j).count()).collect()
}

/// All partitions of `n` with at most `max_len` parts, each at most `max_part`.
pub fn partitions(n: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
    fn go(n: usize, max_len: usize, max_part: usize, cur: &mut Partition, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        if max_len == 0 {
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            cur.push(p);
            go(n - p, max_len - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_len, max_part, &mut Vec::new(), &mut out);
    out
}

fn get(p: &[usize], i: usize) -> usize {
    p.get(i).copied().unwrap_or(0)
}

/// c^ν_{λμ}: column-strict fillings of ν/λ with content μ whose row reading
/// word (rows top to bottom, right to left) is a lattice word.
pub fn lr_coefficient(lambda: &[usize], mu: &[usize], nu: &[usize]) -> u64 {
    if size(lambda) + size(mu) != size(nu) || lambda.len() > nu.len() || (0..lambda.len()).any(|i| lambda[i] > nu[i]) {
        return 0;
    }
    let mut cells = Vec::new();
    for r in 0..nu.len() {
        for c in (get(lambda, r)..nu[r]).rev() {
            cells.push((r, c));
        }
    }
    let mut fill: HashMap<(usize, usize), usize> = HashMap::new();
    let mut count = vec![0usize; mu.len()];
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        lambda: &[usize],
        nu: &[usize],
        mu: &[usize],
        fill: &mut HashMap<(usize, usize), usize>,
        count: &mut Vec<usize>,
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let hi = if c + 1 < nu[r] { fill[&(r, c + 1)] } else { mu.len().saturating_sub(1) };
        let lo = if r > 0 && c >= get(lambda, r - 1) { fill[&(r - 1, c)] + 1 } else { 0 };
        let mut total = 0;
        for v in lo..=hi.min(mu.len().saturating_sub(1)) {
            if mu.is_empty() || count[v] >= mu[v] || (v > 0 && count[v] + 1 > count[v - 1]) {
                continue;
            }
            count[v] += 1;
            fill.insert((r, c), v);
            total += go(k + 1, cells, lambda, nu, mu, fill, count);
            fill.remove(&(r, c));
            count[v] -= 1;
        }
        total
    }
    if cells.is_empty() {
        return 1;
    }
    go(0, &cells, lambda, nu, mu, &mut fill, &mut count)
}

/// S_λ ⊗ S_μ = ⊕ c^ν_{λμ} S_ν, built letter by letter from horizontal strips;
/// terms with more than `max_len` rows are dropped.
pub fn lr_product(lambda: &[usize], mu: &[usize], max_len: usize) -> BTreeMap<Partition, u64> {
    // rows[r][v] = number of letters v in row r
    fn go(
        v: usize,
        shape: &Partition,
        rows: &mut Vec<Vec<usize>>,
        mu: &[usize],
        max_len: usize,
        out: &mut BTreeMap<Partition, u64>,
    ) {
        if v == mu.len() {
            // lattice check on the reading word
            let mut seen = vec![0usize; mu.len()];
            for row in rows.iter() {
                for w in (0..mu.len()).rev() {
                    for _ in 0..row[w] {
                        seen[w] += 1;
                        if w > 0 && seen[w] > seen[w - 1] {
                            return;
                        }
                    }
                }
            }
            *out.entry(trim(shape.clone())).or_insert(0) += 1;
            return;
        }
        let nrows = (shape.len() + 1).min(max_len);
        let mut add = vec![0usize; nrows];
        strips(v, 0, mu[v], shape, &mut add, rows, mu, max_len, out);
    }
    #[allow(clippy::too_many_arguments)]
    fn strips(
        v: usize,
        r: usize,
        left: usize,
        shape: &Partition,
        add: &mut Vec<usize>,
        rows: &mut Vec<Vec<usize>>,
        mu: &[usize],
        max_len: usize,
        out: &mut BTreeMap<Partition, u64>,
    ) {
        if r == add.len() {
            if left > 0 {
                return;
            }
            let mut ns = shape.clone();
            ns.resize(add.len(), 0);
            for (i, a) in add.iter().enumerate() {
                ns[i] += a;
                if rows.len() <= i {
                    rows.push(vec![0; mu.len()]);
                }
                rows[i][v] += a;
            }
            go(v + 1, &ns, rows, mu, max_len, out);
            for (i, a) in add.iter().enumerate() {
                rows[i][v] -= a;
            }
            return;
        }
        // letter v never sits above row v in an LR tableau
        let cap = if r < v {
            0
        } else if r == 0 {
            left
        } else {
            get(shape, r - 1) - get(shape, r)
        };
        for a in 0..=cap.min(left) {
            add[r] = a;
            strips(v, r + 1, left - a, shape, add, rows, mu, max_len, out);
        }
        add[r] = 0;
    }
    let mut out = BTreeMap::new();
    let shape = trim(lambda.to_vec());
    if shape.len() > max_len {
        return out;
    }
    let mut rows = vec![vec![0; mu.len()]; shape.len()];
    go(0, &shape, &mut rows, &trim(mu.to_vec()), max_len, &mut out);
    out
}

/// The constituents of S_{(l^s)} ⊗ S_{(m^t)}, each with multiplicity one.
pub fn rectangle_tensor(l: usize, s: usize, m: usize, t: usize) -> Vec<Partition> {
    if l == 0 || s == 0 {
        return vec![trim(vec![m; t])];
    }
    if m == 0 || t == 0 {
        return vec![trim(vec![l; s])];
    }
    let (l, s, m, t) = if s >= t { (l, s, m, t) } else { (m, t, l, s) };
    let mut out = Vec::new();
    let mut c = vec![0usize; t];
    fn go(i: usize, hi: usize, c: &mut Vec<usize>, l: usize, s: usize, m: usize, out: &mut Vec<Partition>) {
        let t = c.len();
        if i == t {
            if l + c[t - 1] < m {
                return;
            }
            let mut nu = Vec::with_capacity(s + t);
            nu.extend(c.iter().map(|ci| l + ci));
            nu.extend(std::iter::repeat_n(l, s - t));
            nu.extend((1..=t).map(|i| m - c[t - i]));
            out.push(trim(nu));
            return;
        }
        for v in 0..=hi {
            c[i] = v;
            go(i + 1, v, c, l, s, m, out);
        }
    }
    go(0, m, &mut c, l, s, m, &mut out);
    out.sort();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassicalGroup {
    SL(usize),
    O(usize),
    SO(usize),
    /// Sp of a symplectic space of the given (even) dimension.
    Sp(usize),
}

/// dim (S_λ V)^G, which is 0 or 1.
pub fn classical_invariant_dim(lambda: &[usize], g: ClassicalGroup) -> u64 {
    let lambda = trim(lambda.to_vec());
    let ok = match g {
        ClassicalGroup::SL(n) => lambda.is_empty() || lambda.len() == n && lambda.iter().all(|&p| p == lambda[0]),
        ClassicalGroup::O(n) => lambda.len() <= n && lambda.iter().all(|p| p % 2 == 0),
        ClassicalGroup::SO(n) => {
            lambda.len() <= n && {
                let padded: Vec<usize> = (0..n).map(|i| get(&lambda, i)).collect();
                padded.iter().all(|p| p % 2 == padded.first().map_or(0, |f| f % 2))
            }
        }
        ClassicalGroup::Sp(d) => d % 2 == 0 && lambda.len() <= d && conjugate(&lambda).iter().all(|p| p % 2 == 0),
    };
    ok as u64
}

/// dim of the semi-invariants of SL(n) in S_λ V ⊗ S_μ V for GL(n) weights λ, μ.
pub fn pair_semiinvariant_dim(lambda: &[i64], mu: &[i64], n: usize) -> u64 {
    if lambda.len() != n || mu.len() != n {
        return 0;
    }
    (0..n.saturating_sub(1)).all(|i| lambda[i] - lambda[i + 1] == mu[n - 2 - i] - mu[n - 1 - i]) as u64
}

/// Full expansion of a tensor product of polynomial Schur modules of GL(n).
fn expand(factors: &[Partition], n: usize) -> BTreeMap<Partition, u64> {
    let mut acc: BTreeMap<Partition, u64> = BTreeMap::new();
    acc.insert(vec![], 1);
    for f in factors {
        if f.len() > n {
            return BTreeMap::new();
        }
        let mut next = BTreeMap::new();
        for (p, c) in &acc {
            for (q, d) in lr_product(p, f, n) {
                *next.entry(q).or_insert(0) += c * d;
            }
        }
        acc = next;
    }
    acc
}

/// Multiplicity of det^m in ⊗ S_{λ_i}V ⊗ ⊗ S_{μ_j}V* for dim V = n. Dual
/// factors are turned into polynomial ones through the box complement
/// S_μ V* = det^{-μ_1} ⊗ S_{(μ_1-μ_n, …, μ_1-μ_1)} V.
pub fn gl_det_multiplicity(cov: &[Partition], dual: &[Partition], n: usize, m: i64) -> u64 {
    if n == 0 {
        return 1;
    }
    let mut factors: Vec<Partition> = cov.iter().map(|p| trim(p.clone())).collect();
    let mut shift = 0i64;
    for mu in dual {
        if mu.len() > n {
            return 0;
        }
        let top = get(mu, 0);
        shift += top as i64;
        factors.push(trim((0..n).map(|i| top - get(mu, n - 1 - i)).collect()));
    }
    let c = m + shift;
    if c < 0 {
        return 0;
    }
    let total: usize = factors.iter().map(|f| size(f)).sum();
    if total != n * c as usize {
        return 0;
    }
    let target = trim(vec![c as usize; n]);
    expand(&factors, n).get(&target).copied().unwrap_or(0)
}

/// dim (⊗ S_{λ_i}V)^G for G = Sp(V) or O(V).
pub fn fixed_invariant_dim(factors: &[Partition], g: ClassicalGroup) -> u64 {
    let n = match g {
        ClassicalGroup::SL(n) | ClassicalGroup::O(n) | ClassicalGroup::SO(n) | ClassicalGroup::Sp(n) => n,
    };
    expand(factors, n).iter().map(|(p, c)| c * classical_invariant_dim(p, g)).sum()
}

/// Tame instances whose weight spaces are supported, plus equioriented A_n.
fn supported(sq: &SymmetricQuiver) -> bool {
    let Ok(t) = sq.classify() else { return false };
    let smallest = match t.tag {
        SymTag::FiniteA(_) => t.tag,
        SymTag::A201(..) => SymTag::A201(0, 0),
        SymTag::A202(..) => SymTag::A202(2, 0),
        SymTag::A02(..) => SymTag::A02(2, 2),
        SymTag::A11(..) => SymTag::A11(0, 2),
        SymTag::A00(..) => SymTag::A00(2, 2),
        SymTag::D10(_) => SymTag::D10(3),
        SymTag::D01(_) => SymTag::D01(3),
    };
    t.tag == smallest && families::canonical(smallest).is_ok_and(|c| c.is_isomorphic(sq))
}

#[derive(Clone, Debug)]
struct Slot {
    /// (representative vertex, dualized) for each endpoint that carries a group
    ends: Vec<(usize, bool)>,
    max_len: usize,
    /// Some(flavor) for σ-fixed arrows: the Schur label is 2μ or (2μ)'
    fixed: Option<Flavor>,
}

/// dim SpSI(Q,β)_χ or OSI(Q,β)_χ, where χ is a symmetric weight: the group
/// SL(V_x) at x ∈ Q₀⁺ acts through det^{2χ(x)}, and Sp or O acts at σ-fixed
/// vertices.
pub fn weight_space_dim(sq: &SymmetricQuiver, flavor: Flavor, beta: &[i64], chi: &[Q]) -> Result<u64> {
    if !supported(sq) {
        return Err(Error::UnsupportedQuiver(sq.quiver().name.clone()));
    }
    if !sq.is_symmetric_dim(beta) {
        return Err(Error::AsymmetricDimension);
    }
    crate::rep::StructuredRep::check_dim(sq, flavor, &beta.to_vec())?;
    let n = sq.n();
    let mut m = vec![0i64; n];
    for x in 0..n {
        let s = &chi[x] + &chi[sq.sigma_v(x)];
        if !s.is_zero() {
            return Err(Error::AsymmetricWeight);
        }
        let twice = &chi[x] * Q::from_integer(2.into());
        if !twice.is_integer() {
            return Err(Error::AsymmetricWeight);
        }
        m[x] = twice.to_integer().to_i64().ok_or(Error::AsymmetricWeight)?;
    }
    let qv = sq.quiver();
    let rep = |v: usize| -> (usize, bool) {
        match sq.vpart(v) {
            Part::Minus => (sq.sigma_v(v), true),
            _ => (v, false),
        }
    };
    let mut slots = Vec::new();
    for a in 0..qv.arrows().len() {
        let (t, h) = (qv.tail(a), qv.head(a));
        match sq.apart(a) {
            Part::Minus => {}
            Part::Plus => {
                let (rt, dt) = rep(t);
                let (rh, dh) = rep(h);
                slots.push(Slot {
                    ends: vec![(rt, dt), (rh, !dh)],
                    max_len: beta[t].min(beta[h]) as usize,
                    fixed: None,
                });
            }
            Part::Fixed => {
                let (rt, dt) = rep(t);
                slots.push(Slot { ends: vec![(rt, dt)], max_len: beta[t] as usize, fixed: Some(flavor) });
            }
        }
    }
    // size constraints at SL vertices: Σ cov |λ| − Σ dual |λ| = β(x)·m(x)
    let plus = sq.vertices_in(Part::Plus);
    let max_chi = m.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0) as usize;
    let bound = beta.iter().map(|&b| b as usize).sum::<usize>() * max_chi.max(1) * n;
    let mut sizes = vec![None; slots.len()];
    let mut total = 0;
    size_dfs(0, &slots, &plus, beta, &m, bound, &mut sizes, &mut |sz| {
        total += count_for_sizes(sq, flavor, beta, &m, &slots, sz);
    });
    Ok(total)
}

fn vertex_balance(x: usize, slots: &[Slot], sizes: &[Option<usize>]) -> (i64, usize) {
    let mut bal = 0i64;
    let mut open = 0;
    for (s, sz) in slots.iter().zip(sizes) {
        for &(v, d) in &s.ends {
            if v == x {
                match sz {
                    Some(z) => bal += if d { -(*z as i64) } else { *z as i64 },
                    None => open += 1,
                }
            }
        }
    }
    (bal, open)
}

#[allow(clippy::too_many_arguments)]
fn size_dfs(
    i: usize,
    slots: &[Slot],
    plus: &[usize],
    beta: &[i64],
    m: &[i64],
    bound: usize,
    sizes: &mut Vec<Option<usize>>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if i == slots.len() {
        if plus.iter().all(|&x| vertex_balance(x, slots, sizes).0 == beta[x] * m[x] || beta[x] == 0) {
            let s: Vec<usize> = sizes.iter().map(|z| z.unwrap()).collect();
            emit(&s);
        }
        return;
    }
    // a slot whose size is forced by an SL vertex with no other open slot
    let mut forced = None;
    for &(x, d) in &slots[i].ends {
        if plus.contains(&x) && beta[x] > 0 {
            let (bal, open) = vertex_balance(x, slots, sizes);
            if open == 1 {
                let need = beta[x] * m[x] - bal;
                let need = if d { -need } else { need };
                if need < 0 {
                    return;
                }
                forced = Some(need as usize);
            }
        }
    }
    let range: Vec<usize> = match forced {
        Some(z) if z <= bound => vec![z],
        Some(_) => vec![],
        None => (0..=bound).collect(),
    };
    for z in range {
        if slots[i].max_len == 0 && z > 0 {
            continue;
        }
        if slots[i].fixed.is_some() && z % 2 == 1 {
            continue;
        }
        sizes[i] = Some(z);
        size_dfs(i + 1, slots, plus, beta, m, bound, sizes, emit);
    }
    sizes[i] = None;
}

fn count_for_sizes(sq: &SymmetricQuiver, flavor: Flavor, beta: &[i64], m: &[i64], slots: &[Slot], sizes: &[usize]) -> u64 {
    let choices: Vec<Vec<Partition>> = slots
        .iter()
        .zip(sizes)
        .map(|(s, &z)| match s.fixed {
            None => partitions(z, s.max_len, z),
            Some(Flavor::Symplectic) => partitions(z / 2, s.max_len, z).into_iter().map(|p| p.iter().map(|v| 2 * v).collect()).collect(),
            Some(Flavor::Orthogonal) => partitions(z / 2, z, s.max_len / 2)
                .into_iter()
                .map(|p| conjugate(&p.iter().map(|v| 2 * v).collect::<Vec<_>>()))
                .collect(),
        })
        .collect();
    // SL vertices without any arrow only admit the trivial character
    let bare = (0..sq.n()).any(|x| {
        sq.vpart(x) == Part::Plus && beta[x] > 0 && m[x] != 0 && slots.iter().all(|s| s.ends.iter().all(|e| e.0 != x))
    });
    if bare {
        return 0;
    }
    let mut pick = vec![vec![]; slots.len()];
    let mut cache = HashMap::new();
    pick_dfs(0, sq, flavor, beta, m, slots, &choices, &mut pick, &mut cache)
}

/// Vertices all of whose slots are among the first `upto` ones.
fn closed_at(x: usize, slots: &[Slot], upto: usize) -> bool {
    slots.iter().enumerate().all(|(j, s)| j < upto || s.ends.iter().all(|&(v, _)| v != x))
}

#[allow(clippy::too_many_arguments)]
fn pick_dfs(
    i: usize,
    sq: &SymmetricQuiver,
    flavor: Flavor,
    beta: &[i64],
    m: &[i64],
    slots: &[Slot],
    choices: &[Vec<Partition>],
    pick: &mut Vec<Partition>,
    cache: &mut HashMap<(usize, Vec<(Partition, bool)>), u64>,
) -> u64 {
    // product of the factors of vertices closed by slot i-1
    let mut factor = 1u64;
    if i > 0 {
        for &(x, _) in &slots[i - 1].ends {
            if closed_at(x, slots, i) && !closed_at(x, slots, i - 1) {
                factor *= vertex_factor(x, sq, flavor, beta, m, slots, pick, cache);
                if factor == 0 {
                    return 0;
                }
            }
        }
    }
    if i == slots.len() {
        return factor;
    }
    let mut total = 0;
    for p in &choices[i] {
        pick[i] = p.clone();
        total += pick_dfs(i + 1, sq, flavor, beta, m, slots, choices, pick, cache);
    }
    factor * total
}

#[allow(clippy::too_many_arguments)]
fn vertex_factor(
    x: usize,
    sq: &SymmetricQuiver,
    flavor: Flavor,
    beta: &[i64],
    m: &[i64],
    slots: &[Slot],
    pick: &[Partition],
    cache: &mut HashMap<(usize, Vec<(Partition, bool)>), u64>,
) -> u64 {
    let mut key = Vec::new();
    for (s, p) in slots.iter().zip(pick) {
        for &(v, d) in &s.ends {
            if v == x {
                key.push((p.clone(), d));
            }
        }
    }
    key.sort();
    if let Some(v) = cache.get(&(x, key.clone())) {
        return *v;
    }
    let n = beta[x] as usize;
    let val = if sq.vpart(x) == Part::Fixed {
        let g = match flavor {
            Flavor::Symplectic => ClassicalGroup::Sp(n),
            Flavor::Orthogonal => ClassicalGroup::O(n),
        };
        let fs: Vec<Partition> = key.iter().map(|(p, _)| p.clone()).collect();
        fixed_invariant_dim(&fs, g)
    } else {
        let cov: Vec<Partition> = key.iter().filter(|k| !k.1).map(|k| k.0.clone()).collect();
        let dual: Vec<Partition> = key.iter().filter(|k| k.1).map(|k| k.0.clone()).collect();
        gl_det_multiplicity(&cov, &dual, n, m[x])
    };
    cache.insert((x, key), val);
    val
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn hook_count(p: &[usize]) -> u128 {
        let conj = conjugate(p);
        let n = size(p);
        let mut num: u128 = (1..=n as u128).product();
        let mut den: u128 = 1;
        for (r, &row) in p.iter().enumerate() {
            for c in 0..row {
                den *= (row - c - 1 + conj[c] - r - 1 + 1) as u128;
            }
        }
        num /= den;
        num
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&[1], &[1], &[2]), 1);
        assert_eq!(lr_coefficient(&[1], &[1], &[1, 1]), 1);
        assert_eq!(lr_coefficient(&[1], &[1, 1], &[2, 1]), 1);
        assert_eq!(lr_coefficient(&[2, 1], &[], &[2, 1]), 1);
        assert_eq!(lr_coefficient(&[2, 1], &[2, 1], &[3, 2, 1]), 2);
    }

    #[test]
    fn product_agrees_with_direct_count_and_hooks() {
        let small: Vec<Partition> = (0..=4).flat_map(|n| partitions(n, 4, 4)).collect();
        for l in &small {
            for m in &small {
                let prod = lr_product(l, m, 10);
                let mut lhs: u128 = 0;
                for (nu, c) in &prod {
                    assert_eq!(*c, lr_coefficient(l, m, nu));
                    assert_eq!(*c, lr_coefficient(m, l, nu));
                    lhs += *c as u128 * hook_count(nu);
                }
                let (a, b) = (size(l) as u128, size(m) as u128);
                let binom: u128 = (1..=b).map(|i| a + i).product::<u128>() / (1..=b).product::<u128>();
                assert_eq!(lhs, binom * hook_count(l) * hook_count(m));
            }
        }
    }

    #[test]
    fn rectangles_are_multiplicity_free() {
        assert_eq!(rectangle_tensor(1, 1, 1, 1), vec![vec![1, 1], vec![2]]);
        for (l, s, m, t) in [(1, 2, 3, 1), (2, 2, 2, 2), (3, 1, 1, 3), (2, 3, 1, 2), (1, 1, 3, 1)] {
            let list = rectangle_tensor(l, s, m, t);
            let prod = lr_product(&vec![l; s], &vec![m; t], 20);
            assert_eq!(list, prod.keys().cloned().collect::<Vec<_>>());
            assert!(prod.values().all(|&c| c == 1));
            assert!(list.iter().all(|nu| nu.len() <= s + t));
        }
    }

    #[test]
    fn classical_invariants() {
        assert_eq!(classical_invariant_dim(&[2, 2, 2], ClassicalGroup::SL(3)), 1);
        assert_eq!(classical_invariant_dim(&[2, 2], ClassicalGroup::SL(3)), 0);
        assert_eq!(classical_invariant_dim(&[], ClassicalGroup::SL(3)), 1);
        assert_eq!(classical_invariant_dim(&[1, 1], ClassicalGroup::Sp(4)), 1);
        assert_eq!(classical_invariant_dim(&[1], ClassicalGroup::O(3)), 0);
        assert_eq!(classical_invariant_dim(&[2], ClassicalGroup::O(3)), 1);
        assert_eq!(classical_invariant_dim(&[1, 1, 1], ClassicalGroup::SO(3)), 1);
        assert_eq!(classical_invariant_dim(&[1, 1, 1], ClassicalGroup::O(3)), 0);
        assert_eq!(pair_semiinvariant_dim(&[1, 0], &[0, 0], 2), 0);
        assert_eq!(pair_semiinvariant_dim(&[2, 1], &[1, 0], 2), 1);
        assert_eq!(pair_semiinvariant_dim(&[3, 1, 0], &[0, -1, -3], 3), 1);
    }

    #[test]
    fn det_multiplicity_small() {
        // V ⊗ V* contains the trivial module once
        assert_eq!(gl_det_multiplicity(&[vec![1]], &[vec![1]], 3, 0), 1);
        // Λ^2 V for dim 2 is det
        assert_eq!(gl_det_multiplicity(&[vec![1, 1]], &[], 2, 1), 1);
        assert_eq!(gl_det_multiplicity(&[vec![1], vec![1]], &[], 2, 1), 1);
        assert_eq!(gl_det_multiplicity(&[vec![1, 1]], &[vec![1, 1]], 2, 0), 1);
    }

    #[test]
    fn oracle_single_fixed_arrow() {
        let sq = families::finite_a(2);
        for p in 1..=4 {
            for k in 0..=3 {
                let chi = vec![q(k), q(-k)];
                assert_eq!(weight_space_dim(&sq, Flavor::Symplectic, &[p, p], &chi).unwrap(), 1);
            }
        }
        let chi = vec![Q::new(1.into(), 2.into()), Q::new((-1).into(), 2.into())];
        assert_eq!(weight_space_dim(&sq, Flavor::Orthogonal, &[3, 3], &chi).unwrap(), 0);
        assert_eq!(weight_space_dim(&sq, Flavor::Orthogonal, &[2, 2], &chi).unwrap(), 1);
    }

    #[test]
    fn oracle_two_fixed_arrows() {
        let sq = families::a201(0, 0).unwrap();
        for p in 1..=3 {
            let chi = vec![q(1), q(-1)];
            assert_eq!(weight_space_dim(&sq, Flavor::Symplectic, &[p, p], &chi).unwrap(), p as u64 + 1);
        }
        assert!(weight_space_dim(&families::a201(2, 2).unwrap(), Flavor::Symplectic, &[1; 8], &vec![q(0); 8]).is_err());
    }
}
