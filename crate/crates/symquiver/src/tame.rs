//! Regular dimension vectors of tame symmetric quivers: τ-orbits of the
//! non-homogeneous simple regular roots, labelled polygons, admissible arcs,
//! and generic decompositions (plain, symplectic, orthogonal).
//!
//! Indices are 0-based internally and printed 1-based. Index 0 holds e₁, a
//! δ-fixed root when the orbit has one; e_{i+1} = τ⁺e_i.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::families;
use crate::linalg::{q, RationalMatrix, Q};
use crate::quiver::{Dim, Quiver};
use crate::reflection::{coxeter_dim, Direction};
use crate::rep::{dvw_and_homext, Flavor, Representation};
use crate::symmetric::{Part, SymTag, SymmetricQuiver};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrbitName {
    Delta,
    DeltaPrime,
    DeltaSecond,
}

impl OrbitName {
    fn primes(self) -> &'static str {
        match self {
            OrbitName::Delta => "",
            OrbitName::DeltaPrime => "'",
            OrbitName::DeltaSecond => "''",
        }
    }
}

impl fmt::Display for OrbitName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ{}", self.primes())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub name: OrbitName,
    pub elems: Vec<Dim>,
    /// σ_I: index i of this orbit ↦ (orbit, index) with e_{σ(i)} = δe_i.
    pub sigma: Vec<(usize, usize)>,
    /// I₊ / I_δ / I₋ membership per index.
    pub part: Vec<Part>,
}

impl Orbit {
    pub fn rank(&self) -> usize {
        self.elems.len()
    }

    pub fn label(&self, i: usize) -> String {
        format!("e{}{}", self.name.primes(), i + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauOrbits {
    pub tag: SymTag,
    pub h: Dim,
    pub orbits: Vec<Orbit>,
}

impl TauOrbits {
    pub fn get(&self, name: OrbitName) -> Option<&Orbit> {
        self.orbits.iter().find(|o| o.name == name)
    }
}

/// Checks that `sq` is literally the canonical layout of its family.
pub fn require_canonical(sq: &SymmetricQuiver) -> Result<SymTag> {
    let tag = sq.classify()?.tag;
    let canon = families::canonical(tag)?;
    let (a, b) = (sq.quiver(), canon.quiver());
    let same = a.vertices() == b.vertices()
        && a.arrows() == b.arrows()
        && (0..a.n()).all(|i| sq.sigma_v(i) == canon.sigma_v(i))
        && (0..a.arrows().len()).all(|i| sq.sigma_a(i) == canon.sigma_a(i));
    if !same {
        return Err(Error::UnsupportedSymmetricType(format!(
            "{tag}: expected the canonical layout of the family (see `families`)"
        )));
    }
    Ok(tag)
}

fn unit(n: usize, i: usize) -> Dim {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

/// All raw τ⁺-orbits of real regular roots strictly below h whose sum is h.
fn raw_orbits(qv: &Quiver, h: &Dim) -> Vec<Vec<Dim>> {
    let n = qv.n();
    let mut cands = Vec::new();
    let mut e = vec![0i64; n];
    loop {
        let mut i = 0;
        while i < n {
            if e[i] < h[i] {
                e[i] += 1;
                break;
            }
            e[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        if &e != h && qv.tits(&e) == 1 && qv.euler(h, &e) == 0 {
            cands.push(e.clone());
        }
    }
    let mut seen: Vec<Dim> = Vec::new();
    let mut out = Vec::new();
    for c in &cands {
        if seen.contains(c) {
            continue;
        }
        let mut orb = vec![c.clone()];
        loop {
            let nx = coxeter_dim(qv, orb.last().unwrap(), Direction::Plus);
            if &nx == c || orb.len() > n {
                break;
            }
            orb.push(nx);
        }
        seen.extend(orb.iter().cloned());
        let sum: Dim = (0..n).map(|i| orb.iter().map(|o| o[i]).sum()).collect();
        if &sum == h && orb.len() >= 2 {
            out.push(orb);
        }
    }
    out
}

fn rotate_to(orb: &[Dim], start: &Dim) -> Vec<Dim> {
    let k = orb.iter().position(|e| e == start).expect("start lies in the orbit");
    (0..orb.len()).map(|i| orb[(k + i) % orb.len()].clone()).collect()
}

/// τ⁺-orbits of the non-homogeneous tubes, named and indexed.
pub fn tau_orbits(sq: &SymmetricQuiver) -> Result<TauOrbits> {
    let tag = require_canonical(sq)?;
    if !tag.is_tame() {
        return Err(Error::NotTame);
    }
    let qv = sq.quiver();
    let n = qv.n();
    let h = qv.null_root()?;
    let raw = raw_orbits(qv, &h);
    let contains_unit = |o: &Vec<Dim>, v: usize| o.contains(&unit(n, v));
    let heads_of = |prefix: char| -> Vec<usize> {
        (0..qv.arrows().len())
            .filter(|&a| {
                let name = &qv.arrows()[a].name;
                name.starts_with(prefix) && name[1..].chars().all(|c| c.is_ascii_digit()) && name.len() > 1
            })
            .map(|a| qv.head(a))
            .collect()
    };

    let mut named: Vec<(OrbitName, Vec<Dim>)> = Vec::new();
    let mut rest = raw.clone();
    let mut take = |name: OrbitName, pred: &dyn Fn(&Vec<Dim>) -> bool, named: &mut Vec<(OrbitName, Vec<Dim>)>| {
        if named.iter().any(|(nm, _)| *nm == name) {
            return;
        }
        if let Some(k) = rest.iter().position(pred) {
            named.push((name, rest.remove(k)));
        }
    };
    match tag {
        SymTag::D10(_) | SymTag::D01(_) => {
            let z1 = qv.idx(3);
            take(OrbitName::Delta, &|o| contains_unit(o, z1), &mut named);
            take(OrbitName::DeltaPrime, &|o| o.iter().all(|e| sq.delta(e) == *e), &mut named);
            take(OrbitName::DeltaSecond, &|_| true, &mut named);
        }
        _ => {
            let vs = heads_of('v');
            let us = heads_of('u');
            take(OrbitName::Delta, &|o| vs.iter().any(|&v| contains_unit(o, v)), &mut named);
            if tag_is_a00(tag) {
                take(OrbitName::DeltaPrime, &|_| true, &mut named);
            } else {
                take(OrbitName::DeltaPrime, &|o| us.iter().any(|&v| contains_unit(o, v)), &mut named);
            }
        }
    }
    // Leftovers: larger rank first, then the orbit holding a δ-fixed root.
    rest.sort_by_key(|o| (std::cmp::Reverse(o.len()), !o.iter().any(|e| sq.delta(e) == *e), o.iter().min().cloned()));
    for o in rest {
        let free = [OrbitName::Delta, OrbitName::DeltaPrime, OrbitName::DeltaSecond]
            .into_iter()
            .find(|nm| !named.iter().any(|(x, _)| x == nm))
            .expect("at most three non-homogeneous tubes");
        named.push((free, o));
    }
    named.sort_by_key(|(nm, _)| *nm);

    let mut orbits: Vec<Orbit> = Vec::new();
    if tag_is_a00(tag) {
        // Δ′ = δΔ with e′_i = δe_{−i}.
        let (_, d0) = &named[0];
        let start = d0.iter().max().unwrap().clone();
        let elems = rotate_to(d0, &start);
        let r = elems.len();
        let prime: Vec<Dim> = (0..r).map(|i| sq.delta(&elems[(r - i) % r])).collect();
        orbits.push(Orbit {
            name: OrbitName::Delta,
            sigma: (0..r).map(|i| (1, (r - i) % r)).collect(),
            part: vec![Part::Plus; r],
            elems,
        });
        orbits.push(Orbit {
            name: OrbitName::DeltaPrime,
            sigma: (0..r).map(|i| (0, (r - i) % r)).collect(),
            part: vec![Part::Minus; r],
            elems: prime,
        });
    } else {
        for (name, raw_o) in &named {
            let r = raw_o.len();
            let fixed: Vec<&Dim> = raw_o.iter().filter(|e| sq.delta(e) == **e).collect();
            let (start, c) = if let Some(s) = fixed.iter().max() {
                ((*s).clone(), 2usize)
            } else {
                let s = raw_o
                    .iter()
                    .filter(|e| sq.delta(e) == coxeter_dim(qv, e, Direction::Plus))
                    .max()
                    .ok_or_else(|| Error::UnsupportedSymmetricType("orbit not closed under δ".into()))?;
                (s.clone(), 3usize)
            };
            let elems = rotate_to(raw_o, &start);
            // 1-based σ(i) = c − i, so 0-based σ(i0) = c − 2 − i0 (mod r).
            let sig: Vec<usize> = (0..r).map(|i| (c + 2 * r - 2 - i) % r).collect();
            let part = (0..r)
                .map(|i| {
                    let s = sig[i];
                    if s == i {
                        Part::Fixed
                    } else if i >= 1 && (i + 1) < (r + c) - (i + 1) {
                        // 1-based i+1 lies in the contiguous run starting at 2
                        Part::Plus
                    } else {
                        Part::Minus
                    }
                })
                .collect();
            let idx = orbits.len();
            orbits.push(Orbit { name: *name, sigma: sig.iter().map(|&s| (idx, s)).collect(), part, elems });
        }
    }
    for (oi, o) in orbits.iter().enumerate() {
        let r = o.rank();
        for i in 0..r {
            if coxeter_dim(qv, &o.elems[i], Direction::Plus) != o.elems[(i + 1) % r] {
                return Err(Error::UnsupportedSymmetricType(format!("{} is not a τ⁺-orbit", o.name)));
            }
            let (so, si) = o.sigma[i];
            if orbits[so].elems[si] != sq.delta(&o.elems[i]) {
                return Err(Error::UnsupportedSymmetricType(format!("σ_I mismatch in orbit {oi}")));
            }
        }
    }
    Ok(TauOrbits { tag, h, orbits })
}

fn tag_is_a00(tag: SymTag) -> bool {
    matches!(tag, SymTag::A00(..))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelledPolygon {
    pub orbit: usize,
    pub labels: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalDecomposition {
    pub orbits: TauOrbits,
    pub p: i64,
    pub polygons: Vec<LabelledPolygon>,
}

impl CanonicalDecomposition {
    /// Σ_i p_i e_i of one polygon (the polygon's share of d − ph).
    pub fn polygon_part(&self, k: usize) -> Dim {
        let lp = &self.polygons[k];
        let o = &self.orbits.orbits[lp.orbit];
        let n = self.orbits.h.len();
        (0..n).map(|x| (0..o.rank()).map(|i| lp.labels[i] * o.elems[i][x]).sum()).collect()
    }

    pub fn total(&self) -> Dim {
        let mut d: Dim = self.orbits.h.iter().map(|x| x * self.p).collect();
        for k in 0..self.polygons.len() {
            for (a, b) in d.iter_mut().zip(self.polygon_part(k)) {
                *a += b;
            }
        }
        d
    }

    /// The polygons that carry independent labels (for Ã^{0,0} only Δ).
    pub fn effective_polygons(&self) -> Vec<usize> {
        if tag_is_a00(self.orbits.tag) {
            vec![0]
        } else {
            (0..self.polygons.len()).collect()
        }
    }
}

/// d = ph + Σ p_i e_i with at least one zero label per polygon.
pub fn canonical_decomposition(sq: &SymmetricQuiver, d: &Dim, flavor: Option<Flavor>) -> Result<CanonicalDecomposition> {
    let orbits = tau_orbits(sq)?;
    let qv = sq.quiver();
    if d.len() != qv.n() || d.iter().any(|&x| x < 0) {
        return Err(Error::ShapeMismatch("dimension vector".into()));
    }
    if !sq.is_symmetric_dim(d) {
        return Err(Error::NotSymmetric);
    }
    if qv.defect(d)? != 0 {
        return Err(Error::NotRegular);
    }
    let n = qv.n();
    // Unknowns: p, then x_{t,i} for i ≥ 1 of every orbit (x_{t,0} = 0).
    let mut cols: Vec<Vec<Q>> = vec![orbits.h.iter().map(|&x| q(x)).collect()];
    let mut index = Vec::new();
    for (t, o) in orbits.orbits.iter().enumerate() {
        for i in 1..o.rank() {
            cols.push(o.elems[i].iter().map(|&x| q(x)).collect());
            index.push((t, i));
        }
    }
    let a = RationalMatrix::from_cols(n, &cols);
    let b: Vec<Q> = d.iter().map(|&x| q(x)).collect();
    let sol = a.solve(&b).ok_or(Error::NotRegular)?;
    if sol.iter().any(|x| !x.is_integer()) {
        return Err(Error::NotRegular);
    }
    let int = |x: &Q| -> i64 { x.to_integer().try_into().expect("small label") };
    let mut p = int(&sol[0]);
    let mut polygons: Vec<LabelledPolygon> =
        orbits.orbits.iter().enumerate().map(|(t, o)| LabelledPolygon { orbit: t, labels: vec![0; o.rank()] }).collect();
    for (k, &(t, i)) in index.iter().enumerate() {
        polygons[t].labels[i] = int(&sol[k + 1]);
    }
    for lp in polygons.iter_mut() {
        let m = *lp.labels.iter().min().unwrap_or(&0);
        for x in lp.labels.iter_mut() {
            *x -= m;
        }
        p += m;
    }
    if p < 0 {
        return Err(Error::NotRegular);
    }
    let dec = CanonicalDecomposition { orbits, p, polygons };
    debug_assert_eq!(&dec.total(), d);
    if dec.total() != *d {
        return Err(Error::NotRegular);
    }
    if flavor == Some(Flavor::Symplectic) {
        for x in sq.vertices_in(Part::Fixed) {
            if d[x] % 2 != 0 {
                return Err(Error::OddSymplecticDimension(qv.vertices()[x]));
            }
        }
        for lp in &dec.polygons {
            let o = &dec.orbits.orbits[lp.orbit];
            for i in 0..o.rank() {
                let odd_at_fixed = sq.vertices_in(Part::Fixed).iter().any(|&x| o.elems[i][x] % 2 != 0);
                if o.part[i] == Part::Fixed && odd_at_fixed && lp.labels[i] % 2 != 0 {
                    return Err(Error::ParityViolation(format!("label of {} must be even", o.label(i))));
                }
            }
        }
    }
    Ok(dec)
}

/// Interval of a polygon: `len` consecutive indices from `start` (cyclic).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub orbit: usize,
    pub start: usize,
    pub len: usize,
}

impl Interval {
    pub fn indices(&self, r: usize) -> Vec<usize> {
        (0..self.len).map(|k| (self.start + k) % r).collect()
    }

    pub fn end(&self, r: usize) -> usize {
        (self.start + self.len + r - 1) % r
    }

    pub fn dim(&self, orbits: &TauOrbits) -> Dim {
        let o = &orbits.orbits[self.orbit];
        let mut d = vec![0; orbits.h.len()];
        for i in self.indices(o.rank()) {
            for (a, b) in d.iter_mut().zip(&o.elems[i]) {
                *a += b;
            }
        }
        d
    }

    /// σ-image: indices mapped by σ_I, order reversed.
    pub fn sigma(&self, orbits: &TauOrbits) -> Interval {
        let o = &orbits.orbits[self.orbit];
        let r = o.rank();
        let (so, s_end) = o.sigma[self.end(r)];
        Interval { orbit: so, start: s_end, len: self.len }
    }

    pub fn is_symmetric(&self, orbits: &TauOrbits) -> bool {
        self.sigma(orbits) == *self
    }

    pub fn display(&self, orbits: &TauOrbits) -> String {
        let o = &orbits.orbits[self.orbit];
        let r = o.rank();
        format!("{}[{},{}]", o.name, self.start + 1, self.end(r) + 1)
    }
}

/// Admissible arc: endpoints with equal label below every interior label.
/// The arc [i, j] (indices i, i+1, …, j) indexes the module with composition
/// factors e_i, …, e_{j−1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub orbit: usize,
    pub start: usize,
    /// Number of steps from i to j; equals the rank for a full circle.
    pub steps: usize,
    pub ind: i64,
    pub q: i64,
}

impl Arc {
    pub fn end(&self, r: usize) -> usize {
        (self.start + self.steps) % r
    }

    /// Composition factors e_i, …, e_{j−1}.
    pub fn module_interval(&self) -> Interval {
        Interval { orbit: self.orbit, start: self.start, len: self.steps }
    }

    pub fn contains(&self, other: &Arc, r: usize) -> bool {
        if self.orbit != other.orbit || other.steps > self.steps {
            return false;
        }
        let off = (other.start + r - self.start) % r;
        off + other.steps <= self.steps && !(off == 0 && other.steps == self.steps)
    }
}

pub fn admissible_arcs(lp: &LabelledPolygon) -> Vec<Arc> {
    let r = lp.labels.len();
    let mut arcs = Vec::new();
    for i in 0..r {
        for steps in 1..=r {
            let j = (i + steps) % r;
            if lp.labels[i] != lp.labels[j] {
                continue;
            }
            if (1..steps).all(|k| lp.labels[(i + k) % r] > lp.labels[i]) {
                arcs.push(Arc { orbit: lp.orbit, start: i, steps, ind: lp.labels[i], q: 0 });
            }
        }
    }
    let snapshot = arcs.clone();
    for a in arcs.iter_mut() {
        let parent = snapshot.iter().filter(|b| b.contains(a, r)).map(|b| b.ind).max();
        a.q = a.ind - parent.unwrap_or(0);
    }
    arcs
}

/// Maximal cyclic intervals of indices with label ≥ level, one list per
/// level 1..=max label.
pub fn runs(lp: &LabelledPolygon) -> Vec<(i64, Interval)> {
    let r = lp.labels.len();
    let top = *lp.labels.iter().max().unwrap_or(&0);
    let mut out = Vec::new();
    for level in 1..=top {
        let on: Vec<bool> = lp.labels.iter().map(|&p| p >= level).collect();
        if on.iter().all(|&b| b) {
            continue;
        }
        for s in 0..r {
            if on[s] && !on[(s + r - 1) % r] {
                let mut len = 0;
                while on[(s + len) % r] {
                    len += 1;
                }
                out.push((level, Interval { orbit: lp.orbit, start: s, len }));
            }
        }
    }
    out
}

/// Runs with their multiplicities (number of levels producing them).
pub fn runs_with_multiplicity(lp: &LabelledPolygon) -> Vec<(Interval, i64)> {
    let mut m: BTreeMap<Interval, i64> = BTreeMap::new();
    for (_, iv) in runs(lp) {
        *m.entry(iv).or_default() += 1;
    }
    m.into_iter().collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Plain,
    Symplectic,
    Orthogonal,
}

impl Mode {
    pub fn parse(s: &str) -> Result<Mode> {
        match s {
            "plain" => Ok(Mode::Plain),
            "sp" => Ok(Mode::Symplectic),
            "o" => Ok(Mode::Orthogonal),
            _ => Err(Error::Parse(format!("unknown mode `{s}`"))),
        }
    }

    pub fn flavor(self) -> Option<Flavor> {
        match self {
            Mode::Plain => None,
            Mode::Symplectic => Some(Flavor::Symplectic),
            Mode::Orthogonal => Some(Flavor::Orthogonal),
        }
    }
}

/// Building block of a summand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Piece {
    Homogeneous,
    Run(Interval),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub dim: Dim,
    pub mult: usize,
    pub label: String,
    /// One realization of a single copy: direct sum of these pieces.
    pub pieces: Vec<Piece>,
    /// Whether the pieces glue into one structured indecomposable.
    pub merged: bool,
}

impl Summand {
    pub fn display(&self) -> String {
        if self.mult == 1 {
            return self.label.clone();
        }
        if wrapped(&self.label) {
            format!("{}^⊕{}", self.label, self.mult)
        } else {
            format!("({})^⊕{}", self.label, self.mult)
        }
    }
}

fn wrapped(s: &str) -> bool {
    if !(s.starts_with('(') && s.ends_with(')')) {
        return false;
    }
    let mut depth = 0;
    for (k, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 && k != s.len() - 1 {
                    return false;
                }
            }
            _ => {}
        }
    }
    true
}

fn run_label(orbits: &TauOrbits, iv: &Interval) -> String {
    let o = &orbits.orbits[iv.orbit];
    let r = o.rank();
    if iv.is_symmetric(orbits) {
        let idx = iv.indices(r);
        let mut terms: Vec<String> = Vec::new();
        let mut plus: Vec<usize> = idx.iter().copied().filter(|&i| o.part[i] == Part::Plus).collect();
        plus.sort_unstable();
        for i in plus {
            terms.push(format!("({}+δ{})", o.label(i), o.label(i)));
        }
        let mut fixed: Vec<usize> = idx.iter().copied().filter(|&i| o.part[i] == Part::Fixed).collect();
        fixed.sort_unstable();
        for i in fixed {
            terms.push(o.label(i));
        }
        if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            format!("({})", terms.join("+"))
        }
    } else {
        // label the member of the pair lying in I₊ (Δ for Ã^{0,0})
        let rep = if iv.indices(r).iter().all(|&i| o.part[i] == Part::Plus) { *iv } else { iv.sigma(orbits) };
        let o = &orbits.orbits[rep.orbit];
        let mut idx = rep.indices(o.rank());
        idx.sort_unstable();
        let names: Vec<String> = idx.iter().map(|&i| o.label(i)).collect();
        if names.len() == 1 {
            format!("({}+δ{})", names[0], names[0])
        } else {
            let s = names.join("+");
            format!("({s}+δ({s}))")
        }
    }
}

fn sort_key(orbits: &TauOrbits, iv: &Interval) -> (usize, usize, std::cmp::Reverse<usize>) {
    let o = &orbits.orbits[iv.orbit];
    let r = o.rank();
    let s = iv.sigma(orbits);
    let min = iv.indices(r).into_iter().chain(s.indices(orbits.orbits[s.orbit].rank())).min().unwrap();
    (iv.orbit.min(s.orbit), min, std::cmp::Reverse(iv.len))
}

/// The place (σ_I-fixed index or edge) at the centre of a symmetric run.
fn centre(orbits: &TauOrbits, iv: &Interval) -> Vec<usize> {
    let o = &orbits.orbits[iv.orbit];
    let idx = iv.indices(o.rank());
    let l = idx.len();
    if l % 2 == 1 {
        vec![idx[l / 2]]
    } else {
        vec![idx[l / 2 - 1], idx[l / 2]]
    }
}

/// Whether symmetric runs through `place` must be paired in the given mode.
fn pairing_trigger(sq: &SymmetricQuiver, dec: &CanonicalDecomposition, k: usize, place: &[usize], mode: Mode) -> bool {
    let o = &dec.orbits.orbits[dec.polygons[k].orbit];
    let n = sq.n();
    let e: Dim = (0..n).map(|x| place.iter().map(|&i| o.elems[i][x]).sum()).collect();
    match mode {
        Mode::Plain => false,
        Mode::Symplectic => sq.vertices_in(Part::Fixed).iter().any(|&x| e[x] % 2 != 0),
        Mode::Orthogonal => {
            let dbar = dec.polygon_part(k);
            let qv = sq.quiver();
            sq.arrows_in(Part::Fixed).iter().any(|&a| e[qv.tail(a)] != 0 && dbar[qv.tail(a)] % 2 == 0)
        }
    }
}

/// Generic decomposition of a regular symmetric d. Summands are listed in a
/// fixed order; multiplicities merge equal summands.
pub fn generic_decomposition(sq: &SymmetricQuiver, d: &Dim, mode: Mode) -> Result<Vec<Summand>> {
    let dec = canonical_decomposition(sq, d, mode.flavor())?;
    Ok(generic_from_canonical(sq, &dec, mode))
}

pub fn generic_from_canonical(sq: &SymmetricQuiver, dec: &CanonicalDecomposition, mode: Mode) -> Vec<Summand> {
    let orbits = &dec.orbits;
    let mut items: Vec<((usize, usize, std::cmp::Reverse<usize>), Summand)> = Vec::new();
    let mut leftovers: Vec<(Interval, (usize, usize, std::cmp::Reverse<usize>))> = Vec::new();
    let mut merged_items: Vec<((usize, usize, std::cmp::Reverse<usize>), Summand)> = Vec::new();
    for k in dec.effective_polygons() {
        let lp = &dec.polygons[k];
        let all = runs(lp);
        // Non-symmetric runs: one summand per σ-pair.
        for (_, iv) in &all {
            if iv.is_symmetric(orbits) {
                continue;
            }
            let s = iv.sigma(orbits);
            if s.orbit == iv.orbit && s < *iv {
                continue;
            }
            let mut dim = iv.dim(orbits);
            for (a, b) in dim.iter_mut().zip(s.dim(orbits)) {
                *a += b;
            }
            let label = run_label(orbits, iv);
            items.push((
                sort_key(orbits, iv),
                Summand { dim, mult: 1, label, pieces: vec![Piece::Run(*iv), Piece::Run(s)], merged: false },
            ));
        }
        // Symmetric runs grouped by centre, outermost first.
        let mut chains: BTreeMap<Vec<usize>, Vec<Interval>> = BTreeMap::new();
        for (_, iv) in &all {
            if iv.is_symmetric(orbits) {
                chains.entry(centre(orbits, iv)).or_default().push(*iv);
            }
        }
        for (place, mut chain) in chains {
            chain.sort_by_key(|iv| std::cmp::Reverse(iv.len));
            if !pairing_trigger(sq, dec, k, &place, mode) {
                for iv in chain {
                    items.push((
                        sort_key(orbits, &iv),
                        Summand {
                            dim: iv.dim(orbits),
                            mult: 1,
                            label: run_label(orbits, &iv),
                            pieces: vec![Piece::Run(iv)],
                            merged: false,
                        },
                    ));
                }
                continue;
            }
            let mut it = chain.chunks(2);
            for pair in it.by_ref() {
                if pair.len() == 1 {
                    leftovers.push((pair[0], sort_key(orbits, &pair[0])));
                    continue;
                }
                let (outer, inner) = (pair[0], pair[1]);
                let o = &orbits.orbits[outer.orbit];
                let r = o.rank();
                // [i₂, σ(i₁)] and its σ-image [i₁, σ(i₂)]
                let off = (inner.start + r - outer.start) % r;
                let a = Interval { orbit: outer.orbit, start: inner.start, len: outer.len - off };
                let sa = a.sigma(orbits);
                let mut dim = outer.dim(orbits);
                for (x, y) in dim.iter_mut().zip(inner.dim(orbits)) {
                    *x += y;
                }
                let label = if outer == inner {
                    format!("2{}", run_label(orbits, &outer))
                } else {
                    format!("({}+{})", run_label(orbits, &outer), run_label(orbits, &inner))
                };
                merged_items.push((
                    sort_key(orbits, &outer),
                    Summand { dim, mult: 1, label, pieces: vec![Piece::Run(a), Piece::Run(sa)], merged: true },
                ));
            }
        }
    }
    let mut p = dec.p as usize;
    for (iv, key) in leftovers {
        if p % 2 == 1 {
            p -= 1;
            let mut dim = iv.dim(orbits);
            for (x, y) in dim.iter_mut().zip(&orbits.h) {
                *x += y;
            }
            merged_items.push((
                key,
                Summand {
                    dim,
                    mult: 1,
                    label: format!("(h+{})", run_label(orbits, &iv)),
                    pieces: vec![Piece::Homogeneous, Piece::Run(iv)],
                    merged: true,
                },
            ));
        } else {
            items.push((
                key,
                Summand { dim: iv.dim(orbits), mult: 1, label: run_label(orbits, &iv), pieces: vec![Piece::Run(iv)], merged: false },
            ));
        }
    }
    items.sort_by_key(|a| a.0);
    merged_items.sort_by_key(|a| a.0);
    let mut out: Vec<Summand> = Vec::new();
    if p > 0 {
        out.push(Summand { dim: orbits.h.clone(), mult: p, label: "h".into(), pieces: vec![Piece::Homogeneous], merged: false });
    }
    for (_, s) in items.into_iter().chain(merged_items) {
        if let Some(prev) = out.iter_mut().find(|x| x.label == s.label && x.pieces == s.pieces) {
            prev.mult += 1;
        } else {
            out.push(s);
        }
    }
    out
}

pub fn display_decomposition(summands: &[Summand]) -> String {
    summands.iter().map(|s| s.display()).collect::<Vec<_>>().join(" ⊕ ")
}

/// A generic representation of a real root: retried over seeds until it is
/// a brick without self-extensions.
pub fn rigid_module(qv: &Quiver, dim: &Dim, seed: u64) -> Option<Representation> {
    (0..32).map(|k| Representation::random(qv, dim.clone(), seed.wrapping_mul(7919).wrapping_add(k))).find(|v| {
        let he = dvw_and_homext(qv, v, v).expect("square d^V_V");
        he.hom_dim == 1 && he.ext_dim == 0
    })
}

/// Representation of dimension h in a homogeneous tube: a brick with one
/// self-extension and no maps to or from the quasi-simples of the
/// exceptional tubes.
pub fn homogeneous_module(qv: &Quiver, orbits: &TauOrbits, seed: u64) -> Option<Representation> {
    let simples: Vec<Representation> = orbits
        .orbits
        .iter()
        .flat_map(|o| o.elems.iter())
        .enumerate()
        .map(|(k, e)| rigid_module(qv, e, seed ^ (0x9e37 + k as u64)))
        .collect::<Option<_>>()?;
    (0..64).map(|k| Representation::random(qv, orbits.h.clone(), seed.wrapping_mul(104_729).wrapping_add(k))).find(|v| {
        let he = dvw_and_homext(qv, v, v).expect("square d^V_V");
        he.hom_dim == 1
            && he.ext_dim == 1
            && simples.iter().all(|e| {
                dvw_and_homext(qv, e, v).map(|x| x.hom_dim == 0).unwrap_or(false)
                    && dvw_and_homext(qv, v, e).map(|x| x.hom_dim == 0).unwrap_or(false)
            })
    })
}

/// Realizes one copy of a summand as a representation of the underlying quiver.
pub fn realize_summand(sq: &SymmetricQuiver, orbits: &TauOrbits, s: &Summand, seed: u64) -> Option<Representation> {
    let qv = sq.quiver();
    let mut acc: Option<Representation> = None;
    for (k, piece) in s.pieces.iter().enumerate() {
        let m = match piece {
            Piece::Homogeneous => homogeneous_module(qv, orbits, seed + k as u64)?,
            Piece::Run(iv) => rigid_module(qv, &iv.dim(orbits), seed + 31 * k as u64)?,
        };
        acc = Some(match acc {
            None => m,
            Some(a) => a.direct_sum(&m),
        });
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn esempio() -> (SymmetricQuiver, Dim) {
        let sq = families::a11(0, 6).unwrap();
        let o = tau_orbits(&sq).unwrap();
        let delta = &o.orbits[0];
        let labels = [2, 3, 0, 2, 0, 3];
        let n = sq.n();
        let mut d: Dim = o.h.iter().map(|x| 2 * x).collect();
        for x in 0..n {
            for (i, l) in labels.iter().enumerate() {
                d[x] += l * delta.elems[i][x];
            }
        }
        (sq, d)
    }

    fn as_set(s: &str) -> Vec<String> {
        let mut v: Vec<String> = s.split(" ⊕ ").map(String::from).collect();
        v.sort();
        v
    }

    #[test]
    fn orbit_names_and_sizes() {
        let sq = families::d10(4).unwrap();
        let o = tau_orbits(&sq).unwrap();
        let ranks: Vec<(OrbitName, usize)> = o.orbits.iter().map(|x| (x.name, x.rank())).collect();
        assert_eq!(ranks, vec![(OrbitName::Delta, 5), (OrbitName::DeltaPrime, 2), (OrbitName::DeltaSecond, 2)]);
        let dp = o.get(OrbitName::DeltaPrime).unwrap();
        assert!(dp.part.iter().all(|&p| p == Part::Fixed));
        let ds = o.get(OrbitName::DeltaSecond).unwrap();
        assert_eq!(ds.sigma, vec![(2, 1), (2, 0)]);
        let a00 = tau_orbits(&families::a00(4).unwrap()).unwrap();
        assert_eq!(a00.orbits.len(), 2);
    }

    #[test]
    fn esempio_labels_and_decompositions() {
        let (sq, d) = esempio();
        let dec = canonical_decomposition(&sq, &d, None).unwrap();
        assert_eq!(dec.p, 2);
        assert_eq!(dec.polygons[0].labels, vec![2, 3, 0, 2, 0, 3]);
        let plain = generic_from_canonical(&sq, &dec, Mode::Plain);
        let body: Vec<Summand> = plain.into_iter().filter(|s| s.label != "h").collect();
        assert_eq!(
            as_set(&display_decomposition(&body)),
            as_set("((e2+δe2)+e1)^⊕2 ⊕ (e2+δe2) ⊕ (e4)^⊕2")
        );
        let sp: Vec<Summand> = generic_from_canonical(&sq, &dec, Mode::Symplectic).into_iter().filter(|s| s.label != "h").collect();
        assert_eq!(as_set(&display_decomposition(&sp)), as_set("((e2+δe2)+e1)^⊕2 ⊕ (e2+δe2) ⊕ 2e4"));
        let o: Vec<Summand> = generic_from_canonical(&sq, &dec, Mode::Orthogonal).into_iter().filter(|s| s.label != "h").collect();
        assert_eq!(as_set(&display_decomposition(&o)), as_set("(e4)^⊕2 ⊕ (e2+δe2) ⊕ 2((e2+δe2)+e1)"));
    }

    #[test]
    fn zero_labels_give_edges() {
        let lp = LabelledPolygon { orbit: 0, labels: vec![0; 4] };
        let arcs = admissible_arcs(&lp);
        assert_eq!(arcs.len(), 4);
        assert!(arcs.iter().all(|a| a.steps == 1 && a.q == 0));
    }

    #[test]
    fn arcs_flank_single_label() {
        let lp = LabelledPolygon { orbit: 0, labels: vec![0, 0, 2, 0] };
        let arcs = admissible_arcs(&lp);
        let spans: Vec<(usize, usize)> = arcs.iter().map(|a| (a.start, a.steps)).collect();
        assert_eq!(spans, vec![(0, 1), (1, 2), (3, 1)]);
    }

    #[test]
    fn decomposition_sums_to_d() {
        for sq in [families::a201(2, 2).unwrap(), families::d01(4).unwrap(), families::a00(2).unwrap()] {
            let h = sq.quiver().null_root().unwrap();
            let o = tau_orbits(&sq).unwrap();
            let mut d: Dim = h.clone();
            let e = &o.orbits[0].elems;
            for x in 0..d.len() {
                d[x] += e[1][x] + sq.delta(&e[1])[x];
            }
            for mode in [Mode::Plain, Mode::Orthogonal] {
                let s = generic_decomposition(&sq, &d, mode).unwrap();
                let mut tot = vec![0; d.len()];
                for x in &s {
                    for (a, b) in tot.iter_mut().zip(&x.dim) {
                        *a += b * x.mult as i64;
                    }
                }
                assert_eq!(tot, d);
            }
        }
    }
}
