//! Semi-invariants of symmetric quivers: weights, the γ involution, Schofield
//! determinants c^V and their Pfaffian roots, pencil coefficients, and the
//! generating sets for equioriented A_n and the tame families.

use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{fmt_q, interpolate, parse_q, poly_divrem, poly_gcd, poly_trim, q, qf, RationalMatrix, Q};
use crate::presentation::{minimal_presentation, PathMatrix};
use crate::quiver::{Arrow, Dim, Path, Quiver};
use crate::rep::{dvw, interval_module, Flavor, Representation, StructuredRep};
use crate::symmetric::{Part, SymTag, SymmetricQuiver};
use crate::tame::{admissible_arcs, canonical_decomposition, require_canonical, rigid_module, Arc, CanonicalDecomposition};

pub type Weight = Vec<Q>;

/// ⟨α, ·⟩ with the σ-fixed coordinates set to zero.
pub fn weight_of_cv(sq: &SymmetricQuiver, alpha: &[i64]) -> Weight {
    let qv = sq.quiver();
    let n = qv.n();
    (0..n)
        .map(|v| {
            if sq.vpart(v) == Part::Fixed {
                Q::zero()
            } else {
                let mut e = vec![0; n];
                e[v] = 1;
                q(qv.euler(alpha, &e))
            }
        })
        .collect()
}

/// γχ(i) = −χ(σ(i)).
pub fn gamma(sq: &SymmetricQuiver, chi: &[Q]) -> Weight {
    (0..chi.len()).map(|i| -chi[sq.sigma_v(i)].clone()).collect()
}

/// The character of the structured group a weight defines: χ(x) − χ(σx)
/// for x ∈ Q₀⁺. Two weights act the same way exactly when these agree.
pub fn reduced_weight(sq: &SymmetricQuiver, chi: &[Q]) -> Vec<Q> {
    sq.vertices_in(Part::Plus).into_iter().map(|x| &chi[x] - &chi[sq.sigma_v(x)]).collect()
}

/// c^V(W) = det d^V_W in the canonical basis order.
pub fn evaluate_cv(sq: &SymmetricQuiver, v: &Representation, w: &StructuredRep) -> Result<Q> {
    evaluate_cv_full(sq.quiver(), v, &w.full(sq))
}

pub fn evaluate_cv_full(qv: &Quiver, v: &Representation, w: &Representation) -> Result<Q> {
    let e = qv.euler(&v.dim, &w.dim);
    if e != 0 {
        return Err(Error::NonOrthogonalDimensions(e));
    }
    dvw(qv, v, w)?.det()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenKind {
    Det,
    Pf,
    PencilDet(usize),
    PencilPf(usize),
}

impl GenKind {
    pub fn is_pf(self) -> bool {
        matches!(self, GenKind::Pf | GenKind::PencilPf(_))
    }

    fn parse(s: &str) -> Result<GenKind> {
        let coeff = |p: &str| -> Result<usize> {
            s.strip_prefix(p)
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|r| r.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad kind `{s}`")))
        };
        match s {
            "Det" => Ok(GenKind::Det),
            "Pf" => Ok(GenKind::Pf),
            _ if s.starts_with("PencilDetCoeff(") => Ok(GenKind::PencilDet(coeff("PencilDetCoeff(")?)),
            _ if s.starts_with("PencilPfCoeff(") => Ok(GenKind::PencilPf(coeff("PencilPfCoeff(")?)),
            _ => Err(Error::Parse(format!("bad kind `{s}`"))),
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenKind::Det => write!(f, "Det"),
            GenKind::Pf => write!(f, "Pf"),
            GenKind::PencilDet(i) => write!(f, "PencilDetCoeff({i})"),
            GenKind::PencilPf(i) => write!(f, "PencilPfCoeff({i})"),
        }
    }
}

/// det (or pf) of B + ψA, divided by a fixed factor that every point shares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pencil {
    pub a: PathMatrix,
    pub divisor: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorDescriptor {
    pub kind: GenKind,
    pub flavor: Flavor,
    pub weight: Weight,
    /// The presentation matrix; for pencils the ψ-free part B.
    pub template: PathMatrix,
    pub pencil: Option<Pencil>,
    pub provenance: String,
}

fn square_det(m: &RationalMatrix) -> Result<Q> {
    if !m.is_square() {
        return Err(Error::NotSquare(m.rows(), m.cols()));
    }
    m.det()
}

/// Coefficients (ψ⁰ first) of det(B + ψA) or pf(B + ψA) on W.
fn pencil_poly(sq: &SymmetricQuiver, flavor: Flavor, b: &PathMatrix, a: &PathMatrix, w: &Representation, pf: bool) -> Result<Vec<Q>> {
    let (mb, ma) = if pf {
        (b.paired_full(sq, flavor, w), a.paired_full(sq, flavor, w))
    } else {
        (b.evaluate(sq.quiver(), w), a.evaluate(sq.quiver(), w))
    };
    if (mb.rows(), mb.cols()) != (ma.rows(), ma.cols()) {
        return Err(Error::ShapeMismatch("pencil parts differ in shape".into()));
    }
    if !mb.is_square() {
        return Err(Error::NotSquare(mb.rows(), mb.cols()));
    }
    let size = mb.rows();
    if pf && size % 2 == 1 {
        return Ok(Vec::new());
    }
    let deg = if pf { size / 2 } else { size };
    let xs: Vec<Q> = (0..=deg as i64).map(q).collect();
    let ys = xs
        .iter()
        .map(|x| {
            let m = mb.add(&ma.scale(x));
            if pf {
                m.pfaffian()
            } else {
                m.det()
            }
        })
        .collect::<Result<Vec<Q>>>()?;
    Ok(interpolate(&xs, &ys))
}

/// Coefficients c_0, …, c_t of φ^{t−i}ψ^i in det(ψA + φB) (or its Pfaffian).
pub fn pencil_coefficients(sq: &SymmetricQuiver, a: &PathMatrix, b: &PathMatrix, w: &StructuredRep, pf: bool) -> Result<Vec<Q>> {
    pencil_poly(sq, w.flavor, b, a, &w.full(sq), pf)
}

impl GeneratorDescriptor {
    pub fn value(&self, sq: &SymmetricQuiver, w: &StructuredRep) -> Result<Q> {
        self.value_full(sq, &w.full(sq))
    }

    /// Evaluates on a full representation; Pfaffian kinds assume it carries
    /// the form of `self.flavor`.
    pub fn value_full(&self, sq: &SymmetricQuiver, w: &Representation) -> Result<Q> {
        let qv = sq.quiver();
        match self.kind {
            GenKind::Det => square_det(&self.template.evaluate(qv, w)),
            GenKind::Pf => self.template.paired_full(sq, self.flavor, w).pfaffian(),
            GenKind::PencilDet(i) | GenKind::PencilPf(i) => {
                let pen = self.pencil.as_ref().ok_or_else(|| Error::Parse("pencil kind without pencil".into()))?;
                let poly = pencil_poly(sq, self.flavor, &self.template, &pen.a, w, self.kind.is_pf())?;
                let (quot, _) = poly_divrem(&poly, &pen.divisor);
                Ok(quot.get(i).cloned().unwrap_or_else(Q::zero))
            }
        }
    }

    /// det of the paired matrix for Pfaffian kinds, so value² = companion.
    pub fn companion_det(&self, sq: &SymmetricQuiver, w: &StructuredRep) -> Result<Q> {
        match self.kind {
            GenKind::Pf => self.template.paired(sq, w).det(),
            _ => Err(Error::NotSkewSymmetric),
        }
    }

    pub fn to_json(&self, qv: &Quiver) -> Value {
        let weight: serde_json::Map<String, Value> =
            self.weight.iter().enumerate().map(|(i, x)| (qv.vertices()[i].to_string(), Value::String(fmt_q(x)))).collect();
        let pencil = match &self.pencil {
            None => Value::Null,
            Some(p) => json!({
                "a": template_json(qv, &p.a),
                "divisor": p.divisor.iter().map(fmt_q).collect::<Vec<_>>(),
            }),
        };
        json!({
            "flavor": self.flavor.name(),
            "kind": self.kind.to_string(),
            "pencil": pencil,
            "provenance": self.provenance,
            "template": template_json(qv, &self.template),
            "weight": weight,
        })
    }

    pub fn from_json(sq: &SymmetricQuiver, v: &Value) -> Result<Self> {
        let qv = sq.quiver();
        let bad = |what: &str| Error::Parse(format!("generator record: bad `{what}`"));
        let kind = GenKind::parse(v["kind"].as_str().ok_or_else(|| bad("kind"))?)?;
        let flavor = match v["flavor"].as_str() {
            Some("sp") => Flavor::Symplectic,
            Some("o") => Flavor::Orthogonal,
            _ => return Err(bad("flavor")),
        };
        let wmap = v["weight"].as_object().ok_or_else(|| bad("weight"))?;
        let mut weight = vec![Q::zero(); qv.n()];
        for (k, x) in wmap {
            let id: u32 = k.parse().map_err(|_| bad("weight"))?;
            let i = qv.try_idx(id).ok_or_else(|| bad("weight"))?;
            weight[i] = parse_q(x.as_str().ok_or_else(|| bad("weight"))?)?;
        }
        let template = template_from_json(qv, &v["template"])?;
        let pencil = match &v["pencil"] {
            Value::Null => None,
            p => Some(Pencil {
                a: template_from_json(qv, &p["a"])?,
                divisor: p["divisor"]
                    .as_array()
                    .ok_or_else(|| bad("divisor"))?
                    .iter()
                    .map(|c| parse_q(c.as_str().unwrap_or("")))
                    .collect::<Result<Vec<Q>>>()?,
            }),
        };
        let provenance = v["provenance"].as_str().unwrap_or("").to_string();
        Ok(GeneratorDescriptor { kind, flavor, weight, template, pencil, provenance })
    }
}

pub fn template_json(qv: &Quiver, t: &PathMatrix) -> Value {
    let ids = |v: &[usize]| v.iter().map(|&i| qv.vertices()[i]).collect::<Vec<u32>>();
    let entries: Vec<Vec<Vec<Value>>> = t
        .entries
        .iter()
        .map(|row| {
            row.iter()
                .map(|combo| combo.iter().map(|(k, p)| json!([fmt_q(k), qv.path_names(p)])).collect())
                .collect()
        })
        .collect();
    json!({ "cols": ids(&t.cols), "entries": entries, "rows": ids(&t.rows) })
}

pub fn template_from_json(qv: &Quiver, v: &Value) -> Result<PathMatrix> {
    let bad = || Error::Parse("generator record: bad template".into());
    let ids = |key: &str| -> Result<Vec<usize>> {
        v[key]
            .as_array()
            .ok_or_else(bad)?
            .iter()
            .map(|x| x.as_u64().and_then(|id| qv.try_idx(id as u32)).ok_or_else(bad))
            .collect()
    };
    let (rows, cols) = (ids("rows")?, ids("cols")?);
    let mut t = PathMatrix::zero(rows, cols);
    let entries = v["entries"].as_array().ok_or_else(bad)?;
    if entries.len() != t.rows.len() {
        return Err(bad());
    }
    for (r, row) in entries.iter().enumerate() {
        let row = row.as_array().ok_or_else(bad)?;
        if row.len() != t.cols.len() {
            return Err(bad());
        }
        for (c, combo) in row.iter().enumerate() {
            for term in combo.as_array().ok_or_else(bad)? {
                let coef = parse_q(term[0].as_str().ok_or_else(bad)?)?;
                let path: Path = term[1]
                    .as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|a| a.as_str().and_then(|s| qv.arrow_idx(s)).ok_or_else(bad))
                    .collect::<Result<_>>()?;
                t.push(r, c, coef, path);
            }
        }
    }
    t.validate(qv)?;
    Ok(t)
}

fn sample(sq: &SymmetricQuiver, flavor: Flavor, d: &Dim, seed: u64) -> StructuredRep {
    StructuredRep::random(sq, flavor, d.clone(), seed).expect("dimension vector already validated")
}

const PROBE_SEEDS: [u64; 3] = [9001, 9002, 9003];

/// Weight of det Hom(T, ·): columns minus rows per vertex, fixed vertices
/// zeroed, halved for Pfaffians.
pub fn template_weight(sq: &SymmetricQuiver, t: &PathMatrix, pf: bool) -> Weight {
    let c = t.column_minus_row(sq.n());
    let half = qf(1, 2);
    (0..sq.n())
        .map(|v| {
            if sq.vpart(v) == Part::Fixed {
                Q::zero()
            } else if pf {
                q(c[v]) * &half
            } else {
                q(c[v])
            }
        })
        .collect()
}

/// Hom(T, W) paired with the form is skew on `k` random structured points.
pub fn is_pfaffian_type(sq: &SymmetricQuiver, flavor: Flavor, d: &Dim, t: &PathMatrix, k: usize) -> Result<bool> {
    if t.rows.len() != t.cols.len() {
        return Err(Error::NotSquare(t.rows.len(), t.cols.len()));
    }
    StructuredRep::check_dim(sq, flavor, d)?;
    let Some(al) = t.align_rows(sq) else { return Ok(false) };
    Ok((0..k as u64).all(|s| al.paired(sq, &sample(sq, flavor, d, 500 + s)).is_skew()))
}

/// σ-symmetrized template whose Pfaffian squares to c^T, if there is one.
fn try_pfaffian(sq: &SymmetricQuiver, flavor: Flavor, d: &Dim, t: &PathMatrix) -> Option<PathMatrix> {
    let al = t.align_rows(sq)?;
    let s = al.skew_part(sq, flavor);
    if s.is_zero() {
        return None;
    }
    let mut ratio: Option<Q> = None;
    for &seed in &PROBE_SEEDS {
        let w = sample(sq, flavor, d, seed);
        let m = s.paired(sq, &w);
        if m.rows() % 2 == 1 {
            return None;
        }
        let pf = m.pfaffian().ok()?;
        let det = square_det(&t.evaluate_structured(sq, &w)).ok()?;
        match (pf.is_zero(), det.is_zero()) {
            (true, true) => continue,
            (false, false) => {
                let r = &pf * &pf / det;
                if ratio.as_ref().is_some_and(|x| *x != r) {
                    return None;
                }
                ratio = Some(r);
            }
            _ => return None,
        }
    }
    ratio.map(|_| s)
}

/// Turns a presentation matrix into a generator, preferring a Pfaffian.
/// None when the semi-invariant is constant or vanishes identically.
pub fn descriptor_from_template(
    sq: &SymmetricQuiver,
    flavor: Flavor,
    d: &Dim,
    t: &PathMatrix,
    provenance: &str,
) -> Option<GeneratorDescriptor> {
    let rows: i64 = t.rows.iter().map(|&y| d[y]).sum();
    let cols: i64 = t.cols.iter().map(|&x| d[x]).sum();
    if rows != cols || rows == 0 {
        return None;
    }
    let (kind, template) = match try_pfaffian(sq, flavor, d, t) {
        Some(s) => (GenKind::Pf, s),
        None => (GenKind::Det, t.clone()),
    };
    let g = GeneratorDescriptor {
        kind,
        flavor,
        weight: template_weight(sq, &template, kind.is_pf()),
        template,
        pencil: None,
        provenance: provenance.to_string(),
    };
    let nonzero = PROBE_SEEDS.iter().any(|&s| g.value(sq, &sample(sq, flavor, d, s)).map(|v| !v.is_zero()).unwrap_or(false));
    nonzero.then_some(g)
}

/// Generators for equioriented A_n: c^{V_{j,i}} with ⟨v_{j,i}, β⟩ = 0 on the
/// positive half, and the symmetric intervals V_{i, n−i} (Pfaffians where
/// the flavor allows them).
pub fn generators_finite(sq: &SymmetricQuiver, beta: &Dim, flavor: Flavor) -> Result<Vec<GeneratorDescriptor>> {
    let n = match sq.classify() {
        Ok(t) => match t.tag {
            SymTag::FiniteA(n) => n,
            _ => return Err(Error::NotFiniteType),
        },
        Err(_) => return Err(Error::NotFiniteType),
    };
    require_canonical(sq)?;
    StructuredRep::check_dim(sq, flavor, beta)?;
    let qv = sq.quiver();
    let half = n.div_ceil(2);
    let mut intervals: Vec<(usize, usize, &str)> = Vec::new();
    for j in 1..=n {
        for i in j..n {
            if i < half && beta[j - 1] == beta[i] {
                intervals.push((j, i, "interval"));
            }
        }
    }
    for i in 1..=n / 2 {
        intervals.push((i, n - i, "symmetric interval"));
    }
    let mut out = Vec::new();
    for (j, i, what) in intervals {
        let (_, v) = interval_module(n, j, i)?;
        let t = minimal_presentation(qv, &v)?;
        if let Some(g) = descriptor_from_template(sq, flavor, beta, &t, &format!("{what} V({j},{i})")) {
            out.push(g);
        }
    }
    Ok(out)
}

fn names_to_path(qv: &Quiver, names: &[String]) -> Path {
    names.iter().map(|s| qv.arrow_idx(s).unwrap_or_else(|| panic!("arrow {s} in canonical layout"))).collect()
}

fn seq(prefix: &str, k: usize) -> Vec<String> {
    (1..=k).map(|j| format!("{prefix}{j}")).collect()
}

fn mirror(v: &[String]) -> Vec<String> {
    v.iter().rev().map(|s| format!("s{s}")).collect()
}

fn cat(parts: &[&[String]]) -> Vec<String> {
    parts.iter().flat_map(|p| p.iter().cloned()).collect()
}

/// The pencil (B, A) of weight ⟨h, ·⟩ for a canonical tame family.
pub fn pencil_template(sq: &SymmetricQuiver, tag: SymTag) -> Result<(PathMatrix, PathMatrix)> {
    let qv = sq.quiver();
    let one = qv.idx(1);
    let s1 = sq.sigma_v(one);
    let single = |path: Vec<String>| -> PathMatrix {
        let p = names_to_path(qv, &path);
        let mut t = PathMatrix::zero(vec![s1], vec![one]);
        t.push(0, 0, Q::one(), p);
        t
    };
    let a_s = |s: &str| vec![s.to_string()];
    match tag {
        SymTag::A201(k, l) => {
            let (v, u) = (seq("v", l / 2), seq("u", k / 2));
            let abar = cat(&[&v, &a_s("a"), &mirror(&v)]);
            let bbar = cat(&[&u, &a_s("b"), &mirror(&u)]);
            Ok((single(bbar), single(abar)))
        }
        SymTag::A202(k, l) => {
            let (v, u) = (seq("v", l / 2), seq("u", k / 2));
            let abar = names_to_path(qv, &cat(&[&v, &a_s("a"), &mirror(&v)]));
            let c = names_to_path(qv, &u);
            let sc = names_to_path(qv, &mirror(&u));
            let y = qv.head(*c.last().expect("u-path is nonempty"));
            let sy = sq.sigma_v(y);
            let mut b = PathMatrix::zero(vec![s1, y], vec![one, sy]);
            b.push(0, 0, Q::one(), abar);
            b.push(0, 1, Q::one(), sc);
            b.push(1, 0, Q::one(), c);
            let mut a = PathMatrix::zero(vec![s1, y], vec![one, sy]);
            a.push(1, 1, Q::one(), names_to_path(qv, &a_s("b")));
            Ok((b, a))
        }
        SymTag::A02(k, l) => {
            let (v, u) = (seq("v", l / 2), seq("u", k / 2));
            Ok((single(cat(&[&u, &mirror(&u)])), single(cat(&[&v, &mirror(&v)]))))
        }
        SymTag::A11(k, l) => {
            let (v, u) = (seq("v", l / 2), seq("u", k / 2));
            Ok((single(cat(&[&u, &a_s("b"), &mirror(&u)])), single(cat(&[&v, &mirror(&v)]))))
        }
        SymTag::A00(k, _) => {
            let v = seq("v", k);
            Ok((single(mirror(&v)), single(v)))
        }
        SymTag::D10(n) | SymTag::D01(n) => {
            let c = seq("c", n - 3);
            let cbar = if matches!(tag, SymTag::D10(_)) {
                cat(&[&c, &a_s(&format!("c{}", n - 2)), &mirror(&c)])
            } else {
                cat(&[&c, &mirror(&c)])
            };
            let two = qv.idx(2);
            let s2 = sq.sigma_v(two);
            let path = |x: &str, y: &str| names_to_path(qv, &cat(&[&a_s(x), &cbar, &a_s(&format!("s{y}"))]));
            let mut b = PathMatrix::zero(vec![s1, s2], vec![one, two]);
            b.push(0, 0, Q::one(), path("a", "a"));
            b.push(0, 1, Q::one(), path("b", "a"));
            b.push(1, 0, Q::one(), path("a", "b"));
            let mut a = PathMatrix::zero(vec![s1, s2], vec![one, two]);
            a.push(1, 1, Q::one(), path("b", "b"));
            Ok((b, a))
        }
        SymTag::FiniteA(_) => Err(Error::NotTame),
    }
}

/// Coefficients of the pencil after removing the factor shared by all points.
pub fn pencil_descriptors(
    sq: &SymmetricQuiver,
    flavor: Flavor,
    d: &Dim,
    b: &PathMatrix,
    a: &PathMatrix,
    label: &str,
) -> Result<Vec<GeneratorDescriptor>> {
    let skew = |t: &PathMatrix| -> bool {
        t.align_rows(sq).is_some_and(|al| al == *t)
            && (0..8u64).all(|s| t.paired(sq, &sample(sq, flavor, d, 700 + s)).is_skew())
    };
    let pf = skew(b) && skew(a);
    let polys = PROBE_SEEDS
        .iter()
        .map(|&s| pencil_poly(sq, flavor, b, a, &sample(sq, flavor, d, s).full(sq), pf).map(poly_trim))
        .collect::<Result<Vec<_>>>()?;
    let mut divisor: Vec<Q> = Vec::new();
    for p in polys.iter().filter(|p| !p.is_empty()) {
        divisor = if divisor.is_empty() { poly_gcd(p, p) } else { poly_gcd(&divisor, p) };
    }
    if divisor.is_empty() {
        return Ok(Vec::new());
    }
    let reduced: Vec<Vec<Q>> = polys.iter().map(|p| poly_divrem(p, &divisor).0).collect();
    let top = reduced.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut out = Vec::new();
    for i in 0..top {
        if reduced.iter().all(|r| r.get(i).is_none_or(|c| c.is_zero())) {
            continue;
        }
        let kind = if pf { GenKind::PencilPf(i) } else { GenKind::PencilDet(i) };
        out.push(GeneratorDescriptor {
            kind,
            flavor,
            weight: template_weight(sq, b, pf),
            template: b.clone(),
            pencil: Some(Pencil { a: a.clone(), divisor: divisor.clone() }),
            provenance: format!("{label} c{i}"),
        });
    }
    Ok(out)
}

/// Keeps the first of any generators that agree up to a nonzero constant on
/// the probe points (a pencil coefficient can coincide with an arc).
fn drop_proportional(sq: &SymmetricQuiver, d: &Dim, flavor: Flavor, gens: Vec<GeneratorDescriptor>) -> Vec<GeneratorDescriptor> {
    let points: Vec<StructuredRep> = (0..4u64).map(|s| sample(sq, flavor, d, 800 + s)).collect();
    let values: Vec<Vec<Q>> = gens.iter().map(|g| points.iter().map(|w| g.value(sq, w).unwrap_or_else(|_| Q::zero())).collect()).collect();
    let proportional = |u: &[Q], v: &[Q]| {
        let mut ratio: Option<Q> = None;
        for (x, y) in u.iter().zip(v) {
            match (x.is_zero(), y.is_zero()) {
                (true, true) => {}
                (false, false) => {
                    let r = x / y;
                    if ratio.as_ref().is_some_and(|q| *q != r) {
                        return false;
                    }
                    ratio = Some(r);
                }
                _ => return false,
            }
        }
        ratio.is_some()
    };
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..gens.len() {
        if !keep.iter().any(|&j| reduced_weight(sq, &gens[j].weight) == reduced_weight(sq, &gens[i].weight) && proportional(&values[j], &values[i])) {
            keep.push(i);
        }
    }
    gens.into_iter().enumerate().filter(|(i, _)| keep.contains(i)).map(|(_, g)| g).collect()
}

fn full_circle(arcs: &[Arc], r: usize) -> bool {
    arcs.iter().any(|a| a.steps == r)
}

/// Generators for a regular symmetric d on a canonical tame quiver: the
/// pencil coefficients (p ≥ 1) and one c^E per admissible arc up to σ.
pub fn generators_tame(sq: &SymmetricQuiver, d: &Dim, flavor: Flavor) -> Result<Vec<GeneratorDescriptor>> {
    let tag = require_canonical(sq)?;
    if !tag.is_tame() {
        return Err(Error::NotTame);
    }
    match StructuredRep::check_dim(sq, flavor, d) {
        Err(Error::OddSymplecticDimension(_)) => return Ok(Vec::new()),
        other => other?,
    }
    let dec = canonical_decomposition(sq, d, Some(flavor))?;
    generators_from_canonical(sq, d, flavor, &dec)
}

pub fn generators_from_canonical(
    sq: &SymmetricQuiver,
    d: &Dim,
    flavor: Flavor,
    dec: &CanonicalDecomposition,
) -> Result<Vec<GeneratorDescriptor>> {
    let tag = dec.orbits.tag;
    let qv = sq.quiver();
    let mut out = Vec::new();
    let polys: Vec<(usize, Vec<Arc>)> = dec.effective_polygons().into_iter().map(|k| (k, admissible_arcs(&dec.polygons[k]))).collect();
    let circle = polys.iter().any(|(k, arcs)| full_circle(arcs, dec.polygons[*k].labels.len()));
    if dec.p >= 1 || circle {
        let (b, a) = pencil_template(sq, tag)?;
        out.extend(pencil_descriptors(sq, flavor, d, &b, &a, "pencil")?);
    }
    let orbits = &dec.orbits;
    let mut seen: Vec<(usize, usize, usize)> = Vec::new();
    for (k, arcs) in polys {
        let r = dec.polygons[k].labels.len();
        let o = &orbits.orbits[dec.polygons[k].orbit];
        for arc in arcs {
            if arc.steps == r {
                continue;
            }
            let j = arc.end(r);
            let (so, sj) = o.sigma[j];
            let (_, si) = o.sigma[arc.start];
            let image = (so, sj, arc.steps);
            let _ = si;
            if seen.contains(&(arc.orbit, arc.start, arc.steps)) || seen.contains(&image) {
                continue;
            }
            seen.push((arc.orbit, arc.start, arc.steps));
            let dim = arc.module_interval().dim(orbits);
            let seed = 40_000 + 97 * k as u64 + 13 * arc.start as u64 + arc.steps as u64;
            let e = rigid_module(qv, &dim, seed).ok_or_else(|| Error::UnsupportedSymmetricType("no rigid module found".into()))?;
            let t = minimal_presentation(qv, &e)?;
            let label = format!("arc {}[{},{}] index {}", o.name, arc.start + 1, j + 1, arc.ind);
            if let Some(g) = descriptor_from_template(sq, flavor, d, &t, &label) {
                out.push(g);
            }
        }
    }
    Ok(drop_proportional(sq, d, flavor, out))
}

/// Removes a vertex x ∈ Q₀⁺ whose only arrows are a: y → x and b: x → z
/// (or b: x → σx fixed), composing them; returns the contracted quiver, the
/// restricted dimension vector and the generators the contraction adjoins.
pub fn reduce_composition(
    sq: &SymmetricQuiver,
    alpha: &Dim,
    flavor: Flavor,
) -> Result<(SymmetricQuiver, Dim, Vec<GeneratorDescriptor>)> {
    let qv = sq.quiver();
    let m = qv.arrows().len();
    for x in sq.vertices_in(Part::Plus) {
        let inc: Vec<usize> = (0..m).filter(|&a| qv.tail(a) == x || qv.head(a) == x).collect();
        if inc.len() != 2 {
            continue;
        }
        let (Some(&a), Some(&b)) = (inc.iter().find(|&&a| qv.head(a) == x), inc.iter().find(|&&a| qv.tail(a) == x)) else {
            continue;
        };
        let y = qv.tail(a);
        let z = qv.head(b);
        if sq.vpart(y) == Part::Minus || qv.tail(a) == qv.head(a) {
            continue;
        }
        let fixed_b = sq.apart(b) == Part::Fixed;
        if !fixed_b && sq.vpart(z) == Part::Minus {
            continue;
        }
        let (ax, ay, az) = (alpha[x], alpha[y], alpha[z]);
        if ax < ay || (!fixed_b && ax < az) {
            continue;
        }
        let name = |i: usize| qv.arrows()[i].name.clone();
        let sx = sq.sigma_v(x);
        let (sa, sb) = (sq.sigma_a(a), sq.sigma_a(b));
        // New arrow list: the composite replaces a, σ(a)σ(b) replaces σ(a).
        let mut arrows: Vec<Arrow> = Vec::new();
        let mut apairs: Vec<(String, String)> = Vec::new();
        let comp_name = if fixed_b { format!("{}{}{}", name(sa), name(b), name(a)) } else { format!("{}{}", name(b), name(a)) };
        let scomp_name = if fixed_b { comp_name.clone() } else { format!("{}{}", name(sa), name(sb)) };
        let vid = |i: usize| qv.vertices()[i];
        for i in 0..m {
            if i == a {
                let head = if fixed_b { sq.sigma_v(y) } else { z };
                arrows.push(Arrow { name: comp_name.clone(), tail: vid(y), head: vid(head) });
            } else if i == sa && !fixed_b {
                arrows.push(Arrow { name: scomp_name.clone(), tail: vid(sq.sigma_v(z)), head: vid(sq.sigma_v(y)) });
            } else if i == b || i == sa || i == sb {
                continue;
            } else {
                arrows.push(qv.arrows()[i].clone());
            }
        }
        for i in 0..m {
            let j = sq.sigma_a(i);
            if i <= j && ![a, b, sa, sb].contains(&i) {
                apairs.push((name(i), name(j)));
            }
        }
        apairs.push((comp_name.clone(), scomp_name.clone()));
        let keep: Vec<usize> = (0..qv.n()).filter(|&v| v != x && v != sx).collect();
        let verts: Vec<u32> = keep.iter().map(|&v| vid(v)).collect();
        let vpairs: Vec<(u32, u32)> =
            keep.iter().filter(|&&v| v <= sq.sigma_v(v)).map(|&v| (vid(v), vid(sq.sigma_v(v)))).collect();
        let nq = Quiver::new(&format!("{}_c{}", qv.name, vid(x)), &verts, arrows)?;
        let nsq = SymmetricQuiver::validate(nq, &vpairs, &apairs)?;
        let nalpha: Dim = keep.iter().map(|&v| alpha[v]).collect();

        let mut gens: Vec<GeneratorDescriptor> = Vec::new();
        let mut push = |arrow: usize, what: &str| {
            let t = PathMatrix::single(qv, vec![arrow]);
            if let Some(g) = descriptor_from_template(sq, flavor, alpha, &t, what) {
                gens.push(g);
            }
        };
        if fixed_b {
            if ax > ay {
                if flavor == Flavor::Symplectic || ax % 2 == 0 {
                    push(b, "composition: fixed arrow");
                }
            } else {
                push(a, "composition: incoming arrow");
            }
        } else {
            if ax == ay {
                push(a, "composition: incoming arrow");
            }
            if ax == az {
                push(b, "composition: outgoing arrow");
            }
        }
        return Ok((nsq, nalpha, gens));
    }
    Err(Error::PatternNotFound)
}
