//! Line-oriented text formats for quivers (with an optional σ section),
//! representations and plain matrices.
//!
//! ```text
//! quiver kronecker
//! vertex 1 2
//! arrow a 1 2
//! arrow b 1 2
//! sigma v 1 2
//! sigma a a a
//! sigma a b b
//! ```
//!
//! Serializing a parsed canonical document gives back the same bytes.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::linalg::{fmt_q, parse_q, RationalMatrix, Q};
use crate::quiver::{Arrow, Quiver};
use crate::rep::Representation;
use crate::symmetric::SymmetricQuiver;

#[derive(Clone, Debug)]
pub struct QuiverFile {
    pub quiver: Quiver,
    pub vpairs: Vec<(u32, u32)>,
    pub apairs: Vec<(String, String)>,
}

fn err(line: usize, msg: &str) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("");
        let toks: Vec<&str> = l.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn parse_id(line: usize, s: &str) -> Result<u32> {
    s.parse::<u32>().ok().filter(|&v| v > 0).ok_or_else(|| err(line, &format!("bad vertex id `{s}`")))
}

impl QuiverFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut name = None;
        let mut vertices = Vec::new();
        let mut arrows = Vec::new();
        let mut vpairs = Vec::new();
        let mut apairs = Vec::new();
        for (ln, t) in content_lines(text) {
            match (t[0], t.len()) {
                ("quiver", 2) if name.is_none() => name = Some(t[1].to_string()),
                ("vertex", _) => {
                    for s in &t[1..] {
                        vertices.push(parse_id(ln, s)?);
                    }
                }
                ("arrow", 4) => arrows.push(Arrow { name: t[1].to_string(), tail: parse_id(ln, t[2])?, head: parse_id(ln, t[3])? }),
                ("sigma", 4) if t[1] == "v" => vpairs.push((parse_id(ln, t[2])?, parse_id(ln, t[3])?)),
                ("sigma", 4) if t[1] == "a" => apairs.push((t[2].to_string(), t[3].to_string())),
                _ => return Err(err(ln, &format!("unexpected `{}`", t.join(" ")))),
            }
        }
        let name = name.ok_or_else(|| Error::Parse("missing `quiver <name>` line".into()))?;
        let quiver = Quiver::new(&name, &vertices, arrows)?;
        Ok(QuiverFile { quiver, vpairs, apairs })
    }

    pub fn from_symmetric(sq: &SymmetricQuiver) -> Self {
        let (vpairs, apairs) = sq.sigma_pairs();
        QuiverFile { quiver: sq.quiver().clone(), vpairs, apairs }
    }

    pub fn is_symmetric(&self) -> bool {
        !self.vpairs.is_empty() || !self.apairs.is_empty()
    }

    pub fn symmetric(&self) -> Result<SymmetricQuiver> {
        if !self.is_symmetric() {
            return Err(Error::Parse("quiver file has no sigma section".into()));
        }
        SymmetricQuiver::validate(self.quiver.clone(), &self.vpairs, &self.apairs)
    }

    pub fn serialize(&self) -> String {
        let qv = &self.quiver;
        let mut s = format!("quiver {}\n", qv.name);
        let ids: Vec<String> = qv.vertices().iter().map(|v| v.to_string()).collect();
        let _ = writeln!(s, "vertex {}", ids.join(" "));
        for a in qv.arrows() {
            let _ = writeln!(s, "arrow {} {} {}", a.name, a.tail, a.head);
        }
        for (i, j) in &self.vpairs {
            let _ = writeln!(s, "sigma v {i} {j}");
        }
        for (a, b) in &self.apairs {
            let _ = writeln!(s, "sigma a {a} {b}");
        }
        s
    }
}

#[derive(Clone, Debug)]
pub struct RepFile {
    pub quiver_name: String,
    pub rep: Representation,
}

fn parse_row(ln: usize, toks: &[&str], c: usize) -> Result<Vec<Q>> {
    if toks.len() != c {
        return Err(err(ln, &format!("expected {c} entries, found {}", toks.len())));
    }
    toks.iter().map(|t| parse_q(t).map_err(|_| err(ln, &format!("bad rational `{t}`")))).collect()
}

impl RepFile {
    pub fn parse(qv: &Quiver, text: &str) -> Result<Self> {
        let lines: Vec<(usize, Vec<&str>)> = content_lines(text).collect();
        let mut it = lines.into_iter();
        let quiver_name = match it.next() {
            Some((_, t)) if t[0] == "rep" && t.len() == 2 => t[1].to_string(),
            _ => return Err(Error::Parse("missing `rep <quiver-name>` line".into())),
        };
        let mut dim = vec![0i64; qv.n()];
        let mut mats: Vec<Option<RationalMatrix>> = vec![None; qv.arrows().len()];
        while let Some((ln, t)) = it.next() {
            match t[0] {
                "dim" => {
                    for kv in &t[1..] {
                        let (k, v) = kv.split_once('=').ok_or_else(|| err(ln, "expected vertex=n"))?;
                        let i = qv.try_idx(parse_id(ln, k)?).ok_or_else(|| err(ln, &format!("unknown vertex {k}")))?;
                        dim[i] = v.parse::<i64>().ok().filter(|&n| n >= 0).ok_or_else(|| err(ln, "bad dimension"))?;
                    }
                }
                "mat" if t.len() == 3 => {
                    let a = qv.arrow_idx(t[1]).ok_or_else(|| err(ln, &format!("unknown arrow {}", t[1])))?;
                    let (r, c) = t[2].split_once('x').ok_or_else(|| err(ln, "expected <r>x<c>"))?;
                    let (r, c): (usize, usize) =
                        (r.parse().map_err(|_| err(ln, "bad row count"))?, c.parse().map_err(|_| err(ln, "bad column count"))?);
                    let mut rows = Vec::with_capacity(r);
                    if c > 0 {
                        for _ in 0..r {
                            let (rl, rt) = it.next().ok_or_else(|| err(ln, "matrix ends early"))?;
                            rows.push(parse_row(rl, &rt, c)?);
                        }
                    }
                    let data: Vec<Q> = rows.into_iter().flatten().collect();
                    mats[a] = Some(RationalMatrix::from_vec(r, c, data));
                }
                _ => return Err(err(ln, &format!("unexpected `{}`", t.join(" ")))),
            }
        }
        let mats = mats
            .into_iter()
            .enumerate()
            .map(|(a, m)| m.unwrap_or_else(|| RationalMatrix::zeros(dim[qv.head(a)] as usize, dim[qv.tail(a)] as usize)))
            .collect();
        Ok(RepFile { quiver_name, rep: Representation::new(qv, dim, mats)? })
    }

    pub fn serialize(&self, qv: &Quiver) -> String {
        let mut s = format!("rep {}\n", self.quiver_name);
        let dims: Vec<String> = qv.vertices().iter().zip(&self.rep.dim).map(|(v, d)| format!("{v}={d}")).collect();
        let _ = writeln!(s, "dim {}", dims.join(" "));
        for (a, m) in qv.arrows().iter().zip(&self.rep.mats) {
            let _ = writeln!(s, "mat {} {}x{}", a.name, m.rows(), m.cols());
            if m.cols() > 0 {
                for r in 0..m.rows() {
                    let row: Vec<String> = m.row(r).iter().map(fmt_q).collect();
                    let _ = writeln!(s, "{}", row.join(" "));
                }
            }
        }
        s
    }
}

/// A whitespace-separated matrix, one row per line.
pub fn parse_matrix(text: &str) -> Result<RationalMatrix> {
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for (ln, t) in content_lines(text) {
        let c = rows.first().map_or(t.len(), |r| r.len());
        rows.push(parse_row(ln, &t, c)?);
    }
    Ok(RationalMatrix::from_rows(&rows))
}

pub fn serialize_matrix(m: &RationalMatrix) -> String {
    (0..m.rows()).map(|r| m.row(r).iter().map(fmt_q).collect::<Vec<_>>().join(" ") + "\n").collect()
}

/// `1,2,2,1` in vertex order.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    s.split(',').map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad integer `{t}`")))).collect()
}

pub fn parse_q_list(s: &str) -> Result<Vec<Q>> {
    s.split(',').map(|t| parse_q(t.trim())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn quiver_round_trip() {
        for sq in [families::finite_a(5), families::a202(2, 2).unwrap(), families::d10(4).unwrap()] {
            let text = QuiverFile::from_symmetric(&sq).serialize();
            let f = QuiverFile::parse(&text).unwrap();
            assert_eq!(f.serialize(), text);
            assert!(f.symmetric().unwrap().is_isomorphic(&sq));
        }
    }

    #[test]
    fn rep_round_trip_with_fractions() {
        let sq = families::a201(0, 0).unwrap();
        let qv = sq.quiver();
        let text = "rep kron\ndim 1=2 2=1\nmat a 1x2\n1/2 -3\nmat b 1x2\n0 7\n";
        let f = RepFile::parse(qv, text).unwrap();
        assert_eq!(f.serialize(qv), text);
    }

    #[test]
    fn comments_and_errors() {
        let f = QuiverFile::parse("# two vertices\nquiver q\nvertex 1 2\narrow a 1 2 # one arrow\n").unwrap();
        assert!(!f.is_symmetric());
        assert!(matches!(QuiverFile::parse("quiver q\nvertex 0\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_matrix("1 2\n3\n"), Err(Error::Parse(_))));
    }
}
