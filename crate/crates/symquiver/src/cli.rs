//! Command-line front end. `run` parses argv, writes results to `out` and
//! diagnostics to `err`, and returns the process exit code: 0 on success,
//! 2 for parse or validation errors, 3 for unsupported types, 4 for violated
//! preconditions.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::io::{parse_int_list, parse_matrix, parse_q_list, QuiverFile, RepFile};
use crate::linalg::fmt_q;
use crate::quiver::Dim;
use crate::reflection::{reflect_dim, reflect_pair_dim, reflect_pair_structured, reflect_rep, Direction};
use crate::rep::{check_structured, Flavor, GroupElement, StructuredRep};
use crate::schur::{lr_coefficient, weight_space_dim};
use crate::semiinv::{gamma, generators_finite, generators_tame, weight_of_cv, GeneratorDescriptor};
use crate::symmetric::{SymTag, SymmetricQuiver};
use crate::tame::{admissible_arcs, canonical_decomposition, display_decomposition, generic_decomposition, Mode};

#[derive(Parser, Debug)]
#[command(name = "symquiver", version, about = "Symmetric quivers: decompositions and semi-invariants")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FlavorArg {
    Sp,
    O,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Flavor {
        match f {
            FlavorArg::Sp => Flavor::Symplectic,
            FlavorArg::O => Flavor::Orthogonal,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Symmetric type tag, or the Dynkin/Euclidean class without σ.
    Classify {
        #[arg(short = 'q', long)]
        quiver: PathBuf,
    },
    /// ⟨α, β⟩.
    Euler {
        #[arg(short = 'q', long)]
        quiver: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
    /// Reflect at a sink or source (at the pair {x, σx} when σ is present).
    Reflect {
        #[arg(short = 'q', long)]
        quiver: PathBuf,
        #[arg(long)]
        at: u32,
        #[arg(long)]
        dim: Option<String>,
        #[arg(long)]
        rep: Option<PathBuf>,
        #[arg(long, value_enum)]
        flavor: Option<FlavorArg>,
        /// Write <prefix>.qv and <prefix>.rep instead of printing.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generic decomposition of a regular dimension vector.
    Decompose {
        #[arg(short = 'q', long)]
        quiver: PathBuf,
        #[arg(long)]
        dim: String,
        #[arg(long, default_value = "plain")]
        mode: String,
    },
    /// Labelled τ-orbit polygons and their admissible arcs.
    Arcs {
        #[arg(short = 'q', long)]
        quiver: PathBuf,
        #[arg(long)]
        dim: String,
        #[arg(long, value_enum)]
        flavor: Option<FlavorArg>,
    },
    /// Generators of SpSI or OSI.
    Generators {
        #[arg(short = 'q', long)]
        quiver: PathBuf,
        #[arg(long)]
        dim: String,
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        #[arg(long)]
        json_lines: bool,
        /// Test each generator on k random points and k group elements.
        #[arg(long, value_name = "K")]
        check_invariance: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate the generators of a `generators --json-lines` file.
    Evaluate {
        #[arg(short = 'q', long)]
        quiver: PathBuf,
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        gen_file: PathBuf,
    },
    /// Weight of c^V for dim V = α and its image under γ.
    Weights {
        #[arg(short = 'q', long)]
        quiver: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Littlewood–Richardson coefficient c^ν_{λμ}.
    Lr {
        #[arg(long, default_value = "")]
        lambda: String,
        #[arg(long, default_value = "")]
        mu: String,
        #[arg(long, default_value = "")]
        nu: String,
    },
    /// dim of a weight space of semi-invariants, computed by the Schur oracle.
    OracleDim {
        #[arg(short = 'q', long)]
        quiver: PathBuf,
        #[arg(long)]
        dim: String,
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Pfaffian of a skew-symmetric matrix file.
    Pfaffian {
        #[arg(long)]
        matrix: PathBuf,
    },
}

pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(cli.cmd, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load_quiver(path: &Path) -> Result<QuiverFile> {
    QuiverFile::parse(&read(path)?)
}

fn load_symmetric(path: &Path) -> Result<SymmetricQuiver> {
    load_quiver(path)?.symmetric()
}

fn dim_arg(sq_n: usize, s: &str) -> Result<Dim> {
    let d = parse_int_list(s)?;
    if d.len() != sq_n || d.iter().any(|&x| x < 0) {
        return Err(Error::DomainMismatch(format!("`{s}` is not a dimension vector on {sq_n} vertices")));
    }
    Ok(d)
}

fn partition_arg(s: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part `{t}`")))).collect()
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn fmt_weight(w: &[crate::linalg::Q]) -> String {
    w.iter().map(fmt_q).collect::<Vec<_>>().join(",")
}

fn io_err(e: std::io::Error) -> Error {
    Error::Parse(format!("write failed: {e}"))
}

fn generators_for(sq: &SymmetricQuiver, d: &Dim, flavor: Flavor) -> Result<Vec<GeneratorDescriptor>> {
    match sq.classify()?.tag {
        SymTag::FiniteA(_) => generators_finite(sq, d, flavor),
        _ => generators_tame(sq, d, flavor),
    }
}

fn dispatch(cmd: Cmd, out: &mut dyn Write) -> Result<()> {
    match cmd {
        Cmd::Classify { quiver } => {
            let f = load_quiver(&quiver)?;
            if f.is_symmetric() {
                let t = f.symmetric()?.classify()?;
                writeln!(out, "{}", t.tag).map_err(io_err)?;
                if let Some((s, t, k, l)) = t.signature {
                    writeln!(out, "signature s={s} t={t} k={k} l={l}").map_err(io_err)?;
                }
            } else {
                f.quiver.topological_order()?;
                writeln!(out, "{:?}", f.quiver.classify()).map_err(io_err)?;
            }
        }
        Cmd::Euler { quiver, alpha, beta } => {
            let qv = load_quiver(&quiver)?.quiver;
            let (a, b) = (dim_arg(qv.n(), &alpha)?, dim_arg(qv.n(), &beta)?);
            writeln!(out, "{}", qv.euler_form(&a, &b)?).map_err(io_err)?;
        }
        Cmd::Reflect { quiver, at, dim, rep, flavor, out: prefix } => {
            let f = load_quiver(&quiver)?;
            let qv = &f.quiver;
            let x = qv.try_idx(at).ok_or_else(|| Error::DomainMismatch(format!("no vertex {at}")))?;
            let (qtext, dtext, rtext) = if f.is_symmetric() {
                let sq = f.symmetric()?;
                let sq1 = sq.reflect_pair(x)?;
                let dtext = dim.map(|s| reflect_pair_dim(&sq, x, &dim_arg(qv.n(), &s)?)).transpose()?;
                let rtext = match rep {
                    None => None,
                    Some(p) => {
                        let flavor: Flavor = flavor.ok_or_else(|| Error::Parse("--rep on a symmetric quiver needs --flavor".into()))?.into();
                        let r = RepFile::parse(qv, &read(&p)?)?;
                        check_structured(&sq, flavor, &r.rep)?;
                        let w = StructuredRep::from_full(&sq, flavor, &r.rep);
                        let (sq2, w1) = reflect_pair_structured(&sq, x, &w)?;
                        let rf = RepFile { quiver_name: sq2.quiver().name.clone(), rep: w1.full(&sq2) };
                        Some(rf.serialize(sq2.quiver()))
                    }
                };
                (QuiverFile::from_symmetric(&sq1).serialize(), dtext, rtext)
            } else {
                let q1 = reflect_dim(qv, x, &vec![0; qv.n()])?.1;
                let dtext = dim.map(|s| reflect_dim(qv, x, &dim_arg(qv.n(), &s)?).map(|r| r.0)).transpose()?;
                let rtext = match rep {
                    None => None,
                    Some(p) => {
                        let r = RepFile::parse(qv, &read(&p)?)?;
                        let dir = if qv.is_sink(x) { Direction::Plus } else { Direction::Minus };
                        let (q2, r1) = reflect_rep(qv, x, dir, &r.rep)?;
                        Some(RepFile { quiver_name: q2.name.clone(), rep: r1 }.serialize(&q2))
                    }
                };
                let qf = QuiverFile { quiver: q1, vpairs: Vec::new(), apairs: Vec::new() };
                (qf.serialize(), dtext, rtext)
            };
            match prefix {
                Some(pfx) => {
                    let write = |ext: &str, text: &str| {
                        std::fs::write(pfx.with_extension(ext), text).map_err(|e| Error::Parse(format!("{}: {e}", pfx.display())))
                    };
                    write("qv", &qtext)?;
                    if let Some(r) = &rtext {
                        write("rep", r)?;
                    }
                    if let Some(d) = &dtext {
                        writeln!(out, "dim {}", join(d)).map_err(io_err)?;
                    }
                }
                None => {
                    write!(out, "{qtext}").map_err(io_err)?;
                    if let Some(d) = &dtext {
                        writeln!(out, "# dim {}", join(d)).map_err(io_err)?;
                    }
                    if let Some(r) = &rtext {
                        write!(out, "{r}").map_err(io_err)?;
                    }
                }
            }
        }
        Cmd::Decompose { quiver, dim, mode } => {
            let sq = load_symmetric(&quiver)?;
            let d = dim_arg(sq.n(), &dim)?;
            let summands = generic_decomposition(&sq, &d, Mode::parse(&mode)?)?;
            for s in &summands {
                writeln!(out, "summand {} dim {}", s.display(), join(&s.dim)).map_err(io_err)?;
            }
            writeln!(out, "total {}", display_decomposition(&summands)).map_err(io_err)?;
        }
        Cmd::Arcs { quiver, dim, flavor } => {
            let sq = load_symmetric(&quiver)?;
            let d = dim_arg(sq.n(), &dim)?;
            let dec = canonical_decomposition(&sq, &d, flavor.map(Flavor::from))?;
            writeln!(out, "p {}", dec.p).map_err(io_err)?;
            for lp in &dec.polygons {
                let o = &dec.orbits.orbits[lp.orbit];
                let r = lp.labels.len();
                writeln!(out, "polygon {} labels {}", o.name, join(&lp.labels)).map_err(io_err)?;
                for a in admissible_arcs(lp) {
                    writeln!(out, "arc {}[{},{}] index {} q {}", o.name, a.start + 1, a.end(r) + 1, a.ind, a.q).map_err(io_err)?;
                }
            }
        }
        Cmd::Generators { quiver, dim, flavor, json_lines, check_invariance, seed } => {
            let sq = load_symmetric(&quiver)?;
            let flavor: Flavor = flavor.into();
            let d = dim_arg(sq.n(), &dim)?;
            let gens = generators_for(&sq, &d, flavor)?;
            for (i, g) in gens.iter().enumerate() {
                if json_lines {
                    let mut v = g.to_json(sq.quiver());
                    v["id"] = serde_json::Value::from(i);
                    writeln!(out, "{v}").map_err(io_err)?;
                } else {
                    writeln!(out, "g{i} {} weight {} {}", g.kind, fmt_weight(&g.weight), g.provenance).map_err(io_err)?;
                }
            }
            if let Some(k) = check_invariance {
                let mut checked = 0;
                for (i, g) in gens.iter().enumerate() {
                    for s in 0..k {
                        let base = seed.wrapping_mul(1_000_003).wrapping_add(1000 * i as u64 + s);
                        let w = StructuredRep::random(&sq, flavor, d.clone(), base)?;
                        let h = GroupElement::random(&sq, flavor, &d, base ^ 0x5eed);
                        let (v0, v1) = (g.value(&sq, &w)?, g.value(&sq, &h.act(&sq, &w)?)?);
                        if v0 != v1 {
                            return Err(Error::ParityViolation(format!("g{i} changed from {} to {}", fmt_q(&v0), fmt_q(&v1))));
                        }
                        checked += 1;
                    }
                }
                if !json_lines {
                    writeln!(out, "invariance ok: {} generators, {checked} checks", gens.len()).map_err(io_err)?;
                }
            }
        }
        Cmd::Evaluate { quiver, rep, gen_file } => {
            let sq = load_symmetric(&quiver)?;
            let w = RepFile::parse(sq.quiver(), &read(&rep)?)?.rep;
            for (i, line) in read(&gen_file)?.lines().filter(|l| !l.trim().is_empty()).enumerate() {
                let v: serde_json::Value = serde_json::from_str(line).map_err(|e| Error::Parse(format!("generator line {}: {e}", i + 1)))?;
                let g = GeneratorDescriptor::from_json(&sq, &v)?;
                if g.kind.is_pf() {
                    check_structured(&sq, g.flavor, &w)?;
                }
                let id = v["id"].as_u64().unwrap_or(i as u64);
                writeln!(out, "g{id} {}", fmt_q(&g.value_full(&sq, &w)?)).map_err(io_err)?;
            }
        }
        Cmd::Weights { quiver, alpha } => {
            let sq = load_symmetric(&quiver)?;
            let a = parse_int_list(&alpha)?;
            if a.len() != sq.n() {
                return Err(Error::DomainMismatch(format!("`{alpha}` has the wrong length")));
            }
            let chi = weight_of_cv(&sq, &a);
            writeln!(out, "weight {}", fmt_weight(&chi)).map_err(io_err)?;
            writeln!(out, "gamma {}", fmt_weight(&gamma(&sq, &chi))).map_err(io_err)?;
        }
        Cmd::Lr { lambda, mu, nu } => {
            let c = lr_coefficient(&partition_arg(&lambda)?, &partition_arg(&mu)?, &partition_arg(&nu)?);
            writeln!(out, "{c}").map_err(io_err)?;
        }
        Cmd::OracleDim { quiver, dim, flavor, weight } => {
            let sq = load_symmetric(&quiver)?;
            let d = dim_arg(sq.n(), &dim)?;
            let chi = parse_q_list(&weight)?;
            if chi.len() != sq.n() {
                return Err(Error::DomainMismatch(format!("`{weight}` has the wrong length")));
            }
            writeln!(out, "{}", weight_space_dim(&sq, flavor.into(), &d, &chi)?).map_err(io_err)?;
        }
        Cmd::Pfaffian { matrix } => {
            let m = parse_matrix(&read(&matrix)?)?;
            writeln!(out, "{}", fmt_q(&m.pfaffian()?)).map_err(io_err)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("symquiver").chain(args.iter().copied()), &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn lr_example() {
        assert_eq!(call(&["lr", "--lambda", "1", "--mu", "1,1", "--nu", "2,1"]), (0, "1\n".into(), String::new()));
    }

    #[test]
    fn bad_usage_is_exit_two() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["classify", "-q", "/nonexistent.qv"]).0, 2);
    }
}
