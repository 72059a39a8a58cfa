//! Command-line front end. Exit codes: 0 pass, 1 check failure, 2 usage or
//! input error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::binforms::BinForm;
use crate::error::{Error, Result};
use crate::forget::{self, DEFAULT_CAP};
use crate::gf::FieldCtx;
use crate::kronrep::{decompose, KronRep, RepJson};
use crate::linearise::{colin, cyclic_decomposition, lin};
use crate::pathalg::{compare_path_tensor, path_algebra, RingCtx};
use crate::quiver::gen::{self, almost_tree};
use crate::quiver::{classify_component, Orientation, Quiver};

#[derive(Parser, Debug)]
#[command(name = "kronquiver", version, about = "Kronecker representations over finite fields and their quivers")]
pub struct Manifest {
    /// Field, e.g. GF(5), GF(2^3) or GF(9).
    #[arg(long, global = true, default_value = "GF(2)")]
    pub field: String,
    /// Largest number of vectors enumerated per space.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: u64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Output file; stdout if absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Preproj,
    Preinj,
    Regular,
    Embed,
    Linearise,
    Pathalg,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a representation (P:n, I:n, R:form) or a quiver (linear:r,
    /// cyclic:r, kronecker, debruijn:q:n, pointed:q:n, tree:q:d[:rev]).
    Gen { spec: String },
    /// Apply the forgetful functor to a representation file.
    Forget {
        #[arg(long)]
        input: PathBuf,
    },
    /// Decompose a representation file into indecomposables.
    Decompose {
        #[arg(long)]
        input: PathBuf,
    },
    /// Linearise a quiver file; `--dual` gives the contravariant version.
    Linearise {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        dual: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        /// Number of random quivers for `embed`.
        #[arg(long, default_value_t = 20)]
        count: usize,
        /// Coefficient ring for `pathalg`; defaults to the field.
        #[arg(long)]
        ring: Option<String>,
        /// Corrupt one matrix entry of the first nonempty case.
        #[arg(long)]
        inject_fault: bool,
    },
    /// Re-emit a quiver or representation file.
    Export {
        #[arg(long)]
        input: PathBuf,
    },
    /// Path algebra of a quiver file, optionally compared with the tensor
    /// algebra.
    Pathalg {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        ring: Option<String>,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long)]
        compare: bool,
    },
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let m = match Manifest::try_parse_from(args) {
        Ok(m) => m,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&m) {
        Ok(out) => match emit(&m, &out.text) {
            Ok(()) => {
                if let Some(msg) = out.failure {
                    eprintln!("{msg}");
                    1
                } else {
                    0
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CheckFailed(_) | Error::ClassificationFailed(_) | Error::MismatchFound(_) => 1,
        _ => 2,
    }
}

struct Output {
    text: String,
    failure: Option<String>,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, failure: None }
    }
}

fn emit(m: &Manifest, text: &str) -> Result<()> {
    match &m.out {
        Some(p) => fs::write(p, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json value") + "\n"
}

fn read(p: &Path) -> Result<String> {
    Ok(fs::read_to_string(p)?)
}

fn read_rep(p: &Path) -> Result<KronRep> {
    KronRep::from_json(&serde_json::from_str::<RepJson>(&read(p)?)?)
}

fn read_quiver(p: &Path) -> Result<Quiver> {
    Quiver::from_json_str(&read(p)?)
}

fn rep_text(r: &KronRep) -> String {
    serde_json::to_string_pretty(&r.to_json()).expect("rep json") + "\n"
}

fn execute(m: &Manifest) -> Result<Output> {
    let field: FieldCtx = m.field.parse()?;
    match &m.command {
        Command::Gen { spec } => gen_artifact(spec, &field, m.format),
        Command::Forget { input } => {
            let q = forget::forget_with_cap(&read_rep(input)?, m.cap)?;
            Ok(Output::ok(quiver_output(&q, m.format.unwrap_or(Format::Json))?))
        }
        Command::Decompose { input } => {
            let r = read_rep(input)?;
            let d = decompose(&r);
            Ok(Output::ok(match m.format.unwrap_or(Format::Text) {
                Format::Text => format!("{d}\n"),
                Format::Json => pretty(&json!({
                    "field": r.field().to_string(),
                    "dims": [r.d1(), r.d0()],
                    "summands": d.summands().iter().map(ToString::to_string).collect::<Vec<_>>(),
                })),
                Format::Dot => return Err(Error::Format("decompose has no dot output".into())),
            }))
        }
        Command::Linearise { quiver, dual } => {
            let q = read_quiver(quiver)?;
            let r = if *dual { colin(&q, &field) } else { lin(&q, &field) };
            Ok(Output::ok(rep_text(&r)))
        }
        Command::Verify { suite, max_n, max_len, count, ring, inject_fault } => {
            let ring = match ring {
                Some(r) => r.parse()?,
                None => RingCtx::Field(field.clone()),
            };
            let opts = VerifyOpts {
                max_n: *max_n,
                max_len: *max_len,
                count: *count,
                ring,
                inject: *inject_fault,
                cap: m.cap,
                seed: m.seed,
            };
            verify(*suite, &field, &opts)
        }
        Command::Export { input } => export(&read(input)?, m),
        Command::Pathalg { quiver, ring, max_len, compare } => {
            let q = read_quiver(quiver)?;
            let ring: RingCtx = match ring {
                Some(r) => r.parse()?,
                None => RingCtx::Field(field.clone()),
            };
            let dims = path_algebra(&q, &ring, *max_len).dims();
            let mut v = json!({ "ring": ring.to_string(), "max_len": max_len, "dims": dims });
            if *compare {
                let report = compare_path_tensor(&q, &ring, *max_len)?;
                v["comparison"] = serde_json::to_value(report)?;
            }
            Ok(Output::ok(pretty(&v)))
        }
    }
}

fn quiver_output(q: &Quiver, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => q.to_json_string(),
        Format::Dot => q.to_dot(),
        Format::Text => {
            let mut s = format!("{} vertices, {} arrows\n", q.vertex_count(), q.arrow_count());
            let mut tags = q.component_quivers().iter().map(classify_component).collect::<Result<Vec<_>>>()?;
            tags.sort();
            for t in tags {
                s.push_str(&format!("{t}\n"));
            }
            s
        }
    })
}

fn parse_usize(s: &str, what: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse(format!("bad {what} {s:?}")))
}

fn gen_artifact(spec: &str, field: &FieldCtx, format: Option<Format>) -> Result<Output> {
    let parts: Vec<&str> = spec.split(':').collect();
    let rep = match parts.as_slice() {
        ["P", n] => Some(KronRep::preprojective(field, parse_usize(n, "n")?)),
        ["I", n] => Some(KronRep::preinjective(field, parse_usize(n, "n")?)),
        ["R", f] => Some(KronRep::regular(&BinForm::parse(field, f, None)?)?),
        _ => None,
    };
    if let Some(r) = rep {
        return match format.unwrap_or(Format::Json) {
            Format::Json => Ok(Output::ok(rep_text(&r))),
            Format::Text => Ok(Output::ok(format!("{}\n", decompose(&r)))),
            Format::Dot => Err(Error::Format("use `forget` for a quiver of a representation".into())),
        };
    }
    let set = |q: &str| -> Result<Vec<String>> { Ok((0..parse_usize(q, "set size")?).map(|i| i.to_string()).collect()) };
    let q = match parts.as_slice() {
        ["linear", r] => gen::linear(parse_usize(r, "r")?)?,
        ["cyclic", r] => gen::cyclic(parse_usize(r, "r")?)?,
        ["kronecker"] => gen::kronecker(),
        ["debruijn", q, n] => gen::debruijn(&set(q)?, parse_usize(n, "n")?),
        ["pointed", q, n] => gen::gamma_pointed(&set(q)?, "0", parse_usize(n, "n")?)?,
        ["tree", q, d] => almost_tree(parse_usize(q, "q")?, parse_usize(d, "d")?, Orientation::Forward)?,
        ["tree", q, d, "rev"] => almost_tree(parse_usize(q, "q")?, parse_usize(d, "d")?, Orientation::Reversed)?,
        _ => return Err(Error::Parse(format!("unknown generator spec {spec:?}"))),
    };
    Ok(Output::ok(quiver_output(&q, format.unwrap_or(Format::Json))?))
}

fn export(text: &str, m: &Manifest) -> Result<Output> {
    let value: Value = serde_json::from_str(text)?;
    let format = m.format.unwrap_or(Format::Text);
    if value.get("vertices").is_some() {
        let q = Quiver::from_json(&serde_json::from_value(value)?)?;
        return Ok(Output::ok(quiver_output(&q, format)?));
    }
    if value.get("F").is_some() {
        let r = KronRep::from_json(&serde_json::from_value(value)?)?;
        return Ok(Output::ok(match format {
            Format::Text => format!("{}\n", decompose(&r).join(" ⊕ ")),
            Format::Json => rep_text(&r),
            Format::Dot => forget::forget_with_cap(&r, m.cap)?.to_dot(),
        }));
    }
    Err(Error::Format("input is neither a quiver nor a representation".into()))
}

struct VerifyOpts {
    max_n: usize,
    max_len: usize,
    count: usize,
    ring: RingCtx,
    inject: bool,
    cap: u64,
    seed: u64,
}

/// Adds one to a seeded entry of `F` or `G`; `None` if both are empty.
fn corrupt(r: &KronRep, seed: u64) -> Option<KronRep> {
    if r.d0() == 0 || r.d1() == 0 {
        return None;
    }
    let k = r.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (i, j) = (rng.gen_range(0..r.d0()), rng.gen_range(0..r.d1()));
    let (mut f, mut g) = (r.f().clone(), r.g().clone());
    let target = if rng.gen_bool(0.5) { &mut f } else { &mut g };
    target.set(i, j, k.add(target.get(i, j), k.one()));
    Some(KronRep::new(k, f, g).expect("same shapes"))
}

/// Applies the fault to the first case that has a nonempty matrix.
struct Injector {
    armed: bool,
    seed: u64,
}

impl Injector {
    fn apply(&mut self, r: KronRep) -> KronRep {
        if !self.armed {
            return r;
        }
        match corrupt(&r, self.seed) {
            Some(bad) => {
                self.armed = false;
                bad
            }
            None => r,
        }
    }
}

fn verify(suite: Suite, field: &FieldCtx, o: &VerifyOpts) -> Result<Output> {
    let mut inj = Injector { armed: o.inject, seed: o.seed };
    let mut cases: Vec<Value> = Vec::new();
    let outcome: Result<()> = (|| {
        match suite {
            Suite::Preproj => {
                for n in 0..=o.max_n {
                    let r = inj.apply(KronRep::preprojective(field, n));
                    cases.push(serde_json::to_value(forget::check_preprojective_rep(&r, n, o.cap)?)?);
                }
            }
            Suite::Preinj => {
                for n in 0..=o.max_n {
                    let r = inj.apply(KronRep::preinjective(field, n));
                    cases.push(serde_json::to_value(forget::check_preinjective_rep(&r, n, o.cap)?)?);
                }
            }
            Suite::Regular => {
                for n in 1..=o.max_n {
                    for f in normalized_forms(field, n) {
                        let r = inj.apply(KronRep::regular(&f)?);
                        cases.push(serde_json::to_value(forget::check_regular_rep(&r, &f, o.cap)?)?);
                    }
                }
            }
            Suite::Embed => {
                if o.inject {
                    return Err(Error::InvalidArgument("embed does not support fault injection".into()));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
                for _ in 0..o.count {
                    let nv = rng.gen_range(1..=4);
                    let na = rng.gen_range(0..=5);
                    let q = gen::random(&mut rng, nv, na);
                    cases.push(serde_json::to_value(forget::embedding_report(&q, field, o.cap)?)?);
                }
            }
            Suite::Linearise => {
                for n in 0..=o.max_n {
                    let a = gen::linear(n + 1)?;
                    let l = inj.apply(lin(&a, field));
                    let p = KronRep::preprojective(field, n);
                    let ok = l == p
                        && l.is_isomorphic(&p)?
                        && colin(&a, field).is_isomorphic(&KronRep::preinjective(field, n))?;
                    if !ok {
                        return Err(Error::CheckFailed(format!("linearisation of A_{} is not P({n}), I({n})", n + 1)));
                    }
                    cases.push(json!({ "quiver": format!("A_{}", n + 1), "lin": format!("P({n})"), "colin": format!("I({n})") }));
                }
                for n in 1..=o.max_n.max(1) * 2 {
                    let got = decompose(&lin(&gen::cyclic(n)?, field));
                    let want = cyclic_decomposition(field, n);
                    if got != want {
                        return Err(Error::CheckFailed(format!("k^(C_{n}) decomposes as {got}, expected {want}")));
                    }
                    cases.push(json!({ "quiver": format!("C_{n}"), "decomposition": got.to_string() }));
                }
            }
            Suite::Pathalg => {
                if o.inject {
                    return Err(Error::InvalidArgument("pathalg does not support fault injection".into()));
                }
                for (name, q) in pathalg_corpus() {
                    let mut v = serde_json::to_value(compare_path_tensor(&q, &o.ring, o.max_len)?)?;
                    v["quiver"] = json!(name);
                    cases.push(v);
                }
            }
        }
        Ok(())
    })();
    let name = format!("{suite:?}").to_lowercase();
    match outcome {
        Ok(()) => Ok(Output::ok(pretty(&json!({
            "suite": name, "field": field.to_string(), "passed": true, "cases": cases,
        })))),
        Err(e) if exit_code(&e) == 1 => {
            let msg = e.to_string();
            Ok(Output {
                text: pretty(&json!({
                    "suite": name, "field": field.to_string(), "passed": false, "cases": cases, "failure": msg,
                })),
                failure: Some(msg),
            })
        }
        Err(e) => Err(e),
    }
}

/// Nonzero forms of degree `n` whose first nonzero coefficient is 1.
fn normalized_forms(field: &FieldCtx, n: usize) -> Vec<BinForm> {
    let q = field.order() as usize;
    (1..q.pow(n as u32 + 1))
        .map(|i| forget::vector_at(field, n + 1, i))
        .filter(|v| v.iter().find(|c| !c.is_zero()).map(|c| c.code()) == Some(1))
        .map(|v| BinForm::new(field, v).expect("valid coefficients"))
        .collect()
}

pub fn pathalg_corpus() -> Vec<(&'static str, Quiver)> {
    vec![
        ("A_3", gen::linear(3).unwrap()),
        ("C_2", gen::cyclic(2).unwrap()),
        ("K2", gen::kronecker()),
        ("deBruijn(2,1)", gen::debruijn(&["0", "1"], 1)),
        ("tree(3,2)", almost_tree(3, 2, Orientation::Forward).unwrap()),
    ]
}
