//! Command-line front end. Every subcommand prints either an aligned text
//! table or, with `--json`, one line of JSON. Exit codes: 0 ok, 1 malformed
//! arguments, 2 domain error, 3 internal error.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::boundary::{
    plane_boundary_catalog, recognize_special_boundary, CuspCycle, ForkData, SpecialSingularity,
    TypeBGluing,
};
use crate::correspondence::{bundle_from_stratum, enumerate_slope_set, euler_self_pairing, slope_vector};
use crate::error::Error;
use crate::markov::{descent_path, enumerate_tree, mutate, MarkovTriple};
use crate::numeric::{parse_int, parse_rational, Rational};
use crate::quotient::{CyclicQuotientSing, WahlData};
use crate::records;
use crate::wps::{canonical_square, markov_plane, stratum_wahl, WeightedPlane};

/// Environment variable capping the number of decimal digits of integer
/// arguments.
pub const MAX_DIGITS_VAR: &str = "KSBA_MAX_DIGITS";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    DomainError,
    InternalError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::DomainError => 2,
            Status::InternalError => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub human_text: String,
}

/// What a process would write and return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Limits {
    pub max_digits: Option<usize>,
}

impl Limits {
    pub fn from_env() -> Self {
        let max_digits = std::env::var(MAX_DIGITS_VAR).ok().and_then(|v| v.trim().parse().ok());
        Limits { max_digits }
    }
}

#[derive(Parser, Debug)]
#[command(name = "ksba", version, about = "Markov triples, Wahl singularities and degenerations of the plane")]
struct Cli {
    /// Print JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Markov triples and mutations.
    #[command(subcommand)]
    Markov(MarkovCmd),
    /// Cyclic quotient and Wahl singularities.
    #[command(subcommand)]
    Sing(SingCmd),
    /// Weighted projective planes.
    #[command(subcommand)]
    Wps(WpsCmd),
    /// Exceptional bundle invariants.
    #[command(subcommand)]
    Bundle(BundleCmd),
    /// Non-normal gluings and boundary strata.
    #[command(subcommand)]
    Boundary(BoundaryCmd),
    /// Re-check a JSON payload produced by `--json`.
    Verify {
        /// File to read; stdin when omitted.
        file: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum MarkovCmd {
    /// All triples with largest entry at most N.
    Enumerate {
        #[arg(long = "max", value_name = "N", value_parser = big)]
        max: BigInt,
    },
    /// Mutate the entry at position P of the sorted triple.
    #[command(allow_negative_numbers = true)]
    Mutate {
        #[arg(value_parser = big)]
        a: BigInt,
        #[arg(value_parser = big)]
        b: BigInt,
        #[arg(value_parser = big)]
        c: BigInt,
        #[arg(long = "pos", value_name = "P")]
        pos: usize,
    },
}

#[derive(Subcommand, Debug)]
#[command(allow_negative_numbers = true)]
enum SingCmd {
    /// Invariants of 1/r(1,q).
    #[command(allow_negative_numbers = true)]
    Info {
        #[arg(value_parser = big)]
        r: BigInt,
        #[arg(value_parser = big)]
        q: BigInt,
    },
    /// Smoothing, Milnor fibre and index-one cover of 1/n^2(1,na-1).
    #[command(allow_negative_numbers = true)]
    Wahl {
        #[arg(value_parser = big)]
        n: BigInt,
        #[arg(value_parser = big)]
        a: BigInt,
    },
}

#[derive(Subcommand, Debug)]
enum WpsCmd {
    /// Singular points and K^2 of P(w0,w1,w2).
    #[command(allow_negative_numbers = true)]
    Analyze {
        #[arg(value_parser = big)]
        w0: BigInt,
        #[arg(value_parser = big)]
        w1: BigInt,
        #[arg(value_parser = big)]
        w2: BigInt,
    },
    /// Partial smoothings and boundary strata of P(a^2,b^2,c^2).
    #[command(allow_negative_numbers = true)]
    Strata {
        #[arg(value_parser = big)]
        a: BigInt,
        #[arg(value_parser = big)]
        b: BigInt,
        #[arg(value_parser = big)]
        c: BigInt,
    },
}

#[derive(Subcommand, Debug)]
enum BundleCmd {
    /// Bundle attached to the stratum keeping the vertex of weight n^2.
    #[command(allow_negative_numbers = true)]
    FromStratum {
        #[arg(value_parser = big)]
        a: BigInt,
        #[arg(value_parser = big)]
        b: BigInt,
        #[arg(value_parser = big)]
        c: BigInt,
        #[arg(long = "keep", value_name = "n", value_parser = big)]
        keep: BigInt,
    },
    /// Normalized slope vectors up to rank N.
    Slopes {
        #[arg(long = "max-rank", value_name = "N", value_parser = big)]
        max_rank: BigInt,
    },
}

#[derive(Subcommand, Debug)]
enum BoundaryCmd {
    /// Degree of T^1_QG on the double curve of a two-component gluing.
    T1 {
        /// Self-intersection of C on X1, as p/q.
        #[arg(long = "c1", allow_hyphen_values = true, value_parser = frac)]
        c1: Rational,
        /// Self-intersection of C on X2, as p/q.
        #[arg(long = "c2", allow_hyphen_values = true, value_parser = frac)]
        c2: Rational,
        #[arg(long, default_value_t = 0)]
        genus: u64,
        /// Orbifold indices along C, comma separated.
        #[arg(long, value_delimiter = ',', value_parser = big)]
        orbifold: Vec<BigInt>,
    },
    /// Candidate boundary strata for plane curves of degree d.
    #[command(allow_negative_numbers = true)]
    PlaneCatalog {
        #[arg(value_parser = big)]
        d: BigInt,
    },
    /// Recognize fork, elliptic cone and cusp boundary singularities.
    Recognize(RecognizeArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("kind").required(true).args(["fork", "cone_degree", "cusp"])))]
struct RecognizeArgs {
    /// Arms and centre: e1 e2 e3 f.
    #[arg(long, num_args = 4, value_names = ["e1", "e2", "e3", "f"])]
    fork: Option<Vec<u64>>,
    #[arg(long = "cone-degree", value_parser = big)]
    cone_degree: Option<BigInt>,
    /// -E_i^2 around the cycle, comma separated.
    #[arg(long, value_delimiter = ',', value_parser = big)]
    cusp: Option<Vec<BigInt>>,
}

fn big(s: &str) -> Result<BigInt, String> {
    parse_int(s).map_err(|e| e.to_string())
}

fn frac(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Runs with limits taken from the environment.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, Limits::from_env(), None)
}

/// `stdin` supplies the payload for `verify` when no file is given.
pub fn run_with<I, T>(argv: I, limits: Limits, stdin: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    let result = match check_limits(&cli.command, limits) {
        Ok(()) => dispatch(&cli.command, stdin),
        Err(e) => Err(e),
    };
    match result {
        Ok(r) => {
            let stdout = if cli.json {
                let mut s = serde_json::to_string(&r.payload).expect("serializable");
                s.push('\n');
                s
            } else {
                r.human_text
            };
            Outcome { stdout, stderr: String::new(), code: r.status.exit_code() }
        }
        Err(e) => {
            let (status, tag) = if e.is_domain() {
                (Status::DomainError, "domain-error")
            } else {
                (Status::InternalError, "internal-error")
            };
            let reason = e.to_string().replace('\n', " ");
            Outcome { stdout: String::new(), stderr: format!("{tag}: {reason}\n"), code: status.exit_code() }
        }
    }
}

fn integer_args(cmd: &Command) -> Vec<&BigInt> {
    match cmd {
        Command::Markov(MarkovCmd::Enumerate { max }) => vec![max],
        Command::Markov(MarkovCmd::Mutate { a, b, c, .. }) => vec![a, b, c],
        Command::Sing(SingCmd::Info { r, q }) => vec![r, q],
        Command::Sing(SingCmd::Wahl { n, a }) => vec![n, a],
        Command::Wps(WpsCmd::Analyze { w0, w1, w2 }) => vec![w0, w1, w2],
        Command::Wps(WpsCmd::Strata { a, b, c }) => vec![a, b, c],
        Command::Bundle(BundleCmd::FromStratum { a, b, c, keep }) => vec![a, b, c, keep],
        Command::Bundle(BundleCmd::Slopes { max_rank }) => vec![max_rank],
        Command::Boundary(BoundaryCmd::T1 { c1, c2, orbifold, .. }) => {
            let mut v: Vec<&BigInt> = vec![c1.numer(), c1.denom(), c2.numer(), c2.denom()];
            v.extend(orbifold);
            v
        }
        Command::Boundary(BoundaryCmd::PlaneCatalog { d }) => vec![d],
        Command::Boundary(BoundaryCmd::Recognize(r)) => {
            let mut v: Vec<&BigInt> = r.cone_degree.iter().collect();
            v.extend(r.cusp.iter().flatten());
            v
        }
        Command::Verify { .. } => vec![],
    }
}

fn check_limits(cmd: &Command, limits: Limits) -> Result<(), Error> {
    let Some(cap) = limits.max_digits else { return Ok(()) };
    for n in integer_args(cmd) {
        let digits = n.magnitude().to_string().len();
        if digits > cap {
            return Err(Error::Domain(format!(
                "integer argument has {digits} digits, above {MAX_DIGITS_VAR}={cap}"
            )));
        }
    }
    Ok(())
}

fn ok(payload: Value, human_text: String) -> Result<CommandResult, Error> {
    Ok(CommandResult { status: Status::Ok, payload, human_text })
}

fn dispatch(cmd: &Command, stdin: Option<&str>) -> Result<CommandResult, Error> {
    match cmd {
        Command::Markov(MarkovCmd::Enumerate { max }) => {
            if !max.is_positive() {
                return Err(Error::Domain(format!("bound {max} must be positive")));
            }
            let set = enumerate_tree(max);
            let rows: Vec<Vec<String>> = set
                .iter()
                .map(|t| t.entries().iter().map(ToString::to_string).collect())
                .collect();
            ok(records::triples(&set), columns(&["a", "b", "c"], &rows))
        }
        Command::Markov(MarkovCmd::Mutate { a, b, c, pos }) => {
            let t = MarkovTriple::new(a.clone(), b.clone(), c.clone())?;
            let m = mutate(&t, *pos)?;
            let payload = serde_json::json!({
                "from": records::triple(&t),
                "position": pos,
                "to": records::triple(&m),
            });
            ok(payload, kv(&[("from", t.to_string()), ("position", pos.to_string()), ("to", m.to_string())]))
        }
        Command::Sing(SingCmd::Info { r, q }) => {
            let s = CyclicQuotientSing::new(r.clone(), q.clone())?;
            let payload = records::singularity(&s);
            let text = sing_text(&payload);
            ok(payload, text)
        }
        Command::Sing(SingCmd::Wahl { n, a }) => {
            let w = WahlData::new(n.clone(), a.clone())?;
            let payload = records::wahl_report(&w);
            let text = wahl_text(&payload);
            ok(payload, text)
        }
        Command::Wps(WpsCmd::Analyze { w0, w1, w2 }) => {
            let p = WeightedPlane::new(w0.clone(), w1.clone(), w2.clone())?;
            let payload = records::plane(&p);
            let text = plane_text(&payload);
            ok(payload, text)
        }
        Command::Wps(WpsCmd::Strata { a, b, c }) => {
            let t = MarkovTriple::new(a.clone(), b.clone(), c.clone())?;
            let payload = records::type_a_report(&t);
            let text = strata_text(&payload);
            ok(payload, text)
        }
        Command::Bundle(BundleCmd::FromStratum { a, b, c, keep }) => {
            let t = MarkovTriple::new(a.clone(), b.clone(), c.clone())?;
            let w = stratum_wahl(&t, keep)?;
            let bundle = bundle_from_stratum(&t, keep)?;
            let payload = records::bundle(&bundle, &t, w.a())?;
            let text = kv(&[
                ("triple", t.to_string()),
                ("kept", keep.to_string()),
                ("wahl", w.to_string()),
                ("rank", bundle.rank.to_string()),
                ("c1", bundle.c1.to_string()),
                ("c2", bundle.c2.to_string()),
                ("slope", bundle.slope.to_string()),
                ("normalized slope", slope_vector(&bundle).to_string()),
                ("discriminant", bundle.discriminant.to_string()),
                ("chi(F,F)", euler_self_pairing(&bundle)?.to_string()),
                ("c1 convention", crate::correspondence::C1_CONVENTION.to_string()),
            ]);
            ok(payload, text)
        }
        Command::Bundle(BundleCmd::Slopes { max_rank }) => {
            let set = enumerate_slope_set(max_rank)?;
            let rows: Vec<Vec<String>> =
                set.iter().map(|(n, s)| vec![n.to_string(), s.to_string()]).collect();
            ok(records::slopes(&set), columns(&["rank", "slope"], &rows))
        }
        Command::Boundary(BoundaryCmd::T1 { c1, c2, genus, orbifold }) => {
            let g = TypeBGluing::new(c1.clone(), c2.clone(), *genus, orbifold.clone())?;
            let payload = records::gluing(&g)?;
            let text = kv(&[
                ("self-intersections", format!("{c1}, {c2}")),
                ("genus", genus.to_string()),
                ("orbifold indices", join(orbifold)),
                ("degree of T1", show(&payload["degree"])),
                ("smoothability", show(&payload["smoothability"])),
                ("boundary divisor", show(&payload["boundary_divisor"])),
                ("h0(T1)", show(&payload["sections"])),
            ]);
            ok(payload, text)
        }
        Command::Boundary(BoundaryCmd::PlaneCatalog { d }) => {
            let c = plane_boundary_catalog(d)?;
            let payload = records::catalog(&c);
            let mut text = format!("degree {d} (necessary conditions only)\n\ntype A\n");
            let rows: Vec<Vec<String>> = c
                .type_a
                .iter()
                .map(|s| vec![s.triple.to_string(), s.wahl.n().to_string(), s.wahl.a().to_string()])
                .collect();
            text.push_str(&columns(&["triple", "n", "a"], &rows));
            text.push_str("\ntype B (m,n)\n");
            let rows: Vec<Vec<String>> =
                c.type_b_mn.iter().map(|(m, n)| vec![m.to_string(), n.to_string()]).collect();
            text.push_str(&columns(&["m", "n"], &rows));
            ok(payload, text)
        }
        Command::Boundary(BoundaryCmd::Recognize(args)) => {
            let data = if let Some(f) = &args.fork {
                SpecialSingularity::Fork(ForkData::new([f[0], f[1], f[2]], f[3])?)
            } else if let Some(k) = &args.cone_degree {
                SpecialSingularity::EllipticCone { degree: k.clone() }
            } else {
                let entries = args.cusp.clone().unwrap_or_default();
                SpecialSingularity::Cusp(CuspCycle::new(entries)?)
            };
            let m = recognize_special_boundary(&data);
            let payload = records::recognition(&data, m);
            let text = kv(&[
                ("input", serde_json::to_string(&payload["input"]).expect("json")),
                ("match", m.map_or("none".to_string(), |x| x.as_str().to_string())),
            ]);
            ok(payload, text)
        }
        Command::Verify { file } => {
            let text = match (file, stdin) {
                (Some(path), _) => std::fs::read_to_string(path)
                    .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?,
                (None, Some(s)) => s.to_string(),
                (None, None) => {
                    let mut s = String::new();
                    std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
                        .map_err(|e| Error::Domain(format!("cannot read stdin: {e}")))?;
                    s
                }
            };
            let value: Value = serde_json::from_str(&text)
                .map_err(|e| Error::Domain(format!("invalid JSON: {e}")))?;
            let kind = verify_payload(&value)?;
            let payload = serde_json::json!({ "verified": kind });
            ok(payload, format!("verified {kind} payload\n"))
        }
    }
}

fn show(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn join(v: &[BigInt]) -> String {
    if v.is_empty() {
        "-".into()
    } else {
        v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }
}

fn kv(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<width$}  {v}");
    }
    out
}

fn columns(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let parts: Vec<String> =
            cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(headers.to_vec());
    out.push_str(&line(widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().iter().map(String::as_str).collect()));
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

fn list(v: &Value) -> String {
    match v {
        Value::Array(items) => format!("[{}]", items.iter().map(show).collect::<Vec<_>>().join(", ")),
        other => show(other),
    }
}

fn sing_text(p: &Value) -> String {
    let wahl = match &p["wahl"] {
        Value::Null => "none".to_string(),
        w => format!("n={}, a={}", w["n"], w["a"]),
    };
    kv(&[
        ("normal form", format!("1/{}(1,{})", p["r"], p["q"])),
        ("chain", list(&p["chain"])),
        ("discrepancies", list(&p["discrepancies"])),
        ("class", show(&p["class"])),
        ("index", show(&p["index"])),
        ("link", format!("L({},{})", p["link"][0], p["link"][1])),
        ("wahl", wahl),
    ])
}

fn wahl_text(p: &Value) -> String {
    let s = &p["singularity"];
    let m = &p["milnor"];
    let sm = &p["smoothing"];
    kv(&[
        ("wahl", format!("n={}, a={}", p["n"], p["a"])),
        ("singularity", format!("1/{}(1,{})", s["r"], s["q"])),
        ("chain", list(&s["chain"])),
        ("index", show(&s["index"])),
        ("smoothing", format!("({}) in 1/{}{} x C_t", show(&sm["equation"]), sm["order"], tuple(&sm["weights"]))),
        ("index-one cover", format!("1/{}(1,{})", p["cover"]["r"], p["cover"]["q"])),
        ("milnor pi1 order", show(&m["pi1_order"])),
        ("milnor euler", show(&m["euler"])),
        ("milnor betti", list(&m["betti"])),
        ("cover milnor euler", show(&m["cover_euler"])),
        ("link", format!("L({},{})", s["link"][0], s["link"][1])),
    ])
}

fn tuple(v: &Value) -> String {
    match v {
        Value::Array(items) => format!("({})", items.iter().map(show).collect::<Vec<_>>().join(",")),
        other => show(other),
    }
}

fn plane_text(p: &Value) -> String {
    let mut out = kv(&[
        ("plane", format!("P{}", tuple(&p["weights"]))),
        ("K^2", show(&p["K2"])),
        ("markov", match &p["markov"] { Value::Null => "-".into(), t => tuple(t) }),
    ]);
    out.push('\n');
    let rows: Vec<Vec<String>> = p["singularities"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|s| {
            let wahl = match &s["wahl"] {
                Value::Null => "-".to_string(),
                w => format!("({},{})", w["n"], w["a"]),
            };
            vec![
                format!("1/{}(1,{})", s["r"], s["q"]),
                list(&s["chain"]),
                show(&s["index"]),
                show(&s["class"]),
                wahl,
            ]
        })
        .collect();
    out.push_str(&columns(&["singularity", "chain", "index", "class", "wahl"], &rows));
    out
}

fn strata_text(p: &Value) -> String {
    let mut out = kv(&[
        ("triple", tuple(&p["triple"])),
        ("plane", format!("P{}", tuple(&p["plane"]))),
        ("-K/3 degree", show(&p["anticanonical_third"])),
    ]);
    out.push('\n');
    let rows: Vec<Vec<String>> = p["surfaces"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|s| {
            let kept: Vec<String> = s["kept"]
                .as_array()
                .into_iter()
                .flatten()
                .map(|k| format!("1/{}(1,{})", k["r"], k["q"]))
                .collect();
            vec![
                list(&s["smoothed"]),
                if kept.is_empty() { "-".into() } else { kept.join(" ") },
                show(&s["parameters"]),
            ]
        })
        .collect();
    out.push_str(&columns(&["smoothed", "kept", "parameters"], &rows));
    out.push('\n');
    let rows: Vec<Vec<String>> = p["strata"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|w| vec![show(&w["n"]), show(&w["a"])])
        .collect();
    out.push_str("boundary strata\n");
    out.push_str(&columns(&["n", "a"], &rows));
    out
}

// ---------------------------------------------------------------------------
// verify

fn fail(msg: impl Into<String>) -> Error {
    Error::Domain(format!("verification failed: {}", msg.into()))
}

fn jbig(v: &Value) -> Result<BigInt, Error> {
    match v {
        Value::Number(n) => parse_int(&n.to_string()).map_err(|_| fail(format!("{n} is not an integer"))),
        other => Err(fail(format!("expected integer, found {other}"))),
    }
}

fn jtriple(v: &Value) -> Result<MarkovTriple, Error> {
    let arr = v.as_array().filter(|a| a.len() == 3).ok_or_else(|| fail("expected [a,b,c]"))?;
    MarkovTriple::new(jbig(&arr[0])?, jbig(&arr[1])?, jbig(&arr[2])?).map_err(|e| fail(e.to_string()))
}

fn jrat(v: &Value) -> Result<Rational, Error> {
    v.as_str()
        .ok_or_else(|| fail("expected fraction string"))
        .and_then(|s| parse_rational(s).map_err(|e| fail(e.to_string())))
}

fn same(kind: &str, got: &Value, want: &Value) -> Result<(), Error> {
    if got == want {
        Ok(())
    } else {
        Err(fail(format!("{kind} payload does not match a fresh computation")))
    }
}

fn is_triple_list(v: &Value) -> bool {
    v.as_array().is_some_and(|a| a.iter().all(|x| x.as_array().is_some_and(|t| t.len() == 3 && t.iter().all(Value::is_number))))
}

/// Re-derives a payload from its own inputs and re-checks the invariants it
/// should satisfy. Returns the payload kind.
pub fn verify_payload(v: &Value) -> Result<&'static str, Error> {
    if is_triple_list(v) {
        let triples: Vec<MarkovTriple> =
            v.as_array().into_iter().flatten().map(jtriple).collect::<Result<_, _>>()?;
        let sorted: BTreeSet<MarkovTriple> = triples.iter().cloned().collect();
        if sorted.len() != triples.len() || !triples.windows(2).all(|w| w[0] < w[1]) {
            return Err(fail("triples are not strictly increasing"));
        }
        let top = triples.iter().map(|t| t.max_entry().clone()).max().unwrap_or_else(BigInt::zero);
        if enumerate_tree(&top) != sorted {
            return Err(fail("triple list is not a complete enumeration"));
        }
        for t in &triples {
            if !descent_path(t).last().is_some_and(MarkovTriple::is_root) {
                return Err(fail(format!("{t} does not descend to (1,1,1)")));
            }
        }
        return Ok("markov-enumerate");
    }
    if let Some(items) = v.as_array() {
        let mut set = BTreeSet::new();
        for it in items {
            let n = jbig(&it["rank"])?;
            let s = jrat(&it["slope"])?;
            let two = Rational::new(BigInt::one(), BigInt::from(2));
            if s.is_negative() || s > two || !(s.denom() == &n || (n.is_one() && s.is_zero())) {
                return Err(fail(format!("slope {s} is not normalized for rank {n}")));
            }
            set.insert((n, s));
        }
        let top = set.iter().map(|(n, _)| n.clone()).max().unwrap_or_else(|| BigInt::from(2));
        same("bundle-slopes", v, &records::slopes(&enumerate_slope_set(&top)?))?;
        return Ok("bundle-slopes");
    }
    let obj = v.as_object().ok_or_else(|| fail("unrecognized payload"))?;
    let has = |k: &str| obj.contains_key(k);
    if has("from") && has("to") && has("position") {
        let from = jtriple(&v["from"])?;
        let pos = v["position"].as_u64().ok_or_else(|| fail("bad position"))? as usize;
        let to = mutate(&from, pos).map_err(|e| fail(e.to_string()))?;
        if jtriple(&v["to"])? != to || mutate(&to, to.entries().iter().position(|e| !from.contains(e)).unwrap_or(pos))? != from {
            return Err(fail("mutation does not invert"));
        }
        return Ok("markov-mutate");
    }
    if has("rank") && has("c1") && has("c2") {
        let t = jtriple(&v["triple"])?;
        let kept = jbig(&v["kept"])?;
        let b = bundle_from_stratum(&t, &kept).map_err(|e| fail(e.to_string()))?;
        let n = &b.rank;
        let n2 = Rational::from_integer(n * n);
        let expected = (&n2 - Rational::one()) / (Rational::from_integer(BigInt::from(2)) * n2);
        if b.discriminant != expected || !euler_self_pairing(&b)?.is_one() {
            return Err(fail("bundle is not exceptional"));
        }
        let a = stratum_wahl(&t, &kept)?;
        same("bundle", v, &records::bundle(&b, &t, a.a())?)?;
        return Ok("bundle");
    }
    if has("r") && has("q") && has("chain") {
        let s = CyclicQuotientSing::new(jbig(&v["r"])?, jbig(&v["q"])?).map_err(|e| fail(e.to_string()))?;
        let res = crate::quotient::resolve(&s);
        let minus_one = -Rational::one();
        if res.discrepancies.iter().any(|a| *a <= minus_one || a.is_positive()) {
            return Err(fail("discrepancy outside (-1, 0]"));
        }
        same("sing-info", v, &records::singularity(&s))?;
        return Ok("sing-info");
    }
    if has("smoothing") && has("milnor") {
        let w = WahlData::new(jbig(&v["n"])?, jbig(&v["a"])?).map_err(|e| fail(e.to_string()))?;
        let m = crate::quotient::milnor_invariants(&w);
        if !m.euler.is_one() || m.pi1_order != *w.n() || crate::quotient::index(&w.singularity()) != *w.n() {
            return Err(fail("Wahl invariants are inconsistent"));
        }
        same("sing-wahl", v, &records::wahl_report(&w))?;
        return Ok("sing-wahl");
    }
    if has("weights") && has("K2") {
        let w: Vec<BigInt> = v["weights"].as_array().into_iter().flatten().map(jbig).collect::<Result<_, _>>()?;
        if w.len() != 3 {
            return Err(fail("expected three weights"));
        }
        let p = WeightedPlane::new(w[0].clone(), w[1].clone(), w[2].clone()).map_err(|e| fail(e.to_string()))?;
        if p.markov_roots().is_some() && canonical_square(&p) != Rational::from_integer(BigInt::from(9)) {
            return Err(fail("K^2 != 9 on a Markov plane"));
        }
        same("wps-analyze", v, &records::plane(&p))?;
        return Ok("wps-analyze");
    }
    if has("triple") && has("surfaces") {
        let t = jtriple(&v["triple"])?;
        if canonical_square(&markov_plane(&t)) != Rational::from_integer(BigInt::from(9)) {
            return Err(fail("K^2 != 9"));
        }
        same("wps-strata", v, &records::type_a_report(&t))?;
        return Ok("wps-strata");
    }
    if has("self_int") && has("degree") {
        let s = v["self_int"].as_array().filter(|a| a.len() == 2).ok_or_else(|| fail("bad self_int"))?;
        let genus = v["genus"].as_u64().ok_or_else(|| fail("bad genus"))?;
        let idx: Vec<BigInt> = v["orbifold_indices"].as_array().into_iter().flatten().map(jbig).collect::<Result<_, _>>()?;
        let g = TypeBGluing::new(jrat(&s[0])?, jrat(&s[1])?, genus, idx)?;
        same("boundary-t1", v, &records::gluing(&g)?)?;
        return Ok("boundary-t1");
    }
    if has("d") && has("typeA") {
        let d = jbig(&v["d"])?;
        let c = plane_boundary_catalog(&d).map_err(|e| fail(e.to_string()))?;
        if c.type_a.iter().any(|s| s.wahl.n() > &d) {
            return Err(fail("kept index above d"));
        }
        same("plane-catalog", v, &records::catalog(&c))?;
        return Ok("plane-catalog");
    }
    if has("input") && has("match") {
        let input = &v["input"];
        let data = if let Some(f) = input.get("fork") {
            let arms: Vec<u64> = f["arms"].as_array().into_iter().flatten().filter_map(Value::as_u64).collect();
            let center = f["center"].as_u64().ok_or_else(|| fail("bad fork centre"))?;
            let arms: [u64; 3] = arms.try_into().map_err(|_| fail("fork needs three arms"))?;
            SpecialSingularity::Fork(ForkData::new(arms, center)?)
        } else if let Some(k) = input.get("cone_degree") {
            SpecialSingularity::EllipticCone { degree: jbig(k)? }
        } else if let Some(c) = input.get("cusp") {
            let e: Vec<BigInt> = c.as_array().into_iter().flatten().map(jbig).collect::<Result<_, _>>()?;
            SpecialSingularity::Cusp(CuspCycle::new(e)?)
        } else {
            return Err(fail("unrecognized recognizer input"));
        };
        same("boundary-recognize", v, &records::recognition(&data, recognize_special_boundary(&data)))?;
        return Ok("boundary-recognize");
    }
    Err(fail("unrecognized payload"))
}
