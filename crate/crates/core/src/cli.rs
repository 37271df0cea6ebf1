//! The `lg` command line: argument parsing and dispatch.

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::json;

use crate::braid::BraidWord;
use crate::bratteli::{catalan, dim_lg};
use crate::hecke::element::AlgebraElement;
use crate::hecke::quotient::{lg3_irreps, lg4_irreps};
use crate::hecke::relations::{derive_r2, derive_r3};
use crate::rmatrix;
use crate::trace::solve_trace_coeffs;
use crate::verify::{run_suite, CheckRow, SUITES};

#[derive(Debug, Parser)]
#[command(name = "lg", about = "Links-Gould invariant and the cubic Hecke algebra quotient behind it")]
pub struct Cli {
    /// machine-readable output
    #[arg(long, global = true)]
    pub json: bool,
    /// seed for random specializations
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Links-Gould invariant of the closure of a braid
    Compute {
        #[arg(long)]
        strands: usize,
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
    },
    /// Dimensions of LG_n against the closed formula
    Dims {
        #[arg(long, default_value_t = 10)]
        max: u32,
    },
    /// Markov trace of a braid on at most four strands
    Trace {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long, default_value_t = 4)]
        strands: usize,
        /// specialization point a,b,c (integers or fractions)
        #[arg(long, allow_hyphen_values = true)]
        spec: Option<String>,
    },
    /// Reconstruct one of the relations r2, r3
    Derive {
        which: Relation,
        /// for r3, use s1^-1 instead of s1
        #[arg(long)]
        inverse: bool,
    },
    /// Run a verification suite
    Verify { suite: Suite },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Relation {
    R2,
    R3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Rmatrix,
    Bratteli,
    Hecke,
    Relations,
    Trace,
    Crosscheck,
    All,
}

#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn usage(msg: String) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: msg }
    }

    fn failed(msg: String) -> Self {
        Outcome { code: 1, stdout: String::new(), stderr: msg }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome::usage(text),
            };
        }
    };
    dispatch(&cli)
}

fn parse_braid(text: &str, n: usize) -> Result<BraidWord, Outcome> {
    BraidWord::parse(text, n).map_err(|e| Outcome::usage(format!("error: {e}\nUsage: lg compute --strands N --braid \"[i1,i2,...]\"\n")))
}

fn dispatch(cli: &Cli) -> Outcome {
    let r = match &cli.command {
        Command::Compute { strands, braid } => compute(cli, *strands, braid),
        Command::Dims { max } => Ok(dims(cli, *max)),
        Command::Trace { braid, strands, spec } => trace(cli, braid, *strands, spec.as_deref()),
        Command::Derive { which, inverse } => derive(cli, *which, *inverse),
        Command::Verify { suite } => Ok(verify(cli, *suite)),
    };
    r.unwrap_or_else(|e| e)
}

fn compute(cli: &Cli, strands: usize, text: &str) -> Result<Outcome, Outcome> {
    let w = parse_braid(text, strands)?;
    if strands > rmatrix::MAX_STRANDS {
        return Err(Outcome::usage(format!("error: at most {} strands are supported\n", rmatrix::MAX_STRANDS)));
    }
    let lg = rmatrix::lg_invariant(&w).map_err(|e| Outcome::failed(format!("error: {e}\n")))?;
    let k = w.closure_components();
    Ok(Outcome::ok(if cli.json {
        json!({ "braid": w.to_string(), "strands": strands, "components": k, "lg": lg.to_string() }).to_string() + "\n"
    } else {
        format!("braid {w} on {strands} strands, {k} component(s)\nLG = {lg}\n")
    }))
}

fn dims(cli: &Cli, max: u32) -> Outcome {
    let mut rows = Vec::new();
    for n in 1..=max.max(1) {
        let d = dim_lg(n);
        let c = catalan(n - 1);
        let f = &c * &c * (2 * n - 1);
        rows.push((n, d.to_string(), f.to_string(), d == f));
    }
    let all = rows.iter().all(|r| r.3);
    let stdout = if cli.json {
        let v: Vec<_> = rows.iter().map(|(n, d, f, m)| json!({ "n": n, "dim": d, "formula": f, "matches": m })).collect();
        serde_json::to_string(&v).unwrap() + "\n"
    } else {
        let mut s = format!("{:>4}  {:>24}  {:>24}  match\n", "n", "dim LG_n", "C_(n-1)^2 (2n-1)");
        for (n, d, f, m) in &rows {
            s += &format!("{n:>4}  {d:>24}  {f:>24}  {m}\n");
        }
        s
    };
    Outcome { code: if all { 0 } else { 1 }, stdout, stderr: String::new() }
}

fn parse_spec(text: &str) -> Result<[BigRational; 3], Outcome> {
    let bad = || Outcome::usage(format!("error: invalid --spec '{text}'\nUsage: lg trace --braid \"[...]\" --spec a,b,c\n"));
    let parts: Vec<BigRational> = text.split(',').map(|p| p.trim().parse::<BigRational>()).collect::<Result<_, _>>().map_err(|_| bad())?;
    parts.try_into().map_err(|_| bad())
}

fn trace(cli: &Cli, text: &str, strands: usize, spec: Option<&str>) -> Result<Outcome, Outcome> {
    if strands > 4 {
        return Err(Outcome::usage("error: the trace is defined on at most 4 strands\n".into()));
    }
    let w = parse_braid(text, strands)?;
    let spec = spec.map(parse_spec).transpose()?;
    let labels = lg4_irreps(cli.seed).map_err(|e| Outcome::failed(format!("error: {e}\n")))?;
    let (t, _) = solve_trace_coeffs(&labels, cli.seed, 20).map_err(|e| Outcome::failed(format!("error: {e}\n")))?;
    let value = t.tr4(w.embed(4).letters());
    let special = match &spec {
        Some(pt) => Some(value.specialize(pt).map_err(|e| Outcome::failed(format!("error: {e}\n")))?.to_string()),
        None => None,
    };
    Ok(Outcome::ok(if cli.json {
        let mut v = json!({ "braid": w.to_string(), "num": value.num().to_string(), "den": value.den().to_string() });
        if let Some(s) = &special {
            v["value"] = json!(s);
        }
        v.to_string() + "\n"
    } else {
        match special {
            Some(s) => format!("tr4 = {s}\n"),
            None => format!("tr4 = {value}\n"),
        }
    }))
}

fn element_out(cli: &Cli, e: &AlgebraElement) -> String {
    if cli.json {
        serde_json::to_string(&e.to_json_terms()).unwrap() + "\n"
    } else {
        format!("{e}\n")
    }
}

fn derive(cli: &Cli, which: Relation, inverse: bool) -> Result<Outcome, Outcome> {
    let fail = |e: String| Outcome::failed(format!("error: {e}\n"));
    let e = match which {
        Relation::R2 => derive_r2(&lg3_irreps(cli.seed).map_err(fail)?, cli.seed).map_err(fail)?,
        Relation::R3 => {
            let sign = if inverse { -1 } else { 1 };
            derive_r3(sign, &lg4_irreps(cli.seed).map_err(fail)?, cli.seed).map_err(fail)?
        }
    };
    Ok(Outcome::ok(element_out(cli, &e)))
}

fn suite_names(s: Suite) -> Vec<&'static str> {
    match s {
        Suite::All => SUITES.to_vec(),
        Suite::Rmatrix => vec!["rmatrix"],
        Suite::Bratteli => vec!["bratteli"],
        Suite::Hecke => vec!["hecke"],
        Suite::Relations => vec!["relations"],
        Suite::Trace => vec!["trace"],
        Suite::Crosscheck => vec!["crosscheck"],
    }
}

fn verify(cli: &Cli, s: Suite) -> Outcome {
    let mut results: Vec<(&str, Vec<CheckRow>)> = Vec::new();
    for name in suite_names(s) {
        results.push((name, run_suite(name, cli.seed).expect("known suite")));
    }
    let all = results.iter().all(|(_, rows)| rows.iter().all(|r| r.ok));
    let stdout = if cli.json {
        let m: serde_json::Map<String, serde_json::Value> =
            results.iter().map(|(n, rows)| (n.to_string(), serde_json::to_value(rows).unwrap())).collect();
        serde_json::Value::Object(m).to_string() + "\n"
    } else {
        let mut s = String::new();
        for (n, rows) in &results {
            for r in rows {
                s += &format!("{} {n}: {}", if r.ok { "PASS" } else { "FAIL" }, r.name);
                if !r.detail.is_empty() {
                    s += &format!(" ({})", r.detail);
                }
                s.push('\n');
            }
        }
        s += if all { "all checks passed\n" } else { "some checks failed\n" };
        s
    };
    Outcome { code: if all { 0 } else { 1 }, stdout, stderr: String::new() }
}
