//! The `toralg` command line.
//!
//! Exit status: 0 for a definite answer, 2 when a bounded search ran out
//! (an "unknown" verdict), 1 for bad input.

pub mod corpus;
mod report;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex;
use serde_json::{json, Map, Value};

pub use corpus::{corpus, CorpusBounds};
pub use report::{int_value, matrix_value, render, render_results, Output, SCHEMA};

use crate::autgroup::{
    eigen_check, is_automorphism_matrix, power_of, synthesize_with, GeneratorRoute,
};
use crate::fourier::{self, Phase, TrigPoly};
use crate::iso::{
    aut_isomorphic_generators, conjecture_scan_with, is_isomorphic, AutIsoVerdict,
    ConjectureOutcome, ConjugacyVerdict, DEFAULT_BOUND,
};
use crate::matrix::parse_matrix;
use crate::pell::{enumerate, negative_solvable, FundamentalSource, PellCache, Rhs};
use crate::quad::{continued_fraction, parse, parse_expression, QuadError};
use crate::{BigInt, Quad};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "toralg",
    version,
    about = "Exact classification of the uniform algebras A_alpha on the 2-torus"
)]
struct Cli {
    /// Entry bound for bounded conjugacy searches.
    #[arg(long, global = true, env = "TORALG_BOUND", default_value_t = DEFAULT_BOUND,
          value_parser = clap::value_parser!(u64).range(1..))]
    bound: u64,
    /// File memoizing Pell fundamental solutions (in-memory when absent).
    #[arg(long, global = true, env = "TORALG_CACHE")]
    cache: Option<PathBuf>,
    /// Emit JSON instead of `key: value` lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fundamental (or k-th) solution of x^2 - n y^2 = rhs, rhs in {1,-1,4,-4}.
    Pell {
        n: String,
        #[arg(allow_hyphen_values = true)]
        rhs: i64,
        /// Return the k-th solution instead of the fundamental one.
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Generator of the automorphism matrices of A_alpha.
    Gen { alpha: String },
    /// Whether a matrix induces an automorphism of A_alpha.
    Check { alpha: String, matrix: String },
    /// Decide whether A_alpha and A_beta are isometrically isomorphic.
    Iso { alpha: String, beta: String },
    /// Compare Aut(A_alpha) and Aut(A_beta) via conjugacy of generators.
    AutIso { alpha: String, beta: String },
    /// Test whether each SL generator in a corpus file is conjugate to its inverse.
    Conjecture {
        /// One quadratic irrational per line, as printed by `corpus`.
        corpus_file: PathBuf,
    },
    /// Print all positive (u+v*sqrt(D))/w within the given bounds.
    Corpus(CorpusArgs),
    /// Operations on trigonometric polynomial files.
    #[command(subcommand)]
    Poly(PolyCommand),
}

#[derive(Args, Debug)]
struct CorpusArgs {
    #[arg(long, default_value_t = 4)]
    u_max: i64,
    #[arg(long, default_value_t = 4)]
    v_max: i64,
    #[arg(long, default_value_t = 4)]
    w_max: i64,
    #[arg(long, default_value_t = 20)]
    d_max: i64,
}

#[derive(Subcommand, Debug)]
enum PolyCommand {
    /// Whether the polynomial lies in A_alpha.
    Member {
        /// `m n re im` lines, or a JSON array of `{m, n, re, im}` objects.
        file: PathBuf,
        alpha: String,
    },
    /// Image under composition with the monomial map of a matrix.
    Map {
        file: PathBuf,
        matrix: String,
        /// Rotation angles `t1,t2` (turns) applied with the map.
        #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
        angles: String,
    },
    /// Cesàro (Fejér) mean of degrees n and m.
    Cesaro { file: PathBuf, n: u64, m: u64 },
    /// Circle means along the convergents of alpha against the torus mean.
    Measure {
        file: PathBuf,
        alpha: String,
        /// Number of convergents to evaluate.
        #[arg(long, default_value_t = 12)]
        terms: usize,
    },
}

/// Resolved configuration; flags override `TORALG_*` variables, which
/// override defaults.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub search_bound: u64,
    pub cache_path: Option<PathBuf>,
    pub output: Output,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            search_bound: DEFAULT_BOUND,
            cache_path: None,
            output: Output::Text,
        }
    }
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Outcome of a subcommand: the text to print and the exit status.
struct Done {
    text: String,
    code: i32,
}

/// Run with the process arguments, printing to stdout and stderr.
pub fn run(args: impl IntoIterator<Item = OsString>) -> i32 {
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    run_with(args, &mut out, &mut err)
}

/// Run with explicit output streams.
pub fn run_with(
    args: impl IntoIterator<Item = OsString>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let config = Config {
        search_bound: cli.bound,
        cache_path: cli.cache.clone(),
        output: if cli.json { Output::Json } else { Output::Text },
    };
    match execute(cli.command, &config) {
        Ok(done) => {
            let _ = out.write_all(done.text.as_bytes());
            done.code
        }
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn open_cache(config: &Config) -> Result<PellCache<BigInt>, Failure> {
    match &config.cache_path {
        Some(path) => {
            PellCache::open(path).map_err(|e| Failure(format!("cache {}: {e}", path.display())))
        }
        None => Ok(PellCache::in_memory()),
    }
}

/// Parse errors point at the offending column.
fn parse_alpha(text: &str) -> Result<Quad, Failure> {
    parse::<BigInt>(text).map_err(|e| describe_parse_error(text, &e))
}

fn describe_parse_error(text: &str, e: &QuadError) -> Failure {
    match e {
        QuadError::Syntax { pos, .. } => Failure(format!("{e}\n  {text}\n  {}^", " ".repeat(*pos))),
        _ => Failure(format!("`{text}`: {e}")),
    }
}

fn finish(report: Map<String, Value>, config: &Config, code: i32) -> Result<Done, Failure> {
    Ok(Done {
        text: render(&report, config.output),
        code,
    })
}

fn execute(command: Command, config: &Config) -> Result<Done, Failure> {
    match command {
        Command::Pell { n, rhs, k } => cmd_pell(&n, rhs, k, config),
        Command::Gen { alpha } => cmd_gen(&alpha, config),
        Command::Check { alpha, matrix } => cmd_check(&alpha, &matrix, config),
        Command::Iso { alpha, beta } => cmd_iso(&alpha, &beta, config),
        Command::AutIso { alpha, beta } => cmd_aut_iso(&alpha, &beta, config),
        Command::Conjecture { corpus_file } => cmd_conjecture(&corpus_file, config),
        Command::Corpus(a) => cmd_corpus(a, config),
        Command::Poly(p) => cmd_poly(p, config),
    }
}

fn cmd_pell(n: &str, rhs: i64, k: usize, config: &Config) -> Result<Done, Failure> {
    let n: BigInt = n
        .trim()
        .parse()
        .map_err(|_| Failure(format!("`{n}` is not an integer")))?;
    let rhs = Rhs::from_value(rhs)
        .ok_or_else(|| Failure(format!("rhs must be 1, -1, 4 or -4, not {rhs}")))?;
    if k == 0 {
        return Err(Failure("--k counts from 1".into()));
    }
    let cache = open_cache(config)?;
    let mut r = report::report();
    r.insert("n".into(), int_value(&n));
    r.insert("rhs".into(), Value::from(rhs.value()));
    let sol = if k == 1 {
        cache.fundamental(&n, rhs)?
    } else {
        match enumerate(&n, rhs, k) {
            Ok(s) => Some(s),
            Err(crate::pell::PellError::Unsolvable { .. }) => None,
            Err(e) => return Err(e.into()),
        }
    };
    match sol {
        Some(s) => {
            r.insert("solvable".into(), Value::Bool(true));
            r.insert("x".into(), int_value(s.x()));
            r.insert("y".into(), int_value(s.y()));
        }
        None => {
            r.insert("solvable".into(), Value::Bool(false));
        }
    }
    if rhs == Rhs::MinusOne {
        r.insert(
            "negative_solvable".into(),
            Value::Bool(negative_solvable(&n)?),
        );
    }
    finish(r, config, EXIT_OK)
}

fn route_name(route: GeneratorRoute) -> &'static str {
    match route {
        GeneratorRoute::PureRadical => "pure-radical",
        GeneratorRoute::Shifted => "shifted",
        GeneratorRoute::ShiftedHalf => "shifted-half",
    }
}

fn cmd_gen(alpha_text: &str, config: &Config) -> Result<Done, Failure> {
    let mut r = report::report();
    let alpha = match parse::<BigInt>(alpha_text) {
        Ok(a) => a,
        Err(QuadError::NotQuadratic) => {
            // e.g. sqrt(2)+sqrt(3): irrational but not quadratic
            let v = parse_expression::<BigInt>(alpha_text)
                .map_err(|e| describe_parse_error(alpha_text, &e))?;
            if v.approx() <= 0.0 {
                return Err(Failure(format!("`{alpha_text}` is not positive")));
            }
            r.insert("alpha".into(), Value::String(alpha_text.trim().to_string()));
            r.insert("quadratic".into(), Value::Bool(false));
            r.insert("automorphisms".into(), Value::String("torus only".into()));
            return finish(r, config, EXIT_OK);
        }
        Err(e) => return Err(describe_parse_error(alpha_text, &e)),
    };
    let cache = open_cache(config)?;
    let g = synthesize_with(&alpha, &cache)?;
    let lambda = eigen_check(&g.matrix, &alpha)?;
    let cf = continued_fraction(&alpha);
    r.insert("alpha".into(), Value::String(alpha.to_string()));
    r.insert("generator".into(), matrix_value(&g.matrix));
    r.insert("det".into(), int_value(&g.det()));
    r.insert("eigenvalue".into(), Value::String(lambda.to_string()));
    r.insert("route".into(), Value::String(route_name(g.route).into()));
    r.insert(
        "pell".into(),
        json!({
            "n": int_value(g.pell.n()),
            "rhs": g.pell.rhs().value(),
            "x": int_value(g.pell.x()),
            "y": int_value(g.pell.y()),
        }),
    );
    r.insert(
        "continued_fraction".into(),
        json!({
            "preperiod": cf.preperiod.iter().map(int_value).collect::<Vec<_>>(),
            "period": cf.period.iter().map(int_value).collect::<Vec<_>>(),
        }),
    );
    finish(r, config, EXIT_OK)
}

fn cmd_check(alpha_text: &str, matrix_text: &str, config: &Config) -> Result<Done, Failure> {
    let alpha = parse_alpha(alpha_text)?;
    let a = parse_matrix::<BigInt>(matrix_text).map_err(Failure)?;
    let mut r = report::report();
    r.insert("alpha".into(), Value::String(alpha.to_string()));
    r.insert("matrix".into(), matrix_value(&a));
    let ok = is_automorphism_matrix(&a, &alpha);
    r.insert("automorphism".into(), Value::Bool(ok));
    if ok {
        let cache = open_cache(config)?;
        let g = synthesize_with(&alpha, &cache)?;
        r.insert(
            "eigenvalue".into(),
            Value::String(eigen_check(&a, &alpha)?.to_string()),
        );
        r.insert("generator".into(), matrix_value(&g.matrix));
        match power_of(&a, &g.matrix, &alpha) {
            Some(n) => r.insert("power".into(), Value::from(n)),
            None => {
                return Err(Failure(format!(
                    "{a} is an automorphism matrix but no power of {}",
                    g.matrix
                )))
            }
        };
    }
    finish(r, config, EXIT_OK)
}

fn cmd_iso(alpha_text: &str, beta_text: &str, config: &Config) -> Result<Done, Failure> {
    let alpha = parse_alpha(alpha_text)?;
    let beta = parse_alpha(beta_text)?;
    let mut r = report::report();
    r.insert("alpha".into(), Value::String(alpha.to_string()));
    r.insert("beta".into(), Value::String(beta.to_string()));
    match is_isomorphic(&alpha, &beta) {
        Some(w) => {
            r.insert("isomorphic".into(), Value::Bool(true));
            r.insert("witness".into(), matrix_value(&w.matrix));
            r.insert("verified".into(), Value::Bool(w.verified));
        }
        None => {
            r.insert("isomorphic".into(), Value::Bool(false));
        }
    }
    finish(r, config, EXIT_OK)
}

fn cmd_aut_iso(alpha_text: &str, beta_text: &str, config: &Config) -> Result<Done, Failure> {
    let alpha = parse_alpha(alpha_text)?;
    let beta = parse_alpha(beta_text)?;
    let cache = open_cache(config)?;
    let a = synthesize_with(&alpha, &cache)?.matrix;
    let b = synthesize_with(&beta, &cache)?.matrix;
    let mut r = report::report();
    r.insert("alpha".into(), Value::String(alpha.to_string()));
    r.insert("beta".into(), Value::String(beta.to_string()));
    r.insert("generator_alpha".into(), matrix_value(&a));
    r.insert("generator_beta".into(), matrix_value(&b));
    let code = match aut_isomorphic_generators(&a, &b, config.search_bound)? {
        AutIsoVerdict::Yes {
            conjugator,
            inverted,
        } => {
            r.insert("verdict".into(), Value::String("yes".into()));
            r.insert("conjugator".into(), matrix_value(&conjugator));
            r.insert("inverted".into(), Value::Bool(inverted));
            EXIT_OK
        }
        AutIsoVerdict::No { direct, inverse } => {
            r.insert("verdict".into(), Value::String("no".into()));
            r.insert(
                "reason".into(),
                Value::String(format!("{direct}; against inverse: {inverse}")),
            );
            EXIT_OK
        }
        AutIsoVerdict::Unknown { bound } => {
            r.insert("verdict".into(), Value::String("unknown".into()));
            r.insert("bound".into(), Value::from(bound));
            EXIT_UNKNOWN
        }
    };
    finish(r, config, code)
}

fn verdict_value(v: &ConjugacyVerdict<BigInt>) -> Value {
    match v {
        ConjugacyVerdict::Yes(c) => json!({"verdict": "yes", "conjugator": matrix_value(c)}),
        ConjugacyVerdict::No(m) => json!({"verdict": "no", "reason": m.to_string()}),
        ConjugacyVerdict::Unknown { bound } => json!({"verdict": "unknown", "bound": bound}),
    }
}

fn cmd_conjecture(path: &PathBuf, config: &Config) -> Result<Done, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    let mut corpus = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let q = parse_alpha(line)
            .map_err(|Failure(m)| Failure(format!("{}:{}: {m}", path.display(), i + 1)))?;
        corpus.push(q);
    }
    let cache = open_cache(config)?;
    let scan = conjecture_scan_with(&corpus, config.search_bound, &cache)?;
    let results: Vec<Value> = scan
        .entries
        .iter()
        .map(|e| {
            let mut m = Map::new();
            m.insert("alpha".into(), Value::String(e.alpha.to_string()));
            m.insert("generator".into(), matrix_value(&e.generator));
            m.insert("det".into(), int_value(&e.generator.det()));
            match &e.outcome {
                ConjectureOutcome::NotApplicable => {
                    m.insert(
                        "conjugate_to_inverse".into(),
                        Value::String("not applicable".into()),
                    );
                }
                ConjectureOutcome::Verdict(v) => {
                    let v = verdict_value(v);
                    m.insert("conjugate_to_inverse".into(), v["verdict"].clone());
                    if let Some(c) = v.get("conjugator") {
                        m.insert("conjugator".into(), c.clone());
                    }
                    if let Some(b) = v.get("bound") {
                        m.insert("bound".into(), b.clone());
                    }
                }
            }
            Value::Object(m)
        })
        .collect();
    let code = if scan.unknown > 0 {
        EXIT_UNKNOWN
    } else {
        EXIT_OK
    };
    let text = match config.output {
        Output::Json => {
            let mut r = report::report();
            r.insert("results".into(), Value::Array(results));
            r.insert(
                "counts".into(),
                json!({"yes": scan.yes, "no": scan.no, "unknown": scan.unknown, "not_applicable": scan.not_applicable}),
            );
            render(&r, Output::Json)
        }
        Output::Text => {
            let mut s = render_results(&results, Output::Text);
            s.push_str(&format!(
                "counts: yes={} no={} unknown={} not_applicable={}\n",
                scan.yes, scan.no, scan.unknown, scan.not_applicable
            ));
            s
        }
    };
    Ok(Done { text, code })
}

fn cmd_corpus(a: CorpusArgs, config: &Config) -> Result<Done, Failure> {
    if a.u_max < 0 || a.v_max < 1 || a.w_max < 1 || a.d_max < 2 {
        return Err(Failure(
            "corpus bounds need u >= 0, v >= 1, w >= 1, D >= 2".into(),
        ));
    }
    let bounds = CorpusBounds {
        u_max: a.u_max,
        v_max: a.v_max,
        w_max: a.w_max,
        d_max: a.d_max,
    };
    let items: Vec<Value> = corpus::<BigInt>(bounds)
        .iter()
        .map(|q| Value::String(q.to_string()))
        .collect();
    let text = match config.output {
        Output::Json => {
            let mut r = report::report();
            r.insert("results".into(), Value::Array(items));
            render(&r, Output::Json)
        }
        Output::Text => render_results(&items, Output::Text),
    };
    Ok(Done {
        text,
        code: EXIT_OK,
    })
}

fn read_poly(path: &PathBuf) -> Result<TrigPoly<f64>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    let parsed = if text.trim_start().starts_with('[') {
        fourier::read_json(&text)
    } else {
        fourier::read_text(&text)
    };
    parsed.map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn poly_done(f: &TrigPoly<f64>, config: &Config) -> Result<Done, Failure> {
    let text = match config.output {
        Output::Json => {
            let mut r = report::report();
            r.insert("terms".into(), fourier::write_json(f));
            render(&r, Output::Json)
        }
        Output::Text => fourier::write_text(f),
    };
    Ok(Done {
        text,
        code: EXIT_OK,
    })
}

fn cmd_poly(p: PolyCommand, config: &Config) -> Result<Done, Failure> {
    match p {
        PolyCommand::Member { file, alpha } => {
            let f = read_poly(&file)?;
            let alpha = parse_alpha(&alpha)?;
            let mut r = report::report();
            r.insert("alpha".into(), Value::String(alpha.to_string()));
            r.insert("terms".into(), Value::from(f.len()));
            r.insert(
                "member".into(),
                Value::Bool(fourier::in_algebra(&f, &alpha)),
            );
            finish(r, config, EXIT_OK)
        }
        PolyCommand::Map {
            file,
            matrix,
            angles,
        } => {
            let f = read_poly(&file)?;
            let a = parse_matrix::<BigInt>(&matrix).map_err(Failure)?;
            let t: Vec<f64> = angles
                .split(',')
                .map(|s| s.trim().parse::<f64>())
                .collect::<Result<_, _>>()
                .map_err(|e| Failure(format!("angles `{angles}`: {e}")))?;
            let [t1, t2] = t[..] else {
                return Err(Failure(format!("angles `{angles}`: expected `t1,t2`")));
            };
            let img = fourier::apply_map(&f, &a, &Phase::from_angles(t1, t2))?;
            poly_done(&img, config)
        }
        PolyCommand::Cesaro { file, n, m } => {
            poly_done(&fourier::cesaro(&read_poly(&file)?, n, m), config)
        }
        PolyCommand::Measure { file, alpha, terms } => {
            let f = read_poly(&file)?;
            let alpha = parse_alpha(&alpha)?;
            let threshold = fourier::measure_threshold(&f);
            let cf = continued_fraction(&alpha);
            let cplx = |z: Complex<f64>| json!([z.re, z.im]);
            let rows: Vec<Value> = cf
                .convergents(terms)
                .into_iter()
                .filter(|(p, q)| *p > BigInt::from(0) && *q > BigInt::from(0))
                .map(|(p, q)| {
                    let (pi, qi) = (i64::try_from(&p), i64::try_from(&q));
                    match (pi, qi) {
                        (Ok(pi), Ok(qi)) => {
                            let (mu_k, mu) = fourier::measure_pair(&f, pi, qi);
                            json!({"p": pi, "q": qi, "mu_k": cplx(mu_k), "mu": cplx(mu),
                                   "past_threshold": qi as u64 >= threshold})
                        }
                        _ => json!({"p": int_value(&p), "q": int_value(&q), "overflow": true}),
                    }
                })
                .collect();
            let mut r = report::report();
            r.insert("alpha".into(), Value::String(alpha.to_string()));
            r.insert("threshold_q".into(), Value::from(threshold));
            r.insert("convergents".into(), Value::Array(rows));
            finish(r, config, EXIT_OK)
        }
    }
}
