use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use mgbracket::bracket::DEFAULT_ORACLE_LIMIT;
use mgbracket::knot::{self, KnotError};
use mgbracket::reduce::{bracket_via_composition, ReduceError};
use mgbracket::{compose, BracketError, Engine, Evaluator, LaurentPoly};

use crate::graph_format::parse_graph;
use crate::random::{Generator, Weights};
use crate::report::{InputDigest, OutputFormat, RunReport};
use crate::verify::Suite;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Limit(String),
    #[error("{0}")]
    Violation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Limit(_) => 2,
            CliError::Violation(_) => 3,
        }
    }
}

impl From<BracketError> for CliError {
    fn from(e: BracketError) -> Self {
        CliError::Limit(e.to_string())
    }
}

impl From<ReduceError> for CliError {
    fn from(e: ReduceError) -> Self {
        match e {
            ReduceError::Bracket(b) => b.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<KnotError> for CliError {
    fn from(e: KnotError) -> Self {
        match e {
            KnotError::Bracket(b) => b.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EngineArg {
    Statesum,
    Recursive,
    Auto,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Statesum => Engine::StateSum,
            EngineArg::Recursive => Engine::Recursive,
            EngineArg::Auto => Engine::Auto,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutArg {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "mgbracket",
    version,
    about = "Bracket polynomials of weighted marked graphs"
)]
struct Args {
    /// Evaluation engine.
    #[arg(long, value_enum, default_value = "auto", global = true)]
    engine: EngineArg,
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    out: OutArg,
    /// Seed for randomized commands.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Largest vertex count the state-sum engine accepts.
    #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT, global = true)]
    limit: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bracket of a graph file.
    Bracket { file: PathBuf },
    /// Bracket, f-polynomial, writhe and Jones polynomial of an Euler code file.
    Jones { file: PathBuf },
    /// Bracket of F * H evaluated through the cut-vertex weights of F.
    Compose {
        f: PathBuf,
        h: PathBuf,
        /// Label of the shared cut vertex.
        #[arg(long, default_value = "a")]
        cut: String,
    },
    /// Run the identity suite on exhaustive small and seeded random graphs.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, hide = true)]
        corrupt_pivot: bool,
    },
    /// Time every engine on seeded random graphs.
    Bench {
        #[arg(long, default_value_t = 12)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn evaluator(args: &Args) -> Evaluator {
    Evaluator::new(args.engine.into()).with_limit(args.limit)
}

fn cmd_bracket(args: &Args, file: &Path) -> Result<RunReport, CliError> {
    let text = read(file)?;
    let g = parse_graph(&text).map_err(|e| CliError::Input(format!("{}: {e}", file.display())))?;
    let mut ev = evaluator(args);
    let mut r = RunReport::new("bracket");
    r.inputs
        .push(InputDigest::of(&file.display().to_string(), &text));
    r.engine = Some(ev.engine.name().to_string());
    r.result = Some(ev.eval(&g)?);
    r.counters = ev.counters;
    Ok(r)
}

fn cmd_jones(args: &Args, file: &Path) -> Result<RunReport, CliError> {
    let text = read(file)?;
    let dgm = knot::parse_euler_code(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", file.display())))?;
    let mut ev = evaluator(args);
    let br = knot::diagram_bracket(&dgm, &mut ev)?;
    let w = knot::writhe(&dgm);
    let f = knot::f_polynomial(&br, w)?;
    let v = knot::jones(&f)?;
    let mut r = RunReport::new("jones");
    r.inputs
        .push(InputDigest::of(&file.display().to_string(), &text));
    r.engine = Some(ev.engine.name().to_string());
    r.poly("bracket", br);
    r.poly("f", f);
    r.text("writhe", w.to_string());
    r.text("jones", v.to_string());
    r.counters = ev.counters;
    Ok(r)
}

fn cmd_compose(args: &Args, fp: &Path, hp: &Path, cut: &str) -> Result<RunReport, CliError> {
    let (ft, ht) = (read(fp)?, read(hp)?);
    let f = parse_graph(&ft).map_err(|e| CliError::Input(format!("{}: {e}", fp.display())))?;
    let h = parse_graph(&ht).map_err(|e| CliError::Input(format!("{}: {e}", hp.display())))?;
    let composed = compose(&f, &h, cut).map_err(|e| CliError::Input(e.to_string()))?;
    let mut ev = evaluator(args);
    let res = bracket_via_composition(&f, &h, cut, &mut ev)?;

    let mut r = RunReport::new("compose");
    r.inputs
        .push(InputDigest::of(&fp.display().to_string(), &ft));
    r.inputs
        .push(InputDigest::of(&hp.display().to_string(), &ht));
    r.engine = Some(ev.engine.name().to_string());
    r.poly("alpha(a)", res.triple.alpha_a.clone());
    r.poly("beta(a)", res.triple.beta_a.clone());
    r.poly("alpha(a_m)", res.triple.alpha_am.clone());
    r.poly("[H']", res.h_prime_value.clone());
    r.poly("[H'_m]", res.h_prime_m_value.clone());
    r.text("subsets (composed)", ev.counters.subsets.to_string());
    let n = composed.len();
    r.text("subsets (direct)", format!("2^{n}"));
    r.counters = ev.counters;
    let mut verdict = None;
    if n <= args.limit {
        let mut direct_ev = Evaluator::new(Engine::StateSum).with_limit(args.limit);
        if let Ok(direct) = direct_ev.eval(&composed) {
            let equal = direct == res.value;
            r.poly("direct", direct);
            r.text("equal", if equal { "yes" } else { "no" });
            verdict = Some(equal);
        }
    }
    r.result = Some(res.value);
    if verdict == Some(false) {
        return Err(CliError::Violation(r.to_text()));
    }
    Ok(r)
}

fn cmd_verify(
    args: &Args,
    max_n: usize,
    trials: usize,
    corrupt: bool,
    err: &mut dyn Write,
) -> Result<RunReport, CliError> {
    if max_n > args.limit {
        return Err(CliError::Limit(format!(
            "max-n {max_n} exceeds the oracle limit {}",
            args.limit
        )));
    }
    let mut suite = Suite::new(args.seed);
    suite.corrupt_pivot = corrupt;
    let outcomes = suite.run_all(max_n, trials);
    let mut r = RunReport::new("verify");
    r.engine = Some("statesum".into());
    let mut failed = Vec::new();
    for o in &outcomes {
        let status = if o.passed() { "pass" } else { "FAIL" };
        r.text(&o.name, format!("{status} ({} instances)", o.instances));
        if let Some(f) = &o.failure {
            failed.push(format!("{}:\n{f}", o.name));
        }
    }
    if !failed.is_empty() {
        let _ = write!(err, "{}", r.to_text());
        return Err(CliError::Violation(failed.join("\n")));
    }
    Ok(r)
}

fn cmd_bench(args: &Args, n: usize, trials: usize) -> Result<RunReport, CliError> {
    let mut gen = Generator::new(args.seed);
    let graphs: Vec<_> = (0..trials)
        .map(|_| gen.graph(n, Weights::Standard))
        .collect();
    let mut r = RunReport::new("bench");
    let mut last: Option<LaurentPoly> = None;
    for engine in [Engine::StateSum, Engine::Recursive, Engine::Auto] {
        let mut ev = Evaluator::new(engine).with_limit(args.limit);
        let start = Instant::now();
        let mut values = Vec::new();
        for g in &graphs {
            match ev.eval(g) {
                Ok(v) => values.push(v),
                Err(e) => {
                    r.text(engine.name(), format!("skipped ({e})"));
                    break;
                }
            }
        }
        if values.len() == graphs.len() {
            let ms = start.elapsed().as_secs_f64() * 1000.0;
            r.text(
                engine.name(),
                format!(
                    "{ms:.1} ms, {} subsets, {} recursion nodes, {} reductions",
                    ev.counters.subsets, ev.counters.recursion_nodes, ev.counters.reductions
                ),
            );
            last = values.pop();
        }
    }
    r.result = last;
    Ok(r)
}

fn dispatch(args: &Args, err: &mut dyn Write) -> Result<RunReport, CliError> {
    match &args.command {
        Command::Bracket { file } => cmd_bracket(args, file),
        Command::Jones { file } => cmd_jones(args, file),
        Command::Compose { f, h, cut } => cmd_compose(args, f, h, cut),
        Command::Verify {
            max_n,
            trials,
            corrupt_pivot,
        } => cmd_verify(args, *max_n, *trials, *corrupt_pivot, err),
        Command::Bench { n, trials } => cmd_bench(args, *n, *trials),
    }
}

/// Parse `argv`, run the command, write the report, and return the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let start = Instant::now();
    match dispatch(&args, err) {
        Ok(mut report) => {
            report.wall = start.elapsed();
            let format = match args.out {
                OutArg::Text => OutputFormat::Text,
                OutArg::Json => OutputFormat::Json,
            };
            let _ = write!(out, "{}", report.render(format));
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
