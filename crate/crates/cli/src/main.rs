//! `isolation-lab`: solve, certify, generate and sweep.
//!
//! Exit codes: 0 ok, 2 parse error, 3 precondition or cap, 4 invalid
//! certificate, 5 bound violated.

mod input;
mod sweep;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use isolation_core::isolation::DEFAULT_SOLVER_CAP;
use isolation_core::report::{CertificateRecord, DEFAULT_EXHAUSTIVE_LIMIT};
use isolation_core::{
    best_sequence_certificate, emit_graph6, gen_gts, gen_hat, gen_tilde, independent_isolation_number,
    isolation_number, sequence_certificate, star_free_certificate, EvalOptions, LabeledExtremal, SolverConfig,
    VertexSet,
};
use thiserror::Error;

use crate::sweep::{Summary, SweepSettings};

const N_CAP_ENV: &str = "ISOLATION_LAB_N_CAP";
const DEFAULT_SWEEP_CAP: usize = 7;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    InvalidCertificate(String),
    #[error("bound violated ({summary})")]
    Violation { summary: Summary, reproducer: String },
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::InvalidCertificate(_) => 4,
            CliError::Violation { .. } => 5,
        }
    }

    pub fn from_core(err: isolation_core::Error, graph: &str) -> Self {
        match err {
            isolation_core::Error::Graph6(e) => CliError::Parse(format!("{graph}: {e}")),
            other => CliError::Precondition(format!("{graph}: {other}")),
        }
    }
}

impl From<isolation_core::Error> for CliError {
    fn from(err: isolation_core::Error) -> Self {
        match err {
            isolation_core::Error::Graph6(e) => CliError::Parse(e.to_string()),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "isolation-lab",
    version,
    about = "Exact K_k-isolation numbers and independent isolating-set certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print ι_k and ι'_k with their lexicographically least witnesses.
    Solve(SolveArgs),
    /// Build and verify an independent isolating set; one JSON line per graph.
    Certify(CertifyArgs),
    /// Emit an extremal graph as graph6.
    Gen(GenArgs),
    /// Check every bound on a corpus or on all small labeled graphs.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// A graph6 string, or a file with one graph6 string per line.
    graph: String,
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Largest connected component solved exactly (default 30, or $ISOLATION_LAB_N_CAP).
    #[arg(long)]
    n_cap: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    #[value(name = "1", alias = "sequence")]
    Sequence,
    #[value(name = "2", alias = "star-free")]
    StarFree,
}

#[derive(Args)]
struct CertifyArgs {
    /// A graph6 string, or a file with one graph6 string per line.
    graph: String,
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// 1 (greedy sequence) or 2 (star-free).
    #[arg(long = "theorem", visible_alias = "construction", value_enum, default_value = "1")]
    construction: Construction,
    /// Star size for construction 2: `auto` or an integer >= 3.
    #[arg(long, default_value = "auto")]
    r: String,
    /// Start from the optimal isolating set with the smallest bound.
    #[arg(long)]
    exhaustive: bool,
    #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_LIMIT)]
    exhaustive_limit: usize,
    /// Largest boundary set dominated exactly instead of greedily.
    #[arg(long)]
    b_exact_threshold: Option<usize>,
    #[arg(long)]
    n_cap: Option<usize>,
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    family: FamilyCommand,
    /// Write the graph6 line here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Write the vertex layout as JSON.
    #[arg(long, global = true)]
    sidecar: Option<PathBuf>,
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// G(t, s) with clique order k.
    Gts { t: usize, s: usize, k: usize },
    /// ℓ disjoint copies of G(t, t²−t+1).
    Tilde { t: usize, ell: usize, k: usize },
    /// ℓ copies of G(t, t²−t+1) chained by paths; needs k >= 3.
    Hat {
        t: usize,
        ell: usize,
        k: usize,
        #[arg(long, default_value_t = 4)]
        path_len: usize,
    },
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Largest k checked (default: max(k, 3)).
    #[arg(long)]
    kmax: Option<usize>,
    /// Largest graph enumerated or accepted (default 7, or $ISOLATION_LAB_N_CAP).
    #[arg(long)]
    n_cap: Option<usize>,
    #[arg(long)]
    connected_only: bool,
    /// graph6 corpus; without it (and without --family) all labeled graphs up to the cap are enumerated.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Extremal family instance such as `gts:2,3,2`, `tilde:2,2,2` or `hat:2,2,3,4`. Repeatable.
    #[arg(long)]
    family: Vec<String>,
    /// JSON-lines report file (default stdout).
    #[arg(long)]
    out: Option<PathBuf>,
    /// CSV summary, one row per graph and k.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    exhaustive: bool,
    #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_LIMIT)]
    exhaustive_limit: usize,
    #[arg(long)]
    b_exact_threshold: Option<usize>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    workers: Option<usize>,
    /// Record per-graph wall time; makes the report non-deterministic.
    #[arg(long)]
    timing: bool,
}

fn default_cap(builtin: usize) -> Result<usize, CliError> {
    match std::env::var(N_CAP_ENV) {
        Ok(value) => value
            .trim()
            .parse()
            .ok()
            .filter(|&cap| cap > 0)
            .ok_or_else(|| CliError::Parse(format!("{N_CAP_ENV}={value:?} is not a positive integer"))),
        Err(_) => Ok(builtin),
    }
}

fn solver_config(n_cap: Option<usize>, b_exact_threshold: Option<usize>) -> Result<SolverConfig, CliError> {
    let mut config = SolverConfig::with_n_cap(match n_cap {
        Some(cap) => cap,
        None => default_cap(DEFAULT_SOLVER_CAP)?,
    });
    if let Some(threshold) = b_exact_threshold {
        config.b_exact_threshold = threshold;
    }
    Ok(config)
}

fn list(set: &VertexSet) -> String {
    let items: Vec<_> = set.iter().map(|v| v.to_string()).collect();
    format!("[{}]", items.join(","))
}

fn open_out(path: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn solve(args: SolveArgs) -> Result<(), CliError> {
    let config = solver_config(args.n_cap, None)?;
    let graphs = input::graphs_from_arg(&args.graph)?;
    let mut out = open_out(None)?;
    for named in graphs {
        let plain = isolation_number(&named.graph, args.k, &config).map_err(|e| CliError::from_core(e, &named.id))?;
        let indep = independent_isolation_number(&named.graph, args.k, &config)
            .map_err(|e| CliError::from_core(e, &named.id))?;
        writeln!(
            out,
            "graph={} k={} iota={} iota'={} witness={} witness'={}",
            named.id,
            args.k,
            plain.value,
            indep.value,
            list(&plain.witness),
            list(&indep.witness)
        )?;
    }
    out.flush()?;
    Ok(())
}

fn certify(args: CertifyArgs) -> Result<(), CliError> {
    let config = solver_config(args.n_cap, args.b_exact_threshold)?;
    let r = match args.r.as_str() {
        "auto" => None,
        text => Some(
            text.parse::<usize>()
                .map_err(|_| CliError::Parse(format!("--r expects `auto` or an integer, got {text:?}")))?,
        ),
    };
    let graphs = input::graphs_from_arg(&args.graph)?;
    let mut out = open_out(None)?;
    let mut invalid = Vec::new();
    for named in graphs {
        let g = &named.graph;
        let cert = match args.construction {
            Construction::Sequence if args.exhaustive => {
                best_sequence_certificate(g, args.k, &config, args.exhaustive_limit)
            }
            Construction::Sequence => sequence_certificate(g, args.k, None, &config),
            Construction::StarFree => star_free_certificate(g, args.k, r, &config),
        }
        .map_err(|e| CliError::from_core(e, &named.id))?;
        let record = CertificateRecord::new(&named.id, &cert);
        serde_json::to_writer(&mut out, &record).map_err(io::Error::from)?;
        writeln!(out)?;
        if !record.valid {
            invalid.push(named.id);
        }
    }
    out.flush()?;
    if invalid.is_empty() {
        Ok(())
    } else {
        Err(CliError::InvalidCertificate(format!("certificate failed verification for {}", invalid.join(" "))))
    }
}

fn build_family(family: &FamilyCommand) -> Result<LabeledExtremal, CliError> {
    Ok(match *family {
        FamilyCommand::Gts { t, s, k } => gen_gts(t, s, k)?,
        FamilyCommand::Tilde { t, ell, k } => gen_tilde(t, ell, k)?,
        FamilyCommand::Hat { t, ell, k, path_len } => gen_hat(t, ell, k, path_len)?,
    })
}

/// Parses `name:a,b,c[,d]` as used by `sweep --family`.
fn parse_family(text: &str) -> Result<FamilyCommand, CliError> {
    let bad = || CliError::Parse(format!("--family expects name:params such as gts:2,3,2, got {text:?}"));
    let (name, params) = text.split_once(':').ok_or_else(bad)?;
    let nums: Vec<usize> = params.split(',').map(|p| p.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?;
    match (name, nums.as_slice()) {
        ("gts", &[t, s, k]) => Ok(FamilyCommand::Gts { t, s, k }),
        ("tilde", &[t, ell, k]) => Ok(FamilyCommand::Tilde { t, ell, k }),
        ("hat", &[t, ell, k]) => Ok(FamilyCommand::Hat { t, ell, k, path_len: 4 }),
        ("hat", &[t, ell, k, path_len]) => Ok(FamilyCommand::Hat { t, ell, k, path_len }),
        _ => Err(bad()),
    }
}

fn gen(args: GenArgs) -> Result<(), CliError> {
    let ex = build_family(&args.family)?;
    let text = emit_graph6(&ex.graph).map_err(|e| CliError::Precondition(e.to_string()))?;
    let mut out = open_out(args.out.as_deref())?;
    writeln!(out, "{text}")?;
    out.flush()?;
    if let Some(path) = &args.sidecar {
        let mut side = BufWriter::new(File::create(path)?);
        serde_json::to_writer_pretty(&mut side, &ex).map_err(io::Error::from)?;
        writeln!(side)?;
        side.flush()?;
    }
    Ok(())
}

fn run_sweep(args: SweepArgs) -> Result<(), CliError> {
    let n_cap = match args.n_cap {
        Some(cap) => cap,
        None => default_cap(DEFAULT_SWEEP_CAP)?,
    };
    if n_cap == 0 || args.k == 0 {
        return Err(CliError::Precondition("--n-cap and --k must be positive".into()));
    }
    let k_max = args.kmax.unwrap_or(args.k.max(3));
    if k_max < args.k {
        return Err(CliError::Precondition(format!("empty k range {}..={k_max}", args.k)));
    }
    let solver = solver_config(Some(n_cap), args.b_exact_threshold)?;
    let settings = SweepSettings {
        solver,
        eval: EvalOptions {
            k_min: args.k,
            k_max,
            exhaustive: args.exhaustive,
            exhaustive_limit: args.exhaustive_limit,
        },
        n_cap,
        timing: args.timing,
    };

    let graphs: Box<dyn Iterator<Item = input::Named>> = if args.corpus.is_some() || !args.family.is_empty() {
        let mut graphs = match &args.corpus {
            Some(path) => input::read_corpus(path)?,
            None => Vec::new(),
        };
        for family in &args.family {
            let ex = build_family(&parse_family(family)?)?;
            let id = emit_graph6(&ex.graph).map_err(|e| CliError::Precondition(e.to_string()))?;
            graphs.push(input::Named { id, graph: ex.graph });
        }
        Box::new(graphs.into_iter())
    } else {
        Box::new(sweep::enumerated(n_cap, args.connected_only)?)
    };

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(workers) = args.workers {
        if workers == 0 {
            return Err(CliError::Precondition("--workers must be positive".into()));
        }
        pool = pool.num_threads(workers);
    }
    let pool = pool.build().map_err(|e| CliError::Precondition(e.to_string()))?;

    let mut out = open_out(args.out.as_deref())?;
    let mut csv = match &args.csv {
        Some(path) => Some(BufWriter::new(File::create(path)?)),
        None => None,
    };
    let result = sweep::run(graphs, &settings, &pool, &mut out, csv.as_mut().map(|c| c as &mut dyn Write));
    if let Some(csv) = csv.as_mut() {
        csv.flush()?;
    }
    let summary = result?;
    // Keep stdout pure JSON lines when reports go there.
    if args.out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let result = match Cli::parse().command {
        Command::Solve(args) => solve(args),
        Command::Certify(args) => certify(args),
        Command::Gen(args) => gen(args),
        Command::Sweep(args) => run_sweep(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            if let CliError::Violation { summary, reproducer } = &err {
                eprintln!("{summary}");
                eprintln!("reproducer: {reproducer}");
            }
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
