use std::fmt::Write as _;
use std::io::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tempres::dispatch::{self, Algorithm, DispatchOptions, Pool};
use tempres::generators::{self, LabelDomain};
use tempres::io::{self, Instance};
use tempres::periodic;
use tempres::reductions::{self, BudgetRule, ThreeDMInstance};
use tempres::{check_resolving, Error, ResolutionCertificate, TemporalGraph, Verdict};

#[derive(Parser)]
#[command(name = "tempres", version, about = "Minimum resolving sets of temporal graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a minimum resolving set.
    Solve(SolveArgs),
    /// Check whether a landmark set is resolving.
    Verify(VerifyArgs),
    /// Write a seeded random or constructed instance.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Build a hardness-reduction gadget from an instance file.
    Reduce(ReduceArgs),
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value = "auto", value_parser = parse_algorithm)]
    algorithm: Algorithm,
    #[arg(long, value_enum, default_value_t = PoolArg::All)]
    pool: PoolArg,
    /// Scan a finite path from its last vertex instead of its first.
    #[arg(long)]
    reverse: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Lift the size limit on exhaustive search.
    #[arg(long)]
    unsafe_no_guard: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    input: PathBuf,
    /// Landmarks, separated by commas or spaces.
    #[arg(long)]
    set: String,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum PoolArg {
    Leaves,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReductionKind {
    #[value(name = "3dm-substar")]
    Substar,
    #[value(name = "3dm-tree")]
    Tree,
    #[value(name = "3dm-tree-intervals")]
    TreeIntervals,
    AdjacencyComplete,
}

#[derive(Clone, Copy, ValueEnum)]
enum BudgetArg {
    Proof,
    Statement,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(value_enum)]
    kind: ReductionKind,
    #[arg(long)]
    input: PathBuf,
    /// Only meaningful for 3dm-substar.
    #[arg(long, value_enum)]
    budget: Option<BudgetArg>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Seeded {
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Labels {
    /// Finite labels in 1..=MAX.
    #[arg(long, conflicts_with = "period")]
    label_max: Option<u64>,
    /// Periodic residues in 1..=PERIOD.
    #[arg(long)]
    period: Option<u64>,
}

impl Labels {
    fn domain(&self, default_max: u64) -> LabelDomain {
        match (self.label_max, self.period) {
            (_, Some(period)) => LabelDomain::Periodic { period },
            (max, None) => LabelDomain::Finite {
                max: max.unwrap_or(default_max),
            },
        }
    }
}

#[derive(Subcommand)]
enum Family {
    /// Path with one label per edge.
    Path {
        #[command(flatten)]
        seeded: Seeded,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        label_max: u64,
    },
    /// Star with one label per edge.
    Star {
        #[command(flatten)]
        seeded: Seeded,
        #[arg(long)]
        leaves: usize,
        #[arg(long, default_value_t = 6)]
        label_max: u64,
    },
    SubdividedStar {
        #[command(flatten)]
        seeded: Seeded,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        max_branch_len: usize,
        #[command(flatten)]
        labels: Labels,
    },
    PeriodicTree {
        #[command(flatten)]
        seeded: Seeded,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        period: u64,
    },
    PeriodicCycle {
        #[command(flatten)]
        seeded: Seeded,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        period: u64,
    },
    /// Each pair joined with probability EDGE_PROB.
    Graph {
        #[command(flatten)]
        seeded: Seeded,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        edge_prob: f64,
        #[arg(long, default_value_t = 1)]
        max_labels: usize,
        #[command(flatten)]
        labels: Labels,
    },
    #[command(name = "3dm")]
    ThreeDM {
        #[command(flatten)]
        seeded: Seeded,
        #[arg(long)]
        p_size: u32,
        #[arg(long)]
        triples: usize,
        #[arg(long)]
        ground: u32,
    },
    /// Periodic complete graph resolved by its first B vertices.
    CompleteTight {
        #[arg(long)]
        b: usize,
        #[arg(long)]
        period: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Periodic complete graph needing all but one vertex.
    CompleteWorst {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        period: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// 2-periodic complete binary tree with alternating residues.
    BinaryTreeAlternating {
        #[arg(long)]
        levels: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// 2-periodic complete binary tree with a single residue.
    BinaryTreeUniform {
        #[arg(long)]
        levels: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse()
}

/// Input problems map to exit 2; a tripped guard maps to exit 3.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        let code = match error.downcast_ref::<Error>() {
            Some(Error::GuardExceeded(_)) => 3,
            _ => 2,
        };
        Failure { code, error }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        anyhow::Error::new(e).into()
    }
}

fn read_instance(path: &Path) -> anyhow::Result<Instance> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    io::parse_instance(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_graph(path: &Path) -> anyhow::Result<TemporalGraph> {
    match read_instance(path)? {
        Instance::Graph(g) => Ok(g),
        Instance::ThreeDM(_) => bail!("{} holds a 3DM instance, expected a temporal graph", path.display()),
    }
}

fn read_3dm(path: &Path) -> anyhow::Result<ThreeDMInstance> {
    match read_instance(path)? {
        Instance::ThreeDM(i) => Ok(i),
        Instance::Graph(_) => bail!("{} holds a temporal graph, expected a 3DM instance", path.display()),
    }
}

fn emit(text: &str, output: Option<&Path>) -> anyhow::Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            // a closed pipe (e.g. `| head`) is not an error
            match std::io::stdout().write_all(text.as_bytes()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e).context("writing stdout"),
                _ => Ok(()),
            }
        }
    }
}

fn parse_set(spec: &str) -> anyhow::Result<Vec<usize>> {
    let set = spec
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| anyhow!("invalid vertex `{t}` in --set")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    if set.is_empty() {
        bail!("--set is empty");
    }
    Ok(set)
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn verdict_line(v: &Verdict) -> String {
    match v {
        Verdict::Resolving => "resolving".into(),
        Verdict::NotReaching { vertex } => format!("not-reaching {vertex}"),
        Verdict::NotSeparating { u, v } => format!("not-separating {u} {v}"),
    }
}

fn certificate_text(cert: &ResolutionCertificate) -> String {
    let mut out = String::new();
    writeln!(out, "landmarks: {}", join(&cert.landmarks)).unwrap();
    writeln!(out, "verdict: {}", verdict_line(&cert.verdict)).unwrap();
    writeln!(out, "vectors:").unwrap();
    for (v, vec) in cert.vectors.iter().enumerate() {
        writeln!(out, "  {v}: {vec}").unwrap();
    }
    out
}

#[derive(Serialize)]
struct SolveReport<'a> {
    algorithm: Algorithm,
    size: usize,
    set: &'a [usize],
    certificate: &'a ResolutionCertificate,
}

fn solve(args: SolveArgs) -> Result<u8, Failure> {
    let g = read_graph(&args.input)?;
    let opts = DispatchOptions {
        pool: match args.pool {
            PoolArg::Leaves => Pool::Leaves,
            PoolArg::All => Pool::All,
        },
        jobs: args.jobs,
        unsafe_no_guard: args.unsafe_no_guard,
        reverse: args.reverse,
    };
    let sol = dispatch::solve(&g, args.algorithm, &opts)?;
    let cert = check_resolving(&g, &sol.set)?;
    let text = if args.json {
        let report = SolveReport {
            algorithm: sol.algorithm,
            size: sol.set.len(),
            set: &sol.set,
            certificate: &cert,
        };
        serde_json::to_string_pretty(&report).context("encoding report")? + "\n"
    } else {
        format!(
            "algorithm: {}\nsize: {}\nset: {}\n{}",
            sol.algorithm,
            sol.set.len(),
            join(&sol.set),
            certificate_text(&cert)
        )
    };
    emit(&text, None)?;
    if !cert.is_resolving() {
        eprintln!("error: solver output failed verification");
        return Ok(1);
    }
    Ok(0)
}

fn verify(args: VerifyArgs) -> Result<u8, Failure> {
    let g = read_graph(&args.input)?;
    let set = parse_set(&args.set)?;
    let cert = check_resolving(&g, &set)?;
    let text = if args.json {
        serde_json::to_string_pretty(&cert).context("encoding certificate")? + "\n"
    } else {
        certificate_text(&cert)
    };
    emit(&text, None)?;
    Ok(if cert.is_resolving() { 0 } else { 1 })
}

fn generate(family: Family) -> Result<u8, Failure> {
    let (text, output) = match family {
        Family::Path { seeded, n, label_max } => {
            let (g, _) = generators::random_temporal_path(n, label_max, seeded.seed)?;
            (io::serialize_graph(&g), seeded.output)
        }
        Family::Star { seeded, leaves, label_max } => {
            let g = generators::random_star(leaves, label_max, seeded.seed)?;
            (io::serialize_graph(&g), seeded.output)
        }
        Family::SubdividedStar {
            seeded,
            degree,
            max_branch_len,
            labels,
        } => {
            let (g, _) =
                generators::random_subdivided_star(degree, max_branch_len, labels.domain(2), seeded.seed)?;
            (io::serialize_graph(&g), seeded.output)
        }
        Family::PeriodicTree { seeded, n, period } => {
            let g = generators::random_periodic_tree(n, period, seeded.seed)?;
            (io::serialize_graph(&g), seeded.output)
        }
        Family::PeriodicCycle { seeded, n, period } => {
            let g = generators::random_periodic_cycle(n, period, seeded.seed)?;
            (io::serialize_graph(&g), seeded.output)
        }
        Family::Graph {
            seeded,
            n,
            edge_prob,
            max_labels,
            labels,
        } => {
            let g = generators::random_temporal_graph(n, edge_prob, max_labels, labels.domain(5), seeded.seed)?;
            (io::serialize_graph(&g), seeded.output)
        }
        Family::ThreeDM {
            seeded,
            p_size,
            triples,
            ground,
        } => {
            let inst = generators::random_3dm(p_size, triples, ground, seeded.seed)?;
            (io::serialize_3dm(&inst), seeded.output)
        }
        Family::CompleteTight { b, period, output } => {
            let (g, set) = periodic::build_complete_tight(b, period)?;
            (format!("# resolving set: {}\n{}", join(&set), io::serialize_graph(&g)), output)
        }
        Family::CompleteWorst { n, period, output } => {
            (io::serialize_graph(&periodic::build_complete_worst(n, period)?), output)
        }
        Family::BinaryTreeAlternating { levels, output } => {
            let (g, set) = periodic::build_binary_tree_alternating(levels)?;
            (format!("# resolving set: {}\n{}", join(&set), io::serialize_graph(&g)), output)
        }
        Family::BinaryTreeUniform { levels, output } => {
            (io::serialize_graph(&periodic::build_binary_tree_uniform(levels)?), output)
        }
    };
    emit(&text, output.as_deref())?;
    Ok(0)
}

fn reduce(args: ReduceArgs) -> Result<u8, Failure> {
    let substar = matches!(args.kind, ReductionKind::Substar);
    if args.budget.is_some() && !substar {
        return Err(anyhow!("--budget only applies to 3dm-substar").into());
    }
    let (graph, budget) = match args.kind {
        ReductionKind::AdjacencyComplete => {
            let g = read_graph(&args.input)?;
            (reductions::reduce_adjacency_to_complete(&g.underlying())?, None)
        }
        kind => {
            let inst = read_3dm(&args.input)?;
            let red = match kind {
                ReductionKind::Substar => {
                    let rule = match args.budget {
                        Some(BudgetArg::Statement) => BudgetRule::Statement,
                        _ => BudgetRule::Proof,
                    };
                    reductions::reduce_3dm_to_substar(&inst, rule)?
                }
                ReductionKind::Tree => reductions::reduce_3dm_to_tree(&inst)?,
                _ => reductions::reduce_3dm_to_tree_intervals(&inst)?,
            };
            (red.graph, Some(red.budget))
        }
    };
    let mut text = String::new();
    if let Some(b) = budget {
        writeln!(text, "# budget: {b}").unwrap();
    }
    text.push_str(&io::serialize_graph(&graph));
    emit(&text, args.output.as_deref())?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => solve(args),
        Command::Verify(args) => verify(args),
        Command::Generate { family } => generate(family),
        Command::Reduce(args) => reduce(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
