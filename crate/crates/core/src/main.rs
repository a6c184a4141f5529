use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use vckern::blocking::{self, ExactVc, OptSolver};
use vckern::elimination;
use vckern::gadgets;
use vckern::graph::{Graph, VertexSet};
use vckern::io::{self, ParsedInput};
use vckern::kernelize::{self, Budget};
use vckern::oracle::ClassOracle;
use vckern::solver;
use vckern::verify;

/// Vertex cover kernelization toolkit: blocking sets, elimination
/// distance, gadget towers, and the component reduction pipeline.
#[derive(Parser)]
#[command(name = "vckern", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Record,
}

#[derive(Args)]
struct Common {
    /// Output style: human-readable text or machine-readable records.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a vertex cover instance exactly.
    Solve {
        input: PathBuf,
        /// Base class; members are solved through the class solver.
        #[arg(long)]
        oracle: Option<String>,
        /// With an oracle, also try a bounded-elimination-distance solve.
        #[arg(long)]
        depth: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Test whether a vertex set is a (minimal) blocking set.
    Blocking {
        input: PathBuf,
        /// Comma-separated vertex ids.
        #[arg(long)]
        set: String,
        #[arg(long)]
        oracle: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Maximum size of a minimal blocking set, by enumeration.
    Beta {
        input: PathBuf,
        /// Stop the enumeration at sets of size cap + 1.
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Elimination distance to a base class.
    Ed {
        input: PathBuf,
        #[arg(long)]
        oracle: String,
        /// Report `exceeds` beyond this bound.
        #[arg(long)]
        depth: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Emit an extremal blocking-set tower as instance plus witness files.
    Gadget {
        #[arg(long)]
        oracle: String,
        #[arg(long)]
        depth: usize,
        /// Output prefix; writes <out>.gr and <out>.witness.
        #[arg(long)]
        out: PathBuf,
        /// Skip the elimination-distance re-checks while building.
        #[arg(long)]
        no_verify: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Encode a uniform hypergraph cover instance as a modulator instance.
    Transform {
        input: PathBuf,
        #[arg(long)]
        k: usize,
        /// Gadget class; its base member supplies the per-edge gadget.
        #[arg(long)]
        oracle: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Run the depth reduction pipeline down to a depth-0 instance.
    Kernelize {
        input: PathBuf,
        /// Print the per-level reduction traces.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Run a named self-check suite (or `all`).
    Verify {
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
}

enum CliError {
    /// Bad usage, unreadable or malformed input: exit 2.
    Usage(String),
    /// A verification or self-check failed: exit 1.
    Failed(String),
}

impl From<vckern::Error> for CliError {
    fn from(e: vckern::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &PathBuf) -> Result<Graph, CliError> {
    io::parse_graph(&read(path)?).map_err(|e| CliError::Usage(e.to_string()))
}

fn parse_oracle(s: &str) -> Result<ClassOracle, CliError> {
    ClassOracle::parse(s).ok_or_else(|| CliError::Usage(format!("unknown class tag `{s}`")))
}

fn parse_set(s: &str) -> Result<VertexSet, CliError> {
    let mut out = VertexSet::new();
    for tok in s.split(',').filter(|t| !t.trim().is_empty()) {
        let v = tok
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("bad vertex id `{tok}`")))?;
        out.insert(v);
    }
    Ok(out)
}

fn kv(format: Format, key: &str, value: impl std::fmt::Display) {
    match format {
        Format::Text => println!("{key}: {value}"),
        Format::Record => println!("{key} {value}"),
    }
}

fn set_words(s: &VertexSet) -> String {
    if s.is_empty() {
        "-".to_string()
    } else {
        s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
    }
}

fn cmd_solve(
    input: PathBuf,
    oracle: Option<String>,
    depth: Option<usize>,
    format: Format,
) -> Result<(), CliError> {
    let parsed = io::parse_instance(&read(&input)?).map_err(|e| CliError::Usage(e.to_string()))?;
    let g = match &parsed {
        ParsedInput::Graph(g) => g.clone(),
        ParsedInput::Instance(inst) => inst.graph().clone(),
        ParsedInput::Hypergraph(_) => {
            return Err(CliError::Usage(
                "solve expects a graph or modulator instance".into(),
            ))
        }
    };
    let oracle = oracle.as_deref().map(parse_oracle).transpose()?;
    let (cover, method) = match oracle {
        Some(orc) if orc.member(&g) => (orc.solve_in_class(&g), "class"),
        Some(orc) => match depth.and_then(|d| elimination::elimination_forest(&g, &orc, d)) {
            Some(forest) => (
                elimination::solve_vc_bounded_ed(&g, &forest, &orc)?,
                "bounded-ed",
            ),
            None => (
                solver::solve_vc_exact(&g, None).expect("no budget"),
                "exact",
            ),
        },
        None => (
            solver::solve_vc_exact(&g, None).expect("no budget"),
            "exact",
        ),
    };
    kv(format, "opt", cover.size());
    kv(format, "cover", set_words(cover.set()));
    kv(format, "method", method);
    if let ParsedInput::Instance(inst) = &parsed {
        if let Budget::Value(k) = inst.k() {
            kv(format, "answer", if cover.size() <= k { "yes" } else { "no" });
        }
    }
    Ok(())
}

fn cmd_blocking(
    input: PathBuf,
    set: String,
    oracle: Option<String>,
    format: Format,
) -> Result<(), CliError> {
    let g = read_graph(&input)?;
    let y = parse_set(&set)?;
    let oracle = oracle.as_deref().map(parse_oracle).transpose()?;
    let solver_ref: &dyn OptSolver = match &oracle {
        Some(orc) => orc,
        None => &ExactVc,
    };
    let verdict = blocking::is_blocking_set(&g, &y, solver_ref)?;
    kv(format, "blocking", verdict.is_blocking);
    kv(format, "deficit", verdict.deficit);
    if verdict.is_blocking {
        let minimal = blocking::is_minimal_blocking_set(&g, &y, solver_ref)?;
        kv(format, "minimal", minimal);
    }
    Ok(())
}

fn cmd_beta(input: PathBuf, cap: Option<usize>, format: Format) -> Result<(), CliError> {
    let g = read_graph(&input)?;
    let beta = blocking::max_minimal_blocking_set_size(&g, &ExactVc, cap);
    kv(format, "beta", beta.value);
    kv(format, "truncated", beta.truncated);
    Ok(())
}

fn cmd_ed(input: PathBuf, oracle: String, depth: usize, format: Format) -> Result<(), CliError> {
    let g = read_graph(&input)?;
    let orc = parse_oracle(&oracle)?;
    match elimination::elimination_distance(&g, &orc, depth) {
        elimination::EdOutcome::Within(d) => {
            kv(format, "ed", d);
            let forest = elimination::elimination_forest(&g, &orc, depth)
                .expect("distance is within the bound");
            print!("{}", io::emit_forest(&forest));
        }
        elimination::EdOutcome::Exceeds => kv(format, "ed", format!("exceeds {depth}")),
    }
    Ok(())
}

fn cmd_gadget(
    oracle: String,
    depth: usize,
    out: PathBuf,
    no_verify: bool,
    format: Format,
) -> Result<(), CliError> {
    if depth == 0 {
        return Err(CliError::Usage("gadget depth must be at least 1".into()));
    }
    let orc = parse_oracle(&oracle)?;
    let base = gadgets::base_witness(&orc)?;
    let witness = gadgets::build_lb_tower(&orc, &base, depth, !no_verify)
        .map_err(|e| CliError::Failed(e.to_string()))?;
    let graph_path = out.with_extension("gr");
    let witness_path = out.with_extension("witness");
    let sidecar = format!(
        "oracle {}\ned {}\nopt {}\nblocking {}\n",
        witness.oracle,
        witness.claimed_ed,
        witness.claimed_opt,
        set_words(&witness.blocking_set)
    );
    std::fs::write(&graph_path, io::emit_graph(&witness.graph))
        .map_err(|e| CliError::Usage(format!("{}: {e}", graph_path.display())))?;
    std::fs::write(&witness_path, sidecar)
        .map_err(|e| CliError::Usage(format!("{}: {e}", witness_path.display())))?;
    kv(format, "blocking_size", witness.blocking_set.len());
    kv(format, "opt", witness.claimed_opt);
    kv(format, "ed", witness.claimed_ed);
    kv(format, "graph", graph_path.display());
    kv(format, "witness", witness_path.display());
    Ok(())
}

fn cmd_transform(
    input: PathBuf,
    k: usize,
    oracle: String,
    out: Option<PathBuf>,
    format: Format,
) -> Result<(), CliError> {
    let hyp = io::parse_hypergraph(&read(&input)?).map_err(|e| CliError::Usage(e.to_string()))?;
    let orc = parse_oracle(&oracle)?;
    let base = gadgets::base_witness(&orc)?;
    if base.blocking_set.len() != hyp.arity() {
        return Err(CliError::Usage(format!(
            "gadget blocking set has size {} but the hypergraph is {}-uniform",
            base.blocking_set.len(),
            hyp.arity()
        )));
    }
    let inst = gadgets::transform_hypergraph_vc(&hyp, k, &base.graph, &base.blocking_set, &orc)?;
    let text = io::emit_modulator_instance(&inst);
    match out {
        Some(path) => {
            std::fs::write(&path, &text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            kv(format, "instance", path.display());
        }
        None => print!("{text}"),
    }
    let Budget::Value(kp) = inst.k() else {
        unreachable!("transform budgets are explicit")
    };
    kv(format, "k", kp);
    kv(format, "n", inst.graph().n());
    Ok(())
}

fn cmd_kernelize(
    input: PathBuf,
    trace: bool,
    out: Option<PathBuf>,
    format: Format,
) -> Result<(), CliError> {
    let parsed = io::parse_instance(&read(&input)?).map_err(|e| CliError::Usage(e.to_string()))?;
    let ParsedInput::Instance(inst) = parsed else {
        return Err(CliError::Usage("kernelize expects a modulator instance".into()));
    };
    let (reduced, traces) = kernelize::kernelize_to_base(&inst)?;
    if trace {
        for (level, t) in traces.iter().enumerate() {
            kv(format, "level", level);
            kv(format, "chunks", t.chunk_count);
            kv(format, "aux_edges", t.aux_edge_count);
            kv(format, "violators", t.violator_chunks.len());
            for z in &t.violator_chunks {
                kv(format, "violator", set_words(z));
            }
            for (z, c) in &t.matching {
                kv(format, "matched", format!("{} / {}", set_words(z), set_words(c)));
            }
            for c in &t.deleted_components {
                kv(format, "deleted", set_words(c));
            }
            kv(format, "k_decrement", t.k_decrement);
        }
    }
    kv(
        format,
        "components",
        {
            let (rest, _) = reduced
                .graph()
                .remove_vertices(reduced.modulator())
                .expect("modulator in range");
            rest.connected_components().len()
        },
    );
    kv(format, "modulator_size", reduced.modulator().len());
    let text = io::emit_modulator_instance(&reduced);
    match out {
        Some(path) => {
            std::fs::write(&path, &text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            kv(format, "instance", path.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_verify(suite: String, seed: u64, format: Format) -> Result<(), CliError> {
    let reports = verify::run_suite(&suite, seed)
        .ok_or_else(|| CliError::Usage(format!("unknown suite `{suite}`")))?;
    let mut failed = 0;
    for rep in &reports {
        match format {
            Format::Text => println!("{}", rep.summary()),
            Format::Record => println!(
                "suite {} checks {} failures {}",
                rep.name,
                rep.cases,
                rep.failures.len()
            ),
        }
        for f in rep.failures.iter().take(5) {
            match format {
                Format::Text => println!("  {f}"),
                Format::Record => println!("failure {f}"),
            }
        }
        failed += rep.failures.len();
    }
    if failed > 0 {
        return Err(CliError::Failed(format!("{failed} checks failed")));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve {
            input,
            oracle,
            depth,
            common,
        } => cmd_solve(input, oracle, depth, common.format),
        Command::Blocking {
            input,
            set,
            oracle,
            common,
        } => cmd_blocking(input, set, oracle, common.format),
        Command::Beta { input, cap, common } => cmd_beta(input, cap, common.format),
        Command::Ed {
            input,
            oracle,
            depth,
            common,
        } => cmd_ed(input, oracle, depth, common.format),
        Command::Gadget {
            oracle,
            depth,
            out,
            no_verify,
            common,
        } => cmd_gadget(oracle, depth, out, no_verify, common.format),
        Command::Transform {
            input,
            k,
            oracle,
            out,
            common,
        } => cmd_transform(input, k, oracle, out, common.format),
        Command::Kernelize {
            input,
            trace,
            out,
            common,
        } => cmd_kernelize(input, trace, out, common.format),
        Command::Verify { suite, seed, common } => cmd_verify(suite, seed, common.format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed(msg)) => {
            eprintln!("failed: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
