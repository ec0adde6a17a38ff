use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ochromatic::bounds::{bounds_report, hypercube_report};
use ochromatic::chromatic::{is_oriented_colouring, ochi_exact, ochi_graph_exact, ochi_heuristic, Budget};
use ochromatic::experiment::{run_experiment, ExperimentConfig};
use ochromatic::graph::io::{parse_graph, write_colouring, write_graph, GraphFile};
use ochromatic::graph::{enumerate_orientations, gen_basic, gen_hypercube, gen_k11n_oriented, BasicKind};
use ochromatic::oclique::{lemma2_digraph, pair_diameter, verify_lemma2, Diameter};
use ochromatic::{Error, OrientedGraph, SearchResult};
use serde_json::json;

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_ASSERTION: u8 = 4;

#[derive(Parser)]
#[command(name = "ochromatic", version, about = "Oriented chromatic numbers, ocliques and their bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph or digraph file and print n, m, Δ.
    Gen(GenArgs),
    /// Oriented chromatic number of a digraph, or of a graph over all orientations.
    Chi(ChiArgs),
    /// Lower and upper bounds on χo(G) for a graph or a hypercube.
    Bounds(BoundsArgs),
    /// Decide whether a digraph has pair-diameter at most 2.
    OcliqueCheck(OcliqueArgs),
    /// Build the regular oclique family member for p and check its properties.
    VerifyLemma2(Lemma2Args),
    /// Random orientations of a hypercube, solved heuristically and exactly.
    Experiment(ExperimentArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Hypercube,
    Path,
    Cycle,
    Complete,
    Star,
    Lemma2,
    K11nOriented,
}

#[derive(Args)]
struct GenArgs {
    kind: GenKind,
    /// Hypercube dimension.
    #[arg(long)]
    d: Option<u32>,
    /// Vertex count for path, cycle, complete and star; leaf count for k11n-oriented.
    #[arg(long)]
    n: Option<usize>,
    /// Family parameter for lemma2.
    #[arg(long)]
    p: Option<usize>,
    /// Output file; the graph goes to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ChiArgs {
    file: PathBuf,
    /// Backtracking search (the default).
    #[arg(long, conflicts_with = "heuristic")]
    exact: bool,
    /// Seeded greedy colouring; an upper bound only.
    #[arg(long)]
    heuristic: bool,
    /// For an undirected input, take the maximum over every orientation.
    #[arg(long)]
    all_orientations: bool,
    /// Search node budget (per orientation).
    #[arg(long, env = "OCHI_BUDGET", default_value_t = Budget::DEFAULT_NODES)]
    budget: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the witness colouring here.
    #[arg(long)]
    witness_out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(required_unless_present = "hypercube", conflicts_with = "hypercube")]
    file: Option<PathBuf>,
    /// Evaluate for Q_d from its counts alone.
    #[arg(long, value_name = "D")]
    hypercube: Option<u32>,
    /// Slack for the asymptotic density bound.
    #[arg(long)]
    epsilon: Option<f64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct OcliqueArgs {
    file: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct Lemma2Args {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct ExperimentArgs {
    #[arg(long)]
    d: u32,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, env = "OCHI_BUDGET", default_value_t = Budget::DEFAULT_NODES)]
    budget: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    out: Format,
    /// Output file; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    threads: Option<usize>,
    /// Fill the millis column with wall-clock time.
    #[arg(long)]
    timing: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn silent(code: u8) -> Self {
        Failure {
            code,
            message: String::new(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Parse { .. }) { EXIT_PARSE } else { EXIT_USAGE };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read_graph(path: &Path) -> Result<GraphFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_PARSE,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_graph(&text).map_err(|e| Failure {
        code: EXIT_PARSE,
        message: format!("{}: {e}", path.display()),
    })
}

fn write_output(path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn gen(args: GenArgs) -> Outcome {
    let need_n = || args.n.ok_or_else(|| Failure::usage("this kind needs --n"));
    let basic = |kind| -> Result<GraphFile, Failure> { Ok(GraphFile::Undirected(gen_basic(kind, need_n()?)?)) };
    let file = match args.kind {
        GenKind::Hypercube => {
            let d = args.d.ok_or_else(|| Failure::usage("hypercube needs --d"))?;
            GraphFile::Undirected(gen_hypercube(d)?)
        }
        GenKind::Path => basic(BasicKind::Path)?,
        GenKind::Cycle => basic(BasicKind::Cycle)?,
        GenKind::Complete => basic(BasicKind::Complete)?,
        GenKind::Star => basic(BasicKind::Star)?,
        GenKind::Lemma2 => {
            let p = args.p.ok_or_else(|| Failure::usage("lemma2 needs --p"))?;
            GraphFile::Oriented(lemma2_digraph(p)?)
        }
        GenKind::K11nOriented => GraphFile::Oriented(gen_k11n_oriented(need_n()?)?),
    };
    let (n, m, delta) = match &file {
        GraphFile::Undirected(g) => (g.n(), g.m(), g.max_degree()),
        GraphFile::Oriented(d) => (d.n(), d.m(), d.underlying().max_degree()),
    };
    let summary = format!("n = {n}, m = {m}, Δ = {delta}");
    match &args.out {
        Some(path) => {
            write_output(Some(path), &write_graph(&file))?;
            println!("{summary}");
        }
        None => {
            print!("{}", write_graph(&file));
            eprintln!("{summary}");
        }
    }
    Ok(())
}

/// The best result over every orientation, by the greedy colouring.
fn heuristic_all(g: &ochromatic::UndirectedGraph, seed: u64) -> Result<SearchResult, Failure> {
    let mut best: Option<SearchResult> = None;
    let mut nodes = 0;
    for (mask, d) in enumerate_orientations(g)? {
        let mut r = ochi_heuristic(&d, seed);
        nodes += r.stats.nodes;
        if best.as_ref().is_none_or(|b| r.value > b.value) {
            r.orientation = Some(mask);
            best = Some(r);
        }
    }
    let mut best = best.expect("at least one orientation");
    best.stats.nodes = nodes;
    Ok(best)
}

fn chi(args: ChiArgs) -> Outcome {
    let budget = Budget::nodes(args.budget);
    let exact = !args.heuristic;
    let (kind, result, digraph): (&str, SearchResult, Option<OrientedGraph>) = match read_graph(&args.file)? {
        GraphFile::Oriented(d) => {
            if args.all_orientations {
                return Err(Failure::usage("--all-orientations needs an undirected ('p edge') input"));
            }
            let r = if exact { ochi_exact(&d, budget) } else { ochi_heuristic(&d, args.seed) };
            ("digraph", r, Some(d))
        }
        GraphFile::Undirected(g) => {
            if !args.all_orientations {
                return Err(Failure::usage(
                    "undirected input: pass --all-orientations to compute χo(G), or supply a 'p oriented' file",
                ));
            }
            let r = if exact { ochi_graph_exact(&g, budget)? } else { heuristic_all(&g, args.seed)? };
            let d = r.orientation.map(|mask| ochromatic::graph::orient_bits(&g, mask)).transpose()?;
            ("graph", r, d)
        }
    };
    if let Some(d) = &digraph {
        let valid = is_oriented_colouring(d, &result.witness)?;
        if !valid {
            return Err(Failure {
                code: EXIT_ASSERTION,
                message: "internal error: witness colouring failed revalidation".into(),
            });
        }
    }

    if let Some(path) = &args.witness_out {
        let mut text = String::new();
        if let Some(mask) = result.orientation {
            text.push_str(&format!("c orientation-mask {mask}\n"));
        }
        text.push_str(&write_colouring(&result.witness));
        write_output(Some(path), &text)?;
    }

    let mode = if exact { "exact" } else { "heuristic" };
    let status = if result.completed {
        "exact"
    } else if exact {
        "budget exhausted"
    } else {
        "upper bound"
    };
    if args.json {
        let report = json!({
            "input": kind,
            "mode": mode,
            "value": result.value,
            "lower": result.lower,
            "completed": result.completed,
            "orientation_mask": result.orientation,
            "nodes": result.stats.nodes,
            "witness": result.witness.assignment(),
        });
        println!("{}", serde_json::to_string_pretty(&report).expect("json value serializes"));
    } else {
        println!("χo({kind}) = {} [{status}]", result.value);
        println!("lower bound: {}", result.lower);
        if let Some(mask) = result.orientation {
            println!("attained by orientation mask {mask}");
        }
        println!("search nodes: {}", result.stats.nodes);
    }
    if exact && !result.completed {
        return Err(Failure {
            code: EXIT_BUDGET,
            message: format!(
                "budget of {} nodes exhausted; χo in [{}, {}]",
                args.budget, result.lower, result.value
            ),
        });
    }
    Ok(())
}

fn bounds(args: BoundsArgs) -> Outcome {
    let report = match (&args.file, args.hypercube) {
        (_, Some(d)) => hypercube_report(d, args.epsilon)?,
        (Some(path), None) => {
            let g = match read_graph(path)? {
                GraphFile::Undirected(g) => g,
                GraphFile::Oriented(d) => d.underlying(),
            };
            bounds_report(&g, args.epsilon)?
        }
        (None, None) => return Err(Failure::usage("give a graph file or --hypercube")),
    };
    if args.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(())
}

fn oclique_check(args: OcliqueArgs) -> Outcome {
    let d = match read_graph(&args.file)? {
        GraphFile::Oriented(d) => d,
        GraphFile::Undirected(_) => return Err(Failure::usage("oclique-check needs a 'p oriented' file")),
    };
    let report = pair_diameter(&d);
    let is_oclique = report.value.is_at_most(2);
    if args.json {
        let value = match report.value {
            Diameter::Finite(k) => json!(k),
            Diameter::Infinite => json!("infinite"),
        };
        let out = json!({
            "n": d.n(),
            "m": d.m(),
            "pair_diameter": value,
            "witness": report.witness,
            "is_oclique": is_oclique,
            "chi": if is_oclique { Some(d.n()) } else { None },
        });
        println!("{}", serde_json::to_string_pretty(&out).expect("json value serializes"));
    } else if is_oclique {
        println!("oclique, hence χo = n = {} (pair-diameter {})", d.n(), report.value);
    } else {
        let (u, v) = report.witness.expect("a pair exceeds distance 2");
        println!("not an oclique; witness pair ({u},{v}) at distance {}", report.value);
    }
    if is_oclique {
        Ok(())
    } else {
        Err(Failure::silent(EXIT_ASSERTION))
    }
}

fn verify(args: Lemma2Args) -> Outcome {
    let report = verify_lemma2(args.p)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else {
        println!(
            "p = {}: n = {}, m = {}, Δ = {}, pair-diameter {}",
            report.p, report.n, report.m, report.max_degree, report.diameter
        );
        for c in &report.clauses {
            println!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::silent(EXIT_ASSERTION))
    }
}

fn experiment(args: ExperimentArgs) -> Outcome {
    let mut config = ExperimentConfig::new(args.d, args.trials, args.seed);
    config.budget = Budget::nodes(args.budget);
    config.threads = args.threads;
    config.timing = args.timing;
    let record = run_experiment(&config)?;
    let text = match args.out {
        Format::Csv => record.to_csv(),
        Format::Json => record.to_json() + "\n",
    };
    write_output(args.output.as_deref(), &text)?;
    eprintln!("{}", record.summary());
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen(a) => gen(a),
        Command::Chi(a) => chi(a),
        Command::Bounds(a) => bounds(a),
        Command::OcliqueCheck(a) => oclique_check(a),
        Command::VerifyLemma2(a) => verify(a),
        Command::Experiment(a) => experiment(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
