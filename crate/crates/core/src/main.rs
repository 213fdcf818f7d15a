use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use domkit::generators::{enumerate_connected_with_limit, Family, FamilySpec};
use domkit::graph::{Element, Graph};
use domkit::io::{build_row, emit_report, encode_graph6, format_edge_list, parse_edge_list, parse_graph6};
use domkit::laws::{
    check_payan, check_theorem1, check_theorem2, check_total_graph_embedding, theorem3_witnesses,
    LawError, LawReport, Theorem3Mode,
};
use domkit::solver::{
    domination_number, k_domination_number, nine_numbers, DominationInstance, Param, SolveError,
    SolveResult, DEFAULT_BUDGET, PAIRS,
};

/// Exact fundamental domination numbers of small graphs.
#[derive(Parser, Debug)]
#[command(name = "domkit", version, about)]
struct Cli {
    /// Search node limit for every exact solve.
    #[arg(long, global = true, env = "DOMKIT_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve domination numbers of one graph and print values with witnesses.
    Compute {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = ParamChoice::All)]
        params: ParamChoice,
        /// Multiplicity for `--params k-dom`.
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Check one law on a graph (or, for thm3, on the generated witnesses).
    Verify {
        /// Which law to check.
        #[arg(long, value_enum)]
        law: LawChoice,
        /// Gap parameter for thm3.
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// How thm3 values are settled: exact solves, or bounds with a witness.
        #[arg(long, value_enum, default_value_t = ModeChoice::Auto)]
        mode: ModeChoice,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Print a family member in graph6 (or edge-list) form.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Format::G6)]
        format: Format,
    },
    /// Produce a CSV report over a corpus of graphs.
    Scan {
        /// Every connected labeled graph of this order.
        #[arg(long, conflicts_with = "random")]
        exhaustive_n: Option<usize>,
        /// This many random connected graphs (seeds seed, seed+1, ...).
        #[arg(long, requires = "n")]
        random: Option<usize>,
        /// Order of each random graph.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest order accepted by --exhaustive-n.
        #[arg(long, default_value_t = domkit::generators::DEFAULT_ENUMERATION_LIMIT)]
        max_order: usize,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct GraphInput {
    /// graph6 string.
    #[arg(long, conflicts_with_all = ["file", "family"])]
    g6: Option<String>,
    /// File holding one graph in graph6 or edge-list form.
    #[arg(long, conflicts_with = "family")]
    file: Option<PathBuf>,
    /// complete, star, ridged, path, cycle or random.
    #[arg(long)]
    family: Option<Family>,
    /// Family parameter; ridged R_n has 3n vertices.
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability for random (default 0.5).
    #[arg(long)]
    p: Option<f64>,
    /// Seed for random (default 0).
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: usize,
    /// Edge probability for random (default 0.5).
    #[arg(long)]
    p: Option<f64>,
    /// Seed for random (default 0).
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ParamChoice {
    All,
    Gamma,
    Ve,
    Ev,
    GammaPrime,
    GammaDprime,
    KDom,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum LawChoice {
    Thm1,
    Thm2,
    Thm3,
    Embedding,
    Payan,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeChoice {
    Auto,
    Exact,
    Certificate,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    G6,
    EdgeList,
}

enum Failure {
    Usage(String),
    LawFailed,
    Budget(String),
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::BudgetExhausted { .. } => Failure::Budget(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<LawError> for Failure {
    fn from(e: LawError) -> Self {
        match e {
            LawError::Solve(s) => s.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn build_family(family: Family, n: Option<usize>, p: Option<f64>, seed: Option<u64>) -> Result<Graph, Failure> {
    let n = n.ok_or_else(|| usage("--family needs --n"))?;
    FamilySpec {
        family,
        n,
        p,
        seed,
    }
    .build()
    .map_err(usage)
}

fn parse_file(text: &str) -> Result<Graph, Failure> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first.split_whitespace().count() >= 2 {
        parse_edge_list(text).map_err(usage)
    } else {
        parse_graph6(first).map_err(usage)
    }
}

impl GraphInput {
    fn load(&self) -> Result<Option<Graph>, Failure> {
        if let Some(s) = &self.g6 {
            return parse_graph6(s.trim()).map(Some).map_err(usage);
        }
        if let Some(path) = &self.file {
            let text = fs::read_to_string(path)
                .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            return parse_file(&text).map(Some);
        }
        if let Some(f) = self.family {
            return build_family(f, self.n, self.p, self.seed).map(Some);
        }
        Ok(None)
    }

    fn require(&self) -> Result<Graph, Failure> {
        self.load()?
            .ok_or_else(|| usage("no graph given: use --g6, --file or --family with --n"))
    }
}

fn show_witness(w: &[Element]) -> String {
    let items: Vec<_> = w.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn print_result(label: &str, r: &SolveResult) {
    println!(
        "{label:<10} = {:>3}   witness {}   ({} nodes)",
        r.value,
        show_witness(&r.witness),
        r.stats.nodes
    );
}

fn describe(g: &Graph) {
    let id = encode_graph6(g).unwrap_or_else(|_| "-".into());
    println!("graph {id}  n={} m={} δ={}", g.order(), g.size(), g.min_degree());
    let edges: Vec<_> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, (u, v))| format!("e{i}={u}-{v}"))
        .collect();
    if !edges.is_empty() {
        println!("edges {}", edges.join(" "));
    }
}

fn compute(g: &Graph, params: ParamChoice, k: usize, budget: u64) -> Result<(), Failure> {
    describe(g);
    let single = |p: Param| -> Result<(), Failure> {
        let (u, w) = p.pair();
        let r = domination_number(&DominationInstance::new(g, u, w), budget)?;
        print_result(p.symbol(), &r);
        Ok(())
    };
    match params {
        ParamChoice::All => {
            let profile = nine_numbers(g, budget)?;
            for ((u, w), r) in profile.iter() {
                print_result(&format!("γ_{{{u},{w}}}"), r);
            }
            let five: Vec<_> = Param::ALL
                .iter()
                .map(|&p| format!("{}={}", p.symbol(), profile.param(p)))
                .collect();
            println!("five   {}", five.join(" "));
            debug_assert_eq!(profile.iter().count(), PAIRS.len());
        }
        ParamChoice::Gamma => single(Param::Gamma)?,
        ParamChoice::Ve => single(Param::GammaVE)?,
        ParamChoice::Ev => single(Param::GammaEV)?,
        ParamChoice::GammaPrime => single(Param::GammaPrime)?,
        ParamChoice::GammaDprime => single(Param::GammaDoublePrime)?,
        ParamChoice::KDom => {
            let r = k_domination_number(g, k, budget)?;
            print_result(&format!("γ_{k}"), &r);
        }
    }
    Ok(())
}

fn verify(
    law: LawChoice,
    r: usize,
    mode: ModeChoice,
    input: &GraphInput,
    budget: u64,
) -> Result<(), Failure> {
    if let LawChoice::Thm3 = law {
        let mode = match mode {
            ModeChoice::Auto => Theorem3Mode::Auto,
            ModeChoice::Exact => Theorem3Mode::Exact,
            ModeChoice::Certificate => Theorem3Mode::Certificate,
        };
        let records = theorem3_witnesses(r, mode, budget)?;
        let mut ok = true;
        for rec in &records {
            println!(
                "{} {:<9} {}={} [{}]  {}={} [{}]  gap {} (proven {}) > {}: {}",
                rec.name,
                rec.family,
                rec.larger.param.symbol(),
                rec.larger.closed_form,
                rec.larger.status.label(),
                rec.smaller.param.symbol(),
                rec.smaller.closed_form,
                rec.smaller.status.label(),
                rec.closed_form_gap(),
                rec.proven_gap(),
                r,
                if rec.holds() { "ok" } else { "FAILED" }
            );
            ok &= rec.holds();
        }
        return if ok { Ok(()) } else { Err(Failure::LawFailed) };
    }

    let g = input.require()?;
    let report: LawReport = match law {
        LawChoice::Thm1 => check_theorem1(&g, budget)?,
        LawChoice::Thm2 => check_theorem2(&g, budget)?,
        LawChoice::Embedding => check_total_graph_embedding(&g, budget)?,
        LawChoice::Payan => check_payan(&g, budget)?,
        LawChoice::Thm3 => unreachable!(),
    };
    println!("{report}");
    if report.holds() {
        Ok(())
    } else {
        Err(Failure::LawFailed)
    }
}

#[allow(clippy::too_many_arguments)]
fn scan(
    exhaustive_n: Option<usize>,
    random: Option<usize>,
    n: Option<usize>,
    p: f64,
    seed: u64,
    max_order: usize,
    out: Option<&PathBuf>,
    budget: u64,
) -> Result<(), Failure> {
    let graphs: Vec<Graph> = match (exhaustive_n, random) {
        (Some(k), None) => enumerate_connected_with_limit(k, max_order)
            .map_err(usage)?
            .filter(Graph::is_nontrivial)
            .collect(),
        (None, Some(count)) => {
            let n = n.ok_or_else(|| usage("--random needs --n"))?;
            (0..count as u64)
                .map(|i| domkit::generators::random_connected(n, p, seed.wrapping_add(i)))
                .collect::<Result<_, _>>()
                .map_err(usage)?
        }
        _ => return Err(usage("scan needs exactly one of --exhaustive-n or --random")),
    };

    let rows = graphs
        .par_iter()
        .map(|g| build_row(g, budget))
        .collect::<Result<Vec<_>, _>>()?;
    let text = emit_report(&rows);
    match out {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    if rows.iter().all(|r| r.laws_hold()) {
        Ok(())
    } else {
        Err(Failure::LawFailed)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let budget = cli.budget;
    match cli.command {
        Command::Compute { input, params, k } => compute(&input.require()?, params, k, budget),
        Command::Verify {
            law,
            r,
            mode,
            input,
        } => verify(law, r, mode, &input, budget),
        Command::Gen { family, format } => {
            let g = build_family(family.family, Some(family.n), family.p, family.seed)?;
            match format {
                Format::G6 => println!("{}", encode_graph6(&g).map_err(usage)?),
                Format::EdgeList => print!("{}", format_edge_list(&g)),
            }
            Ok(())
        }
        Command::Scan {
            exhaustive_n,
            random,
            n,
            p,
            seed,
            max_order,
            out,
        } => scan(exhaustive_n, random, n, p, seed, max_order, out.as_ref(), budget),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::LawFailed) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
