use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use decant_cli::instance::parse_list;
use decant_cli::structured::{self, GraphDoc, SolveDoc, VerifyDoc};
use decant_cli::{dot, exit, text, InputError, PuzzleSpecFile};
use decant_core::verify::{
    admissible_quadruples, sweep_edge_equivalence, sweep_gcd_criterion, sweep_solver_agreement,
};
use decant_core::{build_graph, shortest_path, PuzzleInstance, Quadruple, SuccessorSource};

#[derive(Parser)]
#[command(
    name = "decant",
    version,
    about = "Solve and inspect three-jug decanting puzzles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a shortest pour sequence that reaches the target.
    Solve(SolveArgs),
    /// Report whether the target is reachable, without a pour sequence.
    Check(SolveArgs),
    /// Print the state graph.
    Graph(GraphArgs),
    /// Cross-check the edge model against simulated pours for all small puzzles.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct InstanceArgs {
    /// Jug capacities A,B,C with A > B > C.
    #[arg(long, value_name = "A,B,C", required_unless_present = "file")]
    capacities: Option<String>,
    /// Starting contents of A,B,C; their sum is the total volume.
    #[arg(long, value_name = "A',B',C'", required_unless_present = "file")]
    start: Option<String>,
    /// Target contents of B,C [default: half the total in B, C empty].
    #[arg(long, value_name = "I,J")]
    target: Option<String>,
    /// Read the puzzle from a TOML file instead of flags.
    #[arg(long, conflicts_with_all = ["capacities", "start", "target"])]
    file: Option<PathBuf>,
}

impl InstanceArgs {
    fn instance(&self) -> Result<PuzzleInstance, InputError> {
        match (&self.file, &self.capacities, &self.start) {
            (Some(path), _, _) => PuzzleSpecFile::read(path)?.to_instance(),
            (None, Some(caps), Some(start)) => {
                let target = self
                    .target
                    .as_deref()
                    .map(|t| parse_list::<2>("--target", t))
                    .transpose()?;
                decant_cli::parse_instance(
                    parse_list("--capacities", caps)?,
                    parse_list("--start", start)?,
                    target,
                )
            }
            _ => Err(InputError::Usage(
                "either --file or both --capacities and --start are required".into(),
            )),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Successors {
    Model,
    Oracle,
}

impl From<Successors> for SuccessorSource {
    fn from(s: Successors) -> Self {
        match s {
            Successors::Model => SuccessorSource::Model,
            Successors::Oracle => SuccessorSource::Oracle,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Successor relation to search: graph-model edges or simulated pours.
    #[arg(long, value_enum, default_value = "model")]
    successors: Successors,
}

#[derive(Args)]
struct GraphArgs {
    /// Jug capacities A,B,C with A > B > C.
    #[arg(long, value_name = "A,B,C", required_unless_present = "file")]
    capacities: Option<String>,
    /// Contents of A,B,C; only their sum is used.
    #[arg(long, value_name = "A',B',C'", conflicts_with = "total")]
    start: Option<String>,
    /// Total volume of wine, instead of --start.
    #[arg(long, value_name = "D")]
    total: Option<u32>,
    /// Read capacities and start contents from a TOML puzzle file.
    #[arg(long, conflicts_with_all = ["capacities", "start", "total"])]
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "dot")]
    format: Format,
    /// Leave out vertices that have no edges.
    #[arg(long)]
    hide_isolated: bool,
}

impl GraphArgs {
    fn quadruple(&self) -> Result<Quadruple, InputError> {
        if let Some(path) = &self.file {
            return Ok(*PuzzleSpecFile::read(path)?.to_instance()?.quadruple());
        }
        let [a, b, c] = parse_list::<3>(
            "--capacities",
            self.capacities.as_deref().unwrap_or_default(),
        )?;
        let d = match (&self.start, self.total) {
            (Some(start), None) => {
                let contents = parse_list::<3>("--start", start)?;
                return Ok(*decant_cli::parse_instance([a, b, c], contents, None)?.quadruple());
            }
            (None, Some(d)) => d,
            _ => {
                return Err(InputError::Usage(
                    "one of --start or --total is required".into(),
                ))
            }
        };
        Ok(Quadruple::new(a, b, c, d)?)
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest capacity of jug A to sweep.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(3..))]
    max_a: u32,
    /// Also compare shortest-path searches over both successor relations.
    #[arg(long)]
    with_agreement: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn solve(args: &SolveArgs, with_path: bool) -> Result<i32, InputError> {
    let instance = args.instance.instance()?;
    let result = shortest_path(&instance, args.successors.into());
    let rendered = match (args.format, with_path) {
        (Format::Text, true) => text::solve(&result),
        (Format::Text, false) => text::check(&result),
        (Format::Structured, _) => {
            structured::to_string(&SolveDoc::new(&result, args.successors.into(), with_path))
        }
        (Format::Dot, _) => {
            return Err(InputError::Usage(
                "dot output is only available for the graph command".into(),
            ))
        }
    };
    print!("{rendered}");
    Ok(if result.is_solvable() {
        exit::SOLVABLE
    } else {
        exit::UNSOLVABLE
    })
}

fn graph(args: &GraphArgs) -> Result<i32, InputError> {
    let g = build_graph(&args.quadruple()?);
    let rendered = match args.format {
        Format::Dot => dot::render(&g, args.hide_isolated),
        Format::Structured => structured::to_string(&GraphDoc::new(&g, args.hide_isolated)),
        Format::Text => text::graph(&g, args.hide_isolated),
    };
    print!("{rendered}");
    Ok(exit::SOLVABLE)
}

fn verify(args: &VerifyArgs) -> Result<i32, InputError> {
    let checked = admissible_quadruples(args.max_a).count();
    let reports = sweep_edge_equivalence(args.max_a);
    let gcd = sweep_gcd_criterion(args.max_a);
    let agreement = args
        .with_agreement
        .then(|| sweep_solver_agreement(args.max_a));
    let rendered = match args.format {
        Format::Text => text::verify(args.max_a, checked, &reports, &gcd, agreement.as_ref()),
        Format::Structured => structured::to_string(&VerifyDoc::new(
            args.max_a,
            checked,
            &reports,
            &gcd,
            agreement.as_ref(),
        )),
        Format::Dot => {
            return Err(InputError::Usage(
                "dot output is only available for the graph command".into(),
            ))
        }
    };
    print!("{rendered}");
    let clean = reports.is_empty()
        && gcd.mismatches.is_empty()
        && agreement.is_none_or(|s| s.mismatches.is_empty());
    Ok(if clean {
        exit::SOLVABLE
    } else {
        exit::UNSOLVABLE
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Solve(args) => solve(args, true),
        Command::Check(args) => solve(args, false),
        Command::Graph(args) => graph(args),
        Command::Verify(args) => verify(args),
    };
    let code = outcome.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        exit::INPUT_ERROR
    });
    ExitCode::from(code as u8)
}
