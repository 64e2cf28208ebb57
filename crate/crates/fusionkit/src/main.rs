//! Command-line front end: build groups, check admissibility, construct the
//! convolution algebra of a pair, normalize, join, and emit diagrams.
//!
//! Exit codes: 0 on success, 1 on a domain refusal (for example a
//! non-admissible pair), 2 on usage, parse, or I/O errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use fusionkit::chars::CharacterTable;
use fusionkit::diagram::{emit_dot, frobenius_diagram};
use fusionkit::fixtures;
use fusionkit::fusion::{dimension_function, join, normalize_to_hypergroup, FusionAlgebra};
use fusionkit::group::{build_group, spec::split_top_level, FiniteGroup, GroupSpec};
use fusionkit::json;
use fusionkit::pair::{GroupPair, PairError};
use fusionkit::Tol;

#[derive(Parser)]
#[command(name = "fusionkit", version, about = "Fusion rule algebras from characters of finite groups")]
struct Cli {
    /// Tolerance for floating-point value equality.
    #[arg(long, global = true, default_value_t = fusionkit::EPS_EQ)]
    eps_eq: f64,
    /// Tolerance for integrality of multiplicities and degrees.
    #[arg(long, global = true, default_value_t = fusionkit::EPS_INT)]
    eps_int: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group from a spec string or a plain-text Cayley table.
    Group(GroupArgs),
    /// Compute and print the character table of a group.
    Table(TableArgs),
    /// Admissibility checks and pair-algebra construction.
    #[command(subcommand)]
    Pair(PairCommand),
    /// Operations on serialized fusion algebras.
    #[command(subcommand)]
    Algebra(AlgebraCommand),
    /// Emit the Frobenius diagram of a pair as DOT text.
    Diagram(DiagramArgs),
    /// The built-in regression suite.
    #[command(subcommand)]
    Fixtures(FixturesCommand),
}

#[derive(Args)]
struct GroupArgs {
    /// Group spec, e.g. "S4", "Z2xZ2", "semidirect(Z3,Z2,inv)".
    spec: Option<String>,
    /// Read a plain-text Cayley table instead of a spec.
    #[arg(long, conflicts_with = "spec")]
    from_cayley: Option<PathBuf>,
    /// Write the group as JSON (.fkgroup.json).
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// Also export the Cayley table as plain text.
    #[arg(long)]
    cayley_out: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    /// A .fkgroup.json file produced by `group`.
    group_file: Option<PathBuf>,
    /// Build the group from a spec string instead of a file.
    #[arg(long, conflicts_with = "group_file")]
    spec: Option<String>,
    /// Write the table as JSON instead of printing text.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum PairCommand {
    /// Decide admissibility; prints certificates and, on refusal, a witness.
    Check(PairArgs),
    /// Construct the pair algebra and print its structure equations.
    Fuse(PairFuseArgs),
}

#[derive(Args)]
struct PairArgs {
    /// Group spec for the ambient group.
    spec: String,
    /// Comma-separated generator labels, e.g. "(12),(123)" or "2".
    #[arg(long, default_value = "")]
    subgroup: String,
}

#[derive(Args)]
struct PairFuseArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Write the algebra as JSON (.fkalg.json).
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum AlgebraCommand {
    /// Print the structure equations of a serialized algebra.
    Equations { alg_file: PathBuf },
    /// Normalize to the associated hypergroup.
    Normalize {
        alg_file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Adjoin an order-two element (requires integral dimensions).
    Join {
        alg_file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct DiagramArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Write DOT text here instead of stdout.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum FixturesCommand {
    /// Run every fixture and print a pass/fail table.
    Run,
}

/// Domain refusals exit with 1; everything unexpected with 2.
enum Failure {
    Refusal(String),
    Usage(String),
}

impl From<PairError> for Failure {
    fn from(e: PairError) -> Self {
        match e {
            PairError::NotAdmissible(_) | PairError::NotNormal => Failure::Refusal(e.to_string()),
            PairError::Group(_) => Failure::Usage(e.to_string()),
            other => Failure::Refusal(other.to_string()),
        }
    }
}

impl From<fusionkit::group::GroupError> for Failure {
    fn from(e: fusionkit::group::GroupError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<fusionkit::json::JsonError> for Failure {
    fn from(e: fusionkit::json::JsonError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<fusionkit::fusion::FusionError> for Failure {
    fn from(e: fusionkit::fusion::FusionError) -> Self {
        Failure::Refusal(e.to_string())
    }
}

impl From<fusionkit::chars::CharError> for Failure {
    fn from(e: fusionkit::chars::CharError) -> Self {
        Failure::Refusal(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tol = Tol::new(cli.eps_eq, cli.eps_int);
    match run(cli.command, tol) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Refusal(message)) => {
            eprintln!("refused: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, tol: Tol) -> Result<(), Failure> {
    match command {
        Command::Group(args) => cmd_group(args),
        Command::Table(args) => cmd_table(args, tol),
        Command::Pair(PairCommand::Check(args)) => cmd_pair_check(args, tol),
        Command::Pair(PairCommand::Fuse(args)) => cmd_pair_fuse(args, tol),
        Command::Algebra(cmd) => cmd_algebra(cmd, tol),
        Command::Diagram(args) => cmd_diagram(args, tol),
        Command::Fixtures(FixturesCommand::Run) => cmd_fixtures(tol),
    }
}

fn write_or_print(out: Option<&Path>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => {
            std::fs::write(path, content)?;
            println!("wrote {}", path.display());
            Ok(())
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn load_group(args: &GroupArgs) -> Result<FiniteGroup, Failure> {
    if let Some(path) = &args.from_cayley {
        let text = std::fs::read_to_string(path)?;
        Ok(FiniteGroup::from_cayley_text(&text)?)
    } else if let Some(spec) = &args.spec {
        let spec: GroupSpec = spec.parse()?;
        Ok(build_group(&spec)?)
    } else {
        Err(Failure::Usage("provide a group spec or --from-cayley".into()))
    }
}

fn cmd_group(args: GroupArgs) -> Result<(), Failure> {
    let group = load_group(&args)?;
    println!(
        "group {} of order {} with {} conjugacy classes",
        group.name(),
        group.order(),
        group.class_count()
    );
    if let Some(path) = &args.cayley_out {
        std::fs::write(path, group.to_cayley_text())?;
        println!("wrote {}", path.display());
    }
    if let Some(path) = &args.out {
        std::fs::write(path, json::group_to_json(&group))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn cmd_table(args: TableArgs, tol: Tol) -> Result<(), Failure> {
    let group = if let Some(path) = &args.group_file {
        json::group_from_json(&std::fs::read_to_string(path)?)?
    } else if let Some(spec) = &args.spec {
        build_group(&spec.parse::<GroupSpec>()?)?
    } else {
        return Err(Failure::Usage("provide a group file or --spec".into()));
    };
    let group = Arc::new(group);
    let table = CharacterTable::compute(&group, tol)?;
    match &args.out {
        Some(path) => {
            std::fs::write(path, json::table_to_json(&table))?;
            println!("wrote {}", path.display());
        }
        None => print!("{}", table.render_text()),
    }
    Ok(())
}

fn make_pair(args: &PairArgs, tol: Tol) -> Result<GroupPair, Failure> {
    let spec: GroupSpec = args.spec.parse()?;
    let group = Arc::new(build_group(&spec)?);
    let labels: Vec<&str> = split_top_level(&args.subgroup, ',')
        .into_iter()
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    Ok(GroupPair::from_labels(group, &labels, tol)?)
}

fn cmd_pair_check(args: PairArgs, tol: Tol) -> Result<(), Failure> {
    let pair = make_pair(&args, tol)?;
    println!(
        "pair: {} over a subgroup of order {} (index {})",
        pair.group().name(),
        pair.embedding().order(),
        pair.embedding().index()
    );
    let outcome = pair.admissibility();
    let certificates = pair.certificates();
    if certificates.is_empty() {
        println!("certificates: none");
    } else {
        let names: Vec<String> = certificates.iter().map(|c| c.to_string()).collect();
        println!("certificates: {}", names.join("; "));
    }
    if outcome.admissible {
        println!("admissible: yes");
        Ok(())
    } else {
        println!("admissible: no");
        let witness = outcome.witness.expect("refusals carry a witness");
        println!("witness: {witness}");
        let report = pair.verify_associativity();
        println!("{}", report.summary());
        Err(Failure::Refusal("the pair is not admissible".into()))
    }
}

fn cmd_pair_fuse(args: PairFuseArgs, tol: Tol) -> Result<(), Failure> {
    let pair = make_pair(&args.pair, tol)?;
    let algebra = pair.build_algebra()?;
    for line in algebra.structure_equations() {
        println!("{line}");
    }
    if let Some(path) = &args.out {
        std::fs::write(path, json::algebra_to_json(&algebra))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn load_algebra(path: &Path) -> Result<FusionAlgebra, Failure> {
    Ok(json::algebra_from_json(&std::fs::read_to_string(path)?)?)
}

fn cmd_algebra(cmd: AlgebraCommand, tol: Tol) -> Result<(), Failure> {
    match cmd {
        AlgebraCommand::Equations { alg_file } => {
            let algebra = load_algebra(&alg_file)?;
            let report = algebra.check_axioms();
            if !report.all_passed() {
                return Err(Failure::Refusal(
                    report.first_failure().and_then(|c| c.failure.clone()).unwrap_or_default(),
                ));
            }
            for line in algebra.structure_equations() {
                println!("{line}");
            }
            Ok(())
        }
        AlgebraCommand::Normalize { alg_file, out } => {
            let algebra = load_algebra(&alg_file)?;
            let dims = dimension_function(&algebra, tol)?;
            let hypergroup = normalize_to_hypergroup(&algebra, &dims, tol)?;
            write_or_print(out.as_deref(), &json::hypergroup_to_json(&hypergroup))
        }
        AlgebraCommand::Join { alg_file, out } => {
            let algebra = load_algebra(&alg_file)?;
            let dims = dimension_function(&algebra, tol)?;
            let joined = join(&algebra, &dims, tol)?;
            for line in joined.structure_equations() {
                println!("{line}");
            }
            if let Some(path) = out {
                std::fs::write(&path, json::algebra_to_json(&joined))?;
                println!("wrote {}", path.display());
            }
            Ok(())
        }
    }
}

fn cmd_diagram(args: DiagramArgs, tol: Tol) -> Result<(), Failure> {
    let pair = make_pair(&args.pair, tol)?;
    let diagram = frobenius_diagram(&pair)?;
    write_or_print(args.out.as_deref(), &emit_dot(&diagram))
}

fn cmd_fixtures(tol: Tol) -> Result<(), Failure> {
    let reports = fixtures::run_all(tol);
    let width = reports.iter().map(|r| r.name.len()).max().unwrap_or(8);
    let mut failures = 0usize;
    for report in &reports {
        let status = if report.passed { "PASS" } else { "FAIL" };
        println!("{:width$}  {status}  {}", report.name, report.detail, width = width);
        for note in &report.notes {
            println!("{:width$}        note: {note}", "", width = width);
        }
        if !report.passed {
            failures += 1;
        }
    }
    println!("total: {}/{} fixtures passed", reports.len() - failures, reports.len());
    if failures == 0 {
        Ok(())
    } else {
        Err(Failure::Refusal(format!("{failures} fixtures failed")))
    }
}
