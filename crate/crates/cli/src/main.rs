mod commands;
mod input;
mod output;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use zonolat::zonotopes::{Budget, DEFAULT_MAX_GENERATORS, DEFAULT_MAX_POINTS};
use zonolat::Error;

use commands::{Ctx, CountArgs, EhrhartArgs, HitchinCmd, ShellingArgs, TablesArgs};
use input::GraphArgs;
use output::{Format, Output};
use verify::VerifyCmd;

/// Exact lattice-point counts in translated graphical zonotopes.
#[derive(Debug, Parser)]
#[command(name = "zonolat", version)]
struct Cli {
    /// Largest bounding box scanned by enumeration.
    #[arg(long, global = true, env = "ZONOLAT_BUDGET_POINTS", default_value_t = DEFAULT_MAX_POINTS)]
    budget_points: u64,
    /// Largest number of distinct generators accepted.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_GENERATORS)]
    budget_generators: usize,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Same as --format json.
    #[arg(long, global = true)]
    json: bool,
    /// Edge order for LEX labels, e.g. "12,23,34,14".
    #[arg(long, global = true)]
    edge_order: Option<String>,
    /// Arbitrary-precision arithmetic for count and ehrhart.
    #[arg(long, global = true)]
    bigint: bool,
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Interior lattice points of a translated zonotope.
    Count(CountArgs),
    /// Ehrhart quasi-polynomial.
    Ehrhart(EhrhartArgs),
    /// Permutation character of Aut(Γ) on interior points.
    Character(GraphArgs),
    /// Same as `verify decomposition` for one instance.
    VerifyDecomposition(GraphArgs),
    /// Sphere count of the non-integral flat poset and its LEX shelling.
    Shelling(ShellingArgs),
    /// Supports, ranks and stalk dimensions over the reduced locus.
    #[command(subcommand)]
    Hitchin(HitchinCmd),
    /// Reference tables as CSV.
    Tables(TablesArgs),
    /// Built-in verification suites.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

fn run(cli: &Cli, ctx: &Ctx) -> zonolat::Result<Output> {
    match &cli.cmd {
        Command::Count(a) if cli.bigint => commands::count::<BigInt>(ctx, a),
        Command::Count(a) => commands::count::<i64>(ctx, a),
        Command::Ehrhart(a) if cli.bigint => commands::ehrhart::<BigInt>(ctx, a),
        Command::Ehrhart(a) => commands::ehrhart::<i64>(ctx, a),
        Command::Character(a) => commands::character(ctx, a),
        Command::VerifyDecomposition(a) => commands::decomposition(ctx, a),
        Command::Shelling(a) => commands::shelling(ctx, a),
        Command::Hitchin(c) => commands::hitchin_cmd(ctx, c),
        Command::Tables(a) => commands::tables(ctx, a),
        Command::Verify(c) => verify::verify(ctx, c),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Verification(_) => 1,
        Error::InvalidInput(_) | Error::Parse(_) => 2,
        Error::Budget(_) => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.budget_points == 0 || cli.budget_generators == 0 {
        eprintln!("error: budgets must be positive");
        return ExitCode::from(2);
    }
    let ctx = Ctx {
        budget: Budget { max_generators: cli.budget_generators, max_points: cli.budget_points },
        edge_order: cli.edge_order.clone(),
        verbose: cli.verbose,
    };
    let format = if cli.json {
        Format::Json
    } else {
        cli.format.unwrap_or(match cli.cmd {
            Command::Tables(_) => Format::Csv,
            _ => Format::Pretty,
        })
    };
    match run(&cli, &ctx) {
        Ok(out) => {
            print!("{}", out.render(format));
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
