//! `duality`: exact LP duality, zero-sum games and theorems of the
//! alternative from JSON problem files.
//!
//! Every command prints a JSON report on stdout. Exit status is 0 when a
//! verdict was produced, 1 on input errors and 2 when a size cap was hit.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use duality_core::certificates::{FarkasVariant, GordanMethod, TuckerMethod, TuckerVariant};
use duality_core::game::DEFAULT_ENUM_DIM_CAP;
use duality_core::infeasibility::DEFAULT_FM_ROW_CAP;
use duality_core::problem::parse_problem;
use duality_core::reductions::DEFAULT_BR_DIM_CAP;
use duality_core::report::{recheck, run, Command, Options, ReduceTarget, Report, RunError};
use duality_core::{Rat, Vector};

#[derive(Parser, Debug)]
#[command(name = "duality", version, about = "Exact LP duality via zero-sum games", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    #[command(flatten)]
    caps: Caps,
}

#[derive(Args, Debug)]
struct Caps {
    /// Bound M for the game B_M (default: the closed-form bound).
    #[arg(long = "M", global = true, value_name = "RATIONAL", value_parser = parse_rat)]
    m: Option<Rat>,

    /// Maximum number of rows in any Fourier–Motzkin round.
    #[arg(long, global = true, default_value_t = DEFAULT_FM_ROW_CAP)]
    fm_row_cap: usize,

    /// Maximum m + n + 1 for the Brooks–Reny game.
    #[arg(long, global = true, default_value_t = DEFAULT_BR_DIM_CAP)]
    br_dim_cap: usize,

    /// Maximum m + n for optimal-vertex enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUM_DIM_CAP)]
    enum_dim_cap: usize,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Solve an LP through the game B_M.
    Solve { file: PathBuf },
    /// Solve a zero-sum game.
    Game {
        file: PathBuf,
        /// Also list every optimal vertex strategy.
        #[arg(long)]
        vertices: bool,
    },
    /// Print the payoff matrix of a game built from an LP.
    Reduce {
        file: PathBuf,
        #[arg(long, value_parser = parse_target)]
        target: ReduceTarget,
    },
    /// Print the closed-form bound M.
    BoundM { file: PathBuf },
    /// Farkas alternative for a system (A, b).
    Farkas {
        file: PathBuf,
        #[arg(long, default_value_t = FarkasVariant::Eq)]
        variant: FarkasVariant,
    },
    /// Gordan alternative: Ax = 0, x ≥ 0, x ≠ 0, or yᵀA > 0.
    Gordan {
        file: PathBuf,
        #[arg(long, default_value_t = GordanMethod::ViaVille)]
        method: GordanMethod,
    },
    /// Ville alternative: Ax ≤ 0, x ≥ 0, x ≠ 0, or y ≥ 0 with yᵀA > 0.
    Ville { file: PathBuf },
    /// Stiemke alternative: yᵀA ≥ 0, yᵀA ≠ 0, or Ax = 0 with x > 0.
    Stiemke { file: PathBuf },
    /// Tucker's Theorem, or Tucker's Lemma for one column.
    Tucker {
        file: PathBuf,
        #[arg(long, default_value_t = TuckerMethod::Elimination)]
        method: TuckerMethod,
        /// Column for Tucker's Lemma (0-based).
        #[arg(long)]
        column: Option<usize>,
        #[arg(long, default_value_t = TuckerVariant::Eq)]
        variant: TuckerVariant,
    },
    /// A strictly complementary optimal pair of an LP.
    StrictComp {
        file: PathBuf,
        #[arg(long, default_value_t = TuckerMethod::Elimination)]
        method: TuckerMethod,
    },
    /// Check a claimed optimal pair (x, y) of an LP.
    VerifyPair {
        file: PathBuf,
        /// Comma-separated rationals.
        #[arg(long, value_parser = parse_vector, allow_hyphen_values = true)]
        x: Vector,
        /// Comma-separated rationals.
        #[arg(long, value_parser = parse_vector, allow_hyphen_values = true)]
        y: Vector,
        /// Also require strict complementarity.
        #[arg(long)]
        strict: bool,
    },
    /// A minimally infeasible subsystem of Ax ≤ b.
    MinInfeasible { file: PathBuf },
    /// Fourier–Motzkin elimination on Ax ≤ b.
    Fm { file: PathBuf },
    /// The least uniform slack w making both LP sides feasible.
    MinSlackW { file: PathBuf },
    /// Re-verify a report produced by any other command.
    CheckReport { report: PathBuf },
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    s.parse::<Rat>().map_err(|e| e.to_string())
}

fn parse_vector(s: &str) -> Result<Vector, String> {
    s.split(',').map(|t| parse_rat(t.trim())).collect()
}

fn parse_target(s: &str) -> Result<ReduceTarget, String> {
    serde_json::from_value(serde_json::Value::String(s.to_string()))
        .map_err(|_| format!("unknown target {s:?}; expected dantzig, bm, dm or brooks-reny"))
}

fn read(path: &Path) -> Result<String, RunError> {
    std::fs::read_to_string(path).map_err(|e| RunError::Input(format!("cannot read {}: {e}", path.display())))
}

fn execute(cli: Cli) -> Result<String, RunError> {
    let options = Options {
        m: cli.caps.m,
        fm_row_cap: cli.caps.fm_row_cap,
        br_dim_cap: cli.caps.br_dim_cap,
        enum_dim_cap: cli.caps.enum_dim_cap,
    };
    let (command, file) = match cli.command {
        Cmd::Solve { file } => (Command::Solve, file),
        Cmd::Game { file, vertices } => (Command::Game { vertices }, file),
        Cmd::Reduce { file, target } => (Command::Reduce { target }, file),
        Cmd::BoundM { file } => (Command::BoundM, file),
        Cmd::Farkas { file, variant } => (Command::Farkas { variant }, file),
        Cmd::Gordan { file, method } => (Command::Gordan { method }, file),
        Cmd::Ville { file } => (Command::Ville, file),
        Cmd::Stiemke { file } => (Command::Stiemke, file),
        Cmd::Tucker { file, method, column, variant } => (Command::Tucker { method, column, variant }, file),
        Cmd::StrictComp { file, method } => (Command::StrictComp { method }, file),
        Cmd::VerifyPair { file, x, y, strict } => (Command::VerifyPair { x, y, strict }, file),
        Cmd::MinInfeasible { file } => (Command::MinInfeasible, file),
        Cmd::Fm { file } => (Command::Fm, file),
        Cmd::MinSlackW { file } => (Command::MinSlackW, file),
        Cmd::CheckReport { report } => return check_report(&report).map(|v| pretty(&v)),
    };
    let problem = parse_problem(&read(&file)?)?;
    Ok(run(&command, &options, &problem)?.to_json_string())
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

/// Rebuilds the checks of a stored report from its problem and certificate
/// and compares them with the stored transcript.
fn check_report(path: &Path) -> Result<serde_json::Value, RunError> {
    let stored: Report = serde_json::from_str(&read(path)?)
        .map_err(|e| RunError::Input(format!("not a report: line {}, column {}: {e}", e.line(), e.column())))?;
    let checks = recheck(&stored)?;
    let reproduced = checks == stored.checks && checks.iter().all(|c| c.pass) == stored.pass;
    Ok(serde_json::json!({
        "command": {"name": "check-report"},
        "checked": {"command": stored.command, "verdict": stored.verdict},
        "verdict": if reproduced { "Reproduced" } else { "Mismatch" },
        "checks": checks,
        "pass": reproduced && stored.pass,
    }))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli) {
        Ok(text) => {
            // A closed pipe downstream is not an error of ours.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
