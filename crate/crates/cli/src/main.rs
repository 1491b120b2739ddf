//! `sumzero`: tables, Stirling triangles, virtual Poincaré polynomials and
//! the verification suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::fmt;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use sumzero_core::oracles::DEFAULT_ENUMERATION_BUDGET;
use sumzero_core::stirling::DEFAULT_N_MAX;
use sumzero_core::verify::{run_suite, VerifyConfig};
use sumzero_core::{
    elliptic_curve_poincare, render_row, virtual_poincare, ClassPolynomial, IntPoly, OutputFormat,
    Space, StirlingTable, Var,
};

#[derive(Parser, Debug)]
#[command(
    name = "sumzero",
    version,
    about = "Classes of configuration spaces on elliptic curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Class polynomials [F_n(E)] or [F_n^0(E)], one row per n.
    Table {
        #[arg(long, value_enum)]
        space: SpaceArg,
        /// Single n or inclusive range `a..b`.
        #[arg(long)]
        n: NRange,
        #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
        format: FormatArg,
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: usize,
    },
    /// Rows of s(n,k) or s_m(n,k) for k = 1..n.
    Stirling {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: NRange,
        #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
        format: FormatArg,
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: usize,
    },
    /// Virtual Poincaré polynomial, substituting S(X) for the class variable.
    Poincare {
        #[arg(long, value_enum)]
        space: SpaceArg,
        #[arg(long)]
        n: usize,
        /// S(X) as a JSON coefficient array, lowest degree first.
        #[arg(long, default_value = "[1,2,1]")]
        sx: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
        format: FormatArg,
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: usize,
    },
    /// Run every consistency check; exits 1 on any failure.
    Verify {
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        /// Maximum tuples visited by each counting oracle.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        oracle_budget: u128,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SpaceArg {
    Fn,
    Fn0,
}

impl From<SpaceArg> for Space {
    fn from(s: SpaceArg) -> Space {
        match s {
            SpaceArg::Fn => Space::Fn,
            SpaceArg::Fn0 => Space::Fn0,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    S,
    Sm,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Plain,
    Latex,
    Json,
    Csv,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> OutputFormat {
        match f {
            FormatArg::Plain => OutputFormat::Plain,
            FormatArg::Latex => OutputFormat::Latex,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
        }
    }
}

/// Inclusive range of `n`, written `5` or `2..8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct NRange {
    from: usize,
    to: usize,
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<NRange, String> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{t}` is not a non-negative integer"))
        };
        let (from, to) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let n = parse(s)?;
                (n, n)
            }
        };
        if from > to {
            return Err(format!("empty range {from}..{to}"));
        }
        Ok(NRange { from, to })
    }
}

/// A failure that should end the process with exit code 2.
struct UsageError(String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<sumzero_core::Error> for UsageError {
    fn from(e: sumzero_core::Error) -> Self {
        UsageError(e.to_string())
    }
}

fn check_range(range: NRange, n_max: usize) -> Result<(), UsageError> {
    if range.from == 0 || range.to > n_max {
        return Err(UsageError(format!(
            "n range {}..{} must lie within 1..{n_max}",
            range.from, range.to
        )));
    }
    Ok(())
}

fn cmd_table(
    space: Space,
    range: NRange,
    format: OutputFormat,
    n_max: usize,
) -> Result<Vec<String>, UsageError> {
    check_range(range, n_max)?;
    let table = StirlingTable::new(range.to);
    (range.from..=range.to)
        .map(|n| Ok(ClassPolynomial::from_table(&table, space, n)?.render_row(format)))
        .collect()
}

fn cmd_stirling(
    kind: KindArg,
    range: NRange,
    format: OutputFormat,
    n_max: usize,
) -> Result<Vec<String>, UsageError> {
    check_range(range, n_max)?;
    let table = StirlingTable::new(range.to);
    let label = match kind {
        KindArg::S => "s",
        KindArg::Sm => "sm",
    };
    (range.from..=range.to)
        .map(|n| {
            let row = match kind {
                KindArg::S => table.s_row(n)?,
                KindArg::Sm => table.s_mod_row(n)?,
            };
            let values: Vec<String> = row.iter().map(ToString::to_string).collect();
            Ok(match format {
                OutputFormat::Plain => values.join(", "),
                OutputFormat::Latex => format!("{n} & {} \\\\", values.join(" & ")),
                OutputFormat::Json => {
                    let quoted: Vec<String> = values.iter().map(|v| format!("\"{v}\"")).collect();
                    format!(
                        "{{\"n\":{n},\"kind\":\"{label}\",\"values\":[{}]}}",
                        quoted.join(",")
                    )
                }
                OutputFormat::Csv => format!("{n},{}", values.join(",")),
            })
        })
        .collect()
}

fn cmd_poincare(
    space: Space,
    n: usize,
    sx: &str,
    format: OutputFormat,
    n_max: usize,
) -> Result<Vec<String>, UsageError> {
    check_range(
        NRange {
            from: n.max(1),
            to: n,
        },
        n_max,
    )?;
    let sx = if sx.trim().is_empty() {
        elliptic_curve_poincare()
    } else {
        IntPoly::parse_json(Var::Lower, sx).map_err(|e| UsageError(format!("--sx: {e}")))?
    };
    let class = ClassPolynomial::from_table(&StirlingTable::new(n), space, n)?;
    let poly = virtual_poincare(&class, &sx)?;
    Ok(vec![render_row(n, space, &poly, "x", format)])
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let lines = match cli.command {
        Command::Table {
            space,
            n,
            format,
            n_max,
        } => cmd_table(space.into(), n, format.into(), n_max),
        Command::Stirling {
            kind,
            n,
            format,
            n_max,
        } => cmd_stirling(kind, n, format.into(), n_max),
        Command::Poincare {
            space,
            n,
            sx,
            format,
            n_max,
        } => cmd_poincare(space.into(), n, &sx, format.into(), n_max),
        Command::Verify {
            n_max,
            oracle_budget,
        } => {
            let results = run_suite(&VerifyConfig {
                n_max,
                oracle_budget,
            });
            for r in &results {
                println!("{r}");
            }
            let failed = results.iter().filter(|r| r.failed()).count();
            eprintln!("{} checks, {failed} failed", results.len());
            return if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match lines {
        Ok(lines) => {
            for line in lines {
                println!("{line}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
