use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cmfdb::rational::parse_rational_list;
use cmfdb::Rational;
use cmfdb_cli::{run, Command, Coords, Format, RunConfig};

#[derive(Parser)]
#[command(name = "cmfdb", version, about = "Coproducts and antipodes of the Connes-Moscovici and Faà di Bruno Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoordsArg {
    Delta,
    A,
    Gamma,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Coproduct of one generator.
    Coproduct {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        degree: u32,
        #[arg(long, value_enum, default_value = "delta")]
        coords: CoordsArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Antipode of one generator.
    Antipode {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        degree: u32,
        #[arg(long, value_enum, default_value = "delta")]
        coords: CoordsArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Coefficient tables and collected formulas up to a degree.
    Tables {
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..=12))]
        degree: u32,
    },
    /// Cross-check every formula up to a degree; exits 1 on any failure.
    Verify {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        degree: u32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
        trials: u32,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Formal conjugacy of x' = u(x), u(x) = x + u_1 x^2 + u_2 x^3 + ..., to x' = x.
    Conjugate {
        /// Comma-separated u_1, u_2, ... as exact rationals.
        #[arg(long, value_parser = parse_u, allow_hyphen_values = true, default_value = "")]
        u: RationalList,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        order: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
}

#[derive(Clone)]
struct RationalList(Vec<Rational>);

fn parse_u(s: &str) -> Result<RationalList, String> {
    parse_rational_list(s).map(RationalList).map_err(|e| e.to_string())
}

impl From<CoordsArg> for Coords {
    fn from(c: CoordsArg) -> Self {
        match c {
            CoordsArg::Delta => Coords::Delta,
            CoordsArg::A => Coords::A,
            CoordsArg::Gamma => Coords::Gamma,
        }
    }
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Table => Format::Table,
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

fn config(cmd: Cmd) -> RunConfig {
    let base = RunConfig::default();
    match cmd {
        Cmd::Coproduct { degree, coords, format } => RunConfig {
            command: Command::Coproduct,
            degree,
            coords: coords.into(),
            format: format.into(),
            ..base
        },
        Cmd::Antipode { degree, coords, format } => RunConfig {
            command: Command::Antipode,
            degree,
            coords: coords.into(),
            format: format.into(),
            ..base
        },
        Cmd::Tables { degree } => RunConfig { command: Command::Tables, degree, ..base },
        Cmd::Verify { degree, seed, trials, inject_fault } => RunConfig {
            command: Command::Verify,
            degree,
            seed,
            trials,
            inject_fault,
            ..base
        },
        Cmd::Conjugate { u, order, format } => RunConfig {
            command: Command::Conjugate,
            u: u.0,
            order: order as usize,
            format: format.into(),
            ..base
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = config(cli.command);
    let out = match run(&cfg) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, &out.text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{}", out.text),
    }
    ExitCode::from(out.exit_code as u8)
}
