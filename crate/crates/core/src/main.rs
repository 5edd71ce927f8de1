use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use quatstar::expr::{evaluate_checked, parse_expression};
use quatstar::fuzz::{self, FuzzConfig};
use quatstar::oracle::bracket_oracle;
use quatstar::verify::{self, Format};
use quatstar::{
    poisson_bracket, BracketPair, Error, NuMode, QPoly, Rational, StarConfig, ThetaSpec,
};

const EXIT_USAGE: u8 = 2;
const EXIT_FUZZ: u8 = 5;

#[derive(Parser)]
#[command(
    name = "quatstar",
    version,
    about = "Exact star products of quaternion-valued polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression and print its canonical form.
    Eval(Box<EvalArgs>),
    /// Check the catalogued identities and print a report.
    Verify(VerifyArgs),
    /// Compare the star product against the oracle on random polynomials.
    Fuzz(FuzzArgs),
    /// Print tables of brackets.
    Table(TableArgs),
}

#[derive(Args)]
struct EvalArgs {
    expr: String,
    /// `formal`, `zero`, or a list such as `ab=1,cd=-2` (missing pairs are 0).
    #[arg(long, default_value = "formal", value_parser = parse_theta)]
    theta: ThetaSpec<Rational>,
    /// `formal` or a rational number.
    #[arg(long, default_value = "formal", value_parser = parse_nu)]
    nu: NuMode<Rational>,
    /// Drop every term of order above N in nu.
    #[arg(long, value_name = "N")]
    order_cap: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run a single identity.
    #[arg(long)]
    id: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FuzzArgs {
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 4)]
    max_degree: u32,
}

#[derive(Args)]
struct TableArgs {
    /// Every bracket {x,y}_mn for x, y among q, qbar and the q, q^2 pairs.
    #[arg(long)]
    brackets: bool,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    Rational::from_str(s.trim()).map_err(|_| format!("`{s}` is not a rational number"))
}

fn parse_theta(s: &str) -> Result<ThetaSpec<Rational>, String> {
    match s {
        "formal" => return Ok(ThetaSpec::Formal),
        "zero" => return Ok(ThetaSpec::zero()),
        _ => {}
    }
    let mut values: [Rational; 6] = std::array::from_fn(|_| Rational::from_integer(0.into()));
    for entry in s.split(',') {
        let (pair, value) = entry
            .split_once('=')
            .ok_or_else(|| format!("expected `pair=value`, found `{entry}`"))?;
        let pair = BracketPair::from_name(pair.trim()).ok_or_else(|| {
            format!(
                "unknown pair `{}`; use ab, ac, ad, bc, bd or cd",
                pair.trim()
            )
        })?;
        values[pair as usize] = parse_rational(value)?;
    }
    Ok(ThetaSpec::Numeric(values))
}

fn parse_nu(s: &str) -> Result<NuMode<Rational>, String> {
    if s == "formal" {
        Ok(NuMode::Formal)
    } else {
        parse_rational(s).map(NuMode::Numeric)
    }
}

fn report_error(e: &Error, source: Option<&str>) -> ExitCode {
    eprintln!("error: {e}");
    if let (Error::Parse(p), Some(src)) = (e, source) {
        eprintln!("  {src}");
        eprintln!("  {}^", " ".repeat(p.column.saturating_sub(1)));
    }
    ExitCode::from(e.exit_code())
}

fn eval(args: EvalArgs) -> ExitCode {
    let cfg = StarConfig {
        theta: args.theta,
        nu: args.nu,
        order_cap: args.order_cap,
    };
    let result = parse_expression(&args.expr)
        .map_err(Error::from)
        .and_then(|e| evaluate_checked(&e, &cfg));
    match result {
        Ok(p) => {
            println!("{p}");
            ExitCode::SUCCESS
        }
        Err(e) => report_error(&e, Some(&args.expr)),
    }
}

fn verify(args: VerifyArgs) -> ExitCode {
    let report = match &args.id {
        Some(id) => verify::run_identity(id).map(|r| verify::DiscrepancyReport::new(vec![r])),
        None => verify::run_all(),
    };
    let report = match report {
        Ok(r) => r,
        Err(e) => return report_error(&e, None),
    };
    let format = match args.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    let text = verify::render_report(&report, format);
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::SUCCESS
}

fn run_fuzz(args: FuzzArgs) -> ExitCode {
    let out = fuzz::run(FuzzConfig {
        trials: args.trials,
        seed: args.seed,
        max_degree: args.max_degree,
    });
    let c = &out.config;
    match &out.failure {
        None => {
            println!(
                "ok: {} trials, {} checks, seed {}, max degree {}",
                c.trials, out.checks, c.seed, c.max_degree
            );
            ExitCode::SUCCESS
        }
        Some(cex) => {
            println!("FAILED: minimized counterexample");
            print!("{cex}");
            ExitCode::from(EXIT_FUZZ)
        }
    }
}

fn table(args: TableArgs) -> ExitCode {
    if !args.brackets {
        eprintln!("error: choose a table, e.g. `table --brackets`");
        return ExitCode::from(EXIT_USAGE);
    }
    let q = QPoly::q();
    let qbar = QPoly::qbar();
    let q2 = &q * &q;
    let operands: [(&str, &QPoly, &str, &QPoly); 6] = [
        ("q", &q, "q", &q),
        ("q", &q, "qbar", &qbar),
        ("qbar", &qbar, "q", &q),
        ("qbar", &qbar, "qbar", &qbar),
        ("q", &q, "q^2", &q2),
        ("q^2", &q2, "q", &q),
    ];
    for (xn, x, yn, y) in operands {
        for p in BracketPair::ALL {
            let value = poisson_bracket(x, y, p);
            let check = bracket_oracle(x, y, p);
            if value != check {
                let e = Error::Divergence {
                    context: format!("{{{xn},{yn}}}_{p}"),
                    engine: value.to_string(),
                    oracle: check.to_string(),
                };
                return report_error(&e, None);
            }
            println!("{{{xn},{yn}}}_{p} = {value}");
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Eval(a) => eval(*a),
        Command::Verify(a) => verify(a),
        Command::Fuzz(a) => run_fuzz(a),
        Command::Table(a) => table(a),
    }
}
