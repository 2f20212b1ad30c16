use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use symconv::arith::{Bindings, MultiPoly, Rational, Var};
use symconv::egf::{egf_special, symmetric_phi_series, symmetric_s_series, EgfSeries, SpecialEgf};
use symconv::report::{run, Report, Selection, VariantFilter};
use symconv::sequences::{bernoulli_number, euler_number, genocchi_number, poly_family, PolyKind};
use symconv::symfun::{sym_ehp, sym_phi, sym_s, LetterPair, SymKind};

#[derive(Parser)]
#[command(
    name = "symconv",
    version,
    about = "Exact checker for binomial convolution identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check identities over their index ranges.
    Verify(RunArgs),
    /// Print one exact value.
    Compute {
        /// bernoulli, euler, genocchi, a polynomial family, or sym_s/sym_phi/sym_e/sym_h/sym_p
        what: String,
        #[arg(allow_negative_numbers = true)]
        n: i64,
        /// Point to evaluate at, e.g. `y=1,t=1`.
        #[arg(long, value_parser = parse_point)]
        at: Option<Bindings>,
    },
    /// Verification document with the errata table.
    Report(RunArgs),
    /// Exponential generating function coefficients `[z^n/n!]` up to an order.
    Series {
        /// bernoulli, euler, genocchi, bernoulli_poly, euler_poly, genocchi_poly, sym_s or sym_phi
        what: String,
        order: usize,
        #[arg(long, value_parser = parse_point)]
        at: Option<Bindings>,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Every registered identity (the default).
    #[arg(long, conflicts_with = "id")]
    all: bool,
    /// `ID` or `ID:variant`; repeatable.
    #[arg(long)]
    id: Vec<String>,
    /// Upper index for every selected identity.
    #[arg(long)]
    max_n: Option<u32>,
    #[arg(long, default_value = "both", value_parser = parse_filter)]
    variant: VariantFilter,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Markdown,
}

fn parse_filter(s: &str) -> Result<VariantFilter, String> {
    s.parse()
}

fn parse_point(s: &str) -> Result<Bindings, String> {
    s.split(',')
        .map(|pair| {
            let (name, value) = pair
                .split_once('=')
                .ok_or_else(|| format!("expected var=value, got {pair:?}"))?;
            let var =
                Var::from_name(name.trim()).ok_or_else(|| format!("unknown variable: {name}"))?;
            let value: Rational = value.trim().parse().map_err(|e| format!("{value}: {e}"))?;
            Ok((var, MultiPoly::constant(value)))
        })
        .collect()
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure {
            code: 2,
            message: format!("{}: {e}", path.display()),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_grid(command: &str, args: &RunArgs, default_format: Format) -> Result<u8, Failure> {
    let sel = Selection {
        ids: (!args.id.is_empty()).then(|| args.id.clone()),
        max_n: args.max_n.map(i64::from),
        variant: args.variant,
    };
    let report: Report = run(command, &sel).map_err(|e| usage(e.to_string()))?;
    let text = match args.format.unwrap_or(default_format) {
        Format::Json => report.to_json(),
        Format::Markdown => report.to_markdown(),
        Format::Text => report.to_text(command == "verify" && sel.ids.is_some()),
    };
    emit(&text, args.output.as_ref())?;
    Ok(if report.authoritative_pass() { 0 } else { 1 })
}

fn at_point(p: MultiPoly, at: &Option<Bindings>) -> MultiPoly {
    match at {
        Some(b) => p.substitute(b),
        None => p,
    }
}

fn compute(what: &str, n: i64, at: &Option<Bindings>) -> Result<String, Failure> {
    let pair = LetterPair::indeterminates();
    if what == "sym_s" {
        return Ok(at_point(sym_s(&pair, n), at).to_string());
    }
    let idx =
        u32::try_from(n).map_err(|_| usage(format!("index must be non-negative, got {n}")))?;
    let k = idx as usize;
    let value = match what {
        "bernoulli" => MultiPoly::constant(bernoulli_number(k)),
        "euler" => MultiPoly::constant(euler_number(k)),
        "genocchi" => MultiPoly::constant(genocchi_number(k)),
        "sym_phi" => sym_phi(&pair, idx),
        "sym_e" => sym_ehp(SymKind::E, idx, &pair),
        "sym_h" => sym_ehp(SymKind::H, idx, &pair),
        "sym_p" => sym_ehp(SymKind::P, idx, &pair),
        other => {
            let kind: PolyKind = other.parse().map_err(usage)?;
            poly_family(kind).get(k)
        }
    };
    Ok(at_point(value, at).to_string())
}

fn series(what: &str, order: usize, at: &Option<Bindings>) -> Result<String, Failure> {
    let s: EgfSeries = match what {
        "bernoulli" => egf_special(SpecialEgf::Bernoulli, order, None),
        "euler" => egf_special(SpecialEgf::Euler, order, None),
        "genocchi" => egf_special(SpecialEgf::Genocchi, order, None),
        "bernoulli_poly" => egf_special(SpecialEgf::BernoulliPoly, order, None),
        "euler_poly" => egf_special(SpecialEgf::EulerPoly, order, None),
        "genocchi_poly" => egf_special(SpecialEgf::GenocchiPoly, order, None),
        "sym_s" => symmetric_s_series(order),
        "sym_phi" => symmetric_phi_series(order),
        other => return Err(usage(format!("unknown series: {other}"))),
    };
    Ok((0..=order)
        .map(|n| format!("{n}: {}\n", at_point(s.coeff(n).clone(), at)))
        .collect())
}

fn dispatch(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Verify(args) => run_grid("verify", &args, Format::Text),
        Command::Report(args) => run_grid("report", &args, Format::Markdown),
        Command::Compute { what, n, at } => {
            println!("{}", compute(&what, n, &at)?);
            Ok(0)
        }
        Command::Series { what, order, at } => {
            print!("{}", series(&what, order, &at)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}
