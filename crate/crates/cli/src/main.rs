use clap::{Args, Parser, Subcommand};
use quartic_reduction_cli::commands::{
    cmd_batch, cmd_classify, cmd_invariants, cmd_picard, split_scalars, CurveInput, Outcome,
};
use quartic_reduction_cli::docs::Detail;
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "quartic-reduction", version, about = "Invariants and potential reduction types of plane quartics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CurveArgs {
    /// Homogeneous quartic in x, y, z, e.g. "x^3*y + y^3*z + z^3*x".
    expr: Option<String>,
    /// The 15 coefficients in graded-lex order, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
    /// The 13 Dixmier-Ohno invariants, comma separated.
    #[arg(long = "do", allow_hyphen_values = true)]
    dixmier_ohno: Option<String>,
}

#[derive(Args)]
struct Common {
    /// Label to carry into the output.
    #[arg(long)]
    label: Option<String>,
    /// Emit JSON instead of a table.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DetailArgs {
    /// Include the HSOP catalog used at each prime.
    #[arg(long)]
    hsop: bool,
    /// Include every intermediate valuation.
    #[arg(long)]
    certificate: bool,
}

impl DetailArgs {
    fn detail(&self) -> Detail {
        Detail { hsop: self.hsop, certificate: self.certificate }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print Dixmier-Ohno invariants, iota, the discriminant and rho.
    Invariants {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Decide the potential reduction type at each prime.
    Classify {
        #[command(flatten)]
        curve: CurveArgs,
        /// Primes, comma separated.
        #[arg(long, visible_alias = "p", short = 'p', value_delimiter = ',', required = true)]
        primes: Vec<u64>,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        detail: DetailArgs,
    },
    /// Classify the Picard curve y³ = x⁴ + a x² + b x + c.
    Picard {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(long, visible_alias = "p", short = 'p', value_delimiter = ',', required = true)]
        primes: Vec<u64>,
        /// Emit JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Classify every line of an NDJSON file; writes NDJSON in input order.
    Batch {
        file: PathBuf,
        /// Worker threads (0 uses all cores).
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[command(flatten)]
        detail: DetailArgs,
    },
}

fn curve_input(curve: CurveArgs, label: Option<String>) -> CurveInput {
    CurveInput {
        label,
        expr: curve.expr,
        coeffs: curve.coeffs.as_deref().map(split_scalars),
        dixmier_ohno: curve.dixmier_ohno.as_deref().map(split_scalars),
    }
}

fn main() {
    let cli = Cli::parse();
    let outcome: Outcome = match cli.command {
        Command::Invariants { curve, common } => cmd_invariants(&curve_input(curve, common.label), common.json),
        Command::Classify { curve, primes, common, detail } => {
            cmd_classify(&curve_input(curve, common.label), &primes, common.json, detail.detail())
        }
        Command::Picard { a, b, c, primes, json } => cmd_picard(&a, &b, &c, &primes, json),
        Command::Batch { file, threads, detail } => cmd_batch(&file, threads, detail.detail()),
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    std::process::exit(outcome.code);
}
