use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lie_ncg::{
    cmd_analyze, cmd_compare, cmd_enumerate, cmd_export, cmd_validate, cmd_verify, error_outcome, limits_from_env,
    ExportFormat, Format, Outcome, ScopeKind, VerifyArgs,
};

#[derive(Parser)]
#[command(name = "lie-ncg", version, about = "Non-commuting graphs of Lie algebras over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutArg {
    Dot,
    Graphml,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Catalog,
    Enumerate,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an algebra spec and check the Jacobi identity.
    Validate { spec: PathBuf },
    /// Report graph invariants and algebra facts.
    Analyze {
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Write the non-commuting graph as DOT, GraphML or JSON.
    Export {
        spec: PathBuf,
        #[arg(long = "out", value_enum, default_value = "dot")]
        out: OutArg,
        /// Destination file; stdout if omitted.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check statements over the catalog or an enumeration.
    Verify {
        #[arg(long, value_enum, default_value = "catalog")]
        scope: ScopeArg,
        /// Largest dimension enumerated.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Field orders, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = [2u32])]
        q: Vec<u32>,
        /// One representative per isomorphism class.
        #[arg(long)]
        dedupe: bool,
        #[arg(long, default_value = "all")]
        statement: String,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Compare the graphs and algebras of two specs.
    Compare {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// List enumerated algebras and tabulate graph isomorphism against order.
    Enumerate {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_values_t = [2u32])]
        q: Vec<u32>,
        #[arg(long)]
        dedupe: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
}

fn format(f: FormatArg) -> Format {
    match f {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    }
}

fn run(cli: Cli) -> Outcome {
    let limits = match limits_from_env() {
        Ok(l) => l,
        Err(e) => return error_outcome(e),
    };
    match cli.command {
        Command::Validate { spec } => cmd_validate(&spec),
        Command::Analyze { spec, format: f } => cmd_analyze(&spec, format(f), &limits),
        Command::Export { spec, out, output } => {
            let out = match out {
                OutArg::Dot => ExportFormat::Dot,
                OutArg::Graphml => ExportFormat::GraphMl,
                OutArg::Json => ExportFormat::Json,
            };
            cmd_export(&spec, out, output.as_deref(), &limits)
        }
        Command::Verify {
            scope,
            n,
            q,
            dedupe,
            statement,
            format: f,
        } => {
            let args = VerifyArgs {
                scope: match scope {
                    ScopeArg::Catalog => ScopeKind::Catalog,
                    ScopeArg::Enumerate => ScopeKind::Enumerate,
                },
                max_dim: n,
                fields: q,
                dedupe,
                statement,
            };
            cmd_verify(&args, format(f), &limits)
        }
        Command::Compare { first, second, format: f } => cmd_compare(&first, &second, format(f), &limits),
        Command::Enumerate { n, q, dedupe, format: f } => cmd_enumerate(n, &q, dedupe, format(f), &limits),
    }
}

fn main() -> ExitCode {
    let outcome = run(Cli::parse());
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
