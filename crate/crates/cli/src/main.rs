mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "rejectia", version, about = "Rejective chains, heredity and dimension bounds for finite-dimensional algebras")]
pub struct Cli {
    /// Field characteristic (0 for the rationals); overrides the file.
    #[arg(long, global = true)]
    pub field: Option<u64>,
    /// Maximal number of projective resolution stages.
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap_res: u64,
    /// Maximal depth of relative resolutions.
    #[arg(long, global = true, default_value_t = 32, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap_resdim: u64,
    /// Maximal number of nonzero paths.
    #[arg(long, global = true, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap_paths: u64,
    /// Maximal number of idempotent classes for the quasi-hereditary search.
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
    pub qh_bound: u64,
    #[arg(long, global = true, env = "REJECTIA_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    IteratedRadical,
    IteratedCoradical,
    RadicalSeries,
    CancelRight,
    CancelLeft,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate an algebra and print its basic invariants.
    AlgCheck { file: PathBuf },
    /// Build and classify a chain of subcategories.
    Chain {
        file: PathBuf,
        #[arg(long, value_enum)]
        method: Method,
        /// Module whose additive closure (or radical iterates) is used.
        #[arg(long)]
        module: Option<PathBuf>,
    },
    /// Verify a heredity chain, or search for one.
    Qh {
        file: PathBuf,
        /// Chain such as "{2}⊂{1,2}⊂{1,2,3}".
        #[arg(long)]
        chain: Option<String>,
    },
    /// Neat test of an idempotent or of the sequence induced by a chain.
    Neat {
        file: PathBuf,
        /// Comma-separated vertex labels.
        #[arg(long, conflicts_with = "chain")]
        idempotent: Option<String>,
        #[arg(long)]
        chain: Option<String>,
    },
    /// Global dimension of the algebra, projective dimension of a module, or gl.dim End.
    Gldim {
        file: PathBuf,
        #[arg(long)]
        module: Option<PathBuf>,
        /// Report gl.dim End(M) (M defaults to the regular module).
        #[arg(long)]
        end: bool,
    },
    /// Representation dimension report.
    Repdim { file: PathBuf },
    /// Igusa-Todorov functions of a module.
    Psi {
        file: PathBuf,
        #[arg(long)]
        module: Option<PathBuf>,
        /// Added to ψ in the finitistic dimension bound.
        #[arg(long, default_value_t = 0)]
        shift: usize,
    },
    /// Relative resolution dimension over add M.
    Resdim {
        file: PathBuf,
        /// Generator of the subcategory.
        #[arg(long)]
        module: PathBuf,
        /// Target module; defaults to every indecomposable of a Nakayama algebra.
        #[arg(long)]
        target: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = commands::run(&cli);
    let text = match cli.format {
        Format::Json => out.to_json(),
        Format::Text => out.to_text(),
    };
    println!("{text}");
    if let Some(e) = &out.error {
        eprintln!("error: {e}");
    }
    ExitCode::from(out.code)
}
