use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hopfcyc_cli::commands::{self, Command, Options};
use hopfcyc_core::charmap::CyclicConvention;

#[derive(Parser)]
#[command(name = "hopfcyc", version, about = "Exact checks for Hopf cyclic cohomology")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Hopf axioms and twisted antipode properties, or module-algebra axioms.
    Validate(Common),
    /// Whether a pair (δ, σ) is a modular pair in involution.
    PairCheck(Common),
    /// Enumerate group-like basis vectors against known characters.
    PairSearch(Common),
    /// Check every cocyclic relation up to --max-level.
    CyclicVerify(Common),
    /// Hochschild and cyclic cohomology dimensions up to --max-degree.
    Cohomology(Common),
    /// The dual Hopf algebra and transported pairs.
    Dual(Common),
    /// Quasitriangularity of R and the Drinfeld element.
    Drinfeld(Common),
    /// The double cover H(θ) and its canonical pair.
    DoubleCover(Common),
    /// All invariant σ-traces on a module algebra.
    TraceSpace(Common),
    /// Check that the characteristic map intertwines all operators.
    CharmapVerify(Common),
    /// Write the built-in catalog as manifest files.
    ExportCatalog(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum Convention {
    Rotation,
    SigmaRotation,
}

#[derive(Args)]
struct Common {
    /// Hopf algebra or module algebra name.
    #[arg(long)]
    object: Option<String>,
    /// Modular pair name. Defaults to the pair a trace declares, else the
    /// first pair of the algebra.
    #[arg(long)]
    pair: Option<String>,
    /// R-matrix name.
    #[arg(long = "r")]
    r: Option<String>,
    /// Trace name for charmap-verify.
    #[arg(long)]
    trace: Option<String>,
    #[arg(long, default_value_t = 3)]
    max_level: usize,
    #[arg(long, default_value_t = 3)]
    max_degree: usize,
    /// Largest permitted dimension of a materialized level.
    #[arg(long, default_value_t = hopfcyc_core::cyclic::DEFAULT_MAX_SPACE)]
    max_space: usize,
    /// Build the cocyclic module even if the pair is not in involution.
    #[arg(long)]
    unchecked: bool,
    /// Cyclic operator on module-algebra cochains.
    #[arg(long, value_enum, default_value = "rotation")]
    convention: Convention,
    /// Manifest file; the built-in catalog is used when absent.
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Output directory for export-catalog.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Omit wall-clock timings so reports are byte-for-byte reproducible.
    #[arg(long)]
    no_timings: bool,
}

impl From<Common> for Options {
    fn from(c: Common) -> Self {
        Options {
            object: c.object,
            pair: c.pair,
            r: c.r,
            trace: c.trace,
            max_level: c.max_level,
            max_degree: c.max_degree,
            max_space: c.max_space,
            unchecked: c.unchecked,
            convention: match c.convention {
                Convention::Rotation => CyclicConvention::Rotation,
                Convention::SigmaRotation => CyclicConvention::SigmaRotation,
            },
            manifest: c.manifest,
            out: c.out,
            timings: !c.no_timings,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, common) = match cli.command {
        Cmd::Validate(c) => (Command::Validate, c),
        Cmd::PairCheck(c) => (Command::PairCheck, c),
        Cmd::PairSearch(c) => (Command::PairSearch, c),
        Cmd::CyclicVerify(c) => (Command::CyclicVerify, c),
        Cmd::Cohomology(c) => (Command::Cohomology, c),
        Cmd::Dual(c) => (Command::Dual, c),
        Cmd::Drinfeld(c) => (Command::Drinfeld, c),
        Cmd::DoubleCover(c) => (Command::DoubleCover, c),
        Cmd::TraceSpace(c) => (Command::TraceSpace, c),
        Cmd::CharmapVerify(c) => (Command::CharmapVerify, c),
        Cmd::ExportCatalog(c) => (Command::ExportCatalog, c),
    };
    let outcome = commands::run(command, &common.into());
    println!("{}", serde_json::to_string_pretty(&outcome.document).expect("serializable"));
    eprintln!("{}", outcome.summary);
    ExitCode::from(outcome.exit_code as u8)
}
