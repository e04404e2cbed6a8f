//! Command-line front end: load a presentation file, run one operation, report the verdict.

pub mod commands;
pub mod corpus;
pub mod format;
pub mod report;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use commands::Options;
use format::{parse_presentation, Document, InputError, Kind};
use report::Report;

#[derive(Debug, Parser)]
#[command(name = "hopfkit", version, about = "Exact verification of finite-dimensional Hopf-algebraic structures")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Emit the machine-readable report.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized search stages.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Random draws after the deterministic ladder.
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    /// Re-verify every emitted certificate before exiting.
    #[arg(long, global = true)]
    pub certify: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the identities of a structure.
    Check {
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        file: PathBuf,
    },
    /// Compute the antipode of a bialgebra by convolution inversion.
    Antipode { file: PathBuf },
    /// The dual Hopf algebra.
    Dual { file: PathBuf },
    /// The coinvariant subalgebra of a comodule algebra.
    Coinvariants { file: PathBuf },
    /// Bijectivity of the Galois map.
    Galois { file: PathBuf },
    /// Whether a graded algebra is strongly graded.
    StronglyGraded { file: PathBuf },
    /// Recognize a graded algebra as a group crossed product.
    RecognizeCrossed { file: PathBuf },
    /// Build the crossed product of a crossed system.
    CrossedProduct { file: PathBuf },
    /// Search for a section of a comodule algebra.
    FindSection { file: PathBuf },
    /// Recognize a comodule algebra as a crossed product.
    RecognizeCleft { file: PathBuf },
    /// Classify an augmented cleft extension by its cohomology class.
    ClassifyCleft { file: PathBuf },
    /// Second Hochschild cohomology of a module.
    Hh2 { file: PathBuf },
    /// Split an augmented cleft extension.
    Split { file: PathBuf },
    /// Lift a comodule algebra map through a surjection with nilpotent kernel.
    Lift { file: PathBuf },
    /// The smash coproduct of a comodule coalgebra.
    SmashCoproduct { file: PathBuf },
    /// Decompose a commutative Hopf superalgebra.
    SuperDecompose { file: PathBuf },
    /// The duality pairing of exterior Hopf superalgebras.
    Pairing { file: PathBuf },
    /// Write the bundled example files to a directory.
    ExportCorpus { dir: PathBuf },
}

/// Everything a run produces; `main` only prints and exits.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn file_label(path: &Path) -> String {
    path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned())
}

fn dispatch(command: &Command, opts: &Options) -> Result<Report, InputError> {
    let load = |file: &PathBuf| -> Result<(Document, String), InputError> { Ok((parse_presentation(file)?, file_label(file))) };
    match command {
        Command::Check { kind, file } => {
            let (doc, input) = load(file)?;
            commands::check(&doc, *kind, &input)
        }
        Command::Antipode { file } => load(file).and_then(|(d, i)| commands::antipode(&d, opts, &i)),
        Command::Dual { file } => load(file).and_then(|(d, i)| commands::dual(&d, opts, &i)),
        Command::Coinvariants { file } => load(file).and_then(|(d, i)| commands::coinvariants_cmd(&d, opts, &i)),
        Command::Galois { file } => load(file).and_then(|(d, i)| commands::galois(&d, opts, &i)),
        Command::StronglyGraded { file } => load(file).and_then(|(d, i)| commands::strongly_graded(&d, &i)),
        Command::RecognizeCrossed { file } => load(file).and_then(|(d, i)| commands::recognize_crossed(&d, opts, &i)),
        Command::CrossedProduct { file } => load(file).and_then(|(d, i)| commands::crossed_product_cmd(&d, opts, &i)),
        Command::FindSection { file } => load(file).and_then(|(d, i)| commands::find_section_cmd(&d, opts, &i)),
        Command::RecognizeCleft { file } => load(file).and_then(|(d, i)| commands::recognize_cleft(&d, opts, &i)),
        Command::ClassifyCleft { file } => load(file).and_then(|(d, i)| commands::classify_cleft(&d, opts, &i)),
        Command::Hh2 { file } => load(file).and_then(|(d, i)| commands::hh2_cmd(&d, opts, &i)),
        Command::Split { file } => load(file).and_then(|(d, i)| commands::split(&d, opts, &i)),
        Command::Lift { file } => load(file).and_then(|(d, i)| commands::lift(&d, opts, &i)),
        Command::SmashCoproduct { file } => load(file).and_then(|(d, i)| commands::smash_coproduct_cmd(&d, opts, &i)),
        Command::SuperDecompose { file } => load(file).and_then(|(d, i)| commands::super_decompose(&d, opts, &i)),
        Command::Pairing { file } => load(file).and_then(|(d, i)| commands::pairing(&d, opts, &i)),
        Command::ExportCorpus { .. } => unreachable!("handled before dispatch"),
    }
}

pub fn run(cli: &Cli) -> Outcome {
    if let Command::ExportCorpus { dir } = &cli.command {
        return match corpus::export(dir) {
            Ok(names) => Outcome {
                stdout: names.iter().map(|n| format!("{n}\n")).collect(),
                stderr: String::new(),
                code: 0,
            },
            Err(e) => Outcome {
                stdout: String::new(),
                stderr: format!("error: {}: {e}\n", dir.display()),
                code: 2,
            },
        };
    }
    let opts = Options {
        seed: cli.global.seed,
        budget: cli.global.budget,
        certify: cli.global.certify,
    };
    let start = Instant::now();
    match dispatch(&cli.command, &opts) {
        Ok(mut report) => {
            report.elapsed = Some(start.elapsed());
            let stdout = if cli.global.json { report.to_json() } else { report.to_human() };
            Outcome {
                stdout,
                stderr: String::new(),
                code: report.exit_code(),
            }
        }
        Err(e) => {
            let stdout = if cli.global.json {
                let (kind, location) = match &e {
                    InputError::Parse { location, .. } => ("ParseError", location.clone()),
                    InputError::Validation { identity, .. } => ("ValidationError", identity.clone()),
                };
                format::to_pretty(&serde_json::json!({
                    "error": kind,
                    "location": location,
                    "message": e.to_string(),
                }))
            } else {
                String::new()
            };
            Outcome {
                stdout,
                stderr: format!("error: {e}\n"),
                code: 2,
            }
        }
    }
}

/// Parses `args` (program name first) and runs; clap errors exit with 2.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            }
        }
    }
}
