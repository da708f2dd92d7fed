use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use leibniz_cli::commands::{self, OutputFormat, Outcome};
use leibniz_cli::report::{FlagKind, FlagRequest, Sections};

#[derive(Parser)]
#[command(name = "leibniz", version, about = "Exact structure theory of finite-dimensional Leibniz algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Machine-readable JSON (default)
    #[arg(long, conflicts_with = "pretty")]
    json: bool,
    /// Human-readable text
    #[arg(long)]
    pretty: bool,
}

impl Output {
    fn format(&self) -> OutputFormat {
        if self.pretty {
            OutputFormat::Pretty
        } else {
            OutputFormat::Json
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FlagArg {
    Engel,
    Lie,
}

#[derive(Subcommand)]
enum Command {
    /// Check the file and the Leibniz (and bimodule) axioms
    Validate {
        path: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Structure report; without section flags every section is computed
    Analyze {
        path: PathBuf,
        #[arg(long)]
        series: bool,
        #[arg(long)]
        centers: bool,
        #[arg(long)]
        radical: bool,
        #[arg(long)]
        nilradical: bool,
        #[arg(long)]
        levi: bool,
        /// Complete flag to compute (repeatable)
        #[arg(long, value_enum)]
        flag: Vec<FlagArg>,
        #[arg(long)]
        identities: bool,
        #[arg(long)]
        derivations: bool,
        #[arg(long)]
        classify: bool,
        /// Exit nonzero when the report carries warnings
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Write the quotient by the span of the squares
    Liezation {
        path: PathBuf,
        /// Output file (standard output if omitted)
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Identify an algebra of dimension at most 2
    Classify {
        path: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Validate and analyze every file of a corpus directory
    CorpusCheck {
        dir: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Validate { path, output } => commands::validate(&path, output.format()),
        Command::Analyze {
            path,
            series,
            centers,
            radical,
            nilradical,
            levi,
            flag,
            identities,
            derivations,
            classify,
            strict,
            output,
        } => {
            let flags = if flag.is_empty() {
                FlagRequest::Off
            } else {
                FlagRequest::Only(
                    flag.iter()
                        .map(|f| match f {
                            FlagArg::Engel => FlagKind::Engel,
                            FlagArg::Lie => FlagKind::Lie,
                        })
                        .collect(),
                )
            };
            let sections = Sections {
                series,
                centers,
                radical,
                nilradical,
                levi,
                identities,
                derivations,
                classify,
                flags,
            };
            commands::analyze_path(&path, &sections, strict, output.format())
        }
        Command::Liezation { path, out } => commands::liezation_cmd(&path, out.as_deref()),
        Command::Classify { path, output } => commands::classify_cmd(&path, output.format()),
        Command::CorpusCheck { dir, output } => {
            let dir = dir.unwrap_or_else(leibniz_cli::corpus_dir);
            commands::corpus_check(&dir, output.format())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = run(cli);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.exit as u8)
}
