//! File format, reports and subcommands behind the `leibniz` binary.

pub mod commands;
pub mod format;
pub mod report;

/// Directory of the bundled corpus files.
pub fn corpus_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}
