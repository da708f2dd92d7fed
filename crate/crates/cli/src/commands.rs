//! Subcommand implementations. Each returns its exit status and output text
//! instead of printing, so tests can drive them directly.

use std::path::{Path, PathBuf};

use leibniz_core::classify::classify_dim_le2;
use leibniz_core::reps::{check_bimodule_axioms, is_faithful};
use leibniz_core::structure::liezation;
use leibniz_core::{Error, LeibnizAlgebra, ViolationReport};
use serde_json::{json, Map, Value};

use crate::format::{self, AlgebraFile, FormatError, Metadata};
use crate::report::{self, analyze, json_string, Sections, Severity};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Json,
    Pretty,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub exit: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn render(exit: i32, value: &Value, output: OutputFormat) -> Self {
        let stdout = match output {
            OutputFormat::Json => json_string(value),
            OutputFormat::Pretty => report::text(value),
        };
        Outcome {
            exit,
            stdout,
            stderr: String::new(),
        }
    }

    fn format_error(e: &FormatError) -> Self {
        Outcome {
            exit: EXIT_IO,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn axiom_phrase(label: &str, alg: &LeibnizAlgebra, report: &ViolationReport) -> String {
    if report.is_empty() {
        return format!("{label}: yes");
    }
    let witnesses: Vec<String> = report
        .violations
        .iter()
        .map(|v| report::witness_labels(alg.basis_names(), &v.witness))
        .collect();
    let noun = if witnesses.len() == 1 { "witness" } else { "witnesses" };
    format!("{label}: no ({noun} {})", witnesses.join("; "))
}

fn validation_value(file: &AlgebraFile) -> (bool, Value) {
    let alg = &file.algebra;
    let names = alg.basis_names();
    let left = alg.check_left_leibniz();
    let right = alg.check_right_leibniz();
    let mut ok = left.is_empty();
    let mut root = Map::new();
    root.insert("name".into(), json!(file.metadata.name));
    root.insert("dim".into(), json!(alg.dim()));
    root.insert(
        "summary".into(),
        json!(format!(
            "{}; {}",
            axiom_phrase("left Leibniz", alg, &left),
            axiom_phrase("right Leibniz", alg, &right)
        )),
    );
    root.insert("left_leibniz".into(), json!(left.is_empty()));
    root.insert("right_leibniz".into(), json!(right.is_empty()));
    root.insert("lie".into(), json!(alg.is_lie()));
    root.insert("left_violations".into(), report::violations(names, &left));
    root.insert("right_violations".into(), report::violations(names, &right));
    if let Some(b) = file.bimodule() {
        let block = match b {
            Ok(b) => {
                let axioms = check_bimodule_axioms(&b);
                ok &= axioms.is_empty();
                json!({
                    "carrier_dim": b.carrier_dim(),
                    "axioms_hold": axioms.is_empty(),
                    "faithful": is_faithful(&b),
                    "violations": report::violations(names, &axioms),
                })
            }
            Err(e) => {
                ok = false;
                json!({ "error": e.to_string() })
            }
        };
        root.insert("bimodule".into(), block);
    }
    (ok, Value::Object(root))
}

/// Checks the file, the left and right Leibniz identities and, for bimodule
/// fixtures, the bimodule axioms.
pub fn validate(path: &Path, output: OutputFormat) -> Outcome {
    let file = match format::read_path(path) {
        Ok(f) => f,
        Err(e) => return Outcome::format_error(&e),
    };
    let (ok, value) = validation_value(&file);
    Outcome::render(if ok { EXIT_OK } else { EXIT_INVALID }, &value, output)
}

pub fn analyze_file(file: &AlgebraFile, sections: &Sections, strict: bool, output: OutputFormat) -> Outcome {
    let sections = if sections.is_empty() {
        Sections::all()
    } else {
        sections.clone()
    };
    let report = analyze(file, &sections);
    let exit = if !file.algebra.is_left_leibniz() {
        EXIT_INVALID
    } else {
        match report.max_severity() {
            Some(Severity::Error) => EXIT_VERIFICATION,
            Some(Severity::Warning) if strict => EXIT_INVALID,
            _ => EXIT_OK,
        }
    };
    Outcome::render(exit, &report.value, output)
}

/// Analysis report for a file. No selected sections means all of them.
pub fn analyze_path(path: &Path, sections: &Sections, strict: bool, output: OutputFormat) -> Outcome {
    match format::read_path(path) {
        Ok(file) => analyze_file(&file, sections, strict, output),
        Err(e) => Outcome::format_error(&e),
    }
}

/// Writes the liezation as a new file, or to standard output without `out`.
pub fn liezation_cmd(path: &Path, out: Option<&Path>) -> Outcome {
    let file = match format::read_path(path) {
        Ok(f) => f,
        Err(e) => return Outcome::format_error(&e),
    };
    let q = match liezation(&file.algebra) {
        Ok(q) => q,
        Err(e) => {
            return Outcome {
                exit: EXIT_INVALID,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let result = AlgebraFile {
        algebra: q.algebra,
        metadata: Metadata {
            name: file.metadata.name.as_ref().map(|n| format!("{n}*")),
            source: Some("liezation".into()),
        },
        carrier: None,
    };
    match out {
        None => Outcome {
            exit: EXIT_OK,
            stdout: format::to_string(&result),
            stderr: String::new(),
        },
        Some(out) => match format::write_path(out, &result) {
            Ok(()) => Outcome {
                exit: EXIT_OK,
                stdout: format!(
                    "wrote {} (dim {}, lie: {})\n",
                    out.display(),
                    result.algebra.dim(),
                    yes_no(result.algebra.is_lie())
                ),
                stderr: String::new(),
            },
            Err(e) => Outcome::format_error(&e),
        },
    }
}

/// Names the canonical algebra isomorphic to the input (dimension at most 2).
pub fn classify_cmd(path: &Path, output: OutputFormat) -> Outcome {
    let file = match format::read_path(path) {
        Ok(f) => f,
        Err(e) => return Outcome::format_error(&e),
    };
    match classify_dim_le2(&file.algebra) {
        Ok(c) => Outcome::render(
            EXIT_OK,
            &json!({ "name": c.name, "isomorphism": report::matrix(&c.isomorphism) }),
            output,
        ),
        Err(e) => {
            let exit = match e {
                Error::NoMatch(_) => EXIT_VERIFICATION,
                _ => EXIT_INVALID,
            };
            Outcome {
                exit,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

fn collect_json(dir: &Path, out: &mut Vec<PathBuf>) -> std::io::Result<()> {
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        if path.is_dir() {
            collect_json(&path, out)?;
        } else if path.extension().is_some_and(|e| e == "json") {
            out.push(path);
        }
    }
    Ok(())
}

/// Exit status and report entry for one corpus file.
fn check_one(root: &Path, path: &Path) -> (i32, Value) {
    let shown = path.strip_prefix(root).unwrap_or(path).display().to_string();
    let file = match format::read_path(path) {
        Ok(f) => f,
        Err(e) => return (EXIT_IO, json!({ "file": shown, "status": "error", "detail": e.to_string() })),
    };
    let (valid, _) = validation_value(&file);
    if !valid {
        return (EXIT_INVALID, json!({ "file": shown, "status": "invalid" }));
    }
    let mut faithful = Value::Null;
    if let Some(Ok(b)) = file.bimodule() {
        faithful = json!(is_faithful(&b));
        if !is_faithful(&b) {
            return (EXIT_INVALID, json!({ "file": shown, "status": "not faithful" }));
        }
    }
    let report = analyze(&file, &Sections::all());
    let errors: Vec<String> = report
        .warnings
        .iter()
        .filter(|w| w.severity == Severity::Error)
        .map(|w| w.message.clone())
        .collect();
    if !errors.is_empty() {
        return (
            EXIT_VERIFICATION,
            json!({ "file": shown, "status": "unverified", "detail": errors.join("; ") }),
        );
    }
    let mut entry = json!({ "file": shown, "status": "ok", "warnings": report.warnings.len() });
    if !faithful.is_null() {
        entry["faithful"] = faithful;
    }
    (EXIT_OK, entry)
}

/// Validates and fully analyzes every `.json` file under `dir`. Files are
/// processed concurrently and reported in path order.
pub fn corpus_check(dir: &Path, output: OutputFormat) -> Outcome {
    let mut paths = Vec::new();
    if let Err(e) = collect_json(dir, &mut paths) {
        return Outcome::format_error(&FormatError::Io {
            path: dir.to_path_buf(),
            source: e,
        });
    }
    paths.sort();
    let results: Vec<(i32, Value)> = std::thread::scope(|s| {
        let handles: Vec<_> = paths.iter().map(|p| s.spawn(move || check_one(dir, p))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("corpus worker panicked"))
            .collect()
    });
    let exit = results.iter().map(|(e, _)| *e).max().unwrap_or(EXIT_OK);
    let value = json!({
        "files": results.len(),
        "ok": results.iter().filter(|(e, _)| *e == EXIT_OK).count(),
        "results": results.into_iter().map(|(_, v)| v).collect::<Vec<_>>(),
    });
    Outcome::render(exit, &value, output)
}
