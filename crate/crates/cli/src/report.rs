//! Deterministic analysis reports.
//!
//! Reports are built as `serde_json::Value` trees with insertion-ordered keys,
//! so the same input always serializes to the same bytes. Subspaces are given
//! by their reduced row echelon basis and rationals are normalized strings.

use std::fmt::Write as _;

use leibniz_core::algebra::Identity;
use leibniz_core::classify::{classify_dim_le2, fingerprint};
use leibniz_core::levi::{levi_decomposition, reductive_check};
use leibniz_core::radicals::{engel_flag, lie_flag, liezation_preimage_check, radical_report};
use leibniz_core::structure::{
    commutant, derived_series, is_nilpotent, is_solvable, ker_ideal, left_center, lower_central_series,
    min_generators, nilpotency_class, right_center, SeriesResult,
};
use leibniz_core::{Error, Flag, LeibnizAlgebra, Matrix, Rational, Subspace, ViolationReport};
use serde_json::{json, Map, Value};

use crate::format::AlgebraFile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Note,
    Warning,
    /// A computed result failed its own exact verification.
    Error,
}

impl Severity {
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Note => "note",
            Severity::Warning => "warning",
            Severity::Error => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Warning {
    pub severity: Severity,
    pub section: &'static str,
    pub code: &'static str,
    pub message: String,
}

impl Warning {
    fn to_value(&self) -> Value {
        json!({
            "severity": self.severity.as_str(),
            "section": self.section,
            "code": self.code,
            "message": self.message,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlagKind {
    Engel,
    Lie,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum FlagRequest {
    #[default]
    Off,
    /// Engel when every `l_x` is nilpotent, Lie when solvable.
    Applicable,
    Only(Vec<FlagKind>),
}

/// Which report sections to compute.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Sections {
    pub series: bool,
    pub centers: bool,
    pub radical: bool,
    pub nilradical: bool,
    pub levi: bool,
    pub identities: bool,
    pub derivations: bool,
    pub classify: bool,
    pub flags: FlagRequest,
}

impl Sections {
    pub fn all() -> Self {
        Sections {
            series: true,
            centers: true,
            radical: true,
            nilradical: true,
            levi: true,
            identities: true,
            derivations: true,
            classify: true,
            flags: FlagRequest::Applicable,
        }
    }

    pub fn is_empty(&self) -> bool {
        *self == Sections::default()
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub value: Value,
    pub warnings: Vec<Warning>,
}

impl Report {
    pub fn max_severity(&self) -> Option<Severity> {
        self.warnings.iter().map(|w| w.severity).max()
    }

    pub fn to_json(&self) -> String {
        json_string(&self.value)
    }

    pub fn to_text(&self) -> String {
        text(&self.value)
    }
}

pub fn json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn error_code(e: &Error) -> &'static str {
    match e {
        Error::DimensionMismatch { .. } => "DimensionMismatch",
        Error::AmbientMismatch { .. } => "AmbientMismatch",
        Error::InvalidAlgebra(_) => "InvalidAlgebra",
        Error::NotAnIdeal => "NotAnIdeal",
        Error::NotASubalgebra => "NotASubalgebra",
        Error::NotLie => "NotLie",
        Error::NotSolvable => "NotSolvable",
        Error::NotEngelNilpotent(_) => "NotEngelNilpotent",
        Error::NotSplitOverField => "NotSplitOverField",
        Error::SplittingFailed(_) => "SplittingFailed",
        Error::NilradicalUnverified(_) => "NilradicalUnverified",
        Error::InvalidFlag(_) => "InvalidFlag",
        Error::DimensionOutOfRange(_) => "DimensionOutOfRange",
        Error::NoMatch(_) => "NoMatch",
        Error::InvalidBimodule(_) => "InvalidBimodule",
    }
}

fn severity_of(e: &Error) -> Severity {
    match e {
        Error::SplittingFailed(_) | Error::NilradicalUnverified(_) | Error::InvalidFlag(_) => Severity::Error,
        _ => Severity::Warning,
    }
}

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn vector(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

pub fn matrix(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector(m.row(i))).collect())
}

pub fn subspace(s: &Subspace) -> Value {
    json!({ "dim": s.dim(), "basis": matrix(s.basis()) })
}

/// `v` as a combination of basis labels, e.g. `"a - 1/2 b"`.
pub fn combination(names: &[String], v: &[Rational]) -> String {
    let zero = Rational::from_integer(0.into());
    let one = Rational::from_integer(1.into());
    let mut out = String::new();
    for (name, c) in names.iter().zip(v) {
        if *c == zero {
            continue;
        }
        let negative = *c < zero;
        let mag = if negative { -c } else { c.clone() };
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        if mag != one {
            let _ = write!(out, "{mag} ");
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn witness_labels(names: &[String], witness: &[usize]) -> String {
    witness.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join(",")
}

pub fn violations(names: &[String], report: &ViolationReport) -> Value {
    Value::Array(
        report
            .violations
            .iter()
            .map(|v| {
                json!({
                    "identity": v.identity.to_string(),
                    "witness": witness_labels(names, &v.witness),
                    "residual": combination(names, &v.residual),
                })
            })
            .collect(),
    )
}

fn series(s: &SeriesResult) -> Value {
    json!({
        "dims": s.dims(),
        "stabilized": s.stabilized,
        "reaches_zero": s.reaches_zero(),
    })
}

fn flag(f: &Flag) -> Value {
    json!({ "adapted_basis": matrix(&f.adapted_basis().transpose()) })
}

struct Builder<'a> {
    alg: &'a LeibnizAlgebra,
    root: Map<String, Value>,
    warnings: Vec<Warning>,
}

impl Builder<'_> {
    fn warn(&mut self, severity: Severity, section: &'static str, code: &'static str, message: String) {
        self.warnings.push(Warning {
            severity,
            section,
            code,
            message,
        });
    }

    fn error(&mut self, section: &'static str, e: &Error) {
        self.warn(severity_of(e), section, error_code(e), e.to_string());
    }

    fn section(&mut self, key: &'static str, v: Value) {
        self.root.insert(key.to_string(), v);
    }

    /// Stores `f()` under `key`, or a null plus a warning when it fails.
    fn attempt(&mut self, key: &'static str, f: impl FnOnce(&LeibnizAlgebra) -> Result<Value, Error>) {
        match f(self.alg) {
            Ok(v) => self.section(key, v),
            Err(e) => {
                self.error(key, &e);
                self.section(key, Value::Null);
            }
        }
    }
}

fn algebra_block(file: &AlgebraFile) -> Value {
    let alg = &file.algebra;
    json!({
        "name": file.metadata.name,
        "dim": alg.dim(),
        "basis": alg.basis_names(),
    })
}

fn axioms_block(alg: &LeibnizAlgebra) -> Value {
    let names = alg.basis_names();
    let left = alg.check_left_leibniz();
    let right = alg.check_right_leibniz();
    json!({
        "left_leibniz": left.is_empty(),
        "right_leibniz": right.is_empty(),
        "lie": alg.is_lie(),
        "left_violations": violations(names, &left),
        "right_violations": violations(names, &right),
    })
}

/// Runs the selected analyses. The input must satisfy the left Leibniz
/// identity; otherwise only the axiom block is produced.
pub fn analyze(file: &AlgebraFile, sections: &Sections) -> Report {
    let alg = &file.algebra;
    let names = alg.basis_names();
    let mut b = Builder {
        alg,
        root: Map::new(),
        warnings: Vec::new(),
    };
    b.section("algebra", algebra_block(file));
    b.section("axioms", axioms_block(alg));
    if !alg.is_left_leibniz() {
        b.warn(
            Severity::Error,
            "axioms",
            "InvalidAlgebra",
            "left Leibniz identity fails; no further analysis".into(),
        );
        return finish(b);
    }
    b.attempt("fingerprint", |alg| {
        let f = fingerprint(alg)?;
        Ok(json!({
            "dim": f.dim,
            "is_lie": f.is_lie,
            "is_left_leibniz": f.is_left_leibniz,
            "is_right_leibniz": f.is_right_leibniz,
            "ker_dim": f.ker_dim,
            "left_center_dim": f.left_center_dim,
            "right_center_dim": f.right_center_dim,
            "derived_dims": f.derived_dims,
            "central_dims": f.central_dims,
            "radical_dim": f.radical_dim,
            "nilradical_dim": f.nilradical_dim,
            "min_generators": f.min_generators,
        }))
    });
    if sections.series {
        b.section(
            "series",
            json!({
                "derived": series(&derived_series(alg)),
                "lower_central": series(&lower_central_series(alg)),
                "solvable": is_solvable(alg),
                "nilpotent": is_nilpotent(alg),
                "nilpotency_class": nilpotency_class(alg),
            }),
        );
    }
    if sections.centers {
        b.section(
            "centers",
            json!({
                "ker": subspace(&ker_ideal(alg)),
                "commutant": subspace(&commutant(alg)),
                "left_center": subspace(&left_center(alg)),
                "right_center": subspace(&right_center(alg)),
            }),
        );
    }
    if sections.radical {
        b.attempt("radical", |alg| {
            let r = radical_report(alg)?;
            let c = r.checks;
            Ok(json!({
                "radical": subspace(&r.radical),
                "checks": {
                    "radical_is_ideal": c.radical_is_ideal,
                    "radical_is_solvable": c.radical_is_solvable,
                    "nilradical_is_ideal": c.nilradical_is_ideal,
                    "nilradical_is_nilpotent": c.nilradical_is_nilpotent,
                    "nilradical_in_radical": c.nilradical_in_radical,
                    "ker_in_nilradical": c.ker_in_nilradical,
                    "right_center_in_nilradical": c.right_center_in_nilradical,
                    "l_radical_in_nilradical": c.l_radical_in_nilradical,
                    "rr_in_nilradical": c.rr_in_nilradical,
                },
            }))
        });
    }
    if sections.nilradical {
        match liezation_preimage_check(alg) {
            Ok(p) => {
                if p.is_discrepant() {
                    b.warn(
                        Severity::Note,
                        "nilradical",
                        "PreimageDiscrepancy",
                        format!(
                            "preimage of the liezation's nilradical has dim {} and is {}nilpotent; nilradical has dim {}",
                            p.preimage.dim(),
                            if p.preimage_is_nilpotent { "" } else { "not " },
                            p.nilradical.dim()
                        ),
                    );
                }
                b.section(
                    "nilradical",
                    json!({
                        "nilradical": subspace(&p.nilradical),
                        "liezation_preimage": subspace(&p.preimage),
                        "preimage_is_nilpotent": p.preimage_is_nilpotent,
                        "discrepant": p.is_discrepant(),
                    }),
                );
            }
            Err(e) => {
                b.error("nilradical", &e);
                b.section("nilradical", Value::Null);
            }
        }
    }
    if sections.levi {
        b.attempt("levi", |alg| {
            let d = levi_decomposition(alg)?;
            let v = d.verified;
            let reductive = reductive_check(alg)?;
            let conclusion = reductive.conclusion.map(|c| {
                json!({
                    "is_lie": c.is_lie,
                    "radical_is_central": c.radical_is_central,
                    "levi_is_direct": c.levi_is_direct,
                })
            });
            Ok(json!({
                "semisimple_part": subspace(&d.semisimple_part),
                "radical_part": subspace(&d.radical_part),
                "verified": v.all(),
                "checks": {
                    "is_subalgebra": v.is_subalgebra,
                    "is_semisimple_lie": v.is_semisimple_lie,
                    "trivial_intersection": v.trivial_intersection,
                    "spans": v.spans,
                },
                "reductive": {
                    "center_is_central": reductive.center_is_central,
                    "quotient_is_semisimple": reductive.quotient_is_semisimple,
                    "conclusion": conclusion,
                },
            }))
        });
        if let Some(Value::Object(levi)) = b.root.get("levi") {
            if levi.get("verified") == Some(&Value::Bool(false)) {
                b.warn(Severity::Error, "levi", "LeviUnverified", "Levi decomposition failed verification".into());
            }
        }
    }
    let flags = match &sections.flags {
        FlagRequest::Off => None,
        FlagRequest::Only(kinds) => Some(kinds.clone()),
        FlagRequest::Applicable => {
            let n = alg.dim();
            let mut kinds = Vec::new();
            if (0..n).all(|i| alg.left_mult(&unit(n, i)).is_ok_and(|l| l.matrix.is_nilpotent())) {
                kinds.push(FlagKind::Engel);
            }
            if is_solvable(alg) {
                kinds.push(FlagKind::Lie);
            }
            Some(kinds)
        }
    };
    if let Some(flags) = flags {
        let mut block = Map::new();
        for kind in flags {
            let (key, result) = match kind {
                FlagKind::Engel => ("engel", engel_flag(alg)),
                FlagKind::Lie => ("lie", lie_flag(alg)),
            };
            match result {
                Ok(f) => {
                    block.insert(key.into(), flag(&f));
                }
                Err(e) => {
                    b.error("flag", &e);
                    block.insert(key.into(), Value::Null);
                }
            }
        }
        b.section("flag", Value::Object(block));
    }
    if sections.identities {
        let report = alg.identity_suite();
        let mut block = Map::new();
        let mut kinds = vec![
            Identity::RightOfBracketComposition,
            Identity::RightOfBracketCommutator,
            Identity::SkewUnderRightMultiplication,
            Identity::SquareIsLeftCentral,
        ];
        kinds.extend((1..=alg.dim()).map(|power| Identity::RightPower { power }));
        for kind in kinds {
            block.insert(kind.to_string(), Value::Bool(report.of(kind).next().is_none()));
        }
        if !report.is_empty() {
            b.warn(
                Severity::Error,
                "identities",
                "IdentityViolated",
                format!("{} identity instances fail", report.len()),
            );
            block.insert("violations".into(), violations(names, &report));
        }
        b.section("identities", Value::Object(block));
    }
    if sections.derivations {
        let der = alg.derivations();
        let n = alg.dim();
        let basis: Vec<Value> = der
            .basis_vectors()
            .iter()
            .map(|flat| matrix(&alg.operator_from_flat(flat)))
            .collect();
        b.section(
            "derivations",
            json!({
                "dim": der.dim(),
                "closed_under_commutator": alg.is_closed_under_commutator(&der),
                "basis": if n <= 3 { Value::Array(basis) } else { Value::Null },
            }),
        );
    }
    if sections.classify {
        let class = nilpotency_class(alg);
        let mut block = Map::new();
        match classify_dim_le2(alg) {
            Ok(c) => {
                block.insert("name".into(), Value::String(c.name.into()));
                block.insert("isomorphism".into(), matrix(&c.isomorphism));
            }
            Err(Error::DimensionOutOfRange(_)) => {
                block.insert("name".into(), Value::Null);
            }
            Err(e) => {
                b.error("classification", &e);
                block.insert("name".into(), Value::Null);
            }
        }
        block.insert("nilpotency_class".into(), json!(class));
        block.insert("min_generators".into(), json!(min_generators(alg)));
        b.section("classification", Value::Object(block));
    }
    finish(b)
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    leibniz_core::exactla::vector::unit(n, i)
}

fn finish(mut b: Builder<'_>) -> Report {
    let warnings = b.warnings;
    b.root.insert(
        "warnings".into(),
        Value::Array(warnings.iter().map(Warning::to_value).collect()),
    );
    Report {
        value: Value::Object(b.root),
        warnings,
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(x) => Some(if *x { "yes" } else { "no" }.into()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => Some(format!(
            "[{}]",
            items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
        )),
        Value::Array(items) if items.iter().all(|x| x.is_array()) && !items.is_empty() => Some(
            items
                .iter()
                .filter_map(scalar)
                .collect::<Vec<_>>()
                .join(" "),
        ),
        _ => None,
    }
}

fn text_into(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None if x.as_array().is_some_and(Vec::is_empty) => {
                        let _ = writeln!(out, "{pad}{k}: none");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        text_into(out, x, depth + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        text_into(out, x, depth + 1);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}

/// Indented `key: value` rendering of a report value.
pub fn text(v: &Value) -> String {
    let mut out = String::new();
    text_into(&mut out, v, 0);
    out
}
