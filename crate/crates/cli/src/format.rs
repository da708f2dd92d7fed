//! The structure-constants file format.
//!
//! ```json
//! {
//!   "dim": 2,
//!   "basis": ["a", "b"],
//!   "brackets": { "1,0": { "0": "1" }, "1,1": { "0": "1" } },
//!   "metadata": { "name": "L2ii", "source": "..." },
//!   "carrier": { "dim": 3, "left": { "1": { "2,0": "1" } }, "right": {} }
//! }
//! ```
//!
//! `brackets["i,j"]["k"]` is `c[i][j][k]` in `[e_i, e_j] = sum_k c[i][j][k] e_k`
//! (0-based). Omitted pairs and coefficients are zero. Rationals are strings
//! `"p/q"` or `"p"`. In the optional `carrier` block (a bimodule), `left["i"]`
//! and `right["i"]` give the action matrices of basis element `i`, keyed by
//! `"row,col"`.

use std::fs;
use std::path::{Path, PathBuf};

use leibniz_core::exactla::parse_rational;
use leibniz_core::reps::Bimodule;
use leibniz_core::{LeibnizAlgebra, Matrix, Rational};
use serde_json::{Map, Value};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{location}: {message}")]
    Invalid { location: String, message: String },
}

fn invalid(location: impl Into<String>, message: impl Into<String>) -> FormatError {
    FormatError::Invalid {
        location: location.into(),
        message: message.into(),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Metadata {
    pub name: Option<String>,
    pub source: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Carrier {
    pub dim: usize,
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub algebra: LeibnizAlgebra,
    pub metadata: Metadata,
    pub carrier: Option<Carrier>,
}

impl AlgebraFile {
    pub fn new(algebra: LeibnizAlgebra) -> Self {
        AlgebraFile {
            algebra,
            metadata: Metadata::default(),
            carrier: None,
        }
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.metadata.name = Some(name.to_string());
        self
    }

    pub fn bimodule(&self) -> Option<Result<Bimodule, leibniz_core::Error>> {
        self.carrier
            .as_ref()
            .map(|c| Bimodule::new(self.algebra.clone(), c.dim, c.left.clone(), c.right.clone()))
    }

    pub fn from_bimodule(b: &Bimodule) -> Self {
        AlgebraFile {
            algebra: b.algebra().clone(),
            metadata: Metadata::default(),
            carrier: Some(Carrier {
                dim: b.carrier_dim(),
                left: b.left_action().to_vec(),
                right: b.right_action().to_vec(),
            }),
        }
    }
}

fn as_object<'a>(v: &'a Value, location: &str) -> Result<&'a Map<String, Value>, FormatError> {
    v.as_object().ok_or_else(|| invalid(location, "expected an object"))
}

fn as_index(v: &Value, location: &str) -> Result<usize, FormatError> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| invalid(location, "expected a non-negative integer"))
}

fn parse_pair(key: &str, bound: usize, location: &str) -> Result<(usize, usize), FormatError> {
    let parts: Vec<&str> = key.split(',').map(str::trim).collect();
    let [a, b] = parts[..] else {
        return Err(invalid(location, format!("key {key:?} is not of the form \"i,j\"")));
    };
    let i = parse_index(a, bound, location)?;
    let j = parse_index(b, bound, location)?;
    Ok((i, j))
}

fn parse_index(s: &str, bound: usize, location: &str) -> Result<usize, FormatError> {
    let i: usize = s
        .trim()
        .parse()
        .map_err(|_| invalid(location, format!("{s:?} is not an index")))?;
    if i >= bound {
        return Err(invalid(location, format!("index {i} out of range 0..{bound}")));
    }
    Ok(i)
}

fn parse_coefficient(v: &Value, location: &str) -> Result<Rational, FormatError> {
    let Value::String(s) = v else {
        return Err(invalid(location, "coefficient must be a rational string \"p/q\""));
    };
    parse_rational(s).ok_or_else(|| invalid(location, format!("{s:?} is not a rational")))
}

fn parse_action(v: Option<&Value>, n: usize, m: usize, side: &str) -> Result<Vec<Matrix>, FormatError> {
    let mut out = vec![Matrix::zeros(m, m); n];
    let Some(v) = v else {
        return Ok(out);
    };
    for (elem, entries) in as_object(v, &format!("carrier.{side}"))? {
        let loc = format!("carrier.{side}.{elem:?}");
        let i = parse_index(elem, n, &loc)?;
        for (rc, c) in as_object(entries, &loc)? {
            let loc = format!("{loc}.{rc:?}");
            let (r, col) = parse_pair(rc, m, &loc)?;
            out[i].set(r, col, parse_coefficient(c, &loc)?);
        }
    }
    Ok(out)
}

pub fn parse_str(text: &str) -> Result<AlgebraFile, FormatError> {
    let root: Value = serde_json::from_str(text).map_err(|e| FormatError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let top = as_object(&root, "top level")?;
    for key in top.keys() {
        if !matches!(key.as_str(), "dim" | "basis" | "brackets" | "metadata" | "carrier") {
            return Err(invalid("top level", format!("unknown key {key:?}")));
        }
    }
    let n = as_index(top.get("dim").ok_or_else(|| invalid("top level", "missing \"dim\""))?, "dim")?;
    let basis: Vec<String> = match top.get("basis") {
        Some(Value::Array(items)) => items
            .iter()
            .enumerate()
            .map(|(i, v)| {
                v.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| invalid(format!("basis[{i}]"), "expected a string"))
            })
            .collect::<Result<_, _>>()?,
        Some(_) => return Err(invalid("basis", "expected an array of labels")),
        None => return Err(invalid("top level", "missing \"basis\"")),
    };
    if basis.len() != n {
        return Err(invalid("basis", format!("{} labels for dimension {n}", basis.len())));
    }
    let mut entries = Vec::new();
    if let Some(b) = top.get("brackets") {
        for (pair, coeffs) in as_object(b, "brackets")? {
            let loc = format!("brackets.{pair:?}");
            let (i, j) = parse_pair(pair, n, &loc)?;
            for (k, c) in as_object(coeffs, &loc)? {
                let loc = format!("{loc}.{k:?}");
                let k = parse_index(k, n, &loc)?;
                entries.push((i, j, k, parse_coefficient(c, &loc)?));
            }
        }
    }
    let algebra = LeibnizAlgebra::from_entries(basis, &entries).map_err(|e| invalid("basis", e.to_string()))?;
    let mut metadata = Metadata::default();
    if let Some(m) = top.get("metadata") {
        let m = as_object(m, "metadata")?;
        let text = |key: &str| -> Result<Option<String>, FormatError> {
            match m.get(key) {
                None | Some(Value::Null) => Ok(None),
                Some(Value::String(s)) => Ok(Some(s.clone())),
                Some(_) => Err(invalid(format!("metadata.{key}"), "expected a string")),
            }
        };
        metadata.name = text("name")?;
        metadata.source = text("source")?;
    }
    let carrier = match top.get("carrier") {
        None => None,
        Some(c) => {
            let c = as_object(c, "carrier")?;
            let m = as_index(c.get("dim").ok_or_else(|| invalid("carrier", "missing \"dim\""))?, "carrier.dim")?;
            Some(Carrier {
                dim: m,
                left: parse_action(c.get("left"), n, m, "left")?,
                right: parse_action(c.get("right"), n, m, "right")?,
            })
        }
    };
    Ok(AlgebraFile {
        algebra,
        metadata,
        carrier,
    })
}

pub fn read_path(path: &Path) -> Result<AlgebraFile, FormatError> {
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_str(&text)
}

pub fn rational_string(r: &Rational) -> String {
    r.to_string()
}

fn action_value(acts: &[Matrix]) -> Value {
    let mut out = Map::new();
    for (i, m) in acts.iter().enumerate() {
        let mut entries = Map::new();
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                let x = m.get(r, c);
                if !is_zero(x) {
                    entries.insert(format!("{r},{c}"), Value::String(rational_string(x)));
                }
            }
        }
        if !entries.is_empty() {
            out.insert(i.to_string(), Value::Object(entries));
        }
    }
    Value::Object(out)
}

fn is_zero(x: &Rational) -> bool {
    *x == Rational::from_integer(0.into())
}

/// JSON value with keys in a fixed order and brackets in numeric order.
pub fn to_value(file: &AlgebraFile) -> Value {
    let alg = &file.algebra;
    let n = alg.dim();
    let mut root = Map::new();
    root.insert("dim".into(), n.into());
    root.insert(
        "basis".into(),
        Value::Array(alg.basis_names().iter().cloned().map(Value::String).collect()),
    );
    let mut brackets = Map::new();
    for i in 0..n {
        for j in 0..n {
            let mut coeffs = Map::new();
            for (k, c) in alg.basis_bracket(i, j).iter().enumerate() {
                if !is_zero(c) {
                    coeffs.insert(k.to_string(), Value::String(rational_string(c)));
                }
            }
            if !coeffs.is_empty() {
                brackets.insert(format!("{i},{j}"), Value::Object(coeffs));
            }
        }
    }
    root.insert("brackets".into(), Value::Object(brackets));
    if file.metadata != Metadata::default() {
        let mut meta = Map::new();
        if let Some(name) = &file.metadata.name {
            meta.insert("name".into(), Value::String(name.clone()));
        }
        if let Some(source) = &file.metadata.source {
            meta.insert("source".into(), Value::String(source.clone()));
        }
        root.insert("metadata".into(), Value::Object(meta));
    }
    if let Some(c) = &file.carrier {
        let mut carrier = Map::new();
        carrier.insert("dim".into(), c.dim.into());
        carrier.insert("left".into(), action_value(&c.left));
        carrier.insert("right".into(), action_value(&c.right));
        root.insert("carrier".into(), Value::Object(carrier));
    }
    Value::Object(root)
}

pub fn to_string(file: &AlgebraFile) -> String {
    let mut s = serde_json::to_string_pretty(&to_value(file)).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn write_path(path: &Path, file: &AlgebraFile) -> Result<(), FormatError> {
    fs::write(path, to_string(file)).map_err(|source| FormatError::Io {
        path: path.to_path_buf(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use leibniz_core::catalog;

    #[test]
    fn round_trip_catalog() {
        for (name, alg) in catalog::all() {
            let file = AlgebraFile::new(alg).with_name(name);
            assert_eq!(parse_str(&to_string(&file)).unwrap(), file);
        }
    }

    #[test]
    fn round_trip_bimodules() {
        for (name, _) in catalog::all() {
            let file = AlgebraFile::from_bimodule(&catalog::faithful_bimodule(name).unwrap());
            assert_eq!(parse_str(&to_string(&file)).unwrap(), file);
        }
    }

    #[test]
    fn l2ii_text() {
        let text = r#"{"dim": 2, "basis": ["a", "b"], "brackets": {"1,0": {"0": "1"}, "1,1": {"0": "2/2"}}}"#;
        assert_eq!(parse_str(text).unwrap().algebra, catalog::l2ii());
    }

    #[test]
    fn syntax_errors_have_positions() {
        let err = parse_str("{\n  \"dim\": 2,\n  \"basis\": [\"a\" \"b\"]\n}").unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 3, .. }), "{err}");
    }

    #[test]
    fn semantic_errors() {
        let bad = [
            r#"{"dim": 1, "basis": ["a"], "brackets": {"0,1": {"0": "1"}}}"#,
            r#"{"dim": 1, "basis": ["a"], "brackets": {"0,0": {"0": "1/0"}}}"#,
            r#"{"dim": 2, "basis": ["a"]}"#,
            r#"{"dim": 2, "basis": ["a", "a"]}"#,
            r#"{"basis": []}"#,
            r#"{"dim": 0, "basis": [], "extra": 1}"#,
            r#"{"dim": 1, "basis": ["a"], "brackets": {"0,0": {"0": 1}}}"#,
        ];
        for text in bad {
            assert!(matches!(parse_str(text), Err(FormatError::Invalid { .. })), "{text}");
        }
    }
}
