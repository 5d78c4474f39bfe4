//! JSON files for knots and patterns.

use std::fmt::Write as _;
use std::path::Path;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use satgenus::seifert::is_alexander_trivial;
use satgenus::{Error as CoreError, IntMatrix, Pattern, SeifertMatrix, TrivialBlockCertificate};

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("format error: {0}")]
    Format(String),
    #[error("validation error ({invariant}): {message}")]
    Validation { invariant: String, message: String },
}

fn validation(invariant: &str, message: impl Into<String>) -> FileError {
    FileError::Validation { invariant: invariant.into(), message: message.into() }
}

fn core_validation(e: CoreError) -> FileError {
    let invariant = match &e {
        CoreError::CorankMismatch { .. } => "CorankMismatch",
        CoreError::NotUnimodularSkew(_) => "NotUnimodularSkew",
        CoreError::NegativeWinding(_) => "NegativeWinding",
        CoreError::CertificateInvalid(_) => "NotAlexanderTrivial",
        CoreError::MultiComponent(_) | CoreError::MultiComponentCompanion(_) => "Components",
        _ => "SeifertMatrix",
    };
    validation(invariant, e.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnotFile {
    pub name: String,
    pub components: usize,
    pub seifert_matrix: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trivial_block_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g3_hint: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatternFile {
    pub name: String,
    pub winding: i64,
    pub components: usize,
    pub pattern_matrix: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trivial_block_size: Option<usize>,
}

/// A validated knot file.
#[derive(Clone, Debug)]
pub struct Knot {
    pub name: String,
    pub matrix: SeifertMatrix,
    /// The declared leading block, or the empty certificate.
    pub certificate: TrivialBlockCertificate,
    pub g3_hint: Option<u64>,
}

pub fn matrix_from_rows(rows: &[Vec<i64>]) -> Result<IntMatrix, FileError> {
    let n = rows.len();
    if let Some(r) = rows.iter().find(|r| r.len() != n) {
        return Err(FileError::Format(format!("matrix is not square: {n} rows, a row of length {}", r.len())));
    }
    IntMatrix::from_i64_rows(rows).map_err(|e| FileError::Format(e.to_string()))
}

pub fn matrix_to_rows(m: &IntMatrix) -> Result<Vec<Vec<i64>>, FileError> {
    m.to_rows()
        .into_iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_i64().ok_or_else(|| FileError::Format(format!("entry {x} does not fit in 64 bits"))))
                .collect()
        })
        .collect()
}

fn certificate_for(v: &SeifertMatrix, size: Option<usize>) -> Result<TrivialBlockCertificate, FileError> {
    let m = v.size();
    let Some(bs) = size else {
        return Ok(TrivialBlockCertificate::empty(m));
    };
    if bs % 2 == 1 || bs > m {
        return Err(validation("TrivialBlockSize", format!("block size {bs} must be even and at most {m}")));
    }
    let block = v.matrix().leading(bs);
    if !is_alexander_trivial(&block).map_err(core_validation)? {
        return Err(validation("NotAlexanderTrivial", format!("leading {bs}x{bs} block is not Alexander-trivial")));
    }
    Ok(TrivialBlockCertificate::leading(m, bs))
}

impl KnotFile {
    pub fn validate(&self) -> Result<Knot, FileError> {
        let m = matrix_from_rows(&self.seifert_matrix)?;
        let v = SeifertMatrix::new(m, self.components).map_err(core_validation)?.with_name(self.name.clone());
        let certificate = certificate_for(&v, self.trivial_block_size)?;
        Ok(Knot { name: self.name.clone(), matrix: v, certificate, g3_hint: self.g3_hint })
    }

    pub fn from_matrix(name: &str, v: &SeifertMatrix, block: Option<usize>) -> Result<KnotFile, FileError> {
        Ok(KnotFile {
            name: name.into(),
            components: v.components(),
            seifert_matrix: matrix_to_rows(v.matrix())?,
            trivial_block_size: block,
            g3_hint: None,
        })
    }

    pub fn to_json(&self) -> String {
        let mut fields = vec![
            ("name", serde_json::to_string(&self.name).unwrap()),
            ("components", self.components.to_string()),
            ("seifert_matrix", matrix_json(&self.seifert_matrix)),
        ];
        if let Some(b) = self.trivial_block_size {
            fields.push(("trivial_block_size", b.to_string()));
        }
        if let Some(g) = self.g3_hint {
            fields.push(("g3_hint", g.to_string()));
        }
        object_json(&fields)
    }
}

impl PatternFile {
    /// Negative winding numbers are made positive by reversing the pattern;
    /// the returned flag reports this.
    pub fn validate(&self) -> Result<(Pattern, bool), FileError> {
        let m = matrix_from_rows(&self.pattern_matrix)?;
        let v = SeifertMatrix::new(m, self.components).map_err(core_validation)?.with_name(self.name.clone());
        let cert = certificate_for(&v, self.trivial_block_size)?;
        Pattern::from_signed(v, self.winding, Some(cert)).map_err(core_validation)
    }

    pub fn to_json(&self) -> String {
        let mut fields = vec![
            ("name", serde_json::to_string(&self.name).unwrap()),
            ("winding", self.winding.to_string()),
            ("components", self.components.to_string()),
            ("pattern_matrix", matrix_json(&self.pattern_matrix)),
        ];
        if let Some(b) = self.trivial_block_size {
            fields.push(("trivial_block_size", b.to_string()));
        }
        object_json(&fields)
    }
}

/// Matrices are written one row per line.
fn matrix_json(rows: &[Vec<i64>]) -> String {
    if rows.is_empty() {
        return "[]".into();
    }
    let mut s = String::from("[\n");
    for (i, r) in rows.iter().enumerate() {
        let cells: Vec<String> = r.iter().map(i64::to_string).collect();
        let _ = write!(s, "    [{}]{}\n", cells.join(", "), if i + 1 < rows.len() { "," } else { "" });
    }
    s.push_str("  ]");
    s
}

fn object_json(fields: &[(&str, String)]) -> String {
    let body: Vec<String> = fields.iter().map(|(k, v)| format!("  \"{k}\": {v}")).collect();
    format!("{{\n{}\n}}\n", body.join(",\n"))
}

/// Either kind of file, told apart by the `winding` field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyFile {
    Knot(KnotFile),
    Pattern(PatternFile),
}

impl AnyFile {
    pub fn name(&self) -> &str {
        match self {
            AnyFile::Knot(k) => &k.name,
            AnyFile::Pattern(p) => &p.name,
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            AnyFile::Knot(k) => k.to_json(),
            AnyFile::Pattern(p) => p.to_json(),
        }
    }
}

pub fn parse(text: &str) -> Result<AnyFile, FileError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| FileError::Format(e.to_string()))?;
    let is_pattern = value.get("winding").is_some();
    let file = if is_pattern {
        AnyFile::Pattern(serde_json::from_value(value).map_err(|e| FileError::Format(e.to_string()))?)
    } else {
        AnyFile::Knot(serde_json::from_value(value).map_err(|e| FileError::Format(e.to_string()))?)
    };
    match &file {
        AnyFile::Knot(k) => {
            k.validate()?;
        }
        AnyFile::Pattern(p) => {
            p.validate()?;
        }
    }
    Ok(file)
}

pub fn load(path: &Path) -> Result<AnyFile, FileError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| FileError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse(&text)
}

pub fn save(path: &Path, file: &AnyFile) -> Result<(), FileError> {
    std::fs::write(path, file.to_json())
        .map_err(|e| FileError::Io { path: path.display().to_string(), message: e.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = r#"{"name": "trefoil", "components": 1, "seifert_matrix": [[-1, 1], [0, -1]]}"#;

    #[test]
    fn round_trip() {
        let f = parse(TREFOIL).unwrap();
        let text = f.to_json();
        assert_eq!(parse(&text).unwrap(), f);
        assert_eq!(parse(&text).unwrap().to_json(), text);
    }

    #[test]
    fn errors() {
        let bad = r#"{"name": "x", "components": 1, "seifert_matrix": [[1, 0], [0, 1], [1, 1]]}"#;
        assert!(matches!(parse(bad), Err(FileError::Format(_))));
        let bad = r#"{"name": "t", "components": 1, "seifert_matrix": [[-1, 1], [0, -1]], "trivial_block_size": 2}"#;
        match parse(bad) {
            Err(FileError::Validation { invariant, .. }) => assert_eq!(invariant, "NotAlexanderTrivial"),
            other => panic!("{other:?}"),
        }
        let bad = r#"{"name": "s", "components": 1, "seifert_matrix": [[1, 0], [0, 1]]}"#;
        assert!(matches!(parse(bad), Err(FileError::Validation { .. })));
        assert!(matches!(parse("{"), Err(FileError::Format(_))));
    }

    #[test]
    fn negative_winding_reverses() {
        let text = r#"{"name": "p", "winding": -2, "components": 1, "pattern_matrix": [[-1, 1], [0, -1]]}"#;
        let AnyFile::Pattern(p) = parse(text).unwrap() else { panic!() };
        let (pat, reversed) = p.validate().unwrap();
        assert!(reversed);
        assert_eq!(pat.winding(), 2);
    }
}
