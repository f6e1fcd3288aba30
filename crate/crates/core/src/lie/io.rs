//! The algebra JSON format.
//!
//! ```json
//! { "dim": 3, "labels": ["x", "y", "z"],
//!   "brackets": [ { "i": 0, "j": 1, "v": ["0", "0", "1"] } ],
//!   "matrices": [ [["0", "1"], ["0", "0"]], ... ] }
//! ```
//!
//! Omitted pairs bracket to zero; only `i < j` is listed.

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::algebra::{default_labels, LieAlgebra, Violation};
use super::matrices::MatrixPresentation;
use crate::linalg::mat::Mat;
use crate::linalg::scalar::{format_rat, parse_rat, Rat};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON at line {line}, column {column}: {msg}")]
    Json { line: usize, column: usize, msg: String },
    #[error("field `{field}`: {msg}")]
    Field { field: String, msg: String },
    #[error("invalid algebra: {0}")]
    Invalid(#[from] Violation),
}

fn field(field: impl Into<String>, msg: impl Into<String>) -> FormatError {
    FormatError::Field { field: field.into(), msg: msg.into() }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    #[serde(default)]
    brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    matrices: Option<Vec<Vec<Vec<String>>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketEntry {
    i: usize,
    j: usize,
    v: Vec<String>,
}

/// A parsed algebra file.
#[derive(Clone, Debug)]
pub struct AlgebraData {
    pub algebra: LieAlgebra,
    pub matrices: Option<MatrixPresentation>,
}

impl AlgebraData {
    pub fn new(algebra: LieAlgebra, matrices: Option<MatrixPresentation>) -> Self {
        AlgebraData { algebra, matrices }
    }

    pub fn to_json(&self) -> String {
        let g = &self.algebra;
        let n = g.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = g.basis_bracket(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    brackets.push(BracketEntry { i, j, v: v.iter().map(format_rat).collect() });
                }
            }
        }
        let matrices = self.matrices.as_ref().map(|p| {
            p.mats.iter().map(|m| m.row_vecs().iter().map(|r| r.iter().map(format_rat).collect()).collect()).collect()
        });
        let file = AlgebraFile { dim: n, labels: Some(g.labels().to_vec()), brackets, matrices };
        serde_json::to_string_pretty(&file).expect("serializable")
    }

    /// SHA-256 of the canonical serialization; whitespace and bracket order in
    /// the source file do not affect it.
    pub fn content_hash(&self) -> String {
        hex::encode(Sha256::digest(self.to_json().as_bytes()))
    }
}

fn parse_vec(path: &str, v: &[String]) -> Result<Vec<Rat>, FormatError> {
    v.iter().enumerate().map(|(k, s)| parse_rat(s).map_err(|e| field(format!("{path}[{k}]"), e.to_string()))).collect()
}

pub fn parse_algebra(text: &str) -> Result<AlgebraData, FormatError> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| FormatError::Json {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })?;
    let n = file.dim;
    let labels = match file.labels {
        Some(l) if l.len() != n => return Err(field("labels", format!("expected {n} labels, got {}", l.len()))),
        Some(l) => l,
        None => default_labels(n),
    };
    let mut seen = std::collections::BTreeSet::new();
    let mut brackets = Vec::new();
    for (k, b) in file.brackets.iter().enumerate() {
        let path = format!("brackets[{k}]");
        if b.i >= b.j {
            return Err(field(&path, format!("need i < j, got i = {}, j = {}", b.i, b.j)));
        }
        if b.j >= n {
            return Err(field(&path, format!("index {} out of range for dim {n}", b.j)));
        }
        if !seen.insert((b.i, b.j)) {
            return Err(field(&path, format!("duplicate pair ({}, {})", b.i, b.j)));
        }
        if b.v.len() != n {
            return Err(field(format!("{path}.v"), format!("expected {n} entries, got {}", b.v.len())));
        }
        brackets.push((b.i, b.j, parse_vec(&format!("{path}.v"), &b.v)?));
    }
    let algebra = LieAlgebra::from_brackets(labels, &brackets);
    algebra.validate()?;
    let matrices = match file.matrices {
        None => None,
        Some(ms) => Some(parse_matrices(&ms, &algebra)?),
    };
    Ok(AlgebraData { algebra, matrices })
}

fn parse_matrices(ms: &[Vec<Vec<String>>], g: &LieAlgebra) -> Result<MatrixPresentation, FormatError> {
    if ms.len() != g.dim() {
        return Err(field("matrices", format!("expected {} matrices, got {}", g.dim(), ms.len())));
    }
    let m = ms.first().map_or(0, |x| x.len());
    let mut mats = Vec::new();
    for (k, rows) in ms.iter().enumerate() {
        if rows.len() != m || rows.iter().any(|r| r.len() != m) {
            return Err(field(format!("matrices[{k}]"), format!("expected a {m}x{m} matrix")));
        }
        let parsed: Result<Vec<Vec<Rat>>, _> =
            rows.iter().enumerate().map(|(r, row)| parse_vec(&format!("matrices[{k}][{r}]"), row)).collect();
        mats.push(Mat::from_rows_with_cols(parsed?, m));
    }
    let p = MatrixPresentation { ambient: m, mats };
    if !p.is_independent() {
        return Err(field("matrices", "matrices are linearly dependent"));
    }
    if !p.is_compatible(g) {
        return Err(field("matrices", "commutators do not match the structure constants"));
    }
    Ok(p)
}
