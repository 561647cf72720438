//! The on-disk fixture format, version "1".
//!
//! Layout conventions (all arrays dense, all scalars strings `"p"`/`"p/q"`):
//!
//! - `algebra.mul[i][j]` is the coefficient vector of `e_i * e_j`;
//! - `algebroid.partial[i]` is the `B`-vector of `partial(a_i)`;
//! - `algebroid.action[i][j]` is the `B`-vector of `a_i . b_j`;
//! - `algebroid.bracket[i][j]` is the `B`-vector of `[b_i, b_j]`;
//! - `algebroid.anchor[i][j]` is the `A`-vector of `pi(b_i)(a_j)`;
//! - `algebroid.pairing[i][j]` is the `A`-vector of `<b_i, b_j>`;
//! - `gorenstein.t` is an `A`-vector, `gorenstein.B` an `n x n` Gram matrix;
//! - `l1[i][j]` is the `A`-coordinate `i` of `L(1) b_j`.

use serde::{Deserialize, Serialize};
use valab_core::algebroid::VertexAlgebroid;
use valab_core::commalg::{CommAlgebra, Grading, Tensor3};
use valab_core::exactnum::{fmt_q, parse_q, Matrix, Q};
use valab_core::samples::SampleFixture;
use valab_core::semiconformal::LOneMap;

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FileError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unsupported format version {0:?}")]
    UnsupportedVersion(String),
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct AlgebroidFile {
    pub format_version: String,
    pub algebra: AlgebraSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebroid: Option<AlgebroidSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<GradingSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gorenstein: Option<GorensteinSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l1: Option<Vec<Vec<String>>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSection {
    pub dim: usize,
    pub names: Vec<String>,
    pub unit: Vec<String>,
    pub mul: Vec<Vec<Vec<String>>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct AlgebroidSection {
    pub b_dim: usize,
    pub names: Vec<String>,
    pub partial: Vec<Vec<String>>,
    pub action: Vec<Vec<Vec<String>>>,
    pub bracket: Vec<Vec<Vec<String>>>,
    pub anchor: Vec<Vec<Vec<String>>>,
    pub pairing: Vec<Vec<Vec<String>>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct GradingSection {
    pub degrees: Vec<usize>,
    pub top: usize,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct GorensteinSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<Vec<String>>,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Vec<Vec<String>>>,
}

/// Everything a fixture file can describe, in core types.
#[derive(Debug, Clone)]
pub struct LoadedFixture {
    pub algebra: CommAlgebra,
    pub algebroid: Option<VertexAlgebroid>,
    pub grading: Option<Grading>,
    pub t: Option<Vec<Q>>,
    pub form: Option<Matrix>,
    pub l1: Option<LOneMap>,
}

fn parse_vec(v: &[String], len: usize, what: &str) -> Result<Vec<Q>, FileError> {
    if v.len() != len {
        return Err(FileError::DimensionMismatch(format!(
            "{what}: expected length {len}, found {}",
            v.len()
        )));
    }
    v.iter()
        .map(|s| parse_q(s).map_err(FileError::Parse))
        .collect()
}

fn parse_matrix(
    rows: &[Vec<String>],
    nrows: usize,
    ncols: usize,
    what: &str,
) -> Result<Matrix, FileError> {
    if rows.len() != nrows {
        return Err(FileError::DimensionMismatch(format!(
            "{what}: expected {nrows} rows, found {}",
            rows.len()
        )));
    }
    let mut out = Vec::with_capacity(nrows);
    for (i, r) in rows.iter().enumerate() {
        out.push(parse_vec(r, ncols, &format!("{what} row {i}"))?);
    }
    Ok(Matrix::from_rows(out))
}

fn parse_tensor(
    t: &[Vec<Vec<String>>],
    d0: usize,
    d1: usize,
    d2: usize,
    what: &str,
) -> Result<Tensor3, FileError> {
    if t.len() != d0 {
        return Err(FileError::DimensionMismatch(format!(
            "{what}: expected {d0} planes, found {}",
            t.len()
        )));
    }
    let mut planes = Vec::with_capacity(d0);
    for (i, plane) in t.iter().enumerate() {
        if plane.len() != d1 {
            return Err(FileError::DimensionMismatch(format!(
                "{what} plane {i}: expected {d1} rows, found {}",
                plane.len()
            )));
        }
        let mut rows = Vec::with_capacity(d1);
        for (j, v) in plane.iter().enumerate() {
            rows.push(parse_vec(v, d2, &format!("{what}[{i}][{j}]"))?);
        }
        planes.push(rows);
    }
    Ok(Tensor3::from_rows(d0, d1, d2, planes))
}

impl AlgebroidFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        let file: AlgebroidFile =
            serde_json::from_str(text).map_err(|e| FileError::Parse(e.to_string()))?;
        if file.format_version != FORMAT_VERSION {
            return Err(FileError::UnsupportedVersion(file.format_version));
        }
        Ok(file)
    }

    pub fn load(path: &std::path::Path) -> Result<LoadedFixture, FileError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| FileError::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text)?.to_core()
    }

    pub fn to_core(&self) -> Result<LoadedFixture, FileError> {
        let n = self.algebra.dim;
        if n == 0 {
            return Err(FileError::DimensionMismatch("algebra.dim must be >= 1".into()));
        }
        if self.algebra.names.len() != n {
            return Err(FileError::DimensionMismatch(format!(
                "algebra.names: expected {n} entries, found {}",
                self.algebra.names.len()
            )));
        }
        let unit = parse_vec(&self.algebra.unit, n, "algebra.unit")?;
        let mul = parse_tensor(&self.algebra.mul, n, n, n, "algebra.mul")?;
        let algebra = CommAlgebra::new(n, mul, unit, self.algebra.names.clone());

        let algebroid = match &self.algebroid {
            None => None,
            Some(sec) => {
                let m = sec.b_dim;
                if sec.names.len() != m {
                    return Err(FileError::DimensionMismatch(format!(
                        "algebroid.names: expected {m} entries, found {}",
                        sec.names.len()
                    )));
                }
                let partial = parse_matrix(&sec.partial, n, m, "algebroid.partial")?;
                let action = parse_tensor(&sec.action, n, m, m, "algebroid.action")?;
                let bracket = parse_tensor(&sec.bracket, m, m, m, "algebroid.bracket")?;
                let anchor = parse_tensor(&sec.anchor, m, n, n, "algebroid.anchor")?;
                let pairing = parse_tensor(&sec.pairing, m, m, n, "algebroid.pairing")?;
                Some(VertexAlgebroid::new(
                    algebra.clone(),
                    m,
                    sec.names.clone(),
                    partial,
                    action,
                    bracket,
                    anchor,
                    pairing,
                ))
            }
        };

        let grading = match &self.grading {
            None => None,
            Some(gs) => {
                if gs.degrees.len() != n {
                    return Err(FileError::DimensionMismatch(format!(
                        "grading.degrees: expected {n} entries, found {}",
                        gs.degrees.len()
                    )));
                }
                Some(Grading {
                    degrees: gs.degrees.clone(),
                    top: gs.top,
                })
            }
        };

        let (t, form) = match &self.gorenstein {
            None => (None, None),
            Some(gs) => {
                let t = gs
                    .t
                    .as_ref()
                    .map(|v| parse_vec(v, n, "gorenstein.t"))
                    .transpose()?;
                let form = gs
                    .form
                    .as_ref()
                    .map(|f| parse_matrix(f, n, n, "gorenstein.B"))
                    .transpose()?;
                (t, form)
            }
        };

        let l1 = match &self.l1 {
            None => None,
            Some(rows) => {
                let m = self
                    .algebroid
                    .as_ref()
                    .map(|s| s.b_dim)
                    .ok_or_else(|| {
                        FileError::DimensionMismatch("l1 present without an algebroid".into())
                    })?;
                Some(LOneMap::new(parse_matrix(rows, n, m, "l1")?))
            }
        };

        Ok(LoadedFixture {
            algebra,
            algebroid,
            grading,
            t,
            form,
            l1,
        })
    }

    /// Builds the file representation of an algebra-only fixture.
    pub fn from_algebra(algebra: &CommAlgebra, grading: Option<&Grading>) -> Self {
        AlgebroidFile {
            format_version: FORMAT_VERSION.to_string(),
            algebra: algebra_section(algebra),
            algebroid: None,
            grading: grading.map(grading_section),
            gorenstein: None,
            l1: None,
        }
    }

    /// Builds the file representation of a full fixture bundle.
    pub fn from_fixture(fx: &SampleFixture) -> Self {
        let g = &fx.algebroid;
        let gorenstein = if fx.t.is_some() || fx.form.is_some() {
            Some(GorensteinSection {
                t: fx.t.as_ref().map(|t| vec_strings(t)),
                form: fx.form.as_ref().map(matrix_strings),
            })
        } else {
            None
        };
        AlgebroidFile {
            format_version: FORMAT_VERSION.to_string(),
            algebra: algebra_section(&g.algebra),
            algebroid: Some(AlgebroidSection {
                b_dim: g.b_dim,
                names: g.b_names.clone(),
                partial: matrix_strings(&g.partial),
                action: tensor_strings(&g.action),
                bracket: tensor_strings(&g.bracket),
                anchor: tensor_strings(&g.anchor),
                pairing: tensor_strings(&g.pairing),
            }),
            grading: fx.grading.as_ref().map(grading_section),
            gorenstein,
            l1: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("fixture serialization");
        s.push('\n');
        s
    }
}

fn algebra_section(a: &CommAlgebra) -> AlgebraSection {
    let mut mul = Vec::with_capacity(a.dim);
    for i in 0..a.dim {
        let mut plane = Vec::with_capacity(a.dim);
        for j in 0..a.dim {
            plane.push(vec_strings(a.mul.at(i, j)));
        }
        mul.push(plane);
    }
    AlgebraSection {
        dim: a.dim,
        names: a.names.clone(),
        unit: vec_strings(&a.unit),
        mul,
    }
}

fn grading_section(g: &Grading) -> GradingSection {
    GradingSection {
        degrees: g.degrees.clone(),
        top: g.top,
    }
}

fn vec_strings(v: &[Q]) -> Vec<String> {
    v.iter().map(fmt_q).collect()
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.row_vecs().iter().map(|r| vec_strings(r)).collect()
}

fn tensor_strings(t: &Tensor3) -> Vec<Vec<Vec<String>>> {
    let (d0, d1, _) = t.dims();
    let mut out = Vec::with_capacity(d0);
    for i in 0..d0 {
        let mut plane = Vec::with_capacity(d1);
        for j in 0..d1 {
            plane.push(vec_strings(t.at(i, j)));
        }
        out.push(plane);
    }
    out
}
