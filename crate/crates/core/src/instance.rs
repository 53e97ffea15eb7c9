//! JSON instance files for algebroids and structures on them.
//!
//! Frame order is `(∂₁..∂_d, e, dx₁..dx_d)`; twist indices are 1-based.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::courant::{AlgebroidError, GeneralizedSection, OddExactAlgebroid};
use crate::symbolic::{parse_polynomial, CalculusError, DifferentialForm, Matrix, ParseError, PolyMatrix, Polynomial};

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed instance: {0}")]
    Json(#[from] serde_json::Error),
    #[error("in {field}: {source}")]
    Polynomial { field: String, source: ParseError },
    #[error("{0}")]
    Shape(String),
    #[error("twist index out of range: {0}")]
    Twist(#[from] CalculusError),
    #[error(transparent)]
    Algebroid(#[from] AlgebroidError),
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistSpec {
    #[serde(rename = "F2", default)]
    pub f2: Vec<(usize, usize, String)>,
    #[serde(rename = "H3", default)]
    pub h3: Vec<(usize, usize, usize, String)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebroidSpec {
    pub dim: usize,
    #[serde(default)]
    pub twist: TwistSpec,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureSpec {
    pub algebroid: AlgebroidSpec,
    #[serde(rename = "F")]
    pub f: Vec<Vec<String>>,
    pub u0: Vec<String>,
    #[serde(rename = "Gend", default, skip_serializing_if = "Option::is_none")]
    pub g_end: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InstanceSpec {
    Structure(StructureSpec),
    Algebroid(AlgebroidSpec),
}

/// A structure on an algebroid, as loaded (not yet validated).
#[derive(Clone, Debug)]
pub struct StructureData {
    pub f: PolyMatrix,
    pub u0: GeneralizedSection,
    pub g_end: Option<PolyMatrix>,
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub algebroid: OddExactAlgebroid,
    pub structure: Option<StructureData>,
}

fn poly(text: &str, nvars: usize, field: impl FnOnce() -> String) -> Result<Polynomial, InstanceError> {
    parse_polynomial(text, nvars).map_err(|source| InstanceError::Polynomial { field: field(), source })
}

fn index(i: usize, d: usize) -> Result<usize, InstanceError> {
    if i == 0 || i > d {
        return Err(InstanceError::Shape(format!("twist index {i} not in 1..={d}")));
    }
    Ok(i - 1)
}

fn matrix(rows: &[Vec<String>], d: usize, name: &str) -> Result<PolyMatrix, InstanceError> {
    let n = 2 * d + 1;
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(InstanceError::Shape(format!("{name} must be {n}×{n}")));
    }
    let mut out = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let mut r = Vec::with_capacity(n);
        for (j, s) in row.iter().enumerate() {
            r.push(poly(s, d, || format!("{name}[{i}][{j}]"))?);
        }
        out.push(r);
    }
    Ok(Matrix::from_rows(out))
}

impl AlgebroidSpec {
    pub fn build(&self) -> Result<OddExactAlgebroid, InstanceError> {
        let d = self.dim;
        if d == 0 {
            return Err(InstanceError::Shape("dim must be at least 1".into()));
        }
        let mut f2 = DifferentialForm::zero(d, 2);
        for (k, (i, j, s)) in self.twist.f2.iter().enumerate() {
            let c = poly(s, d, || format!("F2[{k}]"))?;
            let term = DifferentialForm::monomial(d, &[index(*i, d)?, index(*j, d)?], c)?;
            f2 = f2.add(&term)?;
        }
        let mut h3 = DifferentialForm::zero(d, 3);
        for (k, (i, j, l, s)) in self.twist.h3.iter().enumerate() {
            let c = poly(s, d, || format!("H3[{k}]"))?;
            let term = DifferentialForm::monomial(d, &[index(*i, d)?, index(*j, d)?, index(*l, d)?], c)?;
            h3 = h3.add(&term)?;
        }
        Ok(OddExactAlgebroid::twisted(d, f2, h3)?)
    }
}

impl StructureSpec {
    pub fn build(&self) -> Result<Instance, InstanceError> {
        let algebroid = self.algebroid.build()?;
        let d = algebroid.base_dim();
        let f = matrix(&self.f, d, "F")?;
        if self.u0.len() != 2 * d + 1 {
            return Err(InstanceError::Shape(format!("u0 must have {} entries", 2 * d + 1)));
        }
        let u0 = self
            .u0
            .iter()
            .enumerate()
            .map(|(i, s)| poly(s, d, || format!("u0[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let g_end = self.g_end.as_ref().map(|g| matrix(g, d, "Gend")).transpose()?;
        Ok(Instance {
            algebroid,
            structure: Some(StructureData {
                f,
                u0: GeneralizedSection::new(u0),
                g_end,
            }),
        })
    }
}

impl InstanceSpec {
    pub fn build(&self) -> Result<Instance, InstanceError> {
        match self {
            InstanceSpec::Structure(s) => s.build(),
            InstanceSpec::Algebroid(a) => Ok(Instance {
                algebroid: a.build()?,
                structure: None,
            }),
        }
    }
}

impl Instance {
    pub fn from_json(text: &str) -> Result<Self, InstanceError> {
        serde_json::from_str::<InstanceSpec>(text)?.build()
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, InstanceError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| InstanceError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }
}
