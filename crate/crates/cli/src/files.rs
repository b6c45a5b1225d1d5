//! Matrix and curve files.

use std::path::Path;

use num::Complex;
use serde::{Deserialize, Serialize};
use similitude::{vars, PolyMatrix, ScalarMatrix};

use crate::CliError;

/// `{"variables": ["z"], "matrix": [["z", "1"], ["0", "0"]]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub variables: Vec<String>,
    pub matrix: Vec<Vec<String>>,
}

impl MatrixFile {
    pub fn to_matrix(&self) -> Result<PolyMatrix, CliError> {
        Ok(PolyMatrix::parse(vars(&self.variables), &self.matrix)?)
    }

    pub fn from_matrix(m: &PolyMatrix) -> Self {
        MatrixFile { variables: m.vars().to_vec(), matrix: m.to_strings() }
    }

    /// Reprints every entry in canonical form.
    pub fn canonical(&self) -> Result<Self, CliError> {
        Ok(Self::from_matrix(&self.to_matrix()?))
    }
}

/// `{"samples": [[re, im], ...]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub samples: Vec<[f64; 2]>,
}

impl CurveFile {
    pub fn points(&self) -> Vec<Complex<f64>> {
        self.samples.iter().map(|&[re, im]| Complex::new(re, im)).collect()
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e.to_string()))?;
    serde_json::from_str(&text).map_err(|e| CliError::Format(path.display().to_string(), e.to_string()))
}

pub fn read_matrix(path: &Path) -> Result<PolyMatrix, CliError> {
    read_json::<MatrixFile>(path)?.to_matrix()
}

/// A matrix file whose entries must all be constants.
pub fn read_scalar_matrix(path: &Path) -> Result<ScalarMatrix, CliError> {
    let m = read_matrix(path)?;
    Ok(m.constant_value()?)
}

pub fn read_curve(path: &Path) -> Result<CurveFile, CliError> {
    read_json(path)
}
