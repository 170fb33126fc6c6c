//! JSON structure-constant format.
//!
//! ```json
//! {"dim": 3, "labels": ["h", "e", "f"],
//!  "brackets": [[0, 1, [[1, "2"]]], [0, 2, [[2, "-2"]]], [1, 2, [[0, "1"]]]]}
//! ```
//! Only pairs `i < j` are listed; rationals use the reduced `p` / `p/q` form.

use serde::{Deserialize, Serialize};

use super::{LieAlgebra, LieError};
use crate::linalg::SparseVec;
use crate::rational::{format_q, parse_q, Q};

/// `(i, j, [(k, coefficient)])` meaning `[b_i, b_j] = Σ coefficient · b_k`.
pub type BracketEntry = (usize, usize, Vec<(usize, String)>);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default)]
    pub labels: Vec<String>,
    pub brackets: Vec<BracketEntry>,
    /// Optional Levi basis, one row of rationals per vector.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levi: Option<Vec<Vec<String>>>,
}

impl AlgebraFile {
    pub fn levi_rows(&self) -> Result<Option<Vec<Vec<Q>>>, LieError> {
        let Some(rows) = &self.levi else { return Ok(None) };
        let mut out = Vec::with_capacity(rows.len());
        for r in rows {
            if r.len() != self.dim {
                return Err(LieError::Format(format!("levi row of length {} in dim {}", r.len(), self.dim)));
            }
            out.push(
                r.iter().map(|s| parse_q(s).map_err(|e| LieError::Format(e.to_string()))).collect::<Result<_, _>>()?,
            );
        }
        Ok(Some(out))
    }
}

impl LieAlgebra {
    pub fn to_file(&self) -> AlgebraFile {
        let mut brackets = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = self.basis_bracket(i, j);
                if !v.is_zero() {
                    brackets.push((i, j, v.entries().iter().map(|(k, x)| (*k, format_q(x))).collect()));
                }
            }
        }
        AlgebraFile { dim: self.dim, labels: self.labels.clone(), brackets, levi: None }
    }

    pub fn from_file(file: &AlgebraFile) -> Result<LieAlgebra, LieError> {
        let mut entries = Vec::with_capacity(file.brackets.len());
        for (i, j, terms) in &file.brackets {
            if *i >= file.dim || *j >= file.dim {
                return Err(LieError::Format(format!("bracket index ({i}, {j}) out of range")));
            }
            if i >= j {
                return Err(LieError::Format(format!("bracket ({i}, {j}) must have i < j")));
            }
            let mut pairs = Vec::with_capacity(terms.len());
            for (k, s) in terms {
                if *k >= file.dim {
                    return Err(LieError::Format(format!("basis index {k} out of range")));
                }
                pairs.push((*k, parse_q(s).map_err(|e| LieError::Format(e.to_string()))?));
            }
            entries.push((*i, *j, SparseVec::from_pairs(pairs)));
        }
        if !file.labels.is_empty() && file.labels.len() != file.dim {
            return Err(LieError::Format(format!("{} labels for dim {}", file.labels.len(), file.dim)));
        }
        Ok(LieAlgebra::from_upper_brackets(file.dim, file.labels.clone(), entries))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<LieAlgebra, LieError> {
        let file: AlgebraFile = serde_json::from_str(text).map_err(|e| LieError::Format(e.to_string()))?;
        Self::from_file(&file)
    }
}
