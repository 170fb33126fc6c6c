//! Explicit matrix representations of semisimple Lie algebras.

mod constructors;
mod decompose;
mod realize;
mod spin;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::liealg::{semisimple_algebra, LieAlgebra, LieError, SemisimpleSpec};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::rational::{to_i64, Q};
use crate::rootdata::{weyl_dim, DominantWeight, RootDataError};

pub use realize::{irreducible, realize, realize_label};
pub use spin::{fock_b, fock_d, half_spin_d, spin16_d5};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("representations live over different algebras")]
    AlgebraMismatch,
    #[error("action matrix {index} has shape {rows}x{cols}, expected {dim}x{dim}")]
    Shape { index: usize, rows: usize, cols: usize, dim: usize },
    #[error("expected {expected} action matrices, got {got}")]
    ActionCount { expected: usize, got: usize },
    #[error("representation is not in a weight basis")]
    NotWeightBasis,
    #[error("algebra carries no Chevalley data")]
    NoChevalleyData,
    #[error("highest weights account for dimension {found}, module has dimension {dim}")]
    DimensionMismatch { found: u64, dim: usize },
    #[error("label {0} is outside the constructible set")]
    NotConstructible(String),
    #[error("label {label} does not fit algebra {spec}")]
    LabelShape { label: String, spec: String },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

/// Irreducible label: one dominant weight per simple factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IrrLabel(pub Vec<DominantWeight>);

impl IrrLabel {
    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(DominantWeight::is_zero)
    }

    pub fn dim(&self, spec: &SemisimpleSpec) -> Result<u64, RepError> {
        self.check(spec)?;
        let mut d = 1;
        for (t, w) in spec.factors.iter().zip(&self.0) {
            d *= weyl_dim(*t, w)?;
        }
        Ok(d)
    }

    pub fn check(&self, spec: &SemisimpleSpec) -> Result<(), RepError> {
        let ok = self.0.len() == spec.len() && spec.factors.iter().zip(&self.0).all(|(t, w)| w.rank() == t.rank);
        if ok {
            Ok(())
        } else {
            Err(RepError::LabelShape { label: self.to_string(), spec: spec.to_string() })
        }
    }

    pub fn pretty(&self) -> String {
        self.0.iter().map(|w| format!("L({})", w.pretty())).collect::<Vec<_>>().join("#")
    }
}

impl fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|w| format!("L({})", w.0.iter().map(u32::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{}", parts.join("#"))
    }
}

/// A multiset of irreducible labels, kept sorted with merged multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModuleDescriptor {
    terms: Vec<(IrrLabel, u32)>,
}

impl ModuleDescriptor {
    pub fn new(terms: impl IntoIterator<Item = (IrrLabel, u32)>) -> Self {
        let mut all: Vec<(IrrLabel, u32)> = terms.into_iter().filter(|(_, m)| *m > 0).collect();
        all.sort();
        let mut merged: Vec<(IrrLabel, u32)> = Vec::with_capacity(all.len());
        for (l, m) in all {
            match merged.last_mut() {
                Some((last, lm)) if *last == l => *lm += m,
                _ => merged.push((l, m)),
            }
        }
        ModuleDescriptor { terms: merged }
    }

    pub fn irreducible(label: IrrLabel) -> Self {
        Self::new([(label, 1)])
    }

    /// Single-factor shorthand: weights of one simple type.
    pub fn simple(weights: &[(DominantWeight, u32)]) -> Self {
        Self::new(weights.iter().map(|(w, m)| (IrrLabel(vec![w.clone()]), *m)))
    }

    pub fn terms(&self) -> &[(IrrLabel, u32)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, label: &IrrLabel) -> u32 {
        self.terms.iter().find(|(l, _)| l == label).map_or(0, |(_, m)| *m)
    }

    pub fn summand_count(&self) -> u32 {
        self.terms.iter().map(|(_, m)| m).sum()
    }

    pub fn dim(&self, spec: &SemisimpleSpec) -> Result<u64, RepError> {
        let mut d = 0;
        for (l, m) in &self.terms {
            d += u64::from(*m) * l.dim(spec)?;
        }
        Ok(d)
    }

    pub fn has_trivial(&self) -> bool {
        self.terms.iter().any(|(l, _)| l.is_trivial())
    }

    pub fn map_labels(&self, f: impl Fn(&IrrLabel) -> IrrLabel) -> ModuleDescriptor {
        Self::new(self.terms.iter().map(|(l, m)| (f(l), *m)))
    }

    pub fn union(&self, other: &ModuleDescriptor) -> ModuleDescriptor {
        Self::new(self.terms.iter().chain(other.terms.iter()).cloned())
    }

    pub fn pretty(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(l, m)| if *m == 1 { l.pretty() } else { format!("{m}{}", l.pretty()) })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for ModuleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(l, m)| if *m == 1 { l.to_string() } else { format!("{m}{l}") }).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A module for a Lie algebra: one action matrix per basis element.
#[derive(Debug, Clone)]
pub struct Representation {
    algebra: Arc<LieAlgebra>,
    dim: usize,
    action: Vec<SparseMatrix>,
    weight_basis: bool,
}

impl Representation {
    pub fn new(algebra: Arc<LieAlgebra>, dim: usize, action: Vec<SparseMatrix>) -> Result<Self, RepError> {
        if action.len() != algebra.dim() {
            return Err(RepError::ActionCount { expected: algebra.dim(), got: action.len() });
        }
        for (index, a) in action.iter().enumerate() {
            if a.rows() != dim || a.cols() != dim {
                return Err(RepError::Shape { index, rows: a.rows(), cols: a.cols(), dim });
            }
        }
        let weight_basis = match algebra.chevalley_data() {
            Some(ch) => ch.cartan_indices().iter().all(|&i| action[i].is_diagonal()),
            None => false,
        };
        Ok(Representation { algebra, dim, action, weight_basis })
    }

    pub(crate) fn from_parts(algebra: Arc<LieAlgebra>, dim: usize, action: Vec<SparseMatrix>) -> Self {
        Self::new(algebra, dim, action).expect("well-formed representation")
    }

    /// Zero action on `Q^k`.
    pub fn trivial(algebra: Arc<LieAlgebra>, k: usize) -> Self {
        let action = vec![SparseMatrix::zeros(k, k); algebra.dim()];
        Self::from_parts(algebra, k, action)
    }

    pub fn trivial_over(spec: &SemisimpleSpec, k: usize) -> Result<Self, RepError> {
        Ok(Self::trivial(semisimple_algebra(spec)?, k))
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn spec(&self) -> Option<SemisimpleSpec> {
        self.algebra.chevalley_data().map(|c| c.spec())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action_count(&self) -> usize {
        self.action.len()
    }

    pub fn action(&self, i: usize) -> &SparseMatrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[SparseMatrix] {
        &self.action
    }

    pub fn weight_basis(&self) -> bool {
        self.weight_basis
    }

    pub(crate) fn same_algebra(&self, other: &Representation) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra
    }

    /// Action of an arbitrary algebra element given by coordinates.
    pub fn act_element(&self, x: &SparseVec) -> SparseMatrix {
        let mut m = SparseMatrix::zeros(self.dim, self.dim);
        for (i, c) in x.entries() {
            m = m.add_scaled(&self.action[*i], c);
        }
        m
    }

    /// Exact check that `ρ([b_i, b_j]) = [ρ(b_i), ρ(b_j)]` for every basis pair.
    pub fn check_homomorphism(&self) -> Result<(), LieError> {
        self.check_homomorphism_against(&self.algebra.clone())
    }

    pub(crate) fn check_homomorphism_against(&self, g: &LieAlgebra) -> Result<(), LieError> {
        if g.dim() != self.action.len() {
            return Err(LieError::Dimension("action count differs from algebra dimension".into()));
        }
        for i in 0..g.dim() {
            for j in i + 1..g.dim() {
                let lhs = self.act_element(g.basis_bracket(i, j));
                let rhs = self.action[i].commutator(&self.action[j]);
                if lhs != rhs {
                    return Err(LieError::NotRepresentation(i, j));
                }
            }
        }
        Ok(())
    }

    /// Joint kernel of all action matrices (the trivial isotypic part).
    pub fn invariants(&self) -> Vec<SparseVec> {
        let mut ech = crate::linalg::SparseEchelon::new(self.dim);
        for a in &self.action {
            for r in 0..a.rows() {
                let row = a.row(r);
                if !row.is_zero() {
                    ech.insert(row);
                }
            }
        }
        ech.kernel()
    }

    /// Cartan eigenvalues of each basis vector, factor by factor.
    pub fn weights(&self) -> Result<Vec<Vec<i64>>, RepError> {
        if !self.weight_basis {
            return Err(RepError::NotWeightBasis);
        }
        let ch = self.algebra.chevalley_data().ok_or(RepError::NoChevalleyData)?;
        let diags: Vec<Vec<Q>> = ch.cartan_indices().iter().map(|&i| self.action[i].diagonal()).collect();
        Ok((0..self.dim)
            .map(|j| {
                diags.iter().map(|d| if d.is_empty() { 0 } else { to_i64(&d[j]).expect("integral weight") }).collect()
            })
            .collect())
    }

    /// Splits a flat weight into a label when all coordinates are non-negative.
    pub(crate) fn weight_label(&self, w: &[i64]) -> Option<IrrLabel> {
        let ch = self.algebra.chevalley_data()?;
        if w.iter().any(|&c| c < 0) {
            return None;
        }
        let mut out = Vec::new();
        let mut k = 0;
        for f in &ch.factors {
            out.push(DominantWeight(w[k..k + f.simple_type.rank].iter().map(|&c| c as u32).collect()));
            k += f.simple_type.rank;
        }
        Some(IrrLabel(out))
    }

    /// Evaluation vector `ρ(b_j) v` for every basis element `b_j`.
    pub fn orbit_columns(&self, v: &[Q]) -> Vec<Vec<Q>> {
        self.action.iter().map(|a| a.mul_vec(v)).collect()
    }

    pub fn is_zero_action(&self) -> bool {
        self.action.iter().all(|a| a.is_zero())
    }
}
