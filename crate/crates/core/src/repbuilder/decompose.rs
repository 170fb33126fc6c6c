//! Highest-weight vectors, decomposition into irreducibles and cyclic
//! submodules.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_traits::Zero;

use super::{IrrLabel, ModuleDescriptor, RepError, Representation};
use crate::linalg::{Matrix, SparseAccumulator, SparseEchelon, SparseMatrix, SparseVec};
use crate::rational::Q;

/// `A · v` with `A` given through its transpose (rows are columns of `A`).
fn apply_transposed(at: &SparseMatrix, v: &SparseVec) -> SparseVec {
    let mut acc = SparseAccumulator::new();
    for (j, x) in v.entries() {
        acc.add_scaled(at.row(*j), x);
    }
    acc.finish()
}

/// Solves for coordinates in a basis of weight vectors, weight space by
/// weight space.
pub(crate) struct WeightSolver {
    dim: usize,
    weight_of: Option<Vec<Vec<i64>>>,
    group_of_weight: HashMap<Vec<i64>, usize>,
    groups: Vec<SolverGroup>,
}

struct SolverGroup {
    members: Vec<usize>,
    pivots: Vec<usize>,
    inverse: Matrix,
}

impl SolverGroup {
    fn new(members: Vec<usize>, vectors: &[SparseVec], dim: usize) -> Self {
        let rows: Vec<Vec<Q>> = members.iter().map(|&m| vectors[m].to_dense(dim)).collect();
        let b = Matrix::from_rows(dim, rows);
        let (_, pivots) = b.rref();
        assert_eq!(pivots.len(), members.len(), "basis vectors are independent");
        let mut bp = Matrix::zeros(members.len(), members.len());
        for r in 0..members.len() {
            for (c, &p) in pivots.iter().enumerate() {
                bp[(r, c)] = b[(r, p)].clone();
            }
        }
        let inverse = bp.inverse().expect("pivot block invertible");
        SolverGroup { members, pivots, inverse }
    }
}

impl WeightSolver {
    pub(crate) fn new(rep: &Representation, basis: &[SparseVec]) -> Self {
        let dim = rep.dim();
        let weight_of = rep.weights().ok();
        let mut by_weight: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        for (k, v) in basis.iter().enumerate() {
            let key = match (&weight_of, v.entries().first()) {
                (Some(w), Some((i, _))) => w[*i].clone(),
                _ => Vec::new(),
            };
            by_weight.entry(key).or_default().push(k);
        }
        let mut group_of_weight = HashMap::new();
        let mut groups = Vec::new();
        for (w, members) in by_weight {
            group_of_weight.insert(w, groups.len());
            groups.push(SolverGroup::new(members, basis, dim));
        }
        WeightSolver { dim, weight_of, group_of_weight, groups }
    }

    /// Coordinates of `y` (assumed to lie in the span).
    pub(crate) fn coordinates(&self, y: &SparseVec) -> SparseVec {
        let mut parts: BTreeMap<usize, Vec<Q>> = BTreeMap::new();
        for (i, x) in y.entries() {
            let key = match &self.weight_of {
                Some(w) => w[*i].clone(),
                None => Vec::new(),
            };
            let g = *self.group_of_weight.get(&key).expect("vector lies in the span");
            parts.entry(g).or_insert_with(|| vec![Q::zero(); self.dim])[*i] = x.clone();
        }
        let mut out = Vec::new();
        for (g, dense) in parts {
            let grp = &self.groups[g];
            let yp: Vec<Q> = grp.pivots.iter().map(|&p| dense[p].clone()).collect();
            let c = grp.inverse.transpose().mul_vec(&yp);
            for (k, x) in c.into_iter().enumerate() {
                if !x.is_zero() {
                    out.push((grp.members[k], x));
                }
            }
        }
        SparseVec::from_pairs(out)
    }
}

impl Representation {
    fn raising_transposes(&self) -> Result<Vec<SparseMatrix>, RepError> {
        let ch = self.algebra.chevalley_data().ok_or(RepError::NoChevalleyData)?;
        Ok(ch.raising_indices().iter().map(|&i| self.action[i].transpose()).collect())
    }

    fn kernel_on(&self, columns: &[usize], raising_t: &[SparseMatrix]) -> Vec<SparseVec> {
        // Equations indexed by (operator, output row) over the given columns.
        let mut eqs: HashMap<(usize, usize), Vec<(usize, Q)>> = HashMap::new();
        for (o, et) in raising_t.iter().enumerate() {
            for (a, &j) in columns.iter().enumerate() {
                for (r, x) in et.row(j).entries() {
                    eqs.entry((o, *r)).or_default().push((a, x.clone()));
                }
            }
        }
        let mut keys: Vec<(usize, usize)> = eqs.keys().copied().collect();
        keys.sort_unstable();
        let mut ech = SparseEchelon::new(columns.len());
        for k in keys {
            ech.insert(&SparseVec::from_pairs(eqs.remove(&k).expect("present")));
        }
        ech.kernel()
            .into_iter()
            .map(|v| SparseVec::from_pairs(v.entries().iter().map(|(a, x)| (columns[*a], x.clone()))))
            .collect()
    }

    fn weight_spaces(&self) -> Result<BTreeMap<Vec<i64>, Vec<usize>>, RepError> {
        let weights = self.weights()?;
        let mut spaces: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        for (j, w) in weights.into_iter().enumerate() {
            spaces.entry(w).or_default().push(j);
        }
        Ok(spaces)
    }

    /// Basis of the joint kernel of the raising operators, with weights.
    pub fn highest_weight_vectors(&self) -> Result<Vec<(SparseVec, IrrLabel)>, RepError> {
        let raising_t = self.raising_transposes()?;
        let mut out = Vec::new();
        for (w, cols) in self.weight_spaces()?.into_iter().rev() {
            let Some(label) = self.weight_label(&w) else { continue };
            for v in self.kernel_on(&cols, &raising_t) {
                out.push((v, label.clone()));
            }
        }
        Ok(out)
    }

    /// Highest-weight vectors of one given weight.
    pub fn highest_weight_vectors_of(&self, label: &IrrLabel) -> Result<Vec<SparseVec>, RepError> {
        let raising_t = self.raising_transposes()?;
        let flat: Vec<i64> = label.0.iter().flat_map(|w| w.0.iter().map(|&c| i64::from(c))).collect();
        let spaces = self.weight_spaces()?;
        Ok(match spaces.get(&flat) {
            Some(cols) => self.kernel_on(cols, &raising_t),
            None => Vec::new(),
        })
    }

    /// Highest-weight vectors of one weight supported on the coordinates
    /// selected by `allowed`, whose span must be a submodule.
    pub fn highest_weight_vectors_within(
        &self,
        label: &IrrLabel,
        allowed: impl Fn(usize) -> bool,
    ) -> Result<Vec<SparseVec>, RepError> {
        let raising_t = self.raising_transposes()?;
        let flat: Vec<i64> = label.0.iter().flat_map(|w| w.0.iter().map(|&c| i64::from(c))).collect();
        let spaces = self.weight_spaces()?;
        let cols: Vec<usize> =
            spaces.get(&flat).map_or(Vec::new(), |c| c.iter().copied().filter(|&j| allowed(j)).collect());
        Ok(if cols.is_empty() { Vec::new() } else { self.kernel_on(&cols, &raising_t) })
    }

    /// Basis of a submodule complementary to the irreducible submodule
    /// generated by the highest-weight vector `keep`.
    pub fn complement_of(&self, keep: &SparseVec) -> Result<Vec<SparseVec>, RepError> {
        let mut seen = SparseEchelon::new(self.dim);
        seen.insert(keep);
        let mut basis = Vec::new();
        for (h, _) in self.highest_weight_vectors()? {
            if seen.insert(&h) {
                basis.extend(self.cyclic_submodule(&h)?);
            }
        }
        Ok(basis)
    }

    /// Decomposition into irreducibles, checked against the Weyl dimensions.
    pub fn decompose(&self) -> Result<ModuleDescriptor, RepError> {
        let spec = self.spec().ok_or(RepError::NoChevalleyData)?;
        let d = ModuleDescriptor::new(self.highest_weight_vectors()?.into_iter().map(|(_, l)| (l, 1)));
        let found = d.dim(&spec)?;
        if found != self.dim as u64 {
            return Err(RepError::DimensionMismatch { found, dim: self.dim });
        }
        Ok(d)
    }

    pub fn multiplicity(&self, label: &IrrLabel) -> Result<u32, RepError> {
        if !self.weight_basis {
            return Err(RepError::NotWeightBasis);
        }
        Ok(self.highest_weight_vectors_of(label)?.len() as u32)
    }

    /// Whether the irreducible `label` embeds as a submodule.
    pub fn embeds(&self, label: &IrrLabel) -> Result<bool, RepError> {
        Ok(self.multiplicity(label)? >= 1)
    }

    /// Basis of the submodule generated by `v`, one echelon per weight space.
    pub fn cyclic_submodule(&self, v: &SparseVec) -> Result<Vec<SparseVec>, RepError> {
        let ch = self.algebra.chevalley_data().ok_or(RepError::NoChevalleyData)?;
        let weights = self.weights()?;
        let gens: Vec<SparseMatrix> = ch
            .lowering_indices()
            .iter()
            .chain(ch.raising_indices().iter())
            .map(|&i| self.action[i].transpose())
            .collect();
        let mut echelons: HashMap<Vec<i64>, SparseEchelon> = HashMap::new();
        let mut basis = Vec::new();
        let mut queue = VecDeque::new();
        let mut push = |w: SparseVec, basis: &mut Vec<SparseVec>, queue: &mut VecDeque<usize>| {
            let Some((i, _)) = w.entries().first() else { return };
            let ech = echelons.entry(weights[*i].clone()).or_insert_with(|| SparseEchelon::new(self.dim));
            if ech.insert(&w) {
                basis.push(w);
                queue.push_back(basis.len() - 1);
            }
        };
        push(v.clone(), &mut basis, &mut queue);
        while let Some(k) = queue.pop_front() {
            for g in &gens {
                let w = apply_transposed(g, &basis[k]);
                push(w, &mut basis, &mut queue);
            }
        }
        Ok(basis)
    }

    /// The irreducible submodule generated by a highest-weight vector of the
    /// given weight.
    pub fn extract_irreducible(&self, label: &IrrLabel) -> Result<Representation, RepError> {
        let hw = self.highest_weight_vectors_of(label)?;
        let v = hw.first().ok_or_else(|| RepError::NotConstructible(label.to_string()))?;
        let basis = self.cyclic_submodule(v)?;
        Ok(self.subrepresentation(&basis))
    }
}
