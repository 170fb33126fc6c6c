use std::collections::HashMap;

use num_traits::One;

use super::{RepError, Representation};
use crate::liealg::{semisimple_algebra, simple_data, SemisimpleSpec};
use crate::linalg::SparseMatrix;
use crate::rational::Q;
use crate::rootdata::SimpleType;

/// Sorted `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

impl Representation {
    /// Defining matrix representation of a simple type.
    pub fn natural(t: SimpleType) -> Result<Self, RepError> {
        let data = simple_data(t)?;
        let algebra = semisimple_algebra(&SemisimpleSpec::simple(t))?;
        Ok(Self::from_parts(algebra, t.natural_dim(), data.natural.clone()))
    }

    /// Contragredient module, `x ↦ −ρ(x)ᵀ`.
    pub fn dual(&self) -> Self {
        let action = self.action.iter().map(|a| a.transpose().scale(&-Q::one())).collect();
        Self::from_parts(self.algebra.clone(), self.dim, action)
    }

    pub fn tensor(&self, other: &Self) -> Result<Self, RepError> {
        if !self.same_algebra(other) {
            return Err(RepError::AlgebraMismatch);
        }
        let i1 = SparseMatrix::identity(self.dim);
        let i2 = SparseMatrix::identity(other.dim);
        let action = self.action.iter().zip(&other.action).map(|(a, b)| a.kron(&i2).add(&i1.kron(b))).collect();
        Ok(Self::from_parts(self.algebra.clone(), self.dim * other.dim, action))
    }

    pub fn direct_sum(reps: &[Self]) -> Result<Self, RepError> {
        let first = reps.first().ok_or(RepError::AlgebraMismatch)?;
        if reps.iter().any(|r| !first.same_algebra(r)) {
            return Err(RepError::AlgebraMismatch);
        }
        let dim = reps.iter().map(|r| r.dim).sum();
        let action = (0..first.action.len())
            .map(|i| SparseMatrix::block_diagonal(&reps.iter().map(|r| &r.action[i]).collect::<Vec<_>>()))
            .collect();
        Ok(Self::from_parts(first.algebra.clone(), dim, action))
    }

    /// `k` copies of this module.
    pub fn multiple(&self, k: usize) -> Self {
        if k == 0 {
            return Self::trivial(self.algebra.clone(), 0);
        }
        Self::direct_sum(&vec![self.clone(); k]).expect("same algebra")
    }

    /// Exterior power `Λ^k`, basis the sorted `k`-subsets in lexicographic order.
    pub fn wedge_power(&self, k: usize) -> Self {
        let basis = subsets(self.dim, k);
        let index: HashMap<&[usize], usize> = basis.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
        let action = self
            .action
            .iter()
            .map(|a| {
                let cols = a.transpose();
                let mut trip = Vec::new();
                for (j, s) in basis.iter().enumerate() {
                    for p in 0..k {
                        for (r, x) in cols.row(s[p]).entries() {
                            if s.iter().enumerate().any(|(m, &t)| m != p && t == *r) {
                                continue;
                            }
                            let mut img = s.clone();
                            img[p] = *r;
                            // Sign of the permutation sorting `img`.
                            let mut sign = 1i64;
                            for u in 0..k {
                                for w in u + 1..k {
                                    if img[u] > img[w] {
                                        sign = -sign;
                                    }
                                }
                            }
                            img.sort_unstable();
                            let row = index[img.as_slice()];
                            trip.push((row, j, if sign > 0 { x.clone() } else { -x.clone() }));
                        }
                    }
                }
                SparseMatrix::from_triplets(basis.len(), basis.len(), trip)
            })
            .collect();
        Self::from_parts(self.algebra.clone(), basis.len(), action)
    }

    pub fn wedge2(&self) -> Self {
        self.wedge_power(2)
    }

    /// Symmetric square, basis `v_i v_j` with `i ≤ j` in lexicographic order.
    pub fn sym2(&self) -> Self {
        let n = self.dim;
        let basis: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let index: HashMap<(usize, usize), usize> = basis.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        let key = |a: usize, b: usize| if a <= b { (a, b) } else { (b, a) };
        let action = self
            .action
            .iter()
            .map(|a| {
                let cols = a.transpose();
                let mut trip = Vec::new();
                for (col, &(i, j)) in basis.iter().enumerate() {
                    for (r, x) in cols.row(i).entries() {
                        trip.push((index[&key(*r, j)], col, x.clone()));
                    }
                    for (r, x) in cols.row(j).entries() {
                        trip.push((index[&key(i, *r)], col, x.clone()));
                    }
                }
                SparseMatrix::from_triplets(basis.len(), basis.len(), trip)
            })
            .collect();
        Self::from_parts(self.algebra.clone(), basis.len(), action)
    }

    /// Outer tensor product of modules over disjoint factor lists; the
    /// result lives over the concatenated semisimple algebra.
    pub fn outer_tensor(reps: &[Self]) -> Result<Self, RepError> {
        let mut spec = SemisimpleSpec::new(Vec::new());
        for r in reps {
            spec = spec.concat(&r.spec().ok_or(RepError::NoChevalleyData)?);
        }
        let algebra = semisimple_algebra(&spec)?;
        let dim: usize = reps.iter().map(|r| r.dim).product();
        let mut action = Vec::with_capacity(algebra.dim());
        for (k, r) in reps.iter().enumerate() {
            let left = SparseMatrix::identity(reps[..k].iter().map(|r| r.dim).product());
            let right = SparseMatrix::identity(reps[k + 1..].iter().map(|r| r.dim).product());
            for a in &r.action {
                action.push(left.kron(a).kron(&right));
            }
        }
        Representation::new(algebra, dim, action)
    }

    /// Restriction to the invariant subspace spanned by `basis`, which must
    /// consist of weight vectors when the module has a weight basis.
    pub fn subrepresentation(&self, basis: &[crate::linalg::SparseVec]) -> Self {
        let solver = super::decompose::WeightSolver::new(self, basis);
        let action = self
            .action
            .iter()
            .map(|a| {
                let mut trip = Vec::new();
                for (j, b) in basis.iter().enumerate() {
                    let img = a.mul_sparse_vec(b);
                    for (i, x) in solver.coordinates(&img).entries() {
                        trip.push((*i, j, x.clone()));
                    }
                }
                SparseMatrix::from_triplets(basis.len(), basis.len(), trip)
            })
            .collect();
        Self::from_parts(self.algebra.clone(), basis.len(), action)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(subsets(4, 2), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn constructed_modules_are_representations() {
        let nat = Representation::natural(SimpleType::a(2)).unwrap();
        for r in [nat.dual(), nat.wedge2(), nat.sym2(), nat.tensor(&nat).unwrap()] {
            r.check_homomorphism().unwrap();
            assert!(r.weight_basis());
        }
        assert_eq!(nat.sym2().dim(), 6);
    }
}
