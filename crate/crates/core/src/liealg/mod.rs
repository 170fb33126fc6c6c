//! Finite-dimensional Lie algebras over `Q` given by structure constants.

mod chevalley;
mod constructions;
mod serial;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{span_basis, Matrix, SparseAccumulator, SparseMatrix, SparseVec};
use crate::rational::{factorial, Q};
use crate::rootdata::RootDataError;

pub use chevalley::{
    chevalley, semisimple_algebra, simple_data, ChevalleyData, ChevalleyFactor, RecipeStep, SemisimpleSpec,
    SimpleAlgebraData,
};
pub use constructions::{direct_sum, free_two_step, heisenberg, semidirect};
pub use serial::{AlgebraFile, BracketEntry};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    Jacobi(usize, usize, usize),
    #[error("bracket table is not antisymmetric at ({0}, {1})")]
    Antisymmetry(usize, usize),
    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,
    #[error("subspace is not an ideal")]
    NotIdeal,
    #[error("ad(z) is not nilpotent")]
    NotNilpotent,
    #[error("action is not a homomorphism at basis pair ({0}, {1})")]
    NotRepresentation(usize, usize),
    #[error("action of basis element {0} is not a derivation")]
    NotDerivation(usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error("structure constant file: {0}")]
    Format(String),
}

/// A Lie algebra with basis `b_0..b_{dim-1}` and `[b_i, b_j] = table[i][j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    table: Vec<Vec<SparseVec>>,
    chevalley: Option<ChevalleyData>,
}

/// A subspace stored by its reduced row echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(ambient: usize, vectors: &[Vec<Q>]) -> Self {
        let basis = span_basis(ambient, vectors);
        let pivots =
            (0..basis.rows()).map(|r| basis.row(r).iter().position(|x| !x.is_zero()).expect("nonzero row")).collect();
        Subspace { ambient, basis, pivots }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// Span of the unit vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let vs: Vec<Vec<Q>> = indices
            .into_iter()
            .map(|i| {
                let mut v = vec![Q::zero(); ambient];
                v[i] = Q::one();
                v
            })
            .collect();
        Subspace::new(ambient, &vs)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<Q>> {
        self.basis.to_rows()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Coordinates of `v` in the echelon basis, `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        let c: Vec<Q> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (r, x) in c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(r).iter().enumerate() {
                if !b.is_zero() {
                    rest[j] -= x * b;
                }
            }
        }
        rest.iter().all(Zero::is_zero).then_some(c)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|r| self.contains(other.basis.row(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.vectors();
        vs.extend(other.vectors());
        Subspace::new(self.ambient, &vs)
    }
}

/// A linear map `Q^source → Q^target`, `apply(v) = matrix · v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    pub source_dim: usize,
    pub target_dim: usize,
    pub matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        LinearMap { source_dim: matrix.cols(), target_dim: matrix.rows(), matrix }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(Matrix::identity(n))
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        self.matrix.mul_vec(v)
    }

    pub fn compose(&self, inner: &LinearMap) -> LinearMap {
        Self::new(self.matrix.mul(&inner.matrix))
    }

    pub fn image(&self, u: &Subspace) -> Subspace {
        let vs: Vec<Vec<Q>> = u.vectors().iter().map(|v| self.apply(v)).collect();
        Subspace::new(self.target_dim, &vs)
    }
}

impl LieAlgebra {
    /// Builds an algebra from brackets `[b_i, b_j]` for `i < j`; the rest is
    /// filled by antisymmetry.
    pub fn from_upper_brackets(
        dim: usize,
        labels: Vec<String>,
        brackets: impl IntoIterator<Item = (usize, usize, SparseVec)>,
    ) -> Self {
        let mut table = vec![vec![SparseVec::new(); dim]; dim];
        for (i, j, v) in brackets {
            assert!(i < dim && j < dim, "bracket index out of range");
            if i == j {
                continue;
            }
            let (a, b, v) = if i < j { (i, j, v) } else { (j, i, v.scale(&-Q::one())) };
            table[b][a] = v.scale(&-Q::one());
            table[a][b] = v;
        }
        let labels = if labels.len() == dim { labels } else { (0..dim).map(|i| format!("b{i}")).collect() };
        LieAlgebra { dim, labels, table, chevalley: None }
    }

    /// Builds an algebra from a full table, checking antisymmetry.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<SparseVec>>) -> Result<Self, LieError> {
        let dim = table.len();
        if table.iter().any(|row| row.len() != dim) {
            return Err(LieError::Dimension("ragged bracket table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if *x != table[j][i].scale(&-Q::one()) {
                    return Err(LieError::Antisymmetry(i, j));
                }
            }
        }
        let labels = if labels.len() == dim { labels } else { (0..dim).map(|i| format!("b{i}")).collect() };
        Ok(LieAlgebra { dim, labels, table, chevalley: None })
    }

    pub fn abelian(dim: usize) -> Self {
        Self::from_upper_brackets(dim, Vec::new(), std::iter::empty())
    }

    pub fn zero() -> Self {
        Self::abelian(0)
    }

    pub fn with_chevalley(mut self, data: ChevalleyData) -> Self {
        self.chevalley = Some(data);
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn chevalley_data(&self) -> Option<&ChevalleyData> {
        self.chevalley.as_ref()
    }

    /// `[b_i, b_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    pub fn bracket_sparse(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = SparseAccumulator::new();
        for (i, a) in x.entries() {
            for (j, b) in y.entries() {
                if i != j {
                    acc.add_scaled(&self.table[*i][*j], &(a * b));
                }
            }
        }
        acc.finish()
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        self.bracket_sparse(&SparseVec::from_dense(x), &SparseVec::from_dense(y)).to_dense(self.dim)
    }

    /// Matrix of `ad(x)`: column j is `[x, b_j]`.
    pub fn ad(&self, x: &[Q]) -> SparseMatrix {
        let xs = SparseVec::from_dense(x);
        let mut trip = Vec::new();
        for j in 0..self.dim {
            let mut acc = SparseAccumulator::new();
            for (i, a) in xs.entries() {
                acc.add_scaled(&self.table[*i][j], a);
            }
            trip.extend(acc.finish().entries().iter().map(|(k, c)| (*k, j, c.clone())));
        }
        SparseMatrix::from_triplets(self.dim, self.dim, trip)
    }

    pub fn ad_basis(&self, i: usize) -> SparseMatrix {
        let trip = (0..self.dim).flat_map(|j| self.table[i][j].entries().iter().map(move |(k, c)| (*k, j, c.clone())));
        SparseMatrix::from_triplets(self.dim, self.dim, trip.collect::<Vec<_>>())
    }

    pub fn check_antisymmetry(&self) -> Result<(), LieError> {
        for i in 0..self.dim {
            if !self.table[i][i].is_zero() {
                return Err(LieError::Antisymmetry(i, i));
            }
            for j in i + 1..self.dim {
                if self.table[i][j] != self.table[j][i].scale(&-Q::one()) {
                    return Err(LieError::Antisymmetry(i, j));
                }
            }
        }
        Ok(())
    }

    /// Exact Jacobi check over all basis triples `i < j < k`.
    pub fn check_jacobi(&self) -> Result<(), LieError> {
        self.check_antisymmetry()?;
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                let bij = &self.table[i][j];
                for k in j + 1..n {
                    let mut acc = SparseAccumulator::new();
                    // [[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j]
                    for (m, c) in bij.entries() {
                        acc.add_scaled(&self.table[*m][k], c);
                    }
                    for (m, c) in self.table[j][k].entries() {
                        acc.add_scaled(&self.table[*m][i], c);
                    }
                    for (m, c) in self.table[k][i].entries() {
                        acc.add_scaled(&self.table[*m][j], c);
                    }
                    if !acc.finish().is_zero() {
                        return Err(LieError::Jacobi(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Span of `[x, y]` for `x ∈ u`, `y ∈ v`.
    pub fn bracket_subspaces(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let us: Vec<SparseVec> = u.vectors().iter().map(|x| SparseVec::from_dense(x)).collect();
        let vs: Vec<SparseVec> = v.vectors().iter().map(|x| SparseVec::from_dense(x)).collect();
        let mut ech = crate::linalg::SparseEchelon::new(self.dim);
        for a in &us {
            for b in &vs {
                ech.insert(&self.bracket_sparse(a, b));
                if ech.rank() == self.dim {
                    return Subspace::full(self.dim);
                }
            }
        }
        let rows: Vec<Vec<Q>> = ech.reduced_rows().into_iter().map(|(_, r)| r.to_dense(self.dim)).collect();
        Subspace::new(self.dim, &rows)
    }

    pub fn derived_algebra(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        self.bracket_subspaces(&full, &full)
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_algebra().dim() == self.dim
    }

    pub fn is_subalgebra(&self, u: &Subspace) -> bool {
        u.contains_subspace(&self.bracket_subspaces(u, u))
    }

    pub fn is_ideal(&self, u: &Subspace) -> bool {
        u.contains_subspace(&self.bracket_subspaces(&Subspace::full(self.dim), u))
    }

    /// Killing form `K_ij = tr(ad b_i ∘ ad b_j)`.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim;
        let ads: Vec<SparseMatrix> = (0..n).map(|i| self.ad_basis(i)).collect();
        let ads_t: Vec<SparseMatrix> = ads.iter().map(SparseMatrix::transpose).collect();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                // tr(A B) = Σ_{r} row_r(A) · col_r(B) = Σ_r row_r(A) · row_r(Bᵀ)
                let mut acc = Q::zero();
                for r in 0..n {
                    let a = ads[i].row(r);
                    let b = ads_t[j].row(r);
                    if a.is_empty() || b.is_empty() {
                        continue;
                    }
                    let bd = b.entries();
                    for (c, x) in a.entries() {
                        if let Ok(p) = bd.binary_search_by_key(c, |(m, _)| *m) {
                            acc += x * &bd[p].1;
                        }
                    }
                }
                k[(i, j)] = acc.clone();
                k[(j, i)] = acc;
            }
        }
        k
    }

    pub fn is_semisimple(&self) -> bool {
        self.dim == 0 || self.killing_form().rank() == self.dim
    }

    /// Solvable radical: the Killing-orthogonal complement of `[g, g]`.
    pub fn solvable_radical(&self) -> Subspace {
        let derived = self.derived_algebra();
        if derived.is_zero() {
            return Subspace::full(self.dim);
        }
        let k = self.killing_form();
        let dk = derived.basis().mul(&k);
        Subspace::new(self.dim, &dk.kernel())
    }

    /// Lower central series of a subalgebra, down to its stable term.
    pub fn lower_central_series(&self, sub: &Subspace) -> Result<Vec<Subspace>, LieError> {
        if !self.is_subalgebra(sub) {
            return Err(LieError::NotSubalgebra);
        }
        let mut series = vec![sub.clone()];
        loop {
            let next = self.bracket_subspaces(sub, series.last().expect("nonempty"));
            if next.dim() == series.last().expect("nonempty").dim() {
                return Ok(series);
            }
            let done = next.is_zero();
            series.push(next);
            if done {
                return Ok(series);
            }
        }
    }

    pub fn derived_series(&self, sub: &Subspace) -> Result<Vec<Subspace>, LieError> {
        if !self.is_subalgebra(sub) {
            return Err(LieError::NotSubalgebra);
        }
        let mut series = vec![sub.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_subspaces(last, last);
            if next.dim() == last.dim() {
                return Ok(series);
            }
            let done = next.is_zero();
            series.push(next);
            if done {
                return Ok(series);
            }
        }
    }

    pub fn is_nilpotent(&self, sub: &Subspace) -> Result<bool, LieError> {
        Ok(self.lower_central_series(sub)?.last().is_some_and(Subspace::is_zero))
    }

    pub fn is_solvable(&self, sub: &Subspace) -> Result<bool, LieError> {
        Ok(self.derived_series(sub)?.last().is_some_and(Subspace::is_zero))
    }

    /// Nilpotency class of a nilpotent subalgebra (0 for the zero algebra).
    pub fn nilpotency_class(&self, sub: &Subspace) -> Result<Option<usize>, LieError> {
        let s = self.lower_central_series(sub)?;
        Ok(s.last().is_some_and(Subspace::is_zero).then(|| s.len() - 1))
    }

    /// `exp(ad z)`, defined when `ad z` is nilpotent.
    pub fn exp_ad(&self, z: &[Q]) -> Result<LinearMap, LieError> {
        if z.len() != self.dim {
            return Err(LieError::Dimension(format!("vector of length {} for algebra of dim {}", z.len(), self.dim)));
        }
        let a = self.ad(z);
        let mut total = SparseMatrix::identity(self.dim);
        let mut power = SparseMatrix::identity(self.dim);
        for k in 1..=self.dim + 1 {
            power = a.mul(&power);
            if power.is_zero() {
                return Ok(LinearMap::new(total.to_dense()));
            }
            total = total.add_scaled(&power, &factorial(k).recip());
        }
        if self.dim == 0 {
            return Ok(LinearMap::identity(0));
        }
        Err(LieError::NotNilpotent)
    }

    /// Checks `φ([b_i, b_j]) = [φ b_i, φ b_j]` for all basis pairs.
    pub fn is_homomorphism(&self, phi: &LinearMap) -> bool {
        if phi.source_dim != self.dim || phi.target_dim != self.dim {
            return false;
        }
        let images: Vec<SparseVec> = (0..self.dim).map(|j| SparseVec::from_dense(&phi.matrix.column(j))).collect();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let lhs = SparseVec::from_dense(&phi.apply(&self.table[i][j].to_dense(self.dim)));
                let rhs = self.bracket_sparse(&images[i], &images[j]);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Whether `u1 + u2 = g`, and `dim(u1 ∩ u2)`.
    pub fn sum_spans(&self, u1: &Subspace, u2: &Subspace) -> (bool, usize) {
        let s = u1.sum(u2);
        (s.dim() == self.dim, u1.dim() + u2.dim() - s.dim())
    }

    /// The subalgebra `sub` as a Lie algebra in its given basis rows.
    pub fn restrict_to(&self, basis: &[Vec<Q>]) -> Result<LieAlgebra, LieError> {
        let sub = Subspace::new(self.dim, basis);
        if sub.dim() != basis.len() {
            return Err(LieError::Dimension("subalgebra basis is not independent".into()));
        }
        // Coordinates in the given basis through the echelon coordinates.
        let echelon_coords: Vec<Vec<Q>> =
            basis.iter().map(|b| sub.coordinates(b).expect("basis vector lies in its span")).collect();
        let to_given = Matrix::from_columns(sub.dim(), &echelon_coords).inverse().expect("basis change is invertible");
        let sv: Vec<SparseVec> = basis.iter().map(|b| SparseVec::from_dense(b)).collect();
        let mut brackets = Vec::new();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let w = self.bracket_sparse(&sv[i], &sv[j]).to_dense(self.dim);
                let c = sub.coordinates(&w).ok_or(LieError::NotSubalgebra)?;
                brackets.push((i, j, SparseVec::from_dense(&to_given.mul_vec(&c))));
            }
        }
        Ok(LieAlgebra::from_upper_brackets(basis.len(), Vec::new(), brackets))
    }

    /// The quotient `g/u` with basis the unit vectors outside the pivots of `u`.
    pub fn quotient_by_ideal(&self, u: &Subspace) -> Result<(LieAlgebra, LinearMap), LieError> {
        if u.ambient() != self.dim {
            return Err(LieError::Dimension("ideal lives in a different space".into()));
        }
        if !self.is_ideal(u) {
            return Err(LieError::NotIdeal);
        }
        let mut is_pivot = vec![false; self.dim];
        for &p in u.pivots() {
            is_pivot[p] = true;
        }
        let keep: Vec<usize> = (0..self.dim).filter(|&i| !is_pivot[i]).collect();
        let mut new_index = vec![usize::MAX; self.dim];
        for (a, &i) in keep.iter().enumerate() {
            new_index[i] = a;
        }
        // Projection: subtract the u-part determined by the pivot entries.
        let project = |v: &[Q]| -> Vec<Q> {
            let mut w = v.to_vec();
            for (r, &p) in u.pivots().iter().enumerate() {
                let c = w[p].clone();
                if c.is_zero() {
                    continue;
                }
                for (j, b) in u.basis().row(r).iter().enumerate() {
                    if !b.is_zero() {
                        w[j] -= &c * b;
                    }
                }
            }
            keep.iter().map(|&i| w[i].clone()).collect()
        };
        let mut proj = Matrix::zeros(keep.len(), self.dim);
        for j in 0..self.dim {
            let mut e = vec![Q::zero(); self.dim];
            e[j] = Q::one();
            for (r, x) in project(&e).into_iter().enumerate() {
                proj[(r, j)] = x;
            }
        }
        let mut brackets = Vec::new();
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate().skip(a + 1) {
                let v = self.table[i][j].to_dense(self.dim);
                brackets.push((a, b, SparseVec::from_dense(&project(&v))));
            }
        }
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let mut q = LieAlgebra::from_upper_brackets(keep.len(), labels, brackets);
        if let Some(ch) = &self.chevalley {
            if let Some(mapped) = ch.reindex(&new_index) {
                q.chevalley = Some(mapped);
            }
        }
        Ok((q, LinearMap::new(proj)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn two_dim_nonabelian() -> LieAlgebra {
        LieAlgebra::from_upper_brackets(2, vec!["x".into(), "y".into()], [(0, 1, SparseVec::unit(1))])
    }

    #[test]
    fn small_algebras() {
        let g = two_dim_nonabelian();
        g.check_jacobi().unwrap();
        assert!(!g.is_perfect());
        assert!(!g.is_nilpotent(&Subspace::full(2)).unwrap());
        assert!(g.is_solvable(&Subspace::full(2)).unwrap());
        let n3 = heisenberg();
        assert_eq!(n3.nilpotency_class(&Subspace::full(3)).unwrap(), Some(2));
        let z = LieAlgebra::zero();
        assert!(z.is_nilpotent(&Subspace::full(0)).unwrap());
    }

    #[test]
    fn quotient_of_heisenberg_by_center_is_abelian() {
        let n3 = heisenberg();
        let center = Subspace::coordinate(3, [2]);
        let (quot, proj) = n3.quotient_by_ideal(&center).unwrap();
        assert_eq!(quot.dim(), 2);
        assert!(quot.derived_algebra().is_zero());
        assert_eq!(proj.matrix.rank(), 2);
    }

    #[test]
    fn non_nilpotent_ad_is_rejected() {
        let g = two_dim_nonabelian();
        assert_eq!(g.exp_ad(&[q(1), q(0)]), Err(LieError::NotNilpotent));
        let phi = g.exp_ad(&[q(0), q(1)]).unwrap();
        assert!(g.is_homomorphism(&phi));
    }
}
