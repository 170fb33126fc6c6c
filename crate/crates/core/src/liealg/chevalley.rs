//! Simple Lie algebras of types A-D realized as matrix algebras, with a
//! Chevalley generating set and a recipe that rebuilds every basis element
//! from the generators.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{LieAlgebra, LieError};
use crate::linalg::{Matrix, SparseMatrix, SparseVec};
use crate::rational::{q, Q};
use crate::rootdata::{root_system, Family, RootSystem, SimpleType};

/// How a basis element of a simple factor is obtained from the generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecipeStep {
    E(usize),
    F(usize),
    /// `[b_a, b_b]` in local indices of the factor.
    Bracket(usize, usize),
}

/// Chevalley data of one simple factor, indices global to the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChevalleyFactor {
    pub simple_type: SimpleType,
    pub offset: usize,
    pub dim: usize,
    pub h: Vec<usize>,
    pub e: Vec<usize>,
    pub f: Vec<usize>,
    /// One step per local basis index.
    pub recipe: Vec<RecipeStep>,
}

impl ChevalleyFactor {
    pub fn indices(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.dim
    }

    /// Extends generator images to images of all local basis elements.
    pub fn extend(&self, e_img: &[SparseMatrix], f_img: &[SparseMatrix]) -> Vec<SparseMatrix> {
        let mut memo: Vec<Option<SparseMatrix>> = vec![None; self.dim];
        for k in 0..self.dim {
            self.eval(k, e_img, f_img, &mut memo);
        }
        memo.into_iter().map(|m| m.expect("evaluated")).collect()
    }

    fn eval(
        &self,
        k: usize,
        e_img: &[SparseMatrix],
        f_img: &[SparseMatrix],
        memo: &mut Vec<Option<SparseMatrix>>,
    ) -> SparseMatrix {
        if let Some(m) = &memo[k] {
            return m.clone();
        }
        let m = match self.recipe[k] {
            RecipeStep::E(i) => e_img[i].clone(),
            RecipeStep::F(i) => f_img[i].clone(),
            RecipeStep::Bracket(a, b) => {
                let x = self.eval(a, e_img, f_img, memo);
                let y = self.eval(b, e_img, f_img, memo);
                x.commutator(&y)
            }
        };
        memo[k] = Some(m.clone());
        m
    }
}

/// Chevalley data of a semisimple algebra (or of the Levi part of a larger one).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChevalleyData {
    pub factors: Vec<ChevalleyFactor>,
}

impl ChevalleyData {
    pub fn spec(&self) -> SemisimpleSpec {
        SemisimpleSpec { factors: self.factors.iter().map(|f| f.simple_type).collect() }
    }

    /// All Cartan indices, factor by factor.
    pub fn cartan_indices(&self) -> Vec<usize> {
        self.factors.iter().flat_map(|f| f.h.iter().copied()).collect()
    }

    pub fn raising_indices(&self) -> Vec<usize> {
        self.factors.iter().flat_map(|f| f.e.iter().copied()).collect()
    }

    pub fn lowering_indices(&self) -> Vec<usize> {
        self.factors.iter().flat_map(|f| f.f.iter().copied()).collect()
    }

    pub fn total_rank(&self) -> usize {
        self.factors.iter().map(|f| f.simple_type.rank).sum()
    }

    pub fn shifted(&self, by: usize) -> ChevalleyData {
        let factors = self
            .factors
            .iter()
            .map(|f| ChevalleyFactor {
                simple_type: f.simple_type,
                offset: f.offset + by,
                dim: f.dim,
                h: f.h.iter().map(|i| i + by).collect(),
                e: f.e.iter().map(|i| i + by).collect(),
                f: f.f.iter().map(|i| i + by).collect(),
                recipe: f.recipe.clone(),
            })
            .collect();
        ChevalleyData { factors }
    }

    /// Re-indexes through `map`; `None` if a factor is not kept as a
    /// contiguous block.
    pub(crate) fn reindex(&self, map: &[usize]) -> Option<ChevalleyData> {
        let mut factors = Vec::new();
        for f in &self.factors {
            let new: Vec<usize> = f.indices().map(|i| map[i]).collect();
            if new.contains(&usize::MAX) {
                return None;
            }
            let offset = new[0];
            if new.iter().enumerate().any(|(k, &i)| i != offset + k) {
                return None;
            }
            let shift = |v: &Vec<usize>| v.iter().map(|&i| map[i]).collect();
            factors.push(ChevalleyFactor {
                simple_type: f.simple_type,
                offset,
                dim: f.dim,
                h: shift(&f.h),
                e: shift(&f.e),
                f: shift(&f.f),
                recipe: f.recipe.clone(),
            });
        }
        Some(ChevalleyData { factors })
    }
}

/// A semisimple algebra as a list of simple factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SemisimpleSpec {
    pub factors: Vec<SimpleType>,
}

impl SemisimpleSpec {
    pub fn new(factors: Vec<SimpleType>) -> Self {
        SemisimpleSpec { factors }
    }

    pub fn simple(t: SimpleType) -> Self {
        SemisimpleSpec { factors: vec![t] }
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(SimpleType::algebra_dim).sum()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn concat(&self, other: &SemisimpleSpec) -> SemisimpleSpec {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().copied());
        SemisimpleSpec { factors }
    }
}

impl fmt::Display for SemisimpleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// A simple algebra together with its defining matrices.
#[derive(Debug)]
pub struct SimpleAlgebraData {
    pub algebra: LieAlgebra,
    /// The basis elements as matrices of the defining representation.
    pub natural: Vec<SparseMatrix>,
    pub roots: RootSystem,
}

fn unit(n: usize, a: usize, b: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m[(a, b)] = Q::one();
    m
}

fn commutator(x: &Matrix, y: &Matrix) -> Matrix {
    x.mul(y).add(&y.mul(x).scale(&-Q::one()))
}

/// Invariant form `J` with `X ∈ g ⇔ Xᵀ J + J X = 0`, if any.
fn form(t: SimpleType) -> Option<Matrix> {
    let n = t.natural_dim();
    let l = t.rank;
    match t.family {
        Family::A => None,
        Family::B | Family::D => {
            let mut j = Matrix::zeros(n, n);
            for k in 0..n {
                j[(k, n - 1 - k)] = Q::one();
            }
            Some(j)
        }
        Family::C => {
            let mut j = Matrix::zeros(n, n);
            for k in 0..n {
                j[(k, n - 1 - k)] = if k < l { Q::one() } else { -Q::one() };
            }
            Some(j)
        }
    }
}

/// Matrix-unit positions for the simple root vectors.
fn simple_units(t: SimpleType) -> Vec<(usize, usize)> {
    let l = t.rank;
    let mut u: Vec<(usize, usize)> = (1..l).map(|i| (i - 1, i)).collect();
    match t.family {
        Family::A => u.push((l - 1, l)),
        Family::B | Family::C => u.push((l - 1, l)),
        Family::D => u.push((l - 2, l)),
    }
    u
}

fn build_simple(t: SimpleType) -> Result<SimpleAlgebraData, LieError> {
    let rs = root_system(t)?;
    let l = t.rank;
    let n = t.natural_dim();
    let j = form(t);
    let jinv = j.as_ref().map(|m| m.inverse().expect("invertible form"));
    let project = |m: &Matrix| -> Matrix {
        match (&j, &jinv) {
            (Some(j), Some(ji)) => m.add(&ji.mul(&m.transpose()).mul(j).scale(&-Q::one())),
            _ => m.clone(),
        }
    };
    let mut e_simple = Vec::new();
    let mut f_simple = Vec::new();
    for &(a, b) in &simple_units(t) {
        let e = project(&unit(n, a, b));
        let f0 = project(&unit(n, b, a));
        let h0 = commutator(&e, &f0);
        let he = commutator(&h0, &e);
        // he = c e for a scalar c; rescale f so that [[e, f], e] = 2e.
        let (r, c0) =
            (0..n * n).map(|k| (k / n, k % n)).find(|&(r, c)| !e[(r, c)].is_zero()).expect("nonzero root vector");
        let c = &he[(r, c0)] / &e[(r, c0)];
        assert!(!c.is_zero(), "degenerate simple root vector");
        e_simple.push(e);
        f_simple.push(f0.scale(&(q(2) / c)));
    }
    let roots = &rs.positive_roots;
    let nr = roots.len();
    let mut e_mats: Vec<Matrix> = Vec::with_capacity(nr);
    let mut f_mats: Vec<Matrix> = Vec::with_capacity(nr);
    // Local layout: [h_1..h_l, e_β (root order), f_β (root order)].
    let mut recipe = vec![RecipeStep::E(0); l + 2 * nr];
    for (k, beta) in roots.iter().enumerate() {
        if RootSystem::height(beta) == 1 {
            let i = beta.iter().position(|&c| c == 1).expect("simple root");
            e_mats.push(e_simple[i].clone());
            f_mats.push(f_simple[i].clone());
            recipe[l + k] = RecipeStep::E(i);
            recipe[l + nr + k] = RecipeStep::F(i);
            continue;
        }
        let (i, g) = (0..l)
            .find_map(|i| {
                let mut gamma = beta.clone();
                gamma[i] -= 1;
                roots[..k].iter().position(|r| *r == gamma).map(|g| (i, g))
            })
            .expect("every non-simple positive root has a predecessor");
        let simple_pos = roots.iter().position(|r| RootSystem::height(r) == 1 && r[i] == 1).expect("simple root");
        let e = commutator(&e_simple[i], &e_mats[g]);
        let f = commutator(&f_simple[i], &f_mats[g]);
        assert!(!e.is_zero() && !f.is_zero(), "vanishing root vector");
        e_mats.push(e);
        f_mats.push(f);
        recipe[l + k] = RecipeStep::Bracket(l + simple_pos, l + g);
        recipe[l + nr + k] = RecipeStep::Bracket(l + nr + simple_pos, l + nr + g);
    }
    let mut basis: Vec<Matrix> = Vec::with_capacity(l + 2 * nr);
    for i in 0..l {
        basis.push(commutator(&e_simple[i], &f_simple[i]));
        let pe = roots.iter().position(|r| RootSystem::height(r) == 1 && r[i] == 1).expect("simple root");
        recipe[i] = RecipeStep::Bracket(l + pe, l + nr + pe);
    }
    basis.extend(e_mats);
    basis.extend(f_mats);
    let dim = basis.len();
    assert_eq!(dim, t.algebra_dim(), "basis size");

    // Coordinates of a matrix in the basis, read from pivot entries.
    let flat =
        Matrix::from_rows(n * n, basis.iter().map(|m| (0..n).flat_map(|r| m.row(r).to_vec()).collect()).collect());
    let (_, pivots) = flat.rref();
    assert_eq!(pivots.len(), dim, "basis is independent");
    let mut bp = Matrix::zeros(dim, dim);
    for r in 0..dim {
        for (c, &p) in pivots.iter().enumerate() {
            bp[(r, c)] = flat[(r, p)].clone();
        }
    }
    let bp_inv = bp.inverse().expect("pivot block invertible");
    let coords = |m: &Matrix| -> SparseVec {
        let mp: Vec<Q> = pivots.iter().map(|&p| m[(p / n, p % n)].clone()).collect();
        let c = bp_inv.transpose().mul_vec(&mp);
        let sv = SparseVec::from_dense(&c);
        debug_assert!({
            let mut acc = Matrix::zeros(n, n);
            for (k, x) in sv.entries() {
                acc = acc.add(&basis[*k].scale(x));
            }
            acc == *m
        });
        sv
    };
    let mut brackets = Vec::new();
    for a in 0..dim {
        for b in a + 1..dim {
            let c = commutator(&basis[a], &basis[b]);
            if !c.is_zero() {
                brackets.push((a, b, coords(&c)));
            }
        }
    }
    let root_label = |beta: &[i64]| beta.iter().map(i64::to_string).collect::<Vec<_>>().join("");
    let mut labels: Vec<String> = (1..=l).map(|i| format!("h{i}")).collect();
    labels.extend(roots.iter().map(|b| format!("e{}", root_label(b))));
    labels.extend(roots.iter().map(|b| format!("f{}", root_label(b))));
    let simple_index = |i: usize| roots.iter().position(|r| RootSystem::height(r) == 1 && r[i] == 1).expect("simple");
    let factor = ChevalleyFactor {
        simple_type: t,
        offset: 0,
        dim,
        h: (0..l).collect(),
        e: (0..l).map(|i| l + simple_index(i)).collect(),
        f: (0..l).map(|i| l + nr + simple_index(i)).collect(),
        recipe,
    };
    let algebra =
        LieAlgebra::from_upper_brackets(dim, labels, brackets).with_chevalley(ChevalleyData { factors: vec![factor] });
    let natural = basis.iter().map(SparseMatrix::from_dense).collect();
    Ok(SimpleAlgebraData { algebra, natural, roots: rs })
}

type SimpleCache = Mutex<HashMap<SimpleType, Arc<SimpleAlgebraData>>>;
type SemisimpleCache = Mutex<HashMap<SemisimpleSpec, Arc<LieAlgebra>>>;

fn simple_cache() -> &'static SimpleCache {
    static CACHE: OnceLock<SimpleCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn semisimple_cache() -> &'static SemisimpleCache {
    static CACHE: OnceLock<SemisimpleCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Cached matrix realization of a simple type.
pub fn simple_data(t: SimpleType) -> Result<Arc<SimpleAlgebraData>, LieError> {
    if let Some(d) = simple_cache().lock().expect("cache lock").get(&t) {
        return Ok(d.clone());
    }
    let d = Arc::new(build_simple(t)?);
    simple_cache().lock().expect("cache lock").insert(t, d.clone());
    Ok(d)
}

/// The simple Lie algebra of type `t` in a Chevalley basis.
pub fn chevalley(t: SimpleType) -> Result<LieAlgebra, LieError> {
    Ok(simple_data(t)?.algebra.clone())
}

/// Cached direct sum of the simple factors of `spec`.
pub fn semisimple_algebra(spec: &SemisimpleSpec) -> Result<Arc<LieAlgebra>, LieError> {
    if let Some(g) = semisimple_cache().lock().expect("cache lock").get(spec) {
        return Ok(g.clone());
    }
    let parts: Vec<LieAlgebra> = spec.factors.iter().map(|&t| chevalley(t)).collect::<Result<_, _>>()?;
    let g = Arc::new(super::direct_sum(&parts));
    semisimple_cache().lock().expect("cache lock").insert(spec.clone(), g.clone());
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_match_closed_forms() {
        for t in [SimpleType::a(1), SimpleType::a(2), SimpleType::b(2), SimpleType::c(2), SimpleType::d(3)] {
            let g = chevalley(t).unwrap();
            assert_eq!(g.dim(), t.algebra_dim());
            g.check_jacobi().unwrap();
        }
    }

    #[test]
    fn cartan_relations() {
        for t in [SimpleType::a(3), SimpleType::b(3), SimpleType::c(3), SimpleType::d(4)] {
            let data = simple_data(t).unwrap();
            let g = &data.algebra;
            let ch = &g.chevalley_data().unwrap().factors[0];
            for i in 0..t.rank {
                for j in 0..t.rank {
                    let v = g.basis_bracket(ch.h[i], ch.e[j]);
                    let expected = SparseVec::unit(ch.e[j]).scale(&q(data.roots.cartan[j][i]));
                    assert_eq!(*v, expected, "{t}: [h{i}, e{j}]");
                    let ef = g.basis_bracket(ch.e[i], ch.f[j]);
                    if i == j {
                        assert_eq!(*ef, SparseVec::unit(ch.h[i]));
                    } else {
                        assert!(ef.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn recipe_reproduces_natural_matrices() {
        let data = simple_data(SimpleType::c(3)).unwrap();
        let ch = &data.algebra.chevalley_data().unwrap().factors[0];
        let e: Vec<SparseMatrix> = ch.e.iter().map(|&i| data.natural[i].clone()).collect();
        let f: Vec<SparseMatrix> = ch.f.iter().map(|&i| data.natural[i].clone()).collect();
        assert_eq!(ch.extend(&e, &f), data.natural);
    }
}
