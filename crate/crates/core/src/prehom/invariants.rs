//! Invariant polynomials as rank certificates.
//!
//! If `f` is a polynomial with `D_x f = 0` for all `x ∈ s`, where
//! `(D_x f)(v) = ∇f(v) · ρ(x)v`, then `∇f(v)` annihilates the image of `M_v`.
//! So `k` invariants with independent gradients at one point bound the
//! generic rank of `M_v` by `dim V − k`, and rank can only drop away from
//! the generic locus.

use std::collections::HashMap;

use num_traits::Zero;

use crate::linalg::{SparseAccumulator, SparseEchelon, SparseMatrix, SparseVec};
use crate::rational::Q;
use crate::repbuilder::Representation;

/// A monomial as the sorted multiset of its variable indices.
type Monomial = Vec<u16>;

pub(crate) struct InvariantBound {
    pub degrees: Vec<u32>,
    pub count: usize,
    pub gradient_rank: usize,
}

fn binomial(n: usize, k: usize) -> usize {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// Degree-`d` monomials, restricted to weight zero when weights are given.
fn monomials(n: usize, d: usize, weights: Option<&[Vec<i64>]>) -> Vec<Monomial> {
    fn rec(
        start: usize,
        n: usize,
        left: usize,
        cur: &mut Monomial,
        acc: &mut [i64],
        weights: Option<&[Vec<i64>]>,
        out: &mut Vec<Monomial>,
    ) {
        if left == 0 {
            if acc.iter().all(|&c| c == 0) {
                out.push(cur.clone());
            }
            return;
        }
        for i in start..n {
            cur.push(i as u16);
            if let Some(w) = weights {
                acc.iter_mut().zip(&w[i]).for_each(|(a, b)| *a += b);
            }
            rec(i, n, left - 1, cur, acc, weights, out);
            if let Some(w) = weights {
                acc.iter_mut().zip(&w[i]).for_each(|(a, b)| *a -= b);
            }
            cur.pop();
        }
    }
    let width = weights.and_then(|w| w.first().map(Vec::len)).unwrap_or(0);
    let mut out = Vec::new();
    rec(0, n, d, &mut Vec::with_capacity(d), &mut vec![0; width], weights, &mut out);
    out
}

/// Image of a monomial under the derivation `D_x` for `ρ(x) = a`.
fn derive(m: &Monomial, a: &SparseMatrix, out: &mut HashMap<Monomial, Q>) {
    for p in 0..m.len() {
        let j = m[p] as usize;
        for (k, c) in a.row(j).entries() {
            let mut img: Monomial = m.iter().enumerate().filter(|&(i, _)| i != p).map(|(_, &x)| x).collect();
            let pos = img.partition_point(|&x| x < *k as u16);
            img.insert(pos, *k as u16);
            *out.entry(img).or_insert_with(Q::zero) += c;
        }
    }
}

/// Invariants of degree `d` as coefficient vectors over `basis`.
fn invariants_of_degree(basis: &[Monomial], gens: &[&SparseMatrix]) -> Vec<SparseVec> {
    let mut rows: HashMap<(usize, Monomial), SparseAccumulator> = HashMap::new();
    for (col, m) in basis.iter().enumerate() {
        for (g, a) in gens.iter().enumerate() {
            let mut img = HashMap::new();
            derive(m, a, &mut img);
            for (mono, c) in img {
                if !c.is_zero() {
                    rows.entry((g, mono)).or_default().add(col, c);
                }
            }
        }
    }
    let mut keys: Vec<(usize, Monomial)> = rows.keys().cloned().collect();
    keys.sort_unstable();
    let mut ech = SparseEchelon::new(basis.len());
    for k in keys {
        let row = rows.remove(&k).expect("present").finish();
        if !row.is_zero() {
            ech.insert(&row);
        }
    }
    ech.kernel()
}

fn gradient(f: &SparseVec, basis: &[Monomial], n: usize, point: &[Q]) -> SparseVec {
    let mut acc = SparseAccumulator::new();
    for (idx, c) in f.entries() {
        let m = &basis[*idx];
        for p in 0..m.len() {
            let mut t = c.clone();
            for (i, &x) in m.iter().enumerate() {
                if i != p {
                    t *= &point[x as usize];
                }
            }
            acc.add(m[p] as usize, t);
        }
    }
    let g = acc.finish();
    debug_assert!(g.max_index().is_none_or(|i| i < n));
    g
}

/// Searches invariants degree by degree until their gradients at `point`
/// reach rank `needed` or the budgets run out. `None` if no invariant with a
/// nonzero gradient was found.
pub(crate) fn invariant_bound(
    r: &Representation,
    point: &[Q],
    needed: usize,
    max_degree: u32,
    monomial_budget: usize,
) -> Option<InvariantBound> {
    let n = r.dim();
    let weights = if r.weight_basis() { r.weights().ok() } else { None };
    let gens: Vec<&SparseMatrix> = match r.algebra().chevalley_data() {
        Some(ch) if weights.is_some() => {
            ch.raising_indices().into_iter().chain(ch.lowering_indices()).map(|i| r.action(i)).collect()
        }
        _ => r.actions().iter().collect(),
    };
    let mut grads = SparseEchelon::new(n);
    let mut degrees = Vec::new();
    let mut count = 0;
    for d in 1..=max_degree as usize {
        if weights.is_none() && binomial(n + d - 1, d) > monomial_budget {
            break;
        }
        let basis = monomials(n, d, weights.as_deref());
        if basis.len() > monomial_budget {
            break;
        }
        if basis.is_empty() {
            continue;
        }
        let invs = invariants_of_degree(&basis, &gens);
        let mut used = false;
        for f in &invs {
            if grads.insert(&gradient(f, &basis, n, point)) {
                used = true;
                count += 1;
            }
        }
        if used {
            degrees.push(d as u32);
        }
        if grads.rank() >= needed {
            break;
        }
    }
    (grads.rank() > 0).then_some(InvariantBound { degrees, count, gradient_rank: grads.rank() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_zero_monomials() {
        // Two variables of opposite weight: only x0^k x1^k survive.
        let w = vec![vec![1], vec![-1]];
        assert_eq!(monomials(2, 2, Some(&w)), vec![vec![0, 1]]);
        assert!(monomials(2, 3, Some(&w)).is_empty());
        assert_eq!(monomials(3, 2, None).len(), 6);
    }
}
