//! Direct sums, semidirect products and free two-step nilpotent algebras.

use num_traits::One;

use super::{ChevalleyData, LieAlgebra, LieError};
use crate::linalg::SparseVec;
use crate::rational::Q;
use crate::repbuilder::Representation;

fn shift(v: &SparseVec, by: usize) -> SparseVec {
    SparseVec::from_pairs(v.entries().iter().map(|(i, x)| (i + by, x.clone())))
}

/// Block-diagonal direct sum; each summand is an ideal.
pub fn direct_sum(gs: &[LieAlgebra]) -> LieAlgebra {
    let dim = gs.iter().map(LieAlgebra::dim).sum();
    let mut labels = Vec::with_capacity(dim);
    let mut brackets = Vec::new();
    let mut factors = Vec::new();
    let mut all_chevalley = true;
    let mut offset = 0;
    for g in gs {
        labels.extend(g.labels().iter().cloned());
        for i in 0..g.dim() {
            for j in i + 1..g.dim() {
                let v = g.basis_bracket(i, j);
                if !v.is_zero() {
                    brackets.push((i + offset, j + offset, shift(v, offset)));
                }
            }
        }
        match g.chevalley_data() {
            Some(ch) => factors.extend(ch.shifted(offset).factors),
            None => all_chevalley = all_chevalley && g.dim() == 0,
        }
        offset += g.dim();
    }
    let out = LieAlgebra::from_upper_brackets(dim, labels, brackets);
    if all_chevalley && !factors.is_empty() {
        out.with_chevalley(ChevalleyData { factors })
    } else {
        out
    }
}

/// The 3-dimensional Heisenberg algebra `[x, y] = z`.
pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::from_upper_brackets(3, vec!["x".into(), "y".into(), "z".into()], [(0, 1, SparseVec::unit(2))])
}

/// `s ⋉_ρ n` on the basis `[s..., n...]`, with
/// `[(x, v), (y, w)] = ([x, y], ρ(x)w − ρ(y)v + [v, w]_n)`.
pub fn semidirect(s: &LieAlgebra, rho: &Representation, n: &LieAlgebra) -> Result<LieAlgebra, LieError> {
    if rho.action_count() != s.dim() {
        return Err(LieError::Dimension(format!(
            "representation has {} action matrices, algebra has dim {}",
            rho.action_count(),
            s.dim()
        )));
    }
    if rho.dim() != n.dim() {
        return Err(LieError::Dimension(format!("module dim {} but ideal dim {}", rho.dim(), n.dim())));
    }
    rho.check_homomorphism_against(s)?;
    for (i, a) in rho.actions().iter().enumerate() {
        // D[b_p, b_q] = [D b_p, b_q] + [b_p, D b_q]; column p of `a` is D b_p.
        let cols: Vec<SparseVec> = {
            let t = a.transpose();
            (0..n.dim()).map(|p| t.row(p).clone()).collect()
        };
        for p in 0..n.dim() {
            for qq in p + 1..n.dim() {
                let lhs = a.mul_sparse_vec(n.basis_bracket(p, qq));
                let rhs = n
                    .bracket_sparse(&cols[p], &SparseVec::unit(qq))
                    .add_scaled(&n.bracket_sparse(&SparseVec::unit(p), &cols[qq]), &Q::one());
                if lhs != rhs {
                    return Err(LieError::NotDerivation(i));
                }
            }
        }
    }
    let ds = s.dim();
    let dim = ds + n.dim();
    let mut brackets = Vec::new();
    for i in 0..ds {
        for j in i + 1..ds {
            let v = s.basis_bracket(i, j);
            if !v.is_zero() {
                brackets.push((i, j, v.clone()));
            }
        }
    }
    for (i, a) in rho.actions().iter().enumerate() {
        let t = a.transpose();
        for p in 0..n.dim() {
            let col = t.row(p);
            if !col.is_zero() {
                brackets.push((i, ds + p, shift(col, ds)));
            }
        }
    }
    for p in 0..n.dim() {
        for qq in p + 1..n.dim() {
            let v = n.basis_bracket(p, qq);
            if !v.is_zero() {
                brackets.push((ds + p, ds + qq, shift(v, ds)));
            }
        }
    }
    let mut labels: Vec<String> = s.labels().to_vec();
    labels.extend(n.labels().iter().map(|l| format!("n.{l}")));
    let g = LieAlgebra::from_upper_brackets(dim, labels, brackets);
    Ok(match s.chevalley_data() {
        Some(ch) => g.with_chevalley(ch.clone()),
        None => g,
    })
}

/// Free two-step nilpotent algebra `f = A ⊕ Λ²A` on the module `rho`, and
/// the induced module structure `A ⊕ Λ²A` on `f`.
pub fn free_two_step(rho: &Representation) -> (LieAlgebra, Representation) {
    let d = rho.dim();
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
    let dim = d + pairs.len();
    let brackets: Vec<(usize, usize, SparseVec)> =
        pairs.iter().enumerate().map(|(k, &(i, j))| (i, j, SparseVec::unit(d + k))).collect();
    let mut labels: Vec<String> = (0..d).map(|i| format!("a{i}")).collect();
    labels.extend(pairs.iter().map(|(i, j)| format!("a{i}^a{j}")));
    let f = LieAlgebra::from_upper_brackets(dim, labels, brackets);
    let module = Representation::direct_sum(&[rho.clone(), rho.wedge2()]).expect("same algebra");
    (f, module)
}
