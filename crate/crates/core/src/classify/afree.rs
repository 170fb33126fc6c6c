//! Direct-sum structure of disemisimple algebras with A-free Levi factor.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::ClassifyError;
use crate::liealg::{semidirect, semisimple_algebra, LieAlgebra, SemisimpleSpec, Subspace};
use crate::linalg::SparseVec;
use crate::prehom::{certify_disemisimple, levi_module, Certification};
use crate::repbuilder::{realize, IrrLabel, ModuleDescriptor};
use crate::rootdata::{Family, SimpleType};

/// One simple factor with the part of the radical it acts on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AFreeFactor {
    pub factor: SimpleType,
    pub module: ModuleDescriptor,
}

/// Splits `g = s ⋉ rad(g)` with `s` A-free into simple pieces `s_i ⋉ V_i`.
///
/// The Levi factor must be the leading Chevalley block of `g`. Each radical
/// summand must be acted on by exactly one simple factor, and each piece
/// `s_i ⋉ V_i` is certified disemisimple on its own.
pub fn a_free_structure(g: &LieAlgebra) -> Result<Vec<AFreeFactor>, ClassifyError> {
    let ch = g.chevalley_data().ok_or(ClassifyError::NoLeviData)?;
    let spec = ch.spec();
    if spec.factors.iter().any(|t| t.family == Family::A) {
        return Err(ClassifyError::NotAFree);
    }
    let k = spec.dim();
    if ch.factors.iter().any(|f| f.offset + f.dim > k) {
        return Err(ClassifyError::NoLeviData);
    }
    let levi = Subspace::coordinate(g.dim(), 0..k);
    let rad = g.solvable_radical();
    if rad.dim() + k != g.dim() {
        return Err(ClassifyError::NoLeviData);
    }
    if !g.bracket_subspaces(&rad, &rad).is_zero() {
        return Err(ClassifyError::RadicalNotAbelian);
    }
    let module = levi_module(g, &levi, &rad)?;

    let mut parts: Vec<BTreeMap<IrrLabel, u32>> = vec![BTreeMap::new(); spec.len()];
    let mut spans: Vec<Vec<SparseVec>> = vec![Vec::new(); spec.len()];
    for (v, label) in module.highest_weight_vectors()? {
        let acting: Vec<usize> = (0..spec.len()).filter(|&i| !label.0[i].is_zero()).collect();
        let &[i] = acting.as_slice() else {
            return Err(ClassifyError::NonUniqueFactor { acting: acting.len(), label: label.to_string() });
        };
        *parts[i].entry(IrrLabel(vec![label.0[i].clone()])).or_default() += 1;
        spans[i].extend(module.cyclic_submodule(&v)?);
    }

    // Factor j must act by zero on the summands assigned to i ≠ j.
    for (j, f) in ch.factors.iter().enumerate() {
        for x in f.indices() {
            let a = module.action(x);
            for (i, span) in spans.iter().enumerate() {
                if i != j && span.iter().any(|v| !a.mul_sparse_vec(v).is_zero()) {
                    return Err(ClassifyError::Construction(format!("factor {j} acts on the summand of factor {i}")));
                }
            }
        }
    }

    let mut out = Vec::new();
    for (t, p) in spec.factors.iter().zip(parts) {
        let d = ModuleDescriptor::new(p);
        if !d.is_empty() {
            let single = SemisimpleSpec::simple(*t);
            let r = realize(&single, &d)?;
            let s = semisimple_algebra(&single)?;
            let h = semidirect(&s, &r, &LieAlgebra::abelian(r.dim()))?;
            let cert = certify_disemisimple(&h, &Subspace::coordinate(h.dim(), 0..s.dim()))?;
            if !matches!(cert, Certification::Certified(_)) {
                return Err(ClassifyError::FactorNotDisemisimple(format!("{t} on {d}")));
            }
        }
        out.push(AFreeFactor { factor: *t, module: d });
    }
    Ok(out)
}
