//! Realization of irreducible modules.
//!
//! Constructible set: every dominant weight of types A-D. Fundamental
//! weights come from exterior powers of the natural module (extracting the
//! top component for C and D) and from spin modules; any other `λ` is cut
//! out of `L(ω_i) ⊗ L(λ − ω_i)` by its highest-weight vector.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::{IrrLabel, ModuleDescriptor, RepError, Representation};
use crate::liealg::{semisimple_algebra, SemisimpleSpec};
use crate::rootdata::{weyl_dim, DominantWeight, Family, SimpleType};

type IrrCache = Mutex<HashMap<(SimpleType, DominantWeight), Arc<Representation>>>;

fn cache() -> &'static IrrCache {
    static CACHE: OnceLock<IrrCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn fundamental(t: SimpleType, k: usize) -> Result<Representation, RepError> {
    let n = t.rank;
    let label = IrrLabel(vec![t.omega(k)]);
    let wedge = || -> Result<Representation, RepError> {
        let nat = Representation::natural(t)?;
        Ok(if k == 1 { nat } else { nat.wedge_power(k) })
    };
    let ambient = match t.family {
        Family::A => wedge()?,
        Family::B if k == n => super::fock_b(n)?,
        Family::B => wedge()?,
        Family::C => wedge()?,
        Family::D if k + 1 >= n => super::fock_d(n)?,
        Family::D => wedge()?,
    };
    let target = weyl_dim(t, &t.omega(k))? as usize;
    if ambient.dim() == target {
        Ok(ambient)
    } else {
        ambient.extract_irreducible(&label)
    }
}

fn build(t: SimpleType, w: &DominantWeight) -> Result<Representation, RepError> {
    if w.is_zero() {
        return Representation::trivial_over(&SemisimpleSpec::simple(t), 1);
    }
    let i = w.0.iter().position(|&c| c > 0).expect("nonzero weight");
    let mut rest = w.clone();
    rest.0[i] -= 1;
    if rest.is_zero() {
        return fundamental(t, i + 1);
    }
    let ambient = irreducible(t, &t.omega(i + 1))?.tensor(&*irreducible(t, &rest)?)?;
    ambient.extract_irreducible(&IrrLabel(vec![w.clone()]))
}

/// The irreducible module `L(λ)` of a simple type (memoized).
pub fn irreducible(t: SimpleType, w: &DominantWeight) -> Result<Arc<Representation>, RepError> {
    t.check_weight(w)?;
    let key = (t, w.clone());
    if let Some(r) = cache().lock().expect("cache lock").get(&key) {
        return Ok(r.clone());
    }
    let r = Arc::new(build(t, w)?);
    let expected = weyl_dim(t, w)? as usize;
    if r.dim() != expected {
        return Err(RepError::NotConstructible(format!("{t} L{w}: got dimension {}, expected {expected}", r.dim())));
    }
    cache().lock().expect("cache lock").insert(key, r.clone());
    Ok(r)
}

/// Outer tensor product of the irreducibles named by `label`.
pub fn realize_label(spec: &SemisimpleSpec, label: &IrrLabel) -> Result<Representation, RepError> {
    label.check(spec)?;
    let parts: Vec<Representation> = spec
        .factors
        .iter()
        .zip(&label.0)
        .map(|(t, w)| irreducible(*t, w).map(|r| (*r).clone()))
        .collect::<Result<_, _>>()?;
    if parts.len() == 1 {
        return Ok(parts.into_iter().next().expect("one part"));
    }
    Representation::outer_tensor(&parts)
}

/// A module with the given decomposition.
pub fn realize(spec: &SemisimpleSpec, d: &ModuleDescriptor) -> Result<Representation, RepError> {
    let mut parts = Vec::new();
    for (label, m) in d.terms() {
        let r = realize_label(spec, label)?;
        for _ in 0..*m {
            parts.push(r.clone());
        }
    }
    if parts.is_empty() {
        return Ok(Representation::trivial(semisimple_algebra(spec)?, 0));
    }
    Representation::direct_sum(&parts)
}
