//! Modules of type 1 (`A ⊕ B`, `B ⊂ Λ²A`) and type 2 (`A ⊕ B ⊕ C`,
//! `C ⊂ A ⊗ B`), their search, and the two-step nilpotent algebras built
//! from them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{classify_modules, irreducible_labels, ClassifyError};
use crate::liealg::{free_two_step, semidirect, semisimple_algebra, LieAlgebra, SemisimpleSpec, Subspace};
use crate::linalg::SparseVec;
use crate::prehom::{levi_module, Mode};
use crate::repbuilder::{realize_label, IrrLabel, ModuleDescriptor, Representation};
use crate::rootdata::SimpleType;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum TypedModuleCandidate {
    Type1 { a: IrrLabel, b: IrrLabel },
    Type2 { a: IrrLabel, b: IrrLabel, c: IrrLabel },
}

impl TypedModuleCandidate {
    pub fn descriptor(&self) -> ModuleDescriptor {
        let labels = match self {
            Self::Type1 { a, b } => vec![a, b],
            Self::Type2 { a, b, c } => vec![a, b, c],
        };
        ModuleDescriptor::new(labels.into_iter().map(|l| (l.clone(), 1)))
    }

    /// The summand spanning the derived radical of the constructed algebra.
    pub fn derived_label(&self) -> &IrrLabel {
        match self {
            Self::Type1 { b, .. } => b,
            Self::Type2 { c, .. } => c,
        }
    }
}

/// All type-1 and type-2 modules of total dimension at most `bound`.
/// Type-2 candidates take `a ≤ b` in label order.
pub fn typed_candidates(spec: &SemisimpleSpec, bound: u64) -> Result<Vec<TypedModuleCandidate>, ClassifyError> {
    let labels = irreducible_labels(spec, bound);
    let mut reps: BTreeMap<IrrLabel, Representation> = BTreeMap::new();
    for (l, d) in &labels {
        if *d < bound {
            reps.insert(l.clone(), realize_label(spec, l)?);
        }
    }
    let mut out = Vec::new();
    for (a, da) in &labels {
        let Some(ra) = reps.get(a) else { continue };
        let wedge = ra.wedge2();
        for (b, db) in &labels {
            if da + db <= bound && wedge.embeds(b)? {
                out.push(TypedModuleCandidate::Type1 { a: a.clone(), b: b.clone() });
            }
        }
    }
    for (i, (a, da)) in labels.iter().enumerate() {
        for (b, db) in &labels[i..] {
            if da + db >= bound {
                continue;
            }
            let (Some(ra), Some(rb)) = (reps.get(a), reps.get(b)) else { continue };
            let tensor = ra.tensor(rb)?;
            for (c, dc) in &labels {
                if da + db + dc <= bound && tensor.embeds(c)? {
                    let (a, b) = if a <= b { (a, b) } else { (b, a) };
                    out.push(TypedModuleCandidate::Type2 { a: a.clone(), b: b.clone(), c: c.clone() });
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    #[serde(rename = "type")]
    pub simple_type: String,
    pub bound: u64,
    pub tested_count: usize,
    pub prehomogeneous: Vec<TypedModuleCandidate>,
    pub inconclusive: Vec<TypedModuleCandidate>,
}

/// Type-1 and type-2 modules of `t` up to `bound` that are prehomogeneous.
pub fn search_type12(t: SimpleType, bound: u64) -> Result<Vec<TypedModuleCandidate>, ClassifyError> {
    Ok(search_type12_with(t, bound, Mode::Symbolic, None)?.prehomogeneous)
}

pub fn search_type12_with(
    t: SimpleType,
    bound: u64,
    mode: Mode,
    jobs: Option<usize>,
) -> Result<SearchOutcome, ClassifyError> {
    let spec = SemisimpleSpec::simple(t);
    let candidates = typed_candidates(&spec, bound)?;
    let modules: Vec<ModuleDescriptor> = candidates.iter().map(TypedModuleCandidate::descriptor).collect();
    let verdicts = classify_modules(&spec, &modules, mode, jobs)?;
    let mut out = SearchOutcome {
        simple_type: t.to_string(),
        bound,
        tested_count: candidates.len(),
        prehomogeneous: Vec::new(),
        inconclusive: Vec::new(),
    };
    for (c, v) in candidates.into_iter().zip(verdicts) {
        if v.is_prehomogeneous() {
            out.prehomogeneous.push(c);
        } else if !v.is_not_prehomogeneous() {
            out.inconclusive.push(c);
        }
    }
    Ok(out)
}

/// `(s ⋉ f)/U` where `f = V ⊕ Λ²V` is free two-step nilpotent on `rho` and
/// `U` is the complement in `Λ²V` of the submodule generated by `keep`.
fn quotient_construction(
    spec: &SemisimpleSpec,
    rho: &Representation,
    keep: &SparseVec,
) -> Result<LieAlgebra, ClassifyError> {
    let s = semisimple_algebra(spec)?;
    let (f, f_rep) = free_two_step(rho);
    let g = semidirect(&s, &f_rep, &f)?;
    let offset = s.dim() + rho.dim();
    let wedge = rho.wedge2();
    let u: Vec<Vec<_>> = wedge
        .complement_of(keep)?
        .iter()
        .map(|v| SparseVec::from_pairs(v.entries().iter().map(|(i, x)| (i + offset, x.clone()))).to_dense(g.dim()))
        .collect();
    let (q, _) = g.quotient_by_ideal(&Subspace::new(g.dim(), &u))?;
    Ok(q)
}

/// The algebra `s ⋉ (A ⊕ B)` with `[A, A] = B`.
pub fn construct_type1(spec: &SemisimpleSpec, a: &IrrLabel, b: &IrrLabel) -> Result<LieAlgebra, ClassifyError> {
    let ra = realize_label(spec, a)?;
    let keep = ra
        .wedge2()
        .highest_weight_vectors_of(b)?
        .into_iter()
        .next()
        .ok_or_else(|| ClassifyError::NotEmbedded(format!("{b} in wedge2 {a}")))?;
    let g = quotient_construction(spec, &ra, &keep)?;
    verify_typed_algebra(&g, spec, &TypedModuleCandidate::Type1 { a: a.clone(), b: b.clone() })?;
    Ok(g)
}

/// The algebra `s ⋉ (A ⊕ B ⊕ C)` with `[A, B] = C`.
pub fn construct_type2(
    spec: &SemisimpleSpec,
    a: &IrrLabel,
    b: &IrrLabel,
    c: &IrrLabel,
) -> Result<LieAlgebra, ClassifyError> {
    let ra = realize_label(spec, a)?;
    let rb = realize_label(spec, b)?;
    let (da, n) = (ra.dim(), ra.dim() + rb.dim());
    let rho = Representation::direct_sum(&[ra, rb])?;
    // Wedge basis: pairs i < j in lexicographic order; A ⊗ B is i < da ≤ j.
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let keep = rho
        .wedge2()
        .highest_weight_vectors_within(c, |k| pairs[k].0 < da && pairs[k].1 >= da)?
        .into_iter()
        .next()
        .ok_or_else(|| ClassifyError::NotEmbedded(format!("{c} in {a} ⊗ {b}")))?;
    let g = quotient_construction(spec, &rho, &keep)?;
    let candidate = TypedModuleCandidate::Type2 { a: a.clone(), b: b.clone(), c: c.clone() };
    verify_typed_algebra(&g, spec, &candidate)?;
    Ok(g)
}

/// Checks that the Levi part is the leading block, the radical has class
/// two, decomposes as the candidate, and has the expected derived algebra.
pub fn verify_typed_algebra(
    g: &LieAlgebra,
    spec: &SemisimpleSpec,
    candidate: &TypedModuleCandidate,
) -> Result<(), ClassifyError> {
    let fail = |m: String| Err(ClassifyError::Construction(m));
    let levi = Subspace::coordinate(g.dim(), 0..spec.dim());
    let rad = g.solvable_radical();
    if rad.dim() + spec.dim() != g.dim() {
        return fail(format!("radical has dim {}, expected {}", rad.dim(), g.dim() - spec.dim()));
    }
    let series = g.lower_central_series(&rad)?;
    if series.len() != 3 || !series[2].is_zero() {
        return fail(format!("radical lower central series has length {}", series.len()));
    }
    let found = levi_module(g, &levi, &rad)?.decompose()?;
    if found != candidate.descriptor() {
        return fail(format!("radical decomposes as {found}"));
    }
    let derived = levi_module(g, &levi, &series[1])?.decompose()?;
    if derived != ModuleDescriptor::irreducible(candidate.derived_label().clone()) {
        return fail(format!("derived radical decomposes as {derived}"));
    }
    Ok(())
}
