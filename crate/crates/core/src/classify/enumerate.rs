//! Exhaustive enumeration of modules below a dimension bound and the
//! completeness cross-check against the tables.

use serde::{Deserialize, Serialize};

use super::{vinberg_table, with_pool, ClassifyError};
use crate::liealg::SemisimpleSpec;
use crate::prehom::{is_prehomogeneous, Mode, PrehomCertificate};
use crate::repbuilder::{realize, IrrLabel, ModuleDescriptor};
use crate::rootdata::{dominant_weights_up_to, DominantWeight, Family, SimpleType};
use rayon::prelude::*;

/// Fixed dimension bounds `dim s − 1` for the desk-scale types.
pub const DESK_BOUNDS: [(Family, usize, u64); 7] = [
    (Family::A, 2, 7),
    (Family::A, 3, 14),
    (Family::A, 4, 23),
    (Family::C, 2, 9),
    (Family::C, 3, 20),
    (Family::B, 3, 20),
    (Family::D, 4, 27),
];

pub fn desk_bound(t: SimpleType) -> Option<u64> {
    DESK_BOUNDS.iter().find(|(f, r, _)| *f == t.family && *r == t.rank).map(|(_, _, b)| *b)
}

/// Nontrivial irreducible labels of `spec` with dimension at most `bound`,
/// sorted by `(dim, label)`.
pub fn irreducible_labels(spec: &SemisimpleSpec, bound: u64) -> Vec<(IrrLabel, u64)> {
    let mut partial: Vec<(Vec<DominantWeight>, u64)> = vec![(Vec::new(), 1)];
    for t in &spec.factors {
        let options = dominant_weights_up_to(*t, bound);
        let mut next = Vec::new();
        for (ws, d) in &partial {
            for (w, dw) in &options {
                if d * dw <= bound {
                    let mut ws = ws.clone();
                    ws.push(w.clone());
                    next.push((ws, d * dw));
                }
            }
        }
        partial = next;
    }
    let mut out: Vec<(IrrLabel, u64)> =
        partial.into_iter().map(|(ws, d)| (IrrLabel(ws), d)).filter(|(l, _)| !l.is_trivial()).collect();
    out.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    out
}

/// Every multiset of nontrivial irreducibles of total dimension at most
/// `bound`, each once, ordered by `(dim, descriptor)`.
pub fn enumerate_modules(spec: &SemisimpleSpec, bound: u64) -> Vec<ModuleDescriptor> {
    let labels = irreducible_labels(spec, bound);
    fn rec(
        labels: &[(IrrLabel, u64)],
        k: usize,
        left: u64,
        cur: &mut Vec<(IrrLabel, u32)>,
        out: &mut Vec<(u64, ModuleDescriptor)>,
        bound: u64,
    ) {
        if k == labels.len() {
            if !cur.is_empty() {
                out.push((bound - left, ModuleDescriptor::new(cur.iter().cloned())));
            }
            return;
        }
        let (l, d) = &labels[k];
        rec(labels, k + 1, left, cur, out, bound);
        let mut m = 1;
        while m as u64 * d <= left {
            cur.push((l.clone(), m));
            rec(labels, k + 1, left - m as u64 * d, cur, out, bound);
            cur.pop();
            m += 1;
        }
    }
    let mut out = Vec::new();
    rec(&labels, 0, bound, &mut Vec::new(), &mut out, bound);
    out.sort();
    out.into_iter().map(|(_, d)| d).collect()
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diff {
    /// Table entries within the bound that the engine did not confirm.
    pub missing: Vec<String>,
    /// Modules the engine found prehomogeneous that the table lacks.
    pub extra: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    #[serde(rename = "type")]
    pub simple_type: String,
    pub bound: u64,
    pub tested_count: usize,
    pub positives: Vec<String>,
    pub table: Vec<String>,
    pub diff: Diff,
    /// Modules left undecided by the engine; always empty in a clean run.
    pub inconclusive: Vec<String>,
}

impl Report {
    pub fn is_clean(&self) -> bool {
        self.diff.missing.is_empty() && self.diff.extra.is_empty() && self.inconclusive.is_empty()
    }
}

/// Runs the prehomogeneity engine over a list of modules in parallel; the
/// output order matches the input order.
pub fn classify_modules(
    spec: &SemisimpleSpec,
    modules: &[ModuleDescriptor],
    mode: Mode,
    jobs: Option<usize>,
) -> Result<Vec<PrehomCertificate>, ClassifyError> {
    with_pool(jobs, || {
        modules
            .par_iter()
            .map(|d| Ok(is_prehomogeneous(&realize(spec, d)?, mode)))
            .collect::<Result<Vec<_>, ClassifyError>>()
    })
}

pub fn cross_check_vinberg(t: SimpleType) -> Result<Report, ClassifyError> {
    cross_check_vinberg_with(t, t.algebra_dim() as u64 - 1, None)
}

/// Compares the symbolic verdicts over all modules up to `bound` with the
/// table entries of dimension at most `bound`.
pub fn cross_check_vinberg_with(t: SimpleType, bound: u64, jobs: Option<usize>) -> Result<Report, ClassifyError> {
    let spec = SemisimpleSpec::simple(t);
    let modules = enumerate_modules(&spec, bound);
    let verdicts = classify_modules(&spec, &modules, Mode::Symbolic, jobs)?;
    let mut positives = Vec::new();
    let mut inconclusive = Vec::new();
    for (d, c) in modules.iter().zip(&verdicts) {
        if c.is_prehomogeneous() {
            positives.push(d.clone());
        } else if !c.is_not_prehomogeneous() {
            inconclusive.push(d.to_string());
        }
    }
    let mut table = Vec::new();
    for d in vinberg_table(t) {
        if d.dim(&spec)? <= bound {
            table.push(d);
        }
    }
    let diff = Diff {
        missing: table.iter().filter(|d| !positives.contains(d)).map(ToString::to_string).collect(),
        extra: positives.iter().filter(|d| !table.contains(d)).map(ToString::to_string).collect(),
    };
    Ok(Report {
        simple_type: t.to_string(),
        bound,
        tested_count: modules.len(),
        positives: positives.iter().map(ToString::to_string).collect(),
        table: table.iter().map(ToString::to_string).collect(),
        diff,
        inconclusive,
    })
}
