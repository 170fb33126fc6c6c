//! Prehomogeneity of modules and the disemisimple certification pipeline.
//!
//! A module `V` of `s` is prehomogeneous when some `v` has `s·v = V`, that
//! is when the evaluation matrix `M_v` (column `j` is `ρ(b_j)v`) has rank
//! `dim V`. A witness with exact full rank is a proof of Yes. A No is proved
//! by bounding the generic rank of `M_v` from above, either by fraction-free
//! elimination over the polynomial ring or by invariant polynomials.

mod certify;
mod invariants;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::linalg::Matrix;
use crate::poly::{bareiss_rank, Poly};
use crate::rational::{q, Q};
use crate::repbuilder::Representation;

pub use certify::{
    certify_disemisimple, certify_disemisimple_with, levi_module, CertificateJson, Certification, CertifyError,
    DecompositionCertificate, Refusal,
};

pub const DEFAULT_SEED: u64 = 0x5eed;
pub const DEFAULT_TRIALS: usize = 8;
/// Random coordinates are drawn from `[-COORD_RANGE, COORD_RANGE]`.
pub const COORD_RANGE: i64 = 10;

const SYMBOLIC_SEED: u64 = 0x51_6e_b0_1c;
const SYMBOLIC_POINTS: usize = 3;
const ELIMINATION_MAX_VARS: usize = 6;
const ELIMINATION_TERM_BUDGET: usize = 50_000;
const INVARIANT_MAX_DEGREE: u32 = 6;
const INVARIANT_MONOMIAL_BUDGET: usize = 400_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluationMatrix {
    pub matrix: Matrix,
    pub v: Vec<Q>,
}

impl EvaluationMatrix {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("vector has length {got}, module has dimension {expected}")]
pub struct ShapeError {
    pub expected: usize,
    pub got: usize,
}

/// `M_v`: a `dim V × dim s` matrix whose column `j` is `ρ(b_j)·v`.
pub fn evaluation_matrix(r: &Representation, v: &[Q]) -> Result<EvaluationMatrix, ShapeError> {
    if v.len() != r.dim() {
        return Err(ShapeError { expected: r.dim(), got: v.len() });
    }
    let cols = r.orbit_columns(v);
    Ok(EvaluationMatrix { matrix: Matrix::from_columns(r.dim(), &cols), v: v.to_vec() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Mode {
    Randomized { seed: u64, trials: usize },
    Symbolic,
}

impl Default for Mode {
    fn default() -> Self {
        Mode::Randomized { seed: DEFAULT_SEED, trials: DEFAULT_TRIALS }
    }
}

/// How an upper bound on the generic rank was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoundMethod {
    /// Fraction-free elimination over `Q[v_1, ..., v_n]`.
    Elimination,
    /// Gradients of invariant polynomials of the listed degrees.
    Invariants { degrees: Vec<u32>, count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum NoReason {
    DimensionBound,
    EtaleExclusion,
    TrivialSummand,
    /// `generic_rank` is attained at some point; `upper_bound` is proved for
    /// every point. The two agree whenever the bound is tight.
    SymbolicRankDeficit {
        generic_rank: usize,
        upper_bound: usize,
        method: BoundMethod,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Prehomogeneous {
        #[serde(with = "crate::rational::serde_vec")]
        witness: Vec<Q>,
        rank: usize,
    },
    NotPrehomogeneous(NoReason),
    /// No witness and no certificate within the search budgets.
    Inconclusive {
        lower_rank: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeUsed {
    FastPath,
    Randomized,
    Escalated,
    Symbolic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrehomCertificate {
    #[serde(flatten)]
    pub verdict: Verdict,
    pub dim_v: usize,
    pub dim_s: usize,
    pub mode: ModeUsed,
    pub seed: Option<u64>,
}

impl PrehomCertificate {
    pub fn is_prehomogeneous(&self) -> bool {
        matches!(self.verdict, Verdict::Prehomogeneous { .. })
    }

    pub fn is_not_prehomogeneous(&self) -> bool {
        matches!(self.verdict, Verdict::NotPrehomogeneous(_))
    }

    pub fn witness(&self) -> Option<&[Q]> {
        match &self.verdict {
            Verdict::Prehomogeneous { witness, .. } => Some(witness),
            _ => None,
        }
    }

    pub fn reason(&self) -> Option<&NoReason> {
        match &self.verdict {
            Verdict::NotPrehomogeneous(r) => Some(r),
            _ => None,
        }
    }

    /// Recomputes the rank at the witness of a Yes verdict.
    pub fn verify(&self, r: &Representation) -> bool {
        match &self.verdict {
            Verdict::Prehomogeneous { witness, .. } => {
                r.dim() == 0 || evaluation_matrix(r, witness).is_ok_and(|m| m.rank() == r.dim())
            }
            _ => true,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

fn random_point(seed: u64, stream: u64, n: usize, range: i64) -> Vec<Q> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    (0..n).map(|_| q(rng.gen_range(-range..=range))).collect()
}

fn rank_at(r: &Representation, v: &[Q]) -> usize {
    evaluation_matrix(r, v).expect("matching length").rank()
}

/// Largest rank over a few seeded points, with the point attaining it.
fn sampled_rank(r: &Representation, seed: u64, points: usize, range: i64) -> (usize, Vec<Q>) {
    let results: Vec<(usize, Vec<Q>)> = (0..points as u64)
        .into_par_iter()
        .map(|t| {
            let v = random_point(seed, t, r.dim(), range);
            (rank_at(r, &v), v)
        })
        .collect();
    // First point of maximal rank keeps the choice deterministic.
    let best = results.iter().map(|(k, _)| *k).max().unwrap_or(0);
    results.into_iter().find(|(k, _)| *k == best).unwrap_or((0, Vec::new()))
}

/// Bounds on the generic rank of `M_v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicRank {
    /// Rank attained at `point`.
    pub lower: usize,
    /// Proven bound for every `v`; equals `dim V` when no bound was found.
    pub upper: usize,
    pub method: Option<BoundMethod>,
    #[serde(with = "crate::rational::serde_vec")]
    pub point: Vec<Q>,
}

impl SymbolicRank {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

fn poly_matrix(r: &Representation) -> Vec<Vec<Poly>> {
    let n = r.dim();
    let mut m = vec![vec![Poly::zero(n); r.action_count()]; n];
    for (j, a) in r.actions().iter().enumerate() {
        for (i, row) in m.iter_mut().enumerate() {
            let entries = a.row(i).entries().iter().cloned();
            row[j] = Poly::linear(n, entries);
        }
    }
    m
}

/// A point where `p` does not vanish, searched in growing boxes.
fn find_nonroot(p: &Poly, seed: u64) -> Vec<Q> {
    for t in 0u64.. {
        let v = random_point(seed, 1000 + t, p.nvars(), COORD_RANGE + t as i64);
        if !p.eval(&v).is_zero() {
            return v;
        }
    }
    unreachable!("a nonzero polynomial has a nonroot in a large enough box")
}

/// Generic rank of `M_v` with a proven upper bound, without fast paths.
pub fn symbolic_rank(r: &Representation) -> SymbolicRank {
    let n = r.dim();
    let (lower, point) = sampled_rank(r, SYMBOLIC_SEED, SYMBOLIC_POINTS, 10 * COORD_RANGE);
    if lower == n {
        return SymbolicRank { lower, upper: n, method: None, point };
    }
    if n <= ELIMINATION_MAX_VARS {
        if let Some((rank, minor)) = bareiss_rank(poly_matrix(r), n, ELIMINATION_TERM_BUDGET) {
            let point = if rank > lower { find_nonroot(&minor, SYMBOLIC_SEED) } else { point };
            let lower = rank_at(r, &point);
            debug_assert_eq!(lower, rank);
            return SymbolicRank { lower, upper: rank, method: Some(BoundMethod::Elimination), point };
        }
    }
    match invariants::invariant_bound(r, &point, n - lower, INVARIANT_MAX_DEGREE, INVARIANT_MONOMIAL_BUDGET) {
        Some(b) => SymbolicRank {
            lower,
            upper: n - b.gradient_rank,
            method: Some(BoundMethod::Invariants { degrees: b.degrees, count: b.count }),
            point,
        },
        None => SymbolicRank { lower, upper: n, method: None, point },
    }
}

fn symbolic_verdict(r: &Representation) -> Verdict {
    let n = r.dim();
    let sr = symbolic_rank(r);
    if sr.lower == n {
        return Verdict::Prehomogeneous { witness: sr.point, rank: n };
    }
    match sr.method {
        Some(method) if sr.upper < n => Verdict::NotPrehomogeneous(NoReason::SymbolicRankDeficit {
            generic_rank: sr.lower,
            upper_bound: sr.upper,
            method,
        }),
        _ => Verdict::Inconclusive { lower_rank: sr.lower },
    }
}

fn fast_path(r: &Representation, etale_shortcut: bool) -> Option<Verdict> {
    let (n, s) = (r.dim(), r.action_count());
    if n == 0 {
        return Some(Verdict::Prehomogeneous { witness: Vec::new(), rank: 0 });
    }
    if n > s {
        return Some(Verdict::NotPrehomogeneous(NoReason::DimensionBound));
    }
    if etale_shortcut && n == s && r.algebra().is_semisimple() {
        return Some(Verdict::NotPrehomogeneous(NoReason::EtaleExclusion));
    }
    if r.algebra().is_semisimple() && !r.invariants().is_empty() {
        return Some(Verdict::NotPrehomogeneous(NoReason::TrivialSummand));
    }
    None
}

fn decide(r: &Representation, mode: Mode, etale_shortcut: bool) -> PrehomCertificate {
    let cert = |verdict, mode, seed| PrehomCertificate { verdict, dim_v: r.dim(), dim_s: r.action_count(), mode, seed };
    let seed = match mode {
        Mode::Randomized { seed, .. } => Some(seed),
        Mode::Symbolic => None,
    };
    if let Some(v) = fast_path(r, etale_shortcut) {
        return cert(v, ModeUsed::FastPath, seed);
    }
    match mode {
        Mode::Symbolic => cert(symbolic_verdict(r), ModeUsed::Symbolic, None),
        Mode::Randomized { seed, trials } => {
            let n = r.dim();
            let hits: Vec<Option<Vec<Q>>> = (0..trials as u64)
                .into_par_iter()
                .map(|t| {
                    let v = random_point(seed, t, n, COORD_RANGE);
                    (rank_at(r, &v) == n).then_some(v)
                })
                .collect();
            match hits.into_iter().flatten().next() {
                Some(witness) => cert(Verdict::Prehomogeneous { witness, rank: n }, ModeUsed::Randomized, Some(seed)),
                None => cert(symbolic_verdict(r), ModeUsed::Escalated, Some(seed)),
            }
        }
    }
}

/// Decides prehomogeneity. The semisimple fast paths (dimension bound,
/// étale exclusion, trivial summand) apply only when the acting algebra is
/// semisimple.
pub fn is_prehomogeneous(r: &Representation, mode: Mode) -> PrehomCertificate {
    decide(r, mode, true)
}

/// Prehomogeneous with `dim V = dim s`, decided by the rank test itself.
pub fn is_etale(r: &Representation) -> bool {
    r.dim() == r.action_count() && decide(r, Mode::default(), false).is_prehomogeneous()
}
