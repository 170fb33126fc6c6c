//! Certified decompositions `g = s₁ + φ(s₁)` with `φ = exp(ad z)`.

use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{is_prehomogeneous, Mode, PrehomCertificate, Verdict};
use crate::liealg::{LieAlgebra, LieError, LinearMap, Subspace};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::rational::Q;
use crate::repbuilder::{RepError, Representation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("Levi candidate lives in dimension {got}, algebra has dimension {expected}")]
    Ambient { expected: usize, got: usize },
    #[error("Levi candidate is not a subalgebra")]
    NotSubalgebra,
    #[error("Levi candidate has a degenerate Killing form")]
    NotSemisimple,
    #[error("Levi candidate (dim {levi}) is not a complement of the radical (dim {rad}) in dimension {dim}")]
    NotComplement { levi: usize, rad: usize, dim: usize },
    #[error("certificate check failed: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// Why an algebra is not disemisimple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "refusal", rename_all = "snake_case")]
pub enum Refusal {
    RadicalNotNilpotent {
        radical_dim: usize,
    },
    RadicalNotPrehomogeneous {
        certificate: PrehomCertificate,
    },
    /// The prehomogeneity engine produced neither witness nor certificate.
    Inconclusive {
        certificate: PrehomCertificate,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionCertificate {
    pub levi_basis: Subspace,
    pub radical_basis: Subspace,
    /// `z = −v` for the prehomogeneity witness `v ∈ rad(g)`.
    pub z: Vec<Q>,
    pub phi: LinearMap,
    pub s2_basis: Subspace,
    pub intersection_dim: usize,
    pub prehom: PrehomCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certification {
    Certified(Box<DecompositionCertificate>),
    Refused(Refusal),
}

impl Certification {
    pub fn certificate(&self) -> Option<&DecompositionCertificate> {
        match self {
            Certification::Certified(c) => Some(c),
            Certification::Refused(_) => None,
        }
    }

    pub fn refusal(&self) -> Option<&Refusal> {
        match self {
            Certification::Certified(_) => None,
            Certification::Refused(r) => Some(r),
        }
    }
}

/// JSON view of a certificate.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateJson {
    #[serde(with = "crate::rational::serde_rows")]
    pub levi_basis: Vec<Vec<Q>>,
    #[serde(with = "crate::rational::serde_rows")]
    pub radical_basis: Vec<Vec<Q>>,
    #[serde(with = "crate::rational::serde_vec")]
    pub z: Vec<Q>,
    /// Rows of the matrix of `φ`.
    #[serde(with = "crate::rational::serde_rows")]
    pub phi: Vec<Vec<Q>>,
    #[serde(with = "crate::rational::serde_rows")]
    pub s2_basis: Vec<Vec<Q>>,
    pub intersection_dim: usize,
    pub prehom: PrehomCertificate,
}

impl DecompositionCertificate {
    pub fn to_json_view(&self) -> CertificateJson {
        CertificateJson {
            levi_basis: self.levi_basis.vectors(),
            radical_basis: self.radical_basis.vectors(),
            z: self.z.clone(),
            phi: self.phi.matrix.to_rows(),
            s2_basis: self.s2_basis.vectors(),
            intersection_dim: self.intersection_dim,
            prehom: self.prehom.clone(),
        }
    }

    /// Re-checks every claim of the certificate against `g`.
    pub fn verify(&self, g: &LieAlgebra) -> Result<(), String> {
        let phi = g.exp_ad(&self.z).map_err(|e| e.to_string())?;
        if phi != self.phi {
            return Err("phi differs from exp(ad z)".into());
        }
        if !g.is_homomorphism(&phi) {
            return Err("phi does not preserve brackets".into());
        }
        if phi.image(&self.levi_basis) != self.s2_basis {
            return Err("s2 is not phi(s1)".into());
        }
        let (spans, inter) = g.sum_spans(&self.levi_basis, &self.s2_basis);
        if !spans || inter != self.intersection_dim {
            return Err(format!("sum spans: {spans}, intersection dim {inter}"));
        }
        for s in [&self.levi_basis, &self.s2_basis] {
            if !is_semisimple_subalgebra(g, s) {
                return Err("a summand is not a semisimple subalgebra".into());
            }
        }
        let z = SparseVec::from_dense(&self.z);
        let images: Vec<Vec<Q>> = self
            .levi_basis
            .vectors()
            .iter()
            .map(|s| g.bracket_sparse(&SparseVec::from_dense(s), &z).to_dense(g.dim()))
            .collect();
        if Subspace::new(g.dim(), &images) != self.radical_basis {
            return Err("[s1, z] does not span the radical".into());
        }
        Ok(())
    }
}

fn is_semisimple_subalgebra(g: &LieAlgebra, s: &Subspace) -> bool {
    g.is_subalgebra(s) && g.restrict_to(&s.vectors()).is_ok_and(|a| a.is_semisimple())
}

/// The Levi factor as an abstract algebra, keeping the Chevalley data of `g`
/// when the Levi factor is the span of its Chevalley block.
fn levi_algebra(g: &LieAlgebra, levi: &Subspace) -> Result<LieAlgebra, CertifyError> {
    let restricted = g.restrict_to(&levi.vectors())?;
    if let Some(ch) = g.chevalley_data() {
        let k = ch.spec().dim();
        let block = ch.factors.iter().all(|f| f.offset + f.dim <= k) && k == levi.dim();
        if block && *levi == Subspace::coordinate(g.dim(), 0..k) {
            return Ok(restricted.with_labels(g.labels()[..k].to_vec()).with_chevalley(ch.clone()));
        }
    }
    Ok(restricted)
}

/// The adjoint action of the Levi factor on the radical, in the echelon
/// basis of the radical.
pub fn levi_module(g: &LieAlgebra, levi: &Subspace, rad: &Subspace) -> Result<Representation, CertifyError> {
    let algebra = Arc::new(levi_algebra(g, levi)?);
    let rad_rows: Vec<SparseVec> = rad.vectors().iter().map(|r| SparseVec::from_dense(r)).collect();
    let mut action = Vec::with_capacity(levi.dim());
    for x in levi.vectors() {
        let x = SparseVec::from_dense(&x);
        let mut trip = Vec::new();
        for (k, r) in rad_rows.iter().enumerate() {
            let img = g.bracket_sparse(&x, r).to_dense(g.dim());
            let coords = rad.coordinates(&img).ok_or(LieError::NotIdeal)?;
            for (i, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    trip.push((i, k, c));
                }
            }
        }
        action.push(SparseMatrix::from_triplets(rad.dim(), rad.dim(), trip));
    }
    Ok(Representation::new(algebra, rad.dim(), action)?)
}

pub fn certify_disemisimple(g: &LieAlgebra, levi: &Subspace) -> Result<Certification, CertifyError> {
    certify_disemisimple_with(g, levi, Mode::default())
}

/// Decides whether `g = levi ∔ rad(g)` is disemisimple and, if so, builds
/// the decomposition `g = s₁ + exp(ad z)(s₁)`.
pub fn certify_disemisimple_with(g: &LieAlgebra, levi: &Subspace, mode: Mode) -> Result<Certification, CertifyError> {
    if levi.ambient() != g.dim() {
        return Err(CertifyError::Ambient { expected: g.dim(), got: levi.ambient() });
    }
    if !g.is_subalgebra(levi) {
        return Err(CertifyError::NotSubalgebra);
    }
    if !g.restrict_to(&levi.vectors())?.is_semisimple() {
        return Err(CertifyError::NotSemisimple);
    }
    let rad = g.solvable_radical();
    if levi.dim() + rad.dim() != g.dim() || levi.sum(&rad).dim() != g.dim() {
        return Err(CertifyError::NotComplement { levi: levi.dim(), rad: rad.dim(), dim: g.dim() });
    }
    if !g.is_nilpotent(&rad)? {
        return Ok(Certification::Refused(Refusal::RadicalNotNilpotent { radical_dim: rad.dim() }));
    }
    let module = levi_module(g, levi, &rad)?;
    let prehom = is_prehomogeneous(&module, mode);
    let witness = match &prehom.verdict {
        Verdict::Prehomogeneous { witness, .. } => witness.clone(),
        Verdict::NotPrehomogeneous(_) => {
            return Ok(Certification::Refused(Refusal::RadicalNotPrehomogeneous { certificate: prehom }))
        }
        Verdict::Inconclusive { .. } => {
            return Ok(Certification::Refused(Refusal::Inconclusive { certificate: prehom }))
        }
    };
    let mut z = vec![Q::zero(); g.dim()];
    for (c, row) in witness.iter().zip(rad.vectors()) {
        for (zi, ri) in z.iter_mut().zip(row) {
            *zi -= c * ri;
        }
    }
    let phi = g.exp_ad(&z)?;
    let s2 = phi.image(levi);
    let (_, intersection_dim) = g.sum_spans(levi, &s2);
    let cert = DecompositionCertificate {
        levi_basis: levi.clone(),
        radical_basis: rad,
        z,
        phi,
        s2_basis: s2,
        intersection_dim,
        prehom,
    };
    cert.verify(g).map_err(CertifyError::Inconsistent)?;
    Ok(Certification::Certified(Box::new(cert)))
}
