//! Spin modules from a fermionic Fock space.
//!
//! Basis vectors are the subsets `S ⊆ {1..n}` (bit masks), and
//! `a_k† |S⟩ = (−1)^{#{j ∈ S : j < k}} |S ∪ {k}⟩`. For `D_n` the generators are
//! `e_i = a_i† a_{i+1}` (i < n), `e_n = a_{n−1}† a_n†`, and for `B_n`
//! `e_n = a_n† P` with parity `P = (−1)^N`; each `f_i` is the adjoint
//! expression.

use num_traits::One;

use super::{IrrLabel, RepError, Representation};
use crate::liealg::{semisimple_algebra, SemisimpleSpec};
use crate::linalg::SparseMatrix;
use crate::rational::Q;
use crate::rootdata::{Family, SimpleType};

fn sign_below(mask: usize, k: usize) -> Q {
    if (mask & ((1 << k) - 1)).count_ones().is_multiple_of(2) {
        Q::one()
    } else {
        -Q::one()
    }
}

/// Creation operator for mode `k` (0-based).
fn create(n: usize, k: usize) -> SparseMatrix {
    let size = 1 << n;
    let trip = (0..size).filter(|m| m & (1 << k) == 0).map(|m| (m | (1 << k), m, sign_below(m, k)));
    SparseMatrix::from_triplets(size, size, trip.collect::<Vec<_>>())
}

fn annihilate(n: usize, k: usize) -> SparseMatrix {
    create(n, k).transpose()
}

fn parity(n: usize) -> SparseMatrix {
    let size: usize = 1 << n;
    let trip =
        (0..size).map(|m| (m, m, if m.count_ones() % 2 == 0 { Q::one() } else { -Q::one() })).collect::<Vec<_>>();
    SparseMatrix::from_triplets(size, size, trip)
}

fn from_generators(t: SimpleType, e: Vec<SparseMatrix>, f: Vec<SparseMatrix>) -> Result<Representation, RepError> {
    let algebra = semisimple_algebra(&SemisimpleSpec::simple(t))?;
    let ch = algebra.chevalley_data().ok_or(RepError::NoChevalleyData)?;
    let action = ch.factors[0].extend(&e, &f);
    Representation::new(algebra.clone(), 1 << t.rank, action)
}

/// The full `2^n`-dimensional Fock module of `D_n` (both half-spins).
pub fn fock_d(n: usize) -> Result<Representation, RepError> {
    let t = SimpleType::new(Family::D, n)?;
    let mut e = Vec::new();
    let mut f = Vec::new();
    for i in 0..n - 1 {
        e.push(create(n, i).mul(&annihilate(n, i + 1)));
        f.push(create(n, i + 1).mul(&annihilate(n, i)));
    }
    e.push(create(n, n - 2).mul(&create(n, n - 1)));
    f.push(annihilate(n, n - 1).mul(&annihilate(n, n - 2)));
    from_generators(t, e, f)
}

/// The `2^n`-dimensional spin module `L(ω_n)` of `B_n`.
pub fn fock_b(n: usize) -> Result<Representation, RepError> {
    let t = SimpleType::new(Family::B, n)?;
    let p = parity(n);
    let mut e = Vec::new();
    let mut f = Vec::new();
    for i in 0..n - 1 {
        e.push(create(n, i).mul(&annihilate(n, i + 1)));
        f.push(create(n, i + 1).mul(&annihilate(n, i)));
    }
    e.push(create(n, n - 1).mul(&p));
    f.push(p.mul(&annihilate(n, n - 1)));
    from_generators(t, e, f)
}

/// Half-spin module `L(ω_k)` of `D_n`, `k ∈ {n−1, n}`, cut out of the Fock module.
pub fn half_spin_d(n: usize, k: usize) -> Result<Representation, RepError> {
    let t = SimpleType::new(Family::D, n)?;
    if k + 1 < n || k > n {
        return Err(RepError::NotConstructible(format!("half-spin index {k} for {t}")));
    }
    fock_d(n)?.extract_irreducible(&IrrLabel(vec![t.omega(k)]))
}

/// The 16-dimensional half-spin module of `D_5`, labelled `L(ω4)`: it is the
/// even-occupation sector, whose highest weight vector is `|{1,2,3,4}⟩`.
pub fn spin16_d5() -> Result<Representation, RepError> {
    half_spin_d(5, 4)
}
