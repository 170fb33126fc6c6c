//! Root systems of the classical families A-D, dominant weights and the
//! Weyl dimension formula.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{q, to_i64, Q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootDataError {
    #[error("rank {rank} is not allowed for type {family} (minimum {min})")]
    InvalidRank { family: Family, rank: usize, min: usize },
    #[error("exceptional type {0} is not supported")]
    Exceptional(String),
    #[error("cannot parse simple type {0:?}")]
    Syntax(String),
    #[error("weight {weight} has length {len}, expected rank {rank}")]
    WeightLength { weight: String, len: usize, rank: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        };
        write!(f, "{c}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootDataError> {
        let min = family.min_rank();
        if rank < min {
            return Err(RootDataError::InvalidRank { family, rank, min });
        }
        Ok(SimpleType { family, rank })
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Family::A, rank).expect("valid A rank")
    }

    pub fn b(rank: usize) -> Self {
        Self::new(Family::B, rank).expect("valid B rank")
    }

    pub fn c(rank: usize) -> Self {
        Self::new(Family::C, rank).expect("valid C rank")
    }

    pub fn d(rank: usize) -> Self {
        Self::new(Family::D, rank).expect("valid D rank")
    }

    /// Dimension of the simple Lie algebra.
    pub fn algebra_dim(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 2),
            Family::B | Family::C => l * (2 * l + 1),
            Family::D => l * (2 * l - 1),
        }
    }

    /// Dimension of the defining matrix representation.
    pub fn natural_dim(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l + 1,
            Family::B => 2 * l + 1,
            Family::C | Family::D => 2 * l,
        }
    }

    pub fn positive_root_count(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 1) / 2,
            Family::B | Family::C => l * l,
            Family::D => l * (l - 1),
        }
    }

    /// Fundamental weight ω_i (1-based index).
    pub fn omega(&self, i: usize) -> DominantWeight {
        assert!(i >= 1 && i <= self.rank, "fundamental weight index out of range");
        let mut c = vec![0; self.rank];
        c[i - 1] = 1;
        DominantWeight(c)
    }

    pub fn zero_weight(&self) -> DominantWeight {
        DominantWeight(vec![0; self.rank])
    }

    pub fn check_weight(&self, w: &DominantWeight) -> Result<(), RootDataError> {
        if w.0.len() != self.rank {
            return Err(RootDataError::WeightLength { weight: w.to_string(), len: w.0.len(), rank: self.rank });
        }
        Ok(())
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(|| RootDataError::Syntax(s.to_string()))?;
        let rank: usize = chars.as_str().parse().map_err(|_| RootDataError::Syntax(s.to_string()))?;
        let family = match head.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' | 'F' | 'G' => return Err(RootDataError::Exceptional(s.to_string())),
            _ => return Err(RootDataError::Syntax(s.to_string())),
        };
        SimpleType::new(family, rank)
    }
}

/// Coefficients of a dominant weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DominantWeight(pub Vec<u32>);

impl DominantWeight {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Pretty form such as `w1+2w3`, or `0`.
    pub fn pretty(&self) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| if c == 1 { format!("w{}", i + 1) } else { format!("{c}w{}", i + 1) })
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Root datum of a simple type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub simple_type: SimpleType,
    /// `cartan[i][j] = 2(α_i, α_j)/(α_j, α_j)`; row i is α_i in fundamental coordinates.
    pub cartan: Vec<Vec<i64>>,
    /// Simple roots in the standard orthonormal ε-basis.
    pub simple_roots_eps: Vec<Vec<Q>>,
    /// Positive roots in simple-root coordinates, sorted by height.
    pub positive_roots: Vec<Vec<i64>>,
    /// Half-sum of positive roots in fundamental coordinates (all ones).
    pub rho: Vec<i64>,
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).fold(Q::zero(), |s, t| s + t)
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.simple_type.rank
    }

    /// ε-coordinates of a root given in simple-root coordinates.
    pub fn to_eps(&self, coeffs: &[i64]) -> Vec<Q> {
        let n = self.simple_roots_eps[0].len();
        let mut v = vec![Q::zero(); n];
        for (c, a) in coeffs.iter().zip(&self.simple_roots_eps) {
            if *c != 0 {
                for (x, y) in v.iter_mut().zip(a) {
                    *x += q(*c) * y;
                }
            }
        }
        v
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> Q {
        dot(&self.to_eps(a), &self.to_eps(b))
    }

    /// Simple root α_i (0-based) in fundamental-weight coordinates.
    pub fn simple_root_fund(&self, i: usize) -> Vec<i64> {
        self.cartan[i].clone()
    }

    /// A weight in fundamental coordinates for a root in simple coordinates.
    pub fn root_to_fund(&self, coeffs: &[i64]) -> Vec<i64> {
        let l = self.rank();
        let mut out = vec![0; l];
        for (i, c) in coeffs.iter().enumerate() {
            for (j, o) in out.iter_mut().enumerate() {
                *o += c * self.cartan[i][j];
            }
        }
        out
    }

    pub fn height(coeffs: &[i64]) -> i64 {
        coeffs.iter().sum()
    }

    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        self.positive_roots.iter().any(|r| r == coeffs)
    }
}

fn simple_roots_eps(t: SimpleType) -> Vec<Vec<Q>> {
    let l = t.rank;
    let unit = |i: usize| {
        let mut v = vec![Q::zero(); if t.family == Family::A { l + 1 } else { l }];
        v[i] = Q::one();
        v
    };
    let diff = |i: usize, j: usize| {
        let mut v = unit(i);
        v[j] -= Q::one();
        v
    };
    let mut roots: Vec<Vec<Q>> = (0..l.saturating_sub(1)).map(|i| diff(i, i + 1)).collect();
    match t.family {
        Family::A => roots.push(diff(l - 1, l)),
        Family::B => roots.push(unit(l - 1)),
        Family::C => roots.push(unit(l - 1).into_iter().map(|x| x * q(2)).collect()),
        Family::D => {
            let mut v = unit(l - 2);
            v[l - 1] = Q::one();
            roots.push(v);
        }
    }
    roots
}

/// The standard root system of `t`.
pub fn root_system(t: SimpleType) -> Result<RootSystem, RootDataError> {
    SimpleType::new(t.family, t.rank)?;
    let l = t.rank;
    let eps = simple_roots_eps(t);
    let cartan: Vec<Vec<i64>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let v = q(2) * dot(&eps[i], &eps[j]) / dot(&eps[j], &eps[j]);
                    to_i64(&v).expect("integral Cartan entry")
                })
                .collect()
        })
        .collect();
    // Close the simple roots under simple reflections, keeping positive roots.
    let mut roots: Vec<Vec<i64>> = (0..l)
        .map(|i| {
            let mut c = vec![0; l];
            c[i] = 1;
            c
        })
        .collect();
    let mut k = 0;
    while k < roots.len() {
        let beta = roots[k].clone();
        for i in 0..l {
            // <β, α_i^∨> = Σ_j c_j A_{j i}
            let pairing: i64 = (0..l).map(|j| beta[j] * cartan[j][i]).sum();
            let mut image = beta.clone();
            image[i] -= pairing;
            if image.iter().all(|&c| c >= 0) && image.iter().any(|&c| c > 0) && !roots.contains(&image) {
                roots.push(image);
            }
        }
        k += 1;
    }
    roots.sort_by(|a, b| RootSystem::height(a).cmp(&RootSystem::height(b)).then_with(|| b.cmp(a)));
    Ok(RootSystem { simple_type: t, cartan, simple_roots_eps: eps, positive_roots: roots, rho: vec![1; l] })
}

/// Dimension of the irreducible module L(λ).
pub fn weyl_dim(t: SimpleType, lambda: &DominantWeight) -> Result<u64, RootDataError> {
    t.check_weight(lambda)?;
    let rs = root_system(t)?;
    let l = t.rank;
    let norms: Vec<Q> = (0..l).map(|i| dot(&rs.simple_roots_eps[i], &rs.simple_roots_eps[i])).collect();
    let mut num = Q::one();
    let mut den = Q::one();
    for beta in &rs.positive_roots {
        let nb = rs.inner(beta, beta);
        // (μ, β^∨) = Σ_i c_i |α_i|²/|β|² (μ, α_i^∨)
        let mut top = Q::zero();
        let mut bottom = Q::zero();
        for i in 0..l {
            if beta[i] == 0 {
                continue;
            }
            let w = q(beta[i]) * &norms[i] / &nb;
            top += &w * q(i64::from(lambda.0[i]) + 1);
            bottom += w;
        }
        num *= top;
        den *= bottom;
    }
    let d = num / den;
    let v = to_i64(&d).expect("Weyl dimension is integral");
    Ok(v as u64)
}

/// Highest weight of the dual module, −w₀(λ).
pub fn dual_weight(t: SimpleType, lambda: &DominantWeight) -> Result<DominantWeight, RootDataError> {
    t.check_weight(lambda)?;
    let rs = root_system(t)?;
    let mut mu: Vec<i64> = lambda.0.iter().map(|&c| -i64::from(c)).collect();
    while let Some(i) = mu.iter().position(|&c| c < 0) {
        let c = mu[i];
        for (m, a) in mu.iter_mut().zip(&rs.cartan[i]) {
            *m -= c * a;
        }
    }
    Ok(DominantWeight(mu.into_iter().map(|c| c as u32).collect()))
}

/// Dominant weights of `t` with `weyl_dim ≤ bound`, found by growing coordinates
/// from zero (weyl_dim increases in every coordinate).
pub fn dominant_weights_up_to(t: SimpleType, bound: u64) -> Vec<(DominantWeight, u64)> {
    let mut out = Vec::new();
    let mut queue = vec![t.zero_weight()];
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(t.zero_weight());
    while let Some(w) = queue.pop() {
        let d = weyl_dim(t, &w).expect("valid weight");
        if d > bound {
            continue;
        }
        out.push((w.clone(), d));
        for i in 0..t.rank {
            let mut nw = w.clone();
            nw.0[i] += 1;
            if seen.insert(nw.clone()) {
                queue.push(nw);
            }
        }
    }
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_conventions() {
        let b2 = root_system(SimpleType::b(2)).unwrap();
        assert_eq!(b2.cartan, vec![vec![2, -2], vec![-1, 2]]);
        let c2 = root_system(SimpleType::c(2)).unwrap();
        assert_eq!(c2.cartan, vec![vec![2, -1], vec![-2, 2]]);
    }

    #[test]
    fn root_counts() {
        for t in [SimpleType::a(1), SimpleType::a(2), SimpleType::d(5), SimpleType::b(3), SimpleType::c(4)] {
            assert_eq!(root_system(t).unwrap().positive_roots.len(), t.positive_root_count());
        }
    }

    #[test]
    fn parse_type() {
        assert_eq!("D5".parse::<SimpleType>().unwrap(), SimpleType::d(5));
        assert!("D2".parse::<SimpleType>().is_err());
        assert!(matches!("E6".parse::<SimpleType>(), Err(RootDataError::Exceptional(_))));
    }

    #[test]
    fn dual_of_type_a_reverses() {
        let w = DominantWeight(vec![1, 2, 0]);
        assert_eq!(dual_weight(SimpleType::a(3), &w).unwrap(), DominantWeight(vec![0, 2, 1]));
    }
}
