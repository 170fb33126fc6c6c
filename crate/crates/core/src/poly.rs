//! Sparse multivariate polynomials over `Q` with lex-ordered exact division.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::rational::Q;

/// Exponent vector; lexicographic comparison is the monomial order.
pub type Exponents = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponents, Q>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The linear form `Σ c_i x_i`.
    pub fn linear(nvars: usize, coeffs: impl IntoIterator<Item = (usize, Q)>) -> Self {
        let mut p = Self::zero(nvars);
        for (i, c) in coeffs {
            let mut e = vec![0; nvars];
            e[i] = 1;
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Q)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    fn add_term(&mut self, e: Exponents, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    fn leading(&self) -> Option<(&Exponents, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    fn mul_term(&self, e: &[u32], c: &Q) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            out.terms.insert(e1.iter().zip(e).map(|(a, b)| a + b).collect(), c1 * c);
        }
        out
    }

    /// `self / d` when the division is exact, `None` otherwise.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (de, dc) = d.leading()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        while let Some((re, rc)) = rem.leading() {
            if re.iter().zip(de).any(|(a, b)| a < b) {
                return None;
            }
            let e: Exponents = re.iter().zip(de).map(|(a, b)| a - b).collect();
            let c = rc / dc;
            rem = rem.sub(&d.mul_term(&e, &c));
            quot.add_term(e, c);
        }
        Some(quot)
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        let mut total = Q::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            total += t;
        }
        total
    }
}

/// Rank of a polynomial matrix over the field of rational functions, by
/// fraction-free elimination with full pivoting. Returns the rank and the
/// last pivot, which is a nonzero maximal minor; `None` if some entry grows
/// past `term_budget` terms.
pub fn bareiss_rank(mut m: Vec<Vec<Poly>>, nvars: usize, term_budget: usize) -> Option<(usize, Poly)> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = Poly::constant(nvars, Q::from_integer(1.into()));
    let mut last = prev.clone();
    let mut rank = 0;
    for k in 0..rows.min(cols) {
        // Smallest nonzero entry as pivot keeps growth down.
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(k) {
            for (j, p) in row.iter().enumerate().skip(k) {
                if !p.is_zero() && best.is_none_or(|(_, _, t)| p.term_count() < t) {
                    best = Some((i, j, p.term_count()));
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        m.swap(k, pi);
        for row in m.iter_mut() {
            row.swap(k, pj);
        }
        let pivot = m[k][k].clone();
        for i in k + 1..rows {
            for j in k + 1..cols {
                let num = pivot.mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                let v = num.div_exact(&prev).expect("Bareiss division is exact");
                if v.term_count() > term_budget {
                    return None;
                }
                m[i][j] = v;
            }
            m[i][k] = Poly::zero(nvars);
        }
        prev = pivot.clone();
        last = pivot;
        rank += 1;
    }
    Some((rank, last))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn x(n: usize, i: usize) -> Poly {
        Poly::linear(n, [(i, q(1))])
    }

    #[test]
    fn exact_division() {
        let a = x(2, 0).add(&x(2, 1));
        let b = x(2, 0).sub(&x(2, 1));
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&x(2, 0)), None);
        assert_eq!(p.eval(&[q(3), q(1)]), q(8));
    }

    #[test]
    fn symbolic_rank_of_generic_and_singular() {
        // [[x, y], [y, x]] has rank 2; [[x, y], [2x, 2y]] has rank 1.
        let n = 2;
        let m = vec![vec![x(n, 0), x(n, 1)], vec![x(n, 1), x(n, 0)]];
        let (r, det) = bareiss_rank(m, n, 1000).unwrap();
        assert_eq!(r, 2);
        assert_eq!(det.degree(), 2);
        let two = Poly::constant(n, q(2));
        let m = vec![vec![x(n, 0), x(n, 1)], vec![two.mul(&x(n, 0)), two.mul(&x(n, 1))]];
        assert_eq!(bareiss_rank(m, n, 1000).unwrap().0, 1);
    }
}
