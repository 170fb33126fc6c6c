//! Classification tables of prehomogeneous modules as queryable data.

use serde::{Deserialize, Serialize};

use super::ClassifyError;
use crate::liealg::SemisimpleSpec;
use crate::repbuilder::{IrrLabel, ModuleDescriptor};
use crate::rootdata::{dual_weight, weyl_dim, DominantWeight, Family, SimpleType};

/// One row of the tables of prehomogeneous modules for simple algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VinbergRow {
    /// `A_ℓ, ℓ ≥ 1`: `L(ω1), L(ωℓ)`.
    Natural,
    /// `A_2ℓ, ℓ ≥ 2`: `L(ω2), L(ω_{2ℓ−1})`.
    SecondWedge,
    /// `C_ℓ, ℓ ≥ 2`: `L(ω1)`.
    Symplectic,
    /// `D5`: the half-spin modules.
    HalfSpin,
    /// `A_ℓ, ℓ ≥ 2`: `mL(ω1), mL(ωℓ)` for `2 ≤ m ≤ ℓ`.
    NaturalMultiple,
    /// `A_2ℓ, ℓ ≥ 2`: `L(ω1) ⊕ L(ω_{2ℓ−1})`, `L(ω2) ⊕ L(ω_2ℓ)`.
    MixedWedge,
    /// `A_2ℓ, ℓ ≥ 2`: `2L(ω2)`, `2L(ω_{2ℓ−1})`.
    DoubleWedge,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VinbergEntry {
    pub row: VinbergRow,
    pub family: Family,
    pub rank_condition: &'static str,
    pub module: &'static str,
    pub dim_formula: &'static str,
    pub irreducible: bool,
}

impl VinbergEntry {
    pub fn applies(&self, t: SimpleType) -> bool {
        let l = t.rank;
        t.family == self.family
            && match self.row {
                VinbergRow::Natural => true,
                VinbergRow::Symplectic => l >= 2,
                VinbergRow::HalfSpin => l == 5,
                VinbergRow::NaturalMultiple => l >= 2,
                VinbergRow::SecondWedge | VinbergRow::MixedWedge | VinbergRow::DoubleWedge => {
                    l >= 4 && l.is_multiple_of(2)
                }
            }
    }

    /// The closed-form dimension of each instantiated module.
    pub fn dim_at(&self, t: SimpleType, m: u64) -> u64 {
        let l = t.rank as u64;
        let h = l / 2;
        match self.row {
            VinbergRow::Natural => l + 1,
            VinbergRow::SecondWedge => h * (2 * h + 1),
            VinbergRow::Symplectic => 2 * l,
            VinbergRow::HalfSpin => 16,
            VinbergRow::NaturalMultiple => m * (l + 1),
            VinbergRow::MixedWedge => (h + 1) * (2 * h + 1),
            VinbergRow::DoubleWedge => 2 * h * (2 * h + 1),
        }
    }

    /// Modules of this row at `t`, each with its multiplicity parameter.
    pub fn instantiate(&self, t: SimpleType) -> Vec<(ModuleDescriptor, u64)> {
        if !self.applies(t) {
            return Vec::new();
        }
        let l = t.rank;
        let w = |i: usize| t.omega(i);
        let one = |x: DominantWeight| ModuleDescriptor::simple(&[(x, 1)]);
        let pair = |x: DominantWeight, y: DominantWeight| ModuleDescriptor::simple(&[(x, 1), (y, 1)]);
        let mut out: Vec<(ModuleDescriptor, u64)> = match self.row {
            VinbergRow::Natural => vec![(one(w(1)), 1), (one(w(l)), 1)],
            VinbergRow::SecondWedge => vec![(one(w(2)), 1), (one(w(l - 1)), 1)],
            VinbergRow::Symplectic => vec![(one(w(1)), 1)],
            VinbergRow::HalfSpin => vec![(one(w(4)), 1), (one(w(5)), 1)],
            VinbergRow::NaturalMultiple => (2..=l as u32)
                .flat_map(|m| {
                    [
                        (ModuleDescriptor::simple(&[(w(1), m)]), u64::from(m)),
                        (ModuleDescriptor::simple(&[(w(l), m)]), u64::from(m)),
                    ]
                })
                .collect(),
            VinbergRow::MixedWedge => vec![(pair(w(1), w(l - 1)), 1), (pair(w(2), w(l)), 1)],
            VinbergRow::DoubleWedge => {
                vec![(ModuleDescriptor::simple(&[(w(2), 2)]), 1), (ModuleDescriptor::simple(&[(w(l - 1), 2)]), 1)]
            }
        };
        out.dedup();
        out
    }
}

/// The rows of both tables (irreducible and reducible modules).
pub fn vinberg_entries() -> Vec<VinbergEntry> {
    let e = |row, family, rank_condition, module, dim_formula, irreducible| VinbergEntry {
        row,
        family,
        rank_condition,
        module,
        dim_formula,
        irreducible,
    };
    vec![
        e(VinbergRow::Natural, Family::A, "l >= 1", "L(w1), L(wl)", "l+1", true),
        e(VinbergRow::SecondWedge, Family::A, "rank 2l, l >= 2", "L(w2), L(w(2l-1))", "l(2l+1)", true),
        e(VinbergRow::Symplectic, Family::C, "l >= 2", "L(w1)", "2l", true),
        e(VinbergRow::HalfSpin, Family::D, "l = 5", "L(w4), L(w5)", "16", true),
        e(VinbergRow::NaturalMultiple, Family::A, "l >= 2", "mL(w1), mL(wl), 2 <= m <= l", "m(l+1)", false),
        e(VinbergRow::MixedWedge, Family::A, "rank 2l, l >= 2", "L(w1)+L(w(2l-1)), L(w2)+L(w2l)", "(l+1)(2l+1)", false),
        e(VinbergRow::DoubleWedge, Family::A, "rank 2l, l >= 2", "2L(w2), 2L(w(2l-1))", "2l(2l+1)", false),
    ]
}

fn sorted(mut v: Vec<ModuleDescriptor>) -> Vec<ModuleDescriptor> {
    v.sort();
    v.dedup();
    v
}

/// Every nonzero prehomogeneous module of the simple type `t`.
///
/// Low-rank coincidences are resolved through the isomorphisms
/// `B2 ≅ C2` and `D3 ≅ A3`; `B_ℓ (ℓ ≥ 3)`, `D4` and `D_ℓ (ℓ ≥ 6)` have none.
pub fn vinberg_table(t: SimpleType) -> Vec<ModuleDescriptor> {
    match (t.family, t.rank) {
        // The spin module of B2 is the natural module of C2.
        (Family::B, 2) => sorted(vec![ModuleDescriptor::simple(&[(t.omega(2), 1)])]),
        (Family::B, _) => Vec::new(),
        // Under D3 ≅ A3 the half-spin modules are the natural module and its dual.
        (Family::D, 3) => {
            let a3 = vinberg_table(SimpleType::a(3));
            let to_d3 = |w: &DominantWeight| DominantWeight(vec![w.0[1], w.0[0], w.0[2]]);
            sorted(a3.iter().map(|d| d.map_labels(|l| IrrLabel(vec![to_d3(&l.0[0])]))).collect())
        }
        _ => {
            let mut out = Vec::new();
            for e in vinberg_entries() {
                out.extend(e.instantiate(t).into_iter().map(|(d, _)| d));
            }
            sorted(out)
        }
    }
}

/// One castling-reduced prehomogeneous triple with concrete parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SKTriple {
    pub algebra: SemisimpleSpec,
    pub module: ModuleDescriptor,
    pub dim: u64,
    pub conditions: String,
}

impl SKTriple {
    /// The single irreducible label of the module.
    pub fn label(&self) -> Option<&IrrLabel> {
        match self.module.terms() {
            [(l, 1)] => Some(l),
            _ => None,
        }
    }
}

/// Which row of the reduced table a pattern is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SKRowKind {
    /// `s₁ ⊕ A_m` on `L(λ) ⊗ L(ω1)`, `s₁` not of type A, `dim L(λ) = n + 1`.
    General,
    /// `A_n ⊕ A_m` on `L(ω1) ⊗ L(ω1)`.
    TwoNaturals,
    /// `A_2m` on `L(ω2)`.
    Wedge,
    /// `A1 ⊕ A_2m` on `L(ω1) ⊗ L(ω2)`.
    NaturalTimesWedge,
    /// `C_n ⊕ A_2m` on `L(ω1) ⊗ L(ω1)`.
    SymplecticTimesNatural,
    /// `D5` on `L(ω4)`.
    Spin,
}

/// A row of the reduced table with its parameter constraints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SKRow {
    pub kind: SKRowKind,
    pub algebra: &'static str,
    pub algebra_dim: &'static str,
    pub module: &'static str,
    pub dim_formula: &'static str,
    /// Parameter conditions exactly as tabulated. For the general row the
    /// accompanying text allows `dim L(λ) = n + 1` for `n ≥ 2`, which is
    /// weaker than the tabulated `m > n > 2`; both are kept here.
    pub conditions: &'static str,
}

pub fn sk_reduced_table() -> Vec<SKRow> {
    let row = |kind, algebra, algebra_dim, module, dim_formula, conditions| SKRow {
        kind,
        algebra,
        algebra_dim,
        module,
        dim_formula,
        conditions,
    };
    vec![
        row(
            SKRowKind::General,
            "s1 + A_m",
            "s + m(m+2)",
            "L(lambda) * L(w1)",
            "(n+1)(m+1)",
            "m > n > 2; s1 semisimple not of type A_n, L(lambda) simple of dimension n+1 for n >= 2",
        ),
        row(SKRowKind::TwoNaturals, "A_n + A_m", "n(n+2) + m(m+2)", "L(w1) * L(w1)", "(n+1)(m+1)", "m >= 2n+1 >= 1"),
        row(SKRowKind::Wedge, "A_2m", "4m(m+1)", "L(w2)", "m(2m+1)", "m >= 1"),
        row(SKRowKind::NaturalTimesWedge, "A_1 + A_2m", "4m(m+1) + 3", "L(w1) * L(w2)", "2m(2m+1)", "m >= 1"),
        row(
            SKRowKind::SymplecticTimesNatural,
            "C_n + A_2m",
            "n(2n+1) + 4m(m+1)",
            "L(w1) * L(w1)",
            "(2n)(2m+1)",
            "n >= m+1 >= 1",
        ),
        row(SKRowKind::Spin, "D_5", "45", "L(w4)", "16", "-"),
    ]
}

fn label_of(parts: Vec<DominantWeight>) -> ModuleDescriptor {
    ModuleDescriptor::irreducible(IrrLabel(parts))
}

impl SKRow {
    /// Instantiates a parametric row; `None` when the conditions fail or the
    /// parameters do not apply to this row. The general row needs `s₁` and
    /// `λ` through [`SKRow::instantiate_general`].
    pub fn instantiate(&self, n: usize, m: usize) -> Option<SKTriple> {
        let cond = self.conditions.to_string();
        let triple = |factors: Vec<(SimpleType, DominantWeight)>, dim: u64| {
            let (ts, ws): (Vec<_>, Vec<_>) = factors.into_iter().unzip();
            SKTriple { algebra: SemisimpleSpec::new(ts), module: label_of(ws), dim, conditions: cond.clone() }
        };
        let (n64, m64) = (n as u64, m as u64);
        match self.kind {
            SKRowKind::General => None,
            SKRowKind::TwoNaturals => {
                if !(n >= 1 && m > 2 * n) {
                    return None;
                }
                let (a, b) = (SimpleType::a(n), SimpleType::a(m));
                Some(triple(vec![(a, a.omega(1)), (b, b.omega(1))], (n64 + 1) * (m64 + 1)))
            }
            SKRowKind::Wedge => {
                if m < 1 {
                    return None;
                }
                let a = SimpleType::a(2 * m);
                Some(triple(vec![(a, a.omega(2))], m64 * (2 * m64 + 1)))
            }
            SKRowKind::NaturalTimesWedge => {
                if m < 1 {
                    return None;
                }
                let (a1, a) = (SimpleType::a(1), SimpleType::a(2 * m));
                Some(triple(vec![(a1, a1.omega(1)), (a, a.omega(2))], 2 * m64 * (2 * m64 + 1)))
            }
            SKRowKind::SymplecticTimesNatural => {
                if !(n >= 2 && n > m) {
                    return None;
                }
                let c = SimpleType::c(n);
                let mut f = vec![(c, c.omega(1))];
                if m >= 1 {
                    let a = SimpleType::a(2 * m);
                    f.push((a, a.omega(1)));
                }
                Some(triple(f, 2 * n64 * (2 * m64 + 1)))
            }
            SKRowKind::Spin => {
                let d = SimpleType::d(5);
                Some(triple(vec![(d, d.omega(4))], 16))
            }
        }
    }

    /// The general row for a given `s₁`, simple `s₁`-module `L(λ)` and `m`,
    /// checked against the tabulated `m > n > 2`.
    pub fn instantiate_general(
        &self,
        s1: &SemisimpleSpec,
        lambda: &IrrLabel,
        m: usize,
    ) -> Result<Option<SKTriple>, ClassifyError> {
        if self.kind != SKRowKind::General {
            return Ok(None);
        }
        if s1.factors.iter().any(|t| t.family == Family::A) {
            return Ok(None);
        }
        let n = lambda.dim(s1)? as usize - 1;
        if !(m > n && n > 2) {
            return Ok(None);
        }
        let a = SimpleType::a(m);
        let mut parts = lambda.0.clone();
        parts.push(a.omega(1));
        Ok(Some(SKTriple {
            algebra: s1.concat(&SemisimpleSpec::simple(a)),
            module: label_of(parts),
            dim: (n as u64 + 1) * (m as u64 + 1),
            conditions: self.conditions.to_string(),
        }))
    }
}

/// Castling transform on the first type-A factor `A_{n−1}` carrying `ω1`
/// whose complement `σ` has `dim σ = m > n`:
/// `(s̃ ⊕ A_{n−1}, σ ⊠ L(ω1), m·n) ↦ (s̃ ⊕ A_{m−n−1}, σ* ⊠ L(ω1), m·(m−n))`,
/// dropping the factor when `m − n = 1`.
pub fn castling_transform(t: &SKTriple) -> Result<SKTriple, ClassifyError> {
    let not_shape = || ClassifyError::NotCastlingShape(format!("{} on {}", t.algebra, t.module));
    let label = t.label().ok_or_else(not_shape)?;
    let spec = &t.algebra;
    for (k, (ty, w)) in spec.factors.iter().zip(&label.0).enumerate() {
        if ty.family != Family::A || *w != ty.omega(1) {
            continue;
        }
        let n = ty.rank as u64 + 1;
        let mut m = 1;
        for (j, (tj, wj)) in spec.factors.iter().zip(&label.0).enumerate() {
            if j != k {
                m *= weyl_dim(*tj, wj)?;
            }
        }
        if m <= n {
            continue;
        }
        let mut factors = Vec::new();
        let mut parts = Vec::new();
        for (j, (tj, wj)) in spec.factors.iter().zip(&label.0).enumerate() {
            if j == k {
                if m - n >= 2 {
                    let new = SimpleType::a((m - n - 1) as usize);
                    factors.push(new);
                    parts.push(new.omega(1));
                }
            } else {
                factors.push(*tj);
                parts.push(dual_weight(*tj, wj)?);
            }
        }
        return Ok(SKTriple {
            algebra: SemisimpleSpec::new(factors),
            module: label_of(parts),
            dim: m * (m - n),
            conditions: t.conditions.clone(),
        });
    }
    Err(not_shape())
}
