//! Exact computational Lie theory: prehomogeneity of modules over semisimple
//! Lie algebras, disemisimple decompositions `g = s₁ + s₂`, and brute-force
//! checks of the classification tables at small rank.

pub mod classify;
pub mod cli;
pub mod liealg;
pub mod linalg;
pub mod modexpr;
pub mod poly;
pub mod prehom;
pub mod rational;
pub mod repbuilder;
pub mod rootdata;
