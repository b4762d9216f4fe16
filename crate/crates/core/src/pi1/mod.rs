//! Fundamental groups of surgered manifolds from planar diagrams.
//!
//! The pipeline here runs: PD code → Wirtinger presentation with peripheral
//! words → surgery presentation (slope 0 adjoins the longitude) → Tietze
//! simplification → low-index subgroup enumeration, whose class counts at
//! index n equal the number of connected degree-n covers.  A Fox-calculus
//! Alexander polynomial serves as the correctness oracle tying PD fixtures
//! to their Seifert-matrix counterparts.

mod cover;
mod fox;
mod pd;
mod tietze;
mod wirtinger;

pub use cover::{low_index, low_index_tables, CosetTable, LowIndexOptions};
pub use fox::fox_alexander;
pub use pd::{parse_pd, PdCode};
pub use tietze::tietze_simplify;
pub use wirtinger::{surgery_presentation, wirtinger, Peripheral};

use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Pi1Error {
    #[error("PD parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("crossing {index} has arity {got}, expected 4")]
    Arity { index: usize, got: usize },
    #[error("arc label {label} out of range 1..={max}")]
    LabelRange { label: i64, max: usize },
    #[error("arc label {label} appears {got} times, expected exactly 2")]
    LabelCount { label: usize, got: usize },
    #[error("diagram is not a walk-numbered knot diagram (multi-component or bad numbering): {msg}")]
    MultiComponent { msg: String },
    #[error("generator index {index} out of range for {ngens} generators")]
    GeneratorRange { index: i32, ngens: usize },
    #[error("node budget {budget} exceeded; partial class counts {partial:?}")]
    BudgetExceeded { budget: u64, partial: BTreeMap<usize, u64> },
    #[error("Fox determinant is not a unit multiple of a symmetric polynomial")]
    FoxNormalization,
}

/// Finite presentation: relators are words in signed 1-based generator
/// indices (+i for the generator, −i for its inverse).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    ngens: usize,
    relators: Vec<Vec<i32>>,
}

impl GroupPresentation {
    pub fn new(ngens: usize, relators: Vec<Vec<i32>>) -> Result<Self, Pi1Error> {
        for rel in &relators {
            for &x in rel {
                if x == 0 || x.unsigned_abs() as usize > ngens {
                    return Err(Pi1Error::GeneratorRange { index: x, ngens });
                }
            }
        }
        Ok(GroupPresentation { ngens, relators })
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn relators(&self) -> &[Vec<i32>] {
        &self.relators
    }

    /// Exponent-sum matrix of the relators (abelianization presentation).
    pub fn abelianization_matrix(&self) -> Vec<Vec<crate::Int>> {
        self.relators
            .iter()
            .map(|rel| {
                let mut row = vec![crate::Int::from(0); self.ngens];
                for &x in rel {
                    let i = x.unsigned_abs() as usize - 1;
                    row[i] += if x > 0 { 1 } else { -1 };
                }
                row
            })
            .collect()
    }

    /// Invariant factors and free rank of the abelianization.
    pub fn abelianization(&self) -> (Vec<crate::Int>, usize) {
        use num_traits::One;
        let m = self.abelianization_matrix();
        let factors = crate::ratmat::smith_invariant_factors(&m);
        let free_rank = self.ngens - factors.len();
        let torsion: Vec<crate::Int> =
            factors.into_iter().filter(|f| !f.is_one()).collect();
        (torsion, free_rank)
    }

    /// Whether the abelianization is infinite cyclic.
    pub fn abelianization_is_z(&self) -> bool {
        let (torsion, rank) = self.abelianization();
        torsion.is_empty() && rank == 1
    }
}

pub(crate) fn free_reduce(word: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(word.len());
    for &x in word {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

pub(crate) fn cyclic_reduce(word: &[i32]) -> Vec<i32> {
    let mut w = free_reduce(word);
    while w.len() >= 2 && w[0] == -w[w.len() - 1] {
        w.pop();
        w.remove(0);
    }
    w
}
