//! Fox free differential calculus: the Alexander polynomial of a knot from
//! its Wirtinger presentation, used as the oracle validating PD fixtures
//! against Seifert-matrix data.

use num_traits::One;

use super::{Peripheral, Pi1Error};
use crate::ratmat::det_laurent;
use crate::{LaurentPoly, Rat};

/// Fox derivative of a word with respect to generator `gen`, abelianized
/// (every generator maps to t).
fn fox_derivative(word: &[i32], gen: i32) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    let mut prefix_exp: i64 = 0;
    for &x in word {
        if x > 0 {
            if x == gen {
                out = out.add(&LaurentPoly::monomial(prefix_exp, Rat::one()));
            }
            prefix_exp += 1;
        } else {
            prefix_exp -= 1;
            if -x == gen {
                out = out.sub(&LaurentPoly::monomial(prefix_exp, Rat::one()));
            }
        }
    }
    out
}

/// Alexander polynomial from a Wirtinger presentation: delete one column
/// and the redundant relator from the Fox matrix, take the determinant,
/// and normalize symmetric with value 1 at t = 1.
pub fn fox_alexander(peripheral: &Peripheral) -> Result<LaurentPoly, Pi1Error> {
    let pres = &peripheral.presentation;
    let n = pres.ngens();
    if pres.relators().is_empty() {
        // unknot
        return Ok(LaurentPoly::one());
    }
    debug_assert_eq!(pres.relators().len(), n);
    let mat: Vec<Vec<LaurentPoly>> = pres
        .relators()
        .iter()
        .take(n - 1)
        .map(|rel| (1..n as i32).map(|g| fox_derivative(rel, g)).collect())
        .collect();
    let det = det_laurent(&mat);
    normalize_symmetric(&det)
}

/// Divide by ±tᵏ to reach the symmetric representative with value 1 at 1.
fn normalize_symmetric(p: &LaurentPoly) -> Result<LaurentPoly, Pi1Error> {
    let (Some(lo), Some(hi)) = (p.min_exp(), p.max_exp()) else {
        return Err(Pi1Error::FoxNormalization);
    };
    if (lo + hi) % 2 != 0 {
        return Err(Pi1Error::FoxNormalization);
    }
    let centered = p.shift(-(lo + hi) / 2);
    if !centered.is_symmetric() {
        return Err(Pi1Error::FoxNormalization);
    }
    let at_one = centered.evaluate(&Rat::one()).unwrap();
    if at_one.is_one() {
        Ok(centered)
    } else if (-at_one.clone()).is_one() {
        Ok(centered.neg())
    } else {
        Err(Pi1Error::FoxNormalization)
    }
}
