//! Heegaard Floer dimension and correction-term bookkeeping for 0-surgery
//! on genus-1 knots, as symbolic functions of dim HFK̂(K,1) and V₀.
//!
//! V₀ values for specific knots are never tabulated here; every deduction
//! downstream holds for all V₀, which is what makes the dimension-equality
//! argument sound without invented ground truth.

use crate::{rat, rat_int, Rat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FloerError {
    #[error("dim HFK̂(K,1) must be ≥ 1 for a genus-1 knot, got {got}")]
    TopDimension { got: u32 },
    #[error("χ(HFK̂(K,1)) must be nonzero and match dim HFK̂(K,1) mod 2: dim {dim}, χ {chi}")]
    EulerParity { dim: u32, chi: i64 },
    #[error("dim HFK̂(K,1) = {dim} < V₀ = {v0}: reduced rank would be negative")]
    Inconsistent { dim: u32, v0: u32 },
}

/// Inputs to the dimension and correction-term formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HFInputs {
    dim_hfk_top: u32,
    v0: u32,
    v0_mirror: u32,
    delta_t_coeff: i64,
}

impl HFInputs {
    pub fn new(
        dim_hfk_top: u32,
        v0: u32,
        v0_mirror: u32,
        delta_t_coeff: i64,
    ) -> Result<Self, FloerError> {
        if dim_hfk_top < 1 {
            return Err(FloerError::TopDimension { got: dim_hfk_top });
        }
        if delta_t_coeff == 0 || (dim_hfk_top as i64 - delta_t_coeff) % 2 != 0 {
            return Err(FloerError::EulerParity { dim: dim_hfk_top, chi: delta_t_coeff });
        }
        Ok(HFInputs { dim_hfk_top, v0, v0_mirror, delta_t_coeff })
    }

    pub fn dim_hfk_top(&self) -> u32 {
        self.dim_hfk_top
    }

    pub fn delta_t_coeff(&self) -> i64 {
        self.delta_t_coeff
    }
}

/// Correction terms d(S³₁), d₁/₂(S³₀) and d₋₁/₂(S³₀).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrectionTerms {
    pub d1: Rat,
    pub d_half: Rat,
    pub d_minus_half: Rat,
}

/// d(S³₁(K)) = −2V₀(K), d₁/₂ = 1/2 − 2V₀(K), d₋₁/₂ = −1/2 + 2V₀(K̄).
pub fn correction_terms(inp: &HFInputs) -> CorrectionTerms {
    let v0 = rat_int(inp.v0 as i64);
    let v0m = rat_int(inp.v0_mirror as i64);
    CorrectionTerms {
        d1: rat_int(-2) * v0.clone(),
        d_half: rat(1, 2) - rat_int(2) * v0,
        d_minus_half: rat(-1, 2) + rat_int(2) * v0m,
    }
}

/// dim HF̂(S³₁) = 2(dim HFK̂(K,1) − V₀) + 1, and the two possible values
/// of dim HF̂(S³₀), which differ from it by ±1.
pub fn hfhat_dims(inp: &HFInputs) -> Result<(u32, [u32; 2]), FloerError> {
    if inp.dim_hfk_top < inp.v0 {
        return Err(FloerError::Inconsistent { dim: inp.dim_hfk_top, v0: inp.v0 });
    }
    let dim_s1 = 2 * (inp.dim_hfk_top - inp.v0) + 1;
    Ok((dim_s1, [dim_s1 - 1, dim_s1 + 1]))
}

/// Outcome of the dimension-equality deduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqualityVerdict {
    /// Equal Euler characteristics force dim HFK̂(K,1) = dim HFK̂(J,1):
    /// the difference is even and 2·(difference) lies in {−2, 0, 2},
    /// hence is a multiple of 4 in that set, hence zero.
    ForcedEqual,
    /// 2·(dimK − dimJ) falls outside {−2, 0, 2}, contradicting the
    /// hypothesis that the 0-surgeries agree with equal Δ and V₀.
    Contradiction,
    /// The parity filter does not apply; nothing is forced.
    NotForced,
}

/// The deduction of dimension equality from equal 0-surgeries.
///
/// Assumes the caller has asserted S³₀(K) ≅ S³₀(J) with equal Alexander
/// polynomials and equal V₀, so that 2(dimK − dimJ) ∈ {−2, 0, 2} must hold.
pub fn prop21_force_equality(dim_k: u32, dim_j: u32, same_euler_char: bool) -> EqualityVerdict {
    let doubled = 2 * (dim_k as i64 - dim_j as i64);
    if !matches!(doubled, -2 | 0 | 2) {
        return EqualityVerdict::Contradiction;
    }
    if same_euler_char && dim_k % 2 == dim_j % 2 {
        debug_assert_eq!(dim_k, dim_j);
        EqualityVerdict::ForcedEqual
    } else {
        EqualityVerdict::NotForced
    }
}
