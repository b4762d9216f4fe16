//! The 2-loop specialization Θ̂_K(t) for pretzel knots, the loop-expansion
//! coefficient P₁(t), the finite-type invariant v₃ = ½Θ̂_K(1), and the
//! perturbative invariant λ₁ of the 0-surgery evaluated at c = 0.
//!
//! λ₁ is computed two independent ways and the two must agree exactly:
//!
//! * the residue route,  λ₁ = −½·Res_{t=0} (1−t⁻¹)²P₁(t)/Δ(t)³;
//! * the shortcut for degree-1 Δ = b₀ − b₁(t−2+t⁻¹): write
//!   P₁ = fΔ³ + a₂Δ² + a₁Δ + a₀ and then λ₁ = −d/2 + a₂/(2b₁), where d is
//!   the constant term of (t−2+t⁻¹)f(t).
//!
//! The sign of P₁ follows the convention adopted throughout this crate;
//! flipping it would flip every λ₁ by an overall sign, which reports note.

use num_traits::One;

use crate::laurent::{base_delta_expand, residue_at_zero, s_poly, LaurentError};
use crate::{rat, rat_int, LaurentPoly, Rat, SPoly};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LoopExpError {
    #[error("pretzel parameters must all be odd, got ({p}, {q}, {r})")]
    Parity { p: i64, q: i64, r: i64 },
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// Odd pretzel parameters together with d = (pq + qr + rp + 1)/4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PretzelParams {
    p: i64,
    q: i64,
    r: i64,
    d: i64,
}

impl PretzelParams {
    pub fn new(p: i64, q: i64, r: i64) -> Result<Self, LoopExpError> {
        if p % 2 == 0 || q % 2 == 0 || r % 2 == 0 {
            return Err(LoopExpError::Parity { p, q, r });
        }
        let m = p * q + q * r + r * p;
        // pq + qr + rp ≡ 3 (mod 4) holds automatically for odd parameters
        assert_eq!(m.rem_euclid(4), 3, "odd parameters force pq+qr+rp ≡ 3 mod 4");
        Ok(PretzelParams { p, q, r, d: (m + 1) / 4 })
    }

    pub fn params(&self) -> (i64, i64, i64) {
        (self.p, self.q, self.r)
    }

    pub fn d(&self) -> Rat {
        rat_int(self.d)
    }
}

/// Reduced 2-loop polynomial of P(p, q, r):
/// (1/16)((p+q+r)(4d+1) + pqr)·(−2 − ((2d+1)/3)(t − 2 + t⁻¹)).
pub fn pretzel_theta_hat(params: &PretzelParams) -> LaurentPoly {
    let (p, q, r) = (params.p, params.q, params.r);
    let d = params.d;
    let front = rat((p + q + r) * (4 * d + 1) + p * q * r, 16);
    let s: LaurentPoly = s_poly();
    let inner = LaurentPoly::constant(rat_int(-2)).sub(&s.scale(&rat(2 * d + 1, 3)));
    inner.scale(&front)
}

/// P₁(t) = −(t − 2 + t⁻¹)·Θ̂(t); the half-integer powers of
/// (t^{1/2} − t^{−1/2})² collapse into integer powers.
pub fn p1_from_theta(theta_hat: &LaurentPoly) -> LaurentPoly {
    s_poly::<Rat>().neg().mul(theta_hat)
}

/// The zero-loop coefficient is 1 for every knot; tabulated for completeness.
pub fn p0() -> LaurentPoly {
    LaurentPoly::one()
}

/// v₃ = ½·Θ̂(1).
pub fn v3_from_theta(theta_hat: &LaurentPoly) -> Rat {
    theta_hat.evaluate(&Rat::one()).unwrap() * rat(1, 2)
}

/// λ₁(S³₀(K); 0) by the degree-1 shortcut.
pub fn lambda1_shortcut(delta: &LaurentPoly, p1: &LaurentPoly) -> Result<Rat, LoopExpError> {
    let sb = SPoly::from_symmetric(delta)?;
    if sb.degree() != Some(1) {
        return Err(LoopExpError::Laurent(LaurentError::Degree {
            expected: 1,
            got: sb.degree().map_or(0, |d| d),
        }));
    }
    let b1 = -sb.coeff(1);
    let expansion = base_delta_expand(p1, delta)?;
    let d = s_poly::<Rat>().mul(&expansion.f).coeff(0);
    Ok(-d / rat_int(2) + expansion.a2 / (rat_int(2) * b1))
}

/// λ₁(S³₀(K); 0) by the residue route, −½·Res_{t=0} (1−t⁻¹)²P₁/Δ³.
pub fn lambda1_residue(delta: &LaurentPoly, p1: &LaurentPoly) -> Result<Rat, LoopExpError> {
    let weight = LaurentPoly::from_int_terms(&[(0, 1), (-1, -1)]).pow(2);
    let num = weight.mul(p1);
    let den = delta.pow(3);
    let res = residue_at_zero(&num, &den)?;
    Ok(res * rat(-1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(terms)
    }

    fn pretzel_delta() -> LaurentPoly {
        lp(&[(1, -2), (0, 5), (-1, -2)])
    }

    #[test]
    fn theta_hat_of_the_pretzel_family() {
        for n in -5i64..=5 {
            let params = PretzelParams::new(-3, 3, 2 * n + 1).unwrap();
            assert_eq!(params.d(), rat_int(-2));
            let theta = pretzel_theta_hat(&params);
            let expect = lp(&[(1, 1), (0, -4), (-1, 1)]).scale(&rat_int(-(2 * n + 1)));
            assert_eq!(theta, expect);
        }
    }

    #[test]
    fn theta_hat_of_the_trefoil_pretzel() {
        let params = PretzelParams::new(1, 1, 1).unwrap();
        assert_eq!(params.d(), rat_int(1));
        assert_eq!(pretzel_theta_hat(&params), lp(&[(1, -1), (-1, -1)]));
    }

    #[test]
    fn theta_hat_is_permutation_invariant() {
        let perms = [(-3, 3, 7), (-3, 7, 3), (3, -3, 7), (3, 7, -3), (7, -3, 3), (7, 3, -3)];
        let base = pretzel_theta_hat(&PretzelParams::new(-3, 3, 7).unwrap());
        for (p, q, r) in perms {
            assert_eq!(pretzel_theta_hat(&PretzelParams::new(p, q, r).unwrap()), base);
        }
    }

    #[test]
    fn parity_is_rejected() {
        assert!(matches!(PretzelParams::new(-3, 3, 4), Err(LoopExpError::Parity { .. })));
    }

    #[test]
    fn p1_examples() {
        for n in -3i64..=3 {
            let theta = lp(&[(1, 1), (0, -4), (-1, 1)]).scale(&rat_int(-(2 * n + 1)));
            let p1 = p1_from_theta(&theta);
            let expect =
                lp(&[(2, 1), (1, -6), (0, 10), (-1, -6), (-2, 1)]).scale(&rat_int(2 * n + 1));
            assert_eq!(p1, expect);
        }
        assert!(p1_from_theta(&LaurentPoly::zero()).is_zero());
        // symmetric in, symmetric out
        let theta = lp(&[(2, 3), (0, -1), (-2, 3)]);
        assert!(p1_from_theta(&theta).is_symmetric());
    }

    #[test]
    fn v3_examples() {
        for n in -5i64..=5 {
            let theta = pretzel_theta_hat(&PretzelParams::new(-3, 3, 2 * n + 1).unwrap());
            assert_eq!(v3_from_theta(&theta), rat_int(2 * n + 1));
        }
        assert_eq!(v3_from_theta(&LaurentPoly::zero()), Rat::zero());
        let trefoil = pretzel_theta_hat(&PretzelParams::new(1, 1, 1).unwrap());
        assert_eq!(v3_from_theta(&trefoil), rat_int(-1));
    }

    #[test]
    fn lambda1_of_the_pretzel_family() {
        let delta = pretzel_delta();
        for n in -5i64..=5 {
            let theta = pretzel_theta_hat(&PretzelParams::new(-3, 3, 2 * n + 1).unwrap());
            let p1 = p1_from_theta(&theta);
            let expect = rat(2 * n + 1, 16);
            assert_eq!(lambda1_shortcut(&delta, &p1).unwrap(), expect);
            assert_eq!(lambda1_residue(&delta, &p1).unwrap(), expect);
        }
    }

    #[test]
    fn lambda1_trivial_cases() {
        let delta = pretzel_delta();
        assert_eq!(lambda1_shortcut(&delta, &LaurentPoly::zero()).unwrap(), Rat::zero());
        assert_eq!(lambda1_residue(&delta, &LaurentPoly::zero()).unwrap(), Rat::zero());
        // P₁ = Δ² gives a₂ = 1, f = 0, so λ₁ = 1/(2b₁) with b₁ = 2
        let sq = delta.mul(&delta);
        assert_eq!(lambda1_shortcut(&delta, &sq).unwrap(), rat(1, 4));
        assert_eq!(lambda1_residue(&delta, &sq).unwrap(), rat(1, 4));
    }

    #[test]
    fn lambda1_requires_degree_one() {
        let quadratic = s_poly::<Rat>().pow(2);
        assert!(matches!(
            lambda1_shortcut(&quadratic, &LaurentPoly::one()),
            Err(LoopExpError::Laurent(LaurentError::Degree { expected: 1, got: 2 }))
        ));
    }

    #[test]
    fn lambda1_is_linear_in_p1() {
        let delta = pretzel_delta();
        let p = lp(&[(2, 1), (1, -6), (0, 10), (-1, -6), (-2, 1)]);
        let q = lp(&[(1, 3), (0, -5), (-1, 3)]);
        for route in [lambda1_shortcut, lambda1_residue] {
            let lp_ = route(&delta, &p).unwrap();
            let lq = route(&delta, &q).unwrap();
            let sum = route(&delta, &p.add(&q)).unwrap();
            assert_eq!(sum, lp_ + lq);
            let scaled = route(&delta, &p.scale(&rat(7, 3))).unwrap();
            assert_eq!(scaled, route(&delta, &p).unwrap() * rat(7, 3));
        }
    }

    #[test]
    fn lambda1_separates_the_pretzel_family() {
        // distinct n give distinct (2n+1)/16
        let delta = pretzel_delta();
        let mut seen = std::collections::BTreeSet::new();
        for n in -5i64..=5 {
            let theta = pretzel_theta_hat(&PretzelParams::new(-3, 3, 2 * n + 1).unwrap());
            let v = lambda1_shortcut(&delta, &p1_from_theta(&theta)).unwrap();
            assert!(seen.insert(v.to_string()));
        }
    }

    #[test]
    fn p0_is_one() {
        assert_eq!(p0(), LaurentPoly::one());
    }
}
