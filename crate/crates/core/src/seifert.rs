//! Seifert matrices and the classical invariants derived from them:
//! Alexander and Conway polynomials, determinant, and (Tristram–Levine)
//! signatures.
//!
//! A Seifert matrix here is a square integer matrix V of even size 2g with
//! det(V − Vᵀ) = 1, the linking form of a genus-g spanning surface; the
//! empty matrix is the unknot.  The Alexander polynomial is normalized
//! symmetrically, Δ(t) = det(tV − Vᵀ)/tᵍ, so that Δ(t⁻¹) = Δ(t) and
//! Δ(1) = 1.

use num_traits::{One, Signed};

use crate::laurent::LaurentError;
use crate::ratmat::{det_laurent, det_rat, inertia, jacobi_eigenvalues};
use crate::{rat_int, Int, LaurentPoly, Rat, SPoly};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SeifertError {
    #[error("Seifert matrix must be square, got {rows}×{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("Seifert matrix must have even size, got {size}")]
    OddSize { size: usize },
    #[error("invalid Seifert pairing: det(V − Vᵀ) = {got}, expected 1")]
    InvalidPairing { got: String },
    #[error("pretzel parameters must all be odd, got ({p}, {q}, {r})")]
    Parity { p: i64, q: i64, r: i64 },
    #[error("signature form is singular at the evaluation point")]
    SingularForm,
    #[error("evaluation point must lie on the unit circle, away from 1")]
    BadOmega,
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// Seifert pairing of a genus-g spanning surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertMatrix {
    entries: Vec<Vec<i64>>,
}

impl SeifertMatrix {
    /// Validates squareness, even size and det(V − Vᵀ) = 1.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self, SeifertError> {
        let n = entries.len();
        for row in &entries {
            if row.len() != n {
                return Err(SeifertError::NotSquare { rows: n, cols: row.len() });
            }
        }
        if n % 2 != 0 {
            return Err(SeifertError::OddSize { size: n });
        }
        let skew: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| rat_int(entries[i][j] - entries[j][i])).collect())
            .collect();
        let d = det_rat(&skew);
        if d != Rat::one() {
            return Err(SeifertError::InvalidPairing { got: d.to_string() });
        }
        Ok(SeifertMatrix { entries })
    }

    /// The unknot.
    pub fn empty() -> Self {
        SeifertMatrix { entries: Vec::new() }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn genus(&self) -> usize {
        self.size() / 2
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Mirror image, represented as V ↦ −Vᵀ; Δ is unchanged and σ flips.
    pub fn mirror(&self) -> Self {
        let n = self.size();
        SeifertMatrix {
            entries: (0..n).map(|i| (0..n).map(|j| -self.entries[j][i]).collect()).collect(),
        }
    }

    /// Symmetric Alexander polynomial det(tV − Vᵀ)/tᵍ.
    pub fn alexander(&self) -> LaurentPoly {
        let n = self.size();
        let t = LaurentPoly::var();
        let pencil: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        t.scale(&rat_int(self.entries[i][j]))
                            .sub(&LaurentPoly::from_int_terms(&[(0, self.entries[j][i])]))
                    })
                    .collect()
            })
            .collect();
        let delta = det_laurent(&pencil).shift(-(self.genus() as i64));
        debug_assert!(delta.is_symmetric());
        debug_assert_eq!(delta.evaluate(&Rat::one()).unwrap(), Rat::one());
        delta
    }

    /// Conway polynomial ∇(z), satisfying ∇(x − x⁻¹) = Δ(x²).
    pub fn conway(&self) -> ConwayPoly {
        let alexander = self.alexander();
        // D(x) = Δ(x²) as a Laurent polynomial in x
        let doubled = LaurentPoly::from_terms(alexander.terms().map(|(e, c)| (2 * e, c.clone())));
        ConwayPoly::from_z_substitution(&doubled)
    }

    /// Knot determinant |Δ(−1)|.
    pub fn determinant(&self) -> Int {
        let v = self.alexander().evaluate(&(-Rat::one())).unwrap();
        debug_assert!(v.is_integer());
        v.to_integer().abs()
    }

    /// Signature of the Hermitian form (1−ω)V + (1−ω̄)Vᵀ.
    ///
    /// At ω = −1 this is the knot signature σ = sign(V + Vᵀ), computed
    /// exactly by congruence diagonalization.  At other unit-circle points
    /// the computation is floating point with a 1e-9 tolerance on
    /// eigenvalue signs, and is advisory only.
    pub fn signature_form(&self, omega: Omega) -> Result<i64, SeifertError> {
        match omega {
            Omega::MinusOne => {
                let n = self.size();
                let sym: Vec<Vec<Rat>> = (0..n)
                    .map(|i| {
                        (0..n).map(|j| rat_int(self.entries[i][j] + self.entries[j][i])).collect()
                    })
                    .collect();
                let (pos, neg, zero) = inertia(&sym);
                if zero > 0 {
                    return Err(SeifertError::SingularForm);
                }
                Ok(pos as i64 - neg as i64)
            }
            Omega::UnitComplex { re, im } => {
                if (re * re + im * im - 1.0).abs() > 1e-9 || (re - 1.0).abs() + im.abs() < 1e-9 {
                    return Err(SeifertError::BadOmega);
                }
                self.numeric_signature(re, im)
            }
        }
    }

    /// Knot signature σ(K) = σ_K(−1).
    pub fn signature(&self) -> i64 {
        self.signature_form(Omega::MinusOne).expect("V + Vᵀ is nonsingular for a knot")
    }

    fn numeric_signature(&self, re: f64, im: f64) -> Result<i64, SeifertError> {
        let n = self.size();
        // H = (1−ω)V + (1−ω̄)Vᵀ; embed the Hermitian form as the real
        // symmetric [[Re H, −Im H], [Im H, Re H]], which doubles every
        // eigenvalue's multiplicity.
        let mut real = vec![vec![0.0; 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..n {
                let v = self.entries[i][j] as f64;
                let w = self.entries[j][i] as f64;
                let h_re = (1.0 - re) * v + (1.0 - re) * w;
                let h_im = -im * v + im * w;
                real[i][j] = h_re;
                real[i + n][j + n] = h_re;
                real[i][j + n] = -h_im;
                real[i + n][j] = h_im;
            }
        }
        let eigs = jacobi_eigenvalues(&real);
        let tol = 1e-9;
        if eigs.iter().any(|e| e.abs() <= tol) {
            return Err(SeifertError::SingularForm);
        }
        let pos = eigs.iter().filter(|e| **e > 0.0).count() as i64;
        let neg = 2 * n as i64 - pos;
        Ok((pos - neg) / 2)
    }
}

/// Evaluation point of the signature form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Omega {
    /// ω = −1, the exact path.
    MinusOne,
    /// A generic unit-modulus ω ≠ 1; advisory floating-point path.
    UnitComplex { re: f64, im: f64 },
}

/// Conway polynomial with integer coefficients in z = x − x⁻¹.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConwayPoly {
    poly: LaurentPoly, // variable z, nonnegative even exponents for knots
}

impl ConwayPoly {
    /// Convert D(x) = Δ(x²) into powers of z = x − x⁻¹ by peeling the top
    /// coefficient (zᵈ is monic in x).
    fn from_z_substitution(d: &LaurentPoly) -> Self {
        let z_in_x = LaurentPoly::from_int_terms(&[(1, 1), (-1, -1)]);
        let mut rest = d.clone();
        let mut poly = LaurentPoly::zero();
        while let Some(top) = rest.max_exp() {
            debug_assert!(top >= 0);
            let c = rest.coeff(top);
            poly = poly.add(&LaurentPoly::monomial(top, c.clone()));
            rest = rest.sub(&z_in_x.pow(top as u32).scale(&c));
        }
        let conway = ConwayPoly { poly };
        debug_assert_eq!(conway.coeff(0), Int::one(), "Conway constant term must be 1");
        debug_assert!(
            conway.poly.terms().all(|(e, _)| e % 2 == 0),
            "knot Conway polynomial has even powers only"
        );
        conway
    }

    /// Coefficient of zᵏ as an exact integer.
    pub fn coeff(&self, k: i64) -> Int {
        let c = self.poly.coeff(k);
        debug_assert!(c.is_integer());
        c.to_integer()
    }

    pub fn a2(&self) -> Int {
        self.coeff(2)
    }

    pub fn a4(&self) -> Int {
        self.coeff(4)
    }

    /// The underlying polynomial (variable z).
    pub fn as_laurent(&self) -> &LaurentPoly {
        &self.poly
    }

    /// Substitute z = x − x⁻¹, returning a Laurent polynomial in x.
    pub fn substitute_z(&self) -> LaurentPoly {
        let z_in_x = LaurentPoly::from_int_terms(&[(1, 1), (-1, -1)]);
        let mut out = LaurentPoly::zero();
        for (e, c) in self.poly.terms() {
            out = out.add(&z_in_x.pow(e as u32).scale(c));
        }
        out
    }
}

impl std::fmt::Display for ConwayPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.poly.to_string_with_var("z"))
    }
}

/// Standard genus-1 Seifert matrix of the pretzel knot P(p, q, r),
/// [[(p+q)/2, (q+1)/2], [(q−1)/2, (q+r)/2]]; requires p, q, r odd.
pub fn pretzel_seifert(p: i64, q: i64, r: i64) -> Result<SeifertMatrix, SeifertError> {
    if p % 2 == 0 || q % 2 == 0 || r % 2 == 0 {
        return Err(SeifertError::Parity { p, q, r });
    }
    SeifertMatrix::new(vec![
        vec![(p + q) / 2, (q + 1) / 2],
        vec![(q - 1) / 2, (q + r) / 2],
    ])
}

/// Roots of a degree-1 symmetric Δ on the unit circle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnitCircleRoots {
    /// All roots are real (off the unit circle, or ±1).
    Empty,
    /// A conjugate pair a ± bi with a² + b² = 1, recorded as (a, b²).
    Pair { re: Rat, im_sq: Rat },
}

/// Solve b₀ − b₁(t − 2 + t⁻¹) = 0 and report the conjugate pair when the
/// roots lie on the unit circle.
pub fn unit_circle_roots(delta: &LaurentPoly) -> Result<UnitCircleRoots, SeifertError> {
    let sb = SPoly::from_symmetric(delta)?;
    if sb.degree() != Some(1) {
        return Err(SeifertError::Laurent(LaurentError::Degree {
            expected: 1,
            got: sb.degree().map_or(0, |d| d),
        }));
    }
    let b0 = sb.coeff(0);
    let b1 = -sb.coeff(1);
    // t·Δ(t) = −b₁t² + (b₀ + 2b₁)t − b₁
    let linear = b0 + rat_int(2) * b1.clone();
    let disc = linear.clone() * linear.clone() - rat_int(4) * b1.clone() * b1.clone();
    if !disc.is_negative() {
        return Ok(UnitCircleRoots::Empty);
    }
    let re = linear / (rat_int(2) * b1.clone());
    let im_sq = -disc / (rat_int(4) * b1.clone() * b1);
    debug_assert_eq!(re.clone() * re.clone() + im_sq.clone(), Rat::one());
    Ok(UnitCircleRoots::Pair { re, im_sq })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(terms)
    }

    fn sm(rows: &[&[i64]]) -> SeifertMatrix {
        SeifertMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn pretzel_matrices() {
        for n in -4i64..=4 {
            let v = pretzel_seifert(-3, 3, 2 * n + 1).unwrap();
            assert_eq!(v.entries(), &[vec![0, 2], vec![1, n + 2]]);
        }
        assert_eq!(pretzel_seifert(1, 1, 1).unwrap().entries(), &[vec![1, 1], vec![0, 1]]);
        assert_eq!(pretzel_seifert(-1, 1, -1).unwrap().entries(), &[vec![0, 1], vec![0, 0]]);
        assert!(matches!(pretzel_seifert(-3, 3, 4), Err(SeifertError::Parity { .. })));
    }

    #[test]
    fn alexander_of_fixture_matrices() {
        for n in -5i64..=5 {
            let v = pretzel_seifert(-3, 3, 2 * n + 1).unwrap();
            assert_eq!(v.alexander(), lp(&[(1, -2), (0, 5), (-1, -2)]));
        }
        assert_eq!(sm(&[&[1, 1], &[0, 2]]).alexander(), lp(&[(1, 2), (0, -3), (-1, 2)]));
        assert_eq!(sm(&[&[-1, 1], &[0, 2]]).alexander(), lp(&[(1, -2), (0, 5), (-1, -2)]));
        assert_eq!(SeifertMatrix::empty().alexander(), LaurentPoly::one());
        // trefoil and the Δ = 1 pairing
        assert_eq!(pretzel_seifert(1, 1, 1).unwrap().alexander(), lp(&[(1, 1), (0, -1), (-1, 1)]));
        assert_eq!(pretzel_seifert(-1, 1, -1).unwrap().alexander(), LaurentPoly::one());
    }

    #[test]
    fn conway_of_fixture_matrices() {
        for n in -3i64..=3 {
            let c = pretzel_seifert(-3, 3, 2 * n + 1).unwrap().conway();
            assert_eq!(c.to_string(), "-2*z^2 + 1");
            assert_eq!(c.a2(), Int::from(-2));
            assert_eq!(c.a4(), Int::from(0));
        }
        assert_eq!(SeifertMatrix::empty().conway().to_string(), "1");
        let trefoil = pretzel_seifert(1, 1, 1).unwrap().conway();
        assert_eq!(trefoil.to_string(), "z^2 + 1");
    }

    #[test]
    fn conway_substitution_identity() {
        // ∇(x − x⁻¹) = Δ(x²) for every fixture
        let fixtures = [
            sm(&[&[1, 1], &[0, 2]]),
            sm(&[&[-1, 1], &[0, 2]]),
            pretzel_seifert(-3, 3, 7).unwrap(),
            pretzel_seifert(1, 1, 1).unwrap(),
            pretzel_seifert(5, -3, 7).unwrap(),
            SeifertMatrix::empty(),
        ];
        for v in fixtures {
            let lhs = v.conway().substitute_z();
            let alexander = v.alexander();
            let rhs = LaurentPoly::from_terms(alexander.terms().map(|(e, c)| (2 * e, c.clone())));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(sm(&[&[1, 1], &[0, 2]]).determinant(), Int::from(7));
        for n in -5i64..=5 {
            assert_eq!(pretzel_seifert(-3, 3, 2 * n + 1).unwrap().determinant(), Int::from(9));
        }
        assert_eq!(SeifertMatrix::empty().determinant(), Int::from(1));
    }

    #[test]
    fn signature_examples() {
        let wh_minus = sm(&[&[1, 1], &[0, 2]]);
        assert_eq!(wh_minus.signature().abs(), 2);
        assert_eq!(wh_minus.signature(), 2);
        assert_eq!(SeifertMatrix::empty().signature(), 0);
        assert_eq!(wh_minus.mirror().signature(), -2);
        // mirror negates σ and preserves Δ on every fixture
        for v in [sm(&[&[1, 1], &[0, 2]]), pretzel_seifert(-3, 3, 9).unwrap(), sm(&[&[-1, 1], &[0, 2]])] {
            assert_eq!(v.mirror().signature(), -v.signature());
            assert_eq!(v.mirror().alexander(), v.alexander());
            assert_eq!(v.signature() % 2, 0);
        }
    }

    #[test]
    fn numeric_signature_path_agrees_near_minus_one() {
        let v = sm(&[&[1, 1], &[0, 2]]);
        let sig = v.signature_form(Omega::UnitComplex { re: -1.0, im: 0.0 }).unwrap();
        assert_eq!(sig, v.signature());
        let pretzel = pretzel_seifert(-3, 3, 5).unwrap();
        let sig = pretzel.signature_form(Omega::UnitComplex { re: -1.0, im: 0.0 }).unwrap();
        assert_eq!(sig, 0);
        assert!(matches!(
            v.signature_form(Omega::UnitComplex { re: 1.0, im: 0.0 }),
            Err(SeifertError::BadOmega)
        ));
        assert!(matches!(
            v.signature_form(Omega::UnitComplex { re: 0.5, im: 0.5 }),
            Err(SeifertError::BadOmega)
        ));
    }

    #[test]
    fn pretzel_invariants_are_permutation_symmetric() {
        let params = (-3i64, 3i64, 7i64);
        let perms = [
            (params.0, params.1, params.2),
            (params.0, params.2, params.1),
            (params.1, params.0, params.2),
            (params.1, params.2, params.0),
            (params.2, params.0, params.1),
            (params.2, params.1, params.0),
        ];
        let base = pretzel_seifert(params.0, params.1, params.2).unwrap();
        for (p, q, r) in perms {
            let v = pretzel_seifert(p, q, r).unwrap();
            assert_eq!(v.alexander(), base.alexander());
            assert_eq!(v.conway(), base.conway());
        }
    }

    #[test]
    fn unit_circle_root_examples() {
        // 2t − 3 + 2t⁻¹: roots (3 ± i√7)/4
        let det7 = lp(&[(1, 2), (0, -3), (-1, 2)]);
        assert_eq!(
            unit_circle_roots(&det7).unwrap(),
            UnitCircleRoots::Pair { re: rat(3, 4), im_sq: rat(7, 16) }
        );
        // −2t + 5 − 2t⁻¹: real roots {2, 1/2}
        let det9 = lp(&[(1, -2), (0, 5), (-1, -2)]);
        assert_eq!(unit_circle_roots(&det9).unwrap(), UnitCircleRoots::Empty);
        // trefoil: (1 ± i√3)/2
        let trefoil = lp(&[(1, 1), (0, -1), (-1, 1)]);
        assert_eq!(
            unit_circle_roots(&trefoil).unwrap(),
            UnitCircleRoots::Pair { re: rat(1, 2), im_sq: rat(3, 4) }
        );
        assert!(unit_circle_roots(&LaurentPoly::one()).is_err());
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert!(matches!(
            SeifertMatrix::new(vec![vec![1, 1], vec![0]]),
            Err(SeifertError::NotSquare { .. })
        ));
        assert!(matches!(
            SeifertMatrix::new(vec![vec![1]]),
            Err(SeifertError::OddSize { size: 1 })
        ));
        assert!(matches!(
            SeifertMatrix::new(vec![vec![1, 1], vec![1, 2]]),
            Err(SeifertError::InvalidPairing { .. })
        ));
    }
}
