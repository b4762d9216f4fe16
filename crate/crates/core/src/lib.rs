//! Exact-arithmetic invariants of knots and their 0-surgeries, and the
//! elimination arguments that certify characterizing slopes.
//!
//! The crate computes, over arbitrary-precision rationals:
//!
//! * classical Seifert-matrix invariants (Alexander and Conway polynomials,
//!   determinant, signatures) — [`seifert`];
//! * the reduced 2-loop polynomial of pretzel knots, the loop-expansion
//!   coefficient P₁, the finite-type invariant v₃, and the perturbative
//!   invariant λ₁ of 0-surgery by two independent routes — [`loopexp`];
//! * Heegaard Floer dimension and correction-term bookkeeping — [`floer`];
//! * fundamental groups of surgered manifolds from planar diagrams, with
//!   low-index subgroup enumeration and a Fox-calculus oracle — [`pi1`];
//! * the tabulated classification data and knot-name parser — [`census`];
//! * auditable elimination reports replaying the characterization and
//!   distinction arguments — [`pipeline`].
//!
//! Core polynomial arithmetic is generic over the scalar type through
//! `num_traits`; the aliases below fix the concrete instantiations used
//! everywhere in this crate.

pub mod census;
pub mod floer;
pub mod laurent;
pub mod loopexp;
pub mod pi1;
pub mod pipeline;
pub mod ratmat;
pub mod seifert;

/// Exact scalar: arbitrary-precision rational.
pub type Rat = num_rational::BigRational;

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

/// Laurent polynomial in t with exact rational coefficients.
pub type LaurentPoly = laurent::Laurent<Rat>;

/// Polynomial in s = t − 2 + t⁻¹ with exact rational coefficients.
pub type SPoly = laurent::SBasis<Rat>;

/// Base-Δ expansion with exact rational digits.
pub type DeltaExpansion = laurent::DeltaExpansion<Rat>;

/// Build an exact rational from a machine integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Build an exact rational p/q from machine integers.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(p.into(), q.into())
}
