//! Exact Laurent polynomial arithmetic in one variable.
//!
//! A `Laurent<C>` is a finite sum  Σ cₖ tᵏ  with k ∈ ℤ, stored sparsely as a
//! map from exponent to nonzero coefficient (the zero polynomial is the empty
//! map).  The coefficient type is generic over `num_traits`; the crate root
//! fixes `LaurentPoly = Laurent<Rat>` with arbitrary-precision rational
//! coefficients, which is what every invariant computation here uses.
//!
//! Besides ring arithmetic this module provides the symmetric-basis
//! machinery: writing a symmetric polynomial in powers of s = t − 2 + t⁻¹,
//! expanding in base Δ for a degree-1 symmetric Δ, and extracting residues
//! at t = 0 by truncated power-series inversion.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{FromPrimitive, Num, Signed};

/// Errors from Laurent-polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaurentError {
    #[error("evaluation point must be nonzero")]
    EvalAtZero,
    #[error("polynomial is not symmetric under t ↦ t⁻¹")]
    Asymmetric,
    #[error("expected s-degree {expected}, got {got}")]
    Degree { expected: usize, got: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Coefficient bound: a commutative field-like scalar from `num_traits`.
pub trait Coeff: Num + Signed + Clone + FromPrimitive {}
impl<T: Num + Signed + Clone + FromPrimitive> Coeff for T {}

/// Sparse Laurent polynomial Σ cₖ tᵏ over coefficients `C`.
///
/// Invariant: no stored coefficient is zero, so equality is exact map
/// equality and the zero polynomial is the empty map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent<C> {
    coeffs: BTreeMap<i64, C>,
}

impl<C: Coeff> Laurent<C> {
    pub fn zero() -> Self {
        Laurent { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    /// The variable t itself.
    pub fn var() -> Self {
        Self::monomial(1, C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i64, c: C) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Laurent { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (exp, c) in terms {
            p.add_term(exp, c);
        }
        p
    }

    /// Convenience constructor with machine-integer coefficients.
    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|&(e, c)| (e, C::from_i64(c).expect("coefficient out of range"))),
        )
    }

    fn add_term(&mut self, exp: i64, c: C) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    o.insert(sum);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of tᵏ (zero if absent).
    pub fn coeff(&self, exp: i64) -> C {
        self.coeffs.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    /// Lowest exponent with nonzero coefficient; `None` for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Highest exponent with nonzero coefficient; `None` for the zero polynomial.
    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Laurent {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                // desk-scale degrees only; overflow is a hard error
                let e = e1.checked_add(e2).expect("exponent overflow in Laurent mul");
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            coeffs: self.coeffs.iter().map(|(&e, v)| (e, v.clone() * c.clone())).collect(),
        }
    }

    /// Multiply by tᵏ.
    pub fn shift(&self, k: i64) -> Self {
        Laurent {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e.checked_add(k).expect("exponent overflow in shift"), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// The substitution t ↦ t⁻¹.
    pub fn involute(&self) -> Self {
        Laurent {
            coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Whether the polynomial is fixed by t ↦ t⁻¹.
    pub fn is_symmetric(&self) -> bool {
        self.involute() == *self
    }

    /// Exact evaluation at a nonzero scalar.
    pub fn evaluate(&self, x: &C) -> Result<C, LaurentError> {
        if x.is_zero() {
            return Err(LaurentError::EvalAtZero);
        }
        let mut acc = C::zero();
        for (e, c) in self.terms() {
            acc = acc + c.clone() * scalar_pow(x, e);
        }
        Ok(acc)
    }

    /// Formal derivative d/dt.
    pub fn derivative(&self) -> Self {
        Self::from_terms(self.terms().filter(|&(e, _)| e != 0).map(|(e, c)| {
            (e - 1, c.clone() * C::from_i64(e).expect("exponent out of coefficient range"))
        }))
    }

    /// Render with an arbitrary variable name (`t`, `z`, ...).
    pub fn to_string_with_var(&self, var: &str) -> String
    where
        C: fmt::Display,
    {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        // highest power first, matching the usual way these polynomials are written
        for (i, (&e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_part = if mag.is_one() && e != 0 { None } else { Some(mag.to_string()) };
            let var_part = match e {
                0 => None,
                1 => Some(var.to_string()),
                _ => Some(format!("{var}^{e}")),
            };
            match (coeff_part, var_part) {
                (Some(cp), Some(vp)) => {
                    out.push_str(&cp);
                    out.push('*');
                    out.push_str(&vp);
                }
                (Some(cp), None) => out.push_str(&cp),
                (None, Some(vp)) => out.push_str(&vp),
                (None, None) => unreachable!(),
            }
        }
        out
    }

    /// Parse the textual form, e.g. `-2*t + 5 - 2*t^-1`, with terms in any
    /// order and `p/q` rational coefficients.  Inverse of
    /// [`to_string_with_var`].
    pub fn parse_with_var(text: &str, var: &str) -> Result<Self, LaurentError>
    where
        C: FromStr,
    {
        Parser { bytes: text.as_bytes(), pos: 0, var }.parse()
    }
}

fn scalar_pow<C: Coeff>(x: &C, e: i64) -> C {
    let base = if e < 0 { C::one() / x.clone() } else { x.clone() };
    let mut n = e.unsigned_abs();
    let mut acc = C::one();
    let mut sq = base;
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * sq.clone();
        }
        sq = sq.clone() * sq;
        n >>= 1;
    }
    acc
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    var: &'a str,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, LaurentError> {
        Err(LaurentError::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse<C: Coeff + FromStr>(mut self) -> Result<Laurent<C>, LaurentError> {
        let mut poly = Laurent::zero();
        self.skip_ws();
        if self.pos == self.bytes.len() {
            return self.err("empty input");
        }
        let mut first = true;
        while self.pos < self.bytes.len() {
            let mut sign = 1i64;
            self.skip_ws();
            if self.eat(b'-') {
                sign = -1;
            } else if self.eat(b'+') {
                if first {
                    return self.err("unexpected leading '+'");
                }
            } else if !first {
                return self.err("expected '+' or '-' between terms");
            }
            self.skip_ws();
            let (exp, coeff) = self.parse_term::<C>()?;
            let c = if sign < 0 { -coeff } else { coeff };
            poly.add_term(exp, c);
            first = false;
            self.skip_ws();
        }
        Ok(poly)
    }

    fn parse_term<C: Coeff + FromStr>(&mut self) -> Result<(i64, C), LaurentError> {
        let coeff = if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            let c = self.parse_number::<C>()?;
            self.skip_ws();
            self.eat(b'*');
            self.skip_ws();
            Some(c)
        } else {
            None
        };
        if self.starts_with_var() {
            self.pos += self.var.len();
            let exp = if self.eat(b'^') { self.parse_exponent()? } else { 1 };
            Ok((exp, coeff.unwrap_or_else(C::one)))
        } else {
            match coeff {
                Some(c) => Ok((0, c)),
                None => self.err("expected coefficient or variable"),
            }
        }
    }

    fn starts_with_var(&self) -> bool {
        self.bytes[self.pos..].starts_with(self.var.as_bytes())
    }

    fn parse_number<C: Coeff + FromStr>(&mut self) -> Result<C, LaurentError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.eat(b'/') {
            if !self.peek().is_some_and(|b| b.is_ascii_digit()) {
                return self.err("expected denominator digits");
            }
            while self.peek().is_some_and(|b| b.is_ascii_digit()) {
                self.pos += 1;
            }
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        match C::from_str(text) {
            Ok(c) => Ok(c),
            Err(_) => self.err(format!("invalid coefficient `{text}`")),
        }
    }

    fn parse_exponent(&mut self) -> Result<i64, LaurentError> {
        let parenthesized = self.eat(b'(');
        let neg = self.eat(b'-');
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected exponent digits");
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        let mag: i64 = match text.parse() {
            Ok(v) => v,
            Err(_) => return self.err(format!("invalid exponent `{text}`")),
        };
        if parenthesized && !self.eat(b')') {
            return self.err("expected ')'");
        }
        Ok(if neg { -mag } else { mag })
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with_var("t"))
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident) => {
        impl<'a, C: Coeff> std::ops::$trait<&'a Laurent<C>> for &'a Laurent<C> {
            type Output = Laurent<C>;
            fn $method(self, rhs: &'a Laurent<C>) -> Laurent<C> {
                Laurent::$method(self, rhs)
            }
        }
        impl<C: Coeff> std::ops::$trait for Laurent<C> {
            type Output = Laurent<C>;
            fn $method(self, rhs: Laurent<C>) -> Laurent<C> {
                Laurent::$method(&self, &rhs)
            }
        }
    };
}
impl_binop!(Add, add);
impl_binop!(Sub, sub);
impl_binop!(Mul, mul);

impl<C: Coeff> std::ops::Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent::neg(self)
    }
}

/// The basis element s = t − 2 + t⁻¹.
pub fn s_poly<C: Coeff>() -> Laurent<C> {
    Laurent::from_int_terms(&[(1, 1), (0, -2), (-1, 1)])
}

/// A polynomial in s = t − 2 + t⁻¹, stored densely by s-power.
///
/// Invariant: the trailing (highest-index) coefficient is nonzero; the zero
/// polynomial is the empty vector.  Round-tripping through [`SBasis::expand`]
/// and [`SBasis::from_symmetric`] is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SBasis<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> SBasis<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SBasis { coeffs }
    }

    pub fn zero() -> Self {
        SBasis { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in s; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    /// Change of basis from a symmetric Laurent polynomial.
    ///
    /// Peels the top coefficient repeatedly: a symmetric P with top exponent
    /// d has s-coefficient `coeff(t^d)` in degree d, since sᵈ is monic.
    pub fn from_symmetric(p: &Laurent<C>) -> Result<Self, LaurentError> {
        if !p.is_symmetric() {
            return Err(LaurentError::Asymmetric);
        }
        let mut rest = p.clone();
        let mut coeffs: Vec<C> = Vec::new();
        let s: Laurent<C> = s_poly();
        while let Some(d) = rest.max_exp() {
            debug_assert!(d >= 0, "symmetric nonzero polynomial has top exponent >= 0");
            let d = d as usize;
            let c = rest.coeff(d as i64);
            if coeffs.len() <= d {
                coeffs.resize(d + 1, C::zero());
            }
            coeffs[d] = c.clone();
            rest = rest.sub(&s.pow(d as u32).scale(&c));
        }
        Ok(Self::new(coeffs))
    }

    /// Expand back to a Laurent polynomial.
    pub fn expand(&self) -> Laurent<C> {
        let s: Laurent<C> = s_poly();
        let mut out = Laurent::zero();
        let mut power = Laurent::one();
        for c in &self.coeffs {
            out = out.add(&power.scale(c));
            power = power.mul(&s);
        }
        out
    }

    /// Polynomial division with remainder in ℚ[s].
    pub fn div_rem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by zero s-polynomial");
        let dd = div.degree().unwrap();
        let lead = div.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![C::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap().clone() / lead.clone();
            if !factor.is_zero() {
                for i in 0..=dd {
                    let v = rem[k + i].clone() - factor.clone() * div.coeffs[i].clone();
                    rem[k + i] = v;
                }
                debug_assert!(rem.last().unwrap().is_zero());
            }
            rem.pop();
            quo[k] = factor;
        }
        (Self::new(quo), Self::new(rem))
    }
}

/// The base-Δ expansion P = f·Δ³ + a₂Δ² + a₁Δ + a₀ with constant digits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaExpansion<C> {
    pub f: Laurent<C>,
    pub a2: C,
    pub a1: C,
    pub a0: C,
}

impl<C: Coeff> DeltaExpansion<C> {
    /// Re-assemble f·Δ³ + a₂Δ² + a₁Δ + a₀.
    pub fn reconstruct(&self, delta: &Laurent<C>) -> Laurent<C> {
        let d2 = delta.mul(delta);
        let d3 = d2.mul(delta);
        self.f
            .mul(&d3)
            .add(&d2.scale(&self.a2))
            .add(&delta.scale(&self.a1))
            .add(&Laurent::constant(self.a0.clone()))
    }
}

/// Expand P in base Δ where Δ is symmetric of s-degree exactly 1.
///
/// The digits below Δ³ are constants because division by a linear polynomial
/// in the s-basis leaves degree-0 remainders.
pub fn base_delta_expand<C: Coeff>(
    p: &Laurent<C>,
    delta: &Laurent<C>,
) -> Result<DeltaExpansion<C>, LaurentError> {
    let delta_s = SBasis::from_symmetric(delta)?;
    if delta_s.degree() != Some(1) {
        return Err(LaurentError::Degree {
            expected: 1,
            got: delta_s.degree().map_or(0, |d| d),
        });
    }
    let p_s = SBasis::from_symmetric(p)?;
    let (q0, r0) = p_s.div_rem(&delta_s);
    let (q1, r1) = q0.div_rem(&delta_s);
    let (q2, r2) = q1.div_rem(&delta_s);
    let constant = |r: SBasis<C>| -> C {
        assert!(r.degree().map_or(true, |d| d == 0), "non-constant digit in base-Δ expansion");
        r.coeff(0)
    };
    Ok(DeltaExpansion {
        f: q2.expand(),
        a2: constant(r2),
        a1: constant(r1),
        a0: constant(r0),
    })
}

/// Residue at t = 0 of the rational function num/den: the coefficient of
/// t⁻¹ in its Laurent expansion around 0, computed exactly.
///
/// Writing den = tᵐ·q(t) and num = tᵛ·p(t) with q(0), p(0) ≠ 0, the series
/// p/q is inverted to order m − v − 1; the truncation order is derived from
/// pole order and numerator valuation rather than fixed.
pub fn residue_at_zero<C: Coeff>(num: &Laurent<C>, den: &Laurent<C>) -> Result<C, LaurentError> {
    if den.is_zero() {
        return Err(LaurentError::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok(C::zero());
    }
    let v = num.min_exp().unwrap();
    let m = den.min_exp().unwrap();
    let order = m - v - 1;
    if order < 0 {
        return Ok(C::zero());
    }
    let order = order as usize;
    let p = num.shift(-v);
    let q = den.shift(-m);
    let q0 = q.coeff(0);
    debug_assert!(!q0.is_zero());
    // series coefficients of p/q up to `order`
    let mut series: Vec<C> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = p.coeff(k as i64);
        for j in 1..=k {
            let qj = q.coeff(j as i64);
            if !qj.is_zero() {
                acc = acc - qj * series[k - j].clone();
            }
        }
        series.push(acc / q0.clone());
    }
    Ok(series[order].clone())
}
