//! Small exact matrix utilities shared by the invariant modules: rational
//! determinants, signatures of symmetric forms by congruence, Smith normal
//! form over ℤ, and determinants of Laurent-polynomial matrices computed by
//! evaluation and interpolation.  Everything here is desk-scale; no attempt
//! is made at asymptotic cleverness.

use num_traits::{One, Signed, Zero};

use crate::laurent::Laurent;
use crate::{Int, LaurentPoly, Rat};

/// Exact determinant of a square rational matrix by fraction-full Gaussian
/// elimination.  The empty matrix has determinant 1.
pub fn det_rat(mat: &[Vec<Rat>]) -> Rat {
    let n = mat.len();
    let mut m: Vec<Vec<Rat>> = mat.to_vec();
    let mut det = Rat::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(pivot) = pivot else {
            return Rat::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= p.clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() / p.clone();
            for c in col..n {
                let v = m[r][c].clone() - factor.clone() * m[col][c].clone();
                m[r][c] = v;
            }
        }
    }
    det
}

/// Inertia of a symmetric rational matrix: counts of positive, negative and
/// zero eigenvalues, computed exactly by congruence diagonalization.
pub fn inertia(mat: &[Vec<Rat>]) -> (usize, usize, usize) {
    let n = mat.len();
    let mut m: Vec<Vec<Rat>> = mat.to_vec();
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut pos = 0;
    let mut neg = 0;
    let mut zero = 0;
    let mut done = vec![false; n];
    for _ in 0..n {
        // prefer a nonzero diagonal pivot
        let diag = (0..n).find(|&i| !done[i] && !m[i][i].is_zero());
        let i = match diag {
            Some(i) => i,
            None => {
                // symmetric with zero diagonal: borrow an off-diagonal entry
                let pair = (0..n)
                    .filter(|&i| !done[i])
                    .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
                    .find(|&(i, j)| !done[j] && !m[i][j].is_zero());
                match pair {
                    Some((i, j)) => {
                        // row/col_i += row/col_j makes m[i][i] = 2·m[i][j] ≠ 0
                        for c in 0..n {
                            let v = m[i][c].clone() + m[j][c].clone();
                            m[i][c] = v;
                        }
                        for r in 0..n {
                            let v = m[r][i].clone() + m[r][j].clone();
                            m[r][i] = v;
                        }
                        i
                    }
                    None => {
                        zero += done.iter().filter(|d| !**d).count();
                        break;
                    }
                }
            }
        };
        let p = m[i][i].clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for r in 0..n {
            if r == i || done[r] || m[r][i].is_zero() {
                continue;
            }
            let factor = m[r][i].clone() / p.clone();
            for c in 0..n {
                let v = m[r][c].clone() - factor.clone() * m[i][c].clone();
                m[r][c] = v;
            }
            for c in 0..n {
                let v = m[c][r].clone() - factor.clone() * m[c][i].clone();
                m[c][r] = v;
            }
        }
        done[i] = true;
    }
    (pos, neg, zero)
}

/// Smith normal form over ℤ.  Returns the invariant factors d₁ | d₂ | ...,
/// all positive, one per nonzero diagonal entry; the rank is their count.
pub fn smith_invariant_factors(mat: &[Vec<Int>]) -> Vec<Int> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut m: Vec<Vec<Int>> = mat.to_vec();
    let mut factors = Vec::new();
    let mut top = 0usize;
    while top < rows && top < cols {
        // locate the smallest nonzero entry in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for r in top..rows {
            for c in top..cols {
                if !m[r][c].is_zero()
                    && best.is_none_or(|(br, bc)| m[r][c].abs() < m[br][bc].abs())
                {
                    best = Some((r, c));
                }
            }
        }
        let Some((br, bc)) = best else { break };
        m.swap(top, br);
        for row in m.iter_mut() {
            row.swap(top, bc);
        }
        // reduce the pivot row and column
        let mut dirty = true;
        while dirty {
            dirty = false;
            for r in top + 1..rows {
                if m[r][top].is_zero() {
                    continue;
                }
                let q = div_round(&m[r][top], &m[top][top]);
                for c in top..cols {
                    let v = &m[r][c] - &q * &m[top][c];
                    m[r][c] = v;
                }
                if !m[r][top].is_zero() {
                    m.swap(top, r);
                    dirty = true;
                }
            }
            for c in top + 1..cols {
                if m[top][c].is_zero() {
                    continue;
                }
                let q = div_round(&m[top][c], &m[top][top]);
                for row in m.iter_mut().take(rows).skip(top) {
                    let v = &row[c] - &q * &row[top];
                    row[c] = v;
                }
                if !m[top][c].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(top, c);
                    }
                    dirty = true;
                }
            }
        }
        // enforce divisibility d_k | entries below
        let pivot = m[top][top].clone();
        let offender = (top + 1..rows)
            .flat_map(|r| (top + 1..cols).map(move |c| (r, c)))
            .find(|&(r, c)| !(&m[r][c] % &pivot).is_zero());
        if let Some((r, _)) = offender {
            for c in top..cols {
                let v = &m[top][c] + &m[r][c];
                m[top][c] = v;
            }
            continue; // redo this pivot
        }
        factors.push(pivot.abs());
        top += 1;
    }
    factors
}

fn div_round(a: &Int, b: &Int) -> Int {
    // rounded division keeps remainders small
    let two: Int = 2.into();
    let (q, r) = num_integer::Integer::div_rem(a, b);
    if &r.abs() * &two > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Determinant of a square matrix of Laurent polynomials, computed exactly
/// by evaluating at enough rational points and interpolating.
///
/// Negative exponents are cleared row by row (each row is multiplied by a
/// power of t, and the product is divided back out at the end), so the
/// result is exact for any Laurent inputs.
pub fn det_laurent(mat: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = mat.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut shift_total: i64 = 0;
    let mut rows: Vec<Vec<LaurentPoly>> = Vec::with_capacity(n);
    let mut degree_bound: i64 = 0;
    for row in mat {
        debug_assert_eq!(row.len(), n);
        let min = row.iter().filter_map(|p| p.min_exp()).min().unwrap_or(0).min(0);
        shift_total += min;
        let shifted: Vec<LaurentPoly> = row.iter().map(|p| p.shift(-min)).collect();
        degree_bound += shifted.iter().filter_map(|p| p.max_exp()).max().unwrap_or(0);
        rows.push(shifted);
    }
    let samples = (degree_bound + 1) as usize;
    let mut xs = Vec::with_capacity(samples);
    let mut ys = Vec::with_capacity(samples);
    for k in 0..samples {
        let x = crate::rat_int(k as i64 + 1);
        let evaluated: Vec<Vec<Rat>> = rows
            .iter()
            .map(|row| row.iter().map(|p| p.evaluate(&x).unwrap()).collect())
            .collect();
        ys.push(det_rat(&evaluated));
        xs.push(x);
    }
    let coeffs = lagrange_interpolate(&xs, &ys);
    Laurent::from_terms(coeffs.into_iter().enumerate().map(|(i, c)| (i as i64, c))).shift(shift_total)
}

/// Coefficients (low to high) of the unique polynomial of degree < len(xs)
/// through the given points.
fn lagrange_interpolate(xs: &[Rat], ys: &[Rat]) -> Vec<Rat> {
    let n = xs.len();
    // Newton's divided differences, then expand the nested form
    let mut table: Vec<Rat> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = table[i].clone() - table[i - 1].clone();
            let den = xs[i].clone() - xs[i - level].clone();
            table[i] = num / den;
        }
    }
    // Horner expansion: p(x) = a0 + (x−x0)(a1 + (x−x1)(a2 + ...))
    let mut coeffs: Vec<Rat> = vec![table[n - 1].clone()];
    for i in (0..n - 1).rev() {
        // multiply by (x − xs[i]) and add table[i]
        coeffs.insert(0, Rat::zero());
        let shift = xs[i].clone();
        for k in 0..coeffs.len() - 1 {
            let v = coeffs[k].clone() - shift.clone() * coeffs[k + 1].clone();
            coeffs[k] = v;
        }
        coeffs[0] = coeffs[0].clone() + table[i].clone();
    }
    coeffs
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
/// Used only on the advisory floating-point signature path.
pub fn jacobi_eigenvalues(mat: &[Vec<f64>]) -> Vec<f64> {
    let n = mat.len();
    let mut a: Vec<Vec<f64>> = mat.to_vec();
    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                off += a[i][j] * a[i][j];
            }
        }
        if off < 1e-24 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-30 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).collect()
}
