//! Tietze simplification: generator elimination through relators that
//! mention a generator exactly once, plus free/cyclic reduction and relator
//! deduplication.  Deterministic, and a fixpoint of itself.

use std::collections::BTreeMap;

use super::{cyclic_reduce, GroupPresentation};

/// Canonical representative of a relator up to rotation and inversion.
fn canonical_cyclic(word: &[i32]) -> Vec<i32> {
    let mut best: Option<Vec<i32>> = None;
    let inv: Vec<i32> = word.iter().rev().map(|&x| -x).collect();
    for w in [word.to_vec(), inv] {
        for k in 0..w.len().max(1) {
            let mut rot = w.clone();
            rot.rotate_left(k % w.len().max(1));
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

fn clean(relators: Vec<Vec<i32>>) -> Vec<Vec<i32>> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for rel in relators {
        let r = cyclic_reduce(&rel);
        if r.is_empty() {
            continue;
        }
        if seen.insert(canonical_cyclic(&r)) {
            out.push(r);
        }
    }
    out
}

/// Substitute generator `g` (1-based) by `replacement` everywhere.
fn substitute(rel: &[i32], g: i32, replacement: &[i32]) -> Vec<i32> {
    let mut out = Vec::with_capacity(rel.len());
    for &x in rel {
        if x == g {
            out.extend_from_slice(replacement);
        } else if x == -g {
            out.extend(replacement.iter().rev().map(|&y| -y));
        } else {
            out.push(x);
        }
    }
    cyclic_reduce(&out)
}

/// Shorten `target` using `rule`: if more than half of (a cyclic conjugate
/// of) `rule` or its inverse occurs inside the cyclic word of `target`,
/// replace that chunk by the inverse of the complement.
fn subword_shorten(target: &[i32], rule: &[i32]) -> Option<Vec<i32>> {
    let rl = rule.len();
    let tl = target.len();
    if rl < 2 || tl < rl / 2 + 1 {
        return None;
    }
    let chunk = rl / 2 + 1; // strictly more than half
    let inv_rule: Vec<i32> = rule.iter().rev().map(|&x| -x).collect();
    for cand in [rule, inv_rule.as_slice()] {
        for rot in 0..rl {
            // u = first `chunk` letters of the rotated rule; v = the rest;
            // u = v⁻¹ in the group, and |v⁻¹| < |u|
            let rotated: Vec<i32> =
                (0..rl).map(|i| cand[(rot + i) % rl]).collect();
            let u = &rotated[..chunk];
            let v_inv: Vec<i32> = rotated[chunk..].iter().rev().map(|&x| -x).collect();
            for start in 0..tl {
                if (0..chunk).all(|i| target[(start + i) % tl] == u[i]) {
                    let mut out: Vec<i32> = Vec::with_capacity(tl - chunk + v_inv.len());
                    out.extend_from_slice(&v_inv);
                    let mut k = (start + chunk) % tl;
                    for _ in 0..tl - chunk {
                        out.push(target[k]);
                        k = (k + 1) % tl;
                    }
                    return Some(cyclic_reduce(&out));
                }
            }
        }
    }
    None
}

/// Repeatedly shorten relators against each other until nothing applies.
fn subword_pass(mut relators: Vec<Vec<i32>>) -> Vec<Vec<i32>> {
    loop {
        relators.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let mut improved = false;
        'outer: for ti in 0..relators.len() {
            for ri in 0..relators.len() {
                if ri == ti || relators[ri].len() > relators[ti].len() {
                    continue;
                }
                if let Some(shorter) = subword_shorten(&relators[ti], &relators[ri]) {
                    relators[ti] = shorter;
                    improved = true;
                    break 'outer;
                }
            }
        }
        relators = clean(relators);
        if !improved {
            return relators;
        }
    }
}

/// Eliminate generators that occur exactly once in some relator, always
/// choosing the candidate of least projected growth; then renumber the
/// surviving generators densely.
pub fn tietze_simplify(pres: &GroupPresentation) -> GroupPresentation {
    let mut relators = clean(pres.relators().to_vec());
    let mut alive: Vec<bool> = vec![true; pres.ngens() + 1];

    loop {
        relators = subword_pass(relators);
        // occurrence counts per generator
        let mut total: BTreeMap<i32, usize> = BTreeMap::new();
        for rel in &relators {
            for &x in rel {
                *total.entry(x.abs()).or_insert(0) += 1;
            }
        }
        // candidates: (growth, generator, relator index)
        let mut best: Option<(i64, i32, usize)> = None;
        for (ri, rel) in relators.iter().enumerate() {
            let mut counts: BTreeMap<i32, usize> = BTreeMap::new();
            for &x in rel {
                *counts.entry(x.abs()).or_insert(0) += 1;
            }
            for (&g, &c) in &counts {
                if c != 1 {
                    continue;
                }
                let occ = total[&g] as i64;
                let growth = (rel.len() as i64 - 1) * (occ - 1) - rel.len() as i64 - occ;
                let cand = (growth, g, ri);
                if best.is_none_or(|b| cand < b) {
                    best = Some(cand);
                }
            }
        }
        let Some((_, g, ri)) = best else { break };
        let rel = relators[ri].clone();
        let i = rel.iter().position(|&x| x.abs() == g).unwrap();
        // rotate so the single occurrence leads: g^e · rest = 1
        let mut rot = rel.clone();
        rot.rotate_left(i);
        let rest = &rot[1..];
        // g = rest^{-1} when the occurrence is positive, rest when negative
        let replacement: Vec<i32> = if rot[0] > 0 {
            rest.iter().rev().map(|&x| -x).collect()
        } else {
            rest.to_vec()
        };
        let mut next = Vec::with_capacity(relators.len() - 1);
        for (rj, r) in relators.iter().enumerate() {
            if rj == ri {
                continue;
            }
            next.push(substitute(r, g, &replacement));
        }
        relators = clean(next);
        alive[g as usize] = false;
    }

    // renumber densely, keeping at least one generator for the trivial group
    let mut mapping = vec![0i32; pres.ngens() + 1];
    let mut next = 0i32;
    for g in 1..=pres.ngens() {
        if alive[g] {
            next += 1;
            mapping[g] = next;
        }
    }
    if next == 0 {
        // all generators eliminated: trivial group as <a | a>
        return GroupPresentation::new(1, vec![vec![1]]).unwrap();
    }
    let relators: Vec<Vec<i32>> = relators
        .iter()
        .map(|rel| rel.iter().map(|&x| x.signum() * mapping[x.unsigned_abs() as usize]).collect())
        .collect();
    GroupPresentation::new(next as usize, relators).unwrap()
}
