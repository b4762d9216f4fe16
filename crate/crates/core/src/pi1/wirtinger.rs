//! Wirtinger presentations from PD codes, with peripheral words.
//!
//! Arcs (over-strand runs between underpasses) give generators; each
//! crossing gives the conjugation relator  u_out = o^ε u_in o^{−ε},
//! where o is the over arc and ε the crossing sign.  The longitude is the
//! product of o^ε over the knot walk, corrected by meridian^{−writhe} so
//! that it abelianizes to zero.

use super::pd::PdCode;
use super::{free_reduce, GroupPresentation, Pi1Error};

/// Wirtinger presentation plus the peripheral pair, based on the arc of
/// edge 1.
#[derive(Debug, Clone)]
pub struct Peripheral {
    pub presentation: GroupPresentation,
    pub meridian: Vec<i32>,
    pub longitude: Vec<i32>,
    pub writhe: i64,
}

struct Crossing {
    under_in: usize,
    under_out: usize,
    over_in: usize,
    sign: i32,
}

fn orient(pd: &PdCode) -> Result<Vec<Crossing>, Pi1Error> {
    let n = pd.edge_count();
    let succ = |e: usize| e % n + 1;
    let mut out = Vec::with_capacity(pd.crossing_count());
    for &[a, b, c, d] in pd.crossings() {
        if succ(a) != c {
            return Err(Pi1Error::MultiComponent {
                msg: format!("under-out {c} does not follow under-in {a}"),
            });
        }
        // over strand occupies slots b and d; its direction follows the
        // walk numbering
        let (over_in, sign) = if succ(d) == b {
            (d, 1)
        } else if succ(b) == d {
            (b, -1)
        } else {
            return Err(Pi1Error::MultiComponent {
                msg: format!("cannot orient over strand through ({a},{b},{c},{d})"),
            });
        };
        out.push(Crossing { under_in: a, under_out: c, over_in, sign });
    }
    Ok(out)
}

/// Union of edges into arcs: the over strand keeps its arc through a
/// crossing, so over-in and over-out edges are identified.
fn arc_classes(pd: &PdCode, crossings: &[Crossing]) -> Vec<usize> {
    let n = pd.edge_count();
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let succ = |e: usize| e % n + 1;
    for c in crossings {
        let a = find(&mut parent, c.over_in);
        let b = find(&mut parent, succ(c.over_in));
        parent[a] = b;
    }
    // map each representative to a dense 1-based generator index
    let mut gen_of = vec![0usize; n + 1];
    let mut next = 0usize;
    let mut gens = vec![0usize; n + 1];
    for e in 1..=n {
        let r = find(&mut parent, e);
        if gen_of[r] == 0 {
            next += 1;
            gen_of[r] = next;
        }
        gens[e] = gen_of[r];
    }
    gens
}

/// Wirtinger presentation of a single-component PD code.
pub fn wirtinger(pd: &PdCode) -> Result<Peripheral, Pi1Error> {
    if pd.crossing_count() == 0 {
        // unknot: one generator, no relators, trivial longitude
        return Ok(Peripheral {
            presentation: GroupPresentation::new(1, Vec::new()).unwrap(),
            meridian: vec![1],
            longitude: Vec::new(),
            writhe: 0,
        });
    }
    let crossings = orient(pd)?;
    let gens = arc_classes(pd, &crossings);
    let ngens = *gens.iter().max().unwrap();
    debug_assert_eq!(ngens, pd.crossing_count());
    let g = |e: usize| gens[e] as i32;

    let mut relators = Vec::with_capacity(crossings.len());
    for c in &crossings {
        let (u_in, u_out, o) = (g(c.under_in), g(c.under_out), g(c.over_in));
        // u_out^{-1} o^{ε} u_in o^{-ε}
        relators.push(free_reduce(&[-u_out, c.sign * o, u_in, -c.sign * o]));
    }

    // longitude: walk edges 1..2c in order; passing under a crossing of
    // sign ε with over arc o contributes o^{−ε}, and the writhe correction
    // μ^w makes the total abelianize to zero.  This is the convention that
    // keeps the longitude in the peripheral subgroup for the relators
    // built above; tests check [λ, μ] = 1 in permutation representations.
    let mut longitude = Vec::new();
    let mut writhe: i64 = 0;
    for e in 1..=pd.edge_count() {
        if let Some(c) = crossings.iter().find(|c| c.under_in == e) {
            longitude.push(-c.sign * g(c.over_in));
            writhe += c.sign as i64;
        }
    }
    let meridian = g(1);
    for _ in 0..writhe.unsigned_abs() {
        longitude.push(if writhe > 0 { meridian } else { -meridian });
    }
    let longitude = free_reduce(&longitude);
    debug_assert_eq!(
        longitude.iter().map(|&x| x.signum() as i64).sum::<i64>(),
        0,
        "longitude must abelianize to zero"
    );

    Ok(Peripheral {
        presentation: GroupPresentation::new(ngens, relators).unwrap(),
        meridian: vec![meridian],
        longitude,
        writhe,
    })
}

/// Adjoin the filling relator meridian^slope · longitude; slope 0 kills the
/// longitude alone.
pub fn surgery_presentation(peripheral: &Peripheral, slope: i64) -> GroupPresentation {
    let mut relator = Vec::new();
    let m = peripheral.meridian[0];
    for _ in 0..slope.unsigned_abs() {
        relator.push(if slope > 0 { m } else { -m });
    }
    relator.extend_from_slice(&peripheral.longitude);
    let mut relators = peripheral.presentation.relators().to_vec();
    relators.push(free_reduce(&relator));
    GroupPresentation::new(peripheral.presentation.ngens(), relators).unwrap()
}
