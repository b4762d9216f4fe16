//! Low-index subgroup enumeration by systematic coset-table backtracking.
//!
//! Complete transitive coset tables in standard form correspond to
//! subgroups of index ≤ max_index; tables canonical under basepoint change
//! (first-in-class) correspond to conjugacy classes, which in turn count
//! connected covers of the presented group's space.  Deductions are
//! processed incrementally from each newly defined table cell; partial
//! tables are pruned whenever some renumbering is conclusively
//! lexicographically smaller, and every complete table is re-checked
//! exactly.  Relators beyond `defer_over` letters are not used for
//! deduction; they are verified on complete tables instead.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use super::{GroupPresentation, Pi1Error};

const UNDEF: u32 = u32::MAX;

/// Search knobs: index ceiling, extension-step budget, worker fan-out, and
/// the relator length above which deduction scanning is skipped.
#[derive(Debug, Clone, Copy)]
pub struct LowIndexOptions {
    pub max_index: usize,
    pub node_budget: u64,
    pub workers: usize,
    /// Relators longer than this are only checked on complete tables.
    pub defer_over: usize,
}

impl Default for LowIndexOptions {
    fn default() -> Self {
        LowIndexOptions {
            max_index: 6,
            node_budget: 100_000_000,
            workers: 1,
            defer_over: usize::MAX,
        }
    }
}

/// A completed coset table: a transitive action of the generators on
/// cosets 1..n (stored 0-based; row 0 is the base coset) satisfying every
/// relator at every coset.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CosetTable {
    n: usize,
    ncols: usize,
    cells: Vec<u32>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.n
    }

    /// Image of `coset` (0-based) under generator column `col`
    /// (2·(g−1) for g, 2·(g−1)+1 for g⁻¹).
    pub fn act(&self, coset: usize, col: usize) -> usize {
        self.cells[coset * self.ncols + col] as usize
    }

    /// Re-verify well-definedness, transitivity, and that every relator
    /// holds at every coset; independent of the search that built this.
    pub fn verify(&self, pres: &GroupPresentation) -> bool {
        if self.ncols != 2 * pres.ngens() {
            return false;
        }
        for c in 0..self.n {
            for g in 0..pres.ngens() {
                let fwd = self.act(c, 2 * g);
                if fwd >= self.n || self.act(fwd, 2 * g + 1) != c {
                    return false;
                }
                let bwd = self.act(c, 2 * g + 1);
                if bwd >= self.n || self.act(bwd, 2 * g) != c {
                    return false;
                }
            }
        }
        // transitivity from coset 0
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(c) = stack.pop() {
            for col in 0..self.ncols {
                let d = self.act(c, col);
                if !seen[d] {
                    seen[d] = true;
                    stack.push(d);
                }
            }
        }
        if !seen.iter().all(|&s| s) {
            return false;
        }
        // relators act trivially everywhere
        for rel in pres.relators() {
            for c0 in 0..self.n {
                let mut c = c0;
                for &x in rel {
                    c = self.act(c, letter_col(x));
                }
                if c != c0 {
                    return false;
                }
            }
        }
        true
    }
}

fn letter_col(x: i32) -> usize {
    2 * (x.unsigned_abs() as usize - 1) + usize::from(x < 0)
}

#[derive(Clone)]
struct Partial {
    nrows: usize,
    cells: Vec<u32>, // nrows × ncols
}

struct Searcher<'a> {
    ncols: usize,
    max_index: usize,
    rel_cols: Vec<Vec<usize>>,
    /// (relator, position) pairs per column, for incremental deductions.
    occurrences: Vec<Vec<(usize, usize)>>,
    deferred: Vec<Vec<usize>>,
    steps: &'a AtomicU64,
    budget: u64,
    exhausted: &'a AtomicBool,
}

enum Node {
    Complete(CosetTable),
    Children(Vec<Partial>),
    Dead,
}

impl<'a> Searcher<'a> {
    fn cell(&self, t: &Partial, c: usize, col: usize) -> u32 {
        t.cells[c * self.ncols + col]
    }

    fn assign(&self, t: &mut Partial, c: usize, col: usize, d: usize, queue: &mut Vec<(usize, usize)>) -> bool {
        let fwd = c * self.ncols + col;
        let bwd = d * self.ncols + (col ^ 1);
        match (t.cells[fwd], t.cells[bwd]) {
            (UNDEF, UNDEF) => {}
            (f, b) if f == d as u32 && b == c as u32 => return true, // already known
            (f, UNDEF) if f == d as u32 => {}
            (UNDEF, b) if b == c as u32 => {}
            _ => return false,
        }
        t.cells[fwd] = d as u32;
        t.cells[bwd] = c as u32;
        queue.push((c, col));
        queue.push((d, col ^ 1));
        true
    }

    /// Scan one relator from one start coset; deduce across a single gap.
    fn scan(
        &self,
        t: &mut Partial,
        c0: usize,
        rel_idx: usize,
        queue: &mut Vec<(usize, usize)>,
    ) -> bool {
        let rel = &self.rel_cols[rel_idx];
        let len = rel.len();
        let mut c = c0;
        let mut i = 0;
        while i < len {
            let d = self.cell(t, c, rel[i]);
            if d == UNDEF {
                break;
            }
            c = d as usize;
            i += 1;
        }
        if i == len {
            return c == c0;
        }
        let mut d = c0;
        let mut j = len;
        while j > i + 1 {
            let e = self.cell(t, d, rel[j - 1] ^ 1);
            if e == UNDEF {
                break;
            }
            d = e as usize;
            j -= 1;
        }
        if j == i + 1 {
            return self.assign(t, c, rel[i], d, queue);
        }
        true
    }

    /// Drain the deduction queue; false on contradiction.
    fn process(&self, t: &mut Partial, queue: &mut Vec<(usize, usize)>) -> bool {
        while let Some((c, col)) = queue.pop() {
            for &(rel_idx, pos) in &self.occurrences[col] {
                let rel = &self.rel_cols[rel_idx];
                // walk backward from position `pos` to position 0
                let mut c0 = c;
                let mut reached_start = true;
                for k in (0..pos).rev() {
                    let e = self.cell(t, c0, rel[k] ^ 1);
                    if e == UNDEF {
                        reached_start = false;
                        break;
                    }
                    c0 = e as usize;
                }
                if reached_start {
                    if !self.scan(t, c0, rel_idx, queue) {
                        return false;
                    }
                    continue;
                }
                // walk forward from just after `pos` to the end: the coset
                // at the end of the relator is the anchor
                let mut cf = self.cell(t, c, rel[pos]);
                debug_assert_ne!(cf, UNDEF);
                let mut reached_end = true;
                for &col2 in rel.iter().skip(pos + 1) {
                    let e = self.cell(t, cf as usize, col2);
                    if e == UNDEF {
                        reached_end = false;
                        break;
                    }
                    cf = e;
                }
                if reached_end && !self.scan(t, cf as usize, rel_idx, queue) {
                    return false;
                }
            }
        }
        true
    }

    /// Lexicographic first-in-class test.  Returns false when some base
    /// renumbering is conclusively smaller than the table itself.
    fn first_in_class(&self, t: &Partial) -> bool {
        let mut nu = vec![UNDEF; t.nrows];
        let mut nu_inv: Vec<u32> = Vec::with_capacity(t.nrows);
        'bases: for b in 1..t.nrows {
            nu.iter_mut().for_each(|v| *v = UNDEF);
            nu_inv.clear();
            nu[b] = 0;
            nu_inv.push(b as u32);
            for new_c in 0..t.nrows {
                if new_c >= nu_inv.len() {
                    continue 'bases; // renumbered table not yet transitive: inconclusive
                }
                let old_c = nu_inv[new_c] as usize;
                for col in 0..self.ncols {
                    let old_t = self.cell(t, old_c, col);
                    let ref_t = self.cell(t, new_c, col);
                    if old_t == UNDEF || ref_t == UNDEF {
                        continue 'bases; // inconclusive
                    }
                    let mut new_t = nu[old_t as usize];
                    if new_t == UNDEF {
                        new_t = nu_inv.len() as u32;
                        nu[old_t as usize] = new_t;
                        nu_inv.push(old_t);
                    }
                    match new_t.cmp(&ref_t) {
                        std::cmp::Ordering::Less => return false,
                        std::cmp::Ordering::Greater => continue 'bases,
                        std::cmp::Ordering::Equal => {}
                    }
                }
            }
        }
        true
    }

    fn first_undefined(&self, t: &Partial) -> Option<(usize, usize)> {
        for (i, &v) in t.cells.iter().enumerate() {
            if v == UNDEF {
                return Some((i / self.ncols, i % self.ncols));
            }
        }
        None
    }

    /// Deferred relators are only tested here, on complete tables.
    fn deferred_hold(&self, t: &Partial) -> bool {
        for rel in &self.deferred {
            for c0 in 0..t.nrows {
                let mut c = c0;
                for &col in rel {
                    c = self.cell(t, c, col) as usize;
                }
                if c != c0 {
                    return false;
                }
            }
        }
        true
    }

    fn expand(&self, t: &Partial) -> Node {
        let Some((c, col)) = self.first_undefined(t) else {
            // complete: the partial FIC test is conclusive on full tables
            if !self.deferred_hold(t) || !self.first_in_class(t) {
                return Node::Dead;
            }
            return Node::Complete(CosetTable {
                n: t.nrows,
                ncols: self.ncols,
                cells: t.cells.clone(),
            });
        };
        let mut children = Vec::new();
        let mut candidates: Vec<usize> = (0..t.nrows).collect();
        if t.nrows < self.max_index {
            candidates.push(t.nrows);
        }
        for d in candidates {
            if self.steps.fetch_add(1, Ordering::Relaxed) >= self.budget {
                self.exhausted.store(true, Ordering::Relaxed);
                return Node::Dead;
            }
            let mut child = t.clone();
            if d == child.nrows {
                child.nrows += 1;
                child.cells.extend(std::iter::repeat_n(UNDEF, self.ncols));
            }
            let mut queue = Vec::new();
            if !self.assign(&mut child, c, col, d, &mut queue) {
                continue;
            }
            if self.process(&mut child, &mut queue) && self.first_in_class(&child) {
                children.push(child);
            }
        }
        Node::Children(children)
    }

    fn dfs(&self, root: Partial, out: &mut Vec<CosetTable>) {
        let mut stack = vec![root];
        while let Some(t) = stack.pop() {
            if self.exhausted.load(Ordering::Relaxed) {
                return;
            }
            match self.expand(&t) {
                Node::Complete(table) => out.push(table),
                Node::Children(children) => stack.extend(children),
                Node::Dead => {}
            }
        }
    }
}

/// All canonical coset tables for subgroups of index ≤ max_index, sorted.
pub fn low_index_tables(
    pres: &GroupPresentation,
    opts: &LowIndexOptions,
) -> Result<Vec<CosetTable>, Pi1Error> {
    let ncols = 2 * pres.ngens();
    let mut rel_cols: Vec<Vec<usize>> = Vec::new();
    let mut deferred: Vec<Vec<usize>> = Vec::new();
    for rel in pres.relators() {
        if rel.is_empty() {
            continue;
        }
        let cols: Vec<usize> = rel.iter().map(|&x| letter_col(x)).collect();
        if cols.len() > opts.defer_over {
            deferred.push(cols);
        } else {
            rel_cols.push(cols);
        }
    }
    let mut occurrences: Vec<Vec<(usize, usize)>> = vec![Vec::new(); ncols];
    for (ri, rel) in rel_cols.iter().enumerate() {
        for (pos, &col) in rel.iter().enumerate() {
            occurrences[col].push((ri, pos));
        }
    }
    let steps = AtomicU64::new(0);
    let exhausted = AtomicBool::new(false);
    let searcher = Searcher {
        ncols,
        max_index: opts.max_index,
        rel_cols,
        occurrences,
        deferred,
        steps: &steps,
        budget: opts.node_budget,
        exhausted: &exhausted,
    };

    let root = Partial { nrows: 1, cells: vec![UNDEF; ncols] };
    let mut tables: Vec<CosetTable> = Vec::new();

    let workers = opts.workers.max(1);
    if workers == 1 {
        searcher.dfs(root, &mut tables);
    } else {
        // breadth-first split into independent subtrees, then fan out
        let mut frontier = vec![root];
        while !frontier.is_empty() && frontier.len() < workers * 8 {
            let t = frontier.remove(0);
            match searcher.expand(&t) {
                Node::Complete(table) => tables.push(table),
                Node::Children(children) => frontier.extend(children),
                Node::Dead => {}
            }
            if exhausted.load(Ordering::Relaxed) {
                break;
            }
        }
        let chunks: Vec<Vec<Partial>> = {
            let mut cs: Vec<Vec<Partial>> = (0..workers).map(|_| Vec::new()).collect();
            for (i, t) in frontier.into_iter().enumerate() {
                cs[i % workers].push(t);
            }
            cs
        };
        let results: Vec<Vec<CosetTable>> = std::thread::scope(|scope| {
            let searcher = &searcher;
            let handles: Vec<_> = chunks
                .into_iter()
                .map(|chunk| {
                    scope.spawn(move || {
                        let mut local = Vec::new();
                        for t in chunk {
                            searcher.dfs(t, &mut local);
                        }
                        local
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
        });
        for r in results {
            tables.extend(r);
        }
    }

    tables.sort();
    if exhausted.load(Ordering::Relaxed) {
        let mut partial = BTreeMap::new();
        for t in &tables {
            *partial.entry(t.index()).or_insert(0u64) += 1;
        }
        return Err(Pi1Error::BudgetExceeded { budget: opts.node_budget, partial });
    }
    debug_assert!(tables.iter().all(|t| t.verify(pres)));
    Ok(tables)
}

/// Conjugacy classes of subgroups by index, 1..=max_index.
pub fn low_index(
    pres: &GroupPresentation,
    opts: &LowIndexOptions,
) -> Result<BTreeMap<usize, u64>, Pi1Error> {
    let tables = low_index_tables(pres, opts)?;
    let mut counts: BTreeMap<usize, u64> = (1..=opts.max_index).map(|i| (i, 0)).collect();
    for t in tables {
        *counts.entry(t.index()).or_insert(0) += 1;
    }
    Ok(counts)
}
