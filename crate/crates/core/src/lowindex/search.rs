//! Depth-first enumeration of standardized coset tables.
//!
//! A partial table is extended at its first undefined entry in row-major
//! order, either by an existing coset whose inverse slot is free or by a new
//! coset. Each definition is followed by relator scanning, which deduces
//! forced entries or detects a contradiction, and by a canonicity test: the
//! branch is cut as soon as re-basing the partial table at another coset
//! yields a lexicographically smaller standardized prefix. Complete tables
//! that survive are exactly the least representatives of the conjugacy
//! classes of subgroups of index at most `max_index`.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::table::{column, CosetTable, UNDEF};
use super::SearchConfig;
use crate::error::{Error, Result};
use crate::fpgroup::word;
use crate::fpgroup::FpPresentation;

struct Problem {
    max_index: usize,
    generators: usize,
    cols: usize,
    /// Cyclic rotations of every relator and its inverse, as columns,
    /// grouped by their first column.
    rotations: Vec<Vec<Vec<usize>>>,
}

#[derive(Clone)]
struct Partial {
    entries: Vec<u32>,
    cosets: usize,
}

struct Shared<'a> {
    cfg: &'a SearchConfig,
    nodes: AtomicU64,
    stop: AtomicBool,
    start: Instant,
}

impl Problem {
    fn new(p: &FpPresentation, max_index: usize) -> Self {
        let generators = p.num_generators();
        let cols = 2 * generators;
        let mut rotations: Vec<Vec<Vec<usize>>> = vec![Vec::new(); cols];
        let mut seen = std::collections::BTreeSet::new();
        for r in p.relators() {
            let r = word::cyclic_reduce(r);
            if r.is_empty() {
                continue;
            }
            for w in [r.clone(), word::inverse(&r)] {
                for s in 0..w.len() {
                    let rot: Vec<usize> =
                        w[s..].iter().chain(&w[..s]).map(|&l| column(l)).collect();
                    if seen.insert(rot.clone()) {
                        rotations[rot[0]].push(rot);
                    }
                }
            }
        }
        Problem {
            max_index,
            generators,
            cols,
            rotations,
        }
    }

    #[inline]
    fn get(&self, t: &Partial, coset: usize, col: usize) -> u32 {
        t.entries[coset * self.cols + col]
    }

    /// Sets `coset·col = target` and the inverse entry. False on conflict.
    #[inline]
    fn set(
        &self,
        t: &mut Partial,
        coset: usize,
        col: usize,
        target: usize,
        queue: &mut Vec<(usize, usize)>,
    ) -> bool {
        let a = coset * self.cols + col;
        let b = target * self.cols + (col ^ 1);
        match (t.entries[a], t.entries[b]) {
            (UNDEF, UNDEF) => {
                t.entries[a] = target as u32;
                t.entries[b] = coset as u32;
                queue.push((coset, col));
                true
            }
            (x, y) => x == target as u32 && y == coset as u32,
        }
    }

    /// Scans all relator rotations through newly defined entries until no
    /// more deductions follow. False when some relator cannot close.
    fn deduce(&self, t: &mut Partial, queue: &mut Vec<(usize, usize)>) -> bool {
        while let Some((coset, col)) = queue.pop() {
            for rot in &self.rotations[col] {
                let len = rot.len();
                let mut f = coset;
                let mut i = 0;
                while i < len {
                    let n = self.get(t, f, rot[i]);
                    if n == UNDEF {
                        break;
                    }
                    f = n as usize;
                    i += 1;
                }
                if i == len {
                    if f != coset {
                        return false;
                    }
                    continue;
                }
                let mut b = coset;
                let mut j = len;
                while j > i {
                    let n = self.get(t, b, rot[j - 1] ^ 1);
                    if n == UNDEF {
                        break;
                    }
                    b = n as usize;
                    j -= 1;
                }
                if j == i {
                    if f != b {
                        return false;
                    }
                } else if j == i + 1 && !self.set(t, f, rot[i], b, queue) {
                    return false;
                }
            }
        }
        true
    }

    /// False when re-basing at some coset gives a smaller standardized
    /// prefix than the table itself.
    fn is_canonical(&self, t: &Partial) -> bool {
        let n = t.cosets;
        let mut map = vec![UNDEF; n];
        let mut inv = vec![0usize; n];
        for beta in 1..n {
            map.iter_mut().for_each(|m| *m = UNDEF);
            map[beta] = 0;
            inv[0] = beta;
            let mut next = 1;
            'compare: for row in 0..n {
                if row >= next {
                    break;
                }
                let old = inv[row];
                for col in 0..self.cols {
                    let a = self.get(t, old, col);
                    let b = self.get(t, row, col);
                    if a == UNDEF || b == UNDEF {
                        break 'compare;
                    }
                    let mut m = map[a as usize];
                    if m == UNDEF {
                        m = next as u32;
                        map[a as usize] = m;
                        inv[next] = a as usize;
                        next += 1;
                    }
                    if m < b {
                        return false;
                    }
                    if m > b {
                        break 'compare;
                    }
                }
            }
        }
        true
    }

    fn first_gap(&self, t: &Partial) -> Option<(usize, usize)> {
        let limit = t.cosets * self.cols;
        t.entries[..limit]
            .iter()
            .position(|&e| e == UNDEF)
            .map(|k| (k / self.cols, k % self.cols))
    }

    /// Children of a partial table, each already deduced and canonical.
    fn children(&self, t: &Partial, row: usize, col: usize) -> Vec<Partial> {
        let mut out = Vec::new();
        let mut queue = Vec::new();
        for s in 0..t.cosets {
            if self.get(t, s, col ^ 1) != UNDEF {
                continue;
            }
            let mut c = t.clone();
            queue.clear();
            if self.set(&mut c, row, col, s, &mut queue)
                && self.deduce(&mut c, &mut queue)
                && self.is_canonical(&c)
            {
                out.push(c);
            }
        }
        if t.cosets < self.max_index {
            let mut c = t.clone();
            let s = c.cosets;
            c.cosets += 1;
            queue.clear();
            if self.set(&mut c, row, col, s, &mut queue)
                && self.deduce(&mut c, &mut queue)
                && self.is_canonical(&c)
            {
                out.push(c);
            }
        }
        out
    }

    fn finish(&self, t: &Partial) -> CosetTable {
        CosetTable::from_raw(
            t.cosets,
            self.generators,
            t.entries[..t.cosets * self.cols].to_vec(),
        )
    }

    fn tick(&self, shared: &Shared) -> Result<()> {
        let n = shared.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let over_nodes = n > shared.cfg.node_budget;
        let over_time = n.is_multiple_of(4096)
            && shared
                .cfg
                .time_limit
                .is_some_and(|lim| shared.start.elapsed() > lim);
        if over_nodes || over_time || shared.stop.load(Ordering::Relaxed) {
            shared.stop.store(true, Ordering::Relaxed);
            return Err(Error::BudgetExhausted {
                index: self.max_index,
                nodes: n,
            });
        }
        Ok(())
    }

    fn dfs(&self, t: Partial, shared: &Shared, out: &mut Vec<CosetTable>) -> Result<()> {
        self.tick(shared)?;
        match self.first_gap(&t) {
            None => out.push(self.finish(&t)),
            Some((row, col)) => {
                for c in self.children(&t, row, col) {
                    self.dfs(c, shared, out)?;
                }
            }
        }
        Ok(())
    }
}

/// All canonical complete coset tables of index `1..=max_index`, sorted by
/// index and then lexicographically.
pub(super) fn enumerate(
    p: &FpPresentation,
    max_index: usize,
    cfg: &SearchConfig,
) -> Result<Vec<CosetTable>> {
    let problem = Problem::new(p, max_index);
    let shared = Shared {
        cfg,
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        start: Instant::now(),
    };
    let mut root = Partial {
        entries: vec![UNDEF; max_index * problem.cols],
        cosets: 1,
    };
    let mut queue = Vec::new();
    // a relator with no letters never constrains; nothing to deduce yet
    let _ = problem.deduce(&mut root, &mut queue);

    let mut done = Vec::new();
    let mut frontier = vec![root];
    if cfg.parallel {
        // Expand breadth-first until there is enough work to share.
        while !frontier.is_empty() && frontier.len() < 64 {
            let mut next = Vec::new();
            for t in frontier {
                problem.tick(&shared)?;
                match problem.first_gap(&t) {
                    None => done.push(problem.finish(&t)),
                    Some((row, col)) => next.extend(problem.children(&t, row, col)),
                }
            }
            frontier = next;
        }
        let parts: Vec<Result<Vec<CosetTable>>> = frontier
            .into_par_iter()
            .map(|t| {
                let mut out = Vec::new();
                problem.dfs(t, &shared, &mut out).map(|_| out)
            })
            .collect();
        for part in parts {
            done.extend(part?);
        }
    } else {
        for t in frontier {
            problem.dfs(t, &shared, &mut done)?;
        }
    }
    done.sort();
    Ok(done)
}
