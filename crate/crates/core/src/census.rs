//! Exact simple-cycle counting up to a length cap.
//!
//! A cycle is found exactly once: it is grown from its minimum node, only
//! through larger nodes, and closed only when the second node is smaller than
//! the last one. Branches that cannot return to the root within the cap are
//! cut using breadth-first distances inside the subgraph of nodes `>= root`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Girth, Graph};
use crate::spectral::closed_walk_counts;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("budget of {budget} steps exceeded")]
    BudgetExceeded { budget: u64, partial: CycleCensus },
    #[error("cross-check needs k equal to the finite girth ({girth}), got {k}")]
    CrossCheckPrecondition { k: usize, girth: Girth },
    #[error("could not build worker pool: {0}")]
    ThreadPool(String),
}

/// Multiplicity of simple cycles for every length `3..=max_len`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleCensus {
    max_len: usize,
    counts: BTreeMap<usize, u64>,
}

impl CycleCensus {
    fn from_counts(max_len: usize, per_length: &[u64]) -> Self {
        let counts = (3..=max_len)
            .map(|len| (len, per_length.get(len).copied().unwrap_or(0)))
            .collect();
        CycleCensus { max_len, counts }
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Count for `len`; zero outside `3..=max_len`.
    pub fn count(&self, len: usize) -> u64 {
        self.counts.get(&len).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// All `(length, count)` pairs including zeros.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().map(|(&l, &c)| (l, c))
    }

    /// Shortest counted length, which is the girth whenever it is `<= max_len`.
    pub fn shortest(&self) -> Option<usize> {
        self.iter().find(|&(_, c)| c > 0).map(|(l, _)| l)
    }

    /// Pointwise sum; both censuses must share a cap.
    pub fn merged(&self, other: &CycleCensus) -> CycleCensus {
        assert_eq!(self.max_len, other.max_len, "census caps differ");
        let counts = self
            .counts
            .iter()
            .map(|(&l, &c)| (l, c + other.count(l)))
            .collect();
        CycleCensus {
            max_len: self.max_len,
            counts,
        }
    }

    /// `len count` lines from the shortest counted length to the cap, zeros
    /// included.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        if let Some(start) = self.shortest() {
            for len in start..=self.max_len {
                out.push_str(&format!("{len} {}\n", self.count(len)));
            }
        }
        out
    }
}

impl fmt::Display for CycleCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_lines())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusOptions {
    pub max_len: usize,
    /// Abort after this many path extensions.
    pub budget: Option<u64>,
    /// Worker count; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl CensusOptions {
    pub fn new(max_len: usize) -> Self {
        CensusOptions {
            max_len,
            budget: None,
            threads: None,
        }
    }
}

/// Exact census without a step budget.
pub fn count_cycles(g: &Graph, max_len: usize) -> CycleCensus {
    match count_cycles_with(g, &CensusOptions::new(max_len)) {
        Ok(c) => c,
        Err(CensusError::ThreadPool(e)) => panic!("worker pool: {e}"),
        Err(e) => unreachable!("unbudgeted census failed: {e}"),
    }
}

pub fn count_cycles_with(g: &Graph, opts: &CensusOptions) -> Result<CycleCensus, CensusError> {
    let run = || census_parallel(g, opts.max_len, opts.budget);
    match opts.threads {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| CensusError::ThreadPool(e.to_string()))?
            .install(run),
        None => run(),
    }
}

const BUDGET_FLUSH: u64 = 1 << 12;

struct Budget {
    limit: u64,
    used: AtomicU64,
    exhausted: AtomicBool,
}

impl Budget {
    /// Adds `steps`; false once the limit has been passed.
    fn charge(&self, steps: u64) -> bool {
        let used = self.used.fetch_add(steps, Ordering::Relaxed) + steps;
        if used > self.limit {
            self.exhausted.store(true, Ordering::Relaxed);
        }
        !self.exhausted.load(Ordering::Relaxed)
    }
}

fn census_parallel(
    g: &Graph,
    max_len: usize,
    budget: Option<u64>,
) -> Result<CycleCensus, CensusError> {
    let n = g.node_count();
    let budget = budget.map(|limit| Budget {
        limit,
        used: AtomicU64::new(0),
        exhausted: AtomicBool::new(false),
    });
    let per_root: Vec<Vec<u64>> = if max_len < 3 {
        Vec::new()
    } else {
        (0..n)
            .into_par_iter()
            .map(|root| RootSearch::new(g, root, max_len, budget.as_ref()).run())
            .collect()
    };
    let mut totals = vec![0u64; max_len + 1];
    for counts in &per_root {
        for (t, c) in totals.iter_mut().zip(counts) {
            *t += c;
        }
    }
    let census = CycleCensus::from_counts(max_len, &totals);
    match budget {
        Some(b) if b.exhausted.load(Ordering::Relaxed) => Err(CensusError::BudgetExceeded {
            budget: b.limit,
            partial: census,
        }),
        _ => Ok(census),
    }
}

/// Breadth-first distances from `root` using only nodes `>= root`.
fn distances_above(g: &Graph, root: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.node_count()];
    dist[root] = 0;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if y > root && dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

struct RootSearch<'a> {
    g: &'a Graph,
    root: usize,
    max_len: usize,
    dist: Vec<usize>,
    on_path: Vec<bool>,
    counts: Vec<u64>,
    budget: Option<&'a Budget>,
    pending_steps: u64,
    stopped: bool,
}

impl<'a> RootSearch<'a> {
    fn new(g: &'a Graph, root: usize, max_len: usize, budget: Option<&'a Budget>) -> Self {
        RootSearch {
            g,
            root,
            max_len,
            dist: distances_above(g, root),
            on_path: vec![false; g.node_count()],
            counts: vec![0; max_len + 1],
            budget,
            pending_steps: 0,
            stopped: false,
        }
    }

    fn run(mut self) -> Vec<u64> {
        let root = self.root;
        self.on_path[root] = true;
        for &second in self.g.neighbors(root) {
            if second > root && !self.stopped {
                self.on_path[second] = true;
                self.extend(second, second, 1);
                self.on_path[second] = false;
            }
        }
        if let Some(b) = self.budget {
            b.charge(self.pending_steps);
        }
        self.counts
    }

    /// `tip` is the path end, `edges` the path length so far.
    fn extend(&mut self, second: usize, tip: usize, edges: usize) {
        if let Some(b) = self.budget {
            self.pending_steps += 1;
            if self.pending_steps == BUDGET_FLUSH {
                self.pending_steps = 0;
                if !b.charge(BUDGET_FLUSH) {
                    self.stopped = true;
                }
            }
            if self.stopped {
                return;
            }
        }
        let g = self.g;
        for &next in g.neighbors(tip) {
            if next == self.root {
                if edges >= 2 && second < tip {
                    self.counts[edges + 1] += 1;
                }
                continue;
            }
            if next < self.root || self.on_path[next] {
                continue;
            }
            let d = self.dist[next];
            if d == usize::MAX || edges + 1 + d > self.max_len {
                continue;
            }
            self.on_path[next] = true;
            self.extend(second, next, edges + 1);
            self.on_path[next] = false;
        }
    }
}

/// A cycle as a node sequence that starts at its minimum node, with the
/// second node smaller than the last.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCycle(Vec<usize>);

impl CanonicalCycle {
    /// Canonicalizes a closed node sequence (without repeating the start).
    pub fn from_sequence(g: &Graph, nodes: &[usize]) -> Option<Self> {
        let k = nodes.len();
        if k < 3 {
            return None;
        }
        let mut seen = std::collections::HashSet::new();
        if !nodes.iter().all(|&v| v < g.node_count() && seen.insert(v)) {
            return None;
        }
        if !(0..k).all(|i| g.has_edge(nodes[i], nodes[(i + 1) % k])) {
            return None;
        }
        let start = (0..k).min_by_key(|&i| nodes[i]).expect("non-empty");
        let mut seq: Vec<usize> = (0..k).map(|i| nodes[(start + i) % k]).collect();
        if seq[1] > seq[k - 1] {
            seq[1..].reverse();
        }
        Some(CanonicalCycle(seq))
    }

    pub fn nodes(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Lazily yields every simple cycle of length `<= max_len` once, in
/// lexicographic order of canonical sequences.
pub fn enumerate_cycles(g: &Graph, max_len: usize) -> CycleIter<'_> {
    CycleIter {
        g,
        max_len,
        root: 0,
        dist: Vec::new(),
        path: Vec::new(),
        cursor: Vec::new(),
        on_path: vec![false; g.node_count()],
        pending_close: false,
    }
}

pub struct CycleIter<'a> {
    g: &'a Graph,
    max_len: usize,
    root: usize,
    dist: Vec<usize>,
    path: Vec<usize>,
    /// Next neighbor position to try, per path node.
    cursor: Vec<usize>,
    on_path: Vec<bool>,
    /// The current path closes into a cycle that has not been yielded yet.
    pending_close: bool,
}

impl CycleIter<'_> {
    fn closes(&self) -> bool {
        let k = self.path.len();
        k >= 3 && self.path[1] < self.path[k - 1] && self.g.has_edge(self.path[k - 1], self.root)
    }

    fn push(&mut self, v: usize) {
        self.on_path[v] = true;
        self.path.push(v);
        self.cursor.push(0);
        self.pending_close = self.closes();
    }
}

impl Iterator for CycleIter<'_> {
    type Item = CanonicalCycle;

    fn next(&mut self) -> Option<CanonicalCycle> {
        if self.max_len < 3 {
            return None;
        }
        loop {
            if self.path.is_empty() {
                if self.root >= self.g.node_count() {
                    return None;
                }
                self.dist = distances_above(self.g, self.root);
                let root = self.root;
                self.push(root);
            }
            if self.pending_close {
                self.pending_close = false;
                return Some(CanonicalCycle(self.path.clone()));
            }
            let depth = self.path.len() - 1;
            let tip = self.path[depth];
            let neighbors = self.g.neighbors(tip);
            let mut advanced = false;
            while self.cursor[depth] < neighbors.len() {
                let next = neighbors[self.cursor[depth]];
                self.cursor[depth] += 1;
                let d = self.dist[next];
                if next <= self.root
                    || self.on_path[next]
                    || d == usize::MAX
                    || depth + 1 + d > self.max_len
                {
                    continue;
                }
                self.push(next);
                advanced = true;
                break;
            }
            if !advanced {
                let v = self.path.pop().expect("non-empty path");
                self.cursor.pop();
                self.on_path[v] = false;
                if self.path.is_empty() {
                    self.root += 1;
                }
            }
        }
    }
}

/// Outcome of comparing the trace route with the enumerated girth cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub girth: usize,
    /// `tr(A^g)`.
    pub closed_walks: BigInt,
    /// Closed `g`-walks whose backtracking reduction is empty.
    pub tree_like_walks: BigInt,
    /// `(closed_walks - tree_like_walks) / 2g`.
    pub derived_cycles: BigInt,
    pub enumerated_cycles: u64,
    pub agrees: bool,
}

/// Recovers `N_g` from `tr(A^g)` and compares it with the census.
///
/// At length `g` a closed walk either runs once around a `g`-cycle (`2g`
/// walks per cycle) or reduces to nothing by cancelling backtracks. The
/// latter are counted in the universal cover by an excursion recurrence over
/// directed edges.
pub fn census_cross_check(g: &Graph, k: usize) -> Result<CrossCheck, CensusError> {
    let girth = g.girth();
    if girth != Girth::Finite(k) {
        return Err(CensusError::CrossCheckPrecondition { k, girth });
    }
    let closed_walks = closed_walk_counts(g, k)
        .get(k)
        .cloned()
        .expect("k >= 3 was requested");
    let tree_like_walks = tree_like_closed_walks(g, k);
    let remainder = &closed_walks - &tree_like_walks;
    let divisor = BigInt::from(2 * k);
    let derived_cycles = &remainder / &divisor;
    let enumerated_cycles = count_cycles(g, k).count(k);
    let agrees =
        (&remainder % &divisor).is_zero() && derived_cycles.to_u64() == Some(enumerated_cycles);
    Ok(CrossCheck {
        girth: k,
        closed_walks,
        tree_like_walks,
        derived_cycles,
        enumerated_cycles,
        agrees,
    })
}

/// Total number of closed walks of length `len` in the universal cover,
/// summed over base nodes.
fn tree_like_closed_walks(g: &Graph, len: usize) -> BigInt {
    if len % 2 == 1 {
        return BigInt::zero();
    }
    let half = len / 2;
    // Directed edge (from -> to) has index into `arcs`.
    let arcs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .flat_map(|&(u, v)| [(u, v), (v, u)])
        .collect();
    let arc_index: std::collections::HashMap<(usize, usize), usize> =
        arcs.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    // branch[j][arc] = excursions of length 2j from arc.to staying away from arc.from
    let mut branch: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1); arcs.len()]];
    for j in 1..half {
        let row = arcs
            .iter()
            .map(|&(from, to)| {
                let mut total = BigInt::zero();
                for &child in g.neighbors(to) {
                    if child == from {
                        continue;
                    }
                    let down = arc_index[&(to, child)];
                    for a in 0..j {
                        total += &branch[a][down] * &branch[j - 1 - a][arc_index[&(from, to)]];
                    }
                }
                total
            })
            .collect();
        branch.push(row);
    }
    let mut total = BigInt::zero();
    for root in 0..g.node_count() {
        // rooted[j] = closed walks of length 2j from root in the cover
        let mut rooted = vec![BigInt::from(1)];
        for j in 1..=half {
            let mut s = BigInt::zero();
            for &child in g.neighbors(root) {
                let down = arc_index[&(root, child)];
                for a in 0..j {
                    s += &branch[a][down] * &rooted[j - 1 - a];
                }
            }
            rooted.push(s);
        }
        total += &rooted[half];
    }
    total
}
