//! Exact `M(n, k)` by branch and bound.
//!
//! Pairs are colored in lexicographic order. Colors are canonical by first
//! use: the i-th distinct color to appear is color i, so each coloring is
//! visited once per relabeling class. A union-find per color with rollback
//! tracks component edge counts; since components only grow, a branch whose
//! current largest component already reaches the incumbent is cut.
//!
//! The search runs in two phases. Phase one finds the optimum value, split
//! over canonical prefixes of the first few pairs and shared through an
//! atomic minimum. Phase two walks the tree in order and stops at the first
//! coloring attaining that value, so the witness does not depend on thread
//! scheduling.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::coloring::{max_mono_component, pairs, Color, ColoredCompleteGraph};
use crate::constructions::{affine_coloring, is_prime, k3_coloring, K3_MIN_N};
use crate::dsu::RollbackUnionFind;
use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_n: usize,
    pub max_k: usize,
    pub jobs: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            max_n: 7,
            max_k: 3,
            jobs: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub m: u64,
    /// A coloring whose largest monochromatic component has exactly `m` edges.
    pub witness: ColoredCompleteGraph,
    /// Nodes expanded in phase one. Varies with `jobs`.
    pub nodes: u64,
}

pub fn brute_force_m(n: usize, k: usize) -> Result<SearchResult> {
    brute_force_m_with(n, k, &SearchConfig::default())
}

pub fn brute_force_m_with(n: usize, k: usize, config: &SearchConfig) -> Result<SearchResult> {
    if k == 0 {
        return Err(invalid("k must be positive"));
    }
    if n > config.max_n || k > config.max_k {
        return Err(Error::SearchTooLarge {
            n,
            k,
            max_n: config.max_n,
            max_k: config.max_k,
        });
    }
    if n < 2 {
        return Ok(SearchResult {
            m: 0,
            witness: ColoredCompleteGraph::uncolored(n, k)?,
            nodes: 0,
        });
    }

    let tree = Tree::new(n, k);
    let incumbent = AtomicU64::new(initial_upper_bound(n, k)?);
    let depth = tree.pairs.len().min(6);
    let prefixes = tree.canonical_prefixes(depth);
    let run = |prefix: &Vec<Color>| -> u64 {
        let mut state = tree.state();
        let mut current = 0;
        for (i, &c) in prefix.iter().enumerate() {
            current = current.max(state.add(&tree, i, c));
            if current >= incumbent.load(Ordering::Relaxed) {
                return 0;
            }
        }
        let used = prefix.iter().copied().max().unwrap_or(0);
        let mut nodes = 0;
        tree.descend(&mut state, prefix.len(), used, current, &incumbent, &mut nodes);
        nodes
    };
    let nodes: u64 = if config.jobs <= 1 {
        prefixes.iter().map(run).sum()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| invalid(format!("thread pool: {e}")))?;
        pool.install(|| prefixes.par_iter().map(run).sum())
    };

    let m = incumbent.into_inner();
    let colors = tree
        .first_within(m)
        .expect("the optimum is attained by some coloring");
    let witness = ColoredCompleteGraph::from_pair_colors(n, k, colors)?;
    debug_assert_eq!(max_mono_component(&witness).map(|(_, c)| c.edge_count), Some(m));
    Ok(SearchResult { m, witness, nodes })
}

/// Best value among the colorings known without search.
fn initial_upper_bound(n: usize, k: usize) -> Result<u64> {
    let mut best = pairs(n);
    let mut consider = |g: ColoredCompleteGraph| {
        if let Some((_, c)) = max_mono_component(&g) {
            best = best.min(c.edge_count);
        }
    };
    if k == 3 && n >= K3_MIN_N {
        consider(k3_coloring(n)?);
    }
    let q = k - 1;
    if is_prime(q) && n >= q * q {
        consider(affine_coloring(q, n)?);
    }
    Ok(best)
}

struct Tree {
    n: usize,
    k: usize,
    pairs: Vec<(usize, usize)>,
}

struct State {
    forests: Vec<RollbackUnionFind>,
    colors: Vec<Color>,
}

impl State {
    fn add(&mut self, tree: &Tree, idx: usize, c: Color) -> u64 {
        let (u, v) = tree.pairs[idx];
        self.colors.push(c);
        self.forests[c as usize - 1].add_edge(u, v)
    }

    fn remove(&mut self) {
        let c = self.colors.pop().expect("remove after add");
        self.forests[c as usize - 1].undo();
    }
}

impl Tree {
    fn new(n: usize, k: usize) -> Self {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self { n, k, pairs }
    }

    fn state(&self) -> State {
        State {
            forests: (0..self.k).map(|_| RollbackUnionFind::new(self.n)).collect(),
            colors: Vec::with_capacity(self.pairs.len()),
        }
    }

    /// Colors allowed at the next pair when `used` distinct colors appeared.
    fn choices(&self, used: Color) -> std::ops::RangeInclusive<Color> {
        1..=((used as usize + 1).min(self.k) as Color)
    }

    fn canonical_prefixes(&self, depth: usize) -> Vec<Vec<Color>> {
        let mut out = vec![Vec::new()];
        for _ in 0..depth {
            out = out
                .into_iter()
                .flat_map(|p: Vec<Color>| {
                    let used = p.iter().copied().max().unwrap_or(0);
                    self.choices(used).map(move |c| {
                        let mut q = p.clone();
                        q.push(c);
                        q
                    })
                })
                .collect();
        }
        out
    }

    fn descend(&self, state: &mut State, idx: usize, used: Color, current: u64, best: &AtomicU64, nodes: &mut u64) {
        if idx == self.pairs.len() {
            best.fetch_min(current, Ordering::Relaxed);
            return;
        }
        for c in self.choices(used) {
            *nodes += 1;
            let next = current.max(state.add(self, idx, c));
            if next < best.load(Ordering::Relaxed) {
                self.descend(state, idx + 1, used.max(c), next, best, nodes);
            }
            state.remove();
        }
    }

    /// First canonical coloring, in tree order, whose largest component has
    /// at most `limit` edges.
    fn first_within(&self, limit: u64) -> Option<Vec<Color>> {
        fn go(tree: &Tree, state: &mut State, idx: usize, used: Color, limit: u64) -> bool {
            if idx == tree.pairs.len() {
                return true;
            }
            for c in tree.choices(used) {
                if state.add(tree, idx, c) <= limit && go(tree, state, idx + 1, used.max(c), limit) {
                    return true;
                }
                state.remove();
            }
            false
        }
        let mut state = self.state();
        // Largest-so-far never decreases, so checking each new edge suffices.
        go(self, &mut state, 0, 0, limit).then_some(state.colors)
    }
}
