//! Complete multipartite hosts, spanning subgraphs and their components.
//!
//! Vertex ids are 1-based and parts occupy contiguous id blocks in declaration
//! order, so `K_{2,3}` has parts `{1,2}` and `{3,4,5}`. The complete graph
//! `K_n` is the host with `n` singleton parts.

use num_rational::Ratio;

use crate::dsu::UnionFind;
use crate::error::{invalid, Error, Result};

pub type Vertex = usize;

/// A complete r-partite graph described by its part sizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultipartiteHost {
    part_sizes: Vec<usize>,
    /// `part_of[v - 1]` is the part index of vertex `v`.
    part_of: Vec<usize>,
}

impl MultipartiteHost {
    pub fn new(part_sizes: Vec<usize>) -> Result<Self> {
        if part_sizes.is_empty() {
            return Err(invalid("a host needs at least one part"));
        }
        if part_sizes.contains(&0) {
            return Err(invalid("part sizes must be positive"));
        }
        let part_of = part_sizes
            .iter()
            .enumerate()
            .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
            .collect();
        Ok(Self {
            part_sizes,
            part_of,
        })
    }

    /// `K_n`: `n` singleton parts.
    pub fn complete(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    pub fn part_count(&self) -> usize {
        self.part_sizes.len()
    }

    pub fn n(&self) -> usize {
        self.part_of.len()
    }

    /// Zero-based part index of `v`.
    pub fn part_of(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.part_of[v - 1])
    }

    /// First vertex id of each part, plus `n + 1` as a sentinel.
    pub fn part_starts(&self) -> Vec<Vertex> {
        let mut starts = Vec::with_capacity(self.part_sizes.len() + 1);
        let mut next = 1;
        for &s in &self.part_sizes {
            starts.push(next);
            next += s;
        }
        starts.push(next);
        starts
    }

    /// `(n^2 - sum |V_i|^2) / 2`.
    pub fn edge_count(&self) -> u64 {
        let n = self.n() as u64;
        let sq: u64 = self.part_sizes.iter().map(|&s| (s as u64) * (s as u64)).sum();
        (n * n - sq) / 2
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> Result<bool> {
        Ok(self.part_of(u)? != self.part_of(v)?)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n()
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v == 0 || v > self.n() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }

    /// Per-part counts `|V_i ∩ S|`. Repeated ids in `set` count once.
    pub fn part_profile(&self, set: &[Vertex]) -> Result<Vec<u64>> {
        let mut seen = vec![false; self.n()];
        let mut counts = vec![0u64; self.part_count()];
        for &v in set {
            self.check_vertex(v)?;
            if !std::mem::replace(&mut seen[v - 1], true) {
                counts[self.part_of[v - 1]] += 1;
            }
        }
        Ok(counts)
    }
}

/// Number of ordered pairs `(s, t)` in `S × T` with `s` and `t` in different
/// parts. `S` and `T` may overlap; each unordered edge inside `S ∩ T` is
/// counted twice.
pub fn ordered_pair_count(host: &MultipartiteHost, s: &[Vertex], t: &[Vertex]) -> Result<u64> {
    let a = host.part_profile(s)?;
    let b = host.part_profile(t)?;
    Ok(cross_count(&a, &b))
}

pub(crate) fn cross_count(a: &[u64], b: &[u64]) -> u64 {
    let sa: u64 = a.iter().sum();
    let sb: u64 = b.iter().sum();
    let diag: u64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    sa * sb - diag
}

/// Host edges with both ends in `set`.
pub fn induced_edge_count(host: &MultipartiteHost, set: &[Vertex]) -> Result<u64> {
    let a = host.part_profile(set)?;
    Ok(cross_count(&a, &a) / 2)
}

/// `e(S, V) / 2`, a weighted vertex count that sums to `|E(G)|` over any
/// partition of the vertex set.
pub fn f_weight(host: &MultipartiteHost, s: &[Vertex]) -> Result<Ratio<u64>> {
    Ok(Ratio::new(twice_f_weight(host, s)?, 2))
}

/// `e(S, V)` as an integer; comparisons cross-multiply against this.
pub(crate) fn twice_f_weight(host: &MultipartiteHost, s: &[Vertex]) -> Result<u64> {
    let n = host.n() as u64;
    let a = host.part_profile(s)?;
    Ok(a
        .iter()
        .zip(host.part_sizes())
        .map(|(&ai, &size)| ai * (n - size as u64))
        .sum())
}

/// A spanning subgraph of a multipartite host.
///
/// Edges are stored as sorted `(u, v)` pairs with `u < v`; duplicates are
/// collapsed on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    host: MultipartiteHost,
    edges: Vec<(Vertex, Vertex)>,
}

impl Subgraph {
    pub fn new(host: MultipartiteHost, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if !host.adjacent(u, v)? {
                return Err(Error::NotAHostEdge(u, v));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self { host, edges: list })
    }

    pub fn empty(host: MultipartiteHost) -> Self {
        Self {
            host,
            edges: Vec::new(),
        }
    }

    /// Every edge of the host.
    pub fn full(host: MultipartiteHost) -> Self {
        let n = host.n();
        let mut edges = Vec::with_capacity(host.edge_count() as usize);
        for u in 1..=n {
            for v in u + 1..=n {
                if host.part_of[u - 1] != host.part_of[v - 1] {
                    edges.push((u, v));
                }
            }
        }
        Self { host, edges }
    }

    /// Builds from edges already known to be sorted, deduplicated host edges.
    pub(crate) fn from_sorted_unchecked(host: MultipartiteHost, edges: Vec<(Vertex, Vertex)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        Self { host, edges }
    }

    pub fn host(&self) -> &MultipartiteHost {
        &self.host
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge_count(&self) -> u64 {
        self.edges.len() as u64
    }

    pub fn contains_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Degree of every vertex, indexed by `v - 1`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.host.n()];
        for &(u, v) in &self.edges {
            deg[u - 1] += 1;
            deg[v - 1] += 1;
        }
        deg
    }

    /// Sorted neighbour lists, indexed by `v - 1`.
    pub fn adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.host.n()];
        for &(u, v) in &self.edges {
            adj[u - 1].push(v);
            adj[v - 1].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }
}

/// A maximal connected piece of a subgraph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Component {
    /// Sorted ascending, never empty.
    pub vertices: Vec<Vertex>,
    pub edge_count: u64,
}

impl Component {
    pub fn min_vertex(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// Connected components of a spanning subgraph, ordered by smallest vertex.
/// Isolated vertices come back as singleton components with no edges.
pub fn components_of(subgraph: &Subgraph) -> Vec<Component> {
    components_from_edges(subgraph.host.n(), subgraph.edges.iter().copied())
}

pub(crate) fn components_from_edges(n: usize, edges: impl Iterator<Item = (Vertex, Vertex)>) -> Vec<Component> {
    let mut uf = UnionFind::new(n);
    for (u, v) in edges {
        uf.add_edge(u - 1, v - 1);
    }
    let mut slot = vec![usize::MAX; n];
    let mut out: Vec<Component> = Vec::new();
    for x in 0..n {
        let r = uf.find(x);
        if slot[r] == usize::MAX {
            slot[r] = out.len();
            let edge_count = uf.edge_count(r);
            out.push(Component {
                vertices: Vec::new(),
                edge_count,
            });
        }
        out[slot[r]].vertices.push(x + 1);
    }
    out
}
