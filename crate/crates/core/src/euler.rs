//! Making color classes Eulerian and extracting monochromatic circuits.
//!
//! [`parity_fix`] removes a forest that meets every odd-degree vertex: take a
//! breadth-first spanning forest (lowest id first), then walk each tree from
//! the leaves up and drop a vertex's parent edge whenever the vertex would
//! otherwise keep odd degree. [`eulerian_circuit`] is Hierholzer's splice
//! construction over sorted adjacency lists.

use std::collections::VecDeque;

use serde::Serialize;

use crate::coloring::{color_class, Color, ColoredCompleteGraph};
use crate::error::{Error, Result};
use crate::graph::{components_of, Component, Subgraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityFixResult {
    /// Removed edges, sorted; always a forest.
    pub removed: Vec<(Vertex, Vertex)>,
    /// The input minus `removed`; every degree is even.
    pub trimmed: Subgraph,
}

pub fn parity_fix(g: &Subgraph) -> ParityFixResult {
    let n = g.host().n();
    let adj = g.adjacency();
    let degree: Vec<usize> = adj.iter().map(Vec::len).collect();

    // BFS forest: parent[v] and a visit order per tree.
    let mut parent = vec![0usize; n + 1];
    let mut seen = vec![false; n + 1];
    let mut order = Vec::with_capacity(n);
    for root in 1..=n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in &adj[u - 1] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
    }

    // Reverse BFS order visits children before parents.
    let mut marked = vec![0usize; n + 1];
    let mut removed = Vec::new();
    for &v in order.iter().rev() {
        let p = parent[v];
        if p != 0 && (degree[v - 1] + marked[v]) % 2 == 1 {
            marked[v] += 1;
            marked[p] += 1;
            removed.push((v.min(p), v.max(p)));
        }
    }
    removed.sort_unstable();

    let kept = g
        .edges()
        .iter()
        .copied()
        .filter(|e| removed.binary_search(e).is_err())
        .collect();
    ParityFixResult {
        removed,
        trimmed: Subgraph::from_sorted_unchecked(g.host().clone(), kept),
    }
}

/// A closed trail `v_0, v_1, …, v_L = v_0`. An empty trail is a single vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Circuit {
    pub vertices: Vec<Vertex>,
}

impl Circuit {
    /// Number of edges traversed.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Traversed edges as sorted pairs, in traversal order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1])))
    }
}

/// An Euler circuit of `comp` inside `g`, starting at the smallest vertex.
pub fn eulerian_circuit(g: &Subgraph, comp: &Component) -> Result<Circuit> {
    let start = comp.min_vertex();
    let edges: Vec<(Vertex, Vertex)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| comp.contains(u) || comp.contains(v))
        .collect();
    if edges.iter().any(|&(u, v)| !(comp.contains(u) && comp.contains(v))) {
        return Err(Error::NotEulerian("component is not closed under the subgraph's edges".into()));
    }

    // Local adjacency with edge ids: adj[v] = [(neighbour, id)], sorted.
    let n = g.host().n();
    let mut adj: Vec<Vec<(Vertex, usize)>> = vec![Vec::new(); n + 1];
    for (id, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, id));
        adj[v].push((u, id));
    }
    if let Some(&v) = comp.vertices.iter().find(|&&v| adj[v].len() % 2 == 1) {
        return Err(Error::NotEulerian(format!("vertex {v} has odd degree {}", adj[v].len())));
    }
    for list in &mut adj {
        list.sort_unstable();
    }

    let mut used = vec![false; edges.len()];
    let mut cursor = vec![0usize; n + 1];
    let mut stack = vec![start];
    let mut circuit = Vec::with_capacity(edges.len() + 1);
    while let Some(&v) = stack.last() {
        let list = &adj[v];
        while cursor[v] < list.len() && used[list[cursor[v]].1] {
            cursor[v] += 1;
        }
        if cursor[v] == list.len() {
            circuit.push(v);
            stack.pop();
        } else {
            let (w, id) = list[cursor[v]];
            used[id] = true;
            stack.push(w);
        }
    }
    circuit.reverse();

    if circuit.len() != edges.len() + 1 {
        return Err(Error::NotEulerian(format!(
            "component is disconnected: circuit covers {} of {} edges",
            circuit.len() - 1,
            edges.len()
        )));
    }
    let covered = if edges.is_empty() {
        1
    } else {
        let mut vs = circuit.clone();
        vs.sort_unstable();
        vs.dedup();
        vs.len()
    };
    if covered != comp.vertices.len() {
        return Err(Error::NotEulerian("component is disconnected".into()));
    }
    Ok(Circuit { vertices: circuit })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCircuits {
    pub color: Color,
    pub fix: ParityFixResult,
    /// One circuit per component of the trimmed class with at least one edge.
    pub circuits: Vec<Circuit>,
}

/// Parity fix and Euler circuits for one color class.
pub fn class_circuits(coloring: &ColoredCompleteGraph, color: Color) -> Result<ClassCircuits> {
    let class = color_class(coloring, color)?;
    let fix = parity_fix(&class);
    let circuits = components_of(&fix.trimmed)
        .iter()
        .filter(|c| c.edge_count > 0)
        .map(|c| eulerian_circuit(&fix.trimmed, c))
        .collect::<Result<_>>()?;
    Ok(ClassCircuits { color, fix, circuits })
}

/// The longest monochromatic circuit after making every class Eulerian.
/// Ties go to the smaller color, then the smaller start vertex. When no
/// class keeps an edge the result is `(1, [1])`, an empty circuit.
pub fn best_mono_circuit(coloring: &ColoredCompleteGraph) -> Result<(Color, Circuit)> {
    let mut best: Option<(Color, Circuit)> = None;
    for c in 1..=coloring.k() as Color {
        for circuit in class_circuits(coloring, c)?.circuits {
            if best.as_ref().is_none_or(|(_, b)| circuit.len() > b.len()) {
                best = Some((c, circuit));
            }
        }
    }
    Ok(best.unwrap_or_else(|| {
        let start = if coloring.n() == 0 { vec![] } else { vec![1] };
        (1, Circuit { vertices: start })
    }))
}
