//! Generators for extremal and near-extremal configurations.
//!
//! * [`density_split`]: a subgraph of a multipartite host whose components all
//!   sit close to the `|E(H)|^2 / |E(G)|` floor.
//! * [`affine_coloring`]: a `(q+1)`-coloring of `K_n` from the affine plane
//!   over `Z_q`, with largest component about `n^2 / (2k(k-1))`.
//! * [`k3_initial_nice`] and [`k3_optimize`]: a four-part 3-coloring whose
//!   largest monochromatic component has exactly `⌈C(n,2)/6⌉` edges.

use crate::coloring::{pairs, Color, ColoredCompleteGraph};
use crate::error::{invalid, Error, Result};
use crate::graph::{MultipartiteHost, Subgraph, Vertex};

pub const RED: Color = 1;
pub const GREEN: Color = 2;
pub const BLUE: Color = 3;

/// Smallest `n` for which the four-part construction is defined.
pub const K3_MIN_N: usize = 46;

/// Slice index of every vertex (indexed by `v - 1`) when each part is cut
/// into `k` slices. Slices are assigned round-robin over the global vertex
/// order, so slice sizes differ by at most one both inside every part and
/// overall.
pub fn density_slices(host: &MultipartiteHost, k: usize) -> Result<Vec<usize>> {
    if k == 0 {
        return Err(invalid("k must be positive"));
    }
    Ok((0..host.n()).map(|i| i % k).collect())
}

/// Union of the subgraphs induced on the `j`-th slices of all parts.
pub fn density_split(host: &MultipartiteHost, k: usize) -> Result<Subgraph> {
    let slice = density_slices(host, k)?;
    let n = host.n();
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if slice[u - 1] == slice[v - 1] && host.adjacent(u, v)? {
                edges.push((u, v));
            }
        }
    }
    Subgraph::new(host.clone(), edges)
}

pub fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// The affine plane over `Z_q` for prime `q`.
///
/// Point `(a, b)` has index `a * q + b`. Parallel class `s < q` holds the
/// lines `b = s a + c`; class `q` holds the vertical lines `a = c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffinePlane {
    q: usize,
}

impl AffinePlane {
    pub fn new(q: usize) -> Result<Self> {
        if !is_prime(q) {
            return Err(invalid(format!("{q} is not prime")));
        }
        Ok(Self { q })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn point_count(&self) -> usize {
        self.q * self.q
    }

    pub fn class_count(&self) -> usize {
        self.q + 1
    }

    pub fn coords(&self, p: usize) -> (usize, usize) {
        (p / self.q, p % self.q)
    }

    /// Parallel class of the line through two distinct points.
    pub fn class_of(&self, p: usize, r: usize) -> usize {
        debug_assert_ne!(p, r);
        let q = self.q;
        let ((a1, b1), (a2, b2)) = (self.coords(p), self.coords(r));
        if a1 == a2 {
            return q;
        }
        let da = (a2 + q - a1) % q;
        let db = (b2 + q - b1) % q;
        db * mod_inverse(da, q) % q
    }

    /// Index within its class of the line through `p`.
    pub fn line_of(&self, class: usize, p: usize) -> usize {
        let q = self.q;
        let (a, b) = self.coords(p);
        if class == q {
            a
        } else {
            (b + q * q - class * a % q) % q
        }
    }

    /// The `q` lines of a parallel class, each a sorted list of point indices.
    pub fn lines(&self, class: usize) -> Vec<Vec<usize>> {
        let mut lines = vec![Vec::new(); self.q];
        for p in 0..self.point_count() {
            lines[self.line_of(class, p)].push(p);
        }
        lines
    }
}

fn mod_inverse(a: usize, q: usize) -> usize {
    // q is prime: a^(q-2) mod q.
    let (mut base, mut exp, mut acc) = (a % q, q - 2, 1usize);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        exp >>= 1;
    }
    acc
}

/// Point of every vertex (indexed by `v - 1`): contiguous blocks, the first
/// `n mod q^2` points taking one extra vertex.
pub fn affine_point_assignment(q: usize, n: usize) -> Vec<usize> {
    let points = q * q;
    let (base, extra) = (n / points, n % points);
    (0..points)
        .flat_map(|p| std::iter::repeat_n(p, base + usize::from(p < extra)))
        .collect()
}

/// `(q+1)`-coloring of `K_n` from the affine plane of order `q`.
///
/// An edge between different points gets the parallel class of the line
/// joining them. Edges inside a point are dealt round-robin over all colors in
/// lexicographic edge order.
pub fn affine_coloring(q: usize, n: usize) -> Result<ColoredCompleteGraph> {
    let plane = AffinePlane::new(q)?;
    if n < plane.point_count() {
        return Err(invalid(format!("need n >= q^2 = {}", plane.point_count())));
    }
    let k = plane.class_count();
    let point = affine_point_assignment(q, n);
    let mut colors = Vec::with_capacity(pairs(n) as usize);
    let mut dealt = 0usize;
    for u in 0..n {
        for v in u + 1..n {
            let (p, r) = (point[u], point[v]);
            let class = if p == r {
                dealt += 1;
                (dealt - 1) % k
            } else {
                plane.class_of(p, r)
            };
            colors.push(class as Color + 1);
        }
    }
    ColoredCompleteGraph::from_pair_colors(n, k, colors)
}

/// Four contiguous parts with sizes `⌈n/4⌉ = |V_1| >= … >= |V_4| = ⌊n/4⌋`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourPartition {
    sizes: [usize; 4],
    starts: [Vertex; 4],
}

impl FourPartition {
    pub fn new(n: usize) -> Self {
        let sizes: [usize; 4] = std::array::from_fn(|i| n / 4 + usize::from(i < n % 4));
        let mut starts = [1; 4];
        for i in 1..4 {
            starts[i] = starts[i - 1] + sizes[i - 1];
        }
        Self { sizes, starts }
    }

    pub fn sizes(&self) -> [usize; 4] {
        self.sizes
    }

    pub fn n(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn part_of(&self, v: Vertex) -> usize {
        (0..4).rev().find(|&i| v >= self.starts[i]).expect("vertex ids start at 1")
    }

    pub fn members(&self, part: usize) -> std::ops::Range<Vertex> {
        self.starts[part]..self.starts[part] + self.sizes[part]
    }

    /// `|V_i| |V_j|`.
    pub fn cross(&self, i: usize, j: usize) -> u64 {
        (self.sizes[i] * self.sizes[j]) as u64
    }

    pub fn internal(&self, i: usize) -> u64 {
        pairs(self.sizes[i])
    }

    /// Lexicographically ordered pairs inside part `i`.
    pub fn internal_pairs(&self, i: usize) -> impl Iterator<Item = (Vertex, Vertex)> {
        let r = self.members(i);
        let end = r.end;
        r.flat_map(move |u| (u + 1..end).map(move |v| (u, v)))
    }
}

/// Color of the edges between parts `i != j` (zero-based): `{1,2},{3,4}` red,
/// `{1,3},{2,4}` green, `{1,4},{2,3}` blue.
pub fn cross_color(i: usize, j: usize) -> Color {
    debug_assert_ne!(i, j);
    match (i.min(j), i.max(j)) {
        (0, 1) | (2, 3) => RED,
        (0, 2) | (1, 3) => GREEN,
        _ => BLUE,
    }
}

/// `⌈C(n,2)/6⌉`.
pub fn sixth_target(n: usize) -> u64 {
    pairs(n).div_ceil(6)
}

/// The green or blue quota filled inside each part: `(color, count)`.
fn k3_quotas(parts: &FourPartition, target: u64) -> Result<[(Color, u64); 4]> {
    // Part i joins the component of `color` spanning parts i and `partner`.
    let plan = [(GREEN, 2), (GREEN, 3), (BLUE, 1), (BLUE, 0)];
    let mut out = [(RED, 0); 4];
    for (i, &(color, partner)) in plan.iter().enumerate() {
        let cross = parts.cross(i, partner);
        if cross > target || target - cross > parts.internal(i) {
            return Err(invalid(format!(
                "part {} cannot absorb the {} quota (cross {cross}, target {target})",
                i + 1,
                if color == GREEN { "green" } else { "blue" }
            )));
        }
        out[i] = (color, target - cross);
    }
    Ok(out)
}

/// A nice coloring: cross edges follow [`cross_color`], the green quotas sit in
/// `V_1`, `V_2` and the blue quotas in `V_3`, `V_4` (lexicographically first
/// internal edges), every other internal edge is red.
pub fn k3_initial_nice(n: usize) -> Result<ColoredCompleteGraph> {
    if n < K3_MIN_N {
        return Err(invalid(format!("the four-part construction needs n >= {K3_MIN_N}")));
    }
    let parts = FourPartition::new(n);
    let quotas = k3_quotas(&parts, sixth_target(n))?;
    let mut g = ColoredCompleteGraph::uncolored(n, 3)?;
    for u in 1..=n {
        for v in u + 1..=n {
            let (pu, pv) = (parts.part_of(u), parts.part_of(v));
            if pu != pv {
                g.set(u, v, cross_color(pu, pv))?;
            }
        }
    }
    for (i, &(color, quota)) in quotas.iter().enumerate() {
        for (idx, (u, v)) in parts.internal_pairs(i).enumerate() {
            g.set(u, v, if (idx as u64) < quota { color } else { RED })?;
        }
    }
    Ok(g)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwapOutcome {
    pub coloring: ColoredCompleteGraph,
    pub swaps: usize,
}

/// Edge counts of the six components of a four-part coloring, keyed by the
/// part pair `{i, j}` spanned by the component.
fn k3_component_sizes(g: &ColoredCompleteGraph, parts: &FourPartition) -> Result<[[u64; 4]; 4]> {
    let mut sizes = [[0u64; 4]; 4];
    for (u, v, c) in g.iter_pairs() {
        let (pu, pv) = (parts.part_of(u), parts.part_of(v));
        let (i, j) = if pu != pv {
            if c != cross_color(pu, pv) {
                return Err(invalid(format!("cross edge {u}-{v} has color {c}, expected {}", cross_color(pu, pv))));
            }
            (pu, pv)
        } else {
            let other = (0..4)
                .find(|&o| o != pu && cross_color(pu, o) == c)
                .ok_or_else(|| invalid(format!("edge {u}-{v} is uncolored")))?;
            (pu, other)
        };
        sizes[i.min(j)][i.max(j)] += 1;
    }
    Ok(sizes)
}

/// Runs the exchange argument on a nice coloring: while a red component has
/// more than `⌈C(n,2)/6⌉` edges, recolor a red internal edge `e` on the heavy
/// side and an internal edge `f` on the light side, giving `e` the color of
/// `f`. `f` is chosen so that both edges belong to the same green or blue
/// component, which keeps every green and blue component at its size while
/// the heavy red component loses one edge.
pub fn k3_optimize(coloring: &ColoredCompleteGraph) -> Result<SwapOutcome> {
    let n = coloring.n();
    if n < K3_MIN_N || coloring.k() != 3 {
        return Err(invalid(format!("expected a 3-coloring with n >= {K3_MIN_N}")));
    }
    let parts = FourPartition::new(n);
    let target = sixth_target(n);
    let mut sizes = k3_component_sizes(coloring, &parts)?;
    for (i, j) in [(0, 2), (1, 3), (0, 3), (1, 2)] {
        if sizes[i][j] != target {
            return Err(invalid(format!(
                "not a nice coloring: component on parts {},{} has {} edges, expected {target}",
                i + 1,
                j + 1,
                sizes[i][j]
            )));
        }
    }

    let mut g = coloring.clone();
    let mut swaps = 0;
    loop {
        let (heavy, light) = if sizes[0][1] > target {
            ([0, 1], [2, 3])
        } else if sizes[2][3] > target {
            ([2, 3], [0, 1])
        } else {
            break;
        };
        let edges = sizes[heavy[0]][heavy[1]];
        let swap = heavy.iter().find_map(|&p| {
            let e = parts.internal_pairs(p).find(|&(u, v)| g.get(u, v) == Ok(RED))?;
            light.iter().find_map(|&q| {
                let c = cross_color(p, q);
                let f = parts.internal_pairs(q).find(|&(u, v)| g.get(u, v) == Ok(c))?;
                Some((e, f, c))
            })
        });
        let ((eu, ev), (fu, fv), c) = swap.ok_or(Error::NoLegalSwap { edges, target })?;
        g.set(eu, ev, c)?;
        g.set(fu, fv, RED)?;
        sizes[heavy[0]][heavy[1]] -= 1;
        sizes[light[0]][light[1]] += 1;
        swaps += 1;
    }
    Ok(SwapOutcome { coloring: g, swaps })
}

/// `k3_optimize(k3_initial_nice(n))`.
pub fn k3_coloring(n: usize) -> Result<ColoredCompleteGraph> {
    Ok(k3_optimize(&k3_initial_nice(n)?)?.coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{max_mono_component, mono_components};
    use crate::graph::components_of;

    fn comp_sizes(g: &ColoredCompleteGraph) -> Vec<Vec<u64>> {
        mono_components(g)
            .into_iter()
            .map(|cs| cs.into_iter().filter(|c| c.edge_count > 0).map(|c| c.edge_count).collect())
            .collect()
    }

    #[test]
    fn density_split_k6() {
        let host = MultipartiteHost::complete(6).unwrap();
        let h = density_split(&host, 2).unwrap();
        let comps: Vec<_> = components_of(&h).into_iter().filter(|c| c.edge_count > 0).collect();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.edge_count == 3 && c.vertices.len() == 3));
        // 3 * 15 >= 6^2
        assert!(3 * host.edge_count() >= h.edge_count() * h.edge_count());
    }

    #[test]
    fn density_split_k22() {
        let host = MultipartiteHost::new(vec![2, 2]).unwrap();
        let h = density_split(&host, 2).unwrap();
        let comps: Vec<_> = components_of(&h).into_iter().filter(|c| c.edge_count > 0).collect();
        assert_eq!(comps.iter().map(|c| c.edge_count).collect::<Vec<_>>(), vec![1, 1]);
        assert_eq!(h.edge_count() * h.edge_count(), host.edge_count());
    }

    #[test]
    fn density_split_single_slice_is_host() {
        let host = MultipartiteHost::new(vec![3, 1, 2]).unwrap();
        assert_eq!(density_split(&host, 1).unwrap(), Subgraph::full(host.clone()));
        assert!(density_split(&host, 0).is_err());
    }

    #[test]
    fn primes() {
        let ps: Vec<_> = (0..30).filter(|&q| is_prime(q)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn affine_plane_axioms() {
        for q in [2, 3, 5, 7] {
            let plane = AffinePlane::new(q).unwrap();
            for class in 0..plane.class_count() {
                let lines = plane.lines(class);
                assert_eq!(lines.len(), q);
                assert!(lines.iter().all(|l| l.len() == q));
            }
            for p in 0..plane.point_count() {
                for r in 0..plane.point_count() {
                    if p == r {
                        continue;
                    }
                    let through_both = (0..plane.class_count())
                        .filter(|&c| plane.line_of(c, p) == plane.line_of(c, r))
                        .collect::<Vec<_>>();
                    assert_eq!(through_both, vec![plane.class_of(p, r)]);
                }
            }
        }
        assert!(AffinePlane::new(4).is_err());
    }

    #[test]
    fn affine_q2_n4_is_one_factorization() {
        let g = affine_coloring(2, 4).unwrap();
        assert_eq!(g.k(), 3);
        assert!(g.is_full());
        for comps in mono_components(&g) {
            let with_edges: Vec<_> = comps.iter().filter(|c| c.edge_count > 0).collect();
            assert_eq!(with_edges.len(), 2);
            assert!(with_edges.iter().all(|c| c.edge_count == 1 && c.vertices.len() == 2));
        }
    }

    #[test]
    fn affine_q3_n9_triangles() {
        let g = affine_coloring(3, 9).unwrap();
        assert_eq!(g.k(), 4);
        for comps in mono_components(&g) {
            let with_edges: Vec<_> = comps.iter().filter(|c| c.edge_count > 0).collect();
            assert_eq!(with_edges.len(), 3);
            assert!(with_edges.iter().all(|c| c.edge_count == 3 && c.vertices.len() == 3));
        }
    }

    #[test]
    fn affine_q2_n8_components() {
        let g = affine_coloring(2, 8).unwrap();
        for comps in mono_components(&g) {
            let with_edges: Vec<_> = comps.iter().filter(|c| c.edge_count > 0).collect();
            assert_eq!(with_edges.len(), 2);
            assert!(with_edges.iter().all(|c| c.vertices.len() == 4));
        }
    }

    #[test]
    fn affine_rejects_bad_input() {
        assert!(affine_coloring(4, 20).is_err());
        assert!(affine_coloring(3, 8).is_err());
    }

    #[test]
    fn four_partition_shape() {
        let p = FourPartition::new(49);
        assert_eq!(p.sizes(), [13, 12, 12, 12]);
        assert_eq!(p.members(1), 14..26);
        assert_eq!(p.part_of(13), 0);
        assert_eq!(p.part_of(14), 1);
        assert_eq!(p.part_of(49), 3);
        assert_eq!(p.internal_pairs(3).count(), 66);
    }

    #[test]
    fn nice_coloring_n48() {
        let g = k3_initial_nice(48).unwrap();
        assert!(g.is_full());
        assert_eq!(sixth_target(48), 188);
        for sizes in comp_sizes(&g) {
            assert_eq!(sizes, vec![188, 188]);
        }
        let inside_v1: Vec<_> = FourPartition::new(48).internal_pairs(0).map(|(u, v)| g.get(u, v).unwrap()).collect();
        assert_eq!(inside_v1.iter().filter(|&&c| c == GREEN).count(), 44);
        assert_eq!(inside_v1.iter().filter(|&&c| c == RED).count(), 22);
    }

    #[test]
    fn nice_coloring_n49() {
        let g = k3_initial_nice(49).unwrap();
        let sizes = comp_sizes(&g);
        assert_eq!(sizes[(RED - 1) as usize], vec![208, 184]);
        assert_eq!(sizes[(GREEN - 1) as usize], vec![196, 196]);
        assert_eq!(sizes[(BLUE - 1) as usize], vec![196, 196]);
    }

    #[test]
    fn nice_coloring_rejects_small_n() {
        assert!(k3_initial_nice(20).is_err());
        assert!(k3_initial_nice(45).is_err());
    }

    #[test]
    fn optimize_n49_takes_twelve_swaps() {
        let out = k3_optimize(&k3_initial_nice(49).unwrap()).unwrap();
        assert_eq!(out.swaps, 12);
        for sizes in comp_sizes(&out.coloring) {
            assert_eq!(sizes, vec![196, 196]);
        }
        let parts = FourPartition::new(49);
        let count = |part, color| {
            parts
                .internal_pairs(part)
                .filter(|&(u, v)| out.coloring.get(u, v).unwrap() == color)
                .count()
        };
        // V1 gave 12 red edges to blue, V4 took 12 red from blue.
        assert_eq!(count(0, BLUE), 12);
        assert_eq!(count(3, RED), 26 + 12);
    }

    #[test]
    fn optimize_n48_is_a_no_op_and_idempotent() {
        let nice = k3_initial_nice(48).unwrap();
        let out = k3_optimize(&nice).unwrap();
        assert_eq!(out.swaps, 0);
        assert_eq!(out.coloring, nice);

        let once = k3_optimize(&k3_initial_nice(49).unwrap()).unwrap();
        let twice = k3_optimize(&once.coloring).unwrap();
        assert_eq!(twice.swaps, 0);
        assert_eq!(twice.coloring, once.coloring);
    }

    #[test]
    fn optimize_rejects_non_nice_input() {
        let mono = ColoredCompleteGraph::monochromatic(50, 3, RED).unwrap();
        assert!(k3_optimize(&mono).is_err());
        let mut g = k3_initial_nice(50).unwrap();
        let (u, v) = FourPartition::new(50).internal_pairs(0).next().unwrap();
        g.set(u, v, RED).unwrap();
        assert!(k3_optimize(&g).is_err());
    }

    #[test]
    fn optimized_max_component_matches_target() {
        for n in [46, 47, 50, 51, 77, 100] {
            let g = k3_coloring(n).unwrap();
            let (_, comp) = max_mono_component(&g).unwrap();
            assert_eq!(comp.edge_count, sixth_target(n), "n = {n}");
        }
    }
}
