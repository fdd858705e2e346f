//! Exact checkers for the weighted Cauchy–Schwarz inequality, its
//! multipartite form `e(S,T)^2 >= 4 e(S) e(T)`, and the heavy-component
//! selection that yields `|E(H')| |E(G)| >= |E(H)|^2`.

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::coloring::{color_class, pairs, Color, ColoredCompleteGraph};
use crate::error::{invalid, Error, Result};
use crate::graph::{components_of, cross_count, twice_f_weight, Component, MultipartiteHost, Subgraph, Vertex};

/// Two equal-length nonnegative integer vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVectors {
    a: Vec<u64>,
    b: Vec<u64>,
}

impl WeightVectors {
    pub fn new(a: Vec<u64>, b: Vec<u64>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(invalid(format!("length mismatch: {} vs {}", a.len(), b.len())));
        }
        if a.is_empty() {
            return Err(invalid("weight vectors must be nonempty"));
        }
        Ok(Self { a, b })
    }

    /// Accepts signed input and rejects negative entries.
    pub fn from_signed(a: &[i64], b: &[i64]) -> Result<Self> {
        let conv = |xs: &[i64]| -> Result<Vec<u64>> {
            xs.iter()
                .map(|&x| u64::try_from(x).map_err(|_| invalid(format!("negative weight {x}"))))
                .collect()
        };
        Self::new(conv(a)?, conv(b)?)
    }

    pub fn a(&self) -> &[u64] {
        &self.a
    }

    pub fn b(&self) -> &[u64] {
        &self.b
    }
}

/// `lhs >= rhs` with the slack kept exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    #[serde(serialize_with = "decimal")]
    pub lhs: BigInt,
    #[serde(serialize_with = "decimal")]
    pub rhs: BigInt,
    pub holds: bool,
    #[serde(serialize_with = "decimal")]
    pub slack: BigInt,
}

impl InequalityReport {
    pub fn new(lhs: impl Into<BigInt>, rhs: impl Into<BigInt>) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        let slack = &lhs - &rhs;
        Self {
            holds: slack >= BigInt::ZERO,
            lhs,
            rhs,
            slack,
        }
    }

    pub fn is_equality(&self) -> bool {
        self.slack == BigInt::ZERO
    }
}

fn decimal<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// `((Σa)(Σb) − Σab)^2` against `((Σa)^2 − Σa^2)((Σb)^2 − Σb^2)`.
pub fn check_weight_cs(w: &WeightVectors) -> InequalityReport {
    let sum = |xs: &[u64]| xs.iter().map(|&x| BigInt::from(x)).sum::<BigInt>();
    let dot = |xs: &[u64], ys: &[u64]| {
        xs.iter()
            .zip(ys)
            .map(|(&x, &y)| BigInt::from(x) * BigInt::from(y))
            .sum::<BigInt>()
    };
    let (sa, sb) = (sum(&w.a), sum(&w.b));
    let cross = &sa * &sb - dot(&w.a, &w.b);
    let lhs = &cross * &cross;
    let rhs = (&sa * &sa - dot(&w.a, &w.a)) * (&sb * &sb - dot(&w.b, &w.b));
    InequalityReport::new(lhs, rhs)
}

/// `e(S,T)^2` against `4 |E(G[S])| |E(G[T])|`.
pub fn check_multipartite_cs(host: &MultipartiteHost, s: &[Vertex], t: &[Vertex]) -> Result<InequalityReport> {
    let a = host.part_profile(s)?;
    let b = host.part_profile(t)?;
    let est = BigInt::from(cross_count(&a, &b));
    let inside_s = BigInt::from(cross_count(&a, &a) / 2);
    let inside_t = BigInt::from(cross_count(&b, &b) / 2);
    Ok(InequalityReport::new(&est * &est, 4 * inside_s * inside_t))
}

/// The component of `h` with the largest ratio `|E(H_l)| / f(V(H_l))`, ties
/// going to the component with the smallest vertex.
///
/// Since the weights `f` of all components sum to `|E(G)|`, the chosen ratio is
/// at least `|E(H)| / |E(G)|`, and the result satisfies
/// `|E(H')| |E(G)| >= |E(H)|^2`. Both facts are checked before returning.
pub fn heavy_component(host: &MultipartiteHost, h: &Subgraph) -> Result<Component> {
    if host.part_count() < 2 {
        return Err(invalid("host must have at least two parts"));
    }
    if h.host() != host {
        return Err(invalid("subgraph belongs to a different host"));
    }
    let comps = components_of(h);
    let mut best: Option<(usize, u64)> = None;
    for (i, comp) in comps.iter().enumerate() {
        // 2 f(V(H_l)) > 0 because every vertex has a neighbour in the host.
        let weight = twice_f_weight(host, &comp.vertices)?;
        let better = match best {
            None => true,
            Some((j, w)) => (comp.edge_count as u128) * (w as u128) > (comps[j].edge_count as u128) * (weight as u128),
        };
        if better {
            best = Some((i, weight));
        }
    }
    let (idx, weight) = best.expect("a host has at least one vertex");
    let chosen = comps[idx].clone();

    let g_edges = host.edge_count() as u128;
    let h_edges = h.edge_count() as u128;
    // ratio >= |E(H)| / |E(G)| with f doubled on the left.
    if 2 * (chosen.edge_count as u128) * g_edges < h_edges * (weight as u128) {
        return Err(Error::CheckFailed(format!(
            "selected ratio {}/{} is below density {h_edges}/{g_edges}",
            2 * chosen.edge_count,
            weight
        )));
    }
    if (chosen.edge_count as u128) * g_edges < h_edges * h_edges {
        return Err(Error::CheckFailed(format!(
            "component with {} edges violates |E(H')||E(G)| >= |E(H)|^2 ({} * {g_edges} < {h_edges}^2)",
            chosen.edge_count, chosen.edge_count
        )));
    }
    Ok(chosen)
}

/// `|E(H')| |E(G)|` against `|E(H)|^2`.
pub fn heavy_component_report(host: &MultipartiteHost, h: &Subgraph, chosen: &Component) -> InequalityReport {
    let g = BigInt::from(host.edge_count());
    let e = BigInt::from(h.edge_count());
    InequalityReport::new(BigInt::from(chosen.edge_count) * g, &e * &e)
}

/// Density bound `|E(H')| >= C(n,2) / k^2` for a full coloring: take the
/// largest color class (smallest color on ties) and select its heavy
/// component over `K_n`.
pub fn guaranteed_component(coloring: &ColoredCompleteGraph) -> Result<(Color, Component)> {
    coloring.require_full()?;
    if coloring.n() < 2 {
        return Err(invalid("need n >= 2"));
    }
    let sizes = coloring.class_sizes();
    let mut color = 1usize;
    for c in 2..=coloring.k() {
        if sizes[c] > sizes[color] {
            color = c;
        }
    }
    let class = color_class(coloring, color as Color)?;
    let host = class.host().clone();
    let comp = heavy_component(&host, &class)?;
    let total = pairs(coloring.n()) as u128;
    let k = coloring.k() as u128;
    if (comp.edge_count as u128) * total * k * k < total * total {
        return Err(Error::CheckFailed(format!(
            "component with {} edges is below C(n,2)/k^2 = {total}/{}",
            comp.edge_count,
            k * k
        )));
    }
    Ok((color as Color, comp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn weight_cs_examples() {
        let r = check_weight_cs(&WeightVectors::new(vec![1, 2], vec![3, 1]).unwrap());
        assert_eq!((r.lhs, r.rhs, r.holds), (49.into(), 24.into(), true));
        let r = check_weight_cs(&WeightVectors::new(vec![5], vec![7]).unwrap());
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (0.into(), 0.into()));
        assert!(r.is_equality());
        let r = check_weight_cs(&WeightVectors::new(vec![2, 3], vec![2, 3]).unwrap());
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (144.into(), 144.into()));
        assert!(r.is_equality());
    }

    #[test]
    fn weight_vectors_validate() {
        assert!(WeightVectors::new(vec![1, 2], vec![1]).is_err());
        assert!(WeightVectors::from_signed(&[1, -2], &[1, 1]).is_err());
        assert!(WeightVectors::from_signed(&[1, 2], &[1, 1]).is_ok());
    }

    #[test]
    fn multipartite_cs_examples() {
        let k22 = MultipartiteHost::new(vec![2, 2]).unwrap();
        let r = check_multipartite_cs(&k22, &[1, 3], &[2, 4]).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (4.into(), 4.into()));
        assert!(r.is_equality());

        let r = check_multipartite_cs(&k22, &[1, 2], &[1, 3]).unwrap();
        assert_eq!(r.rhs, 0.into());
        assert!(r.holds);

        let k3 = MultipartiteHost::complete(3).unwrap();
        let r = check_multipartite_cs(&k3, &[1, 2], &[1, 3]).unwrap();
        assert_eq!((r.lhs, r.rhs), (9.into(), 4.into()));

        assert!(check_multipartite_cs(&k3, &[4], &[1]).is_err());
    }

    #[test]
    fn heavy_component_prefers_triangle() {
        let k5 = MultipartiteHost::complete(5).unwrap();
        let h = Subgraph::new(k5.clone(), [(1, 2), (2, 3), (1, 3), (4, 5)]).unwrap();
        let c = heavy_component(&k5, &h).unwrap();
        assert_eq!(c.vertices, vec![1, 2, 3]);
        assert!(heavy_component_report(&k5, &h, &c).holds);
        assert_eq!(c.edge_count * 10, 30);
    }

    #[test]
    fn heavy_component_whole_graph_is_equality() {
        let host = MultipartiteHost::new(vec![2, 3, 1]).unwrap();
        let h = Subgraph::full(host.clone());
        let c = heavy_component(&host, &h).unwrap();
        assert_eq!(c.vertices.len(), 6);
        assert!(heavy_component_report(&host, &h, &c).is_equality());
    }

    #[test]
    fn heavy_component_tie_takes_smallest_vertex() {
        let k4 = MultipartiteHost::complete(4).unwrap();
        let h = Subgraph::new(k4.clone(), [(1, 2), (3, 4)]).unwrap();
        let c = heavy_component(&k4, &h).unwrap();
        assert_eq!(c.vertices, vec![1, 2]);
        let r = heavy_component_report(&k4, &h, &c);
        assert_eq!((r.lhs, r.rhs), (6.into(), 4.into()));
    }

    #[test]
    fn heavy_component_rejects_single_part() {
        let host = MultipartiteHost::new(vec![3]).unwrap();
        assert!(heavy_component(&host, &Subgraph::empty(host.clone())).is_err());
    }

    #[test]
    fn guaranteed_component_examples() {
        let rainbow = ColoredCompleteGraph::parse("3 3\n1 2 1\n1 3 2\n2 3 3\n").unwrap();
        let (c, comp) = guaranteed_component(&rainbow).unwrap();
        assert_eq!((c, comp.edge_count), (1, 1));

        let mut k6 = ColoredCompleteGraph::monochromatic(6, 2, 2).unwrap();
        for (u, v) in [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)] {
            k6.set(u, v, 1).unwrap();
        }
        let (c, comp) = guaranteed_component(&k6).unwrap();
        assert_eq!((c, comp.edge_count, comp.vertices.len()), (2, 9, 6));

        let mono = ColoredCompleteGraph::monochromatic(7, 1, 1).unwrap();
        assert_eq!(guaranteed_component(&mono).unwrap().1.edge_count, 21);

        let partial = ColoredCompleteGraph::uncolored(3, 2).unwrap();
        assert_eq!(guaranteed_component(&partial), Err(Error::PartialColoring(3)));
    }

    #[test]
    fn report_serializes_decimal_strings() {
        let r = InequalityReport::new(BigInt::from(10).pow(30), 3);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["lhs"], "1000000000000000000000000000000");
        assert_eq!(json["rhs"], "3");
        assert_eq!(json["holds"], true);
    }

    proptest! {
        #[test]
        fn weight_cs_never_fails(
            pair in (1usize..10).prop_flat_map(|r| (
                prop::collection::vec(0u64..=100, r),
                prop::collection::vec(0u64..=100, r),
            ))
        ) {
            let (a, b) = pair;
            let report = check_weight_cs(&WeightVectors::new(a.clone(), a.clone()).unwrap());
            prop_assert!(report.is_equality());
            prop_assert!(check_weight_cs(&WeightVectors::new(a, b).unwrap()).holds);
        }

        #[test]
        fn adding_an_edge_never_shrinks_its_component(
            parts in prop::collection::vec(1usize..5, 2..5),
            picks in prop::collection::vec(any::<prop::sample::Index>(), 0..20),
            extra in any::<prop::sample::Index>(),
        ) {
            let host = MultipartiteHost::new(parts).unwrap();
            let all = Subgraph::full(host.clone());
            let chosen: Vec<_> = picks.iter().map(|i| *i.get(all.edges())).collect();
            let h = Subgraph::new(host.clone(), chosen.clone()).unwrap();
            let (u, v) = *extra.get(all.edges());
            let mut grown = chosen;
            grown.push((u, v));
            let h2 = Subgraph::new(host.clone(), grown).unwrap();
            let before: u64 = components_of(&h).iter().filter(|c| c.contains(u) || c.contains(v)).map(|c| c.edge_count).sum();
            let after = components_of(&h2).into_iter().find(|c| c.contains(u)).unwrap().edge_count;
            prop_assert!(after >= before);
            let c = heavy_component(&host, &h2).unwrap();
            prop_assert!(heavy_component_report(&host, &h2, &c).holds);
        }
    }
}
