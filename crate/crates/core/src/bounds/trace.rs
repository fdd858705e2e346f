//! Diagnostics along the densest color of a full coloring.
//!
//! Let red be the color with the most edges, `x` its share of `C(n,2)` and `z`
//! the share held by the largest monochromatic component of any color. The
//! red components `R_1, …, R_m`, sorted by vertex count, then satisfy
//!
//! * `|V(R_1)| + … + |V(R_j)| <= (1 - x/√z + j√z) n` for every `j < m`, and
//! * `Σ v_i^2 <= (1 - x/√z + √z)^2 + (x/z - 1) z` for `v_i = |V(R_i)| / n`.
//!
//! Both are compared exactly (see [`Surd`]); floats are for display only.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::smoothing::relaxed_square_bound;
use super::surd::Surd;
use super::rational_string;
use crate::coloring::{max_mono_component, mono_components, pairs, Color, ColoredCompleteGraph};
use crate::error::{invalid, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PrefixCheck {
    pub j: usize,
    /// `|V(R_1)| + … + |V(R_j)|`.
    pub prefix: usize,
    /// `(1 - x/√z + j√z) n`, rounded for display.
    pub bound: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SquareSumCheck {
    /// `Σ C(|V(R_i)|, 2)`.
    pub pair_sum: u64,
    /// `(n^2 ((1 - x/√z + √z)^2 + (x/z - 1) z) - n) / 2`, rounded for display.
    pub bound: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensestColorTrace {
    pub n: usize,
    pub k: usize,
    pub red: Color,
    pub red_edges: u64,
    pub max_component_edges: u64,
    #[serde(serialize_with = "as_ratio")]
    pub x: BigRational,
    #[serde(serialize_with = "as_ratio")]
    pub z: BigRational,
    /// `k - 1/√z`.
    pub delta: f64,
    /// Vertex counts of the red components, largest first.
    pub red_component_sizes: Vec<usize>,
    pub prefix_checks: Vec<PrefixCheck>,
    pub square_sum: SquareSumCheck,
    /// `x >= 1/k`.
    pub density_at_least_inverse_k: bool,
    /// `z >= x^2`.
    pub component_at_least_density_squared: bool,
}

fn as_ratio<S: serde::Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(r))
}

impl DensestColorTrace {
    pub fn passes(&self) -> bool {
        self.prefix_checks.iter().all(|c| c.holds)
            && self.square_sum.holds
            && self.density_at_least_inverse_k
            && self.component_at_least_density_squared
    }
}

pub fn densest_color_trace(coloring: &ColoredCompleteGraph) -> Result<DensestColorTrace> {
    coloring.require_full()?;
    let (n, k) = (coloring.n(), coloring.k());
    if k < 2 {
        return Err(invalid("trace needs k >= 2"));
    }
    if n < 2 {
        return Err(invalid("trace needs n >= 2"));
    }
    let sizes = coloring.class_sizes();
    let red = (1..=k).fold(1, |best, c| if sizes[c] > sizes[best] { c } else { best });
    let total = pairs(n);
    let (_, top) = max_mono_component(coloring).expect("n >= 2");

    let ratio = |a: u64, b: u64| BigRational::new(BigInt::from(a), BigInt::from(b));
    let x = ratio(sizes[red], total);
    let z = ratio(top.edge_count, total);
    let zf = z.to_f64().unwrap_or(f64::NAN);
    let xf = x.to_f64().unwrap_or(f64::NAN);

    let mut red_sizes: Vec<usize> = mono_components(coloring)
        .swap_remove(red - 1)
        .into_iter()
        .map(|c| c.vertices.len())
        .collect();
    red_sizes.sort_unstable_by(|a, b| b.cmp(a));
    let m = red_sizes.len();

    let nq = ratio(n as u64, 1);
    let mut prefix = 0;
    let prefix_checks = (1..m)
        .map(|j| {
            prefix += red_sizes[j - 1];
            // prefix / n <= 1 + (jz - x)/√z
            let lhs = Surd::rational(ratio(prefix as u64, 1) / &nq);
            let rhs = Surd::new(ratio(1, 1), ratio(j as u64, 1) * &z - &x);
            PrefixCheck {
                j,
                prefix,
                bound: (1.0 - xf / zf.sqrt() + j as f64 * zf.sqrt()) * n as f64,
                holds: lhs.cmp_with(&rhs, &z) != Ordering::Greater,
            }
        })
        .collect();

    let pair_sum: u64 = red_sizes.iter().map(|&s| pairs(s)).sum();
    let square_bound = relaxed_square_bound(&x, &z);
    let square_sum = red_sizes.iter().map(|&s| (s * s) as u64).sum::<u64>();
    let lhs = Surd::rational(ratio(square_sum, (n * n) as u64));
    let sq = square_bound.to_f64(&z);
    let square_sum = SquareSumCheck {
        pair_sum,
        bound: ((n * n) as f64 * sq - n as f64) / 2.0,
        holds: x >= z && lhs.cmp_with(&square_bound, &z) != Ordering::Greater,
    };

    Ok(DensestColorTrace {
        n,
        k,
        red: red as Color,
        red_edges: sizes[red],
        max_component_edges: top.edge_count,
        delta: k as f64 - 1.0 / zf.sqrt(),
        red_component_sizes: red_sizes,
        prefix_checks,
        square_sum,
        density_at_least_inverse_k: &x * ratio(k as u64, 1) >= ratio(1, 1),
        component_at_least_density_squared: z >= &x * &x,
        x,
        z,
    })
}
