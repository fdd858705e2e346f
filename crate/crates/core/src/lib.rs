//! Monochromatic connected components in edge-colorings of complete and
//! complete multipartite graphs.
//!
//! Vertices are numbered `1..=n`. A multipartite host places its parts in
//! contiguous blocks. Colors are `1..=k`; `0` marks an uncolored pair.

pub mod bounds;
pub mod coloring;
pub mod constructions;
pub mod dsu;
pub mod error;
pub mod euler;
pub mod graph;
pub mod inequality;

pub use bounds::{brute_force_m, densest_color_trace, density_bound, lower_bound, random_coloring, smoothing_max};
pub use coloring::{color_class, max_mono_component, mono_components, Color, ColoredCompleteGraph};
pub use constructions::{affine_coloring, density_split, k3_coloring};
pub use error::{Error, Result};
pub use euler::{best_mono_circuit, eulerian_circuit, parity_fix, Circuit};
pub use graph::{components_of, f_weight, ordered_pair_count, Component, MultipartiteHost, Subgraph, Vertex};
pub use inequality::{check_multipartite_cs, check_weight_cs, guaranteed_component, heavy_component};
