use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::{pairs, Color, ColoredCompleteGraph};
use crate::error::{invalid, Result};

/// Each pair independently uniform over `1..=k`, drawn in lexicographic pair
/// order from a ChaCha8 stream seeded with `seed`.
pub fn random_coloring(n: usize, k: usize, seed: u64) -> Result<ColoredCompleteGraph> {
    if k == 0 {
        return Err(invalid("k must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let colors = (0..pairs(n))
        .map(|_| rng.random_range(1..=k) as Color)
        .collect();
    ColoredCompleteGraph::from_pair_colors(n, k, colors)
}
