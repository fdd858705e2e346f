//! Bound formulas, the smoothing maximizer, the densest-color trace, random
//! colorings and exact small-case search for `M(n, k)`.

mod random;
mod search;
mod smoothing;
mod surd;
mod trace;

pub use random::random_coloring;
pub use search::{brute_force_m, brute_force_m_with, SearchConfig, SearchResult};
pub use smoothing::{smoothing_feasible, smoothing_feasible_f64, smoothing_feasible_surd, smoothing_max, SmoothingInstance, SmoothingMax};
pub use surd::{exact_sqrt, Surd};
pub use trace::{densest_color_trace, DensestColorTrace, PrefixCheck, SquareSumCheck};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::coloring::pairs;
use crate::error::{invalid, Result};

/// `M(17, 3)`. Known from a case analysis; far beyond exhaustive search.
pub const KNOWN_M_17_3: u64 = 24;

/// Guaranteed size of the largest monochromatic component in any k-coloring
/// of `K_n`: `C(n,2) / (k^2 - k + 5/4)`, or `⌈C(n,2)/6⌉` when `k = 3`.
pub fn lower_bound(n: usize, k: usize) -> Result<BigRational> {
    if k < 2 {
        return Err(invalid("k must be at least 2"));
    }
    if n < 2 {
        return Err(invalid("n must be at least 2"));
    }
    let total = pairs(n);
    if k == 3 {
        return Ok(BigRational::from_integer(BigInt::from(total.div_ceil(6))));
    }
    let k = BigInt::from(k);
    Ok(BigRational::new(BigInt::from(total) * 4, BigInt::from(4) * &k * &k - 4 * &k + 5))
}

/// `C(n,2) / k^2`, the bound obtained from the densest color class alone.
pub fn density_bound(n: usize, k: usize) -> Result<BigRational> {
    if k == 0 {
        return Err(invalid("k must be positive"));
    }
    Ok(BigRational::new(BigInt::from(pairs(n)), BigInt::from(k * k)))
}

/// `p/q` rendering used by every JSON surface; integers print without `/1`.
pub fn rational_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(lower_bound(100, 2).unwrap(), q(19800, 13));
        assert_eq!(lower_bound(18, 3).unwrap(), q(26, 1));
        assert_eq!(lower_bound(2, 2).unwrap(), q(4, 13));
        assert_eq!(lower_bound(10, 4).unwrap(), q(180, 53));
        assert!(lower_bound(10, 1).is_err());
    }

    #[test]
    fn density_bound_examples() {
        assert_eq!(density_bound(6, 2).unwrap(), q(15, 4));
        assert_eq!(density_bound(3, 3).unwrap(), q(1, 3));
    }

    #[test]
    fn rational_rendering() {
        assert_eq!(rational_string(&q(19800, 13)), "19800/13");
        assert_eq!(rational_string(&q(26, 1)), "26");
        assert_eq!(rational_string(&q(-1, 2)), "-1/2");
    }
}
