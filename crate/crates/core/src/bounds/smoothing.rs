//! Maximizing `Σ v_i^2` over nonincreasing probability vectors whose prefix
//! sums obey `v_1 + … + v_j <= 1 - x/√z + j√z` for `j < m`.
//!
//! With `m' = ⌊x/z⌋` the maximizer is
//! `v_1 = 1 - x/√z + √z`, `v_i = √z` for `2 <= i <= m'`,
//! `v_{m'+1} = x/√z - m'√z` and zero afterwards. Every coordinate has the
//! form `a + b/√z`, so the point and its value are returned as [`Surd`]s.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::surd::Surd;
use crate::error::{invalid, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothingInstance {
    x: BigRational,
    z: BigRational,
    m: usize,
    m_prime: usize,
}

impl SmoothingInstance {
    /// Accepts `0 < z <= x <= √z <= 1` and `m >= ⌊x/z⌋ + 1`.
    ///
    /// `x >= z` keeps `⌊x/z⌋ >= 1`, without which the closed form is not
    /// defined; the densest-color trace always satisfies it.
    pub fn new(x: BigRational, z: BigRational, m: usize) -> Result<Self> {
        if !x.is_positive() || !z.is_positive() {
            return Err(invalid("x and z must be positive"));
        }
        if z > BigRational::one() {
            return Err(invalid("z must be at most 1"));
        }
        if &x * &x > z {
            return Err(invalid(format!("x = {x} exceeds √z for z = {z}")));
        }
        if x < z {
            return Err(invalid(format!("x = {x} is below z = {z}; ⌊x/z⌋ would be 0")));
        }
        let ratio = &x / &z;
        let m_prime = ratio
            .floor()
            .to_integer()
            .to_usize()
            .ok_or_else(|| invalid("x/z too large"))?;
        if m < m_prime + 1 {
            return Err(invalid(format!("m = {m} must be at least ⌊x/z⌋ + 1 = {}", m_prime + 1)));
        }
        Ok(Self { x, z, m, m_prime })
    }

    pub fn x(&self) -> &BigRational {
        &self.x
    }

    pub fn z(&self) -> &BigRational {
        &self.z
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `⌊x/z⌋`.
    pub fn m_prime(&self) -> usize {
        self.m_prime
    }

    /// Right side of the prefix constraint for `j`: `1 + (jz - x)/√z`.
    pub fn prefix_cap(&self, j: usize) -> Surd {
        let j = BigRational::from_integer(BigInt::from(j));
        Surd::new(BigRational::one(), j * &self.z - &self.x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothingMax {
    pub point: Vec<Surd>,
    pub value: Surd,
}

impl SmoothingMax {
    pub fn point_f64(&self, z: &BigRational) -> Vec<f64> {
        self.point.iter().map(|s| s.to_f64(z)).collect()
    }

    pub fn value_f64(&self, z: &BigRational) -> f64 {
        self.value.to_f64(z)
    }
}

pub fn smoothing_max(inst: &SmoothingInstance) -> SmoothingMax {
    let z = &inst.z;
    let root = Surd::root(z);
    let mp = BigRational::from_integer(BigInt::from(inst.m_prime));
    let mut point = Vec::with_capacity(inst.m);
    // 1 - x/√z + √z
    point.push(Surd::new(BigRational::one(), z - &inst.x));
    for _ in 2..=inst.m_prime {
        point.push(root.clone());
    }
    // x/√z - m'√z
    point.push(Surd::new(BigRational::zero(), &inst.x - mp * z));
    point.resize(inst.m, Surd::rational(BigRational::zero()));
    let value = point
        .iter()
        .fold(Surd::rational(BigRational::zero()), |acc, v| acc.add(&v.mul(v, z)));
    SmoothingMax { point, value }
}

/// Exact feasibility of a rational vector.
pub fn smoothing_feasible(v: &[BigRational], inst: &SmoothingInstance) -> bool {
    let v: Vec<Surd> = v.iter().cloned().map(Surd::rational).collect();
    smoothing_feasible_surd(&v, inst)
}

/// Exact feasibility of a vector whose entries involve `√z`.
pub fn smoothing_feasible_surd(v: &[Surd], inst: &SmoothingInstance) -> bool {
    let z = &inst.z;
    if v.len() != inst.m {
        return false;
    }
    let zero = Surd::rational(BigRational::zero());
    if v.iter().any(|x| x.is_negative(z)) {
        return false;
    }
    if v.windows(2).any(|w| w[0].cmp_with(&w[1], z) == Ordering::Less) {
        return false;
    }
    let mut prefix = zero;
    for (j, x) in v.iter().enumerate().take(inst.m.saturating_sub(1)) {
        prefix = prefix.add(x);
        if prefix.cmp_with(&inst.prefix_cap(j + 1), z) == Ordering::Greater {
            return false;
        }
    }
    let total = v.iter().fold(Surd::rational(BigRational::zero()), |a, x| a.add(x));
    total.cmp_with(&Surd::rational(BigRational::one()), z) == Ordering::Equal
}

/// Feasibility in floating point with additive tolerance `tol`.
pub fn smoothing_feasible_f64(v: &[f64], inst: &SmoothingInstance, tol: f64) -> bool {
    let z = inst.z.to_f64().unwrap_or(f64::NAN);
    let x = inst.x.to_f64().unwrap_or(f64::NAN);
    let root = z.sqrt();
    if v.len() != inst.m || v.iter().any(|&a| a < -tol) {
        return false;
    }
    if v.windows(2).any(|w| w[0] + tol < w[1]) {
        return false;
    }
    let mut prefix = 0.0;
    for (j, &a) in v.iter().enumerate().take(inst.m.saturating_sub(1)) {
        prefix += a;
        if prefix > 1.0 - x / root + (j + 1) as f64 * root + tol {
            return false;
        }
    }
    (v.iter().sum::<f64>() - 1.0).abs() <= tol
}

/// `Σ v_i^2` bound used after smoothing: `x^2/z - x + 1 + 2(z - x)/√z`,
/// i.e. `(1 - x/√z + √z)^2 + (x/z - 1) z`. Valid for `x >= z`.
pub(crate) fn relaxed_square_bound(x: &BigRational, z: &BigRational) -> Surd {
    let two = BigRational::from_integer(BigInt::from(2));
    Surd::new(x * x / z - x + BigRational::one(), two * (z - x))
}
