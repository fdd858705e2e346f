use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// `rational + over_root / √z` for a fixed positive rational `z` supplied by
/// the caller. Every quantity in the smoothing bound has this shape, since
/// `√z = z / √z`, so comparisons stay exact even when `√z` is irrational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surd {
    pub rational: BigRational,
    pub over_root: BigRational,
}

impl Surd {
    pub fn new(rational: BigRational, over_root: BigRational) -> Self {
        Self { rational, over_root }
    }

    pub fn rational(r: BigRational) -> Self {
        Self::new(r, BigRational::zero())
    }

    /// `√z` itself.
    pub fn root(z: &BigRational) -> Self {
        Self::new(BigRational::zero(), z.clone())
    }

    pub fn add(&self, o: &Surd) -> Surd {
        Surd::new(&self.rational + &o.rational, &self.over_root + &o.over_root)
    }

    pub fn sub(&self, o: &Surd) -> Surd {
        Surd::new(&self.rational - &o.rational, &self.over_root - &o.over_root)
    }

    pub fn scale(&self, c: &BigRational) -> Surd {
        Surd::new(&self.rational * c, &self.over_root * c)
    }

    /// `(a + b/√z)(c + d/√z) = ac + bd/z + (ad + bc)/√z`.
    pub fn mul(&self, o: &Surd, z: &BigRational) -> Surd {
        Surd::new(
            &self.rational * &o.rational + &self.over_root * &o.over_root / z,
            &self.rational * &o.over_root + &self.over_root * &o.rational,
        )
    }

    pub fn signum(&self, z: &BigRational) -> Ordering {
        let (a, b) = (&self.rational, &self.over_root);
        let zero = BigRational::zero();
        match (a.cmp(&zero), b.cmp(&zero)) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (s, t) if s == t => s,
            // Opposite signs: sign(a√z + b) is sign(a) iff a^2 z > b^2.
            (s, _) => match (a * a * z).cmp(&(b * b)) {
                Ordering::Greater => s,
                Ordering::Less => s.reverse(),
                Ordering::Equal => Ordering::Equal,
            },
        }
    }

    pub fn cmp_with(&self, o: &Surd, z: &BigRational) -> Ordering {
        self.sub(o).signum(z)
    }

    pub fn to_f64(&self, z: &BigRational) -> f64 {
        let f = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
        f(&self.rational) + f(&self.over_root) / f(z).sqrt()
    }

    /// Collapses to a single rational when `√z` is rational.
    pub fn to_exact(&self, z: &BigRational) -> Option<BigRational> {
        let root = exact_sqrt(z)?;
        Some(&self.rational + &self.over_root / root)
    }

    pub fn is_negative(&self, z: &BigRational) -> bool {
        self.signum(z) == Ordering::Less
    }
}

/// Rational square root of a nonnegative rational, if one exists.
pub fn exact_sqrt(z: &BigRational) -> Option<BigRational> {
    if z.is_negative() {
        return None;
    }
    let root = |x: &BigInt| {
        let r = x.sqrt();
        (&r * &r == *x).then_some(r)
    };
    Some(BigRational::new(root(z.numer())?, root(z.denom())?))
}
