//! Independent oracles and generators shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::ops::{Add, Div, Mul, Neg, Sub};

use monocomp::{MultipartiteHost, Subgraph, Vertex};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

/// Minimal ordered field for Gaussian elimination.
pub trait Scalar:
    Clone
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(x: i64) -> Self;
    /// Treat as zero for pivoting and feasibility.
    fn negligible(&self) -> bool;
    fn magnitude(&self) -> Self;
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(x: i64) -> Self {
        x as f64
    }
    fn negligible(&self) -> bool {
        self.abs() < 1e-10
    }
    fn magnitude(&self) -> Self {
        self.abs()
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(x: i64) -> Self {
        BigRational::from_integer(BigInt::from(x))
    }
    fn negligible(&self) -> bool {
        self.is_zero()
    }
    fn magnitude(&self) -> Self {
        self.abs()
    }
}

/// Unique solution of the square system `a x = b`, if any.
pub fn solve<T: Scalar>(mut a: Vec<Vec<T>>, mut b: Vec<T>) -> Option<Vec<T>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !a[r][col].negligible())
            .max_by(|&r, &s| a[r][col].magnitude().partial_cmp(&a[s][col].magnitude()).unwrap())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in 0..n {
            if r == col || a[r][col].negligible() {
                continue;
            }
            let factor = a[r][col].clone() / a[col][col].clone();
            let pivot_row = a[col].clone();
            for (x, p) in a[r].iter_mut().zip(pivot_row).skip(col) {
                *x = x.clone() - factor.clone() * p;
            }
            let delta = factor * b[col].clone();
            b[r] = b[r].clone() - delta;
        }
    }
    Some((0..n).map(|i| b[i].clone() / a[i][i].clone()).collect())
}

/// `rows[i] · v <= rhs[i]` plus `Σ v = 1` for the prefix-capped, sorted
/// probability vectors of length `m`, with `caps[j-1]` bounding the first `j`
/// coordinates.
pub struct Polytope<T> {
    pub m: usize,
    pub rows: Vec<Vec<T>>,
    pub rhs: Vec<T>,
}

impl<T: Scalar> Polytope<T> {
    pub fn sorted_prefix_capped(m: usize, caps: &[T]) -> Self {
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for i in 0..m {
            let mut r = vec![T::zero(); m];
            r[i] = -T::one();
            rows.push(r);
            rhs.push(T::zero());
        }
        for i in 0..m.saturating_sub(1) {
            let mut r = vec![T::zero(); m];
            r[i] = -T::one();
            r[i + 1] = T::one();
            rows.push(r);
            rhs.push(T::zero());
        }
        for (j, cap) in caps.iter().enumerate().take(m.saturating_sub(1)) {
            let mut r = vec![T::zero(); m];
            for x in r.iter_mut().take(j + 1) {
                *x = T::one();
            }
            rows.push(r);
            rhs.push(cap.clone());
        }
        Self { m, rows, rhs }
    }

    pub fn feasible(&self, v: &[T]) -> bool {
        let sum = v.iter().cloned().fold(T::zero(), |a, x| a + x);
        if !(sum - T::one()).negligible() {
            return false;
        }
        self.rows.iter().zip(&self.rhs).all(|(r, c)| {
            let lhs = r.iter().zip(v).fold(T::zero(), |a, (x, y)| a + x.clone() * y.clone());
            let gap = lhs - c.clone();
            gap.negligible() || gap < T::zero()
        })
    }

    /// All vertices: pick `m - 1` tight inequalities, add `Σ v = 1`, solve.
    pub fn vertices(&self) -> Vec<Vec<T>> {
        let mut out: Vec<Vec<T>> = Vec::new();
        for subset in subsets(self.rows.len(), self.m - 1) {
            let mut a: Vec<Vec<T>> = subset.iter().map(|&i| self.rows[i].clone()).collect();
            let mut b: Vec<T> = subset.iter().map(|&i| self.rhs[i].clone()).collect();
            a.push(vec![T::one(); self.m]);
            b.push(T::one());
            let Some(v) = solve(a, b) else { continue };
            if !self.feasible(&v) {
                continue;
            }
            let dup = out
                .iter()
                .any(|w| w.iter().zip(&v).all(|(x, y)| (x.clone() - y.clone()).negligible()));
            if !dup {
                out.push(v);
            }
        }
        out
    }
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn square_sum<T: Scalar>(v: &[T]) -> T {
    v.iter().cloned().fold(T::zero(), |a, x| a + x.clone() * x)
}

pub fn random_host(rng: &mut impl Rng, parts: std::ops::RangeInclusive<usize>, max_size: usize) -> MultipartiteHost {
    let r = rng.random_range(parts);
    MultipartiteHost::new((0..r).map(|_| rng.random_range(1..=max_size)).collect()).unwrap()
}

/// Each host edge kept independently with probability `p`.
pub fn random_subgraph(rng: &mut impl Rng, host: &MultipartiteHost, p: f64) -> Subgraph {
    let n = host.n();
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if host.adjacent(u, v).unwrap() && rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Subgraph::new(host.clone(), edges).unwrap()
}

pub fn random_vertex_set(rng: &mut impl Rng, n: usize) -> Vec<Vertex> {
    let p = rng.random_range(0.0..=1.0);
    (1..=n).filter(|_| rng.random_bool(p)).collect()
}

/// Brute-force `e(S,T)`: ordered pairs `(s,t)` with `s ∈ S`, `t ∈ T` adjacent.
pub fn brute_pair_count(host: &MultipartiteHost, s: &[Vertex], t: &[Vertex]) -> u64 {
    let mut count = 0;
    for &a in s {
        for &b in t {
            if a != b && host.adjacent(a, b).unwrap() {
                count += 1;
            }
        }
    }
    count
}

/// Brute-force connected components by depth-first search over an edge list.
pub fn brute_components(n: usize, edges: &[(Vertex, Vertex)]) -> Vec<(BTreeSet<Vertex>, u64)> {
    let mut adj = vec![Vec::new(); n + 1];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n + 1];
    let mut out = Vec::new();
    for s in 1..=n {
        if seen[s] {
            continue;
        }
        let mut set = BTreeSet::new();
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            set.insert(u);
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        let e = edges.iter().filter(|(u, _)| set.contains(u)).count() as u64;
        out.push((set, e));
    }
    out
}
