//! Edge colorings of `K_n`, possibly partial.
//!
//! Text format: a header line `n k`, then one `u v c` line per pair with
//! `1 <= u < v <= n` and `0 <= c <= k`. Pairs that are not listed are
//! uncolored (color 0). Listing a pair twice is an error. The canonical
//! writer emits every colored pair in lexicographic order and nothing else.

use std::fmt::Write as _;

use crate::dsu::UnionFind;
use crate::error::{invalid, Error, Result};
use crate::graph::{Component, MultipartiteHost, Subgraph, Vertex};

pub type Color = u16;

/// Color value of an uncolored pair.
pub const UNCOLORED: Color = 0;

/// Number of unordered pairs of an `n`-set.
pub fn pairs(n: usize) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredCompleteGraph {
    n: usize,
    k: usize,
    /// Colors of the pairs `(1,2), (1,3), …, (1,n), (2,3), …` in that order.
    colors: Vec<Color>,
}

impl ColoredCompleteGraph {
    /// All pairs uncolored.
    pub fn uncolored(n: usize, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(invalid("a coloring needs at least one color"));
        }
        if k > Color::MAX as usize {
            return Err(invalid(format!("at most {} colors are supported", Color::MAX)));
        }
        Ok(Self {
            n,
            k,
            colors: vec![UNCOLORED; pairs(n) as usize],
        })
    }

    /// Every pair gets `color`.
    pub fn monochromatic(n: usize, k: usize, color: Color) -> Result<Self> {
        let mut g = Self::uncolored(n, k)?;
        g.check_color(color)?;
        g.colors.fill(color);
        Ok(g)
    }

    /// Builds from colors listed in lexicographic pair order.
    pub fn from_pair_colors(n: usize, k: usize, colors: Vec<Color>) -> Result<Self> {
        let mut g = Self::uncolored(n, k)?;
        if colors.len() != g.colors.len() {
            return Err(invalid(format!(
                "expected {} pair colors, got {}",
                g.colors.len(),
                colors.len()
            )));
        }
        if let Some(&bad) = colors.iter().find(|&&c| c as usize > k) {
            return Err(Error::ColorOutOfRange {
                color: bad as usize,
                k,
            });
        }
        g.colors = colors;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn pair_count(&self) -> u64 {
        self.colors.len() as u64
    }

    /// Pair colors in lexicographic pair order.
    pub fn pair_colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn index(&self, u: Vertex, v: Vertex) -> Result<usize> {
        let (u, v) = (u.min(v), u.max(v));
        if u == 0 || v > self.n {
            return Err(Error::VertexOutOfRange {
                vertex: if u == 0 { u } else { v },
                n: self.n,
            });
        }
        if u == v {
            return Err(invalid(format!("{u}-{v} is a loop")));
        }
        Ok(pair_index(self.n, u, v))
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> Result<Color> {
        Ok(self.colors[self.index(u, v)?])
    }

    pub fn set(&mut self, u: Vertex, v: Vertex, c: Color) -> Result<()> {
        self.check_color(c)?;
        let i = self.index(u, v)?;
        self.colors[i] = c;
        Ok(())
    }

    fn check_color(&self, c: Color) -> Result<()> {
        if c as usize > self.k {
            Err(Error::ColorOutOfRange {
                color: c as usize,
                k: self.k,
            })
        } else {
            Ok(())
        }
    }

    pub fn uncolored_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c == UNCOLORED).count()
    }

    pub fn is_full(&self) -> bool {
        self.uncolored_count() == 0
    }

    pub(crate) fn require_full(&self) -> Result<()> {
        match self.uncolored_count() {
            0 => Ok(()),
            missing => Err(Error::PartialColoring(missing)),
        }
    }

    /// Iterates `(u, v, color)` over all pairs in lexicographic order.
    pub fn iter_pairs(&self) -> impl Iterator<Item = (Vertex, Vertex, Color)> + '_ {
        let n = self.n;
        (1..=n)
            .flat_map(move |u| (u + 1..=n).map(move |v| (u, v)))
            .zip(self.colors.iter())
            .map(|((u, v), &c)| (u, v, c))
    }

    /// Number of pairs of each color; index 0 holds the uncolored count.
    pub fn class_sizes(&self) -> Vec<u64> {
        let mut sizes = vec![0u64; self.k + 1];
        for &c in &self.colors {
            sizes[c as usize] += 1;
        }
        sizes
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header line `n k`".into(),
        })?;
        let head = parse_fields::<2>(hline, header)?;
        let (n, k) = (head[0], head[1]);
        let mut g = Self::uncolored(n, k).map_err(|e| Error::Parse {
            line: hline,
            message: e.to_string(),
        })?;
        let mut seen = vec![false; g.colors.len()];
        for (line, body) in lines {
            let [u, v, c] = parse_fields::<3>(line, body)?;
            let err = |message: String| Error::Parse { line, message };
            if !(1 <= u && u < v && v <= n) {
                return Err(err(format!("pair {u} {v} must satisfy 1 <= u < v <= {n}")));
            }
            if c > k {
                return Err(err(format!("color {c} exceeds k = {k}")));
            }
            let i = pair_index(n, u, v);
            if std::mem::replace(&mut seen[i], true) {
                return Err(err(format!("duplicate pair {u} {v}")));
            }
            g.colors[i] = c as Color;
        }
        Ok(g)
    }

    /// Canonical text rendering; `parse(to_text(g)) == g`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {}", self.n, self.k).unwrap();
        for (u, v, c) in self.iter_pairs() {
            if c != UNCOLORED {
                writeln!(out, "{u} {v} {c}").unwrap();
            }
        }
        out
    }
}

fn parse_fields<const N: usize>(line: usize, body: &str) -> Result<[usize; N]> {
    let mut out = [0usize; N];
    let mut fields = body.split_whitespace();
    for slot in out.iter_mut() {
        let tok = fields.next().ok_or_else(|| Error::Parse {
            line,
            message: format!("expected {N} integers"),
        })?;
        *slot = tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("`{tok}` is not a nonnegative integer"),
        })?;
    }
    if fields.next().is_some() {
        return Err(Error::Parse {
            line,
            message: format!("expected {N} integers"),
        });
    }
    Ok(out)
}

/// Position of the pair `u < v` in lexicographic order.
pub(crate) fn pair_index(n: usize, u: Vertex, v: Vertex) -> usize {
    (u - 1) * (2 * n - u) / 2 + (v - u - 1)
}

/// The spanning subgraph of `K_n` formed by the pairs colored `c`.
pub fn color_class(coloring: &ColoredCompleteGraph, c: Color) -> Result<Subgraph> {
    if c == UNCOLORED || c as usize > coloring.k {
        return Err(Error::ColorOutOfRange {
            color: c as usize,
            k: coloring.k,
        });
    }
    let host = MultipartiteHost::complete(coloring.n)?;
    let edges = coloring
        .iter_pairs()
        .filter(|&(_, _, col)| col == c)
        .map(|(u, v, _)| (u, v))
        .collect();
    Ok(Subgraph::from_sorted_unchecked(host, edges))
}

/// Components of every color class in one pass. Entry `c - 1` holds the
/// components of color `c`, ordered by smallest vertex.
pub fn mono_components(coloring: &ColoredCompleteGraph) -> Vec<Vec<Component>> {
    let n = coloring.n;
    let mut forests: Vec<UnionFind> = (0..coloring.k).map(|_| UnionFind::new(n)).collect();
    for (u, v, c) in coloring.iter_pairs() {
        if c != UNCOLORED {
            forests[c as usize - 1].add_edge(u - 1, v - 1);
        }
    }
    forests
        .into_iter()
        .map(|mut uf| {
            let mut slot = vec![usize::MAX; n];
            let mut comps: Vec<Component> = Vec::new();
            for x in 0..n {
                let r = uf.find(x);
                if slot[r] == usize::MAX {
                    slot[r] = comps.len();
                    comps.push(Component {
                        vertices: Vec::new(),
                        edge_count: uf.edge_count(r),
                    });
                }
                comps[slot[r]].vertices.push(x + 1);
            }
            comps
        })
        .collect()
}

/// The monochromatic component with the most edges, ties broken by smaller
/// color and then smaller minimum vertex. `None` when `n < 2`.
pub fn max_mono_component(coloring: &ColoredCompleteGraph) -> Option<(Color, Component)> {
    if coloring.n < 2 {
        return None;
    }
    let mut best: Option<(Color, Component)> = None;
    for (i, comps) in mono_components(coloring).into_iter().enumerate() {
        for comp in comps {
            if best.as_ref().is_none_or(|(_, b)| comp.edge_count > b.edge_count) {
                best = Some((i as Color + 1, comp));
            }
        }
    }
    best
}
