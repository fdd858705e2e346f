//! Disjoint-set forests.
//!
//! [`UnionFind`] is the usual path-compressing structure. [`RollbackUnionFind`]
//! skips path compression so that every union can be undone in LIFO order,
//! which is what the branch-and-bound search needs. Both track the number of
//! edges absorbed by each set, so a component's edge count is available at
//! its root.

#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    edges: Vec<u64>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
            edges: vec![0; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    /// Records the edge `a`-`b`, merging the two sets if needed. Returns the root.
    pub fn add_edge(&mut self, a: usize, b: usize) -> usize {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.edges[ra] += 1;
            return ra;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        self.edges[big] += self.edges[small] + 1;
        big
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Edge count of the set containing `x`.
    pub fn edge_count(&mut self, x: usize) -> u64 {
        let r = self.find(x);
        self.edges[r]
    }
}

#[derive(Debug, Clone, Copy)]
enum Undo {
    Loop { root: usize },
    Merge { big: usize, small: usize },
}

#[derive(Debug, Clone)]
pub struct RollbackUnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    edges: Vec<u64>,
    history: Vec<Undo>,
}

impl RollbackUnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
            edges: vec![0; n],
            history: Vec::new(),
        }
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Adds an edge and returns the edge count of the resulting set.
    pub fn add_edge(&mut self, a: usize, b: usize) -> u64 {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.edges[ra] += 1;
            self.history.push(Undo::Loop { root: ra });
            return self.edges[ra];
        }
        let (big, small) = if self.size[ra] >= self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        self.edges[big] += self.edges[small] + 1;
        self.history.push(Undo::Merge { big, small });
        self.edges[big]
    }

    /// Reverts the most recent [`add_edge`](Self::add_edge).
    pub fn undo(&mut self) {
        match self.history.pop().expect("undo without a matching add_edge") {
            Undo::Loop { root } => self.edges[root] -= 1,
            Undo::Merge { big, small } => {
                self.parent[small] = small;
                self.size[big] -= self.size[small];
                self.edges[big] -= self.edges[small] + 1;
            }
        }
    }
}
