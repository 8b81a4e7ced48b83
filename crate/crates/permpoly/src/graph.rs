//! Simple undirected graphs on at most 64 vertices, and the integer matrices
//! derived from them.
//!
//! Adjacency is one 64-bit mask per vertex, so neighborhood and triangle
//! queries are word operations. Matrices keep their entries as machine
//! integers; only the polynomial layer needs arbitrary precision.

use thiserror::Error;

/// Hard cap on vertex count so adjacency rows fit one machine word.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} outside supported range 1..={MAX_VERTICES}")]
    BadOrder(usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} not allowed")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) not present")]
    EdgeMissing(usize, usize),
    #[error("matrix index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("duplicate index {0} in deletion set")]
    DuplicateIndex(usize),
}

/// Selects the Laplacian D - A or the signless Laplacian D + A.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Laplacian,
    Signless,
}

impl MatrixKind {
    pub const BOTH: [MatrixKind; 2] = [MatrixKind::Laplacian, MatrixKind::Signless];

    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::Laplacian => "laplacian",
            MatrixKind::Signless => "signless",
        }
    }
}

/// A simple undirected graph on 1..=64 vertices.
///
/// Invariants: adjacency is symmetric, irreflexive, and confined to bits
/// `[0, n)`. Construction enforces all three; duplicate edges collapse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Build a graph from an edge list.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadOrder(n));
        }
        let mut g = Graph { n, adj: vec![0; n] };
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// The one-vertex graph.
    pub fn single() -> Graph {
        Graph { n: 1, adj: vec![0] }
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adjacency mask of `v`: bit `u` is set iff `u ~ v`.
    pub fn adj_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.adj[u] >> v) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mask = self.adj[v];
        (0..self.n).filter(move |&u| (mask >> u) & 1 == 1)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as ordered pairs (u, v) with u < v, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Degree multiset in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Number of 3-cliques.
    pub fn triangle_count(&self) -> usize {
        let mut count = 0usize;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    // common neighbors above v close a triangle exactly once
                    let common = self.adj[u] & self.adj[v] & !((1u64 << (v + 1)) - 1);
                    count += common.count_ones() as usize;
                }
            }
        }
        count
    }

    /// Two-colorability via BFS over every component.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = Vec::new();
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.push(start);
            while let Some(v) = queue.pop() {
                for u in self.neighbors(v) {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        queue.push(u);
                    } else if color[u] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n {
            if (seen >> start) & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push((0..self.n).filter(|&v| (comp >> v) & 1 == 1).collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() == self.n - 1
    }

    /// Relabel: vertex `v` of the result is vertex `perm[v]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut edges = Vec::with_capacity(self.edge_count());
        let mut inv = vec![0usize; self.n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        for (u, v) in self.edges() {
            edges.push((inv[u], inv[v]));
        }
        Graph::new(self.n, &edges).expect("permutation preserves validity")
    }

    /// Copy with one edge removed.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::EdgeMissing(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// Append one vertex adjacent to the vertices in `mask`.
    pub fn with_new_vertex(&self, mask: u64) -> Result<Graph, GraphError> {
        let n = self.n + 1;
        if n > MAX_VERTICES {
            return Err(GraphError::BadOrder(n));
        }
        debug_assert_eq!(mask & !((1u64 << self.n) - 1), 0);
        let mut adj = self.adj.clone();
        adj.push(mask);
        for (v, row) in adj.iter_mut().enumerate().take(self.n) {
            if (mask >> v) & 1 == 1 {
                *row |= 1 << (n - 1);
            }
        }
        Ok(Graph { n, adj })
    }

    /// Disjoint union, `other`'s vertices shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::BadOrder(n));
        }
        let mut edges = self.edges();
        for (u, v) in other.edges() {
            edges.push((u + self.n, v + self.n));
        }
        Graph::new(n, &edges)
    }
}

/// A square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> IntMatrix {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for r in rows {
            assert_eq!(r.len(), dim, "matrix must be square");
            entries.extend_from_slice(r);
        }
        IntMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    /// Principal submatrix: delete the rows and columns in `indices`,
    /// preserving the relative order of the survivors. Deleting nothing is
    /// the identity.
    pub fn delete_indices(&self, indices: &[usize]) -> Result<IntMatrix, GraphError> {
        let mut kill = vec![false; self.dim];
        for &i in indices {
            if i >= self.dim {
                return Err(GraphError::IndexOutOfRange {
                    index: i,
                    dim: self.dim,
                });
            }
            if kill[i] {
                return Err(GraphError::DuplicateIndex(i));
            }
            kill[i] = true;
        }
        let keep: Vec<usize> = (0..self.dim).filter(|&i| !kill[i]).collect();
        let dim = keep.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for &i in &keep {
            for &j in &keep {
                entries.push(self.get(i, j));
            }
        }
        Ok(IntMatrix { dim, entries })
    }
}

/// The Laplacian or signless Laplacian of a graph: degrees on the diagonal,
/// -1 or +1 at edges.
pub fn matrix_of(g: &Graph, kind: MatrixKind) -> IntMatrix {
    let n = g.n();
    let off = match kind {
        MatrixKind::Laplacian => -1i64,
        MatrixKind::Signless => 1i64,
    };
    let mut entries = vec![0i64; n * n];
    for v in 0..n {
        entries[v * n + v] = g.degree(v) as i64;
        for u in g.neighbors(v) {
            entries[v * n + u] = off;
        }
    }
    IntMatrix { dim: n, entries }
}
