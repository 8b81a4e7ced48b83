//! Three independent routes to the permanental polynomial psi(M; x) =
//! per(xI - M): naive permutation expansion (the oracle), a Gray-code
//! inclusion-exclusion specialization (the fast path), and recursive
//! vertex/edge reduction on principal submatrices (the structural path).
//!
//! All three must agree exactly; the test suite holds them to that on random
//! graphs for both matrix kinds.

use crate::graph::{matrix_of, Graph, GraphError, IntMatrix, MatrixKind};
use crate::poly::IntPoly;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;
use thiserror::Error;

pub const DEFAULT_NAIVE_CAP: usize = 9;
pub const DEFAULT_RYSER_CAP: usize = 24;

/// Size caps are configuration, not constants; defaults keep desk runs fast.
#[derive(Debug, Clone, Copy)]
pub struct EngineCaps {
    pub naive: usize,
    pub ryser: usize,
}

impl Default for EngineCaps {
    fn default() -> Self {
        EngineCaps {
            naive: DEFAULT_NAIVE_CAP,
            ryser: DEFAULT_RYSER_CAP,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("dimension {dim} above the {engine} cap {cap}")]
    AboveCap {
        engine: &'static str,
        dim: usize,
        cap: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// How to compute psi; `Auto` dispatches on the vertex count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Auto,
    Naive,
    Ryser,
    Reduce,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Naive => "naive",
            Method::Ryser => "ryser",
            Method::Reduce => "reduce",
        }
    }
}

fn perm_rec(m: &IntMatrix, row: usize, used: u64) -> BigInt {
    let n = m.dim();
    if row == n {
        return BigInt::one();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        if (used >> j) & 1 == 1 {
            continue;
        }
        let e = m.get(row, j);
        if e == 0 {
            continue;
        }
        acc += e * perm_rec(m, row + 1, used | (1 << j));
    }
    acc
}

/// Exact permanent by permutation enumeration with zero pruning.
pub fn perm_naive(m: &IntMatrix) -> Result<BigInt, EngineError> {
    perm_naive_capped(m, DEFAULT_NAIVE_CAP)
}

pub fn perm_naive_capped(m: &IntMatrix, cap: usize) -> Result<BigInt, EngineError> {
    if m.dim() > cap {
        return Err(EngineError::AboveCap {
            engine: "naive",
            dim: m.dim(),
            cap,
        });
    }
    Ok(perm_rec(m, 0, 0))
}

fn charperm_rec(m: &IntMatrix, row: usize, used: u64) -> IntPoly {
    let n = m.dim();
    if row == n {
        return IntPoly::one();
    }
    let mut acc = IntPoly::zero();
    for j in 0..n {
        if (used >> j) & 1 == 1 {
            continue;
        }
        let e = m.get(row, j);
        // entry of xI - M: diagonal is x - m_jj, off-diagonal is -m_ij
        let entry = if row == j {
            IntPoly::linear(-e, 1)
        } else if e != 0 {
            IntPoly::constant(-e)
        } else {
            continue;
        };
        let sub = charperm_rec(m, row + 1, used | (1 << j));
        acc = acc.add(&entry.mul(&sub));
    }
    acc
}

/// psi(M; x) by direct permutation expansion of per(xI - M).
pub fn charperm_naive(m: &IntMatrix) -> Result<IntPoly, EngineError> {
    charperm_naive_capped(m, DEFAULT_NAIVE_CAP)
}

pub fn charperm_naive_capped(m: &IntMatrix, cap: usize) -> Result<IntPoly, EngineError> {
    if m.dim() > cap {
        return Err(EngineError::AboveCap {
            engine: "naive",
            dim: m.dim(),
            cap,
        });
    }
    Ok(charperm_rec(m, 0, 0))
}

/// One subset's contribution in machine arithmetic; `None` on overflow.
///
/// For the subset S (mask `in_s`, column sums `s`), the row factor is
/// (x - s_i) for i in S and (-s_i) otherwise, so the contribution is
/// scalar * prod_{i in S} (x - s_i) with scalar = prod_{i not in S} (-s_i).
fn ryser_subset_i128(s: &[i128], in_s: u64, poly: &mut Vec<i128>) -> Option<i128> {
    let n = s.len();
    let mut scalar: i128 = 1;
    for (i, &si) in s.iter().enumerate() {
        if (in_s >> i) & 1 == 0 {
            if si == 0 {
                return Some(0);
            }
            scalar = scalar.checked_mul(-si)?;
        }
    }
    poly.clear();
    poly.push(1);
    for (i, &si) in s.iter().enumerate().take(n) {
        if (in_s >> i) & 1 == 0 {
            continue;
        }
        poly.push(0);
        for d in (0..poly.len()).rev() {
            let low = poly[d].checked_mul(-si)?;
            let carry = if d > 0 { poly[d - 1] } else { 0 };
            poly[d] = low.checked_add(carry)?;
        }
    }
    Some(scalar)
}

/// The same contribution in exact arithmetic, used when i128 overflows.
fn ryser_subset_big(s: &[i128], in_s: u64) -> (BigInt, Vec<BigInt>) {
    let n = s.len();
    let mut scalar = BigInt::one();
    for (i, &si) in s.iter().enumerate() {
        if (in_s >> i) & 1 == 0 {
            scalar *= BigInt::from(-si);
        }
    }
    let mut poly = vec![BigInt::one()];
    for (i, &si_raw) in s.iter().enumerate().take(n) {
        if (in_s >> i) & 1 == 0 {
            continue;
        }
        let si = BigInt::from(si_raw);
        poly.push(BigInt::zero());
        for d in (0..poly.len()).rev() {
            let low = -&si * &poly[d];
            poly[d] = if d > 0 { low + &poly[d - 1] } else { low };
        }
    }
    (scalar, poly)
}

/// psi(M; x) by inclusion-exclusion over column subsets:
/// per(A) = (-1)^n sum_S (-1)^|S| prod_i (row sum of A over S), specialized
/// to A = xI - M. Subsets are visited in Gray-code order so each step updates
/// the running column sums by one column.
pub fn charperm_ryser(m: &IntMatrix) -> Result<IntPoly, EngineError> {
    charperm_ryser_capped(m, DEFAULT_RYSER_CAP)
}

pub fn charperm_ryser_capped(m: &IntMatrix, cap: usize) -> Result<IntPoly, EngineError> {
    let n = m.dim();
    if n > cap {
        return Err(EngineError::AboveCap {
            engine: "ryser",
            dim: n,
            cap,
        });
    }
    if n == 0 {
        return Ok(IntPoly::one());
    }
    let mut acc = vec![BigInt::zero(); n + 1];
    let mut s = vec![0i128; n];
    let mut in_s = 0u64;
    let mut size = 0usize;
    let mut poly_buf: Vec<i128> = Vec::with_capacity(n + 1);

    for k in 1u64..(1u64 << n) {
        let j = k.trailing_zeros() as usize;
        if (in_s >> j) & 1 == 1 {
            in_s &= !(1 << j);
            size -= 1;
            for (i, si) in s.iter_mut().enumerate() {
                *si -= m.get(i, j) as i128;
            }
        } else {
            in_s |= 1 << j;
            size += 1;
            for (i, si) in s.iter_mut().enumerate() {
                *si += m.get(i, j) as i128;
            }
        }

        // sign of (-1)^n (-1)^|S|
        let negative = (n + size) % 2 == 1;
        match ryser_subset_i128(&s, in_s, &mut poly_buf) {
            Some(0) => {}
            Some(scalar) => {
                let sb = BigInt::from(scalar);
                for (d, &c) in poly_buf.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let term = &sb * BigInt::from(c);
                    if negative {
                        acc[d] -= term;
                    } else {
                        acc[d] += term;
                    }
                }
            }
            None => {
                let (scalar, poly) = ryser_subset_big(&s, in_s);
                for (d, c) in poly.iter().enumerate() {
                    let term = &scalar * c;
                    if negative {
                        acc[d] -= term;
                    } else {
                        acc[d] += term;
                    }
                }
            }
        }
    }
    Ok(IntPoly::from_coeffs(acc))
}

/// An anchor for cycle enumeration: a vertex or an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Anchor {
    Vertex(usize),
    Edge(usize, usize),
}

/// Simple cycles through a fixed anchor, each as its vertex sequence in
/// traversal order (length >= 3).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSet {
    pub cycles: Vec<Vec<usize>>,
}

fn cycles_through_masked(g: &Graph, anchor: Anchor, alive: u64) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let (start, forced, home) = match anchor {
        Anchor::Vertex(v) => (v, None, v),
        Anchor::Edge(u, v) => (u, Some(v), u),
    };
    let mut path = vec![start];
    let mut visited = 1u64 << start;
    if let Some(second) = forced {
        path.push(second);
        visited |= 1 << second;
    }
    dfs_cycles(
        g,
        alive,
        home,
        forced.is_some(),
        &mut path,
        &mut visited,
        &mut out,
    );
    out
}

fn dfs_cycles(
    g: &Graph,
    alive: u64,
    home: usize,
    edge_anchor: bool,
    path: &mut Vec<usize>,
    visited: &mut u64,
    out: &mut Vec<Vec<usize>>,
) {
    let current = *path.last().unwrap();
    let mut nbrs = g.adj_mask(current) & alive & !*visited;
    // close the cycle
    if path.len() >= 3 && g.has_edge(current, home) {
        // vertex anchor: each undirected cycle appears twice; keep the
        // direction with the smaller second vertex. Edge anchors fix the
        // first step, so each cycle appears once.
        if edge_anchor || path[1] < current {
            out.push(path.clone());
        }
    }
    while nbrs != 0 {
        let u = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        if u == home {
            continue;
        }
        path.push(u);
        *visited |= 1 << u;
        dfs_cycles(g, alive, home, edge_anchor, path, visited, out);
        *visited &= !(1 << u);
        path.pop();
    }
}

/// All simple cycles of `g` through the anchor; empty for forests.
pub fn cycles_through(g: &Graph, anchor: Anchor) -> Result<CycleSet, EngineError> {
    match anchor {
        Anchor::Vertex(v) => {
            if v >= g.n() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: g.n(),
                }
                .into());
            }
        }
        Anchor::Edge(u, v) => {
            if !g.has_edge(u, v) {
                return Err(GraphError::EdgeMissing(u, v).into());
            }
        }
    }
    let alive = if g.n() == 64 {
        !0u64
    } else {
        (1u64 << g.n()) - 1
    };
    Ok(CycleSet {
        cycles: cycles_through_masked(g, anchor, alive),
    })
}

/// Recursive reduction state: psi of principal submatrices of the one fixed
/// matrix, memoized by the deleted-vertex bitmask. The diagonal keeps the
/// original degrees throughout, so the graph is never rebuilt.
struct Reducer<'g> {
    g: &'g Graph,
    kind: MatrixKind,
    leaf_cap: usize,
    full: u64,
    memo: HashMap<u64, IntPoly>,
}

impl<'g> Reducer<'g> {
    fn new(g: &'g Graph, kind: MatrixKind, leaf_cap: usize) -> Self {
        let full = if g.n() == 64 {
            !0u64
        } else {
            (1u64 << g.n()) - 1
        };
        Reducer {
            g,
            kind,
            leaf_cap: leaf_cap.max(2),
            full,
            memo: HashMap::new(),
        }
    }

    fn cycle_weight(&self, len: usize) -> i64 {
        match self.kind {
            MatrixKind::Laplacian => 2,
            MatrixKind::Signless => {
                if len.is_multiple_of(2) {
                    2
                } else {
                    -2
                }
            }
        }
    }

    fn leaf(&self, remaining: u64) -> IntPoly {
        let indices: Vec<usize> = (0..self.g.n())
            .filter(|&v| (remaining >> v) & 1 == 0)
            .collect();
        let sub = matrix_of(self.g, self.kind)
            .delete_indices(&indices)
            .expect("indices in range");
        if sub.dim() <= DEFAULT_NAIVE_CAP {
            charperm_naive(&sub).expect("below cap")
        } else {
            // the leaf is only reached at or below leaf_cap, so cap there
            charperm_ryser_capped(&sub, self.leaf_cap).expect("below cap")
        }
    }

    fn psi_deleted(&mut self, deleted: u64) -> IntPoly {
        let remaining = self.full & !deleted;
        if let Some(p) = self.memo.get(&remaining) {
            return p.clone();
        }
        let count = remaining.count_ones() as usize;
        let result = if count == 0 {
            IntPoly::one()
        } else {
            // isolated rows contribute (x - d_i) each; split them off first
            let mut isolated = IntPoly::one();
            let mut live = 0u64;
            let mut r = remaining;
            while r != 0 {
                let v = r.trailing_zeros() as usize;
                r &= r - 1;
                if self.g.adj_mask(v) & remaining == 0 {
                    isolated = isolated.mul(&IntPoly::linear(-(self.g.degree(v) as i64), 1));
                } else {
                    live |= 1 << v;
                }
            }
            if live == 0 {
                isolated
            } else if (live.count_ones() as usize) <= self.leaf_cap {
                isolated.mul(&self.leaf(live))
            } else {
                isolated.mul(&self.expand_at_pivot(live))
            }
        };
        self.memo.insert(remaining, result.clone());
        result
    }

    fn pivot(&self, remaining: u64) -> usize {
        let mut best = usize::MAX;
        let mut best_deg = 0;
        let mut r = remaining;
        while r != 0 {
            let v = r.trailing_zeros() as usize;
            r &= r - 1;
            let deg = (self.g.adj_mask(v) & remaining).count_ones() as usize;
            if best == usize::MAX || deg > best_deg {
                best = v;
                best_deg = deg;
            }
        }
        best
    }

    fn expand_at_pivot(&mut self, remaining: u64) -> IntPoly {
        let deleted = self.full & !remaining;
        let v = self.pivot(remaining);
        self.expand_at(deleted, remaining, v)
    }

    /// psi of the submatrix with `deleted` removed, expanded along vertex `v`.
    fn expand_at(&mut self, deleted: u64, remaining: u64, v: usize) -> IntPoly {
        let head = IntPoly::linear(-(self.g.degree(v) as i64), 1);
        let mut acc = head.mul(&self.psi_deleted(deleted | (1 << v)));
        let mut nbrs = self.g.adj_mask(v) & remaining;
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            acc = acc.add(&self.psi_deleted(deleted | (1 << v) | (1 << u)));
        }
        for cycle in cycles_through_masked(self.g, Anchor::Vertex(v), remaining) {
            let mut mask = deleted;
            for &w in &cycle {
                mask |= 1 << w;
            }
            let w = self.cycle_weight(cycle.len());
            acc = acc.add(&self.psi_deleted(mask).scale(&BigInt::from(w)));
        }
        acc
    }
}

/// psi via the vertex reduction
/// psi(M) = (x - d(v)) psi(M_v) + sum_{u ~ v} psi(M_vu) + cycle terms,
/// expanded at `v`, with the recursion memoized on deleted-vertex sets.
/// Signless cycle terms carry the factor (-1)^{cycle length}.
pub fn charperm_reduce_vertex(
    g: &Graph,
    kind: MatrixKind,
    v: usize,
) -> Result<IntPoly, EngineError> {
    if v >= g.n() {
        return Err(GraphError::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        }
        .into());
    }
    let mut red = Reducer::new(g, kind, 4);
    Ok(red.expand_at(0, red.full, v))
}

/// psi via the edge reduction
/// psi(M(G)) = psi(M(G-e)) - psi(M_v(G-e)) - psi(M_u(G-e)) + 2 psi(M_e(G))
/// plus cycle terms on G. The first three terms live on the edge-deleted
/// graph (whose endpoint degrees drop), the rest on the original matrix.
pub fn charperm_reduce_edge(
    g: &Graph,
    kind: MatrixKind,
    e: (usize, usize),
) -> Result<IntPoly, EngineError> {
    let (u, v) = e;
    let g_minus = g.remove_edge(u, v)?;
    let mut red_minus = Reducer::new(&g_minus, kind, 4);
    let whole = red_minus.psi_deleted(0);
    let minus_v = red_minus.psi_deleted(1 << v);
    let minus_u = red_minus.psi_deleted(1 << u);

    let mut red = Reducer::new(g, kind, 4);
    let both = red.psi_deleted((1 << u) | (1 << v));
    let mut acc = whole
        .sub(&minus_v)
        .sub(&minus_u)
        .add(&both.scale(&BigInt::from(2)));
    for cycle in cycles_through(g, Anchor::Edge(u, v))?.cycles {
        let mut mask = 0u64;
        for &w in &cycle {
            mask |= 1 << w;
        }
        let w = red.cycle_weight(cycle.len());
        acc = acc.add(&red.psi_deleted(mask).scale(&BigInt::from(w)));
    }
    Ok(acc)
}

/// psi(M(g); x) for the chosen matrix kind, dispatching on `method`.
pub fn psi(g: &Graph, kind: MatrixKind, method: Method) -> Result<IntPoly, EngineError> {
    psi_with_caps(g, kind, method, &EngineCaps::default())
}

pub fn psi_with_caps(
    g: &Graph,
    kind: MatrixKind,
    method: Method,
    caps: &EngineCaps,
) -> Result<IntPoly, EngineError> {
    let n = g.n();
    match method {
        Method::Auto => {
            if n <= 8.min(caps.naive) {
                charperm_naive_capped(&matrix_of(g, kind), caps.naive)
            } else if n <= caps.ryser {
                charperm_ryser_capped(&matrix_of(g, kind), caps.ryser)
            } else {
                let mut red = Reducer::new(g, kind, caps.ryser);
                Ok(red.psi_deleted(0))
            }
        }
        Method::Naive => charperm_naive_capped(&matrix_of(g, kind), caps.naive),
        Method::Ryser => charperm_ryser_capped(&matrix_of(g, kind), caps.ryser),
        Method::Reduce => {
            let mut red = Reducer::new(g, kind, 4.min(caps.ryser));
            Ok(red.psi_deleted(0))
        }
    }
}
