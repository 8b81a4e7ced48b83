//! Constructors for every graph family and named graph the toolkit studies:
//! coconut trees, regular spiders, perfect binary trees, cycle coronas, the
//! H_{3,n} tree, and the two fixed counterexample graphs with their census
//! sibling, plus the basic cycle/path/star/complete/empty builders.
//!
//! Vertex numbering convention: center or root at index 0, then legs, levels,
//! or pendant blocks in order. The polynomials are label-invariant (asserted
//! by test) so the numbering is an internal regularity, not a contract.

use crate::graph::{Graph, GraphError, MAX_VERTICES};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("parameter {name} = {got} below minimum {min}")]
    ParamTooSmall {
        name: &'static str,
        got: usize,
        min: usize,
    },
    #[error("family '{0}' expects {1} parameter(s)")]
    ParamArity(String, usize),
    #[error("unknown family '{0}'")]
    UnknownFamily(String),
    #[error("result would have {0} vertices, above the cap {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("bad parameter '{0}': expected a positive integer")]
    BadParam(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn require(name: &'static str, got: usize, min: usize) -> Result<(), FamilyError> {
    if got < min {
        Err(FamilyError::ParamTooSmall { name, got, min })
    } else {
        Ok(())
    }
}

/// Path u_1..u_m with n pendant edges at u_1. Vertices: 0..m-1 the path
/// (u_1 = 0), m..m+n-1 the pendants, all adjacent to 0.
pub fn coconut_tree(m: usize, n: usize) -> Result<Graph, FamilyError> {
    require("m", m, 2)?;
    require("n", n, 2)?;
    let total = m.saturating_add(n);
    if total > MAX_VERTICES {
        return Err(FamilyError::TooManyVertices(total));
    }
    let mut edges = Vec::with_capacity(total - 1);
    for i in 0..m - 1 {
        edges.push((i, i + 1));
    }
    for p in 0..n {
        edges.push((0, m + p));
    }
    Ok(Graph::new(total, &edges)?)
}

/// n paths of length m glued at a central vertex 0. Leg i occupies vertices
/// 1 + i*m .. 1 + i*m + m - 1, chained outward from the center.
pub fn spider(n: usize, m: usize) -> Result<Graph, FamilyError> {
    require("n", n, 2)?;
    require("m", m, 1)?;
    let total = n
        .checked_mul(m)
        .and_then(|v| v.checked_add(1))
        .unwrap_or(usize::MAX);
    if total > MAX_VERTICES {
        return Err(FamilyError::TooManyVertices(total));
    }
    let mut edges = Vec::with_capacity(total - 1);
    for leg in 0..n {
        let base = 1 + leg * m;
        edges.push((0, base));
        for k in 0..m - 1 {
            edges.push((base + k, base + k + 1));
        }
    }
    Ok(Graph::new(total, &edges)?)
}

/// Perfect binary tree of depth `depth`: 2^i vertices at level i, heap
/// indexing (children of v are 2v+1 and 2v+2).
pub fn perfect_binary_tree(depth: usize) -> Result<Graph, FamilyError> {
    require("depth", depth, 1)?;
    if depth >= 32 {
        return Err(FamilyError::TooManyVertices(usize::MAX));
    }
    let total = (1usize << (depth + 1)) - 1;
    if total > MAX_VERTICES {
        return Err(FamilyError::TooManyVertices(total));
    }
    let mut edges = Vec::with_capacity(total - 1);
    for v in 1..total {
        edges.push(((v - 1) / 2, v));
    }
    Ok(Graph::new(total, &edges)?)
}

/// Corona product: one copy of g1, a copy of g2 per g1-vertex, and vertex i
/// of g1 joined to every vertex of copy i. Copy i of g2 occupies vertices
/// p1 + i*p2 .. p1 + (i+1)*p2 - 1.
pub fn corona(g1: &Graph, g2: &Graph) -> Result<Graph, FamilyError> {
    let p1 = g1.n();
    let p2 = g2.n();
    let total = p1 * (1 + p2);
    if total > MAX_VERTICES {
        return Err(FamilyError::TooManyVertices(total));
    }
    let mut edges = g1.edges();
    for i in 0..p1 {
        let base = p1 + i * p2;
        for (u, v) in g2.edges() {
            edges.push((base + u, base + v));
        }
        for u in 0..p2 {
            edges.push((i, base + u));
        }
    }
    Ok(Graph::new(total, &edges)?)
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    require("n", n, 3)?;
    if n > MAX_VERTICES {
        return Err(FamilyError::TooManyVertices(n));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::new(n, &edges)?)
}

pub fn path(n: usize) -> Result<Graph, FamilyError> {
    require("n", n, 1)?;
    if n > MAX_VERTICES {
        return Err(FamilyError::TooManyVertices(n));
    }
    let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Ok(Graph::new(n, &edges)?)
}

/// Star on n vertices: center 0 with n-1 pendants.
pub fn star(n: usize) -> Result<Graph, FamilyError> {
    require("n", n, 1)?;
    if n > MAX_VERTICES {
        return Err(FamilyError::TooManyVertices(n));
    }
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    Ok(Graph::new(n, &edges)?)
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    require("n", n, 1)?;
    if n > MAX_VERTICES {
        return Err(FamilyError::TooManyVertices(n));
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    Ok(Graph::new(n, &edges)?)
}

pub fn empty(n: usize) -> Result<Graph, FamilyError> {
    require("n", n, 1)?;
    if n > MAX_VERTICES {
        return Err(FamilyError::TooManyVertices(n));
    }
    Ok(Graph::new(n, &[])?)
}

/// Cycle corona C_n with one pendant per cycle vertex.
pub fn corona_cycle_k1(n: usize) -> Result<Graph, FamilyError> {
    corona(&cycle(n)?, &Graph::single())
}

/// Corona of C_m with the empty graph on n vertices: each cycle vertex gains
/// n pendants.
pub fn corona_cycle_empty(m: usize, n: usize) -> Result<Graph, FamilyError> {
    require("n", n, 1)?;
    corona(&cycle(m)?, &empty(n)?)
}

/// The tree sharing the coconut tree CT_{4,n}'s degree system: center 0 with
/// a two-edge path 0-1-2, a branch 0-3 carrying pendant 4, and n-1 pendants
/// 5..n+3, transcribed edge by edge from its drawing.
pub fn h3n(n: usize) -> Result<Graph, FamilyError> {
    require("n", n, 2)?;
    let total = n.saturating_add(4);
    if total > MAX_VERTICES {
        return Err(FamilyError::TooManyVertices(total));
    }
    let mut edges = vec![(1, 2), (0, 1), (0, 3), (3, 4)];
    for v in 5..total {
        edges.push((0, v));
    }
    Ok(Graph::new(total, &edges)?)
}

/// Eight-vertex graph with degree sequence 3,3,3,3,1,1,1,1 and one triangle,
/// transcribed edge by edge from its drawing.
pub fn fig3() -> Graph {
    Graph::new(
        8,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (1, 4),
            (2, 4),
            (4, 5),
            (5, 6),
            (5, 7),
        ],
    )
    .expect("fixed edge list")
}

/// First of the two ten-vertex graphs with degree sequence
/// 3,3,3,3,3,1,1,1,1,1; this one contains a triangle.
pub fn fig4_t1() -> Graph {
    Graph::new(
        10,
        &[
            (0, 2),
            (2, 4),
            (4, 5),
            (5, 7),
            (7, 9),
            (1, 2),
            (4, 3),
            (3, 6),
            (3, 5),
            (7, 8),
        ],
    )
    .expect("fixed edge list")
}

/// Second ten-vertex graph with the same degree sequence; triangle-free.
pub fn fig4_t2() -> Graph {
    Graph::new(
        10,
        &[
            (0, 2),
            (2, 4),
            (4, 6),
            (6, 7),
            (2, 3),
            (3, 1),
            (3, 5),
            (5, 4),
            (5, 9),
            (6, 8),
        ],
    )
    .expect("fixed edge list")
}

/// Every family the toolkit can build, with its parameter list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Coconut,
    Spider,
    BinaryTree,
    CoronaCycleK1,
    CoronaCycleEmpty,
    H3n,
    Fig3,
    Fig4T1,
    Fig4T2,
    Cycle,
    Path,
    Star,
    Complete,
    Empty,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Coconut => "coconut",
            Family::Spider => "spider",
            Family::BinaryTree => "binary_tree",
            Family::CoronaCycleK1 => "corona_cycle_k1",
            Family::CoronaCycleEmpty => "corona_cycle_empty",
            Family::H3n => "h3n",
            Family::Fig3 => "fig3",
            Family::Fig4T1 => "fig4_t1",
            Family::Fig4T2 => "fig4_t2",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Star => "star",
            Family::Complete => "complete",
            Family::Empty => "empty",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Family::Coconut | Family::Spider | Family::CoronaCycleEmpty => 2,
            Family::Fig3 | Family::Fig4T1 | Family::Fig4T2 => 0,
            _ => 1,
        }
    }
}

/// A family together with its parameters, e.g. `coconut:3,2` or `btree:2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<usize>) -> Result<FamilySpec, FamilyError> {
        if params.len() != family.arity() {
            return Err(FamilyError::ParamArity(
                family.name().to_string(),
                family.arity(),
            ));
        }
        Ok(FamilySpec { family, params })
    }

    /// Parse `name[:p1[,p2]]`. Accepts the short aliases `btree` (binary
    /// tree), `c3bar` and `c4bar` (cycle corona with empty graphs), and
    /// `ct3`/`ct4` (coconut trees of path length 3 and 4).
    pub fn parse(text: &str) -> Result<FamilySpec, FamilyError> {
        let (name, params_text) = match text.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (text, None),
        };
        let mut params: Vec<usize> = Vec::new();
        if let Some(p) = params_text {
            for part in p.split(',') {
                let v: usize = part
                    .trim()
                    .parse()
                    .map_err(|_| FamilyError::BadParam(part.to_string()))?;
                params.push(v);
            }
        }
        let (family, mut full_params) = match name.trim() {
            "coconut" => (Family::Coconut, params),
            "ct3" => (Family::Coconut, {
                let mut v = vec![3];
                v.extend(params);
                v
            }),
            "ct4" => (Family::Coconut, {
                let mut v = vec![4];
                v.extend(params);
                v
            }),
            "spider" => (Family::Spider, params),
            "binary_tree" | "btree" => (Family::BinaryTree, params),
            "corona_cycle_k1" => (Family::CoronaCycleK1, params),
            "corona_cycle_empty" => (Family::CoronaCycleEmpty, params),
            "c3bar" => (Family::CoronaCycleEmpty, {
                let mut v = vec![3];
                v.extend(params);
                v
            }),
            "c4bar" => (Family::CoronaCycleEmpty, {
                let mut v = vec![4];
                v.extend(params);
                v
            }),
            "h3n" => (Family::H3n, params),
            "fig3" => (Family::Fig3, params),
            "fig4_t1" => (Family::Fig4T1, params),
            "fig4_t2" => (Family::Fig4T2, params),
            "cycle" => (Family::Cycle, params),
            "path" => (Family::Path, params),
            "star" => (Family::Star, params),
            "complete" => (Family::Complete, params),
            "empty" => (Family::Empty, params),
            other => return Err(FamilyError::UnknownFamily(other.to_string())),
        };
        full_params.shrink_to_fit();
        FamilySpec::new(family, full_params)
    }

    /// Build the graph this spec names.
    pub fn construct(&self) -> Result<Graph, FamilyError> {
        let p = &self.params;
        match self.family {
            Family::Coconut => coconut_tree(p[0], p[1]),
            Family::Spider => spider(p[0], p[1]),
            Family::BinaryTree => perfect_binary_tree(p[0]),
            Family::CoronaCycleK1 => corona_cycle_k1(p[0]),
            Family::CoronaCycleEmpty => corona_cycle_empty(p[0], p[1]),
            Family::H3n => h3n(p[0]),
            Family::Fig3 => Ok(fig3()),
            Family::Fig4T1 => Ok(fig4_t1()),
            Family::Fig4T2 => Ok(fig4_t2()),
            Family::Cycle => cycle(p[0]),
            Family::Path => path(p[0]),
            Family::Star => star(p[0]),
            Family::Complete => complete(p[0]),
            Family::Empty => empty(p[0]),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family.name())?;
        for (i, p) in self.params.iter().enumerate() {
            write!(f, "{}{}", if i == 0 { ":" } else { "," }, p)?;
        }
        Ok(())
    }
}
