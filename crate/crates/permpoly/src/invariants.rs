//! Recovering graph data from permanental polynomials and solving the
//! resulting degree systems.
//!
//! From a monic psi the leading coefficients determine the vertex count, the
//! edge count, the sum of squared degrees, and a signed cubic combination of
//! triangle count and cubed degrees (the sign depending on the matrix kind).
//! The degree-system solver enumerates every non-negative integer histogram
//! consistent with those four values, the step every determination argument
//! in this area runs on.

use crate::graph::{Graph, MatrixKind};
use crate::poly::IntPoly;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

/// The tuple a permanental polynomial pins down: vertex count, edge count,
/// sum of squared degrees, and the cubic value -6t + sum d^3 (Laplacian) or
/// +6t + sum d^3 (signless). `t_known` is populated only when the report was
/// computed from a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub n: usize,
    pub m: i64,
    pub sum_d2: i64,
    pub cubic: i64,
    pub kind: MatrixKind,
    pub t_known: Option<i64>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("polynomial is not monic")]
    NonMonic,
    #[error("zero polynomial has no invariants")]
    ZeroPolynomial,
    #[error("degree 0 polynomial cannot come from a graph")]
    DegreeZero,
    #[error("non-integral inversion of {0}; not a permanental polynomial of this kind")]
    NonIntegral(&'static str),
    #[error("implausible {0}; not a permanental polynomial of this kind")]
    Implausible(&'static str),
}

/// Invariants computed directly from the graph.
pub fn forward_invariants(g: &Graph, kind: MatrixKind) -> InvariantReport {
    let n = g.n();
    let m = g.edge_count() as i64;
    let mut sum_d2 = 0i64;
    let mut sum_d3 = 0i64;
    for v in 0..n {
        let d = g.degree(v) as i64;
        sum_d2 += d * d;
        sum_d3 += d * d * d;
    }
    let t = g.triangle_count() as i64;
    let cubic = match kind {
        MatrixKind::Laplacian => -6 * t + sum_d3,
        MatrixKind::Signless => 6 * t + sum_d3,
    };
    InvariantReport {
        n,
        m,
        sum_d2,
        cubic,
        kind,
        t_known: Some(t),
    }
}

fn to_i64(v: &BigInt, what: &'static str) -> Result<i64, InvariantError> {
    v.to_i64().ok_or(InvariantError::Implausible(what))
}

/// Invert the leading coefficients of a monic psi. Writing
/// psi = sum_j (-1)^j c_j x^(n-j), the values are m = c_1 / 2,
/// sum d^2 = 4m^2 + 2m - 2 c_2, and
/// cubic = 3 c_3 - 6m^2 + 3 sum d^2 - 4m^3 + 3m sum d^2.
pub fn poly_invariants(p: &IntPoly, kind: MatrixKind) -> Result<InvariantReport, InvariantError> {
    let n = match p.degree() {
        None => return Err(InvariantError::ZeroPolynomial),
        Some(0) => return Err(InvariantError::DegreeZero),
        Some(d) => d,
    };
    if n > crate::graph::MAX_VERTICES {
        return Err(InvariantError::Implausible("vertex count"));
    }
    if !p.is_monic() {
        return Err(InvariantError::NonMonic);
    }
    // signed coefficient values c_j = (-1)^j * coeff(n - j)
    let c = |j: usize| -> BigInt {
        let v = p.coeff(n - j);
        if j.is_multiple_of(2) {
            v
        } else {
            -v
        }
    };

    let c1 = c(1);
    if c1.is_negative() || (&c1 % 2) != BigInt::zero() {
        return Err(InvariantError::NonIntegral("edge count"));
    }
    let m_big = &c1 / 2;
    let m = to_i64(&m_big, "edge count")?;
    if (m as i128) > (n as i128) * (n as i128 - 1) / 2 {
        return Err(InvariantError::Implausible("edge count"));
    }

    let sum_d2 = if n >= 2 {
        let c2 = c(2);
        let v = 4 * &m_big * &m_big + 2 * &m_big - 2 * c2;
        let v = to_i64(&v, "degree square sum")?;
        if v < 2 * m {
            return Err(InvariantError::Implausible("degree square sum"));
        }
        if v % 2 != 0 {
            return Err(InvariantError::NonIntegral("degree square sum"));
        }
        v
    } else {
        if m != 0 {
            return Err(InvariantError::Implausible("edge count"));
        }
        0
    };

    let cubic = if n >= 3 {
        let c3 = c(3);
        let s2 = BigInt::from(sum_d2);
        let v = 3 * c3 - 6 * &m_big * &m_big + 3 * &s2 - 4 * &m_big * &m_big * &m_big
            + 3 * &m_big * &s2;
        to_i64(&v, "cubic value")?
    } else {
        // all degrees are 0 or 1, so cubes equal squares and no triangles fit
        sum_d2
    };

    Ok(InvariantReport {
        n,
        m,
        sum_d2,
        cubic,
        kind,
        t_known: None,
    })
}

/// One solution of a degree system: a triangle count and the vertex counts
/// by degree (`k[i]` vertices of degree i, i < n), plus whether the histogram
/// passes the realizability inequalities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSolution {
    pub t: i64,
    pub k: Vec<i64>,
    pub graphical: bool,
}

impl DegreeSolution {
    /// The degree multiset, descending.
    pub fn degrees(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for (i, &count) in self.k.iter().enumerate().rev() {
            for _ in 0..count {
                out.push(i as i64);
            }
        }
        out
    }

    /// Largest degree with a nonzero count.
    pub fn max_degree(&self) -> usize {
        self.k.iter().rposition(|&c| c > 0).unwrap_or(0)
    }
}

/// Erdos-Gallai test: a descending degree sequence is realizable by a simple
/// graph iff the sum is even and every prefix satisfies
/// sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k).
pub fn erdos_gallai_graphical(degrees_desc: &[i64]) -> bool {
    let n = degrees_desc.len();
    let total: i64 = degrees_desc.iter().sum();
    if total % 2 != 0 {
        return false;
    }
    if degrees_desc.iter().any(|&d| d < 0 || d >= n as i64) {
        return false;
    }
    let mut lhs = 0i64;
    for k in 1..=n {
        lhs += degrees_desc[k - 1];
        let mut rhs = (k as i64) * (k as i64 - 1);
        for &d in &degrees_desc[k..] {
            rhs += d.min(k as i64);
        }
        if lhs > rhs {
            return false;
        }
    }
    true
}

#[allow(clippy::too_many_arguments)]
fn dfs_solutions(
    i: usize,
    rem_count: i64,
    rem_s1: i64,
    rem_s2: i64,
    sum_i3: i64,
    k: &mut Vec<i64>,
    report: &InvariantReport,
    out: &mut Vec<DegreeSolution>,
) {
    if i == 1 {
        // degree 1 contributes equally to the first and second moments
        let k1 = rem_s1;
        if k1 != rem_s2 || k1 < 0 || k1 > rem_count {
            return;
        }
        let k0 = rem_count - k1;
        let total_i3 = sum_i3 + k1;
        let six_t = match report.kind {
            MatrixKind::Laplacian => total_i3 - report.cubic,
            MatrixKind::Signless => report.cubic - total_i3,
        };
        if six_t < 0 || six_t % 6 != 0 {
            return;
        }
        let mut kv = k.clone();
        kv[1] = k1;
        kv[0] = k0;
        let sol = DegreeSolution {
            t: six_t / 6,
            k: kv,
            graphical: false,
        };
        let graphical = erdos_gallai_graphical(&sol.degrees());
        out.push(DegreeSolution { graphical, ..sol });
        return;
    }
    let ii = i as i64;
    // remaining degrees are at most i from here down
    if rem_s1 > ii * rem_count || rem_s2 > ii * ii * rem_count || rem_s2 < rem_s1 {
        return;
    }
    let max_k = rem_count.min(rem_s1 / ii).min(rem_s2 / (ii * ii));
    for ki in 0..=max_k {
        k[i] = ki;
        dfs_solutions(
            i - 1,
            rem_count - ki,
            rem_s1 - ki * ii,
            rem_s2 - ki * ii * ii,
            sum_i3 + ki * ii * ii * ii,
            k,
            report,
            out,
        );
        k[i] = 0;
    }
}

/// Enumerate every non-negative integer solution (t, k_0..k_{n-1}) of
/// sum k_i = n, sum i k_i = 2m, sum i^2 k_i = sum_d2, and the cubic
/// constraint -/+ 6t + sum i^3 k_i = cubic (sign by matrix kind). Solutions
/// come back in ascending lexicographic order of the k vector, each tagged
/// with its realizability verdict; an empty list is a valid outcome.
/// Reports beyond the 64-vertex graph cap are out of domain and yield none.
pub fn solve_degree_system(report: &InvariantReport) -> Vec<DegreeSolution> {
    let n = report.n;
    let mut out = Vec::new();
    if n == 0 || n > crate::graph::MAX_VERTICES {
        return out;
    }
    let mut k = vec![0i64; n];
    if n == 1 {
        // a single vertex has degree 0
        if report.m == 0 && report.sum_d2 == 0 && report.cubic == 0 {
            out.push(DegreeSolution {
                t: 0,
                k: vec![1],
                graphical: true,
            });
        }
        return out;
    }
    dfs_solutions(
        n - 1,
        n as i64,
        2 * report.m,
        report.sum_d2,
        0,
        &mut k,
        report,
        &mut out,
    );
    out.sort_by(|a, b| a.k.cmp(&b.k));
    out
}
