//! Exhaustive search for co-permanental mates: non-isomorphic graphs sharing
//! the target's polynomial on every requested matrix kind.
//!
//! Candidates come from the built-in census (all isomorphism classes, up to
//! 7 vertices) or from a newline-delimited graph6 stream. Candidates with the
//! wrong edge count can never match (the second coefficient pins 2m down),
//! so they are pruned before any polynomial is computed. The candidate scan
//! is distributed across threads; results are merged back in census order so
//! reports are deterministic.

use crate::canon::{canonical_key, enumerate_all, CanonError, ENUM_MAX};
use crate::engines::{psi, EngineError, Method};
use crate::graph::{Graph, MatrixKind};
use crate::graph6::{self, Graph6Error};
use crate::poly::IntPoly;
use rayon::prelude::*;
use thiserror::Error;

/// Where mate candidates come from.
#[derive(Debug, Clone, Copy)]
pub enum MateSource<'a> {
    /// Built-in census of all isomorphism classes on the target's order.
    Builtin,
    /// Newline-delimited graph6 text, one candidate per line.
    Graph6Text(&'a str),
}

/// What to do with a malformed stream line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StreamErrorPolicy {
    /// Fail the whole search, reporting the offending line.
    #[default]
    Abort,
    /// Skip the line and record it in the report.
    Skip,
}

#[derive(Debug, Error)]
pub enum MateError {
    #[error("built-in census covers at most {ENUM_MAX} vertices, got {0}")]
    CensusTooLarge(usize),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error("line {line}: {source}")]
    Stream { line: usize, source: Graph6Error },
    #[error("line {line}: candidate has {got} vertices, target has {expected}")]
    WrongOrder {
        line: usize,
        got: usize,
        expected: usize,
    },
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Outcome of a mate search. `mates` holds graph6 strings of one
/// representative per isomorphism class of matching non-isomorphic graphs;
/// the target's own class is excluded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MateReport {
    pub target_g6: String,
    pub kinds: Vec<MatrixKind>,
    pub census_size: usize,
    pub connected_only: bool,
    pub mates: Vec<String>,
    /// (line number, error text) for lines skipped under `Skip` policy.
    pub skipped: Vec<(usize, String)>,
}

impl MateReport {
    pub fn determined(&self) -> bool {
        self.mates.is_empty()
    }
}

/// Search a census for graphs sharing the target's psi on every requested
/// kind. `connected_only` restricts the census to connected candidates,
/// matching claims stated for connected graphs; by default disconnected
/// candidates stay in.
pub fn mate_search(
    target: &Graph,
    kinds: &[MatrixKind],
    source: MateSource,
    connected_only: bool,
    policy: StreamErrorPolicy,
) -> Result<MateReport, MateError> {
    let n = target.n();
    let mut skipped: Vec<(usize, String)> = Vec::new();
    let candidates: Vec<Graph> = match source {
        MateSource::Builtin => {
            if n > ENUM_MAX {
                return Err(MateError::CensusTooLarge(n));
            }
            enumerate_all(n)?
        }
        MateSource::Graph6Text(text) => {
            let mut out = Vec::new();
            for (line, decoded) in graph6::decode_lines(text) {
                match decoded {
                    Ok(g) => {
                        if g.n() != n {
                            match policy {
                                StreamErrorPolicy::Abort => {
                                    return Err(MateError::WrongOrder {
                                        line,
                                        got: g.n(),
                                        expected: n,
                                    })
                                }
                                StreamErrorPolicy::Skip => {
                                    skipped.push((line, format!("wrong order {}", g.n())));
                                }
                            }
                        } else {
                            out.push(g);
                        }
                    }
                    Err(e) => match policy {
                        StreamErrorPolicy::Abort => {
                            return Err(MateError::Stream { line, source: e })
                        }
                        StreamErrorPolicy::Skip => skipped.push((line, e.to_string())),
                    },
                }
            }
            out
        }
    };

    let candidates: Vec<Graph> = if connected_only {
        candidates
            .into_iter()
            .filter(|g| g.is_connected())
            .collect()
    } else {
        candidates
    };

    let m_target = target.edge_count();
    let targets: Vec<(MatrixKind, IntPoly)> = kinds
        .iter()
        .map(|&kind| psi(target, kind, Method::Auto).map(|p| (kind, p)))
        .collect::<Result<_, _>>()?;
    let target_key = canonical_key(target)?;

    // scan in parallel, keep census order for determinism
    let matched: Vec<(usize, &Graph)> = candidates
        .par_iter()
        .enumerate()
        .filter_map(|(idx, g)| {
            if g.edge_count() != m_target {
                return None;
            }
            for (kind, target_poly) in &targets {
                match psi(g, *kind, Method::Auto) {
                    Ok(p) if &p == target_poly => {}
                    _ => return None,
                }
            }
            Some((idx, g))
        })
        .collect();
    let mut matched = matched;
    matched.sort_by_key(|(idx, _)| *idx);

    let mut seen_keys = vec![target_key];
    let mut mates = Vec::new();
    for (_, g) in matched {
        let key = canonical_key(g)?;
        if seen_keys.contains(&key) {
            continue;
        }
        seen_keys.push(key);
        mates.push(graph6::encode(g));
    }

    Ok(MateReport {
        target_g6: graph6::encode(target),
        kinds: kinds.to_vec(),
        census_size: candidates.len(),
        connected_only,
        mates,
        skipped,
    })
}
