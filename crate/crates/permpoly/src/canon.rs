//! Exhaustive canonical form for small graphs and the built-in census of
//! isomorphism-class representatives.
//!
//! The canonical key of a graph is the lexicographically minimal upper-
//! triangle bitstring over all vertex permutations, prefixed by the vertex
//! count. Minimization is exhaustive, so identical keys are exactly the
//! isomorphic graphs; the order cap keeps the factorial search honest.

use crate::graph::Graph;
use thiserror::Error;

/// Cap for the exhaustive canonical form (10! permutations).
pub const CANON_MAX: usize = 10;

/// Cap for the built-in census; larger orders come from a graph6 stream.
pub const ENUM_MAX: usize = 7;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CanonError {
    #[error("canonical form supports at most {CANON_MAX} vertices, got {0}")]
    OrderTooLarge(usize),
    #[error("built-in enumeration supports at most {ENUM_MAX} vertices, got {0}; supply a graph6 stream instead")]
    EnumOrderTooLarge(usize),
}

/// Row `i` of the upper triangle under a permutation: bits for pairs
/// (i, i+1), ..., (i, n-1), most significant first.
fn row_bits(g: &Graph, perm: &[usize], i: usize) -> u16 {
    let n = perm.len();
    let mask = g.adj_mask(perm[i]);
    let mut row = 0u16;
    for &pj in &perm[i + 1..n] {
        row = (row << 1) | ((mask >> pj) & 1) as u16;
    }
    row
}

/// Minimal upper-triangle rows over all permutations, with prefix pruning:
/// a permutation is abandoned at the first row that already exceeds the best.
fn minimal_rows(g: &Graph) -> Vec<u16> {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Vec<u16> = (0..n.saturating_sub(1))
        .map(|i| row_bits(g, &perm, i))
        .collect();

    // Heap's algorithm, evaluating each permutation against the running best.
    let mut counters = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            // evaluate
            let mut better = false;
            for (r, slot) in best.iter_mut().enumerate() {
                let row = row_bits(g, &perm, r);
                if !better {
                    if row > *slot {
                        break;
                    }
                    if row < *slot {
                        better = true;
                        *slot = row;
                    }
                } else {
                    *slot = row;
                }
            }
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    best
}

/// Canonical key: vertex count byte followed by the packed minimal
/// upper-triangle bitstring. Equal keys hold exactly for isomorphic graphs.
pub fn canonical_key(g: &Graph) -> Result<Vec<u8>, CanonError> {
    let n = g.n();
    if n > CANON_MAX {
        return Err(CanonError::OrderTooLarge(n));
    }
    let rows = minimal_rows(g);
    let mut key = vec![n as u8];
    let mut acc = 0u8;
    let mut filled = 0u8;
    for (i, &row) in rows.iter().enumerate() {
        let width = n - 1 - i;
        for b in (0..width).rev() {
            acc = (acc << 1) | ((row >> b) & 1) as u8;
            filled += 1;
            if filled == 8 {
                key.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        key.push(acc << (8 - filled));
    }
    Ok(key)
}

/// One representative per isomorphism class of simple graphs on `n` vertices,
/// connected or not, in a deterministic order (by edge count, then key).
///
/// Representatives on k vertices are grown from the (k-1)-vertex classes by
/// attaching a new vertex with every possible neighborhood and deduplicating
/// by canonical key; every k-vertex graph arises this way from the class of
/// itself minus its last vertex.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>, CanonError> {
    if n == 0 || n > ENUM_MAX {
        return Err(CanonError::EnumOrderTooLarge(n));
    }
    let mut reps = vec![Graph::single()];
    for k in 2..=n {
        let mut seen: std::collections::BTreeMap<Vec<u8>, Graph> = Default::default();
        for g in &reps {
            for mask in 0..(1u64 << (k - 1)) {
                let h = g.with_new_vertex(mask).expect("k <= 7");
                let key = canonical_key(&h).expect("k <= 7");
                seen.entry(key).or_insert(h);
            }
        }
        reps = seen.into_values().collect();
    }
    let mut keyed: Vec<(usize, Vec<u8>, Graph)> = reps
        .into_iter()
        .map(|g| {
            let key = canonical_key(&g).expect("n <= 7");
            (g.edge_count(), key, g)
        })
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(keyed.into_iter().map(|(_, _, g)| g).collect())
}

/// One representative per isomorphism class of connected simple graphs on
/// `n` vertices, deterministic order.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, CanonError> {
    Ok(enumerate_all(n)?
        .into_iter()
        .filter(|g| g.is_connected())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelings_share_keys() {
        let a = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::new(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_key(&a).unwrap(), canonical_key(&b).unwrap());
    }

    #[test]
    fn p3_vs_k3_differ() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_ne!(canonical_key(&p3).unwrap(), canonical_key(&k3).unwrap());
    }

    #[test]
    fn key_invariant_under_permutation() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        let key = canonical_key(&g).unwrap();
        let mut perm: Vec<usize> = (0..6).collect();
        // a fixed set of permutations produced by rotating and swapping
        for r in 0..100 {
            perm.rotate_left(1);
            perm.swap(r % 6, (r + 2) % 6);
            let h = g.permute(&perm);
            assert_eq!(canonical_key(&h).unwrap(), key);
        }
    }

    #[test]
    fn too_large_rejected() {
        let g = Graph::new(11, &[]).unwrap();
        assert_eq!(canonical_key(&g), Err(CanonError::OrderTooLarge(11)));
        assert_eq!(
            enumerate_all(8).unwrap_err(),
            CanonError::EnumOrderTooLarge(8)
        );
    }

    #[test]
    fn census_counts_small() {
        assert_eq!(enumerate_all(1).unwrap().len(), 1);
        assert_eq!(enumerate_all(2).unwrap().len(), 2);
        assert_eq!(enumerate_all(3).unwrap().len(), 4);
        assert_eq!(enumerate_all(4).unwrap().len(), 11);
        assert_eq!(enumerate_connected(1).unwrap().len(), 1);
        assert_eq!(enumerate_connected(3).unwrap().len(), 2);
        assert_eq!(enumerate_connected(4).unwrap().len(), 6);
    }

    /// Independent oracle: enumerate every edge subset, keep connected ones,
    /// and count isomorphism classes by canonical key.
    fn census_by_edge_subsets(n: usize) -> (usize, usize) {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let mut all = std::collections::BTreeSet::new();
        let mut connected = std::collections::BTreeSet::new();
        for mask in 0u64..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| (mask >> i) & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(n, &edges).unwrap();
            let key = canonical_key(&g).unwrap();
            if g.is_connected() {
                connected.insert(key.clone());
            }
            all.insert(key);
        }
        (all.len(), connected.len())
    }

    #[test]
    fn census_matches_edge_subset_oracle() {
        for n in 1..=5 {
            let (all, conn) = census_by_edge_subsets(n);
            assert_eq!(enumerate_all(n).unwrap().len(), all, "all graphs on {n}");
            assert_eq!(
                enumerate_connected(n).unwrap().len(),
                conn,
                "connected graphs on {n}"
            );
        }
    }

    #[test]
    fn census_counts_frozen() {
        // classical counts for 6 and 7 vertices
        assert_eq!(enumerate_all(6).unwrap().len(), 156);
        assert_eq!(enumerate_connected(6).unwrap().len(), 112);
        assert_eq!(enumerate_all(7).unwrap().len(), 1044);
        assert_eq!(enumerate_connected(7).unwrap().len(), 853);
    }

    #[test]
    fn census_order_is_deterministic() {
        let a = enumerate_connected(5).unwrap();
        let b = enumerate_connected(5).unwrap();
        assert_eq!(a, b);
        // sorted by edge count first
        let edges: Vec<usize> = a.iter().map(|g| g.edge_count()).collect();
        let mut sorted = edges.clone();
        sorted.sort_unstable();
        assert_eq!(edges, sorted);
    }
}
