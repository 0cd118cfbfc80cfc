//! Independent sets: maximal independent sets, `α(G)`, well-covered and W₂
//! recognition, local triangle-freeness.
//!
//! Everything here works on an induced subgraph `G[mask]` given by a vertex
//! mask, so derived graphs such as `G_S` or `G ∖ v` never get materialised in
//! the hot loops of the verification sweeps.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{bit, bits, components_within, lex_cmp, triangle_free_within, Graph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("graph has isolated vertices {0:?}; W2 is only defined without them")]
pub struct IsolatedVertexError(pub VertexSet);

/// Summary of the maximal independent sets of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceSummary {
    pub alpha: usize,
    pub mis_count: usize,
    /// Size of a maximal independent set -> how many there are.
    pub mis_sizes: BTreeMap<usize, usize>,
    pub well_covered: bool,
}

/// Bron–Kerbosch with pivoting on the complement, restricted to `mask`.
/// `emit` returns `false` to stop the enumeration; the return value reports
/// whether it ran to completion.
pub(crate) fn for_each_mis_within<F>(g: &Graph, mask: u64, emit: &mut F) -> bool
where
    F: FnMut(u64) -> bool,
{
    fn rec<F: FnMut(u64) -> bool>(g: &Graph, r: u64, mut p: u64, mut x: u64, emit: &mut F) -> bool {
        if p == 0 {
            return x != 0 || emit(r);
        }
        // Non-neighbours of v (excluding v) play the role of clique neighbours.
        let pivot = bits(p | x)
            .max_by_key(|&u| (p & !g.adj(u) & !bit(u)).count_ones())
            .expect("p is nonempty");
        let candidates = p & (g.adj(pivot) | bit(pivot));
        for v in bits(candidates) {
            let keep = !g.adj(v) & !bit(v);
            if !rec(g, r | bit(v), p & keep, x & keep, emit) {
                return false;
            }
            p &= !bit(v);
            x |= bit(v);
        }
        true
    }
    rec(g, 0, mask, 0, emit)
}

/// All maximal independent sets, sorted lexicographically by sorted vertex list.
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    mis_within(g, g.all())
}

pub(crate) fn mis_within(g: &Graph, mask: u64) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for_each_mis_within(g, mask, &mut |s| {
        out.push(VertexSet::from_bits(s));
        true
    });
    out.sort_by(|a, b| lex_cmp(*a, *b));
    out
}

/// `α(G[mask])` by branching on a minimum-degree vertex: some maximum
/// independent set meets its closed neighbourhood.
pub(crate) fn alpha_within(g: &Graph, mask: u64) -> usize {
    if mask == 0 {
        return 0;
    }
    let v = bits(mask)
        .min_by_key(|&v| (g.adj(v) & mask).count_ones())
        .expect("mask is nonempty");
    let closed = (g.adj(v) & mask) | bit(v);
    if closed == bit(v) {
        return 1 + alpha_within(g, mask & !bit(v));
    }
    bits(closed)
        .map(|u| 1 + alpha_within(g, mask & !(g.adj(u) | bit(u))))
        .max()
        .unwrap_or(0)
}

pub fn independence_number(g: &Graph) -> usize {
    alpha_within(g, g.all())
}

/// Whether every maximal independent set of `G[mask]` has the same size;
/// returns that size when it does. The empty graph is well-covered with `α = 0`.
pub(crate) fn well_covered_size_within(g: &Graph, mask: u64) -> Option<usize> {
    let mut size: Option<u32> = None;
    let uniform = for_each_mis_within(g, mask, &mut |s| {
        let c = s.count_ones();
        match size {
            None => {
                size = Some(c);
                true
            }
            Some(k) => k == c,
        }
    });
    uniform.then(|| size.unwrap_or(0) as usize)
}

pub fn is_well_covered(g: &Graph) -> bool {
    well_covered_size_within(g, g.all()).is_some()
}

pub fn independence_summary(g: &Graph) -> IndependenceSummary {
    let mut sizes = BTreeMap::new();
    let mut count = 0;
    for_each_mis_within(g, g.all(), &mut |s| {
        *sizes.entry(s.count_ones() as usize).or_insert(0) += 1;
        count += 1;
        true
    });
    IndependenceSummary {
        alpha: sizes.keys().next_back().copied().unwrap_or(0),
        mis_count: count,
        well_covered: sizes.len() <= 1,
        mis_sizes: sizes,
    }
}

/// W₂ membership of `G[mask]`, assuming it has no isolated vertices.
pub(crate) fn w2_within(g: &Graph, mask: u64) -> bool {
    let Some(alpha) = well_covered_size_within(g, mask) else {
        return false;
    };
    bits(mask).all(|v| well_covered_size_within(g, mask & !bit(v)) == Some(alpha))
}

pub(crate) fn has_isolated_within(g: &Graph, mask: u64) -> bool {
    bits(mask).any(|v| g.adj(v) & mask == 0)
}

/// Well-covered, and deleting any single vertex leaves a well-covered graph
/// with the same independence number.
pub fn is_w2(g: &Graph) -> Result<bool, IsolatedVertexError> {
    let iso = g.isolated_vertices();
    if !iso.is_empty() {
        return Err(IsolatedVertexError(iso));
    }
    Ok(w2_within(g, g.all()))
}

pub(crate) fn locally_triangle_free_within(g: &Graph, mask: u64) -> bool {
    bits(mask).all(|v| triangle_free_within(g, mask & !g.adj(v) & !bit(v)))
}

/// `G_v` is triangle-free for every vertex `v`.
pub fn is_locally_triangle_free(g: &Graph) -> bool {
    locally_triangle_free_within(g, g.all())
}

/// Every connected component of `G[mask]` with at least two vertices is
/// triangle-free and in W₂.
pub(crate) fn nontrivial_components_tf_w2(g: &Graph, mask: u64) -> bool {
    components_within(g, mask)
        .into_iter()
        .filter(|c| c.count_ones() >= 2)
        .all(|c| triangle_free_within(g, c) && w2_within(g, c))
}

pub(crate) fn nontrivial_components_w2(g: &Graph, mask: u64) -> bool {
    components_within(g, mask)
        .into_iter()
        .filter(|c| c.count_ones() >= 2)
        .all(|c| w2_within(g, c))
}

/// All independent sets of `G[mask]` (the faces of its independence complex), including `∅`.
pub(crate) fn independent_sets_within(g: &Graph, mask: u64) -> Vec<u64> {
    fn rec(g: &Graph, current: u64, allowed: u64, out: &mut Vec<u64>) {
        out.push(current);
        for v in bits(allowed) {
            let rest = allowed & !(bit(v) - 1) & !bit(v) & !g.adj(v);
            rec(g, current | bit(v), rest, out);
        }
    }
    let mut out = Vec::new();
    rec(g, 0, mask, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// Brute force over all subsets.
    fn brute_mis(g: &Graph) -> Vec<Vec<usize>> {
        let n = g.n();
        let indep: Vec<u64> = (0..1u64 << n)
            .filter(|&s| g.is_independent(VertexSet::from_bits(s)))
            .collect();
        let mut out: Vec<Vec<usize>> = indep
            .iter()
            .filter(|&&s| !indep.iter().any(|&t| t != s && t & s == s))
            .map(|&s| VertexSet::from_bits(s).to_vec())
            .collect();
        out.sort();
        out
    }

    fn as_lists(sets: &[VertexSet]) -> Vec<Vec<usize>> {
        sets.iter().map(|s| s.to_vec()).collect()
    }

    #[test]
    fn mis_of_small_cycles() {
        assert_eq!(as_lists(&maximal_independent_sets(&cycle(4))), vec![vec![0, 2], vec![1, 3]]);
        let c5 = maximal_independent_sets(&cycle(5));
        assert_eq!(as_lists(&c5), brute_mis(&cycle(5)));
        assert_eq!(c5.len(), 5);
        assert!(c5.iter().all(|s| s.len() == 2));
    }

    #[test]
    fn mis_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(0..=9);
            let p = rng.gen_range(0.1..0.9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edge_list(n, edges).unwrap();
            let fast = as_lists(&maximal_independent_sets(&g));
            let slow = brute_mis(&g);
            assert_eq!(fast, slow);
            let alpha = slow.iter().map(Vec::len).max().unwrap_or(0);
            assert_eq!(independence_number(&g), alpha);
            let wc = slow.iter().all(|s| s.len() == alpha);
            assert_eq!(is_well_covered(&g), wc);
        }
    }

    #[test]
    fn independence_numbers() {
        for n in 1..8 {
            assert_eq!(independence_number(&Graph::empty(n).complement()), 1);
        }
        assert_eq!(independence_number(&cycle(5)), 2);
        assert_eq!(independence_number(&Graph::empty(0)), 0);
    }

    #[test]
    fn well_covered_examples() {
        assert!(is_well_covered(&cycle(4)));
        assert!(!is_well_covered(&path(3)));
        assert!(is_well_covered(&cycle(7)));
        assert_eq!(independence_number(&cycle(7)), 3);
        assert!(is_well_covered(&Graph::empty(0)));
        let s = independence_summary(&path(3));
        assert_eq!(s.alpha, 2);
        assert_eq!(s.mis_count, 2);
        assert!(!s.well_covered);
    }

    #[test]
    fn w2_examples() {
        assert_eq!(is_w2(&cycle(5)), Ok(true));
        assert_eq!(is_w2(&cycle(4)), Ok(false));
        assert_eq!(is_w2(&path(2)), Ok(true));
        assert!(is_w2(&Graph::from_edge_list(3, [(0, 1)]).unwrap()).is_err());
        // 3K2 is triangle-free and in W2.
        let m3 = Graph::from_edge_list(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(is_w2(&m3), Ok(true));
    }

    #[test]
    fn locally_triangle_free_examples() {
        let k4 = Graph::empty(4).complement();
        assert!(is_locally_triangle_free(&k4));
        // Triangle with a pendant vertex: G_pendant is a single edge.
        let pendant = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        assert!(is_locally_triangle_free(&pendant));
        // Two disjoint triangles joined through a connector adjacent to one
        // vertex of each: the connector's G_v contains both other edges but a
        // triangle vertex far from it sees the opposite triangle whole.
        let g = Graph::from_edge_list(
            7,
            [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (6, 0), (6, 3)],
        )
        .unwrap();
        assert!(!is_locally_triangle_free(&g));
    }

    #[test]
    fn independent_sets_enumeration() {
        let c5 = cycle(5);
        let faces = independent_sets_within(&c5, c5.all());
        // 1 empty + 5 vertices + 5 non-edges.
        assert_eq!(faces.len(), 11);
    }
}
