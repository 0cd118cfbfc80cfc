//! Exhaustive generation of graphs up to isomorphism, for `1 <= n <= 9`.
//!
//! Level `n` is built from the representatives of level `n - 1` by adding a
//! vertex with every possible neighbourhood. Only augmentations in which the
//! new vertex has minimum degree are kept, since deleting a minimum-degree
//! vertex of any graph lands in the previous level. Candidates are reduced
//! to canonical form and deduplicated.

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::canonical_form;
use crate::graph::{bits, Graph};

pub const MAX_ENUMERATION_ORDER: usize = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("built-in enumeration covers 1 <= n <= {MAX_ENUMERATION_ORDER}, got {0}")]
pub struct OrderOutOfRange(pub usize);

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub no_isolated: bool,
    pub connected: bool,
}

fn level_from(parents: &[Graph], n: usize) -> Vec<Graph> {
    let mut codes: Vec<u128> = parents
        .par_iter()
        .flat_map_iter(|p| {
            let mut local = Vec::new();
            let mut adj: Vec<u64> = p.adjacency().to_vec();
            adj.push(0);
            for nbhd in 0..1u64 << (n - 1) {
                let d = nbhd.count_ones();
                // Degrees in the augmented graph.
                let min_other = (0..n - 1)
                    .map(|u| adj[u].count_ones() + (nbhd >> u & 1) as u32)
                    .min()
                    .unwrap_or(u32::MAX);
                if d > min_other {
                    continue;
                }
                let mut rows = adj.clone();
                for u in bits(nbhd) {
                    rows[u] |= 1 << (n - 1);
                }
                rows[n - 1] = nbhd;
                local.push(canonical_form(&Graph::from_adjacency(rows)).packed());
            }
            local.sort_unstable();
            local.dedup();
            local
        })
        .collect();
    codes.par_sort_unstable();
    codes.dedup();
    codes.into_iter().map(|c| unpack(c, n)).collect()
}

fn unpack(code: u128, n: usize) -> Graph {
    let mask = (1u128 << n) - 1;
    Graph::from_adjacency((0..n).map(|i| (code >> (i * n) & mask) as u64).collect())
}

/// Representatives for every order `1..=max_n`; entry `k` holds order `k + 1`.
pub fn enumerate_levels(max_n: usize) -> Result<Vec<Vec<Graph>>, OrderOutOfRange> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&max_n) {
        return Err(OrderOutOfRange(max_n));
    }
    let mut levels = vec![vec![Graph::empty(1)]];
    for k in 2..=max_n {
        let next = level_from(&levels[k - 2], k);
        levels.push(next);
    }
    Ok(levels)
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// in canonical form and sorted by canonical code.
pub fn enumerate_graphs(n: usize, opts: EnumerateOptions) -> Result<Vec<Graph>, OrderOutOfRange> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(OrderOutOfRange(n));
    }
    let mut level = enumerate_levels(n)?.pop().expect("n >= 1");
    level.retain(|g| (!opts.no_isolated || !g.has_isolated_vertex()) && (!opts.connected || g.is_connected()));
    Ok(level)
}
