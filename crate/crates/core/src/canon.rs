//! Canonical labelling and isomorphism testing for small graphs.
//!
//! Individualisation-refinement: the ordered partition is refined to an
//! equitable one, then the first non-singleton cell is split by
//! individualising each of its vertices in turn. Leaves are scored by their
//! relabelled adjacency rows; the smallest wins. Two vertices of the target
//! cell that are twins (equal neighbourhoods apart from each other) span
//! isomorphic subtrees, so only one of them is expanded.

use crate::graph::{bit, bits, Graph};

/// Canonical form of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    /// Relabelled adjacency rows; equal for isomorphic graphs only.
    pub code: Vec<u64>,
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<usize>,
}

impl Canonical {
    pub fn graph(&self) -> Graph {
        Graph::from_adjacency(self.code.clone())
    }

    /// Packs the code into one integer; only valid for graphs on at most 11 vertices.
    pub fn packed(&self) -> u128 {
        let n = self.code.len();
        assert!(n <= 11);
        self.code
            .iter()
            .enumerate()
            .fold(0u128, |acc, (i, &row)| acc | (row as u128) << (i * n))
    }
}

pub fn canonical_form(g: &Graph) -> Canonical {
    let n = g.n();
    if n == 0 {
        return Canonical {
            code: Vec::new(),
            labeling: Vec::new(),
        };
    }
    let mut search = Search {
        g,
        best: None,
        rows: vec![0; n],
    };
    let cells = refine(g, vec![g.all()]);
    search.descend(cells);
    let (code, labeling) = search.best.expect("search reaches at least one leaf");
    Canonical { code, labeling }
}

/// Returns a bijection `f` with `g1.has_edge(u, v) == g2.has_edge(f[u], f[v])`, if one exists.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    if g1.degree_sequence() != g2.degree_sequence() {
        return None;
    }
    let c1 = canonical_form(g1);
    let c2 = canonical_form(g2);
    if c1.code != c2.code {
        return None;
    }
    let mut inverse2 = vec![0; g2.n()];
    for (v, &p) in c2.labeling.iter().enumerate() {
        inverse2[p] = v;
    }
    Some(c1.labeling.iter().map(|&p| inverse2[p]).collect())
}

/// Checks that `map` is an isomorphism from `g1` onto `g2`.
pub fn is_isomorphism(g1: &Graph, g2: &Graph, map: &[usize]) -> bool {
    if g1.n() != g2.n() || map.len() != g1.n() {
        return false;
    }
    let mut seen = 0u64;
    for &m in map {
        if m >= g2.n() || seen & bit(m) != 0 {
            return false;
        }
        seen |= bit(m);
    }
    (0..g1.n()).all(|u| (0..g1.n()).all(|v| g1.has_edge(u, v) == g2.has_edge(map[u], map[v])))
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    rows: Vec<u64>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<u64>) {
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target];
        let mut expanded: Vec<usize> = Vec::new();
        for v in bits(cell) {
            if expanded.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            expanded.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(bit(v));
            next.push(cell & !bit(v));
            next.extend_from_slice(&cells[target + 1..]);
            let next = refine(self.g, next);
            self.descend(next);
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        self.g.adj(u) & !bit(v) == self.g.adj(v) & !bit(u)
    }

    fn leaf(&mut self, cells: &[u64]) {
        let n = self.g.n();
        let mut labeling = vec![0usize; n];
        for (pos, &c) in cells.iter().enumerate() {
            labeling[c.trailing_zeros() as usize] = pos;
        }
        for v in 0..n {
            self.rows[labeling[v]] = bits(self.g.adj(v)).fold(0, |m, w| m | bit(labeling[w]));
        }
        let better = match &self.best {
            None => true,
            Some((code, _)) => self.rows < *code,
        };
        if better {
            self.best = Some((self.rows.clone(), labeling));
        }
    }
}

/// Refines an ordered partition (cells as masks) to the coarsest equitable
/// refinement. New cells are ordered by their neighbour-count signatures, so
/// the result commutes with relabelling.
pub(crate) fn refine(g: &Graph, mut cells: Vec<u64>) -> Vec<u64> {
    loop {
        let k = cells.len();
        let mut next: Vec<u64> = Vec::with_capacity(g.n());
        let mut keyed: Vec<(Vec<u8>, usize)> = Vec::new();
        for &cell in &cells {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            keyed.clear();
            for v in bits(cell) {
                let sig = cells
                    .iter()
                    .map(|&c| (g.adj(v) & c).count_ones() as u8)
                    .collect();
                keyed.push((sig, v));
            }
            keyed.sort();
            let mut current = 0u64;
            for i in 0..keyed.len() {
                if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                    next.push(current);
                    current = 0;
                }
                current |= bit(keyed[i].1);
            }
            next.push(current);
        }
        if next.len() == k {
            return next;
        }
        cells = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// Brute-force oracle: try all permutations.
    fn brute_iso(g1: &Graph, g2: &Graph) -> bool {
        fn rec(g1: &Graph, g2: &Graph, map: &mut Vec<usize>, used: u64) -> bool {
            let u = map.len();
            if u == g1.n() {
                return true;
            }
            for w in 0..g2.n() {
                if used & bit(w) != 0 {
                    continue;
                }
                if (0..u).all(|x| g1.has_edge(x, u) == g2.has_edge(map[x], w)) {
                    map.push(w);
                    if rec(g1, g2, map, used | bit(w)) {
                        return true;
                    }
                    map.pop();
                }
            }
            false
        }
        g1.n() == g2.n() && rec(g1, g2, &mut Vec::new(), 0)
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = cycle(5);
        let w = is_isomorphic(&c5, &c5.complement()).expect("isomorphic");
        assert!(is_isomorphism(&c5, &c5.complement(), &w));
        assert!(brute_iso(&c5, &c5.complement()));
    }

    #[test]
    fn triangle_is_not_a_path() {
        let path = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        assert!(is_isomorphic(&cycle(3), &path).is_none());
    }

    #[test]
    fn symmetric_graphs_are_quick() {
        let k = Graph::empty(40).complement();
        let c = canonical_form(&k);
        assert_eq!(c.graph(), k);
        let e = Graph::empty(40);
        assert_eq!(canonical_form(&e).graph(), e);
    }

    #[test]
    fn agrees_with_brute_force_on_random_pairs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..400 {
            let n = rng.gen_range(1..=7);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g1 = Graph::from_edge_list(n, edges).unwrap();
            // Same degree sequence often, different structure sometimes.
            let g2 = if rng.gen_bool(0.5) {
                let mut p: Vec<usize> = (0..n).collect();
                for i in (1..n).rev() {
                    p.swap(i, rng.gen_range(0..=i));
                }
                g1.relabel(&p)
            } else {
                g1.complement()
            };
            let fast = is_isomorphic(&g1, &g2);
            assert_eq!(fast.is_some(), brute_iso(&g1, &g2), "{g1:?} vs {g2:?}");
            if let Some(w) = fast {
                assert!(is_isomorphism(&g1, &g2, &w));
            }
        }
    }
}
