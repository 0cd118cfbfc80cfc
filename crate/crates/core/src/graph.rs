//! Simple undirected graphs on at most 64 vertices, stored as adjacency bitmasks.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    Loop(usize),
    #[error("{0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone)]
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub(crate) fn bits(mask: u64) -> Bits {
    Bits(mask)
}

/// A set of vertices of some graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(bit(v))
    }

    /// All of `0..n`.
    pub fn range(n: usize) -> Self {
        VertexSet(full_mask(n))
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !bit(v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        self.iter().next()
    }
}

/// Orders sets by their sorted member lists, lexicographically.
pub fn lex_cmp(a: VertexSet, b: VertexSet) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let d = a.0 ^ b.0;
    if d == 0 {
        return Ordering::Equal;
    }
    // Both lists agree below the lowest differing element `low`. The list
    // holding `low` is smaller unless the other one ends before reaching it.
    let low = d & d.wrapping_neg();
    let (holder_is_a, other) = if a.0 & low != 0 { (true, b.0) } else { (false, a.0) };
    let other_continues = other & !(low | (low - 1)) != 0;
    match (holder_is_a, other_continues) {
        (true, true) | (false, false) => Ordering::Less,
        (true, false) | (false, true) => Ordering::Greater,
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Bits;

    fn into_iter(self) -> Bits {
        Bits(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// A derived graph together with the vertex of the parent each new vertex came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `origin[i]` is the parent vertex that became vertex `i`.
    pub origin: Vec<usize>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n > MAX_VERTICES`.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES, "graph on {n} vertices is too large");
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency masks. Masks are symmetrised and loops dropped.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Graph {
        let n = adj.len();
        let mut g = Graph::empty(n);
        for (u, &row) in adj.iter().enumerate() {
            for v in bits(row & full_mask(n) & !bit(u)) {
                g.adj[u] |= bit(v);
                g.adj[v] |= bit(u);
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(self.n)
    }

    pub(crate) fn all(&self) -> u64 {
        full_mask(self.n)
    }

    #[inline]
    pub(crate) fn adj(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !full_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Degrees sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v] == 0).collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.0 == 0)
    }

    pub fn complement(&self) -> Graph {
        let all = self.all();
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// `N(S)`: vertices outside `s` with a neighbour in `s`.
    pub fn open_neighborhood(&self, s: VertexSet) -> VertexSet {
        VertexSet(self.open_nbhd_mask(s.0))
    }

    /// `N[S] = S ∪ N(S)`.
    pub fn closed_neighborhood(&self, s: VertexSet) -> VertexSet {
        VertexSet(self.open_nbhd_mask(s.0) | (s.0 & self.all()))
    }

    #[inline]
    pub(crate) fn open_nbhd_mask(&self, s: u64) -> u64 {
        let mut acc = 0;
        for v in bits(s & self.all()) {
            acc |= self.adj[v];
        }
        acc & !s
    }

    /// Vertices of `G_S = G ∖ N[S]`, as a mask.
    #[inline]
    pub(crate) fn local_mask(&self, s: u64) -> u64 {
        let mut closed = s;
        for v in bits(s) {
            closed |= self.adj[v];
        }
        self.all() & !closed
    }

    /// `G[S]` relabelled onto `0..|S|` in increasing vertex order.
    pub fn induced(&self, s: VertexSet) -> Subgraph {
        let origin: Vec<usize> = s.intersection(self.vertices()).to_vec();
        let mut pos = [usize::MAX; 64];
        for (i, &v) in origin.iter().enumerate() {
            pos[v] = i;
        }
        let adj = origin
            .iter()
            .map(|&v| bits(self.adj[v] & s.0).fold(0u64, |m, w| m | bit(pos[w])))
            .collect();
        Subgraph {
            graph: Graph { n: origin.len(), adj },
            origin,
        }
    }

    /// `G_S = G ∖ N[S]`.
    pub fn local_graph(&self, s: VertexSet) -> Subgraph {
        self.induced(VertexSet(self.local_mask(s.0)))
    }

    /// `G ∖ {v}`.
    pub fn remove_vertex(&self, v: usize) -> Subgraph {
        self.induced(self.vertices().difference(VertexSet::singleton(v)))
    }

    /// Vertex `v` of `self` becomes vertex `perm[v]` of the result.
    ///
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut seen = 0u64;
        for &p in perm {
            assert!(p < self.n && seen & bit(p) == 0, "not a permutation");
            seen |= bit(p);
        }
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            adj[perm[u]] = bits(self.adj[u]).fold(0, |m, w| m | bit(perm[w]));
        }
        Graph { n: self.n, adj }
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    ///
    /// Panics if the result would exceed [`MAX_VERTICES`].
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        assert!(n <= MAX_VERTICES);
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Graph { n, adj }
    }

    /// The join `G₁ * G₂`: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        let left = full_mask(self.n);
        let right = g.all() & !left;
        for v in 0..g.n {
            g.adj[v] |= if v < self.n { right } else { left };
        }
        g
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        components_within(self, self.all()).into_iter().map(VertexSet).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || components_within(self, self.all()).len() == 1
    }

    /// A bipartition `(A, B)` when the graph has no odd cycle. Vertex `0` of
    /// every component lands in `A`.
    pub fn is_bipartite(&self) -> Option<(VertexSet, VertexSet)> {
        let mut side = [u8::MAX; 64];
        let (mut a, mut b) = (0u64, 0u64);
        for root in 0..self.n {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for w in bits(self.adj[u]) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        stack.push(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        for (v, &s) in side.iter().enumerate().take(self.n) {
            if s == 0 {
                a |= bit(v);
            } else {
                b |= bit(v);
            }
        }
        Some((VertexSet(a), VertexSet(b)))
    }

    pub fn is_triangle_free(&self) -> bool {
        triangle_free_within(self, self.all())
    }
}

/// Connected components of `G[mask]`, ordered by smallest vertex.
pub(crate) fn components_within(g: &Graph, mask: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut left = mask;
    while left != 0 {
        let start = left & left.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= g.adj[v];
            }
            next &= mask & !comp;
            comp |= next;
            frontier = next;
        }
        out.push(comp);
        left &= !comp;
    }
    out
}

pub(crate) fn triangle_free_within(g: &Graph, mask: u64) -> bool {
    for u in bits(mask) {
        let nu = g.adj[u] & mask;
        for w in bits(nu & !full_mask(u + 1)) {
            if nu & g.adj[w] != 0 {
                return false;
            }
        }
    }
    true
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn edge_list_basics() {
        let k3 = Graph::from_edge_list(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert!(k3.has_edge(2, 0));
        let k2 = Graph::from_edge_list(2, [(0, 1)]).unwrap();
        assert_eq!(k2.edges(), vec![(0, 1)]);
        let g = Graph::from_edge_list(4, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            Graph::from_edge_list(65, []),
            Err(GraphError::TooManyVertices(65))
        );
    }

    #[test]
    fn complement_of_complete_is_edgeless() {
        let k4 = Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.complement().edge_count(), 0);
        assert_eq!(k4.complement().complement(), k4);
    }

    #[test]
    fn neighborhoods_of_c5() {
        let c5 = cycle(5);
        let s = VertexSet::singleton(0);
        assert_eq!(c5.open_neighborhood(s).to_vec(), vec![1, 4]);
        assert_eq!(c5.closed_neighborhood(s).to_vec(), vec![0, 1, 4]);
        assert!(c5.open_neighborhood(c5.vertices()).is_empty());
    }

    #[test]
    fn local_graphs() {
        let c5 = cycle(5);
        let l = c5.local_graph(VertexSet::singleton(0));
        assert_eq!(l.origin, vec![2, 3]);
        assert_eq!(l.graph.edges(), vec![(0, 1)]);

        let c7 = cycle(7);
        let l = c7.local_graph(VertexSet::singleton(0));
        assert_eq!(l.origin, vec![2, 3, 4, 5]);
        assert_eq!(l.graph.edges(), vec![(0, 1), (1, 2), (2, 3)]);

        let k4 = cycle(3).join(&Graph::empty(1));
        assert_eq!(k4.local_graph(VertexSet::singleton(3)).graph.n(), 0);
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = cycle(5);
        let p = c5.induced([0, 1, 2].into_iter().collect());
        assert_eq!(p.graph.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(c5.induced(VertexSet::EMPTY).graph.n(), 0);
        let all = c5.induced(c5.vertices());
        assert_eq!(all.graph, c5);
        assert_eq!(all.origin, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn joins() {
        let k1 = Graph::empty(1);
        assert_eq!(k1.join(&k1), Graph::from_edge_list(2, [(0, 1)]).unwrap());
        let c4 = Graph::empty(2).join(&Graph::empty(2));
        assert_eq!(c4.edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(c4.degree_sequence(), vec![2, 2, 2, 2]);
        assert!(c4.is_connected());
    }

    #[test]
    fn bipartite_and_triangles() {
        let (a, b) = cycle(6).is_bipartite().unwrap();
        assert_eq!(a.to_vec(), vec![0, 2, 4]);
        assert_eq!(b.to_vec(), vec![1, 3, 5]);
        assert!(cycle(5).is_bipartite().is_none());
        assert!(cycle(5).is_triangle_free());
        assert!(!cycle(3).is_triangle_free());
    }

    #[test]
    fn components() {
        let g = Graph::from_edge_list(5, [(0, 3), (1, 2)]).unwrap();
        let comps: Vec<Vec<usize>> = g.connected_components().into_iter().map(|c| c.to_vec()).collect();
        assert_eq!(comps, vec![vec![0, 3], vec![1, 2], vec![4]]);
        assert_eq!(g.isolated_vertices().to_vec(), vec![4]);
    }

    #[test]
    fn lexicographic_order_of_sets() {
        use std::cmp::Ordering::*;
        let s = |v: &[usize]| v.iter().copied().collect::<VertexSet>();
        let cases: &[(&[usize], &[usize])] = &[
            (&[0, 1], &[0, 2]),
            (&[0], &[0, 1]),
            (&[0, 5], &[1]),
            (&[], &[3]),
            (&[1, 2, 9], &[1, 3]),
            (&[2, 3], &[2, 3, 4]),
        ];
        for (a, b) in cases {
            assert_eq!(lex_cmp(s(a), s(b)), a.cmp(b), "{a:?} vs {b:?}");
            assert_eq!(lex_cmp(s(b), s(a)), b.cmp(a));
        }
        assert_eq!(lex_cmp(s(&[1, 4]), s(&[1, 4])), Equal);
        let _ = (Less, Greater);
    }
}
