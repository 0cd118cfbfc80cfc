//! Facet-listed simplicial complexes, in particular independence complexes.

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{lex_cmp, Graph, VertexSet};
use crate::independence::maximal_independent_sets;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{0:?} is not a face of the complex")]
pub struct FaceNotInComplex(pub VertexSet);

/// A simplicial complex on ambient vertices `0..n`, given by its facets.
///
/// Always contains the empty face: a complex whose only face is `∅` is stored
/// with the single facet `∅`. Ambient vertices that lie in no facet are ghosts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

/// Face counts by dimension, `f₀..f_d`; the empty face is not listed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    /// `d`, or `-1` for the complex `{∅}`.
    pub fn dimension(&self) -> isize {
        self.0.len() as isize - 1
    }
}

impl SimplicialComplex {
    /// Keeps the inclusion-maximal members of `sets`.
    pub fn from_facets<I: IntoIterator<Item = VertexSet>>(n: usize, sets: I) -> SimplicialComplex {
        let mut sets: Vec<VertexSet> = sets.into_iter().collect();
        sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
        sets.dedup();
        let mut facets: Vec<VertexSet> = Vec::with_capacity(sets.len());
        for s in sets {
            if !facets.iter().any(|f| s.is_subset(*f)) {
                facets.push(s);
            }
        }
        if facets.is_empty() {
            facets.push(VertexSet::EMPTY);
        }
        facets.sort_by(|a, b| lex_cmp(*a, *b));
        SimplicialComplex { n, facets }
    }

    /// The complex `{∅}` on `n` ghost vertices.
    pub fn empty_face_only(n: usize) -> SimplicialComplex {
        SimplicialComplex {
            n,
            facets: vec![VertexSet::EMPTY],
        }
    }

    pub fn ambient_vertices(&self) -> usize {
        self.n
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Vertices lying in some facet.
    pub fn vertex_set(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn ghost_count(&self) -> usize {
        self.n - self.vertex_set().len()
    }

    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0) as isize - 1
    }

    pub fn is_pure(&self) -> bool {
        let d = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == d)
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// Every face including `∅`, dimension-major and lexicographic within a dimension.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut seen: HashSet<u64> = HashSet::new();
        for f in &self.facets {
            let full = f.bits();
            // Walk all submasks of the facet.
            let mut sub = full;
            loop {
                seen.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & full;
            }
        }
        let mut faces: Vec<VertexSet> = seen.into_iter().map(VertexSet::from_bits).collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| lex_cmp(*a, *b)));
        faces
    }

    /// Faces grouped by dimension: entry `i` holds the `(i-1)`-dimensional faces.
    pub fn faces_by_dimension(&self) -> Vec<Vec<VertexSet>> {
        let mut out: Vec<Vec<VertexSet>> = vec![Vec::new(); (self.dimension() + 2) as usize];
        for f in self.faces() {
            out[f.len()].push(f);
        }
        out
    }

    pub fn f_vector(&self) -> FVector {
        let by_dim = self.faces_by_dimension();
        FVector(by_dim[1..].iter().map(Vec::len).collect())
    }

    /// `χ̃ = Σ_{i=-1}^{d} (-1)^i f_i` with `f_{-1} = 1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces_by_dimension()
            .iter()
            .enumerate()
            .map(|(k, fs)| if k % 2 == 1 { fs.len() as i64 } else { -(fs.len() as i64) })
            .sum()
    }

    /// Connectivity of the 1-skeleton over non-ghost vertices.
    pub fn is_connected(&self) -> bool {
        let verts = self.vertex_set().bits();
        if verts.count_ones() <= 1 {
            return true;
        }
        let start = verts & verts.wrapping_neg();
        let mut reached = start;
        loop {
            let grown = self
                .facets
                .iter()
                .filter(|f| f.bits() & reached != 0)
                .fold(reached, |acc, f| acc | f.bits());
            if grown == reached {
                break;
            }
            reached = grown;
        }
        reached == verts
    }

    /// `lk(σ) = { τ : τ ∩ σ = ∅, τ ∪ σ ∈ K }`, on the same ambient vertices.
    pub fn link(&self, face: VertexSet) -> Result<SimplicialComplex, FaceNotInComplex> {
        let facets: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|f| face.is_subset(**f))
            .map(|f| f.difference(face))
            .collect();
        if facets.is_empty() {
            return Err(FaceNotInComplex(face));
        }
        // Facets containing σ stay pairwise incomparable after removing σ.
        let mut facets = facets;
        facets.sort_by(|a, b| lex_cmp(*a, *b));
        Ok(SimplicialComplex { n: self.n, facets })
    }

    /// Deletes the cone points (vertices lying in every facet).
    pub fn core(&self) -> SimplicialComplex {
        let apex = self
            .facets
            .iter()
            .fold(VertexSet::range(self.n), |acc, f| acc.intersection(*f));
        if apex.is_empty() {
            return self.clone();
        }
        let mut facets: Vec<VertexSet> = self.facets.iter().map(|f| f.difference(apex)).collect();
        facets.sort_by(|a, b| lex_cmp(*a, *b));
        SimplicialComplex { n: self.n, facets }
    }
}

/// `Δ(G)`: faces are the independent sets of `g`.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    let mut facets = maximal_independent_sets(g);
    if facets.is_empty() {
        facets.push(VertexSet::EMPTY);
    }
    SimplicialComplex { n: g.n(), facets }
}

/// Classes of the finest join decomposition of `g`: the connected components
/// of its complement. A single class means `g` is not a join.
pub fn join_factors(g: &Graph) -> Vec<VertexSet> {
    g.complement().connected_components()
}

pub(crate) fn is_join_free(g: &Graph) -> bool {
    let c = g.complement();
    crate::graph::components_within(&c, c.all()).len() <= 1
}
