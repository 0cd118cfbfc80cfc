//! The named graphs of the classification and recognition of membership.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::canon::is_isomorphic;
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GalleryError {
    #[error("{family} needs n >= {min}, got {n}")]
    ParameterTooSmall { family: Family, min: usize, n: usize },
    #[error("{family} needs n <= 64, got {n}")]
    ParameterTooLarge { family: Family, n: usize },
    #[error("unknown gallery family {0:?}")]
    UnknownFamily(String),
    #[error("{0} takes a parameter n")]
    MissingParameter(Family),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    Complete,
    Cycle,
    Path,
    CycleComplement,
    B,
    Q9,
    Q12,
    P10,
    P12,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Complete,
        Family::Cycle,
        Family::Path,
        Family::CycleComplement,
        Family::B,
        Family::Q9,
        Family::Q12,
        Family::P10,
        Family::P12,
    ];

    /// Families screened by [`match_gallery`], in match order.
    pub const MATCH_ORDER: [Family; 7] = [
        Family::Complete,
        Family::CycleComplement,
        Family::B,
        Family::Q9,
        Family::Q12,
        Family::P10,
        Family::P12,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::CycleComplement => "cycle-complement",
            Family::B => "b",
            Family::Q9 => "q9",
            Family::Q12 => "q12",
            Family::P10 => "p10",
            Family::P12 => "p12",
        }
    }

    pub fn is_parametric(self) -> bool {
        matches!(
            self,
            Family::Complete | Family::Cycle | Family::Path | Family::CycleComplement | Family::B
        )
    }

    /// Smallest admissible parameter (or the fixed order for sporadic graphs).
    pub fn min_order(self) -> usize {
        match self {
            Family::Complete | Family::Path => 1,
            Family::Cycle => 3,
            Family::CycleComplement | Family::B => 4,
            Family::Q9 => 9,
            Family::Q12 | Family::P12 => 12,
            Family::P10 => 10,
        }
    }

    pub fn build(self, n: Option<usize>) -> Result<Graph, GalleryError> {
        let param = || n.ok_or(GalleryError::MissingParameter(self));
        match self {
            Family::Complete => complete(param()?),
            Family::Cycle => cycle(param()?),
            Family::Path => path(param()?),
            Family::CycleComplement => cycle_complement(param()?),
            Family::B => b_graph(param()?),
            Family::Q9 => Ok(q9()),
            Family::Q12 => Ok(q12()),
            Family::P10 => Ok(p10()),
            Family::P12 => Ok(p12()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GalleryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        let family = match lower.as_str() {
            "complete" | "k" => Family::Complete,
            "cycle" | "c" => Family::Cycle,
            "path" | "p" => Family::Path,
            "cycle-complement" | "cc" | "cycle_complement" => Family::CycleComplement,
            "b" => Family::B,
            "q9" => Family::Q9,
            "q12" => Family::Q12,
            "p10" => Family::P10,
            "p12" => Family::P12,
            _ => return Err(GalleryError::UnknownFamily(s.to_string())),
        };
        Ok(family)
    }
}

/// A recognised gallery graph, with an isomorphism from the input graph onto
/// the canonical construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GalleryId {
    pub family: Family,
    pub parameter: Option<usize>,
    /// `witness[v]` is the construction vertex that input vertex `v` maps to.
    pub witness: Vec<usize>,
}

impl GalleryId {
    pub fn label(&self) -> String {
        match self.parameter {
            Some(n) => format!("{}({n})", self.family),
            None => self.family.to_string(),
        }
    }
}

fn check_range(family: Family, n: usize) -> Result<(), GalleryError> {
    let min = family.min_order();
    if n < min {
        return Err(GalleryError::ParameterTooSmall { family, min, n });
    }
    if n > crate::graph::MAX_VERTICES {
        return Err(GalleryError::ParameterTooLarge { family, n });
    }
    Ok(())
}

pub fn complete(n: usize) -> Result<Graph, GalleryError> {
    check_range(Family::Complete, n)?;
    Ok(Graph::empty(n).complement())
}

pub fn cycle(n: usize) -> Result<Graph, GalleryError> {
    check_range(Family::Cycle, n)?;
    Ok(Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle"))
}

pub fn path(n: usize) -> Result<Graph, GalleryError> {
    check_range(Family::Path, n)?;
    Ok(Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i))).expect("valid path"))
}

/// `Cₙᶜ`, the complement of the `n`-cycle.
pub fn cycle_complement(n: usize) -> Result<Graph, GalleryError> {
    check_range(Family::CycleComplement, n)?;
    Ok(cycle(n)?.complement())
}

/// `Bₙ`: the complement of the `n`-vertex path, so that its independence
/// complex is a path with `n - 1` edges. Edges `xᵢxⱼ` with `j > i + 1`
/// (0-based here).
pub fn b_graph(n: usize) -> Result<Graph, GalleryError> {
    check_range(Family::B, n)?;
    Ok(path(n)?.complement())
}

/// The literal edge set `{xᵢxⱼ | 3 <= i + 1 < j <= n}` (1-based), which
/// leaves `x₁` isolated. Kept for comparison with [`b_graph`].
pub fn b_graph_literal(n: usize) -> Result<Graph, GalleryError> {
    check_range(Family::B, n)?;
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in (i + 2)..=n {
            if i + 1 >= 3 {
                edges.push((i - 1, j - 1));
            }
        }
    }
    Ok(Graph::from_edge_list(n, edges).expect("valid edge set"))
}

fn named(labels: &[&str], edges: &[(&str, &str)]) -> Graph {
    let index = |name: &str| {
        labels
            .iter()
            .position(|&l| l == name)
            .unwrap_or_else(|| panic!("unknown vertex {name}"))
    };
    let g = Graph::from_edge_list(labels.len(), edges.iter().map(|&(u, v)| (index(u), index(v))))
        .expect("valid gallery graph");
    assert_eq!(g.edge_count(), edges.len(), "duplicate edge in gallery list");
    g
}

/// Vertex names of [`q9`], in index order.
pub const Q9_LABELS: [&str; 9] = ["a", "b", "c", "a1", "a2", "b1", "b2", "c1", "c2"];

/// Vertex names of [`q12`], in index order.
pub const Q12_LABELS: [&str; 12] = [
    "a", "b", "c", "a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3",
];

/// Vertex names of [`p10`], in index order.
pub const P10_LABELS: [&str; 10] = ["a", "b", "c", "x", "y", "a1", "b1", "b2", "c1", "c2"];

/// Vertex names of [`p12`], in index order.
pub const P12_LABELS: [&str; 12] = [
    "a", "b", "c", "d", "x", "y", "z", "t", "a1", "b1", "c1", "c2",
];

/// Triangle `abc` with two pendant-side vertices per corner; `a₁..c₂` form the
/// 6-cycle `a₁c₁b₁a₂c₂b₂`.
pub fn q9() -> Graph {
    named(
        &Q9_LABELS,
        &[
            ("a", "b"),
            ("a", "c"),
            ("b", "c"),
            ("a", "a1"),
            ("a", "a2"),
            ("b", "b1"),
            ("b", "b2"),
            ("c", "c1"),
            ("c", "c2"),
            ("a1", "c1"),
            ("a2", "c2"),
            ("b1", "c1"),
            ("b2", "c2"),
            ("a2", "b1"),
            ("a1", "b2"),
        ],
    )
}

/// Triangle `abc` with three side vertices per corner; the side vertices form
/// the 9-cycle `a₁c₁b₁a₃c₃b₃a₂c₂b₂`.
pub fn q12() -> Graph {
    named(
        &Q12_LABELS,
        &[
            ("a", "b"),
            ("a", "c"),
            ("b", "c"),
            ("a", "a1"),
            ("a", "a2"),
            ("a", "a3"),
            ("b", "b1"),
            ("b", "b2"),
            ("b", "b3"),
            ("c", "c1"),
            ("c", "c2"),
            ("c", "c3"),
            ("a1", "c1"),
            ("a2", "c2"),
            ("a3", "c3"),
            ("b1", "c1"),
            ("b2", "c2"),
            ("b3", "c3"),
            ("a3", "b1"),
            ("a1", "b2"),
            ("a2", "b3"),
        ],
    )
}

pub fn p10() -> Graph {
    named(
        &P10_LABELS,
        &[
            ("a", "b"),
            ("a", "c"),
            ("a", "a1"),
            ("a", "x"),
            ("a", "y"),
            ("b", "c"),
            ("b", "b1"),
            ("b", "b2"),
            ("c", "c1"),
            ("c", "c2"),
            ("x", "y"),
            ("x", "b2"),
            ("x", "c1"),
            ("y", "b1"),
            ("y", "c2"),
            ("a1", "b1"),
            ("a1", "b2"),
            ("a1", "c1"),
            ("a1", "c2"),
            ("b1", "c1"),
            ("b2", "c2"),
        ],
    )
}

pub fn p12() -> Graph {
    named(
        &P12_LABELS,
        &[
            ("a", "b"),
            ("a", "a1"),
            ("a", "c"),
            ("a", "d"),
            ("a", "x"),
            ("a", "y"),
            ("b", "b1"),
            ("b", "c"),
            ("b", "d"),
            ("b", "t"),
            ("b", "z"),
            ("c", "x"),
            ("c", "z"),
            ("c", "c1"),
            ("c", "c2"),
            ("d", "y"),
            ("d", "t"),
            ("d", "c1"),
            ("d", "c2"),
            ("a1", "b1"),
            ("a1", "z"),
            ("a1", "t"),
            ("a1", "c1"),
            ("a1", "c2"),
            ("b1", "x"),
            ("b1", "y"),
            ("b1", "c1"),
            ("b1", "c2"),
            ("x", "y"),
            ("x", "t"),
            ("x", "c1"),
            ("y", "z"),
            ("y", "c2"),
            ("z", "t"),
            ("z", "c1"),
            ("t", "c2"),
        ],
    )
}

/// The first family in [`Family::MATCH_ORDER`] that `g` is isomorphic to.
/// Parametric families are tried at parameter `n = g.n()`; no lower bounds of
/// the classification theorems are applied here.
pub fn match_gallery(g: &Graph) -> Option<GalleryId> {
    let n = g.n();
    let m = g.edge_count();
    let degrees = g.degree_sequence();
    for family in Family::MATCH_ORDER {
        let (candidate, parameter) = if family.is_parametric() {
            // Screen on edge count before building anything.
            let expected = match family {
                Family::Complete => n * n.saturating_sub(1) / 2,
                Family::CycleComplement => (n * n.saturating_sub(1) / 2).saturating_sub(n),
                Family::B => (n * n.saturating_sub(1) / 2).saturating_sub(n.saturating_sub(1)),
                _ => unreachable!(),
            };
            if m != expected {
                continue;
            }
            match family.build(Some(n)) {
                Ok(c) => (c, Some(n)),
                Err(_) => continue,
            }
        } else {
            if n != family.min_order() {
                continue;
            }
            (family.build(None).expect("sporadic graph"), None)
        };
        if candidate.edge_count() != m || candidate.degree_sequence() != degrees {
            continue;
        }
        if let Some(witness) = is_isomorphic(g, &candidate) {
            return Some(GalleryId {
                family,
                parameter,
                witness,
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphism;
    use crate::independence::{independence_number, is_locally_triangle_free, is_w2, is_well_covered};

    #[test]
    fn basic_families() {
        assert_eq!(cycle(3).unwrap(), complete(3).unwrap());
        for n in 1..10 {
            assert_eq!(complete(n).unwrap().edge_count(), n * (n - 1) / 2);
        }
        assert_eq!(path(2).unwrap(), complete(2).unwrap());
        assert!(matches!(cycle(2), Err(GalleryError::ParameterTooSmall { .. })));
        assert!(path(0).is_err());
        assert!(complete(0).is_err());
    }

    #[test]
    fn cycle_complements() {
        assert_eq!(cycle_complement(4).unwrap().edges(), vec![(0, 2), (1, 3)]);
        assert!(is_isomorphic(&cycle_complement(5).unwrap(), &cycle(5).unwrap()).is_some());
        for n in 4..=12 {
            assert_eq!(independence_number(&cycle_complement(n).unwrap()), 2);
        }
        assert!(cycle_complement(3).is_err());
    }

    #[test]
    fn b_graphs() {
        assert_eq!(b_graph(4).unwrap().edges(), vec![(0, 2), (0, 3), (1, 3)]);
        let b4 = b_graph(4).unwrap();
        assert!(is_well_covered(&b4));
        assert_eq!(independence_number(&b4), 2);
        assert_eq!(is_w2(&b4), Ok(false));
        let literal = b_graph_literal(5).unwrap();
        assert!(literal.neighbors(0).is_empty());
        assert!(b_graph(3).is_err());
    }

    #[test]
    fn sporadic_counts() {
        let q9 = q9();
        assert_eq!((q9.n(), q9.edge_count(), q9.complement().edge_count()), (9, 15, 21));
        assert_eq!((q12().n(), q12().edge_count()), (12, 21));
        assert_eq!((p10().n(), p10().edge_count()), (10, 21));
        let p12 = p12();
        assert_eq!((p12.n(), p12.edge_count(), p12.complement().edge_count()), (12, 36, 30));
        assert_eq!(independence_number(&q9), 3);
        assert_eq!(independence_number(&q12()), 4);
    }

    #[test]
    fn sporadic_graphs_satisfy_the_hypotheses() {
        for g in [q9(), q12(), p10(), p12()] {
            assert!(is_well_covered(&g));
            assert_eq!(is_w2(&g), Ok(true));
            assert!(is_locally_triangle_free(&g));
            assert!(!g.is_triangle_free());
            assert!(g.complement().is_connected(), "not a join");
        }
    }

    #[test]
    fn q9_local_graphs_are_triangle_free() {
        let g = q9();
        for v in 0..g.n() {
            let local = g.local_graph(crate::graph::VertexSet::singleton(v));
            assert!(local.graph.is_triangle_free());
        }
    }

    #[test]
    fn matching() {
        let k5 = complete(5).unwrap();
        let id = match_gallery(&k5).unwrap();
        assert_eq!((id.family, id.parameter), (Family::Complete, Some(5)));

        let c4 = cycle(4).unwrap();
        assert!(match_gallery(&c4).is_none());

        let perm = [3, 7, 0, 8, 1, 5, 2, 6, 4];
        let shuffled = q9().relabel(&perm);
        let id = match_gallery(&shuffled).unwrap();
        assert_eq!(id.family, Family::Q9);
        assert!(is_isomorphism(&shuffled, &q9(), &id.witness));
    }

    #[test]
    fn match_inverts_constructors() {
        let cases: Vec<(Family, Option<usize>)> = (1..=10)
            .map(|n| (Family::Complete, Some(n)))
            .chain((6..=12).map(|n| (Family::CycleComplement, Some(n))))
            .chain((4..=12).map(|n| (Family::B, Some(n))))
            .chain([Family::Q9, Family::Q12, Family::P10, Family::P12].map(|f| (f, None)))
            .collect();
        for (family, n) in cases {
            let g = family.build(n).unwrap();
            let id = match_gallery(&g).unwrap_or_else(|| panic!("{family} {n:?} unmatched"));
            assert_eq!((id.family, id.parameter), (family, n));
        }
    }

    #[test]
    fn family_names_parse() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("petersen".parse::<Family>().is_err());
    }
}
