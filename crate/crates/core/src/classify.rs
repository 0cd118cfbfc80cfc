//! Decision procedures for the second power of the edge ideal, and the
//! structural oracles they are cross-checked against.
//!
//! Every entry point refuses graphs with isolated vertices: the combinatorial
//! characterisations are stated for graphs without them.

use serde::Serialize;
use thiserror::Error;

use crate::budget::{Budget, Timeout};
use crate::complex::{independence_complex, is_join_free, join_factors};
use crate::format::to_graph6;
use crate::gallery::{match_gallery, Family, GalleryId};
use crate::graph::{bits, Graph, VertexSet};
use crate::homology::{cm_complex_within, gorenstein_complex_within, PrimeField};
use crate::independence::{
    alpha_within, is_locally_triangle_free, nontrivial_components_tf_w2, w2_within, well_covered_size_within,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("graph has isolated vertices {0:?}; only graphs without isolated vertices are classified")]
    IsolatedVertex(VertexSet),
    #[error("graph is not locally triangle-free")]
    NotLocallyTriangleFree,
    #[error("needs alpha >= 3 and no join decomposition (alpha = {alpha}, join factors = {join_factors})")]
    HypothesesViolated { alpha: usize, join_factors: usize },
    #[error(transparent)]
    Timeout(#[from] Timeout),
}

fn require_no_isolated(g: &Graph) -> Result<(), ClassifyError> {
    let iso = g.isolated_vertices();
    if iso.is_empty() {
        Ok(())
    } else {
        Err(ClassifyError::IsolatedVertex(iso))
    }
}

/// The clause of the Buchsbaum list a graph satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BuchsbaumClause {
    TriangleFreeW2,
    Complete,
    CycleComplement,
    B,
    Q9,
    Q12,
    P10,
    P12,
}

impl BuchsbaumClause {
    pub fn rule(self) -> &'static str {
        match self {
            BuchsbaumClause::TriangleFreeW2 => "triangle-free and in W2 (I(G)^2 Cohen-Macaulay)",
            BuchsbaumClause::Complete => "isomorphic to K_n, n >= 3",
            BuchsbaumClause::CycleComplement => "isomorphic to the complement of C_n, n >= 6",
            BuchsbaumClause::B => "isomorphic to B_n, n >= 4",
            BuchsbaumClause::Q9 => "isomorphic to Q9",
            BuchsbaumClause::Q12 => "isomorphic to Q12",
            BuchsbaumClause::P10 => "isomorphic to P10",
            BuchsbaumClause::P12 => "isomorphic to P12",
        }
    }
}

fn tf_w2(g: &Graph) -> bool {
    g.is_triangle_free() && w2_within(g, g.all())
}

/// Gallery clause of the Buchsbaum list, honouring the parameter bounds.
fn buchsbaum_gallery_clause(id: &GalleryId) -> Option<BuchsbaumClause> {
    let n = id.parameter.unwrap_or(0);
    match id.family {
        Family::Complete if n >= 3 => Some(BuchsbaumClause::Complete),
        Family::CycleComplement if n >= 6 => Some(BuchsbaumClause::CycleComplement),
        Family::B if n >= 4 => Some(BuchsbaumClause::B),
        Family::Q9 => Some(BuchsbaumClause::Q9),
        Family::Q12 => Some(BuchsbaumClause::Q12),
        Family::P10 => Some(BuchsbaumClause::P10),
        Family::P12 => Some(BuchsbaumClause::P12),
        _ => None,
    }
}

fn gorenstein_gallery_match(id: &GalleryId) -> bool {
    match id.family {
        Family::CycleComplement => id.parameter.is_some_and(|n| n >= 6),
        Family::Q9 | Family::Q12 | Family::P10 | Family::P12 => true,
        _ => false,
    }
}

/// `I(G)²` Cohen–Macaulay: triangle-free and in W₂.
pub fn is_cm_square(g: &Graph) -> Result<bool, ClassifyError> {
    require_no_isolated(g)?;
    Ok(tf_w2(g))
}

fn gcm_unchecked(g: &Graph) -> bool {
    well_covered_size_within(g, g.all()).is_some()
        && bits(g.all()).all(|v| nontrivial_components_tf_w2(g, g.local_mask(1 << v)))
}

/// `I(G)²` generalized Cohen–Macaulay: well-covered, and every nontrivial
/// component of every `G_v` is triangle-free and in W₂.
pub fn is_gcm_square(g: &Graph) -> Result<bool, ClassifyError> {
    require_no_isolated(g)?;
    Ok(gcm_unchecked(g))
}

fn buchsbaum_clause_unchecked(g: &Graph, gallery: Option<&GalleryId>) -> Option<BuchsbaumClause> {
    if tf_w2(g) {
        return Some(BuchsbaumClause::TriangleFreeW2);
    }
    gallery.and_then(buchsbaum_gallery_clause)
}

/// The Buchsbaum clause matched by `g`, or `None` when `I(G)²` is not Buchsbaum.
pub fn buchsbaum_square_clause(g: &Graph) -> Result<Option<BuchsbaumClause>, ClassifyError> {
    require_no_isolated(g)?;
    Ok(buchsbaum_clause_unchecked(g, match_gallery(g).as_ref()))
}

/// `I(G)²` Buchsbaum, decided from the list of graphs.
pub fn is_buchsbaum_square(g: &Graph) -> Result<bool, ClassifyError> {
    Ok(buchsbaum_square_clause(g)?.is_some())
}

/// The complement is a single cycle, or a single path, through all `n >= 4` vertices.
fn complement_is_hamiltonian_cycle_or_path(g: &Graph) -> bool {
    let n = g.n();
    if n < 4 {
        return false;
    }
    let c = g.complement();
    if !c.is_connected() {
        return false;
    }
    let degrees = c.degree_sequence();
    let max = degrees.iter().copied().max().unwrap_or(0);
    let edges = c.edge_count();
    max <= 2 && (edges == n || edges == n - 1)
}

/// Structural Buchsbaum test: `α = 1` always; `α = 2` when `Δ(G)` is an
/// `n`-cycle or a path through all `n` vertices; `α ≥ 3` when `Δ(G)` is
/// Cohen–Macaulay over `field` and every `I(G_v)²` is Cohen–Macaulay.
pub fn buchsbaum_square_oracle(g: &Graph, field: PrimeField) -> Result<bool, ClassifyError> {
    buchsbaum_square_oracle_within(g, field, &Budget::unlimited())
}

pub fn buchsbaum_square_oracle_within(g: &Graph, field: PrimeField, budget: &Budget) -> Result<bool, ClassifyError> {
    require_no_isolated(g)?;
    match alpha_within(g, g.all()) {
        1 => Ok(true),
        // With α = 2 the faces of Δ(G) are the vertices and non-edges, so its
        // 1-skeleton is the complement graph.
        2 => Ok(complement_is_hamiltonian_cycle_or_path(g)),
        _ => {
            for v in 0..g.n() {
                budget.check()?;
                if !nontrivial_components_tf_w2(g, g.local_mask(1 << v)) {
                    return Ok(false);
                }
            }
            Ok(cm_complex_within(&independence_complex(g), field, budget)?)
        }
    }
}

/// Gorenstein for locally triangle-free graphs: triangle-free and in W₂, or
/// isomorphic to one of `Cₙᶜ (n ≥ 6)`, Q9, Q12, P10, P12.
pub fn is_gorenstein_locally_tf(g: &Graph) -> Result<bool, ClassifyError> {
    require_no_isolated(g)?;
    if !is_locally_triangle_free(g) {
        return Err(ClassifyError::NotLocallyTriangleFree);
    }
    Ok(tf_w2(g) || match_gallery(g).is_some_and(|id| gorenstein_gallery_match(&id)))
}

/// Right-hand side of the characterisation of locally triangle-free W₂
/// graphs with `α ≥ 3` that are not joins: triangle-free and in W₂, or
/// isomorphic to Q9, Q12, P10 or P12.
pub fn is_locally_tf_w2_classified(g: &Graph) -> Result<bool, ClassifyError> {
    require_no_isolated(g)?;
    let alpha = alpha_within(g, g.all());
    if alpha < 3 || !is_join_free(g) {
        return Err(ClassifyError::HypothesesViolated {
            alpha,
            join_factors: join_factors(g).len(),
        });
    }
    Ok(tf_w2(g) || sporadic_match(g).is_some())
}

/// Which of Q9, Q12, P10, P12 the graph is isomorphic to, if any.
pub fn sporadic_match(g: &Graph) -> Option<Family> {
    match_gallery(g)
        .map(|id| id.family)
        .filter(|f| matches!(f, Family::Q9 | Family::Q12 | Family::P10 | Family::P12))
}

/// One verdict with the rule that decided it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub value: bool,
    pub rule: String,
}

impl Verdict {
    fn new(value: bool, rule: impl Into<String>) -> Verdict {
        Verdict {
            value,
            rule: rule.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BuchsbaumVerdict {
    pub value: bool,
    pub clause: Option<BuchsbaumClause>,
    pub rule: String,
}

/// Homological verdicts over one field, and whether they agree with the
/// combinatorial ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub characteristic: u32,
    pub cohen_macaulay_complex: bool,
    pub buchsbaum_square: bool,
    pub gorenstein: bool,
    pub buchsbaum_agrees: bool,
    /// `None` when the graph is not locally triangle-free.
    pub gorenstein_agrees: Option<bool>,
    pub cm_square_implies_buchsbaum: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub alpha: usize,
    pub well_covered: bool,
    pub w2: bool,
    pub triangle_free: bool,
    pub locally_triangle_free: bool,
    pub join_factor_count: usize,
    pub gallery_match: Option<String>,
    pub cm_square: Verdict,
    pub gcm_square: Verdict,
    pub buchsbaum_square: BuchsbaumVerdict,
    /// `None` when the graph is not locally triangle-free.
    pub gorenstein_locally_tf: Option<Verdict>,
    pub oracle: Option<OracleReport>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ClassifyOptions {
    /// Run the homological oracle over this field.
    pub oracle: Option<PrimeField>,
    pub budget: Budget,
}

pub fn classify(g: &Graph, opts: &ClassifyOptions) -> Result<ClassificationReport, ClassifyError> {
    require_no_isolated(g)?;
    let all = g.all();
    let alpha = alpha_within(g, all);
    let well_covered = well_covered_size_within(g, all).is_some();
    let w2 = w2_within(g, all);
    let triangle_free = g.is_triangle_free();
    let locally_tf = is_locally_triangle_free(g);
    let gallery = match_gallery(g);
    opts.budget.check()?;

    let cm = triangle_free && w2;
    let cm_square = Verdict::new(
        cm,
        match (triangle_free, w2) {
            (true, true) => "triangle-free and in W2",
            (false, _) => "contains a triangle",
            (true, false) => "triangle-free but not in W2",
        },
    );
    let gcm = gcm_unchecked(g);
    let gcm_square = Verdict::new(
        gcm,
        if !well_covered {
            "not well-covered"
        } else if gcm {
            "well-covered; every nontrivial component of every G_v is triangle-free and in W2"
        } else {
            "some G_v has a nontrivial component that is not triangle-free in W2"
        },
    );
    let clause = buchsbaum_clause_unchecked(g, gallery.as_ref());
    let buchsbaum_square = BuchsbaumVerdict {
        value: clause.is_some(),
        clause,
        rule: match clause {
            Some(c) => c.rule().to_string(),
            None => "neither triangle-free in W2 nor in the Buchsbaum list".to_string(),
        },
    };
    let gorenstein_locally_tf = locally_tf.then(|| {
        if cm {
            Verdict::new(true, "triangle-free and in W2")
        } else if let Some(id) = gallery.as_ref().filter(|id| gorenstein_gallery_match(id)) {
            Verdict::new(true, format!("isomorphic to {}", id.label()))
        } else {
            Verdict::new(false, "locally triangle-free, not triangle-free W2 and not in the Gorenstein list")
        }
    });
    opts.budget.check()?;

    let oracle = match opts.oracle {
        None => None,
        Some(field) => {
            let complex = independence_complex(g);
            let cm_complex = cm_complex_within(&complex, field, &opts.budget)?;
            let buchsbaum = buchsbaum_square_oracle_within(g, field, &opts.budget)?;
            let gorenstein = gorenstein_complex_within(&complex, field, &opts.budget)?;
            Some(OracleReport {
                characteristic: field.characteristic(),
                cohen_macaulay_complex: cm_complex,
                buchsbaum_square: buchsbaum,
                gorenstein,
                buchsbaum_agrees: buchsbaum == buchsbaum_square.value,
                gorenstein_agrees: gorenstein_locally_tf.as_ref().map(|v| v.value == gorenstein),
                cm_square_implies_buchsbaum: !cm || buchsbaum,
            })
        }
    };

    Ok(ClassificationReport {
        graph6: to_graph6(g),
        n: g.n(),
        edges: g.edge_count(),
        alpha,
        well_covered,
        w2,
        triangle_free,
        locally_triangle_free: locally_tf,
        join_factor_count: join_factors(g).len(),
        gallery_match: gallery.map(|id| id.label()),
        cm_square,
        gcm_square,
        buchsbaum_square,
        gorenstein_locally_tf,
        oracle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::{b_graph, complete, cycle, cycle_complement, p10, p12, path, q12, q9};

    fn matching(k: usize) -> Graph {
        Graph::from_edge_list(2 * k, (0..k).map(|i| (2 * i, 2 * i + 1))).unwrap()
    }

    #[test]
    fn cm_square_examples() {
        assert_eq!(is_cm_square(&cycle(5).unwrap()), Ok(true));
        assert_eq!(is_cm_square(&complete(3).unwrap()), Ok(false));
        assert_eq!(is_cm_square(&cycle(4).unwrap()), Ok(false));
        assert!(matches!(
            is_cm_square(&Graph::from_edge_list(3, [(0, 1)]).unwrap()),
            Err(ClassifyError::IsolatedVertex(_))
        ));
    }

    #[test]
    fn gcm_square_examples() {
        for n in 2..7 {
            assert_eq!(is_gcm_square(&complete(n).unwrap()), Ok(true));
        }
        assert_eq!(is_gcm_square(&q9()), Ok(true));
        assert_eq!(is_gcm_square(&cycle(4).unwrap()), Ok(true));
        assert_eq!(is_buchsbaum_square(&cycle(4).unwrap()), Ok(false));
    }

    #[test]
    fn buchsbaum_list_examples() {
        assert_eq!(buchsbaum_square_clause(&q12()), Ok(Some(BuchsbaumClause::Q12)));
        assert_eq!(buchsbaum_square_clause(&matching(2)), Ok(Some(BuchsbaumClause::TriangleFreeW2)));
        assert_eq!(buchsbaum_square_clause(&cycle(4).unwrap()), Ok(None));
        assert_eq!(buchsbaum_square_clause(&complete(4).unwrap()), Ok(Some(BuchsbaumClause::Complete)));
        assert_eq!(buchsbaum_square_clause(&complete(2).unwrap()), Ok(Some(BuchsbaumClause::TriangleFreeW2)));
        assert_eq!(buchsbaum_square_clause(&b_graph(6).unwrap()), Ok(Some(BuchsbaumClause::B)));
        assert_eq!(
            buchsbaum_square_clause(&cycle_complement(7).unwrap()),
            Ok(Some(BuchsbaumClause::CycleComplement))
        );
    }

    #[test]
    fn buchsbaum_oracle_examples() {
        let gf2 = PrimeField::GF2;
        for n in 2..7 {
            assert_eq!(buchsbaum_square_oracle(&complete(n).unwrap(), gf2), Ok(true));
        }
        assert_eq!(buchsbaum_square_oracle(&b_graph(6).unwrap(), gf2), Ok(true));
        assert_eq!(buchsbaum_square_oracle(&cycle(4).unwrap(), gf2), Ok(false));
        assert_eq!(buchsbaum_square_oracle(&path(4).unwrap(), gf2), Ok(true));
        for g in [q9(), q12(), p10(), p12()] {
            assert_eq!(buchsbaum_square_oracle(&g, gf2), Ok(true));
        }
    }

    #[test]
    fn gorenstein_examples() {
        assert_eq!(is_gorenstein_locally_tf(&p10()), Ok(true));
        assert_eq!(is_gorenstein_locally_tf(&complete(3).unwrap()), Ok(false));
        assert_eq!(is_gorenstein_locally_tf(&cycle(5).unwrap()), Ok(true));
        assert_eq!(is_gorenstein_locally_tf(&cycle_complement(6).unwrap()), Ok(true));
        // Two triangles and a connector vertex: some G_v contains a triangle.
        let g = Graph::from_edge_list(
            7,
            [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (6, 0), (6, 3)],
        )
        .unwrap();
        assert_eq!(is_gorenstein_locally_tf(&g), Err(ClassifyError::NotLocallyTriangleFree));
    }

    #[test]
    fn main_characterisation_examples() {
        assert_eq!(is_locally_tf_w2_classified(&q9()), Ok(true));
        assert_eq!(is_locally_tf_w2_classified(&cycle(7).unwrap()), Ok(false));
        assert_eq!(is_locally_tf_w2_classified(&matching(3)), Ok(true));
        assert!(matches!(
            is_locally_tf_w2_classified(&cycle(5).unwrap()),
            Err(ClassifyError::HypothesesViolated { alpha: 2, .. })
        ));
    }

    #[test]
    fn reports() {
        let opts = ClassifyOptions {
            oracle: Some(PrimeField::GF2),
            budget: Budget::unlimited(),
        };
        let r = classify(&q12(), &opts).unwrap();
        assert!(r.buchsbaum_square.value);
        assert_eq!(r.buchsbaum_square.clause, Some(BuchsbaumClause::Q12));
        assert_eq!(r.gorenstein_locally_tf.as_ref().map(|v| v.value), Some(true));
        assert!(!r.cm_square.value);
        let o = r.oracle.unwrap();
        assert!(o.buchsbaum_agrees && o.gorenstein_agrees == Some(true));

        let r = classify(&cycle(5).unwrap(), &opts).unwrap();
        assert!(r.cm_square.value && r.gcm_square.value && r.buchsbaum_square.value);
        assert_eq!(r.gorenstein_locally_tf.map(|v| v.value), Some(true));

        let r = classify(&complete(2).unwrap(), &opts).unwrap();
        assert!(r.cm_square.value);
        assert!(r.oracle.unwrap().gorenstein);

        let r = classify(&cycle(4).unwrap(), &ClassifyOptions::default()).unwrap();
        assert!(r.oracle.is_none());
        assert!(r.gcm_square.value && !r.buchsbaum_square.value);
    }

    #[test]
    fn isolated_vertices_are_refused() {
        let g = matching(2).disjoint_union(&Graph::empty(1));
        assert!(matches!(classify(&g, &ClassifyOptions::default()), Err(ClassifyError::IsolatedVertex(_))));
    }

    #[test]
    fn zero_budget_times_out_with_oracle() {
        let opts = ClassifyOptions {
            oracle: Some(PrimeField::GF2),
            budget: Budget::new(std::time::Duration::ZERO),
        };
        std::thread::sleep(std::time::Duration::from_millis(2));
        assert!(matches!(classify(&q12(), &opts), Err(ClassifyError::Timeout(_))));
    }
}
