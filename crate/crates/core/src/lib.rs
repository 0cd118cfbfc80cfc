//! Combinatorial recognition of Cohen–Macaulay, generalized Cohen–Macaulay,
//! Buchsbaum and Gorenstein squares of edge ideals, cross-checked against
//! simplicial homology of the independence complex.

pub mod budget;
pub mod canon;
pub mod classify;
pub mod complex;
pub mod enumerate;
pub mod format;
pub mod gallery;
pub mod graph;
pub mod homology;
pub mod independence;
pub mod verify;

pub use budget::{Budget, Timeout};
pub use canon::{canonical_form, is_isomorphic, Canonical};
pub use classify::{
    buchsbaum_square_clause, buchsbaum_square_oracle, classify, is_buchsbaum_square, is_cm_square, is_gcm_square,
    is_gorenstein_locally_tf, is_locally_tf_w2_classified, BuchsbaumClause, ClassificationReport, ClassifyError,
    ClassifyOptions,
};
pub use complex::{independence_complex, join_factors, FVector, SimplicialComplex};
pub use enumerate::{enumerate_graphs, EnumerateOptions, OrderOutOfRange};
pub use format::{parse_edge_list, parse_edge_lists, parse_graph6, to_edge_list, to_graph6, ParseError};
pub use gallery::{match_gallery, Family, GalleryError, GalleryId};
pub use graph::{Graph, GraphError, Subgraph, VertexSet};
pub use homology::{
    boundary_matrix, is_cm_complex, is_gorenstein_complex, reduced_betti_numbers, HomologyError, HomologyProfile,
    PrimeField,
};
pub use independence::{
    independence_number, independence_summary, is_locally_triangle_free, is_w2, is_well_covered,
    maximal_independent_sets, IndependenceSummary, IsolatedVertexError,
};
pub use verify::{bipartite_w2_sweep, check_graph, verify_theorems, Outcome, Check, CheckTally, VerificationReport, VerifyOptions};
