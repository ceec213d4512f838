//! Exact computations for torus quotients of Schubert and Richardson
//! varieties in the Grassmannian `G_{2,n}`.

pub mod catalog;
pub mod error;
pub mod expr;
pub mod formal;
pub mod geometry;
pub mod invariants;
pub mod linalg;
pub mod plucker;
pub mod presentations;
pub mod standard;
pub mod weyl;

pub use catalog::Case;
pub use error::{Error, Result};
pub use expr::{parse_expr, parse_formal, parse_plucker, Expr};
pub use formal::{FormalMonomial, FormalPolynomial, Var};
pub use geometry::{singular_candidates, sorted_pair, witness_monomial, xi_point, SingularCandidateSet, XiPoint};
pub use invariants::{
    content, degree_one_generation_check, hilbert_count, invariant_basis, multiplication_kernel, ContentVector, GeneratorSet,
};
pub use plucker::{evaluate, plucker_relation, random_plane_matrix, random_schubert_point, Monomial, PlaneMatrix, Polynomial};
pub use presentations::{
    confluence_check, is_binomial_presentation, jacobian, catalog_suite, verify_identity, ConfluenceReport, JacobianReport,
    ReductionSystem, SuiteReport,
};
pub use standard::{is_standard, standard_basis, straighten, Strategy, Straightener, SupportRange};
pub use weyl::{bruhat_leq, coset_reps, minimal_elements, stability_status, weight_root_coords, CosetElement, PlueckerIndex, StabilityStatus};
