//! Quantum MDS codes from Fourier matrices over finite fields.
//!
//! This crate builds classical MDS codes from row selections of Fourier
//! (Vandermonde-of-roots-of-unity) matrices over GF(q), decides
//! Euclidean and Hermitian dual-containment, turns dual-containing
//! codes into quantum code parameters through the CSS construction,
//! plans constructions from a target rate and distance, and verifies
//! every claim with independent brute-force oracles.
//!
//! A guided tour with runnable examples lives in the `book/` directory
//! of this repository (rendered with mdBook); its code snippets are
//! compiled and run as doc-tests via the [`guide`] module.

pub mod css;
pub mod error;
pub mod field;
pub mod fourier;
pub mod guide;
pub mod hermitian;
pub mod linalg;
pub mod numtheory;
pub mod planner;
pub mod verify;

mod packed;
mod poly;

pub use css::{
    check_quantum_singleton, css_from_euclidean, css_from_hermitian, CssConstruction,
    QuantumCodeParams, SingletonCheck,
};
pub use error::{Error, Result};
pub use field::{Field, FieldElement, FieldSpec, DEFAULT_SIZE_BOUND};
pub use fourier::{
    dual_basis_oracle, euclidean_dual_index_set, is_euclidean_dual_containing_indices,
    mds_minor_check, min_distance_by_enumeration, min_distance_oracle, ClassicalCode,
    DistanceClaim, DistanceOracleOutcome, FourierMatrix, OracleBounds, RowSelection,
    SelectionKind,
};
pub use hermitian::{hermitian_family, HermitianContext, HermitianFamily};
pub use linalg::Matrix;
pub use planner::{
    best_for_field, euler_field_existence, parse_rate, plan, solve_length, CatalogEntry,
    CatalogFilter, FieldCandidate, FieldPolicy, PlanRequest, PlanResult, Rate, SearchLimits,
};
pub use verify::{
    verify_classical, verify_quantum, Check, CheckOutcome, InnerProductKind, MdsStatus,
    Verdict, VerificationReport, VerifyBounds, VerifyLevel,
};
