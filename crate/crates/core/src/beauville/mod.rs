//! The degree-24 invariants ℬ₀ … ℬ₅ of the binary quintic: construction,
//! closed forms in J, K, L, generation in degree 48, and orbit comparison.

mod closed_forms;
mod decompose;
mod equivalence;
mod generation;
mod jkl;
mod keyprop;
mod pipeline;

pub use closed_forms::{beauville_closed_forms, beauville_table};
pub use decompose::{decompose_in_jkl, decompose_specialized};
pub use equivalence::{gl2_equivalent, same_j_data, Equivalence, Witness};
pub use generation::{prop48_rank, thm48_decompose, Prop48};
pub use jkl::{monomial_name, JklPolynomial};
pub use keyprop::{verify_keyprop, verify_keyprop_against, CoefficientDiff, KeypropEntry, KeypropReport};
pub use pipeline::{
    beauville_numeric, beauville_pipeline, build_phi, generic_beauville, monic_quintic_in_lambda,
    pipeline_monic, quartic_of_root, rehomogenize, BeauvilleVector, TschirnhausTrace, LAMBDA, Z,
};
