//! Cyclic codes over R from generator lists or class profiles, their Gray
//! images over GF(16), and the closed-form size predictions.

mod assemble;
mod cardinality;
mod crt;
mod profile;
mod span;
mod submodule;

pub use assemble::{assemble_generators, class_generator, Generator, GeneratorSet};
pub use cardinality::{
    cardinality_xi, eta_coefficient, rprime_slots, to_rprime_form, xi_coefficient, CardinalitySummary, Slot,
};
pub use crt::{crt_component_dims, crt_decompose, CrtReport};
pub use profile::{random_unit, ConstructionProfile, ProfileJson};
pub use span::{gray_span, right_span_brute, LinearCodeF16};
pub use submodule::{
    ideal_signature, listed_forms, submodule_sample_classify, ClassifyReport, IdealForm, IdealSignature,
};

use thiserror::Error;

use crate::poly::{F16Poly, PolyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProfileError {
    #[error("k = {0} outside 1..={max}", max = crate::rring::MAX_K)]
    BadK(usize),
    #[error("factor f_{factor} assigned to class {class}, largest class is {max}")]
    BadClass { factor: usize, class: usize, max: usize },
    #[error("factor f_{factor} assigned to class {class}; with k = 1 only classes 0..=4 exist because u = 0 kills the u-headed generators")]
    KOneRestricted { factor: usize, class: usize },
    #[error("no factor f_{0}")]
    FactorIndex(usize),
    #[error("factor f_{0} listed twice")]
    DuplicateFactor(usize),
    #[error("missing alpha_{0}{1}")]
    MissingAlpha(usize, usize),
    #[error("missing beta values for class 4k+{0}")]
    MissingBeta(usize),
    #[error("alpha_{0}{1} is fixed (alpha_11 = 0, alpha_12 = 1)")]
    FixedAlpha(usize, usize),
    #[error("{name} = {poly} is not a unit mod x^n - 1")]
    NotUnit { name: String, poly: F16Poly },
    #[error("bad key {0:?}")]
    BadKey(String),
    #[error("malformed profile JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
