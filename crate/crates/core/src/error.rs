use thiserror::Error;

use crate::morphism::NestedPair;
use crate::Subset;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("element {} is outside the ground set of size {n}", element + 1)]
    ElementOutOfRange { element: usize, n: usize },

    #[error("ground set of size {n} exceeds the supported maximum {max}")]
    GroundSetTooLarge { n: usize, max: usize },

    #[error("ground set of size {n} exceeds the enumeration bound {bound} (set MATMOR_MAX_N to raise it)")]
    EnumerationBound { n: usize, bound: usize },

    #[error("a matroid needs at least one basis")]
    EmptyBasisList,

    #[error("basis exchange fails for {first} and {second} at element {}", element + 1)]
    ExchangeAxiomViolation {
        first: Subset,
        second: Subset,
        element: usize,
    },

    #[error("{0} is not a prime below 2^31")]
    InvalidPrime(u64),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("ground sets differ: {left} vs {right}")]
    GroundSetMismatch { left: usize, right: usize },

    #[error("map is not a morphism: {witness}")]
    NotAMorphism { witness: NestedPair },

    #[error("constituent {} is not a quotient of constituent {}: {witness}", index + 1, index + 2)]
    NotAFlag { index: usize, witness: NestedPair },

    #[error("set family is empty")]
    EmptyFamily,

    #[error("no bases of cardinality {k} in the quotient")]
    EmptyHiggsSlice { k: usize },

    #[error("malformed rotation system: {0}")]
    MalformedRotation(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("set function value at {subset} is not an integer")]
    NonIntegerValue { subset: Subset },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Short machine-readable name used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ElementOutOfRange { .. } => "element_out_of_range",
            Error::GroundSetTooLarge { .. } => "ground_set_too_large",
            Error::EnumerationBound { .. } => "enumeration_bound",
            Error::EmptyBasisList => "empty_basis_list",
            Error::ExchangeAxiomViolation { .. } => "exchange_axiom_violation",
            Error::InvalidPrime(_) => "invalid_prime",
            Error::InvalidGraph(_) => "invalid_graph",
            Error::GroundSetMismatch { .. } => "ground_set_mismatch",
            Error::NotAMorphism { .. } => "not_a_morphism",
            Error::NotAFlag { .. } => "not_a_flag",
            Error::EmptyFamily => "empty_family",
            Error::EmptyHiggsSlice { .. } => "empty_higgs_slice",
            Error::MalformedRotation(_) => "malformed_rotation",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::NonIntegerValue { .. } => "non_integer_value",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::Schema(_) => "schema",
            Error::Json(_) => "json",
        }
    }
}
