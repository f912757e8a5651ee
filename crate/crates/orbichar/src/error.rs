use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Generating a group would exceed the configured order bound.
    #[error("group closure exceeds the order bound {limit}")]
    ClosureExceedsBound { limit: u64 },

    /// A group-spec string did not match the grammar.
    #[error("unknown group spec `{0}`")]
    UnknownSpec(String),

    /// An element passed to a subgroup operation does not lie in the group.
    #[error("element does not belong to the group")]
    ElementNotInGroup,

    /// A census was requested at a composite (or zero/one) modulus.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// The raw tuple set of a census would exceed the configured cap.
    #[error("census of {estimated} raw tuples exceeds the cap of {cap}")]
    CensusTooLarge { estimated: u64, cap: u64 },

    /// Amalgam data that is not a pair of injective homomorphisms.
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    /// The odd-prime closed form was called at p = 2.
    #[error("formula requires an odd prime; use the p = 2 variant")]
    EvenPrime,

    /// A chromatic height at which the requested invariant is not defined.
    #[error("height {height} is not defined for {target}")]
    HeightUndefined { height: i64, target: String },

    /// Malformed input data (graph files, cell files, expressions, constants).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
