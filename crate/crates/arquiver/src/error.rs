//! Crate-wide error type.

/// Errors reported by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A Dynkin type string could not be parsed.
    #[error("cannot parse Dynkin type {0:?}: expected A<n>, D<n>, or E<n>")]
    ParseType(String),

    /// The requested rank is outside the supported range for its family.
    #[error("unsupported Dynkin type {0}: supported ranks are A1-A9, D4-D9, E6-E8")]
    UnsupportedType(String),

    /// A word contained a letter outside the vertex range.
    #[error("letter {letter} outside vertex range 1..={rank}")]
    LetterOutOfRange { letter: usize, rank: usize },

    /// A word was not reduced.
    #[error("word is not reduced")]
    NotReduced,

    /// An operation required a reduced word of the longest element.
    #[error("word has length {len} but a longest-element word needs length {expected}")]
    NotLongestWord { len: usize, expected: usize },

    /// Sink reflection was requested at a vertex that is not a sink.
    #[error("vertex {0} is not a sink of the orientation")]
    NotSink(usize),

    /// An orientation description was invalid.
    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),

    /// Coset adjacency needs two distinct fundamental-weight classes.
    #[error("coset adjacency requires two distinct fundamental indices (got {0} twice)")]
    SameFundamentalIndex(usize),

    /// An operation is only defined in type A.
    #[error("operation is only defined in type A")]
    TypeAOnly,

    /// A weight was not in the Weyl orbit of the requested fundamental weight.
    #[error("weight is not in the orbit of fundamental weight {index}")]
    WeightNotInOrbit { index: usize },

    /// Column adjacency needs sizes differing by exactly one.
    #[error("column sizes must differ by exactly one (got {0} and {1})")]
    ColumnSizeMismatch(usize, usize),

    /// A column multi-index was malformed.
    #[error("invalid column: {0}")]
    InvalidColumn(String),

    /// Rational coordinates did not describe a lattice weight.
    #[error("coordinates do not describe an integral weight")]
    NonIntegralWeight,

    /// The commutation-class census ran past its class budget.
    #[error("class census exceeded its budget of {budget} classes ({found} found so far)")]
    CensusBudget { budget: usize, found: usize },

    /// The commutation-class census ran past its time budget.
    #[error("class census exceeded its deadline of {seconds}s ({found} classes found so far)")]
    CensusDeadline { seconds: u64, found: usize },

    /// An enumeration would produce more items than the configured cap.
    #[error("enumeration exceeded its cap of {cap} items")]
    EnumerationCap { cap: usize },

    /// A root order did not cover the whole positive system.
    #[error("root order does not cover all positive roots")]
    PartialRootOrder,

    /// A root sequence repeated a root or used a non-positive root.
    #[error("root sequence must list distinct positive roots")]
    InvalidRootSequence,

    /// A word was not adapted to the given orientation.
    #[error("word is not adapted to orientation {0}")]
    NotAdapted(String),

    /// A word was adapted to no orientation at all.
    #[error("word is adapted to no orientation; pass one explicitly or choose an adapted word")]
    NoAdaptedOrientation,

    /// A word list could not be parsed.
    #[error("cannot parse word {0:?}: expected comma-separated letters like 2,1,3")]
    ParseWord(String),

    /// A CLI flag combination was invalid.
    #[error("{0}")]
    InvalidCommand(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
