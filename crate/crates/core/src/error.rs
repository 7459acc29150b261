use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyGenerators,

    #[error("generator {0} is not positive")]
    NonPositiveGenerator(i64),

    /// The generators have a common divisor, so the monoid they span is not
    /// cofinite in the non-negative integers.
    #[error("non-cofinite: generators have gcd {gcd}")]
    NotCofinite { gcd: i64 },

    #[error("{value} is not a nonzero member of the semigroup")]
    NotAMember { value: i64 },

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("empty offset list")]
    EmptyOffsets,

    #[error("relative ideals live over different semigroups")]
    HostMismatch,

    #[error("quotient length requested for a non-submodule")]
    NotContained,

    #[error("set is not closed under the semigroup action: {0}")]
    NotAnIdeal(String),

    #[error("precondition violated: {0}")]
    Precondition(&'static str),

    #[error("operation is undefined for the DVR case (H = N)")]
    Dvr,

    #[error("invalid reduction parameter {a}: {reason}")]
    InvalidParameter { a: i64, reason: String },

    #[error("semigroup ring is not 2-AGL")]
    NotTwoAgl,

    #[error("semigroup is not 3-generated")]
    NotThreeGenerated,

    #[error("semigroup is symmetric")]
    Symmetric,

    #[error("minimal multiple {multiple} has {count} positive decompositions")]
    NonUniqueDecomposition { multiple: i64, count: usize },

    /// Two independent routes to the same invariant disagreed. Never valid
    /// input; always an implementation defect.
    #[error("internal inconsistency in {what}: {detail}")]
    Inconsistent { what: &'static str, detail: String },

    #[error("invalid family parameter: {0}")]
    FamilyParameter(String),

    #[error("unknown suite '{0}'")]
    UnknownSuite(String),

    #[error("unknown family '{0}'")]
    UnknownFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn inconsistent(what: &'static str, detail: impl Into<String>) -> Error {
    Error::Inconsistent {
        what,
        detail: detail.into(),
    }
}
