use crate::kind::LieAlgebraKind;

/// Errors produced by partition, orbit and catalog operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The textual form of a partition could not be parsed.
    #[error("invalid partition `{text}`: {reason}")]
    PartitionParse { text: String, reason: String },

    /// The textual form of an algebra kind could not be parsed.
    #[error("invalid algebra kind `{text}`: {reason}")]
    KindParse { text: String, reason: String },

    /// Parts were not weakly decreasing positive integers.
    #[error("not a partition: {reason}")]
    MalformedPartition { reason: String },

    /// Two partitions were expected to have the same weight.
    #[error("weight mismatch: {left} vs {right}")]
    WeightMismatch { left: usize, right: usize },

    /// A partition's weight does not match the natural dimension of a kind.
    #[error("partition of {weight} does not fit {kind} (natural dimension {expected})")]
    WrongWeightForKind {
        weight: usize,
        kind: LieAlgebraKind,
        expected: usize,
    },

    /// The partition violates the parity-multiplicity condition of the kind.
    #[error("partition [{partition}] is not the Jordan type of a nilpotent element of {kind}")]
    InvalidForKind { partition: String, kind: LieAlgebraKind },

    /// Two orbits of different algebras were compared.
    #[error("kind mismatch: {left} vs {right}")]
    KindMismatch { left: LieAlgebraKind, right: LieAlgebraKind },

    /// The requested operation needs a nonempty partition.
    #[error("operation requires a nonempty partition")]
    EmptyPartition,

    /// The operation is only defined for the listed families.
    #[error("{operation} is not defined for family {family}")]
    UnsupportedFamily { operation: &'static str, family: char },

    /// A Levi specification violated its arithmetic constraints.
    #[error("invalid Levi data: {reason}")]
    MalformedLevi { reason: String },

    /// A catalog stream failed to parse.
    #[error("catalog line {line}: {reason}")]
    CatalogParse { line: usize, reason: String },

    /// A catalog label was looked up but is not present.
    #[error("unknown orbit label `{label}` in {algebra}")]
    UnknownLabel { algebra: String, label: String },
}

pub type Result<T> = std::result::Result<T, Error>;
