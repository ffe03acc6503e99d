//! Error type shared across the crate.

use thiserror::Error;

use crate::diagram::Cell;

/// Errors reported by diagram, polynomial, tableau, and series operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A textual input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A raising move would place a cell on top of an existing cell.
    #[error("raising row {row} collides at column {col}")]
    RowCollision { row: u32, col: u32 },

    /// Dominance comparison between vectors of different total size.
    #[error("dominance is only defined for equal-size compositions ({0} vs {1})")]
    UnequalDegree(u64, u64),

    /// A polynomial mentions a variable beyond the requested range.
    #[error("polynomial uses variable x{used} but only {limit} variables were allowed")]
    TooFewVariables { used: usize, limit: usize },

    /// An operation requires a homogeneous polynomial.
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    /// A basis generator returned a polynomial whose extra terms do not all
    /// strictly dominate its leading exponent, so greedy expansion cannot proceed.
    #[error("basis element for {0} violates the triangularity contract")]
    BasisContractViolated(String),

    /// Destandardization of a diagram whose lifts depend on the order chosen.
    #[error("root diagram is not fundamental; destandardization is order-dependent")]
    NotFundamental,

    /// A diagram is not a member of the expected closure.
    #[error("diagram is not reachable from the given root")]
    NotMember,

    /// Column contents of a filled diagram disagree with the expected shape.
    #[error("column {col} has {got} cells but {want} labels")]
    ColumnCountMismatch { col: u32, got: usize, want: usize },

    /// A filling was expected to use each of 1..=n exactly once.
    #[error("filling is not standard")]
    NotStandard,

    /// A series was expected to be symmetric.
    #[error("series is not symmetric")]
    NotSymmetric,

    /// An inner shape must sit inside the outer shape.
    #[error("inner shape is not contained in the outer shape")]
    NotContained,

    /// Closure enumeration exceeded the configured diagram cap.
    #[error("enumeration exceeded the cap of {0} diagrams")]
    ResourceLimit(usize),

    /// The enumeration engine packs diagrams into a fixed grid.
    #[error("diagram exceeds the {rows}x{cols} grid supported by enumeration")]
    DiagramTooLarge { rows: u32, cols: u32 },

    /// A one-line word that is not a permutation of 1..=n.
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    /// A strong composition may not contain zero parts.
    #[error("strong compositions must have strictly positive parts")]
    ZeroPart,

    /// A partition's parts must be weakly decreasing.
    #[error("partition parts must be weakly decreasing")]
    NotPartition,

    /// A labelled cell was expected on the diagram but is missing, or vice versa.
    #[error("labels do not match the cells of the diagram (at {0})")]
    LabelMismatch(Cell),

    /// Series arithmetic requires matching degrees and bases.
    #[error("series mismatch: {0}")]
    SeriesMismatch(String),
}

/// Convenient alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
