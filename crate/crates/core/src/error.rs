//! Error type shared by all modules of the crate.

use alloc::string::String;
use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised by dataset construction, the dual solver, the plug-in
/// estimators, and the population models.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Label count differs from the number of sample columns.
    LabelCountMismatch { labels: usize, samples: usize },
    /// A feature entry is NaN or infinite (zero-based coordinates).
    NonFiniteFeature { row: usize, col: usize },
    /// A label refers to a class index outside the declared range.
    LabelOutOfRange { label: usize, classes: usize },
    /// The class has no samples.
    EmptyClass { class: usize },
    /// The operation needs at least two samples of the class.
    SingletonClass { class: usize },
    /// The dataset does not contain the requested class.
    MissingClass { class: usize },
    /// Requested more training samples than the class holds.
    SizeExceedsClass {
        class: usize,
        requested: usize,
        available: usize,
    },
    /// Training splits below two samples per class are not usable.
    TrainSizeTooSmall { class: usize, requested: usize },
    /// A binary operation was applied to a dataset whose class count is
    /// not exactly two.
    NotBinary { classes: usize },
    /// One of the two label signs is absent, so the dual has no
    /// interior: the Gram system is degenerate.
    DegenerateGram,
    /// The dual ascent diverged or stalled: the training set admits no
    /// separating hyperplane (or the iteration budget was exhausted).
    NotSeparable { iterations: usize, kkt_gap: f64 },
    /// A pairwise fit inside one-versus-one training failed to separate.
    PairNotSeparable {
        class_a: usize,
        class_b: usize,
        iterations: usize,
        kkt_gap: f64,
    },
    /// No coefficient survived the support-vector threshold.
    EmptySupportSet,
    /// Thresholding left a support set without one of the classes.
    DegenerateSupport,
    /// Input vector length differs from the model dimension.
    DimensionMismatch { expected: usize, actual: usize },
    /// A solver tolerance or cap was not strictly positive.
    InvalidConfig(&'static str),
    /// The estimated squared mean separation is zero; the bias ratio is
    /// undefined.
    DegenerateDelta,
    /// A mean specification is inconsistent with the dimension.
    InvalidMeanSpec(&'static str),
    /// A covariance specification parameter is out of range.
    InvalidCovarianceSpec(&'static str),
    /// Student-t families need at least three degrees of freedom for a
    /// finite covariance.
    InvalidDegreesOfFreedom { df: u32 },
    /// Cholesky factorization hit a non-positive pivot even after a
    /// single jitter retry.
    FactorizationFailure { pivot: usize },
    /// No scenario preset with that name.
    UnknownScenario(String),
    /// The sweep value violates the scenario's structural constraints.
    SweepOutOfGrid {
        scenario: char,
        value: u64,
        detail: &'static str,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LabelCountMismatch { labels, samples } => {
                write!(f, "{labels} labels for {samples} sample columns")
            }
            Error::NonFiniteFeature { row, col } => {
                write!(f, "non-finite feature at row {row}, column {col}")
            }
            Error::LabelOutOfRange { label, classes } => {
                write!(f, "label {label} outside class range 0..{classes}")
            }
            Error::EmptyClass { class } => write!(f, "class {class} has no samples"),
            Error::SingletonClass { class } => {
                write!(f, "class {class} needs at least two samples")
            }
            Error::MissingClass { class } => write!(f, "class {class} not present"),
            Error::SizeExceedsClass {
                class,
                requested,
                available,
            } => write!(
                f,
                "requested {requested} training samples from class {class} with only {available}"
            ),
            Error::TrainSizeTooSmall { class, requested } => write!(
                f,
                "training size {requested} for class {class} is below the minimum of two"
            ),
            Error::NotBinary { classes } => {
                write!(f, "expected exactly two classes, found {classes}")
            }
            Error::DegenerateGram => write!(f, "both label signs must be present"),
            Error::NotSeparable {
                iterations,
                kkt_gap,
            } => write!(
                f,
                "no separating hyperplane found (stopped after {iterations} iterations, KKT gap {kkt_gap:e})"
            ),
            Error::PairNotSeparable {
                class_a,
                class_b,
                iterations,
                kkt_gap,
            } => write!(
                f,
                "classes {class_a} and {class_b} are not separable (stopped after {iterations} iterations, KKT gap {kkt_gap:e})"
            ),
            Error::EmptySupportSet => write!(f, "support set is empty"),
            Error::DegenerateSupport => {
                write!(f, "support set lost one class after thresholding")
            }
            Error::DimensionMismatch { expected, actual } => {
                write!(f, "expected vector of length {expected}, got {actual}")
            }
            Error::InvalidConfig(msg) => write!(f, "invalid solver configuration: {msg}"),
            Error::DegenerateDelta => {
                write!(f, "zero squared mean separation; bias ratio undefined")
            }
            Error::InvalidMeanSpec(msg) => write!(f, "invalid mean specification: {msg}"),
            Error::InvalidCovarianceSpec(msg) => {
                write!(f, "invalid covariance specification: {msg}")
            }
            Error::InvalidDegreesOfFreedom { df } => {
                write!(f, "degrees of freedom {df} too small; need at least 3")
            }
            Error::FactorizationFailure { pivot } => {
                write!(f, "covariance not positive definite at pivot {pivot}")
            }
            Error::UnknownScenario(name) => write!(f, "unknown scenario preset '{name}'"),
            Error::SweepOutOfGrid {
                scenario,
                value,
                detail,
            } => write!(
                f,
                "sweep value {value} invalid for scenario ({scenario}): {detail}"
            ),
        }
    }
}

impl core::error::Error for Error {}
