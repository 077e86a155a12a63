use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("hyperplanes {first} and {second} define the same hyperplane")]
    DuplicateHyperplane { first: usize, second: usize },
    #[error("hyperplane {index} has an identically zero linear part")]
    ZeroForm { index: usize },
    #[error("{hyperplanes} hyperplanes but {weights} weights")]
    WeightLengthMismatch { hyperplanes: usize, weights: usize },
    #[error("central arrangement has no hyperplanes")]
    NoHyperplanes,
    #[error("index {index} out of range for {len} hyperplanes")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("flat {0:?} is not in the intersection lattice")]
    FlatNotInLattice(Vec<usize>),
    #[error("flag of length {flag} paired with a monomial of degree {monomial}")]
    DegreeMismatch { flag: usize, monomial: usize },
    #[error("product of degrees {left} and {right} exceeds ambient dimension {ambient}")]
    DegreeOverflow { left: usize, right: usize, ambient: usize },
    #[error("weights sum to {0}, expected 0")]
    WeightSumNonzero(String),
    #[error("transition requires distinct charts, got {0} twice")]
    EqualIndices(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

impl Error {
    /// Stable machine-readable code, used in CLI diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::DuplicateHyperplane { .. } => "duplicate_hyperplane",
            Error::ZeroForm { .. } => "zero_form",
            Error::WeightLengthMismatch { .. } => "weight_length_mismatch",
            Error::NoHyperplanes => "no_hyperplanes",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::FlatNotInLattice(_) => "flat_not_in_lattice",
            Error::DegreeMismatch { .. } => "degree_mismatch",
            Error::DegreeOverflow { .. } => "degree_overflow",
            Error::WeightSumNonzero(_) => "weight_sum_nonzero",
            Error::EqualIndices(_) => "equal_indices",
            Error::PreconditionViolated(_) => "precondition_violated",
            Error::InvalidParameters(_) => "invalid_parameters",
        }
    }
}
