use thiserror::Error;

/// Every failure the library can report.
///
/// Geometry failures carry enough context to tell the caller which object
/// went degenerate; [`Error::code`] gives a stable machine-readable name.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),
    #[error("cannot parse `{0}` as an exact rational")]
    Parse(String),

    #[error("a binary form needs at least one coefficient")]
    EmptyCoefficients,
    #[error("transvectant order {order} exceeds min degree {max}")]
    OrderOutOfRange { order: usize, max: usize },
    #[error("form is not divisible by the given linear form")]
    NotDivisible,
    #[error("both forms are zero")]
    BothZero,
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("the zero form does not represent a point or line")]
    ZeroForm,

    #[error("points coincide; their join is undefined")]
    CoincidentPoints,
    #[error("lines coincide; their meet is undefined")]
    CoincidentLines,

    #[error("labels do not form a permutation of A..F: {0}")]
    InvalidLabels(String),
    #[error("parameters {0} and {1} coincide")]
    RepeatedParameter(char, char),
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("line has zero z0-coefficient and no <1, s, t> coordinates")]
    ChartDegenerate,

    #[error("lines are coincident or concurrent; Q-points undefined")]
    DegeneratePencil,
    #[error("chord form vanished for {0}")]
    VanishingPhi(&'static str),
    #[error("solve matrix for {letter} has rank {rank}, expected 2")]
    RankDeficient { letter: char, rank: usize },
    #[error("inconsistent equations for {0}")]
    Inconsistent(char),
    #[error("every row pair of the solve matrix for {0} has zero denominator")]
    ZeroDenominator(char),
    #[error("recovered parameters do not reproduce the input lines")]
    RoundTripFailed,
}

impl Error {
    /// Stable identifier used in machine-readable output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::MissingAssignment(_) => "MissingAssignment",
            Error::Parse(_) => "ParseError",
            Error::EmptyCoefficients => "EmptyCoefficients",
            Error::OrderOutOfRange { .. } => "OrderOutOfRange",
            Error::NotDivisible => "NotDivisible",
            Error::BothZero => "BothZero",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::ZeroForm => "ZeroForm",
            Error::CoincidentPoints => "CoincidentPoints",
            Error::CoincidentLines => "CoincidentLines",
            Error::InvalidLabels(_) => "InvalidLabels",
            Error::RepeatedParameter(..) => "RepeatedParameter",
            Error::DegenerateConfiguration(_) => "DegenerateConfiguration",
            Error::ChartDegenerate => "ChartDegenerate",
            Error::DegeneratePencil => "DegeneratePencil",
            Error::VanishingPhi(_) => "VanishingPhi",
            Error::RankDeficient { .. } => "RankDeficient",
            Error::Inconsistent(_) => "Inconsistent",
            Error::ZeroDenominator(_) => "ZeroDenominator",
            Error::RoundTripFailed => "RoundTripFailed",
        }
    }

    /// True for failures caused by the input geometry rather than the
    /// reconstruction pipeline itself.
    pub fn is_degenerate_geometry(&self) -> bool {
        matches!(
            self,
            Error::RepeatedParameter(..)
                | Error::DegenerateConfiguration(_)
                | Error::ChartDegenerate
                | Error::CoincidentPoints
                | Error::CoincidentLines
                | Error::ZeroForm
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
