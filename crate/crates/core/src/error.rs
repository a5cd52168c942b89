use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("character {0} does not truncate into the lattice (need ch0, ch1 integral and 2*ch2 integral)")]
    NotInLattice(String),

    #[error("class must be nonzero")]
    ZeroClass,

    #[error("degenerate class: {0}")]
    DegenerateClass(String),

    #[error("dimension mismatch: expected {expected} coefficients, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid polarization: {0}")]
    InvalidPolarization(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("alpha^2 must be positive, got {0}")]
    NonPositiveAlpha(String),

    #[error("walls cannot be compared: {0}")]
    IncomparableWalls(String),

    #[error("search region is unbounded: {0}")]
    UnboundedRegion(String),

    #[error("no wall found: {0}")]
    NoWall(String),

    #[error("point is not on the wall: {0}")]
    PointNotOnWall(String),

    #[error("{0} is not an exceptional generator")]
    NotExceptional(String),

    #[error("class is not in the Kuznetsov component: {0}")]
    NotInComponent(String),

    #[error("coordinates are not integral: {0}")]
    NotIntegral(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("constructions of `{name}` disagree: {first} vs {second}")]
    InconsistentConstruction {
        name: String,
        first: String,
        second: String,
    },

    #[error("nothing to plot")]
    EmptyPlot,
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
