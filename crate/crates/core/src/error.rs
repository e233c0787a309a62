use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A vector did not have the length the search space (or scenario) requires.
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    InvalidArgument(String),
    /// Parameters that are individually valid but cannot run together,
    /// e.g. a population too small to partition.
    Configuration(String),
    /// The objective returned NaN or an infinity for the given agent.
    NonFiniteFitness {
        agent: usize,
        value: f64,
    },
    /// An operation needed cached fitness values that were never computed.
    Unevaluated,
    EmptyInput,
    UnknownBenchmark(String),
    /// A failure inside a campaign, tagged with where it happened.
    Trial {
        algorithm: String,
        objective: String,
        trial: usize,
        source: Box<Error>,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Configuration(msg) => write!(f, "configuration error: {msg}"),
            Error::NonFiniteFitness { agent, value } => {
                write!(
                    f,
                    "objective returned non-finite value {value} for agent {agent}"
                )
            }
            Error::Unevaluated => f.write_str("population has not been evaluated"),
            Error::EmptyInput => f.write_str("empty input"),
            Error::UnknownBenchmark(id) => write!(f, "unknown benchmark function `{id}`"),
            Error::Trial {
                algorithm,
                objective,
                trial,
                source,
            } => write!(f, "{algorithm} on {objective}, trial {trial}: {source}"),
        }
    }
}

impl core::error::Error for Error {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            Error::Trial { source, .. } => Some(source.as_ref()),
            _ => None,
        }
    }
}
