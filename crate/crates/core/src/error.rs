use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGeneratorList,

    #[error("generator {0} is not a positive integer")]
    InvalidGenerator(i64),

    #[error(
        "generators {generators:?} have gcd {gcd}; they do not generate a numerical semigroup"
    )]
    NonCoprimeGenerators { generators: Vec<u32>, gcd: u32 },

    #[error("{0} is not an element of the semigroup")]
    NotAMember(i64),

    #[error("ideal generator list is empty")]
    EmptyIdealGenerators,

    #[error("ideal generator 0 would make the ideal the whole semigroup")]
    ZeroIdealGenerator,

    #[error("factorization has empty support")]
    ZeroFactorization,

    #[error("graph order {order} exceeds the supported bound {limit}")]
    OrderTooLarge { order: usize, limit: usize },

    #[error("graph order {0} is not 6 or 7")]
    OrderMismatch(usize),

    #[error("order {0} graph has no table type")]
    MissingType(usize),

    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}
