use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid sequence kind `{0}` (expected fibonacci, natural, gaussian:<q> with q >= 2, or one)")]
    InvalidSequence(String),

    #[error("F-nomial ({n} over {k}) is not an integer for this sequence")]
    NonIntegralFnomial { n: usize, k: usize },

    #[error("sequence `{0}` has no two-term triangle recurrence")]
    UnsupportedRecurrence(String),

    #[error("{what}: requested {requested} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: String,
        cap: String,
    },

    #[error("bad range: {0}")]
    BadRange(String),

    #[error("field size {0} is not a supported prime (2 or 3)")]
    NonPrimeField(u32),

    #[error("bad vertex: {0}")]
    BadVertex(String),

    #[error("invalid path graph: {0}")]
    InvalidDag(String),

    #[error("subspace oracles disagree at n={n}, k={k}, q={q}: closure {closure} vs tuples {tuples}")]
    OracleDisagreement {
        n: usize,
        k: usize,
        q: u32,
        closure: String,
        tuples: String,
    },

    #[error("expected-values file: {0}")]
    Expected(String),

    #[error("io: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, requested: impl ToString, cap: impl ToString) -> Self {
        Error::CapExceeded {
            what,
            requested: requested.to_string(),
            cap: cap.to_string(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
