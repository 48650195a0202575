use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("{what} cap exceeded (limit {limit})")]
    CapExceeded { what: &'static str, limit: usize },
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("prime {0} does not divide the group order")]
    NoSuchPrime(u64),
    #[error("unknown builtin group `{0}`")]
    UnknownBuiltin(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("matrix is not invertible over F_{0}")]
    NotInvertible(u64),
    #[error("i/o error: {0}")]
    Io(String),
}

impl GroupError {
    pub fn is_cap(&self) -> bool {
        matches!(self, GroupError::CapExceeded { .. })
    }
}

impl From<std::io::Error> for GroupError {
    fn from(e: std::io::Error) -> Self {
        GroupError::Io(e.to_string())
    }
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
