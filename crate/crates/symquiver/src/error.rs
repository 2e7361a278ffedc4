use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("matrix is {0}x{1}, expected square")]
    NotSquare(usize, usize),
    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,
    #[error("Pfaffian of odd size {0}")]
    OddDimension(usize),
    #[error("matrix is singular")]
    Singular,
    #[error("quiver has an oriented cycle")]
    CyclicQuiver,
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("dimension vector does not match the quiver: {0}")]
    DomainMismatch(String),
    #[error("quiver is not Euclidean")]
    NotEuclidean,
    #[error("sigma is not an involution: {0}")]
    NotInvolutive(String),
    #[error("sigma is not contravariant: {0}")]
    NotContravariant(String),
    #[error("partition property violated: {0}")]
    PartitionViolation(String),
    #[error("unsupported symmetric type: {0}")]
    UnsupportedSymmetricType(String),
    #[error("vertex {0} is not a sink or source")]
    NotSinkOrSource(u32),
    #[error("vertex {0} is not admissible")]
    NotAdmissible(u32),
    #[error("weight is nonzero on the sigma-fixed vertex {0}")]
    NonzeroOnFixedVertex(u32),
    #[error("representations live on different quivers")]
    QuiverMismatch,
    #[error("bad interval [{0},{1}]")]
    BadInterval(usize, usize),
    #[error("index out of orbit: {0}")]
    IndexOutOfOrbit(String),
    #[error("dimension vector is not symmetric")]
    AsymmetricDimension,
    #[error("symplectic dimension is odd at sigma-fixed vertex {0}")]
    OddSymplecticDimension(u32),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("dimensions are not orthogonal: <dim V, dim W> = {0}")]
    NonOrthogonalDimensions(i64),
    #[error("dimension vector is not regular")]
    NotRegular,
    #[error("dimension vector is not symmetric")]
    NotSymmetric,
    #[error("parity violation: {0}")]
    ParityViolation(String),
    #[error("quiver is not of finite type")]
    NotFiniteType,
    #[error("quiver is not tame")]
    NotTame,
    #[error("no composition pattern found")]
    PatternNotFound,
    #[error("quiver not supported by the oracle: {0}")]
    UnsupportedQuiver(String),
    #[error("weight is not symmetric")]
    AsymmetricWeight,
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::UnsupportedSymmetricType(_)
            | Error::UnsupportedQuiver(_)
            | Error::NotEuclidean
            | Error::NotFiniteType
            | Error::NotTame => 3,
            Error::Parse(_)
            | Error::CyclicQuiver
            | Error::InvalidQuiver(_)
            | Error::NotInvolutive(_)
            | Error::NotContravariant(_)
            | Error::PartitionViolation(_)
            | Error::DomainMismatch(_)
            | Error::ShapeMismatch(_) => 2,
            _ => 4,
        }
    }
}
