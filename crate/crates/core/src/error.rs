use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed group description: {0}")]
    Parse(String),
    #[error("inconsistent degree: expected {expected}, found {found}")]
    Degree { expected: usize, found: usize },
    #[error("group order exceeds the bound {bound}")]
    OrderBound { bound: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("subgroup is not contained in the group")]
    NotASubgroup,
    #[error("not a group homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("marks system has no integral solution (table of marks is inconsistent)")]
    Integrality,
    #[error("index out of range: {0}")]
    Index(String),
    #[error("level {0} is beyond the explicit horizon of the tower")]
    Horizon(usize),
    #[error("squares do not commute at level {level}")]
    NonCommutingSquare { level: usize },
    #[error("composite g∘f is nonzero at level {level}")]
    NonzeroComposite { level: usize },
    #[error("invalid module: {0}")]
    Module(String),
    #[error("invalid family diagram: {0}")]
    Diagram(String),
    #[error("{m} is not a common multiple of the object orders")]
    NotCommonMultiple { m: u64 },
    #[error("m = {m} exceeds the configured bound {bound}")]
    DegreeBound { m: u64, bound: u64 },
    #[error("coset enumeration needs {cosets} cosets, above the bound {bound}")]
    CosetBound { cosets: u64, bound: u64 },
}

impl Error {
    /// Stable machine-readable code for each variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::Degree { .. } => "degree",
            Error::OrderBound { .. } => "order_bound",
            Error::NotPrime(_) => "not_prime",
            Error::NotASubgroup => "not_a_subgroup",
            Error::NotAHomomorphism(_) => "not_a_homomorphism",
            Error::Dimension(_) => "dimension",
            Error::Integrality => "integrality",
            Error::Index(_) => "index",
            Error::Horizon(_) => "horizon",
            Error::NonCommutingSquare { .. } => "non_commuting_square",
            Error::NonzeroComposite { .. } => "nonzero_composite",
            Error::Module(_) => "module",
            Error::Diagram(_) => "diagram",
            Error::NotCommonMultiple { .. } => "not_common_multiple",
            Error::DegreeBound { .. } => "degree_bound",
            Error::CosetBound { .. } => "coset_bound",
        }
    }
}
