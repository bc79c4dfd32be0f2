//! Crate-wide error type.

use thiserror::Error;

use crate::scalar::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("operands live over different generator tables")]
    GeneratorMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero input")]
    ZeroInput,
    #[error("zero exponent")]
    ZeroExponent,
    #[error("zero scalar where a unit is required")]
    ZeroScalar,
    #[error("not representable: {0} is not a root of unity")]
    NotRepresentable(String),
    #[error("operation not supported over {0}")]
    UnsupportedField(FieldSpec),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid field parameter: {0}")]
    InvalidField(String),
    #[error("relation is not homogeneous: {0}")]
    InhomogeneousRelation(String),
    #[error("degree bound exceeded: needed degree {needed}, system complete to {complete_to}")]
    DegreeBoundExceeded { needed: i64, complete_to: i64 },
    #[error("generator {0} has non-positive total degree")]
    ZeroDegreeGenerator(String),
    #[error("duplicate generator name {0}")]
    DuplicateGenerator(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix dimensions do not match: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),
    #[error("map does not preserve generator degrees (generators {0} and {1} have different multidegrees)")]
    DegreeNotPreserved(String, String),
    #[error("not an automorphism: relation {index} ({relation}) maps to {remainder} outside the ideal")]
    AutomorphismRejected {
        index: usize,
        relation: String,
        remainder: String,
    },
    #[error("automorphisms belong to different algebras")]
    AlgebraMismatch,
    #[error("algebra is not quadratic generated in total degree 1: {0}")]
    NotQuadratic(String),
    #[error("Frobenius pairing degenerate in degree {0}")]
    DegeneratePairing(i64),
    #[error("Koszul certification failed: {0}")]
    CertificationFailed(String),
    #[error("dual map does not preserve the dual relation space")]
    DualNotPreserved,
    #[error("computed map failed automorphism validation: {0}")]
    AutomorphismValidationFailed(String),
    #[error("no closed-form homological determinant rule available")]
    NoRuleAvailable,
    #[error("twisting family does not commute (members {0} and {1})")]
    NonCommutingFamily(usize, usize),
    #[error("element is not normal: no linear witness at generator {generator}")]
    NotNormal { generator: String },
    #[error("normality witness is not unique at generator {generator}")]
    AmbiguousWitness { generator: String },
    #[error("element is not an eigenvector of the supplied automorphism")]
    NotEigenvector,
    #[error("group closure exceeds the cap of {0} elements")]
    GroupClosureExceeded(usize),
    #[error("candidate is not multiplicative on the pair ({0}) * ({1})")]
    NotMultiplicative(String, String),
    #[error("AS index must be nonzero")]
    ZeroASIndex,
    #[error("missing data: {0}")]
    MissingData(String),
    #[error("syntax error at line {line}, column {col}: {msg}")]
    SyntaxError { line: usize, col: usize, msg: String },
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("field literal out of range: {0}")]
    FieldLiteralOutOfRange(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
