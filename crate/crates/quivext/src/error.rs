use thiserror::Error;

/// Errors surfaced by the library. Mathematical verdicts (cocycle violations,
/// star-condition failures) are report content, not errors; these variants
/// cover malformed input and internal verification failures.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("quiver error: {0}")]
    Quiver(String),

    #[error("relation generator mixes sources or targets: {0}")]
    NonParallelRelation(String),

    #[error("finite dimensionality not certified: length-{0} path `{1}` is irreducible (raise the length bound or check the ideal)")]
    FinitenessNotCertified(usize, String),

    #[error("elements belong to different algebras")]
    AlgebraMismatch,

    #[error("ambiguous cochain pattern at basis pair ({0}, {1}): values {2} and {3} disagree")]
    AmbiguousPattern(String, String, String, String),

    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("cochain is not a Hochschild 2-cocycle ({0} violating triples)")]
    NotACocycle(usize),

    #[error("tuple data does not define a module: {0}")]
    NotAModule(String),

    #[error("triple does not define a morphism: {0}")]
    NotAMorphism(String),

    #[error("chain-map lifting failed at degree {0}")]
    LiftFailed(usize),

    #[error("no solution for C_{0}; star certification or resolution data is corrupt")]
    NoSolution(usize),

    #[error("alpha map condition ({0}) failed at degree {1}: {2}")]
    ConditionFailed(&'static str, usize, String),

    #[error("deformed complex verification failed at degree {0}: {1}")]
    VerificationFailed(usize, String),

    #[error("multiplicity mismatch at degree {0}: expected {1:?}, got {2:?}")]
    Mismatch(usize, Vec<usize>, Vec<usize>),

    #[error("Ext class degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("representative is not A-linear (alpha/C data corrupt): {0}")]
    NotALinearRepresentative(String),

    #[error("simple module at vertex `{0}` is not star-certified")]
    StarNotCertified(String),

    #[error("lifting family equation ({0}) failed at t={1}, s={2}, m={3}")]
    EquationFailed(&'static str, usize, usize, usize),

    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
