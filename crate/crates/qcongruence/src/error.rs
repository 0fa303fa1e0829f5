//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum QcError {
    #[error("NonMonicModulus: division requires a monic, nonzero ordinary polynomial")]
    NonMonicModulus,
    #[error("InexactDivision: division left a nonzero remainder")]
    InexactDivision,
    #[error("ZeroDenominator: denominator must be nonzero")]
    ZeroDenominator,
    #[error("DenominatorNotCoprime: cyclotomic factor divides the denominator")]
    DenominatorNotCoprime,
    #[error("PoleAtCyclotomic: a summand has negative cyclotomic valuation")]
    PoleAtCyclotomic,
    #[error("TooLarge: degree guard exceeded ({0}); use the quotient-ring path")]
    TooLarge(String),
    #[error("DivergentProduct: infinite product factor has non-unit constant term")]
    DivergentProduct,
    #[error("NotSummableAsSeries: summand order does not grow")]
    NotSummableAsSeries,
    #[error("SingularSpecialization: a denominator factor vanishes identically")]
    SingularSpecialization,
    #[error("OutOfDomain: {0}")]
    OutOfDomain(String),
    #[error("NotPAdicallyIntegral: p divides a denominator")]
    NotPAdicallyIntegral,
    #[error("MismatchedQuotient: operands live in different quotient rings")]
    MismatchedQuotient,
    #[error("UnknownPreset: {0}")]
    UnknownPreset(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
