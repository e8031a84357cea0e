use thiserror::Error;

use crate::series::Rational;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by a series with zero constant term")]
    DivisionByNonUnit,
    #[error("exp requires a zero constant term, found {0}")]
    NonzeroConstantTerm(Rational),
    #[error("log requires constant term 1, found {0}")]
    ConstantTermNotOne(Rational),
    #[error("composition requires the inner series to vanish at 0, found {0}")]
    InnerConstantTermNonzero(Rational),
    #[error("series is not reversible: {0}")]
    NotReversible(&'static str),
    #[error("product would have log-degree {0}, at most 2 is supported")]
    LogDegreeOverflow(usize),
    #[error("truncation order must be at least {min}, got {got}")]
    InvalidOrder { got: usize, min: usize },
    #[error("log terms did not cancel in {0}")]
    LogTermsDidNotCancel(&'static str),
    #[error("q-expansion has constant term {0}, expected 0")]
    NonzeroQConstant(Rational),
    #[error("coefficient c_{degree} = {value} breaks the alternating sign pattern")]
    SignPattern { degree: usize, value: Rational },
    #[error("q-expansion lacks the (log(-q))^2/2 head term")]
    MissingLogHead,
    #[error("m_{degree} = {value} is not a non-negative integer")]
    IntegralityFailure { degree: usize, value: Rational },
    #[error("identity {identity} fails at degree {degree}")]
    ConsistencyFailure {
        degree: usize,
        identity: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
