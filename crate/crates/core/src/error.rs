use std::fmt;

use thiserror::Error;

/// Which clause of the interpretation definition a candidate triple violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InterpretationClause {
    /// The factor list is empty.
    EmptyFactors,
    /// `p · u · s` differs from the concatenation of the factors.
    ConcatMismatch,
    /// `p` is not a strict prefix of the first factor.
    PrefixNotStrict,
    /// `s` is not a strict suffix of the last factor.
    SuffixNotStrict,
}

impl fmt::Display for InterpretationClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            InterpretationClause::EmptyFactors => "factors-nonempty",
            InterpretationClause::ConcatMismatch => "p-u-s-equals-concat",
            InterpretationClause::PrefixNotStrict => "p-strict-prefix",
            InterpretationClause::SuffixNotStrict => "s-strict-suffix",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the empty word has no primitive root")]
    EmptyWord,
    #[error("a periodic root must be nonempty")]
    EmptyRoot,
    #[error("the words commute, so their lcp with swapped order is unbounded")]
    CommutingPair,
    #[error("the empty word cannot be a codeword")]
    EmptyCodeword,
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("invalid interpretation: {0} fails")]
    InvalidInterpretation(InterpretationClause),
    #[error("cannot interpret the empty word")]
    EmptyTarget,
    #[error("the factorization does not concatenate to the interpreted word")]
    FactorizationMismatch,
    #[error("{{x, y}} is not a code: xy = yx")]
    NotACode,
    #[error("x and y must have equal lengths")]
    UnequalLengths,
    #[error("family constraint violated: {0}")]
    ConstraintViolated(&'static str),
    #[error("solution must satisfy |y| <= |x|; mirror it first")]
    NotNormalized,
    #[error("no case of the classification applies: {0}")]
    InternalContradiction(&'static str),
    #[error("list entry is not a letter of the code")]
    AlienLetter,
    #[error("the last entry of the list is the chosen word")]
    LastIsChosen,
    #[error("x^j y^k differs from z^l")]
    EquationFails,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
