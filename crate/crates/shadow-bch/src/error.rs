use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ShadowError {
    #[error("exp requires a series with no grade-0 part")]
    Grade0InExp,

    #[error("log requires a series with grade-0 coefficient exactly 1")]
    Grade0NotOneInLog,

    #[error("series degrees disagree: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("scheme grade-1 part is not the plain sum of its symbols")]
    Grade1Inconsistent,

    #[error("single-potential translation requires FULL kicks only, found {found}")]
    MixedSubsets { found: String },

    #[error("scheme text: {0}")]
    SchemeText(#[from] splitting::SchemeError),
}
