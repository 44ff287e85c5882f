use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("greedy digit {index} is undecidable at float precision (orbit within tolerance of the branch point)")]
    UndecidableDigit { index: usize },

    #[error("d(beta) is not known to be finite; quasi-greedy expansion undefined")]
    NotParry,

    #[error("no strict lexicographic difference found within {budget} digits")]
    Undecided { budget: usize },

    #[error("x = {0} lies in the middle gap [1/beta, 1/(beta(beta-1))]")]
    MiddleGap(f64),

    #[error("x = {0} lies outside [0, 1/(beta-1)]")]
    OutOfDomain(f64),

    #[error("iterate {index} (x = {x}) is within tolerance of an interval boundary")]
    BoundaryAmbiguity { index: usize, x: f64 },

    #[error("itinerary is not in the image of h: {0}")]
    NotInImage(String),

    #[error("n = {n} exceeds the enumeration limit {limit}")]
    TooLarge { n: usize, limit: usize },
}

impl Error {
    /// True for errors caused by an exhausted digit or precision budget.
    pub fn is_undecided(&self) -> bool {
        matches!(self, Error::Undecided { .. } | Error::UndecidableDigit { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
