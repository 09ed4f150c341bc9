use thiserror::Error;

use crate::validate::ValidationReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("puncture count must be at least 2, got {0}")]
    TooFewPunctures(usize),

    #[error("{field} has length {got}, expected {expected} for n = {n}")]
    LengthMismatch {
        field: &'static str,
        n: usize,
        expected: usize,
        got: usize,
    },

    #[error("the empty lamination has no coordinates")]
    EmptyLamination,

    #[error("coordinates with c = {c} <= 0 must have T = 0, got T = {twist}")]
    TwistWithoutTwistingComponents { twist: String, c: String },

    #[error("invalid intersection vector: {0}")]
    InvalidIntersections(ValidationReport),

    #[error("twist sign {sign} is inconsistent with total twist {total} (c = {c})")]
    InconsistentTwistSign { sign: i8, total: String, c: String },

    #[error("twist sign must be -1, 0 or 1, got {0}")]
    BadTwistSign(i64),

    #[error("cannot split total twist {total} over {count} twisting components")]
    BadTwistSplit { total: String, count: String },

    #[error("census violates an invariant: {0}")]
    CensusInvariant(String),

    #[error("census has odd above/below imbalance in region U{region}")]
    CensusParity { region: usize },

    #[error("census disagrees on arc beta_{arc}: {left} crossings from one side, {right} from the other")]
    BetaMismatch {
        arc: usize,
        left: String,
        right: String,
    },

    #[error("no census found after {attempts} attempts")]
    GenerationFailure { attempts: usize },
}
