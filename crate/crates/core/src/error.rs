use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("year out of supported range 1583–3000: {0}")]
    YearOutOfRange(i32),

    #[error("Julian Day {0} outside the supported range (years 1500–3100)")]
    JulianDayOutOfRange(f64),

    /// The search window did not contain a sign change.
    #[error("no sign change in bracket [{lo}, {hi}] (g = {g_lo}, {g_hi})")]
    Bracket {
        lo: f64,
        hi: f64,
        g_lo: f64,
        g_hi: f64,
    },

    #[error("internal error: {0}")]
    Internal(String),
}
