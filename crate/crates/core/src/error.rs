use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("k must be at least 2 (got {0})")]
    KTooSmall(i64),

    #[error("F_{{{n},{k}}} vanishes identically")]
    VanishingIndex { n: i64, k: u32 },

    #[error("F_{{{n},{k}}} is a monomial and has no second-highest term")]
    MonomialIndex { n: i64, k: u32 },

    #[error("index {n} is outside the allowed range {lo}..={hi}")]
    IndexOutOfRange { n: i64, lo: i64, hi: i64 },

    #[error("division by the zero polynomial")]
    DivisorZero,

    #[error("gcd(0, 0) is undefined")]
    BothZero,

    #[error("structure violation for F_{{{n},{k}}}: {detail}")]
    StructureViolation { n: i64, k: u32, detail: String },

    #[error("root finder did not converge for F_{{{n},{k}}} (achieved {achieved:e})")]
    ConvergenceFailure { n: i64, k: u32, achieved: f64 },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_k(k: u32) -> Result<()> {
    if k < 2 {
        Err(Error::KTooSmall(k as i64))
    } else {
        Ok(())
    }
}
