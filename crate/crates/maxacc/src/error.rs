use thiserror::Error;

/// Crate-wide error type. Every failure mode is a physics-domain or
/// input-handling condition; none are panics in disguise.
#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of the operation.
    #[error("domain: {0}")]
    Domain(String),

    /// Operation requires a regime the inputs do not satisfy.
    #[error("regime: {0}")]
    Regime(String),

    /// Pairing-energy spread too small to absorb the magnetic splitting, so
    /// the statistical field bound has no real solution.
    #[error(
        "reality condition violated: energy spread {delta_e_erg:.6e} erg is below \
         the magnetic splitting {splitting_erg:.6e} erg"
    )]
    Reality { delta_e_erg: f64, splitting_erg: f64 },

    /// Root finder was handed an interval with no sign change.
    #[error("no root bracketed on [{lo:.6e}, {hi:.6e}]: f(lo) = {f_lo:.6e}, f(hi) = {f_hi:.6e}")]
    NoBracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    /// Root finder exhausted its iteration budget.
    #[error("root search failed to converge within {0} iterations")]
    NoConverge(usize),

    /// Malformed input file (registry, process table, or config).
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown particle '{0}'")]
    UnknownParticle(String),

    #[error("unknown process '{0}'")]
    UnknownProcess(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
