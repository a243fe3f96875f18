use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("degenerate configuration: ions {0} and {1} coincide")]
    DegenerateConfiguration(usize, usize),

    #[error("equilibrium solver did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("transverse instability (zig-zag regime): alpha = {alpha} >= alpha_crit = {alpha_crit}")]
    ZigZag { alpha: f64, alpha_crit: f64 },

    #[error("no transverse instability for a single ion")]
    SingleIon,

    #[error("degenerate eigenvalues {0} and {1}: mode basis is not unique")]
    DegenerateEigenvalues(f64, f64),

    #[error("outside linear regime: transverse eigenvalue {0} is not positive")]
    OutsideLinearRegime(f64),

    #[error("ambiguous resonance: both delta(+) and delta(-) vanish for ({m},{n},{p})")]
    AmbiguousResonance { m: usize, n: usize, p: usize },

    #[error("incomplete active-mode set: missing {0}")]
    IncompleteModes(String),

    #[error("no resonant coupling survives the selection")]
    NoResonantCoupling,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("integration became unstable at t = {time} (|coordinate| = {magnitude:e})")]
    Unstable { time: f64, magnitude: f64 },

    #[error("series too short for a spectrum: {0} samples (need at least 16)")]
    SeriesTooShort(usize),
}
