use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum NgError {
    #[error("empty input")]
    EmptyInput,

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("geometry order must satisfy j >= 1 (N >= 2), got {0}")]
    InvalidOrder(i64),

    #[error("rest energy must be positive, got {0} eV")]
    NonpositiveMass(f64),

    #[error("physical constant `{name}` must be positive and finite, got {value}")]
    InvalidConstant { name: &'static str, value: f64 },

    #[error("wavenumber must be positive, got {0} 1/nm")]
    NonpositiveWavenumber(f64),

    #[error("well width must be positive and finite, got {0} nm")]
    InvalidWidth(f64),

    #[error("no bound states: a particle in an infinite well has no bound states for j = 1 (2G)")]
    NoBoundStates,

    #[error("no closed-form bound states for j = {0} (implemented: j = 2, 3, 4)")]
    UnsupportedGeometry(u32),

    #[error("x = {x} nm lies outside the well [0, {width}] nm")]
    OutOfDomain { x: f64, width: f64 },

    #[error("state cannot be normalized: integral of phi^j = {0}")]
    UnnormalizedState(f64),

    #[error("unsupported moment power {0} (allowed 1..=6)")]
    UnsupportedPower(u32),

    #[error("quadrature tolerance not met after {subdivisions} subdivisions (error estimate {estimate:e})")]
    ToleranceNotMet { estimate: f64, subdivisions: usize },

    #[error("finite-difference step {0:e} is too small or not finite")]
    StepUnderflow(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, NgError>;
