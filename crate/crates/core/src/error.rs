use thiserror::Error;

/// Errors raised by the gait model, trajectory sampler and analysis routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GaitError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid morphology: `{field}` {reason}")]
    InvalidMorphology { field: &'static str, reason: String },

    #[error("natural frequency undefined: gravity {gravity} m/s^2 and pendulum length {pendulum_length} m must both be positive")]
    UndefinedNaturalFrequency { gravity: f64, pendulum_length: f64 },

    #[error("velocity {velocity} m/s outside admissible range [{min}, {max}] m/s")]
    OutOfRange { velocity: f64, min: f64, max: f64 },

    #[error("infeasible gait: {constraint} violated ({detail})")]
    Infeasible {
        constraint: &'static str,
        detail: String,
    },

    #[error("singular swing geometry: CoM lateral coordinate {y_com} coincides with support foot lateral coordinate")]
    SingularGeometry { y_com: f64 },

    #[error("sampling interval dt={dt} s must lie in (0, {period}) s")]
    SamplingResolution { dt: f64, period: f64 },
}

pub type Result<T> = std::result::Result<T, GaitError>;
