//! Velocity-dependent gait parameters for a biped modelled as a linear
//! inverted pendulum with a variable-length leg.
//!
//! Every quantity here is a closed-form function of the walking velocity and
//! the body's [`MorphologyConfig`]: the step-width and step-length
//! strategies, the cadence that ties them together, and the lateral and
//! vertical amplitudes of the centre-of-mass oscillation.

use std::f64::consts::{FRAC_1_PI, PI};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{GaitError, Result};

/// Relative slack applied when comparing against the analytic speed bounds,
/// so that `v = 1/π` and `v = v_max` evaluated in floating point stay inside
/// the admissible range.
pub const BOUNDARY_TOLERANCE: f64 = 1e-12;

/// Physical constants of the quadruped. Lengths in meters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MorphologyConfig {
    /// Nominal CoM height over the support point.
    pub pendulum_length: f64,
    /// Maximum extension achievable by a leg.
    pub max_leg_extension: f64,
    /// Mediolateral distance between the hip joints.
    pub hip_width: f64,
    /// Anteroposterior distance between the fore and hind biped CoMs.
    pub spine_length: f64,
    /// Desired vertical clearance of a swinging foot.
    pub swing_clearance: f64,
    /// Gravitational acceleration, m/s².
    pub gravity: f64,
    pub step_length_min: f64,
    pub step_length_max: f64,
}

impl Default for MorphologyConfig {
    fn default() -> Self {
        Self {
            pendulum_length: 0.41,
            max_leg_extension: 0.46,
            hip_width: 0.30,
            spine_length: 0.60,
            swing_clearance: 0.05,
            gravity: 9.81,
            step_length_min: 0.10,
            step_length_max: 0.35,
        }
    }
}

fn require_positive(field: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(GaitError::InvalidMorphology {
            field,
            reason: format!("must be finite and strictly positive, got {value}"),
        })
    }
}

impl MorphologyConfig {
    pub fn validate(&self) -> Result<()> {
        require_positive("pendulum_length", self.pendulum_length)?;
        require_positive("max_leg_extension", self.max_leg_extension)?;
        require_positive("hip_width", self.hip_width)?;
        require_positive("spine_length", self.spine_length)?;
        require_positive("swing_clearance", self.swing_clearance)?;
        require_positive("step_length_min", self.step_length_min)?;
        require_positive("step_length_max", self.step_length_max)?;
        self.natural_frequency()?;

        if self.max_leg_extension <= self.pendulum_length {
            return Err(GaitError::InvalidMorphology {
                field: "max_leg_extension",
                reason: format!(
                    "must exceed pendulum_length ({} <= {})",
                    self.max_leg_extension, self.pendulum_length
                ),
            });
        }
        if self.step_length_max <= self.step_length_min {
            return Err(GaitError::InvalidMorphology {
                field: "step_length_max",
                reason: format!(
                    "must exceed step_length_min ({} <= {})",
                    self.step_length_max, self.step_length_min
                ),
            });
        }
        // Leg must reach the widest stance at the longest step.
        let reach_sq = (self.step_width_max() / 2.0).powi(2) + self.step_length_max.powi(2);
        if self.max_leg_extension.powi(2) <= reach_sq {
            return Err(GaitError::InvalidMorphology {
                field: "max_leg_extension",
                reason: format!(
                    "must exceed sqrt((0.6*hip_width)^2 + step_length_max^2) = {}",
                    reach_sq.sqrt()
                ),
            });
        }
        Ok(())
    }

    /// `ω_n = sqrt(g / l)`, rad/s.
    pub fn natural_frequency(&self) -> Result<f64> {
        let (g, l) = (self.gravity, self.pendulum_length);
        if !(g.is_finite() && l.is_finite() && g > 0.0 && l > 0.0) {
            return Err(GaitError::UndefinedNaturalFrequency {
                gravity: g,
                pendulum_length: l,
            });
        }
        Ok((g / l).sqrt())
    }

    pub fn step_width_max(&self) -> f64 {
        1.2 * self.hip_width
    }

    pub fn step_width_min(&self) -> f64 {
        self.hip_width / 2.0
    }

    /// Slope of the linear step-width strategy, m per (m/s). Negative.
    pub fn step_width_slope(&self) -> f64 {
        (self.step_width_min() - self.step_width_max()) / 2.0
    }
}

/// All velocity-derived gait quantities for one steady gait.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StrideParameters {
    /// Walking velocity, m/s.
    pub velocity: f64,
    pub step_length: f64,
    pub step_width: f64,
    /// Step frequency, steps/s.
    pub cadence: f64,
    /// Mediolateral CoM amplitude.
    pub lateral_amplitude: f64,
    /// Vertical CoM amplitude.
    pub vertical_amplitude: f64,
    /// Maximum CoM height.
    pub max_height: f64,
    /// Pendulum natural frequency, rad/s.
    pub natural_frequency: f64,
    /// Set when the velocity is below `1/π` and the lateral amplitude was
    /// clamped to half the step width (permissive mode only).
    pub sub_minimum: bool,
}

impl StrideParameters {
    /// Duration of one step, `1/ω_S`.
    pub fn step_period(&self) -> f64 {
        1.0 / self.cadence
    }

    /// Lowest CoM height reached mid-step, `z_max − 2·A_z`.
    pub fn min_height(&self) -> f64 {
        self.max_height - 2.0 * self.vertical_amplitude
    }

    pub fn half_width(&self) -> f64 {
        self.step_width / 2.0
    }
}

/// Step width for a walking velocity: linear strategy clamped at `D_ML/2`.
pub fn step_width(velocity: f64, cfg: &MorphologyConfig) -> Result<f64> {
    cfg.validate()?;
    if !(velocity >= 0.0 && velocity.is_finite()) {
        return Err(GaitError::InvalidArgument(format!(
            "velocity must be finite and non-negative, got {velocity}"
        )));
    }
    let linear = cfg.step_width_slope() * velocity + cfg.step_width_max();
    Ok(linear.max(cfg.step_width_min()))
}

/// Step length without the `v ≤ v_max` check: the linear strategy clamped to
/// `[d_SL_min, d_SL_max]`. Used by analysis code that must evaluate
/// infeasible velocities too.
pub(crate) fn step_length_unchecked(velocity: f64, cfg: &MorphologyConfig) -> Result<f64> {
    let v_max = cfg.natural_frequency()? * cfg.step_length_max;
    let slope = (cfg.step_length_max - cfg.step_length_min) / (0.8 * v_max);
    Ok((slope * velocity + cfg.step_length_min).min(cfg.step_length_max))
}

/// Step length for a walking velocity. Reaches `d_SL_max` at `0.8·v_max`
/// and is held there up to `v_max`.
pub fn step_length(velocity: f64, cfg: &MorphologyConfig) -> Result<f64> {
    cfg.validate()?;
    if !(velocity >= 0.0 && velocity.is_finite()) {
        return Err(GaitError::InvalidArgument(format!(
            "velocity must be finite and non-negative, got {velocity}"
        )));
    }
    let v_max = cfg.natural_frequency()? * cfg.step_length_max;
    if velocity > v_max * (1.0 + BOUNDARY_TOLERANCE) {
        return Err(GaitError::OutOfRange {
            velocity,
            min: 0.0,
            max: v_max,
        });
    }
    step_length_unchecked(velocity, cfg)
}

/// Step frequency `v_w / d_SL`, steps per second.
pub fn cadence(velocity: f64, step_length: f64) -> Result<f64> {
    if !(step_length > 0.0 && step_length.is_finite()) {
        return Err(GaitError::InvalidArgument(format!(
            "step length must be finite and positive, got {step_length}"
        )));
    }
    if !(velocity > 0.0 && velocity.is_finite()) {
        return Err(GaitError::InvalidArgument(format!(
            "velocity must be finite and positive, got {velocity}"
        )));
    }
    Ok(velocity / step_length)
}

/// Lateral amplitude, vertical amplitude and peak height of the CoM.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Amplitudes {
    pub lateral: f64,
    pub vertical: f64,
    pub max_height: f64,
}

/// Evaluates the amplitude formulas for a given lateral amplitude.
fn amplitudes_for_lateral(
    lateral: f64,
    step_width: f64,
    step_length: f64,
    cfg: &MorphologyConfig,
) -> Result<Amplitudes> {
    let half_width = step_width / 2.0;
    let l = cfg.pendulum_length;
    let leg = cfg.max_leg_extension;

    let height_sq = l * l - (half_width - lateral).powi(2);
    if height_sq < 0.0 {
        return Err(GaitError::Infeasible {
            constraint: "pendulum height l >= |d_SW/2 - A_y|",
            detail: format!("l = {l}, |d_SW/2 - A_y| = {}", (half_width - lateral).abs()),
        });
    }
    let reach_sq = leg * leg - half_width * half_width - step_length * step_length;
    if reach_sq < 0.0 {
        return Err(GaitError::Infeasible {
            constraint: "leg reach L^2 >= (d_SW/2)^2 + d_SL^2",
            detail: format!(
                "L = {leg}, sqrt((d_SW/2)^2 + d_SL^2) = {}",
                (half_width * half_width + step_length * step_length).sqrt()
            ),
        });
    }
    let max_height = height_sq.sqrt();
    let vertical = max_height - reach_sq.sqrt();
    if vertical < 0.0 {
        return Err(GaitError::Infeasible {
            constraint: "vertical amplitude A_z >= 0",
            detail: format!("A_z = {vertical}"),
        });
    }
    Ok(Amplitudes {
        lateral,
        vertical,
        max_height,
    })
}

/// CoM oscillation amplitudes for a velocity, step width and step length.
pub fn amplitudes(
    velocity: f64,
    step_width: f64,
    step_length: f64,
    cfg: &MorphologyConfig,
) -> Result<Amplitudes> {
    if !(velocity > 0.0 && velocity.is_finite()) {
        return Err(GaitError::InvalidArgument(format!(
            "velocity must be finite and positive, got {velocity}"
        )));
    }
    let lateral = step_width / (2.0 * PI * velocity);
    amplitudes_for_lateral(lateral, step_width, step_length, cfg)
}

/// Admissible walking speeds, m/s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpeedRange {
    pub min: f64,
    pub max: f64,
}

impl SpeedRange {
    pub fn contains(&self, velocity: f64) -> bool {
        velocity >= self.min * (1.0 - BOUNDARY_TOLERANCE)
            && velocity <= self.max * (1.0 + BOUNDARY_TOLERANCE)
    }
}

/// The minimum speed is where the lateral sway `d_SW/(2π v)` reaches the
/// feet at `d_SW/2`, i.e. `1/π` for every step width. The maximum is
/// `ω_n · d_SL_max`.
pub fn speed_range(cfg: &MorphologyConfig) -> Result<SpeedRange> {
    cfg.validate()?;
    Ok(SpeedRange {
        min: FRAC_1_PI,
        max: cfg.natural_frequency()? * cfg.step_length_max,
    })
}

/// Whether velocities below the minimum speed are accepted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VelocityMode {
    #[default]
    Strict,
    /// Below `1/π` the lateral amplitude is clamped to `d_SW/2` and the
    /// result is flagged [`StrideParameters::sub_minimum`].
    Permissive,
}

pub fn stride_parameters(velocity: f64, cfg: &MorphologyConfig) -> Result<StrideParameters> {
    stride_parameters_with(velocity, cfg, VelocityMode::Strict)
}

pub fn stride_parameters_with(
    velocity: f64,
    cfg: &MorphologyConfig,
    mode: VelocityMode,
) -> Result<StrideParameters> {
    let range = speed_range(cfg)?;
    if !(velocity > 0.0 && velocity.is_finite()) {
        return Err(GaitError::InvalidArgument(format!(
            "velocity must be finite and positive, got {velocity}"
        )));
    }
    let sub_minimum = velocity < range.min * (1.0 - BOUNDARY_TOLERANCE);
    let above = velocity > range.max * (1.0 + BOUNDARY_TOLERANCE);
    if above || (sub_minimum && mode == VelocityMode::Strict) {
        return Err(GaitError::OutOfRange {
            velocity,
            min: range.min,
            max: range.max,
        });
    }

    let step_width = step_width(velocity, cfg)?;
    let step_length = step_length(velocity, cfg)?;
    let cadence = cadence(velocity, step_length)?;
    // Clamping also absorbs the last-ulp overshoot at exactly v = 1/π.
    let lateral = (step_width / (2.0 * PI * velocity)).min(step_width / 2.0);
    let amp = amplitudes_for_lateral(lateral, step_width, step_length, cfg)?;

    let params = StrideParameters {
        velocity,
        step_length,
        step_width,
        cadence,
        lateral_amplitude: amp.lateral,
        vertical_amplitude: amp.vertical,
        max_height: amp.max_height,
        natural_frequency: cfg.natural_frequency()?,
        sub_minimum,
    };
    let finite = [
        params.step_length,
        params.step_width,
        params.cadence,
        params.lateral_amplitude,
        params.vertical_amplitude,
        params.max_height,
    ]
    .iter()
    .all(|x| x.is_finite());
    if !finite || params.min_height() <= 0.0 {
        return Err(GaitError::Infeasible {
            constraint: "finite stride with positive minimum CoM height",
            detail: format!("{params:?}"),
        });
    }
    Ok(params)
}

/// Which Froude number definition to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FroudeConvention {
    /// `v² / (g l)`
    Squared,
    /// `v / sqrt(g l)`
    #[default]
    Sqrt,
}

impl fmt::Display for FroudeConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Squared => "squared",
            Self::Sqrt => "sqrt",
        })
    }
}

impl FromStr for FroudeConvention {
    type Err = GaitError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "squared" => Ok(Self::Squared),
            "sqrt" => Ok(Self::Sqrt),
            other => Err(GaitError::InvalidArgument(format!(
                "unknown Froude convention `{other}` (expected `sqrt` or `squared`)"
            ))),
        }
    }
}

/// Froude number of a walking velocity, using the pendulum length as the
/// characteristic leg length.
pub fn froude(velocity: f64, cfg: &MorphologyConfig, convention: FroudeConvention) -> f64 {
    let gl = cfg.gravity * cfg.pendulum_length;
    match convention {
        FroudeConvention::Squared => velocity * velocity / gl,
        FroudeConvention::Sqrt => velocity / gl.sqrt(),
    }
}
