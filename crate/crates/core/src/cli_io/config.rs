//! Run configuration: a flat `key = value` document (TOML syntax).
//!
//! | key | alias | unit | default |
//! |---|---|---|---|
//! | `pendulum_length` | `l` | m | 0.41 |
//! | `max_leg_extension` | `L` | m | 0.46 |
//! | `hip_width` | `D_ML` | m | 0.30 |
//! | `spine_length` | `D_AP` | m | 0.60 |
//! | `swing_clearance` | `z_c` | m | 0.05 |
//! | `gravity` | `g` | m/s² | 9.81 |
//! | `step_length_min` | `d_SL_min` | m | 0.10 |
//! | `step_length_max` | `d_SL_max` | m | 0.35 |
//! | `phase_fore` | `phi_F` | rad | 0 |
//! | `phase_hind` | `phi_H` | rad | 0 |
//! | `velocity` | `v_w` | m/s | 1.0 |
//! | `steps` | `n_steps` | count | 4 |
//! | `dt` | | s | 0.005 |
//! | `swing_profile` | | `sine` or `cosine` | `sine` |
//! | `froude_convention` | | `sqrt` or `squared` | `sqrt` |
//! | `permissive` | | bool | false |

use std::fs;
use std::path::Path;

use serde::{Deserialize, Deserializer};

use super::IoError;
use crate::error::GaitError;
use crate::gait_model::{FroudeConvention, MorphologyConfig, VelocityMode};
use crate::trajectory::{Gait, PhaseConfig, SwingProfile};

/// Accepts integer literals where a float is expected (`g = 10`).
fn number<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Number {
        Float(f64),
        Int(i64),
    }
    Ok(match Number::deserialize(d)? {
        Number::Float(x) => x,
        Number::Int(i) => i as f64,
    })
}

#[derive(Debug, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct ConfigFile {
    #[serde(alias = "l", deserialize_with = "number")]
    pendulum_length: f64,
    #[serde(alias = "L", deserialize_with = "number")]
    max_leg_extension: f64,
    #[serde(alias = "D_ML", deserialize_with = "number")]
    hip_width: f64,
    #[serde(alias = "D_AP", deserialize_with = "number")]
    spine_length: f64,
    #[serde(alias = "z_c", deserialize_with = "number")]
    swing_clearance: f64,
    #[serde(alias = "g", deserialize_with = "number")]
    gravity: f64,
    #[serde(alias = "d_SL_min", deserialize_with = "number")]
    step_length_min: f64,
    #[serde(alias = "d_SL_max", deserialize_with = "number")]
    step_length_max: f64,
    #[serde(alias = "phi_F", deserialize_with = "number")]
    phase_fore: f64,
    #[serde(alias = "phi_H", deserialize_with = "number")]
    phase_hind: f64,
    #[serde(alias = "v_w", deserialize_with = "number")]
    velocity: f64,
    #[serde(alias = "n_steps")]
    steps: i64,
    #[serde(deserialize_with = "number")]
    dt: f64,
    swing_profile: SwingProfile,
    froude_convention: FroudeConvention,
    permissive: bool,
}

impl Default for ConfigFile {
    fn default() -> Self {
        let m = MorphologyConfig::default();
        let run = RunConfig::default();
        Self {
            pendulum_length: m.pendulum_length,
            max_leg_extension: m.max_leg_extension,
            hip_width: m.hip_width,
            spine_length: m.spine_length,
            swing_clearance: m.swing_clearance,
            gravity: m.gravity,
            step_length_min: m.step_length_min,
            step_length_max: m.step_length_max,
            phase_fore: 0.0,
            phase_hind: 0.0,
            velocity: run.velocity,
            steps: run.steps as i64,
            dt: run.dt,
            swing_profile: run.swing_profile,
            froude_convention: run.froude_convention,
            permissive: run.permissive,
        }
    }
}

/// Everything needed for one run of the generator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunConfig {
    pub morphology: MorphologyConfig,
    pub phases: PhaseConfig,
    pub velocity: f64,
    pub steps: usize,
    pub dt: f64,
    pub swing_profile: SwingProfile,
    pub froude_convention: FroudeConvention,
    pub permissive: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        let morphology = MorphologyConfig::default();
        Self {
            morphology,
            phases: PhaseConfig::new(0.0, 0.0, morphology.spine_length)
                .expect("default spine length is positive"),
            velocity: 1.0,
            steps: 4,
            dt: 0.005,
            swing_profile: SwingProfile::Sine,
            froude_convention: FroudeConvention::Sqrt,
            permissive: false,
        }
    }
}

/// Config key, with its short alias, for a morphology field.
fn key_name(field: &str) -> String {
    let alias = match field {
        "pendulum_length" => "l",
        "max_leg_extension" => "L",
        "hip_width" => "D_ML",
        "spine_length" => "D_AP",
        "swing_clearance" => "z_c",
        "gravity" => "g",
        "step_length_min" => "d_SL_min",
        "step_length_max" => "d_SL_max",
        "velocity" => "v_w",
        "steps" => "n_steps",
        _ => return field.to_string(),
    };
    format!("{field} ({alias})")
}

fn invalid(field: &str, reason: impl Into<String>) -> IoError {
    IoError::Invalid {
        field: key_name(field),
        reason: reason.into(),
    }
}

impl RunConfig {
    pub fn velocity_mode(&self) -> VelocityMode {
        if self.permissive {
            VelocityMode::Permissive
        } else {
            VelocityMode::Strict
        }
    }

    /// Builds the gait, mapping model errors onto the config key at fault.
    pub fn gait(&self) -> Result<Gait, IoError> {
        Gait::new(
            &self.morphology,
            self.phases,
            self.velocity,
            self.velocity_mode(),
            self.swing_profile,
        )
        .map_err(|e| match e {
            GaitError::InvalidMorphology { field, reason } => invalid(field, reason),
            GaitError::UndefinedNaturalFrequency { .. } => invalid("gravity", e.to_string()),
            GaitError::OutOfRange { .. } | GaitError::InvalidArgument(_) => {
                invalid("velocity", e.to_string())
            }
            other => IoError::Gait(other),
        })
    }

    /// Checks every nested invariant, including `dt ∈ (0, 1/ω_S)`.
    pub fn validate(&self) -> Result<(), IoError> {
        let gait = self.gait()?;
        if self.steps == 0 {
            return Err(invalid("steps", "must be at least 1"));
        }
        let period = gait.stride().step_period();
        if !(self.dt > 0.0 && self.dt < period) {
            return Err(invalid(
                "dt",
                format!("must lie in (0, {period}) s, got {}", self.dt),
            ));
        }
        Ok(())
    }
}

/// Parses configuration text, checking the morphology, phases and step
/// count but not the velocity or `dt`. Subcommands that evaluate arbitrary
/// velocities (`check`, `sweep`) start from this.
pub fn parse_config_text(text: &str) -> Result<RunConfig, IoError> {
    let file: ConfigFile = toml::from_str(text).map_err(|e| IoError::Parse(e.to_string()))?;
    let morphology = MorphologyConfig {
        pendulum_length: file.pendulum_length,
        max_leg_extension: file.max_leg_extension,
        hip_width: file.hip_width,
        spine_length: file.spine_length,
        swing_clearance: file.swing_clearance,
        gravity: file.gravity,
        step_length_min: file.step_length_min,
        step_length_max: file.step_length_max,
    };
    morphology.validate().map_err(|e| match e {
        GaitError::InvalidMorphology { field, reason } => invalid(field, reason),
        other => invalid("gravity", other.to_string()),
    })?;
    let phases = PhaseConfig::new(file.phase_fore, file.phase_hind, morphology.spine_length)
        .map_err(|e| invalid("phase_fore", e.to_string()))?;
    if file.steps < 1 {
        return Err(invalid(
            "steps",
            format!("must be at least 1, got {}", file.steps),
        ));
    }
    Ok(RunConfig {
        morphology,
        phases,
        velocity: file.velocity,
        steps: file.steps as usize,
        dt: file.dt,
        swing_profile: file.swing_profile,
        froude_convention: file.froude_convention,
        permissive: file.permissive,
    })
}

/// Parses and fully validates configuration text. Unknown keys are
/// rejected; missing keys take their defaults.
pub fn parse_config(text: &str) -> Result<RunConfig, IoError> {
    let config = parse_config_text(text)?;
    config.validate()?;
    Ok(config)
}

fn read(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|e| IoError::file(path, e))
}

pub fn load_config(path: impl AsRef<Path>) -> Result<RunConfig, IoError> {
    parse_config(&read(path.as_ref())?)
}

/// [`load_config`] without the velocity and `dt` checks.
pub fn load_config_text(path: impl AsRef<Path>) -> Result<RunConfig, IoError> {
    parse_config_text(&read(path.as_ref())?)
}
