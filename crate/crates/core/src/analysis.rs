//! Feasibility checks, Froude-number gait classification, trajectory audits
//! and velocity sweeps.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{GaitError, Result};
use crate::gait_model::{
    self, froude, FroudeConvention, MorphologyConfig, StrideParameters, BOUNDARY_TOLERANCE,
};
use crate::trajectory::{swing_x, Biped, FootId, GaitSample, Point};

/// Lower edge of the walking band.
pub const WALK_MIN: f64 = 0.10;
/// Walk to gait/canter boundary; belongs to the upper band.
pub const CANTER_MIN: f64 = 0.40;
/// Upper edge (inclusive) of the gait/canter band.
pub const CANTER_MAX: f64 = 4.00;

/// Froude bands for dog locomotion, in increasing speed order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GaitBand {
    BelowWalk,
    /// `[0.10, 0.40)`
    Walk,
    /// `[0.40, 4.00]`
    GaitCanter,
    AboveCanter,
}

impl GaitBand {
    pub fn as_str(self) -> &'static str {
        match self {
            GaitBand::BelowWalk => "below-walk",
            GaitBand::Walk => "walk",
            GaitBand::GaitCanter => "gait-canter",
            GaitBand::AboveCanter => "above-canter",
        }
    }
}

impl fmt::Display for GaitBand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaitClass {
    pub band: GaitBand,
    pub froude: f64,
}

pub fn classify_gait(froude: f64) -> Result<GaitClass> {
    if froude.is_nan() || froude < 0.0 {
        return Err(GaitError::InvalidArgument(format!(
            "Froude number must be non-negative, got {froude}"
        )));
    }
    let band = if froude < WALK_MIN {
        GaitBand::BelowWalk
    } else if froude < CANTER_MIN {
        GaitBand::Walk
    } else if froude <= CANTER_MAX {
        GaitBand::GaitCanter
    } else {
        GaitBand::AboveCanter
    };
    Ok(GaitClass { band, froude })
}

/// Velocity at which the Froude number equals `target`.
pub fn froude_crossing(cfg: &MorphologyConfig, target: f64, convention: FroudeConvention) -> f64 {
    let gl = cfg.gravity * cfg.pendulum_length;
    match convention {
        FroudeConvention::Sqrt => target * gl.sqrt(),
        FroudeConvention::Squared => (target * gl).sqrt(),
    }
}

/// One constraint evaluation. The constraint reads `quantity ≤ bound` and
/// `margin = quantity − bound`, so a positive margin is a violation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstraintCheck {
    pub name: &'static str,
    pub passed: bool,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityReport {
    pub velocity: f64,
    pub checks: Vec<ConstraintCheck>,
    pub overall: bool,
}

impl FeasibilityReport {
    pub fn check(&self, name: &str) -> Option<&ConstraintCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for FeasibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{} {} margin={:e}", c.name, verdict, c.margin)?;
        }
        Ok(())
    }
}

/// Check names in report order.
pub const CHECK_LATERAL_SWAY: &str = "lateral_sway";
pub const CHECK_LEG_REACH: &str = "leg_reach";
pub const CHECK_PENDULUM_HEIGHT: &str = "pendulum_height";
pub const CHECK_VERTICAL_AMPLITUDE: &str = "vertical_amplitude";
pub const CHECK_MAX_SPEED: &str = "max_speed";

/// Stride quantities evaluated without any feasibility gate; `NaN` where a
/// square root has a negative argument.
#[derive(Debug, Clone, Copy)]
struct RawStride {
    step_length: f64,
    step_width: f64,
    lateral_amplitude: f64,
    vertical_amplitude: f64,
    max_height: f64,
    /// Arguments of the two square roots in the amplitude formulas.
    height_sq: f64,
    reach_sq: f64,
}

fn raw_stride(velocity: f64, cfg: &MorphologyConfig) -> Result<RawStride> {
    let step_width = gait_model::step_width(velocity, cfg)?;
    let step_length = gait_model::step_length_unchecked(velocity, cfg)?;
    let half = step_width / 2.0;
    let lateral = step_width / (2.0 * PI * velocity);
    let l = cfg.pendulum_length;
    let leg = cfg.max_leg_extension;
    let height_sq = l * l - (half - lateral).powi(2);
    let reach_sq = leg * leg - half * half - step_length * step_length;
    let max_height = if height_sq >= 0.0 {
        height_sq.sqrt()
    } else {
        f64::NAN
    };
    let vertical = if reach_sq >= 0.0 {
        max_height - reach_sq.sqrt()
    } else {
        f64::NAN
    };
    Ok(RawStride {
        step_length,
        step_width,
        lateral_amplitude: lateral,
        vertical_amplitude: vertical,
        max_height,
        height_sq,
        reach_sq,
    })
}

/// Evaluates the kinematic constraints of the model at one velocity.
/// Failures are report entries, not errors.
pub fn feasibility_check(velocity: f64, cfg: &MorphologyConfig) -> Result<FeasibilityReport> {
    cfg.validate()?;
    if !(velocity > 0.0 && velocity.is_finite()) {
        return Err(GaitError::InvalidArgument(format!(
            "velocity must be finite and positive, got {velocity}"
        )));
    }
    let raw = raw_stride(velocity, cfg)?;
    let half = raw.step_width / 2.0;
    let v_max = cfg.natural_frequency()? * cfg.step_length_max;

    let sway = raw.lateral_amplitude - half;
    let reach = (half * half + raw.step_length * raw.step_length).sqrt() - cfg.max_leg_extension;
    let height = (half - raw.lateral_amplitude).abs() - cfg.pendulum_length;
    // -A_z with both roots clamped at zero, so the margin stays finite.
    let vertical = raw.reach_sq.max(0.0).sqrt() - raw.height_sq.max(0.0).sqrt();
    let speed = velocity - v_max;

    let checks = vec![
        ConstraintCheck {
            name: CHECK_LATERAL_SWAY,
            passed: sway <= BOUNDARY_TOLERANCE * half,
            margin: sway,
        },
        ConstraintCheck {
            name: CHECK_LEG_REACH,
            passed: reach <= 0.0,
            margin: reach,
        },
        ConstraintCheck {
            name: CHECK_PENDULUM_HEIGHT,
            passed: height <= 0.0,
            margin: height,
        },
        ConstraintCheck {
            name: CHECK_VERTICAL_AMPLITUDE,
            passed: vertical <= 0.0 && reach <= 0.0 && height <= 0.0,
            margin: vertical,
        },
        ConstraintCheck {
            name: CHECK_MAX_SPEED,
            passed: speed <= BOUNDARY_TOLERANCE * v_max,
            margin: speed,
        },
    ];
    let overall = checks.iter().all(|c| c.passed);
    Ok(FeasibilityReport {
        velocity,
        checks,
        overall,
    })
}

/// Quantities that measure artefacts of a sampled trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AuditMetrics {
    /// Largest distance between a support CoR and its biped's CoM.
    pub max_leg_extension: f64,
    /// Largest gap between a foot's last support position and the swing
    /// formula evaluated at its lift-off.
    pub max_swing_x_jump: f64,
    /// Largest deviation of the finite-difference forward CoM speed from the
    /// walking velocity.
    pub com_speed_error: f64,
    /// Spread (max − min) of the distance between the two biped CoMs.
    pub intercom_distance_range: f64,
    /// Highest swing-foot height.
    pub swing_peak_clearance: f64,
}

pub fn audit(samples: &[GaitSample], sp: &StrideParameters) -> Result<AuditMetrics> {
    if samples.len() < 2 {
        return Err(GaitError::InvalidArgument(format!(
            "audit needs at least 2 samples, got {}",
            samples.len()
        )));
    }

    let mut max_leg_extension = 0.0f64;
    let mut swing_peak_clearance = 0.0f64;
    let mut distance_min = f64::INFINITY;
    let mut distance_max = f64::NEG_INFINITY;
    for s in samples {
        for biped in Biped::BOTH {
            let support = s.foot(s.support_foot(biped));
            max_leg_extension = max_leg_extension.max((support - s.com(biped)).norm());
        }
        for foot in FootId::ALL {
            if !s.in_support(foot) {
                swing_peak_clearance = swing_peak_clearance.max(s.foot(foot).z);
            }
        }
        let d = (s.com_fore - s.com_hind).norm();
        distance_min = distance_min.min(d);
        distance_max = distance_max.max(d);
    }

    let mut com_speed_error = 0.0f64;
    let mut max_swing_x_jump = 0.0f64;
    for pair in samples.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        let dt = b.t - a.t;
        if dt <= 0.0 {
            return Err(GaitError::InvalidArgument(format!(
                "sample times must increase strictly ({} then {})",
                a.t, b.t
            )));
        }
        for (pa, pb) in [
            (a.com_fore, b.com_fore),
            (a.com_hind, b.com_hind),
            (a.com_quad, b.com_quad),
        ] {
            com_speed_error = com_speed_error.max(((pb.x - pa.x) / dt - sp.velocity).abs());
        }

        for foot in FootId::ALL {
            if !(a.in_support(foot) && !b.in_support(foot)) {
                continue;
            }
            // Lift-off happened at the lateral zero crossing between a and b.
            let (ca, cb) = (a.com(foot.biped), b.com(foot.biped));
            let s = if ca.y != cb.y {
                (ca.y / (ca.y - cb.y)).clamp(0.0, 1.0)
            } else {
                0.5
            };
            let crossing = Point::new(ca.x + s * (cb.x - ca.x), 0.0, ca.z + s * (cb.z - ca.z));
            let support = b.foot(b.support_foot(foot.biped));
            let x = swing_x(&crossing, &support, a.foot(foot).y)?;
            max_swing_x_jump = max_swing_x_jump.max((x - a.foot(foot).x).abs());
        }
    }

    Ok(AuditMetrics {
        max_leg_extension,
        max_swing_x_jump,
        com_speed_error,
        intercom_distance_range: distance_max - distance_min,
        swing_peak_clearance,
    })
}

/// One row of a velocity sweep. Undefined quantities of infeasible rows are
/// `NaN`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub velocity: f64,
    pub step_length: f64,
    pub step_width: f64,
    pub cadence: f64,
    pub lateral_amplitude: f64,
    pub vertical_amplitude: f64,
    pub max_height: f64,
    pub froude_sqrt: f64,
    pub froude_squared: f64,
    /// Band of the Froude number under the sweep's convention.
    pub band: GaitBand,
    pub feasible: bool,
}

/// `count` evenly spaced velocities from `min` to `max` inclusive.
pub fn velocity_grid(min: f64, max: f64, count: usize) -> Result<Vec<f64>> {
    if count == 0 || !(min.is_finite() && max.is_finite()) || max < min {
        return Err(GaitError::InvalidArgument(format!(
            "cannot build a grid of {count} points over [{min}, {max}]"
        )));
    }
    if count == 1 {
        return Ok(vec![min]);
    }
    let last = count - 1;
    Ok((0..count)
        .map(|i| {
            if i == last {
                max
            } else {
                min + (max - min) * i as f64 / last as f64
            }
        })
        .collect())
}

pub fn sweep(cfg: &MorphologyConfig, grid: &[f64]) -> Result<Vec<SweepRow>> {
    sweep_with(cfg, grid, FroudeConvention::default())
}

/// Evaluates every grid velocity. Infeasible velocities stay in the table
/// with `feasible = false`.
pub fn sweep_with(
    cfg: &MorphologyConfig,
    grid: &[f64],
    convention: FroudeConvention,
) -> Result<Vec<SweepRow>> {
    cfg.validate()?;
    if grid.is_empty() {
        return Err(GaitError::InvalidArgument("velocity grid is empty".into()));
    }
    if let Some(v) = grid.iter().find(|v| !(**v > 0.0 && v.is_finite())) {
        return Err(GaitError::InvalidArgument(format!(
            "grid velocities must be positive, got {v}"
        )));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(GaitError::InvalidArgument(
            "grid velocities must be strictly ascending".into(),
        ));
    }

    grid.iter()
        .map(|&velocity| {
            let fn_sqrt = froude(velocity, cfg, FroudeConvention::Sqrt);
            let fn_squared = froude(velocity, cfg, FroudeConvention::Squared);
            let band = classify_gait(match convention {
                FroudeConvention::Sqrt => fn_sqrt,
                FroudeConvention::Squared => fn_squared,
            })?
            .band;
            let report = feasibility_check(velocity, cfg)?;
            let stride = gait_model::stride_parameters(velocity, cfg);
            let row = match (report.overall, stride) {
                (true, Ok(sp)) => SweepRow {
                    velocity,
                    step_length: sp.step_length,
                    step_width: sp.step_width,
                    cadence: sp.cadence,
                    lateral_amplitude: sp.lateral_amplitude,
                    vertical_amplitude: sp.vertical_amplitude,
                    max_height: sp.max_height,
                    froude_sqrt: fn_sqrt,
                    froude_squared: fn_squared,
                    band,
                    feasible: true,
                },
                _ => {
                    let raw = raw_stride(velocity, cfg)?;
                    SweepRow {
                        velocity,
                        step_length: raw.step_length,
                        step_width: raw.step_width,
                        cadence: velocity / raw.step_length,
                        lateral_amplitude: raw.lateral_amplitude,
                        vertical_amplitude: raw.vertical_amplitude,
                        max_height: raw.max_height,
                        froude_sqrt: fn_sqrt,
                        froude_squared: fn_squared,
                        band,
                        feasible: false,
                    }
                }
            };
            Ok(row)
        })
        .collect()
}

/// A change of Froude band between two adjacent sweep rows.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandTransition {
    /// Velocity where the Froude number crosses the band boundary, linearly
    /// interpolated between the two rows.
    pub velocity: f64,
    pub from: GaitBand,
    pub to: GaitBand,
}

fn band_floor(band: GaitBand) -> f64 {
    match band {
        GaitBand::BelowWalk => 0.0,
        GaitBand::Walk => WALK_MIN,
        GaitBand::GaitCanter => CANTER_MIN,
        GaitBand::AboveCanter => CANTER_MAX,
    }
}

/// Band changes along a sweep, located on the `sqrt` Froude column when the
/// rows were classified with it and on the `squared` column otherwise.
pub fn band_transitions(rows: &[SweepRow], convention: FroudeConvention) -> Vec<BandTransition> {
    let value = |r: &SweepRow| match convention {
        FroudeConvention::Sqrt => r.froude_sqrt,
        FroudeConvention::Squared => r.froude_squared,
    };
    rows.windows(2)
        .filter(|w| w[0].band != w[1].band)
        .map(|w| {
            let (a, b) = (&w[0], &w[1]);
            let boundary = band_floor(a.band.max(b.band));
            let (fa, fb) = (value(a), value(b));
            let s = if fb != fa {
                ((boundary - fa) / (fb - fa)).clamp(0.0, 1.0)
            } else {
                0.5
            };
            BandTransition {
                velocity: a.velocity + s * (b.velocity - a.velocity),
                from: a.band,
                to: b.band,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gait_model::{speed_range, stride_parameters, VelocityMode};
    use crate::trajectory::{Gait, PhaseConfig, SwingProfile};
    use std::f64::consts::FRAC_1_PI;

    #[test]
    fn classify_band_edges() {
        assert_eq!(classify_gait(0.16).unwrap().band, GaitBand::Walk);
        assert_eq!(classify_gait(0.40).unwrap().band, GaitBand::GaitCanter);
        assert_eq!(classify_gait(0.05).unwrap().band, GaitBand::BelowWalk);
        assert_eq!(classify_gait(0.10).unwrap().band, GaitBand::Walk);
        assert_eq!(classify_gait(0.399_999_9).unwrap().band, GaitBand::Walk);
        assert_eq!(classify_gait(4.00).unwrap().band, GaitBand::GaitCanter);
        assert_eq!(
            classify_gait(4.000_001).unwrap().band,
            GaitBand::AboveCanter
        );
        assert_eq!(classify_gait(0.0).unwrap().band, GaitBand::BelowWalk);
        assert!(classify_gait(-0.1).is_err());
        assert!(classify_gait(f64::NAN).is_err());
    }

    #[test]
    fn feasibility_at_one_meter_per_second() {
        let report = feasibility_check(1.0, &MorphologyConfig::default()).unwrap();
        assert!(report.overall);
        assert_eq!(report.checks.len(), 5);
        let sp = stride_parameters(1.0, &MorphologyConfig::default()).unwrap();
        let sway = report.check(CHECK_LATERAL_SWAY).unwrap();
        assert!((sway.margin - (sp.lateral_amplitude - sp.half_width())).abs() < 1e-15);
        let vertical = report.check(CHECK_VERTICAL_AMPLITUDE).unwrap();
        assert!((vertical.margin + sp.vertical_amplitude).abs() < 1e-15);
    }

    #[test]
    fn feasibility_below_minimum_speed() {
        let report = feasibility_check(0.25, &MorphologyConfig::default()).unwrap();
        assert!(!report.overall);
        let sway = report.check(CHECK_LATERAL_SWAY).unwrap();
        assert!(!sway.passed);
        assert!(sway.margin > 0.0);
        let d_sw = gait_model::step_width(0.25, &MorphologyConfig::default()).unwrap();
        let expected = d_sw / (2.0 * PI * 0.25) - d_sw / 2.0;
        assert!((sway.margin - expected).abs() < 1e-15);
    }

    #[test]
    fn feasibility_above_maximum_speed() {
        let report = feasibility_check(1.80, &MorphologyConfig::default()).unwrap();
        let speed = report.check(CHECK_MAX_SPEED).unwrap();
        assert!(!speed.passed);
        assert!((speed.margin - (1.80 - 1.712_027_039_904_993_3)).abs() < 1e-12);
        assert!(!report.overall);
    }

    #[test]
    fn long_leg_fails_the_vertical_amplitude_check_at_low_speed() {
        let cfg = MorphologyConfig {
            max_leg_extension: 0.5,
            ..Default::default()
        };
        let report = feasibility_check(0.5, &cfg).unwrap();
        assert!(!report.check(CHECK_VERTICAL_AMPLITUDE).unwrap().passed);
        assert!(report.checks.iter().all(|c| c.margin.is_finite()));
        assert!(feasibility_check(1.0, &cfg).unwrap().overall);
    }

    #[test]
    fn report_text_format() {
        let text = feasibility_check(1.0, &MorphologyConfig::default())
            .unwrap()
            .to_string();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[0].starts_with("lateral_sway PASS margin="));
        for line in lines {
            let parts: Vec<_> = line.split(' ').collect();
            assert_eq!(parts.len(), 3);
            assert!(parts[1] == "PASS" || parts[1] == "FAIL");
            let value: f64 = parts[2].trim_start_matches("margin=").parse().unwrap();
            assert!(value.is_finite());
        }
    }

    fn sample_gait(phase_hind: f64) -> (Gait, Vec<GaitSample>) {
        let cfg = MorphologyConfig::default();
        let pc = PhaseConfig::new(0.0, phase_hind, cfg.spine_length).unwrap();
        let gait = Gait::new(&cfg, pc, 1.0, VelocityMode::Strict, SwingProfile::Sine).unwrap();
        let samples = gait.generate(6, 0.001).unwrap();
        (gait, samples)
    }

    #[test]
    fn audit_of_synchronized_gait() {
        let (gait, samples) = sample_gait(0.0);
        let m = audit(&samples, gait.stride()).unwrap();
        assert!(m.intercom_distance_range < 1e-9);
        assert!(m.com_speed_error <= 1e-9 * gait.stride().velocity);
        let dt = 0.001;
        let quantization = 0.05 * (1.0 - (PI * dt * gait.stride().cadence).cos());
        assert!(m.swing_peak_clearance <= 0.05);
        assert!(m.swing_peak_clearance >= 0.05 - quantization);
        assert!(m.max_leg_extension <= gait.morphology().max_leg_extension);
        assert!(m.max_swing_x_jump < 1e-6, "jump {}", m.max_swing_x_jump);
    }

    #[test]
    fn audit_reports_varying_intercom_distance_with_phase_offset() {
        let (gait, samples) = sample_gait(PI / 2.0);
        let m = audit(&samples, gait.stride()).unwrap();
        assert!(m.intercom_distance_range > 1e-4);
        assert!(m.max_swing_x_jump < 1e-6);
    }

    #[test]
    fn audit_needs_two_samples() {
        let (gait, samples) = sample_gait(0.0);
        assert!(audit(&samples[..1], gait.stride()).is_err());
        assert!(audit(&[], gait.stride()).is_err());
    }

    #[test]
    fn sweep_single_point_matches_stride_parameters() {
        let cfg = MorphologyConfig::default();
        let rows = sweep(&cfg, &[1.0]).unwrap();
        assert_eq!(rows.len(), 1);
        let sp = stride_parameters(1.0, &cfg).unwrap();
        let r = rows[0];
        assert!(r.feasible);
        assert_eq!(r.step_length, sp.step_length);
        assert_eq!(r.step_width, sp.step_width);
        assert_eq!(r.cadence, sp.cadence);
        assert_eq!(r.lateral_amplitude, sp.lateral_amplitude);
        assert_eq!(r.vertical_amplitude, sp.vertical_amplitude);
        assert_eq!(r.max_height, sp.max_height);
        assert_eq!(r.band, GaitBand::GaitCanter);
    }

    #[test]
    fn sweep_keeps_infeasible_rows() {
        let cfg = MorphologyConfig::default();
        let rows = sweep(&cfg, &[0.2, 1.0, 1.8]).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(
            rows.iter().map(|r| r.feasible).collect::<Vec<_>>(),
            vec![false, true, false]
        );
        assert!(rows[2].step_length == cfg.step_length_max);
    }

    #[test]
    fn sweep_rejects_bad_grids() {
        let cfg = MorphologyConfig::default();
        assert!(sweep(&cfg, &[]).is_err());
        assert!(sweep(&cfg, &[1.0, 0.5]).is_err());
        assert!(sweep(&cfg, &[0.0, 0.5]).is_err());
        assert!(sweep(&cfg, &[0.5, 0.5]).is_err());
    }

    #[test]
    fn sweep_over_speed_range_reproduces_froude_envelope() {
        let cfg = MorphologyConfig::default();
        let range = speed_range(&cfg).unwrap();
        let grid = velocity_grid(range.min, range.max, 200).unwrap();
        let rows = sweep(&cfg, &grid).unwrap();
        assert!(rows.iter().all(|r| r.feasible));
        assert!((rows[0].froude_sqrt - 0.16).abs() < 0.01);
        assert!((rows[199].froude_sqrt - 0.86).abs() < 0.01);
        let transitions = band_transitions(&rows, FroudeConvention::Sqrt);
        assert_eq!(transitions.len(), 1);
        assert_eq!(transitions[0].from, GaitBand::Walk);
        assert_eq!(transitions[0].to, GaitBand::GaitCanter);
        let exact = froude_crossing(&cfg, CANTER_MIN, FroudeConvention::Sqrt);
        assert!((transitions[0].velocity - exact).abs() < 1e-12);
        assert!((exact - 0.80).abs() < 0.02);
    }

    #[test]
    fn velocity_grid_endpoints() {
        let g = velocity_grid(FRAC_1_PI, 1.7, 7).unwrap();
        assert_eq!(g.len(), 7);
        assert_eq!(g[0], FRAC_1_PI);
        assert_eq!(g[6], 1.7);
        assert_eq!(velocity_grid(1.0, 1.0, 1).unwrap(), vec![1.0]);
        assert!(velocity_grid(1.0, 0.5, 3).is_err());
        assert!(velocity_grid(0.5, 1.0, 0).is_err());
    }
}
