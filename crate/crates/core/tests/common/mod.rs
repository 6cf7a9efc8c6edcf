#![allow(dead_code)]

use proptest::prelude::*;
use quadgait::gait_model::{speed_range, MorphologyConfig};

/// Morphology built from eight unit-interval draws.
///
/// Besides the validation invariants (including `L > l`) the family keeps
/// `L² <= l² + d_SL_min²` (vertical amplitude never negative),
/// `l >= 0.6·D_ML` (peak height always real) and
/// `L² > (0.6·D_ML)² + d_SL_max² + l²/4` (lowest CoM point above ground),
/// so every velocity in the speed range yields a valid stride. The top
/// speed is drawn from [0.45, 2.2] m/s and gravity derived from it.
pub fn admissible_morphology(u: [f64; 8]) -> MorphologyConfig {
    let l = 0.2 + 0.8 * u[0];
    let hip_width = l * (0.2 + 0.6 * u[1]);
    let step_length_min = l * (0.10 + 0.25 * u[2]);
    let step_length_max = step_length_min + l * (0.10 + 0.25 * u[3]);
    let lo = ((0.6 * hip_width).powi(2) + step_length_max.powi(2) + l * l / 4.0).max(l * l);
    let hi = l * l + step_length_min.powi(2);
    assert!(lo < hi, "empty leg-length interval for l={l}");
    let leg_sq = lo + (0.02 + 0.98 * u[4]) * (hi - lo);
    // Gravity follows from the drawn top speed so the range is never empty.
    let v_max = 0.45 + 1.75 * u[7];
    let gravity = l * (v_max / step_length_max).powi(2);
    let cfg = MorphologyConfig {
        pendulum_length: l,
        max_leg_extension: leg_sq.sqrt(),
        hip_width,
        spine_length: 0.2 + 1.3 * u[5],
        swing_clearance: 0.01 + 0.09 * u[6],
        gravity,
        step_length_min,
        step_length_max,
    };
    cfg.validate().expect("generated morphology must validate");
    cfg
}

pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

pub fn unit() -> impl Strategy<Value = f64> {
    0.0..=1.0f64
}

pub fn morphology() -> impl Strategy<Value = MorphologyConfig> {
    prop::array::uniform8(unit()).prop_map(admissible_morphology)
}

/// Velocity strictly above the minimum speed, up to and including the
/// maximum.
pub fn velocity_in(cfg: &MorphologyConfig, u: f64) -> f64 {
    let r = speed_range(cfg).unwrap();
    let lo = r.min * (1.0 + 1e-6);
    lo + u * (r.max - lo)
}

pub fn rel_diff(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}
