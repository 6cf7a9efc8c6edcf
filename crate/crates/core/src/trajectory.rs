//! Closed-form CoM and foot trajectories for the fore and hind bipeds.
//!
//! Each biped's CoM advances at the walking velocity while swaying laterally
//! at angular frequency `π·ω_S` and bobbing vertically at `2π·ω_S`. Support
//! belongs to the foot on the side of the current lateral CoM displacement,
//! so the support foot changes at every zero crossing of the lateral sway and
//! each foot alternates support and swing intervals of one step period.
//!
//! A support foot is placed directly below the CoM at mid-stance (the lateral
//! sway extremum). At every support transfer the two feet of a biped then sit
//! `∓d_SL/2` around the CoM, and the line-projection swing rule lands the
//! swinging foot on its next foothold.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use nalgebra::Point3;
use serde::{Deserialize, Serialize};

use crate::error::{GaitError, Result};
use crate::gait_model::{self, MorphologyConfig, StrideParameters, VelocityMode};

pub type Point = Point3<f64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Biped {
    Fore,
    Hind,
}

impl Biped {
    pub const BOTH: [Biped; 2] = [Biped::Fore, Biped::Hind];
}

/// Foot side. `Left` lies on `+y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn lateral_sign(self) -> f64 {
        match self {
            Side::Left => 1.0,
            Side::Right => -1.0,
        }
    }

    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FootId {
    pub biped: Biped,
    pub side: Side,
}

impl FootId {
    pub const FORE_LEFT: FootId = FootId::new(Biped::Fore, Side::Left);
    pub const FORE_RIGHT: FootId = FootId::new(Biped::Fore, Side::Right);
    pub const HIND_LEFT: FootId = FootId::new(Biped::Hind, Side::Left);
    pub const HIND_RIGHT: FootId = FootId::new(Biped::Hind, Side::Right);

    /// All feet in export order: FL, FR, HL, HR.
    pub const ALL: [FootId; 4] = [
        Self::FORE_LEFT,
        Self::FORE_RIGHT,
        Self::HIND_LEFT,
        Self::HIND_RIGHT,
    ];

    pub const fn new(biped: Biped, side: Side) -> Self {
        Self { biped, side }
    }

    /// Position of this foot in [`FootId::ALL`] and in `GaitSample::feet`.
    pub fn index(self) -> usize {
        let b = match self.biped {
            Biped::Fore => 0,
            Biped::Hind => 2,
        };
        let s = match self.side {
            Side::Left => 0,
            Side::Right => 1,
        };
        b + s
    }

    pub fn label(self) -> &'static str {
        match (self.biped, self.side) {
            (Biped::Fore, Side::Left) => "FL",
            (Biped::Fore, Side::Right) => "FR",
            (Biped::Hind, Side::Left) => "HL",
            (Biped::Hind, Side::Right) => "HR",
        }
    }
}

impl fmt::Display for FootId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for FootId {
    type Err = GaitError;

    fn from_str(s: &str) -> Result<Self> {
        FootId::ALL
            .into_iter()
            .find(|foot| foot.label() == s)
            .ok_or_else(|| GaitError::InvalidArgument(format!("unknown foot `{s}`")))
    }
}

/// Starting phases and initial CoM positions of the two bipeds.
///
/// Phases are normalised to `[0, 2π)`. The CoMs start at `±D_AP/2` around
/// the origin, so their separation equals the spine length exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseConfig {
    phase_fore: f64,
    phase_hind: f64,
    x0_fore: f64,
    x0_hind: f64,
}

impl PhaseConfig {
    pub fn new(phase_fore: f64, phase_hind: f64, spine_length: f64) -> Result<Self> {
        if !(phase_fore.is_finite() && phase_hind.is_finite()) {
            return Err(GaitError::InvalidArgument(format!(
                "phases must be finite, got ({phase_fore}, {phase_hind})"
            )));
        }
        if !(spine_length.is_finite() && spine_length > 0.0) {
            return Err(GaitError::InvalidArgument(format!(
                "spine length must be positive, got {spine_length}"
            )));
        }
        let half = spine_length / 2.0;
        Ok(Self {
            phase_fore: phase_fore.rem_euclid(TAU),
            phase_hind: phase_hind.rem_euclid(TAU),
            x0_fore: half,
            x0_hind: -half,
        })
    }

    /// Both bipeds in phase, starting at a lateral sway extremum.
    pub fn synchronized(cfg: &MorphologyConfig) -> Result<Self> {
        Self::new(0.0, 0.0, cfg.spine_length)
    }

    pub fn phase(&self, biped: Biped) -> f64 {
        match biped {
            Biped::Fore => self.phase_fore,
            Biped::Hind => self.phase_hind,
        }
    }

    pub fn initial_x(&self, biped: Biped) -> f64 {
        match biped {
            Biped::Fore => self.x0_fore,
            Biped::Hind => self.x0_hind,
        }
    }
}

/// One time-stamped snapshot of the quadruped.
#[derive(Debug, Clone, PartialEq)]
pub struct GaitSample {
    pub t: f64,
    pub com_fore: Point,
    pub com_hind: Point,
    pub com_quad: Point,
    /// Centre-of-rotation positions indexed by [`FootId::index`].
    pub feet: [Point; 4],
    /// `true` while the foot is in support.
    pub support: [bool; 4],
}

impl GaitSample {
    pub fn com(&self, biped: Biped) -> Point {
        match biped {
            Biped::Fore => self.com_fore,
            Biped::Hind => self.com_hind,
        }
    }

    pub fn foot(&self, foot: FootId) -> Point {
        self.feet[foot.index()]
    }

    pub fn in_support(&self, foot: FootId) -> bool {
        self.support[foot.index()]
    }

    /// The support foot of a biped.
    pub fn support_foot(&self, biped: Biped) -> FootId {
        let left = FootId::new(biped, Side::Left);
        if self.in_support(left) {
            left
        } else {
            FootId::new(biped, Side::Right)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EventKind {
    TouchDown,
    LiftOff,
}

impl fmt::Display for EventKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EventKind::TouchDown => "touchdown",
            EventKind::LiftOff => "liftoff",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaitEvent {
    pub t: f64,
    pub foot: FootId,
    pub kind: EventKind,
    pub position: Point,
}

/// Vertical profile of a swinging foot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SwingProfile {
    /// `z_c·sin(π·s)` over the swing fraction `s ∈ [0, 1]`; zero at lift-off
    /// and touchdown.
    #[default]
    Sine,
    /// `z_c·cos(ω_S·t + φ)`, evaluated verbatim. Does not vanish at the
    /// swing boundaries.
    Cosine,
}

impl fmt::Display for SwingProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SwingProfile::Sine => "sine",
            SwingProfile::Cosine => "cosine",
        })
    }
}

impl FromStr for SwingProfile {
    type Err = GaitError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sine" => Ok(SwingProfile::Sine),
            "cosine" => Ok(SwingProfile::Cosine),
            other => Err(GaitError::InvalidArgument(format!(
                "unknown swing profile `{other}` (expected `sine` or `cosine`)"
            ))),
        }
    }
}

/// CoM position of one biped at time `t`.
pub fn com_position(t: f64, biped: Biped, sp: &StrideParameters, pc: &PhaseConfig) -> Point {
    let phase = pc.phase(biped);
    let x = sp.velocity * t + pc.initial_x(biped);
    let y = sp.lateral_amplitude * (PI * sp.cadence * t + phase).cos();
    let z = (sp.max_height - sp.vertical_amplitude)
        + sp.vertical_amplitude * (2.0 * PI * sp.cadence * t + 2.0 * phase).cos();
    Point::new(x, y, z)
}

/// Quadruped CoM: midpoint of the two biped CoMs.
pub fn quad_com(fore: &Point, hind: &Point) -> Point {
    Point::new(
        (fore.x + hind.x) / 2.0,
        (fore.y + hind.y) / 2.0,
        (fore.z + hind.z) / 2.0,
    )
}

/// Index of the support interval containing `t`. Interval `n` is centred on
/// the sway extremum `π·ω_S·t + φ = nπ` and spans one step period; a zero
/// crossing belongs to the interval that starts there.
pub fn stance_index(t: f64, cadence: f64, phase: f64) -> i64 {
    (cadence * t + phase / PI + 0.5).floor() as i64
}

fn stance_side(index: i64) -> Side {
    if index.rem_euclid(2) == 0 {
        Side::Left
    } else {
        Side::Right
    }
}

/// Side of the support foot at time `t`: the side of the lateral CoM
/// displacement `cos(π·ω_S·t + φ)`.
pub fn support_side(t: f64, cadence: f64, phase: f64) -> Side {
    stance_side(stance_index(t, cadence, phase))
}

/// Forward coordinate of a swinging foot: the point where the line through
/// the support CoR and the CoM meets the swing foot's lateral line.
pub fn swing_x(com: &Point, support: &Point, swing_y: f64) -> Result<f64> {
    let dy = com.y - support.y;
    if dy == 0.0 {
        return Err(GaitError::SingularGeometry { y_com: com.y });
    }
    Ok(support.x + (swing_y - support.y) * (com.x - support.x) / dy)
}

/// Time window of one swing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwingWindow {
    pub liftoff: f64,
    pub duration: f64,
    /// Starting phase of the biped, used by [`SwingProfile::Cosine`].
    pub phase: f64,
}

fn swing_height(
    fraction: f64,
    t: f64,
    window: &SwingWindow,
    clearance: f64,
    profile: SwingProfile,
) -> f64 {
    match profile {
        SwingProfile::Sine => clearance * (PI * fraction).sin(),
        SwingProfile::Cosine => clearance * (t / window.duration + window.phase).cos(),
    }
}

/// Height of a swinging foot at time `t`.
pub fn swing_z(t: f64, window: &SwingWindow, clearance: f64, profile: SwingProfile) -> Result<f64> {
    if !(window.duration > 0.0 && window.duration.is_finite()) {
        return Err(GaitError::InvalidArgument(format!(
            "swing duration must be positive, got {}",
            window.duration
        )));
    }
    let fraction = (t - window.liftoff) / window.duration;
    let slack = 1e-12;
    if !(-slack..=1.0 + slack).contains(&fraction) {
        return Err(GaitError::InvalidArgument(format!(
            "t = {t} s outside swing window [{}, {}] s",
            window.liftoff,
            window.liftoff + window.duration
        )));
    }
    Ok(swing_height(
        fraction.clamp(0.0, 1.0),
        t,
        window,
        clearance,
        profile,
    ))
}

/// A steady gait: morphology, phases, swing profile and the stride
/// parameters for one walking velocity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gait {
    morphology: MorphologyConfig,
    phases: PhaseConfig,
    stride: StrideParameters,
    profile: SwingProfile,
}

impl Gait {
    pub fn new(
        cfg: &MorphologyConfig,
        phases: PhaseConfig,
        velocity: f64,
        mode: VelocityMode,
        profile: SwingProfile,
    ) -> Result<Self> {
        let stride = gait_model::stride_parameters_with(velocity, cfg, mode)?;
        Ok(Self {
            morphology: *cfg,
            phases,
            stride,
            profile,
        })
    }

    pub fn stride(&self) -> &StrideParameters {
        &self.stride
    }

    pub fn phases(&self) -> &PhaseConfig {
        &self.phases
    }

    pub fn morphology(&self) -> &MorphologyConfig {
        &self.morphology
    }

    pub fn profile(&self) -> SwingProfile {
        self.profile
    }

    /// Time taken by `steps` steps.
    pub fn duration(&self, steps: usize) -> f64 {
        steps as f64 / self.stride.cadence
    }

    pub fn com(&self, t: f64, biped: Biped) -> Point {
        com_position(t, biped, &self.stride, &self.phases)
    }

    /// Mid-stance time of support interval `index`.
    fn stance_centre(&self, biped: Biped, index: i64) -> f64 {
        (index as f64 - self.phases.phase(biped) / PI) / self.stride.cadence
    }

    /// Support CoR for interval `index`: below the CoM at mid-stance.
    pub fn foothold(&self, biped: Biped, index: i64) -> Point {
        let t = self.stance_centre(biped, index);
        let x = self.stride.velocity * t + self.phases.initial_x(biped);
        let y = stance_side(index).lateral_sign() * self.stride.half_width();
        Point::new(x, y, 0.0)
    }

    pub fn sample(&self, t: f64) -> Result<GaitSample> {
        let sp = &self.stride;
        let com_fore = self.com(t, Biped::Fore);
        let com_hind = self.com(t, Biped::Hind);
        let mut feet = [Point::origin(); 4];
        let mut support = [false; 4];

        for biped in Biped::BOTH {
            let phase = self.phases.phase(biped);
            let com = if biped == Biped::Fore {
                com_fore
            } else {
                com_hind
            };
            let progress = sp.cadence * t + phase / PI + 0.5;
            let index = progress.floor() as i64;
            let fraction = progress - index as f64;

            let stance = FootId::new(biped, stance_side(index));
            let swing = FootId::new(biped, stance.side.opposite());
            let foothold = self.foothold(biped, index);
            let swing_y = swing.side.lateral_sign() * sp.half_width();

            let x = if sp.sub_minimum {
                // Line projection is unbounded when the sway reaches the feet.
                let from = self.foothold(biped, index - 1).x;
                let to = self.foothold(biped, index + 1).x;
                from + fraction * (to - from)
            } else {
                swing_x(&com, &foothold, swing_y)?
            };
            let window = SwingWindow {
                liftoff: (index as f64 - 0.5 - phase / PI) / sp.cadence,
                duration: sp.step_period(),
                phase,
            };
            let z = swing_height(
                fraction,
                t,
                &window,
                self.morphology.swing_clearance,
                self.profile,
            );

            feet[stance.index()] = foothold;
            support[stance.index()] = true;
            feet[swing.index()] = Point::new(x, swing_y, z);
        }

        Ok(GaitSample {
            t,
            com_fore,
            com_hind,
            com_quad: quad_com(&com_fore, &com_hind),
            feet,
            support,
        })
    }

    /// Samples `[0, steps/ω_S]` uniformly with spacing at most `dt`; both
    /// endpoints are included.
    pub fn generate(&self, steps: usize, dt: f64) -> Result<Vec<GaitSample>> {
        if steps == 0 {
            return Err(GaitError::InvalidArgument(
                "number of steps must be at least 1".into(),
            ));
        }
        let period = self.stride.step_period();
        if !(dt > 0.0 && dt < period) {
            return Err(GaitError::SamplingResolution { dt, period });
        }
        let total = self.duration(steps);
        let intervals = (total / dt).ceil().max(1.0) as usize;
        (0..=intervals)
            .map(|k| {
                let t = if k == intervals {
                    total
                } else {
                    total * k as f64 / intervals as f64
                };
                self.sample(t)
            })
            .collect()
    }

    /// Lift-off and touchdown events in `[0, steps/ω_S]`, sorted by time.
    /// Simultaneous events are ordered by foot, touchdown first.
    pub fn events(&self, steps: usize) -> Result<Vec<GaitEvent>> {
        if steps == 0 {
            return Err(GaitError::InvalidArgument(
                "number of steps must be at least 1".into(),
            ));
        }
        let total = self.duration(steps);
        let slack = 1e-12 * total;
        let mut events = Vec::new();
        for biped in Biped::BOTH {
            let offset = self.phases.phase(biped) / PI;
            // Support transfer `m` happens at π·ω_S·t + φ = (m + 1/2)·π.
            let mut crossing = (offset - 0.5 - 1e-12).ceil() as i64;
            loop {
                let t = (crossing as f64 + 0.5 - offset) / self.stride.cadence;
                if t > total + slack {
                    break;
                }
                if t >= -slack {
                    let outgoing = self.foothold(biped, crossing);
                    let incoming = self.foothold(biped, crossing + 1);
                    events.push(GaitEvent {
                        t,
                        foot: FootId::new(biped, stance_side(crossing + 1)),
                        kind: EventKind::TouchDown,
                        position: incoming,
                    });
                    events.push(GaitEvent {
                        t,
                        foot: FootId::new(biped, stance_side(crossing)),
                        kind: EventKind::LiftOff,
                        position: outgoing,
                    });
                }
                crossing += 1;
            }
        }
        events.sort_by(|a, b| {
            a.t.total_cmp(&b.t)
                .then(a.foot.biped.cmp(&b.foot.biped))
                .then(a.kind.cmp(&b.kind))
        });
        Ok(events)
    }
}

/// Samples a strict-velocity gait with the sine swing profile.
pub fn generate(
    cfg: &MorphologyConfig,
    pc: &PhaseConfig,
    velocity: f64,
    steps: usize,
    dt: f64,
) -> Result<Vec<GaitSample>> {
    Gait::new(cfg, *pc, velocity, VelocityMode::Strict, SwingProfile::Sine)?.generate(steps, dt)
}

/// Gait events of a strict-velocity gait.
pub fn events(
    cfg: &MorphologyConfig,
    pc: &PhaseConfig,
    velocity: f64,
    steps: usize,
) -> Result<Vec<GaitEvent>> {
    Gait::new(cfg, *pc, velocity, VelocityMode::Strict, SwingProfile::Sine)?.events(steps)
}
