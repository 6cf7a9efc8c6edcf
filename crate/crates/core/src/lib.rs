//! Quadruped walking trajectories synthesised from two linear inverted
//! pendulum bipeds (fore and hind) joined at their centres of mass.
//!
//! * [`gait_model`] maps a walking velocity to step length, step width,
//!   cadence and CoM amplitudes.
//! * [`trajectory`] samples CoM and foot trajectories and gait events.
//! * [`analysis`] checks feasibility, classifies gaits by Froude number and
//!   sweeps velocity.
//! * [`cli_io`] reads run configurations, writes CSV and SVG output and
//!   hosts the command-line front end.

pub mod analysis;
pub mod cli_io;
pub mod error;
pub mod gait_model;
pub mod trajectory;

pub use error::{GaitError, Result};
