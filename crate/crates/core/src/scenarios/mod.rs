//! The arms-race model and best-response dynamics.

mod arms_race;
mod dynamics;

pub use arms_race::{
    arms_race_game, arms_race_report, ArmsRaceModel, ARM, ARM_INDEX, DISARM, DISARM_INDEX,
};
pub use dynamics::{best_response_dynamics, DynamicsTrajectory};
