use serde::{Deserialize, Serialize};

use crate::analysis::nash::best_responses_unchecked;
use crate::error::{GameError, Result};
use crate::game::NormalFormGame;
use crate::profile::StrategyProfile;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynamicsTrajectory {
    /// Start state followed by every state produced by a switch.
    pub states: Vec<StrategyProfile>,
    pub converged: bool,
    /// Number of individual update turns taken.
    pub steps_taken: usize,
}

impl DynamicsTrajectory {
    pub fn final_state(&self) -> &StrategyProfile {
        self.states
            .last()
            .expect("trajectory holds its start state")
    }
}

/// Round-robin myopic best response.
///
/// Players take turns in index order. A player already playing a best
/// response stays put; otherwise it switches to its lowest-index best
/// response. The run converges once every player in turn has had a chance
/// to move without anyone moving, and gives up after `max_steps` turns.
pub fn best_response_dynamics(
    game: &NormalFormGame,
    start: &StrategyProfile,
    max_steps: usize,
) -> Result<DynamicsTrajectory> {
    game.check_profile(start)?;
    if max_steps == 0 {
        return Err(GameError::InvalidModel(
            "max_steps must be at least 1".into(),
        ));
    }
    let n = game.num_players();
    let mut current = start.clone();
    let mut states = vec![current.clone()];
    let mut quiet_turns = 0;
    let mut steps = 0;

    while steps < max_steps {
        let player = steps % n;
        steps += 1;
        let best = best_responses_unchecked(game, player, &current);
        if best.contains(&current[player]) {
            quiet_turns += 1;
        } else {
            current.set(player, best[0]);
            states.push(current.clone());
            quiet_turns = 0;
        }
        if quiet_turns == n {
            return Ok(DynamicsTrajectory {
                states,
                converged: true,
                steps_taken: steps,
            });
        }
    }
    Ok(DynamicsTrajectory {
        states,
        converged: false,
        steps_taken: steps,
    })
}
