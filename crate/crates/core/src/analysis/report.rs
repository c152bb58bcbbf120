use crate::error::Result;
use crate::game::NormalFormGame;
use crate::profile::{MixedProfile, StrategyProfile};

use super::{
    dominant_strategy_equilibrium, enumerate_pareto_optimal, enumerate_pure_nash, interior_2x2,
    solve_2x2_mixed, Interior2x2,
};

/// Equilibrium summary of a game.
#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumReport {
    pub pure_equilibria: Vec<StrategyProfile>,
    /// Only filled for 2×2 games.
    pub mixed_equilibria: Vec<MixedProfile>,
    /// Outcome of the interior solve; `None` unless the game is 2×2.
    pub interior: Option<Interior2x2>,
    pub dominant_strategy_profile: Option<StrategyProfile>,
    pub pareto_optimal: Vec<StrategyProfile>,
}

impl EquilibriumReport {
    pub fn for_game(game: &NormalFormGame) -> Result<Self> {
        let pareto_optimal = enumerate_pareto_optimal(game)?;
        let (mixed_equilibria, interior) = if game.counts() == [2, 2] {
            (solve_2x2_mixed(game)?, Some(interior_2x2(game)?))
        } else {
            (Vec::new(), None)
        };
        Ok(EquilibriumReport {
            pure_equilibria: enumerate_pure_nash(game),
            mixed_equilibria,
            interior,
            dominant_strategy_profile: dominant_strategy_equilibrium(game),
            pareto_optimal,
        })
    }
}
