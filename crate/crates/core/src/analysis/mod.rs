//! Solvers over [`NormalFormGame`](crate::NormalFormGame): best responses,
//! pure Nash equilibria, dominance and iterated elimination, Pareto
//! optimality, and closed-form mixed equilibria of 2×2 games.
//!
//! Every payoff comparison uses [`TOLERANCE`] symmetrically: two utilities
//! within it of each other count as equal.

mod dominance;
mod mixed;
pub(crate) mod nash;
mod pareto;
mod report;

pub use dominance::{
    dominant_strategies, dominant_strategy_equilibrium, dominates, iesds, strictly_dominates,
    weakly_dominates, DominanceMode, EliminationStep, EliminationTrace,
};
pub use mixed::{
    epsilon_nash_check, expected_utilities, interior_2x2, solve_2x2_mixed, Interior2x2,
};
pub use nash::{best_responses, enumerate_pure_nash, is_pure_nash};
pub use pareto::{enumerate_pareto_optimal, pareto_dominates};
pub use report::EquilibriumReport;

use crate::game::{NormalFormGame, Profiles};

/// Absolute tolerance for payoff comparisons.
pub const TOLERANCE: f64 = 1e-9;

/// Calls `f` with every full index vector that ranges over `keep` for all
/// players other than `player`; `player`'s slot is set to `own`.
pub(crate) fn for_each_opponent_profile(
    keep: &[Vec<usize>],
    player: usize,
    own: usize,
    mut f: impl FnMut(&[usize]),
) {
    let lens: Vec<usize> = keep
        .iter()
        .enumerate()
        .map(|(k, s)| if k == player { 1 } else { s.len() })
        .collect();
    let mut full = vec![0; keep.len()];
    for local in Profiles::new(lens) {
        for (k, &i) in local.iter().enumerate() {
            full[k] = if k == player { own } else { keep[k][i] };
        }
        f(&full);
    }
}

pub(crate) fn all_strategies(game: &NormalFormGame) -> Vec<Vec<usize>> {
    game.counts().iter().map(|&n| (0..n).collect()).collect()
}
