use crate::error::Result;
use crate::game::NormalFormGame;
use crate::profile::StrategyProfile;

use super::TOLERANCE;

/// Strategies of `player` within [`TOLERANCE`] of the best utility against
/// the other players' choices in `others`. The entry of `others` at
/// `player` is ignored. Ascending and never empty.
pub fn best_responses(
    game: &NormalFormGame,
    player: usize,
    others: &StrategyProfile,
) -> Result<Vec<usize>> {
    game.check_player(player)?;
    game.check_profile(&others.with(player, 0))?;
    Ok(best_responses_unchecked(game, player, others))
}

pub(crate) fn best_responses_unchecked(
    game: &NormalFormGame,
    player: usize,
    others: &StrategyProfile,
) -> Vec<usize> {
    let mut probe = others.clone();
    let values: Vec<f64> = (0..game.counts()[player])
        .map(|s| {
            probe.set(player, s);
            game.utility_at(&probe, player)
        })
        .collect();
    let best = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    values
        .iter()
        .enumerate()
        .filter(|(_, &v)| v >= best - TOLERANCE)
        .map(|(s, _)| s)
        .collect()
}

/// No player gains more than [`TOLERANCE`] by deviating alone.
pub fn is_pure_nash(game: &NormalFormGame, profile: &StrategyProfile) -> Result<bool> {
    game.check_profile(profile)?;
    Ok(is_pure_nash_unchecked(game, profile))
}

fn is_pure_nash_unchecked(game: &NormalFormGame, profile: &StrategyProfile) -> bool {
    let k = game.num_players();
    let here = game.cell(game.cell_index(profile));
    let mut probe = profile.clone();
    for player in 0..k {
        let current = here[player];
        for s in 0..game.counts()[player] {
            if s == profile[player] {
                continue;
            }
            probe.set(player, s);
            if game.utility_at(&probe, player) > current + TOLERANCE {
                return false;
            }
        }
        probe.set(player, profile[player]);
    }
    true
}

/// Every pure Nash equilibrium, in lexicographic order.
pub fn enumerate_pure_nash(game: &NormalFormGame) -> Vec<StrategyProfile> {
    game.profiles()
        .filter(|p| is_pure_nash_unchecked(game, p))
        .collect()
}
