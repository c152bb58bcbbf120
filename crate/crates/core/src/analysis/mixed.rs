use crate::error::{GameError, Result};
use crate::game::NormalFormGame;
use crate::profile::{MixedProfile, MixedStrategy, StrategyProfile};

use super::{enumerate_pure_nash, TOLERANCE};

/// Expected utility of each pure strategy of `player` against the other
/// players' mixtures in `mixed`.
pub fn expected_utilities(
    game: &NormalFormGame,
    mixed: &MixedProfile,
    player: usize,
) -> Result<Vec<f64>> {
    game.check_player(player)?;
    mixed.check_for(game)?;
    let k = game.num_players();
    let mut totals = vec![0.0; game.counts()[player]];
    for (cell, profile) in game.profiles().enumerate() {
        let weight: f64 = profile
            .iter()
            .enumerate()
            .filter(|&(q, _)| q != player)
            .map(|(q, &s)| mixed.strategies()[q].probs()[s])
            .product();
        totals[profile[player]] += weight * game.utilities()[cell * k + player];
    }
    Ok(totals)
}

/// No player can raise its expected utility by more than `epsilon` by
/// switching to a pure strategy.
pub fn epsilon_nash_check(
    game: &NormalFormGame,
    mixed: &MixedProfile,
    epsilon: f64,
) -> Result<bool> {
    mixed.check_for(game)?;
    for player in 0..game.num_players() {
        let pure = expected_utilities(game, mixed, player)?;
        let current: f64 = pure
            .iter()
            .zip(mixed.strategies()[player].probs())
            .map(|(u, p)| u * p)
            .sum();
        let best = pure.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        if best - current > epsilon {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of solving the indifference equations of a 2×2 game.
#[derive(Debug, Clone, PartialEq)]
pub enum Interior2x2 {
    /// Both probabilities lie strictly inside (0, 1).
    Found(MixedProfile),
    /// A solution exists but leaves the open simplex.
    OutsideSimplex,
    /// An indifference equation has zero denominator: the opponent is
    /// indifferent along a whole continuum or never.
    Degenerate,
}

fn require_2x2(game: &NormalFormGame) -> Result<()> {
    if game.counts() != [2, 2] {
        return Err(GameError::NotTwoByTwo);
    }
    Ok(())
}

/// Completely mixed equilibrium of a 2×2 game, where each player's mixture
/// makes the other player indifferent between its two strategies.
pub fn interior_2x2(game: &NormalFormGame) -> Result<Interior2x2> {
    require_2x2(game)?;
    let u = |r: usize, c: usize, player: usize| game.utility_at(&[r, c], player);

    // row's weight on strategy 0 equalizes the column player's payoffs
    let row_den = u(0, 0, 1) - u(1, 0, 1) - u(0, 1, 1) + u(1, 1, 1);
    // column's weight on strategy 0 equalizes the row player's payoffs
    let col_den = u(0, 0, 0) - u(0, 1, 0) - u(1, 0, 0) + u(1, 1, 0);
    if row_den.abs() <= TOLERANCE || col_den.abs() <= TOLERANCE {
        return Ok(Interior2x2::Degenerate);
    }
    let row_p = (u(1, 1, 1) - u(1, 0, 1)) / row_den;
    let col_q = (u(1, 1, 0) - u(0, 1, 0)) / col_den;

    let inside = |x: f64| x > TOLERANCE && x < 1.0 - TOLERANCE;
    if !(inside(row_p) && inside(col_q)) {
        return Ok(Interior2x2::OutsideSimplex);
    }
    let mix = |x: f64| MixedStrategy::new(vec![x, 1.0 - x]).expect("probability in (0, 1)");
    Ok(Interior2x2::Found(MixedProfile::new(vec![
        mix(row_p),
        mix(col_q),
    ])))
}

/// Pure equilibria as point masses (lexicographic), then the completely
/// mixed equilibrium when one exists.
pub fn solve_2x2_mixed(game: &NormalFormGame) -> Result<Vec<MixedProfile>> {
    require_2x2(game)?;
    let mut out: Vec<MixedProfile> = enumerate_pure_nash(game)
        .iter()
        .map(|p: &StrategyProfile| MixedProfile::from_pure(game, p))
        .collect();
    if let Interior2x2::Found(m) = interior_2x2(game)? {
        out.push(m);
    }
    Ok(out)
}
