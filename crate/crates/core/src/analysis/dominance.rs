use serde::{Deserialize, Serialize};

use crate::error::{GameError, Result};
use crate::game::{checked_profile_count, NormalFormGame};
use crate::profile::StrategyProfile;

use super::{all_strategies, for_each_opponent_profile, TOLERANCE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DominanceMode {
    Strict,
    Weak,
}

impl DominanceMode {
    pub fn as_str(self) -> &'static str {
        match self {
            DominanceMode::Strict => "strict",
            DominanceMode::Weak => "weak",
        }
    }
}

/// Dominance of `a` over `b` for `player`, with opponents restricted to
/// `keep`.
pub(crate) fn dominates_within(
    game: &NormalFormGame,
    keep: &[Vec<usize>],
    player: usize,
    a: usize,
    b: usize,
    mode: DominanceMode,
) -> bool {
    let mut all_strict = true;
    let mut all_geq = true;
    let mut any_gt = false;
    let mut probe = Vec::new();
    for_each_opponent_profile(keep, player, a, |full| {
        if !all_geq && !all_strict {
            return;
        }
        probe.clear();
        probe.extend_from_slice(full);
        let ua = game.utility_at(&probe, player);
        probe[player] = b;
        let ub = game.utility_at(&probe, player);
        let diff = ua - ub;
        if diff <= TOLERANCE {
            all_strict = false;
        } else {
            any_gt = true;
        }
        if diff < -TOLERANCE {
            all_geq = false;
        }
    });
    match mode {
        DominanceMode::Strict => all_strict,
        DominanceMode::Weak => all_geq && any_gt,
    }
}

fn check_pair(game: &NormalFormGame, player: usize, a: usize, b: usize) -> Result<()> {
    game.check_strategy(player, a)?;
    game.check_strategy(player, b)?;
    if a == b {
        return Err(GameError::SameStrategy(a));
    }
    Ok(())
}

pub fn dominates(
    game: &NormalFormGame,
    player: usize,
    a: usize,
    b: usize,
    mode: DominanceMode,
) -> Result<bool> {
    check_pair(game, player, a, b)?;
    Ok(dominates_within(
        game,
        &all_strategies(game),
        player,
        a,
        b,
        mode,
    ))
}

/// `a` beats `b` by more than the tolerance against every opponent profile.
pub fn strictly_dominates(
    game: &NormalFormGame,
    player: usize,
    a: usize,
    b: usize,
) -> Result<bool> {
    dominates(game, player, a, b, DominanceMode::Strict)
}

/// `a` is never worse than `b` and better against at least one opponent
/// profile.
pub fn weakly_dominates(game: &NormalFormGame, player: usize, a: usize, b: usize) -> Result<bool> {
    dominates(game, player, a, b, DominanceMode::Weak)
}

/// Strategies of `player` that dominate every other strategy of that player.
pub fn dominant_strategies(
    game: &NormalFormGame,
    player: usize,
    mode: DominanceMode,
) -> Result<Vec<usize>> {
    game.check_player(player)?;
    let keep = all_strategies(game);
    let n = game.counts()[player];
    Ok((0..n)
        .filter(|&a| {
            (0..n)
                .filter(|&b| b != a)
                .all(|b| dominates_within(game, &keep, player, a, b, mode))
        })
        .collect())
}

/// The profile of strictly dominant strategies, if every player has one.
pub fn dominant_strategy_equilibrium(game: &NormalFormGame) -> Option<StrategyProfile> {
    let mut indices = Vec::with_capacity(game.num_players());
    for player in 0..game.num_players() {
        let dominant = dominant_strategies(game, player, DominanceMode::Strict)
            .expect("player index in range");
        indices.push(*dominant.first()?);
    }
    Some(StrategyProfile::new(indices))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationStep {
    pub round: usize,
    pub player: usize,
    /// Index in the original game.
    pub eliminated: usize,
    /// Index in the original game.
    pub dominator: usize,
    pub mode: DominanceMode,
}

/// Ordered record of an iterated elimination.
///
/// A step belongs to the current round when the strategy it removes was
/// already dominated in the game as it stood when the round began; the
/// first removal that needed an earlier removal of the same round opens
/// the next round.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationTrace {
    pub steps: Vec<EliminationStep>,
}

impl EliminationTrace {
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn rounds(&self) -> usize {
        self.steps.last().map_or(0, |s| s.round)
    }

    /// Original indices of the strategies left after replaying the trace
    /// on a game with the given strategy counts.
    pub fn survivors(&self, counts: &[usize]) -> Vec<Vec<usize>> {
        let mut keep: Vec<Vec<usize>> = counts.iter().map(|&n| (0..n).collect()).collect();
        for step in &self.steps {
            keep[step.player].retain(|&s| s != step.eliminated);
        }
        keep
    }
}

fn find_dominator(
    game: &NormalFormGame,
    keep: &[Vec<usize>],
    player: usize,
    b: usize,
    mode: DominanceMode,
) -> Option<usize> {
    keep[player]
        .iter()
        .copied()
        .filter(|&a| a != b)
        .find(|&a| dominates_within(game, keep, player, a, b, mode))
}

/// Iterated elimination of dominated strategies.
///
/// Scans players low to high and each player's surviving strategies low to
/// high, removes the first dominated one found and starts over, until
/// nothing is dominated. Returns the reduced game (labels kept) and the
/// trace in original indices.
pub fn iesds(
    game: &NormalFormGame,
    mode: DominanceMode,
) -> Result<(NormalFormGame, EliminationTrace)> {
    checked_profile_count(game.counts())?;
    let mut keep = all_strategies(game);
    let mut round_start = keep.clone();
    let mut round = 1;
    let mut trace = EliminationTrace::default();

    'scan: loop {
        for player in 0..game.num_players() {
            for &b in &keep[player] {
                let Some(dominator) = find_dominator(game, &keep, player, b, mode) else {
                    continue;
                };
                if find_dominator(game, &round_start, player, b, mode).is_none() {
                    round += 1;
                    round_start = keep.clone();
                }
                trace.steps.push(EliminationStep {
                    round,
                    player,
                    eliminated: b,
                    dominator,
                    mode,
                });
                keep[player].retain(|&s| s != b);
                continue 'scan;
            }
        }
        break;
    }

    Ok((game.restrict(&keep)?, trace))
}
