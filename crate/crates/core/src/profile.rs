use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{GameError, Result};
use crate::game::NormalFormGame;

/// Tolerance for a probability vector's sum.
pub const PROBABILITY_TOLERANCE: f64 = 1e-9;

/// One pure strategy index per player.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StrategyProfile(Vec<usize>);

impl StrategyProfile {
    pub fn new(indices: Vec<usize>) -> Self {
        StrategyProfile(indices)
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }

    /// Copy of this profile with `player` switched to `strategy`.
    pub fn with(&self, player: usize, strategy: usize) -> StrategyProfile {
        let mut next = self.0.clone();
        next[player] = strategy;
        StrategyProfile(next)
    }

    pub(crate) fn set(&mut self, player: usize, strategy: usize) {
        self.0[player] = strategy;
    }
}

impl Deref for StrategyProfile {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for StrategyProfile {
    fn from(v: Vec<usize>) -> Self {
        StrategyProfile(v)
    }
}

/// Probability distribution over one player's strategies.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MixedStrategy(Vec<f64>);

impl MixedStrategy {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(GameError::InvalidMixed("empty probability vector".into()));
        }
        if let Some(p) = probs.iter().find(|p| !p.is_finite() || **p < 0.0) {
            return Err(GameError::InvalidMixed(format!(
                "probability {p} is negative or not finite"
            )));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > PROBABILITY_TOLERANCE {
            return Err(GameError::InvalidMixed(format!(
                "probabilities sum to {sum}"
            )));
        }
        Ok(MixedStrategy(probs))
    }

    /// All mass on `strategy` out of `count`.
    pub fn pure(count: usize, strategy: usize) -> Self {
        let mut probs = vec![0.0; count];
        probs[strategy] = 1.0;
        MixedStrategy(probs)
    }

    pub fn uniform(count: usize) -> Self {
        MixedStrategy(vec![1.0 / count as f64; count])
    }

    pub fn probs(&self) -> &[f64] {
        &self.0
    }
}

/// One mixed strategy per player.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MixedProfile(Vec<MixedStrategy>);

impl MixedProfile {
    pub fn new(strategies: Vec<MixedStrategy>) -> Self {
        MixedProfile(strategies)
    }

    /// Point mass on a pure profile.
    pub fn from_pure(game: &NormalFormGame, profile: &StrategyProfile) -> Self {
        MixedProfile(
            profile
                .iter()
                .zip(game.counts())
                .map(|(&s, &n)| MixedStrategy::pure(n, s))
                .collect(),
        )
    }

    pub fn strategies(&self) -> &[MixedStrategy] {
        &self.0
    }

    pub fn check_for(&self, game: &NormalFormGame) -> Result<()> {
        if self.0.len() != game.num_players() {
            return Err(GameError::ShapeMismatch {
                what: "mixed strategies",
                expected: game.num_players(),
                found: self.0.len(),
            });
        }
        for (m, &n) in self.0.iter().zip(game.counts()) {
            if m.0.len() != n {
                return Err(GameError::ShapeMismatch {
                    what: "probabilities",
                    expected: n,
                    found: m.0.len(),
                });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_strategy_validation() {
        assert!(MixedStrategy::new(vec![0.6, 0.4]).is_ok());
        assert!(MixedStrategy::new(vec![0.5, 0.5 + 1e-12]).is_ok());
        assert!(MixedStrategy::new(vec![0.6, 0.6]).is_err());
        assert!(MixedStrategy::new(vec![1.2, -0.2]).is_err());
        assert!(MixedStrategy::new(vec![]).is_err());
    }

    #[test]
    fn with_replaces_one_coordinate() {
        let p = StrategyProfile::new(vec![1, 0, 1]);
        assert_eq!(&*p.with(1, 1), &[1, 1, 1]);
        assert_eq!(&*p, &[1, 0, 1]);
    }
}
