//! Dense normal-form game representation.
//!
//! Payoffs live in one flat tensor laid out row-major over the players'
//! strategy indices (player 0 outermost), with the per-player payoff vector
//! as the innermost dimension. For strategy counts `n₀, n₁, …` and `k`
//! players, the utility of player `j` at profile `(i₀, i₁, …)` sits at
//! `(((i₀·n₁ + i₁)·n₂ + …)·k + j)`.
//!
//! Storage is always in utilities (larger is better). Games given as costs
//! are negated at construction and remember their source orientation so
//! they can be displayed the way they were entered.

use serde::{Deserialize, Serialize};

use crate::error::{GameError, Result};
use crate::profile::StrategyProfile;

/// Largest number of pure strategy profiles any game may have.
pub const MAX_PROFILES: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Payoffs are utilities.
    Maximize,
    /// Payoffs are costs, e.g. years in prison.
    Minimize,
}

impl Orientation {
    /// Converts a value between source orientation and utilities. The map is
    /// its own inverse.
    #[inline]
    pub fn apply(self, value: f64) -> f64 {
        match self {
            Orientation::Maximize => value,
            Orientation::Minimize => -value,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::Maximize => "maximize",
            Orientation::Minimize => "minimize",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormalFormGame {
    players: Vec<String>,
    strategies: Vec<Vec<String>>,
    counts: Vec<usize>,
    strides: Vec<usize>,
    utilities: Vec<f64>,
    orientation: Orientation,
}

/// Checks that a product of strategy counts stays within [`MAX_PROFILES`].
pub(crate) fn checked_profile_count(counts: &[usize]) -> Result<usize> {
    let mut total: u128 = 1;
    for &n in counts {
        total = total.saturating_mul(n as u128);
    }
    if total > MAX_PROFILES as u128 {
        return Err(GameError::GameTooLarge {
            profiles: total,
            limit: MAX_PROFILES,
        });
    }
    Ok(total as usize)
}

impl NormalFormGame {
    /// Builds a game from labels and a flat row-major payoff list given in
    /// `orientation`.
    pub fn new(
        players: Vec<String>,
        strategies: Vec<Vec<String>>,
        entries: Vec<f64>,
        orientation: Orientation,
    ) -> Result<Self> {
        if players.is_empty() || strategies.iter().any(Vec::is_empty) {
            return Err(GameError::EmptyGame);
        }
        if strategies.len() != players.len() {
            return Err(GameError::ShapeMismatch {
                what: "strategy lists",
                expected: players.len(),
                found: strategies.len(),
            });
        }
        let counts: Vec<usize> = strategies.iter().map(Vec::len).collect();
        let profiles = checked_profile_count(&counts)?;
        let expected = profiles * players.len();
        if entries.len() != expected {
            return Err(GameError::ShapeMismatch {
                what: "payoff entries",
                expected,
                found: entries.len(),
            });
        }
        if let Some((index, &value)) = entries.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(GameError::NonFinitePayoff { index, value });
        }

        let mut strides = vec![1; counts.len()];
        for k in (0..counts.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * counts[k + 1];
        }
        let utilities = entries.into_iter().map(|v| orientation.apply(v)).collect();

        Ok(NormalFormGame {
            players,
            strategies,
            counts,
            strides,
            utilities,
            orientation,
        })
    }

    /// Convenience constructor taking string slices.
    pub fn from_labels(
        players: &[&str],
        strategies: &[&[&str]],
        entries: Vec<f64>,
        orientation: Orientation,
    ) -> Result<Self> {
        Self::new(
            players.iter().map(|s| s.to_string()).collect(),
            strategies
                .iter()
                .map(|ss| ss.iter().map(|s| s.to_string()).collect())
                .collect(),
            entries,
            orientation,
        )
    }

    pub fn num_players(&self) -> usize {
        self.players.len()
    }

    pub fn players(&self) -> &[String] {
        &self.players
    }

    pub fn strategy_labels(&self, player: usize) -> &[String] {
        &self.strategies[player]
    }

    pub fn strategies(&self) -> &[Vec<String>] {
        &self.strategies
    }

    /// Number of strategies per player.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn num_profiles(&self) -> usize {
        self.utilities.len() / self.players.len()
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// The whole utility tensor in row-major order.
    pub fn utilities(&self) -> &[f64] {
        &self.utilities
    }

    /// The payoff tensor as originally entered (costs stay costs).
    pub fn source_entries(&self) -> Vec<f64> {
        self.utilities
            .iter()
            .map(|&u| self.orientation.apply(u))
            .collect()
    }

    pub fn strategy_index(&self, player: usize, label: &str) -> Option<usize> {
        self.strategies.get(player)?.iter().position(|s| s == label)
    }

    pub fn player_index(&self, label: &str) -> Option<usize> {
        self.players.iter().position(|p| p == label)
    }

    pub(crate) fn check_player(&self, player: usize) -> Result<()> {
        if player >= self.players.len() {
            return Err(GameError::IndexOutOfBounds {
                what: "player",
                index: player,
                len: self.players.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_strategy(&self, player: usize, strategy: usize) -> Result<()> {
        self.check_player(player)?;
        if strategy >= self.counts[player] {
            return Err(GameError::IndexOutOfBounds {
                what: "strategy",
                index: strategy,
                len: self.counts[player],
            });
        }
        Ok(())
    }

    pub fn check_profile(&self, profile: &StrategyProfile) -> Result<()> {
        if profile.len() != self.players.len() {
            return Err(GameError::ShapeMismatch {
                what: "profile entries",
                expected: self.players.len(),
                found: profile.len(),
            });
        }
        for (player, &s) in profile.iter().enumerate() {
            self.check_strategy(player, s)?;
        }
        Ok(())
    }

    /// Row-major cell number of a profile. Indices are not validated.
    #[inline]
    pub fn cell_index(&self, indices: &[usize]) -> usize {
        indices
            .iter()
            .zip(&self.strides)
            .map(|(i, stride)| i * stride)
            .sum()
    }

    /// Utilities of every player at a cell, by cell number.
    #[inline]
    pub(crate) fn cell(&self, cell: usize) -> &[f64] {
        let k = self.players.len();
        &self.utilities[cell * k..(cell + 1) * k]
    }

    #[inline]
    pub(crate) fn utility_at(&self, indices: &[usize], player: usize) -> f64 {
        self.utilities[self.cell_index(indices) * self.players.len() + player]
    }

    /// Utility vector at `profile`.
    pub fn payoff(&self, profile: &StrategyProfile) -> Result<&[f64]> {
        self.check_profile(profile)?;
        Ok(self.cell(self.cell_index(profile)))
    }

    /// Payoff vector at `profile` in the game's source orientation.
    pub fn source_payoff(&self, profile: &StrategyProfile) -> Result<Vec<f64>> {
        Ok(self
            .payoff(profile)?
            .iter()
            .map(|&u| self.orientation.apply(u))
            .collect())
    }

    /// All pure profiles in lexicographic order.
    pub fn profiles(&self) -> Profiles {
        Profiles::new(self.counts.clone())
    }

    /// Sub-game keeping only the listed strategies of each player, in the
    /// given order. Labels and orientation carry over.
    pub fn restrict(&self, keep: &[Vec<usize>]) -> Result<NormalFormGame> {
        if keep.len() != self.players.len() {
            return Err(GameError::ShapeMismatch {
                what: "strategy subsets",
                expected: self.players.len(),
                found: keep.len(),
            });
        }
        for (player, subset) in keep.iter().enumerate() {
            if subset.is_empty() {
                return Err(GameError::EmptyGame);
            }
            for &s in subset {
                self.check_strategy(player, s)?;
            }
        }

        let strategies = keep
            .iter()
            .enumerate()
            .map(|(player, subset)| {
                subset
                    .iter()
                    .map(|&s| self.strategies[player][s].clone())
                    .collect()
            })
            .collect();
        let sub_counts: Vec<usize> = keep.iter().map(Vec::len).collect();
        let mut entries = Vec::with_capacity(sub_counts.iter().product::<usize>() * keep.len());
        let mut original = vec![0; keep.len()];
        for local in Profiles::new(sub_counts) {
            for (player, &i) in local.iter().enumerate() {
                original[player] = keep[player][i];
            }
            entries.extend(
                self.cell(self.cell_index(&original))
                    .iter()
                    .map(|&u| self.orientation.apply(u)),
            );
        }
        NormalFormGame::new(self.players.clone(), strategies, entries, self.orientation)
    }

    /// Formats a profile as `(label, label, …)`.
    pub fn describe(&self, profile: &StrategyProfile) -> String {
        let labels: Vec<&str> = profile
            .iter()
            .enumerate()
            .map(|(player, &s)| self.strategies[player][s].as_str())
            .collect();
        format!("({})", labels.join(", "))
    }
}

/// Lexicographic odometer over pure strategy profiles.
#[derive(Debug, Clone)]
pub struct Profiles {
    counts: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl Profiles {
    pub fn new(counts: Vec<usize>) -> Self {
        let next = if counts.contains(&0) {
            None
        } else {
            Some(vec![0; counts.len()])
        };
        Profiles { counts, next }
    }
}

impl Iterator for Profiles {
    type Item = StrategyProfile;

    fn next(&mut self) -> Option<StrategyProfile> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut k = succ.len();
        let mut advanced = false;
        while k > 0 {
            k -= 1;
            succ[k] += 1;
            if succ[k] < self.counts[k] {
                advanced = true;
                break;
            }
            succ[k] = 0;
        }
        if advanced {
            self.next = Some(succ);
        }
        Some(StrategyProfile::new(current))
    }
}
