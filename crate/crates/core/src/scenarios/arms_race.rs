//! N-country arms race built from pairwise prisoner's dilemmas.
//!
//! Each country either keeps building weapons (`W`) or stops (`NW`). A
//! country's utility is the sum, over every other country, of a
//! two-country dilemma payoff: temptation `t` for arming against a
//! disarmed rival, reward `r` for mutual disarmament, punishment `p` for
//! mutual armament and sucker `s` for disarming against an armed rival.

use serde::{Deserialize, Serialize};

use crate::analysis::{EquilibriumReport, TOLERANCE};
use crate::error::{GameError, Result};
use crate::game::{checked_profile_count, NormalFormGame, Orientation};
use crate::profile::StrategyProfile;

pub const ARM: &str = "W";
pub const DISARM: &str = "NW";

/// Strategy index of [`ARM`].
pub const ARM_INDEX: usize = 0;
/// Strategy index of [`DISARM`].
pub const DISARM_INDEX: usize = 1;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArmsRaceModel {
    pub countries: usize,
    pub t: f64,
    pub r: f64,
    pub p: f64,
    pub s: f64,
}

impl Default for ArmsRaceModel {
    fn default() -> Self {
        ArmsRaceModel {
            countries: 2,
            t: 3.0,
            r: 2.0,
            p: 1.0,
            s: 0.0,
        }
    }
}

impl ArmsRaceModel {
    pub fn new(countries: usize, t: f64, r: f64, p: f64, s: f64) -> Result<Self> {
        let model = ArmsRaceModel {
            countries,
            t,
            r,
            p,
            s,
        };
        model.validate()?;
        Ok(model)
    }

    pub fn validate(&self) -> Result<()> {
        if self.countries < 2 {
            return Err(GameError::InvalidModel(format!(
                "need at least 2 countries, got {}",
                self.countries
            )));
        }
        let Self { t, r, p, s, .. } = *self;
        if [t, r, p, s].iter().any(|x| !x.is_finite()) {
            return Err(GameError::InvalidModel("payoffs must be finite".into()));
        }
        if !(t - r > TOLERANCE && r - p > TOLERANCE && p - s > TOLERANCE) {
            return Err(GameError::InvalidModel(format!(
                "need t > r > p > s, got t={t}, r={r}, p={p}, s={s}"
            )));
        }
        Ok(())
    }

    /// Two-country payoff to a country choosing `own` against `other`.
    pub fn pair_payoff(&self, own: usize, other: usize) -> f64 {
        match (own, other) {
            (ARM_INDEX, ARM_INDEX) => self.p,
            (ARM_INDEX, _) => self.t,
            (_, ARM_INDEX) => self.s,
            _ => self.r,
        }
    }

    pub fn all_arm(&self) -> StrategyProfile {
        StrategyProfile::new(vec![ARM_INDEX; self.countries])
    }

    pub fn all_disarm(&self) -> StrategyProfile {
        StrategyProfile::new(vec![DISARM_INDEX; self.countries])
    }
}

/// Country names: A, B, …, Z, then A2, B2, ….
fn country_label(i: usize) -> String {
    let letter = (b'A' + (i % 26) as u8) as char;
    match i / 26 {
        0 => letter.to_string(),
        round => format!("{letter}{}", round + 1),
    }
}

pub fn arms_race_game(model: &ArmsRaceModel) -> Result<NormalFormGame> {
    model.validate()?;
    let n = model.countries;
    // 2^n without overflow
    let counts = vec![2; n.min(64)];
    checked_profile_count(&counts)?;

    let mut entries = Vec::with_capacity((1usize << n) * n);
    for profile in crate::game::Profiles::new(vec![2; n]) {
        let armed = profile.iter().filter(|&&a| a == ARM_INDEX).count();
        for &own in profile.iter() {
            let armed_rivals = armed - usize::from(own == ARM_INDEX);
            let disarmed_rivals = n - 1 - armed_rivals;
            entries.push(
                armed_rivals as f64 * model.pair_payoff(own, ARM_INDEX)
                    + disarmed_rivals as f64 * model.pair_payoff(own, DISARM_INDEX),
            );
        }
    }
    NormalFormGame::new(
        (0..n).map(country_label).collect(),
        vec![vec![ARM.to_string(), DISARM.to_string()]; n],
        entries,
        Orientation::Maximize,
    )
}

pub fn arms_race_report(model: &ArmsRaceModel) -> Result<EquilibriumReport> {
    EquilibriumReport::for_game(&arms_race_game(model)?)
}
