//! Two-player scenario games: the interrogation prisoner's dilemma and the
//! buried-goods exchange.

use crate::error::{GameError, Result};
use crate::game::{NormalFormGame, Orientation};

/// Strategy labels of the interrogation game: tell, don't tell.
pub const TELL: &str = "T";
pub const DONT_TELL: &str = "DT";

pub const HONEST: &str = "Honest";
pub const BETRAY: &str = "Betray";

/// Interrogation game between Bob (player 0) and Jane (player 1), given in
/// years of prison.
///
/// `betrayer` is what a teller serves when the other stays silent, and
/// `sucker` what the silent one serves in that case. The years must satisfy
/// `betrayer < both_silent < both_tell < sucker`.
pub fn pd_from_years(
    both_tell: f64,
    betrayer: f64,
    sucker: f64,
    both_silent: f64,
) -> Result<NormalFormGame> {
    let years = [both_tell, betrayer, sucker, both_silent];
    if years.iter().any(|y| !y.is_finite()) {
        return Err(GameError::InvalidOrdering("years must be finite".into()));
    }
    if !(betrayer < both_silent && both_silent < both_tell && both_tell < sucker) {
        return Err(GameError::InvalidOrdering(format!(
            "need betrayer < both_silent < both_tell < sucker, got {betrayer}, {both_silent}, {both_tell}, {sucker}"
        )));
    }
    NormalFormGame::from_labels(
        &["Bob", "Jane"],
        &[&[TELL, DONT_TELL], &[TELL, DONT_TELL]],
        vec![
            both_tell,
            both_tell, // (T, T)
            betrayer,
            sucker, // (T, DT)
            sucker,
            betrayer, // (DT, T)
            both_silent,
            both_silent, // (DT, DT)
        ],
        Orientation::Minimize,
    )
}

/// The interrogation game with 5/1/8/2 years.
pub fn interrogation() -> NormalFormGame {
    pd_from_years(5.0, 1.0, 8.0, 2.0).expect("default years form a prisoner's dilemma")
}

/// Exchange where each side buries its item and then reveals the location,
/// honestly or not. Values are each side's valuation of its own item and of
/// the other side's item; betraying keeps your item and takes theirs.
pub fn exchange_game(
    v_own_a: f64,
    v_other_a: f64,
    v_own_b: f64,
    v_other_b: f64,
) -> Result<NormalFormGame> {
    let values = [v_own_a, v_other_a, v_own_b, v_other_b];
    if values.iter().any(|v| !v.is_finite() || *v <= 0.0) {
        return Err(GameError::InvalidValuation(
            "valuations must be finite and positive".into(),
        ));
    }
    if v_other_a <= v_own_a {
        return Err(GameError::InvalidValuation(format!(
            "A values its own item ({v_own_a}) at least as much as B's ({v_other_a})"
        )));
    }
    if v_other_b <= v_own_b {
        return Err(GameError::InvalidValuation(format!(
            "B values its own item ({v_own_b}) at least as much as A's ({v_other_b})"
        )));
    }
    NormalFormGame::from_labels(
        &["Prisoner", "Buyer"],
        &[&[HONEST, BETRAY], &[HONEST, BETRAY]],
        vec![
            v_other_a,
            v_other_b,
            0.0,
            v_own_b + v_other_b,
            v_own_a + v_other_a,
            0.0,
            v_own_a,
            v_own_b,
        ],
        Orientation::Maximize,
    )
}
