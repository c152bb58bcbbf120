use crate::error::Result;
use crate::game::{checked_profile_count, NormalFormGame};
use crate::profile::StrategyProfile;

use super::TOLERANCE;

/// `better` is at least as good as `worse` for every player and strictly
/// better for one.
pub fn pareto_dominates(better: &[f64], worse: &[f64]) -> bool {
    let mut strict = false;
    for (&b, &w) in better.iter().zip(worse) {
        if b < w - TOLERANCE {
            return false;
        }
        if b > w + TOLERANCE {
            strict = true;
        }
    }
    strict
}

/// Profiles no other profile Pareto-dominates, in lexicographic order.
///
/// Pairwise scan, quadratic in the number of profiles.
pub fn enumerate_pareto_optimal(game: &NormalFormGame) -> Result<Vec<StrategyProfile>> {
    checked_profile_count(game.counts())?;
    let n = game.num_profiles();
    let k = game.num_players();
    let cells = game.utilities();
    let optimal = (0..n).filter(|&i| {
        let here = &cells[i * k..(i + 1) * k];
        !cells
            .chunks_exact(k)
            .any(|other| pareto_dominates(other, here))
    });
    // cell numbers follow lexicographic profile order
    let mut flags = vec![false; n];
    for i in optimal {
        flags[i] = true;
    }
    Ok(game
        .profiles()
        .zip(flags)
        .filter_map(|(p, keep)| keep.then_some(p))
        .collect())
}
