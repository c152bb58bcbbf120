mod common;

use common::{raw_game, Raw};
use nfg::analysis::{
    dominant_strategies, dominant_strategy_equilibrium, enumerate_pure_nash, is_pure_nash,
    pareto_dominates, DominanceMode,
};
use nfg::scenarios::{
    arms_race_game, arms_race_report, best_response_dynamics, ArmsRaceModel, ARM_INDEX,
};
use nfg::StrategyProfile;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Payoff from summing the two-country game over every ordered pair.
fn pairwise_sum(model: &ArmsRaceModel, profile: &[usize], player: usize) -> f64 {
    let pair = |own: usize, other: usize| match (own == ARM_INDEX, other == ARM_INDEX) {
        (true, true) => model.p,
        (true, false) => model.t,
        (false, true) => model.s,
        (false, false) => model.r,
    };
    (0..profile.len())
        .filter(|&j| j != player)
        .map(|j| pair(profile[player], profile[j]))
        .sum()
}

fn random_model(rng: &mut ChaCha8Rng, countries: usize) -> ArmsRaceModel {
    let s = rng.gen_range(-10.0..10.0);
    let p = s + rng.gen_range(0.01..5.0);
    let r = p + rng.gen_range(0.01..5.0);
    let t = r + rng.gen_range(0.01..5.0);
    ArmsRaceModel::new(countries, t, r, p, s).unwrap()
}

#[test]
fn arms_race_payoffs_are_pairwise_sums() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 2..=5 {
        let model = random_model(&mut rng, n);
        let game = arms_race_game(&model).unwrap();
        for profile in game.profiles() {
            let got = game.payoff(&profile).unwrap();
            for (player, &u) in got.iter().enumerate() {
                assert!((u - pairwise_sum(&model, &profile, player)).abs() < 1e-9);
            }
        }
    }
}

#[test]
fn arming_is_the_unique_stable_state() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for trial in 0..50 {
        let n = 2 + trial % 3;
        let model = random_model(&mut rng, n);
        let game = arms_race_game(&model).unwrap();
        assert_eq!(enumerate_pure_nash(&game), vec![model.all_arm()]);
        for player in 0..n {
            assert_eq!(
                dominant_strategies(&game, player, DominanceMode::Strict).unwrap(),
                vec![ARM_INDEX]
            );
        }
        let armed = game.payoff(&model.all_arm()).unwrap();
        let disarmed = game.payoff(&model.all_disarm()).unwrap();
        assert!(disarmed.iter().zip(armed).all(|(d, a)| d > a));
        assert!(pareto_dominates(disarmed, armed));

        let report = arms_race_report(&model).unwrap();
        assert_eq!(report.pure_equilibria, vec![model.all_arm()]);
        assert_eq!(report.dominant_strategy_profile, Some(model.all_arm()));
        assert!(report.pareto_optimal.contains(&model.all_disarm()));
    }
}

#[test]
fn four_countries_with_wide_payoffs() {
    let model = ArmsRaceModel::new(4, 10.0, 5.0, 2.0, 0.0).unwrap();
    let report = arms_race_report(&model).unwrap();
    assert_eq!(
        report.pure_equilibria,
        vec![StrategyProfile::new(vec![0; 4])]
    );
}

#[test]
fn three_countries_disarmed_start_arms_up() {
    let model = ArmsRaceModel::new(3, 3.0, 2.0, 1.0, 0.0).unwrap();
    let game = arms_race_game(&model).unwrap();
    let run = best_response_dynamics(&game, &model.all_disarm(), 100).unwrap();
    assert!(run.converged);
    assert_eq!(run.final_state(), &model.all_arm());
    assert_eq!(run.states.len(), 4);
}

/// Adds a bonus that makes `dominant[i]` strictly dominant for player i.
fn with_dominant(raw: &Raw, dominant: &[usize]) -> Raw {
    let mut out = raw.clone();
    for profile in raw.all() {
        let offset = raw.offset(&profile);
        for player in 0..raw.players() {
            if profile[player] == dominant[player] {
                out.entries[offset + player] += 100.0;
            }
        }
    }
    out
}

fn game_with_dominants() -> impl Strategy<Value = (Raw, Vec<usize>)> {
    raw_game(3, 4).prop_flat_map(|raw| {
        let picks: Vec<_> = raw.counts.iter().map(|&n| 0..n).collect();
        (Just(raw), picks)
    })
}

proptest! {
    #[test]
    fn dominant_games_settle_within_two_rounds((raw, dominant) in game_with_dominants()) {
        let raw = with_dominant(&raw, &dominant);
        let game = raw.game();
        prop_assert_eq!(dominant_strategy_equilibrium(&game), Some(StrategyProfile::new(dominant.clone())));
        for start in raw.all() {
            let run = best_response_dynamics(&game, &StrategyProfile::new(start), 1000).unwrap();
            prop_assert!(run.converged);
            prop_assert!(run.steps_taken <= 2 * raw.players());
            prop_assert_eq!(&**run.final_state(), &dominant[..]);
        }
    }

    #[test]
    fn trajectories_move_one_player_at_a_time(raw in raw_game(3, 4), max_steps in 1usize..40) {
        let game = raw.game();
        for start in raw.all() {
            let run = best_response_dynamics(&game, &StrategyProfile::new(start), max_steps).unwrap();
            prop_assert!(run.steps_taken <= max_steps);
            for pair in run.states.windows(2) {
                let changed = pair[0].iter().zip(pair[1].iter()).filter(|(a, b)| a != b).count();
                prop_assert_eq!(changed, 1);
            }
            if run.converged {
                prop_assert!(is_pure_nash(&game, run.final_state()).unwrap());
            }
        }
    }
}
