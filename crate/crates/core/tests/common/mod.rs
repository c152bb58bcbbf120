//! Brute-force reference implementations working straight off the flat
//! payoff list, independent of the library's solvers.
#![allow(dead_code)]

use nfg::{NormalFormGame, Orientation};
use proptest::prelude::*;

pub const TOL: f64 = 1e-9;

/// Utility tensor kept as a plain list plus strategy counts.
#[derive(Debug, Clone)]
pub struct Raw {
    pub counts: Vec<usize>,
    pub entries: Vec<f64>,
}

impl Raw {
    pub fn players(&self) -> usize {
        self.counts.len()
    }

    pub fn offset(&self, profile: &[usize]) -> usize {
        let mut cell = 0;
        for (i, &n) in profile.iter().zip(&self.counts) {
            cell = cell * n + i;
        }
        cell * self.players()
    }

    pub fn u(&self, profile: &[usize], player: usize) -> f64 {
        self.entries[self.offset(profile) + player]
    }

    /// All profiles drawn from `keep`, lexicographic.
    pub fn profiles_in(&self, keep: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for set in keep {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    set.iter().map(move |&s| {
                        let mut p = prefix.clone();
                        p.push(s);
                        p
                    })
                })
                .collect();
        }
        out
    }

    pub fn all(&self) -> Vec<Vec<usize>> {
        self.profiles_in(&self.full())
    }

    pub fn full(&self) -> Vec<Vec<usize>> {
        self.counts.iter().map(|&n| (0..n).collect()).collect()
    }

    pub fn is_nash(&self, profile: &[usize]) -> bool {
        (0..self.players()).all(|player| {
            let here = self.u(profile, player);
            (0..self.counts[player]).all(|s| {
                let mut dev = profile.to_vec();
                dev[player] = s;
                self.u(&dev, player) <= here + TOL
            })
        })
    }

    pub fn nash(&self) -> Vec<Vec<usize>> {
        self.all().into_iter().filter(|p| self.is_nash(p)).collect()
    }

    pub fn strictly_dominated_within(
        &self,
        keep: &[Vec<usize>],
        player: usize,
        a: usize,
        b: usize,
    ) -> bool {
        let mut opp = keep.to_vec();
        opp[player] = vec![a];
        self.profiles_in(&opp).iter().all(|p| {
            let mut q = p.clone();
            q[player] = b;
            self.u(p, player) - self.u(&q, player) > TOL
        })
    }

    pub fn weakly_dominated_within(
        &self,
        keep: &[Vec<usize>],
        player: usize,
        a: usize,
        b: usize,
    ) -> bool {
        let mut opp = keep.to_vec();
        opp[player] = vec![a];
        let diffs: Vec<f64> = self
            .profiles_in(&opp)
            .iter()
            .map(|p| {
                let mut q = p.clone();
                q[player] = b;
                self.u(p, player) - self.u(&q, player)
            })
            .collect();
        diffs.iter().all(|&d| d >= -TOL) && diffs.iter().any(|&d| d > TOL)
    }

    pub fn pareto(&self) -> Vec<Vec<usize>> {
        let all = self.all();
        all.iter()
            .filter(|x| {
                !all.iter().any(|y| {
                    let ge = (0..self.players()).all(|i| self.u(y, i) >= self.u(x, i) - TOL);
                    let gt = (0..self.players()).any(|i| self.u(y, i) > self.u(x, i) + TOL);
                    ge && gt
                })
            })
            .cloned()
            .collect()
    }

    pub fn game(&self) -> NormalFormGame {
        let k = self.players();
        NormalFormGame::new(
            (0..k).map(|i| format!("P{i}")).collect(),
            self.counts
                .iter()
                .map(|&n| (0..n).map(|s| format!("s{s}")).collect())
                .collect(),
            self.entries.clone(),
            Orientation::Maximize,
        )
        .unwrap()
    }

    /// Per-player affine map u -> a·u + b.
    pub fn affine(&self, scale: &[f64], shift: &[f64]) -> Raw {
        let k = self.players();
        Raw {
            counts: self.counts.clone(),
            entries: self
                .entries
                .iter()
                .enumerate()
                .map(|(i, &u)| scale[i % k] * u + shift[i % k])
                .collect(),
        }
    }
}

/// Random games: up to `max_players` players, up to `max_strats`
/// strategies each, integer payoffs in [-5, 5].
pub fn raw_game(max_players: usize, max_strats: usize) -> impl Strategy<Value = Raw> {
    prop::collection::vec(1..=max_strats, 1..=max_players).prop_flat_map(|counts| {
        let len = counts.iter().product::<usize>() * counts.len();
        prop::collection::vec(-5i32..=5, len).prop_map(move |v| Raw {
            counts: counts.clone(),
            entries: v.into_iter().map(f64::from).collect(),
        })
    })
}

pub fn matching_pennies() -> NormalFormGame {
    NormalFormGame::from_labels(
        &["row", "col"],
        &[&["H", "T"], &["H", "T"]],
        vec![1., -1., -1., 1., -1., 1., 1., -1.],
        Orientation::Maximize,
    )
    .unwrap()
}

pub fn battle_of_the_sexes() -> NormalFormGame {
    NormalFormGame::from_labels(
        &["row", "col"],
        &[&["a", "b"], &["a", "b"]],
        vec![3., 2., 0., 0., 0., 0., 2., 3.],
        Orientation::Maximize,
    )
    .unwrap()
}
