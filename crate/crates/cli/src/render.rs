//! Number, profile and game formatting shared by the commands.

use nfg::{MixedProfile, NormalFormGame, StrategyProfile};
use serde::Serialize;
use serde_json::Value;

/// Fixed 9-decimal rendering with trailing zeros trimmed; `-0` prints as `0`.
pub fn num(x: f64) -> String {
    let mut s = format!("{x:.9}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

/// JSON number carrying exactly the digits [`num`] prints.
pub fn num_value(x: f64) -> Value {
    nfg::format::number(num(x).parse::<f64>().expect("formatted number parses"))
}

pub fn tuple(values: &[f64]) -> String {
    let parts: Vec<String> = values.iter().map(|&v| num(v)).collect();
    format!("({})", parts.join(", "))
}

/// A profile with its payoffs in the game's source orientation.
#[derive(Debug, Serialize)]
pub struct ProfileView {
    pub profile: Vec<String>,
    pub payoffs: Vec<Value>,
}

pub fn profile_view(game: &NormalFormGame, profile: &StrategyProfile) -> ProfileView {
    ProfileView {
        profile: labels(game, profile),
        payoffs: game
            .source_payoff(profile)
            .expect("profile from the same game")
            .into_iter()
            .map(num_value)
            .collect(),
    }
}

pub fn labels(game: &NormalFormGame, profile: &StrategyProfile) -> Vec<String> {
    profile
        .iter()
        .enumerate()
        .map(|(player, &s)| game.strategy_labels(player)[s].clone())
        .collect()
}

/// `(T, DT) -> (1, 8)`
pub fn profile_line(game: &NormalFormGame, profile: &StrategyProfile) -> String {
    let payoff = game
        .source_payoff(profile)
        .expect("profile from the same game");
    format!("{} -> {}", game.describe(profile), tuple(&payoff))
}

pub fn mixed_value(mixed: &MixedProfile) -> Value {
    Value::Array(
        mixed
            .strategies()
            .iter()
            .map(|m| Value::Array(m.probs().iter().map(|&p| num_value(p)).collect()))
            .collect(),
    )
}

/// `Jane (0.6, 0.4); Bob (0.4, 0.6)`
pub fn mixed_line(game: &NormalFormGame, mixed: &MixedProfile) -> String {
    let parts: Vec<String> = game
        .players()
        .iter()
        .zip(mixed.strategies())
        .map(|(name, m)| format!("{name} {}", tuple(m.probs())))
        .collect();
    parts.join("; ")
}

/// Every cell of a game, one line each.
pub fn game_lines(game: &NormalFormGame) -> Vec<String> {
    let mut lines: Vec<String> = game
        .players()
        .iter()
        .zip(game.strategies())
        .map(|(player, strategies)| format!("  {player}: {}", strategies.join(", ")))
        .collect();
    lines.extend(
        game.profiles()
            .map(|p| format!("  {}", profile_line(game, &p))),
    );
    lines
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers() {
        assert_eq!(num(5.0), "5");
        assert_eq!(num(-5.0), "-5");
        assert_eq!(num(0.6), "0.6");
        assert_eq!(num(3.0 / 5.0), "0.6");
        assert_eq!(num(1.0 / 3.0), "0.333333333");
        assert_eq!(num(-0.0), "0");
        assert_eq!(num(-1e-12), "0");
        assert_eq!(num(1234.5), "1234.5");
    }

    #[test]
    fn json_numbers() {
        assert_eq!(num_value(5.0).to_string(), "5");
        assert_eq!(num_value(0.4).to_string(), "0.4");
        assert_eq!(num_value(2.0 / 3.0).to_string(), "0.666666667");
    }
}
