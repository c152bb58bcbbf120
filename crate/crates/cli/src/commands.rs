use std::path::{Path, PathBuf};

use nfg::analysis::{
    dominant_strategies, dominates, iesds, DominanceMode, EquilibriumReport, Interior2x2,
};
use nfg::classic::{exchange_game, pd_from_years};
use nfg::scenarios::{arms_race_game, best_response_dynamics, ArmsRaceModel};
use nfg::{DynamicsTrajectory, NormalFormGame, StrategyProfile};
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{ArmsRaceArgs, Command, Scenario};
use crate::render::{
    game_lines, labels, mixed_line, mixed_value, num, num_value, profile_line, profile_view,
    ProfileView,
};
use crate::{load_game, CliError, CliReport};

pub(crate) enum Outcome {
    Report(Box<CliReport>),
    /// Printed verbatim, e.g. an exported game file.
    Raw(String),
}

pub(crate) fn execute(command: &Command) -> Result<Outcome, CliError> {
    Ok(match command {
        Command::Solve { path } => Outcome::Report(Box::new(solve(path)?)),
        Command::Dominance { path } => Outcome::Report(Box::new(dominance(path)?)),
        Command::Iesds { path, mode } => {
            Outcome::Report(Box::new(elimination(path, (*mode).into())?))
        }
        Command::ArmsRace(args) => Outcome::Report(Box::new(arms_race(args)?)),
        Command::Dynamics {
            path,
            start,
            max_steps,
        } => Outcome::Report(Box::new(dynamics(path, start, *max_steps)?)),
        Command::Export { scenario, out } => export(scenario, out.as_deref())?,
    })
}

pub fn parse_reals(flag: &str, text: &str, expected: usize) -> Result<Vec<f64>, CliError> {
    let values: Vec<f64> = text
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| CliError::BadFlag(format!("--{flag}: `{part}` is not a number")))
        })
        .collect::<Result<_, _>>()?;
    if values.len() != expected {
        return Err(CliError::BadFlag(format!(
            "--{flag}: expected {expected} comma-separated numbers, got {}",
            values.len()
        )));
    }
    Ok(values)
}

/// Resolves `T,DT`-style labels against the game's strategy lists.
pub fn parse_profile(game: &NormalFormGame, text: &str) -> Result<StrategyProfile, CliError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != game.num_players() {
        return Err(CliError::BadFlag(format!(
            "--start: expected {} labels, got {}",
            game.num_players(),
            parts.len()
        )));
    }
    let indices = parts
        .iter()
        .enumerate()
        .map(|(player, label)| {
            game.strategy_index(player, label).ok_or_else(|| {
                CliError::BadFlag(format!(
                    "--start: `{label}` is not a strategy of {} (expected one of {})",
                    game.players()[player],
                    game.strategy_labels(player).join(", ")
                ))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(StrategyProfile::new(indices))
}

#[derive(Serialize)]
struct GameDigest<'a> {
    path: String,
    players: &'a [String],
    strategies: &'a [Vec<String>],
    orientation: &'static str,
}

fn digest(path: &Path, game: &NormalFormGame) -> Value {
    serde_json::to_value(GameDigest {
        path: path.display().to_string(),
        players: game.players(),
        strategies: game.strategies(),
        orientation: game.orientation().as_str(),
    })
    .expect("digest serializes")
}

fn header(path: &Path, game: &NormalFormGame) -> Vec<String> {
    let strategies: Vec<String> = game
        .players()
        .iter()
        .zip(game.strategies())
        .map(|(p, s)| format!("{p} {{{}}}", s.join(", ")))
        .collect();
    vec![
        format!("game: {}", path.display()),
        format!(
            "players: {} ({} profiles, {})",
            strategies.join(", "),
            game.num_profiles(),
            match game.orientation() {
                nfg::Orientation::Maximize => "utilities, maximized",
                nfg::Orientation::Minimize => "costs, minimized",
            }
        ),
        String::new(),
    ]
}

#[derive(Serialize)]
struct EquilibriumView {
    pure_equilibria: Vec<ProfileView>,
    dominant_strategy_profile: Option<ProfileView>,
    pareto_optimal: Vec<ProfileView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mixed_equilibria: Option<Vec<Value>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    interior: Option<&'static str>,
}

fn interior_status(interior: &Interior2x2) -> &'static str {
    match interior {
        Interior2x2::Found(_) => "found",
        Interior2x2::OutsideSimplex => "outside_simplex",
        Interior2x2::Degenerate => "degenerate",
    }
}

/// Body lines, JSON and notes for an equilibrium report.
fn equilibrium_section(
    game: &NormalFormGame,
    report: &EquilibriumReport,
) -> (Vec<String>, Value, Vec<String>) {
    let mut body = Vec::new();
    let mut notes = Vec::new();

    if report.pure_equilibria.is_empty() {
        body.push("no pure equilibria".to_string());
    } else {
        body.push("pure Nash equilibria:".to_string());
        body.extend(
            report
                .pure_equilibria
                .iter()
                .map(|p| format!("  {}", profile_line(game, p))),
        );
    }
    body.push(match &report.dominant_strategy_profile {
        Some(p) => format!("dominant-strategy equilibrium: {}", game.describe(p)),
        None => "dominant-strategy equilibrium: none".to_string(),
    });
    body.push("Pareto-optimal profiles:".to_string());
    body.extend(
        report
            .pareto_optimal
            .iter()
            .map(|p| format!("  {}", profile_line(game, p))),
    );
    for p in &report.pareto_optimal {
        if !report.pure_equilibria.contains(p)
            && report
                .pure_equilibria
                .iter()
                .any(|e| pareto_improves(game, p, e))
        {
            notes.push(format!(
                "{} is Pareto-superior to an equilibrium but is not itself an equilibrium",
                game.describe(p)
            ));
        }
    }

    if let Some(interior) = &report.interior {
        body.push("mixed equilibria (2x2):".to_string());
        body.extend(
            report
                .mixed_equilibria
                .iter()
                .map(|m| format!("  {}", mixed_line(game, m))),
        );
        match interior {
            Interior2x2::Found(_) => {}
            Interior2x2::OutsideSimplex => notes.push(
                "no interior mixed equilibrium: indifference probabilities fall outside (0, 1)"
                    .into(),
            ),
            Interior2x2::Degenerate => notes.push(
                "no interior mixed equilibrium reported: indifference equation is degenerate"
                    .into(),
            ),
        }
    }

    let view = EquilibriumView {
        pure_equilibria: report
            .pure_equilibria
            .iter()
            .map(|p| profile_view(game, p))
            .collect(),
        dominant_strategy_profile: report
            .dominant_strategy_profile
            .as_ref()
            .map(|p| profile_view(game, p)),
        pareto_optimal: report
            .pareto_optimal
            .iter()
            .map(|p| profile_view(game, p))
            .collect(),
        mixed_equilibria: report
            .interior
            .as_ref()
            .map(|_| report.mixed_equilibria.iter().map(mixed_value).collect()),
        interior: report.interior.as_ref().map(interior_status),
    };
    (
        body,
        serde_json::to_value(view).expect("report serializes"),
        notes,
    )
}

fn pareto_improves(
    game: &NormalFormGame,
    better: &StrategyProfile,
    worse: &StrategyProfile,
) -> bool {
    nfg::analysis::pareto_dominates(
        game.payoff(better).expect("profile from game"),
        game.payoff(worse).expect("profile from game"),
    )
}

fn solve(path: &Path) -> Result<CliReport, CliError> {
    let game = load_game(path)?;
    let report = EquilibriumReport::for_game(&game)?;
    let (body, results, notes) = equilibrium_section(&game, &report);
    Ok(CliReport {
        command: "solve",
        input: digest(path, &game),
        results,
        header: header(path, &game),
        body,
        notes,
    })
}

#[derive(Serialize)]
struct Relation<'a> {
    dominator: &'a str,
    dominated: &'a str,
    mode: &'static str,
}

fn dominance(path: &Path) -> Result<CliReport, CliError> {
    let game = load_game(path)?;
    let mut body = Vec::new();
    let mut per_player = Vec::new();
    for (player, name) in game.players().iter().enumerate() {
        let labels = game.strategy_labels(player);
        let mut relations = Vec::new();
        for a in 0..labels.len() {
            for b in 0..labels.len() {
                if a == b {
                    continue;
                }
                let mode = if dominates(&game, player, a, b, DominanceMode::Strict)? {
                    DominanceMode::Strict
                } else if dominates(&game, player, a, b, DominanceMode::Weak)? {
                    DominanceMode::Weak
                } else {
                    continue;
                };
                relations.push(Relation {
                    dominator: &labels[a],
                    dominated: &labels[b],
                    mode: mode.as_str(),
                });
            }
        }
        if relations.is_empty() {
            body.push(format!("{name}: no dominance"));
        }
        for r in &relations {
            let adverb = if r.mode == "strict" {
                "strictly"
            } else {
                "weakly"
            };
            body.push(format!(
                "{name}: {} {adverb} dominates {}",
                r.dominator, r.dominated
            ));
        }
        let names = |set: Vec<usize>| -> Vec<&str> {
            set.into_iter().map(|s| labels[s].as_str()).collect()
        };
        let strict = names(dominant_strategies(&game, player, DominanceMode::Strict)?);
        let weak = names(dominant_strategies(&game, player, DominanceMode::Weak)?);
        if let Some(s) = strict.first() {
            body.push(format!("{name}: {s} is strictly dominant"));
        } else if !weak.is_empty() {
            body.push(format!("{name}: {} weakly dominant", weak.join(", ")));
        }
        per_player.push(json!({
            "player": name,
            "relations": relations,
            "dominant_strict": strict,
            "dominant_weak": weak,
        }));
    }
    Ok(CliReport {
        command: "dominance",
        input: digest(path, &game),
        results: json!({ "players": per_player }),
        header: header(path, &game),
        body,
        notes: Vec::new(),
    })
}

fn elimination(path: &Path, mode: DominanceMode) -> Result<CliReport, CliError> {
    let game = load_game(path)?;
    let (reduced, trace) = iesds(&game, mode)?;
    let mut body = vec![format!("{} elimination:", mode.as_str())];
    if trace.is_empty() {
        body.push("  nothing eliminated".to_string());
    }
    let mut steps = Vec::new();
    for step in &trace.steps {
        let labels = game.strategy_labels(step.player);
        let player = &game.players()[step.player];
        body.push(format!(
            "  round {}: {player} drops {} (dominated by {})",
            step.round, labels[step.eliminated], labels[step.dominator]
        ));
        steps.push(json!({
            "round": step.round,
            "player": player,
            "eliminated": labels[step.eliminated],
            "dominator": labels[step.dominator],
            "mode": step.mode.as_str(),
        }));
    }
    body.push("reduced game:".to_string());
    body.extend(game_lines(&reduced));
    let cells: Vec<ProfileView> = reduced
        .profiles()
        .map(|p| profile_view(&reduced, &p))
        .collect();
    let mut input = digest(path, &game);
    input["mode"] = json!(mode.as_str());
    Ok(CliReport {
        command: "iesds",
        input,
        results: json!({
            "rounds": trace.rounds(),
            "steps": steps,
            "reduced": { "strategies": reduced.strategies(), "cells": cells },
        }),
        header: header(path, &game),
        body,
        notes: Vec::new(),
    })
}

fn model_from(countries: usize, payoffs: &str) -> Result<ArmsRaceModel, CliError> {
    let v = parse_reals("payoffs", payoffs, 4)?;
    Ok(ArmsRaceModel::new(countries, v[0], v[1], v[2], v[3])?)
}

fn trajectory_section(game: &NormalFormGame, run: &DynamicsTrajectory) -> (Vec<String>, Value) {
    let mut body = vec!["best-response dynamics:".to_string()];
    for (i, state) in run.states.iter().enumerate() {
        body.push(format!("  {i}: {}", profile_line(game, state)));
    }
    body.push(if run.converged {
        format!("  converged after {} turns", run.steps_taken)
    } else {
        format!("  not converged after {} turns", run.steps_taken)
    });
    let states: Vec<Vec<String>> = run.states.iter().map(|s| labels(game, s)).collect();
    (
        body,
        json!({
            "states": states,
            "converged": run.converged,
            "steps_taken": run.steps_taken,
        }),
    )
}

fn arms_race(args: &ArmsRaceArgs) -> Result<CliReport, CliError> {
    let model = model_from(args.countries, &args.payoffs)?;
    let game = arms_race_game(&model)?;
    let start = args
        .start
        .as_deref()
        .map(|s| parse_profile(&game, s))
        .transpose()?;
    if let Some(out) = &args.export {
        write_file(out, &nfg::format::to_json_string(&game))?;
    }
    let report = EquilibriumReport::for_game(&game)?;
    let (mut body, mut results, notes) = equilibrium_section(&game, &report);
    if let Some(start) = &start {
        let run = best_response_dynamics(&game, start, args.max_steps)?;
        let (lines, value) = trajectory_section(&game, &run);
        body.extend(lines);
        results["dynamics"] = value;
    }
    let header = vec![
        format!(
            "arms race: {} countries, t={} r={} p={} s={}",
            model.countries,
            num(model.t),
            num(model.r),
            num(model.p),
            num(model.s)
        ),
        String::new(),
    ];
    Ok(CliReport {
        command: "arms-race",
        input: json!({
            "countries": model.countries,
            "payoffs": [num_value(model.t), num_value(model.r), num_value(model.p), num_value(model.s)],
            "start": start.as_ref().map(|s| labels(&game, s)),
            "max_steps": args.max_steps,
        }),
        results,
        header,
        body,
        notes,
    })
}

fn dynamics(path: &Path, start: &str, max_steps: usize) -> Result<CliReport, CliError> {
    let game = load_game(path)?;
    let start = parse_profile(&game, start)?;
    if max_steps == 0 {
        return Err(CliError::BadFlag("--max-steps must be at least 1".into()));
    }
    let run = best_response_dynamics(&game, &start, max_steps)?;
    let (body, results) = trajectory_section(&game, &run);
    let mut input = digest(path, &game);
    input["start"] = json!(labels(&game, &start));
    input["max_steps"] = json!(max_steps);
    Ok(CliReport {
        command: "dynamics",
        input,
        results,
        header: header(path, &game),
        body,
        notes: Vec::new(),
    })
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), CliError> {
    std::fs::write(path, format!("{text}\n")).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })
}

fn export(scenario: &Scenario, out: Option<&Path>) -> Result<Outcome, CliError> {
    let game = match scenario {
        Scenario::Pd { years } => {
            let y = parse_reals("years", years, 4)?;
            pd_from_years(y[0], y[1], y[2], y[3])?
        }
        Scenario::Exchange { values } => {
            let v = parse_reals("values", values, 4)?;
            exchange_game(v[0], v[1], v[2], v[3])?
        }
        Scenario::ArmsRace { countries, payoffs } => {
            arms_race_game(&model_from(*countries, payoffs)?)?
        }
    };
    let text = nfg::format::to_json_string(&game);
    match out {
        Some(path) => {
            write_file(&path.to_path_buf(), &text)?;
            Ok(Outcome::Raw(String::new()))
        }
        None => Ok(Outcome::Raw(format!("{text}\n"))),
    }
}
