//! JSON game files.
//!
//! ```json
//! {"players":["Jane","Bob"],"strategies":[["T","DT"],["T","DT"]],
//!  "orientation":"minimize","payoffs":[[[5,5],[1,8]],[[8,1],[2,2]]]}
//! ```
//!
//! `payoffs` nests one array level per player, in player order; the
//! innermost arrays hold one number per player. Numbers are written in the
//! file's own orientation.

use serde::{Deserialize, Serialize};
use serde_json::{Number, Value};
use thiserror::Error;

use crate::error::GameError;
use crate::game::{NormalFormGame, Orientation};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("parse error{}: {source}", path.as_ref().map(|p| format!(" at `{p}`")).unwrap_or_default())]
    Json {
        /// Field path of the failure; `None` at the document root.
        path: Option<String>,
        #[source]
        source: serde_json::Error,
    },

    #[error("invalid field `{path}`: {message}")]
    Payoffs { path: String, message: String },

    #[error(transparent)]
    Game(#[from] GameError),
}

impl FormatError {
    /// The underlying game validation error, if any.
    pub fn game_error(&self) -> Option<&GameError> {
        match self {
            FormatError::Game(e) => Some(e),
            _ => None,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct GameFile {
    players: Vec<String>,
    strategies: Vec<Vec<String>>,
    orientation: Orientation,
    payoffs: Value,
}

pub fn from_json_str(text: &str) -> Result<NormalFormGame, FormatError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let file: GameFile = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = Some(e.path().to_string()).filter(|p| p != ".");
        FormatError::Json {
            path,
            source: e.into_inner(),
        }
    })?;

    if file.players.is_empty() || file.strategies.iter().any(Vec::is_empty) {
        return Err(GameError::EmptyGame.into());
    }
    if file.strategies.len() != file.players.len() {
        return Err(FormatError::Payoffs {
            path: "strategies".into(),
            message: format!(
                "expected {} strategy lists (one per player), found {}",
                file.players.len(),
                file.strategies.len()
            ),
        });
    }
    let counts: Vec<usize> = file.strategies.iter().map(Vec::len).collect();
    crate::game::checked_profile_count(&counts)?;

    let mut entries = Vec::new();
    flatten(
        &file.payoffs,
        &counts,
        0,
        "payoffs".to_string(),
        &mut entries,
    )?;
    Ok(NormalFormGame::new(
        file.players,
        file.strategies,
        entries,
        file.orientation,
    )?)
}

fn flatten(
    value: &Value,
    counts: &[usize],
    depth: usize,
    path: String,
    out: &mut Vec<f64>,
) -> Result<(), FormatError> {
    let expected = if depth < counts.len() {
        counts[depth]
    } else {
        counts.len()
    };
    let items = value.as_array().ok_or_else(|| FormatError::Payoffs {
        path: path.clone(),
        message: format!("expected an array of length {expected}"),
    })?;
    if items.len() != expected {
        return Err(FormatError::Payoffs {
            path,
            message: format!("expected {expected} elements, found {}", items.len()),
        });
    }
    for (i, item) in items.iter().enumerate() {
        let item_path = format!("{path}[{i}]");
        if depth < counts.len() {
            flatten(item, counts, depth + 1, item_path, out)?;
        } else {
            let x = item.as_f64().ok_or_else(|| FormatError::Payoffs {
                path: item_path,
                message: "expected a number".into(),
            })?;
            out.push(x);
        }
    }
    Ok(())
}

/// JSON number, written as an integer when the value is one.
pub fn number(x: f64) -> Value {
    if x == x.trunc() && x.abs() < 9.007_199_254_740_992e15 {
        Value::Number(Number::from(x as i64))
    } else {
        Number::from_f64(x)
            .map(Value::Number)
            .unwrap_or(Value::Null)
    }
}

fn nest(game: &NormalFormGame, depth: usize, offset: usize, stride: usize) -> Value {
    let k = game.num_players();
    if depth == k {
        let cell = &game.utilities()[offset * k..(offset + 1) * k];
        return Value::Array(
            cell.iter()
                .map(|&u| number(game.orientation().apply(u)))
                .collect(),
        );
    }
    let n = game.counts()[depth];
    let inner = stride / n;
    Value::Array(
        (0..n)
            .map(|i| nest(game, depth + 1, offset + i * inner, inner))
            .collect(),
    )
}

/// Serializes a game in the file format, compact, fields in schema order.
pub fn to_json_string(game: &NormalFormGame) -> String {
    let file = GameFile {
        players: game.players().to_vec(),
        strategies: game.strategies().to_vec(),
        orientation: game.orientation(),
        payoffs: nest(game, 0, 0, game.num_profiles()),
    };
    serde_json::to_string(&file).expect("game file serializes")
}
