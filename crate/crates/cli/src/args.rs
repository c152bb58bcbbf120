use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nfg::DominanceMode;

#[derive(Debug, Parser)]
#[command(name = "nfg", version, about = "Solve finite normal-form games")]
pub struct Cli {
    /// Print one JSON object instead of a text report.
    #[arg(long, global = true)]
    pub json: bool,

    /// Leave out the input echo and explanatory notes.
    #[arg(long, short, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pure and 2x2 mixed equilibria, dominant-strategy profile and Pareto set.
    #[command(alias = "pareto")]
    Solve {
        /// Game file (JSON).
        path: PathBuf,
    },

    /// Dominance relations between each player's strategies.
    Dominance { path: PathBuf },

    /// Iterated elimination of dominated strategies.
    Iesds {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Strict)]
        mode: Mode,
    },

    /// N-country arms race built from pairwise prisoner's dilemmas.
    ArmsRace(ArmsRaceArgs),

    /// Round-robin best-response dynamics on a game file.
    Dynamics {
        path: PathBuf,
        /// Starting profile as comma-separated strategy labels, e.g. `DT,DT`.
        #[arg(long)]
        start: String,
        #[arg(long, default_value_t = 100)]
        max_steps: usize,
    },

    /// Write one of the built-in scenario games as a game file.
    Export {
        #[command(subcommand)]
        scenario: Scenario,
        /// Output file; stdout when absent.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct ArmsRaceArgs {
    #[arg(long, default_value_t = 2)]
    pub countries: usize,

    /// Pairwise payoffs `t,r,p,s` (temptation, reward, punishment, sucker).
    #[arg(long, default_value = "3,2,1,0")]
    pub payoffs: String,

    /// Run best-response dynamics from this profile, e.g. `NW,NW,NW`.
    #[arg(long)]
    pub start: Option<String>,

    #[arg(long, default_value_t = 100)]
    pub max_steps: usize,

    /// Also write the generated game to this file.
    #[arg(long)]
    pub export: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Scenario {
    /// Interrogation game in years of prison.
    Pd {
        /// `both_tell,betrayer,sucker,both_silent`.
        #[arg(long, default_value = "5,1,8,2")]
        years: String,
    },
    /// Buried-goods exchange.
    Exchange {
        /// `own_a,other_a,own_b,other_b` valuations.
        #[arg(long, default_value = "1,2,1,2")]
        values: String,
    },
    /// Arms-race game.
    ArmsRace {
        #[arg(long, default_value_t = 2)]
        countries: usize,
        #[arg(long, default_value = "3,2,1,0")]
        payoffs: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Strict,
    Weak,
}

impl From<Mode> for DominanceMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Strict => DominanceMode::Strict,
            Mode::Weak => DominanceMode::Weak,
        }
    }
}
