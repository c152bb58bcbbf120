//! Finite normal-form games.
//!
//! A [`NormalFormGame`] stores a dense payoff tensor in utilities. The
//! [`analysis`] module finds best responses, pure Nash equilibria,
//! dominated strategies, Pareto-optimal outcomes and mixed equilibria of
//! 2×2 games; [`scenarios`] builds the N-country arms race and runs
//! best-response dynamics; [`classic`] holds the two-player dilemma games.
//!
//! ```
//! use nfg::{analysis, classic};
//!
//! let game = classic::interrogation();
//! let equilibria = analysis::enumerate_pure_nash(&game);
//! assert_eq!(game.describe(&equilibria[0]), "(T, T)");
//! ```

pub mod analysis;
pub mod classic;
pub mod error;
pub mod format;
pub mod game;
pub mod profile;
pub mod scenarios;

pub use analysis::{DominanceMode, EliminationTrace, EquilibriumReport};
pub use error::{GameError, Result};
pub use game::{NormalFormGame, Orientation, MAX_PROFILES};
pub use profile::{MixedProfile, MixedStrategy, StrategyProfile};
pub use scenarios::{ArmsRaceModel, DynamicsTrajectory};
