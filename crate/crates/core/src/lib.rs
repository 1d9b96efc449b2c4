//! Star vs. ring layouts for distributing entanglement among `N` users placed
//! symmetrically on a circle.
//!
//! The crate is split along the physics:
//!
//! * [`topology`] holds the geometry (wirelengths, hop counts, ring weights,
//!   classical total wire).
//! * [`channels`] models the bit-flip and watched amplitude-damped channels.
//! * [`entanglement`] does the entropy and swap-fidelity arithmetic.
//! * [`scenarios`] evaluates the resource regimes and averages them over a layout.
//! * [`heuristic`] is the two-outcome finite-resource model.
//! * [`oracle`] re-derives the scalar formulas from explicit density matrices.

pub mod channels;
pub mod entanglement;
mod error;
pub mod heuristic;
pub mod oracle;
pub mod scenarios;
pub mod topology;

pub use error::{Error, Result};
