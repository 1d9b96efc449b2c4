use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a layout needs at least two parties, got {0}")]
    TooFewParties(usize),

    #[error("radius must be positive and finite, got {0}")]
    InvalidRadius(f64),

    #[error("party index {index} is outside 1..={n_parties}")]
    PartyOutOfRange { index: usize, n_parties: usize },

    #[error("party {0} cannot share a pair with itself")]
    SelfPair(usize),

    #[error("length must be non-negative, got {0}")]
    InvalidLength(f64),

    #[error("hop count must be at least 1")]
    ZeroHops,

    #[error("{name} = {value} is outside [0, 1]")]
    OutOfUnitRange { name: &'static str, value: f64 },

    #[error("amplitudes ({0}, {1}) are not normalized")]
    Unnormalized(f64, f64),

    #[error("cannot swap an empty chain of pairs")]
    EmptyChain,

    #[error("invalid heuristic parameters: {0}")]
    InvalidHeuristic(String),

    #[error("invalid density matrix: {0}")]
    InvalidState(String),
}

/// Checks `value ∈ [0, 1]`, rejecting NaN.
pub(crate) fn unit_interval(name: &'static str, value: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(Error::OutOfUnitRange { name, value })
    }
}

/// Physical lengths are non-negative; `+inf` is accepted as the fully decayed limit.
pub(crate) fn length(d: f64) -> Result<f64> {
    if d >= 0.0 {
        Ok(d)
    } else {
        Err(Error::InvalidLength(d))
    }
}
