//! Noisy channel models.
//!
//! Lengths are dimensionless, in units of the channel's attenuation length,
//! so a segment of length `d` damps coherences by `e^{-d}`.

use serde::Serialize;

use crate::error::{length, unit_interval};
use crate::{Error, Result};

/// A rank-2 Bell-diagonal pair `λ|ψ+⟩⟨ψ+| + (1 − λ)|φ+⟩⟨φ+|`.
///
/// The state is held as its Bell bias `2λ − 1`, which is what both bit-flip
/// transmission and entanglement swapping act on multiplicatively. Keeping the
/// bias avoids the cancellation in `2λ − 1` once λ gets close to 1/2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BellDiagonalPair {
    bias: f64,
}

impl BellDiagonalPair {
    /// A fresh `|ψ+⟩`.
    pub const PERFECT: BellDiagonalPair = BellDiagonalPair { bias: 1.0 };

    pub fn from_fidelity(fidelity: f64) -> Result<Self> {
        unit_interval("fidelity", fidelity)?;
        Ok(Self {
            bias: 2.0 * fidelity - 1.0,
        })
    }

    /// From the Bell bias `2λ − 1 ∈ [−1, 1]`.
    pub fn from_bias(bias: f64) -> Result<Self> {
        if (-1.0..=1.0).contains(&bias) {
            Ok(Self { bias })
        } else {
            Err(Error::OutOfUnitRange {
                name: "fidelity",
                value: 0.5 * (1.0 + bias),
            })
        }
    }

    /// Weight λ on `|ψ+⟩`.
    pub fn fidelity(&self) -> f64 {
        0.5 * (1.0 + self.bias)
    }

    /// `2λ − 1`.
    pub fn bias(&self) -> f64 {
        self.bias
    }

    /// Sends one half of the pair through a bit-flip segment of length `d`.
    pub fn transmit_bitflip(self, d: f64) -> Result<Self> {
        let d = length(d)?;
        Ok(Self {
            bias: self.bias * (-d).exp(),
        })
    }

    /// Bell-measures the shared middle of `self` and `other`; the resulting
    /// outer pair has `2F − 1 = (2F_a − 1)(2F_b − 1)`.
    pub fn swap(self, other: Self) -> Self {
        Self {
            bias: self.bias * other.bias,
        }
    }
}

/// `λ = (1 + e^{-d})/2`, the fidelity a fresh `|ψ+⟩` keeps after length `d`.
pub fn bitflip_lambda(d: f64) -> Result<f64> {
    Ok(BellDiagonalPair::PERFECT.transmit_bitflip(d)?.fidelity())
}

pub fn transmit_bitflip(pair: BellDiagonalPair, d: f64) -> Result<BellDiagonalPair> {
    pair.transmit_bitflip(d)
}

/// System ⊗ environment pure state after both halves of `(|00⟩ + |11⟩)/√2`
/// cross a watched amplitude-damping segment of length `d`.
///
/// Branches are labelled by the environment state `|E₁E₂⟩`:
///
/// | field         | system `|12⟩`                 | environment |
/// |---------------|-------------------------------|-------------|
/// | `no_loss`     | `(|00⟩ + e^{-2d}|11⟩)/norm`   | `|00⟩`      |
/// | `loss_second` | `|01⟩`                        | `|10⟩`      |
/// | `loss_first`  | `|10⟩`                        | `|01⟩`      |
/// | `double_loss` | `|00⟩`                        | `|11⟩`      |
///
/// Each field is the amplitude in front of its (normalized) branch.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AmplitudeDampJointState {
    pub decay_length: f64,
    pub no_loss: f64,
    pub loss_second: f64,
    pub loss_first: f64,
    pub double_loss: f64,
}

impl AmplitudeDampJointState {
    pub fn norm_squared(&self) -> f64 {
        [self.no_loss, self.loss_second, self.loss_first, self.double_loss]
            .iter()
            .map(|a| a * a)
            .sum()
    }

    /// Probability that the monitored environment is found in `|00⟩`.
    pub fn observe_probability(&self) -> f64 {
        self.no_loss * self.no_loss
    }
}

pub fn amplitude_damp_joint(d: f64) -> Result<AmplitudeDampJointState> {
    let d = length(d)?;
    let s = std::f64::consts::FRAC_1_SQRT_2;
    // 1 − e^{-2d} without cancellation at small d
    let lost = -(-2.0 * d).exp_m1();
    let single = (-d).exp() * lost.sqrt();
    Ok(AmplitudeDampJointState {
        decay_length: d,
        no_loss: s * (1.0 + (-4.0 * d).exp()).sqrt(),
        loss_second: s * single,
        loss_first: s * single,
        double_loss: s * lost,
    })
}

/// The post-selected survivor `a₀|00⟩ + a₁|11⟩` of a watched channel.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConditionalPureState {
    pub amplitude_0: f64,
    pub amplitude_1: f64,
    pub observe_probability: f64,
}

pub fn watched_condition(d: f64) -> Result<ConditionalPureState> {
    let d = length(d)?;
    let damp = (-2.0 * d).exp();
    let norm = (1.0 + damp * damp).sqrt();
    Ok(ConditionalPureState {
        amplitude_0: 1.0 / norm,
        amplitude_1: damp / norm,
        observe_probability: 0.5 * (1.0 + damp * damp),
    })
}
