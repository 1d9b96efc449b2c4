//! Entropy and fidelity arithmetic for single pairs. All logarithms are base 2.

use std::fmt;
use std::f64::consts::LN_2;

use serde::Serialize;

use crate::channels::BellDiagonalPair;
use crate::error::unit_interval;
use crate::{Error, Result};

/// Entanglement of a pair, in ebits.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize)]
#[serde(transparent)]
pub struct EntanglementValue(f64);

impl EntanglementValue {
    pub const ZERO: EntanglementValue = EntanglementValue(0.0);
    pub const ONE: EntanglementValue = EntanglementValue(1.0);

    pub fn new(ebits: f64) -> Self {
        Self(ebits)
    }

    pub fn ebits(self) -> f64 {
        self.0
    }
}

impl fmt::Display for EntanglementValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ebit", self.0)
    }
}

/// `H₂(x) = −x log₂ x − (1 − x) log₂(1 − x)`, with `H₂(0) = H₂(1) = 0`.
pub fn binary_entropy(x: f64) -> Result<f64> {
    unit_interval("probability", x)?;
    Ok(xlog2x(x) + xlog2x(1.0 - x))
}

fn xlog2x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        -x * x.log2()
    }
}

/// Distillable entanglement `1 − S(Λ)` of the rank-2 mixture with weight λ.
pub fn distillable_rank2(lambda: f64) -> Result<EntanglementValue> {
    Ok(BellDiagonalPair::from_fidelity(lambda)?.distillable())
}

impl BellDiagonalPair {
    /// `1 − H₂(λ)`, floored at zero.
    pub fn distillable(&self) -> EntanglementValue {
        let c = self.bias().abs();
        let ebits = if c < 0.5 {
            one_minus_entropy_series(c)
        } else {
            1.0 - binary_entropy(self.fidelity()).unwrap_or(1.0)
        };
        EntanglementValue(ebits.max(0.0))
    }
}

/// `1 − H₂((1 + c)/2) = Σ_{k≥1} c^{2k} / (2k(2k − 1) ln 2)`.
///
/// The direct formula cancels catastrophically for small `c`; the series has
/// only positive terms.
fn one_minus_entropy_series(c: f64) -> f64 {
    let c2 = c * c;
    let mut power = c2;
    let mut sum = 0.0;
    for k in 1..200u32 {
        let k = f64::from(k);
        let term = power / (2.0 * k * (2.0 * k - 1.0));
        sum += term;
        if term <= sum * 1e-17 {
            break;
        }
        power *= c2;
    }
    sum / LN_2
}

/// Fidelity after swapping two Bell-diagonal pairs: `1 + 2F_aF_b − F_a − F_b`.
pub fn swap_fidelity(f_a: f64, f_b: f64) -> Result<f64> {
    unit_interval("fidelity", f_a)?;
    unit_interval("fidelity", f_b)?;
    Ok(1.0 + 2.0 * f_a * f_b - f_a - f_b)
}

/// Left fold of [`swap_fidelity`] along a repeater chain.
pub fn chain_swap(fidelities: &[f64]) -> Result<f64> {
    let (first, rest) = fidelities.split_first().ok_or(Error::EmptyChain)?;
    let first = unit_interval("fidelity", *first)?;
    rest.iter().try_fold(first, |acc, &f| swap_fidelity(acc, f))
}

/// [`chain_swap`] on pair values rather than raw fidelities.
pub fn chain_swap_pairs(pairs: &[BellDiagonalPair]) -> Result<BellDiagonalPair> {
    let (first, rest) = pairs.split_first().ok_or(Error::EmptyChain)?;
    Ok(rest.iter().fold(*first, |acc, &p| acc.swap(p)))
}

const NORM_TOLERANCE: f64 = 1e-9;

fn check_normalized(a0: f64, a1: f64) -> Result<()> {
    if (a0 * a0 + a1 * a1 - 1.0).abs() <= NORM_TOLERANCE {
        Ok(())
    } else {
        Err(Error::Unnormalized(a0, a1))
    }
}

/// Success probability of Procrustean concentration of `a₀|00⟩ + a₁|11⟩`
/// to a maximally entangled pair: twice the smaller squared coefficient.
pub fn procrustean_success(amplitude_0: f64, amplitude_1: f64) -> Result<f64> {
    check_normalized(amplitude_0, amplitude_1)?;
    let smaller = (amplitude_0 * amplitude_0).min(amplitude_1 * amplitude_1);
    Ok((2.0 * smaller).min(1.0))
}

/// Entropy of entanglement of the Schmidt-form state `a₀|00⟩ + a₁|11⟩`.
pub fn pure_state_entanglement(amplitude_0: f64, amplitude_1: f64) -> Result<EntanglementValue> {
    check_normalized(amplitude_0, amplitude_1)?;
    let q = (amplitude_1 * amplitude_1).clamp(0.0, 1.0);
    Ok(EntanglementValue(binary_entropy(q)?))
}
