//! Resource regimes, layout averages and the crossover search.
//!
//! An [`EntanglementModel`] supplies `E(d, n)`, the entanglement two users end
//! up sharing across `n` wirelengths of length `d`. The star average is
//! `E(R, 2)`; the ring average weights every shortest hop count from a fixed
//! user over its `N − 1` partners.

use serde::Serialize;

use crate::channels::BellDiagonalPair;
use crate::entanglement::{chain_swap_pairs, EntanglementValue};
use crate::error::length;
use crate::heuristic::HeuristicSource;
use crate::topology::{ring_chord, ring_weights, NetworkLayout, Winner};
use crate::{Error, Result};

/// Absolute band inside which two averages are reported as a tie.
pub const TIE_TOLERANCE: f64 = 1e-9;

pub trait EntanglementModel {
    /// `E(d, n)` in ebits.
    fn pair_entanglement(&self, d: f64, hops: usize) -> Result<EntanglementValue>;
}

/// The resource regimes over bit-flip channels, plus the heuristic model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "regime", rename_all = "kebab-case")]
pub enum ResourceRegime {
    /// Unlimited pairs per wirelength, distilled and matched end to end. The
    /// result is the distillable entanglement of a single wirelength.
    Asymptotic,
    /// One pair whose second half travels hop by hop to the far user.
    OnePairTraveling,
    /// One pair per wirelength, joined by entanglement swapping.
    OnePairPerWirelength,
    Heuristic(HeuristicSource),
}

impl EntanglementModel for ResourceRegime {
    fn pair_entanglement(&self, d: f64, hops: usize) -> Result<EntanglementValue> {
        let d = length(d)?;
        if hops == 0 {
            return Err(Error::ZeroHops);
        }
        match self {
            ResourceRegime::Asymptotic => {
                Ok(BellDiagonalPair::PERFECT.transmit_bitflip(d)?.distillable())
            }
            ResourceRegime::OnePairTraveling => {
                let mut pair = BellDiagonalPair::PERFECT;
                for _ in 0..hops {
                    pair = pair.transmit_bitflip(d)?;
                }
                Ok(pair.distillable())
            }
            ResourceRegime::OnePairPerWirelength => {
                let link = BellDiagonalPair::PERFECT.transmit_bitflip(d)?;
                Ok(chain_swap_pairs(&vec![link; hops])?.distillable())
            }
            ResourceRegime::Heuristic(source) => source.pair_entanglement(d, hops),
        }
    }
}

impl EntanglementModel for HeuristicSource {
    fn pair_entanglement(&self, d: f64, hops: usize) -> Result<EntanglementValue> {
        HeuristicSource::pair_entanglement(self, d, hops)
    }
}

/// An asymptotic regime over an arbitrary channel, given as its per-wirelength
/// entanglement `E(d)`. Hop count is irrelevant once pairs are distilled and
/// matched.
pub struct PerWirelength<F>(pub F);

impl<F: Fn(f64) -> f64> EntanglementModel for PerWirelength<F> {
    fn pair_entanglement(&self, d: f64, hops: usize) -> Result<EntanglementValue> {
        let d = length(d)?;
        if hops == 0 {
            return Err(Error::ZeroHops);
        }
        Ok(EntanglementValue::new((self.0)(d)))
    }
}

pub fn pair_entanglement<M: EntanglementModel + ?Sized>(
    model: &M,
    d: f64,
    hops: usize,
) -> Result<EntanglementValue> {
    model.pair_entanglement(d, hops)
}

/// `E(R, 2)`: every star route is two spokes.
pub fn avg_entanglement_star<M: EntanglementModel + ?Sized>(
    model: &M,
    n_parties: usize,
    radius: f64,
) -> Result<EntanglementValue> {
    let layout = NetworkLayout::star(n_parties, radius)?;
    model.pair_entanglement(layout.wirelength(), 2)
}

/// `(2·Σ_{n=1}^{U} E(d, n) + μ·E(d, N/2)) / (N − 1)` with `d = 2R sin(π/N)`.
pub fn avg_entanglement_ring<M: EntanglementModel + ?Sized>(
    model: &M,
    n_parties: usize,
    radius: f64,
) -> Result<EntanglementValue> {
    NetworkLayout::ring(n_parties, radius)?;
    let d = ring_chord(n_parties, radius);
    let weights = ring_weights(n_parties)?;
    let mut total = 0.0;
    for (hops, multiplicity) in weights.hop_multiplicities() {
        total += multiplicity as f64 * model.pair_entanglement(d, hops)?.ebits();
    }
    Ok(EntanglementValue::new(total / (n_parties - 1) as f64))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComparisonRecord {
    pub n_parties: usize,
    pub radius: f64,
    pub e_avg_star: f64,
    pub e_avg_ring: f64,
    pub winner: Winner,
}

/// Both averages for a single user count.
pub fn compare_at<M: EntanglementModel + ?Sized>(
    model: &M,
    n_parties: usize,
    radius: f64,
) -> Result<ComparisonRecord> {
    let e_avg_star = avg_entanglement_star(model, n_parties, radius)?.ebits();
    let e_avg_ring = avg_entanglement_ring(model, n_parties, radius)?.ebits();
    Ok(ComparisonRecord {
        n_parties,
        radius,
        e_avg_star,
        e_avg_ring,
        winner: Winner::by_larger(e_avg_star, e_avg_ring, TIE_TOLERANCE),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub radius: f64,
    pub records: Vec<ComparisonRecord>,
    /// Smallest user count in range at which the ring strictly wins.
    pub crossover: Option<usize>,
}

impl ComparisonReport {
    pub fn ties(&self) -> impl Iterator<Item = usize> + '_ {
        self.records
            .iter()
            .filter(|r| r.winner == Winner::Tie)
            .map(|r| r.n_parties)
    }

    pub fn ring_never_loses(&self) -> bool {
        self.records.iter().all(|r| r.winner != Winner::Star)
    }

    pub fn winner_at(&self, n_parties: usize) -> Option<Winner> {
        self.records
            .iter()
            .find(|r| r.n_parties == n_parties)
            .map(|r| r.winner)
    }
}

/// Evaluates `N = 2..=n_max`.
pub fn compare<M: EntanglementModel + ?Sized>(
    model: &M,
    radius: f64,
    n_max: usize,
) -> Result<ComparisonReport> {
    compare_range(model, radius, 2, n_max)
}

pub fn compare_range<M: EntanglementModel + ?Sized>(
    model: &M,
    radius: f64,
    n_min: usize,
    n_max: usize,
) -> Result<ComparisonReport> {
    if n_min < 2 {
        return Err(Error::TooFewParties(n_min));
    }
    if n_max < n_min {
        return Err(Error::TooFewParties(n_max));
    }
    let records = (n_min..=n_max)
        .map(|n| compare_at(model, n, radius))
        .collect::<Result<Vec<_>>>()?;
    let crossover = records
        .iter()
        .find(|r| r.winner == Winner::Ring)
        .map(|r| r.n_parties);
    Ok(ComparisonReport {
        radius,
        records,
        crossover,
    })
}
