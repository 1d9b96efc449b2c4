//! Two-outcome model of distillation over a chain of wirelengths.
//!
//! Each wirelength is distilled independently: with probability `p` it is
//! boosted to `E_D + δ_s`, otherwise it drops to `E_D − δ_f`. Swapping keeps
//! the weakest link, so a chain of `n` links carries `E_D + δ_s` only when all
//! `n` succeed.

use serde::Serialize;

use crate::error::length;
use crate::entanglement::EntanglementValue;
use crate::scenarios::{self, ComparisonRecord};
use crate::{Error, Result};

/// Slack allowed on the `E_D + δ_s ≤ 1` and `E_D − δ_f ≥ 0` constraints.
const BOUND_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HeuristicParams {
    e_distillable: f64,
    delta_success: f64,
    delta_fail: f64,
    p_success: f64,
}

impl HeuristicParams {
    pub fn new(
        e_distillable: f64,
        delta_success: f64,
        delta_fail: f64,
        p_success: f64,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidHeuristic(msg));
        if !(0.0..=1.0).contains(&e_distillable) {
            return bad(format!("E_D = {e_distillable} is outside [0, 1]"));
        }
        if !(0.0..=1.0).contains(&p_success) {
            return bad(format!("p = {p_success} is outside [0, 1]"));
        }
        if !(delta_success >= 0.0 && delta_fail >= 0.0) {
            return bad(format!(
                "deltas must be non-negative, got δ_s = {delta_success}, δ_f = {delta_fail}"
            ));
        }
        if e_distillable + delta_success > 1.0 + BOUND_SLACK {
            return bad(format!(
                "E_D + δ_s = {} exceeds one ebit",
                e_distillable + delta_success
            ));
        }
        if e_distillable - delta_fail < -BOUND_SLACK {
            return bad(format!(
                "E_D − δ_f = {} is negative",
                e_distillable - delta_fail
            ));
        }
        Ok(Self {
            e_distillable,
            delta_success,
            delta_fail,
            p_success,
        })
    }

    pub fn e_distillable(&self) -> f64 {
        self.e_distillable
    }

    pub fn delta_success(&self) -> f64 {
        self.delta_success
    }

    pub fn delta_fail(&self) -> f64 {
        self.delta_fail
    }

    pub fn p_success(&self) -> f64 {
        self.p_success
    }
}

/// Expected entanglement over `n` wirelengths:
/// `pⁿ(E_D + δ_s) + (1 − pⁿ)(E_D − δ_f)`.
pub fn heuristic_chain(params: &HeuristicParams, n: usize) -> Result<EntanglementValue> {
    if n == 0 {
        return Err(Error::ZeroHops);
    }
    let all_succeed = params.p_success.powi(n as i32);
    let boosted = params.e_distillable + params.delta_success;
    let reduced = params.e_distillable - params.delta_fail;
    Ok(EntanglementValue::new(
        all_succeed * boosted + (1.0 - all_succeed) * reduced,
    ))
}

/// Watched amplitude damping followed by Procrustean concentration.
///
/// Success means ending with a maximally entangled pair, so `δ_s = 1 − E_D`
/// and `δ_f = E_D`; `p = e^{-4d}` is the no-loss probability
/// `(1 + e^{-4d})/2` times the concentration probability
/// `2e^{-4d}/(1 + e^{-4d})`.
pub fn amplitude_damp_params(d: f64, e_distillable: f64) -> Result<HeuristicParams> {
    let d = length(d)?;
    HeuristicParams::new(
        e_distillable,
        1.0 - e_distillable,
        e_distillable,
        (-4.0 * d).exp(),
    )
}

/// Where the heuristic parameters come from when a layout is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "source", rename_all = "kebab-case")]
pub enum HeuristicSource {
    /// The same parameters on every wirelength, whatever its length.
    Fixed(HeuristicParams),
    /// Parameters derived from each layout's wirelength by
    /// [`amplitude_damp_params`].
    AmplitudeDamped { e_distillable: f64 },
}

impl HeuristicSource {
    pub fn params_for(&self, wirelength: f64) -> Result<HeuristicParams> {
        match *self {
            HeuristicSource::Fixed(params) => Ok(params),
            HeuristicSource::AmplitudeDamped { e_distillable } => {
                amplitude_damp_params(wirelength, e_distillable)
            }
        }
    }

    pub fn pair_entanglement(&self, d: f64, n: usize) -> Result<EntanglementValue> {
        heuristic_chain(&self.params_for(d)?, n)
    }
}

/// Star vs. ring under the heuristic model for one user count, with the ring
/// averaged over shortest paths like every other regime.
pub fn heuristic_compare(
    source: &HeuristicSource,
    n_parties: usize,
    radius: f64,
) -> Result<ComparisonRecord> {
    scenarios::compare_at(source, n_parties, radius)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::watched_condition;
    use crate::entanglement::procrustean_success;
    use crate::topology::Winner;
    use approx::assert_abs_diff_eq;

    #[test]
    fn params_validation() {
        assert!(HeuristicParams::new(0.5, 0.5, 0.5, 0.3).is_ok());
        assert!(HeuristicParams::new(0.8, 0.3, 0.1, 0.3).is_err());
        assert!(HeuristicParams::new(0.2, 0.1, 0.3, 0.3).is_err());
        assert!(HeuristicParams::new(0.2, 0.1, 0.1, 1.3).is_err());
        assert!(HeuristicParams::new(0.2, -0.1, 0.1, 0.3).is_err());
        assert!(HeuristicParams::new(f64::NAN, 0.1, 0.1, 0.3).is_err());
    }

    #[test]
    fn certain_success() {
        let params = HeuristicParams::new(0.6, 0.3, 0.2, 1.0).unwrap();
        for n in 1..10 {
            assert_abs_diff_eq!(heuristic_chain(&params, n).unwrap().ebits(), 0.9, epsilon = 1e-15);
        }
        assert_eq!(heuristic_chain(&params, 0), Err(Error::ZeroHops));
    }

    #[test]
    fn lossless_amplitude_damping() {
        let params = amplitude_damp_params(0.0, 0.4).unwrap();
        assert_eq!(params.p_success(), 1.0);
        for n in 1..10 {
            assert_abs_diff_eq!(heuristic_chain(&params, n).unwrap().ebits(), 1.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn amplitude_damping_probability() {
        // e^{-0.4}
        let params = amplitude_damp_params(0.1, 0.5).unwrap();
        assert_abs_diff_eq!(params.p_success(), 0.6703200460356393, epsilon = 1e-15);
        for k in 0..=40 {
            let d = 0.05 * k as f64;
            let c = watched_condition(d).unwrap();
            let product = c.observe_probability
                * procrustean_success(c.amplitude_0, c.amplitude_1).unwrap();
            let p = amplitude_damp_params(d, 0.3).unwrap().p_success();
            assert_abs_diff_eq!(product, p, epsilon = 1e-12);
        }
        assert!(amplitude_damp_params(-0.5, 0.3).is_err());
        assert!(amplitude_damp_params(0.5, 1.3).is_err());
    }

    #[test]
    fn closed_form_chain() {
        for &e_d in &[0.0, 0.3, 0.7, 1.0] {
            for k in 0..=20 {
                let d = 0.05 * k as f64;
                let params = amplitude_damp_params(d, e_d).unwrap();
                for n in 1..=32 {
                    assert_abs_diff_eq!(
                        heuristic_chain(&params, n).unwrap().ebits(),
                        (-4.0 * n as f64 * d).exp(),
                        epsilon = 1e-12
                    );
                }
            }
        }
    }

    #[test]
    fn certain_failure_is_flat() {
        let params = HeuristicParams::new(0.6, 0.2, 0.5, 0.0).unwrap();
        for n in 2..=12 {
            let rec = heuristic_compare(&HeuristicSource::Fixed(params), n, 1.0).unwrap();
            assert_abs_diff_eq!(rec.e_avg_star, 0.1, epsilon = 1e-15);
            assert_abs_diff_eq!(rec.e_avg_ring, 0.1, epsilon = 1e-15);
            assert_eq!(rec.winner, Winner::Tie);
        }
    }

    #[test]
    fn no_fluctuation_is_a_total_tie() {
        let params = HeuristicParams::new(0.42, 0.0, 0.0, 1.0).unwrap();
        for n in 2..=12 {
            let rec = heuristic_compare(&HeuristicSource::Fixed(params), n, 2.0).unwrap();
            assert_abs_diff_eq!(rec.e_avg_star, 0.42, epsilon = 1e-15);
            assert_abs_diff_eq!(rec.e_avg_ring, 0.42, epsilon = 1e-15);
        }
    }

    #[test]
    fn amplitude_damped_ring_never_loses() {
        let source = HeuristicSource::AmplitudeDamped { e_distillable: 0.3 };
        for &radius in &[0.05, 0.2, 1.0] {
            for n in 2..=50 {
                let rec = heuristic_compare(&source, n, radius).unwrap();
                assert!(rec.e_avg_ring >= rec.e_avg_star, "N={n} R={radius}");
            }
        }
    }
}
