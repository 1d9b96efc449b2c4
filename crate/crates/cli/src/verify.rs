//! `verify`: randomized checks of the closed forms against the density-matrix
//! oracle.

use std::fmt::Write as _;
use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use entdist::channels::{transmit_bitflip, BellDiagonalPair};
use entdist::entanglement::{binary_entropy, swap_fidelity};
use entdist::oracle::{
    apply_bitflip_kraus, bell_diagonal_density, swap_branches, swap_chain,
    swap_via_bell_measurement, von_neumann_entropy, BellState, DensityMatrix,
};
use entdist::scenarios::{avg_entanglement_ring, avg_entanglement_star, ResourceRegime};

use crate::error::CliError;

pub const ORACLE_TOLERANCE: f64 = 1e-10;
pub const IDENTITY_TOLERANCE: f64 = 1e-12;
const MAX_CHAIN: usize = 6;

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub tolerance: f64,
    pub max_deviation: f64,
    /// Inputs, expected and actual values at the largest deviation.
    pub worst_case: String,
}

impl Check {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Self {
            name,
            tolerance,
            max_deviation: 0.0,
            worst_case: String::new(),
        }
    }

    fn record(&mut self, expected: f64, actual: f64, inputs: impl FnOnce() -> String) {
        let deviation = (expected - actual).abs();
        // NaN counts as the worst possible deviation
        if deviation > self.max_deviation || deviation.is_nan() {
            self.max_deviation = if deviation.is_nan() { f64::INFINITY } else { deviation };
            self.worst_case = format!("{}, expected {expected:e}, actual {actual:e}", inputs());
        }
    }

    pub fn passed(&self) -> bool {
        self.max_deviation < self.tolerance
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub trials: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn render(&self) -> String {
        let mut out = format!("verify: trials={} seed={}\n", self.trials, self.seed);
        for c in &self.checks {
            let status = if c.passed() { "ok" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{:<20} max_dev={:.3e} tol={:.0e} {status}",
                c.name, c.max_deviation, c.tolerance
            );
            if !c.passed() {
                let _ = writeln!(out, "  failing case: {}", c.worst_case);
            }
        }
        let _ = writeln!(out, "{}", if self.passed() { "all checks passed" } else { "checks FAILED" });
        out
    }
}

pub fn run_verification(trials: usize, seed: u64) -> Result<VerifyReport, CliError> {
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut swap = Check::new("swap-fidelity", ORACLE_TOLERANCE);
    let mut spread = Check::new("swap-outcome-spread", ORACLE_TOLERANCE);
    let mut chain = Check::new("chain-oracle", ORACLE_TOLERANCE);
    let mut identity = Check::new("regime-identity", IDENTITY_TOLERANCE);
    let mut entropy = Check::new("entropy", ORACLE_TOLERANCE);
    let fresh = DensityMatrix::pure(&BellState::PsiPlus.vector())?;

    for _ in 0..trials {
        let (fa, fb): (f64, f64) = (rng.gen(), rng.gen());
        let a = bell_diagonal_density(fa)?;
        let b = bell_diagonal_density(fb)?;
        let expected = swap_fidelity(fa, fb)?;
        let swapped = swap_via_bell_measurement(&a, &b)?;
        swap.record(expected, swapped.psi_plus_weight(), || format!("F_a={fa}, F_b={fb}"));

        let lambdas: Vec<f64> = swap_branches(&a, &b)?
            .into_iter()
            .filter_map(|br| br.corrected.map(|s| s.psi_plus_weight()))
            .collect();
        let hi = lambdas.iter().copied().fold(f64::MIN, f64::max);
        let lo = lambdas.iter().copied().fold(f64::MAX, f64::min);
        spread.record(0.0, hi - lo, || format!("F_a={fa}, F_b={fb} (outcome spread)"));

        let d: f64 = rng.gen_range(0.0..3.0);
        let n = rng.gen_range(1..=MAX_CHAIN);
        let link = apply_bitflip_kraus(&fresh, d)?;
        let oracle = swap_chain(&vec![link; n])?;
        let direct = transmit_bitflip(BellDiagonalPair::PERFECT, n as f64 * d)?;
        chain.record(direct.fidelity(), oracle.psi_plus_weight(), || {
            format!("d={d}, n={n}")
        });

        let parties = rng.gen_range(2..=50usize);
        let radius: f64 = rng.gen_range(0.1..10.0);
        let star = (
            avg_entanglement_star(&ResourceRegime::OnePairTraveling, parties, radius)?,
            avg_entanglement_star(&ResourceRegime::OnePairPerWirelength, parties, radius)?,
        );
        let ring = (
            avg_entanglement_ring(&ResourceRegime::OnePairTraveling, parties, radius)?,
            avg_entanglement_ring(&ResourceRegime::OnePairPerWirelength, parties, radius)?,
        );
        for (layout, (traveling, per_link)) in [("star", star), ("ring", ring)] {
            identity.record(traveling.ebits(), per_link.ebits(), || {
                format!("{layout} N={parties}, R={radius}")
            });
        }

        let lambda: f64 = rng.gen();
        let s = von_neumann_entropy(&bell_diagonal_density(lambda)?);
        entropy.record(binary_entropy(lambda)?, s, || format!("lambda={lambda}"));
    }

    Ok(VerifyReport {
        trials,
        seed,
        checks: vec![swap, spread, chain, identity, entropy],
    })
}

pub fn cmd_verify(trials: usize, seed: u64, stdout: &mut dyn Write) -> Result<(), CliError> {
    let report = run_verification(trials, seed)?;
    stdout.write_all(report.render().as_bytes())?;
    stdout.flush()?;
    if report.passed() {
        Ok(())
    } else {
        let failing: Vec<String> = report
            .checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| format!("{}: {}", c.name, c.worst_case))
            .collect();
        Err(CliError::Verification(failing.join("; ")))
    }
}
