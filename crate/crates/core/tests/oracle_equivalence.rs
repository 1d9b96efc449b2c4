//! The density-matrix oracle against the scalar fast path.

use entdist::channels::bitflip_lambda;
use entdist::entanglement::{binary_entropy, chain_swap, swap_fidelity};
use entdist::oracle::{
    apply_bitflip_kraus, bell_diagonal_density, swap_branches, swap_chain,
    swap_via_bell_measurement, von_neumann_entropy, BellState, DensityMatrix,
};
use entdist::scenarios::{EntanglementModel, ResourceRegime};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn swap_formula_over_random_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut worst = 0.0f64;
    let mut worst_spread = 0.0f64;
    for _ in 0..300 {
        let (fa, fb) = (rng.gen::<f64>(), rng.gen::<f64>());
        let a = bell_diagonal_density(fa).unwrap();
        let b = bell_diagonal_density(fb).unwrap();
        let expected = swap_fidelity(fa, fb).unwrap();

        let out = swap_via_bell_measurement(&a, &b).unwrap();
        worst = worst.max((out.psi_plus_weight() - expected).abs());
        assert!(out.off_family_residual() < 1e-12);

        let lambdas: Vec<f64> = swap_branches(&a, &b)
            .unwrap()
            .into_iter()
            .map(|br| {
                assert!((br.probability - 0.25).abs() < 1e-12);
                br.corrected.unwrap().psi_plus_weight()
            })
            .collect();
        let hi = lambdas.iter().copied().fold(f64::MIN, f64::max);
        let lo = lambdas.iter().copied().fold(f64::MAX, f64::min);
        worst_spread = worst_spread.max(hi - lo);
    }
    assert!(worst < 1e-10, "max deviation {worst:e}");
    assert!(worst_spread < 1e-10, "outcome spread {worst_spread:e}");
}

#[test]
fn swapped_chains_match_scalar_chain() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=6 {
        for _ in 0..5 {
            let fidelities: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..=1.0)).collect();
            let links: Vec<DensityMatrix> = fidelities
                .iter()
                .map(|&f| bell_diagonal_density(f).unwrap())
                .collect();
            let oracle = swap_chain(&links).unwrap();
            assert!((oracle.psi_plus_weight() - chain_swap(&fidelities).unwrap()).abs() < 1e-10);
            assert!(oracle.off_family_residual() < 1e-12);
        }
    }
}

/// Bit-flip links built by Kraus maps, swapped by Bell measurement, then
/// scored by eigenvalue entropy: a fully independent route to `E(d, n)`.
#[test]
fn one_pair_per_wirelength_from_first_principles() {
    let fresh = DensityMatrix::pure(&BellState::PsiPlus.vector()).unwrap();
    for &d in &[0.05, 0.3, 1.0] {
        let link = apply_bitflip_kraus(&fresh, d).unwrap();
        for n in 1..=6 {
            let chain = swap_chain(&vec![link.clone(); n]).unwrap();
            let oracle_e = 1.0 - von_neumann_entropy(&chain);
            let fast = ResourceRegime::OnePairPerWirelength
                .pair_entanglement(d, n)
                .unwrap()
                .ebits();
            let traveling = ResourceRegime::OnePairTraveling
                .pair_entanglement(d, n)
                .unwrap()
                .ebits();
            assert!((oracle_e.max(0.0) - fast).abs() < 1e-10, "d={d} n={n}");
            assert!((fast - traveling).abs() < 1e-12);

            // the traveling half crossing n Kraus segments gives the same state
            let mut carried = fresh.clone();
            for _ in 0..n {
                carried = apply_bitflip_kraus(&carried, d).unwrap();
            }
            assert!((carried.matrix() - chain.matrix()).camax() < 1e-12);
        }
    }
}

#[test]
fn kraus_family_closed_and_semigroup() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..50 {
        let lambda = rng.gen_range(0.0..=1.0);
        let (a, b) = (rng.gen_range(0.0..4.0), rng.gen_range(0.0..4.0));
        let start = bell_diagonal_density(lambda).unwrap();
        let stepped = apply_bitflip_kraus(&apply_bitflip_kraus(&start, a).unwrap(), b).unwrap();
        let direct = apply_bitflip_kraus(&start, a + b).unwrap();
        assert!((stepped.matrix() - direct.matrix()).camax() < 1e-12);
        assert!(stepped.off_family_residual() < 1e-12);
    }
    let fresh = bell_diagonal_density(1.0).unwrap();
    let out = apply_bitflip_kraus(&fresh, 1.0).unwrap();
    assert!((out.psi_plus_weight() - bitflip_lambda(1.0).unwrap()).abs() < 1e-14);
}

#[test]
fn entropy_matches_binary_entropy() {
    for k in 0..=100 {
        let lambda = k as f64 / 100.0;
        let s = von_neumann_entropy(&bell_diagonal_density(lambda).unwrap());
        assert!((s - binary_entropy(lambda).unwrap()).abs() < 1e-10, "λ={lambda}");
    }
}
