//! Brute-force density-matrix reference for the scalar formulas.
//!
//! Everything here works on explicit complex matrices: Kraus maps for the
//! bit-flip channel, a projective Bell measurement for swapping, and an
//! eigendecomposition for the von Neumann entropy. None of it calls into the
//! fidelity arithmetic of [`crate::entanglement`] or [`crate::channels`], so
//! agreement between the two is a real check.
//!
//! Qubit ordering is big-endian: in a two-qubit state `|q₀q₁⟩` has index
//! `2q₀ + q₁`, and the second qubit is the one that travels through channels.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use crate::{Error, Result};

const STATE_TOLERANCE: f64 = 1e-10;
/// Eigenvalues at or below this are treated as exact zeros.
const EIGEN_FLOOR: f64 = 1e-12;

type CMatrix = DMatrix<Complex64>;
type CVector = DVector<Complex64>;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BellState {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellState {
    pub const ALL: [BellState; 4] = [
        BellState::PhiPlus,
        BellState::PsiPlus,
        BellState::PsiMinus,
        BellState::PhiMinus,
    ];

    pub fn vector(self) -> CVector {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let amps = match self {
            BellState::PhiPlus => [s, 0.0, 0.0, s],
            BellState::PhiMinus => [s, 0.0, 0.0, -s],
            BellState::PsiPlus => [0.0, s, s, 0.0],
            BellState::PsiMinus => [0.0, s, -s, 0.0],
        };
        CVector::from_iterator(4, amps.into_iter().map(c))
    }

    pub fn projector(self) -> CMatrix {
        let v = self.vector();
        &v * v.adjoint()
    }
}

/// The single-qubit Paulis `I, X, Y, Z`.
fn pauli(index: usize) -> CMatrix {
    let (o, l, i) = (c(0.0), c(1.0), Complex64::i());
    let entries = match index {
        0 => [l, o, o, l],
        1 => [o, l, l, o],
        2 => [o, -i, i, o],
        3 => [l, o, o, -l],
        _ => unreachable!("Pauli index {index}"),
    };
    CMatrix::from_row_slice(2, 2, &entries)
}

fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// A validated density matrix: Hermitian, unit trace and positive
/// semidefinite, each to within `1e-10`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: CMatrix,
}

impl DensityMatrix {
    pub fn new(matrix: CMatrix) -> Result<Self> {
        let dim = matrix.nrows();
        if dim == 0 || matrix.ncols() != dim || !dim.is_power_of_two() {
            return Err(Error::InvalidState(format!(
                "expected a square qubit-register matrix, got {}×{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        if matrix.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidState("non-finite entry".into()));
        }
        let skew = (&matrix - matrix.adjoint()).camax();
        if skew > STATE_TOLERANCE {
            return Err(Error::InvalidState(format!("not Hermitian (deviation {skew:e})")));
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > STATE_TOLERANCE || trace.im.abs() > STATE_TOLERANCE {
            return Err(Error::InvalidState(format!("trace {trace} is not 1")));
        }
        let state = Self { matrix };
        let lowest = state.eigenvalues().into_iter().fold(f64::INFINITY, f64::min);
        if lowest < -STATE_TOLERANCE {
            return Err(Error::InvalidState(format!(
                "negative eigenvalue {lowest:e}"
            )));
        }
        Ok(state)
    }

    pub fn pure(vector: &CVector) -> Result<Self> {
        Self::new(vector * vector.adjoint())
    }

    pub fn dimension(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// Eigenvalues of the Hermitian part, unsorted.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let hermitian = (&self.matrix + self.matrix.adjoint()).scale(0.5);
        SymmetricEigen::new(hermitian).eigenvalues.iter().copied().collect()
    }

    /// `⟨ψ|ρ|ψ⟩`.
    pub fn overlap(&self, vector: &CVector) -> f64 {
        (vector.adjoint() * &self.matrix * vector)[(0, 0)].re
    }

    /// Weight on `|ψ+⟩` for a two-qubit state.
    pub fn psi_plus_weight(&self) -> f64 {
        self.overlap(&BellState::PsiPlus.vector())
    }

    /// Largest entry of `ρ − ⟨ψ+|ρ|ψ+⟩P_ψ+ − ⟨φ+|ρ|φ+⟩P_φ+`: zero exactly when
    /// the state is a mixture of `|ψ+⟩` and `|φ+⟩` alone.
    pub fn off_family_residual(&self) -> f64 {
        let psi = BellState::PsiPlus;
        let phi = BellState::PhiPlus;
        let family = psi.projector().scale(self.overlap(&psi.vector()))
            + phi.projector().scale(self.overlap(&phi.vector()));
        (&self.matrix - family).camax()
    }

    fn two_qubit(&self) -> Result<()> {
        if self.dimension() == 4 {
            Ok(())
        } else {
            Err(Error::InvalidState(format!(
                "expected a two-qubit state, got dimension {}",
                self.dimension()
            )))
        }
    }
}

/// `λ|ψ+⟩⟨ψ+| + (1 − λ)|φ+⟩⟨φ+|`.
pub fn bell_diagonal_density(lambda: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::OutOfUnitRange {
            name: "lambda",
            value: lambda,
        });
    }
    DensityMatrix::new(
        BellState::PsiPlus.projector().scale(lambda)
            + BellState::PhiPlus.projector().scale(1.0 - lambda),
    )
}

/// Kraus pair `{√q·I, √(1−q)·X}` on the second qubit, `q = (1 + e^{-d})/2`.
pub fn apply_bitflip_kraus(state: &DensityMatrix, d: f64) -> Result<DensityMatrix> {
    state.two_qubit()?;
    if !(d >= 0.0) {
        return Err(Error::InvalidLength(d));
    }
    let keep = 0.5 * (1.0 + (-d).exp());
    let id = pauli(0);
    let kraus = [
        kron(&id, &id).scale(keep.sqrt()),
        kron(&id, &pauli(1)).scale((1.0 - keep).sqrt()),
    ];
    let out = kraus
        .iter()
        .fold(CMatrix::zeros(4, 4), |acc, k| acc + k * state.matrix() * k.adjoint());
    DensityMatrix::new(out)
}

/// One branch of a Bell measurement on the two middle qubits.
#[derive(Debug, Clone)]
pub struct SwapBranch {
    pub outcome: BellState,
    pub probability: f64,
    /// Normalized, Pauli-corrected state of the outer qubits; `None` when the
    /// branch has zero probability.
    pub corrected: Option<DensityMatrix>,
}

/// Pauli on the outer qubit that returns outcome `(I ⊗ σ)|φ+⟩` to the `|ψ+⟩`
/// reference frame: `σᵀX`.
fn correction(sigma: usize) -> CMatrix {
    pauli(sigma).transpose() * pauli(1)
}

/// Pauli index `σ` with `(I ⊗ σ)|φ+⟩ ∝ outcome`.
fn outcome_pauli(outcome: BellState) -> usize {
    match outcome {
        BellState::PhiPlus => 0,
        BellState::PsiPlus => 1,
        BellState::PsiMinus => 2,
        BellState::PhiMinus => 3,
    }
}

/// Swaps `pair_ab` (qubits A, B₁) with `pair_bc` (qubits B₂, C) and returns
/// every measurement branch.
pub fn swap_branches(pair_ab: &DensityMatrix, pair_bc: &DensityMatrix) -> Result<Vec<SwapBranch>> {
    pair_ab.two_qubit()?;
    pair_bc.two_qubit()?;
    // a product of valid states is valid, no need to re-check the 16×16 joint
    let joint = kron(pair_ab.matrix(), pair_bc.matrix());
    let id = pauli(0);

    BellState::ALL
        .into_iter()
        .map(|outcome| {
            // I_A ⊗ ⟨β|_{B₁B₂} ⊗ I_C as a 4×16 map, index a·8 + b₁·4 + b₂·2 + c
            let beta = outcome.vector();
            let mut project = CMatrix::zeros(4, 16);
            for a in 0..2 {
                for cq in 0..2 {
                    for b in 0..4 {
                        project[(a * 2 + cq, a * 8 + b * 2 + cq)] = beta[b].conj();
                    }
                }
            }
            let branch = &project * &joint * project.adjoint();
            let probability = branch.trace().re;
            let corrected = if probability > EIGEN_FLOOR {
                let fix = kron(&id, &correction(outcome_pauli(outcome)));
                let state = (&fix * branch * fix.adjoint()).unscale(probability);
                Some(DensityMatrix::new(state)?)
            } else {
                None
            };
            Ok(SwapBranch {
                outcome,
                probability,
                corrected,
            })
        })
        .collect()
}

/// Outcome-averaged swapped state of the outer qubits.
pub fn swap_via_bell_measurement(
    pair_ab: &DensityMatrix,
    pair_bc: &DensityMatrix,
) -> Result<DensityMatrix> {
    let mixed = swap_branches(pair_ab, pair_bc)?
        .into_iter()
        .filter_map(|b| b.corrected.map(|s| s.matrix.scale(b.probability)))
        .fold(CMatrix::zeros(4, 4), |acc, m| acc + m);
    DensityMatrix::new(mixed)
}

/// Left-to-right swapping along a chain of two-qubit states.
pub fn swap_chain(links: &[DensityMatrix]) -> Result<DensityMatrix> {
    let (first, rest) = links.split_first().ok_or(Error::EmptyChain)?;
    rest.iter()
        .try_fold(first.clone(), |acc, link| swap_via_bell_measurement(&acc, link))
}

/// `−Σ μ log₂ μ` over eigenvalues above the numerical floor.
pub fn von_neumann_entropy(state: &DensityMatrix) -> f64 {
    state
        .eigenvalues()
        .into_iter()
        .filter(|&mu| mu > EIGEN_FLOOR)
        .map(|mu| -mu * mu.log2())
        .sum()
}
