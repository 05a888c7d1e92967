//! Linear transforms of `2M` modes `(f_1..f_M, b_1..b_M)` into output modes
//! `(p+_1..p+_M, p-_1..p-_M)`, and product states built from polynomials in the
//! output creation operators.
//!
//! Output operators are formal linear combinations; the matrix need not be
//! unitary, and nothing is assumed about their mutual (anti)commutators.
//! Products are taken in the fixed order `(+,1) … (+,M) (-,1) … (-,M)` read
//! left to right, so the `(-,M)` factor acts on the vacuum first.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{ModeSpec, StateVector};
use crate::model::{quasiparticle_weights, Branch, JcParams};
use crate::separability::{EnsembleComponent, MixedSeparableEnsemble};

const UNITARY_TOL: f64 = 1e-10;

/// `2M × 2M` complex mode transform with blocks `[[U+F, U+B], [U-F, U-B]]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ModeMatrixFile", into = "ModeMatrixFile")]
pub struct ModeMatrix {
    m: usize,
    entries: DMatrix<Complex64>,
    is_unitary: bool,
}

#[derive(Serialize, Deserialize)]
struct ModeMatrixFile {
    m: usize,
    entries: Vec<Complex64>,
}

impl TryFrom<ModeMatrixFile> for ModeMatrix {
    type Error = Error;

    fn try_from(file: ModeMatrixFile) -> Result<Self> {
        ModeMatrix::from_row_major(file.m, file.entries)
    }
}

impl From<ModeMatrix> for ModeMatrixFile {
    fn from(matrix: ModeMatrix) -> Self {
        let dim = 2 * matrix.m;
        let entries = (0..dim)
            .flat_map(|r| (0..dim).map(move |c| (r, c)))
            .map(|rc| matrix.entries[rc])
            .collect();
        ModeMatrixFile { m: matrix.m, entries }
    }
}

impl ModeMatrix {
    pub fn new(entries: DMatrix<Complex64>) -> Result<Self> {
        let (rows, cols) = entries.shape();
        if rows != cols || rows == 0 || rows % 2 != 0 {
            return Err(Error::InvalidArgument(format!(
                "mode matrix must be square with even positive dimension, got {rows}x{cols}"
            )));
        }
        if let Some(r) = (0..rows).find(|&r| entries.row(r).iter().all(|z| z.norm() == 0.0)) {
            return Err(Error::InvalidArgument(format!("row {r} of the mode matrix is zero")));
        }
        let gram = &entries * entries.adjoint();
        let deviation = (gram - DMatrix::identity(rows, rows)).iter().map(|z| z.norm()).fold(0.0, f64::max);
        Ok(Self {
            m: rows / 2,
            entries,
            is_unitary: deviation <= UNITARY_TOL,
        })
    }

    pub fn from_row_major(m: usize, entries: Vec<Complex64>) -> Result<Self> {
        let dim = 2 * m;
        if entries.len() != dim * dim {
            return Err(Error::LengthMismatch {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        Self::new(DMatrix::from_row_slice(dim, dim, &entries))
    }

    pub fn identity(m: usize) -> Result<Self> {
        Self::new(DMatrix::identity(2 * m, 2 * m))
    }

    /// Single fermion-boson pair transformed into the quasiparticle modes.
    pub fn quasiparticle(params: &JcParams) -> Self {
        let w = quasiparticle_weights(params);
        let rows = [w.plus, w.minus];
        Self::new(DMatrix::from_fn(2, 2, |r, c| rows[r][c].conj())).expect("SU(2) matrix")
    }

    /// Number of fermion (and of boson) modes.
    pub fn modes_per_block(&self) -> usize {
        self.m
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn is_unitary(&self) -> bool {
        self.is_unitary
    }

    fn row_index(&self, sign: Branch, j: usize) -> Result<usize> {
        if j == 0 || j > self.m {
            return Err(Error::ModeIndex { index: j, len: self.m });
        }
        Ok(match sign {
            Branch::Plus => j - 1,
            Branch::Minus => self.m + j - 1,
        })
    }

    /// Creation weights of `p_{sign,j}†` over the input creation operators
    /// (the conjugated matrix row). `j` is one-based.
    pub fn output_mode_weights(&self, sign: Branch, j: usize) -> Result<Vec<Complex64>> {
        let r = self.row_index(sign, j)?;
        Ok(self.entries.row(r).iter().map(Complex64::conj).collect())
    }
}

/// Polynomial coefficients `x̃^{(s,j)}_k` per output mode, ordered
/// `(+,1) … (+,M) (-,1) … (-,M)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "FactorSpecFile")]
pub struct FactorSpec {
    factors: Vec<Vec<Complex64>>,
}

#[derive(Deserialize)]
struct FactorSpecFile {
    factors: Vec<Vec<Complex64>>,
}

impl TryFrom<FactorSpecFile> for FactorSpec {
    type Error = Error;

    fn try_from(file: FactorSpecFile) -> Result<Self> {
        FactorSpec::new(file.factors)
    }
}

impl FactorSpec {
    pub fn new(factors: Vec<Vec<Complex64>>) -> Result<Self> {
        if factors.is_empty() || factors.len() % 2 != 0 {
            return Err(Error::InvalidArgument(format!(
                "need an even, positive number of factors, got {}",
                factors.len()
            )));
        }
        if let Some(i) = factors.iter().position(|f| f.iter().all(|z| z.norm() == 0.0)) {
            return Err(Error::InvalidArgument(format!("factor {i} has no nonzero coefficient")));
        }
        Ok(Self { factors })
    }

    /// One monomial `p†^k` per output mode.
    pub fn monomials(powers: &[u32]) -> Result<Self> {
        Self::new(
            powers
                .iter()
                .map(|&k| {
                    let mut c = vec![Complex64::new(0.0, 0.0); k as usize + 1];
                    c[k as usize] = Complex64::new(1.0, 0.0);
                    c
                })
                .collect(),
        )
    }

    pub fn factors(&self) -> &[Vec<Complex64>] {
        &self.factors
    }

    /// Highest power over all factors.
    pub fn max_degree(&self) -> usize {
        self.factors.iter().map(|f| f.len().saturating_sub(1)).max().unwrap_or(0)
    }
}

/// `Π_{s,j} (Σ_k x̃_k p_{s,j}†^k) |vac⟩`, normalized and canonically phased.
pub fn multimode_product_state(spec: &FactorSpec, matrix: &ModeMatrix, modes: &[ModeSpec]) -> Result<StateVector> {
    let dim = 2 * matrix.modes_per_block();
    if modes.len() != dim {
        return Err(Error::LengthMismatch {
            expected: dim,
            got: modes.len(),
        });
    }
    if spec.factors.len() != dim {
        return Err(Error::LengthMismatch {
            expected: dim,
            got: spec.factors.len(),
        });
    }
    let m = matrix.modes_per_block();
    let outputs: Vec<(Branch, usize)> = (1..=m)
        .map(|j| (Branch::Plus, j))
        .chain((1..=m).map(|j| (Branch::Minus, j)))
        .collect();
    let mut state = StateVector::vacuum(modes)?;
    for (&(sign, j), coefficients) in outputs.iter().zip(&spec.factors).rev() {
        let weights = matrix.output_mode_weights(sign, j)?;
        state = state.apply_creation_polynomial(&weights, coefficients)?;
    }
    state.normalized()?.canonical_phase()
}

/// Discrete mixture of multimode product states.
pub fn multimode_separable_mixture(
    components: &[(f64, FactorSpec)],
    matrix: &ModeMatrix,
    modes: &[ModeSpec],
) -> Result<MixedSeparableEnsemble> {
    let built = components
        .iter()
        .map(|(w, spec)| {
            Ok(EnsembleComponent {
                weight: *w,
                factors: spec.factors.clone(),
                state: multimode_product_state(spec, matrix, modes)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    MixedSeparableEnsemble::new(built)
}
