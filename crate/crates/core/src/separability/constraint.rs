use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{ModeSpec, StateVector};

type KeepFn = dyn Fn(usize, usize) -> bool + Send + Sync;

/// Diagonal 0/1 projector on a product basis `{|i⟩ ⊗ |j⟩}`.
///
/// Product-basis states are stored as [`StateVector`]s over two bosonic modes
/// whose occupations are the basis indices `i` and `j`.
#[derive(Clone)]
pub struct Constraint {
    left_dim: usize,
    right_dim: usize,
    label: String,
    keep: Arc<KeepFn>,
}

impl fmt::Debug for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Constraint")
            .field("label", &self.label)
            .field("left_dim", &self.left_dim)
            .field("right_dim", &self.right_dim)
            .finish()
    }
}

impl Constraint {
    pub fn new<F>(left_dim: usize, right_dim: usize, label: impl Into<String>, keep: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> bool + Send + Sync + 'static,
    {
        if left_dim == 0 || right_dim == 0 {
            return Err(Error::InvalidArgument("constraint dimensions must be positive".into()));
        }
        if u32::try_from(left_dim.max(right_dim)).is_err() {
            return Err(Error::InvalidArgument("constraint dimension too large".into()));
        }
        Ok(Self {
            left_dim,
            right_dim,
            label: label.into(),
            keep: Arc::new(keep),
        })
    }

    /// The identity projector: plain tensor products.
    pub fn all_pass(left_dim: usize, right_dim: usize) -> Result<Self> {
        Self::new(left_dim, right_dim, "identity", |_, _| true)
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn keeps(&self, left: usize, right: usize) -> bool {
        left < self.left_dim && right < self.right_dim && (self.keep)(left, right)
    }

    /// Two bosonic modes with cutoffs `left_dim - 1`, `right_dim - 1`.
    pub fn modes(&self) -> Vec<ModeSpec> {
        vec![
            ModeSpec::bosonic((self.left_dim - 1) as u32),
            ModeSpec::bosonic((self.right_dim - 1) as u32),
        ]
    }

    /// Drops every component outside the kept subspace. The state must live on
    /// two modes whose cutoffs fit inside the constraint dimensions.
    pub fn project(&self, state: &StateVector) -> Result<StateVector> {
        if state.modes().len() != 2 {
            return Err(Error::ModeMismatch);
        }
        let kept = state
            .iter()
            .filter(|(k, _)| {
                let occ = k.occupations();
                self.keeps(occ[0] as usize, occ[1] as usize)
            })
            .map(|(k, a)| (k.occupations().to_vec(), *a));
        StateVector::from_amplitudes(state.modes(), kept)
    }

    /// Unnormalized `P(|x⟩ ⊗ |y⟩)`.
    pub fn project_product(&self, x: &[Complex64], y: &[Complex64]) -> Result<StateVector> {
        if x.len() != self.left_dim {
            return Err(Error::LengthMismatch {
                expected: self.left_dim,
                got: x.len(),
            });
        }
        if y.len() != self.right_dim {
            return Err(Error::LengthMismatch {
                expected: self.right_dim,
                got: y.len(),
            });
        }
        let mut entries = Vec::new();
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                if self.keeps(i, j) {
                    entries.push((vec![i as u32, j as u32], xi * yj));
                }
            }
        }
        StateVector::from_amplitudes(&self.modes(), entries)
    }
}

/// Normalized `P(|x⟩ ⊗ |y⟩)`.
pub fn projected_product(x: &[Complex64], y: &[Complex64], constraint: &Constraint) -> Result<StateVector> {
    let raw = constraint.project_product(x, y)?;
    if raw.is_zero() {
        return Err(Error::ProjectionAnnihilates);
    }
    raw.normalized()
}

/// Index map for total angular momentum `j ∈ {0, 1/2, …, j_max}` (left factor)
/// and projection `m ∈ {-j_max, …, j_max}` in half-integer steps (right factor).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AngularMomentumGrid {
    two_j_max: u32,
}

impl AngularMomentumGrid {
    pub fn new(two_j_max: u32) -> Self {
        Self { two_j_max }
    }

    pub fn two_j_max(&self) -> u32 {
        self.two_j_max
    }

    pub fn left_dim(&self) -> usize {
        self.two_j_max as usize + 1
    }

    pub fn right_dim(&self) -> usize {
        2 * self.two_j_max as usize + 1
    }

    /// Basis index of `j = two_j / 2`.
    pub fn j_index(&self, two_j: u32) -> Result<usize> {
        if two_j > self.two_j_max {
            return Err(Error::InvalidArgument(format!("2j = {two_j} outside grid")));
        }
        Ok(two_j as usize)
    }

    /// Basis index of `m = two_m / 2`.
    pub fn m_index(&self, two_m: i32) -> Result<usize> {
        let max = self.two_j_max as i32;
        if two_m.abs() > max {
            return Err(Error::InvalidArgument(format!("2m = {two_m} outside grid")));
        }
        Ok((two_m + max) as usize)
    }

    /// Keeps `|j, m⟩` exactly when `-j ≤ m ≤ j`.
    pub fn constraint(&self) -> Constraint {
        let offset = self.two_j_max as usize;
        Constraint::new(self.left_dim(), self.right_dim(), "angular-momentum", move |j, m| {
            m.abs_diff(offset) <= j
        })
        .expect("grid dimensions are positive")
    }
}

pub fn angular_momentum_constraint(two_j_max: u32) -> Constraint {
    AngularMomentumGrid::new(two_j_max).constraint()
}
