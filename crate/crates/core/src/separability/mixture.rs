use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::constraint::{projected_product, Constraint};
use crate::error::{Error, Result};
use crate::fock::{BasisKet, StateVector};

const WEIGHT_SUM_TOL: f64 = 1e-12;

/// One pure separable term of a mixture.
#[derive(Clone, Debug, PartialEq)]
pub struct EnsembleComponent {
    pub weight: f64,
    /// Local factor coefficients the state was built from (two for a
    /// bipartite projected product, one per output mode for multimode states).
    pub factors: Vec<Vec<Complex64>>,
    pub state: StateVector,
}

/// Discrete mixture `Σ_k w_k |ψ_k⟩⟨ψ_k|` of normalized separable states.
#[derive(Clone, Debug, PartialEq)]
pub struct MixedSeparableEnsemble {
    components: Vec<EnsembleComponent>,
}

impl MixedSeparableEnsemble {
    pub fn new(components: Vec<EnsembleComponent>) -> Result<Self> {
        let first = components
            .first()
            .ok_or_else(|| Error::InvalidWeights("ensemble is empty".into()))?;
        let mut sum = 0.0;
        for c in &components {
            if !(c.weight >= 0.0) || !c.weight.is_finite() {
                return Err(Error::InvalidWeights(format!("weight {} is not a probability", c.weight)));
            }
            if c.state.modes() != first.state.modes() {
                return Err(Error::ModeMismatch);
            }
            if !c.state.is_normalized() {
                return Err(Error::InvalidArgument("ensemble states must be normalized".into()));
            }
            sum += c.weight;
        }
        if (sum - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(Error::InvalidWeights(format!("weights sum to {sum}")));
        }
        Ok(Self { components })
    }

    pub fn components(&self) -> &[EnsembleComponent] {
        &self.components
    }

    /// Dense density matrix over the union of supported kets (lexicographic).
    pub fn density_matrix(&self) -> (Vec<BasisKet>, DMatrix<Complex64>) {
        let mut index = BTreeMap::new();
        for c in &self.components {
            for (k, _) in c.state.iter() {
                index.entry(k.clone()).or_insert(0usize);
            }
        }
        for (i, slot) in index.values_mut().enumerate() {
            *slot = i;
        }
        let dim = index.len();
        let mut rho = DMatrix::zeros(dim, dim);
        for c in &self.components {
            let entries: Vec<(usize, Complex64)> = c.state.iter().map(|(k, a)| (index[k], *a)).collect();
            for &(i, ai) in &entries {
                for &(j, aj) in &entries {
                    rho[(i, j)] += ai * aj.conj() * c.weight;
                }
            }
        }
        (index.into_keys().collect(), rho)
    }
}

/// Mixture of normalized projected products `P(|x_k⟩ ⊗ |y_k⟩)`.
pub fn separable_mixture(
    components: &[(f64, Vec<Complex64>, Vec<Complex64>)],
    constraint: &Constraint,
) -> Result<MixedSeparableEnsemble> {
    let built = components
        .iter()
        .map(|(w, x, y)| {
            Ok(EnsembleComponent {
                weight: *w,
                factors: vec![x.clone(), y.clone()],
                state: projected_product(x, y, constraint)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    MixedSeparableEnsemble::new(built)
}
