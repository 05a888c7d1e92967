//! Separability for degrees of freedom restricted by a projector.
//!
//! A pure state is nonentangled when it equals a normalized projected product
//! `P(|x⟩ ⊗ |y⟩)`; for the quasiparticle modes `p±` the same role is played by
//! `(Σ x_m p+†^m)(Σ y_n p-†^n)|vac⟩`. Inside a single excitation sector `N`
//! the only such states are the monomials `|m, N-m⟩±`, which turns the
//! decision into a finite enumeration ([`separability_fixed_n`]). States that
//! span several sectors go through the alternating least-squares search in
//! [`separability_bilinear`], which can certify separability but never
//! entanglement.

mod bilinear;
mod constraint;
mod fixed_n;
mod mixture;

pub use bilinear::{separability_bilinear, BilinearOptions, BilinearTarget, DEFAULT_SEED};
pub use constraint::{angular_momentum_constraint, projected_product, AngularMomentumGrid, Constraint};
pub use fixed_n::{
    eigenstate_factorization_conditions, separability_by_eigen_conditions, separability_fixed_n,
    FactorizationCondition, RATIO_TOL,
};
pub use mixture::{separable_mixture, EnsembleComponent, MixedSeparableEnsemble};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Separable,
    Entangled,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "closed_form_fixed_N")]
    ClosedFormFixedN,
    #[serde(rename = "eigen_condition")]
    EigenCondition,
    #[serde(rename = "bilinear")]
    Bilinear,
}

/// Factors that reproduce a separable state.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    /// `|m, n⟩± ∝ p+†^m p-†^n |vac⟩`.
    Monomial { m: u32, n: u32 },
    /// Coefficient vectors of the left and right factor.
    Factors {
        left: Vec<Complex64>,
        right: Vec<Complex64>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeparabilityVerdict {
    pub status: Status,
    pub method: Method,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub residual: f64,
}

impl SeparabilityVerdict {
    pub fn is_separable(&self) -> bool {
        self.status == Status::Separable
    }

    pub fn to_json(&self) -> crate::Result<String> {
        Ok(serde_json::to_string(self)?)
    }
}
