//! Two-fermion (FF), two-boson (BB) and fermion-boson quasiparticle (FB)
//! pictures side by side, with the truncation projector that carries the BB
//! picture onto the FB one.
//!
//! All three pictures use two modes in the same positional order: the mode
//! that becomes the fermion under truncation first, the free boson second.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{ModeSpec, StateVector};
use crate::model::{fb_modes, product_state_pm, quasiparticle_weights, JcParams, QuasiparticleWeights};
use crate::separability::Constraint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PictureKind {
    #[serde(rename = "FF")]
    FF,
    #[serde(rename = "BB")]
    BB,
    #[serde(rename = "FB_quasi")]
    FbQuasi,
}

impl PictureKind {
    pub const ALL: [PictureKind; 3] = [PictureKind::FF, PictureKind::BB, PictureKind::FbQuasi];

    pub fn label(self) -> &'static str {
        match self {
            PictureKind::FF => "FF",
            PictureKind::BB => "BB",
            PictureKind::FbQuasi => "FB_quasi",
        }
    }

    /// Two modes for this picture; `cutoff` applies to bosonic modes only.
    pub fn modes(self, cutoff: u32) -> Vec<ModeSpec> {
        match self {
            PictureKind::FF => vec![ModeSpec::fermionic(), ModeSpec::fermionic()],
            PictureKind::BB => vec![ModeSpec::bosonic(cutoff), ModeSpec::bosonic(cutoff)],
            PictureKind::FbQuasi => fb_modes(cutoff),
        }
    }
}

impl fmt::Display for PictureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for PictureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "FF" | "ff" => Ok(PictureKind::FF),
            "BB" | "bb" => Ok(PictureKind::BB),
            "FB_quasi" | "FB" | "fb" | "fb_quasi" => Ok(PictureKind::FbQuasi),
            other => Err(Error::InvalidArgument(format!("unknown picture {other:?}"))),
        }
    }
}

fn resonant_params() -> JcParams {
    JcParams::new(1.0, 1.0, Complex64::new(1.0, 0.0)).expect("coupled")
}

/// Balanced `±` creation weights at zero detuning and zero coupling phase.
pub fn plus_minus_modes(kind: PictureKind) -> QuasiparticleWeights {
    let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
    match kind {
        PictureKind::FF | PictureKind::BB => QuasiparticleWeights {
            plus: [h, h],
            minus: [h, -h],
        },
        PictureKind::FbQuasi => quasiparticle_weights(&resonant_params()),
    }
}

fn raise(weights: &QuasiparticleWeights, m: u32, n: u32, modes: &[ModeSpec]) -> Result<StateVector> {
    let mut state = StateVector::vacuum(modes)?;
    for _ in 0..n {
        state = state.apply_mixed_creation(&weights.minus)?;
    }
    for _ in 0..m {
        state = state.apply_mixed_creation(&weights.plus)?;
    }
    Ok(state)
}

/// `±` number state `(m, n)` of the given picture, expanded in its two
/// original modes, normalized and canonically phased.
pub fn pm_number_state(kind: PictureKind, m: u32, n: u32, cutoff: u32) -> Result<StateVector> {
    if kind == PictureKind::FF && (m > 1 || n > 1) {
        return Err(Error::InvalidArgument(format!(
            "fermionic modes hold at most one excitation, got ({m}, {n})"
        )));
    }
    if kind != PictureKind::FF && cutoff < m + n {
        return Err(Error::CutoffTooSmall {
            needed: m + n,
            cutoff,
        });
    }
    raise(&plus_minus_modes(kind), m, n, &kind.modes(cutoff))?
        .normalized()?
        .canonical_phase()
}

/// Amplitudes `⟨s, N-s|m, n⟩±` of the balanced two-boson state
/// `b+†^m b-†^n / √(m! n!) |vac⟩`, for `s = 0..=N`.
pub fn bb_beamsplitter_coeffs(m: u32, n: u32) -> Vec<Complex64> {
    let total = m + n;
    let modes = PictureKind::BB.modes(total);
    let norm: f64 = (1..=m).chain(1..=n).map(f64::from).product::<f64>().sqrt();
    let state = raise(&plus_minus_modes(PictureKind::BB), m, n, &modes)
        .expect("valid mode indices")
        .scale((1.0 / norm).into());
    (0..=total).map(|s| state.amplitude(&[s, total - s])).collect()
}

/// Keeps `|n1, n2⟩` with `n1 ∈ {0, 1}`: the first mode truncated to
/// fermionic occupancy, the second free up to its cutoff.
pub fn truncation_constraint(cutoffs: [u32; 2]) -> Constraint {
    Constraint::new(
        cutoffs[0] as usize + 1,
        cutoffs[1] as usize + 1,
        "truncation",
        |n1, _| n1 <= 1,
    )
    .expect("positive dimensions")
}

/// Builds `|m⟩+ ⊗ |n⟩-` for two bosons under the mode transform of `params`,
/// truncates the first mode to `{0, 1}`, relabels it as the fermion, and
/// returns the distance to `|m, n⟩±` after normalization and canonical phase.
pub fn verify_projection_identity(m: u32, n: u32, params: &JcParams) -> Result<f64> {
    let total = m + n;
    let weights = quasiparticle_weights(params);
    let bb = raise(&weights, m, n, &PictureKind::BB.modes(total))?;
    let projected = truncation_constraint([total, total]).project(&bb)?;
    if projected.is_zero() {
        return Err(Error::ProjectionAnnihilates);
    }
    let as_fb = projected.relabel_modes(&fb_modes(total))?.normalized()?.canonical_phase()?;
    let reference = product_state_pm(m, n, params, total)?;
    as_fb.distance(&reference)
}

/// One row of an expansion table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExpansionRow {
    pub picture: String,
    pub m: u32,
    pub n: u32,
    pub ket: String,
    pub re: f64,
    pub im: f64,
}

pub fn expansion_rows(picture: &str, m: u32, n: u32, state: &StateVector) -> Vec<ExpansionRow> {
    state
        .iter()
        .map(|(k, a)| ExpansionRow {
            picture: picture.to_string(),
            m,
            n,
            ket: k.to_string(),
            re: a.re,
            im: a.im,
        })
        .collect()
}
