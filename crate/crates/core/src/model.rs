//! Coupled fermion-boson model: parameters, spectrum, dressed eigenstates and
//! quasiparticle product states.
//!
//! The Hamiltonian (in units of ħ) is
//! `ω_F f†f + ω_B b†b + (κ/2) f†b + (κ*/2) b†f`, diagonalized by the SU(2)
//! mode transform
//!
//! ```text
//! p+ =  φ f + β e^{iθ} b
//! p- = -β e^{-iθ} f + φ b
//! ```
//!
//! Inside the `N`-excitation sector the state space is spanned by `|0,N⟩` and
//! `|1,N-1⟩` (fermion occupation first), so every quasiparticle product state
//! `p+†^m p-†^n |vac⟩` with `m + n = N` lies in a two-dimensional space.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{ModeSpec, StateVector};

/// Model parameters together with the derived transform scalars.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JcParams {
    omega_f: f64,
    omega_b: f64,
    kappa: Complex64,
    omega: f64,
    delta: f64,
    theta: f64,
    rabi: f64,
    phi: f64,
    beta: f64,
}

/// `√((Δ+δ)/(2Δ))`, `√((Δ-δ)/(2Δ))` with `Δ = hypot(δ, c)`, evaluated so the
/// smaller of the two never comes from a cancelling difference.
fn mixing_angles(delta: f64, coupling: f64) -> (f64, f64, f64) {
    let rabi = delta.hypot(coupling);
    if delta == 0.0 {
        return (rabi, FRAC_1_SQRT_2, FRAC_1_SQRT_2);
    }
    if delta > 0.0 {
        let phi = ((rabi + delta) / (2.0 * rabi)).sqrt();
        let beta = coupling / (2.0 * rabi * (rabi + delta)).sqrt();
        (rabi, phi, beta)
    } else {
        let beta = ((rabi - delta) / (2.0 * rabi)).sqrt();
        let phi = coupling / (2.0 * rabi * (rabi - delta)).sqrt();
        (rabi, phi, beta)
    }
}

impl JcParams {
    /// Rejects the degenerate point `ω_F = ω_B`, `κ = 0`. For `κ = 0` the
    /// coupling phase is taken as zero.
    pub fn new(omega_f: f64, omega_b: f64, kappa: Complex64) -> Result<Self> {
        if !(omega_f.is_finite() && omega_b.is_finite() && kappa.re.is_finite() && kappa.im.is_finite())
        {
            return Err(Error::InvalidArgument("parameters must be finite".into()));
        }
        let delta = omega_f - omega_b;
        let coupling = kappa.norm();
        if delta == 0.0 && coupling == 0.0 {
            return Err(Error::DegenerateParams);
        }
        let theta = if coupling == 0.0 { 0.0 } else { kappa.arg() };
        let (rabi, phi, beta) = mixing_angles(delta, coupling);
        Ok(Self {
            omega_f,
            omega_b,
            kappa,
            omega: omega_f + omega_b,
            delta,
            theta,
            rabi,
            phi,
            beta,
        })
    }

    pub fn omega_f(&self) -> f64 {
        self.omega_f
    }

    pub fn omega_b(&self) -> f64 {
        self.omega_b
    }

    pub fn kappa(&self) -> Complex64 {
        self.kappa
    }

    /// `ω_F + ω_B`.
    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Detuning `ω_F - ω_B`.
    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// Phase of the coupling, `κ = |κ| e^{iθ}`.
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Single-excitation splitting `√(δ² + |κ|²)`.
    pub fn rabi(&self) -> f64 {
        self.rabi
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// True when the quasiparticle modes coincide with the bare modes.
    pub fn is_decoupled(&self) -> bool {
        self.phi * self.beta == 0.0
    }

    /// Mixing scalars of the `N`-excitation sector.
    pub fn indexed(&self, n: u32) -> IndexedParams {
        let coupling = f64::from(n).sqrt() * self.kappa.norm();
        let (rabi, phi, beta) = mixing_angles(self.delta, coupling);
        IndexedParams { n, rabi, phi, beta }
    }
}

/// Sector-`N` splitting `Δ_N = √(δ² + N|κ|²)` and its mixing angles.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IndexedParams {
    pub n: u32,
    pub rabi: f64,
    pub phi: f64,
    pub beta: f64,
}

/// Quasiparticle band energies in units of ħ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnergyPair {
    pub e_plus: f64,
    pub e_minus: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub const BOTH: [Branch; 2] = [Branch::Plus, Branch::Minus];

    fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Plus => "+",
            Branch::Minus => "-",
        })
    }
}

/// Creation weights over `(f†, b†)` for `p+†` and `p-†`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuasiparticleWeights {
    pub plus: [Complex64; 2],
    pub minus: [Complex64; 2],
}

/// Default boson cutoff for sector-`n` work, leaving headroom above `n`.
pub fn default_cutoff(n: u32) -> u32 {
    (2 * n).max(8)
}

/// Mode list `[fermion, boson(cutoff)]`.
pub fn fb_modes(cutoff: u32) -> Vec<ModeSpec> {
    vec![ModeSpec::fermionic(), ModeSpec::bosonic(cutoff)]
}

pub fn energy_bands(params: &JcParams) -> EnergyPair {
    EnergyPair {
        e_plus: 0.5 * (params.omega + params.rabi),
        e_minus: 0.5 * (params.omega - params.rabi),
    }
}

pub fn quasiparticle_weights(params: &JcParams) -> QuasiparticleWeights {
    let (phi, beta, theta) = (params.phi, params.beta, params.theta);
    QuasiparticleWeights {
        plus: [Complex64::new(phi, 0.0), Complex64::from_polar(beta, -theta)],
        minus: [Complex64::from_polar(-beta, theta), Complex64::new(phi, 0.0)],
    }
}

fn check_fb_modes(modes: &[ModeSpec]) -> Result<u32> {
    match modes {
        [f, b] if f.is_fermionic() && !b.is_fermionic() => Ok(b.cutoff()),
        _ => Err(Error::ModeMismatch),
    }
}

fn check_cutoff(needed: u32, cutoff: u32) -> Result<()> {
    if cutoff < needed {
        return Err(Error::CutoffTooSmall { needed, cutoff });
    }
    Ok(())
}

/// `H|state⟩` in units of ħ. Every ket must satisfy `total ≤ cutoff` so the
/// `b†f` term is never truncated.
pub fn hamiltonian_apply(state: &StateVector, params: &JcParams) -> Result<StateVector> {
    let cutoff = check_fb_modes(state.modes())?;
    if let Some((ket, _)) = state.iter().find(|(k, _)| k.total() > cutoff) {
        return Err(Error::CutoffTooSmall {
            needed: ket.total(),
            cutoff,
        });
    }
    let f_number = state.apply_annihilation(0)?.apply_creation(0)?;
    let b_number = state.apply_annihilation(1)?.apply_creation(1)?;
    let f_raise = state.apply_annihilation(1)?.apply_creation(0)?;
    let b_raise = state.apply_annihilation(0)?.apply_creation(1)?;
    let half = 0.5 * params.kappa;
    f_number
        .scale(params.omega_f.into())
        .add_scaled(&b_number, params.omega_b.into())?
        .add_scaled(&f_raise, half)?
        .add_scaled(&b_raise, half.conj())
}

/// Normalized dressed state of the `n`-excitation sector.
pub fn eigenstate(n: u32, branch: Branch, params: &JcParams, cutoff: u32) -> Result<StateVector> {
    if n == 0 {
        return Err(Error::InvalidArgument("excitation number must be positive".into()));
    }
    check_cutoff(n, cutoff)?;
    let ix = params.indexed(n);
    let phase = Complex64::from_polar(1.0, params.theta);
    let (bare, dressed) = match branch {
        Branch::Plus => (Complex64::new(ix.beta, 0.0), phase * ix.phi),
        Branch::Minus => (Complex64::new(ix.phi, 0.0), -phase * ix.beta),
    };
    StateVector::from_amplitudes(&fb_modes(cutoff), [(vec![0, n], bare), (vec![1, n - 1], dressed)])
}

/// `(NΩ - Nδ + δ ± Δ_N)/2` in units of ħ.
pub fn eigenenergy(n: u32, branch: Branch, params: &JcParams) -> f64 {
    let nf = f64::from(n);
    let rabi_n = params.indexed(n).rabi;
    0.5 * (nf * params.omega - nf * params.delta + params.delta + branch.sign() * rabi_n)
}

/// `p+†^m p-†^n |vac⟩` by operator application, normalized and canonically
/// phased. Exact when `cutoff ≥ m + n`.
pub fn product_state_pm(m: u32, n: u32, params: &JcParams, cutoff: u32) -> Result<StateVector> {
    check_cutoff(m + n, cutoff)?;
    let w = quasiparticle_weights(params);
    let mut state = StateVector::vacuum(&fb_modes(cutoff))?;
    for _ in 0..n {
        state = state.apply_mixed_creation(&w.minus)?;
    }
    for _ in 0..m {
        state = state.apply_mixed_creation(&w.plus)?;
    }
    state.normalized()?.canonical_phase()
}

/// Real ratio `(mφ² - nβ²)/(φβ√N)`: the `|1,N-1⟩ / |0,N⟩` amplitude ratio of
/// `|m,n⟩±` with the coupling phase `e^{iθ}` stripped.
pub fn pm_ratio(m: u32, n: u32, params: &JcParams) -> Result<f64> {
    let total = m + n;
    if total == 0 {
        return Err(Error::InvalidArgument("ratio undefined for the vacuum".into()));
    }
    if params.is_decoupled() {
        return Err(Error::InvalidArgument("ratio undefined at zero coupling".into()));
    }
    let (phi, beta) = (params.phi, params.beta);
    let num = f64::from(m) * phi * phi - f64::from(n) * beta * beta;
    Ok(num / (phi * beta * f64::from(total).sqrt()))
}

/// Coefficients `(c_N0, c_0N)` with `|m,n⟩± = c_N0 |N,0⟩± + c_0N |0,N⟩±`,
/// `N = m + n`, all three states in canonical phase.
pub fn noon_coefficients(m: u32, n: u32, params: &JcParams) -> Result<(f64, f64)> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "decomposition needs m, n >= 1, got ({m}, {n})"
        )));
    }
    if params.is_decoupled() {
        return Err(Error::InvalidArgument("no quasiparticle mixing at zero coupling".into()));
    }
    let (mf, nf) = (f64::from(m), f64::from(n));
    let total = mf + nf;
    let (p2, b2) = (params.phi.powi(2), params.beta.powi(2));
    let cross = total * p2 * b2;
    let denom = cross + (mf * p2 - nf * b2).powi(2);
    let c_n0 = mf / total * ((cross + total * total * p2 * p2) / denom).sqrt();
    let c_0n = nf / total * ((cross + total * total * b2 * b2) / denom).sqrt();
    Ok((c_n0, c_0n))
}
