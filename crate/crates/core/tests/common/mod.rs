//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::TAU;

use nalgebra::{DMatrix, DVector, Matrix2};
use num_complex::Complex64;
use quasisep::model::fb_modes;
use quasisep::{JcParams, StateVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `|δ| ≤ 5`, `|κ| ∈ [kappa_min, 5]`, `θ ∈ [0, 2π)`.
pub fn random_params(rng: &mut ChaCha8Rng, kappa_min: f64) -> JcParams {
    let omega_b = rng.random_range(0.5..3.0);
    let delta = rng.random_range(-5.0..5.0);
    let kappa = Complex64::from_polar(rng.random_range(kappa_min..5.0), rng.random_range(0.0..TAU));
    JcParams::new(omega_b + delta, omega_b, kappa).unwrap()
}

pub fn factorial(k: u32) -> f64 {
    (1..=k).map(f64::from).product()
}

/// `p+†^m p-†^n |vac⟩` expanded by the binomial theorem, normalized.
pub fn fb_product_closed_form(m: u32, n: u32, p: &JcParams, cutoff: u32) -> StateVector {
    let total = m + n;
    let (phi, beta, theta) = (p.phi(), p.beta(), p.theta());
    let bp = Complex64::from_polar(beta, -theta);
    let bm = -Complex64::from_polar(beta, theta);
    let mut entries = vec![(vec![0, total], bp.powu(m) * phi.powi(n as i32) * factorial(total).sqrt())];
    if total > 0 {
        let mut one = c(0.0, 0.0);
        if m > 0 {
            one += f64::from(m) * phi * bp.powu(m - 1) * phi.powi(n as i32);
        }
        if n > 0 {
            one += f64::from(n) * bm * bp.powu(m) * phi.powi(n as i32 - 1);
        }
        entries.push((vec![1, total - 1], one * factorial(total - 1).sqrt()));
    }
    StateVector::from_amplitudes(&fb_modes(cutoff), entries)
        .unwrap()
        .normalized()
        .unwrap()
}

/// Sector-`N` Hamiltonian in the basis `(|0,N⟩, |1,N-1⟩)`.
pub fn sector_hamiltonian(total: u32, p: &JcParams) -> Matrix2<Complex64> {
    let nf = f64::from(total);
    let coupling = p.kappa() * 0.5 * nf.sqrt();
    Matrix2::new(
        c(nf * p.omega_b(), 0.0),
        coupling.conj(),
        coupling,
        c(p.omega_f() + (nf - 1.0) * p.omega_b(), 0.0),
    )
}

/// Amplitudes `⟨s, N-s|m, n⟩` of `(b1† + b2†)^m (b1† - b2†)^n / √(2^N m! n!)`.
pub fn beamsplitter_oracle(m: u32, n: u32) -> Vec<f64> {
    let total = m + n;
    let binom = |a: u32, b: u32| factorial(a) / (factorial(b) * factorial(a - b));
    let mut poly = vec![0.0; total as usize + 1];
    for i in 0..=m {
        for k in 0..=n {
            let sign = if (n - k) % 2 == 0 { 1.0 } else { -1.0 };
            poly[(i + k) as usize] += binom(m, i) * binom(n, k) * sign;
        }
    }
    let scale = (2f64.powi(total as i32) * factorial(m) * factorial(n)).sqrt();
    (0..=total)
        .map(|s| poly[s as usize] * (factorial(s) * factorial(total - s)).sqrt() / scale)
        .collect()
}

/// Singular values of a dense complex matrix, descending.
pub fn singular_values(a: &DMatrix<Complex64>) -> Vec<f64> {
    let mut s: Vec<f64> = a.clone().svd(false, false).singular_values.iter().copied().collect();
    s.sort_by(|x, y| y.partial_cmp(x).unwrap());
    s
}

pub fn random_complex_vector(rng: &mut ChaCha8Rng, len: usize) -> DVector<Complex64> {
    DVector::from_fn(len, |_, _| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
}

/// Random unitary from the QR factor of a complex matrix.
pub fn random_unitary(rng: &mut ChaCha8Rng, dim: usize) -> DMatrix<Complex64> {
    let a = DMatrix::from_fn(dim, dim, |_, _| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
    a.qr().q()
}
