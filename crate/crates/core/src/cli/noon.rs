//! Real NOON superpositions `cos t |N,0⟩± + sin t |0,N⟩±` around the unit
//! circle, their verdicts, and the separable points located by root finding.

use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::StateVector;
use crate::model::{noon_coefficients, pm_ratio, product_state_pm, JcParams};
use crate::separability::{separability_fixed_n, SeparabilityVerdict, Witness};

#[derive(Clone, Debug, PartialEq)]
pub struct NoonPoint {
    pub t: f64,
    pub psi_0: f64,
    pub psi_n: f64,
    /// Amplitude on `|0,N⟩` of the normalized state.
    pub amp_0n: Complex64,
    /// Amplitude on `|1,N-1⟩` of the normalized state.
    pub amp_1n: Complex64,
    pub verdict: SeparabilityVerdict,
}

impl NoonPoint {
    pub fn witness_m(&self) -> Option<u32> {
        match self.verdict.witness {
            Some(Witness::Monomial { m, .. }) => Some(m),
            _ => None,
        }
    }

    /// Distance between `(psi_0, psi_n)` and `(x0, xn)` or its reflection.
    pub fn distance_to(&self, x0: f64, xn: f64) -> f64 {
        let plus = (self.psi_0 - x0).hypot(self.psi_n - xn);
        let minus = (self.psi_0 + x0).hypot(self.psi_n + xn);
        plus.min(minus)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NoonCircle {
    pub total: u32,
    pub samples: Vec<NoonPoint>,
    /// Separable points located between samples, both reflections included.
    pub snapped: Vec<NoonPoint>,
    /// One point per `m = 0..=N` from the closed-form decomposition.
    pub exact: Vec<NoonPoint>,
}

struct Arc<'a> {
    total: u32,
    params: &'a JcParams,
    north: StateVector,
    south: StateVector,
}

impl Arc<'_> {
    fn combination(&self, t: f64) -> Result<StateVector> {
        self.north
            .scale(t.cos().into())
            .add_scaled(&self.south, t.sin().into())
    }

    /// `Re(c / a · e^{-iθ})` for the FB amplitudes `a|0,N⟩ + c|1,N-1⟩`.
    fn ratio(&self, t: f64) -> (f64, f64) {
        let (cos, sin) = (t.cos(), t.sin());
        let n = self.total;
        let a = self.north.amplitude(&[0, n]) * cos + self.south.amplitude(&[0, n]) * sin;
        let c = self.north.amplitude(&[1, n - 1]) * cos + self.south.amplitude(&[1, n - 1]) * sin;
        let rho = c / a * Complex64::from_polar(1.0, -self.params.theta());
        (a.re, rho.re)
    }

    fn point(&self, t: f64) -> Result<NoonPoint> {
        let state = self.combination(t)?.normalized()?;
        let n = self.total;
        Ok(NoonPoint {
            t,
            psi_0: t.cos(),
            psi_n: t.sin(),
            amp_0n: state.amplitude(&[0, n]),
            amp_1n: state.amplitude(&[1, n - 1]),
            verdict: separability_fixed_n(&state, self.params)?,
        })
    }

    fn bisect(&self, mut lo: f64, mut hi: f64, target: f64) -> f64 {
        let g = |t: f64| self.ratio(t).1 - target;
        let lo_sign = g(lo) < 0.0;
        loop {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                return mid;
            }
            let v = g(mid);
            if v == 0.0 {
                return mid;
            }
            if (v < 0.0) == lo_sign {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }
}

/// Samples `samples` equally spaced angles on `[0, 2π)`, then locates every
/// angle where the FB amplitude ratio crosses the ratio of some `|m, N-m⟩±`
/// and keeps the crossings the fixed-`N` test confirms.
pub fn noon_circle(params: &JcParams, total: u32, samples: usize) -> Result<NoonCircle> {
    if total == 0 {
        return Err(Error::InvalidArgument("NOON states need N >= 1".into()));
    }
    if samples == 0 {
        return Err(Error::InvalidArgument("need at least one sample".into()));
    }
    if params.is_decoupled() {
        return Err(Error::InvalidArgument("NOON decomposition needs nonzero coupling".into()));
    }
    let arc = Arc {
        total,
        params,
        north: product_state_pm(total, 0, params, total)?,
        south: product_state_pm(0, total, params, total)?,
    };
    let angles: Vec<f64> = (0..=samples).map(|i| TAU * i as f64 / samples as f64).collect();
    let sampled = angles[..samples].iter().map(|&t| arc.point(t)).collect::<Result<Vec<_>>>()?;

    let targets = (0..=total)
        .map(|m| pm_ratio(m, total - m, params))
        .collect::<Result<Vec<_>>>()?;
    let values: Vec<(f64, f64)> = angles.iter().map(|&t| arc.ratio(t)).collect();
    let mut snapped = Vec::new();
    for i in 0..samples {
        let ((a0, r0), (a1, r1)) = (values[i], values[i + 1]);
        if a0 == 0.0 || a1 == 0.0 || (a0 < 0.0) != (a1 < 0.0) {
            continue;
        }
        for &target in &targets {
            let (g0, g1) = (r0 - target, r1 - target);
            let root = if g0 == 0.0 {
                angles[i]
            } else if g1 != 0.0 && (g0 < 0.0) != (g1 < 0.0) {
                arc.bisect(angles[i], angles[i + 1], target)
            } else {
                continue;
            };
            let seen = snapped.iter().any(|q: &NoonPoint| {
                let d = (q.t - root).abs();
                d.min(TAU - d) < 1e-9
            });
            if seen {
                continue;
            }
            let point = arc.point(root)?;
            if point.verdict.is_separable() {
                snapped.push(point);
            }
        }
    }

    let exact = (0..=total)
        .map(|m| {
            let t = match m {
                0 => FRAC_PI_2,
                _ if m == total => 0.0,
                _ => {
                    let (c_n0, c_0n) = noon_coefficients(m, total - m, params)?;
                    c_0n.atan2(c_n0)
                }
            };
            arc.point(t)
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(NoonCircle {
        total,
        samples: sampled,
        snapped,
        exact,
    })
}
