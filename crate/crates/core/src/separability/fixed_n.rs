use num_complex::Complex64;

use super::{Method, SeparabilityVerdict, Status, Witness};
use crate::error::{Error, Result};
use crate::fock::StateVector;
use crate::model::{eigenstate, pm_ratio, product_state_pm, Branch, JcParams};

/// Relative tolerance when matching amplitude ratios.
pub const RATIO_TOL: f64 = 1e-9;

/// Overlap tolerance used to recognise a dressed eigenstate.
const EIGEN_MATCH_TOL: f64 = 1e-9;

fn ratio_matches(value: f64, target: f64) -> bool {
    (value - target).abs() <= RATIO_TOL * (1.0 + target.abs())
}

fn fb_sector(state: &StateVector) -> Result<u32> {
    match state.modes() {
        [f, b] if f.is_fermionic() && !b.is_fermionic() => state.single_sector(),
        _ => Err(Error::ModeMismatch),
    }
}

/// Smallest phase-insensitive distance between `state` and any `|m, N-m⟩±`.
fn nearest_product(state: &StateVector, total: u32, params: &JcParams) -> Result<(f64, Option<(u32, u32)>)> {
    let unit = state.normalized()?;
    let cutoff = state.modes()[1].cutoff();
    let mut best = (f64::INFINITY, None);
    for m in 0..=total {
        let Ok(candidate) = product_state_pm(m, total - m, params, cutoff) else {
            continue;
        };
        let d = unit.distance_up_to_phase(&candidate)?;
        if d < best.0 {
            best = (d, Some((m, total - m)));
        }
    }
    Ok(best)
}

/// Which monomial, if any, matches a sector-`total` state `a|0,N⟩ + c|1,N-1⟩`.
fn matching_monomial(a: Complex64, c: Complex64, total: u32, params: &JcParams) -> Result<Option<(u32, u32)>> {
    let zero = Complex64::new(0.0, 0.0);
    if params.is_decoupled() {
        // p± coincide with the bare modes; only the two sector kets factorize.
        let fermion_in_plus = params.phi() == 1.0;
        return Ok(match (a != zero, c != zero) {
            (true, false) if fermion_in_plus => Some((0, total)),
            (true, false) => Some((total, 0)),
            (false, true) if fermion_in_plus => Some((1, total - 1)),
            (false, true) => Some((total - 1, 1)),
            _ => None,
        });
    }
    if a == zero {
        return Ok(None);
    }
    let ratio = c / a * Complex64::from_polar(1.0, -params.theta());
    let scale = 1.0 + ratio.re.abs();
    if ratio.im.abs() > RATIO_TOL * scale {
        return Ok(None);
    }
    for m in 0..=total {
        if ratio_matches(ratio.re, pm_ratio(m, total - m, params)?) {
            return Ok(Some((m, total - m)));
        }
    }
    Ok(None)
}

/// Exact test for states confined to one excitation sector of the
/// `[fermion, boson]` system.
pub fn separability_fixed_n(state: &StateVector, params: &JcParams) -> Result<SeparabilityVerdict> {
    let total = fb_sector(state)?;
    if total == 0 {
        return Ok(SeparabilityVerdict {
            status: Status::Separable,
            method: Method::ClosedFormFixedN,
            witness: Some(Witness::Monomial { m: 0, n: 0 }),
            residual: 0.0,
        });
    }
    let a = state.amplitude(&[0, total]);
    let c = state.amplitude(&[1, total - 1]);
    let (nearest, _) = nearest_product(state, total, params)?;
    Ok(match matching_monomial(a, c, total, params)? {
        Some((m, n)) => {
            let unit = state.normalized()?;
            let rebuilt = product_state_pm(m, n, params, state.modes()[1].cutoff())?;
            SeparabilityVerdict {
                status: Status::Separable,
                method: Method::ClosedFormFixedN,
                witness: Some(Witness::Monomial { m, n }),
                residual: unit.distance_up_to_phase(&rebuilt)?,
            }
        }
        None => SeparabilityVerdict {
            status: Status::Entangled,
            method: Method::ClosedFormFixedN,
            witness: None,
            residual: nearest,
        },
    })
}

/// A monomial `|m, n⟩±` proportional to a dressed eigenstate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorizationCondition {
    pub branch: Branch,
    pub m: u32,
    pub n: u32,
}

/// All `(branch, m, n)` with `m + n = total` for which the dressed eigenstate
/// of that branch equals `|m, n⟩±`, found by comparing the eigenstate ratios
/// `φ_N/β_N` and `-β_N/φ_N` against every `(mφ² - nβ²)/(φβ√N)`.
pub fn eigenstate_factorization_conditions(total: u32, params: &JcParams) -> Vec<FactorizationCondition> {
    if total == 0 {
        return Vec::new();
    }
    let mut found = Vec::new();
    if params.is_decoupled() {
        for branch in Branch::BOTH {
            let state = eigenstate(total, branch, params, total).expect("cutoff equals sector");
            let a = state.amplitude(&[0, total]);
            let c = state.amplitude(&[1, total - 1]);
            if let Ok(Some((m, n))) = matching_monomial(a, c, total, params) {
                found.push(FactorizationCondition { branch, m, n });
            }
        }
        return found;
    }
    let ix = params.indexed(total);
    for branch in Branch::BOTH {
        let target = match branch {
            Branch::Plus => ix.phi / ix.beta,
            Branch::Minus => -ix.beta / ix.phi,
        };
        for m in 0..=total {
            let n = total - m;
            let r = pm_ratio(m, n, params).expect("coupled, nonzero sector");
            if ratio_matches(target, r) {
                found.push(FactorizationCondition { branch, m, n });
            }
        }
    }
    found
}

/// Decides a dressed eigenstate through the factorization conditions. Fails
/// unless `state` matches one of the two eigenstates of its sector up to phase.
pub fn separability_by_eigen_conditions(state: &StateVector, params: &JcParams) -> Result<SeparabilityVerdict> {
    let total = fb_sector(state)?;
    if total == 0 {
        return Err(Error::InvalidArgument("the vacuum is not a dressed eigenstate".into()));
    }
    let unit = state.normalized()?;
    let cutoff = state.modes()[1].cutoff();
    let mut branch = None;
    for b in Branch::BOTH {
        let e = eigenstate(total, b, params, cutoff)?;
        if e.inner_product(&unit)?.norm() >= 1.0 - EIGEN_MATCH_TOL {
            branch = Some(b);
        }
    }
    let branch = branch.ok_or_else(|| Error::InvalidArgument("state is not a dressed eigenstate".into()))?;
    let hit = eigenstate_factorization_conditions(total, params)
        .into_iter()
        .find(|c| c.branch == branch);
    Ok(match hit {
        Some(c) => {
            let rebuilt = product_state_pm(c.m, c.n, params, cutoff)?;
            SeparabilityVerdict {
                status: Status::Separable,
                method: Method::EigenCondition,
                witness: Some(Witness::Monomial { m: c.m, n: c.n }),
                residual: unit.distance_up_to_phase(&rebuilt)?,
            }
        }
        None => SeparabilityVerdict {
            status: Status::Entangled,
            method: Method::EigenCondition,
            witness: None,
            residual: nearest_product(state, total, params)?.0,
        },
    })
}
