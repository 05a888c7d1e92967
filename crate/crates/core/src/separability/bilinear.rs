//! Alternating least squares over bilinear factorizations.
//!
//! Candidate states are `Φ(x, y) = Σ_ij x_i y_j v_ij` for a fixed dictionary
//! `v_ij`: either `p+†^i p-†^j |vac⟩ / √(i! j!)` or the projected product kets
//! `P(|i⟩ ⊗ |j⟩)`. With `y` fixed, `Φ` is linear in `x` and the best `x` is a
//! least-squares solve (and vice versa). Gaussian restarts plus one start per
//! right basis vector run independently and are reduced by minimum residual,
//! ties broken by start index; the winner gets a few joint Gauss-Newton steps.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use super::constraint::Constraint;
use super::{Method, SeparabilityVerdict, Status, Witness};
use crate::error::{Error, Result};
use crate::fock::{BasisKet, StateVector};
use crate::model::{quasiparticle_weights, JcParams};

pub const DEFAULT_SEED: u64 = 0x5eed_0f_d0c;

const POLISH_STEPS: usize = 20;

/// What the two factors are expanded in.
#[derive(Clone, Copy, Debug)]
pub enum BilinearTarget<'a> {
    /// Polynomials in `p+†` and `p-†` acting on the vacuum.
    Quasiparticle(&'a JcParams),
    /// Local basis vectors followed by a projector.
    Constrained(&'a Constraint),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BilinearOptions {
    /// Highest power (or basis index) in the left factor.
    pub left_degree: u32,
    pub right_degree: u32,
    pub tol: f64,
    pub restarts: usize,
    pub max_iterations: usize,
    /// Stop once an alternation improves the residual by less than this.
    pub min_improvement: f64,
    pub seed: u64,
}

impl BilinearOptions {
    pub fn new(left_degree: u32, right_degree: u32) -> Self {
        Self {
            left_degree,
            right_degree,
            tol: 1e-9,
            restarts: 32,
            max_iterations: 500,
            min_improvement: 1e-12,
            seed: DEFAULT_SEED,
        }
    }
}

/// Dense tensor `atoms[i * cols + j]` of dictionary vectors plus the target.
struct Problem {
    rows: usize,
    cols: usize,
    atoms: Vec<DVector<Complex64>>,
    target: DVector<Complex64>,
    left_scale: Vec<f64>,
    right_scale: Vec<f64>,
}

#[derive(Clone)]
struct Fit {
    residual: f64,
    left: DVector<Complex64>,
    right: DVector<Complex64>,
}

fn factorial_sqrt(k: u32) -> f64 {
    (1..=k).map(f64::from).product::<f64>().sqrt()
}

fn densify(states: &[&StateVector], target: &StateVector) -> (Vec<DVector<Complex64>>, DVector<Complex64>) {
    let mut index: BTreeMap<BasisKet, usize> = BTreeMap::new();
    for s in states.iter().copied().chain(std::iter::once(target)) {
        for (k, _) in s.iter() {
            let next = index.len();
            index.entry(k.clone()).or_insert(next);
        }
    }
    let dim = index.len();
    let dense = |s: &StateVector| {
        let mut v = DVector::zeros(dim);
        for (k, a) in s.iter() {
            v[index[k]] = *a;
        }
        v
    };
    (states.iter().map(|s| dense(s)).collect(), dense(target))
}

fn quasiparticle_problem(state: &StateVector, params: &JcParams, opts: &BilinearOptions) -> Result<Problem> {
    let cutoff = match state.modes() {
        [f, b] if f.is_fermionic() && !b.is_fermionic() => b.cutoff(),
        _ => return Err(Error::ModeMismatch),
    };
    let needed = opts.left_degree + opts.right_degree;
    if cutoff < needed {
        return Err(Error::CutoffTooSmall { needed, cutoff });
    }
    let w = quasiparticle_weights(params);
    let mut minus_powers = vec![StateVector::vacuum(state.modes())?];
    for _ in 0..opts.right_degree {
        let next = minus_powers.last().unwrap().apply_mixed_creation(&w.minus)?;
        minus_powers.push(next);
    }
    let mut states = vec![StateVector::zero(state.modes())?; minus_powers.len() * (opts.left_degree as usize + 1)];
    let cols = minus_powers.len();
    for (j, base) in minus_powers.iter().enumerate() {
        let mut s = base.clone();
        for i in 0..=opts.left_degree as usize {
            if i > 0 {
                s = s.apply_mixed_creation(&w.plus)?;
            }
            let scale = factorial_sqrt(i as u32) * factorial_sqrt(j as u32);
            states[i * cols + j] = s.scale((1.0 / scale).into());
        }
    }
    let refs: Vec<&StateVector> = states.iter().collect();
    let (atoms, target) = densify(&refs, &state.normalized()?);
    Ok(Problem {
        rows: opts.left_degree as usize + 1,
        cols,
        atoms,
        target,
        left_scale: (0..=opts.left_degree).map(factorial_sqrt).collect(),
        right_scale: (0..=opts.right_degree).map(factorial_sqrt).collect(),
    })
}

fn constrained_problem(state: &StateVector, constraint: &Constraint, opts: &BilinearOptions) -> Result<Problem> {
    if state.modes() != constraint.modes().as_slice() {
        return Err(Error::ModeMismatch);
    }
    let (rows, cols) = (opts.left_degree as usize + 1, opts.right_degree as usize + 1);
    if rows > constraint.left_dim() || cols > constraint.right_dim() {
        return Err(Error::InvalidArgument(format!(
            "degrees ({}, {}) exceed constraint dimensions ({}, {})",
            opts.left_degree,
            opts.right_degree,
            constraint.left_dim(),
            constraint.right_dim()
        )));
    }
    let mut states = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            states.push(if constraint.keeps(i, j) {
                StateVector::basis(state.modes(), vec![i as u32, j as u32])?
            } else {
                StateVector::zero(state.modes())?
            });
        }
    }
    let refs: Vec<&StateVector> = states.iter().collect();
    let (atoms, target) = densify(&refs, &state.normalized()?);
    Ok(Problem {
        rows,
        cols,
        atoms,
        target,
        left_scale: vec![1.0; rows],
        right_scale: vec![1.0; cols],
    })
}

fn least_squares(a: DMatrix<Complex64>, b: &DVector<Complex64>) -> DVector<Complex64> {
    let svd = a.svd(true, true);
    let largest = svd.singular_values.max();
    let cols = svd.v_t.as_ref().map_or(0, |v| v.ncols());
    if largest == 0.0 {
        return DVector::zeros(cols);
    }
    svd.solve(b, largest * 1e-13).expect("both factors computed")
}

impl Problem {
    fn atom(&self, i: usize, j: usize) -> &DVector<Complex64> {
        &self.atoms[i * self.cols + j]
    }

    fn left_design(&self, right: &DVector<Complex64>) -> DMatrix<Complex64> {
        let dim = self.target.len();
        DMatrix::from_fn(dim, self.rows, |r, i| (0..self.cols).map(|j| self.atom(i, j)[r] * right[j]).sum())
    }

    fn right_design(&self, left: &DVector<Complex64>) -> DMatrix<Complex64> {
        let dim = self.target.len();
        DMatrix::from_fn(dim, self.cols, |r, j| (0..self.rows).map(|i| self.atom(i, j)[r] * left[i]).sum())
    }

    /// `‖target - e^{iα} Φ/‖Φ‖‖` with the optimal phase.
    fn unit_residual(&self, left: &DVector<Complex64>, right: &DVector<Complex64>) -> f64 {
        let phi = self.right_design(left) * right;
        let norm = phi.norm();
        if norm == 0.0 {
            return std::f64::consts::SQRT_2;
        }
        let overlap = phi.dotc(&self.target);
        let phase = if overlap.norm() > 0.0 {
            overlap / overlap.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        (&self.target - phi * (phase / norm)).norm()
    }

    /// Gauss-Newton steps on `(x, y)` jointly; ALS alone only converges
    /// linearly and stalls near 1e-9 when the degrees exceed what is needed.
    fn polish(&self, mut fit: Fit, steps: usize) -> Fit {
        let (rows, cols) = (self.rows, self.cols);
        for _ in 0..steps {
            let a = self.left_design(&fit.right);
            let b = self.right_design(&fit.left);
            let gap = &self.target - &a * &fit.left;
            let mut jacobian = DMatrix::zeros(self.target.len(), rows + cols);
            jacobian.columns_mut(0, rows).copy_from(&a);
            jacobian.columns_mut(rows, cols).copy_from(&b);
            let step = least_squares(jacobian, &gap);
            let left = &fit.left + step.rows(0, rows);
            let right = &fit.right + step.rows(rows, cols);
            let residual = self.unit_residual(&left, &right);
            if !(residual < fit.residual) {
                break;
            }
            fit = Fit { residual, left, right };
        }
        fit
    }

    fn run(&self, start: Start, opts: &BilinearOptions) -> Fit {
        let mut right = match start {
            Start::Gaussian(seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                DVector::from_fn(self.cols, |_, _| {
                    let re: f64 = StandardNormal.sample(&mut rng);
                    let im: f64 = StandardNormal.sample(&mut rng);
                    Complex64::new(re, im)
                })
            }
            Start::Basis(j) => DVector::from_fn(self.cols, |k, _| Complex64::new(f64::from(u8::from(k == j)), 0.0)),
        };
        let mut left = DVector::zeros(self.rows);
        let mut previous = f64::INFINITY;
        for _ in 0..opts.max_iterations {
            let a = self.left_design(&right);
            left = least_squares(a, &self.target);
            let b = self.right_design(&left);
            right = least_squares(b.clone(), &self.target);
            let norm = right.norm();
            if norm == 0.0 {
                break;
            }
            right /= Complex64::new(norm, 0.0);
            left *= Complex64::new(norm, 0.0);
            let residual = (&self.target - b * &right * Complex64::new(norm, 0.0)).norm();
            if previous - residual < opts.min_improvement {
                break;
            }
            previous = residual;
        }
        Fit {
            residual: self.unit_residual(&left, &right),
            left,
            right,
        }
    }
}

/// Initial right factor of one alternation run.
#[derive(Clone, Copy, Debug)]
enum Start {
    Gaussian(u64),
    /// A single right-factor basis vector. Random starts tend to settle on a
    /// neighbouring monomial when the target is itself a monomial.
    Basis(usize),
}

fn restart_seed(seed: u64, restart: usize) -> u64 {
    seed.wrapping_add((restart as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Searches for factors reproducing `state`. Returns `separable` when the best
/// residual is within `opts.tol`, otherwise `inconclusive`.
pub fn separability_bilinear(
    state: &StateVector,
    target: BilinearTarget<'_>,
    opts: &BilinearOptions,
) -> Result<SeparabilityVerdict> {
    if opts.restarts == 0 {
        return Err(Error::InvalidArgument("at least one restart is required".into()));
    }
    let problem = match target {
        BilinearTarget::Quasiparticle(params) => quasiparticle_problem(state, params, opts)?,
        BilinearTarget::Constrained(constraint) => constrained_problem(state, constraint, opts)?,
    };
    let starts: Vec<Start> = (0..opts.restarts)
        .map(|r| Start::Gaussian(restart_seed(opts.seed, r)))
        .chain((0..problem.cols).map(Start::Basis))
        .collect();
    let fits: Vec<Fit> = starts.into_par_iter().map(|start| problem.run(start, opts)).collect();
    let mut best = &fits[0];
    for fit in &fits[1..] {
        if fit.residual < best.residual {
            best = fit;
        }
    }
    let best = &problem.polish(best.clone(), POLISH_STEPS);
    let unscale = |v: &DVector<Complex64>, s: &[f64]| -> Vec<Complex64> {
        v.iter().zip(s).map(|(a, s)| a / s).collect()
    };
    Ok(SeparabilityVerdict {
        status: if best.residual <= opts.tol {
            Status::Separable
        } else {
            Status::Inconclusive
        },
        method: Method::Bilinear,
        witness: Some(Witness::Factors {
            left: unscale(&best.left, &problem.left_scale),
            right: unscale(&best.right, &problem.right_scale),
        }),
        residual: best.residual,
    })
}
