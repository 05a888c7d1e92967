mod common;

use std::f64::consts::FRAC_1_SQRT_2;

use common::*;
use nalgebra::{DMatrix, DVector};
use quasisep::compare::{
    bb_beamsplitter_coeffs, pm_number_state, truncation_constraint, PictureKind,
};
use quasisep::model::{eigenstate, fb_modes, product_state_pm, quasiparticle_weights};
use quasisep::multimode::{multimode_product_state, FactorSpec, ModeMatrix};
use quasisep::separability::{
    eigenstate_factorization_conditions, separability_bilinear, separability_fixed_n, BilinearOptions,
    BilinearTarget, Status, Witness,
};
use quasisep::{Branch, JcParams, ModeKind, ModeSpec, StateVector};

/// Lexicographic enumeration of every ket allowed by `modes`.
fn all_kets(modes: &[ModeSpec]) -> Vec<Vec<u32>> {
    let mut kets = vec![vec![]];
    for spec in modes {
        kets = kets
            .into_iter()
            .flat_map(|k: Vec<u32>| {
                (0..=spec.cutoff()).map(move |n| {
                    let mut k = k.clone();
                    k.push(n);
                    k
                })
            })
            .collect();
    }
    kets
}

/// Dense creation operator built as a Kronecker product. A fermionic target
/// picks up a parity factor from every fermionic mode before it.
fn dense_creation(modes: &[ModeSpec], target: usize) -> DMatrix<num_complex::Complex64> {
    let fermionic_target = modes[target].kind() == ModeKind::Fermionic;
    let mut out = DMatrix::from_element(1, 1, c(1.0, 0.0));
    for (k, spec) in modes.iter().enumerate() {
        let d = spec.cutoff() as usize + 1;
        let local = if k == target {
            DMatrix::from_fn(d, d, |r, col| {
                if r == col + 1 {
                    c((r as f64).sqrt(), 0.0)
                } else {
                    c(0.0, 0.0)
                }
            })
        } else if fermionic_target && k < target && spec.kind() == ModeKind::Fermionic {
            DMatrix::from_diagonal(&DVector::from_vec(vec![c(1.0, 0.0), c(-1.0, 0.0)]))
        } else {
            DMatrix::identity(d, d)
        };
        out = out.kronecker(&local);
    }
    out
}

fn dense(state: &StateVector, kets: &[Vec<u32>]) -> DVector<num_complex::Complex64> {
    DVector::from_iterator(kets.len(), kets.iter().map(|k| state.amplitude(k)))
}

fn sparse(modes: &[ModeSpec], kets: &[Vec<u32>], v: &DVector<num_complex::Complex64>) -> StateVector {
    StateVector::from_amplitudes(modes, kets.iter().cloned().zip(v.iter().copied())).unwrap()
}

#[test]
fn ladder_operators_match_dense_matrices() {
    let modes = vec![ModeSpec::fermionic(), ModeSpec::bosonic(2), ModeSpec::fermionic(), ModeSpec::bosonic(1)];
    let kets = all_kets(&modes);
    let mut rng = rng(11);
    for _ in 0..10 {
        let v = random_complex_vector(&mut rng, kets.len());
        let s = sparse(&modes, &kets, &v);
        for mode in 0..modes.len() {
            let up = dense_creation(&modes, mode);
            let created = dense(&s.apply_creation(mode).unwrap(), &kets);
            assert!((created - &up * &v).norm() < 1e-12, "creation on mode {mode}");
            let lowered = dense(&s.apply_annihilation(mode).unwrap(), &kets);
            assert!((lowered - up.adjoint() * &v).norm() < 1e-12, "annihilation on mode {mode}");
        }
    }
}

#[test]
fn bosonic_multimode_matches_dense_transform() {
    let modes = vec![ModeSpec::bosonic(3); 4];
    let kets = all_kets(&modes);
    let mut rng = rng(12);
    let u = random_unitary(&mut rng, 4);
    let matrix = ModeMatrix::new(u.clone()).unwrap();
    assert!(matrix.is_unitary());
    let ups: Vec<_> = (0..4).map(|k| dense_creation(&modes, k)).collect();
    let mut vac = DVector::zeros(kets.len());
    vac[0] = c(1.0, 0.0);

    let tuples: Vec<[u32; 4]> = vec![[2, 0, 0, 0], [1, 1, 0, 0], [1, 0, 1, 0], [0, 0, 1, 1], [0, 1, 0, 1], [0, 0, 0, 2], [1, 1, 1, 0]];
    let mut built = Vec::new();
    for powers in &tuples {
        let mut v = vac.clone();
        for s in (0..4).rev() {
            let op = (0..4).fold(DMatrix::zeros(kets.len(), kets.len()), |acc, k| acc + &ups[k] * u[(s, k)].conj());
            for _ in 0..powers[s] {
                v = &op * v;
            }
        }
        let expected_norm: f64 = powers.iter().map(|&p| factorial(p)).product::<f64>().sqrt();
        assert!((v.norm() - expected_norm).abs() < 1e-12, "{powers:?}: norm {}", v.norm());
        let oracle = sparse(&modes, &kets, &(v / c(expected_norm, 0.0)));
        let state = multimode_product_state(&FactorSpec::monomials(powers).unwrap(), &matrix, &modes).unwrap();
        assert!(state.distance_up_to_phase(&oracle).unwrap() < 1e-12, "{powers:?}");
        let total: u32 = powers.iter().sum();
        assert_eq!(state.sectors(), vec![total]);
        built.push((total, state));
    }
    for (i, (na, a)) in built.iter().enumerate() {
        for (nb, b) in &built[i + 1..] {
            if na == nb {
                assert!(a.inner_product(b).unwrap().norm() < 1e-12);
            }
        }
    }
}

#[test]
fn mixed_block_monomials_overlap() {
    let p = JcParams::new(1.0, 1.0, c(1.0, 0.0)).unwrap();
    let w = quasiparticle_weights(&p);
    // (f1, f2, b1, b2) -> (p+1, p+2, p-1, p-2), pairing f_j with b_j.
    let mut u = DMatrix::zeros(4, 4);
    for j in 0..2 {
        u[(j, j)] = w.plus[0].conj();
        u[(j, j + 2)] = w.plus[1].conj();
        u[(j + 2, j)] = w.minus[0].conj();
        u[(j + 2, j + 2)] = w.minus[1].conj();
    }
    let matrix = ModeMatrix::new(u).unwrap();
    assert!(matrix.is_unitary());
    let modes = vec![ModeSpec::fermionic(), ModeSpec::fermionic(), ModeSpec::bosonic(2), ModeSpec::bosonic(2)];
    let states: Vec<StateVector> = [[2, 0, 0, 0], [1, 0, 1, 0], [0, 0, 2, 0]]
        .iter()
        .map(|powers| multimode_product_state(&FactorSpec::monomials(powers).unwrap(), &matrix, &modes).unwrap())
        .collect();
    let overlap = states[0].inner_product(&states[1]).unwrap().norm();
    assert!(overlap > 0.1, "{overlap}");
    assert!(states[0].inner_product(&states[2]).unwrap().norm() > 0.1);
}

#[test]
fn beamsplitter_amplitudes_match_binomial_expansion() {
    for total in 0..=10u32 {
        for m in 0..=total {
            let q = bb_beamsplitter_coeffs(m, total - m);
            let oracle = beamsplitter_oracle(m, total - m);
            let norm: f64 = q.iter().map(|z| z.norm_sqr()).sum();
            assert!((norm - 1.0).abs() < 1e-12);
            for (a, b) in q.iter().zip(&oracle) {
                assert!((a - c(*b, 0.0)).norm() < 1e-12, "({m}, {})", total - m);
            }
        }
    }
}

#[test]
fn two_boson_states_are_orthonormal_but_quasiparticle_states_are_not() {
    for total in 2..=5u32 {
        let bb: Vec<_> = (0..=total).map(|m| pm_number_state(PictureKind::BB, m, total - m, total).unwrap()).collect();
        let fb: Vec<_> = (0..=total).map(|m| pm_number_state(PictureKind::FbQuasi, m, total - m, total).unwrap()).collect();
        for i in 0..bb.len() {
            for j in i + 1..bb.len() {
                assert!(bb[i].inner_product(&bb[j]).unwrap().norm() < 1e-12);
            }
        }
        assert!(fb[0].inner_product(&fb[1]).unwrap().norm() > 0.1);
        let kets = [vec![0, total], vec![1, total - 1]];
        let columns: Vec<_> = fb.iter().map(|s| DVector::from_iterator(2, kets.iter().map(|k| s.amplitude(k)))).collect();
        let frame = DMatrix::from_columns(&columns);
        assert_eq!(frame.rank(1e-10), 2);
        assert_eq!(fb.iter().map(StateVector::len).max(), Some(2));
    }
}

#[test]
fn single_particle_states_agree_across_pictures() {
    for (m, n, sign) in [(1, 0, 1.0), (0, 1, -1.0)] {
        for kind in PictureKind::ALL {
            let s = pm_number_state(kind, m, n, 1).unwrap();
            let reference = StateVector::from_amplitudes(
                s.modes(),
                [(vec![0, 1], c(FRAC_1_SQRT_2, 0.0)), (vec![1, 0], c(sign * FRAC_1_SQRT_2, 0.0))],
            )
            .unwrap();
            assert!(s.distance_up_to_phase(&reference).unwrap() < 1e-12, "{kind} ({m},{n})");
        }
    }
    let ff = pm_number_state(PictureKind::FF, 1, 1, 1).unwrap();
    assert_eq!(ff, StateVector::basis(ff.modes(), vec![1, 1]).unwrap());
}

#[test]
fn truncated_boson_acts_as_fermion() {
    let bb = vec![ModeSpec::bosonic(3); 2];
    let fb = fb_modes(3);
    let p = truncation_constraint([3, 3]);
    let kept: Vec<Vec<u32>> = all_kets(&bb).into_iter().filter(|k| k[0] <= 1).collect();
    for from in &kept {
        let restricted = p.project(&StateVector::basis(&bb, from.clone()).unwrap().apply_annihilation(0).unwrap()).unwrap();
        let fermion = StateVector::basis(&fb, from.clone()).unwrap().apply_annihilation(0).unwrap();
        for to in &kept {
            assert_eq!(restricted.amplitude(to), fermion.amplitude(to));
        }
        // {P b P, P b† P} = 1 on the kept space.
        let s = StateVector::basis(&bb, from.clone()).unwrap();
        let pbp = |x: &StateVector| p.project(&p.project(x).unwrap().apply_annihilation(0).unwrap()).unwrap();
        let pbdp = |x: &StateVector| p.project(&p.project(x).unwrap().apply_creation(0).unwrap()).unwrap();
        let anti = pbp(&pbdp(&s)).add(&pbdp(&pbp(&s))).unwrap();
        assert!(anti.distance(&s).unwrap() < 1e-15);
    }
}

#[test]
fn witnesses_rebuild_their_states() {
    let mut rng = rng(13);
    for _ in 0..10 {
        let p = random_params(&mut rng, 0.5);
        let w = quasiparticle_weights(&p);
        for (m, n) in [(0, 2), (2, 1), (1, 3)] {
            let s = product_state_pm(m, n, &p, 8).unwrap();
            let closed = separability_fixed_n(&s, &p).unwrap();
            let Some(Witness::Monomial { m: wm, n: wn }) = closed.witness else { panic!("no witness") };
            assert!(product_state_pm(wm, wn, &p, 8).unwrap().distance_up_to_phase(&s).unwrap() <= 1e-9);

            let fit = separability_bilinear(&s, BilinearTarget::Quasiparticle(&p), &BilinearOptions::new(3, 3)).unwrap();
            assert_eq!(fit.status, Status::Separable);
            let Some(Witness::Factors { left, right }) = fit.witness else { panic!("no factors") };
            let rebuilt = StateVector::vacuum(&fb_modes(8))
                .unwrap()
                .apply_creation_polynomial(&w.minus, &right)
                .unwrap()
                .apply_creation_polynomial(&w.plus, &left)
                .unwrap()
                .normalized()
                .unwrap();
            assert!(rebuilt.distance_up_to_phase(&s).unwrap() <= 1e-9);
        }
    }
}

#[test]
fn bilinear_result_ignores_thread_count() {
    let p = JcParams::new(1.3, 0.7, c(0.4, -0.9)).unwrap();
    let s = eigenstate(3, Branch::Plus, &p, 6).unwrap();
    let solve = || separability_bilinear(&s, BilinearTarget::Quasiparticle(&p), &BilinearOptions::new(3, 3)).unwrap();
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(solve);
    let many = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap().install(solve);
    assert_eq!(single, many);
}

#[test]
fn detuned_eigenstates_rarely_factorize() {
    let mut rng = rng(14);
    for _ in 0..20 {
        let p = random_params(&mut rng, 0.1);
        assert!(!eigenstate_factorization_conditions(1, &p).is_empty());
        let hits = (2..=20).filter(|&n| !eigenstate_factorization_conditions(n, &p).is_empty()).count();
        assert_eq!(hits, 0, "{p:?}");
    }
}

#[test]
fn eigenstates_are_orthonormal() {
    let mut rng = rng(15);
    for _ in 0..10 {
        let p = random_params(&mut rng, 0.0);
        for n in 1..=6 {
            let plus = eigenstate(n, Branch::Plus, &p, n).unwrap();
            let minus = eigenstate(n, Branch::Minus, &p, n).unwrap();
            assert!(plus.is_normalized() && minus.is_normalized());
            assert!(plus.inner_product(&minus).unwrap().norm() < 1e-14);
        }
    }
}
