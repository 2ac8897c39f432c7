//! Simulator results against hand-built matrices and the exact engine.

use std::collections::BTreeSet;
use std::f64::consts::{LN_2, TAU};

use hgauge_core::calculus::{cohomology, gauge_orbits, hom_space, DEFAULT_ENUM_CAP};
use hgauge_core::sim::{
    apply_clock, apply_shift, basis_change_matrix, ground_basis, ground_density, povm_check,
    run_checks, thermodynamics, Operator, Simulator, StateVector, Status, Suite, DEFAULT_MAX_DIM,
};
use hgauge_core::{library, Error, GaugeModel};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;

const TOL: f64 = 1e-9;

fn sim(name: &str) -> (GaugeModel, Simulator) {
    let m = library::load(name).unwrap();
    let s = Simulator::new(&m, DEFAULT_MAX_DIM).unwrap();
    (m, s)
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn max_diff(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
    (a - b).iter().map(|x| x.norm()).fold(0.0, f64::max)
}

#[test]
fn point_z3_shift_and_clock_matrices() {
    let (_, s) = sim("point-z3");
    let b = s.basis();
    let space = b.space();
    let one = space.pmap(vec![BigInt::from(1)]).unwrap();
    let e0 = StateVector::basis(3, 0);
    assert_eq!(apply_shift(b, &one, &e0).unwrap(), StateVector::basis(3, 1));
    let k1 = space.prep(vec![BigInt::from(1)]).unwrap();
    for g in 0..3u64 {
        let out = apply_clock(b, &k1, &StateVector::basis(3, g)).unwrap();
        let want = Complex64::from_polar(1.0, TAU * g as f64 / 3.0);
        assert!((out.amplitudes[g as usize] - want).norm() < TOL);
    }
    // Hand-written P^1 and Q_1.
    let w = Complex64::from_polar(1.0, TAU / 3.0);
    let z = c(0.0, 0.0);
    let o = c(1.0, 0.0);
    let p = DMatrix::from_row_slice(3, 3, &[z, z, o, o, z, z, z, o, z]);
    let q = DMatrix::from_row_slice(3, 3, &[o, z, z, z, w, z, z, z, w * w]);
    assert!(max_diff(&Operator::Shift(1).to_dense(b).unwrap(), &p) < TOL);
    assert!(max_diff(&Operator::Clock(1).to_dense(b).unwrap(), &q) < TOL);
    assert!(max_diff(&(&q * &p), &(&p * &q * w)) < TOL);
    // A_0̂ = 1 since hom^{-1} is trivial, and H = 0.
    assert!(
        max_diff(
            &s.gauge_projector().to_dense(b).unwrap(),
            &DMatrix::identity(3, 3)
        ) < TOL
    );
    assert!(s
        .hamiltonian()
        .to_dense(b)
        .unwrap()
        .iter()
        .all(|x| x.norm() < TOL));
}

#[test]
fn apply_rejects_foreign_states() {
    let (_, s) = sim("point-z3");
    let zero = s.basis().space().zero();
    assert!(matches!(
        apply_shift(s.basis(), &zero, &StateVector::zeros(4)),
        Err(Error::SpaceMismatch(_))
    ));
    let (m, _) = sim("torus-cw-z2");
    let other = hom_space(&m, 0).zero();
    assert!(matches!(
        apply_shift(s.basis(), &other, &StateVector::zeros(3)),
        Err(Error::SpaceMismatch(_))
    ));
}

#[test]
fn circle_deg0_flatness_terms_test_equal_endpoints() {
    let (m, s) = sim("circle-z2-deg0");
    // Edges [0,1], [0,2], [1,2]; basis index 4ν0 + 2ν1 + ν2.
    let edges = [(0usize, 1usize), (0, 2), (1, 2)];
    let terms = s.flatness_terms();
    assert_eq!(terms.len(), 3);
    for (t, &(a, bb)) in terms.iter().zip(&edges) {
        for nu in 0..8u64 {
            let v = [nu >> 2 & 1, nu >> 1 & 1, nu & 1];
            let entry = t
                .operator
                .column(s.basis(), nu)
                .get(&nu)
                .copied()
                .unwrap_or_default();
            let want = if v[a] == v[bb] { 1.0 } else { 0.0 };
            assert!((entry.re - want).abs() < TOL, "edge {a}{bb} ν={nu}");
        }
    }
    let product = Operator::Product(terms.into_iter().map(|t| t.operator).collect());
    assert!((product.trace(s.basis()).unwrap().re - 2.0).abs() < TOL);
    assert!((s.ground_projector().trace(s.basis()).unwrap().re - 2.0).abs() < TOL);
    assert_eq!(m.cells(1), 3);
}

#[test]
fn circle_deg1_ground_states_are_orbit_averages() {
    let (m, s) = sim("circle-z2-deg1");
    // A_0̂ has trace |ker d^0|·|ker d^-1|/|hom^-1| = 8·2/8.
    assert!((s.gauge_projector().trace(s.basis()).unwrap().re - 2.0).abs() < TOL);
    let orbits: BTreeSet<Vec<u64>> = gauge_orbits(&m, DEFAULT_ENUM_CAP)
        .unwrap()
        .orbits
        .into_iter()
        .collect();
    assert_eq!(orbits.len(), 2);
    let gs = ground_basis(&m, &s).unwrap();
    for st in &gs.configuration {
        let v = st.vector.as_ref().unwrap();
        let support: Vec<u64> = (0..8)
            .filter(|&i| v.amplitudes[i as usize].norm() > TOL)
            .collect();
        assert!(orbits.contains(&support), "{support:?}");
        for &i in &support {
            assert!((v.amplitudes[i as usize] - c(0.5, 0.0)).norm() < TOL);
        }
        // Each orbit has fixed holonomy parity e01 + e02 + e12.
        let parity: BTreeSet<u64> = support.iter().map(|i| i.count_ones() as u64 % 2).collect();
        assert_eq!(parity.len(), 1);
    }
}

#[test]
fn torus_cw_projectors_are_identity() {
    let (_, s) = sim("torus-cw-z2");
    let b = s.basis();
    let id = DMatrix::identity(4, 4);
    assert!(max_diff(&s.flat_projector().to_dense(b).unwrap(), &id) < TOL);
    assert!(max_diff(&s.gauge_projector().to_dense(b).unwrap(), &id) < TOL);
    assert_eq!(s.gsd_by_trace().unwrap().gsd, 4);
}

#[test]
fn trace_gsd_matches_exact_engine() {
    for (file, m) in library::all() {
        let Ok(s) = Simulator::new(&m, DEFAULT_MAX_DIM) else {
            assert!(!m.is_simulator_eligible(), "{}", file.name);
            continue;
        };
        let t = s.gsd_by_trace().unwrap();
        assert!(t.residual < TOL, "{}", file.name);
        let exact = cohomology(&m, 0).unwrap().order().unwrap();
        assert_eq!(BigInt::from(t.gsd), exact, "{}", file.name);
        assert_eq!(t.counted, t.gsd, "{}", file.name);
        if let Some(g) = file.expected.as_ref().and_then(|e| e.gsd) {
            assert_eq!(t.gsd, g, "{}", file.name);
        }
    }
}

#[test]
fn simulator_caps_and_infinite_models() {
    let cyc = library::load("cyclic-resolution-z3").unwrap();
    assert!(matches!(
        Simulator::new(&cyc, DEFAULT_MAX_DIM),
        Err(Error::InfiniteGroup(_))
    ));
    let torus = library::load("torus-simplicial-z2").unwrap();
    assert!(matches!(
        Simulator::new(&torus, 1 << 20),
        Err(Error::TooLarge { .. })
    ));
}

#[test]
fn ground_bases_are_orthonormal() {
    for name in [
        "point-z3",
        "circle-z2-deg1",
        "interval-z4z2",
        "torus-cw-z3",
        "klein-cw-z4",
        "sphere-simplicial-z2",
    ] {
        let (m, s) = sim(name);
        let gs = ground_basis(&m, &s).unwrap();
        let (gc, gr) = gs.gram().unwrap();
        let g = gs.dimension();
        let id = DMatrix::identity(g, g);
        assert!(max_diff(&gc, &id) < TOL, "{name}");
        assert!(max_diff(&gr, &id) < TOL, "{name}");
    }
    // For a point the configuration states are the basis states themselves.
    let (m, s) = sim("point-z3");
    let gs = ground_basis(&m, &s).unwrap();
    for st in &gs.configuration {
        assert_eq!(st.vector.as_ref().unwrap(), &StateVector::basis(3, st.seed));
    }
}

#[test]
fn basis_change_examples() {
    let (m, s) = sim("point-z3");
    let gs = ground_basis(&m, &s).unwrap();
    let u = basis_change_matrix(&s, &gs);
    for (i, w) in gs.configuration.iter().enumerate() {
        for (j, a) in gs.representation.iter().enumerate() {
            let want =
                Complex64::from_polar(1.0 / 3f64.sqrt(), -TAU * (w.seed * a.seed) as f64 / 3.0);
            assert!((u[(i, j)] - want).norm() < TOL);
        }
    }
    let (m, s) = sim("torus-cw-z2");
    let u = basis_change_matrix(&s, &ground_basis(&m, &s).unwrap());
    for x in u.iter() {
        assert!(x.im.abs() < TOL && (x.re.abs() - 0.5).abs() < TOL);
    }
    let real = u.map(|x| x.re);
    assert!(
        (real.transpose() * &real - DMatrix::<f64>::identity(4, 4))
            .abs()
            .max()
            < TOL
    );
    let (m, s) = sim("sphere-simplicial-z2");
    let u = basis_change_matrix(&s, &ground_basis(&m, &s).unwrap());
    assert_eq!(u.shape(), (1, 1));
    assert!((u[(0, 0)] - c(1.0, 0.0)).norm() < TOL);
}

#[test]
fn povm_examples() {
    for (name, g) in [
        ("point-z3", 3),
        ("torus-cw-z2", 4),
        ("sphere-simplicial-z2", 1),
    ] {
        let (m, s) = sim(name);
        let r = povm_check(&s, &ground_basis(&m, &s).unwrap());
        assert_eq!((r.gsd, r.elements), (g, g * g), "{name}");
        assert!(r.passed(), "{name}: {:?}", r.failure());
        assert!(r.identity_residual() < TOL);
        if g > 1 {
            assert!(r.theta_min_eigenvalue < 0.0, "{name}");
        }
    }
}

#[test]
fn density_examples() {
    let (m, s) = sim("torus-cw-z2");
    let gs = ground_basis(&m, &s).unwrap();
    let uniform = ground_density(&s, &gs, &[1.0 / 16.0; 16]).unwrap();
    let quarter = DMatrix::<Complex64>::identity(4, 4) * c(0.25, 0.0);
    assert!(max_diff(&uniform.marginal_conf, &quarter) < TOL);
    assert!(max_diff(&uniform.marginal_rep, &quarter) < TOL);
    let mut point = [0.0; 16];
    point[6] = 1.0;
    let pure = ground_density(&s, &gs, &point).unwrap();
    assert!((pure.purity() - 1.0).abs() < TOL);
    let mut skew = [0.0; 16];
    skew[..4].copy_from_slice(&[0.5, 0.25, 0.125, 0.125]);
    let rho = ground_density(&s, &gs, &skew).unwrap();
    assert!((rho.trace() - c(1.0, 0.0)).norm() < TOL);
    assert_eq!(rho.conf_weights, vec![1.0, 0.0, 0.0, 0.0]);
    assert_eq!(rho.rep_weights, vec![0.5, 0.25, 0.125, 0.125]);
    assert!(rho.marginal_residual(&s, &gs) < TOL);
    for bad in [vec![0.5; 16], vec![1.0], {
        let mut v = vec![0.0; 16];
        v[0] = 1.5;
        v[1] = -0.5;
        v
    }] {
        assert!(matches!(
            ground_density(&s, &gs, &bad),
            Err(Error::BadWeights(_))
        ));
    }
}

#[test]
fn thermodynamics_examples() {
    let t = thermodynamics(4, 1.0);
    assert_eq!(t.partition, 4.0);
    assert!((t.energy + 4f64.ln()).abs() < 1e-15);
    assert_eq!(t.entropy, 0.0);
    assert_eq!(thermodynamics(4, 2.0).partition, 16.0);
    assert_eq!(thermodynamics(9, 2.0).partition, 81.0);
    let one = thermodynamics(1, 5.0);
    assert_eq!((one.partition, one.energy, one.entropy), (1.0, 0.0, 0.0));
    assert!(one.energy.is_sign_positive());
}

#[test]
fn hamiltonian_levels_count_violations() {
    // In the configuration basis, H|ν⟩ restricted to flatness terms is
    // ln2 times the number of violated sites.
    let (_, s) = sim("circle-z2-deg0");
    let flat = Operator::Sum(
        s.flatness_terms()
            .into_iter()
            .map(|t| (c(LN_2, 0.0), t.operator.complement()))
            .collect(),
    );
    for nu in 0..8u64 {
        let v = [nu >> 2 & 1, nu >> 1 & 1, nu & 1];
        let broken = [(0, 1), (0, 2), (1, 2)]
            .iter()
            .filter(|(a, b)| v[*a] != v[*b])
            .count();
        let col = flat.column(s.basis(), nu);
        assert!((col.get(&nu).copied().unwrap_or_default().re - LN_2 * broken as f64).abs() < TOL);
    }
}

#[test]
fn all_suites_pass_on_small_models() {
    for name in [
        "point-z3",
        "circle-z2-deg0",
        "circle-z2-deg1",
        "interval-z4z2",
        "torus-cw-z2",
        "klein-cw-z4",
    ] {
        let (m, s) = sim(name);
        let r = run_checks(&m, &s, &Suite::ALL, 1).unwrap();
        let failed: Vec<_> = r.failures().map(|c| c.name.clone()).collect();
        assert!(failed.is_empty(), "{name}: {failed:?}");
        assert!(
            r.checks.iter().all(|c| c.status == Status::Pass),
            "{name}: nothing skipped at D ≤ 2^8"
        );
    }
}
