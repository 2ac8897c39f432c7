//! Hom-calculus properties on the bundled models, against brute-force oracles.

use hgauge_core::abelian::{image_order, Radix, SmallHom};
use hgauge_core::calculus::{
    cohomology, differential, dual_differential, duality_rung, factored_dual_differential,
    gauge_orbits, gsd, hom_space, homology, p_character, uct_decomposition, DEFAULT_ENUM_CAP,
};
use hgauge_core::{library, GaugeModel};
use num_bigint::BigInt;
use num_complex::Complex64;

fn finite_models() -> Vec<GaugeModel> {
    library::all()
        .into_iter()
        .map(|(_, m)| m)
        .filter(GaugeModel::is_simulator_eligible)
        .collect()
}

#[test]
fn expected_manifest_values() {
    for (file, model) in library::all() {
        let exp = file.expected.clone().unwrap_or_default();
        for (p, want) in &exp.cohomology {
            let p: i64 = p.parse().unwrap();
            assert_eq!(
                &cohomology(&model, p).unwrap().group().to_string(),
                want,
                "{} H^{p}",
                file.name
            );
        }
        for (n, want) in &exp.gauge_homology {
            assert_eq!(
                &model.gauge().homology(n.parse().unwrap()).to_string(),
                want,
                "{}",
                file.name
            );
        }
        for (n, want) in &exp.geometry_homology {
            assert_eq!(
                &model.geometry().homology(n.parse().unwrap()).to_string(),
                want,
                "{}",
                file.name
            );
        }
        if let Some(d) = exp.dimension {
            assert_eq!(
                hom_space(&model, 0).total().order(),
                Some(BigInt::from(d)),
                "{}",
                file.name
            );
        }
        if let Some(g) = exp.gsd {
            let v = gsd(&model).unwrap();
            assert_eq!(v.cohomology, BigInt::from(g), "{}", file.name);
            assert!(v.agrees());
        }
    }
}

#[test]
fn cochain_and_chain_conditions() {
    for m in finite_models() {
        for p in -3..=2 {
            let d = differential(&m, p).unwrap();
            let d1 = differential(&m, p + 1).unwrap();
            assert!(d1.compose(&d).unwrap().is_zero());
            let lo = dual_differential(&m, p + 1).unwrap();
            let lo2 = dual_differential(&m, p).unwrap();
            assert!(lo2.compose(&lo).unwrap().is_zero());
            assert_eq!(
                factored_dual_differential(&m, p).unwrap(),
                lo,
                "{} p={p}",
                m.name()
            );
        }
    }
}

#[test]
fn duality_ladder() {
    for m in finite_models() {
        for p in -1..=1 {
            let r = duality_rung(&m, p).unwrap();
            assert!(r.holds(), "{} {r:?}", m.name());
        }
    }
}

#[test]
fn orbit_oracle_agrees() {
    for m in finite_models() {
        match gauge_orbits(&m, DEFAULT_ENUM_CAP) {
            Ok(o) => {
                let g = gsd(&m).unwrap();
                assert_eq!(BigInt::from(o.count()), g.cohomology, "{}", m.name());
                // orbit sizes are all |im d^{-1}|
                assert!(o.orbits.iter().all(|x| x.len() as u64 == o.gauge_images));
            }
            Err(e) => assert_eq!(m.name(), "torus-simplicial-z2", "{e}"),
        }
    }
}

#[test]
fn uct_matches_direct_computation() {
    for (_, m) in library::all() {
        let u = uct_decomposition(&m).unwrap();
        assert!(u.matches(), "{}: {} vs {}", m.name(), u.sum, u.direct);
        if m.is_simulator_eligible() {
            assert_eq!(u.product(), Some(gsd(&m).unwrap().cohomology));
        }
        for p in -2..=1 {
            let u = hgauge_core::calculus::uct_decomposition_at(&m, p).unwrap();
            assert!(u.matches(), "{} p={p}: {} vs {}", m.name(), u.sum, u.direct);
        }
    }
}

#[test]
fn uct_examples() {
    let k = library::load("klein-cw-z2").unwrap();
    let u = uct_decomposition(&k).unwrap();
    assert_eq!(u.terms.len(), 1);
    assert_eq!(u.terms[0].n, 1);
    assert_eq!(u.terms[0].total.to_string(), "Z2 ⊕ Z2");
    let rp2 = library::load("rp2-simplicial-z2").unwrap();
    let u = uct_decomposition(&rp2).unwrap();
    assert_eq!(u.terms[0].hom_part.to_string(), "Z2");
    assert!(u.terms[0].ext_part.is_trivial());
    let pt = library::load("point-z3").unwrap();
    let u = uct_decomposition(&pt).unwrap();
    assert_eq!(
        (u.terms[0].n, u.terms[0].total.to_string()),
        (0, "Z3".to_string())
    );
}

#[test]
fn hom_space_examples() {
    let c1 = library::load("circle-z2-deg1").unwrap();
    let s0 = hom_space(&c1, 0);
    assert_eq!(s0.sites().len(), 3);
    assert!(s0.sites().iter().all(|s| s.degree == 1));
    let sm = hom_space(&c1, -1);
    assert_eq!(sm.sites().len(), 3);
    assert!(sm.sites().iter().all(|s| s.degree == 0));
    assert_eq!(sm.total_group().to_string(), "Z2 ⊕ Z2 ⊕ Z2");
}

/// `d^0` on circle-z2-deg0 by brute force: kernel = constant vertex functions.
#[test]
fn circle_deg0_brute_force() {
    let m = library::load("circle-z2-deg0").unwrap();
    let d0 = differential(&m, 0).unwrap();
    let small = SmallHom::new(&d0).unwrap();
    let r = Radix::from_cyclic(d0.source()).unwrap();
    let kernel: Vec<u64> = (0..8)
        .filter(|&w| small.apply(&r.digits(w)).iter().all(|&v| v == 0))
        .collect();
    assert_eq!(kernel, vec![0, 7]);
    // |im d^0| = |im d_1| = 4 by counting images on both sides
    let mut imgs: Vec<Vec<u64>> = (0..8).map(|w| small.apply(&r.digits(w))).collect();
    imgs.sort();
    imgs.dedup();
    assert_eq!(imgs.len(), 4);
    let d1 = dual_differential(&m, 1).unwrap();
    let sd = SmallHom::new(&d1).unwrap();
    let rt = Radix::from_cyclic(d1.source()).unwrap();
    let mut dimgs: Vec<Vec<u64>> = (0..rt.order()).map(|k| sd.apply(&rt.digits(k))).collect();
    dimgs.sort();
    dimgs.dedup();
    assert_eq!(dimgs.len(), 4);
    assert_eq!(image_order(&d0).unwrap(), BigInt::from(4));
    // adjointness χ(d^0 ω) = (d_1 χ)(ω) over all 8 x 8 pairs
    let s0 = hom_space(&m, 0);
    let s1 = hom_space(&m, 1);
    for w in s0.total().enumerate().unwrap() {
        let pw = s0.pmap(w.0.clone()).unwrap();
        let dw = s1.pmap(d0.apply(&w).0).unwrap();
        for k in s1.total().enumerate().unwrap() {
            let rk = s1.prep(k.0.clone()).unwrap();
            let pulled = s0.prep(d1.apply(&k).0).unwrap();
            assert_eq!(
                s1.p_phase(&rk, &dw).unwrap(),
                s0.p_phase(&pulled, &pw).unwrap()
            );
        }
    }
}

/// The interval model by brute force over all 32 p-maps.
#[test]
fn interval_sign_sensitive_kernel() {
    let m = library::load("interval-z4z2").unwrap();
    let s0 = hom_space(&m, 0);
    assert_eq!(s0.total().order(), Some(BigInt::from(32)));
    let d0 = differential(&m, 0).unwrap();
    // sites: v0, v1 in Z4, then the edge in Z2; (dω)(e) = ω(v1) − ω(v0) − 2ω(e)
    let mut count = 0;
    for w in s0.total().enumerate().unwrap() {
        let c: Vec<i64> = w.0.iter().map(|x| i64::try_from(x).unwrap()).collect();
        let by_hand = (c[1] - c[0] - 2 * c[2]).rem_euclid(4) == 0;
        assert_eq!(by_hand, d0.apply(&w).is_zero());
        count += by_hand as usize;
    }
    assert_eq!(count, 8);
    assert_eq!(cohomology(&m, 0).unwrap().group().to_string(), "Z2");
}

#[test]
fn klein_z4_brute_force() {
    let m = library::load("klein-cw-z4").unwrap();
    let d0 = differential(&m, 0).unwrap();
    let ker = hom_space(&m, 0)
        .total()
        .enumerate()
        .unwrap()
        .into_iter()
        .filter(|w| d0.apply(w).is_zero())
        .count();
    assert_eq!(ker, 8);
    assert_eq!(cohomology(&m, 0).unwrap().group().to_string(), "Z2 ⊕ Z4");
}

#[test]
fn representatives_classify_to_themselves() {
    for m in finite_models() {
        let h = cohomology(&m, 0).unwrap();
        if hom_space(&m, 0).total().order_u64().unwrap() > 1 << 16 {
            continue;
        }
        let reps = h.representatives().unwrap();
        assert_eq!(reps[0], hom_space(&m, 0).zero());
        for (i, r) in reps.iter().enumerate() {
            assert_eq!(h.classify(r).unwrap(), BigInt::from(i));
        }
        let hh = homology(&m, 0).unwrap();
        for (i, r) in hh.rep_representatives().unwrap().iter().enumerate() {
            assert_eq!(hh.classify_rep(r).unwrap(), BigInt::from(i));
        }
    }
}

/// Full orthogonality on circle-z2-deg0 by brute force over 8 x 8 x 8 triples.
#[test]
fn p_character_orthogonality_circle() {
    let m = library::load("circle-z2-deg0").unwrap();
    let s = hom_space(&m, 0);
    let elems = s.total().enumerate().unwrap();
    for a in &elems {
        for b in &elems {
            let pa = s.prep(a.0.clone()).unwrap();
            let pb = s.prep(b.0.clone()).unwrap();
            let mut acc = Complex64::new(0.0, 0.0);
            for w in &elems {
                let pw = s.pmap(w.0.clone()).unwrap();
                acc +=
                    p_character(&s, &pa, &pw).unwrap().conj() * p_character(&s, &pb, &pw).unwrap();
            }
            let expect = if a == b { 8.0 } else { 0.0 };
            assert!((acc - Complex64::new(expect, 0.0)).norm() < 1e-12);
        }
    }
    // bilinearity and the trivial cases
    let triv = s.prep(s.total().zero().0).unwrap();
    for a in &elems {
        for b in &elems {
            let pa = s.pmap(a.0.clone()).unwrap();
            let pb = s.pmap(b.0.clone()).unwrap();
            let sum = s.add(&pa, &pb).unwrap();
            for k in &elems {
                let r = s.prep(k.0.clone()).unwrap();
                let lhs = p_character(&s, &r, &sum).unwrap();
                let rhs = p_character(&s, &r, &pa).unwrap() * p_character(&s, &r, &pb).unwrap();
                assert!((lhs - rhs).norm() < 1e-12);
            }
            assert_eq!(
                p_character(&s, &triv, &pa).unwrap(),
                Complex64::new(1.0, 0.0)
            );
        }
    }
}

#[test]
fn infinite_gauge_model_is_homological_only() {
    let m = library::load("cyclic-resolution-z3").unwrap();
    assert!(!m.is_simulator_eligible());
    assert!(gsd(&m).is_err());
    assert_eq!(cohomology(&m, -1).unwrap().group().to_string(), "Z3");
    assert!(homology(&m, 0).is_err());
}
