//! Acceptance run: one PASS/FAIL line per criterion, each against its time
//! budget. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hgauge_core::abelian::CyclicSum;
use hgauge_core::calculus::orthogonality::ORTHOGONALITY_CAP;
use hgauge_core::calculus::{
    cohomology, duality_rung, gauge_orbits, gsd, hom_space, homology, orthogonality_sweep,
    uct_decomposition, DEFAULT_ENUM_CAP,
};
use hgauge_core::sim::checks::{
    algebra_checks, density_checks, dynamics_checks, ground_basis_checks, povm_checks,
    projector_checks, unitary_checks, Context, FULL_COLUMN_LIMIT,
};
use hgauge_core::sim::{Check, Simulator, Status, DEFAULT_MAX_DIM};
use hgauge_core::{cyclic_resolution_chain, library, Error, GaugeModel};
use num_bigint::BigInt;

const SEED: u64 = 20_261_014;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn finite_models() -> Vec<GaugeModel> {
    library::all()
        .into_iter()
        .map(|(_, m)| m)
        .filter(GaugeModel::is_simulator_eligible)
        .collect()
}

fn simulators(max_dim: u64) -> Vec<(GaugeModel, Simulator)> {
    finite_models()
        .into_iter()
        .filter_map(|m| {
            let s = Simulator::new(&m, DEFAULT_MAX_DIM).ok()?;
            (s.dimension() <= max_dim).then_some((m, s))
        })
        .collect()
}

fn verdict(checks: &[Check], models: usize) -> Outcome {
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| c.status == Status::Fail)
        .map(|c| format!("{} ({:.1e})", c.name, c.residual))
        .collect();
    let worst = checks
        .iter()
        .filter(|c| c.status == Status::Pass)
        .map(|c| c.residual)
        .fold(0.0, f64::max);
    let skipped = checks
        .iter()
        .filter(|c| c.status == Status::Skipped)
        .count();
    if failed.is_empty() {
        Ok(format!(
            "{} checks on {models} models, max residual {worst:.1e}, {skipped} not applicable",
            checks.len()
        ))
    } else {
        Err(failed.join("; "))
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn criterion_1() -> Outcome {
    let mut parts = Vec::new();
    for m in finite_models() {
        let exact = gsd(&m).map_err(err)?.cohomology;
        let sim = Simulator::new(&m, DEFAULT_MAX_DIM).map_err(err)?;
        let t = sim.gsd_by_trace().map_err(err)?;
        if t.residual >= 1e-9 || BigInt::from(t.gsd) != exact {
            return Err(format!("{}: SNF {exact}, trace {}", m.name(), t.trace));
        }
        let orbits = match gauge_orbits(&m, DEFAULT_ENUM_CAP) {
            Ok(o) => {
                if BigInt::from(o.count()) != exact {
                    return Err(format!("{}: SNF {exact}, orbits {}", m.name(), o.count()));
                }
                "orbits".to_string()
            }
            Err(Error::TooLarge { .. }) => "orbits over cap".to_string(),
            Err(e) => return Err(err(e)),
        };
        parts.push(format!("{}={exact} ({orbits})", m.name()));
    }
    Ok(parts.join(", "))
}

fn criterion_2() -> Outcome {
    let models = finite_models();
    for m in &models {
        let h0 = cohomology(m, 0).map_err(err)?.group().clone();
        let h_0 = homology(m, 0).map_err(err)?.group().clone();
        if h0 != h_0 {
            return Err(format!("{}: H^0 = {h0}, H_0 = {h_0}", m.name()));
        }
    }
    Ok(format!("H^0 ≅ H_0 on {} models", models.len()))
}

fn criterion_3() -> Outcome {
    let models = finite_models();
    for m in &models {
        let u = uct_decomposition(m).map_err(err)?;
        let g = gsd(m).map_err(err)?.cohomology;
        if u.product() != Some(g.clone()) || !u.matches() {
            return Err(format!(
                "{}: UCT product {:?}, GSD {g}",
                m.name(),
                u.product()
            ));
        }
    }
    Ok(format!(
        "∏ |H^n(C; H_n(G))| = GSD on {} models",
        models.len()
    ))
}

fn criterion_4() -> Outcome {
    for m in 2..=4i64 {
        let chain = cyclic_resolution_chain(m, 7).map_err(err)?;
        let zm = CyclicSum::from_u64s(&[m as u64]).canonical();
        let z = CyclicSum::free(1).canonical();
        let trivial = CyclicSum::from_u64s(&[]).canonical();
        for (n, want) in [
            (0, &z),
            (1, &zm),
            (2, &trivial),
            (3, &zm),
            (4, &trivial),
            (5, &zm),
        ] {
            let h = chain.homology(n);
            if &h != want {
                return Err(format!("m = {m}: H_{n} = {h}, expected {want}"));
            }
        }
    }
    Ok("m = 2, 3, 4: Z, Zm, 0, Zm, 0, Zm in degrees 0..5".into())
}

fn criterion_5() -> Outcome {
    let sims = simulators(FULL_COLUMN_LIMIT);
    let mut checks = Vec::new();
    for (m, s) in &sims {
        let mut ctx = Context::new(m, s, SEED);
        checks.extend(algebra_checks(&mut ctx).map_err(err)?);
        checks.extend(dynamics_checks(&mut ctx).map_err(err)?);
    }
    verdict(&checks, sims.len())
}

fn criterion_6() -> Outcome {
    let mut swept = 0;
    let mut pairs = 0;
    for m in finite_models() {
        let space = hom_space(&m, 0);
        let d = space.total().order().expect("finite");
        if d > BigInt::from(ORTHOGONALITY_CAP) {
            continue;
        }
        let r = orthogonality_sweep(&space, ORTHOGONALITY_CAP).map_err(err)?;
        if !r.passed() {
            return Err(format!("{}: {} failing pairs", m.name(), r.failures));
        }
        swept += 1;
        pairs += r.rep_pairs + r.conf_pairs;
    }
    Ok(format!(
        "{swept} models, {pairs} ordered pairs decided exactly"
    ))
}

fn criterion_7() -> Outcome {
    let sims = simulators(FULL_COLUMN_LIMIT);
    let mut checks = Vec::new();
    for (m, s) in &sims {
        let mut ctx = Context::new(m, s, SEED);
        checks.extend(projector_checks(&mut ctx).map_err(err)?);
    }
    verdict(&checks, sims.len())
}

fn criterion_8() -> Outcome {
    let sims = simulators(1 << 20);
    let mut checks = Vec::new();
    for (m, s) in &sims {
        let mut ctx = Context::new(m, s, SEED);
        checks.extend(ground_basis_checks(&mut ctx).map_err(err)?);
    }
    verdict(&checks, sims.len())
}

fn criterion_9() -> Outcome {
    let sims = simulators(1 << 20);
    let mut checks = Vec::new();
    for (m, s) in &sims {
        let mut ctx = Context::new(m, s, SEED);
        checks.extend(unitary_checks(&mut ctx).map_err(err)?);
        checks.extend(povm_checks(&mut ctx).map_err(err)?);
        checks.extend(density_checks(&mut ctx).map_err(err)?);
    }
    verdict(&checks, sims.len())
}

fn criterion_10() -> Outcome {
    let models = finite_models();
    for m in &models {
        for p in -1..=1 {
            let r = duality_rung(m, p).map_err(err)?;
            if !r.holds() {
                return Err(format!("{} p = {p}: {r:?}", m.name()));
            }
        }
    }
    Ok(format!("p ∈ {{-1, 0, 1}} on {} models", models.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("triple-oracle GSD agreement", 5, criterion_1),
        ("GSD = |H^0| = |H_0|", 2, criterion_2),
        ("UCT product equals GSD", 2, criterion_3),
        ("cyclic group homology", 1, criterion_4),
        ("operator algebra", 60, criterion_5),
        ("character orthogonality", 30, criterion_6),
        ("ground projector factorization", 30, criterion_7),
        ("frustration-freeness", 10, criterion_8),
        ("basis change, POVM and densities", 10, criterion_9),
        ("duality ladder", 5, criterion_10),
    ];
    let start = Instant::now();
    let mut failures = 0;
    for (i, (name, budget, run)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let elapsed = t.elapsed();
        let over = elapsed > Duration::from_secs(budget);
        let (tag, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("over the {budget} s budget; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if tag == "FAIL" {
            failures += 1;
        }
        println!(
            "{tag} criterion {:>2}: {name} [{:.2} s / {budget} s] {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "{} of 10 criteria passed in {:.2} s",
        10 - failures,
        start.elapsed().as_secs_f64()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
