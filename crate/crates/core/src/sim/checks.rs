//! Property suites run against a simulated model.
//!
//! Each suite returns named checks with a residual. Identities between
//! operators are compared column by column: every column for small spaces,
//! a seeded random sample of columns otherwise.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::abelian::SmallHom;
use crate::calculus::cohomology::cohomology;
use crate::calculus::differential::dual_differential;
use crate::calculus::orbits::{gauge_orbits, DEFAULT_ENUM_CAP};
use crate::chain::GaugeModel;
use crate::error::{Error, Result};
use crate::sim::basis::{BasisIndexer, StateVector};
use crate::sim::ground::{
    basis_change_matrix, ground_basis, ground_density, identity_residual, povm_check,
    unitarity_residual, GroundSpace,
};
use crate::sim::operator::{column_distance, Operator, DENSE_LIMIT};
use crate::sim::simulator::{hamiltonian_from, Simulator, TOLERANCE};

/// Every column is compared up to this dimension.
pub const FULL_COLUMN_LIMIT: u64 = 1 << 14;

/// Operator identities are not checked above this dimension.
pub const CHECK_DIM_LIMIT: u64 = 1 << 20;

/// Random pairs drawn when a family is too large to sweep.
pub const SAMPLED_PAIRS: usize = 200;

/// Columns drawn when a space is too large to compare fully.
pub const SAMPLED_COLUMNS: usize = 64;

/// Pair sweeps are exhaustive up to this many pairs.
const EXHAUSTIVE_PAIRS: u64 = 1 << 12;

/// Columns compared for each pair in a family sweep above [`DENSE_LIMIT`].
const PAIR_COLUMNS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Algebra,
    Projectors,
    GroundBasis,
    Unitary,
    Povm,
    Density,
    Dynamics,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Algebra,
        Suite::Projectors,
        Suite::GroundBasis,
        Suite::Unitary,
        Suite::Povm,
        Suite::Density,
        Suite::Dynamics,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Projectors => "projectors",
            Suite::GroundBasis => "ground-basis",
            Suite::Unitary => "unitary",
            Suite::Povm => "povm",
            Suite::Density => "density",
            Suite::Dynamics => "dynamics",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Schema(format!("unknown check suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub status: Status,
    pub residual: f64,
    pub detail: String,
}

impl Check {
    fn measured(
        suite: Suite,
        name: impl Into<String>,
        residual: f64,
        detail: impl Into<String>,
    ) -> Self {
        let status = if residual.is_finite() && residual <= TOLERANCE {
            Status::Pass
        } else {
            Status::Fail
        };
        Check {
            suite,
            name: name.into(),
            status,
            residual,
            detail: detail.into(),
        }
    }

    fn exact(suite: Suite, name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            suite,
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            residual: if ok { 0.0 } else { 1.0 },
            detail: detail.into(),
        }
    }

    fn skipped(suite: Suite, name: impl Into<String>, reason: impl Into<String>) -> Self {
        Check {
            suite,
            name: name.into(),
            status: Status::Skipped,
            residual: 0.0,
            detail: reason.into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SimReport {
    pub model: String,
    pub dimension: u64,
    pub gsd: u64,
    pub checks: Vec<Check>,
}

impl SimReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

/// Everything a suite needs, built once.
pub struct Context<'a> {
    pub model: &'a GaugeModel,
    pub sim: &'a Simulator,
    pub ground: Option<GroundSpace>,
    rng: ChaCha8Rng,
}

impl<'a> Context<'a> {
    pub fn new(model: &'a GaugeModel, sim: &'a Simulator, seed: u64) -> Self {
        Context {
            model,
            sim,
            ground: None,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn basis(&self) -> &BasisIndexer {
        self.sim.basis()
    }

    fn dim(&self) -> u64 {
        self.sim.dimension()
    }

    fn ground(&mut self) -> Result<&GroundSpace> {
        if self.ground.is_none() {
            self.ground = Some(ground_basis(self.model, self.sim)?);
        }
        Ok(self.ground.as_ref().expect("just built"))
    }

    /// Every column when `D ≤ limit`, otherwise a seeded sample.
    fn columns(&mut self, limit: u64, sample: usize) -> Vec<u64> {
        let d = self.dim();
        if d <= limit {
            (0..d).collect()
        } else {
            rand::seq::index::sample(&mut self.rng, d as usize, sample)
                .into_iter()
                .map(|i| i as u64)
                .collect()
        }
    }

    /// All pairs from `0..n × 0..m` when few enough, else random pairs.
    fn pairs(&mut self, n: u64, m: u64) -> (Vec<(u64, u64)>, bool) {
        if n * m <= EXHAUSTIVE_PAIRS {
            (
                (0..n).flat_map(|a| (0..m).map(move |b| (a, b))).collect(),
                true,
            )
        } else {
            (
                (0..SAMPLED_PAIRS)
                    .map(|_| (self.rng.random_range(0..n), self.rng.random_range(0..m)))
                    .collect(),
                false,
            )
        }
    }

    fn singles(&mut self, n: u64) -> (Vec<u64>, bool) {
        if n <= EXHAUSTIVE_PAIRS {
            ((0..n).collect(), true)
        } else {
            (
                (0..SAMPLED_PAIRS)
                    .map(|_| self.rng.random_range(0..n))
                    .collect(),
                false,
            )
        }
    }

    fn random_state(&mut self) -> StateVector {
        let d = self.dim();
        StateVector {
            amplitudes: (0..d)
                .map(|_| {
                    Complex64::new(
                        self.rng.random::<f64>() - 0.5,
                        self.rng.random::<f64>() - 0.5,
                    )
                })
                .collect(),
        }
        .normalized()
        .expect("nonzero random state")
    }
}

fn distance(basis: &BasisIndexer, a: &Operator, b: &Operator, columns: &[u64]) -> f64 {
    columns
        .par_iter()
        .map(|&w| column_distance(&a.column(basis, w), &b.column(basis, w)))
        .reduce(|| 0.0, f64::max)
}

fn coverage(exhaustive: bool, count: usize) -> String {
    if exhaustive {
        format!("exhaustive over {count}")
    } else {
        format!("{count} seeded samples")
    }
}

fn cols_note(cols: &[u64], d: u64) -> String {
    if cols.len() as u64 == d {
        format!("all {d} columns")
    } else {
        format!("{} sampled columns of {d}", cols.len())
    }
}

/// Run the selected suites. Suites that do not apply are reported as
/// skipped with the reason.
pub fn run_checks(
    model: &GaugeModel,
    sim: &Simulator,
    suites: &[Suite],
    seed: u64,
) -> Result<SimReport> {
    let gsd = sim.gsd_by_trace()?.gsd;
    let mut ctx = Context::new(model, sim, seed);
    let mut checks = Vec::new();
    for &suite in suites {
        if sim.dimension() > CHECK_DIM_LIMIT {
            checks.push(Check::skipped(
                suite,
                suite.name(),
                format!(
                    "D = {} exceeds the check limit {CHECK_DIM_LIMIT}",
                    sim.dimension()
                ),
            ));
            continue;
        }
        checks.extend(match suite {
            Suite::Algebra => algebra_checks(&mut ctx)?,
            Suite::Projectors => projector_checks(&mut ctx)?,
            Suite::GroundBasis => ground_basis_checks(&mut ctx)?,
            Suite::Unitary => unitary_checks(&mut ctx)?,
            Suite::Povm => povm_checks(&mut ctx)?,
            Suite::Density => density_checks(&mut ctx)?,
            Suite::Dynamics => dynamics_checks(&mut ctx)?,
        });
    }
    Ok(SimReport {
        model: model.name().to_string(),
        dimension: sim.dimension(),
        gsd,
        checks,
    })
}

/// Operator axioms of shifts and clocks, the dual action on the
/// representation basis, and the Fourier form of `A_0̂`.
pub fn algebra_checks(ctx: &mut Context) -> Result<Vec<Check>> {
    let s = Suite::Algebra;
    let d = ctx.dim();
    if d > FULL_COLUMN_LIMIT {
        return Ok(vec![Check::skipped(
            s,
            "shift/clock algebra",
            format!("D = {d} > {FULL_COLUMN_LIMIT}"),
        )]);
    }
    let basis = ctx.basis().clone();
    let r = basis.radix();
    let ph = basis.phases();
    let digits: Vec<Vec<u64>> = (0..d).map(|w| r.digits(w)).collect();
    let chi = |k: u64, w: u64| ph.eval(&digits[k as usize], &digits[w as usize]);
    let (pairs, exhaustive) = if d <= DENSE_LIMIT {
        (
            (0..d).flat_map(|a| (0..d).map(move |b| (a, b))).collect(),
            true,
        )
    } else {
        let mut v = Vec::new();
        for _ in 0..SAMPLED_PAIRS {
            v.push((ctx.rng.random_range(0..d), ctx.rng.random_range(0..d)));
        }
        (v, false)
    };
    let note = format!(
        "{} pairs, all {d} columns",
        coverage(exhaustive, pairs.len())
    );
    let sweep = |f: &(dyn Fn(u64, u64, u64) -> f64 + Sync)| -> f64 {
        pairs
            .par_iter()
            .map(|&(a, b)| (0..d).map(|w| f(a, b, w)).fold(0.0, f64::max))
            .reduce(|| 0.0, f64::max)
    };
    let mut out = Vec::new();
    // P^a P^b |w⟩ = |w + b + a⟩ against P^{a+b} |w⟩.
    let shift =
        sweep(&|a, b, w| f64::from(u8::from(r.add(r.add(w, b), a) != r.add(w, r.add(a, b)))));
    out.push(Check::measured(
        s,
        "P^α P^α' = P^{α+α'}",
        shift,
        note.clone(),
    ));
    let clock = sweep(&|a, b, w| (chi(a, w) * chi(b, w) - chi(r.add(a, b), w)).norm());
    out.push(Check::measured(
        s,
        "Q_β Q_β' = Q_{β+β'}",
        clock,
        note.clone(),
    ));
    // Both sides map |w⟩ to a multiple of |w + α⟩.
    let weyl = sweep(&|beta, alpha, w| {
        (chi(beta, r.add(w, alpha)) - chi(beta, alpha) * chi(beta, w)).norm()
    });
    out.push(Check::measured(s, "Q_β P^α = χ_β(α) P^α Q_β", weyl, note));
    let singles: Vec<u64> = if d <= DENSE_LIMIT {
        (0..d).collect()
    } else {
        (0..SAMPLED_PAIRS)
            .map(|_| ctx.rng.random_range(0..d))
            .collect()
    };
    let all_cols: Vec<u64> = (0..d).collect();
    let unitary = singles
        .iter()
        .map(|&a| {
            let p = Operator::Shift(a);
            let q = Operator::Clock(a);
            let pp = Operator::Product(vec![p.adjoint(&basis), p]);
            let qq = Operator::Product(vec![q.adjoint(&basis), q]);
            distance(&basis, &pp, &Operator::Identity, &all_cols).max(distance(
                &basis,
                &qq,
                &Operator::Identity,
                &all_cols,
            ))
        })
        .fold(0.0, f64::max);
    out.push(Check::measured(
        s,
        "(P^α)† = P^{-α}, (Q_β)† = Q_{-β} unitary",
        unitary,
        coverage(d <= DENSE_LIMIT, singles.len()),
    ));
    if d > DENSE_LIMIT {
        out.push(Check::skipped(
            s,
            "dual action on representation basis",
            format!("D = {d} > {DENSE_LIMIT}"),
        ));
        out.push(Check::skipped(
            s,
            "Fourier form of A_0̂",
            format!("D = {d} > {DENSE_LIMIT}"),
        ));
        return Ok(out);
    }
    let reps: Vec<StateVector> = (0..d)
        .map(|k| StateVector::representation(&basis, k))
        .collect();
    let dual_p = (0..d)
        .into_par_iter()
        .map(|a| {
            (0..d)
                .map(|k| {
                    let lhs = Operator::Shift(a).apply(&basis, &reps[k as usize]);
                    let c = chi(k, a).conj();
                    let mut rhs = reps[k as usize].clone();
                    rhs.amplitudes.iter_mut().for_each(|x| *x *= c);
                    lhs.distance(&rhs)
                })
                .fold(0.0, f64::max)
        })
        .reduce(|| 0.0, f64::max);
    out.push(Check::measured(
        s,
        "P^α |ρ̂⟩ = χ̄_ρ̂(α) |ρ̂⟩",
        dual_p,
        format!("all {} pairs", d * d),
    ));
    let dual_q = (0..d)
        .into_par_iter()
        .map(|b| {
            (0..d)
                .map(|k| {
                    Operator::Clock(b)
                        .apply(&basis, &reps[k as usize])
                        .distance(&reps[r.add(k, b) as usize])
                })
                .fold(0.0, f64::max)
        })
        .reduce(|| 0.0, f64::max);
    out.push(Check::measured(
        s,
        "Q_β |ρ̂⟩ = |ρ̂ + β⟩",
        dual_q,
        format!("all {} pairs", d * d),
    ));
    // In the representation basis A_0̂ is the projector onto ker d_0.
    let d0 = SmallHom::new(&dual_differential(ctx.model, 0)?)?;
    let a0 = ctx.sim.gauge_projector();
    let fourier = (0..d)
        .map(|k| {
            let in_kernel = d0.apply(&digits[k as usize]).iter().all(|&x| x == 0);
            let lhs = a0.apply(&basis, &reps[k as usize]);
            if in_kernel {
                lhs.distance(&reps[k as usize])
            } else {
                lhs.norm()
            }
        })
        .fold(0.0, f64::max);
    out.push(Check::measured(
        s,
        "F† A_0̂ F = projector onto ker d_0",
        fourier,
        format!("all {d} representations"),
    ));
    Ok(out)
}

fn projector_residuals(basis: &BasisIndexer, p: &Operator, cols: &[u64]) -> f64 {
    let sq = Operator::Product(vec![p.clone(), p.clone()]);
    distance(basis, &sq, p, cols).max(distance(basis, &p.adjoint(basis), p, cols))
}

/// Local projectors, their factorisation into `Π`, the trace identity and
/// the spectrum of `H`.
pub fn projector_checks(ctx: &mut Context) -> Result<Vec<Check>> {
    let s = Suite::Projectors;
    let sim = ctx.sim;
    let basis = ctx.basis().clone();
    let d = ctx.dim();
    let cols = ctx.columns(FULL_COLUMN_LIMIT, SAMPLED_COLUMNS);
    let note = cols_note(&cols, d);
    let mut out = Vec::new();
    let locals = sim.local_projectors();
    let local_res = locals
        .iter()
        .map(|t| projector_residuals(&basis, &t.operator, &cols))
        .fold(0.0, f64::max);
    out.push(Check::measured(
        s,
        "A_x, B_y idempotent and self-adjoint",
        local_res,
        format!("{} local terms, {note}", locals.len()),
    ));
    let mut commute: f64 = 0.0;
    for (i, a) in locals.iter().enumerate() {
        for b in &locals[i + 1..] {
            let c = Operator::commutator(&a.operator, &b.operator);
            commute = commute.max(distance(
                &basis,
                &c,
                &Operator::Identity.complement(),
                &cols,
            ));
        }
    }
    out.push(Check::measured(
        s,
        "local terms pairwise commute",
        commute,
        note.clone(),
    ));
    let pi = sim.ground_projector();
    let a0 = sim.gauge_projector();
    let b0 = sim.flat_projector();
    let ab = projector_residuals(&basis, &a0, &cols)
        .max(projector_residuals(&basis, &b0, &cols))
        .max(distance(
            &basis,
            &Operator::commutator(&a0, &b0),
            &Operator::Identity.complement(),
            &cols,
        ));
    out.push(Check::measured(
        s,
        "A_0̂, B^0 commuting projectors",
        ab,
        note.clone(),
    ));
    let local_pi = sim.local_ground_projector();
    let fact = distance(&basis, &pi, &local_pi, &cols).max(distance(
        &basis,
        &pi,
        &Operator::Product(vec![b0.clone(), a0.clone()]),
        &cols,
    ));
    out.push(Check::measured(
        s,
        "Π = A_0̂ B^0 = B^0 A_0̂ = ∏A_x ∏B_y",
        fact,
        note.clone(),
    ));
    let h = hamiltonian_from(&locals);
    let pi_props = projector_residuals(&basis, &pi, &cols)
        .max(distance(
            &basis,
            &Operator::Product(vec![h.clone(), pi.clone()]),
            &Operator::Identity.complement(),
            &cols,
        ))
        .max(distance(
            &basis,
            &Operator::commutator(&pi, &h),
            &Operator::Identity.complement(),
            &cols,
        ));
    out.push(Check::measured(
        s,
        "Π² = Π = Π†, HΠ = 0, [Π, H] = 0",
        pi_props,
        note.clone(),
    ));
    let t = sim.gsd_by_trace()?;
    let h0 = cohomology(ctx.model, 0)?
        .order()
        .and_then(|o| u64::try_from(o).ok());
    let orbits = match gauge_orbits(ctx.model, DEFAULT_ENUM_CAP) {
        Ok(o) => Some(o.count() as u64),
        Err(Error::TooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    let mut ok = t.gsd == t.counted && h0 == Some(t.gsd);
    let mut detail = format!(
        "Tr Π = {:.12} (residual {:.1e}); |ker d^0|·|ker d^-1|/|hom^-1| = {}; |H^0| = {}",
        t.trace,
        t.residual,
        t.counted,
        h0.map_or("?".into(), |x| x.to_string())
    );
    match orbits {
        Some(o) => {
            ok &= o == t.gsd;
            detail.push_str(&format!("; orbits = {o}"));
        }
        None => detail.push_str("; orbit count skipped (enumeration cap)"),
    }
    out.push(Check::exact(s, "Tr Π = |H^0| = orbit count", ok, detail));
    // σ(H) ⊆ ln2·{0..K}: the normalised polynomial ∏_k (H − k ln2)/(K ln2)
    // annihilates every vector.
    let k = locals.len();
    let ln2 = std::f64::consts::LN_2;
    let scale = (k.max(1) as f64) * ln2;
    if d <= FULL_COLUMN_LIMIT {
        let mut v = ctx.random_state();
        for level in 0..=k {
            let hv = h.apply(&basis, &v);
            v = StateVector {
                amplitudes: hv
                    .amplitudes
                    .iter()
                    .zip(&v.amplitudes)
                    .map(|(x, y)| (x - y * (level as f64 * ln2)) / scale)
                    .collect(),
            };
        }
        out.push(Check::measured(
            s,
            "σ(H) ⊆ ln2·ℕ (annihilating polynomial)",
            v.norm(),
            format!("degree {} on a random state", k + 1),
        ));
    } else {
        out.push(Check::skipped(
            s,
            "σ(H) ⊆ ln2·ℕ (annihilating polynomial)",
            format!("D = {d} > {FULL_COLUMN_LIMIT}"),
        ));
    }
    if d <= DENSE_LIMIT {
        let hd = h.to_dense(&basis)?;
        let eig = hd.clone().symmetric_eigen();
        let spec_res = eig
            .eigenvalues
            .iter()
            .map(|e| (e / ln2 - (e / ln2).round()).abs() * ln2)
            .fold(0.0, f64::max);
        out.push(Check::measured(
            s,
            "σ(H) ⊆ ln2·ℕ (dense eigenvalues)",
            spec_res,
            format!("{d}×{d}"),
        ));
        // e^{−βH} tends to Π; at β = 60 the gap term is 2^{−60}.
        let beta = 60.0;
        let u = &eig.eigenvectors;
        let expd = DMatrix::from_diagonal(
            &eig.eigenvalues
                .map(|e| Complex64::new((-beta * e).exp(), 0.0)),
        );
        let heat = u * expd * u.adjoint();
        let lim = (heat - pi.to_dense(&basis)?)
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
        out.push(Check::measured(
            s,
            "e^{-βH} → Π (β = 60)",
            lim,
            format!("{d}×{d}"),
        ));
    }
    Ok(out)
}

/// Orthonormality, span and frustration-freeness of both ground bases.
pub fn ground_basis_checks(ctx: &mut Context) -> Result<Vec<Check>> {
    let s = Suite::GroundBasis;
    let gsd = ctx.sim.gsd_by_trace()?.gsd;
    let basis = ctx.basis().clone();
    let locals = ctx.sim.local_projectors();
    let pi = ctx.sim.ground_projector();
    let h = hamiltonian_from(&locals);
    let gs = ctx.ground()?.clone();
    let mut out = vec![Check::exact(
        s,
        "basis sizes equal GSD",
        gs.configuration.len() as u64 == gsd && gs.representation.len() as u64 == gsd,
        format!(
            "{} configuration, {} representation, GSD {gsd}",
            gs.configuration.len(),
            gs.representation.len()
        ),
    )];
    let Some((gc, gr)) = gs.gram() else {
        out.push(Check::skipped(
            s,
            "ground vectors",
            "dimension above the vector limit",
        ));
        return Ok(out);
    };
    out.push(Check::measured(
        s,
        "Gram matrices = identity",
        identity_residual(&gc).max(identity_residual(&gr)),
        "both labellings",
    ));
    let vectors: Vec<&StateVector> = gs
        .configuration
        .iter()
        .chain(&gs.representation)
        .map(|g| g.vector.as_ref().expect("vectors present"))
        .collect();
    let fixed = |op: &Operator| -> f64 {
        vectors
            .par_iter()
            .map(|v| op.apply(&basis, v).distance(v))
            .reduce(|| 0.0, f64::max)
    };
    out.push(Check::measured(
        s,
        "Π v = v",
        fixed(&pi),
        format!("{} vectors", vectors.len()),
    ));
    let local = locals
        .iter()
        .map(|t| fixed(&t.operator))
        .fold(0.0, f64::max);
    out.push(Check::measured(
        s,
        "A_x v = B_y v = v for every site",
        local,
        format!("{} sites × {} vectors", locals.len(), vectors.len()),
    ));
    let hv = vectors
        .par_iter()
        .map(|v| h.apply(&basis, v).norm())
        .reduce(|| 0.0, f64::max);
    out.push(Check::measured(
        s,
        "H v = 0",
        hv,
        format!("{} vectors", vectors.len()),
    ));
    // Each representation state lies in the span of the configuration states.
    let span = gs
        .representation
        .iter()
        .map(|r| {
            let v = r.vector.as_ref().expect("vectors present");
            let mut rest = v.clone();
            for c in &gs.configuration {
                let cv = c.vector.as_ref().expect("vectors present");
                let x = cv.inner(v);
                for (a, b) in rest.amplitudes.iter_mut().zip(&cv.amplitudes) {
                    *a -= x * b;
                }
            }
            rest.norm()
        })
        .fold(0.0, f64::max);
    out.push(Check::measured(
        s,
        "both bases span the same space",
        span,
        "projection residual",
    ));
    Ok(out)
}

/// Unitarity of the basis change and agreement with the measured overlaps.
pub fn unitary_checks(ctx: &mut Context) -> Result<Vec<Check>> {
    let s = Suite::Unitary;
    let sim = ctx.sim;
    let gs = ctx.ground()?.clone();
    let u = basis_change_matrix(sim, &gs);
    let g = gs.dimension();
    let mut out = vec![Check::measured(
        s,
        "U U† = U† U = 1",
        unitarity_residual(&u),
        format!("{g}×{g}"),
    )];
    match gs.measured_overlaps() {
        Some(m) => {
            let res = (m.map(|c| c.conj()) - &u)
                .iter()
                .map(|c| c.norm())
                .fold(0.0, f64::max);
            out.push(Check::measured(
                s,
                "U[ω̲][α̂] = ⟨α̂|ω̲⟩",
                res,
                "against ground vectors",
            ));
        }
        None => out.push(Check::skipped(
            s,
            "U[ω̲][α̂] = ⟨α̂|ω̲⟩",
            "dimension above the vector limit",
        )),
    }
    Ok(out)
}

/// POVM identities from the two restricted projector families.
pub fn povm_checks(ctx: &mut Context) -> Result<Vec<Check>> {
    let s = Suite::Povm;
    let sim = ctx.sim;
    let gs = ctx.ground()?.clone();
    let r = povm_check(sim, &gs);
    let g = r.gsd as f64;
    let n = format!("{} elements", r.elements);
    let mut out = vec![
        Check::measured(
            s,
            "Σ_ω Π^ω = 1",
            r.configuration_sum,
            format!("{} projectors", r.gsd),
        ),
        Check::measured(
            s,
            "Σ_ν Π_ν = 1",
            r.representation_sum,
            format!("{} projectors", r.gsd),
        ),
        Check::measured(s, "Σ Θ = 1", r.theta_sum, n.clone()),
        Check::measured(s, "Θ self-adjoint", r.theta_hermitian, n.clone()),
        Check::measured(s, "Σ Θ̃ = 1", r.theta_tilde_sum, n.clone()),
        Check::measured(s, "Θ̃ self-adjoint", r.theta_tilde_hermitian, n.clone()),
        Check::measured(
            s,
            "Θ̃ positive",
            (-r.theta_tilde_min_eigenvalue).max(0.0),
            format!("min eigenvalue {:.3e}", r.theta_tilde_min_eigenvalue),
        ),
    ];
    // Θ has eigenvalues ½(1/g ± 1/√g) on the span of e_ω and m_ν; for g = 1
    // the two coincide and Θ = 1.
    let predicted = if r.gsd == 1 {
        1.0
    } else {
        0.5 * (1.0 / g - 1.0 / g.sqrt())
    };
    out.push(Check::measured(
        s,
        "min eig Θ = ½(1/g − 1/√g)",
        (r.theta_min_eigenvalue - predicted).abs(),
        format!("min eigenvalue {:.6e}", r.theta_min_eigenvalue),
    ));
    match r.mixed_overlap {
        Some(res) => out.push(Check::measured(
            s,
            "⟨ω̲|ν̂⟩ = χ_ν̂(ω)/√g",
            res,
            "against ground vectors",
        )),
        None => out.push(Check::skipped(
            s,
            "⟨ω̲|ν̂⟩ = χ_ν̂(ω)/√g",
            "dimension above the vector limit",
        )),
    }
    Ok(out)
}

/// Ground-space densities for uniform, point-mass and skewed weights.
pub fn density_checks(ctx: &mut Context) -> Result<Vec<Check>> {
    let s = Suite::Density;
    let sim = ctx.sim;
    let basis = ctx.basis().clone();
    let gs = ctx.ground()?.clone();
    let g = gs.dimension();
    if g > crate::sim::ground::DENSITY_GSD_CAP {
        return Ok(vec![Check::skipped(
            s,
            "densities",
            format!("GSD {g} above the density cap"),
        )]);
    }
    let n = g * g;
    let mut skewed = vec![0.0; n];
    for (i, w) in [0.5, 0.25, 0.125, 0.125].into_iter().enumerate() {
        skewed[i % n] += w;
    }
    let mut point = vec![0.0; n];
    point[n - 1] = 1.0;
    let cases = [
        ("uniform", vec![1.0 / n as f64; n]),
        ("point mass", point),
        ("skewed", skewed),
    ];
    // Π restricted to the ground space, measured from the vectors.
    let restricted = gs
        .configuration
        .iter()
        .all(|c| c.vector.is_some())
        .then(|| {
            let pi = sim.ground_projector();
            DMatrix::from_fn(g, g, |i, j| {
                let ci = gs.configuration[i].vector.as_ref().expect("present");
                let cj = gs.configuration[j].vector.as_ref().expect("present");
                ci.inner(&pi.apply(&basis, cj))
            })
        });
    let mut out = Vec::new();
    for (name, w) in cases {
        let rho = ground_density(sim, &gs, &w)?;
        let mut res = (rho.trace() - Complex64::new(1.0, 0.0)).norm();
        res = res.max(rho.marginal_residual(sim, &gs));
        res = res.max((rho.marginal_conf.trace() - 1.0).norm());
        res = res.max((rho.marginal_rep.trace() - 1.0).norm());
        res = res.max((rho.conf_weights.iter().sum::<f64>() - 1.0).abs());
        res = res.max((rho.rep_weights.iter().sum::<f64>() - 1.0).abs());
        let mut detail = format!("purity {:.6}", rho.purity());
        if name == "uniform" {
            let scaled = |m: &DMatrix<Complex64>| {
                identity_residual(&(m * Complex64::new(g as f64, 0.0))) / g as f64
            };
            res = res
                .max(scaled(&rho.marginal_conf))
                .max(scaled(&rho.marginal_rep));
            detail.push_str("; marginals = 1/g");
        }
        if name == "point mass" {
            res = res.max((rho.purity() - 1.0).abs());
        }
        out.push(Check::measured(
            s,
            format!("{name}: Tr ρ = 1, marginals"),
            res,
            detail,
        ));
        match &restricted {
            Some(p) => {
                let big = p.kronecker(p);
                let comm = (&big * &rho.joint - &rho.joint * &big)
                    .iter()
                    .map(|c| c.norm())
                    .fold(0.0, f64::max);
                out.push(Check::measured(
                    s,
                    format!("{name}: [π(Π), ρ] = 0"),
                    comm,
                    "Π measured on ground vectors",
                ));
            }
            None => out.push(Check::skipped(
                s,
                format!("{name}: [π(Π), ρ] = 0"),
                "dimension above the vector limit",
            )),
        }
    }
    let bad = ground_density(sim, &gs, &vec![2.0 / n as f64; n]);
    out.push(Check::exact(
        s,
        "unnormalised weights rejected",
        matches!(bad, Err(Error::BadWeights(_))),
        "weights summing to 2",
    ));
    Ok(out)
}

/// `U(t) = ∏_terms (P + e^{−iθ}(1 − P))` with `θ = t ln 2`; exact for commuting
/// projector terms.
fn evolution(locals: &[crate::sim::simulator::LocalProjector], t: f64) -> Operator {
    let phase = Complex64::from_polar(1.0, -t * std::f64::consts::LN_2);
    Operator::Product(
        locals
            .iter()
            .map(|l| {
                Operator::Sum(vec![
                    (Complex64::new(1.0, 0.0), l.operator.clone()),
                    (phase, l.operator.clone().complement()),
                ])
            })
            .collect(),
    )
}

/// Conservation laws of `A_ρ̂` and `B^ω`, their algebra and time independence.
pub fn dynamics_checks(ctx: &mut Context) -> Result<Vec<Check>> {
    let s = Suite::Dynamics;
    let sim = ctx.sim;
    let basis = ctx.basis().clone();
    let d = ctx.dim();
    let na = sim.gauge_order();
    let nb = sim.flux_order();
    let locals = sim.local_projectors();
    let h = hamiltonian_from(&locals);
    let cols = ctx.columns(DENSE_LIMIT, PAIR_COLUMNS);
    let note = cols_note(&cols, d);
    let zero = Operator::Identity.complement();
    let mut out = Vec::new();

    let (ra, ea) = ctx.singles(na);
    let (rb, eb) = ctx.singles(nb);
    let a_ops: Vec<(u64, Operator)> = ra.iter().map(|&r| (r, sim.fake_gauge(r))).collect();
    let b_ops: Vec<(u64, Operator)> = rb.iter().map(|&w| (w, sim.fake_holonomy(w))).collect();
    let ha = a_ops
        .par_iter()
        .map(|(_, a)| distance(&basis, &Operator::commutator(&h, a), &zero, &cols))
        .reduce(|| 0.0, f64::max);
    out.push(Check::measured(
        s,
        "[H, A_ρ̂] = 0",
        ha,
        format!("{} ρ̂, {note}", coverage(ea, a_ops.len())),
    ));
    let hb = b_ops
        .par_iter()
        .map(|(_, b)| distance(&basis, &Operator::commutator(&h, b), &zero, &cols))
        .reduce(|| 0.0, f64::max);
    out.push(Check::measured(
        s,
        "[H, B^ω] = 0",
        hb,
        format!("{} ω, {note}", coverage(eb, b_ops.len())),
    ));
    let proj = a_ops
        .iter()
        .chain(&b_ops)
        .map(|(_, x)| projector_residuals(&basis, x, &cols))
        .fold(0.0, f64::max);
    out.push(Check::measured(
        s,
        "A_ρ̂, B^ω idempotent and self-adjoint",
        proj,
        note.clone(),
    ));

    let (pairs, e) = ctx.pairs(na, nb);
    let ab = pairs
        .par_iter()
        .map(|&(r, w)| {
            let c = Operator::commutator(&sim.fake_gauge(r), &sim.fake_holonomy(w));
            distance(&basis, &c, &zero, &cols)
        })
        .reduce(|| 0.0, f64::max);
    out.push(Check::measured(
        s,
        "A_ρ̂ B^ω = B^ω A_ρ̂",
        ab,
        format!("{} pairs, {note}", coverage(e, pairs.len())),
    ));

    let (pairs, e) = ctx.pairs(na, na);
    let aa = pairs
        .par_iter()
        .map(|&(r, q)| {
            let lhs = Operator::Product(vec![sim.fake_gauge(r), sim.fake_gauge(q)]);
            let rhs = if r == q {
                sim.fake_gauge(q)
            } else {
                zero.clone()
            };
            distance(&basis, &lhs, &rhs, &cols)
        })
        .reduce(|| 0.0, f64::max);
    out.push(Check::measured(
        s,
        "A_ρ̂ A_ρ̂' = δ A_ρ̂'",
        aa,
        format!("{} pairs, {note}", coverage(e, pairs.len())),
    ));
    let (pairs, e) = ctx.pairs(nb, nb);
    let bb = pairs
        .par_iter()
        .map(|&(w, v)| {
            let lhs = Operator::Product(vec![sim.fake_holonomy(w), sim.fake_holonomy(v)]);
            let rhs = if w == v {
                sim.fake_holonomy(v)
            } else {
                zero.clone()
            };
            distance(&basis, &lhs, &rhs, &cols)
        })
        .reduce(|| 0.0, f64::max);
    out.push(Check::measured(
        s,
        "B^ω B^ω' = δ B^ω'",
        bb,
        format!("{} pairs, {note}", coverage(e, pairs.len())),
    ));

    if na <= EXHAUSTIVE_PAIRS {
        let sum = Operator::Sum(
            (0..na)
                .map(|r| (Complex64::new(1.0, 0.0), sim.fake_gauge(r)))
                .collect(),
        );
        out.push(Check::measured(
            s,
            "Σ_ρ̂ A_ρ̂ = 1",
            distance(&basis, &sum, &Operator::Identity, &cols),
            note.clone(),
        ));
    } else {
        out.push(Check::skipped(s, "Σ_ρ̂ A_ρ̂ = 1", format!("|hom^-1| = {na}")));
    }
    if nb.saturating_mul(d) <= 1 << 26 {
        let mut total = vec![0.0f64; d as usize];
        for w in 0..nb {
            if let Operator::Diagonal(diag) = sim.fake_holonomy(w) {
                total.iter_mut().zip(diag.iter()).for_each(|(t, x)| *t += x);
            }
        }
        let res = total.iter().map(|t| (t - 1.0).abs()).fold(0.0, f64::max);
        out.push(Check::measured(
            s,
            "Σ_ω B^ω = 1",
            res,
            format!("{nb} holonomies, all {d} states"),
        ));
    } else {
        out.push(Check::skipped(
            s,
            "Σ_ω B^ω = 1",
            format!("|hom^1|·D = {nb}·{d}"),
        ));
    }

    let mut time_res: f64 = 0.0;
    let probes: Vec<Operator> = a_ops
        .iter()
        .chain(&b_ops)
        .take(16)
        .map(|(_, x)| x.clone())
        .collect();
    for t in [0.37, 1.9, 5.25] {
        let u = evolution(&locals, t);
        let ud = u.adjoint(&basis);
        time_res = time_res.max(distance(
            &basis,
            &Operator::Product(vec![u.clone(), ud.clone()]),
            &Operator::Identity,
            &cols,
        ));
        for x in &probes {
            let moved = Operator::Product(vec![ud.clone(), x.clone(), u.clone()]);
            time_res = time_res.max(distance(&basis, &moved, x, &cols));
        }
    }
    out.push(Check::measured(
        s,
        "U(t)† X U(t) = X for X = A_ρ̂, B^ω",
        time_res,
        format!("{} operators at 3 times, {note}", probes.len()),
    ));
    if d <= DENSE_LIMIT {
        let hd = h.to_dense(&basis)?;
        let eig = hd.symmetric_eigen();
        let t = 1.9;
        let diag =
            DMatrix::from_diagonal(&eig.eigenvalues.map(|e| Complex64::from_polar(1.0, -t * e)));
        let exact = &eig.eigenvectors * diag * eig.eigenvectors.adjoint();
        let res = (exact - evolution(&locals, t).to_dense(&basis)?)
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
        out.push(Check::measured(
            s,
            "e^{-itH} = ∏ (P + e^{-it ln2}(1 − P))",
            res,
            format!("{d}×{d}, t = {t}"),
        ));
    }
    Ok(out)
}
