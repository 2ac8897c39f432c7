//! One function per subcommand, each building a [`Report`].

use hgauge_core::calculus::{
    cohomology, differential, dual_differential, factored_dual_differential, gauge_orbits, gsd,
    hom_space, homology, uct_decomposition_at, CohomologyResult,
};
use hgauge_core::chain::GradedChain;
use hgauge_core::io::Expected;
use hgauge_core::sim::{run_checks, thermodynamics, Suite};
use hgauge_core::{Error, GaugeModel, ModelFile, Result, Simulator};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::models;
use crate::report::{CheckRow, Report, Status};
use crate::{Method, Side};

fn open(arg: &str) -> Result<(ModelFile, GaugeModel)> {
    let file = models::load(arg)?;
    let model = file.build()?;
    Ok((file, model))
}

fn big(n: &BigInt) -> Value {
    match n.to_u64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn chain_homology(chain: &GradedChain) -> Map<String, Value> {
    chain
        .degrees()
        .map(|n| (n.to_string(), json!(chain.homology(n).to_string())))
        .collect()
}

fn hom_order(model: &GaugeModel, p: i64) -> Value {
    match hom_space(model, p).total().order() {
        Some(o) => big(&o),
        None => json!("infinite"),
    }
}

fn boundary_checks(report: &mut Report, what: &str, chain: &GradedChain) {
    let mut bad = Vec::new();
    for n in chain.degrees() {
        let zero = chain
            .boundary(n - 1)
            .compose(&chain.boundary(n))
            .map(|c| c.is_zero())
            .unwrap_or(false);
        if !zero {
            bad.push(n);
        }
    }
    let detail = if bad.is_empty() {
        format!("degrees {}..{}", chain.min_degree(), chain.max_degree())
    } else {
        format!("nonzero from degrees {bad:?}")
    };
    report.check(CheckRow::new(
        format!("{what} ∂∘∂ = 0"),
        bad.is_empty(),
        detail,
    ));
}

fn manifest_checks(report: &mut Report, model: &GaugeModel, expected: &Expected) -> Result<()> {
    if let Some(want) = expected.gsd {
        let got = gsd(model).map(|g| g.cohomology.to_string());
        let ok = got.as_deref() == Ok(want.to_string().as_str());
        let detail = match &got {
            Ok(g) => format!("expected {want}, got {g}"),
            Err(e) => format!("expected {want}: {e}"),
        };
        report.check(CheckRow::new("manifest gsd", ok, detail));
    }
    if let Some(want) = expected.dimension {
        let got = hom_space(model, 0).total().order();
        let ok = got == Some(BigInt::from(want));
        let got = got.map_or("infinite".to_string(), |o| o.to_string());
        report.check(CheckRow::new(
            "manifest dimension",
            ok,
            format!("expected {want}, got {got}"),
        ));
    }
    for (key, want) in &expected.cohomology {
        let p: i64 = key.parse().map_err(|_| {
            Error::Schema(format!("expected.cohomology key {key:?} is not a degree"))
        })?;
        let got = cohomology(model, p)?.group().to_string();
        report.check(CheckRow::new(
            format!("manifest H^{p}"),
            &got == want,
            format!("expected {want}, got {got}"),
        ));
    }
    for (label, table, chain) in [
        ("gauge", &expected.gauge_homology, model.gauge()),
        ("geometry", &expected.geometry_homology, model.geometry()),
    ] {
        for (key, want) in table {
            let n: i64 = key.parse().map_err(|_| {
                Error::Schema(format!("expected homology key {key:?} is not a degree"))
            })?;
            let got = chain.homology(n).to_string();
            report.check(CheckRow::new(
                format!("manifest {label} H_{n}"),
                &got == want,
                format!("expected {want}, got {got}"),
            ));
        }
    }
    Ok(())
}

pub fn cmd_validate(arg: &str) -> Result<Report> {
    let file = models::load(arg)?;
    let mut report = Report::new("validate", file.name.clone());
    let model = match file.build() {
        Ok(m) => m,
        Err(e @ Error::Schema(_)) => return Err(e),
        Err(e) => {
            report.check(CheckRow::new("model builds", false, e.to_string()));
            return Ok(report);
        }
    };
    report.check(CheckRow::new(
        "model builds",
        true,
        "both chains constructed",
    ));
    boundary_checks(&mut report, "geometry", model.geometry());
    boundary_checks(&mut report, "gauge", model.gauge());
    report.check(CheckRow::new(
        "geometry groups free",
        model.geometry().is_free(),
        "every K_n is free abelian",
    ));
    let window = model.p_window();
    report.check(match window {
        Some((lo, hi)) if model.windows_overlap() => CheckRow::new(
            "degree windows overlap",
            true,
            format!("hom^p nontrivial for p in {lo}..{hi}"),
        ),
        Some((lo, hi)) => CheckRow::with_status(
            "degree windows overlap",
            Status::Warn,
            format!("p window {lo}..{hi} misses 0, so the ground space is trivial"),
        ),
        None => CheckRow::with_status("degree windows overlap", Status::Warn, "a chain is trivial"),
    });
    let (lo, hi) = window.unwrap_or((0, 0));
    for p in (lo - 1).min(-1)..=hi.max(1) {
        report.check(match differential(&model, p) {
            Ok(_) => CheckRow::new(
                format!("d^{} ∘ d^{p} = 0", p + 1),
                true,
                "differential well defined",
            ),
            Err(e) => CheckRow::new(format!("d^{} ∘ d^{p} = 0", p + 1), false, e.to_string()),
        });
        let name = format!("d_{} factored = dual of d^{p}", p + 1);
        match (
            factored_dual_differential(&model, p),
            dual_differential(&model, p + 1),
        ) {
            (Ok(a), Ok(b)) => report.check(CheckRow::new(name, a == b, "matrices over hom^p")),
            (Err(Error::InfiniteGroup(_)), _) | (_, Err(Error::InfiniteGroup(_))) => report.check(
                CheckRow::with_status(name, Status::Skipped, "infinite hom groups have no dual"),
            ),
            (Err(e), _) | (_, Err(e)) => report.check(CheckRow::new(name, false, e.to_string())),
        }
    }
    if let Some(expected) = &file.expected {
        manifest_checks(&mut report, &model, expected)?;
    }
    report.set("description", model.description());
    report.set("geometry_homology", chain_homology(model.geometry()));
    report.set("gauge_homology", chain_homology(model.gauge()));
    report.set(
        "p_window",
        window.map_or(Value::Null, |(lo, hi)| json!([lo, hi])),
    );
    report.set("dimension", hom_order(&model, 0));
    Ok(report)
}

fn representatives(res: &CohomologyResult, limit: u64) -> Result<Value> {
    let order = match res.order() {
        Some(o) if o <= BigInt::from(limit) => o,
        Some(o) => return Ok(json!(format!("omitted: order {o} exceeds {limit}"))),
        None => return Ok(json!("omitted: infinite group")),
    };
    let coords: Vec<Value> = match res.side() {
        hgauge_core::calculus::Side::Cohomology => res
            .representatives()?
            .iter()
            .map(|w| json!(w.values().coords().iter().map(big).collect::<Vec<_>>()))
            .collect(),
        hgauge_core::calculus::Side::Homology => res
            .rep_representatives()?
            .iter()
            .map(|r| {
                json!(r
                    .dual_coordinates()
                    .coords()
                    .iter()
                    .map(big)
                    .collect::<Vec<_>>())
            })
            .collect(),
    };
    debug_assert_eq!(BigInt::from(coords.len()), order);
    Ok(json!(coords))
}

fn side_results(res: &CohomologyResult, limit: u64) -> Result<Value> {
    Ok(json!({
        "group": res.group().to_string(),
        "order": res.order().as_ref().map_or(json!("infinite"), big),
        "representatives": representatives(res, limit)?,
    }))
}

pub fn cmd_cohomology(arg: &str, p: i64, side: Side, limit: u64) -> Result<Report> {
    let (file, model) = open(arg)?;
    let mut report = Report::new("cohomology", model.name());
    report.set("p", p);
    report.set("hom_order", hom_order(&model, p));
    let co = matches!(side, Side::Co | Side::Both)
        .then(|| cohomology(&model, p))
        .transpose()?;
    let ho = matches!(side, Side::Ho | Side::Both)
        .then(|| homology(&model, p))
        .transpose()?;
    if let Some(c) = &co {
        report.set("cohomology", side_results(c, limit)?);
    }
    if let Some(h) = &ho {
        report.set("homology", side_results(h, limit)?);
    }
    if let (Some(c), Some(h)) = (&co, &ho) {
        report.check(CheckRow::new(
            format!("|H^{p}| = |H_{p}|"),
            c.order() == h.order(),
            format!("{} and {}", c.group(), h.group()),
        ));
        report.check(CheckRow::new(
            format!("H^{p} ≅ H_{p}"),
            c.group() == h.group(),
            "invariant factors agree",
        ));
    }
    let expected = file
        .expected
        .as_ref()
        .and_then(|e| e.cohomology.get(&p.to_string()));
    if let Some(want) = expected {
        let got = co
            .as_ref()
            .or(ho.as_ref())
            .expect("a side is computed")
            .group()
            .to_string();
        report.check(CheckRow::new(
            format!("manifest H^{p}"),
            &got == want,
            format!("expected {want}, got {got}"),
        ));
    }
    Ok(report)
}

struct MethodOutcome {
    method: &'static str,
    value: Option<Value>,
    status: Status,
    detail: String,
}

/// An infinite `H^0` is reported as such; the numeric methods do not apply.
fn by_cohomology(model: &GaugeModel) -> Result<(Value, String)> {
    let h = cohomology(model, 0)?;
    if h.order().is_none() {
        return Ok((json!("infinite"), format!("H^0 = {}", h.group())));
    }
    let g = gsd(model)?;
    Ok((
        big(&g.cohomology),
        format!("|H^0| = {}, |H_0| = {}", g.cohomology, g.homology),
    ))
}

fn by_orbits(model: &GaugeModel, cap: u64) -> Result<(Value, String)> {
    let o = gauge_orbits(model, cap).map_err(|e| name_method(e, "orbits"))?;
    Ok((
        json!(o.count()),
        format!("{} flat of {} configurations", o.flat, o.configurations),
    ))
}

fn by_trace(model: &GaugeModel, max_dim: u64) -> Result<(Value, String)> {
    let sim = Simulator::new(model, max_dim).map_err(|e| name_method(e, "trace"))?;
    let t = sim.gsd_by_trace()?;
    Ok((
        json!(t.gsd),
        format!("Tr Π = {:.12}, D = {}", t.trace, sim.dimension()),
    ))
}

fn name_method(e: Error, method: &str) -> Error {
    match e {
        Error::TooLarge { what, size, cap } => Error::TooLarge {
            what: format!("{method}: {what}"),
            size,
            cap,
        },
        Error::InfiniteGroup(s) => Error::InfiniteGroup(format!("{method}: {s}")),
        other => other,
    }
}

/// A GSD beyond `u64` cannot be handed to the floating-point paths.
fn too_large_u64(what: &str, n: &BigInt) -> Error {
    Error::TooLarge {
        what: what.to_string(),
        size: n.to_string(),
        cap: u64::MAX,
    }
}

pub fn cmd_gsd(arg: &str, method: Method, enum_cap: u64, max_dim: u64) -> Result<Report> {
    let (file, model) = open(arg)?;
    let mut report = Report::new("gsd", model.name());
    let wanted: Vec<Method> = match method {
        Method::All => vec![Method::Cohomology, Method::Orbits, Method::Trace],
        m => vec![m],
    };
    let mut outcomes = Vec::new();
    for m in wanted {
        let (name, run) = match m {
            Method::Cohomology => ("cohomology", by_cohomology(&model)),
            Method::Orbits => ("orbits", by_orbits(&model, enum_cap)),
            Method::Trace => ("trace", by_trace(&model, max_dim)),
            Method::All => unreachable!(),
        };
        outcomes.push(match run {
            Ok((v, detail)) => MethodOutcome {
                method: name,
                value: Some(v),
                status: Status::Pass,
                detail,
            },
            Err(e @ (Error::TooLarge { .. } | Error::InfiniteGroup(_)))
                if method == Method::All =>
            {
                MethodOutcome {
                    method: name,
                    value: None,
                    status: Status::Skipped,
                    detail: e.to_string(),
                }
            }
            Err(e) => return Err(e),
        });
    }
    let values: Vec<&Value> = outcomes.iter().filter_map(|o| o.value.as_ref()).collect();
    let agreed = !values.is_empty() && values.iter().all(|v| *v == values[0]);
    report.set("gsd", values.first().map_or(Value::Null, |v| (*v).clone()));
    report.set(
        "methods",
        Value::Array(
            outcomes
                .iter()
                .map(|o| {
                    json!({
                        "method": o.method,
                        "gsd": o.value.clone().unwrap_or(Value::Null),
                        "status": o.status,
                        "detail": o.detail,
                    })
                })
                .collect(),
        ),
    );
    let summary = outcomes
        .iter()
        .map(|o| o.value.as_ref().map_or("-".to_string(), scalar_text))
        .collect::<Vec<_>>()
        .join("/");
    report.check(CheckRow::new("methods agree", agreed, summary));
    if let (Some(want), Some(got)) = (file.expected.as_ref().and_then(|e| e.gsd), values.first()) {
        report.check(CheckRow::new(
            "manifest gsd",
            **got == json!(want),
            format!("expected {want}, got {}", scalar_text(got)),
        ));
    }
    Ok(report)
}

pub fn cmd_uct(arg: &str, p: i64) -> Result<Report> {
    let (_, model) = open(arg)?;
    let mut report = Report::new("uct", model.name());
    let u = uct_decomposition_at(&model, p)?;
    report.set("p", p);
    report.set(
        "terms",
        Value::Array(
            u.terms
                .iter()
                .map(|t| {
                    json!({
                        "n": t.n,
                        "coefficients": t.coefficients.to_string(),
                        "hom": t.hom_part.to_string(),
                        "ext": t.ext_part.to_string(),
                        "total": t.total.to_string(),
                    })
                })
                .collect(),
        ),
    );
    report.set("sum", u.sum.to_string());
    report.set("direct", u.direct.to_string());
    report.set(
        "product",
        u.product().as_ref().map_or(json!("infinite"), big),
    );
    report.check(CheckRow::new(
        format!("⊕ terms ≅ H^{p}"),
        u.matches(),
        format!("{} against {}", u.sum, u.direct),
    ));
    let direct = u.direct.order();
    let label = if p == 0 {
        "product = GSD".to_string()
    } else {
        format!("product = |H^{p}|")
    };
    match (u.product(), direct) {
        (Some(a), Some(b)) => {
            report.check(CheckRow::new(label, a == b, format!("{a} against {b}")))
        }
        _ => report.check(CheckRow::with_status(
            label,
            Status::Skipped,
            "infinite group",
        )),
    }
    Ok(report)
}

pub fn cmd_simulate(arg: &str, suites: &[Suite], seed: u64, max_dim: u64) -> Result<Report> {
    let (_, model) = open(arg)?;
    let mut report = Report::new("simulate", model.name());
    let sim = Simulator::new(&model, max_dim)?;
    let sr = run_checks(&model, &sim, suites, seed)?;
    report.set("dimension", sr.dimension);
    report.set("gsd", sr.gsd);
    report.set("seed", seed);
    report.set(
        "suites",
        json!(suites.iter().map(|s| s.name()).collect::<Vec<_>>()),
    );
    if suites.contains(&Suite::Povm) {
        let povm: Vec<_> = sr
            .checks
            .iter()
            .filter(|c| c.suite == Suite::Povm && c.status != hgauge_core::sim::Status::Skipped)
            .collect();
        if !povm.is_empty() {
            let identity = povm
                .iter()
                .filter(|c| c.name.starts_with('Σ'))
                .map(|c| c.residual)
                .fold(0.0, f64::max);
            report.set("povm_elements", sr.gsd * sr.gsd);
            report.set("povm_identity_residual", identity);
        }
    }
    for c in &sr.checks {
        let status = match c.status {
            hgauge_core::sim::Status::Pass => Status::Pass,
            hgauge_core::sim::Status::Fail => Status::Fail,
            hgauge_core::sim::Status::Skipped => Status::Skipped,
        };
        let row =
            CheckRow::with_status(format!("{}: {}", c.suite, c.name), status, c.detail.clone());
        report.check(if status == Status::Skipped {
            row
        } else {
            row.residual(c.residual)
        });
    }
    Ok(report)
}

pub fn cmd_thermo(arg: &str, beta: f64) -> Result<Report> {
    let (_, model) = open(arg)?;
    let mut report = Report::new("thermo", model.name());
    let g = gsd(&model)?;
    let n = g
        .cohomology
        .to_u64()
        .ok_or_else(|| too_large_u64("thermo: GSD", &g.cohomology))?;
    let t = thermodynamics(n, beta);
    report.set("beta", beta);
    report.set("gsd", n);
    report.set("partition", t.partition);
    let exact = (beta.fract() == 0.0 && beta <= u32::MAX as f64)
        .then(|| num_traits::pow(g.cohomology.clone(), beta as usize));
    if let Some(z) = &exact {
        report.set("partition_exact", z.to_string());
    }
    report.set("log_partition", t.log_partition);
    report.set("energy", t.energy);
    report.set("entropy", t.entropy);
    let rel = ((t.log_partition.exp() - t.partition) / t.partition).abs();
    report.check(CheckRow::new("Z = GSD^β", rel < 1e-12, "against exp(β ln GSD)").residual(rel));
    if let Some(z) = exact {
        let zf = z.to_f64().unwrap_or(f64::INFINITY);
        let rel = ((zf - t.partition) / zf).abs();
        report.check(
            CheckRow::new("Z matches exact power", rel < 1e-12, format!("{z}")).residual(rel),
        );
    }
    report.check(
        CheckRow::new(
            "S = ln Z + β⟨E⟩ = 0",
            t.entropy.abs() < 1e-12,
            "the ground space carries no entropy",
        )
        .residual(t.entropy.abs()),
    );
    Ok(report)
}
