//! The configuration Hilbert space of a finite model and its operators.

use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::abelian::{PhaseTable, Radix, SmallHom};
use crate::calculus::differential::differential;
use crate::calculus::space::{hom_space, HomSpace};
use crate::chain::GaugeModel;
use crate::error::{Error, Result};
use crate::sim::basis::BasisIndexer;
use crate::sim::operator::Operator;

/// Default cap on the Hilbert space dimension `D = |hom^0|`.
pub const DEFAULT_MAX_DIM: u64 = 1 << 24;

/// Numerical tolerance for every simulator identity.
pub const TOLERANCE: f64 = 1e-9;

/// A local term of the Hamiltonian: a gauge projector `A_x` for a site of
/// `hom^{-1}` or a flatness projector `B_y` for a site of `hom^1`.
#[derive(Clone, Debug)]
pub struct LocalProjector {
    pub kind: LocalKind,
    pub degree: i64,
    pub cell: usize,
    pub label: String,
    pub operator: Operator,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalKind {
    Gauge,
    Flatness,
}

/// Ground state degeneracy read off from `Tr Π`.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceGsd {
    pub trace: f64,
    pub gsd: u64,
    /// Distance of the trace from the nearest integer.
    pub residual: f64,
    /// `|ker d^0| · |ker d^{-1}| / |hom^{-1}|` by direct counting.
    pub counted: u64,
}

#[derive(Clone, Debug)]
pub struct Simulator {
    name: String,
    basis: BasisIndexer,
    gauge_space: HomSpace,
    gauge_radix: Radix,
    gauge_phases: PhaseTable,
    flux_space: HomSpace,
    flux_radix: Radix,
    /// Index in `hom^0` of `d^{-1} α`, for every `α ∈ hom^{-1}`.
    gauge_images: Vec<u64>,
    /// Index in `hom^1` of `d^0 ω`, for every basis state `ω`.
    syndrome: Vec<u64>,
}

fn finite_radix(space: &HomSpace, what: &str, cap: u64) -> Result<Radix> {
    let order = space
        .total()
        .order()
        .ok_or_else(|| Error::InfiniteGroup(format!("{what} = {}", space.total())))?;
    match Radix::from_cyclic(space.total()) {
        Ok(r) if r.order() <= cap => Ok(r),
        _ => Err(Error::too_large(what, order, cap)),
    }
}

fn image_table(src: &Radix, tgt: &Radix, f: &SmallHom) -> Vec<u64> {
    (0..src.order())
        .into_par_iter()
        .map_init(
            || (vec![0u64; src.len()], vec![0u64; tgt.len()]),
            |(x, y), i| {
                src.digits_into(i, x);
                f.apply_into(x, y);
                tgt.index(y)
            },
        )
        .collect()
}

impl Simulator {
    pub fn new(model: &GaugeModel, max_dim: u64) -> Result<Self> {
        if !model.is_simulator_eligible() {
            return Err(Error::InfiniteGroup(format!(
                "model {:?} has an infinite gauge group",
                model.name()
            )));
        }
        let basis = BasisIndexer::new(hom_space(model, 0), max_dim)?;
        let gauge_space = hom_space(model, -1);
        let flux_space = hom_space(model, 1);
        let gauge_radix = finite_radix(&gauge_space, "|hom^-1|", max_dim)?;
        let flux_radix = finite_radix(&flux_space, "|hom^1|", u64::MAX)?;
        let gauge_phases = PhaseTable::new(gauge_radix.moduli())?;
        let d_minus = SmallHom::new(&differential(model, -1)?)?;
        let d_zero = SmallHom::new(&differential(model, 0)?)?;
        let gauge_images = image_table(&gauge_radix, basis.radix(), &d_minus);
        let syndrome = image_table(basis.radix(), &flux_radix, &d_zero);
        Ok(Simulator {
            name: model.name().to_string(),
            basis,
            gauge_space,
            gauge_radix,
            gauge_phases,
            flux_space,
            flux_radix,
            gauge_images,
            syndrome,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn basis(&self) -> &BasisIndexer {
        &self.basis
    }

    pub fn dimension(&self) -> u64 {
        self.basis.dimension()
    }

    /// `|hom^{-1}|`.
    pub fn gauge_order(&self) -> u64 {
        self.gauge_radix.order()
    }

    /// `|hom^1|`.
    pub fn flux_order(&self) -> u64 {
        self.flux_radix.order()
    }

    pub fn gauge_radix(&self) -> &Radix {
        &self.gauge_radix
    }

    pub fn flux_radix(&self) -> &Radix {
        &self.flux_radix
    }

    /// `d^{-1} α` as a basis index.
    pub fn gauge_image(&self, alpha: u64) -> u64 {
        self.gauge_images[alpha as usize]
    }

    /// `d^0 ω` as an index of `hom^1`.
    pub fn syndrome(&self, w: u64) -> u64 {
        self.syndrome[w as usize]
    }

    pub fn is_flat(&self, w: u64) -> bool {
        self.syndrome[w as usize] == 0
    }

    /// `|ker d^0|`, counted.
    pub fn flat_count(&self) -> u64 {
        self.syndrome.par_iter().filter(|&&s| s == 0).count() as u64
    }

    /// `|ker d^{-1}|`, counted.
    pub fn gauge_kernel_count(&self) -> u64 {
        self.gauge_images.iter().filter(|&&b| b == 0).count() as u64
    }

    pub fn shift(&self, alpha: u64) -> Operator {
        Operator::Shift(alpha)
    }

    pub fn clock(&self, rho: u64) -> Operator {
        Operator::Clock(rho)
    }

    /// `A_ρ̂ = |hom^{-1}|^{-1} Σ_α χ̄_ρ̂(α) P^{d^{-1} α}` for a dual index `ρ̂`
    /// of `hom_{-1}`.
    pub fn fake_gauge(&self, rho: u64) -> Operator {
        let n = self.gauge_order();
        let rd = self.gauge_radix.digits(rho);
        let mut ad = vec![0; self.gauge_radix.len()];
        let mut acc: std::collections::BTreeMap<u64, Complex64> = Default::default();
        for a in 0..n {
            self.gauge_radix.digits_into(a, &mut ad);
            let c = self.gauge_phases.eval(&rd, &ad).conj() / n as f64;
            *acc.entry(self.gauge_images[a as usize]).or_default() += c;
        }
        let terms = acc.into_iter().filter(|(_, c)| c.norm() > 1e-13).collect();
        Operator::Mixture(Arc::new(terms))
    }

    /// `A_0̂`, the average over gauge transformations.
    pub fn gauge_projector(&self) -> Operator {
        let n = self.gauge_order() as f64;
        let mut acc: std::collections::BTreeMap<u64, f64> = Default::default();
        for &b in &self.gauge_images {
            *acc.entry(b).or_default() += 1.0 / n;
        }
        Operator::Mixture(Arc::new(
            acc.into_iter()
                .map(|(b, c)| (b, Complex64::new(c, 0.0)))
                .collect(),
        ))
    }

    /// `B^ω` for an index of `hom^1`: projects onto `d^0 ν = ω`.
    pub fn fake_holonomy(&self, omega: u64) -> Operator {
        Operator::Diagonal(Arc::new(
            self.syndrome
                .par_iter()
                .map(|&s| f64::from(u8::from(s == omega)))
                .collect(),
        ))
    }

    /// `B^0`, the projector onto flat configurations.
    pub fn flat_projector(&self) -> Operator {
        self.fake_holonomy(0)
    }

    /// `Π = A_0̂ B^0`.
    pub fn ground_projector(&self) -> Operator {
        Operator::Product(vec![self.gauge_projector(), self.flat_projector()])
    }

    /// Gauge projectors `A_x`, one for each site of `hom^{-1}`.
    pub fn gauge_terms(&self) -> Vec<LocalProjector> {
        self.gauge_space
            .sites()
            .iter()
            .map(|site| {
                let local = Radix::from_cyclic(&site.group).expect("finite site");
                let mut digits = vec![0u64; self.gauge_radix.len()];
                let mut acc: std::collections::BTreeMap<u64, f64> = Default::default();
                let n = local.order() as f64;
                for g in 0..local.order() {
                    local.digits_into(g, &mut digits[site.offset..site.offset + local.len()]);
                    let a = self.gauge_radix.index(&digits);
                    *acc.entry(self.gauge_images[a as usize]).or_default() += 1.0 / n;
                }
                LocalProjector {
                    kind: LocalKind::Gauge,
                    degree: site.degree,
                    cell: site.cell,
                    label: site.label.clone(),
                    operator: Operator::Mixture(Arc::new(
                        acc.into_iter()
                            .map(|(b, c)| (b, Complex64::new(c, 0.0)))
                            .collect(),
                    )),
                }
            })
            .collect()
    }

    /// Flatness projectors `B_y`, one for each site of `hom^1`.
    pub fn flatness_terms(&self) -> Vec<LocalProjector> {
        let len = self.flux_radix.len();
        self.flux_space
            .sites()
            .iter()
            .map(|site| {
                let range = site.offset..site.offset + site.group.ngens();
                let diag: Vec<f64> = self
                    .syndrome
                    .par_iter()
                    .map_init(
                        || vec![0u64; len],
                        |d, &s| {
                            self.flux_radix.digits_into(s, d);
                            f64::from(u8::from(d[range.clone()].iter().all(|&x| x == 0)))
                        },
                    )
                    .collect();
                LocalProjector {
                    kind: LocalKind::Flatness,
                    degree: site.degree,
                    cell: site.cell,
                    label: site.label.clone(),
                    operator: Operator::Diagonal(Arc::new(diag)),
                }
            })
            .collect()
    }

    pub fn local_projectors(&self) -> Vec<LocalProjector> {
        let mut all = self.gauge_terms();
        all.extend(self.flatness_terms());
        all
    }

    /// `∏_x A_x ∏_y B_y`.
    pub fn local_ground_projector(&self) -> Operator {
        Operator::Product(
            self.local_projectors()
                .into_iter()
                .map(|t| t.operator)
                .collect(),
        )
    }

    /// `H = ln 2 · Σ_x (1 − A_x) + ln 2 · Σ_y (1 − B_y)`.
    pub fn hamiltonian(&self) -> Operator {
        hamiltonian_from(&self.local_projectors())
    }

    /// The ground state degeneracy from `Tr Π`, cross-checked by counting.
    pub fn gsd_by_trace(&self) -> Result<TraceGsd> {
        let trace = self.ground_projector().trace(&self.basis)?;
        let rounded = trace.re.round();
        let residual = (trace.re - rounded).abs().max(trace.im.abs());
        let kernel = self.gauge_kernel_count();
        let image = self.gauge_order() / kernel;
        let flat = self.flat_count();
        let counted = flat / image;
        if residual > TOLERANCE || !flat.is_multiple_of(image) {
            return Err(Error::ToleranceExceeded {
                check: format!("Tr Π = {} for {}", trace.re, self.name),
                residual,
            });
        }
        Ok(TraceGsd {
            trace: trace.re,
            gsd: rounded as u64,
            residual,
            counted,
        })
    }
}

pub fn hamiltonian_from(terms: &[LocalProjector]) -> Operator {
    let ln2 = std::f64::consts::LN_2;
    Operator::Sum(
        terms
            .iter()
            .map(|t| (Complex64::new(ln2, 0.0), t.operator.clone().complement()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;

    #[test]
    fn trace_gsd_on_small_models() {
        for (name, g) in [
            ("point-z3", 3),
            ("torus-cw-z2", 4),
            ("klein-cw-z4", 8),
            ("sphere-simplicial-z2", 1),
        ] {
            let sim = Simulator::new(&library::load(name).unwrap(), DEFAULT_MAX_DIM).unwrap();
            let t = sim.gsd_by_trace().unwrap();
            assert_eq!((t.gsd, t.counted), (g, g), "{name}");
        }
    }

    #[test]
    fn infinite_and_oversized_models_are_refused() {
        let cyc = library::load("cyclic-resolution-z3").unwrap();
        assert!(matches!(
            Simulator::new(&cyc, DEFAULT_MAX_DIM),
            Err(Error::InfiniteGroup(_))
        ));
        let sphere = library::load("sphere-simplicial-z4").unwrap();
        assert!(matches!(
            Simulator::new(&sphere, 1000),
            Err(Error::TooLarge { .. })
        ));
    }
}
