//! The ground space: two labelled orthonormal bases, the unitary between
//! them, the POVM built from their projectors, and ground-space densities.
//!
//! Restricted to the ground space every structure lives in `C^g`. Coordinates
//! are taken in the configuration-labelled basis, where `Π^ω̲` is the matrix
//! unit `e_ω e_ω†` and `Π_ν̂` is `m_ν m_ν†` with `m_ν[ω] = ⟨ω̲|ν̂⟩`.

use std::fmt::Write as _;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::calculus::cohomology::{cohomology, homology};
use crate::chain::GaugeModel;
use crate::error::{Error, Result};
use crate::sim::basis::StateVector;
use crate::sim::operator::Column;
use crate::sim::simulator::{Simulator, TOLERANCE};

/// Largest dimension for which ground vectors are materialised.
pub const GROUND_VECTOR_CAP: u64 = 1 << 20;

/// Largest GSD for which the `g² × g²` joint density is formed.
pub const DENSITY_GSD_CAP: usize = 32;

#[derive(Clone, Debug)]
pub struct GroundState {
    pub label: String,
    /// Basis index of the seed: a 0-map for configurations, a dual index of
    /// `hom_0` for representations.
    pub seed: u64,
    pub vector: Option<StateVector>,
}

#[derive(Clone, Debug)]
pub struct GroundSpace {
    pub configuration: Vec<GroundState>,
    pub representation: Vec<GroundState>,
}

impl GroundSpace {
    pub fn dimension(&self) -> usize {
        self.configuration.len()
    }

    pub fn has_vectors(&self) -> bool {
        self.configuration
            .iter()
            .chain(&self.representation)
            .all(|s| s.vector.is_some())
    }

    /// `⟨ω̲|ν̂⟩`, measured from the vectors.
    pub fn measured_overlaps(&self) -> Option<DMatrix<Complex64>> {
        let g = self.dimension();
        let mut m = DMatrix::zeros(g, g);
        for (i, c) in self.configuration.iter().enumerate() {
            for (j, r) in self.representation.iter().enumerate() {
                m[(i, j)] = c.vector.as_ref()?.inner(r.vector.as_ref()?);
            }
        }
        Some(m)
    }

    /// Gram matrices of the configuration and representation bases.
    pub fn gram(&self) -> Option<(DMatrix<Complex64>, DMatrix<Complex64>)> {
        let gram = |states: &[GroundState]| -> Option<DMatrix<Complex64>> {
            let g = states.len();
            let mut m = DMatrix::zeros(g, g);
            for i in 0..g {
                for j in 0..g {
                    m[(i, j)] = states[i].vector.as_ref()?.inner(states[j].vector.as_ref()?);
                }
            }
            Some(m)
        };
        Some((gram(&self.configuration)?, gram(&self.representation)?))
    }
}

fn digits_label(prefix: &str, digits: &[u64]) -> String {
    let mut s = String::from(prefix);
    s.push('(');
    for (i, d) in digits.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        write!(s, "{d}").unwrap();
    }
    s.push(')');
    s
}

fn densify(dim: u64, col: &Column) -> StateVector {
    let mut v = StateVector::zeros(dim);
    for (i, c) in col {
        v.amplitudes[*i as usize] = *c;
    }
    v
}

/// Both labelled bases of the ground space.
///
/// Configuration states are `A_0̂|ω⟩` normalised for `H^0` representatives
/// `ω`. Representation states are `B^0|ν̂⟩` normalised for `H_0`
/// representatives `ν̂`. Vectors are only built when `D` is at most
/// [`GROUND_VECTOR_CAP`].
pub fn ground_basis(model: &GaugeModel, sim: &Simulator) -> Result<GroundSpace> {
    let basis = sim.basis();
    let d = basis.dimension();
    let with_vectors = d <= GROUND_VECTOR_CAP;
    let conf = cohomology(model, 0)?;
    let reps = homology(model, 0)?;
    let a0 = sim.gauge_projector();
    let mut configuration = Vec::new();
    for w in conf.representatives()? {
        let seed = basis.index_of(&w)?;
        let vector = if with_vectors {
            Some(densify(d, &a0.column(basis, seed)).normalized()?)
        } else {
            None
        };
        configuration.push(GroundState {
            label: digits_label("ω", &basis.radix().digits(seed)),
            seed,
            vector,
        });
    }
    let mut representation = Vec::new();
    for r in reps.rep_representatives()? {
        let seed = basis.rep_index(&r)?;
        let vector = if with_vectors {
            let kd = basis.radix().digits(seed);
            let mut wd = vec![0; basis.radix().len()];
            let mut v = StateVector::zeros(d);
            for w in 0..d {
                if sim.is_flat(w) {
                    basis.radix().digits_into(w, &mut wd);
                    v.amplitudes[w as usize] = basis.phases().eval(&kd, &wd);
                }
            }
            Some(v.normalized()?)
        } else {
            None
        };
        representation.push(GroundState {
            label: digits_label("ν̂", &basis.radix().digits(seed)),
            seed,
            vector,
        });
    }
    if configuration.len() != representation.len() {
        return Err(Error::ToleranceExceeded {
            check: format!(
                "|H^0| = {} differs from |H_0| = {}",
                configuration.len(),
                representation.len()
            ),
            residual: 1.0,
        });
    }
    Ok(GroundSpace {
        configuration,
        representation,
    })
}

/// `⟨ω̲|ν̂⟩ = χ_ν̂(ω)/√g`, from the characters.
pub fn mixed_overlaps(sim: &Simulator, gs: &GroundSpace) -> DMatrix<Complex64> {
    let g = gs.dimension();
    let norm = 1.0 / (g as f64).sqrt();
    DMatrix::from_fn(g, g, |i, j| {
        sim.basis()
            .character(gs.representation[j].seed, gs.configuration[i].seed)
            * norm
    })
}

/// `U[ω̲][α̂] = χ̄_α̂(ω̲)/√g`, so that `|ω̲⟩ = Σ_α̂ U[ω̲][α̂] |α̂⟩`.
pub fn basis_change_matrix(sim: &Simulator, gs: &GroundSpace) -> DMatrix<Complex64> {
    mixed_overlaps(sim, gs).map(|c| c.conj())
}

/// Largest entry of `M − 1`.
pub fn identity_residual(m: &DMatrix<Complex64>) -> f64 {
    let n = m.nrows();
    (m - DMatrix::<Complex64>::identity(n, n))
        .iter()
        .map(|c| c.norm())
        .fold(0.0, f64::max)
}

/// Largest entry of `M − M†`.
pub fn hermitian_residual(m: &DMatrix<Complex64>) -> f64 {
    (m - m.adjoint())
        .iter()
        .map(|c| c.norm())
        .fold(0.0, f64::max)
}

/// Residuals of `U U† = 1` and `U† U = 1`.
pub fn unitarity_residual(u: &DMatrix<Complex64>) -> f64 {
    identity_residual(&(u * u.adjoint())).max(identity_residual(&(u.adjoint() * u)))
}

fn min_eigenvalue(m: &DMatrix<Complex64>) -> f64 {
    m.clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

/// Results of the POVM identities in ground coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct PovmReport {
    pub gsd: usize,
    /// Number of `Θ` (equally `Θ̃`) elements, `g²`.
    pub elements: usize,
    pub configuration_sum: f64,
    pub representation_sum: f64,
    pub theta_sum: f64,
    pub theta_hermitian: f64,
    pub theta_tilde_sum: f64,
    pub theta_tilde_hermitian: f64,
    /// Smallest eigenvalue over every `Θ̃`; nonnegative for a POVM.
    pub theta_tilde_min_eigenvalue: f64,
    /// Smallest eigenvalue over every `Θ`.
    pub theta_min_eigenvalue: f64,
    /// Largest deviation of the mixed inner products from `χ_ν̂(ω)/√g`.
    pub mixed_overlap: Option<f64>,
}

impl PovmReport {
    pub fn identity_residual(&self) -> f64 {
        [
            self.configuration_sum,
            self.representation_sum,
            self.theta_sum,
            self.theta_tilde_sum,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    /// The first identity that fails, if any.
    pub fn failure(&self) -> Option<(&'static str, f64)> {
        let named = [
            ("Σ Π^ω = 1", self.configuration_sum),
            ("Σ Π_ν = 1", self.representation_sum),
            ("Σ Θ = 1", self.theta_sum),
            ("Θ = Θ†", self.theta_hermitian),
            ("Σ Θ̃ = 1", self.theta_tilde_sum),
            ("Θ̃ = Θ̃†", self.theta_tilde_hermitian),
            ("Θ̃ ≥ 0", (-self.theta_tilde_min_eigenvalue).max(0.0)),
            ("⟨ω̲|ν̂⟩ = χ_ν̂(ω)/√g", self.mixed_overlap.unwrap_or(0.0)),
        ];
        named.into_iter().find(|(_, r)| *r > TOLERANCE)
    }

    pub fn passed(&self) -> bool {
        self.failure().is_none()
    }
}

/// Check the POVM identities built from `Π^ω̲` and `Π_ν̂`.
pub fn povm_check(sim: &Simulator, gs: &GroundSpace) -> PovmReport {
    let g = gs.dimension();
    let m = mixed_overlaps(sim, gs);
    let unit = |i: usize| {
        let mut e = DMatrix::<Complex64>::zeros(g, g);
        e[(i, i)] = Complex64::new(1.0, 0.0);
        e
    };
    let conf: Vec<DMatrix<Complex64>> = (0..g).map(unit).collect();
    let rep: Vec<DMatrix<Complex64>> = (0..g)
        .map(|j| {
            let col: DVector<Complex64> = m.column(j).into_owned();
            &col * col.adjoint()
        })
        .collect();
    let zero = DMatrix::<Complex64>::zeros(g, g);
    let conf_sum = conf.iter().fold(zero.clone(), |a, x| a + x);
    let rep_sum = rep.iter().fold(zero.clone(), |a, x| a + x);
    let mut theta_sum = zero.clone();
    let mut tilde_sum = zero;
    let mut theta_herm: f64 = 0.0;
    let mut tilde_herm: f64 = 0.0;
    let mut theta_min = f64::INFINITY;
    let mut tilde_min = f64::INFINITY;
    let half = Complex64::new(0.5, 0.0);
    let scale = Complex64::new(1.0 / (2.0 * g as f64), 0.0);
    for pc in &conf {
        for pr in &rep {
            let theta = (pc * pr + pr * pc) * half;
            let tilde = (pc + pr) * scale;
            theta_herm = theta_herm.max(hermitian_residual(&theta));
            tilde_herm = tilde_herm.max(hermitian_residual(&tilde));
            theta_min = theta_min.min(min_eigenvalue(&theta));
            tilde_min = tilde_min.min(min_eigenvalue(&tilde));
            theta_sum += theta;
            tilde_sum += tilde;
        }
    }
    let mixed_overlap = gs
        .measured_overlaps()
        .map(|measured| (measured - &m).iter().map(|c| c.norm()).fold(0.0, f64::max));
    PovmReport {
        gsd: g,
        elements: g * g,
        configuration_sum: identity_residual(&conf_sum),
        representation_sum: identity_residual(&rep_sum),
        theta_sum: identity_residual(&theta_sum),
        theta_hermitian: theta_herm,
        theta_tilde_sum: identity_residual(&tilde_sum),
        theta_tilde_hermitian: tilde_herm,
        theta_tilde_min_eigenvalue: tilde_min,
        theta_min_eigenvalue: theta_min,
        mixed_overlap,
    }
}

/// A ground-space density over product labels `b = (ω̲, ν̂)`.
#[derive(Clone, Debug)]
pub struct GroundDensity {
    pub gsd: usize,
    /// `Σ_b λ_b |b⟩⟨b|` on `C^g ⊗ C^g`, index `i_conf · g + i_rep`.
    pub joint: DMatrix<Complex64>,
    /// Partial trace over the representation factor.
    pub marginal_conf: DMatrix<Complex64>,
    /// Partial trace over the configuration factor.
    pub marginal_rep: DMatrix<Complex64>,
    /// `Λ^ω = Σ_ν λ_{ων}`.
    pub conf_weights: Vec<f64>,
    /// `Λ_ν = Σ_ω λ_{ων}`.
    pub rep_weights: Vec<f64>,
}

impl GroundDensity {
    pub fn trace(&self) -> Complex64 {
        self.joint.trace()
    }

    pub fn purity(&self) -> f64 {
        (&self.joint * &self.joint).trace().re
    }

    /// Largest deviation of the marginals from the label sums: `Tr_rep ρ` must
    /// be `diag(Λ^ω)` and `⟨ν̂|Tr_conf ρ|ν̂⟩` must be `Λ_ν`.
    pub fn marginal_residual(&self, sim: &Simulator, gs: &GroundSpace) -> f64 {
        let m = mixed_overlaps(sim, gs);
        let g = self.gsd;
        let mut worst: f64 = 0.0;
        for i in 0..g {
            for j in 0..g {
                let want = if i == j { self.conf_weights[i] } else { 0.0 };
                worst = worst.max((self.marginal_conf[(i, j)] - want).norm());
            }
            let col: DVector<Complex64> = m.column(i).into_owned();
            let seen = (col.adjoint() * &self.marginal_rep * &col)[(0, 0)];
            worst = worst.max((seen - self.rep_weights[i]).norm());
        }
        worst
    }
}

fn validate_weights(weights: &[f64], g: usize) -> Result<()> {
    if weights.len() != g * g {
        return Err(Error::BadWeights(format!(
            "expected {} weights over H^0 × H_0 labels, got {}",
            g * g,
            weights.len()
        )));
    }
    if let Some(w) = weights.iter().find(|w| !w.is_finite() || **w < 0.0) {
        return Err(Error::BadWeights(format!(
            "weight {w} is not a nonnegative number"
        )));
    }
    let total: f64 = weights.iter().sum();
    if (total - 1.0).abs() > 1e-12 {
        return Err(Error::BadWeights(format!("weights sum to {total}, not 1")));
    }
    Ok(())
}

/// `ρ = Σ_b λ_b |b⟩⟨b|` with `|b⟩ = e_ω ⊗ m_ν`; `weights[i · g + j]` is the
/// weight of `(ω̲_i, ν̂_j)`.
pub fn ground_density(sim: &Simulator, gs: &GroundSpace, weights: &[f64]) -> Result<GroundDensity> {
    let g = gs.dimension();
    validate_weights(weights, g)?;
    if g > DENSITY_GSD_CAP {
        return Err(Error::too_large(
            "ground state degeneracy for densities",
            g,
            DENSITY_GSD_CAP as u64,
        ));
    }
    let m = mixed_overlaps(sim, gs);
    let n = g * g;
    let mut joint = DMatrix::<Complex64>::zeros(n, n);
    for i in 0..g {
        for j in 0..g {
            let lambda = weights[i * g + j];
            if lambda == 0.0 {
                continue;
            }
            let mut b = DVector::<Complex64>::zeros(n);
            for k in 0..g {
                b[i * g + k] = m[(k, j)];
            }
            joint += (&b * b.adjoint()) * Complex64::new(lambda, 0.0);
        }
    }
    let mut marginal_conf = DMatrix::<Complex64>::zeros(g, g);
    let mut marginal_rep = DMatrix::<Complex64>::zeros(g, g);
    for a in 0..g {
        for b in 0..g {
            for k in 0..g {
                marginal_conf[(a, b)] += joint[(a * g + k, b * g + k)];
                marginal_rep[(a, b)] += joint[(k * g + a, k * g + b)];
            }
        }
    }
    let conf_weights = (0..g)
        .map(|i| (0..g).map(|j| weights[i * g + j]).sum())
        .collect();
    let rep_weights = (0..g)
        .map(|j| (0..g).map(|i| weights[i * g + j]).sum())
        .collect();
    Ok(GroundDensity {
        gsd: g,
        joint,
        marginal_conf,
        marginal_rep,
        conf_weights,
        rep_weights,
    })
}

/// `Z = g^β`, `⟨E⟩ = ln(1/g)` and `S = ln Z + β⟨E⟩ = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Thermodynamics {
    pub beta: f64,
    pub gsd: u64,
    pub partition: f64,
    pub log_partition: f64,
    pub energy: f64,
    pub entropy: f64,
}

pub fn thermodynamics(gsd: u64, beta: f64) -> Thermodynamics {
    let ln_g = (gsd as f64).ln();
    let log_partition = beta * ln_g;
    let energy = 0.0 - ln_g;
    Thermodynamics {
        beta,
        gsd,
        partition: (gsd as f64).powf(beta),
        log_partition,
        energy,
        entropy: log_partition + beta * energy,
    }
}
