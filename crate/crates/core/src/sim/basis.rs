//! The configuration basis of `H^0` and dense state vectors over it.

use num_complex::Complex64;

use crate::abelian::{PhaseTable, Radix};
use crate::calculus::space::{HomSpace, PMap, PRep};
use crate::error::{Error, Result};

/// Bijection between basis indices and p-maps of `hom^0`; index `0` is the
/// zero p-map and the first site is the most significant digit.
#[derive(Clone, Debug)]
pub struct BasisIndexer {
    space: HomSpace,
    radix: Radix,
    phases: PhaseTable,
}

impl BasisIndexer {
    pub fn new(space: HomSpace, max_dim: u64) -> Result<Self> {
        if !space.is_finite() {
            return Err(Error::InfiniteGroup(format!(
                "hom^{} = {} has free generators",
                space.p(),
                space.total()
            )));
        }
        let order = space.total().order().expect("finite");
        let radix = match Radix::from_cyclic(space.total()) {
            Ok(r) if r.order() <= max_dim => r,
            _ => return Err(Error::too_large("Hilbert space dimension", order, max_dim)),
        };
        let phases = PhaseTable::new(radix.moduli())?;
        Ok(BasisIndexer {
            space,
            radix,
            phases,
        })
    }

    pub fn dimension(&self) -> u64 {
        self.radix.order()
    }

    pub fn space(&self) -> &HomSpace {
        &self.space
    }

    pub fn radix(&self) -> &Radix {
        &self.radix
    }

    pub fn phases(&self) -> &PhaseTable {
        &self.phases
    }

    pub fn index_of(&self, w: &PMap) -> Result<u64> {
        if w.p() != self.space.p() || w.values().len() != self.radix.len() {
            return Err(Error::SpaceMismatch(
                "p-map outside the simulated space".into(),
            ));
        }
        Ok(self.radix.index_of(w.values()))
    }

    pub fn pmap(&self, index: u64) -> PMap {
        self.space
            .pmap(self.radix.element(index).0)
            .expect("index inside the space")
    }

    pub fn rep_index(&self, r: &PRep) -> Result<u64> {
        if r.p() != self.space.p() || r.dual_coordinates().len() != self.radix.len() {
            return Err(Error::SpaceMismatch(
                "p-rep outside the simulated space".into(),
            ));
        }
        Ok(self.radix.index_of(r.dual_coordinates()))
    }

    /// `L · phase(χ_k(ω))` for dual index `k` and configuration index `w`.
    pub fn phase(&self, k: u64, w: u64) -> u64 {
        self.phases
            .phase(&self.radix.digits(k), &self.radix.digits(w))
    }

    pub fn character(&self, k: u64, w: u64) -> Complex64 {
        self.phases.root(self.phase(k, w))
    }
}

/// Complex amplitudes over the configuration basis.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    pub amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn zeros(dim: u64) -> Self {
        StateVector {
            amplitudes: vec![Complex64::new(0.0, 0.0); dim as usize],
        }
    }

    /// The configuration state `|ω⟩`.
    pub fn basis(dim: u64, index: u64) -> Self {
        let mut v = Self::zeros(dim);
        v.amplitudes[index as usize] = Complex64::new(1.0, 0.0);
        v
    }

    /// The representation state `|ρ̂⟩ = D^{−1/2} Σ_ω χ_ρ̂(ω) |ω⟩`.
    pub fn representation(basis: &BasisIndexer, k: u64) -> Self {
        let d = basis.dimension();
        let norm = 1.0 / (d as f64).sqrt();
        let kd = basis.radix().digits(k);
        let mut wd = vec![0; basis.radix().len()];
        let amplitudes = (0..d)
            .map(|w| {
                basis.radix().digits_into(w, &mut wd);
                basis.phases().eval(&kd, &wd) * norm
            })
            .collect();
        StateVector { amplitudes }
    }

    pub fn dim(&self) -> u64 {
        self.amplitudes.len() as u64
    }

    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn normalized(mut self) -> Result<Self> {
        let n = self.norm();
        if n < 1e-300 {
            return Err(Error::ToleranceExceeded {
                check: "normalizing a zero vector".into(),
                residual: n,
            });
        }
        for a in &mut self.amplitudes {
            *a /= n;
        }
        Ok(self)
    }

    pub fn distance(&self, other: &StateVector) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}
