//! A geometric chain paired with a gauge chain.

use crate::chain::graded::GradedChain;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeModel {
    name: String,
    description: String,
    geometry: GradedChain,
    gauge: GradedChain,
}

impl GaugeModel {
    /// The geometric chain must consist of free groups; the gauge chain may
    /// be any chain of finitely generated abelian groups.
    pub fn new(
        name: impl Into<String>,
        description: impl Into<String>,
        geometry: GradedChain,
        gauge: GradedChain,
    ) -> Result<Self> {
        if !geometry.is_free() {
            return Err(Error::InvalidGroup(
                "geometric chain groups must be free".into(),
            ));
        }
        Ok(GaugeModel {
            name: name.into(),
            description: description.into(),
            geometry,
            gauge,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn geometry(&self) -> &GradedChain {
        &self.geometry
    }

    pub fn gauge(&self) -> &GradedChain {
        &self.gauge
    }

    /// Every gauge group is finite, so the configuration spaces are finite.
    pub fn is_simulator_eligible(&self) -> bool {
        self.gauge.is_finite()
    }

    /// Number of generators `|K_n|` of the geometric chain in degree `n`.
    pub fn cells(&self, n: i64) -> usize {
        self.geometry.ngens(n)
    }

    /// Degrees `p` for which `hom^p` can be nontrivial.
    pub fn p_window(&self) -> Option<(i64, i64)> {
        let (c0, c1) = self.geometry.support()?;
        let (g0, g1) = self.gauge.support()?;
        Some((c0 - g1, c1 - g0))
    }

    /// Whether the two degree windows overlap at `p = 0`.
    pub fn windows_overlap(&self) -> bool {
        self.p_window().is_some_and(|(lo, hi)| lo <= 0 && 0 <= hi)
    }
}
