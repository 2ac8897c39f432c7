//! Chains of presented abelian groups on a finite degree window.

use num_traits::Zero;

use crate::abelian::{subquotient, CyclicSum, FgAbelianGroup, GroupHomomorphism, IntMatrix};
use crate::error::{Error, Result};

/// `⋯ → G_n →∂_n G_{n−1} → ⋯`, stored on degrees `start ..= start + len − 1`
/// and trivial outside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedChain {
    start: i64,
    groups: Vec<CyclicSum>,
    /// `boundaries[k]` is `∂` out of degree `start + k`; the first one maps to
    /// the trivial group below the window.
    boundaries: Vec<GroupHomomorphism>,
    labels: Vec<Vec<String>>,
}

impl GradedChain {
    /// Validate shapes, well-definedness and `∂∘∂ = 0`.
    ///
    /// `maps` lists `(n, matrix)` for `∂_n: G_n → G_{n−1}`; omitted boundaries
    /// are zero. Each matrix has one row per generator of `G_{n−1}`.
    pub fn from_matrices(
        start: i64,
        groups: Vec<CyclicSum>,
        maps: Vec<(i64, IntMatrix)>,
    ) -> Result<Self> {
        let end = start + groups.len() as i64;
        let mut boundaries: Vec<GroupHomomorphism> = (0..groups.len())
            .map(|k| {
                let below = if k == 0 {
                    CyclicSum::trivial()
                } else {
                    groups[k - 1].clone()
                };
                GroupHomomorphism::zero(groups[k].clone(), below)
            })
            .collect();
        let mut seen = Vec::new();
        for (n, matrix) in maps {
            if n <= start || n >= end {
                if matrix.is_zero() {
                    continue;
                }
                return Err(Error::ShapeMismatch(format!(
                    "boundary from degree {n} leaves the degree window {start}..{}",
                    end - 1
                )));
            }
            if seen.contains(&n) {
                return Err(Error::ShapeMismatch(format!(
                    "boundary from degree {n} given twice"
                )));
            }
            seen.push(n);
            let k = (n - start) as usize;
            let src = &groups[k];
            let tgt = &groups[k - 1];
            if matrix.rows() != tgt.ngens() || matrix.cols() != src.ngens() {
                return Err(Error::ShapeMismatch(format!(
                    "boundary from degree {n} is {}x{}, expected {}x{}",
                    matrix.rows(),
                    matrix.cols(),
                    tgt.ngens(),
                    src.ngens()
                )));
            }
            boundaries[k] =
                GroupHomomorphism::new(src.clone(), tgt.clone(), matrix).map_err(|e| match e {
                    Error::IllDefinedHom(msg) => {
                        Error::IllDefinedHom(format!("boundary from degree {n}: {msg}"))
                    }
                    other => other,
                })?;
        }
        let labels = groups
            .iter()
            .enumerate()
            .map(|(k, g)| {
                (0..g.ngens())
                    .map(|i| format!("c{}_{}", start + k as i64, i))
                    .collect()
            })
            .collect();
        let chain = GradedChain {
            start,
            groups,
            boundaries,
            labels,
        };
        chain.check_complex()?;
        Ok(chain)
    }

    /// A chain concentrated in a single degree.
    pub fn concentrated(degree: i64, group: CyclicSum) -> Self {
        Self::from_matrices(degree, vec![group], vec![]).expect("single group is a complex")
    }

    pub fn with_labels(mut self, labels: Vec<Vec<String>>) -> Result<Self> {
        if labels.len() != self.groups.len()
            || labels
                .iter()
                .zip(&self.groups)
                .any(|(l, g)| l.len() != g.ngens())
        {
            return Err(Error::ShapeMismatch(
                "generator labels do not match the groups".into(),
            ));
        }
        self.labels = labels;
        Ok(self)
    }

    fn check_complex(&self) -> Result<()> {
        for n in self.min_degree() + 1..=self.max_degree() {
            let twice = self.boundary(n - 1).compose(&self.boundary(n))?;
            if !twice.is_zero() {
                return Err(Error::NotAComplex(format!(
                    "∂_{} ∘ ∂_{n} is nonzero",
                    n - 1
                )));
            }
        }
        Ok(())
    }

    pub fn min_degree(&self) -> i64 {
        self.start
    }

    /// Highest stored degree (`start − 1` for an empty window).
    pub fn max_degree(&self) -> i64 {
        self.start + self.groups.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.min_degree()..=self.max_degree()
    }

    fn slot(&self, n: i64) -> Option<usize> {
        (n >= self.start && n <= self.max_degree()).then(|| (n - self.start) as usize)
    }

    /// `G_n`, trivial outside the window.
    pub fn group(&self, n: i64) -> CyclicSum {
        self.slot(n)
            .map_or_else(CyclicSum::trivial, |k| self.groups[k].clone())
    }

    /// Generator count of `G_n`.
    pub fn ngens(&self, n: i64) -> usize {
        self.slot(n).map_or(0, |k| self.groups[k].ngens())
    }

    /// `∂_n: G_n → G_{n−1}`, zero outside the window.
    pub fn boundary(&self, n: i64) -> GroupHomomorphism {
        match self.slot(n) {
            Some(k) => self.boundaries[k].clone(),
            None => GroupHomomorphism::zero(self.group(n), self.group(n - 1)),
        }
    }

    pub fn labels(&self, n: i64) -> &[String] {
        self.slot(n).map_or(&[], |k| &self.labels[k])
    }

    pub fn is_free(&self) -> bool {
        self.groups.iter().all(CyclicSum::is_free)
    }

    pub fn is_finite(&self) -> bool {
        self.groups.iter().all(CyclicSum::is_finite)
    }

    /// `H_n = ker ∂_n / im ∂_{n+1}`.
    pub fn homology(&self, n: i64) -> FgAbelianGroup {
        subquotient(&self.boundary(n), &self.boundary(n + 1))
            .expect("validated chain")
            .group()
            .clone()
    }

    /// `Σ (−1)^n rank G_n` over free groups.
    pub fn euler_characteristic(&self) -> i64 {
        self.degrees()
            .map(|n| {
                let r = self
                    .group(n)
                    .moduli()
                    .iter()
                    .filter(|m| m.is_zero())
                    .count() as i64;
                if n.rem_euclid(2) == 0 {
                    r
                } else {
                    -r
                }
            })
            .sum()
    }

    /// Degree range that still holds at least one nontrivial group.
    pub fn support(&self) -> Option<(i64, i64)> {
        let nontrivial: Vec<i64> = self
            .degrees()
            .filter(|&n| !self.group(n).is_trivial())
            .collect();
        Some((*nontrivial.first()?, *nontrivial.last()?))
    }

    /// Whether every boundary is zero.
    pub fn has_zero_boundaries(&self) -> bool {
        self.boundaries.iter().all(|b| b.matrix().is_zero())
    }

    /// The raw boundary matrix out of degree `n`.
    pub fn boundary_matrix(&self, n: i64) -> IntMatrix {
        self.boundary(n).matrix().clone()
    }
}

/// `homology_of_chain(ch, n)`.
pub fn homology_of_chain(ch: &GradedChain, n: i64) -> FgAbelianGroup {
    ch.homology(n)
}

/// Betti number and torsion orders of a homology group.
pub fn betti_and_torsion(h: &FgAbelianGroup) -> (usize, Vec<String>) {
    (
        h.rank(),
        h.torsion()
            .iter()
            .filter(|d| !d.is_zero())
            .map(|d| d.to_string())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free(r: usize) -> CyclicSum {
        CyclicSum::free(r)
    }

    #[test]
    fn torus_cw_is_valid() {
        let c = GradedChain::from_matrices(0, vec![free(1), free(2), free(1)], vec![]).unwrap();
        assert_eq!(c.homology(0).to_string(), "Z");
        assert_eq!(c.homology(1).to_string(), "Z^2");
        assert_eq!(c.homology(2).to_string(), "Z");
        assert_eq!(c.euler_characteristic(), 0);
    }

    #[test]
    fn klein_bottle_cw() {
        let d2 = IntMatrix::from_rows(&[vec![0], vec![2]]);
        let c =
            GradedChain::from_matrices(0, vec![free(1), free(2), free(1)], vec![(2, d2)]).unwrap();
        assert_eq!(homology_of_chain(&c, 1).to_string(), "Z ⊕ Z2");
        assert!(homology_of_chain(&c, 2).is_trivial());
        let (b, t) = betti_and_torsion(&c.homology(1));
        assert_eq!((b, t), (1, vec!["2".to_string()]));
    }

    #[test]
    fn rejects_non_complex_and_bad_shapes() {
        let d1 = IntMatrix::from_rows(&[vec![1]]);
        let d2 = IntMatrix::from_rows(&[vec![1]]);
        let err =
            GradedChain::from_matrices(0, vec![free(1), free(1), free(1)], vec![(1, d1), (2, d2)]);
        assert!(matches!(err, Err(Error::NotAComplex(_))));
        let bad = GradedChain::from_matrices(
            0,
            vec![free(1), free(2)],
            vec![(1, IntMatrix::zeros(2, 2))],
        );
        assert!(matches!(bad, Err(Error::ShapeMismatch(_))));
        let ill = GradedChain::from_matrices(
            0,
            vec![CyclicSum::from_u64s(&[4]), CyclicSum::from_u64s(&[2])],
            vec![(1, IntMatrix::from_rows(&[vec![1]]))],
        );
        assert!(matches!(ill, Err(Error::IllDefinedHom(_))));
    }

    #[test]
    fn outside_window_is_trivial() {
        let c = GradedChain::concentrated(1, CyclicSum::from_u64s(&[2]));
        assert!(c.group(0).is_trivial());
        assert!(c.group(5).is_trivial());
        assert_eq!(c.boundary(1).target().ngens(), 0);
        assert_eq!(c.homology(1), FgAbelianGroup::cyclic(2));
        assert!(c.homology(0).is_trivial());
        assert_eq!(c.support(), Some((1, 1)));
    }

    #[test]
    fn torsion_chain_homology() {
        // Z2 -(x2)-> Z4 in degrees 1 -> 0
        let c = GradedChain::from_matrices(
            0,
            vec![CyclicSum::from_u64s(&[4]), CyclicSum::from_u64s(&[2])],
            vec![(1, IntMatrix::from_rows(&[vec![2]]))],
        )
        .unwrap();
        assert_eq!(c.homology(0), FgAbelianGroup::cyclic(2));
        assert!(c.homology(1).is_trivial());
    }
}
