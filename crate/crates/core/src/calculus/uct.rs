//! Universal-coefficient decomposition of `H^p(C, G)`.
//!
//! Over `Z` the gauge chain splits, up to quasi-isomorphism, into its
//! homology groups, so `H^p(C, G) ≅ ⊕_n H^n(C, H_{n−p}(G))` with
//! `H^n(C, A) = Hom(H_n(C), A) ⊕ Ext(H_{n−1}(C), A)`.

use num_bigint::BigInt;
use num_traits::One;

use crate::abelian::{ext_group, hom_group, FgAbelianGroup};
use crate::calculus::cohomology::cohomology;
use crate::chain::GaugeModel;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UctTerm {
    /// Geometric degree `n`.
    pub n: i64,
    pub coefficients: FgAbelianGroup,
    pub hom_part: FgAbelianGroup,
    pub ext_part: FgAbelianGroup,
    pub total: FgAbelianGroup,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UctDecomposition {
    pub p: i64,
    pub terms: Vec<UctTerm>,
    pub sum: FgAbelianGroup,
    pub direct: FgAbelianGroup,
}

impl UctDecomposition {
    /// Product of the finite term orders, `None` if some term is infinite.
    pub fn product(&self) -> Option<BigInt> {
        self.terms
            .iter()
            .map(|t| t.total.order())
            .try_fold(BigInt::one(), |acc, o| o.map(|o| acc * o))
    }

    pub fn matches(&self) -> bool {
        self.sum == self.direct
    }
}

pub fn uct_decomposition_at(model: &GaugeModel, p: i64) -> Result<UctDecomposition> {
    let c = model.geometry();
    let g = model.gauge();
    let lo = c.min_degree().min(g.min_degree() + p) - 1;
    let hi = c.max_degree().max(g.max_degree() + p) + 1;
    let mut terms = Vec::new();
    let mut sum = FgAbelianGroup::trivial();
    for n in lo..=hi {
        let coefficients = g.homology(n - p);
        if coefficients.is_trivial() {
            continue;
        }
        let hom_part = hom_group(&c.homology(n), &coefficients);
        let ext_part = ext_group(&c.homology(n - 1), &coefficients);
        let total = hom_part.direct_sum(&ext_part);
        sum = sum.direct_sum(&total);
        terms.push(UctTerm {
            n,
            coefficients,
            hom_part,
            ext_part,
            total,
        });
    }
    let direct = cohomology(model, p)?.group().clone();
    Ok(UctDecomposition {
        p,
        terms,
        sum,
        direct,
    })
}

/// The decomposition at `p = 0`, whose product is the GSD.
pub fn uct_decomposition(model: &GaugeModel) -> Result<UctDecomposition> {
    uct_decomposition_at(model, 0)
}
