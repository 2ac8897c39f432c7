//! p-cohomology, p-homology and the ground state degeneracy.

use num_bigint::BigInt;

use crate::abelian::{image_order, subquotient, FgAbelianGroup, Subquotient};
use crate::calculus::differential::{differential, dual_differential};
use crate::calculus::space::{hom_space, HomSpace, PMap, PRep};
use crate::chain::GaugeModel;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `H^p = ker d^p / im d^{p−1}`, classes of p-maps.
    Cohomology,
    /// `H_p = ker d_p / im d_{p+1}`, classes of p-map representations.
    Homology,
}

/// A (co)homology group with its classifier and representatives.
#[derive(Clone, Debug)]
pub struct CohomologyResult {
    p: i64,
    side: Side,
    space: HomSpace,
    quotient: Subquotient,
}

impl CohomologyResult {
    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn group(&self) -> &FgAbelianGroup {
        self.quotient.group()
    }

    pub fn space(&self) -> &HomSpace {
        &self.space
    }

    pub fn subquotient(&self) -> &Subquotient {
        &self.quotient
    }

    pub fn order(&self) -> Option<BigInt> {
        self.group().order()
    }

    /// Representative p-maps, one per class, ordered by class index.
    pub fn representatives(&self) -> Result<Vec<PMap>> {
        if self.side != Side::Cohomology {
            return Err(Error::SpaceMismatch(
                "homology classes are represented by p-reps".into(),
            ));
        }
        self.quotient
            .representatives()?
            .into_iter()
            .map(|g| self.space.pmap(g.0))
            .collect()
    }

    /// Representative p-map representations for a homology result.
    pub fn rep_representatives(&self) -> Result<Vec<PRep>> {
        if self.side != Side::Homology {
            return Err(Error::SpaceMismatch(
                "cohomology classes are represented by p-maps".into(),
            ));
        }
        self.quotient
            .representatives()?
            .into_iter()
            .map(|g| self.space.prep(g.0))
            .collect()
    }

    /// Class index of a closed p-map.
    pub fn classify(&self, w: &PMap) -> Result<BigInt> {
        if w.p() != self.p || self.side != Side::Cohomology {
            return Err(Error::SpaceMismatch(
                "p-map classified in the wrong group".into(),
            ));
        }
        self.quotient.class_index(w.values())
    }

    /// Class index of a closed p-map representation.
    pub fn classify_rep(&self, r: &PRep) -> Result<BigInt> {
        if r.p() != self.p || self.side != Side::Homology {
            return Err(Error::SpaceMismatch(
                "p-rep classified in the wrong group".into(),
            ));
        }
        self.quotient.class_index(r.dual_coordinates())
    }
}

pub fn cohomology(model: &GaugeModel, p: i64) -> Result<CohomologyResult> {
    let d = differential(model, p)?;
    let d_prev = differential(model, p - 1)?;
    Ok(CohomologyResult {
        p,
        side: Side::Cohomology,
        space: hom_space(model, p),
        quotient: subquotient(&d, &d_prev)?,
    })
}

pub fn homology(model: &GaugeModel, p: i64) -> Result<CohomologyResult> {
    let d = dual_differential(model, p)?;
    let d_next = dual_differential(model, p + 1)?;
    Ok(CohomologyResult {
        p,
        side: Side::Homology,
        space: hom_space(model, p),
        quotient: subquotient(&d, &d_next)?,
    })
}

/// `|H^0|` and the independently computed `|H_0|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gsd {
    pub cohomology: BigInt,
    pub homology: BigInt,
}

impl Gsd {
    pub fn agrees(&self) -> bool {
        self.cohomology == self.homology
    }
}

pub fn gsd(model: &GaugeModel) -> Result<Gsd> {
    let h = cohomology(model, 0)?;
    let cohomology = h
        .order()
        .ok_or_else(|| Error::InfiniteGroup(format!("H^0 = {} has free rank", h.group())))?;
    let homology = homology(model, 0)?
        .order()
        .ok_or_else(|| Error::InfiniteGroup("H_0 has free rank".into()))?;
    Ok(Gsd {
        cohomology,
        homology,
    })
}

/// Data of one rung of the duality ladder at degree `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityRung {
    pub p: i64,
    pub hom_order: BigInt,
    pub dual_order: BigInt,
    pub image_d_upper: BigInt,
    pub image_d_lower: BigInt,
    pub cohomology: FgAbelianGroup,
    pub homology: FgAbelianGroup,
}

impl DualityRung {
    pub fn holds(&self) -> bool {
        self.hom_order == self.dual_order
            && self.image_d_upper == self.image_d_lower
            && self.cohomology == self.homology
    }
}

/// `|hom^p| = |hom_p|`, `|im d^p| = |im d_{p+1}|` and `H^p ≅ H_p`.
pub fn duality_rung(model: &GaugeModel, p: i64) -> Result<DualityRung> {
    let space = hom_space(model, p);
    let order = space
        .total()
        .order()
        .ok_or_else(|| Error::InfiniteGroup(format!("hom^{p} is infinite")))?;
    let d = differential(model, p)?;
    let d_low = dual_differential(model, p + 1)?;
    Ok(DualityRung {
        p,
        hom_order: order.clone(),
        // hom_p is indexed by the characters of hom^p, a group of the same order
        dual_order: d_low.target().order().expect("finite"),
        image_d_upper: image_order(&d)?,
        image_d_lower: image_order(&d_low)?,
        cohomology: cohomology(model, p)?.group().clone(),
        homology: homology(model, p)?.group().clone(),
    })
}
