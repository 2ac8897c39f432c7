//! Spaces of p-maps and p-map representations.

use std::collections::HashMap;

use num_complex::Complex64;
use num_rational::BigRational;

use crate::abelian::character::{fract, phase_to_complex, Character};
use crate::abelian::{CyclicSum, FgAbelianGroup, GroupElement};
use crate::chain::GaugeModel;
use crate::error::{Error, Result};

/// One generator `x ∈ K_n` together with the group `G_{n−p}` it maps into.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Site {
    pub degree: i64,
    pub cell: usize,
    pub label: String,
    pub group: CyclicSum,
    /// First coordinate of this site inside the total group.
    pub offset: usize,
}

/// `hom(C, G)^p`: a direct sum over sites, coordinates site-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    p: i64,
    sites: Vec<Site>,
    total: CyclicSum,
    lookup: HashMap<(i64, usize), usize>,
}

impl HomSpace {
    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    pub fn site_index(&self, degree: i64, cell: usize) -> Option<usize> {
        self.lookup.get(&(degree, cell)).copied()
    }

    /// The presented total group (site groups concatenated).
    pub fn total(&self) -> &CyclicSum {
        &self.total
    }

    /// The total group in invariant-factor form.
    pub fn total_group(&self) -> FgAbelianGroup {
        self.total.canonical()
    }

    pub fn ngens(&self) -> usize {
        self.total.ngens()
    }

    pub fn is_finite(&self) -> bool {
        self.total.is_finite()
    }

    pub fn zero(&self) -> PMap {
        PMap {
            p: self.p,
            values: self.total.zero(),
        }
    }

    pub fn pmap(&self, coords: Vec<num_bigint::BigInt>) -> Result<PMap> {
        Ok(PMap {
            p: self.p,
            values: self.total.element(coords)?,
        })
    }

    pub fn prep(&self, coords: Vec<num_bigint::BigInt>) -> Result<PRep> {
        if !self.is_finite() {
            return Err(Error::InfiniteGroup(format!(
                "representations of hom^{} = {}",
                self.p, self.total
            )));
        }
        Ok(PRep {
            p: self.p,
            dual: self.total.element(coords)?,
        })
    }

    /// Value of `ω` on site `s`.
    pub fn site_value(&self, w: &PMap, s: usize) -> GroupElement {
        let site = &self.sites[s];
        GroupElement(w.values.coords()[site.offset..site.offset + site.group.ngens()].to_vec())
    }

    fn check_map(&self, w: &PMap) -> Result<()> {
        if w.p != self.p || !self.total.contains(&w.values) {
            return Err(Error::SpaceMismatch(format!(
                "{}-map does not belong to hom^{}",
                w.p, self.p
            )));
        }
        Ok(())
    }

    fn check_rep(&self, r: &PRep) -> Result<()> {
        if r.p != self.p || !self.total.contains(&r.dual) {
            return Err(Error::SpaceMismatch(format!(
                "{}-representation does not belong to hom_{}",
                r.p, self.p
            )));
        }
        Ok(())
    }

    pub fn add(&self, a: &PMap, b: &PMap) -> Result<PMap> {
        self.check_map(a)?;
        self.check_map(b)?;
        Ok(PMap {
            p: self.p,
            values: self.total.add(&a.values, &b.values),
        })
    }

    pub fn add_rep(&self, a: &PRep, b: &PRep) -> Result<PRep> {
        self.check_rep(a)?;
        self.check_rep(b)?;
        Ok(PRep {
            p: self.p,
            dual: self.total.add(&a.dual, &b.dual),
        })
    }

    /// Exact phase of `χ_ρ̂(ω) = ∏_sites χ_{x_*ρ̂}(x_*ω)`.
    pub fn p_phase(&self, rep: &PRep, conf: &PMap) -> Result<BigRational> {
        self.check_map(conf)?;
        self.check_rep(rep)?;
        let mut acc = BigRational::from_integer(0.into());
        for s in 0..self.sites.len() {
            let site = &self.sites[s];
            let range = site.offset..site.offset + site.group.ngens();
            let chi = Character::new(
                site.group.clone(),
                GroupElement(rep.dual.coords()[range.clone()].to_vec()),
            )?;
            acc += chi.phase(&GroupElement(conf.values.coords()[range].to_vec()));
        }
        Ok(fract(acc))
    }
}

/// A p-map `ω`, one group element per site.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PMap {
    p: i64,
    values: GroupElement,
}

impl PMap {
    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn values(&self) -> &GroupElement {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_zero()
    }
}

/// A p-map representation `ρ̂`, one character (dual coordinate block) per site.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PRep {
    p: i64,
    dual: GroupElement,
}

impl PRep {
    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn dual_coordinates(&self) -> &GroupElement {
        &self.dual
    }

    pub fn is_trivial(&self) -> bool {
        self.dual.is_zero()
    }
}

/// Sites `(n, x ∈ K_n)` with `G_{n−p}` nontrivial, ascending `n` then `x`.
pub fn hom_space(model: &GaugeModel, p: i64) -> HomSpace {
    let geometry = model.geometry();
    let mut sites = Vec::new();
    let mut lookup = HashMap::new();
    let mut offset = 0;
    for n in geometry.degrees() {
        let group = model.gauge().group(n - p);
        if group.is_trivial() {
            continue;
        }
        for (cell, label) in geometry.labels(n).iter().enumerate() {
            lookup.insert((n, cell), sites.len());
            sites.push(Site {
                degree: n,
                cell,
                label: label.clone(),
                group: group.clone(),
                offset,
            });
            offset += group.ngens();
        }
    }
    let total = CyclicSum::concat(sites.iter().map(|s| &s.group));
    HomSpace {
        p,
        sites,
        total,
        lookup,
    }
}

/// `χ_ρ̂(ω)` as a unit complex number.
pub fn p_character(space: &HomSpace, rep: &PRep, conf: &PMap) -> Result<Complex64> {
    Ok(phase_to_complex(&space.p_phase(rep, conf)?))
}
