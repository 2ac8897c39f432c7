//! Brute-force gauge orbits: flat configurations modulo gauge translation.
//!
//! This path never touches a Smith form. It enumerates `hom^0`, keeps the
//! configurations with `d^0 ω = 0`, and sweeps each one's orbit
//! `ω + d^{−1} α` over every `α ∈ hom^{−1}`.

use rayon::prelude::*;

use crate::abelian::{Radix, SmallHom};
use crate::calculus::differential::differential;
use crate::calculus::space::hom_space;
use crate::chain::GaugeModel;
use crate::error::{Error, Result};

/// Default cap on `|hom^0| · |hom^{−1}|`.
pub const DEFAULT_ENUM_CAP: u64 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeOrbits {
    /// Configuration indices (mixed radix over `hom^0`) of each orbit,
    /// sorted; orbits are ordered by their least element.
    pub orbits: Vec<Vec<u64>>,
    pub configurations: u64,
    pub flat: u64,
    pub gauge_images: u64,
}

impl GaugeOrbits {
    pub fn count(&self) -> usize {
        self.orbits.len()
    }
}

pub fn gauge_orbits(model: &GaugeModel, cap: u64) -> Result<GaugeOrbits> {
    let h0 = hom_space(model, 0);
    let hm = hom_space(model, -1);
    let r0 = Radix::from_cyclic(h0.total())?;
    let rm = Radix::from_cyclic(hm.total())?;
    let work = (r0.order() as u128) * (rm.order() as u128);
    if work > cap as u128 {
        return Err(Error::too_large(
            "orbit enumeration |hom^0|·|hom^-1|",
            work,
            cap,
        ));
    }
    let d0 = SmallHom::new(&differential(model, 0)?)?;
    let dm = SmallHom::new(&differential(model, -1)?)?;

    let flat: Vec<bool> = (0..r0.order())
        .into_par_iter()
        .map_init(
            || (vec![0u64; r0.len()], vec![0u64; d0.rows()]),
            |(digits, out), w| {
                r0.digits_into(w, digits);
                d0.apply_into(digits, out);
                out.iter().all(|&v| v == 0)
            },
        )
        .collect();

    let mut images: Vec<u64> = (0..rm.order())
        .into_par_iter()
        .map_init(
            || (vec![0u64; rm.len()], vec![0u64; r0.len()]),
            |(digits, out), a| {
                rm.digits_into(a, digits);
                dm.apply_into(digits, out);
                r0.index(out)
            },
        )
        .collect();
    images.sort_unstable();
    images.dedup();

    let mut seen = vec![false; r0.order() as usize];
    let mut orbits = Vec::new();
    for w in 0..r0.order() {
        if !flat[w as usize] || seen[w as usize] {
            continue;
        }
        let mut orbit: Vec<u64> = images.iter().map(|&g| r0.add(w, g)).collect();
        for &v in &orbit {
            debug_assert!(flat[v as usize], "gauge translation left the flat set");
            seen[v as usize] = true;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    Ok(GaugeOrbits {
        orbits,
        configurations: r0.order(),
        flat: flat.iter().filter(|&&f| f).count() as u64,
        gauge_images: images.len() as u64,
    })
}
