//! Exact character orthogonality on a finite hom space.
//!
//! `(1/D) Σ_ω χ̄_π̂(ω) χ_ρ̂(ω) = δ(π̂, ρ̂)` reduces to `Σ_ω χ_σ(ω) = D δ(σ, 0)`
//! with `σ = ρ̂ − π̂`. Phases are integers modulo the exponent `L`; the sum is
//! decided exactly from the phase histogram: it equals `D` when every phase
//! is zero and vanishes when the phases are equidistributed over a nontrivial
//! subgroup of `Z_L`.

use num_integer::Integer;
use rayon::prelude::*;

use crate::abelian::{PhaseTable, Radix};
use crate::calculus::space::HomSpace;
use crate::error::{Error, Result};

/// Largest `D` for which the exhaustive pairwise sweep runs.
pub const ORTHOGONALITY_CAP: u64 = 1 << 12;

/// Exact value of a character sum `Σ_g ζ_L^{phase(g)}` when it is forced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExactSum {
    /// All phases vanish: the sum is the number of terms.
    Full(u64),
    /// Phases are uniform over a nontrivial subgroup: the sum is zero.
    Zero,
    /// Neither; the histogram is not that of a character.
    Undetermined,
}

/// Classify a histogram of phases in `Z_L`.
pub fn exact_sum(histogram: &[u64]) -> ExactSum {
    let l = histogram.len() as u64;
    let total: u64 = histogram.iter().sum();
    let support: Vec<u64> = (0..l).filter(|&k| histogram[k as usize] > 0).collect();
    if support == [0] {
        return ExactSum::Full(total);
    }
    let step = support.iter().fold(l, |g, &k| g.gcd(&k));
    let e = l / step;
    let per = total / e;
    if e > 1 && per * e == total && (0..e).all(|j| histogram[(j * step) as usize] == per) {
        ExactSum::Zero
    } else {
        ExactSum::Undetermined
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub dimension: u64,
    /// Ordered pairs `(π̂, ρ̂)` checked for the representation relation.
    pub rep_pairs: u64,
    /// Ordered pairs `(ω, ω')` checked for the configuration relation.
    pub conf_pairs: u64,
    pub failures: u64,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn sum_table(radix: &Radix, table: &PhaseTable, swap: bool) -> Vec<ExactSum> {
    let d = radix.order();
    let l = table.exponent() as usize;
    (0..d)
        .into_par_iter()
        .map_init(
            || {
                (
                    vec![0u64; radix.len()],
                    vec![0u64; radix.len()],
                    vec![0u64; l],
                )
            },
            |(a, b, hist), s| {
                hist.iter_mut().for_each(|h| *h = 0);
                radix.digits_into(s, a);
                for w in 0..d {
                    radix.digits_into(w, b);
                    let ph = if swap {
                        table.phase(b, a)
                    } else {
                        table.phase(a, b)
                    };
                    hist[ph as usize] += 1;
                }
                exact_sum(hist)
            },
        )
        .collect()
}

/// Both orthogonality relations over every ordered pair, exactly.
pub fn orthogonality_sweep(space: &HomSpace, cap: u64) -> Result<OrthogonalityReport> {
    let radix = Radix::from_cyclic(space.total())?;
    let d = radix.order();
    if d > cap {
        return Err(Error::too_large("orthogonality sweep dimension", d, cap));
    }
    let table = PhaseTable::new(radix.moduli())?;
    // Σ_ω χ_σ(ω) over configurations, and Σ_ρ̂ χ_ρ̂(τ) over representations.
    let over_conf = sum_table(&radix, &table, false);
    let over_rep = sum_table(&radix, &table, true);
    let check = |sums: &[ExactSum]| -> u64 {
        (0..d)
            .into_par_iter()
            .map(|a| {
                let na = radix.neg(a);
                (0..d)
                    .filter(|&b| {
                        let s = radix.add(b, na);
                        let ok = match sums[s as usize] {
                            ExactSum::Full(n) => a == b && n == d,
                            ExactSum::Zero => a != b,
                            ExactSum::Undetermined => false,
                        };
                        !ok
                    })
                    .count() as u64
            })
            .sum()
    };
    let failures = check(&over_conf) + check(&over_rep);
    Ok(OrthogonalityReport {
        dimension: d,
        rep_pairs: d * d,
        conf_pairs: d * d,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn histogram_rules() {
        assert_eq!(exact_sum(&[4, 0, 0, 0]), ExactSum::Full(4));
        assert_eq!(exact_sum(&[2, 0, 2, 0]), ExactSum::Zero);
        assert_eq!(exact_sum(&[1, 1, 1, 1]), ExactSum::Zero);
        assert_eq!(exact_sum(&[2, 1, 0, 1]), ExactSum::Undetermined);
        assert_eq!(exact_sum(&[1, 1, 0, 0]), ExactSum::Undetermined);
    }
}
