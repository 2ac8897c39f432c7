//! Characters of finite presented groups with exact rational phases.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::group::{CyclicSum, GroupElement};
use crate::error::{Error, Result};

/// `χ(g) = exp(2πi Σ k_i g_i / d_i)` for dual coordinates `k_i ∈ [0, d_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    group: CyclicSum,
    dual: GroupElement,
}

impl Character {
    pub fn new(group: CyclicSum, dual: GroupElement) -> Result<Self> {
        if !group.is_finite() {
            return Err(Error::InfiniteGroup(format!("characters of {group}")));
        }
        let dual = group.element(dual.0)?;
        Ok(Character { group, dual })
    }

    pub fn trivial(group: CyclicSum) -> Result<Self> {
        let zero = group.zero();
        Self::new(group, zero)
    }

    pub fn group(&self) -> &CyclicSum {
        &self.group
    }

    pub fn dual_coordinates(&self) -> &GroupElement {
        &self.dual
    }

    pub fn is_trivial(&self) -> bool {
        self.dual.is_zero()
    }

    /// The phase of `χ(g)` as an exact rational in `[0, 1)`.
    pub fn phase(&self, g: &GroupElement) -> BigRational {
        let mut acc = BigRational::zero();
        for ((k, x), d) in self
            .dual
            .coords()
            .iter()
            .zip(g.coords())
            .zip(self.group.moduli())
        {
            if k.is_zero() || x.is_zero() {
                continue;
            }
            acc += BigRational::new((k * x).mod_floor(d), d.clone());
        }
        fract(acc)
    }

    pub fn eval(&self, g: &GroupElement) -> Complex64 {
        phase_to_complex(&self.phase(g))
    }

    /// Pointwise product of characters.
    pub fn mul(&self, other: &Character) -> Result<Character> {
        if self.group != other.group {
            return Err(Error::SpaceMismatch(
                "characters of different groups".into(),
            ));
        }
        Ok(Character {
            group: self.group.clone(),
            dual: self.group.add(&self.dual, &other.dual),
        })
    }

    /// Complex conjugate character.
    pub fn conj(&self) -> Character {
        Character {
            group: self.group.clone(),
            dual: self.group.neg(&self.dual),
        }
    }
}

/// Fractional part in `[0, 1)`.
pub fn fract(q: BigRational) -> BigRational {
    let floor = q.floor();
    q - floor
}

pub fn phase_to_complex(phase: &BigRational) -> Complex64 {
    let num = phase.numer().to_f64().unwrap_or(0.0);
    let den = phase.denom().to_f64().unwrap_or(1.0);
    Complex64::from_polar(1.0, std::f64::consts::TAU * num / den)
}

/// Least common multiple of the finite generator orders (`1` for none).
pub fn exponent(group: &CyclicSum) -> BigInt {
    group
        .moduli()
        .iter()
        .filter(|m| !m.is_zero())
        .fold(BigInt::one(), |acc, m| acc.lcm(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_characters(g: &CyclicSum) -> Vec<Character> {
        g.enumerate()
            .unwrap()
            .into_iter()
            .map(|k| Character::new(g.clone(), k).unwrap())
            .collect()
    }

    #[test]
    fn homomorphism_law_exhaustive() {
        for moduli in [vec![2, 4], vec![3, 3], vec![8], vec![2, 2, 4]] {
            let g = CyclicSum::from_u64s(&moduli);
            let elems = g.enumerate().unwrap();
            for chi in all_characters(&g) {
                for a in &elems {
                    for b in &elems {
                        assert_eq!(fract(chi.phase(a) + chi.phase(b)), chi.phase(&g.add(a, b)));
                    }
                }
            }
        }
    }

    #[test]
    fn trivial_character_is_one() {
        let g = CyclicSum::from_u64s(&[3, 5]);
        let chi = Character::trivial(g.clone()).unwrap();
        for x in g.enumerate().unwrap() {
            assert!(chi.phase(&x).is_zero());
            assert!((chi.eval(&x) - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn schur_orthogonality_exhaustive() {
        let g = CyclicSum::from_u64s(&[2, 4, 2]);
        let elems = g.enumerate().unwrap();
        let n = elems.len() as f64;
        let chars = all_characters(&g);
        for a in &chars {
            for b in &chars {
                let s: Complex64 = elems
                    .iter()
                    .map(|x| a.eval(x).conj() * b.eval(x))
                    .sum::<Complex64>()
                    / n;
                let expect = if a == b { 1.0 } else { 0.0 };
                assert!((s - Complex64::new(expect, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn product_and_conjugate() {
        let g = CyclicSum::from_u64s(&[6]);
        let a = Character::new(g.clone(), GroupElement::from_i64(&[2])).unwrap();
        let b = Character::new(g.clone(), GroupElement::from_i64(&[5])).unwrap();
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.dual_coordinates(), &GroupElement::from_i64(&[1]));
        assert!(a.mul(&a.conj()).unwrap().is_trivial());
        assert!(Character::new(CyclicSum::free(1), GroupElement::from_i64(&[0])).is_err());
        assert_eq!(exponent(&CyclicSum::from_u64s(&[4, 6])), BigInt::from(12));
    }
}
