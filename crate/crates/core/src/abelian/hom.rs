//! Homomorphisms between presented groups, their Pontryagin duals, and the
//! `Hom` / `Ext` groups of canonical groups.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::group::{CyclicSum, FgAbelianGroup, GroupElement};
use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// An integer matrix (target generators x source generators) that defines a
/// well-defined homomorphism `source -> target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHomomorphism {
    source: CyclicSum,
    target: CyclicSum,
    matrix: IntMatrix,
}

impl GroupHomomorphism {
    /// Checks shape and the well-definedness certificate, then reduces entries
    /// modulo the target generator orders.
    pub fn new(source: CyclicSum, target: CyclicSum, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != target.ngens() || matrix.cols() != source.ngens() {
            return Err(Error::ShapeMismatch(format!(
                "matrix is {}x{} but the map {} -> {} needs {}x{}",
                matrix.rows(),
                matrix.cols(),
                source,
                target,
                target.ngens(),
                source.ngens()
            )));
        }
        let mut matrix = matrix;
        for i in 0..matrix.rows() {
            let t = target.generator_order(i).clone();
            for j in 0..matrix.cols() {
                let s = source.generator_order(j);
                let entry = &matrix[(i, j)];
                if s.is_zero() || entry.is_zero() {
                    continue;
                }
                let ok = if t.is_zero() {
                    false
                } else {
                    (s * entry).is_multiple_of(&t)
                };
                if !ok {
                    return Err(Error::IllDefinedHom(format!(
                        "generator {j} of order {s} maps to {entry} in coordinate {i} of order {}",
                        if t.is_zero() {
                            "inf".to_string()
                        } else {
                            t.to_string()
                        }
                    )));
                }
            }
            if !t.is_zero() {
                for j in 0..matrix.cols() {
                    let v = matrix[(i, j)].mod_floor(&t);
                    matrix[(i, j)] = v;
                }
            }
        }
        Ok(GroupHomomorphism {
            source,
            target,
            matrix,
        })
    }

    pub fn zero(source: CyclicSum, target: CyclicSum) -> Self {
        let matrix = IntMatrix::zeros(target.ngens(), source.ngens());
        GroupHomomorphism {
            source,
            target,
            matrix,
        }
    }

    pub fn identity(group: CyclicSum) -> Self {
        let matrix = IntMatrix::identity(group.ngens());
        GroupHomomorphism::new(group.clone(), group, matrix).expect("identity is well defined")
    }

    pub fn source(&self) -> &CyclicSum {
        &self.source
    }

    pub fn target(&self) -> &CyclicSum {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn apply(&self, g: &GroupElement) -> GroupElement {
        self.target
            .reduce(GroupElement(self.matrix.mul_vec(g.coords())))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GroupHomomorphism) -> Result<GroupHomomorphism> {
        if inner.target != self.source {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.source, self.target, inner.source, inner.target
            )));
        }
        GroupHomomorphism::new(
            inner.source.clone(),
            self.target.clone(),
            self.matrix.mul(&inner.matrix),
        )
    }

    /// The dual map `target^ -> source^` with `χ(f(g)) = (f^χ)(g)`.
    ///
    /// Dual coordinates `k_i ∈ [0, d_i)` index the character
    /// `g ↦ exp(2πi Σ k_i g_i / d_i)`, so the dual of a finite cyclic sum is
    /// the same cyclic sum.
    pub fn dual(&self) -> Result<GroupHomomorphism> {
        if !self.source.is_finite() || !self.target.is_finite() {
            return Err(Error::InfiniteGroup(format!(
                "dual of a map {} -> {}",
                self.source, self.target
            )));
        }
        let mut m = IntMatrix::zeros(self.source.ngens(), self.target.ngens());
        for j in 0..self.source.ngens() {
            let s = self.source.generator_order(j);
            for i in 0..self.target.ngens() {
                let t = self.target.generator_order(i);
                let scaled = s * &self.matrix[(i, j)];
                debug_assert!(scaled.is_multiple_of(t));
                m[(j, i)] = scaled / t;
            }
        }
        GroupHomomorphism::new(self.target.clone(), self.source.clone(), m)
    }
}

fn gcd_group(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// `Hom(A, B)`, biadditive over the cyclic decompositions.
pub fn hom_group(a: &FgAbelianGroup, b: &FgAbelianGroup) -> FgAbelianGroup {
    let mut factors = Vec::new();
    for x in a.cyclic_moduli() {
        for y in b.cyclic_moduli() {
            match (x.is_zero(), y.is_zero()) {
                // Hom(Z, B) = B
                (true, _) => factors.push(y.clone()),
                // Hom(Z_a, Z) = 0
                (false, true) => {}
                (false, false) => factors.push(gcd_group(&x, &y)),
            }
        }
    }
    FgAbelianGroup::from_cyclic_factors(&factors)
}

/// `Ext^1(A, B)`, biadditive over the cyclic decompositions.
pub fn ext_group(a: &FgAbelianGroup, b: &FgAbelianGroup) -> FgAbelianGroup {
    let mut factors = Vec::new();
    for x in a.cyclic_moduli() {
        if x.is_zero() {
            continue;
        }
        for y in b.cyclic_moduli() {
            if y.is_zero() {
                // Ext(Z_a, Z) = Z_a
                factors.push(x.clone());
            } else {
                factors.push(gcd_group(&x, &y));
            }
        }
    }
    FgAbelianGroup::from_cyclic_factors(&factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::character::Character;

    fn cs(m: &[u64]) -> CyclicSum {
        CyclicSum::from_u64s(m)
    }

    #[test]
    fn well_definedness_certificate() {
        // Z4 -> Z2, g -> g mod 2
        assert!(
            GroupHomomorphism::new(cs(&[4]), cs(&[2]), IntMatrix::from_rows(&[vec![1]])).is_ok()
        );
        // Z2 -> Z4 by x2 is fine, by x1 is not
        assert!(
            GroupHomomorphism::new(cs(&[2]), cs(&[4]), IntMatrix::from_rows(&[vec![2]])).is_ok()
        );
        assert!(matches!(
            GroupHomomorphism::new(cs(&[2]), cs(&[4]), IntMatrix::from_rows(&[vec![1]])),
            Err(Error::IllDefinedHom(_))
        ));
        // torsion into Z must vanish
        assert!(GroupHomomorphism::new(
            cs(&[3]),
            CyclicSum::free(1),
            IntMatrix::from_rows(&[vec![1]])
        )
        .is_err());
        assert!(matches!(
            GroupHomomorphism::new(cs(&[3]), cs(&[3]), IntMatrix::zeros(2, 1)),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn dual_of_reduction_mod_two() {
        let f =
            GroupHomomorphism::new(cs(&[4]), cs(&[2]), IntMatrix::from_rows(&[vec![1]])).unwrap();
        let fd = f.dual().unwrap();
        assert_eq!(fd.matrix(), &IntMatrix::from_rows(&[vec![2]]));
        // exhaustive adjointness over all 8 (g, k) pairs
        for g in f.source().enumerate().unwrap() {
            for k in f.target().enumerate().unwrap() {
                let lhs = Character::new(f.target().clone(), k.clone())
                    .unwrap()
                    .phase(&f.apply(&g));
                let rhs = Character::new(f.source().clone(), fd.apply(&k))
                    .unwrap()
                    .phase(&g);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn dual_of_zero_and_identity() {
        let z = GroupHomomorphism::zero(cs(&[2, 3]), cs(&[4]));
        assert!(z.dual().unwrap().is_zero());
        let id = GroupHomomorphism::identity(cs(&[2, 4]));
        assert_eq!(id.dual().unwrap(), id);
        let inf = GroupHomomorphism::zero(CyclicSum::free(1), cs(&[2]));
        assert!(matches!(inf.dual(), Err(Error::InfiniteGroup(_))));
    }

    /// Count `Hom(Z_a, Z_b)` by brute force: images of the generator killed by `a`.
    fn count_homs(a: u64, b: u64) -> u64 {
        (0..b).filter(|x| (a * x).is_multiple_of(b)).count() as u64
    }

    #[test]
    fn hom_and_ext_rules() {
        let z2 = FgAbelianGroup::cyclic(2);
        let z4 = FgAbelianGroup::cyclic(4);
        let h = hom_group(&z2, &z4);
        assert_eq!(h, FgAbelianGroup::cyclic(2));
        assert_eq!(h.order().unwrap(), BigInt::from(count_homs(2, 4)));
        assert!(ext_group(&FgAbelianGroup::free(1), &FgAbelianGroup::cyclic(5)).is_trivial());
        assert_eq!(ext_group(&z2, &z4), FgAbelianGroup::cyclic(2));
        assert_eq!(hom_group(&FgAbelianGroup::free(1), &z4), z4);
        assert!(hom_group(&z4, &FgAbelianGroup::free(2)).is_trivial());
        assert_eq!(ext_group(&z4, &FgAbelianGroup::free(1)), z4);
        for a in 2..9u64 {
            for b in 2..9u64 {
                let h = hom_group(&FgAbelianGroup::cyclic(a), &FgAbelianGroup::cyclic(b));
                assert_eq!(h.order().unwrap(), BigInt::from(count_homs(a, b)));
            }
        }
    }

    #[test]
    fn hom_is_biadditive() {
        let a = FgAbelianGroup::from_cyclic_factors(&[BigInt::zero(), BigInt::from(2)]);
        let b = FgAbelianGroup::cyclic(2);
        // Hom(Z ⊕ Z2, Z2) = Z2 ⊕ Z2
        assert_eq!(hom_group(&a, &b).to_string(), "Z2 ⊕ Z2");
    }
}
