//! Subquotients `ker f / im g` of presented groups.
//!
//! With `f: S -> T` and `g: W -> S`, the kernel of `f` is `L / Λ` where `L` is
//! the lattice of integer lifts `x` with `M x ∈ diag(t) Z^m` and `Λ` is spanned
//! by `s_j e_j` for the finite generators of `S`. A basis of `L` comes from one
//! Smith form; the relations `Λ + im g` written in that basis go through a
//! second Smith form, whose invariants are those of the quotient.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::group::{CyclicSum, FgAbelianGroup, GroupElement};
use super::hom::GroupHomomorphism;
use super::matrix::IntMatrix;
use super::snf::{integer_kernel, smith_normal_form};
use crate::error::{Error, Result};

/// Ambient groups up to this order get lexicographically least coset
/// representatives by enumeration.
pub const LEX_REPRESENTATIVE_LIMIT: u64 = 1 << 16;

/// Upper bound on the number of classes [`Subquotient::representatives`] lists.
pub const REPRESENTATIVE_CAP: u64 = 1 << 22;

/// `ker f / im g`, with the data needed to classify elements and to produce
/// representatives.
#[derive(Clone, Debug)]
pub struct Subquotient {
    ambient: CyclicSum,
    group: FgAbelianGroup,
    /// `U` of the kernel-lattice Smith form and its pivots; lattice
    /// coordinates are `(U x)_i / pivot_i`.
    lattice_u: IntMatrix,
    lattice_pivots: Vec<BigInt>,
    /// `U` of the relation Smith form, restricted to the rows that survive
    /// in the canonical generator order (free first, then torsion).
    class_rows: Vec<usize>,
    relation_u: IntMatrix,
    /// Ambient coordinates of the canonical generators.
    generators: Vec<GroupElement>,
    kernel_test: GroupHomomorphism,
}

impl Subquotient {
    pub fn group(&self) -> &FgAbelianGroup {
        &self.group
    }

    pub fn ambient(&self) -> &CyclicSum {
        &self.ambient
    }

    /// Ambient elements mapping to the canonical generators of the group.
    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn in_kernel(&self, x: &GroupElement) -> bool {
        self.kernel_test.apply(x).is_zero()
    }

    /// Canonical coordinates of the class of `x`, which must lie in the kernel.
    pub fn classify(&self, x: &GroupElement) -> Result<GroupElement> {
        if x.len() != self.ambient.ngens() {
            return Err(Error::SpaceMismatch(format!(
                "element with {} coordinates classified in {}",
                x.len(),
                self.ambient
            )));
        }
        if !self.in_kernel(x) {
            return Err(Error::SpaceMismatch(
                "element is not in the kernel of the differential".into(),
            ));
        }
        let ux = self.lattice_u.mul_vec(x.coords());
        let c: Vec<BigInt> = self
            .lattice_pivots
            .iter()
            .zip(&ux)
            .map(|(d, v)| {
                debug_assert!(v.is_multiple_of(d));
                v / d
            })
            .collect();
        let y = self.relation_u.mul_vec(&c);
        let coords = self.class_rows.iter().map(|&r| y[r].clone()).collect();
        Ok(self.group.as_cyclic_sum().reduce(GroupElement(coords)))
    }

    /// Mixed-radix index of the class of `x` in a finite quotient.
    pub fn class_index(&self, x: &GroupElement) -> Result<BigInt> {
        let y = self.classify(x)?;
        self.group.as_cyclic_sum().index_of(&y)
    }

    /// The ambient element `Σ y_i gen_i` for canonical class coordinates `y`.
    pub fn lift(&self, y: &GroupElement) -> GroupElement {
        let mut acc = self.ambient.zero();
        for (k, gen) in y.coords().iter().zip(&self.generators) {
            if !k.is_zero() {
                acc = self.ambient.add(&acc, &self.ambient.scale(k, gen));
            }
        }
        acc
    }

    /// One representative per class, ordered by class index.
    ///
    /// Small ambient groups give the lexicographically least element of each
    /// coset; larger ones give the generator combination `Σ y_i gen_i`.
    pub fn representatives(&self) -> Result<Vec<GroupElement>> {
        let order = self
            .group
            .order()
            .ok_or_else(|| Error::InfiniteGroup(format!("representatives of {}", self.group)))?;
        let n = order
            .to_u64()
            .filter(|&n| n <= REPRESENTATIVE_CAP)
            .ok_or_else(|| Error::too_large("class count", &order, REPRESENTATIVE_CAP))?
            as usize;
        let classes = self.group.as_cyclic_sum();
        if self
            .ambient
            .order_u64()
            .is_some_and(|a| a <= LEX_REPRESENTATIVE_LIMIT)
        {
            let mut reps: Vec<Option<GroupElement>> = vec![None; n];
            let mut found = 0;
            for x in self.ambient.enumerate()? {
                if found == n {
                    break;
                }
                if !self.in_kernel(&x) {
                    continue;
                }
                let idx = self
                    .class_index(&x)?
                    .to_usize()
                    .expect("index below class count");
                if reps[idx].is_none() {
                    reps[idx] = Some(x);
                    found += 1;
                }
            }
            return Ok(reps
                .into_iter()
                .map(|r| r.expect("every class is hit"))
                .collect());
        }
        classes
            .enumerate()
            .map(|ys| ys.iter().map(|y| self.lift(y)).collect())
    }
}

/// `ker(ker_of) / im(mod_image_of)`.
pub fn subquotient(
    ker_of: &GroupHomomorphism,
    mod_image_of: &GroupHomomorphism,
) -> Result<Subquotient> {
    let ambient = ker_of.source().clone();
    if mod_image_of.target() != &ambient {
        return Err(Error::SpaceMismatch(format!(
            "image lands in {} but the kernel is taken in {}",
            mod_image_of.target(),
            ambient
        )));
    }
    if !ker_of.compose(mod_image_of)?.is_zero() {
        return Err(Error::NotAComplex(
            "composite of consecutive maps is nonzero".into(),
        ));
    }
    let n = ambient.ngens();
    let target = ker_of.target();
    let m = target.ngens();

    // Lifts x with M x ≡ 0 modulo the target orders.
    let stacked = ker_of
        .matrix()
        .hstack(&IntMatrix::diagonal(target.moduli(), m, m));
    let lifted: Vec<Vec<BigInt>> = integer_kernel(&stacked)
        .into_iter()
        .map(|v| v[..n].to_vec())
        .collect();
    let p = IntMatrix::from_columns(n, &lifted);
    let lattice = smith_normal_form(&p);
    let r = lattice.rank();
    let lattice_pivots = lattice.invariants.clone();
    let basis: Vec<Vec<BigInt>> = (0..r)
        .map(|i| {
            lattice
                .u_inv
                .column(i)
                .iter()
                .map(|v| v * &lattice_pivots[i])
                .collect()
        })
        .collect();
    let coords_of = |x: &[BigInt]| -> Vec<BigInt> {
        let ux = lattice.u.mul_vec(x);
        for v in &ux[r..] {
            debug_assert!(v.is_zero(), "vector outside the kernel lattice");
        }
        (0..r).map(|i| &ux[i] / &lattice_pivots[i]).collect()
    };

    let mut relations: Vec<Vec<BigInt>> = Vec::new();
    for j in 0..mod_image_of.matrix().cols() {
        relations.push(coords_of(&mod_image_of.matrix().column(j)));
    }
    for (j, s) in ambient.moduli().iter().enumerate() {
        if !s.is_zero() {
            let mut e = vec![BigInt::zero(); n];
            e[j] = s.clone();
            relations.push(coords_of(&e));
        }
    }
    let rel = IntMatrix::from_columns(r, &relations);
    let rsnf = smith_normal_form(&rel);
    let rel_rank = rsnf.rank();

    // Canonical order: free rows first, then torsion rows with d > 1.
    let mut class_rows: Vec<usize> = (rel_rank..r).collect();
    let mut torsion = Vec::new();
    for (i, d) in rsnf.invariants.iter().enumerate() {
        if !d.is_one() {
            class_rows.push(i);
            torsion.push(d.clone());
        }
    }
    let group = FgAbelianGroup::new(r - rel_rank, torsion)
        .expect("Smith invariants form a divisibility chain");

    let generators = class_rows
        .iter()
        .map(|&row| {
            let col = rsnf.u_inv.column(row);
            let mut x = vec![BigInt::zero(); n];
            for (k, b) in basis.iter().enumerate() {
                if col[k].is_zero() {
                    continue;
                }
                for (xi, bi) in x.iter_mut().zip(b) {
                    *xi += &col[k] * bi;
                }
            }
            ambient.reduce(GroupElement(x))
        })
        .collect();

    Ok(Subquotient {
        ambient,
        group,
        lattice_u: lattice.u.block(0, r, 0, n),
        lattice_pivots,
        class_rows,
        relation_u: rsnf.u,
        generators,
        kernel_test: ker_of.clone(),
    })
}

/// `ker f` as a subquotient modulo the zero subgroup.
pub fn kernel(f: &GroupHomomorphism) -> Result<Subquotient> {
    let zero = GroupHomomorphism::zero(CyclicSum::trivial(), f.source().clone());
    subquotient(f, &zero)
}

/// `coker f = T / im f`.
pub fn cokernel(f: &GroupHomomorphism) -> Result<Subquotient> {
    let to_zero = GroupHomomorphism::zero(f.target().clone(), CyclicSum::trivial());
    subquotient(&to_zero, f)
}

/// `|im f|` for a map into a finite group.
pub fn image_order(f: &GroupHomomorphism) -> Result<BigInt> {
    let t = f
        .target()
        .order()
        .ok_or_else(|| Error::InfiniteGroup(format!("image order in {}", f.target())))?;
    let c = cokernel(f)?
        .group()
        .order()
        .expect("quotient of a finite group");
    Ok(t / c)
}

/// Sizes of all classes met while enumerating a finite ambient group; a
/// brute-force check of the quotient structure used by tests and reports.
pub fn class_histogram(sq: &Subquotient) -> Result<HashMap<BigInt, u64>> {
    let mut hist = HashMap::new();
    for x in sq.ambient().enumerate()? {
        if sq.in_kernel(&x) {
            *hist.entry(sq.class_index(&x)?).or_insert(0) += 1;
        }
    }
    Ok(hist)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(m: &[u64]) -> CyclicSum {
        CyclicSum::from_u64s(m)
    }

    fn hom(src: &CyclicSum, tgt: &CyclicSum, rows: &[Vec<i64>]) -> GroupHomomorphism {
        let m = IntMatrix::from_rows_shaped(tgt.ngens(), src.ngens(), rows).unwrap();
        GroupHomomorphism::new(src.clone(), tgt.clone(), m).unwrap()
    }

    #[test]
    fn zero_maps_on_z3() {
        let z3 = cs(&[3]);
        let f = GroupHomomorphism::zero(z3.clone(), z3.clone());
        let g = GroupHomomorphism::zero(z3.clone(), z3.clone());
        let sq = subquotient(&f, &g).unwrap();
        assert_eq!(sq.group(), &FgAbelianGroup::cyclic(3));
        assert_eq!(sq.representatives().unwrap().len(), 3);
    }

    #[test]
    fn kernel_of_doubling_on_z4() {
        let z4 = cs(&[4]);
        let f = hom(&z4, &z4, &[vec![2]]);
        let sq = kernel(&f).unwrap();
        assert_eq!(sq.group(), &FgAbelianGroup::cyclic(2));
        // brute force: kernel is {0, 2}
        let ker: Vec<_> = z4
            .enumerate()
            .unwrap()
            .into_iter()
            .filter(|x| sq.in_kernel(x))
            .collect();
        assert_eq!(
            ker,
            vec![GroupElement::from_i64(&[0]), GroupElement::from_i64(&[2])]
        );
        assert_eq!(sq.representatives().unwrap(), ker);
    }

    #[test]
    fn free_quotient_with_torsion() {
        let z2 = CyclicSum::free(2);
        let f = GroupHomomorphism::zero(z2.clone(), CyclicSum::trivial());
        let g = hom(&CyclicSum::free(1), &z2, &[vec![0], vec![2]]);
        let sq = subquotient(&f, &g).unwrap();
        assert_eq!(sq.group().to_string(), "Z ⊕ Z2");
        // (0,1) generates the torsion class, (1,0) the free one
        assert_eq!(
            sq.classify(&GroupElement::from_i64(&[0, 1]))
                .unwrap()
                .coords()[1],
            BigInt::one()
        );
        assert!(sq
            .classify(&GroupElement::from_i64(&[0, 2]))
            .unwrap()
            .is_zero());
        assert!(!sq
            .classify(&GroupElement::from_i64(&[1, 0]))
            .unwrap()
            .is_zero());
        assert!(sq.representatives().is_err());
    }

    #[test]
    fn rejects_non_complex() {
        let z2 = cs(&[2]);
        let id = GroupHomomorphism::identity(z2.clone());
        assert!(matches!(subquotient(&id, &id), Err(Error::NotAComplex(_))));
    }

    #[test]
    fn cardinality_identity_exhaustive() {
        // f: Z4 ⊕ Z2 -> Z2, (a, b) -> a + b; g: Z2 -> Z4 ⊕ Z2, 1 -> (2, 0)
        let s = cs(&[4, 2]);
        let f = hom(&s, &cs(&[2]), &[vec![1, 1]]);
        let g = hom(&cs(&[2]), &s, &[vec![2], vec![0]]);
        let sq = subquotient(&f, &g).unwrap();
        let ker = s
            .enumerate()
            .unwrap()
            .iter()
            .filter(|x| sq.in_kernel(x))
            .count() as u64;
        assert_eq!(ker, 4);
        let im = image_order(&g).unwrap();
        assert_eq!(sq.group().order().unwrap() * im, BigInt::from(ker));
        let hist = class_histogram(&sq).unwrap();
        assert_eq!(hist.len() as u64, 2);
        assert!(hist.values().all(|&c| c == 2));
        // representatives reclassify to their own index and are lex-least
        for (i, r) in sq.representatives().unwrap().iter().enumerate() {
            assert_eq!(sq.class_index(r).unwrap(), BigInt::from(i));
        }
        assert_eq!(sq.representatives().unwrap()[0], s.zero());
    }

    #[test]
    fn generators_have_the_right_orders() {
        let s = cs(&[4, 6]);
        let sq = kernel(&GroupHomomorphism::zero(s.clone(), CyclicSum::trivial())).unwrap();
        assert_eq!(sq.group().to_string(), "Z2 ⊕ Z12");
        for (gen, d) in sq.generators().iter().zip(sq.group().torsion()) {
            assert!(s.scale(d, gen).is_zero());
            assert_eq!(
                sq.classify(gen)
                    .unwrap()
                    .coords()
                    .iter()
                    .filter(|c| c.is_one())
                    .count(),
                1
            );
        }
    }
}
