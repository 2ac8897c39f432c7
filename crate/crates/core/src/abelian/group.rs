//! Finitely generated abelian groups, in canonical and in presented form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use crate::error::{Error, Result};

/// A finitely generated abelian group in invariant-factor form:
/// `Z^rank ⊕ Z_{d_1} ⊕ ... ⊕ Z_{d_k}` with `d_1 | d_2 | ... | d_k`, `d_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FgAbelianGroup {
    rank: usize,
    torsion: Vec<BigInt>,
}

impl FgAbelianGroup {
    /// Validating constructor: the torsion list must already be a divisibility chain.
    pub fn new(rank: usize, torsion: Vec<BigInt>) -> Result<Self> {
        for d in &torsion {
            if d < &BigInt::from(2) {
                return Err(Error::InvalidGroup(format!("torsion factor {d} < 2")));
            }
        }
        for w in torsion.windows(2) {
            if !w[1].is_multiple_of(&w[0]) {
                return Err(Error::InvalidGroup(format!(
                    "torsion factors {} and {} break the divisibility chain",
                    w[0], w[1]
                )));
            }
        }
        Ok(FgAbelianGroup { rank, torsion })
    }

    pub fn trivial() -> Self {
        FgAbelianGroup {
            rank: 0,
            torsion: vec![],
        }
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup {
            rank,
            torsion: vec![],
        }
    }

    /// `Z_m`; `m = 0` gives `Z` and `m = 1` the trivial group.
    pub fn cyclic(m: impl Into<BigInt>) -> Self {
        Self::from_cyclic_factors(&[m.into()])
    }

    /// Normalise an arbitrary direct sum of cyclic groups (`0` meaning `Z`).
    pub fn from_cyclic_factors(moduli: &[BigInt]) -> Self {
        let mut rank = 0;
        let mut finite = Vec::new();
        for m in moduli {
            let m = m.abs();
            if m.is_zero() {
                rank += 1;
            } else if !m.is_one() {
                finite.push(m);
            }
        }
        if finite.len() <= 1 {
            return FgAbelianGroup {
                rank,
                torsion: finite,
            };
        }
        let snf = smith_normal_form(&IntMatrix::diagonal(&finite, finite.len(), finite.len()));
        let torsion = snf.invariants.into_iter().filter(|d| !d.is_one()).collect();
        FgAbelianGroup { rank, torsion }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Order of a finite group; `None` when the free rank is positive.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    pub fn direct_sum(&self, other: &FgAbelianGroup) -> FgAbelianGroup {
        let mut moduli = self.cyclic_moduli();
        moduli.extend(other.cyclic_moduli());
        Self::from_cyclic_factors(&moduli)
    }

    /// Moduli of the standard generators: free ones first (`0`), then torsion.
    pub fn cyclic_moduli(&self) -> Vec<BigInt> {
        std::iter::repeat_n(BigInt::zero(), self.rank)
            .chain(self.torsion.iter().cloned())
            .collect()
    }

    pub fn as_cyclic_sum(&self) -> CyclicSum {
        CyclicSum {
            moduli: self.cyclic_moduli(),
        }
    }

    /// Pontryagin dual of a finite group; its dual coordinates index characters.
    pub fn dual_group(&self) -> Result<FgAbelianGroup> {
        if !self.is_finite() {
            return Err(Error::InfiniteGroup(format!("dual of {self}")));
        }
        Ok(self.clone())
    }

    /// All elements, last coordinate varying fastest.
    pub fn enumerate(&self) -> Result<Vec<GroupElement>> {
        self.as_cyclic_sum().enumerate()
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

/// Coordinates of an element with respect to the generators of a [`CyclicSum`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(pub Vec<BigInt>);

impl GroupElement {
    pub fn from_i64(coords: &[i64]) -> Self {
        GroupElement(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.0.iter().map(|c| c.to_u64()).collect()
    }
}

/// A direct sum of cyclic groups with a fixed ordered generating set.
///
/// A modulus of `0` stands for `Z`; `1` is allowed and gives a trivial factor.
/// This is the presented form used for chain groups and hom spaces, where the
/// generator order is meaningful and need not be a divisibility chain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CyclicSum {
    moduli: Vec<BigInt>,
}

impl CyclicSum {
    pub fn new(moduli: Vec<BigInt>) -> Result<Self> {
        if let Some(m) = moduli.iter().find(|m| m.is_negative()) {
            return Err(Error::InvalidGroup(format!("negative modulus {m}")));
        }
        Ok(CyclicSum { moduli })
    }

    pub fn from_u64s(moduli: &[u64]) -> Self {
        CyclicSum {
            moduli: moduli.iter().map(|&m| BigInt::from(m)).collect(),
        }
    }

    pub fn free(rank: usize) -> Self {
        CyclicSum {
            moduli: vec![BigInt::zero(); rank],
        }
    }

    pub fn trivial() -> Self {
        CyclicSum { moduli: vec![] }
    }

    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a CyclicSum>) -> Self {
        CyclicSum {
            moduli: parts
                .into_iter()
                .flat_map(|p| p.moduli.iter().cloned())
                .collect(),
        }
    }

    pub fn moduli(&self) -> &[BigInt] {
        &self.moduli
    }

    pub fn ngens(&self) -> usize {
        self.moduli.len()
    }

    pub fn is_finite(&self) -> bool {
        self.moduli.iter().all(|m| !m.is_zero())
    }

    pub fn is_trivial(&self) -> bool {
        self.moduli.iter().all(One::is_one)
    }

    pub fn is_free(&self) -> bool {
        self.moduli.iter().all(Zero::is_zero)
    }

    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.moduli.iter().product())
    }

    /// Order as a machine integer, if finite and representable.
    pub fn order_u64(&self) -> Option<u64> {
        self.order().and_then(|o| o.to_u64())
    }

    pub fn canonical(&self) -> FgAbelianGroup {
        FgAbelianGroup::from_cyclic_factors(&self.moduli)
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![BigInt::zero(); self.moduli.len()])
    }

    /// The `i`-th standard generator.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut e = self.zero();
        e.0[i] = BigInt::one();
        self.reduce(e)
    }

    pub fn reduce_coords(&self, coords: &mut [BigInt]) {
        for (c, m) in coords.iter_mut().zip(&self.moduli) {
            if !m.is_zero() {
                *c = c.mod_floor(m);
            }
        }
    }

    pub fn reduce(&self, mut g: GroupElement) -> GroupElement {
        self.reduce_coords(&mut g.0);
        g
    }

    pub fn element(&self, coords: Vec<BigInt>) -> Result<GroupElement> {
        if coords.len() != self.ngens() {
            return Err(Error::ShapeMismatch(format!(
                "element has {} coordinates, group has {} generators",
                coords.len(),
                self.ngens()
            )));
        }
        Ok(self.reduce(GroupElement(coords)))
    }

    /// Whether the coordinates are already in reduced form.
    pub fn contains(&self, g: &GroupElement) -> bool {
        g.len() == self.ngens()
            && g.0
                .iter()
                .zip(&self.moduli)
                .all(|(c, m)| m.is_zero() || (!c.is_negative() && c < m))
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let coords = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
        self.reduce(GroupElement(coords))
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        self.reduce(GroupElement(a.0.iter().map(|x| -x).collect()))
    }

    pub fn scale(&self, k: &BigInt, a: &GroupElement) -> GroupElement {
        self.reduce(GroupElement(a.0.iter().map(|x| x * k).collect()))
    }

    /// Mixed-radix index in enumeration order (first coordinate most significant).
    pub fn index_of(&self, g: &GroupElement) -> Result<BigInt> {
        if !self.is_finite() {
            return Err(Error::InfiniteGroup("index in an infinite group".into()));
        }
        let g = self.reduce(g.clone());
        let mut idx = BigInt::zero();
        for (c, m) in g.0.iter().zip(&self.moduli) {
            idx = idx * m + c;
        }
        Ok(idx)
    }

    pub fn element_at(&self, index: &BigInt) -> Result<GroupElement> {
        if !self.is_finite() {
            return Err(Error::InfiniteGroup(
                "element at index of an infinite group".into(),
            ));
        }
        let mut rest = index.clone();
        let mut coords = vec![BigInt::zero(); self.ngens()];
        for (k, m) in self.moduli.iter().enumerate().rev() {
            let (q, r) = rest.div_mod_floor(m);
            coords[k] = r;
            rest = q;
        }
        Ok(GroupElement(coords))
    }

    /// Every element in lexicographic order; the identity comes first.
    pub fn enumerate(&self) -> Result<Vec<GroupElement>> {
        let order = self
            .order()
            .ok_or_else(|| Error::InfiniteGroup("enumerating an infinite group".into()))?;
        let n = order
            .to_usize()
            .ok_or_else(|| Error::too_large("enumeration", &order, u64::MAX))?;
        let mut out = Vec::with_capacity(n);
        let mut cur = self.zero();
        for _ in 0..n {
            out.push(cur.clone());
            for k in (0..self.ngens()).rev() {
                cur.0[k] += 1;
                if cur.0[k] < self.moduli[k] {
                    break;
                }
                cur.0[k] = BigInt::zero();
            }
        }
        Ok(out)
    }

    /// Order of the `i`-th generator (`0` for infinite order).
    pub fn generator_order(&self, i: usize) -> &BigInt {
        &self.moduli[i]
    }
}

impl fmt::Display for CyclicSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .moduli
            .iter()
            .map(|m| {
                if m.is_zero() {
                    "Z".to_string()
                } else {
                    format!("Z{m}")
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn canonical_form_and_display() {
        let g = FgAbelianGroup::from_cyclic_factors(&big(&[2, 3, 0, 4, 1]));
        assert_eq!(g.rank(), 1);
        assert_eq!(g.torsion(), &big(&[2, 12])[..]);
        assert_eq!(g.to_string(), "Z ⊕ Z2 ⊕ Z12");
        assert_eq!(FgAbelianGroup::trivial().to_string(), "0");
        assert_eq!(FgAbelianGroup::free(2).to_string(), "Z^2");
        assert_eq!(
            FgAbelianGroup::cyclic(6),
            FgAbelianGroup::from_cyclic_factors(&big(&[2, 3]))
        );
    }

    #[test]
    fn chain_is_enforced() {
        assert!(FgAbelianGroup::new(0, big(&[2, 4])).is_ok());
        assert!(FgAbelianGroup::new(0, big(&[4, 2])).is_err());
        assert!(FgAbelianGroup::new(0, big(&[1])).is_err());
    }

    #[test]
    fn order_only_for_finite() {
        assert_eq!(
            FgAbelianGroup::new(0, big(&[2, 4])).unwrap().order(),
            Some(BigInt::from(8))
        );
        assert_eq!(FgAbelianGroup::free(1).order(), None);
        assert_eq!(FgAbelianGroup::trivial().order(), Some(BigInt::one()));
    }

    #[test]
    fn enumerate_orders() {
        let z2 = FgAbelianGroup::cyclic(2);
        assert_eq!(
            z2.enumerate().unwrap(),
            vec![GroupElement::from_i64(&[0]), GroupElement::from_i64(&[1])]
        );
        let v4 = CyclicSum::from_u64s(&[2, 2]);
        assert_eq!(
            v4.enumerate().unwrap(),
            vec![
                GroupElement::from_i64(&[0, 0]),
                GroupElement::from_i64(&[0, 1]),
                GroupElement::from_i64(&[1, 0]),
                GroupElement::from_i64(&[1, 1]),
            ]
        );
        assert_eq!(
            FgAbelianGroup::trivial().enumerate().unwrap(),
            vec![GroupElement(vec![])]
        );
        assert!(FgAbelianGroup::free(1).enumerate().is_err());
    }

    #[test]
    fn index_roundtrip() {
        let g = CyclicSum::from_u64s(&[3, 4, 2]);
        for (i, e) in g.enumerate().unwrap().iter().enumerate() {
            assert_eq!(g.index_of(e).unwrap(), BigInt::from(i));
            assert_eq!(&g.element_at(&BigInt::from(i)).unwrap(), e);
        }
    }

    #[test]
    fn dual_group_is_isomorphic() {
        let g = FgAbelianGroup::new(0, big(&[2, 4])).unwrap();
        assert_eq!(g.dual_group().unwrap(), g);
        assert_eq!(
            FgAbelianGroup::trivial().dual_group().unwrap(),
            FgAbelianGroup::trivial()
        );
        assert!(matches!(
            FgAbelianGroup::free(1).dual_group(),
            Err(Error::InfiniteGroup(_))
        ));
    }
}
