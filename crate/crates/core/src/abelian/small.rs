//! Machine-integer views of finite presented groups, for enumeration-heavy
//! code paths (orbit counting, state vectors, character sweeps).

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::group::{CyclicSum, GroupElement};
use super::hom::GroupHomomorphism;
use crate::error::{Error, Result};

/// Largest group exponent for which a table of roots of unity is built.
pub const ROOT_TABLE_CAP: u64 = 1 << 24;

/// Mixed-radix indexing of a finite cyclic sum; the first coordinate is the
/// most significant digit, so index order is lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Radix {
    moduli: Vec<u64>,
    strides: Vec<u64>,
    order: u64,
}

impl Radix {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.contains(&0) {
            return Err(Error::InfiniteGroup(
                "mixed-radix index of an infinite group".into(),
            ));
        }
        let mut strides = vec![1u64; moduli.len()];
        let mut order: u64 = 1;
        for k in (0..moduli.len()).rev() {
            strides[k] = order;
            order = order.checked_mul(moduli[k]).ok_or_else(|| {
                let size: BigInt = moduli.iter().map(|&m| BigInt::from(m)).product();
                Error::too_large("group order", size, u64::MAX)
            })?;
        }
        Ok(Radix {
            moduli,
            strides,
            order,
        })
    }

    pub fn from_cyclic(g: &CyclicSum) -> Result<Self> {
        if !g.is_finite() {
            return Err(Error::InfiniteGroup(format!("mixed-radix index of {g}")));
        }
        let moduli = g
            .moduli()
            .iter()
            .map(|m| {
                m.to_u64()
                    .ok_or_else(|| Error::too_large("generator order", m, u64::MAX))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(moduli)
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn strides(&self) -> &[u64] {
        &self.strides
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn len(&self) -> usize {
        self.moduli.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moduli.is_empty()
    }

    pub fn digits_into(&self, mut index: u64, out: &mut [u64]) {
        for k in (0..self.moduli.len()).rev() {
            out[k] = index % self.moduli[k];
            index /= self.moduli[k];
        }
    }

    pub fn digits(&self, index: u64) -> Vec<u64> {
        let mut out = vec![0; self.len()];
        self.digits_into(index, &mut out);
        out
    }

    pub fn index(&self, digits: &[u64]) -> u64 {
        digits.iter().zip(&self.strides).map(|(d, s)| d * s).sum()
    }

    /// Index of `a + b`.
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let mut out = 0;
        let (mut a, mut b) = (a, b);
        for k in (0..self.moduli.len()).rev() {
            let m = self.moduli[k];
            let s = (a % m + b % m) % m;
            out += s * self.strides[k];
            a /= m;
            b /= m;
        }
        out
    }

    /// Index of `−a`.
    pub fn neg(&self, a: u64) -> u64 {
        let mut out = 0;
        let mut a = a;
        for k in (0..self.moduli.len()).rev() {
            let m = self.moduli[k];
            let d = a % m;
            out += ((m - d) % m) * self.strides[k];
            a /= m;
        }
        out
    }

    pub fn element(&self, index: u64) -> GroupElement {
        GroupElement(self.digits(index).into_iter().map(BigInt::from).collect())
    }

    pub fn index_of(&self, g: &GroupElement) -> u64 {
        let digits: Vec<u64> = g
            .coords()
            .iter()
            .zip(&self.moduli)
            .map(|(c, &m)| c.mod_floor(&BigInt::from(m)).to_u64().unwrap_or(0))
            .collect();
        self.index(&digits)
    }
}

/// A homomorphism between finite groups with machine-integer entries.
#[derive(Clone, Debug)]
pub struct SmallHom {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
    target_moduli: Vec<u64>,
}

impl SmallHom {
    pub fn new(f: &GroupHomomorphism) -> Result<Self> {
        let target = Radix::from_cyclic(f.target())?;
        Radix::from_cyclic(f.source())?;
        let m = f.matrix();
        let mut data = Vec::with_capacity(m.rows() * m.cols());
        for i in 0..m.rows() {
            let t = BigInt::from(target.moduli()[i]);
            for j in 0..m.cols() {
                data.push(m[(i, j)].mod_floor(&t).to_u64().expect("reduced entry"));
            }
        }
        Ok(SmallHom {
            rows: m.rows(),
            cols: m.cols(),
            data,
            target_moduli: target.moduli().to_vec(),
        })
    }

    pub fn apply_into(&self, x: &[u64], out: &mut [u64]) {
        for (i, o) in out.iter_mut().enumerate().take(self.rows) {
            let t = self.target_moduli[i] as u128;
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            let mut acc: u128 = 0;
            for (a, b) in row.iter().zip(x) {
                if *a != 0 && *b != 0 {
                    acc = (acc + (*a as u128) * (*b as u128)) % t;
                }
            }
            *o = acc as u64;
        }
    }

    pub fn apply(&self, x: &[u64]) -> Vec<u64> {
        let mut out = vec![0; self.rows];
        self.apply_into(x, &mut out);
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }
}

/// Integer phases of characters on a finite cyclic sum.
///
/// With `L` the exponent, `χ_k(g) = ζ_L^{Σ k_i g_i L/d_i}`; phases add exactly
/// modulo `L` and are turned into complex numbers through a lookup table.
#[derive(Clone, Debug)]
pub struct PhaseTable {
    exponent: u64,
    weights: Vec<u64>,
    moduli: Vec<u64>,
    roots: Vec<Complex64>,
}

impl PhaseTable {
    pub fn new(moduli: &[u64]) -> Result<Self> {
        let exponent = moduli.iter().fold(1u64, |acc, &m| acc.lcm(&m));
        if exponent > ROOT_TABLE_CAP {
            return Err(Error::too_large("group exponent", exponent, ROOT_TABLE_CAP));
        }
        let weights = moduli.iter().map(|&m| exponent / m).collect();
        let roots = (0..exponent)
            .map(|k| Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / exponent as f64))
            .collect();
        Ok(PhaseTable {
            exponent,
            weights,
            moduli: moduli.to_vec(),
            roots,
        })
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// `L · phase(χ_k(g))` in `[0, L)`.
    pub fn phase(&self, k: &[u64], g: &[u64]) -> u64 {
        let l = self.exponent as u128;
        let mut acc: u128 = 0;
        for i in 0..self.moduli.len() {
            if k[i] == 0 || g[i] == 0 {
                continue;
            }
            let m = self.moduli[i] as u128;
            let kg = ((k[i] as u128) * (g[i] as u128)) % m;
            acc = (acc + kg * self.weights[i] as u128) % l;
        }
        acc as u64
    }

    pub fn root(&self, phase: u64) -> Complex64 {
        self.roots[(phase % self.exponent) as usize]
    }

    pub fn eval(&self, k: &[u64], g: &[u64]) -> Complex64 {
        self.root(self.phase(k, g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::character::Character;
    use crate::abelian::matrix::IntMatrix;
    use num_rational::BigRational;

    #[test]
    fn radix_matches_big_enumeration() {
        let g = CyclicSum::from_u64s(&[3, 2, 4]);
        let r = Radix::from_cyclic(&g).unwrap();
        for (i, e) in g.enumerate().unwrap().iter().enumerate() {
            assert_eq!(r.index_of(e), i as u64);
            assert_eq!(&r.element(i as u64), e);
        }
        for a in 0..r.order() {
            assert_eq!(r.add(a, r.neg(a)), 0);
            for b in 0..r.order() {
                assert_eq!(r.element(r.add(a, b)), g.add(&r.element(a), &r.element(b)));
            }
        }
    }

    #[test]
    fn small_hom_agrees() {
        let f = GroupHomomorphism::new(
            CyclicSum::from_u64s(&[4, 2]),
            CyclicSum::from_u64s(&[2, 4]),
            IntMatrix::from_rows(&[vec![1, 1], vec![3, 2]]),
        )
        .unwrap();
        let s = SmallHom::new(&f).unwrap();
        let src = Radix::from_cyclic(f.source()).unwrap();
        let tgt = Radix::from_cyclic(f.target()).unwrap();
        for i in 0..src.order() {
            let img = s.apply(&src.digits(i));
            assert_eq!(tgt.element(tgt.index(&img)), f.apply(&src.element(i)));
        }
    }

    #[test]
    fn phases_match_exact_characters() {
        let moduli = [2u64, 4, 3];
        let g = CyclicSum::from_u64s(&moduli);
        let r = Radix::from_cyclic(&g).unwrap();
        let t = PhaseTable::new(&moduli).unwrap();
        for k in 0..r.order() {
            let chi = Character::new(g.clone(), r.element(k)).unwrap();
            for x in 0..r.order() {
                let exact = chi.phase(&r.element(x));
                let int = t.phase(&r.digits(k), &r.digits(x));
                assert_eq!(
                    exact,
                    BigRational::new(BigInt::from(int), BigInt::from(t.exponent()))
                );
            }
        }
        assert!(Radix::new(vec![2, 0]).is_err());
    }
}
