//! Structured operators on the configuration basis.
//!
//! Every operator used by the model is a combination of shifts `P^α` and
//! diagonals, so nothing is stored as a dense `D × D` matrix. Operators act on
//! dense state vectors, on sparse columns, and expose exact traces where the
//! structure allows.

use std::collections::HashMap;
use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::calculus::space::{PMap, PRep};
use crate::error::{Error, Result};
use crate::sim::basis::{BasisIndexer, StateVector};

/// Above this dimension operators are never expanded densely.
pub const DENSE_LIMIT: u64 = 1 << 8;

/// Largest dimension for which traces fall back to summing diagonal entries
/// column by column.
pub const COLUMN_TRACE_LIMIT: u64 = 1 << 14;

/// Sparse column: basis index to amplitude.
pub type Column = HashMap<u64, Complex64>;

const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

#[derive(Clone, Debug)]
pub enum Operator {
    Identity,
    /// `P^α |ω⟩ = |ω + α⟩`.
    Shift(u64),
    /// `Q_ρ̂ |ω⟩ = χ_ρ̂(ω) |ω⟩`, with `ρ̂` a dual index.
    Clock(u64),
    /// A real diagonal with one entry per basis state.
    Diagonal(Arc<Vec<f64>>),
    /// `Σ_k c_k P^{β_k}` with distinct shifts.
    Mixture(Arc<Vec<(u64, Complex64)>>),
    /// `F_0 F_1 ⋯ F_m`; the last factor acts first.
    Product(Vec<Operator>),
    /// `Σ_k c_k F_k`.
    Sum(Vec<(Complex64, Operator)>),
}

impl Operator {
    pub fn product(factors: Vec<Operator>) -> Self {
        Operator::Product(factors)
    }

    pub fn scaled(c: f64, op: Operator) -> Self {
        Operator::Sum(vec![(Complex64::new(c, 0.0), op)])
    }

    /// `a − b`.
    pub fn difference(a: Operator, b: Operator) -> Self {
        Operator::Sum(vec![(ONE, a), (-ONE, b)])
    }

    /// `1 − self`.
    pub fn complement(self) -> Self {
        Operator::difference(Operator::Identity, self)
    }

    /// `[a, b] = ab − ba`.
    pub fn commutator(a: &Operator, b: &Operator) -> Self {
        Operator::difference(
            Operator::Product(vec![a.clone(), b.clone()]),
            Operator::Product(vec![b.clone(), a.clone()]),
        )
    }

    pub fn apply(&self, basis: &BasisIndexer, v: &StateVector) -> StateVector {
        let d = basis.dimension();
        let r = basis.radix();
        match self {
            Operator::Identity => v.clone(),
            Operator::Shift(a) => {
                let mut out = StateVector::zeros(d);
                for (w, amp) in v.amplitudes.iter().enumerate() {
                    out.amplitudes[r.add(w as u64, *a) as usize] = *amp;
                }
                out
            }
            Operator::Clock(k) => {
                let kd = r.digits(*k);
                let mut wd = vec![0; r.len()];
                let mut out = v.clone();
                for (w, amp) in out.amplitudes.iter_mut().enumerate() {
                    r.digits_into(w as u64, &mut wd);
                    *amp *= basis.phases().eval(&kd, &wd);
                }
                out
            }
            Operator::Diagonal(diag) => StateVector {
                amplitudes: v
                    .amplitudes
                    .iter()
                    .zip(diag.iter())
                    .map(|(a, x)| a * x)
                    .collect(),
            },
            Operator::Mixture(terms) => {
                let mut out = StateVector::zeros(d);
                for (b, c) in terms.iter() {
                    for (w, amp) in v.amplitudes.iter().enumerate() {
                        if *amp != Complex64::new(0.0, 0.0) {
                            out.amplitudes[r.add(w as u64, *b) as usize] += c * amp;
                        }
                    }
                }
                out
            }
            Operator::Product(factors) => factors
                .iter()
                .rev()
                .fold(v.clone(), |acc, f| f.apply(basis, &acc)),
            Operator::Sum(terms) => {
                let mut out = StateVector::zeros(d);
                for (c, f) in terms {
                    let fv = f.apply(basis, v);
                    for (o, x) in out.amplitudes.iter_mut().zip(&fv.amplitudes) {
                        *o += c * x;
                    }
                }
                out
            }
        }
    }

    pub fn apply_sparse(&self, basis: &BasisIndexer, col: &Column) -> Column {
        let r = basis.radix();
        match self {
            Operator::Identity => col.clone(),
            Operator::Shift(a) => col.iter().map(|(w, c)| (r.add(*w, *a), *c)).collect(),
            Operator::Clock(k) => col
                .iter()
                .map(|(w, c)| (*w, c * basis.character(*k, *w)))
                .collect(),
            Operator::Diagonal(diag) => col
                .iter()
                .filter(|(w, _)| diag[**w as usize] != 0.0)
                .map(|(w, c)| (*w, c * diag[*w as usize]))
                .collect(),
            Operator::Mixture(terms) => {
                let mut out = Column::new();
                for (b, c) in terms.iter() {
                    for (w, x) in col {
                        *out.entry(r.add(*w, *b)).or_default() += c * x;
                    }
                }
                out
            }
            Operator::Product(factors) => factors
                .iter()
                .rev()
                .fold(col.clone(), |acc, f| f.apply_sparse(basis, &acc)),
            Operator::Sum(terms) => {
                let mut out = Column::new();
                for (c, f) in terms {
                    for (w, x) in f.apply_sparse(basis, col) {
                        *out.entry(w).or_default() += c * x;
                    }
                }
                out
            }
        }
    }

    /// The image of the basis state `|w⟩`.
    pub fn column(&self, basis: &BasisIndexer, w: u64) -> Column {
        let mut col = Column::new();
        col.insert(w, ONE);
        self.apply_sparse(basis, &col)
    }

    pub fn adjoint(&self, basis: &BasisIndexer) -> Operator {
        let r = basis.radix();
        match self {
            Operator::Identity => Operator::Identity,
            Operator::Shift(a) => Operator::Shift(r.neg(*a)),
            Operator::Clock(k) => Operator::Clock(r.neg(*k)),
            Operator::Diagonal(d) => Operator::Diagonal(d.clone()),
            Operator::Mixture(terms) => Operator::Mixture(Arc::new(
                terms.iter().map(|(b, c)| (r.neg(*b), c.conj())).collect(),
            )),
            Operator::Product(f) => {
                Operator::Product(f.iter().rev().map(|x| x.adjoint(basis)).collect())
            }
            Operator::Sum(t) => Operator::Sum(
                t.iter()
                    .map(|(c, x)| (c.conj(), x.adjoint(basis)))
                    .collect(),
            ),
        }
    }

    /// `⟨w|self|w⟩` when the operator moves no basis state off the diagonal
    /// except through a single shift-type factor.
    fn diagonal_entry(&self, basis: &BasisIndexer, w: u64) -> Option<Complex64> {
        match self {
            Operator::Identity => Some(ONE),
            Operator::Shift(a) => Some(if *a == 0 {
                ONE
            } else {
                Complex64::new(0.0, 0.0)
            }),
            Operator::Clock(k) => Some(basis.character(*k, w)),
            Operator::Diagonal(d) => Some(Complex64::new(d[w as usize], 0.0)),
            Operator::Mixture(terms) => Some(
                terms
                    .iter()
                    .find(|(b, _)| *b == 0)
                    .map_or(Complex64::new(0.0, 0.0), |(_, c)| *c),
            ),
            Operator::Product(f) => {
                let movers = f
                    .iter()
                    .filter(|x| {
                        !matches!(
                            x,
                            Operator::Identity | Operator::Clock(_) | Operator::Diagonal(_)
                        )
                    })
                    .count();
                if movers > 1 {
                    return None;
                }
                f.iter()
                    .try_fold(ONE, |acc, x| Some(acc * x.diagonal_entry(basis, w)?))
            }
            Operator::Sum(t) => t.iter().try_fold(Complex64::new(0.0, 0.0), |acc, (c, x)| {
                Some(acc + c * x.diagonal_entry(basis, w)?)
            }),
        }
    }

    /// Exact trace from the operator structure, or a column-by-column sum for
    /// small spaces.
    pub fn trace(&self, basis: &BasisIndexer) -> Result<Complex64> {
        let d = basis.dimension();
        match self {
            Operator::Identity => return Ok(Complex64::new(d as f64, 0.0)),
            Operator::Shift(_) | Operator::Mixture(_) => {
                return Ok(self.diagonal_entry(basis, 0).expect("structured") * d as f64)
            }
            _ => {}
        }
        if self.diagonal_entry(basis, 0).is_some() {
            return Ok((0..d)
                .map(|w| self.diagonal_entry(basis, w).expect("structured"))
                .sum());
        }
        if d > COLUMN_TRACE_LIMIT {
            return Err(Error::too_large(
                "column trace dimension",
                d,
                COLUMN_TRACE_LIMIT,
            ));
        }
        Ok((0..d)
            .map(|w| self.column(basis, w).get(&w).copied().unwrap_or_default())
            .sum())
    }

    pub fn to_dense(&self, basis: &BasisIndexer) -> Result<DMatrix<Complex64>> {
        let d = basis.dimension();
        if d > DENSE_LIMIT {
            return Err(Error::too_large("dense operator dimension", d, DENSE_LIMIT));
        }
        let mut m = DMatrix::zeros(d as usize, d as usize);
        for w in 0..d {
            for (i, c) in self.column(basis, w) {
                m[(i as usize, w as usize)] = c;
            }
        }
        Ok(m)
    }
}

/// Largest entrywise difference between two sparse columns.
pub fn column_distance(a: &Column, b: &Column) -> f64 {
    let mut worst: f64 = 0.0;
    for (k, x) in a {
        worst = worst.max((x - b.get(k).copied().unwrap_or_default()).norm());
    }
    for (k, y) in b {
        if !a.contains_key(k) {
            worst = worst.max(y.norm());
        }
    }
    worst
}

/// Largest entrywise difference of `a` and `b` over the given columns.
pub fn operator_distance<I>(basis: &BasisIndexer, a: &Operator, b: &Operator, columns: I) -> f64
where
    I: IntoIterator<Item = u64>,
{
    columns
        .into_iter()
        .map(|w| column_distance(&a.column(basis, w), &b.column(basis, w)))
        .fold(0.0, f64::max)
}

/// Largest entrywise difference over every column.
pub fn operator_distance_all(basis: &BasisIndexer, a: &Operator, b: &Operator) -> f64 {
    operator_distance(basis, a, b, 0..basis.dimension())
}

/// `P^α v` for a 0-map `α`.
pub fn apply_shift(basis: &BasisIndexer, alpha: &PMap, v: &StateVector) -> Result<StateVector> {
    check_dim(basis, v)?;
    Ok(Operator::Shift(basis.index_of(alpha)?).apply(basis, v))
}

/// `Q_ρ̂ v` for a 0-rep `ρ̂`.
pub fn apply_clock(basis: &BasisIndexer, rho: &PRep, v: &StateVector) -> Result<StateVector> {
    check_dim(basis, v)?;
    Ok(Operator::Clock(basis.rep_index(rho)?).apply(basis, v))
}

fn check_dim(basis: &BasisIndexer, v: &StateVector) -> Result<()> {
    if v.dim() != basis.dimension() {
        return Err(Error::SpaceMismatch(format!(
            "state of dimension {} in a space of dimension {}",
            v.dim(),
            basis.dimension()
        )));
    }
    Ok(())
}
