//! The hom-complex differential `d^p` and its dual `d_p`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::abelian::{GroupHomomorphism, IntMatrix};
use crate::calculus::space::{hom_space, HomSpace};
use crate::chain::GaugeModel;
use crate::error::{Error, Result};

fn sign(p: i64) -> i64 {
    if p.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `(d^p ω)(x) = Σ_y ∂^C[y,x] ω(y) − (−1)^p ∂^G(ω(x))` as a matrix
/// `hom^{p+1} × hom^p`, without the cochain check.
fn raw_differential(
    model: &GaugeModel,
    src: &HomSpace,
    tgt: &HomSpace,
) -> Result<GroupHomomorphism> {
    let p = src.p();
    let mut m = IntMatrix::zeros(tgt.ngens(), src.ngens());
    for t in tgt.sites() {
        let n = t.degree;
        let bc = model.geometry().boundary_matrix(n);
        // ω_{n−1} ∘ ∂^C_n
        for y in 0..model.cells(n - 1) {
            let c = &bc[(y, t.cell)];
            if c.is_zero() {
                continue;
            }
            if let Some(s) = src.site_index(n - 1, y) {
                let s = &src.sites()[s];
                debug_assert_eq!(s.group, t.group);
                for k in 0..t.group.ngens() {
                    m[(t.offset + k, s.offset + k)] += c;
                }
            }
        }
        // −(−1)^p ∂^G_{n−p} ∘ ω_n
        if let Some(s) = src.site_index(n, t.cell) {
            let s = &src.sites()[s];
            let bg = model.gauge().boundary_matrix(n - p);
            let factor = BigInt::from(-sign(p));
            for i in 0..t.group.ngens() {
                for j in 0..s.group.ngens() {
                    if !bg[(i, j)].is_zero() {
                        m[(t.offset + i, s.offset + j)] += &factor * &bg[(i, j)];
                    }
                }
            }
        }
    }
    GroupHomomorphism::new(src.total().clone(), tgt.total().clone(), m)
}

/// `d^p: hom^p → hom^{p+1}`, with `d^{p+1} ∘ d^p = 0` checked.
pub fn differential(model: &GaugeModel, p: i64) -> Result<GroupHomomorphism> {
    let s0 = hom_space(model, p);
    let s1 = hom_space(model, p + 1);
    let s2 = hom_space(model, p + 2);
    let d = raw_differential(model, &s0, &s1)?;
    let next = raw_differential(model, &s1, &s2)?;
    if !next.compose(&d)?.is_zero() {
        return Err(Error::NotAComplex(format!(
            "d^{} ∘ d^{p} is nonzero",
            p + 1
        )));
    }
    Ok(d)
}

/// `d_q: hom_q → hom_{q−1}`, the Pontryagin dual of `d^{q−1}`.
pub fn dual_differential(model: &GaugeModel, q: i64) -> Result<GroupHomomorphism> {
    differential(model, q - 1)?.dual()
}

/// `d_{p+1}` from its factored form: for a source site `y ∈ K_m`,
/// `(d_{p+1} ρ̂)(y) = Σ_{x ∈ K_{m+1}} ∂^C[y,x] ρ̂(x) − (−1)^p ∂̂^G(ρ̂(y))`.
///
/// Independent of [`dual_differential`]; the two are compared in tests.
pub fn factored_dual_differential(model: &GaugeModel, p: i64) -> Result<GroupHomomorphism> {
    let src = hom_space(model, p + 1);
    let tgt = hom_space(model, p);
    if !src.is_finite() || !tgt.is_finite() {
        return Err(Error::InfiniteGroup("factored dual differential".into()));
    }
    let mut m = IntMatrix::zeros(tgt.ngens(), src.ngens());
    for t in tgt.sites() {
        let mdeg = t.degree;
        let bc = model.geometry().boundary_matrix(mdeg + 1);
        for x in 0..model.cells(mdeg + 1) {
            let c = &bc[(t.cell, x)];
            if c.is_zero() {
                continue;
            }
            if let Some(s) = src.site_index(mdeg + 1, x) {
                let s = &src.sites()[s];
                for k in 0..t.group.ngens() {
                    m[(t.offset + k, s.offset + k)] += c;
                }
            }
        }
        if let Some(s) = src.site_index(mdeg, t.cell) {
            let s = &src.sites()[s];
            let bg = model.gauge().boundary(mdeg - p).dual()?;
            let factor = BigInt::from(-sign(p));
            let bm = bg.matrix();
            for i in 0..t.group.ngens() {
                for j in 0..s.group.ngens() {
                    if !bm[(i, j)].is_zero() {
                        m[(t.offset + i, s.offset + j)] += &factor * &bm[(i, j)];
                    }
                }
            }
        }
    }
    GroupHomomorphism::new(src.total().clone(), tgt.total().clone(), m)
}
