//! The periodic free resolution of `Z` over `Z[Z_m]` and its coinvariants.
//!
//! `⋯ →N ZG →(t−1) ZG →N ZG →(t−1) ZG → Z`, where `t` generates `G = Z_m`
//! and `N = 1 + t + ⋯ + t^{m−1}`. Tensoring with the trivial module `Z`
//! through the augmentation sends a ring element to its coefficient sum.

use crate::abelian::{CyclicSum, IntMatrix};
use crate::chain::graded::GradedChain;
use crate::error::{Error, Result};

/// Ring element `Σ r_k t^k` of `Z[Z_m]` given by its coefficients.
fn ring_element(m: usize, degree: usize) -> Vec<i64> {
    if degree % 2 == 1 {
        // t − 1
        let mut r = vec![0; m];
        r[0] = -1;
        r[1 % m] += 1;
        r
    } else {
        vec![1; m]
    }
}

/// Matrix of multiplication by `r` on the basis `1, t, …, t^{m−1}`.
fn circulant(r: &[i64]) -> IntMatrix {
    let m = r.len();
    let mut a = IntMatrix::zeros(m, m);
    for j in 0..m {
        for (k, &c) in r.iter().enumerate() {
            a[((j + k) % m, j)] += c;
        }
    }
    a
}

fn check_order(m: i64) -> Result<usize> {
    if m < 2 {
        return Err(Error::BadOrder(m));
    }
    Ok(m as usize)
}

/// The untensored resolution `F_n = Z[Z_m]` (as `Z^m`) in degrees `0..=length`.
pub fn cyclic_group_ring_resolution(m: i64, length: usize) -> Result<GradedChain> {
    let m = check_order(m)?;
    let groups = vec![CyclicSum::free(m); length + 1];
    let maps = (1..=length)
        .map(|n| (n as i64, circulant(&ring_element(m, n))))
        .collect();
    GradedChain::from_matrices(0, groups, maps)
}

/// `Z ⊗_{ZG} F`: the chain `Z ←0− Z ←m− Z ←0− Z ←m− ⋯` in degrees `0..=length`.
///
/// Its homology is the group homology of `Z_m`, faithful in degrees below
/// `length`; the top degree sees the truncation.
pub fn cyclic_resolution_chain(m: i64, length: usize) -> Result<GradedChain> {
    let mu = check_order(m)?;
    if length < 1 {
        return Err(Error::ShapeMismatch(
            "cyclic resolution needs length >= 1".into(),
        ));
    }
    let groups = vec![CyclicSum::free(1); length + 1];
    let maps = (1..=length)
        .map(|n| {
            let augmented: i64 = ring_element(mu, n).iter().sum();
            (n as i64, IntMatrix::from_rows(&[vec![augmented]]))
        })
        .collect();
    let labels = (0..=length).map(|n| vec![format!("e{n}")]).collect();
    GradedChain::from_matrices(0, groups, maps)?.with_labels(labels)
}
