//! Oriented simplicial complexes and their simplicial chain complexes.

use std::collections::{HashMap, HashSet};

use crate::abelian::{CyclicSum, IntMatrix};
use crate::chain::graded::GradedChain;
use crate::error::{Error, Result};

/// Simplices are strictly increasing tuples of vertex indices; `simplices[n]`
/// holds the `n`-simplices in generator order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    simplices: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    /// Validates orientation, vertex range, duplicates and closure.
    pub fn new(vertices: Vec<String>, simplices: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let nv = vertices.len();
        for (n, level) in simplices.iter().enumerate() {
            let mut seen = HashSet::new();
            for s in level {
                if s.len() != n + 1 {
                    return Err(Error::BadOrientation(format!(
                        "{s:?} listed as a {n}-simplex has {} vertices",
                        s.len()
                    )));
                }
                if let Some(&v) = s.iter().find(|&&v| v >= nv) {
                    return Err(Error::NotClosed(format!(
                        "simplex {s:?} uses vertex {v}, but only {nv} vertices exist"
                    )));
                }
                if s.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::BadOrientation(format!(
                        "simplex {s:?} is not strictly increasing"
                    )));
                }
                if !seen.insert(s.clone()) {
                    return Err(Error::NotAComplex(format!("simplex {s:?} listed twice")));
                }
            }
        }
        let sc = SimplicialComplex {
            vertices,
            simplices,
        };
        sc.check_closure()?;
        Ok(sc)
    }

    /// Build from top-dimensional (or any) simplices by adding every face.
    pub fn from_facets(vertices: Vec<String>, facets: &[Vec<usize>]) -> Result<Self> {
        let dim = facets.iter().map(|f| f.len()).max().unwrap_or(1).max(1) - 1;
        let mut levels: Vec<Vec<Vec<usize>>> = vec![vec![]; dim + 1];
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        levels[0] = (0..vertices.len()).map(|v| vec![v]).collect();
        seen.extend(levels[0].iter().cloned());
        for f in facets {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            for face in all_faces(&f) {
                if seen.insert(face.clone()) {
                    levels[face.len() - 1].push(face);
                }
            }
        }
        for level in &mut levels {
            level.sort();
        }
        Self::new(vertices, levels)
    }

    fn check_closure(&self) -> Result<()> {
        for n in 1..self.simplices.len() {
            let below: HashSet<&Vec<usize>> = self.simplices[n - 1].iter().collect();
            for s in &self.simplices[n] {
                for i in 0..s.len() {
                    let face = delete(s, i);
                    if !below.contains(&face) {
                        return Err(Error::NotClosed(format!(
                            "face {face:?} of {s:?} is missing"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.simplices.len().saturating_sub(1)
    }

    pub fn simplices(&self, n: usize) -> &[Vec<usize>] {
        self.simplices.get(n).map_or(&[], |v| v)
    }

    /// Same complex with vertex `v` renamed to `perm[v]`, tuples re-sorted.
    /// Orientation changes are absorbed by the increasing-vertex convention.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let mut vertices = vec![String::new(); self.vertices.len()];
        for (v, &p) in perm.iter().enumerate() {
            vertices[p] = self.vertices[v].clone();
        }
        let simplices = self
            .simplices
            .iter()
            .map(|level| {
                let mut out: Vec<Vec<usize>> = level
                    .iter()
                    .map(|s| {
                        let mut t: Vec<usize> = s.iter().map(|&v| perm[v]).collect();
                        t.sort_unstable();
                        t
                    })
                    .collect();
                out.sort();
                out
            })
            .collect();
        Self::new(vertices, simplices)
    }

    fn label(&self, s: &[usize]) -> String {
        let names: Vec<&str> = s.iter().map(|&v| self.vertices[v].as_str()).collect();
        format!("[{}]", names.join(","))
    }
}

fn delete(s: &[usize], i: usize) -> Vec<usize> {
    s.iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, &v)| v)
        .collect()
}

fn all_faces(s: &[usize]) -> Vec<Vec<usize>> {
    let k = s.len();
    (1u64..(1 << k))
        .map(|mask| {
            (0..k)
                .filter(|j| mask & (1 << j) != 0)
                .map(|j| s[j])
                .collect()
        })
        .collect()
}

/// Simplicial chains `C_n = Z^{#n-simplices}` with `∂ = Σ_i (−1)^i d_i`.
pub fn from_simplicial(sc: &SimplicialComplex) -> Result<GradedChain> {
    let levels = sc.simplices.len().max(1);
    let groups: Vec<CyclicSum> = (0..levels)
        .map(|n| CyclicSum::free(sc.simplices(n).len()))
        .collect();
    let mut maps = Vec::new();
    for n in 1..levels {
        let index: HashMap<&Vec<usize>, usize> = sc.simplices[n - 1]
            .iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let mut m = IntMatrix::zeros(sc.simplices[n - 1].len(), sc.simplices[n].len());
        for (j, s) in sc.simplices[n].iter().enumerate() {
            for i in 0..s.len() {
                let row = index[&delete(s, i)];
                m[(row, j)] += if i % 2 == 0 { 1 } else { -1 };
            }
        }
        maps.push((n as i64, m));
    }
    let labels = (0..levels)
        .map(|n| sc.simplices(n).iter().map(|s| sc.label(s)).collect())
        .collect();
    GradedChain::from_matrices(0, groups, maps)?.with_labels(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::smith_normal_form;
    use num_bigint::BigInt;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets(names(3), &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    fn octahedron() -> SimplicialComplex {
        // boundary of the octahedron: vertices ±x = 0,1, ±y = 2,3, ±z = 4,5
        let mut faces = Vec::new();
        for a in [0, 1] {
            for b in [2, 3] {
                for c in [4, 5] {
                    faces.push(vec![a, b, c]);
                }
            }
        }
        SimplicialComplex::from_facets(names(6), &faces).unwrap()
    }

    fn tetra_boundary() -> SimplicialComplex {
        SimplicialComplex::from_facets(
            names(4),
            &[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        )
        .unwrap()
    }

    #[test]
    fn single_vertex_and_edge() {
        let pt = SimplicialComplex::new(names(1), vec![vec![vec![0]]]).unwrap();
        let c = from_simplicial(&pt).unwrap();
        assert_eq!(c.homology(0).to_string(), "Z");
        assert!(c.boundary(0).is_zero());
        let edge = SimplicialComplex::from_facets(names(2), &[vec![0, 1]]).unwrap();
        let c = from_simplicial(&edge).unwrap();
        assert_eq!(
            c.boundary_matrix(1),
            IntMatrix::from_rows(&[vec![-1], vec![1]])
        );
    }

    #[test]
    fn hollow_triangle_is_a_circle() {
        let c = from_simplicial(&hollow_triangle()).unwrap();
        let d1 = c.boundary_matrix(1);
        assert_eq!((d1.rows(), d1.cols()), (3, 3));
        for j in 0..3 {
            let s: BigInt = d1.column(j).iter().sum();
            assert_eq!(s, BigInt::from(0));
        }
        assert_eq!(smith_normal_form(&d1).rank(), 2);
        assert_eq!(c.homology(1).to_string(), "Z");
        assert_eq!(c.homology(0).to_string(), "Z");
    }

    #[test]
    fn rejects_bad_input() {
        let open = SimplicialComplex::new(
            names(3),
            vec![
                vec![vec![0], vec![1], vec![2]],
                vec![vec![0, 1]],
                vec![vec![0, 1, 2]],
            ],
        );
        assert!(matches!(open, Err(Error::NotClosed(_))));
        let flipped =
            SimplicialComplex::new(names(2), vec![vec![vec![0], vec![1]], vec![vec![1, 0]]]);
        assert!(matches!(flipped, Err(Error::BadOrientation(_))));
    }

    #[test]
    fn two_spheres() {
        for sc in [tetra_boundary(), octahedron()] {
            let c = from_simplicial(&sc).unwrap();
            assert_eq!(c.homology(0).to_string(), "Z");
            assert!(c.homology(1).is_trivial());
            assert_eq!(c.homology(2).to_string(), "Z");
            let betti: i64 = (0..=2)
                .map(|n| {
                    let r = c.homology(n).rank() as i64;
                    if n % 2 == 0 {
                        r
                    } else {
                        -r
                    }
                })
                .sum();
            assert_eq!(c.euler_characteristic(), betti);
            assert_eq!(betti, 2);
        }
    }

    #[test]
    fn relabeling_preserves_homology() {
        let sc = octahedron();
        let perms: [[usize; 6]; 3] = [[5, 4, 3, 2, 1, 0], [1, 0, 2, 3, 5, 4], [2, 4, 0, 5, 1, 3]];
        let base = from_simplicial(&sc).unwrap();
        for p in perms {
            let c = from_simplicial(&sc.relabel(&p).unwrap()).unwrap();
            for n in 0..=2 {
                assert_eq!(c.homology(n), base.homology(n));
            }
        }
    }
}
