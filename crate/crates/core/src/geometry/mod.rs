//! The residue-distinct vectors as vertices of a prism tessellation.
//!
//! The base tile is the prism over the permutohedron `conv{perms of (1..n)}`
//! along `a = (1, .., 1)`, of height one step of `a`. Its translates by the
//! lattice spanned by `e_1, .., e_{n-1}, a`, with
//! `e_i = (1, .., -(n-1), .., 1)` (`-(n-1)` at position `i`), tile `R^n`, and
//! their vertices are exactly the integer points with pairwise distinct
//! residues modulo `n`.
//!
//! Writing `C = [e_1 | .. | e_{n-1} | a]`, a residue-distinct point `p`
//! decomposes as `p = C t + u` with `u` the permutation of `(1..n)` given by
//! the residues (`n` standing for `0`) and `t = C^{-1} (p - u)` integral.
//!
//! Every predicate here is exact.

mod halfspace;
mod patch;
mod tiling;

use alloc::vec::Vec;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, One, Zero};

use crate::vector::mod_floor;
use crate::{Error, IntVector, Permutation, Result};

pub use halfspace::{tile_halfspaces, Containment, Halfspace, HalfspaceSystem, TileMembership};
pub use patch::{
    generate_patch, polygon_faces, product_tile_vertices, PrismTile, ProductTile, MAX_PATCH_N,
    MAX_PATCH_RADIUS,
};
pub use tiling::{
    check_tiling, verify_vertex_set, SampleOutcome, SamplePoint, TilingChecker, TilingConfig,
    TilingCounts, TilingReport, VertexSetReport, DEFAULT_DENOMINATOR,
};

pub type Rational = Ratio<i64>;

/// Largest `n` for vertex and matrix enumeration.
pub const MAX_GEOMETRY_N: usize = 8;

/// All permutations of `(1, .., n)` in lexicographic order.
pub fn permutohedron_vertices(n: usize) -> Result<Vec<IntVector>> {
    Error::check_size(n, 1, MAX_GEOMETRY_N)?;
    Ok(permutations(n)
        .into_iter()
        .map(|p| p.images().iter().map(|&x| x as i64).collect::<Vec<_>>().into())
        .collect())
}

pub(crate) fn permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation::from_images(current.clone()).expect("permutation"));
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).expect("successor");
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}

/// `e_1, .., e_{n-1}` and `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBasis {
    pub e: Vec<IntVector>,
    pub a: IntVector,
}

impl LatticeBasis {
    /// `e_n = (1, .., 1, -(n-1))`, the dependent member of the redundant family.
    pub fn e_n(&self) -> IntVector {
        basis_vector(self.a.len(), self.a.len())
    }
}

fn basis_vector(n: usize, i: usize) -> IntVector {
    (1..=n)
        .map(|j| if j == i { -(n as i64 - 1) } else { 1 })
        .collect::<Vec<_>>()
        .into()
}

pub fn lattice_basis(n: usize) -> Result<LatticeBasis> {
    Error::check_size(n, 2, usize::MAX)?;
    Ok(LatticeBasis {
        e: (1..n).map(|i| basis_vector(n, i)).collect(),
        a: IntVector::constant(n, 1),
    })
}

/// `C` (columns `e_1, .., e_{n-1}, a`) and its closed-form inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateMatrices {
    pub c: Vec<Vec<i64>>,
    pub c_inv: Vec<Vec<Rational>>,
}

pub fn coordinate_matrices(n: usize) -> Result<CoordinateMatrices> {
    Error::check_size(n, 2, MAX_GEOMETRY_N)?;
    let size = n as i64;
    let c = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == n - 1 || i != j { 1 } else { -(size - 1) })
                .collect()
        })
        .collect();
    let inv_n = Rational::new(1, size);
    let c_inv = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == n - 1 || j == n - 1 {
                        inv_n
                    } else if i == j {
                        -inv_n
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    Ok(CoordinateMatrices { c, c_inv })
}

impl CoordinateMatrices {
    pub fn n(&self) -> usize {
        self.c.len()
    }

    /// Exact `C · C^{-1}`.
    pub fn product(&self) -> Result<Vec<Vec<Rational>>> {
        let n = self.n();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).try_fold(Rational::zero(), |acc, k| {
                            Rational::from_integer(self.c[i][k])
                                .checked_mul(&self.c_inv[k][j])
                                .and_then(|x| acc.checked_add(&x))
                                .ok_or(Error::Overflow)
                        })
                    })
                    .collect()
            })
            .collect()
    }

    pub fn product_is_identity(&self) -> Result<bool> {
        Ok(self.product()?.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
        }))
    }

    /// `C t`.
    pub fn apply(&self, t: &[i64]) -> Result<IntVector> {
        Error::check_len(self.n(), t.len())?;
        self.c
            .iter()
            .map(|row| {
                row.iter().zip(t).try_fold(0i64, |acc, (&c, &x)| {
                    c.checked_mul(x).and_then(|y| acc.checked_add(y)).ok_or(Error::Overflow)
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(IntVector::new)
    }

    /// `C^{-1} w` in exact rationals.
    pub fn apply_inverse(&self, w: &[i64]) -> Result<Vec<Rational>> {
        Error::check_len(self.n(), w.len())?;
        self.c_inv
            .iter()
            .map(|row| {
                row.iter().zip(w).try_fold(Rational::zero(), |acc, (c, &x)| {
                    c.checked_mul(&Rational::from_integer(x))
                        .and_then(|y| acc.checked_add(&y))
                        .ok_or(Error::Overflow)
                })
            })
            .collect()
    }
}

/// `p = C t + u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexDecomposition {
    pub t: IntVector,
    pub u: Permutation,
}

/// Splits a residue-distinct point into tile translation and base vertex;
/// `None` when residues repeat.
pub fn decompose_point(p: &IntVector) -> Result<Option<VertexDecomposition>> {
    let n = p.len();
    Error::check_size(n, 2, MAX_GEOMETRY_N)?;
    if !p.residues_distinct(n) {
        return Ok(None);
    }
    let size = n as i64;
    let u: Vec<usize> = p
        .iter()
        .map(|&x| match mod_floor(x, size) {
            0 => n,
            r => r as usize,
        })
        .collect();
    let w = p
        .iter()
        .zip(&u)
        .map(|(&x, &ui)| x.checked_sub(ui as i64).ok_or(Error::Overflow))
        .collect::<Result<Vec<_>>>()?;
    let t = coordinate_matrices(n)?
        .apply_inverse(&w)?
        .into_iter()
        .map(|x| {
            if x.is_integer() {
                Ok(x.to_integer())
            } else {
                Err(Error::InvalidArgument(alloc::format!("non-integral coordinate {x}")))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Some(VertexDecomposition {
        t: t.into(),
        u: Permutation::from_images(u)?,
    }))
}

/// Membership in the vertex set of the tessellation.
pub fn is_tile_vertex(p: &IntVector) -> bool {
    !p.is_empty() && p.residues_distinct(p.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn v<const N: usize>(x: [i64; N]) -> IntVector {
        IntVector::from(x)
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn permutohedron_examples() {
        assert_eq!(permutohedron_vertices(2).unwrap(), vec![v([1, 2]), v([2, 1])]);
        let three = permutohedron_vertices(3).unwrap();
        assert_eq!(three.len(), 6);
        assert!(three.contains(&v([1, 2, 3])) && three.contains(&v([3, 2, 1])));
        let four = permutohedron_vertices(4).unwrap();
        assert_eq!(four.len(), 24);
        assert!(four.iter().all(|p| p.iter().sum::<i64>() == 10));
        assert!(permutohedron_vertices(9).is_err());
    }

    #[test]
    fn basis_examples() {
        let b = lattice_basis(3).unwrap();
        assert_eq!(b.e, vec![v([-2, 1, 1]), v([1, -2, 1])]);
        assert_eq!(b.a, v([1, 1, 1]));
        let b = lattice_basis(2).unwrap();
        assert_eq!(b.e, vec![v([-1, 1])]);
        assert_eq!(b.a, v([1, 1]));
        for n in 2..=8 {
            let b = lattice_basis(n).unwrap();
            let sum = b.e.iter().fold(IntVector::zeros(n), |acc, e| acc.checked_add(e).unwrap());
            assert_eq!(sum.checked_neg().unwrap(), b.e_n());
            assert!(b.e.iter().all(|e| e.iter().sum::<i64>() == 0));
            assert_eq!(b.a.iter().sum::<i64>(), n as i64);
        }
    }

    #[test]
    fn matrix_examples() {
        let m = coordinate_matrices(3).unwrap();
        assert_eq!(m.c, vec![vec![-2, 1, 1], vec![1, -2, 1], vec![1, 1, 1]]);
        assert_eq!(
            m.c_inv,
            vec![
                vec![r(-1, 3), r(0, 1), r(1, 3)],
                vec![r(0, 1), r(-1, 3), r(1, 3)],
                vec![r(1, 3), r(1, 3), r(1, 3)],
            ]
        );
        for n in 2..=8 {
            assert!(coordinate_matrices(n).unwrap().product_is_identity().unwrap());
        }
    }

    #[test]
    fn columns_of_c_are_the_basis() {
        for n in 2..=6 {
            let m = coordinate_matrices(n).unwrap();
            let b = lattice_basis(n).unwrap();
            for (j, e) in b.e.iter().chain(core::iter::once(&b.a)).enumerate() {
                let mut t = vec![0; n];
                t[j] = 1;
                assert_eq!(&m.apply(&t).unwrap(), e);
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let d = decompose_point(&v([3, 5, 4])).unwrap().unwrap();
        assert_eq!(d.t, v([1, 0, 2]));
        assert_eq!(d.u.images(), &[3, 2, 1]);
        let m = coordinate_matrices(3).unwrap();
        let back = m.apply(&d.t).unwrap();
        assert_eq!(back.checked_add(&v([3, 2, 1])).unwrap(), v([3, 5, 4]));

        for p in permutohedron_vertices(4).unwrap() {
            let d = decompose_point(&p).unwrap().unwrap();
            assert_eq!(d.t, IntVector::zeros(4));
            assert_eq!(d.u.images().iter().map(|&x| x as i64).collect::<Vec<_>>(), p.as_slice());
        }
        assert_eq!(decompose_point(&v([0, 3, 1])).unwrap(), None);
    }

    #[test]
    fn vertex_membership_examples() {
        assert!(is_tile_vertex(&v([1, 2, 3])));
        assert!(is_tile_vertex(&v([0, 1, 2])));
        assert!(decompose_point(&v([0, 1, 2])).unwrap().is_some());
        assert!(!is_tile_vertex(&v([2, 2, 5])));
    }

    #[test]
    fn lattice_coordinates_share_a_residue() {
        // every coordinate of C t is congruent to sum(t) mod n
        for n in 2..=6usize {
            let m = coordinate_matrices(n).unwrap();
            for seed in 0..50i64 {
                let t: Vec<i64> = (0..n as i64).map(|j| (seed * 7 + j * 13) % 11 - 5).collect();
                let sum: i64 = t.iter().sum();
                let ct = m.apply(&t).unwrap();
                assert!(ct.iter().all(|&x| (x - sum).rem_euclid(n as i64) == 0));
            }
        }
    }
}
