use alloc::vec::Vec;

use num_integer::Integer;

use super::Rational;
use crate::{Error, Result};

/// Largest `n` for the explicit inequality system (`2^n - 2` side facets).
pub const MAX_HALFSPACE_N: usize = 6;

/// `coeffs · x >= bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Halfspace {
    pub coeffs: Vec<i64>,
    pub bound: i64,
}

impl Halfspace {
    /// Sign of `coeffs · q - bound · d` for the point `q / d`.
    fn slack(&self, q: &[i64], d: i64) -> core::cmp::Ordering {
        let lhs: i128 = self
            .coeffs
            .iter()
            .zip(q)
            .map(|(&c, &x)| c as i128 * x as i128)
            .sum();
        lhs.cmp(&(self.bound as i128 * d as i128))
    }
}

/// Closed containment in one prism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    Outside,
    Boundary,
    Interior,
}

/// Containment for tiling accounting: the slab along `a` is half-open (lower
/// cap in, upper cap out), side facets are closed and reported separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TileMembership {
    Outside,
    /// Inside, but tight on a side facet.
    FacetBoundary,
    Inside,
}

/// Inequalities for the base prism over the permutohedron of `(1..n)`.
///
/// A point `x` is split as `x = y + λ a` with `y` on the hyperplane
/// `sum = n(n+1)/2` and `λ = (sum(x) - n(n+1)/2) / n`. The prism is
/// `0 <= λ <= 1` together with the permutohedron bounds on `y`:
/// `sum_{i in S} y_i >= |S|(|S|+1)/2` for every proper nonempty `S`. Scaled by
/// `n`, the side facet for `S` reads
/// `n sum_S x - |S| sum(x) >= n |S|(|S|+1)/2 - |S| n(n+1)/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfspaceSystem {
    pub n: usize,
    /// Side facets indexed by subset bitmask order (masks `1 .. 2^n - 1`).
    pub sides: Vec<Halfspace>,
    /// `sum(x) >= n(n+1)/2`.
    pub lower: Halfspace,
    /// `-sum(x) >= -(n(n+1)/2 + n)`.
    pub upper: Halfspace,
}

pub fn tile_halfspaces(n: usize) -> Result<HalfspaceSystem> {
    Error::check_size(n, 2, MAX_HALFSPACE_N)?;
    let size = n as i64;
    let base = size * (size + 1) / 2;
    let sides = (1u32..(1 << n) - 1)
        .map(|mask| {
            let k = mask.count_ones() as i64;
            Halfspace {
                coeffs: (0..n)
                    .map(|i| if mask & (1 << i) != 0 { size - k } else { -k })
                    .collect(),
                bound: size * k * (k + 1) / 2 - k * base,
            }
        })
        .collect();
    Ok(HalfspaceSystem {
        n,
        sides,
        lower: Halfspace {
            coeffs: alloc::vec![1; n],
            bound: base,
        },
        upper: Halfspace {
            coeffs: alloc::vec![-1; n],
            bound: -(base + size),
        },
    })
}

impl HalfspaceSystem {
    /// Closed classification of a rational point against the base prism.
    pub fn classify(&self, point: &[Rational]) -> Result<Containment> {
        let (q, d) = self.scale(point)?;
        Ok(self.classify_scaled(&q, d))
    }

    /// Closed classification of `q / d`.
    pub fn classify_scaled(&self, q: &[i64], d: i64) -> Containment {
        use core::cmp::Ordering::*;
        let mut tight = false;
        for h in self.sides.iter().chain([&self.lower, &self.upper]) {
            match h.slack(q, d) {
                Less => return Containment::Outside,
                Equal => tight = true,
                Greater => {}
            }
        }
        if tight {
            Containment::Boundary
        } else {
            Containment::Interior
        }
    }

    /// Half-open classification of `q / d` used for counting tile multiplicity.
    pub fn membership_scaled(&self, q: &[i64], d: i64) -> TileMembership {
        use core::cmp::Ordering::*;
        if self.lower.slack(q, d) == Less || self.upper.slack(q, d) != Greater {
            return TileMembership::Outside;
        }
        let mut tight = false;
        for h in &self.sides {
            match h.slack(q, d) {
                Less => return TileMembership::Outside,
                Equal => tight = true,
                Greater => {}
            }
        }
        if tight {
            TileMembership::FacetBoundary
        } else {
            TileMembership::Inside
        }
    }

    /// Indices into `sides` of the side facets `q / d` is tight on, followed by
    /// `sides.len()` for the lower cap and `sides.len() + 1` for the upper cap.
    pub fn tight_facets(&self, q: &[i64], d: i64) -> Vec<usize> {
        self.sides
            .iter()
            .chain([&self.lower, &self.upper])
            .enumerate()
            .filter(|(_, h)| h.slack(q, d) == core::cmp::Ordering::Equal)
            .map(|(i, _)| i)
            .collect()
    }

    fn scale(&self, point: &[Rational]) -> Result<(Vec<i64>, i64)> {
        Error::check_len(self.n, point.len())?;
        let d = point.iter().try_fold(1i64, |acc, x| {
            let l = acc.lcm(x.denom());
            (l > 0).then_some(l).ok_or(Error::Overflow)
        })?;
        let q = point
            .iter()
            .map(|x| x.numer().checked_mul(d / x.denom()).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok((q, d))
    }
}
