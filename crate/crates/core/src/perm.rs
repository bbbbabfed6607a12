use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A bijection of `{1..n}` in one-line notation: slot `i - 1` holds the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Validates one-line notation.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &image in &images {
            if image == 0 || image > n {
                return Err(Error::InvalidPermutation {
                    n,
                    reason: format!("image {image} out of range"),
                });
            }
            if core::mem::replace(&mut seen[image - 1], true) {
                return Err(Error::InvalidPermutation {
                    n,
                    reason: format!("image {image} repeated"),
                });
            }
        }
        Ok(Permutation { images })
    }

    /// The cycle `v -> v - 1`, `1 -> n`; one-line `(n, 1, 2, .., n-1)`.
    pub fn cyclic_shift(n: usize) -> Self {
        Permutation {
            images: (1..=n).map(|v| if v == 1 { n } else { v - 1 }).collect(),
        }
    }

    /// Transposition of `i` and `j` on `{1..n}`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, j - 1);
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the 1-based point `point`.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| p == i + 1)
    }

    /// `(self ∘ inner)(i) = self(inner(i))`.
    pub fn compose(&self, inner: &Permutation) -> Result<Permutation> {
        Error::check_len(self.len(), inner.len())?;
        Ok(Permutation {
            images: inner.images.iter().map(|&i| self.apply(i)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = alloc::vec![0; self.len()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p - 1] = i + 1;
        }
        Permutation { images }
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Permutation {
        let cycles = CycleStructure::of(self);
        let mut images = alloc::vec![0; self.len()];
        for cycle in cycles.cycles() {
            let m = cycle.len() as i64;
            // self(w_j) = w_{j-1}, so self^k(w_j) = w_{j-k}
            for (j, &w) in cycle.iter().enumerate() {
                let target = (j as i64 - k).rem_euclid(m) as usize;
                images[w - 1] = cycle[target];
            }
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Disjoint cycles of a permutation `tau`, each written `(w_1, .., w_m)` with
/// `tau(w_j) = w_{j-1}` (indices mod `m`), so that every cycle behaves like the
/// canonical shift `v -> v - 1`. Cycles are ordered by their smallest point,
/// and each starts at that point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleStructure {
    cycles: Vec<Vec<usize>>,
    // point -> (cycle index, 0-based position j - 1)
    position: Vec<(usize, usize)>,
}

impl CycleStructure {
    pub fn of(tau: &Permutation) -> Self {
        let n = tau.len();
        let inverse = tau.inverse();
        let mut position = alloc::vec![(usize::MAX, 0); n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if position[start - 1].0 != usize::MAX {
                continue;
            }
            let index = cycles.len();
            let mut cycle = Vec::new();
            let mut w = start;
            loop {
                position[w - 1] = (index, cycle.len());
                cycle.push(w);
                w = inverse.apply(w);
                if w == start {
                    break;
                }
            }
            cycles.push(cycle);
        }
        CycleStructure { cycles, position }
    }

    /// Builds the structure from explicit cycles; they must partition `{1..n}`.
    pub fn from_cycles(n: usize, cycles: Vec<Vec<usize>>) -> Result<Self> {
        let mut position = alloc::vec![(usize::MAX, 0); n];
        for (index, cycle) in cycles.iter().enumerate() {
            for (j, &w) in cycle.iter().enumerate() {
                if w == 0 || w > n {
                    return Err(Error::PointOutOfRange { point: w, n });
                }
                if position[w - 1].0 != usize::MAX {
                    return Err(Error::InvalidPermutation {
                        n,
                        reason: format!("point {w} appears in two cycles"),
                    });
                }
                position[w - 1] = (index, j);
            }
        }
        if let Some(missing) = position.iter().position(|p| p.0 == usize::MAX) {
            return Err(Error::InvalidPermutation {
                n,
                reason: format!("point {} is in no cycle", missing + 1),
            });
        }
        Ok(CycleStructure { cycles, position })
    }

    pub fn n(&self) -> usize {
        self.position.len()
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    /// The permutation these cycles describe.
    pub fn permutation(&self) -> Permutation {
        let mut images = alloc::vec![0; self.n()];
        for cycle in &self.cycles {
            let m = cycle.len();
            for j in 0..m {
                images[cycle[j] - 1] = cycle[(j + m - 1) % m];
            }
        }
        Permutation { images }
    }

    /// `tau^g(point)`.
    pub fn act(&self, point: usize, g: i64) -> Result<usize> {
        if point == 0 || point > self.n() {
            return Err(Error::PointOutOfRange {
                point,
                n: self.n(),
            });
        }
        let (index, j) = self.position[point - 1];
        let cycle = &self.cycles[index];
        let m = cycle.len() as i64;
        let target = (j as i64).checked_sub(g).ok_or(Error::Overflow)?.rem_euclid(m);
        Ok(cycle[target as usize])
    }
}
