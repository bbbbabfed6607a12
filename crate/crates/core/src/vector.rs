use alloc::vec::Vec;
use core::fmt;
use core::ops::{Deref, Index};

use crate::{Error, Result};

/// Exact integer vector; slot `i - 1` holds the value at point `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntVector(Vec<i64>);

impl IntVector {
    pub fn new(entries: Vec<i64>) -> Self {
        IntVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        IntVector(alloc::vec![0; n])
    }

    pub fn constant(n: usize, value: i64) -> Self {
        IntVector(alloc::vec![value; n])
    }

    /// Value at the 1-based point `point`.
    pub fn at(&self, point: usize) -> i64 {
        self.0[point - 1]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    pub fn checked_add(&self, other: &IntVector) -> Result<IntVector> {
        self.zip_with(other, i64::checked_add)
    }

    pub fn checked_sub(&self, other: &IntVector) -> Result<IntVector> {
        self.zip_with(other, i64::checked_sub)
    }

    pub fn checked_neg(&self) -> Result<IntVector> {
        self.0
            .iter()
            .map(|x| x.checked_neg().ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(IntVector)
    }

    pub fn checked_scale(&self, factor: i64) -> Result<IntVector> {
        self.0
            .iter()
            .map(|x| x.checked_mul(factor).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(IntVector)
    }

    fn zip_with(
        &self,
        other: &IntVector,
        op: impl Fn(i64, i64) -> Option<i64>,
    ) -> Result<IntVector> {
        Error::check_len(self.len(), other.len())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| op(a, b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(IntVector)
    }

    /// True iff the entries are pairwise distinct modulo `modulus`.
    pub fn residues_distinct(&self, modulus: usize) -> bool {
        distinct_residues(self.0.iter().copied(), modulus)
    }
}

/// True iff the values are pairwise distinct modulo `modulus`; at most
/// `modulus` values can pass.
pub(crate) fn distinct_residues(values: impl Iterator<Item = i64>, modulus: usize) -> bool {
    let mut seen = alloc::vec![false; modulus];
    for v in values {
        let r = mod_floor(v, modulus as i64) as usize;
        if seen[r] {
            return false;
        }
        seen[r] = true;
    }
    true
}

/// Remainder in `[0, m)`.
pub(crate) fn mod_floor(value: i64, m: i64) -> i64 {
    value.rem_euclid(m)
}

/// Quotient rounded toward negative infinity.
pub(crate) fn div_floor(value: i64, m: i64) -> i64 {
    num_integer::Integer::div_floor(&value, &m)
}

impl Deref for IntVector {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl Index<usize> for IntVector {
    type Output = i64;

    fn index(&self, slot: usize) -> &i64 {
        &self.0[slot]
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> Self {
        IntVector(v)
    }
}

impl From<&[i64]> for IntVector {
    fn from(v: &[i64]) -> Self {
        IntVector(v.to_vec())
    }
}

impl<const N: usize> From<[i64; N]> for IntVector {
    fn from(v: [i64; N]) -> Self {
        IntVector(v.to_vec())
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}
