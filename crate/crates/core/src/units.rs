//! Units of the twisted product for the canonical cyclic action.
//!
//! Two sets are in play and they are related by translation by the shift vector
//! `s = (0, n-1, n-2, .., 1)`:
//!
//! * the unit set: `x` with `(i - x_i) mod n` pairwise distinct;
//! * the residue-distinct set: `x` with `x_i mod n` pairwise distinct.
//!
//! `x` is a unit iff `x + s` is residue-distinct. The residue-distinct set
//! carries the transported law `x × y = ((x - s) * (y - s)) + s`.

use alloc::vec::Vec;

use crate::twisted::ActionSpec;
use crate::vector::{distinct_residues, div_floor, mod_floor};
use crate::{Error, IntVector, Result};

/// Largest `n` accepted by [`enumerate_residue_classes`].
pub const MAX_ENUMERATION_N: usize = 8;

/// A vector whose entries are pairwise distinct modulo its length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueDistinctVector(IntVector);

impl ResidueDistinctVector {
    pub fn new(vec: IntVector) -> Result<Self> {
        if is_residue_distinct(&vec) {
            Ok(ResidueDistinctVector(vec))
        } else {
            Err(Error::NotResidueDistinct { n: vec.len() })
        }
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn as_vector(&self) -> &IntVector {
        &self.0
    }

    pub fn into_vector(self) -> IntVector {
        self.0
    }
}

/// `s = (0, n-1, .., 2, 1)`; `s_i = (1 - i) mod n`.
pub fn shift_vector(n: usize) -> IntVector {
    (1..=n as i64)
        .map(|i| mod_floor(1 - i, n as i64))
        .collect::<Vec<_>>()
        .into()
}

/// True iff `(i - x_i) mod n` are pairwise distinct.
pub fn is_unit_member(x: &IntVector) -> bool {
    let n = x.len() as i64;
    n > 0
        && distinct_residues(
            x.iter().enumerate().map(|(i, &xi)| (i as i64 + 1) - mod_floor(xi, n)),
            x.len(),
        )
}

/// True iff the entries are pairwise distinct modulo `n`.
pub fn is_residue_distinct(x: &IntVector) -> bool {
    !x.is_empty() && x.residues_distinct(x.len())
}

/// Transported product: `result_i = n * floor(x_i / n) + y_{1 + ((-x_i) mod n)}`.
pub fn deformed_multiply(
    x: &ResidueDistinctVector,
    y: &ResidueDistinctVector,
) -> Result<ResidueDistinctVector> {
    Error::check_len(x.n(), y.n())?;
    let n = x.n() as i64;
    let (x, y) = (x.as_vector(), y.as_vector());
    let out = x
        .iter()
        .map(|&xi| {
            let slot = mod_floor(xi.checked_neg().ok_or(Error::Overflow)?, n) as usize;
            n.checked_mul(div_floor(xi, n))
                .and_then(|base| base.checked_add(y[slot]))
                .ok_or(Error::Overflow)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ResidueDistinctVector(out.into()))
}

/// The identity of the transported law, which is the shift vector.
pub fn deformed_identity(n: usize) -> Result<ResidueDistinctVector> {
    Error::check_size(n, 1, usize::MAX)?;
    Ok(ResidueDistinctVector(shift_vector(n)))
}

/// `s + invert(x - s)`.
pub fn deformed_inverse(x: &ResidueDistinctVector) -> Result<ResidueDistinctVector> {
    let n = x.n();
    let s = shift_vector(n);
    let action = ActionSpec::cyclic(n)?;
    let unit = x.as_vector().checked_sub(&s)?;
    let inverse = action.invert(&unit)?;
    Ok(ResidueDistinctVector(inverse.checked_add(&s)?))
}

/// Translate a unit into the residue-distinct set.
pub fn unit_to_residue_distinct(unit: &IntVector) -> Result<ResidueDistinctVector> {
    ResidueDistinctVector::new(unit.checked_add(&shift_vector(unit.len()))?)
}

/// Translate a residue-distinct vector back into the unit set.
pub fn residue_distinct_to_unit(x: &ResidueDistinctVector) -> Result<IntVector> {
    x.as_vector().checked_sub(&shift_vector(x.n()))
}

/// All vectors in `[0, n-1]^n` with pairwise distinct entries, in
/// lexicographic order; one representative per class modulo `(nZ)^n`.
pub fn enumerate_residue_classes(n: usize) -> Result<Vec<IntVector>> {
    Error::check_size(n, 1, MAX_ENUMERATION_N)?;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = alloc::vec![false; n];
    fill(n, &mut current, &mut used, &mut out);
    Ok(out)
}

fn fill(n: usize, current: &mut Vec<i64>, used: &mut [bool], out: &mut Vec<IntVector>) {
    if current.len() == n {
        out.push(IntVector::new(current.clone()));
        return;
    }
    for value in 0..n {
        if !used[value] {
            used[value] = true;
            current.push(value as i64);
            fill(n, current, used, out);
            current.pop();
            used[value] = false;
        }
    }
}
