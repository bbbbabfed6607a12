//! `Z^n x| S_n` and its identification with the unit group.
//!
//! Elements are pairs `(z, s)` multiplied by
//!
//! ```text
//! (z, s) · (k, r) = (z + k∘s, r∘s),   (k∘s)_i = k_{s(i)}
//! ```
//!
//! which is the law that makes [`phi_forward`] a homomorphism from the
//! residue-distinct vectors under the transported product.
//!
//! For a non-cyclic action the unit group splits along the cycles of `tau`:
//! [`split_to_factors`] and [`assemble_from_factors`] move between a vector on
//! `{1..n}` and one vector per cycle, each carrying the canonical cyclic action.

use alloc::vec::Vec;
use core::fmt;

use crate::twisted::ActionSpec;
use crate::units::{is_unit_member, ResidueDistinctVector};
use crate::vector::{distinct_residues, div_floor, mod_floor};
use crate::{CycleStructure, Error, IntVector, Permutation, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemiElement {
    pub z: IntVector,
    pub s: Permutation,
}

impl SemiElement {
    pub fn new(z: IntVector, s: Permutation) -> Result<Self> {
        Error::check_len(s.len(), z.len())?;
        Ok(SemiElement { z, s })
    }

    pub fn identity(n: usize) -> Self {
        SemiElement {
            z: IntVector::zeros(n),
            s: Permutation::identity(n),
        }
    }

    pub fn translation(z: IntVector) -> Self {
        let n = z.len();
        SemiElement {
            z,
            s: Permutation::identity(n),
        }
    }

    pub fn permutation(s: Permutation) -> Self {
        SemiElement {
            z: IntVector::zeros(s.len()),
            s,
        }
    }

    pub fn n(&self) -> usize {
        self.s.len()
    }

    pub fn is_identity(&self) -> bool {
        self.s.is_identity() && self.z.iter().all(|&x| x == 0)
    }

    pub fn is_translation(&self) -> bool {
        self.s.is_identity()
    }

    /// `self · rhs`.
    pub fn mul(&self, rhs: &SemiElement) -> Result<SemiElement> {
        semi_multiply(self, rhs)
    }

    pub fn inverse(&self) -> Result<SemiElement> {
        semi_inverse(self)
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, k: i64) -> Result<SemiElement> {
        let mut base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = SemiElement::identity(self.n());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for SemiElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({}), ({}))", self.z, self.s)
    }
}

/// `(z, s) · (k, r) = (z + k∘s, r∘s)`.
pub fn semi_multiply(g2: &SemiElement, g1: &SemiElement) -> Result<SemiElement> {
    Error::check_len(g2.n(), g1.n())?;
    let s = &g2.s;
    let z = (1..=g2.n())
        .map(|i| g2.z.at(i).checked_add(g1.z.at(s.apply(i))).ok_or(Error::Overflow))
        .collect::<Result<Vec<_>>>()?;
    Ok(SemiElement {
        z: z.into(),
        s: g1.s.compose(s)?,
    })
}

/// `(z, s)^{-1} = (-z∘s^{-1}, s^{-1})`.
pub fn semi_inverse(g: &SemiElement) -> Result<SemiElement> {
    let s_inv = g.s.inverse();
    let z = (1..=g.n())
        .map(|i| g.z.at(s_inv.apply(i)).checked_neg().ok_or(Error::Overflow))
        .collect::<Result<Vec<_>>>()?;
    Ok(SemiElement { z: z.into(), s: s_inv })
}

/// Writes `x_i = n*m_i + l_i` with `l_i in [0, n)` and returns `(m, s)` with
/// `s(i) = 1 + ((-l_i) mod n)`.
pub fn phi_forward(x: &ResidueDistinctVector) -> Result<SemiElement> {
    let n = x.n() as i64;
    let x = x.as_vector();
    let z: Vec<i64> = x.iter().map(|&xi| div_floor(xi, n)).collect();
    let images = x
        .iter()
        .map(|&xi| 1 + mod_floor(-mod_floor(xi, n), n) as usize)
        .collect();
    Ok(SemiElement {
        z: z.into(),
        s: Permutation::from_images(images)?,
    })
}

/// Inverse of [`phi_forward`]: `l_i = (1 - s(i)) mod n`, `x = n*z + l`.
pub fn phi_backward(g: &SemiElement) -> Result<ResidueDistinctVector> {
    let n = g.n() as i64;
    let x = (1..=g.n())
        .map(|i| {
            let l = mod_floor(1 - g.s.apply(i) as i64, n);
            n.checked_mul(g.z.at(i))
                .and_then(|base| base.checked_add(l))
                .ok_or(Error::Overflow)
        })
        .collect::<Result<Vec<_>>>()?;
    ResidueDistinctVector::new(x.into())
}

/// Unit test for the action of an arbitrary `tau`: on every cycle
/// `(w_1, .., w_m)` the values `(j - x_{w_j}) mod m` must be distinct.
pub fn general_is_unit(x: &IntVector, tau: &Permutation) -> Result<bool> {
    Error::check_len(tau.len(), x.len())?;
    let cycles = CycleStructure::of(tau);
    Ok(cycles.cycles().iter().all(|cycle| {
        let m = cycle.len() as i64;
        distinct_residues(
            cycle
                .iter()
                .enumerate()
                .map(|(j, &w)| (j as i64 + 1) - mod_floor(x.at(w), m)),
            cycle.len(),
        )
    }))
}

/// Restriction of `x` to each cycle, reindexed `w_j -> j`.
pub fn split_to_factors(x: &IntVector, cs: &CycleStructure) -> Result<Vec<IntVector>> {
    Error::check_len(cs.n(), x.len())?;
    Ok(cs
        .cycles()
        .iter()
        .map(|cycle| cycle.iter().map(|&w| x.at(w)).collect::<Vec<_>>().into())
        .collect())
}

/// Inverse of [`split_to_factors`].
pub fn assemble_from_factors(parts: &[IntVector], cs: &CycleStructure) -> Result<IntVector> {
    Error::check_len(cs.cycles().len(), parts.len())?;
    let mut out = alloc::vec![0i64; cs.n()];
    for (part, cycle) in parts.iter().zip(cs.cycles()) {
        Error::check_len(cycle.len(), part.len())?;
        for (&value, &w) in part.iter().zip(cycle) {
            out[w - 1] = value;
        }
    }
    Ok(out.into())
}

/// Star product computed factor by factor, each factor under the canonical
/// cyclic action of its cycle length.
pub fn factorwise_star_multiply(
    x: &IntVector,
    y: &IntVector,
    cs: &CycleStructure,
) -> Result<IntVector> {
    let xs = split_to_factors(x, cs)?;
    let ys = split_to_factors(y, cs)?;
    let parts = xs
        .iter()
        .zip(&ys)
        .map(|(a, b)| ActionSpec::cyclic(a.len())?.star_multiply(a, b))
        .collect::<Result<Vec<_>>>()?;
    assemble_from_factors(&parts, cs)
}

/// True iff every split factor is a unit at its own cycle length.
pub fn factors_are_units(x: &IntVector, cs: &CycleStructure) -> Result<bool> {
    Ok(split_to_factors(x, cs)?.iter().all(is_unit_member))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::{deformed_multiply, shift_vector};
    use proptest::prelude::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    fn v<const N: usize>(x: [i64; N]) -> IntVector {
        IntVector::from(x)
    }

    fn se<const N: usize>(z: [i64; N], s: [usize; N]) -> SemiElement {
        SemiElement::new(v(z), p(&s)).unwrap()
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(
            semi_multiply(&se([0, 0, 0], [1, 3, 2]), &se([1, 1, 1], [1, 3, 2])).unwrap(),
            se([1, 1, 1], [1, 2, 3])
        );
        let g = se([4, -2, 7], [3, 1, 2]);
        assert_eq!(semi_multiply(&SemiElement::identity(3), &g).unwrap(), g);
        let a = se([0, 0, 0, 1], [4, 1, 2, 3]);
        let a4 = a.mul(&a).unwrap().mul(&a).unwrap().mul(&a).unwrap();
        assert_eq!(a4, se([1, 1, 1, 1], [1, 2, 3, 4]));
        assert_eq!(a.pow(4).unwrap(), a4);
        assert!(semi_multiply(&a, &g).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert!(semi_inverse(&SemiElement::identity(3)).unwrap().is_identity());
        let a = se([0, 0, 0, 1], [4, 1, 2, 3]);
        let inv = semi_inverse(&a).unwrap();
        assert_eq!(inv, se([0, 0, -1, 0], [2, 3, 4, 1]));
        assert!(a.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&a).unwrap().is_identity());
        assert_eq!(
            semi_inverse(&se([1, 1, 1, 1], [1, 2, 3, 4])).unwrap(),
            se([-1, -1, -1, -1], [1, 2, 3, 4])
        );
        assert_eq!(a.pow(-1).unwrap(), inv);
    }

    #[test]
    fn phi_examples() {
        let rd = |x| ResidueDistinctVector::new(x).unwrap();
        assert_eq!(phi_forward(&rd(v([0, 2, 1]))).unwrap(), SemiElement::identity(3));
        assert_eq!(phi_forward(&rd(v([0, 1, 2]))).unwrap(), se([0, 0, 0], [1, 3, 2]));
        assert_eq!(phi_forward(&rd(v([3, 5, 4]))).unwrap(), se([1, 1, 1], [1, 2, 3]));
        assert_eq!(phi_backward(&SemiElement::identity(3)).unwrap(), rd(v([0, 2, 1])));
        assert_eq!(phi_backward(&se([1, 1, 1], [1, 2, 3])).unwrap(), rd(v([3, 5, 4])));
    }

    #[test]
    fn general_unit_examples() {
        let pairs = p(&[2, 1, 4, 3]);
        assert!(general_is_unit(&v([0, 0, 0, 0]), &pairs).unwrap());
        assert!(!general_is_unit(&v([0, 1, 5, 2]), &pairs).unwrap());
        assert!(general_is_unit(&v([0, 2, 5, 3]), &pairs).unwrap());
        assert!(general_is_unit(&v([0, 1, 5]), &pairs).is_err());
    }

    #[test]
    fn split_and_assemble_examples() {
        let cs = CycleStructure::of(&p(&[2, 1, 4, 3]));
        let parts = split_to_factors(&v([0, 2, 5, 3]), &cs).unwrap();
        assert_eq!(parts, alloc::vec![v([0, 2]), v([5, 3])]);
        assert_eq!(assemble_from_factors(&parts, &cs).unwrap(), v([0, 2, 5, 3]));

        let single = CycleStructure::of(&p(&[3, 1, 2]));
        assert_eq!(split_to_factors(&v([7, 8, 9]), &single).unwrap(), alloc::vec![v([7, 8, 9])]);
        let odd = CycleStructure::of(&p(&[2, 3, 1]));
        assert_eq!(odd.cycles(), &[alloc::vec![1, 3, 2]]);
        assert_eq!(split_to_factors(&v([7, 8, 9]), &odd).unwrap(), alloc::vec![v([7, 9, 8])]);

        let fixed = CycleStructure::of(&Permutation::identity(3));
        assert_eq!(split_to_factors(&v([7, 8, 9]), &fixed).unwrap().len(), 3);
        assert!(assemble_from_factors(&[v([1])], &cs).is_err());
    }

    fn semi_element(n: usize) -> impl Strategy<Value = SemiElement> {
        (
            proptest::collection::vec(-50i64..=50, n),
            Just((1..=n).collect::<Vec<_>>()).prop_shuffle(),
        )
            .prop_map(|(z, s)| SemiElement::new(z.into(), Permutation::from_images(s).unwrap()).unwrap())
    }

    fn two_elements() -> impl Strategy<Value = (SemiElement, SemiElement)> {
        (1usize..=6).prop_flat_map(|n| (semi_element(n), semi_element(n)))
    }

    fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|s| Permutation::from_images(s).unwrap())
    }

    proptest! {
        #[test]
        fn phi_is_homomorphism((g, h) in two_elements()) {
            let x = phi_backward(&g).unwrap();
            let y = phi_backward(&h).unwrap();
            prop_assert_eq!(phi_forward(&x).unwrap(), g.clone());
            prop_assert_eq!(phi_backward(&phi_forward(&x).unwrap()).unwrap(), x.clone());
            prop_assert_eq!(
                phi_forward(&deformed_multiply(&x, &y).unwrap()).unwrap(),
                semi_multiply(&g, &h).unwrap()
            );
        }

        #[test]
        fn inverse_is_two_sided((g, _h) in two_elements()) {
            let inv = semi_inverse(&g).unwrap();
            prop_assert!(g.mul(&inv).unwrap().is_identity());
            prop_assert!(inv.mul(&g).unwrap().is_identity());
        }

        #[test]
        fn split_respects_star(
            (tau, xs) in (1usize..=7).prop_flat_map(|n| (
                permutation(n),
                proptest::collection::vec(proptest::collection::vec(-20i64..=20, n), 2),
            ))
        ) {
            let cs = CycleStructure::of(&tau);
            let action = ActionSpec::new(tau.clone());
            let x = IntVector::new(xs[0].clone());
            let y = IntVector::new(xs[1].clone());
            prop_assert_eq!(assemble_from_factors(&split_to_factors(&x, &cs).unwrap(), &cs).unwrap(), x.clone());
            prop_assert_eq!(
                factorwise_star_multiply(&x, &y, &cs).unwrap(),
                action.star_multiply(&x, &y).unwrap()
            );
            let unit = general_is_unit(&x, &tau).unwrap();
            prop_assert_eq!(unit, factors_are_units(&x, &cs).unwrap());
            prop_assert_eq!(unit, action.is_invertible(&x).unwrap());
        }
    }

    #[test]
    fn cyclic_case_agrees_with_units_module() {
        for n in 1..6 {
            let tau = Permutation::cyclic_shift(n);
            let s = shift_vector(n);
            for k in -3..4 {
                let x = s.checked_add(&IntVector::constant(n, k)).unwrap();
                assert_eq!(general_is_unit(&x, &tau).unwrap(), is_unit_member(&x));
            }
        }
    }
}
