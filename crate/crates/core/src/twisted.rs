//! The twisted product on maps `V -> Z`.
//!
//! For an action of `Z` on `V = {1..n}` generated by a permutation `tau`, the
//! product is
//!
//! ```text
//! (phi2 * phi1)(v) = phi2(v) + phi1(tau^{phi2(v)}(v))
//! ```
//!
//! It is associative with the zero map as identity, and `phi` is a unit exactly
//! when the transport map `v -> tau^{phi(v)}(v)` is a bijection.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::vector::mod_floor;
use crate::{CycleStructure, Error, IntVector, Permutation, Result};

/// A `Z`-action on `{1..n}` given by the permutation sending `1` to `tau`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionSpec {
    tau: Permutation,
    cycles: CycleStructure,
}

impl ActionSpec {
    /// The canonical cyclic action `tau(v) = v - 1`, `tau(1) = n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        Error::check_size(n, 1, usize::MAX)?;
        Ok(Self::new(Permutation::cyclic_shift(n)))
    }

    pub fn new(tau: Permutation) -> Self {
        let cycles = CycleStructure::of(&tau);
        ActionSpec { tau, cycles }
    }

    pub fn n(&self) -> usize {
        self.tau.len()
    }

    pub fn tau(&self) -> &Permutation {
        &self.tau
    }

    pub fn cycles(&self) -> &CycleStructure {
        &self.cycles
    }

    pub fn is_trivial(&self) -> bool {
        self.tau.is_identity()
    }

    /// `tau^g(v)`.
    pub fn act(&self, v: usize, g: i64) -> Result<usize> {
        self.cycles.act(v, g)
    }

    fn check(&self, x: &IntVector) -> Result<()> {
        Error::check_len(self.n(), x.len())
    }

    /// The zero map.
    pub fn identity_element(&self) -> IntVector {
        IntVector::zeros(self.n())
    }

    /// The constant map `v -> g`.
    pub fn embed_constant(&self, g: i64) -> IntVector {
        IntVector::constant(self.n(), g)
    }

    /// `phi2 * phi1`.
    pub fn star_multiply(&self, phi2: &IntVector, phi1: &IntVector) -> Result<IntVector> {
        self.check(phi2)?;
        self.check(phi1)?;
        (1..=self.n())
            .map(|v| {
                let shift = phi2.at(v);
                let moved = self.act(v, shift)?;
                shift.checked_add(phi1.at(moved)).ok_or(Error::Overflow)
            })
            .collect::<Result<Vec<_>>>()
            .map(IntVector::new)
    }

    /// The transport map `v -> tau^{phi(v)}(v)`, or a collision witness.
    pub fn transport_permutation(&self, phi: &IntVector) -> Result<Transport> {
        self.check(phi)?;
        let n = self.n();
        let mut preimage = alloc::vec![0usize; n];
        let mut images = Vec::with_capacity(n);
        for v in 1..=n {
            let image = self.act(v, phi.at(v))?;
            if preimage[image - 1] != 0 {
                return Ok(Transport::NotBijective {
                    first: preimage[image - 1],
                    second: v,
                    image,
                });
            }
            preimage[image - 1] = v;
            images.push(image);
        }
        Ok(Transport::Bijective(Permutation::from_images(images)?))
    }

    pub fn is_invertible(&self, phi: &IntVector) -> Result<bool> {
        Ok(matches!(self.transport_permutation(phi)?, Transport::Bijective(_)))
    }

    /// The two-sided inverse `psi(w) = -phi(pi^{-1}(w))`, where `pi` is the
    /// transport map.
    pub fn invert(&self, phi: &IntVector) -> Result<IntVector> {
        let pi = match self.transport_permutation(phi)? {
            Transport::Bijective(pi) => pi,
            Transport::NotBijective {
                first,
                second,
                image,
            } => {
                return Err(Error::NotInvertible {
                    first,
                    second,
                    image,
                })
            }
        };
        let back = pi.inverse();
        (1..=self.n())
            .map(|w| phi.at(back.apply(w)).checked_neg().ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(IntVector::new)
    }
}

/// Outcome of [`ActionSpec::transport_permutation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Transport {
    Bijective(Permutation),
    /// `first < second` both move to `image`.
    NotBijective {
        first: usize,
        second: usize,
        image: usize,
    },
}

/// Canonical cyclic `act`: `1 + ((v - 1 - g) mod n)`.
pub fn cyclic_act(v: usize, g: i64, n: usize) -> Result<usize> {
    if v == 0 || v > n {
        return Err(Error::PointOutOfRange { point: v, n });
    }
    let shifted = (v as i64 - 1).checked_sub(g).ok_or(Error::Overflow)?;
    Ok(1 + mod_floor(shifted, n as i64) as usize)
}

/// An element of the twisted semigroup bundled with its action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedElement {
    vec: IntVector,
    action: Arc<ActionSpec>,
}

impl TwistedElement {
    pub fn new(vec: IntVector, action: Arc<ActionSpec>) -> Result<Self> {
        action.check(&vec)?;
        Ok(TwistedElement { vec, action })
    }

    pub fn identity(action: Arc<ActionSpec>) -> Self {
        TwistedElement {
            vec: action.identity_element(),
            action,
        }
    }

    pub fn constant(g: i64, action: Arc<ActionSpec>) -> Self {
        TwistedElement {
            vec: action.embed_constant(g),
            action,
        }
    }

    pub fn vec(&self) -> &IntVector {
        &self.vec
    }

    pub fn action(&self) -> &ActionSpec {
        &self.action
    }

    /// `self * rhs`.
    pub fn star(&self, rhs: &TwistedElement) -> Result<TwistedElement> {
        if self.action != rhs.action {
            return Err(Error::InvalidArgument("elements use different actions".into()));
        }
        Ok(TwistedElement {
            vec: self.action.star_multiply(&self.vec, &rhs.vec)?,
            action: self.action.clone(),
        })
    }

    pub fn transport_permutation(&self) -> Result<Transport> {
        self.action.transport_permutation(&self.vec)
    }

    pub fn invert(&self) -> Result<TwistedElement> {
        Ok(TwistedElement {
            vec: self.action.invert(&self.vec)?,
            action: self.action.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cyc(n: usize) -> ActionSpec {
        ActionSpec::cyclic(n).unwrap()
    }

    fn v<const N: usize>(x: [i64; N]) -> IntVector {
        IntVector::from(x)
    }

    #[test]
    fn act_examples() {
        let a = cyc(3);
        assert_eq!(a.act(1, 0).unwrap(), 1);
        assert_eq!(a.act(1, 1).unwrap(), 3);
        assert_eq!(a.act(2, 5).unwrap(), 3);
        assert!(a.act(4, 0).is_err());
        assert!(a.act(0, 0).is_err());
    }

    #[test]
    fn act_agrees_with_closed_form() {
        for n in 1..7 {
            let a = cyc(n);
            for p in 1..=n {
                for g in -15..15 {
                    assert_eq!(a.act(p, g).unwrap(), cyclic_act(p, g, n).unwrap());
                }
            }
        }
    }

    #[test]
    fn star_examples() {
        let a = cyc(3);
        assert_eq!(a.star_multiply(&v([0, 0, 0]), &v([4, -1, 9])).unwrap(), v([4, -1, 9]));
        assert_eq!(a.star_multiply(&v([1, 0, 0]), &v([0, 1, 2])).unwrap(), v([3, 1, 2]));
        assert_eq!(a.star_multiply(&v([1, 1, 1]), &v([-1, -1, -1])).unwrap(), v([0, 0, 0]));
        assert!(matches!(
            a.star_multiply(&v([1, 1]), &v([0, 0, 0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn star_overflow_is_reported() {
        let a = cyc(2);
        assert_eq!(
            a.star_multiply(&v([i64::MAX, 0]), &v([1, 1])),
            Err(Error::Overflow)
        );
    }

    #[test]
    fn constants_embed_homomorphically() {
        assert_eq!(cyc(4).embed_constant(0), v([0, 0, 0, 0]));
        assert_eq!(cyc(2).embed_constant(-1), v([-1, -1]));
        let a = cyc(3);
        let product = a.star_multiply(&a.embed_constant(2), &a.embed_constant(3)).unwrap();
        assert_eq!(product, v([5, 5, 5]));
    }

    #[test]
    fn identity_examples() {
        assert_eq!(cyc(1).identity_element(), v([0]));
        let a = cyc(3);
        let x = v([5, -2, 7]);
        assert_eq!(a.star_multiply(&a.identity_element(), &x).unwrap(), x);
        assert_eq!(a.star_multiply(&x, &a.identity_element()).unwrap(), x);
    }

    #[test]
    fn transport_examples() {
        let a = cyc(3);
        assert_eq!(
            a.transport_permutation(&v([0, 0, 0])).unwrap(),
            Transport::Bijective(Permutation::identity(3))
        );
        assert_eq!(
            a.transport_permutation(&v([1, 1, 1])).unwrap(),
            Transport::Bijective(Permutation::from_images(alloc::vec![3, 1, 2]).unwrap())
        );
        assert_eq!(
            a.transport_permutation(&v([1, 0, 0])).unwrap(),
            Transport::NotBijective {
                first: 1,
                second: 3,
                image: 3
            }
        );
    }

    #[test]
    fn invert_examples() {
        let a = cyc(3);
        assert_eq!(a.invert(&v([0, 0, 0])).unwrap(), v([0, 0, 0]));
        assert_eq!(a.invert(&v([1, 1, 1])).unwrap(), v([-1, -1, -1]));
        let x = v([2, 1, 0]);
        let y = a.invert(&x).unwrap();
        assert_eq!(y, v([-1, -2, 0]));
        assert_eq!(a.star_multiply(&x, &y).unwrap(), v([0, 0, 0]));
        assert_eq!(
            a.invert(&v([1, 0, 0])),
            Err(Error::NotInvertible {
                first: 1,
                second: 3,
                image: 3
            })
        );
    }

    #[test]
    fn bundled_elements_reject_mixed_actions() {
        let a3 = Arc::new(cyc(3));
        let t3 = Arc::new(ActionSpec::new(Permutation::identity(3)));
        let x = TwistedElement::new(v([1, 0, 0]), a3.clone()).unwrap();
        let y = TwistedElement::new(v([0, 1, 2]), t3).unwrap();
        assert!(x.star(&y).is_err());
        let z = TwistedElement::new(v([0, 1, 2]), a3.clone()).unwrap();
        assert_eq!(x.star(&z).unwrap().vec(), &v([3, 1, 2]));
        assert!(x.invert().is_err());
        assert!(TwistedElement::new(v([1]), a3).is_err());
    }

    /// Brute force: look for a two-sided inverse among all vectors built by
    /// assigning each point `w` the negated value of some point `v`.
    fn brute_force_invertible(a: &ActionSpec, phi: &IntVector) -> bool {
        let n = a.n();
        let mut choice = alloc::vec![0usize; n];
        loop {
            let psi: IntVector = choice.iter().map(|&c| -phi[c]).collect::<Vec<_>>().into();
            let id = a.identity_element();
            if a.star_multiply(phi, &psi).unwrap() == id && a.star_multiply(&psi, phi).unwrap() == id {
                return true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                choice[i] += 1;
                if choice[i] < n {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn invertibility_matches_brute_force() {
        for n in 1..=4usize {
            let a = cyc(n);
            let total = n.pow(n as u32);
            for code in 0..total {
                let mut c = code;
                let phi: IntVector = (0..n)
                    .map(|_| {
                        let d = (c % n) as i64;
                        c /= n;
                        d
                    })
                    .collect::<Vec<_>>()
                    .into();
                assert_eq!(a.is_invertible(&phi).unwrap(), brute_force_invertible(&a, &phi), "{phi}");
            }
        }
    }

    fn action_and_vectors(count: usize) -> impl Strategy<Value = (ActionSpec, Vec<IntVector>)> {
        (1usize..=6)
            .prop_flat_map(move |n| {
                (
                    Just(n).prop_perturb(|n, mut rng| {
                        let mut images: Vec<usize> = (1..=n).collect();
                        for i in (1..n).rev() {
                            images.swap(i, rng.random_range(0..=i));
                        }
                        ActionSpec::new(Permutation::from_images(images).unwrap())
                    }),
                    proptest::collection::vec(
                        proptest::collection::vec(-50i64..=50, n).prop_map(IntVector::new),
                        count,
                    ),
                )
            })
    }

    proptest! {
        #[test]
        fn associative((a, xs) in action_and_vectors(3)) {
            let left = a.star_multiply(&a.star_multiply(&xs[0], &xs[1]).unwrap(), &xs[2]).unwrap();
            let right = a.star_multiply(&xs[0], &a.star_multiply(&xs[1], &xs[2]).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn trivial_action_is_pointwise_sum(xs in proptest::collection::vec(-50i64..=50, 1..7), shift in -50i64..=50) {
            let n = xs.len();
            let a = ActionSpec::new(Permutation::identity(n));
            let x = IntVector::new(xs);
            let y: IntVector = x.iter().map(|v| v * 3 + shift).collect::<Vec<_>>().into();
            prop_assert_eq!(a.star_multiply(&x, &y).unwrap(), x.checked_add(&y).unwrap());
        }

        #[test]
        fn inverses_are_two_sided((a, xs) in action_and_vectors(1)) {
            let x = &xs[0];
            match a.invert(x) {
                Ok(y) => {
                    prop_assert_eq!(a.star_multiply(x, &y).unwrap(), a.identity_element());
                    prop_assert_eq!(a.star_multiply(&y, x).unwrap(), a.identity_element());
                }
                Err(Error::NotInvertible { .. }) => prop_assert!(!a.is_invertible(x).unwrap()),
                Err(e) => prop_assert!(false, "{e}"),
            }
        }

        #[test]
        fn constants_add(g1 in -1000i64..1000, g2 in -1000i64..1000, n in 1usize..7) {
            let a = cyc(n);
            prop_assert_eq!(
                a.star_multiply(&a.embed_constant(g2), &a.embed_constant(g1)).unwrap(),
                a.embed_constant(g2 + g1)
            );
        }
    }
}
