//! Scalar structures.
//!
//! Arithmetic is done through a *structure* value (`Rationals`, `PrimeField`,
//! `Neutrosophic`) rather than through operator impls on the elements, so that
//! context such as the prime modulus is an explicit parameter shared by every
//! element of a matrix or code.

pub mod fuzzy;
pub mod neutro;
pub mod poly;
pub mod prime;
pub mod rational;

use std::cmp::Ordering;
use std::fmt::Debug;

use crate::error::Result;

pub use fuzzy::FuzzyValue;
pub use neutro::{Neutro, Neutrosophic};
pub use poly::Polynomial;
pub use prime::PrimeField;
pub use rational::{Rational, Rationals};

/// A commutative ring with identity.
pub trait Ring: Clone + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for non-units.
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Textual literal for an element (the grammar accepted by `parse`).
    fn render(&self, a: &Self::Elem) -> String;

    fn parse(&self, s: &str) -> Result<Self::Elem>;
}

/// A ring in which every nonzero element is a unit.
pub trait Field: Ring {
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let inv = self
            .inverse(b)
            .expect("division by zero in field arithmetic");
        self.mul(a, &inv)
    }

    /// Total order used to sort eigenvalues and report them deterministically.
    fn order(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;

    /// Rescale a nonzero vector to the canonical representative of its line.
    ///
    /// The default makes the first nonzero entry one.
    fn normalize(&self, v: &mut [Self::Elem]) {
        if let Some(lead) = v.iter().find(|x| !self.is_zero(x)).cloned() {
            let inv = self.inverse(&lead).expect("nonzero lead");
            for x in v.iter_mut() {
                *x = self.mul(x, &inv);
            }
        }
    }
}

/// Fields in which the roots of a polynomial can be found exactly.
pub trait RootFinding: Field {
    /// Roots lying in the field, with multiplicity, sorted by [`Field::order`],
    /// together with the cofactor that has no roots in the field.
    fn roots(&self, f: &Polynomial<Self::Elem>) -> (Vec<(Self::Elem, usize)>, Polynomial<Self::Elem>);
}
