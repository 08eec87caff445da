//! Ring and field interfaces.
//!
//! Rings are *context objects*: a value of a type implementing [`Ring`] knows
//! how to combine elements, and elements are plain data that carry no pointer
//! back to their ring. This lets one element type (say `u64`) serve every
//! prime field, with the modulus living in the context.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Debug;

/// Dimension of a field over its prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degree {
    Finite(usize),
    Infinite,
}

impl Degree {
    pub fn times(self, other: Degree) -> Degree {
        match (self, other) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a * b),
            _ => Degree::Infinite,
        }
    }
}

/// A commutative ring with unit.
pub trait Ring: Clone + Debug + PartialEq {
    type Elem: Clone + PartialEq + Eq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Image of an integer under the unique ring map from the integers.
    fn from_i64(&self, n: i64) -> Self::Elem;

    /// The characteristic, with `0` for characteristic zero.
    fn characteristic(&self) -> u64;

    /// Canonical human-readable rendering of an element.
    fn render(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn square(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    /// `n * a` for an integer `n`.
    fn scale_int(&self, n: i64, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.from_i64(n), a)
    }
}

/// A field: every nonzero element has an inverse.
pub trait Field: Ring {
    /// Inverse of a nonzero element; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Degree over the prime field.
    fn degree(&self) -> Degree;

    /// How the field was built, e.g. `F_2[x]/(x^2 + x + 1)`.
    fn description(&self) -> String;

    /// Searches the field for a root of the univariate polynomial with the
    /// given coefficients (lowest degree first).
    ///
    /// Returns `None` when the field cannot decide the question, and
    /// `Some(None)` when it has established that no root exists.
    fn find_root(&self, coeffs: &[Self::Elem]) -> Option<Option<Self::Elem>> {
        let _ = coeffs;
        None
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// A ring with finitely many elements, enumerable by index.
pub trait FiniteRing: Ring {
    fn order(&self) -> u64;

    /// The element with the given index, `0 <= index < order()`.
    /// Index `0` is always zero.
    fn element(&self, index: u64) -> Self::Elem;

    fn index_of(&self, a: &Self::Elem) -> u64;

    fn elements(&self) -> Vec<Self::Elem> {
        (0..self.order()).map(|i| self.element(i)).collect()
    }
}

/// Evaluates a univariate polynomial (coefficients lowest degree first).
pub fn horner<R: Ring>(ring: &R, coeffs: &[R::Elem], x: &R::Elem) -> R::Elem {
    coeffs
        .iter()
        .rev()
        .fold(ring.zero(), |acc, c| ring.add(&ring.mul(&acc, x), c))
}

/// Brute-force root search over a finite field.
pub(crate) fn root_by_enumeration<F: Field + FiniteRing>(
    field: &F,
    coeffs: &[F::Elem],
) -> Option<F::Elem> {
    (0..field.order())
        .map(|i| field.element(i))
        .find(|x| field.is_zero(&horner(field, coeffs, x)))
}
