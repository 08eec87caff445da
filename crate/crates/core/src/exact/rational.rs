use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ring::{horner, Degree, Field, Ring};

/// The rational numbers with arbitrary-precision numerators and denominators.
///
/// `BigRational` keeps fractions reduced with a positive denominator, which is
/// the canonical form used throughout.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Rationals {
    pub fn frac(&self, num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}

/// Positive divisors of `n` when `n` is small enough to factor by trial division.
fn small_divisors(n: &BigInt) -> Option<Vec<i64>> {
    let n = n.abs().to_i64()?;
    if n > 1_000_000 {
        return None;
    }
    Some((1..=n).filter(|d| n % d == 0).collect())
}

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn render(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

impl Field for Rationals {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    /// `Q` is its own prime field.
    fn degree(&self) -> Degree {
        Degree::Finite(1)
    }
    fn description(&self) -> String {
        String::from("Q")
    }

    /// Rational root test on the integer polynomial obtained by clearing
    /// denominators. Gives up when the extreme coefficients are too large to
    /// factor by trial division.
    fn find_root(&self, coeffs: &[BigRational]) -> Option<Option<BigRational>> {
        let coeffs: Vec<_> = {
            let mut c = coeffs.to_vec();
            while c.last().is_some_and(|x| x.is_zero()) {
                c.pop();
            }
            c
        };
        if coeffs.len() < 2 {
            return Some(None);
        }
        if coeffs[0].is_zero() {
            return Some(Some(BigRational::zero()));
        }
        let lcm = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let nums = small_divisors(&ints[0])?;
        let dens = small_divisors(ints.last().unwrap())?;
        for &p in &nums {
            for &q in &dens {
                for sign in [1i64, -1] {
                    let x = self.frac(sign * p, q);
                    if horner(self, &coeffs, &x).is_zero() {
                        return Some(Some(x));
                    }
                }
            }
        }
        Some(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_fraction() {
        let q = Rationals;
        let a = q.frac(2, -4);
        assert_eq!(a, q.frac(-1, 2));
        assert_eq!(q.render(&a), "-1/2");
    }

    #[test]
    fn degree_over_prime_field() {
        let q = Rationals;
        assert_eq!(q.degree(), Degree::Finite(1));
        let gauss =
            crate::exact::ExtensionField::new(q, alloc::vec![q.one(), q.zero(), q.one()], "i")
                .unwrap();
        assert_eq!(gauss.degree(), Degree::Finite(2));
    }

    #[test]
    fn rational_root_search() {
        let q = Rationals;
        // x^2 + 1 has no rational root; 2x^2 - x has root 0, 4x^2 - 1 has 1/2.
        let c = |v: &[i64]| v.iter().map(|&n| q.from_i64(n)).collect::<Vec<_>>();
        assert_eq!(q.find_root(&c(&[1, 0, 1])), Some(None));
        assert_eq!(q.find_root(&c(&[0, -1, 2])), Some(Some(q.zero())));
        let r = q.find_root(&c(&[-1, 0, 4])).unwrap().unwrap();
        assert_eq!(r.abs(), q.frac(1, 2));
    }
}
