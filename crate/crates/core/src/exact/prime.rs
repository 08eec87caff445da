use alloc::format;
use alloc::string::{String, ToString};

use crate::error::{Error, Result};
use crate::ring::{root_by_enumeration, Degree, Field, FiniteRing, Ring};

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field `F_p`. Elements are canonical residues in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.elem(n)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2).
        Some(self.pow(a, self.p - 2))
    }
    fn degree(&self) -> Degree {
        Degree::Finite(1)
    }
    fn description(&self) -> String {
        format!("F_{}", self.p)
    }
    fn find_root(&self, coeffs: &[u64]) -> Option<Option<u64>> {
        Some(root_by_enumeration(self, coeffs))
    }
}

impl FiniteRing for PrimeField {
    fn order(&self) -> u64 {
        self.p
    }
    fn element(&self, index: u64) -> u64 {
        index
    }
    fn index_of(&self, a: &u64) -> u64 {
        *a
    }
}

/// The ring `Z/n`, for any modulus `n >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Zmod {
    n: u64,
}

impl Zmod {
    pub fn new(n: u64) -> Result<Self> {
        if !(2..=u32::MAX as u64).contains(&n) {
            return Err(Error::InvalidModulus(format!("Z/{n}")));
        }
        Ok(Zmod { n })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }
}

impl Ring for Zmod {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.n
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.n - a) % self.n
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.n
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.n as i64) as u64
    }
    fn characteristic(&self) -> u64 {
        self.n
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
}

impl FiniteRing for Zmod {
    fn order(&self) -> u64 {
        self.n
    }
    fn element(&self, index: u64) -> u64 {
        index
    }
    fn index_of(&self, a: &u64) -> u64 {
        *a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composite() {
        assert_eq!(PrimeField::new(9), Err(Error::NotPrime(9)));
        assert!(PrimeField::new(7).is_ok());
    }

    #[test]
    fn inverses_in_f7() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert_eq!(f.inv(&0), None);
    }

    #[test]
    fn zmod4_two_is_nilpotent() {
        let z = Zmod::new(4).unwrap();
        assert_eq!(z.mul(&2, &2), 0);
        assert_eq!(z.characteristic(), 4);
    }
}
