use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::exact::{Monomial, PolyRing, PrimeField};
use crate::ring::Ring;

/// Whether `m` is divisible by one of the generators.
pub fn monomial_ideal_membership(m: &Monomial, generators: &[Monomial]) -> bool {
    generators.iter().any(|g| g.divides(m))
}

/// A pure tensor `left (x) right` of monomials in the augmentation ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureTensor {
    pub left: Monomial,
    pub right: Monomial,
}

/// Moves the monomial factor `by` across the tensor sign, which
/// `R`-bilinearity allows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    LeftToRight(Monomial),
    RightToLeft(Monomial),
}

impl PureTensor {
    /// Both factors stay in the augmentation ideal, so the move is an
    /// identity in `I (x)_R I`.
    pub fn apply(&self, mv: &Move) -> Option<PureTensor> {
        let (from, to, by) = match mv {
            Move::LeftToRight(m) => (&self.left, &self.right, m),
            Move::RightToLeft(m) => (&self.right, &self.left, m),
        };
        if !by.divides(from) {
            return None;
        }
        let rest = by.quotient_of(from);
        if rest.is_one() {
            return None;
        }
        let moved = to.mul(by);
        Some(match mv {
            Move::LeftToRight(_) => PureTensor {
                left: rest,
                right: moved,
            },
            Move::RightToLeft(_) => PureTensor {
                left: moved,
                right: rest,
            },
        })
    }

    pub fn flip(&self) -> PureTensor {
        PureTensor {
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }

    pub fn render(&self, names: &[String]) -> String {
        format!(
            "{} (x) {}",
            self.left.render(names),
            self.right.render(names)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareZeroReport {
    /// Elements `a` of `I` sampled, as sums of distinct nonconstant
    /// monomials of degree at most two.
    pub sampled: usize,
    /// First sampled `a` with `a^2 mod 2` outside `(X^2, Y^2, Z^2)`.
    pub diagonal_failure: Option<String>,
    /// `XYZ` lies in `(X^2, Y^2, Z^2)`.
    pub xyz_member: bool,
    /// Rendered states of the replayed chain.
    pub chain: Vec<String>,
    /// The chain is valid, starts at `XY (x) Z` and ends at its flip.
    pub chain_valid: bool,
}

impl SquareZeroReport {
    pub fn passes(&self) -> bool {
        self.diagonal_failure.is_none() && !self.xyz_member && self.chain_valid
    }
}

fn mono(e: [u32; 3]) -> Monomial {
    Monomial(e.to_vec())
}

/// `XY (x) Z` is flip-fixed in `I (x)_R I` for `R = Z[X, Y, Z]` and `I` its
/// augmentation ideal, but multiplication to `R/2` sends the diagonal
/// submodule into `(X^2, Y^2, Z^2)`, which misses `XYZ`.
pub fn squarezero_counterexample_check() -> SquareZeroReport {
    let f2 = PrimeField::new(2).unwrap();
    let ring = PolyRing::new(f2, &["X", "Y", "Z"]);
    let names = ring.var_names().to_vec();
    let squares = [mono([2, 0, 0]), mono([0, 2, 0]), mono([0, 0, 2])];
    let monomials: Vec<Monomial> = (0..3u32)
        .flat_map(|a| (0..3u32).flat_map(move |b| (0..3u32).map(move |c| [a, b, c])))
        .filter(|e| (1..=2).contains(&(e[0] + e[1] + e[2])))
        .map(mono)
        .collect();
    // (a) r (a (x) a) maps to r a^2, so checking a^2 covers the ideal.
    let mut diagonal_failure = None;
    let subsets = 1usize << monomials.len();
    for mask in 1..subsets {
        let a = ring.from_terms(
            monomials
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, m)| (m.0.clone(), 1)),
        );
        let sq = ring.square(&a);
        if !sq
            .terms()
            .all(|(m, _)| monomial_ideal_membership(m, &squares))
        {
            diagonal_failure = Some(ring.render(&a));
            break;
        }
    }
    // (b)
    let xyz_member = monomial_ideal_membership(&mono([1, 1, 1]), &squares);
    // (c) XY (x) Z -> X (x) YZ -> XZ (x) Y -> Z (x) XY.
    let start = PureTensor {
        left: mono([1, 1, 0]),
        right: mono([0, 0, 1]),
    };
    let moves = [
        Move::LeftToRight(mono([0, 1, 0])),
        Move::RightToLeft(mono([0, 0, 1])),
        Move::LeftToRight(mono([1, 0, 0])),
    ];
    let mut chain = vec![start.render(&names)];
    let mut state = Some(start.clone());
    for mv in &moves {
        state = state.and_then(|s| s.apply(mv));
        if let Some(s) = &state {
            chain.push(s.render(&names));
        }
    }
    let chain_valid = state == Some(start.flip());
    SquareZeroReport {
        sampled: subsets - 1,
        diagonal_failure,
        xyz_member,
        chain,
        chain_valid,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_examples() {
        let gens = [mono([2, 0, 0]), mono([0, 2, 0]), mono([0, 0, 2])];
        assert!(!monomial_ideal_membership(&mono([1, 1, 1]), &gens));
        assert!(monomial_ideal_membership(&mono([2, 1, 0]), &gens));
    }

    #[test]
    fn square_of_x_plus_yz() {
        let ring = PolyRing::new(PrimeField::new(2).unwrap(), &["X", "Y", "Z"]);
        let f = ring.add(&ring.var(0), &ring.mul(&ring.var(1), &ring.var(2)));
        let sq = ring.square(&f);
        assert_eq!(
            ring.render(&sq),
            ring.render(&ring.from_terms([(vec![2, 0, 0], 1), (vec![0, 2, 2], 1)]))
        );
    }

    #[test]
    fn all_three_parts_pass() {
        let r = squarezero_counterexample_check();
        assert!(r.passes(), "{r:?}");
        assert_eq!(r.sampled, 511);
        assert_eq!(r.chain.len(), 4);
    }

    #[test]
    fn moves_keep_factors_in_the_ideal() {
        let t = PureTensor {
            left: mono([1, 0, 0]),
            right: mono([0, 0, 1]),
        };
        assert!(t.apply(&Move::LeftToRight(mono([1, 0, 0]))).is_none());
    }
}
