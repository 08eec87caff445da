use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::poly::{MultiPoly, PolyRing};
use super::upoly;
use super::{join_signed, term_body};
use crate::error::{Error, Result};
use crate::ring::{Field, FiniteRing, Ring};

/// How irreducibility of an extension modulus was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Irreducibility {
    /// Degree one.
    Linear,
    /// Degree two or three and the base field has no root.
    RootSearch,
    /// Accepted on the caller's word: degree above three, or a base field
    /// that cannot be searched for roots.
    CallerAsserted,
}

/// A simple extension `K[x]/(f)` of a field `K` by a monic irreducible `f`.
///
/// Elements are coordinate vectors of length `deg f` in the power basis
/// `1, x, ..., x^(d-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionField<F: Field> {
    base: F,
    /// Coefficients of `f`, lowest degree first; the last entry is one.
    modulus: Vec<F::Elem>,
    generator: String,
    irreducibility: Irreducibility,
}

impl<F: Field> ExtensionField<F> {
    /// Builds `base[x]/(modulus)` from coefficients listed lowest degree first.
    pub fn new(base: F, modulus: Vec<F::Elem>, generator: &str) -> Result<Self> {
        let modulus = upoly::trim(&base, modulus);
        let degree = modulus.len().saturating_sub(1);
        let shown = render_upoly(&base, &modulus, generator);
        if degree == 0 {
            return Err(Error::InvalidModulus(format!("{shown} has degree zero")));
        }
        if !base.is_one(modulus.last().unwrap()) {
            return Err(Error::InvalidModulus(format!("{shown} is not monic")));
        }
        let irreducibility = if degree == 1 {
            Irreducibility::Linear
        } else if degree <= 3 {
            match base.find_root(&modulus) {
                Some(Some(root)) => {
                    return Err(Error::ReducibleModulus(format!(
                        "{shown} vanishes at {}",
                        base.render(&root)
                    )))
                }
                Some(None) => Irreducibility::RootSearch,
                None => Irreducibility::CallerAsserted,
            }
        } else {
            Irreducibility::CallerAsserted
        };
        Ok(ExtensionField {
            base,
            modulus,
            generator: String::from(generator),
            irreducibility,
        })
    }

    /// Builds the extension from a univariate polynomial in `ring`.
    pub fn from_poly(ring: &PolyRing<F>, modulus: &MultiPoly<F::Elem>) -> Result<Self> {
        let vars = modulus.variables_used();
        let var = match vars.as_slice() {
            [v] => *v,
            [] => 0,
            _ => {
                return Err(Error::InvalidModulus(format!(
                    "{} is not univariate",
                    ring.render(modulus)
                )))
            }
        };
        let coeffs = ring.univariate_coefficients(modulus, var);
        Self::new(ring.base().clone(), coeffs, &ring.var_names()[var])
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    pub fn ext_degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[F::Elem] {
        &self.modulus
    }

    pub fn irreducibility(&self) -> Irreducibility {
        self.irreducibility
    }

    pub fn generator_name(&self) -> &str {
        &self.generator
    }

    /// The distinguished generator `x`.
    pub fn generator(&self) -> Vec<F::Elem> {
        let mut v = vec![self.base.zero(); self.ext_degree()];
        if self.ext_degree() == 1 {
            // x = -f_0 when the modulus is linear.
            v[0] = self.base.neg(&self.modulus[0]);
        } else {
            v[1] = self.base.one();
        }
        v
    }

    /// Embeds a base-field element.
    pub fn embed(&self, c: &F::Elem) -> Vec<F::Elem> {
        let mut v = vec![self.base.zero(); self.ext_degree()];
        v[0] = c.clone();
        v
    }

    fn reduce(&self, poly: Vec<F::Elem>) -> Vec<F::Elem> {
        let (_, mut r) = upoly::divrem(&self.base, &poly, &self.modulus);
        r.resize(self.ext_degree(), self.base.zero());
        r
    }
}

fn render_upoly<F: Field>(base: &F, coeffs: &[F::Elem], var: &str) -> String {
    let mut terms = Vec::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if base.is_zero(c) {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => String::from(var),
            _ => format!("{var}^{k}"),
        };
        terms.push(term_body(&base.render(c), &mono));
    }
    join_signed(&terms)
}

impl<F: Field> Ring for ExtensionField<F> {
    type Elem = Vec<F::Elem>;

    fn zero(&self) -> Self::Elem {
        vec![self.base.zero(); self.ext_degree()]
    }
    fn one(&self) -> Self::Elem {
        self.embed(&self.base.one())
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.base.neg(x)).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.reduce(upoly::mul(&self.base, a, b))
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.embed(&self.base.from_i64(n))
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn render(&self, a: &Self::Elem) -> String {
        render_upoly(&self.base, a, &self.generator)
    }
}

impl<F: Field> Field for ExtensionField<F> {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(a) {
            return None;
        }
        let (g, s) = upoly::gcd_with_cofactor(&self.base, a, &self.modulus);
        // g == 1 unless the modulus was reducible (caller-asserted case).
        if g.len() != 1 {
            return None;
        }
        Some(self.reduce(s))
    }
    fn degree(&self) -> crate::ring::Degree {
        self.base
            .degree()
            .times(crate::ring::Degree::Finite(self.ext_degree()))
    }
    fn description(&self) -> String {
        format!(
            "{}[{}]/({})",
            self.base.description(),
            self.generator,
            render_upoly(&self.base, &self.modulus, &self.generator)
        )
    }
}

impl<F: Field + FiniteRing> FiniteRing for ExtensionField<F> {
    fn order(&self) -> u64 {
        self.base.order().pow(self.ext_degree() as u32)
    }
    fn element(&self, mut index: u64) -> Self::Elem {
        let q = self.base.order();
        (0..self.ext_degree())
            .map(|_| {
                let e = self.base.element(index % q);
                index /= q;
                e
            })
            .collect()
    }
    fn index_of(&self, a: &Self::Elem) -> u64 {
        let q = self.base.order();
        a.iter()
            .rev()
            .fold(0, |acc, c| acc * q + self.base.index_of(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{PrimeField, Rationals};

    #[test]
    fn f4_generator_squares_to_x_plus_one() {
        let f2 = PrimeField::new(2).unwrap();
        let f4 = ExtensionField::new(f2, vec![1, 1, 1], "x").unwrap();
        let x = f4.generator();
        assert_eq!(f4.mul(&x, &x), vec![1, 1]);
        assert_eq!(f4.render(&f4.mul(&x, &x)), "x + 1");
        assert_eq!(f4.irreducibility(), Irreducibility::RootSearch);
    }

    #[test]
    fn gaussian_i_squared() {
        let q = Rationals;
        let qi = ExtensionField::new(q, vec![q.one(), q.zero(), q.one()], "i").unwrap();
        let i = qi.generator();
        assert_eq!(qi.mul(&i, &i), qi.from_i64(-1));
        assert_eq!(qi.render(&qi.mul(&i, &i)), "-1");
    }

    #[test]
    fn reducible_modulus_rejected() {
        let f2 = PrimeField::new(2).unwrap();
        // x^2 + 1 = (x + 1)^2 over F_2.
        let err = ExtensionField::new(f2, vec![1, 0, 1], "x").unwrap_err();
        assert!(matches!(err, Error::ReducibleModulus(_)));
        let err = ExtensionField::new(f2, vec![1, 1, 0], "x");
        assert!(err.is_ok(), "linear after trimming");
    }

    #[test]
    fn non_monic_rejected() {
        let f3 = PrimeField::new(3).unwrap();
        assert!(matches!(
            ExtensionField::new(f3, vec![1, 0, 2], "x"),
            Err(Error::InvalidModulus(_))
        ));
    }

    #[test]
    fn x_to_the_fourth_in_f9_by_repeated_squaring() {
        // Oracle: square x twice by hand. x^2 = -1 = 2, (2)^2 = 4 = 1.
        let f3 = PrimeField::new(3).unwrap();
        let f9 = ExtensionField::new(f3, vec![1, 0, 1], "x").unwrap();
        let x = f9.generator();
        let x2 = f9.mul(&x, &x);
        assert_eq!(x2, vec![2, 0]);
        let x4 = f9.mul(&x2, &x2);
        assert_eq!(x4, vec![1, 0]);
        assert_eq!(f9.pow(&x, 4), f9.one());
    }

    #[test]
    fn inverses_in_f8() {
        let f2 = PrimeField::new(2).unwrap();
        let f8 = ExtensionField::new(f2, vec![1, 1, 0, 1], "x").unwrap();
        for a in f8.elements().into_iter().skip(1) {
            let b = f8.inv(&a).unwrap();
            assert_eq!(f8.mul(&a, &b), f8.one());
        }
        assert_eq!(f8.order(), 8);
    }
}
