use alloc::format;
use alloc::string::String;

use super::poly::{MultiPoly, PartialDifferentiable, PolyRing};
use crate::error::Result;
use crate::ring::{Degree, Field, Ring};

/// A rational function `num / den`.
///
/// Canonical form: `gcd(num, den) = 1`, `den` monic, and zero is `0 / 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc<E> {
    num: MultiPoly<E>,
    den: MultiPoly<E>,
}

impl<E: Clone> RatFunc<E> {
    pub fn numerator(&self) -> &MultiPoly<E> {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly<E> {
        &self.den
    }
}

/// The field of fractions `K(x_1, ..., x_n)` of a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFuncField<F: Field> {
    ring: PolyRing<F>,
}

impl<F: Field> RatFuncField<F> {
    pub fn new(base: F, vars: &[&str]) -> Self {
        RatFuncField {
            ring: PolyRing::new(base, vars),
        }
    }

    pub fn poly_ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn base(&self) -> &F {
        self.ring.base()
    }

    /// The canonical form of `num / den`; `None` if `den` is zero.
    pub fn fraction(
        &self,
        num: MultiPoly<F::Elem>,
        den: MultiPoly<F::Elem>,
    ) -> Option<RatFunc<F::Elem>> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(self.zero());
        }
        let r = &self.ring;
        let g = r.gcd(&num, &den);
        let num = r.div_exact(&num, &g).expect("gcd divides");
        let den = r.div_exact(&den, &g).expect("gcd divides");
        let lc_inv = self
            .base()
            .inv(&r.leading_coeff(&den))
            .expect("nonzero leading coefficient");
        Some(RatFunc {
            num: r.scale(&lc_inv, &num),
            den: r.scale(&lc_inv, &den),
        })
    }

    pub fn from_poly(&self, p: MultiPoly<F::Elem>) -> RatFunc<F::Elem> {
        RatFunc {
            num: p,
            den: self.ring.one(),
        }
    }

    pub fn var(&self, i: usize) -> RatFunc<F::Elem> {
        self.from_poly(self.ring.var(i))
    }

    pub fn constant(&self, c: F::Elem) -> RatFunc<F::Elem> {
        self.from_poly(self.ring.constant(c))
    }

    /// Quotient rule: `(n/d)' = (n' d - n d') / d^2`.
    pub fn derivative(&self, a: &RatFunc<F::Elem>, var: usize) -> RatFunc<F::Elem> {
        let r = &self.ring;
        let num = r.sub(
            &r.mul(&r.derivative(&a.num, var), &a.den),
            &r.mul(&a.num, &r.derivative(&a.den, var)),
        );
        self.fraction(num, r.square(&a.den))
            .expect("nonzero denominator")
    }
}

impl<F: Field> Ring for RatFuncField<F> {
    type Elem = RatFunc<F::Elem>;

    fn zero(&self) -> Self::Elem {
        self.from_poly(self.ring.zero())
    }
    fn one(&self) -> Self::Elem {
        self.from_poly(self.ring.one())
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.ring;
        if a.den == b.den {
            return self.fraction(r.add(&a.num, &b.num), a.den.clone()).unwrap();
        }
        let num = r.add(&r.mul(&a.num, &b.den), &r.mul(&b.num, &a.den));
        self.fraction(num, r.mul(&a.den, &b.den)).unwrap()
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        RatFunc {
            num: self.ring.neg(&a.num),
            den: a.den.clone(),
        }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.ring;
        if a.num.is_zero() || b.num.is_zero() {
            return self.zero();
        }
        self.fraction(r.mul(&a.num, &b.num), r.mul(&a.den, &b.den))
            .unwrap()
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.num.is_zero()
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_poly(self.ring.from_i64(n))
    }
    fn characteristic(&self) -> u64 {
        self.ring.characteristic()
    }
    fn render(&self, a: &Self::Elem) -> String {
        let num = self.ring.render(&a.num);
        if self.ring.is_one(&a.den) {
            return num;
        }
        let num = if a.num.num_terms() > 1 {
            format!("({num})")
        } else {
            num
        };
        let den = self.ring.render(&a.den);
        if den.contains([' ', '*']) {
            format!("{num}/({den})")
        } else {
            format!("{num}/{den}")
        }
    }
}

impl<F: Field> Field for RatFuncField<F> {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.fraction(a.den.clone(), a.num.clone())
    }
    fn degree(&self) -> Degree {
        Degree::Infinite
    }
    fn description(&self) -> String {
        format!(
            "{}({})",
            self.base().description(),
            self.ring.var_names().join(", ")
        )
    }
}

impl<F: Field> PartialDifferentiable for RatFuncField<F> {
    fn num_vars(&self) -> usize {
        self.ring.nvars()
    }
    fn var_index(&self, name: &str) -> Result<usize> {
        self.ring.var_index(name)
    }
    fn partial(&self, a: &Self::Elem, var: usize) -> Self::Elem {
        self.derivative(a, var)
    }
    fn variable(&self, var: usize) -> Self::Elem {
        self.var(var)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{PrimeField, Rationals};

    #[test]
    fn cancels_common_factor() {
        let k = RatFuncField::new(Rationals, &["T"]);
        let r = k.poly_ring();
        let t = r.var(0);
        let one = r.one();
        // (T^2 - 1) / (2T - 2) = (T + 1) / 2 = 1/2*T + 1/2
        let num = r.sub(&r.mul(&t, &t), &one);
        let den = r.scale(&Rationals.from_i64(2), &r.sub(&t, &one));
        let f = k.fraction(num, den).unwrap();
        assert!(r.is_one(f.denominator()));
        assert_eq!(k.render(&f), "1/2*T + 1/2");
    }

    #[test]
    fn inverse_and_quotient_rule() {
        let k = RatFuncField::new(PrimeField::new(2).unwrap(), &["T"]);
        let t = k.var(0);
        let inv = k.inv(&t).unwrap();
        assert_eq!(k.mul(&t, &inv), k.one());
        assert_eq!(k.render(&inv), "1/T");
        // (1/T)' = -1/T^2 = 1/T^2 in characteristic two.
        let d = k.derivative(&inv, 0);
        assert_eq!(k.render(&d), "1/T^2");
        assert!(k.inv(&k.zero()).is_none());
    }

    #[test]
    fn bivariate_sum() {
        let k = RatFuncField::new(Rationals, &["X", "Y"]);
        let (x, y) = (k.var(0), k.var(1));
        // 1/X + 1/Y = (X + Y)/(X*Y)
        let s = k.add(&k.inv(&x).unwrap(), &k.inv(&y).unwrap());
        assert_eq!(k.render(&s), "(X + Y)/(X*Y)");
        assert_eq!(k.mul(&s, &k.mul(&x, &y)), k.add(&x, &y));
    }
}
