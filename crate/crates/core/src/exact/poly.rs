use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{join_signed, term_body};
use crate::error::{Error, Result};
use crate::ring::{Field, Ring};

/// An exponent vector. Ordered graded-lexicographically: total degree first,
/// then lexicographically with the first declared variable most significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[i] = e;
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn render(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(names)
            .filter(|(e, _)| **e > 0)
            .map(|(e, n)| {
                if *e == 1 {
                    n.clone()
                } else {
                    format!("{n}^{e}")
                }
            })
            .collect();
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A multivariate polynomial: a map from monomials to nonzero coefficients.
///
/// Variable names live in the owning [`PolyRing`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly<E> {
    terms: BTreeMap<Monomial, E>,
}

impl<E: Clone> MultiPoly<E> {
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &E)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The leading (largest) monomial and its coefficient.
    pub fn leading(&self) -> Option<(&Monomial, &E)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&E> {
        self.terms.get(m)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Indices of variables occurring with positive exponent.
    pub fn variables_used(&self) -> Vec<usize> {
        let n = self.terms.keys().next().map_or(0, |m| m.0.len());
        (0..n).filter(|&i| self.degree_in(i) > 0).collect()
    }
}

/// The polynomial ring `K[x_1, ..., x_n]` over a field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing<F: Field> {
    base: F,
    vars: Vec<String>,
}

/// Rings with formal partial derivatives in named variables.
pub trait PartialDifferentiable: Ring {
    fn num_vars(&self) -> usize;
    fn var_index(&self, name: &str) -> Result<usize>;
    fn partial(&self, a: &Self::Elem, var: usize) -> Self::Elem;
    fn variable(&self, var: usize) -> Self::Elem;
}

impl<F: Field> PolyRing<F> {
    pub fn new(base: F, vars: &[&str]) -> Self {
        PolyRing {
            base,
            vars: vars.iter().map(|v| String::from(*v)).collect(),
        }
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    fn insert(&self, terms: &mut BTreeMap<Monomial, F::Elem>, m: Monomial, c: F::Elem) {
        if self.base.is_zero(&c) {
            return;
        }
        match terms.get_mut(&m) {
            Some(existing) => {
                let s = self.base.add(existing, &c);
                if self.base.is_zero(&s) {
                    terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                terms.insert(m, c);
            }
        }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// repeated monomials and dropping zeros.
    pub fn from_terms<I>(&self, terms: I) -> MultiPoly<F::Elem>
    where
        I: IntoIterator<Item = (Vec<u32>, F::Elem)>,
    {
        let mut map = BTreeMap::new();
        for (exps, c) in terms {
            assert_eq!(exps.len(), self.nvars(), "exponent vector length");
            self.insert(&mut map, Monomial(exps), c);
        }
        MultiPoly { terms: map }
    }

    pub fn constant(&self, c: F::Elem) -> MultiPoly<F::Elem> {
        self.from_terms([(vec![0; self.nvars()], c)])
    }

    pub fn monomial(&self, m: Monomial, c: F::Elem) -> MultiPoly<F::Elem> {
        self.from_terms([(m.0, c)])
    }

    pub fn var(&self, i: usize) -> MultiPoly<F::Elem> {
        self.monomial(Monomial::var(self.nvars(), i, 1), self.base.one())
    }

    pub fn var_named(&self, name: &str) -> Result<MultiPoly<F::Elem>> {
        Ok(self.var(self.var_index(name)?))
    }

    /// Multiplies every term by a scalar.
    pub fn scale(&self, c: &F::Elem, a: &MultiPoly<F::Elem>) -> MultiPoly<F::Elem> {
        self.from_terms(a.terms().map(|(m, x)| (m.0.clone(), self.base.mul(c, x))))
    }

    pub fn mul_monomial(&self, a: &MultiPoly<F::Elem>, m: &Monomial) -> MultiPoly<F::Elem> {
        MultiPoly {
            terms: a.terms().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    /// Formal partial derivative; coefficients are computed in the base field,
    /// so `p * x^(p-1)` vanishes in characteristic `p`.
    pub fn derivative(&self, a: &MultiPoly<F::Elem>, var: usize) -> MultiPoly<F::Elem> {
        self.from_terms(a.terms().filter(|(m, _)| m.0[var] > 0).map(|(m, c)| {
            let mut e = m.0.clone();
            let k = e[var];
            e[var] -= 1;
            (e, self.base.mul(&self.base.from_i64(k as i64), c))
        }))
    }

    pub fn derivative_by_name(
        &self,
        a: &MultiPoly<F::Elem>,
        var: &str,
    ) -> Result<MultiPoly<F::Elem>> {
        Ok(self.derivative(a, self.var_index(var)?))
    }

    /// Coefficient of `x_var^k`, as a polynomial free of `x_var`.
    pub fn coeff_in(&self, a: &MultiPoly<F::Elem>, var: usize, k: u32) -> MultiPoly<F::Elem> {
        self.from_terms(a.terms().filter(|(m, _)| m.0[var] == k).map(|(m, c)| {
            let mut e = m.0.clone();
            e[var] = 0;
            (e, c.clone())
        }))
    }

    /// Coefficients of a polynomial in one variable, lowest degree first.
    /// Panics if other variables occur.
    pub fn univariate_coefficients(&self, a: &MultiPoly<F::Elem>, var: usize) -> Vec<F::Elem> {
        let mut out = vec![self.base.zero(); a.degree_in(var) as usize + 1];
        for (m, c) in a.terms() {
            assert!(
                m.0.iter().enumerate().all(|(i, &e)| i == var || e == 0),
                "polynomial is not univariate"
            );
            out[m.0[var] as usize] = c.clone();
        }
        out
    }

    pub fn leading_coeff(&self, a: &MultiPoly<F::Elem>) -> F::Elem {
        a.leading()
            .map_or_else(|| self.base.zero(), |(_, c)| c.clone())
    }

    /// Scales to leading coefficient one (zero stays zero).
    pub fn monic(&self, a: &MultiPoly<F::Elem>) -> MultiPoly<F::Elem> {
        match a.leading() {
            None => a.clone(),
            Some((_, c)) => {
                let inv = self.base.inv(c).expect("nonzero leading coefficient");
                self.scale(&inv, a)
            }
        }
    }

    /// Exact division: `Some(q)` with `a = q * b`, or `None` if `b` does not
    /// divide `a`.
    pub fn div_exact(
        &self,
        a: &MultiPoly<F::Elem>,
        b: &MultiPoly<F::Elem>,
    ) -> Option<MultiPoly<F::Elem>> {
        let (lm_b, lc_b) = b.leading()?;
        let lc_b_inv = self.base.inv(lc_b)?;
        let mut r = a.clone();
        let mut q = MultiPoly::zero();
        while let Some((lm_r, lc_r)) = r.leading() {
            if !lm_b.divides(lm_r) {
                return None;
            }
            let t = self.monomial(lm_b.quotient_of(lm_r), self.base.mul(lc_r, &lc_b_inv));
            r = self.sub(&r, &self.mul(&t, b));
            q = self.add(&q, &t);
        }
        Some(q)
    }

    /// Pseudo-remainder of `a` by `b` viewed as polynomials in `var`.
    fn pseudo_rem(
        &self,
        a: &MultiPoly<F::Elem>,
        b: &MultiPoly<F::Elem>,
        var: usize,
    ) -> MultiPoly<F::Elem> {
        let db = b.degree_in(var);
        let lb = self.coeff_in(b, var, db);
        let mut r = a.clone();
        while !r.is_zero() && r.degree_in(var) >= db {
            let dr = r.degree_in(var);
            let lr = self.coeff_in(&r, var, dr);
            let shift = Monomial::var(self.nvars(), var, dr - db);
            let t = self.mul_monomial(&self.mul(&lr, b), &shift);
            r = self.sub(&self.mul(&lb, &r), &t);
        }
        r
    }

    /// Gcd of the coefficients of `a` as a polynomial in `var`.
    fn content_in(&self, a: &MultiPoly<F::Elem>, var: usize) -> MultiPoly<F::Elem> {
        (0..=a.degree_in(var))
            .map(|k| self.coeff_in(a, var, k))
            .filter(|c| !c.is_zero())
            .fold(MultiPoly::zero(), |g, c| self.gcd(&g, &c))
    }

    /// Monic greatest common divisor, by recursive primitive remainder
    /// sequences in the highest-indexed variable that occurs.
    pub fn gcd(&self, a: &MultiPoly<F::Elem>, b: &MultiPoly<F::Elem>) -> MultiPoly<F::Elem> {
        if a.is_zero() {
            return self.monic(b);
        }
        if b.is_zero() {
            return self.monic(a);
        }
        let Some(var) = (0..self.nvars())
            .rev()
            .find(|&i| a.degree_in(i) > 0 || b.degree_in(i) > 0)
        else {
            return self.one();
        };
        if a.degree_in(var) == 0 {
            return self.gcd(a, &self.content_in(b, var));
        }
        if b.degree_in(var) == 0 {
            return self.gcd(&self.content_in(a, var), b);
        }
        let ca = self.content_in(a, var);
        let cb = self.content_in(b, var);
        let content = self.gcd(&ca, &cb);
        let mut pa = self.div_exact(a, &ca).expect("content divides");
        let mut pb = self.div_exact(b, &cb).expect("content divides");
        if pa.degree_in(var) < pb.degree_in(var) {
            core::mem::swap(&mut pa, &mut pb);
        }
        let primitive = loop {
            let r = self.pseudo_rem(&pa, &pb, var);
            if r.is_zero() {
                break pb;
            }
            if r.degree_in(var) == 0 {
                break self.one();
            }
            let cr = self.content_in(&r, var);
            pa = pb;
            pb = self.div_exact(&r, &cr).expect("content divides");
        };
        let cp = self.content_in(&primitive, var);
        let primitive = self.div_exact(&primitive, &cp).expect("content divides");
        self.monic(&self.mul(&content, &primitive))
    }

    /// Evaluates `a` in another ring, given images of the coefficients and of
    /// the variables.
    pub fn evaluate<R: Ring>(
        &self,
        a: &MultiPoly<F::Elem>,
        target: &R,
        embed: impl Fn(&F::Elem) -> R::Elem,
        values: &[R::Elem],
    ) -> R::Elem {
        assert_eq!(values.len(), self.nvars(), "one value per variable");
        let mut acc = target.zero();
        for (m, c) in a.terms() {
            let mut t = embed(c);
            for (v, &e) in values.iter().zip(&m.0) {
                if e > 0 {
                    t = target.mul(&t, &target.pow(v, e as u64));
                }
            }
            acc = target.add(&acc, &t);
        }
        acc
    }
}

impl<F: Field> Ring for PolyRing<F> {
    type Elem = MultiPoly<F::Elem>;

    fn zero(&self) -> Self::Elem {
        MultiPoly::zero()
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut terms = a.terms.clone();
        for (m, c) in b.terms() {
            self.insert(&mut terms, m.clone(), c.clone());
        }
        MultiPoly { terms }
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        MultiPoly {
            terms: a
                .terms()
                .map(|(m, c)| (m.clone(), self.base.neg(c)))
                .collect(),
        }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut terms = BTreeMap::new();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                self.insert(&mut terms, ma.mul(mb), self.base.mul(ca, cb));
            }
        }
        MultiPoly { terms }
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.constant(self.base.from_i64(n))
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn render(&self, a: &Self::Elem) -> String {
        let terms: Vec<_> = a
            .terms()
            .rev()
            .map(|(m, c)| term_body(&self.base.render(c), &m.render(&self.vars)))
            .collect();
        join_signed(&terms)
    }
}

impl<F: Field> PartialDifferentiable for PolyRing<F> {
    fn num_vars(&self) -> usize {
        self.nvars()
    }
    fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(String::from(name)))
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

    fn qt() -> PolyRing<Rationals> {
        PolyRing::new(Rationals, &["T"])
    }

    #[test]
    fn power_rule_over_q() {
        let r = qt();
        let t = r.var(0);
        let t3 = r.pow(&t, 3);
        let d = r.derivative_by_name(&t3, "T").unwrap();
        assert_eq!(d, r.scale(&r.base().from_i64(3), &r.pow(&t, 2)));
        assert_eq!(r.render(&d), "3*T^2");
    }

    #[test]
    fn char_two_kills_coefficient() {
        let r = PolyRing::new(PrimeField::new(2).unwrap(), &["X", "Y"]);
        let (x, y) = (r.var(0), r.var(1));
        let x2y = r.mul(&r.mul(&x, &x), &y);
        assert!(r.derivative(&x2y, 0).is_zero());
        let xy = r.mul(&x, &y);
        let mixed = r.derivative(&r.derivative(&xy, 0), 1);
        assert_eq!(mixed, r.one());
    }

    #[test]
    fn unknown_variable() {
        let r = qt();
        assert_eq!(
            r.derivative_by_name(&r.one(), "U"),
            Err(Error::UnknownVariable(String::from("U")))
        );
    }

    #[test]
    fn rendering_is_graded_lex_descending() {
        let r = PolyRing::new(Rationals, &["X", "Y"]);
        let q = Rationals;
        let p = r.from_terms([
            (vec![0, 0], q.from_i64(2)),
            (vec![0, 2], q.from_i64(1)),
            (vec![1, 1], q.from_i64(-1)),
            (vec![2, 0], q.frac(1, 3)),
            (vec![1, 0], q.from_i64(5)),
        ]);
        assert_eq!(r.render(&p), "1/3*X^2 - X*Y + Y^2 + 5*X + 2");
        assert_eq!(r.render(&r.zero()), "0");
    }

    #[test]
    fn gcd_univariate_and_bivariate() {
        let r = PolyRing::new(Rationals, &["X", "Y"]);
        let (x, y) = (r.var(0), r.var(1));
        let one = r.one();
        // (X + Y)(X - 1) and (X + Y)(Y + 2)
        let f = r.add(&x, &y);
        let a = r.mul(&f, &r.sub(&x, &one));
        let b = r.mul(&f, &r.add(&y, &r.from_i64(2)));
        assert_eq!(r.gcd(&a, &b), f);
        // coprime
        assert_eq!(r.gcd(&r.sub(&x, &one), &y), one);
        // scaling out constants
        let two_f = r.scale(&Rationals.from_i64(2), &f);
        assert_eq!(r.gcd(&two_f, &r.mul(&f, &f)), f);
    }

    #[test]
    fn exact_division() {
        let r = PolyRing::new(PrimeField::new(3).unwrap(), &["X", "Y"]);
        let (x, y) = (r.var(0), r.var(1));
        let a = r.mul(&r.add(&x, &y), &r.sub(&x, &y));
        assert_eq!(r.div_exact(&a, &r.add(&x, &y)), Some(r.sub(&x, &y)));
        assert_eq!(r.div_exact(&a, &x), None);
    }
}
