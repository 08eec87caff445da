use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::join_signed;
use super::poly::PartialDifferentiable;
use super::ratfunc::{RatFunc, RatFuncField};
use crate::ring::{Field, Ring};

/// Components indexed by subsets of the generators, encoded as bitmasks.
pub type ExteriorElement<E> = Vec<E>;

/// `R[U_1, ..., U_n] / (U_i^2 - c_i)`, commutative with no signs.
///
/// With every `c_i = 0` this is the exterior algebra without signs; with
/// `n = 1` it is the ring of dual numbers. An element stores `2^n`
/// components; component `mask` is the coefficient of `prod_{i in mask} U_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiquadraticAlgebra<R: Ring> {
    base: R,
    squares: Vec<R::Elem>,
    names: Vec<String>,
}

impl<R: Ring> MultiquadraticAlgebra<R> {
    pub fn new(base: R, squares: Vec<R::Elem>, names: &[&str]) -> Self {
        assert_eq!(squares.len(), names.len(), "one name per generator");
        assert!(squares.len() < 16, "too many generators");
        MultiquadraticAlgebra {
            base,
            squares,
            names: names.iter().map(|s| String::from(*s)).collect(),
        }
    }

    /// Square-zero generators `S_1, ..., S_n`.
    pub fn exterior(base: R, n: usize) -> Self {
        let names: Vec<String> = (1..=n).map(|i| format!("S{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let zero = base.zero();
        Self::new(base, vec![zero; n], &refs)
    }

    /// Dual numbers `R[S]/(S^2)`.
    pub fn dual(base: R) -> Self {
        let zero = base.zero();
        Self::new(base, vec![zero], &["S"])
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn num_generators(&self) -> usize {
        self.squares.len()
    }

    /// Rank as a free module over the base.
    pub fn rank(&self) -> usize {
        1 << self.squares.len()
    }

    pub fn embed(&self, c: &R::Elem) -> ExteriorElement<R::Elem> {
        let mut v = vec![self.base.zero(); self.rank()];
        v[0] = c.clone();
        v
    }

    pub fn basis_element(&self, mask: usize) -> ExteriorElement<R::Elem> {
        let mut v = vec![self.base.zero(); self.rank()];
        v[mask] = self.base.one();
        v
    }

    pub fn generator(&self, i: usize) -> ExteriorElement<R::Elem> {
        self.basis_element(1 << i)
    }

    /// Multiplies every component by a base element.
    pub fn scale(&self, c: &R::Elem, a: &ExteriorElement<R::Elem>) -> ExteriorElement<R::Elem> {
        a.iter().map(|x| self.base.mul(c, x)).collect()
    }

    /// Flips the sign of every component involving generator `i`.
    fn conjugate(&self, a: &ExteriorElement<R::Elem>, i: usize) -> ExteriorElement<R::Elem> {
        a.iter()
            .enumerate()
            .map(|(m, x)| {
                if m & (1 << i) != 0 {
                    self.base.neg(x)
                } else {
                    x.clone()
                }
            })
            .collect()
    }

    fn monomial_name(&self, mask: usize) -> String {
        let parts: Vec<&str> = (0..self.num_generators())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| self.names[i].as_str())
            .collect();
        parts.join("*")
    }
}

impl<F: Field> MultiquadraticAlgebra<F> {
    /// Inverse via successive conjugation: `a * prod conj_i` lies in the base.
    /// `None` when that norm vanishes.
    pub fn inverse(&self, a: &ExteriorElement<F::Elem>) -> Option<ExteriorElement<F::Elem>> {
        let mut cofactor = self.one();
        let mut norm = a.clone();
        for i in 0..self.num_generators() {
            let c = self.conjugate(&norm, i);
            cofactor = self.mul(&cofactor, &c);
            norm = self.mul(&norm, &c);
        }
        debug_assert!(norm[1..].iter().all(|x| self.base.is_zero(x)));
        let inv = self.base.inv(&norm[0])?;
        Some(self.scale(&inv, &cofactor))
    }
}

impl<R: Ring> Ring for MultiquadraticAlgebra<R> {
    type Elem = ExteriorElement<R::Elem>;

    fn zero(&self) -> Self::Elem {
        vec![self.base.zero(); self.rank()]
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
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if self.base.is_zero(y) {
                    continue;
                }
                let mut c = self.base.mul(x, y);
                let common = i & j;
                for (k, sq) in self.squares.iter().enumerate() {
                    if common & (1 << k) != 0 {
                        c = self.base.mul(&c, sq);
                    }
                }
                out[i ^ j] = self.base.add(&out[i ^ j], &c);
            }
        }
        out
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.embed(&self.base.from_i64(n))
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn render(&self, a: &Self::Elem) -> String {
        let mut masks: Vec<usize> = (0..self.rank()).collect();
        masks.sort_by_key(|m| m.count_ones());
        let terms: Vec<(bool, String)> = masks
            .into_iter()
            .filter(|&m| !self.base.is_zero(&a[m]))
            .map(|m| {
                let c = self.base.render(&a[m]);
                let compound = c.contains(' ');
                let (neg, c) = match c.strip_prefix('-') {
                    Some(rest) if !compound => (true, String::from(rest)),
                    _ => (false, c),
                };
                let c = if compound { format!("({c})") } else { c };
                let body = match (m, c.as_str()) {
                    (0, _) => c,
                    (_, "1") => self.monomial_name(m),
                    _ => format!("{c}*{}", self.monomial_name(m)),
                };
                (neg, body)
            })
            .collect();
        join_signed(&terms)
    }
}

/// First-order Taylor data `(F, dF/dx_var)`, the value and slope of
/// `F(x + S)` in `R[S]/(S^2)`.
pub fn dual_shift<R: PartialDifferentiable>(
    ring: &R,
    f: &R::Elem,
    var: usize,
) -> (R::Elem, R::Elem) {
    (f.clone(), ring.partial(f, var))
}

/// `F(x + S)` computed by substitution into the dual numbers over the
/// rational function field, without differentiating.
pub fn shifted_value<F: Field>(
    field: &RatFuncField<F>,
    f: &RatFunc<F::Elem>,
    var: usize,
) -> (RatFunc<F::Elem>, RatFunc<F::Elem>) {
    let dual = MultiquadraticAlgebra::dual(field.clone());
    let polys = field.poly_ring();
    let values: Vec<_> = (0..polys.nvars())
        .map(|i| {
            let x = dual.embed(&field.var(i));
            if i == var {
                dual.add(&x, &dual.generator(0))
            } else {
                x
            }
        })
        .collect();
    let embed = |c: &F::Elem| dual.embed(&field.constant(c.clone()));
    let num = polys.evaluate(f.numerator(), &dual, embed, &values);
    let den = polys.evaluate(f.denominator(), &dual, embed, &values);
    let den_inv = dual.inverse(&den).expect("denominator has nonzero value");
    let mut r = dual.mul(&num, &den_inv);
    let slope = r.pop().unwrap();
    let value = r.pop().unwrap();
    (value, slope)
}

/// `F(x_1 + c_1 S_1, ..., x_n + c_n S_n)` in the no-sign exterior algebra over
/// the rational function field, computed by substitution.
pub fn shift_substitution<F: Field>(
    field: &RatFuncField<F>,
    f: &RatFunc<F::Elem>,
    shifts: &[i64],
) -> ExteriorElement<RatFunc<F::Elem>> {
    let polys = field.poly_ring();
    assert_eq!(shifts.len(), polys.nvars(), "one shift per variable");
    let ext = MultiquadraticAlgebra::exterior(field.clone(), shifts.len());
    let values: Vec<_> = shifts
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let s = ext.scale(&field.from_i64(c), &ext.generator(i));
            ext.add(&ext.embed(&field.var(i)), &s)
        })
        .collect();
    let embed = |c: &F::Elem| ext.embed(&field.constant(c.clone()));
    let num = polys.evaluate(f.numerator(), &ext, embed, &values);
    let den = polys.evaluate(f.denominator(), &ext, embed, &values);
    let den_inv = ext.inverse(&den).expect("denominator has nonzero value");
    ext.mul(&num, &den_inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{PrimeField, Rationals};

    #[test]
    fn no_sign_square_of_sum() {
        let q = MultiquadraticAlgebra::exterior(Rationals, 2);
        let s = q.add(&q.generator(0), &q.generator(1));
        let s1s2 = q.mul(&q.generator(0), &q.generator(1));
        assert_eq!(q.square(&s), q.scale_int(2, &s1s2));
        assert_eq!(q.render(&q.square(&s)), "2*S1*S2");

        let f2 = MultiquadraticAlgebra::exterior(PrimeField::new(2).unwrap(), 2);
        let s = f2.add(&f2.generator(0), &f2.generator(1));
        assert_eq!(f2.square(&s), f2.zero());
    }

    #[test]
    fn quadratic_generator() {
        // U^2 = 3 over Q.
        let q = Rationals;
        let a = MultiquadraticAlgebra::new(q, vec![q.from_i64(3)], &["U"]);
        let u = a.generator(0);
        assert_eq!(a.square(&u), a.from_i64(3));
        let x = a.add(&a.one(), &u);
        let xi = a.inverse(&x).unwrap();
        assert_eq!(a.mul(&x, &xi), a.one());
    }

    #[test]
    fn dual_shift_examples() {
        let k = RatFuncField::new(Rationals, &["T"]);
        let t = k.var(0);
        let t2 = k.square(&t);
        let (v, s) = dual_shift(&k, &t2, 0);
        assert_eq!((k.render(&v), k.render(&s)), ("T^2".into(), "2*T".into()));

        let k2 = RatFuncField::new(PrimeField::new(2).unwrap(), &["T"]);
        let t2 = k2.square(&k2.var(0));
        assert_eq!(k2.render(&dual_shift(&k2, &t2, 0).1), "0");

        // (1/T - S/T^2)(T + S) = 1
        let inv = k.inv(&t).unwrap();
        let (v, s) = dual_shift(&k, &inv, 0);
        assert_eq!(k.render(&s), "-1/T^2");
        let d = MultiquadraticAlgebra::dual(k.clone());
        let lhs = vec![v, s];
        let rhs = vec![t.clone(), k.one()];
        assert_eq!(d.mul(&lhs, &rhs), d.one());
    }

    #[test]
    fn substitution_agrees_with_derivative() {
        let k = RatFuncField::new(PrimeField::new(3).unwrap(), &["T"]);
        let t = k.var(0);
        let f = k.div(&k.add(&k.square(&t), &k.one()), &t).unwrap();
        assert_eq!(shifted_value(&k, &f, 0), dual_shift(&k, &f, 0));
    }
}
