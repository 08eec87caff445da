use alloc::vec;
use alloc::vec::Vec;

use super::axioms::TestSet;
use super::carrier::RingCarrier;
use super::forms::higher_derivative_form;
use crate::error::Result;
use crate::exact::{Monomial, MultiPoly, PolyRing, PrimeField, RatFunc, RatFuncField};
use crate::linalg::Matrix;
use crate::ring::{Field, FiniteRing, Ring};

/// All pairs over `elements`, starting with `(1, 0)` and `(0, 1)` so that a
/// failure pairing those two is the first one reported.
fn plane_vectors<R: Ring>(ring: &R, elements: &[R::Elem]) -> Vec<Vec<R::Elem>> {
    let (zero, one) = (ring.zero(), ring.one());
    let mut out = vec![
        vec![one.clone(), zero.clone()],
        vec![zero.clone(), one.clone()],
    ];
    for a in elements {
        for b in elements {
            let v = vec![a.clone(), b.clone()];
            if !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out
}

/// Declared sample for maps `K(T)^2 -> K(T)` over `R = K`:
/// `S`-scalars `T, T + 1, T^2, 1/T, 2`, `R`-scalars `1, 2, -1`, and vectors
/// all pairs from `0, 1, T, T^2, T + 1, 1/T`.
pub fn univariate_test_set<F: Field>(k: &RatFuncField<F>) -> TestSet<RatFunc<F::Elem>> {
    let t = k.var(0);
    let one = k.one();
    let inv_t = k.inv(&t).expect("T is nonzero");
    let t_plus_one = k.add(&t, &one);
    let t2 = k.square(&t);
    let s_scalars = vec![
        t.clone(),
        t_plus_one.clone(),
        t2.clone(),
        inv_t.clone(),
        k.from_i64(2),
    ];
    let r_scalars = vec![one.clone(), k.from_i64(2), k.from_i64(-1)];
    let elements = vec![k.zero(), one, t, t2, t_plus_one, inv_t];
    TestSet {
        s_scalars,
        r_scalars,
        vectors: plane_vectors(k, &elements),
    }
}

/// Every polynomial over a finite field of total degree at most `degree`.
pub fn bounded_degree_polys<F: Field + FiniteRing>(
    ring: &PolyRing<F>,
    degree: u32,
) -> Vec<MultiPoly<F::Elem>> {
    let n = ring.nvars();
    let mut monomials = vec![Monomial::one(n)];
    for _ in 0..degree {
        let mut next = monomials.clone();
        for m in &monomials {
            for i in 0..n {
                let grown = m.mul(&Monomial::var(n, i, 1));
                if !next.contains(&grown) {
                    next.push(grown);
                }
            }
        }
        monomials = next;
    }
    let base = ring.base();
    let q = base.order();
    let count = q.pow(monomials.len() as u32);
    (0..count)
        .map(|mut i| {
            ring.from_terms(monomials.iter().map(|m| {
                let c = base.element(i % q);
                i /= q;
                (m.0.clone(), c)
            }))
        })
        .collect()
}

/// Declared sample for maps `P^2 -> P` with `P` a polynomial ring over a
/// finite field and `R` its constants: every polynomial of degree at most
/// `degree` as an `S`-scalar and in each vector slot.
pub fn bounded_degree_test_set<F: Field + FiniteRing>(
    ring: &PolyRing<F>,
    degree: u32,
) -> TestSet<MultiPoly<F::Elem>> {
    let polys = bounded_degree_polys(ring, degree);
    let base = ring.base();
    TestSet {
        s_scalars: polys.clone(),
        r_scalars: base
            .elements()
            .into_iter()
            .map(|c| ring.constant(c))
            .collect(),
        vectors: plane_vectors(ring, &polys),
    }
}

/// `q_I(T^J, 1)` over `F_2(T_1..T_n)` for all subsets `I` (rows) and `J`
/// (columns), in bitmask order. The entry is `T^(J - I)` when `I` is a
/// subset of `J` and zero otherwise, so the matrix is unitriangular.
pub fn higher_derivative_matrix(
    n: usize,
) -> Result<(RatFuncField<PrimeField>, Matrix<RatFunc<u64>>)> {
    let f2 = PrimeField::new(2)?;
    let names: Vec<alloc::string::String> = (1..=n).map(|i| alloc::format!("T{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let k = RatFuncField::new(f2, &refs);
    let size = 1usize << n;
    let subset = |mask: usize| -> Vec<usize> { (0..n).filter(|i| mask & (1 << i) != 0).collect() };
    let inputs: Vec<RatFunc<u64>> = (0..size)
        .map(|mask| {
            subset(mask)
                .iter()
                .fold(k.one(), |acc, &i| k.mul(&acc, &k.var(i)))
        })
        .collect();
    let mut data = Vec::with_capacity(size * size);
    for row in 0..size {
        let q = higher_derivative_form(RingCarrier::new(k.clone(), 2, "F_2"), &subset(row))?;
        for x in &inputs {
            data.push(q.eval(&[x.clone(), k.one()])?);
        }
    }
    Ok((k, Matrix::new(size, size, data)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank;

    #[test]
    fn bounded_degree_counts() {
        let ring = PolyRing::new(PrimeField::new(2).unwrap(), &["X", "Y"]);
        assert_eq!(bounded_degree_polys(&ring, 1).len(), 8);
        assert_eq!(bounded_degree_polys(&ring, 2).len(), 64);
        let set = bounded_degree_test_set(&ring, 1);
        assert_eq!(set.vectors.len(), 64);
    }

    #[test]
    fn evaluation_matrix_is_invertible() {
        for n in 1..=3 {
            let (k, m) = higher_derivative_matrix(n).unwrap();
            assert_eq!(rank(&k, &m), 1 << n);
            for i in 0..m.rows() {
                assert!(k.is_one(m.get(i, i)));
            }
        }
    }
}
