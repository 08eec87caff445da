use alloc::vec::Vec;

use super::subspace::Subspace;
use crate::ring::Field;

/// The smallest subspace containing `generators` and closed under `mul`.
///
/// Each round multiplies the generators into the current basis; at the fixed
/// point the span is closed under all products because `mul` is associative.
pub fn mult_closure<F, M>(
    field: &F,
    ambient: usize,
    generators: &[Vec<F::Elem>],
    mul: M,
) -> Subspace<F::Elem>
where
    F: Field,
    M: Fn(&[F::Elem], &[F::Elem]) -> Vec<F::Elem>,
{
    let gens = Subspace::span(field, ambient, generators);
    let mut current = gens.clone();
    loop {
        let mut vectors: Vec<_> = current.basis().to_vec();
        for g in gens.basis() {
            for b in current.basis() {
                vectors.push(mul(g, b));
            }
        }
        let next = Subspace::span(field, ambient, &vectors);
        if next.dim() == current.dim() {
            return current;
        }
        current = next;
    }
}

/// The ideal generated by `seeds` in an algebra spanned by `algebra_basis`.
pub fn ideal_closure<F, M>(
    field: &F,
    ambient: usize,
    seeds: &[Vec<F::Elem>],
    algebra_basis: &[Vec<F::Elem>],
    mul: M,
) -> Subspace<F::Elem>
where
    F: Field,
    M: Fn(&[F::Elem], &[F::Elem]) -> Vec<F::Elem>,
{
    let mut current = Subspace::span(field, ambient, seeds);
    loop {
        let mut vectors: Vec<_> = current.basis().to_vec();
        for b in current.basis() {
            for a in algebra_basis {
                vectors.push(mul(b, a));
            }
        }
        let next = Subspace::span(field, ambient, &vectors);
        if next.dim() == current.dim() {
            return current;
        }
        current = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::PrimeField;
    use alloc::vec;

    /// Multiplication in F_3[x]/(x^4) in the basis 1, x, x^2, x^3.
    fn truncated(a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut out = vec![0; 4];
        for i in 0..4 {
            for j in 0..4 - i {
                out[i + j] = (out[i + j] + a[i] * b[j]) % 3;
            }
        }
        out
    }

    #[test]
    fn closure_of_powers() {
        let f = PrimeField::new(3).unwrap();
        let one = Subspace::span(&f, 4, &[vec![1, 0, 0, 0]]);
        assert_eq!(mult_closure(&f, 4, &[vec![1, 0, 0, 0]], truncated), one);
        let x2 = mult_closure(&f, 4, &[vec![0, 0, 1, 0]], truncated);
        assert_eq!(x2.dim(), 1);
        let x = mult_closure(&f, 4, &[vec![0, 1, 0, 0]], truncated);
        assert_eq!(x.dim(), 3);
    }

    #[test]
    fn ideal_of_x_squared() {
        let f = PrimeField::new(3).unwrap();
        let basis: Vec<Vec<u64>> = (0..4)
            .map(|i| {
                let mut v = vec![0; 4];
                v[i] = 1;
                v
            })
            .collect();
        let ideal = ideal_closure(&f, 4, &[vec![0, 0, 1, 0]], &basis, truncated);
        assert_eq!(ideal.dim(), 2);
        assert_eq!(ideal.pivots(), &[2, 3]);
    }
}
