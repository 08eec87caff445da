use alloc::vec;
use alloc::vec::Vec;

use super::matrix::{kernel, mat_vec, rref, Matrix};
use crate::error::{Error, Result};
use crate::ring::Field;

/// A subspace of `F^ambient`, stored by its reduced row-echelon basis.
///
/// Rows are nonzero, pivots strictly increase, each pivot entry is one and
/// every other entry in a pivot column is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace<E> {
    ambient: usize,
    basis: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

impl<E: Clone + PartialEq> Subspace<E> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.basis.len()
    }

    /// The canonical basis, one vector per pivot.
    pub fn basis(&self) -> &[Vec<E>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots, in increasing order.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if self.ambient == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: n,
            })
        }
    }
}

impl<E: Clone + PartialEq + core::fmt::Debug> Subspace<E> {
    pub fn span<F: Field<Elem = E>>(field: &F, ambient: usize, vectors: &[Vec<E>]) -> Self {
        let r = rref(field, &Matrix::from_rows(vectors, ambient));
        let basis = (0..r.rank).map(|i| r.reduced.row(i).to_vec()).collect();
        Subspace {
            ambient,
            basis,
            pivots: r.pivots,
        }
    }

    pub fn full<F: Field<Elem = E>>(field: &F, ambient: usize) -> Self {
        Self::span(field, ambient, &Matrix::identity(field, ambient).row_vecs())
    }

    /// `{ v : m v = 0 }`.
    pub fn kernel_of<F: Field<Elem = E>>(field: &F, m: &Matrix<E>) -> Self {
        Self::span(field, m.cols(), &kernel(field, m))
    }

    /// The image `m(self)` in the codomain of `m`.
    pub fn image_under<F: Field<Elem = E>>(&self, field: &F, m: &Matrix<E>) -> Self {
        assert_eq!(m.cols(), self.ambient, "map domain");
        let images: Vec<_> = self.basis.iter().map(|b| mat_vec(field, m, b)).collect();
        Self::span(field, m.rows(), &images)
    }

    /// Column space of `m`.
    pub fn image_of<F: Field<Elem = E>>(field: &F, m: &Matrix<E>) -> Self {
        Self::full(field, m.cols()).image_under(field, m)
    }

    /// `v` minus its component along the pivots: zero exactly when `v` lies
    /// in the subspace, and zero at every pivot coordinate.
    pub fn reduce<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        assert_eq!(v.len(), self.ambient, "vector length");
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if field.is_zero(&c) {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                *o = field.sub(o, &field.mul(&c, r));
            }
        }
        out
    }

    pub fn contains_vector<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> bool {
        self.reduce(field, v).iter().all(|x| field.is_zero(x))
    }

    pub fn contains<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<bool> {
        self.check_ambient(other.ambient)?;
        Ok(other.basis.iter().all(|v| self.contains_vector(field, v)))
    }

    /// Coordinates of `v` in the canonical basis, read off at the pivots.
    pub fn coordinates<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Option<Vec<E>> {
        if !self.contains_vector(field, v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The vector with the given coordinates in the canonical basis.
    pub fn combine<F: Field<Elem = E>>(&self, field: &F, coords: &[E]) -> Vec<E> {
        assert_eq!(coords.len(), self.dim(), "coordinate count");
        let mut out = vec![field.zero(); self.ambient];
        for (c, row) in coords.iter().zip(&self.basis) {
            if field.is_zero(c) {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                *o = field.add(o, &field.mul(c, r));
            }
        }
        out
    }

    pub fn sum<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self> {
        self.check_ambient(other.ambient)?;
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Ok(Self::span(field, self.ambient, &vs))
    }

    /// Intersection via the left null space of the stacked bases.
    pub fn intersection<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self> {
        self.check_ambient(other.ambient)?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Self::zero(self.ambient));
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        let stacked = Matrix::from_rows(&rows, self.ambient);
        let relations = kernel(field, &stacked.transpose());
        let k = self.dim();
        let vectors: Vec<_> = relations
            .iter()
            .map(|c| self.combine(field, &c[..k]))
            .collect();
        Ok(Self::span(field, self.ambient, &vectors))
    }
}

/// A quotient `F^n / U` realized by coordinates at the non-pivot columns of `U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient<E> {
    pub dim: usize,
    /// `dim x n`; its kernel is `U`.
    pub project: Matrix<E>,
    /// `n x dim`; `project * lift` is the identity.
    pub lift: Matrix<E>,
}

pub fn quotient_space<F: Field>(field: &F, u: &Subspace<F::Elem>) -> Quotient<F::Elem> {
    let n = u.ambient();
    let free = u.non_pivots();
    let id = Matrix::identity(field, n);
    let cols: Vec<Vec<F::Elem>> = (0..n)
        .map(|j| {
            let r = u.reduce(field, id.row(j));
            free.iter().map(|&c| r[c].clone()).collect()
        })
        .collect();
    let project = Matrix::from_cols(&cols, free.len());
    let lift_cols: Vec<Vec<F::Elem>> = free.iter().map(|&c| id.row(c).to_vec()).collect();
    let lift = Matrix::from_cols(&lift_cols, n);
    Quotient {
        dim: free.len(),
        project,
        lift,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rationals;
    use crate::linalg::mat_mul;
    use crate::ring::Ring;

    fn e(q: &Rationals, n: usize, idx: &[usize]) -> Vec<num_rational::BigRational> {
        let mut v = vec![q.zero(); n];
        for &i in idx {
            v[i] = q.add(&v[i], &q.one());
        }
        v
    }

    #[test]
    fn sums_and_intersections() {
        let q = Rationals;
        let a = Subspace::span(&q, 3, &[e(&q, 3, &[0]), e(&q, 3, &[1])]);
        let b = Subspace::span(&q, 3, &[e(&q, 3, &[1]), e(&q, 3, &[2])]);
        assert_eq!(a.sum(&q, &a).unwrap(), a);
        assert_eq!(a.intersection(&q, &Subspace::zero(3)).unwrap().dim(), 0);
        let i = a.intersection(&q, &b).unwrap();
        assert_eq!(i.dim(), 1);
        assert!(i.contains_vector(&q, &e(&q, 3, &[1])));
        assert!(matches!(
            a.sum(&q, &Subspace::zero(4)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn quotient_examples() {
        let q = Rationals;
        let z = quotient_space(&q, &Subspace::zero(4));
        assert_eq!(z.dim, 4);
        assert_eq!(z.project, Matrix::identity(&q, 4));
        assert_eq!(quotient_space(&q, &Subspace::full(&q, 4)).dim, 0);

        let u = Subspace::span(&q, 4, &[e(&q, 4, &[0, 1])]);
        let quo = quotient_space(&q, &u);
        assert_eq!(quo.dim, 3);
        let p1 = mat_vec(&q, &quo.project, &e(&q, 4, &[0]));
        let p2 = mat_vec(&q, &quo.project, &e(&q, 4, &[1]));
        assert!(p1.iter().any(|x| !q.is_zero(x)));
        assert_eq!(p1, p2.iter().map(|x| q.neg(x)).collect::<Vec<_>>());
        assert_eq!(
            mat_mul(&q, &quo.project, &quo.lift),
            Matrix::identity(&q, 3)
        );
    }

    #[test]
    fn coordinates_round_trip() {
        let q = Rationals;
        let u = Subspace::span(&q, 3, &[e(&q, 3, &[0, 2]), e(&q, 3, &[1, 2])]);
        let v = e(&q, 3, &[0, 1, 2, 2]);
        let c = u.coordinates(&q, &v).unwrap();
        assert_eq!(u.combine(&q, &c), v);
        assert!(u.coordinates(&q, &e(&q, 3, &[2])).is_none());
    }
}
