use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::fdalg::FiniteDimAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{mat_vec, Matrix, Subspace};
use crate::ring::Field;

/// A finite-dimensional module over a [`FiniteDimAlgebra`], given by the
/// action matrix of each basis element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraModule<F: Field> {
    algebra: FiniteDimAlgebra<F>,
    dim: usize,
    actions: Vec<Matrix<F::Elem>>,
}

impl<F: Field> AlgebraModule<F> {
    /// Checks that the unit acts trivially and the action is multiplicative.
    pub fn new(
        algebra: FiniteDimAlgebra<F>,
        dim: usize,
        actions: Vec<Matrix<F::Elem>>,
    ) -> Result<Self> {
        if actions.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                found: actions.len(),
            });
        }
        if let Some(a) = actions.iter().find(|a| a.rows() != dim || a.cols() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: a.rows().max(a.cols()),
            });
        }
        let m = AlgebraModule {
            algebra,
            dim,
            actions,
        };
        let f = m.algebra.field();
        if m.action_matrix(m.algebra.unit()) != Matrix::identity(f, dim) {
            return Err(Error::InconsistentInputs(String::from(
                "unit does not act as the identity",
            )));
        }
        for i in 0..m.algebra.dim() {
            for j in 0..m.algebra.dim() {
                let lhs = m.action_matrix(m.algebra.product(i, j));
                let rhs = crate::linalg::mat_mul(f, &m.actions[i], &m.actions[j]);
                if lhs != rhs {
                    return Err(Error::InconsistentInputs(format!(
                        "action is not multiplicative on ({}, {})",
                        m.algebra.labels()[i],
                        m.algebra.labels()[j]
                    )));
                }
            }
        }
        Ok(m)
    }

    /// The algebra acting on itself.
    pub fn regular(algebra: &FiniteDimAlgebra<F>) -> Self {
        let actions = (0..algebra.dim())
            .map(|i| algebra.left_mul_matrix(&algebra.basis_vector(i)))
            .collect();
        AlgebraModule {
            algebra: algebra.clone(),
            dim: algebra.dim(),
            actions,
        }
    }

    /// `n` copies of the regular module, coordinates grouped by copy.
    pub fn free(algebra: &FiniteDimAlgebra<F>, rank: usize) -> Self {
        let f = algebra.field();
        let d = algebra.dim();
        let actions = (0..d)
            .map(|i| {
                let block = algebra.left_mul_matrix(&algebra.basis_vector(i));
                let mut m = Matrix::zeros(f, d * rank, d * rank);
                for c in 0..rank {
                    for r in 0..d {
                        for s in 0..d {
                            m.set(c * d + r, c * d + s, block.get(r, s).clone());
                        }
                    }
                }
                m
            })
            .collect();
        AlgebraModule {
            algebra: algebra.clone(),
            dim: d * rank,
            actions,
        }
    }

    /// The submodule on a stable subspace, in the subspace's canonical
    /// coordinates.
    pub fn submodule(&self, sub: &Subspace<F::Elem>) -> Result<Self> {
        let f = self.algebra.field();
        if sub.ambient() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: sub.ambient(),
            });
        }
        let mut actions = Vec::with_capacity(self.actions.len());
        for (i, a) in self.actions.iter().enumerate() {
            let mut cols = Vec::with_capacity(sub.dim());
            for b in sub.basis() {
                let image = mat_vec(f, a, b);
                let coords = sub.coordinates(f, &image).ok_or_else(|| {
                    Error::InconsistentInputs(format!(
                        "subspace is not stable under {}",
                        self.algebra.labels()[i]
                    ))
                })?;
                cols.push(coords);
            }
            actions.push(Matrix::from_cols(&cols, sub.dim()));
        }
        Ok(AlgebraModule {
            algebra: self.algebra.clone(),
            dim: sub.dim(),
            actions,
        })
    }

    pub fn algebra(&self) -> &FiniteDimAlgebra<F> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[Matrix<F::Elem>] {
        &self.actions
    }

    /// Matrix by which an algebra element acts.
    pub fn action_matrix(&self, s: &[F::Elem]) -> Matrix<F::Elem> {
        let f = self.algebra.field();
        let mut m = Matrix::zeros(f, self.dim, self.dim);
        for (c, a) in s.iter().zip(&self.actions) {
            if f.is_zero(c) {
                continue;
            }
            for r in 0..self.dim {
                for k in 0..self.dim {
                    let v = f.add(m.get(r, k), &f.mul(c, a.get(r, k)));
                    m.set(r, k, v);
                }
            }
        }
        m
    }

    pub fn act(&self, s: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.algebra.field();
        let mut out = vec![f.zero(); self.dim];
        for (c, a) in s.iter().zip(&self.actions) {
            if f.is_zero(c) {
                continue;
            }
            for (o, x) in out.iter_mut().zip(mat_vec(f, a, v)) {
                *o = f.add(o, &f.mul(c, &x));
            }
        }
        out
    }

    /// Whether a `target.dim() x self.dim()` matrix commutes with the actions.
    pub fn is_linear_map_to(&self, target: &AlgebraModule<F>, m: &Matrix<F::Elem>) -> bool {
        let f = self.algebra.field();
        self.actions
            .iter()
            .zip(&target.actions)
            .all(|(a, b)| crate::linalg::mat_mul(f, m, a) == crate::linalg::mat_mul(f, b, m))
    }

    /// `Hom_S(self, target)` as a subspace of row-major flattened
    /// `target.dim() x self.dim()` matrices.
    pub fn hom_space(&self, target: &AlgebraModule<F>) -> Result<Subspace<F::Elem>> {
        if self.algebra != target.algebra {
            return Err(Error::InconsistentInputs(String::from(
                "modules over different algebras",
            )));
        }
        let f = self.algebra.field();
        let (m, n) = (self.dim, target.dim);
        let unknowns = n * m;
        let mut rows = Vec::new();
        for (a, b) in self.actions.iter().zip(&target.actions) {
            for p in 0..n {
                for q in 0..m {
                    // (f a)_{pq} - (b f)_{pq}
                    let mut row = vec![f.zero(); unknowns];
                    for r in 0..m {
                        let idx = p * m + r;
                        row[idx] = f.add(&row[idx], a.get(r, q));
                    }
                    for r in 0..n {
                        let idx = r * m + q;
                        row[idx] = f.sub(&row[idx], b.get(p, r));
                    }
                    rows.push(row);
                }
            }
        }
        Ok(Subspace::kernel_of(f, &Matrix::from_rows(&rows, unknowns)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{PrimeField, Rationals};

    #[test]
    fn endomorphisms_of_regular_module() {
        let s = FiniteDimAlgebra::truncated(Rationals, "T", 3).unwrap();
        let reg = AlgebraModule::regular(&s);
        assert_eq!(reg.hom_space(&reg).unwrap().dim(), 3);
        let free2 = AlgebraModule::free(&s, 2);
        assert_eq!(reg.hom_space(&free2).unwrap().dim(), 6);
    }

    #[test]
    fn ideal_submodule() {
        let f2 = PrimeField::new(2).unwrap();
        let s = FiniteDimAlgebra::truncated(f2, "T", 4).unwrap();
        let reg = AlgebraModule::regular(&s);
        let ideal = Subspace::span(&f2, 4, &[s.basis_vector(2), s.basis_vector(3)]);
        let sub = reg.submodule(&ideal).unwrap();
        assert_eq!(sub.dim(), 2);
        // (T^2) is cyclic with annihilator (T^2); its image lies in (T^2).
        assert_eq!(sub.hom_space(&reg).unwrap().dim(), 2);
        let not_stable = Subspace::span(&f2, 4, &[s.basis_vector(1)]);
        assert!(reg.submodule(&not_stable).is_err());
    }
}
