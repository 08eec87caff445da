use alloc::format;
use alloc::vec::Vec;

use super::fdalg::FiniteDimAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{mat_mul, Matrix, Subspace};
use crate::ring::{Field, Ring};

/// A unital ring map between algebras over the same field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraMorphism<F: Field> {
    source: FiniteDimAlgebra<F>,
    target: FiniteDimAlgebra<F>,
    /// `target.dim() x source.dim()`.
    matrix: Matrix<F::Elem>,
}

impl<F: Field> AlgebraMorphism<F> {
    /// Checks that the unit goes to the unit and products of basis pairs are
    /// preserved.
    pub fn new(
        source: FiniteDimAlgebra<F>,
        target: FiniteDimAlgebra<F>,
        matrix: Matrix<F::Elem>,
    ) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: target.dim() * source.dim(),
                found: matrix.rows() * matrix.cols(),
            });
        }
        let m = AlgebraMorphism {
            source,
            target,
            matrix,
        };
        if m.apply(m.source.unit()) != m.target.unit() {
            return Err(Error::NotAMorphism(format!(
                "unit maps to {}",
                m.target.render(&m.apply(m.source.unit()))
            )));
        }
        let images: Vec<_> = (0..m.source.dim())
            .map(|i| m.apply(&m.source.basis_vector(i)))
            .collect();
        for i in 0..m.source.dim() {
            for j in i..m.source.dim() {
                let lhs = m.apply(m.source.product(i, j));
                let rhs = m.target.mul(&images[i], &images[j]);
                if lhs != rhs {
                    let labels = m.source.labels();
                    return Err(Error::NotAMorphism(format!(
                        "not multiplicative on ({}, {})",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn source(&self) -> &FiniteDimAlgebra<F> {
        &self.source
    }

    pub fn target(&self) -> &FiniteDimAlgebra<F> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<F::Elem> {
        &self.matrix
    }

    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.target.apply(&self.matrix, v)
    }

    pub fn kernel(&self) -> Subspace<F::Elem> {
        Subspace::kernel_of(self.target.field(), &self.matrix)
    }

    pub fn image(&self) -> Subspace<F::Elem> {
        Subspace::image_of(self.target.field(), &self.matrix)
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &AlgebraMorphism<F>) -> AlgebraMorphism<F> {
        assert_eq!(first.target, self.source, "composable maps");
        AlgebraMorphism {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: mat_mul(self.target.field(), &self.matrix, &first.matrix),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
            && self.matrix == Matrix::identity(self.source.field(), self.source.dim())
    }
}
