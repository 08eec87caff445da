use alloc::vec::Vec;

use super::morphism::AlgebraMorphism;
use super::qphi::QPhi;
use super::tensor::{
    quotient_algebra, squares_subalgebra, tensor_square, AlgebraOver, QuotientAlgebra,
};
use crate::error::{Error, Result};
use crate::linalg::{ideal_closure, mat_mul, mat_vec, Matrix, Subspace};
use crate::ring::{Field, Ring};

/// Which presentation of `Q` a model realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Presentation {
    /// `(S (x)_R S) / I^2`, for 2 invertible.
    ISquared,
    /// `(S (x)_R S) / J`, for 2 = 0.
    Frobenius,
}

/// An alternative presentation of `Q` and the checks on the comparison maps.
#[derive(Debug, Clone)]
pub struct ModelReport<F: Field> {
    pub presentation: Presentation,
    pub model: QuotientAlgebra<F>,
    /// The ideal of the tensor square divided out (`I^2` or `J`).
    pub ideal: Subspace<F::Elem>,
    /// `Q -> model`, in `Q` coordinates.
    pub forward: Matrix<F::Elem>,
    /// `model -> Q`.
    pub backward: Matrix<F::Elem>,
    /// The forward formula vanishes on the balancing relations of `Q`.
    pub forward_well_defined: bool,
    /// The backward formula vanishes on the divided-out ideal.
    pub backward_well_defined: bool,
    pub forward_ring_map: bool,
    pub backward_ring_map: bool,
    pub mutually_inverse: bool,
    /// Forward map carries the section of `Q` to the structure map of the model.
    pub compatible_from_s: bool,
    /// Augmentation of `Q` equals the model's map to `S` after `forward`.
    pub compatible_to_s: bool,
    /// Dimension of an independently built algebra the model must match
    /// (`S (x)_B S` for `B` the squares subalgebra), when there is one.
    pub oracle_dim: Option<usize>,
}

impl<F: Field> ModelReport<F> {
    pub fn dim(&self) -> usize {
        self.model.algebra.dim()
    }

    pub fn holds(&self) -> bool {
        self.forward_well_defined
            && self.backward_well_defined
            && self.forward_ring_map
            && self.backward_ring_map
            && self.mutually_inverse
            && self.compatible_from_s
            && self.compatible_to_s
            && self.oracle_dim.is_none_or(|d| d == self.dim())
    }
}

fn kills<F: Field>(f: &F, m: &Matrix<F::Elem>, space: &Subspace<F::Elem>) -> bool {
    space
        .basis()
        .iter()
        .all(|v| mat_vec(f, m, v).iter().all(|x| f.is_zero(x)))
}

#[allow(clippy::too_many_arguments)]
/// Assembles the report from the formulas on the un-quotiented spaces.
fn compare<F: Field>(
    qphi: &QPhi<F>,
    presentation: Presentation,
    ideal: Subspace<F::Elem>,
    forward_triple: impl Fn(usize) -> Vec<F::Elem>,
    backward_t2: Matrix<F::Elem>,
    backward_ok: bool,
    structure: impl Fn(&[F::Elem]) -> Vec<F::Elem>,
    oracle_dim: Option<usize>,
) -> Result<ModelReport<F>> {
    let f = qphi.field();
    let s = qphi.s();
    let ts = &qphi.tensor_square;
    let model = quotient_algebra(&ts.algebra, &ideal)?;
    let md = model.algebra.dim();
    let cols: Vec<_> = (0..qphi.triple.dim()).map(forward_triple).collect();
    let forward_triple = Matrix::from_cols(&cols, md);
    let forward_well_defined = kills(f, &forward_triple, &qphi.relations);
    let forward = mat_mul(f, &forward_triple, &qphi.q.quotient.lift);

    let backward_well_defined = backward_ok && kills(f, &backward_t2, &ideal);
    let backward = mat_mul(f, &backward_t2, &model.quotient.lift);

    let q_alg = qphi.algebra().clone();
    let forward_ring_map =
        AlgebraMorphism::new(q_alg.clone(), model.algebra.clone(), forward.clone()).is_ok();
    let backward_ring_map =
        AlgebraMorphism::new(model.algebra.clone(), q_alg.clone(), backward.clone()).is_ok();
    let mutually_inverse = mat_mul(f, &forward, &backward) == Matrix::identity(f, md)
        && mat_mul(f, &backward, &forward) == Matrix::identity(f, q_alg.dim());

    let compatible_from_s = (0..s.dim()).all(|k| {
        let e = s.basis_vector(k);
        mat_vec(f, &forward, &qphi.section(&e)) == model.project(&structure(&e))
    });
    let mu_model = mat_mul(f, ts.mu.matrix(), &model.quotient.lift);
    let compatible_to_s = mat_mul(f, &mu_model, &forward) == *qphi.augmentation.matrix();

    Ok(ModelReport {
        presentation,
        model,
        ideal,
        forward,
        backward,
        forward_well_defined,
        backward_well_defined,
        forward_ring_map,
        backward_ring_map,
        mutually_inverse,
        compatible_from_s,
        compatible_to_s,
        oracle_dim,
    })
}

/// `(S (x)_R S) / I^2` with `s (x) s' (x) t -> (st (x) s' + s (x) s't) / 2` and
/// `s (x) s' -> s (x) s' (x) 1`, for 2 invertible.
pub fn i_squared_model<F: Field>(qphi: &QPhi<F>) -> Result<ModelReport<F>> {
    let f = qphi.field();
    if f.characteristic() == 2 {
        return Err(Error::WrongCharacteristic {
            required: "other than 2",
            found: 2,
        });
    }
    let s = qphi.s();
    let n = s.dim();
    let ts = &qphi.tensor_square;
    let t2 = &ts.algebra;
    let half = f.inv(&f.from_i64(2)).expect("2 is invertible");
    let iota = |t: &[F::Elem]| {
        let sym = t2.add(&ts.pure(s.unit(), t), &ts.pure(t, s.unit()));
        t2.scale(&half, &sym)
    };
    let i = &ts.ideal;
    let mut products = Vec::new();
    for x in i.basis() {
        for y in i.basis() {
            products.push(t2.mul(x, y));
        }
    }
    let i2 = Subspace::span(f, t2.dim(), &products);
    let model = quotient_algebra(t2, &i2)?;
    let forward = |c: usize| {
        let x = t2.basis_vector(c / n);
        model.project(&t2.mul(&x, &iota(&s.basis_vector(c % n))))
    };
    let back_cols: Vec<_> = (0..t2.dim())
        .map(|a| qphi.class(&t2.basis_vector(a), s.unit()))
        .collect();
    let backward_t2 = Matrix::from_cols(&back_cols, qphi.dim_q());
    compare(
        qphi,
        Presentation::ISquared,
        i2,
        forward,
        backward_t2,
        true,
        |t| iota(t),
        None,
    )
}

/// `(S (x)_R S) / J`, `J` generated by `s t^2 (x) s' - s (x) t^2 s'`, with
/// `s (x) s' (x) t -> t (x) ss'` and `s (x) s' -> s' (x) 1 (x) s`, for 2 = 0.
pub fn frobenius_model<F: Field>(qphi: &QPhi<F>) -> Result<ModelReport<F>> {
    let f = qphi.field();
    if f.characteristic() != 2 {
        return Err(Error::WrongCharacteristic {
            required: "2",
            found: f.characteristic(),
        });
    }
    let s = qphi.s();
    let n = s.dim();
    let ts = &qphi.tensor_square;
    let t2 = &ts.algebra;
    let mut seeds = Vec::new();
    for k in 0..n {
        let sq = s.product(k, k).to_vec();
        for i in 0..n {
            let left = s.mul(&s.basis_vector(i), &sq);
            for j in 0..n {
                let right = s.mul(&sq, &s.basis_vector(j));
                seeds.push(t2.sub(
                    &ts.pure(&left, &s.basis_vector(j)),
                    &ts.pure(&s.basis_vector(i), &right),
                ));
            }
        }
    }
    let j = ideal_closure(f, t2.dim(), &seeds, &t2.basis(), |a, b| t2.multiply(a, b));
    let model = quotient_algebra(t2, &j)?;
    let forward = |c: usize| {
        let ss = ts.mu.apply(&t2.basis_vector(c / n));
        model.project(&ts.pure(&s.basis_vector(c % n), &ss))
    };
    // s (x) s' -> s' (x) 1 (x) s on S (x)_F S, then restricted along the lift.
    let full_cols: Vec<_> = (0..n * n)
        .map(|c| qphi.class3(&s.basis_vector(c % n), s.unit(), &s.basis_vector(c / n)))
        .collect();
    let backward_full = Matrix::from_cols(&full_cols, qphi.dim_q());
    let balanced = kills(f, &backward_full, &ts.balancing);
    let backward_t2 = mat_mul(f, &backward_full, &ts.lift);

    let b = squares_subalgebra(&qphi.over);
    let oracle = tensor_square(&AlgebraOver::over_subalgebra(s.clone(), b)?)?;
    compare(
        qphi,
        Presentation::Frobenius,
        j,
        forward,
        backward_t2,
        balanced,
        |t| ts.pure(t, s.unit()),
        Some(oracle.dim()),
    )
}

/// Runs whichever model applies to the characteristic.
pub fn model_for<F: Field>(qphi: &QPhi<F>) -> Result<ModelReport<F>> {
    if qphi.field().characteristic() == 2 {
        frobenius_model(qphi)
    } else {
        i_squared_model(qphi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q_phi, FiniteDimAlgebra};
    use crate::exact::{ExtensionField, PrimeField, Rationals};
    use alloc::vec;

    #[test]
    fn i_squared_for_truncated_cube() {
        let s = FiniteDimAlgebra::truncated(Rationals, "T", 3).unwrap();
        let q = q_phi(&AlgebraOver::over_field(s)).unwrap();
        let r = i_squared_model(&q).unwrap();
        assert_eq!(r.dim(), 5);
        assert!(r.holds(), "{r:?}");
    }

    #[test]
    fn i_squared_for_base_field() {
        let q = q_phi(&AlgebraOver::over_field(FiniteDimAlgebra::base_algebra(
            Rationals,
        )))
        .unwrap();
        let r = i_squared_model(&q).unwrap();
        assert_eq!(r.dim(), 1);
        assert!(r.holds());
    }

    #[test]
    fn frobenius_for_truncated_quartic() {
        let f2 = PrimeField::new(2).unwrap();
        let s = FiniteDimAlgebra::truncated(f2, "T", 4).unwrap();
        let q = q_phi(&AlgebraOver::over_field(s)).unwrap();
        let r = frobenius_model(&q).unwrap();
        assert_eq!((r.dim(), r.oracle_dim, q.dim_w()), (8, Some(8), 4));
        assert!(r.holds(), "{r:?}");
        assert!(matches!(
            i_squared_model(&q),
            Err(Error::WrongCharacteristic { .. })
        ));
    }

    #[test]
    fn frobenius_for_f8() {
        let f2 = PrimeField::new(2).unwrap();
        let ext = ExtensionField::new(f2, vec![1, 1, 0, 1], "x").unwrap();
        let q = q_phi(&AlgebraOver::over_field(FiniteDimAlgebra::from_extension(
            &ext,
        )))
        .unwrap();
        let r = frobenius_model(&q).unwrap();
        assert_eq!(r.dim(), 3);
        assert!(r.holds());
    }
}
