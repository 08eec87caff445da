use alloc::format;
use alloc::vec::Vec;

use super::fdalg::FiniteDimAlgebra;
use super::module::AlgebraModule;
use super::morphism::AlgebraMorphism;
use super::tensor::{
    delta_subalgebra, kron, quotient_algebra, tensor_product, tensor_square, AlgebraOver,
    QuotientAlgebra, TensorSquare,
};
use crate::error::{Error, Result};
use crate::linalg::{mat_mul, mat_vec, Matrix, Subspace};
use crate::ring::{Field, Ring};

/// The algebra `Q = (S (x)_R S) (x)_Delta S` with its augmentation onto `S`
/// and the kernel `W` of the augmentation.
#[derive(Debug, Clone)]
pub struct QPhi<F: Field> {
    pub over: AlgebraOver<F>,
    pub tensor_square: TensorSquare<F>,
    /// The diagonal subalgebra of the tensor square.
    pub delta: Subspace<F::Elem>,
    /// `(S (x)_R S) (x)_F S`, basis `(x, t)` row-major.
    pub triple: FiniteDimAlgebra<F>,
    /// Balancing relations over `Delta` inside `triple`.
    pub relations: Subspace<F::Elem>,
    pub q: QuotientAlgebra<F>,
    pub augmentation: AlgebraMorphism<F>,
    /// `W = ker(augmentation)`, in `Q` coordinates.
    pub w: Subspace<F::Elem>,
    /// `Q` as an `S`-module through the last factor.
    pub q_module: AlgebraModule<F>,
    pub w_module: AlgebraModule<F>,
}

impl<F: Field> QPhi<F> {
    pub fn field(&self) -> &F {
        self.over.field()
    }

    pub fn s(&self) -> &FiniteDimAlgebra<F> {
        self.over.s()
    }

    pub fn algebra(&self) -> &FiniteDimAlgebra<F> {
        &self.q.algebra
    }

    pub fn dim_q(&self) -> usize {
        self.q.algebra.dim()
    }

    pub fn dim_w(&self) -> usize {
        self.w.dim()
    }

    /// The class of `x (x) t` for `x` in the tensor square and `t` in `S`.
    pub fn class(&self, x: &[F::Elem], t: &[F::Elem]) -> Vec<F::Elem> {
        self.q.project(&kron(self.field(), x, t))
    }

    /// The class of `s (x) s' (x) t`.
    pub fn class3(&self, s: &[F::Elem], s2: &[F::Elem], t: &[F::Elem]) -> Vec<F::Elem> {
        self.class(&self.tensor_square.pure(s, s2), t)
    }

    /// `t -> 1 (x) 1 (x) t`, a section of the augmentation.
    pub fn section(&self, t: &[F::Elem]) -> Vec<F::Elem> {
        self.class(self.tensor_square.algebra.unit(), t)
    }

    pub fn augment(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        self.augmentation.apply(x)
    }

    /// `x -> (aug x, W-coordinates of x - section(aug x))`.
    pub fn split(&self, x: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
        let a = self.augment(x);
        let rest = self.q.algebra.sub(&x.to_vec(), &self.section(&a));
        let w = self
            .w
            .coordinates(self.field(), &rest)
            .expect("difference lies in the kernel");
        (a, w)
    }

    /// Inverse of [`QPhi::split`].
    pub fn unsplit(&self, s: &[F::Elem], w: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field();
        self.q.algebra.add(&self.section(s), &self.w.combine(f, w))
    }

    /// The first basis pair `(i, j)` violating
    /// `[e_i (x) e_j (x) 1 + e_j (x) e_i (x) 1] = [1 (x) 1 (x) 2 e_i e_j]`.
    pub fn star_violation(&self) -> Option<(usize, usize)> {
        let s = self.s();
        let one = s.unit();
        for i in 0..s.dim() {
            let ei = s.basis_vector(i);
            for j in i..s.dim() {
                let ej = s.basis_vector(j);
                let lhs = self
                    .q
                    .algebra
                    .add(&self.class3(&ei, &ej, one), &self.class3(&ej, &ei, one));
                let rhs = self.section(&s.scale_int(2, &s.mul(&ei, &ej)));
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// Builds `Q` for `S` over `R`, checking that the balancing relations span
/// an ideal and that the augmentation factors through them.
pub fn q_phi<F: Field>(over: &AlgebraOver<F>) -> Result<QPhi<F>> {
    let s = over.s();
    let f = s.field();
    let n = s.dim();
    let ts = tensor_square(over)?;
    let delta = delta_subalgebra(over, &ts)?;
    let t2 = &ts.algebra;
    let m = t2.dim();
    let triple = tensor_product(t2, s);

    let mut rels = Vec::with_capacity(m * delta.dim() * n);
    for a in 0..m {
        let x = t2.basis_vector(a);
        for d in delta.basis() {
            let xd = t2.mul(&x, d);
            let md = ts.mu.apply(d);
            for k in 0..n {
                let t = s.basis_vector(k);
                let lhs = kron(f, &xd, &t);
                let rhs = kron(f, &x, &s.mul(&md, &t));
                rels.push(triple.sub(&lhs, &rhs));
            }
        }
    }
    let relations = Subspace::span(f, m * n, &rels);
    let q = quotient_algebra(&triple, &relations).map_err(|e| match e {
        Error::NotAnIdeal(msg) => Error::IllDefined(format!("induced multiplication: {msg}")),
        other => other,
    })?;

    let aug_cols: Vec<_> = (0..m * n)
        .map(|c| {
            s.mul(
                &ts.mu.apply(&t2.basis_vector(c / n)),
                &s.basis_vector(c % n),
            )
        })
        .collect();
    let aug_triple = Matrix::from_cols(&aug_cols, n);
    if let Some(r) = relations
        .basis()
        .iter()
        .find(|r| mat_vec(f, &aug_triple, r).iter().any(|x| !f.is_zero(x)))
    {
        return Err(Error::IllDefined(format!(
            "augmentation is nonzero on relation {}",
            triple.render(r)
        )));
    }
    let augmentation = AlgebraMorphism::new(
        q.algebra.clone(),
        s.clone(),
        mat_mul(f, &aug_triple, &q.quotient.lift),
    )?;
    let w = augmentation.kernel();

    let section = |t: &[F::Elem]| q.project(&kron(f, t2.unit(), t));
    let mut actions = Vec::with_capacity(n);
    for k in 0..n {
        let e = s.basis_vector(k);
        let sigma = section(&e);
        if augmentation.apply(&sigma) != e {
            return Err(Error::IllDefined(format!(
                "augmentation does not split at {}",
                s.labels()[k]
            )));
        }
        actions.push(q.algebra.left_mul_matrix(&sigma));
    }
    let q_module = AlgebraModule::new(s.clone(), q.algebra.dim(), actions)?;
    let w_module = q_module.submodule(&w)?;
    Ok(QPhi {
        over: over.clone(),
        tensor_square: ts,
        delta,
        triple,
        relations,
        q,
        augmentation,
        w,
        q_module,
        w_module,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ExtensionField, PrimeField, Rationals};
    use alloc::vec;

    #[test]
    fn field_extensions_have_trivial_w() {
        let f2 = PrimeField::new(2).unwrap();
        let ext = ExtensionField::new(f2, vec![1, 1, 1], "x").unwrap();
        let q = q_phi(&AlgebraOver::over_field(FiniteDimAlgebra::from_extension(
            &ext,
        )))
        .unwrap();
        assert_eq!(
            (q.tensor_square.dim(), q.delta.dim(), q.dim_q(), q.dim_w()),
            (4, 3, 2, 0)
        );
        assert_eq!(q.star_violation(), None);
    }

    #[test]
    fn truncated_cube_over_q() {
        let s = FiniteDimAlgebra::truncated(Rationals, "T", 3).unwrap();
        let q = q_phi(&AlgebraOver::over_field(s.clone())).unwrap();
        assert_eq!(q.dim_w(), 2);
        assert_eq!(q.dim_q(), s.dim() + q.dim_w());
        assert_eq!(q.star_violation(), None);
        for k in 0..q.dim_q() {
            let x = q.algebra().basis_vector(k);
            let (a, w) = q.split(&x);
            assert_eq!(q.unsplit(&a, &w), x);
        }
    }
}
