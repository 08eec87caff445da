use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::fdalg::FiniteDimAlgebra;
use super::morphism::AlgebraMorphism;
use crate::error::{Error, Result};
use crate::linalg::{mat_mul, mat_vec, mult_closure, quotient_space, Matrix, Quotient, Subspace};
use crate::ring::{Field, Ring};

/// Coordinates of `a (x) b` in the row-major product basis.
pub fn kron<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(field.mul(x, y));
        }
    }
    out
}

/// `A (x)_F B` with basis `e_i (x) f_j` at index `i * dim B + j`.
pub fn tensor_product<F: Field>(
    a: &FiniteDimAlgebra<F>,
    b: &FiniteDimAlgebra<F>,
) -> FiniteDimAlgebra<F> {
    let f = a.field();
    let (na, nb) = (a.dim(), b.dim());
    let n = na * nb;
    let mut table = vec![f.zero(); n * n * n];
    for i in 0..na {
        for j in 0..nb {
            for k in 0..na {
                let pa = a.product(i, k);
                for l in 0..nb {
                    let pb = b.product(j, l);
                    let base = ((i * nb + j) * n + (k * nb + l)) * n;
                    for (p, x) in pa.iter().enumerate() {
                        if f.is_zero(x) {
                            continue;
                        }
                        for (q, y) in pb.iter().enumerate() {
                            if !f.is_zero(y) {
                                table[base + p * nb + q] = f.mul(x, y);
                            }
                        }
                    }
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(n);
    for la in a.labels() {
        for lb in b.labels() {
            labels.push(format!("{la}⊗{lb}"));
        }
    }
    let unit = kron(f, a.unit(), b.unit());
    FiniteDimAlgebra::from_parts(f.clone(), labels, table, unit)
}

/// A quotient algebra together with its coordinate projection and section.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientAlgebra<F: Field> {
    pub algebra: FiniteDimAlgebra<F>,
    pub quotient: Quotient<F::Elem>,
}

impl<F: Field> QuotientAlgebra<F> {
    pub fn project(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        mat_vec(self.algebra.field(), &self.quotient.project, v)
    }

    pub fn lift(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        mat_vec(self.algebra.field(), &self.quotient.lift, v)
    }
}

/// Checks that `ideal` absorbs multiplication by every basis element.
pub fn check_ideal<F: Field>(a: &FiniteDimAlgebra<F>, ideal: &Subspace<F::Elem>) -> Result<()> {
    let f = a.field();
    for b in ideal.basis() {
        for k in 0..a.dim() {
            let p = a.mul(b, &a.basis_vector(k));
            if !ideal.contains_vector(f, &p) {
                return Err(Error::NotAnIdeal(format!(
                    "({}) * {} = {} leaves the span",
                    a.render(b),
                    a.labels()[k],
                    a.render(&p)
                )));
            }
        }
    }
    Ok(())
}

/// `A / ideal`, with basis the images of the non-pivot basis vectors.
pub fn quotient_algebra<F: Field>(
    a: &FiniteDimAlgebra<F>,
    ideal: &Subspace<F::Elem>,
) -> Result<QuotientAlgebra<F>> {
    if ideal.ambient() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: ideal.ambient(),
        });
    }
    check_ideal(a, ideal)?;
    let f = a.field();
    let quotient = quotient_space(f, ideal);
    let free = ideal.non_pivots();
    let d = free.len();
    let mut table = Vec::with_capacity(d * d * d);
    for &i in &free {
        for &j in &free {
            table.extend(mat_vec(f, &quotient.project, a.product(i, j)));
        }
    }
    let labels = free.iter().map(|&i| a.labels()[i].clone()).collect();
    let unit = mat_vec(f, &quotient.project, a.unit());
    Ok(QuotientAlgebra {
        algebra: FiniteDimAlgebra::from_parts(f.clone(), labels, table, unit),
        quotient,
    })
}

/// An algebra `S` viewed over a subalgebra `R` containing the unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraOver<F: Field> {
    s: FiniteDimAlgebra<F>,
    r: Subspace<F::Elem>,
}

impl<F: Field> AlgebraOver<F> {
    /// `S` over its base field, `R = F * 1`.
    pub fn over_field(s: FiniteDimAlgebra<F>) -> Self {
        let r = Subspace::span(s.field(), s.dim(), &[s.unit().to_vec()]);
        AlgebraOver { s, r }
    }

    /// `S` over a subalgebra given as a subspace.
    pub fn over_subalgebra(s: FiniteDimAlgebra<F>, r: Subspace<F::Elem>) -> Result<Self> {
        let f = s.field();
        if r.ambient() != s.dim() {
            return Err(Error::DimensionMismatch {
                expected: s.dim(),
                found: r.ambient(),
            });
        }
        if !r.contains_vector(f, s.unit()) {
            return Err(Error::InvalidAlgebra(String::from(
                "subalgebra does not contain the unit",
            )));
        }
        for x in r.basis() {
            for y in r.basis() {
                if !r.contains_vector(f, &s.mul(x, y)) {
                    return Err(Error::InvalidAlgebra(String::from(
                        "subspace is not closed under multiplication",
                    )));
                }
            }
        }
        Ok(AlgebraOver { s, r })
    }

    pub fn s(&self) -> &FiniteDimAlgebra<F> {
        &self.s
    }

    pub fn r(&self) -> &Subspace<F::Elem> {
        &self.r
    }

    pub fn field(&self) -> &F {
        self.s.field()
    }

    pub fn is_over_field(&self) -> bool {
        self.r.dim() == 1
    }
}

/// `S (x)_R S` realized as a quotient of `S (x)_F S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorSquare<F: Field> {
    pub algebra: FiniteDimAlgebra<F>,
    /// Multiplication `S (x)_R S -> S`.
    pub mu: AlgebraMorphism<F>,
    /// `I = ker mu`.
    pub ideal: Subspace<F::Elem>,
    /// From `S (x)_F S` coordinates onto `algebra`.
    pub project: Matrix<F::Elem>,
    /// A section of `project`.
    pub lift: Matrix<F::Elem>,
    /// Kernel of `project`: the relations `sr (x) s' - s (x) rs'`.
    pub balancing: Subspace<F::Elem>,
}

impl<F: Field> TensorSquare<F> {
    /// The class of `s (x) t`.
    pub fn pure(&self, s: &[F::Elem], t: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.algebra.field();
        mat_vec(f, &self.project, &kron(f, s, t))
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

pub fn tensor_square<F: Field>(over: &AlgebraOver<F>) -> Result<TensorSquare<F>> {
    let s = over.s();
    let f = s.field();
    let n = s.dim();
    let full = tensor_product(s, s);
    let mut balancing = Vec::new();
    if !over.is_over_field() {
        for r in over.r().basis() {
            for i in 0..n {
                let ri = s.mul(r, &s.basis_vector(i));
                for j in 0..n {
                    let rj = s.mul(r, &s.basis_vector(j));
                    let lhs = kron(f, &ri, &s.basis_vector(j));
                    let rhs = kron(f, &s.basis_vector(i), &rj);
                    balancing.push(full.sub(&lhs, &rhs));
                }
            }
        }
    }
    let balancing = Subspace::span(f, n * n, &balancing);
    let q = quotient_algebra(&full, &balancing)?;
    let mu_cols: Vec<_> = (0..n * n)
        .map(|k| s.product(k / n, k % n).to_vec())
        .collect();
    let mu_full = Matrix::from_cols(&mu_cols, n);
    if balancing
        .basis()
        .iter()
        .any(|b| mat_vec(f, &mu_full, b).iter().any(|x| !f.is_zero(x)))
    {
        return Err(Error::IllDefined(String::from(
            "multiplication does not respect the balancing relations",
        )));
    }
    let mu = AlgebraMorphism::new(
        q.algebra.clone(),
        s.clone(),
        mat_mul(f, &mu_full, &q.quotient.lift),
    )?;
    let ideal = mu.kernel();
    Ok(TensorSquare {
        algebra: q.algebra,
        mu,
        ideal,
        project: q.quotient.project,
        lift: q.quotient.lift,
        balancing,
    })
}

/// The subalgebra of `S (x)_R S` generated over `R` by the elements `s (x) s`.
pub fn delta_subalgebra<F: Field>(
    over: &AlgebraOver<F>,
    ts: &TensorSquare<F>,
) -> Result<Subspace<F::Elem>> {
    let s = over.s();
    let f = s.field();
    let n = s.dim();
    let mut gens = Vec::new();
    for i in 0..n {
        let e = s.basis_vector(i);
        gens.push(ts.pure(&e, &e));
        for j in i + 1..n {
            let sum = s.add(&e, &s.basis_vector(j));
            gens.push(ts.pure(&sum, &sum));
        }
    }
    for r in over.r().basis() {
        gens.push(ts.pure(r, s.unit()));
    }
    let t2 = &ts.algebra;
    let delta = mult_closure(f, t2.dim(), &gens, |a, b| t2.multiply(a, b));
    if !delta.contains_vector(f, t2.unit()) {
        return Err(Error::InvalidAlgebra(String::from(
            "diagonal span misses the unit",
        )));
    }
    for x in delta.basis() {
        for y in delta.basis() {
            if !delta.contains_vector(f, &t2.mul(x, y)) {
                return Err(Error::InvalidAlgebra(String::from(
                    "diagonal span is not multiplicatively closed",
                )));
            }
        }
    }
    Ok(delta)
}

/// Matrix of the factor swap on `S (x)_R S`.
pub fn flip_matrix<F: Field>(over: &AlgebraOver<F>, ts: &TensorSquare<F>) -> Matrix<F::Elem> {
    let f = over.field();
    let n = over.s().dim();
    let mut swap = Matrix::zeros(f, n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            swap.set(j * n + i, i * n + j, f.one());
        }
    }
    mat_mul(f, &ts.project, &mat_mul(f, &swap, &ts.lift))
}

/// Fixed points of the factor swap.
pub fn c2_fixed<F: Field>(over: &AlgebraOver<F>, ts: &TensorSquare<F>) -> Subspace<F::Elem> {
    let f = over.field();
    let flip = flip_matrix(over, ts);
    let id = Matrix::identity(f, ts.dim());
    let mut diff = flip.clone();
    for i in 0..ts.dim() {
        for j in 0..ts.dim() {
            diff.set(i, j, f.sub(flip.get(i, j), id.get(i, j)));
        }
    }
    Subspace::kernel_of(f, &diff)
}

/// The diagonal subalgebra against the swap-fixed subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatnessComparison {
    pub delta_dim: usize,
    pub fixed_dim: usize,
    pub equal: bool,
}

pub fn flatness_comparison<F: Field>(over: &AlgebraOver<F>) -> Result<FlatnessComparison> {
    let ts = tensor_square(over)?;
    let delta = delta_subalgebra(over, &ts)?;
    let fixed = c2_fixed(over, &ts);
    Ok(FlatnessComparison {
        delta_dim: delta.dim(),
        fixed_dim: fixed.dim(),
        equal: delta == fixed,
    })
}

/// Whether `R -> S` is an epimorphism of rings: multiplication on
/// `S (x)_R S` is bijective.
pub fn epimorphism_check<F: Field>(over: &AlgebraOver<F>) -> Result<bool> {
    let ts = tensor_square(over)?;
    Ok(ts.ideal.dim() == 0 && ts.mu.image().dim() == over.s().dim())
}

/// The subalgebra generated by `R` and the squares of basis elements; in
/// characteristic two this is the image of the relative Frobenius.
pub fn squares_subalgebra<F: Field>(over: &AlgebraOver<F>) -> Subspace<F::Elem> {
    let s = over.s();
    let mut gens: Vec<_> = (0..s.dim()).map(|k| s.product(k, k).to_vec()).collect();
    gens.extend(over.r().basis().iter().cloned());
    mult_closure(s.field(), s.dim(), &gens, |a, b| s.multiply(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ExtensionField, PrimeField, Rationals};

    fn f4() -> AlgebraOver<PrimeField> {
        let f2 = PrimeField::new(2).unwrap();
        let ext = ExtensionField::new(f2, vec![1, 1, 1], "x").unwrap();
        AlgebraOver::over_field(FiniteDimAlgebra::from_extension(&ext))
    }

    fn gaussian() -> AlgebraOver<Rationals> {
        let q = Rationals;
        let s = FiniteDimAlgebra::univariate(q, &[q.one(), q.zero(), q.one()], "i").unwrap();
        AlgebraOver::over_field(s)
    }

    #[test]
    fn tensor_square_dimensions() {
        let ts = tensor_square(&f4()).unwrap();
        assert_eq!((ts.dim(), ts.ideal.dim()), (4, 2));
        let ts = tensor_square(&gaussian()).unwrap();
        assert_eq!((ts.dim(), ts.ideal.dim()), (4, 2));
        let q = AlgebraOver::over_field(FiniteDimAlgebra::base_algebra(Rationals));
        assert_eq!(tensor_square(&q).unwrap().ideal.dim(), 0);
    }

    #[test]
    fn diagonal_equals_fixed_points() {
        {
            let cmp = flatness_comparison(&f4()).unwrap();
            assert_eq!(
                cmp,
                FlatnessComparison {
                    delta_dim: 3,
                    fixed_dim: 3,
                    equal: true
                }
            );
        }
        let cmp = flatness_comparison(&gaussian()).unwrap();
        assert_eq!((cmp.delta_dim, cmp.equal), (3, true));
    }

    #[test]
    fn gaussian_diagonal_is_spanned_by_hand_basis() {
        // Oracle: span{1(x)1, i(x)i, 1(x)i + i(x)1}.
        let over = gaussian();
        let s = over.s();
        let ts = tensor_square(&over).unwrap();
        let delta = delta_subalgebra(&over, &ts).unwrap();
        let (one, i) = (s.basis_vector(0), s.basis_vector(1));
        let hand = Subspace::span(
            &Rationals,
            4,
            &[
                ts.pure(&one, &one),
                ts.pure(&i, &i),
                ts.algebra.add(&ts.pure(&one, &i), &ts.pure(&i, &one)),
            ],
        );
        assert_eq!(delta, hand);
    }

    #[test]
    fn epimorphisms() {
        let q = AlgebraOver::over_field(FiniteDimAlgebra::base_algebra(Rationals));
        assert!(epimorphism_check(&q).unwrap());
        assert!(!epimorphism_check(&f4()).unwrap());
        assert!(!epimorphism_check(&gaussian()).unwrap());
        // S over itself.
        let s = gaussian().s().clone();
        let full = Subspace::full(&Rationals, 2);
        let over = AlgebraOver::over_subalgebra(s, full).unwrap();
        assert!(epimorphism_check(&over).unwrap());
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let s = FiniteDimAlgebra::truncated(Rationals, "T", 3).unwrap();
        let span_t = Subspace::span(&Rationals, 3, &[s.basis_vector(1)]);
        assert!(matches!(
            quotient_algebra(&s, &span_t),
            Err(Error::NotAnIdeal(_))
        ));
    }
}
