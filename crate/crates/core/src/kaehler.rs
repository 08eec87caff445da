//! Kaehler differentials of a finitely presented finite-dimensional algebra,
//! derivations out of it, and the comparison map `W -> Omega`.
//!
//! `Omega_{S/F}` is the cokernel of the Jacobian: `S^n` modulo the rows
//! `(df_i/dx_j)_j` and their `S`-multiples. Over a subalgebra `R` the
//! differentials `d r` of `R` are divided out as well.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{kron, AlgebraModule, FiniteDimAlgebra, QPhi};
use crate::error::{Error, Result};
use crate::exact::{ExtensionField, Monomial, MultiPoly, PolyRing};
use crate::linalg::{mat_mul, mat_vec, quotient_space, rank, solve, Matrix, Quotient, Subspace};
use crate::ring::{Field, Ring};

/// `F[x_1..x_n]/(f_1..f_m)` together with a basis realization of the quotient.
#[derive(Debug, Clone)]
pub struct PresentedAlgebra<F: Field> {
    ring: PolyRing<F>,
    relations: Vec<MultiPoly<F::Elem>>,
    algebra: FiniteDimAlgebra<F>,
    /// Images of the generators in `algebra`.
    images: Vec<Vec<F::Elem>>,
    /// `lifts[k]` is a polynomial whose image is the `k`-th basis vector.
    lifts: Vec<MultiPoly<F::Elem>>,
}

impl<F: Field> PresentedAlgebra<F> {
    /// Checks that every relation vanishes on the images and that the images
    /// generate the algebra.
    pub fn new(
        ring: PolyRing<F>,
        relations: Vec<MultiPoly<F::Elem>>,
        algebra: FiniteDimAlgebra<F>,
        images: Vec<Vec<F::Elem>>,
    ) -> Result<Self> {
        if ring.base() != algebra.field() {
            return Err(Error::InconsistentInputs(String::from(
                "presentation and realization over different fields",
            )));
        }
        if images.len() != ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: ring.nvars(),
                found: images.len(),
            });
        }
        let mut a = PresentedAlgebra {
            ring,
            relations,
            algebra,
            images,
            lifts: Vec::new(),
        };
        if let Some(f) = a.relations.iter().find(|f| !a.algebra.is_zero(&a.eval(f))) {
            return Err(Error::InconsistentInputs(format!(
                "relation {} does not vanish in the realization",
                a.ring.render(f)
            )));
        }
        a.lifts = a.basis_lifts()?;
        Ok(a)
    }

    /// `F[x]/(f)` for monic `f`, lowest coefficient first.
    pub fn univariate(field: F, modulus: &[F::Elem], var: &str) -> Result<Self> {
        let algebra = FiniteDimAlgebra::univariate(field.clone(), modulus, var)?;
        let ring = PolyRing::new(field, &[var]);
        let rel = ring.from_terms(
            modulus
                .iter()
                .enumerate()
                .map(|(k, c)| (vec![k as u32], c.clone())),
        );
        // For a linear modulus x is the scalar -f_0.
        let x = if algebra.dim() == 1 {
            algebra.scale(&ring.base().neg(&modulus[0]), algebra.unit())
        } else {
            algebra.basis_vector(1)
        };
        Self::new(ring, vec![rel], algebra, vec![x])
    }

    /// `F[x]/(x^k)`.
    pub fn truncated(field: F, var: &str, k: usize) -> Result<Self> {
        let mut m = vec![field.zero(); k + 1];
        m[k] = field.one();
        Self::univariate(field, &m, var)
    }

    pub fn from_extension(ext: &ExtensionField<F>) -> Result<Self> {
        Self::univariate(ext.base().clone(), ext.modulus(), ext.generator_name())
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn relations(&self) -> &[MultiPoly<F::Elem>] {
        &self.relations
    }

    pub fn algebra(&self) -> &FiniteDimAlgebra<F> {
        &self.algebra
    }

    pub fn images(&self) -> &[Vec<F::Elem>] {
        &self.images
    }

    pub fn field(&self) -> &F {
        self.algebra.field()
    }

    pub fn num_generators(&self) -> usize {
        self.ring.nvars()
    }

    /// Image of a polynomial in the realization.
    pub fn eval(&self, p: &MultiPoly<F::Elem>) -> Vec<F::Elem> {
        let s = &self.algebra;
        self.ring
            .evaluate(p, s, |c| s.scale(c, s.unit()), &self.images)
    }

    /// A polynomial mapping to `v`.
    pub fn lift(&self, v: &[F::Elem]) -> MultiPoly<F::Elem> {
        let f = self.field();
        let terms = v
            .iter()
            .zip(&self.lifts)
            .filter(|(c, _)| !f.is_zero(c))
            .map(|(c, p)| self.ring.scale(c, p));
        terms.fold(self.ring.zero(), |acc, p| self.ring.add(&acc, &p))
    }

    /// Jacobian entry `df_i/dx_j` evaluated in `S`.
    pub fn jacobian(&self) -> Vec<Vec<Vec<F::Elem>>> {
        self.relations
            .iter()
            .map(|f| {
                (0..self.num_generators())
                    .map(|j| self.eval(&self.ring.derivative(f, j)))
                    .collect()
            })
            .collect()
    }

    /// Monomials in the generators, by increasing degree, until their images
    /// stop growing; then the basis vectors solved in terms of them.
    fn basis_lifts(&self) -> Result<Vec<MultiPoly<F::Elem>>> {
        let f = self.field();
        let n = self.num_generators();
        let dim = self.algebra.dim();
        let mut chosen: Vec<(Monomial, Vec<F::Elem>)> = Vec::new();
        let mut span = Subspace::zero(dim);
        let mut degree = 0u32;
        loop {
            let mut grew = false;
            for exps in exponent_vectors(n, degree) {
                let m = Monomial(exps);
                let v = self.eval(&self.ring.monomial(m.clone(), f.one()));
                if !span.contains_vector(f, &v) {
                    let mut vs: Vec<_> = span.basis().to_vec();
                    vs.push(v.clone());
                    span = Subspace::span(f, dim, &vs);
                    chosen.push((m, v));
                    grew = true;
                }
            }
            if !grew || span.dim() == dim {
                break;
            }
            degree += 1;
        }
        if span.dim() < dim {
            return Err(Error::InconsistentInputs(format!(
                "generators span only {} of {} dimensions",
                span.dim(),
                dim
            )));
        }
        let values: Vec<_> = chosen.iter().map(|(_, v)| v.clone()).collect();
        let m = Matrix::from_cols(&values, dim);
        Ok((0..dim)
            .map(|k| {
                let c = solve(f, &m, &self.algebra.basis_vector(k)).expect("values span");
                chosen.iter().zip(&c).filter(|(_, c)| !f.is_zero(c)).fold(
                    self.ring.zero(),
                    |acc, ((mono, _), c)| {
                        self.ring
                            .add(&acc, &self.ring.monomial(mono.clone(), c.clone()))
                    },
                )
            })
            .collect())
    }
}

fn exponent_vectors(n: usize, degree: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if degree == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in (0..=degree).rev() {
        for mut rest in exponent_vectors(n - 1, degree - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `Omega_{S/R}` as a quotient of `S^n`, coordinates `(j, b)` at `j * dim S + b`.
#[derive(Debug, Clone)]
pub struct KaehlerModule<F: Field> {
    pub presented: PresentedAlgebra<F>,
    /// The subalgebra `R` the differentials are relative to.
    pub r: Subspace<F::Elem>,
    pub relations: Subspace<F::Elem>,
    pub quotient: Quotient<F::Elem>,
    /// `S -> Omega`, in quotient coordinates.
    pub d: Matrix<F::Elem>,
}

impl<F: Field> KaehlerModule<F> {
    pub fn dim(&self) -> usize {
        self.quotient.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn differential(&self, s: &[F::Elem]) -> Vec<F::Elem> {
        mat_vec(self.presented.field(), &self.d, s)
    }

    /// `s * w` for `w` in quotient coordinates.
    pub fn act(&self, s: &[F::Elem], w: &[F::Elem]) -> Vec<F::Elem> {
        let lifted = mat_vec(self.presented.field(), &self.quotient.lift, w);
        mat_vec(
            self.presented.field(),
            &self.quotient.project,
            &self.act_free(s, &lifted),
        )
    }

    fn act_free(&self, s: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
        let alg = self.presented.algebra();
        v.chunks(alg.dim())
            .flat_map(|c| alg.multiply(s, c))
            .collect()
    }

    /// `Omega` as a module over `S`.
    pub fn module(&self) -> AlgebraModule<F> {
        let alg = self.presented.algebra();
        let actions = (0..alg.dim())
            .map(|k| {
                let e = alg.basis_vector(k);
                let cols: Vec<_> = (0..self.dim())
                    .map(|c| {
                        let mut w = vec![self.presented.field().zero(); self.dim()];
                        w[c] = self.presented.field().one();
                        self.act(&e, &w)
                    })
                    .collect();
                Matrix::from_cols(&cols, self.dim())
            })
            .collect();
        AlgebraModule::new(alg.clone(), self.dim(), actions).expect("quotient of a free module")
    }
}

/// `Omega_{S/F}`.
pub fn kaehler_module<F: Field>(a: &PresentedAlgebra<F>) -> KaehlerModule<F> {
    let r = Subspace::span(a.field(), a.algebra().dim(), &[a.algebra().unit().to_vec()]);
    kaehler_module_over(a, r).expect("the scalars form a subalgebra")
}

/// `Omega_{S/R}`: also divides out `S * d(R)`.
pub fn kaehler_module_over<F: Field>(
    a: &PresentedAlgebra<F>,
    r: Subspace<F::Elem>,
) -> Result<KaehlerModule<F>> {
    let f = a.field();
    let alg = a.algebra();
    let (n, dim) = (a.num_generators(), alg.dim());
    if r.ambient() != dim || !r.contains_vector(f, alg.unit()) {
        return Err(Error::InconsistentInputs(String::from(
            "R must be a subspace of S containing the unit",
        )));
    }
    let free_d = |s: &[F::Elem]| -> Vec<F::Elem> {
        let p = a.lift(s);
        (0..n)
            .flat_map(|j| a.eval(&a.ring().derivative(&p, j)))
            .collect()
    };
    let mut gens: Vec<Vec<F::Elem>> = a.jacobian().into_iter().map(|row| row.concat()).collect();
    gens.extend(r.basis().iter().map(|v| free_d(v)));
    let mut rels = Vec::with_capacity(gens.len() * dim);
    for g in &gens {
        for b in 0..dim {
            let e = alg.basis_vector(b);
            rels.push(g.chunks(dim).flat_map(|c| alg.multiply(&e, c)).collect());
        }
    }
    let relations = Subspace::span(f, n * dim, &rels);
    let quotient = quotient_space(f, &relations);
    let cols: Vec<_> = (0..dim)
        .map(|k| mat_vec(f, &quotient.project, &free_d(&alg.basis_vector(k))))
        .collect();
    let d = Matrix::from_cols(&cols, quotient.dim);
    Ok(KaehlerModule {
        presented: a.clone(),
        r,
        relations,
        quotient,
        d,
    })
}

/// An `F`-linear derivation `S -> M`, as a `dim M x dim S` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation<F: Field> {
    pub target: AlgebraModule<F>,
    pub matrix: Matrix<F::Elem>,
}

impl<F: Field> Derivation<F> {
    pub fn apply(&self, s: &[F::Elem]) -> Vec<F::Elem> {
        mat_vec(self.target.algebra().field(), &self.matrix, s)
    }

    /// The zero derivation into `target`.
    pub fn zero(target: AlgebraModule<F>) -> Self {
        let f = target.algebra().field();
        let matrix = Matrix::zeros(f, target.dim(), target.algebra().dim());
        Derivation { target, matrix }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DerivationCheck<F: Field> {
    Valid(Derivation<F>),
    /// The relation at `index` maps to the nonzero `residual`.
    Invalid {
        index: usize,
        relation: String,
        residual: Vec<F::Elem>,
    },
}

impl<F: Field> DerivationCheck<F> {
    pub fn is_valid(&self) -> bool {
        matches!(self, DerivationCheck::Valid(_))
    }
}

/// Extends `x_j -> images[j]` by the Leibniz rule; valid iff every relation
/// maps to zero.
pub fn derivation_check<F: Field>(
    a: &PresentedAlgebra<F>,
    target: &AlgebraModule<F>,
    images: &[Vec<F::Elem>],
) -> Result<DerivationCheck<F>> {
    if target.algebra() != a.algebra() {
        return Err(Error::InconsistentInputs(String::from(
            "target is a module over a different algebra",
        )));
    }
    if images.len() != a.num_generators() {
        return Err(Error::DimensionMismatch {
            expected: a.num_generators(),
            found: images.len(),
        });
    }
    let f = a.field();
    let apply = |p: &MultiPoly<F::Elem>| -> Vec<F::Elem> {
        images
            .iter()
            .enumerate()
            .fold(vec![f.zero(); target.dim()], |acc, (j, m)| {
                let coeff = a.eval(&a.ring().derivative(p, j));
                let term = target.act(&coeff, m);
                acc.iter().zip(&term).map(|(x, y)| f.add(x, y)).collect()
            })
    };
    for (index, rel) in a.relations().iter().enumerate() {
        let residual = apply(rel);
        if residual.iter().any(|x| !f.is_zero(x)) {
            return Ok(DerivationCheck::Invalid {
                index,
                relation: a.ring().render(rel),
                residual,
            });
        }
    }
    let cols: Vec<_> = a.lifts.iter().map(apply).collect();
    Ok(DerivationCheck::Valid(Derivation {
        target: target.clone(),
        matrix: Matrix::from_cols(&cols, target.dim()),
    }))
}

/// The map `W -> Omega` and its rank.
#[derive(Debug, Clone)]
pub struct WToOmega<F: Field> {
    /// `Q -> Omega`, in quotient coordinates of both.
    pub on_q: Matrix<F::Elem>,
    /// Restriction to `W`, in the coordinates of its basis.
    pub on_w: Matrix<F::Elem>,
    pub rank: usize,
    pub surjective: bool,
    pub kernel_dim: usize,
}

impl<F: Field> WToOmega<F> {
    pub fn bijective(&self) -> bool {
        self.surjective && self.kernel_dim == 0
    }
}

/// `class(s (x) s' (x) t) -> t (d(s) s' - s d(s'))`, checked to vanish on the
/// relations defining `Q`, then restricted to `W`.
pub fn w_to_omega<F: Field>(q: &QPhi<F>, omega: &KaehlerModule<F>) -> Result<WToOmega<F>> {
    let s = q.s();
    if s != omega.presented.algebra() {
        return Err(Error::InconsistentInputs(String::from(
            "Q and Omega are built from different algebras",
        )));
    }
    let f = q.field();
    let r_here = q.over.r();
    if r_here.dim() != omega.r.dim() || !omega.r.contains(f, r_here)? {
        return Err(Error::InconsistentInputs(String::from(
            "Q and Omega are relative to different subalgebras",
        )));
    }
    let n = s.dim();
    let ts = &q.tensor_square;
    let basis_d: Vec<_> = (0..n)
        .map(|k| omega.differential(&s.basis_vector(k)))
        .collect();
    // On S (x)_F S (x)_F S, coordinates ((i, j), k).
    let mut full_cols = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            let ei = s.basis_vector(i);
            let ej = s.basis_vector(j);
            let cross = omega
                .act(&ej, &basis_d[i])
                .iter()
                .zip(&omega.act(&ei, &basis_d[j]))
                .map(|(x, y)| f.sub(x, y))
                .collect::<Vec<_>>();
            for k in 0..n {
                full_cols.push(omega.act(&s.basis_vector(k), &cross));
            }
        }
    }
    let full = Matrix::from_cols(&full_cols, omega.dim());
    let lift_triple = {
        let cols: Vec<_> = (0..ts.dim() * n)
            .map(|c| {
                let x = ts.lift.col(c / n);
                kron(f, &x, &s.basis_vector(c % n))
            })
            .collect();
        Matrix::from_cols(&cols, n * n * n)
    };
    let on_triple = mat_mul(f, &full, &lift_triple);
    if let Some(rel) = q
        .relations
        .basis()
        .iter()
        .find(|v| mat_vec(f, &on_triple, v).iter().any(|x| !f.is_zero(x)))
    {
        return Err(Error::IllDefined(format!(
            "W -> Omega is nonzero on relation {}",
            q.triple.render(rel)
        )));
    }
    let on_q = mat_mul(f, &on_triple, &q.q.quotient.lift);
    let w_cols: Vec<_> = q.w.basis().iter().map(|v| mat_vec(f, &on_q, v)).collect();
    let on_w = Matrix::from_cols(&w_cols, omega.dim());
    let rk = rank(f, &on_w);
    Ok(WToOmega {
        on_q,
        on_w,
        rank: rk,
        surjective: rk == omega.dim(),
        kernel_dim: q.dim_w() - rk,
    })
}
