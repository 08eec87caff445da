use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{AlgebraModule, AlgebraOver, FiniteDimAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::ring::{Degree, Field, FiniteRing, Ring};

/// Where a quadratic map lives: a ring `S` with a subring `R`, the domain
/// `M = S^rank` and a target `S`-module `N`.
///
/// Vectors of `M` are component lists of scalars.
pub trait QuadCarrier: Clone + fmt::Debug {
    type Scalar: Clone + PartialEq + fmt::Debug;
    type Value: Clone + PartialEq + fmt::Debug;

    fn rank(&self) -> usize;
    /// The same `S`, `R` and `N` with domain `S^rank`.
    fn with_rank(&self, rank: usize) -> Self;
    fn describe(&self) -> String;

    fn scalar_zero(&self) -> Self::Scalar;
    fn scalar_one(&self) -> Self::Scalar;
    fn scalar_add(&self, a: &Self::Scalar, b: &Self::Scalar) -> Self::Scalar;
    fn scalar_mul(&self, a: &Self::Scalar, b: &Self::Scalar) -> Self::Scalar;
    fn render_scalar(&self, a: &Self::Scalar) -> String;

    fn value_zero(&self) -> Self::Value;
    fn value_add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn value_neg(&self, a: &Self::Value) -> Self::Value;
    /// The `S`-module action on `N`.
    fn value_act(&self, s: &Self::Scalar, v: &Self::Value) -> Self::Value;
    fn render_value(&self, v: &Self::Value) -> String;

    /// All elements of `S` and of `R` with an indexing of `S`, when finite.
    fn finite(&self) -> Option<FiniteScalars<Self::Scalar>>;
    /// `|S|`, when finite.
    fn order(&self) -> Option<usize>;
    /// Index of a scalar in `finite().s_elements`.
    fn scalar_index(&self, a: &Self::Scalar) -> usize;

    /// Bases of `S` and `R` over a base field of degree one over its prime
    /// field, when available.
    fn bases(&self) -> Option<(Vec<Self::Scalar>, Vec<Self::Scalar>)>;

    fn value_sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        self.value_add(a, &self.value_neg(b))
    }

    fn zero_vector(&self) -> Vec<Self::Scalar> {
        (0..self.rank()).map(|_| self.scalar_zero()).collect()
    }

    /// The vector with `s` at position `i` and zeros elsewhere.
    fn unit_vector(&self, i: usize, s: &Self::Scalar) -> Vec<Self::Scalar> {
        let mut v = self.zero_vector();
        v[i] = s.clone();
        v
    }

    fn vector_add(&self, x: &[Self::Scalar], y: &[Self::Scalar]) -> Vec<Self::Scalar> {
        x.iter()
            .zip(y)
            .map(|(a, b)| self.scalar_add(a, b))
            .collect()
    }

    fn vector_scale(&self, s: &Self::Scalar, x: &[Self::Scalar]) -> Vec<Self::Scalar> {
        x.iter().map(|a| self.scalar_mul(s, a)).collect()
    }

    fn render_vector(&self, x: &[Self::Scalar]) -> String {
        let parts: Vec<String> = x.iter().map(|a| self.render_scalar(a)).collect();
        format!("({})", parts.join(", "))
    }
}

/// Element lists of a finite carrier. `s_elements[0]` is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteScalars<S> {
    pub s_elements: Vec<S>,
    pub r_elements: Vec<S>,
}

type IndexFn<E> = Arc<dyn Fn(&E) -> usize>;

/// `S` a ring with `M = S^rank` and `N = S`; the subring is named only.
#[derive(Clone)]
pub struct RingCarrier<R: Ring> {
    ring: R,
    rank: usize,
    subring: String,
    finite: Option<(FiniteScalars<R::Elem>, IndexFn<R::Elem>)>,
}

impl<R: Ring> fmt::Debug for RingCarrier<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingCarrier")
            .field("ring", &self.ring)
            .field("rank", &self.rank)
            .field("subring", &self.subring)
            .field("finite", &self.finite.is_some())
            .finish()
    }
}

impl<R: Ring> RingCarrier<R> {
    /// `subring` describes `R` for reports; checks over `R` take their
    /// scalars from a test set.
    pub fn new(ring: R, rank: usize, subring: &str) -> Self {
        RingCarrier {
            ring,
            rank,
            subring: String::from(subring),
            finite: None,
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }
}

impl<R: FiniteRing + 'static> RingCarrier<R> {
    /// A finite ring over itself.
    pub fn finite(ring: R, rank: usize) -> Self {
        let elements = ring.elements();
        let r = ring.clone();
        let index: IndexFn<R::Elem> = Arc::new(move |a| r.index_of(a) as usize);
        RingCarrier {
            subring: String::from("S"),
            finite: Some((
                FiniteScalars {
                    s_elements: elements.clone(),
                    r_elements: elements,
                },
                index,
            )),
            ring,
            rank,
        }
    }
}

impl<R: Ring> QuadCarrier for RingCarrier<R> {
    type Scalar = R::Elem;
    type Value = R::Elem;

    fn rank(&self) -> usize {
        self.rank
    }
    fn with_rank(&self, rank: usize) -> Self {
        RingCarrier {
            rank,
            ..self.clone()
        }
    }
    fn describe(&self) -> String {
        format!("S^{} -> S over R = {}", self.rank, self.subring)
    }
    fn scalar_zero(&self) -> R::Elem {
        self.ring.zero()
    }
    fn scalar_one(&self) -> R::Elem {
        self.ring.one()
    }
    fn scalar_add(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.ring.add(a, b)
    }
    fn scalar_mul(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.ring.mul(a, b)
    }
    fn render_scalar(&self, a: &R::Elem) -> String {
        self.ring.render(a)
    }
    fn value_zero(&self) -> R::Elem {
        self.ring.zero()
    }
    fn value_add(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.ring.add(a, b)
    }
    fn value_neg(&self, a: &R::Elem) -> R::Elem {
        self.ring.neg(a)
    }
    fn value_act(&self, s: &R::Elem, v: &R::Elem) -> R::Elem {
        self.ring.mul(s, v)
    }
    fn render_value(&self, v: &R::Elem) -> String {
        self.ring.render(v)
    }
    fn finite(&self) -> Option<FiniteScalars<R::Elem>> {
        self.finite.as_ref().map(|(f, _)| f.clone())
    }
    fn order(&self) -> Option<usize> {
        self.finite.as_ref().map(|(f, _)| f.s_elements.len())
    }
    fn scalar_index(&self, a: &R::Elem) -> usize {
        let (_, index) = self.finite.as_ref().expect("finite carrier");
        index(a)
    }
    /// Only a prime ring `S = R` has a basis `{1}` here.
    fn bases(&self) -> Option<(Vec<R::Elem>, Vec<R::Elem>)> {
        let (fin, _) = self.finite.as_ref()?;
        let order = fin.s_elements.len() as u64;
        (order == self.ring.characteristic() && is_prime(order))
            .then(|| (alloc::vec![self.ring.one()], alloc::vec![self.ring.one()]))
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// `S` a finite-dimensional algebra over `F`, `R` a subalgebra, `M = S^rank`
/// and `N` an `S`-module.
#[derive(Clone)]
pub struct AlgebraCarrier<F: Field> {
    over: AlgebraOver<F>,
    target: AlgebraModule<F>,
    rank: usize,
    /// `N` is `S` acting on itself, rendered as algebra elements.
    regular: bool,
    finite: Option<(FiniteScalars<Vec<F::Elem>>, IndexFn<Vec<F::Elem>>)>,
}

impl<F: Field> fmt::Debug for AlgebraCarrier<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgebraCarrier")
            .field("over", &self.over)
            .field("target_dim", &self.target.dim())
            .field("rank", &self.rank)
            .field("finite", &self.finite.is_some())
            .finish()
    }
}

impl<F: Field> AlgebraCarrier<F> {
    pub fn new(over: AlgebraOver<F>, target: AlgebraModule<F>, rank: usize) -> Result<Self> {
        if target.algebra() != over.s() {
            return Err(Error::InconsistentInputs(String::from(
                "target is a module over a different algebra",
            )));
        }
        let regular = target == AlgebraModule::regular(over.s());
        Ok(AlgebraCarrier {
            over,
            target,
            rank,
            regular,
            finite: None,
        })
    }

    /// `N = S`.
    pub fn regular(over: AlgebraOver<F>, rank: usize) -> Self {
        let target = AlgebraModule::regular(over.s());
        AlgebraCarrier {
            over,
            target,
            rank,
            regular: true,
            finite: None,
        }
    }

    pub fn over(&self) -> &AlgebraOver<F> {
        &self.over
    }

    pub fn algebra(&self) -> &FiniteDimAlgebra<F> {
        self.over.s()
    }

    pub fn target(&self) -> &AlgebraModule<F> {
        &self.target
    }

    /// Whether `N` is `S` acting on itself.
    pub fn is_regular(&self) -> bool {
        self.regular
    }
}

impl<F: Field + FiniteRing + 'static> AlgebraCarrier<F> {
    /// Materializes the elements of `S` and `R` for exhaustive checks.
    pub fn enumerable(mut self) -> Self {
        let field = self.over.field().clone();
        let q = field.order() as usize;
        let n = self.algebra().dim();
        let s_elements: Vec<Vec<F::Elem>> = (0..q.pow(n as u32))
            .map(|mut i| {
                (0..n)
                    .map(|_| {
                        let e = field.element((i % q) as u64);
                        i /= q;
                        e
                    })
                    .collect()
            })
            .collect();
        let r = self.over.r();
        let r_elements = (0..q.pow(r.dim() as u32))
            .map(|mut i| {
                let coords: Vec<F::Elem> = (0..r.dim())
                    .map(|_| {
                        let e = field.element((i % q) as u64);
                        i /= q;
                        e
                    })
                    .collect();
                r.combine(&field, &coords)
            })
            .collect();
        let index: IndexFn<Vec<F::Elem>> = Arc::new(move |v| {
            v.iter()
                .rev()
                .fold(0, |acc, c| acc * q + field.index_of(c) as usize)
        });
        self.finite = Some((
            FiniteScalars {
                s_elements,
                r_elements,
            },
            index,
        ));
        self
    }
}

impl<F: Field> QuadCarrier for AlgebraCarrier<F> {
    type Scalar = Vec<F::Elem>;
    type Value = Vec<F::Elem>;

    fn rank(&self) -> usize {
        self.rank
    }
    fn with_rank(&self, rank: usize) -> Self {
        AlgebraCarrier {
            rank,
            ..self.clone()
        }
    }
    fn describe(&self) -> String {
        let s = self.algebra();
        format!(
            "S^{} -> N over {} with dim S = {}, dim R = {}, dim N = {}",
            self.rank,
            self.over.field().description(),
            s.dim(),
            self.over.r().dim(),
            self.target.dim()
        )
    }
    fn scalar_zero(&self) -> Vec<F::Elem> {
        self.algebra().zero()
    }
    fn scalar_one(&self) -> Vec<F::Elem> {
        self.algebra().one()
    }
    fn scalar_add(&self, a: &Vec<F::Elem>, b: &Vec<F::Elem>) -> Vec<F::Elem> {
        self.algebra().add(a, b)
    }
    fn scalar_mul(&self, a: &Vec<F::Elem>, b: &Vec<F::Elem>) -> Vec<F::Elem> {
        self.algebra().multiply(a, b)
    }
    fn render_scalar(&self, a: &Vec<F::Elem>) -> String {
        self.algebra().render(a)
    }
    fn value_zero(&self) -> Vec<F::Elem> {
        alloc::vec![self.over.field().zero(); self.target.dim()]
    }
    fn value_add(&self, a: &Vec<F::Elem>, b: &Vec<F::Elem>) -> Vec<F::Elem> {
        let f = self.over.field();
        a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
    }
    fn value_neg(&self, a: &Vec<F::Elem>) -> Vec<F::Elem> {
        let f = self.over.field();
        a.iter().map(|x| f.neg(x)).collect()
    }
    fn value_act(&self, s: &Vec<F::Elem>, v: &Vec<F::Elem>) -> Vec<F::Elem> {
        self.target.act(s, v)
    }
    fn render_value(&self, v: &Vec<F::Elem>) -> String {
        if self.regular {
            return self.algebra().render(v);
        }
        let f = self.over.field();
        let parts: Vec<String> = v.iter().map(|c| f.render(c)).collect();
        format!("[{}]", parts.join(", "))
    }
    fn finite(&self) -> Option<FiniteScalars<Vec<F::Elem>>> {
        self.finite.as_ref().map(|(f, _)| f.clone())
    }
    fn order(&self) -> Option<usize> {
        self.finite.as_ref().map(|(f, _)| f.s_elements.len())
    }
    fn scalar_index(&self, a: &Vec<F::Elem>) -> usize {
        let (_, index) = self.finite.as_ref().expect("finite carrier");
        index(a)
    }
    fn bases(&self) -> Option<(Vec<Vec<F::Elem>>, Vec<Vec<F::Elem>>)> {
        (self.over.field().degree() == Degree::Finite(1))
            .then(|| (self.algebra().basis(), self.over.r().basis().to_vec()))
    }
}

/// A subalgebra given by generators, materialized by closure.
pub fn subalgebra_generated<F: Field>(
    s: &FiniteDimAlgebra<F>,
    generators: &[Vec<F::Elem>],
) -> Subspace<F::Elem> {
    let mut gens = generators.to_vec();
    gens.push(s.unit().to_vec());
    crate::linalg::mult_closure(s.field(), s.dim(), &gens, |a, b| s.multiply(a, b))
}
