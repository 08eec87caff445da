use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::carrier::{AlgebraCarrier, QuadCarrier, RingCarrier};
use crate::algebra::{AlgebraModule, AlgebraOver, QPhi};
use crate::error::{Error, Result};
use crate::exact::PartialDifferentiable;
use crate::kaehler::Derivation;
use crate::linalg::{mat_vec, Matrix};
use crate::ring::Field;

/// How a quadratic map was built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Variant {
    /// `q(x) = sum_{i <= j} c_ij x_i x_j`.
    Gram,
    /// `q(s, s') = d(s) s' - s d(s')`.
    Derivation,
    /// `q(F, G) = d^k(FG) / dT_{i_1} ... dT_{i_k}`, indices ascending.
    HigherDerivative(Vec<usize>),
    /// A functional on `W` applied to the `W`-part of `s (x) s' (x) 1`.
    Exotic,
    /// `(s, s') -> class(s (x) s' (x) 1)` in `Q`.
    UniversalCross,
    /// Explicit values on a finite domain.
    Table,
    Custom,
}

type EvalFn<C> = Arc<dyn Fn(&[<C as QuadCarrier>::Scalar]) -> <C as QuadCarrier>::Value>;

/// A map `M -> N` on a carrier, evaluated by a stored rule.
#[derive(Clone)]
pub struct QuadForm<C: QuadCarrier> {
    carrier: C,
    variant: Variant,
    name: String,
    eval: EvalFn<C>,
}

impl<C: QuadCarrier> fmt::Debug for QuadForm<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuadForm")
            .field("name", &self.name)
            .field("variant", &self.variant)
            .field("carrier", &self.carrier)
            .finish()
    }
}

impl<C: QuadCarrier + 'static> QuadForm<C> {
    pub fn from_fn(
        carrier: C,
        name: &str,
        variant: Variant,
        f: impl Fn(&[C::Scalar]) -> C::Value + 'static,
    ) -> Self {
        QuadForm {
            carrier,
            variant,
            name: String::from(name),
            eval: Arc::new(f),
        }
    }

    pub fn carrier(&self) -> &C {
        &self.carrier
    }

    pub fn variant(&self) -> &Variant {
        &self.variant
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, x: &[C::Scalar]) -> Result<C::Value> {
        if x.len() != self.carrier.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.carrier.rank(),
                found: x.len(),
            });
        }
        Ok((self.eval)(x))
    }

    /// Evaluation without the length check.
    pub(crate) fn eval_unchecked(&self, x: &[C::Scalar]) -> C::Value {
        (self.eval)(x)
    }

    /// Precomposition with `x -> f(x)`, a map from `S^rank` into the domain.
    pub fn pullback(
        &self,
        rank: usize,
        name: &str,
        f: impl Fn(&[C::Scalar]) -> Vec<C::Scalar> + 'static,
    ) -> Self {
        let inner = self.eval.clone();
        QuadForm {
            carrier: self.carrier.with_rank(rank),
            variant: Variant::Custom,
            name: String::from(name),
            eval: Arc::new(move |x| inner(&f(x))),
        }
    }

    /// `q(x) = sum_{i <= j} c_ij x_i x_j`, coefficients in the order
    /// `(0,0), (0,1), ..., (0,k-1), (1,1), ...`.
    pub fn gram(carrier: C, coeffs: Vec<C::Value>) -> Result<Self> {
        let k = carrier.rank();
        if coeffs.len() != k * (k + 1) / 2 {
            return Err(Error::DimensionMismatch {
                expected: k * (k + 1) / 2,
                found: coeffs.len(),
            });
        }
        let c = carrier.clone();
        Ok(Self::from_fn(carrier, "gram", Variant::Gram, move |x| {
            let mut acc = c.value_zero();
            let mut idx = 0;
            for i in 0..k {
                for j in i..k {
                    let xij = c.scalar_mul(&x[i], &x[j]);
                    acc = c.value_add(&acc, &c.value_act(&xij, &coeffs[idx]));
                    idx += 1;
                }
            }
            acc
        }))
    }

    /// Values at every vector of a finite carrier, indexed as in
    /// [`vector_index`].
    pub fn table(carrier: C, values: Vec<C::Value>) -> Result<Self> {
        let size = domain_size(&carrier)
            .ok_or_else(|| Error::ModeIncompatible(String::from("table needs a finite carrier")))?;
        if values.len() != size {
            return Err(Error::DimensionMismatch {
                expected: size,
                found: values.len(),
            });
        }
        let c = carrier.clone();
        Ok(Self::from_fn(carrier, "table", Variant::Table, move |x| {
            values[vector_index(&c, x)].clone()
        }))
    }
}

impl<F: Field + crate::ring::FiniteRing + 'static> QuadForm<AlgebraCarrier<F>> {
    /// The same map on the enumerable version of its carrier.
    pub fn enumerable(mut self) -> Self {
        self.carrier = self.carrier.enumerable();
        self
    }
}

/// `|S|^rank` for a finite carrier.
pub fn domain_size<C: QuadCarrier>(c: &C) -> Option<usize> {
    c.order()?.checked_pow(c.rank() as u32)
}

/// Mixed-radix index of a vector of a finite carrier, first component least
/// significant.
pub fn vector_index<C: QuadCarrier>(c: &C, x: &[C::Scalar]) -> usize {
    let order = c.order().unwrap_or(0);
    x.iter()
        .rev()
        .fold(0, |acc, s| acc * order + c.scalar_index(s))
}

/// `pol_q(x, y) = q(x + y) - q(x) - q(y)`.
pub fn polarize<C: QuadCarrier + 'static>(
    q: &QuadForm<C>,
    x: &[C::Scalar],
    y: &[C::Scalar],
) -> Result<C::Value> {
    let c = q.carrier();
    let sum = q.eval(&c.vector_add(x, y))?;
    Ok(c.value_sub(&c.value_sub(&sum, &q.eval(x)?), &q.eval(y)?))
}

fn require_rank<C: QuadCarrier>(c: &C, rank: usize) -> Result<()> {
    if c.rank() != rank {
        return Err(Error::DimensionMismatch {
            expected: rank,
            found: c.rank(),
        });
    }
    Ok(())
}

/// `(F, G) -> dF/dx_var G - F dG/dx_var` on `S^2`.
pub fn derivation_form_ring<R>(
    carrier: RingCarrier<R>,
    var: usize,
) -> Result<QuadForm<RingCarrier<R>>>
where
    R: PartialDifferentiable + 'static,
{
    require_rank(&carrier, 2)?;
    let ring = carrier.ring().clone();
    if var >= ring.num_vars() {
        return Err(Error::UnknownVariable(format!("index {var}")));
    }
    Ok(QuadForm::from_fn(
        carrier,
        "F'G - FG'",
        Variant::Derivation,
        move |x| {
            let a = ring.mul(&ring.partial(&x[0], var), &x[1]);
            let b = ring.mul(&x[0], &ring.partial(&x[1], var));
            ring.sub(&a, &b)
        },
    ))
}

/// `q_d(s, s') = d(s) s' - s d(s')` for a derivation into the carrier's
/// target module.
pub fn derivation_form<F: Field + 'static>(
    carrier: AlgebraCarrier<F>,
    d: &Derivation<F>,
) -> Result<QuadForm<AlgebraCarrier<F>>> {
    require_rank(&carrier, 2)?;
    if d.target != *carrier.target() {
        return Err(Error::InconsistentInputs(String::from(
            "derivation and carrier have different targets",
        )));
    }
    let matrix = d.matrix.clone();
    let c = carrier.clone();
    Ok(QuadForm::from_fn(
        carrier,
        "d(s)s' - s d(s')",
        Variant::Derivation,
        move |x| {
            let f = c.over().field();
            let ds = mat_vec(f, &matrix, &x[0]);
            let dt = mat_vec(f, &matrix, &x[1]);
            c.value_sub(&c.value_act(&x[1], &ds), &c.value_act(&x[0], &dt))
        },
    ))
}

/// `q_I(F, G) = d^k(FG) / dT_{i_1} ... dT_{i_k}` in characteristic 2.
pub fn higher_derivative_form<R>(
    carrier: RingCarrier<R>,
    indices: &[usize],
) -> Result<QuadForm<RingCarrier<R>>>
where
    R: PartialDifferentiable + 'static,
{
    require_rank(&carrier, 2)?;
    let ring = carrier.ring().clone();
    if ring.characteristic() != 2 {
        return Err(Error::WrongCharacteristic {
            required: "2",
            found: ring.characteristic(),
        });
    }
    let mut idx = indices.to_vec();
    idx.sort_unstable();
    if let Some(w) = idx.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::RepeatedIndex(w[0]));
    }
    if let Some(&i) = idx.iter().find(|&&i| i >= ring.num_vars()) {
        return Err(Error::UnknownVariable(format!("index {i}")));
    }
    let name = if idx.is_empty() {
        String::from("FG")
    } else {
        let parts: Vec<String> = idx.iter().map(|i| format!("{}", i + 1)).collect();
        format!("q_{{{}}}", parts.join(","))
    };
    let variant = Variant::HigherDerivative(idx.clone());
    Ok(QuadForm::from_fn(carrier, &name, variant, move |x| {
        idx.iter()
            .fold(ring.mul(&x[0], &x[1]), |acc, &i| ring.partial(&acc, i))
    }))
}

/// `(s, s') -> class(s (x) s' (x) 1)`, valued in `Q` as an `S`-module.
pub fn universal_cross_map<F: Field + 'static>(q: &QPhi<F>) -> QuadForm<AlgebraCarrier<F>> {
    let carrier =
        AlgebraCarrier::new(q.over.clone(), q.q_module.clone(), 2).expect("Q is a module over S");
    let qq = q.clone();
    let one = q.s().unit().to_vec();
    QuadForm::from_fn(
        carrier,
        "s (x) s' (x) 1",
        Variant::UniversalCross,
        move |x| qq.class3(&x[0], &x[1], &one),
    )
}

/// `(s, s') -> f(w)` where `class(s (x) s' (x) 1) = section(t) + w`, for an
/// `S`-linear `f: W -> N` given as a `dim N x dim W` matrix.
pub fn exotic_form<F: Field + 'static>(
    q: &QPhi<F>,
    target: AlgebraModule<F>,
    f: &Matrix<F::Elem>,
) -> Result<QuadForm<AlgebraCarrier<F>>> {
    if f.cols() != q.dim_w() {
        return Err(Error::DimensionMismatch {
            expected: q.dim_w(),
            found: f.cols(),
        });
    }
    if f.rows() != target.dim() {
        return Err(Error::DimensionMismatch {
            expected: target.dim(),
            found: f.rows(),
        });
    }
    if !q.w_module.is_linear_map_to(&target, f) {
        return Err(Error::NotLinear(String::from(
            "functional on W is not S-linear",
        )));
    }
    let carrier = AlgebraCarrier::new(q.over.clone(), target, 2)?;
    let qq = q.clone();
    let f = f.clone();
    let one = q.s().unit().to_vec();
    Ok(QuadForm::from_fn(
        carrier,
        "f(W-part of s (x) s' (x) 1)",
        Variant::Exotic,
        move |x| {
            let (_, w) = qq.split(&qq.class3(&x[0], &x[1], &one));
            mat_vec(qq.field(), &f, &w)
        },
    ))
}

/// The carrier `S^2 -> S` over `over` for derivation and exotic forms.
pub fn plane_carrier<F: Field>(over: &AlgebraOver<F>) -> AlgebraCarrier<F> {
    AlgebraCarrier::regular(over.clone(), 2)
}
