use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::carrier::QuadCarrier;
use super::forms::{domain_size, QuadForm};
use crate::error::{Error, Result};

/// Largest number of elementary comparisons an exhaustive check may make.
pub const EXHAUSTIVE_GUARD: u128 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    /// `q(l x) = l^2 q(x)` for `l` in `S`.
    SquareScaling,
    /// `pol(x + y, z) = pol(x, z) + pol(y, z)`.
    Biadditivity,
    /// `pol(l x, y) = l pol(x, y)` for `l` in `R`.
    RBilinearity,
    /// `pol(l x, y) = l pol(x, y)` for `l` in `S`.
    SBilinearity,
}

impl Axiom {
    pub const ALL: [Axiom; 4] = [
        Axiom::SquareScaling,
        Axiom::Biadditivity,
        Axiom::RBilinearity,
        Axiom::SBilinearity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::SquareScaling => "square-scaling",
            Axiom::Biadditivity => "biadditivity",
            Axiom::RBilinearity => "R-bilinearity",
            Axiom::SBilinearity => "S-bilinearity",
        }
    }
}

/// Declared inputs for sampled checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TestSet<S> {
    pub s_scalars: Vec<S>,
    pub r_scalars: Vec<S>,
    pub vectors: Vec<Vec<S>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mode<S> {
    /// Every input of a finite carrier.
    Exhaustive,
    /// Bases of `S`, `R` and `M` over the base field; valid for the
    /// bilinearity axioms once the polarisation is biadditive.
    Basis,
    Sampled(TestSet<S>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeKind {
    Exhaustive,
    Basis,
    Sampled,
}

impl ModeKind {
    pub fn name(self) -> &'static str {
        match self {
            ModeKind::Exhaustive => "exhaustive",
            ModeKind::Basis => "basis",
            ModeKind::Sampled => "sampled",
        }
    }
}

impl<S> Mode<S> {
    pub fn kind(&self) -> ModeKind {
        match self {
            Mode::Exhaustive => ModeKind::Exhaustive,
            Mode::Basis => ModeKind::Basis,
            Mode::Sampled(_) => ModeKind::Sampled,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// A sampled check found nothing; not a proof.
    NoCounterexampleFound,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NoCounterexampleFound => "no-counterexample-found",
        }
    }

    pub fn failed(self) -> bool {
        self == Verdict::Fail
    }
}

/// Named inputs with both sides of the violated equation, rendered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub inputs: Vec<(String, String)>,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn render(&self) -> String {
        let ins: Vec<String> = self
            .inputs
            .iter()
            .map(|(k, v)| format!("{k} = {v}"))
            .collect();
        format!("{}: {} != {}", ins.join(", "), self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub mode: ModeKind,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Number of equations compared.
    pub checked: u64,
}

/// Checks one axiom. A failure always carries a witness; the first in the
/// iteration order (scalar, then first vector, then second) is reported.
pub fn axiom_check<C: QuadCarrier + 'static>(
    q: &QuadForm<C>,
    axiom: Axiom,
    mode: &Mode<C::Scalar>,
) -> Result<AxiomReport> {
    let outcome = match mode {
        Mode::Exhaustive => Exhaustive::new(q)?.check(axiom)?,
        Mode::Basis => basis_check(q, axiom)?,
        Mode::Sampled(set) => sampled_check(q, axiom, set),
    };
    let (witness, checked) = outcome;
    let verdict = match (&witness, mode.kind()) {
        (Some(_), _) => Verdict::Fail,
        (None, ModeKind::Sampled) => Verdict::NoCounterexampleFound,
        (None, _) => Verdict::Pass,
    };
    Ok(AxiomReport {
        axiom,
        mode: mode.kind(),
        verdict,
        witness,
        checked,
    })
}

/// All four axioms in one mode; basis mode reports square-scaling and
/// biadditivity exhaustively when the carrier is finite and skips them
/// otherwise.
pub fn check_all<C: QuadCarrier + 'static>(
    q: &QuadForm<C>,
    mode: &Mode<C::Scalar>,
) -> Result<Vec<AxiomReport>> {
    let mut out = Vec::new();
    for axiom in Axiom::ALL {
        let m = match (mode, axiom) {
            (Mode::Basis, Axiom::SquareScaling | Axiom::Biadditivity) => {
                if domain_size(q.carrier()).is_none() {
                    continue;
                }
                &Mode::Exhaustive
            }
            _ => mode,
        };
        out.push(axiom_check(q, axiom, m)?);
    }
    Ok(out)
}

type Outcome = (Option<Witness>, u64);

fn scalar_witness<C: QuadCarrier>(
    c: &C,
    l: &C::Scalar,
    xs: &[(&str, &[C::Scalar])],
    lhs: &C::Value,
    rhs: &C::Value,
) -> Witness {
    let mut inputs = vec![(String::from("lambda"), c.render_scalar(l))];
    inputs.extend(
        xs.iter()
            .map(|(n, v)| (String::from(*n), c.render_vector(v))),
    );
    Witness {
        inputs,
        lhs: c.render_value(lhs),
        rhs: c.render_value(rhs),
    }
}

fn vector_witness<C: QuadCarrier>(
    c: &C,
    xs: &[(&str, &[C::Scalar])],
    lhs: &C::Value,
    rhs: &C::Value,
) -> Witness {
    Witness {
        inputs: xs
            .iter()
            .map(|(n, v)| (String::from(*n), c.render_vector(v)))
            .collect(),
        lhs: c.render_value(lhs),
        rhs: c.render_value(rhs),
    }
}

/// Tabulated evaluation over every vector of a finite carrier.
struct Exhaustive<'a, C: QuadCarrier> {
    q: &'a QuadForm<C>,
    order: usize,
    rank: usize,
    size: usize,
    s_elements: Vec<C::Scalar>,
    r_indices: Vec<usize>,
    add: Vec<usize>,
    mul: Vec<usize>,
    values: Vec<C::Value>,
}

impl<'a, C: QuadCarrier + 'static> Exhaustive<'a, C> {
    fn new(q: &'a QuadForm<C>) -> Result<Self> {
        let c = q.carrier();
        let fin = c.finite().ok_or_else(|| {
            Error::ModeIncompatible(String::from("exhaustive mode needs a finite carrier"))
        })?;
        let size = domain_size(c).ok_or_else(|| Error::GuardExceeded {
            what: String::from("domain size"),
            size: u128::MAX,
            limit: EXHAUSTIVE_GUARD,
        })?;
        let order = fin.s_elements.len();
        let table = |op: &dyn Fn(&C::Scalar, &C::Scalar) -> C::Scalar| -> Vec<usize> {
            let mut t = Vec::with_capacity(order * order);
            for a in &fin.s_elements {
                for b in &fin.s_elements {
                    t.push(c.scalar_index(&op(a, b)));
                }
            }
            t
        };
        let add = table(&|a, b| c.scalar_add(a, b));
        let mul = table(&|a, b| c.scalar_mul(a, b));
        let r_indices = fin.r_elements.iter().map(|r| c.scalar_index(r)).collect();
        let mut ex = Exhaustive {
            q,
            order,
            rank: c.rank(),
            size,
            s_elements: fin.s_elements,
            r_indices,
            add,
            mul,
            values: Vec::new(),
        };
        ex.values = (0..size).map(|i| q.eval_unchecked(&ex.vector(i))).collect();
        Ok(ex)
    }

    fn digits(&self, mut i: usize) -> Vec<usize> {
        (0..self.rank)
            .map(|_| {
                let d = i % self.order;
                i /= self.order;
                d
            })
            .collect()
    }

    fn vector(&self, i: usize) -> Vec<C::Scalar> {
        self.digits(i)
            .into_iter()
            .map(|d| self.s_elements[d].clone())
            .collect()
    }

    fn combine(&self, x: usize, y: usize, table: &[usize]) -> usize {
        let (mut x, mut y, mut out, mut place) = (x, y, 0, 1);
        for _ in 0..self.rank {
            out += table[(x % self.order) * self.order + y % self.order] * place;
            x /= self.order;
            y /= self.order;
            place *= self.order;
        }
        out
    }

    fn sum(&self, x: usize, y: usize) -> usize {
        self.combine(x, y, &self.add)
    }

    /// `l x` for a scalar index `l`.
    fn scale(&self, l: usize, x: usize) -> usize {
        let mut replicated = 0;
        for _ in 0..self.rank {
            replicated = replicated * self.order + l;
        }
        self.combine(replicated, x, &self.mul)
    }

    fn pol(&self, x: usize, y: usize) -> C::Value {
        let c = self.q.carrier();
        let v = c.value_sub(&self.values[self.sum(x, y)], &self.values[x]);
        c.value_sub(&v, &self.values[y])
    }

    /// Additive generators of `S`, chosen greedily.
    fn scalar_generators(&self) -> Vec<usize> {
        let mut reached = vec![false; self.order];
        reached[0] = true;
        let mut gens = Vec::new();
        while let Some(g) = reached.iter().position(|r| !r) {
            gens.push(g);
            loop {
                let mut grew = false;
                for a in 0..self.order {
                    if reached[a] {
                        let b = self.add[a * self.order + g];
                        if !reached[b] {
                            reached[b] = true;
                            grew = true;
                        }
                    }
                }
                if !grew {
                    break;
                }
            }
        }
        gens
    }

    fn guard(&self, work: u128) -> Result<()> {
        if work > EXHAUSTIVE_GUARD {
            return Err(Error::GuardExceeded {
                what: String::from("exhaustive axiom check"),
                size: work,
                limit: EXHAUSTIVE_GUARD,
            });
        }
        Ok(())
    }

    fn check(&self, axiom: Axiom) -> Result<Outcome> {
        let c = self.q.carrier();
        let m = self.size as u128;
        match axiom {
            Axiom::SquareScaling => {
                self.guard(self.order as u128 * m)?;
                let mut n = 0;
                for l in 0..self.order {
                    let l2 = &self.s_elements[self.mul[l * self.order + l]];
                    for x in 0..self.size {
                        n += 1;
                        let lhs = &self.values[self.scale(l, x)];
                        let rhs = c.value_act(l2, &self.values[x]);
                        if *lhs != rhs {
                            let w = scalar_witness(
                                c,
                                &self.s_elements[l],
                                &[("x", &self.vector(x))],
                                lhs,
                                &rhs,
                            );
                            return Ok((Some(w), n));
                        }
                    }
                }
                Ok((None, n))
            }
            Axiom::Biadditivity => {
                // Additivity in the first slot along generators of M implies
                // additivity for all sums by induction.
                let gens: Vec<usize> = self
                    .scalar_generators()
                    .into_iter()
                    .flat_map(|g| (0..self.rank).map(move |i| g * self.order.pow(i as u32)))
                    .collect();
                self.guard(m * m * gens.len() as u128)?;
                let pol_g: Vec<Vec<C::Value>> = gens
                    .iter()
                    .map(|&g| (0..self.size).map(|z| self.pol(g, z)).collect())
                    .collect();
                let mut n = 0;
                for x in 0..self.size {
                    for z in 0..self.size {
                        let pxz = self.pol(x, z);
                        for (k, &g) in gens.iter().enumerate() {
                            n += 1;
                            let lhs = self.pol(self.sum(x, g), z);
                            let rhs = c.value_add(&pxz, &pol_g[k][z]);
                            if lhs != rhs {
                                let (xv, gv, zv) = (self.vector(x), self.vector(g), self.vector(z));
                                let w = vector_witness(
                                    c,
                                    &[("x", &xv), ("y", &gv), ("z", &zv)],
                                    &lhs,
                                    &rhs,
                                );
                                return Ok((Some(w), n));
                            }
                        }
                    }
                }
                Ok((None, n))
            }
            Axiom::RBilinearity | Axiom::SBilinearity => {
                let scalars: Vec<usize> = if axiom == Axiom::RBilinearity {
                    self.r_indices.clone()
                } else {
                    (0..self.order).collect()
                };
                self.guard(scalars.len() as u128 * m * m)?;
                let mut n = 0;
                for &l in &scalars {
                    for x in 0..self.size {
                        let lx = self.scale(l, x);
                        for y in 0..self.size {
                            n += 1;
                            let lhs = self.pol(lx, y);
                            let rhs = c.value_act(&self.s_elements[l], &self.pol(x, y));
                            if lhs != rhs {
                                let (xv, yv) = (self.vector(x), self.vector(y));
                                let w = scalar_witness(
                                    c,
                                    &self.s_elements[l],
                                    &[("x", &xv), ("y", &yv)],
                                    &lhs,
                                    &rhs,
                                );
                                return Ok((Some(w), n));
                            }
                        }
                    }
                }
                Ok((None, n))
            }
        }
    }
}

fn pol_direct<C: QuadCarrier + 'static>(
    q: &QuadForm<C>,
    x: &[C::Scalar],
    y: &[C::Scalar],
) -> C::Value {
    let c = q.carrier();
    let s = q.eval_unchecked(&c.vector_add(x, y));
    c.value_sub(&c.value_sub(&s, &q.eval_unchecked(x)), &q.eval_unchecked(y))
}

/// `pol(l x, y) = l pol(x, y)` over the given scalars and vectors.
fn homogeneity<C: QuadCarrier + 'static>(
    q: &QuadForm<C>,
    scalars: &[C::Scalar],
    vectors: &[Vec<C::Scalar>],
) -> Outcome {
    let c = q.carrier();
    let mut n = 0;
    for l in scalars {
        for x in vectors {
            let lx = c.vector_scale(l, x);
            for y in vectors {
                n += 1;
                let lhs = pol_direct(q, &lx, y);
                let rhs = c.value_act(l, &pol_direct(q, x, y));
                if lhs != rhs {
                    let w = scalar_witness(c, l, &[("x", x), ("y", y)], &lhs, &rhs);
                    return (Some(w), n);
                }
            }
        }
    }
    (None, n)
}

fn basis_check<C: QuadCarrier + 'static>(q: &QuadForm<C>, axiom: Axiom) -> Result<Outcome> {
    let c = q.carrier();
    if matches!(axiom, Axiom::SquareScaling | Axiom::Biadditivity) {
        return Err(Error::ModeIncompatible(format!(
            "{} is not linear in each slot",
            axiom.name()
        )));
    }
    let (s_basis, r_basis) = c.bases().ok_or_else(|| {
        Error::ModeIncompatible(String::from(
            "carrier has no basis over a prime-degree base field",
        ))
    })?;
    if domain_size(c).is_some() {
        let (w, _) = Exhaustive::new(q)?.check(Axiom::Biadditivity)?;
        if w.is_some() {
            return Err(Error::ModeIncompatible(String::from(
                "basis mode presumes a biadditive polarisation, which fails here",
            )));
        }
    }
    let m_basis: Vec<Vec<C::Scalar>> = (0..c.rank())
        .flat_map(|i| s_basis.iter().map(move |b| c.unit_vector(i, b)))
        .collect();
    let scalars = if axiom == Axiom::RBilinearity {
        &r_basis
    } else {
        &s_basis
    };
    Ok(homogeneity(q, scalars, &m_basis))
}

fn sampled_check<C: QuadCarrier + 'static>(
    q: &QuadForm<C>,
    axiom: Axiom,
    set: &TestSet<C::Scalar>,
) -> Outcome {
    let c = q.carrier();
    let vs = &set.vectors;
    match axiom {
        Axiom::SquareScaling => {
            let mut n = 0;
            for l in &set.s_scalars {
                let l2 = c.scalar_mul(l, l);
                for x in vs {
                    n += 1;
                    let lhs = q.eval_unchecked(&c.vector_scale(l, x));
                    let rhs = c.value_act(&l2, &q.eval_unchecked(x));
                    if lhs != rhs {
                        return (Some(scalar_witness(c, l, &[("x", x)], &lhs, &rhs)), n);
                    }
                }
            }
            (None, n)
        }
        Axiom::Biadditivity => {
            let pols: Vec<Vec<C::Value>> = vs
                .iter()
                .map(|x| vs.iter().map(|z| pol_direct(q, x, z)).collect())
                .collect();
            let mut n = 0;
            for (i, x) in vs.iter().enumerate() {
                for (j, y) in vs.iter().enumerate() {
                    let xy = c.vector_add(x, y);
                    let q_xy = q.eval_unchecked(&xy);
                    for (k, z) in vs.iter().enumerate() {
                        n += 1;
                        let s = q.eval_unchecked(&c.vector_add(&xy, z));
                        let lhs = c.value_sub(&c.value_sub(&s, &q_xy), &q.eval_unchecked(z));
                        let rhs = c.value_add(&pols[i][k], &pols[j][k]);
                        if lhs != rhs {
                            let w = vector_witness(c, &[("x", x), ("y", y), ("z", z)], &lhs, &rhs);
                            return (Some(w), n);
                        }
                    }
                }
            }
            (None, n)
        }
        Axiom::RBilinearity => homogeneity(q, &set.r_scalars, vs),
        Axiom::SBilinearity => homogeneity(q, &set.s_scalars, vs),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{PrimeField, Rationals};
    use crate::quad::carrier::RingCarrier;
    use crate::ring::Ring;

    #[test]
    fn identity_fails_square_scaling() {
        let q = Rationals;
        let id = QuadForm::from_fn(
            RingCarrier::new(q, 1, "Q"),
            "id",
            super::super::Variant::Custom,
            |x| x[0].clone(),
        );
        let set = TestSet {
            s_scalars: vec![q.from_i64(2), q.from_i64(3)],
            r_scalars: vec![q.from_i64(2)],
            vectors: vec![vec![q.one()]],
        };
        let r = axiom_check(&id, Axiom::SquareScaling, &Mode::Sampled(set.clone())).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        let w = r.witness.unwrap();
        assert_eq!(
            (w.inputs[0].1.as_str(), w.lhs.as_str(), w.rhs.as_str()),
            ("2", "2", "4")
        );
        let r = axiom_check(&id, Axiom::SBilinearity, &Mode::Sampled(set)).unwrap();
        assert_eq!(r.verdict, Verdict::NoCounterexampleFound);
    }

    #[test]
    fn indicator_of_nonzero_vectors() {
        let f2 = PrimeField::new(2).unwrap();
        let c = RingCarrier::finite(f2, 3);
        let q = QuadForm::from_fn(c, "nonzero -> 1", super::super::Variant::Custom, |x| {
            u64::from(x.iter().any(|&a| a != 0))
        });
        let sq = axiom_check(&q, Axiom::SquareScaling, &Mode::Exhaustive).unwrap();
        assert_eq!(sq.verdict, Verdict::Pass);
        let bi = axiom_check(&q, Axiom::Biadditivity, &Mode::Exhaustive).unwrap();
        assert_eq!(bi.verdict, Verdict::Fail);
        assert!(bi.witness.is_some());
        assert!(matches!(
            axiom_check(&q, Axiom::RBilinearity, &Mode::Basis),
            Err(Error::ModeIncompatible(_))
        ));
    }

    #[test]
    fn gram_forms_pass_everything() {
        let f3 = PrimeField::new(3).unwrap();
        let c = RingCarrier::finite(f3, 2);
        let q = QuadForm::gram(c, vec![1, 2, 1]).unwrap();
        for r in check_all(&q, &Mode::Exhaustive).unwrap() {
            assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        }
        for r in check_all(&q, &Mode::Basis).unwrap() {
            assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        }
    }
}
