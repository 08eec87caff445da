use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::FiniteDimAlgebra;
use crate::error::{Error, Result};
use crate::exact::PrimeField;
use crate::linalg::{kernel, mat_vec, Matrix};
use crate::quad::{
    axiom_check, domain_size, AlgebraCarrier, Axiom, Mode, QuadCarrier, QuadForm, Variant, Verdict,
    Witness,
};
use crate::ring::{FiniteRing, Ring};

/// Largest constraint matrix, in entries, the solver builds.
pub const CENSUS_GUARD: u128 = 10_000_000;
/// Largest `|M|` on which counted maps are replayed through exhaustive checks.
pub const REPLAY_LIMIT: usize = 256;
/// Largest number of value tables the raw oracle enumerates.
pub const RAW_ORACLE_LIMIT: u128 = 4096;
/// Largest number of Gram candidates the Gram oracle enumerates.
pub const GRAM_ORACLE_LIMIT: u128 = 100_000;

/// A quadratic map `S^k -> N` over `F_p` is determined by `a_u = q(e_u)` and
/// `b_uv = pol(e_u, e_v)` for `u < v`, where `e_u` runs over the
/// `F_p`-basis of `M`. Every choice of these values is realized by
/// `q(x) = sum_u x_u^2 a_u + sum_{u<v} x_u x_v b_uv`, and `pol(e_u, e_u) = 2 a_u`.
///
/// Unknown `(slot, j)` is coordinate `j` of the value in slot `slot`, at
/// index `slot * n + j`; slots `0..D` hold `a_u`, the rest `b_uv` in
/// upper-triangular order.
#[derive(Debug, Clone)]
struct Layout {
    f: PrimeField,
    s: FiniteDimAlgebra<PrimeField>,
    /// `dim_F S`.
    d: usize,
    /// `dim_F N`.
    n: usize,
    /// `dim_F M = k d`.
    big_d: usize,
}

impl Layout {
    fn slots(&self) -> usize {
        self.big_d + self.big_d * (self.big_d - 1) / 2
    }

    fn unknowns(&self) -> usize {
        self.slots() * self.n
    }

    fn pair_slot(&self, u: usize, v: usize) -> usize {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        self.big_d + u * self.big_d - u * (u + 1) / 2 + (v - u - 1)
    }

    /// `F_p` coordinates of a vector of `M`.
    fn coords(&self, x: &[Vec<u64>]) -> Vec<u64> {
        x.iter().flatten().copied().collect()
    }

    fn basis_vector(&self, u: usize, k: usize) -> Vec<Vec<u64>> {
        let mut x = vec![vec![0; self.d]; k];
        x[u / self.d][u % self.d] = 1;
        x
    }

    /// `pol(x, y) = sum_{u,v} x_u y_v pol(e_u, e_v)` as an expression.
    fn pol_expr(&self, xc: &[u64], yc: &[u64]) -> Expr {
        let mut e = Expr::zero(self);
        for (u, xu) in xc.iter().enumerate().filter(|(_, c)| **c != 0) {
            for (v, yv) in yc.iter().enumerate().filter(|(_, c)| **c != 0) {
                let c = self.f.mul(xu, yv);
                if u == v {
                    e.add_slot(self, u, self.f.add(&c, &c));
                } else {
                    e.add_slot(self, self.pair_slot(u, v), c);
                }
            }
        }
        e
    }

    /// `q(x) = sum_u x_u^2 a_u + sum_{u<v} x_u x_v b_uv` as an expression.
    fn q_expr(&self, xc: &[u64]) -> Expr {
        let mut e = Expr::zero(self);
        for u in 0..self.big_d {
            if xc[u] == 0 {
                continue;
            }
            e.add_slot(self, u, self.f.mul(&xc[u], &xc[u]));
            for v in u + 1..self.big_d {
                if xc[v] != 0 {
                    e.add_slot(self, self.pair_slot(u, v), self.f.mul(&xc[u], &xc[v]));
                }
            }
        }
        e
    }

    /// `q(x)` for a parameter vector.
    fn eval(&self, params: &[u64], x: &[Vec<u64>]) -> Vec<u64> {
        let xc = self.coords(x);
        let e = self.q_expr(&xc);
        e.apply(self, params)
    }
}

/// An `N`-valued expression linear in the unknowns: `n` rows of length
/// `unknowns`.
#[derive(Debug, Clone, PartialEq)]
struct Expr(Vec<Vec<u64>>);

impl Expr {
    fn zero(l: &Layout) -> Self {
        Expr(vec![vec![0; l.unknowns()]; l.n])
    }

    /// Adds `c` times the value in `slot`.
    fn add_slot(&mut self, l: &Layout, slot: usize, c: u64) {
        for j in 0..l.n {
            let cell = &mut self.0[j][slot * l.n + j];
            *cell = l.f.add(cell, &c);
        }
    }

    /// `A e` for an `n x n` matrix `A`.
    fn act(&self, l: &Layout, a: &Matrix<u64>) -> Self {
        let mut out = Expr::zero(l);
        for j in 0..l.n {
            for k in 0..l.n {
                let c = *a.get(j, k);
                if c == 0 {
                    continue;
                }
                for (o, x) in out.0[j].iter_mut().zip(&self.0[k]) {
                    *o = l.f.add(o, &l.f.mul(&c, x));
                }
            }
        }
        out
    }

    fn sub(mut self, l: &Layout, other: &Expr) -> Self {
        for (r, o) in self.0.iter_mut().zip(&other.0) {
            for (a, b) in r.iter_mut().zip(o) {
                *a = l.f.sub(a, b);
            }
        }
        self
    }

    fn apply(&self, l: &Layout, params: &[u64]) -> Vec<u64> {
        self.0
            .iter()
            .map(|row| {
                row.iter()
                    .zip(params)
                    .fold(0, |acc, (a, b)| l.f.add(&acc, &l.f.mul(a, b)))
            })
            .collect()
    }
}

/// A relative map that is not `S`-quadratic, replayed through the checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusWitness {
    /// `(e_u, q(e_u))` for nonzero values.
    pub basis_values: Vec<(String, String)>,
    /// `((e_u, e_v), pol(e_u, e_v))` for nonzero values, `u < v`.
    pub basis_polarisations: Vec<(String, String)>,
    /// Exhaustive verdicts on square-scaling, biadditivity and R-bilinearity.
    pub relative_axioms_pass: bool,
    /// The failing instance of S-bilinearity.
    pub s_bilinearity: Option<Witness>,
}

/// Independent counts for the smallest carriers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracles {
    /// `(relative, absolute)` counts over all value tables with `q(0) = 0`.
    pub raw: Option<(u128, u128)>,
    /// Distinct Gram forms, and whether each lies in the absolute solution set.
    pub gram: Option<(u128, bool)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusResult {
    pub carrier: String,
    pub prime: u64,
    pub rank: usize,
    /// `F_p`-dimension of the `S/R`-quadratic maps.
    pub dim_relative: usize,
    /// `F_p`-dimension of the `S`-quadratic maps.
    pub dim_absolute: usize,
    pub count_relative: u128,
    pub count_absolute: u128,
    pub oracles: Oracles,
    /// Basis maps of the relative solution set replayed exhaustively, and
    /// whether all passed; `None` above [`REPLAY_LIMIT`].
    pub replay: Option<(usize, bool)>,
    pub witness: Option<CensusWitness>,
}

impl CensusResult {
    pub fn count(&self, relative: bool) -> u128 {
        if relative {
            self.count_relative
        } else {
            self.count_absolute
        }
    }

    /// `count_relative / count_absolute`, a power of `p`.
    pub fn discrepancy(&self) -> u128 {
        self.count_relative / self.count_absolute
    }
}

fn pow_checked(p: u64, e: usize) -> Result<u128> {
    (p as u128)
        .checked_pow(e as u32)
        .ok_or_else(|| Error::GuardExceeded {
            what: String::from("count"),
            size: u128::MAX,
            limit: u128::MAX,
        })
}

struct Systems {
    layout: Layout,
    relative: Vec<Vec<u64>>,
    absolute: Vec<Vec<u64>>,
}

fn build_systems(carrier: &AlgebraCarrier<PrimeField>) -> Result<Systems> {
    let over = carrier.over();
    let s = over.s().clone();
    let f = *over.field();
    let k = carrier.rank();
    let d = s.dim();
    let layout = Layout {
        f,
        s: s.clone(),
        d,
        n: carrier.target().dim(),
        big_d: k * d,
    };
    let l = &layout;
    let elements = carrier
        .finite()
        .ok_or_else(|| Error::ModeIncompatible(String::from("census needs an enumerable carrier")))?
        .s_elements;
    let big_d = l.big_d as u128;
    let square_rows = elements.len() as u128 * l.slots() as u128 * l.n as u128;
    let bilinear_rows = d as u128 * big_d * big_d * l.n as u128;
    let entries = (square_rows + bilinear_rows) * l.unknowns() as u128;
    if entries > CENSUS_GUARD {
        return Err(Error::GuardExceeded {
            what: String::from("census constraint matrix"),
            size: entries,
            limit: CENSUS_GUARD,
        });
    }
    let target = carrier.target();
    let basis: Vec<Vec<Vec<u64>>> = (0..l.big_d).map(|u| l.basis_vector(u, k)).collect();
    let scale = |lam: &[u64], x: &[Vec<u64>]| -> Vec<Vec<u64>> {
        x.iter().map(|c| s.multiply(lam, c)).collect()
    };
    // q(lam e_u) = lam^2 a_u and pol(lam e_u, lam e_v) = lam^2 b_uv.
    let mut square = Vec::new();
    for lam in &elements {
        let act = target.action_matrix(&s.multiply(lam, lam));
        let scaled: Vec<Vec<u64>> = basis.iter().map(|e| l.coords(&scale(lam, e))).collect();
        for u in 0..l.big_d {
            let mut slot = Expr::zero(l);
            slot.add_slot(l, u, 1);
            square.extend(l.q_expr(&scaled[u]).sub(l, &slot.act(l, &act)).0);
            for v in u + 1..l.big_d {
                let mut slot = Expr::zero(l);
                slot.add_slot(l, l.pair_slot(u, v), 1);
                square.extend(
                    l.pol_expr(&scaled[u], &scaled[v])
                        .sub(l, &slot.act(l, &act))
                        .0,
                );
            }
        }
    }
    // pol(r e_u, e_v) = r pol(e_u, e_v), linear in r, so a basis suffices.
    let bilinear = |scalars: &[Vec<u64>]| -> Vec<Vec<u64>> {
        let mut rows = Vec::new();
        for r in scalars {
            let act = target.action_matrix(r);
            for u in 0..l.big_d {
                let ru = l.coords(&scale(r, &basis[u]));
                for v in 0..l.big_d {
                    let ev = l.coords(&basis[v]);
                    let eu = l.coords(&basis[u]);
                    let lhs = l.pol_expr(&ru, &ev);
                    rows.extend(lhs.sub(l, &l.pol_expr(&eu, &ev).act(l, &act)).0);
                }
            }
        }
        rows
    };
    let mut relative = square.clone();
    relative.extend(bilinear(over.r().basis()));
    let mut absolute = square;
    absolute.extend(bilinear(&s.basis()));
    Ok(Systems {
        layout,
        relative,
        absolute,
    })
}

fn param_form(
    carrier: &AlgebraCarrier<PrimeField>,
    layout: &Layout,
    params: Vec<u64>,
) -> QuadForm<AlgebraCarrier<PrimeField>> {
    let l = layout.clone();
    QuadForm::from_fn(carrier.clone(), "census map", Variant::Custom, move |x| {
        l.eval(&params, x)
    })
}

fn relative_axioms_pass(q: &QuadForm<AlgebraCarrier<PrimeField>>) -> Result<bool> {
    for axiom in [
        Axiom::SquareScaling,
        Axiom::Biadditivity,
        Axiom::RBilinearity,
    ] {
        if axiom_check(q, axiom, &Mode::Exhaustive)?.verdict != Verdict::Pass {
            return Ok(false);
        }
    }
    Ok(true)
}

fn witness_for(
    carrier: &AlgebraCarrier<PrimeField>,
    layout: &Layout,
    params: &[u64],
    replay: bool,
) -> Result<CensusWitness> {
    let l = layout;
    let k = carrier.rank();
    let render = |slot: usize| -> Option<String> {
        let v = &params[slot * l.n..(slot + 1) * l.n];
        v.iter()
            .any(|c| *c != 0)
            .then(|| carrier.render_value(&v.to_vec()))
    };
    let mut basis_values = Vec::new();
    let mut basis_polarisations = Vec::new();
    for u in 0..l.big_d {
        let eu = carrier.render_vector(&l.basis_vector(u, k));
        if let Some(v) = render(u) {
            basis_values.push((eu.clone(), v));
        }
        for v in u + 1..l.big_d {
            if let Some(val) = render(l.pair_slot(u, v)) {
                let ev = carrier.render_vector(&l.basis_vector(v, k));
                basis_polarisations.push((format!("{eu}, {ev}"), val));
            }
        }
    }
    let (relative_axioms_pass, s_bilinearity) = if replay {
        let q = param_form(carrier, l, params.to_vec());
        let s = axiom_check(&q, Axiom::SBilinearity, &Mode::Exhaustive)?;
        (relative_axioms_pass(&q)?, s.witness)
    } else {
        (false, None)
    };
    Ok(CensusWitness {
        basis_values,
        basis_polarisations,
        relative_axioms_pass,
        s_bilinearity,
    })
}

/// Gram forms `sum_{i<=j} c_ij x_i x_j` with `N = S`, as parameter vectors.
fn gram_oracle(
    carrier: &AlgebraCarrier<PrimeField>,
    sys: &Systems,
    elements: &[Vec<u64>],
) -> Option<(u128, bool)> {
    let l = &sys.layout;
    let k = carrier.rank();
    let coeffs = k * (k + 1) / 2;
    let total = (elements.len() as u128).checked_pow(coeffs as u32)?;
    if !carrier.is_regular() || total > GRAM_ORACLE_LIMIT {
        return None;
    }
    let s = &l.s;
    let abs = Matrix::from_rows(&sys.absolute, l.unknowns());
    let mut seen = BTreeSet::new();
    let mut inside = true;
    for idx in 0..total {
        let mut rest = idx;
        let c: Vec<&Vec<u64>> = (0..coeffs)
            .map(|_| {
                let e = &elements[(rest % elements.len() as u128) as usize];
                rest /= elements.len() as u128;
                e
            })
            .collect();
        let gram = |x: &[Vec<u64>]| -> Vec<u64> {
            let mut acc = s.zero();
            let mut t = 0;
            for i in 0..k {
                for j in i..k {
                    acc = s.add(&acc, &s.multiply(c[t], &s.multiply(&x[i], &x[j])));
                    t += 1;
                }
            }
            acc
        };
        let mut params = vec![0; l.unknowns()];
        let basis: Vec<_> = (0..l.big_d).map(|u| l.basis_vector(u, k)).collect();
        for u in 0..l.big_d {
            params[u * l.n..(u + 1) * l.n].copy_from_slice(&gram(&basis[u]));
            for v in u + 1..l.big_d {
                let sum: Vec<Vec<u64>> = basis[u]
                    .iter()
                    .zip(&basis[v])
                    .map(|(a, b)| s.add(a, b))
                    .collect();
                let pol = s.sub(&s.sub(&gram(&sum), &gram(&basis[u])), &gram(&basis[v]));
                let slot = l.pair_slot(u, v);
                params[slot * l.n..(slot + 1) * l.n].copy_from_slice(&pol);
            }
        }
        inside &= mat_vec(&l.f, &abs, &params).iter().all(|c| *c == 0);
        seen.insert(params);
    }
    Some((seen.len() as u128, inside))
}

/// Counts over every value table `M -> N` with `q(0) = 0`, checked
/// exhaustively.
fn raw_oracle(carrier: &AlgebraCarrier<PrimeField>) -> Result<Option<(u128, u128)>> {
    let Some(size) = domain_size(carrier) else {
        return Ok(None);
    };
    let f = *carrier.over().field();
    let n = carrier.target().dim();
    let values = (f.order() as u128)
        .checked_pow(n as u32)
        .unwrap_or(u128::MAX);
    let tables = values.checked_pow(size as u32 - 1).unwrap_or(u128::MAX);
    if tables > RAW_ORACLE_LIMIT {
        return Ok(None);
    }
    let decode = |mut i: u128| -> Vec<u64> {
        (0..n)
            .map(|_| {
                let c = (i % f.order() as u128) as u64;
                i /= f.order() as u128;
                c
            })
            .collect()
    };
    let (mut relative, mut absolute) = (0, 0);
    for t in 0..tables {
        let mut rest = t;
        let mut table = vec![decode(0)];
        for _ in 1..size {
            table.push(decode(rest % values));
            rest /= values;
        }
        let q = QuadForm::table(carrier.clone(), table)?;
        if relative_axioms_pass(&q)? {
            relative += 1;
            if axiom_check(&q, Axiom::SBilinearity, &Mode::Exhaustive)?.verdict == Verdict::Pass {
                absolute += 1;
            }
        }
    }
    Ok(Some((relative, absolute)))
}

/// Counts `S/R`-quadratic and `S`-quadratic maps `S^k -> N` by solving the
/// linear constraints on the parameterization over `F_p`.
///
/// The carrier must be [`AlgebraCarrier::enumerable`]. Square-scaling is
/// imposed for every `lambda` in `S`; bilinearity over a basis of `R`
/// (relative) or of `S` (absolute).
pub fn enumerate_quads(carrier: &AlgebraCarrier<PrimeField>) -> Result<CensusResult> {
    let sys = build_systems(carrier)?;
    let l = &sys.layout;
    let p = l.f.p();
    let u = l.unknowns();
    let rel_kernel = kernel(&l.f, &Matrix::from_rows(&sys.relative, u));
    let abs_matrix = Matrix::from_rows(&sys.absolute, u);
    let dim_absolute = kernel(&l.f, &abs_matrix).len();
    let dim_relative = rel_kernel.len();
    let elements = carrier.finite().expect("enumerable").s_elements;
    let small = domain_size(carrier).is_some_and(|m| m <= REPLAY_LIMIT);
    let replay = if small {
        let mut ok = true;
        for v in &rel_kernel {
            ok &= relative_axioms_pass(&param_form(carrier, l, v.clone()))?;
        }
        Some((rel_kernel.len(), ok))
    } else {
        None
    };
    let witness = rel_kernel
        .iter()
        .find(|v| mat_vec(&l.f, &abs_matrix, v).iter().any(|c| *c != 0))
        .map(|v| witness_for(carrier, l, v, small))
        .transpose()?;
    Ok(CensusResult {
        carrier: carrier.describe(),
        prime: p,
        rank: carrier.rank(),
        dim_relative,
        dim_absolute,
        count_relative: pow_checked(p, dim_relative)?,
        count_absolute: pow_checked(p, dim_absolute)?,
        oracles: Oracles {
            raw: raw_oracle(carrier)?,
            gram: gram_oracle(carrier, &sys, &elements),
        },
        replay,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraOver;

    fn carrier(s: FiniteDimAlgebra<PrimeField>, rank: usize) -> AlgebraCarrier<PrimeField> {
        AlgebraCarrier::regular(AlgebraOver::over_field(s), rank).enumerable()
    }

    #[test]
    fn plane_over_f2_has_eight_maps() {
        let f2 = PrimeField::new(2).unwrap();
        let r = enumerate_quads(&carrier(FiniteDimAlgebra::base_algebra(f2), 2)).unwrap();
        assert_eq!((r.count_relative, r.count_absolute), (8, 8));
        assert_eq!(r.oracles.raw, Some((8, 8)));
        assert_eq!(r.oracles.gram, Some((8, true)));
        assert!(r.witness.is_none());
    }

    #[test]
    fn f4_line_matches_raw_tables() {
        let f2 = PrimeField::new(2).unwrap();
        let f4 = FiniteDimAlgebra::univariate(f2, &[1, 1, 1], "a").unwrap();
        let r = enumerate_quads(&carrier(f4, 1)).unwrap();
        assert_eq!((r.count_relative, r.count_absolute), (4, 4));
        assert_eq!(r.oracles.raw, Some((4, 4)));
    }

    #[test]
    fn dual_numbers_char2_line_is_evaluation_at_one() {
        let f2 = PrimeField::new(2).unwrap();
        let s = FiniteDimAlgebra::truncated(f2, "T", 2).unwrap();
        let r = enumerate_quads(&carrier(s, 1)).unwrap();
        // Quad(S, N) = N through q -> q(1), relative or not.
        assert_eq!((r.count_relative, r.count_absolute), (4, 4));
        assert_eq!(r.oracles.raw, Some((4, 4)));
    }

    #[test]
    fn dual_numbers_char2_plane_has_exotic_maps() {
        let f2 = PrimeField::new(2).unwrap();
        let s = FiniteDimAlgebra::truncated(f2, "T", 2).unwrap();
        let r = enumerate_quads(&carrier(s, 2)).unwrap();
        assert!(r.count_relative > r.count_absolute);
        assert_eq!(r.oracles.gram, Some((64, true)));
        assert_eq!(r.count_absolute, 64);
        let w = r.witness.unwrap();
        assert!(w.relative_axioms_pass);
        assert!(w.s_bilinearity.is_some());
        assert_eq!(r.replay.map(|(_, ok)| ok), Some(true));
    }
}
