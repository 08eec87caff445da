use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ring::FiniteRing;

/// Largest number of Gram candidates or value tables enumerated.
pub const RESOLUTION_GUARD: u128 = 10_000_000;

/// `M = coker(d1: S^m -> S^k)` over a finite commutative ring `S`.
///
/// `d1` has `k` rows; column `j` is the image of the `j`-th basis vector of
/// `F_1 = S^m`.
#[derive(Debug, Clone)]
pub struct Presentation<R: FiniteRing> {
    pub ring: R,
    pub rows: usize,
    pub d1: Vec<Vec<R::Elem>>,
}

impl<R: FiniteRing> Presentation<R> {
    pub fn new(ring: R, rows: usize, d1: Vec<Vec<R::Elem>>) -> Result<Self> {
        if d1.len() != rows {
            return Err(Error::DimensionMismatch {
                expected: rows,
                found: d1.len(),
            });
        }
        let cols = d1.first().map_or(0, Vec::len);
        if let Some(bad) = d1.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Presentation { ring, rows, d1 })
    }

    /// `S^k` with no relations.
    pub fn free(ring: R, rank: usize) -> Self {
        Presentation {
            ring,
            rows: rank,
            d1: vec![Vec::new(); rank],
        }
    }

    pub fn cols(&self) -> usize {
        self.d1.first().map_or(0, Vec::len)
    }
}

/// The kernel of `Quad(F_0, S) -> Quad(F_1 (+) F_0, S)`, `q -> q(d1 a + b) -
/// q(b)`, with quadratic maps on free modules written in Gram form.
#[derive(Debug, Clone)]
pub struct ResolutionQuad<E> {
    /// Gram coefficients `(0,0), (0,1), ..., (1,1), ...` of each kernel element.
    pub maps: Vec<Vec<E>>,
}

impl<E> ResolutionQuad<E> {
    pub fn order(&self) -> usize {
        self.maps.len()
    }
}

fn guard(what: &str, size: u128) -> Result<()> {
    if size > RESOLUTION_GUARD {
        return Err(Error::GuardExceeded {
            what: String::from(what),
            size,
            limit: RESOLUTION_GUARD,
        });
    }
    Ok(())
}

fn power(base: u64, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base as u128))
}

/// Digits of `i` in base `|S|`, least significant first.
fn decode<R: FiniteRing>(ring: &R, mut i: u128, len: usize) -> Vec<R::Elem> {
    let n = ring.order() as u128;
    (0..len)
        .map(|_| {
            let d = i % n;
            i /= n;
            ring.element(d as u64)
        })
        .collect()
}

fn encode<R: FiniteRing>(ring: &R, x: &[R::Elem]) -> usize {
    let n = ring.order() as usize;
    x.iter()
        .rev()
        .fold(0, |acc, a| acc * n + ring.index_of(a) as usize)
}

fn gram_eval<R: FiniteRing>(ring: &R, c: &[R::Elem], x: &[R::Elem]) -> R::Elem {
    let k = x.len();
    let mut acc = ring.zero();
    let mut idx = 0;
    for i in 0..k {
        for j in i..k {
            acc = ring.add(&acc, &ring.mul(&c[idx], &ring.mul(&x[i], &x[j])));
            idx += 1;
        }
    }
    acc
}

/// Gram coefficients of `x -> q(A x)` where column `i` of `A` is `cols[i]`.
fn pullback_gram<R: FiniteRing>(ring: &R, c: &[R::Elem], cols: &[Vec<R::Elem>]) -> Vec<R::Elem> {
    let q = |x: &[R::Elem]| gram_eval(ring, c, x);
    let mut out = Vec::new();
    for i in 0..cols.len() {
        out.push(q(&cols[i]));
        for j in i + 1..cols.len() {
            let sum: Vec<_> = cols[i]
                .iter()
                .zip(&cols[j])
                .map(|(a, b)| ring.add(a, b))
                .collect();
            out.push(ring.sub(&ring.sub(&q(&sum), &q(&cols[i])), &q(&cols[j])));
        }
    }
    out
}

/// `Quad_S(M, S)` for `M = coker(d1)` by the kernel formula.
///
/// On a free module a quadratic map is determined by its Gram coefficients
/// `c_ii = q(e_i)`, `c_ij = pol(e_i, e_j)`; the guard bounds `|S|^(k(k+1)/2)`.
pub fn resolution_quad<R: FiniteRing>(p: &Presentation<R>) -> Result<ResolutionQuad<R::Elem>> {
    let ring = &p.ring;
    let (k, m) = (p.rows, p.cols());
    let coeffs = k * (k + 1) / 2;
    let candidates = power(ring.order(), coeffs);
    guard("Gram candidates on F_0", candidates)?;
    // Columns of (a, b) -> d1 a + b and of (a, b) -> b on F_1 (+) F_0.
    let zero = || vec![ring.zero(); k];
    let mut shifted = Vec::with_capacity(m + k);
    let mut projected = Vec::with_capacity(m + k);
    for j in 0..m {
        shifted.push(p.d1.iter().map(|row| row[j].clone()).collect::<Vec<_>>());
        projected.push(zero());
    }
    for i in 0..k {
        let mut e = zero();
        e[i] = ring.one();
        shifted.push(e.clone());
        projected.push(e);
    }
    let mut maps = Vec::new();
    for idx in 0..candidates {
        let c = decode(ring, idx, coeffs);
        if pullback_gram(ring, &c, &shifted) == pullback_gram(ring, &c, &projected) {
            maps.push(c);
        }
    }
    Ok(ResolutionQuad { maps })
}

/// `|Quad_S(M, S)|` by enumerating value tables on the elements of
/// `M = coker(d1)` and checking every axiom; the oracle for
/// [`resolution_quad`].
pub fn direct_quad_count<R: FiniteRing>(p: &Presentation<R>) -> Result<usize> {
    let ring = &p.ring;
    let (k, m) = (p.rows, p.cols());
    let n = ring.order();
    let size = power(n, k);
    guard("elements of F_0", size)?;
    guard("relation combinations", power(n, m))?;
    let size = size as usize;
    let add = |x: &[R::Elem], y: &[R::Elem]| -> Vec<R::Elem> {
        x.iter().zip(y).map(|(a, b)| ring.add(a, b)).collect()
    };
    // Image of d1, then the coset of every vector as an index into `reps`.
    let mut in_image = vec![false; size];
    for idx in 0..power(n, m) {
        let a = decode(ring, idx, m);
        let v: Vec<_> =
            p.d1.iter()
                .map(|row| {
                    ring.sum(
                        row.iter()
                            .zip(&a)
                            .map(|(d, s)| ring.mul(d, s))
                            .collect::<Vec<_>>()
                            .iter(),
                    )
                })
                .collect();
        in_image[encode(ring, &v)] = true;
    }
    let image: Vec<Vec<R::Elem>> = (0..size)
        .filter(|&i| in_image[i])
        .map(|i| decode(ring, i as u128, k))
        .collect();
    let mut coset = vec![usize::MAX; size];
    let mut reps: Vec<Vec<R::Elem>> = Vec::new();
    for i in 0..size {
        if coset[i] != usize::MAX {
            continue;
        }
        let x = decode(ring, i as u128, k);
        for y in &image {
            coset[encode(ring, &add(&x, y))] = reps.len();
        }
        reps.push(x);
    }
    let elems = reps.len();
    let class = |x: &[R::Elem]| coset[encode(ring, x)];
    let sum_t: Vec<Vec<usize>> = reps
        .iter()
        .map(|x| reps.iter().map(|y| class(&add(x, y))).collect())
        .collect();
    let scalars = ring.elements();
    let scale_t: Vec<Vec<usize>> = scalars
        .iter()
        .map(|l| {
            reps.iter()
                .map(|x| class(&x.iter().map(|a| ring.mul(l, a)).collect::<Vec<_>>()))
                .collect()
        })
        .collect();
    // The zero class has index 0 and q(0) = 0.
    let tables = power(n, elems - 1);
    guard("value tables on M", tables)?;
    let mut count = 0;
    for t in 0..tables {
        let mut q = vec![ring.zero()];
        q.extend(decode(ring, t, elems - 1));
        let pol = |x: usize, y: usize| ring.sub(&ring.sub(&q[sum_t[x][y]], &q[x]), &q[y]);
        let scaling = scalars.iter().enumerate().all(|(li, l)| {
            (0..elems).all(|x| q[scale_t[li][x]] == ring.mul(&ring.square(l), &q[x]))
        });
        let biadditive = scaling
            && (0..elems).all(|x| {
                (0..elems).all(|y| {
                    (0..elems).all(|z| pol(sum_t[x][y], z) == ring.add(&pol(x, z), &pol(y, z)))
                })
            });
        let bilinear = biadditive
            && scalars.iter().enumerate().all(|(li, l)| {
                (0..elems)
                    .all(|x| (0..elems).all(|y| pol(scale_t[li][x], y) == ring.mul(l, &pol(x, y))))
            });
        if bilinear {
            count += 1;
        }
    }
    Ok(count)
}
