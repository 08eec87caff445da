use alloc::format;
use alloc::vec::Vec;

use super::axioms::Witness;
use super::carrier::QuadCarrier;
use super::forms::{QuadForm, Variant};

/// `q` on `M (+) M'` as `q_1` on `M`, the cross term `b(m, m') =
/// pol((m, 0), (0, m'))` and `q_2` on `M'`.
///
/// `cross` is stored as a map on the whole sum `(m, m') -> b(m, m')`.
#[derive(Debug, Clone)]
pub struct SplitForm<C: QuadCarrier> {
    pub first: QuadForm<C>,
    pub cross: QuadForm<C>,
    pub second: QuadForm<C>,
    /// Rank of `M`; `M'` has the remaining components.
    pub split_at: usize,
}

/// Splits `q` along `S^rank = S^split_at (+) S^(rank - split_at)`.
pub fn split_form<C: QuadCarrier + 'static>(q: &QuadForm<C>, split_at: usize) -> SplitForm<C> {
    let c = q.carrier().clone();
    let rank = c.rank();
    assert!(split_at <= rank, "split point inside the domain");
    let rest = rank - split_at;
    let (c1, q1) = (c.clone(), q.clone());
    let first = q.pullback(split_at, &format!("{}|M", q.name()), move |m| {
        let mut x = m.to_vec();
        x.extend((0..rest).map(|_| c1.scalar_zero()));
        x
    });
    let (c2, q2) = (c.clone(), q.clone());
    let second = q2.pullback(rest, &format!("{}|M'", q.name()), move |m| {
        let mut x: Vec<_> = (0..split_at).map(|_| c2.scalar_zero()).collect();
        x.extend_from_slice(m);
        x
    });
    let inner = q1.clone();
    let c3 = c.clone();
    let cross = QuadForm::from_fn(
        c.clone(),
        &format!("{} cross", q.name()),
        Variant::Custom,
        move |x| {
            let mut left = x.to_vec();
            let mut right = x.to_vec();
            for a in &mut left[split_at..] {
                *a = c3.scalar_zero();
            }
            for a in &mut right[..split_at] {
                *a = c3.scalar_zero();
            }
            let both = inner.eval_unchecked(x);
            let v = c3.value_sub(&both, &inner.eval_unchecked(&left));
            c3.value_sub(&v, &inner.eval_unchecked(&right))
        },
    );
    SplitForm {
        first,
        cross,
        second,
        split_at,
    }
}

impl<C: QuadCarrier + 'static> SplitForm<C> {
    /// `q_1(m) + b(m, m') + q_2(m')`.
    pub fn reconstruct(&self, x: &[C::Scalar]) -> C::Value {
        let c = self.cross.carrier();
        let (m, m2) = x.split_at(self.split_at);
        let v = c.value_add(&self.first.eval_unchecked(m), &self.cross.eval_unchecked(x));
        c.value_add(&v, &self.second.eval_unchecked(m2))
    }

    /// The first input where reconstruction differs from `q`.
    pub fn reconstruction_failure(
        &self,
        q: &QuadForm<C>,
        vectors: &[Vec<C::Scalar>],
    ) -> Option<Witness> {
        let c = q.carrier();
        vectors.iter().find_map(|x| {
            let (lhs, rhs) = (q.eval_unchecked(x), self.reconstruct(x));
            (lhs != rhs).then(|| Witness {
                inputs: alloc::vec![(alloc::string::String::from("x"), c.render_vector(x))],
                lhs: c.render_value(&lhs),
                rhs: c.render_value(&rhs),
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{PolyRing, Rationals};
    use crate::quad::carrier::RingCarrier;
    use crate::quad::forms::derivation_form_ring;
    use crate::ring::Ring;

    fn samples<R: Ring>(r: &R, gens: &[R::Elem]) -> Vec<Vec<R::Elem>> {
        let mut out = Vec::new();
        for a in gens {
            for b in gens {
                out.push(alloc::vec![a.clone(), b.clone()]);
            }
        }
        out.push(alloc::vec![r.zero(), r.zero()]);
        out
    }

    #[test]
    fn product_is_pure_cross() {
        let q = Rationals;
        let c = RingCarrier::new(q, 2, "Q");
        let form = QuadForm::gram(c, alloc::vec![q.zero(), q.one(), q.zero()]).unwrap();
        let s = split_form(&form, 1);
        let (two, three) = (q.from_i64(2), q.from_i64(3));
        assert!(q.is_zero(&s.first.eval(core::slice::from_ref(&two)).unwrap()));
        assert!(q.is_zero(&s.second.eval(core::slice::from_ref(&three)).unwrap()));
        assert_eq!(s.cross.eval(&[two, three]).unwrap(), q.from_i64(6));
        let gens = [q.one(), q.from_i64(-2), q.from_i64(5)];
        assert!(s
            .reconstruction_failure(&form, &samples(&q, &gens))
            .is_none());
    }

    #[test]
    fn diagonal_has_no_cross() {
        let q = Rationals;
        let c = RingCarrier::new(q, 2, "Q");
        let form = QuadForm::gram(c, alloc::vec![q.one(), q.zero(), q.one()]).unwrap();
        let s = split_form(&form, 1);
        assert!(q.is_zero(&s.cross.eval(&[q.from_i64(4), q.from_i64(7)]).unwrap()));
        assert_eq!(s.first.eval(&[q.from_i64(4)]).unwrap(), q.from_i64(16));
        assert_eq!(s.second.eval(&[q.from_i64(7)]).unwrap(), q.from_i64(49));
    }

    #[test]
    fn derivation_form_is_all_cross() {
        let r = PolyRing::new(Rationals, &["T"]);
        let form = derivation_form_ring(RingCarrier::new(r.clone(), 2, "Q"), 0).unwrap();
        let s = split_form(&form, 1);
        let t = r.var(0);
        let t2 = r.square(&t);
        assert!(r.is_zero(&s.first.eval(core::slice::from_ref(&t2)).unwrap()));
        assert!(r.is_zero(&s.second.eval(core::slice::from_ref(&t2)).unwrap()));
        // F'G - FG' at (T^2, T) is 2T^2 - T^2 = T^2.
        assert_eq!(s.cross.eval(&[t2.clone(), t.clone()]).unwrap(), t2);
        let gens = [r.one(), t.clone(), r.add(&t2, &r.one())];
        assert!(s
            .reconstruction_failure(&form, &samples(&r, &gens))
            .is_none());
    }
}
