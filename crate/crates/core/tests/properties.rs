use proptest::prelude::*;

use qflab_core::algebra::{q_phi, AlgebraOver, FiniteDimAlgebra};
use qflab_core::census::enumerate_quads;
use qflab_core::exact::{
    ExtensionField, PartialDifferentiable, PolyRing, PrimeField, RatFuncField, Rationals, Zmod,
};
use qflab_core::quad::{
    axiom_check, derivation_form_ring, direct_quad_count, polarize, resolution_quad, split_form,
    AlgebraCarrier, Axiom, Mode, Presentation, QuadCarrier, QuadForm, RingCarrier, TestSet,
    Verdict,
};
use qflab_core::{Field, FiniteRing, Ring};

fn small_poly(
    ring: &PolyRing<Rationals>,
    coeffs: &[i64],
) -> qflab_core::exact::MultiPoly<num_rational::BigRational> {
    let q = ring.base();
    let t = ring.var(0);
    coeffs.iter().rev().fold(ring.zero(), |acc, c| {
        ring.add(&ring.mul(&acc, &t), &ring.constant(q.from_i64(*c)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn extension_inverses(a in 0u64..9, b in 0u64..9) {
        let f3 = PrimeField::new(3).unwrap();
        let f9 = ExtensionField::new(f3, vec![1, 0, 1], "i").unwrap();
        let x = vec![a % 3, b % 3];
        if !f9.is_zero(&x) {
            let inv = f9.inv(&x).unwrap();
            prop_assert!(f9.is_one(&f9.mul(&x, &inv)));
        }
    }

    #[test]
    fn leibniz_for_rational_functions(f in prop::collection::vec(-4i64..5, 1..4), g in prop::collection::vec(-4i64..5, 1..4)) {
        let ring = PolyRing::new(Rationals, &["T"]);
        let k = RatFuncField::new(Rationals, &["T"]);
        let (f, g) = (k.from_poly(small_poly(&ring, &f)), k.from_poly(small_poly(&ring, &g)));
        let g = k.add(&g, &k.var(0));
        let lhs = k.partial(&k.mul(&f, &g), 0);
        let rhs = k.add(&k.mul(&k.partial(&f, 0), &g), &k.mul(&f, &k.partial(&g, 0)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn polarisation_is_symmetric_and_splits(
        coeffs in prop::collection::vec(0u64..5, 6),
        x in prop::collection::vec(0u64..5, 3),
        y in prop::collection::vec(0u64..5, 3),
    ) {
        let f5 = PrimeField::new(5).unwrap();
        let q = QuadForm::gram(RingCarrier::finite(f5, 3), coeffs).unwrap();
        prop_assert_eq!(polarize(&q, &x, &y).unwrap(), polarize(&q, &y, &x).unwrap());
        let zero = q.carrier().zero_vector();
        prop_assert_eq!(polarize(&q, &x, &zero).unwrap(), 0);
        let s = split_form(&q, 1);
        prop_assert_eq!(s.reconstruct(&x), q.eval(&x).unwrap());
    }

    #[test]
    fn char2_polarisation_vanishes_on_the_diagonal(
        coeffs in prop::collection::vec(0u64..2, 6),
        x in prop::collection::vec(0u64..2, 3),
    ) {
        let f2 = PrimeField::new(2).unwrap();
        let q = QuadForm::gram(RingCarrier::finite(f2, 3), coeffs).unwrap();
        prop_assert_eq!(polarize(&q, &x, &x).unwrap(), 0);
    }

    #[test]
    fn derivation_form_splits_with_zero_diagonal(f in prop::collection::vec(-3i64..4, 1..4), g in prop::collection::vec(-3i64..4, 1..4)) {
        let ring = PolyRing::new(Rationals, &["T"]);
        let q = derivation_form_ring(RingCarrier::new(ring.clone(), 2, "Q"), 0).unwrap();
        let (f, g) = (small_poly(&ring, &f), small_poly(&ring, &g));
        let s = split_form(&q, 1);
        prop_assert!(ring.is_zero(&s.first.eval(std::slice::from_ref(&f)).unwrap()));
        prop_assert!(ring.is_zero(&s.second.eval(std::slice::from_ref(&g)).unwrap()));
        prop_assert_eq!(s.reconstruct(&[f.clone(), g.clone()]), q.eval(&[f, g]).unwrap());
    }

    #[test]
    fn sampled_never_contradicts_exhaustive(coeffs in prop::collection::vec(0u64..3, 3), picks in prop::collection::vec(0u64..9, 1..6)) {
        let f3 = PrimeField::new(3).unwrap();
        let c = RingCarrier::finite(f3, 2);
        let q = QuadForm::gram(c, coeffs).unwrap();
        let vectors: Vec<Vec<u64>> = picks.iter().map(|i| vec![i % 3, i / 3]).collect();
        let set = TestSet { s_scalars: vec![1, 2], r_scalars: vec![1, 2], vectors };
        for axiom in Axiom::ALL {
            prop_assert_eq!(axiom_check(&q, axiom, &Mode::Exhaustive).unwrap().verdict, Verdict::Pass);
            prop_assert_eq!(
                axiom_check(&q, axiom, &Mode::Sampled(set.clone())).unwrap().verdict,
                Verdict::NoCounterexampleFound
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn resolution_matches_direct_enumeration(n in 2u64..9, entry in 0i64..9) {
        let ring = Zmod::new(n).unwrap();
        let p = Presentation::new(ring, 1, vec![vec![ring.from_i64(entry)]]).unwrap();
        prop_assert_eq!(resolution_quad(&p).unwrap().order(), direct_quad_count(&p).unwrap());
    }

    #[test]
    fn resolution_matches_direct_on_planes(n in 2u64..4, a in 0i64..3, b in 0i64..3) {
        let ring = Zmod::new(n).unwrap();
        let d1 = vec![vec![ring.from_i64(a)], vec![ring.from_i64(b)]];
        let p = Presentation::new(ring, 2, d1).unwrap();
        prop_assert_eq!(resolution_quad(&p).unwrap().order(), direct_quad_count(&p).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Counts are powers of p, relative dominates absolute, and equality
    /// holds exactly when W = 0.
    #[test]
    fn census_discrepancy_tracks_w(p in prop::sample::select(vec![2u64, 3]), k in 1usize..4) {
        let f = PrimeField::new(p).unwrap();
        let s = FiniteDimAlgebra::truncated(f, "T", k).unwrap();
        let over = AlgebraOver::over_field(s);
        let census = enumerate_quads(&AlgebraCarrier::regular(over.clone(), 2).enumerable()).unwrap();
        prop_assert!(census.count_relative >= census.count_absolute);
        prop_assert_eq!(census.count_relative, u128::from(p).pow(census.dim_relative as u32));
        let w = q_phi(&over).unwrap().dim_w();
        prop_assert_eq!(census.count_relative == census.count_absolute, w == 0);
    }
}

#[test]
fn finite_ring_indexing_round_trips() {
    let f8 = ExtensionField::new(PrimeField::new(2).unwrap(), vec![1, 1, 0, 1], "a").unwrap();
    for (i, e) in f8.elements().iter().enumerate() {
        assert_eq!(f8.index_of(e), i as u64);
    }
}
