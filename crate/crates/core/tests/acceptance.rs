//! The eleven acceptance criteria, one line each. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use qflab_core::algebra::{
    epimorphism_check, flatness_comparison, frobenius_model, i_squared_model, q_phi,
    squares_subalgebra, AlgebraModule, AlgebraOver, FiniteDimAlgebra, QPhi,
};
use qflab_core::census::{dimension_audit, enumerate_quads, squarezero_counterexample_check};
use qflab_core::exact::{PolyRing, PrimeField, RatFuncField, Rationals};
use qflab_core::kaehler::{kaehler_module, w_to_omega, PresentedAlgebra};
use qflab_core::linalg::{rank, Matrix};
use qflab_core::quad::{
    axiom_check, bounded_degree_test_set, check_all, derivation_form_ring, exotic_form,
    higher_derivative_form, higher_derivative_matrix, polarize, univariate_test_set,
    AlgebraCarrier, Axiom, Mode, RingCarrier, Verdict,
};
use qflab_core::{Field, Ring};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: qflab_core::Error) -> String {
    e.to_string()
}

fn f2() -> PrimeField {
    PrimeField::new(2).unwrap()
}

fn f3() -> PrimeField {
    PrimeField::new(3).unwrap()
}

fn f4() -> FiniteDimAlgebra<PrimeField> {
    FiniteDimAlgebra::univariate(f2(), &[1, 1, 1], "a").unwrap()
}

fn f8() -> FiniteDimAlgebra<PrimeField> {
    FiniteDimAlgebra::univariate(f2(), &[1, 1, 0, 1], "a").unwrap()
}

fn f9() -> FiniteDimAlgebra<PrimeField> {
    FiniteDimAlgebra::univariate(f3(), &[1, 0, 1], "i").unwrap()
}

fn gaussian() -> FiniteDimAlgebra<Rationals> {
    let q = Rationals;
    FiniteDimAlgebra::univariate(q, &[q.one(), q.zero(), q.one()], "i").unwrap()
}

fn truncated_f2_4() -> FiniteDimAlgebra<PrimeField> {
    FiniteDimAlgebra::truncated(f2(), "T", 4).unwrap()
}

fn finite_field_census() -> Outcome {
    let mut parts = Vec::new();
    for (name, s, expected) in [("F4/F2", f4(), 64u128), ("F9/F3", f9(), 729)] {
        let start = Instant::now();
        let carrier = AlgebraCarrier::regular(AlgebraOver::over_field(s), 2).enumerable();
        let r = enumerate_quads(&carrier).map_err(err)?;
        let secs = start.elapsed().as_secs_f64();
        ensure(
            r.count_relative == expected,
            format!("{name}: relative {}", r.count_relative),
        )?;
        ensure(
            r.count_absolute == expected,
            format!("{name}: absolute {}", r.count_absolute),
        )?;
        ensure(
            r.oracles.gram == Some((expected, true)),
            format!("{name}: Gram oracle {:?}", r.oracles.gram),
        )?;
        ensure(secs < 30.0, format!("{name}: took {secs:.1} s"))?;
        parts.push(format!(
            "{name} {} = {} = |S|^3",
            r.count_relative, r.count_absolute
        ));
    }
    Ok(parts.join(", "))
}

fn w_vanishing() -> Outcome {
    fn check<F: Field>(name: &str, s: FiniteDimAlgebra<F>) -> Result<String, String> {
        let q = q_phi(&AlgebraOver::over_field(s.clone())).map_err(err)?;
        ensure(q.dim_w() == 0, format!("{name}: dim W = {}", q.dim_w()))?;
        ensure(
            q.dim_q() == s.dim(),
            format!("{name}: dim Q = {}", q.dim_q()),
        )?;
        Ok(format!("{name} dim Q = {}", q.dim_q()))
    }
    Ok([
        check("Q(i)/Q", gaussian())?,
        check("F4/F2", f4())?,
        check("F8/F2", f8())?,
        check("F9/F3", f9())?,
    ]
    .join(", ")
        + ", W = 0")
}

fn w_char0() -> Outcome {
    let q = Rationals;
    let presented = PresentedAlgebra::truncated(q, "T", 3).map_err(err)?;
    let over = AlgebraOver::over_field(presented.algebra().clone());
    let qphi = q_phi(&over).map_err(err)?;
    let omega = kaehler_module(&presented);
    ensure(qphi.dim_w() == 2, format!("dim W = {}", qphi.dim_w()))?;
    ensure(omega.dim() == 2, format!("dim Omega = {}", omega.dim()))?;
    let map = w_to_omega(&qphi, &omega).map_err(err)?;
    ensure(map.bijective(), "W -> Omega not bijective")?;
    let model = i_squared_model(&qphi).map_err(err)?;
    ensure(model.holds(), format!("I^2 model fails: {model:?}"))?;
    Ok(String::from(
        "Q[T]/T^3: dim W = 2 = dim Omega, W -> Omega bijective, I^2 model inverse over and under S",
    ))
}

fn w_char2() -> Outcome {
    let over = AlgebraOver::over_field(truncated_f2_4());
    let qphi = q_phi(&over).map_err(err)?;
    ensure(qphi.dim_w() == 4, format!("dim W = {}", qphi.dim_w()))?;
    let model = frobenius_model(&qphi).map_err(err)?;
    ensure(model.holds(), format!("Frobenius model fails: {model:?}"))?;
    ensure(
        model.dim() == qphi.dim_q(),
        format!("model dim {}", model.dim()),
    )?;
    let squares =
        AlgebraOver::over_subalgebra(over.s().clone(), squares_subalgebra(&over)).map_err(err)?;
    let epi = epimorphism_check(&squares).map_err(err)?;
    ensure(!epi, "squares inclusion reported as an epimorphism")?;
    Ok(format!(
        "F2[T]/T^4: dim W = 4 by the quotient and by the Frobenius model (dim {}), squares inclusion not an epimorphism",
        model.dim()
    ))
}

fn star_invariant() -> Outcome {
    fn check<F: Field>(name: &str, over: AlgebraOver<F>, count: &mut usize) -> Result<(), String> {
        let q: QPhi<F> = q_phi(&over).map_err(err)?;
        *count += 1;
        ensure(
            q.star_violation().is_none(),
            format!("{name}: {:?}", q.star_violation()),
        )
    }
    let mut n = 0;
    check("Q(i)/Q", AlgebraOver::over_field(gaussian()), &mut n)?;
    check("F4/F2", AlgebraOver::over_field(f4()), &mut n)?;
    check("F8/F2", AlgebraOver::over_field(f8()), &mut n)?;
    check("F9/F3", AlgebraOver::over_field(f9()), &mut n)?;
    let q = Rationals;
    check(
        "Q[T]/T^2",
        AlgebraOver::over_field(FiniteDimAlgebra::truncated(q, "T", 2).unwrap()),
        &mut n,
    )?;
    check(
        "Q[T]/T^3",
        AlgebraOver::over_field(FiniteDimAlgebra::truncated(q, "T", 3).unwrap()),
        &mut n,
    )?;
    check(
        "F2[T]/T^4",
        AlgebraOver::over_field(truncated_f2_4()),
        &mut n,
    )?;
    let s = truncated_f2_4();
    let sq = AlgebraOver::over_field(s.clone());
    check(
        "F2[T]/T^4 over squares",
        AlgebraOver::over_subalgebra(s, squares_subalgebra(&sq)).map_err(err)?,
        &mut n,
    )?;
    Ok(format!("holds for all basis pairs in {n} algebras Q"))
}

fn function_field_witness() -> Outcome {
    fn check<F: Field + 'static>(name: &str, base: F) -> Result<String, String> {
        let k = RatFuncField::new(base, &["T"]);
        let q = derivation_form_ring(RingCarrier::new(k.clone(), 2, "K"), 0).map_err(err)?;
        let (t, one, zero) = (k.var(0), k.one(), k.zero());
        let lhs =
            polarize(&q, &[t.clone(), zero.clone()], &[zero.clone(), one.clone()]).map_err(err)?;
        let base_pol = polarize(
            &q,
            &[one.clone(), zero.clone()],
            &[zero.clone(), one.clone()],
        )
        .map_err(err)?;
        ensure(
            k.is_one(&lhs),
            format!("{name}: pol((T,0),(0,1)) = {}", k.render(&lhs)),
        )?;
        ensure(
            k.is_zero(&k.mul(&t, &base_pol)),
            format!("{name}: T pol((1,0),(0,1)) nonzero"),
        )?;
        let mode = Mode::Sampled(univariate_test_set(&k));
        let s = axiom_check(&q, Axiom::SBilinearity, &mode).map_err(err)?;
        let w = s
            .witness
            .ok_or(format!("{name}: no S-bilinearity witness"))?;
        let inputs: Vec<(&str, &str)> = w
            .inputs
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        ensure(
            inputs == [("lambda", "T"), ("x", "(1, 0)"), ("y", "(0, 1)")]
                && w.lhs == "1"
                && w.rhs == "0",
            format!("{name}: witness {}", w.render()),
        )?;
        let r = axiom_check(&q, Axiom::RBilinearity, &mode).map_err(err)?;
        ensure(
            r.verdict == Verdict::NoCounterexampleFound,
            format!("{name}: R-bilinearity {:?}", r.verdict),
        )?;
        Ok(format!("{name} {}", w.render()))
    }
    Ok(format!(
        "{}; {}; R-bilinearity no counterexample",
        check("Q(T)", Rationals)?,
        check("F3(T)", f3())?
    ))
}

fn higher_derivatives() -> Outcome {
    let ring = PolyRing::new(f2(), &["X", "Y"]);
    let q =
        higher_derivative_form(RingCarrier::new(ring.clone(), 2, "F_2"), &[0, 1]).map_err(err)?;
    let mode = Mode::Sampled(bounded_degree_test_set(&ring, 1));
    for axiom in [
        Axiom::SquareScaling,
        Axiom::Biadditivity,
        Axiom::RBilinearity,
    ] {
        let r = axiom_check(&q, axiom, &mode).map_err(err)?;
        ensure(
            r.verdict == Verdict::NoCounterexampleFound,
            format!("{}: {:?}", axiom.name(), r.witness),
        )?;
    }
    let s = axiom_check(&q, Axiom::SBilinearity, &mode).map_err(err)?;
    let w = s.witness.ok_or("q_{1,2}: S-bilinearity not refuted")?;
    let mut ranks = Vec::new();
    for n in [2, 3] {
        let (k, m) = higher_derivative_matrix(n).map_err(err)?;
        let r = rank(&k, &m);
        ensure(r == 1 << n, format!("n = {n}: rank {r}"))?;
        ranks.push(format!("n = {n}: rank {r}, {} exotic", r - 1));
    }
    Ok(format!(
        "q_{{1,2}} S-bilinearity witness {}; {}",
        w.render(),
        ranks.join(", ")
    ))
}

fn model_identities() -> Outcome {
    let mut total = 0;
    for n in 1..=3 {
        for char2 in [false, true] {
            let r = qflab_core::algebra::exterior_model_check(n, char2);
            if let Some(bad) = r.identities.iter().find(|i| !i.holds) {
                return Err(format!(
                    "{}: {} != {}",
                    bad.name, bad.computed, bad.expected
                ));
            }
            total += r.identities.len();
        }
    }
    for p in [2, 3] {
        let id = qflab_core::algebra::inseparable_relation(p);
        ensure(id.holds, id.name)?;
    }
    Ok(format!(
        "{total} identities for n = 1..3 in characteristic 0 and 2"
    ))
}

fn resolution() -> Outcome {
    use qflab_core::exact::Zmod;
    use qflab_core::quad::{direct_quad_count, resolution_quad, Presentation};
    let z4 = Zmod::new(4).unwrap();
    let p = Presentation::new(z4, 1, vec![vec![z4.from_i64(2)]]).map_err(err)?;
    let kernel = resolution_quad(&p).map_err(err)?.order();
    let direct = direct_quad_count(&p).map_err(err)?;
    ensure(
        kernel == 4 && direct == 4,
        format!("kernel {kernel}, direct {direct}"),
    )?;
    Ok(String::from(
        "Z/4, M = Z/2, N = Z/4: kernel formula 4 = direct enumeration 4",
    ))
}

fn flatfixed() -> Outcome {
    let cmp = |name: &str, c: qflab_core::algebra::FlatnessComparison| {
        ensure(
            c.equal,
            format!(
                "{name}: Delta dim {} vs fixed dim {}",
                c.delta_dim, c.fixed_dim
            ),
        )
    };
    cmp(
        "F4/F2",
        flatness_comparison(&AlgebraOver::over_field(f4())).map_err(err)?,
    )?;
    cmp(
        "Q(i)/Q",
        flatness_comparison(&AlgebraOver::over_field(gaussian())).map_err(err)?,
    )?;
    cmp(
        "F2[T]/T^4",
        flatness_comparison(&AlgebraOver::over_field(truncated_f2_4())).map_err(err)?,
    )?;
    let r = squarezero_counterexample_check();
    ensure(
        r.diagonal_failure.is_none(),
        format!("a^2 outside (X^2,Y^2,Z^2) for a = {:?}", r.diagonal_failure),
    )?;
    ensure(!r.xyz_member, "XYZ reported in (X^2, Y^2, Z^2)")?;
    ensure(r.chain_valid, format!("chain {:?}", r.chain))?;
    Ok(format!(
        "Delta = fixed points for 3 algebras; {} diagonal samples, XYZ not in (X^2,Y^2,Z^2), {}",
        r.sampled,
        r.chain.join(" = ")
    ))
}

fn exotic_soundness() -> Outcome {
    let over = AlgebraOver::over_field(truncated_f2_4());
    let qphi = q_phi(&over).map_err(err)?;
    let s = AlgebraModule::regular(over.s());
    let hom = qphi.w_module.hom_space(&s).map_err(err)?;
    let h = hom.dim();
    let (n, w) = (s.dim(), qphi.dim_w());
    for mask in 0..1u32 << h {
        let coords: Vec<u64> = (0..h).map(|i| u64::from(mask >> i & 1)).collect();
        let f = Matrix::new(n, w, hom.combine(&f2(), &coords));
        let q = exotic_form(&qphi, s.clone(), &f).map_err(err)?.enumerable();
        let reports = check_all(&q, &Mode::Exhaustive).map_err(err)?;
        for r in &reports {
            let expected = if mask != 0 && r.axiom == Axiom::SBilinearity {
                Verdict::Fail
            } else {
                Verdict::Pass
            };
            ensure(
                r.verdict == expected,
                format!("f #{mask}: {} {:?}", r.axiom.name(), r.verdict),
            )?;
            if r.verdict == Verdict::Fail {
                ensure(
                    r.witness.is_some(),
                    format!("f #{mask}: failure without witness"),
                )?;
            }
        }
    }
    let carrier = AlgebraCarrier::regular(over, 2).enumerable();
    let audit = dimension_audit(&carrier, &qphi).map_err(err)?;
    ensure(audit.holds, format!("audit {audit:?}"))?;
    let ratio = audit.census.discrepancy();
    ensure(ratio == 1u128 << h, format!("ratio {ratio} vs 2^{h}"))?;
    Ok(format!(
        "{} functionals checked exhaustively; relative/absolute = {}/{} = 2^{h}",
        1u32 << h,
        audit.census.count_relative,
        audit.census.count_absolute
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("finite-field census", finite_field_census),
        ("W vanishes for separable extensions", w_vanishing),
        ("nontrivial W in characteristic 0", w_char0),
        ("nontrivial W in characteristic 2", w_char2),
        ("class(s s' 1 + s' s 1) = class(1 1 2ss')", star_invariant),
        ("function-field witness", function_field_witness),
        ("higher-derivative forms", higher_derivatives),
        ("model identities", model_identities),
        ("resolution formula", resolution),
        ("flip-fixed points", flatfixed),
        ("exotic-form soundness", exotic_soundness),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} pass: {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL: {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
