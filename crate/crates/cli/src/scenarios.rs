use std::fmt::Display;
use std::time::Instant;

use qflab_core::algebra::{
    epimorphism_check, exterior_model_check, flatness_comparison, frobenius_model, i_squared_model,
    inseparable_relation, model_for, q_phi, squares_subalgebra, AlgebraModule, AlgebraOver,
    FiniteDimAlgebra, QPhi,
};
use qflab_core::census::{dimension_audit, squarezero_counterexample_check, CensusResult};
use qflab_core::exact::{PolyRing, PrimeField, RatFuncField, Rationals};
use qflab_core::kaehler::{kaehler_module, w_to_omega, Derivation, PresentedAlgebra};
use qflab_core::linalg::{rank, Matrix};
use qflab_core::quad::{
    axiom_check, bounded_degree_test_set, check_all, derivation_form, derivation_form_ring,
    exotic_form, higher_derivative_form, higher_derivative_matrix, polarize, univariate_test_set,
    AlgebraCarrier, Axiom, AxiomReport, Mode, RingCarrier, Verdict as AxiomVerdict,
};
use qflab_core::{Error, Field, Ring};

use crate::config::Params;
use crate::report::{Assertion, Report, Status, Verdict};

type Run = fn(&Params, &mut Checks) -> qflab_core::Result<()>;

pub struct Scenario {
    pub name: &'static str,
    pub description: &'static str,
    /// Parameter keys the scenario reads; any other key is a config error.
    pub params: &'static [&'static str],
    validate: fn(&Params) -> Result<(), String>,
    run: Run,
}

/// The shipped catalog, sorted by name.
pub const CATALOG: [Scenario; 10] = [
    Scenario {
        name: "dual-numbers-char0",
        description: "Q[T]/T^k over Q (degree k, default 3): W, Omega and the I^2 model",
        params: &["degree"],
        validate: |p| in_range("degree", p.degree, 2, 6),
        run: dual_numbers_char0,
    },
    Scenario {
        name: "f4-over-f2",
        description: "F4 over F2: W = 0 and the census on S^2",
        params: &[],
        validate: |_| Ok(()),
        run: f4_over_f2,
    },
    Scenario {
        name: "f8-over-f2",
        description: "F8 over F2: W = 0 and the census on S^2",
        params: &[],
        validate: |_| Ok(()),
        run: f8_over_f2,
    },
    Scenario {
        name: "f9-over-f3",
        description: "F9 over F3: W = 0 and the census on S^2",
        params: &[],
        validate: |_| Ok(()),
        run: f9_over_f3,
    },
    Scenario {
        name: "flatfixed-counterexample",
        description: "Delta against flip-fixed points, and the square-zero tensor counterexample",
        params: &[],
        validate: |_| Ok(()),
        run: flatfixed_counterexample,
    },
    Scenario {
        name: "function-field-witness",
        description: "q(F, G) = F'G - FG' over Q(T) and F3(T) is not S-bilinear",
        params: &[],
        validate: |_| Ok(()),
        run: function_field_witness,
    },
    Scenario {
        name: "gaussian-rationals",
        description: "Q(i) over Q: W = 0 with all presentations agreeing",
        params: &[],
        validate: |_| Ok(()),
        run: gaussian_rationals,
    },
    Scenario {
        name: "inseparable-model",
        description: "K(T) over K(T^p) for p in {2, 3} (p selects one): relations and W",
        params: &["p"],
        validate: |p| match p.p {
            None | Some(2 | 3) => Ok(()),
            Some(v) => Err(format!("p must be 2 or 3, got {v}")),
        },
        run: inseparable_model,
    },
    Scenario {
        name: "truncated-poly-char2",
        description:
            "F2[T]/T^k over F2 (even degree k, default 4): W, Frobenius model, exotic forms",
        params: &["degree"],
        validate: |p| {
            in_range("degree", p.degree, 2, 8)?;
            match p.degree {
                Some(d) if d % 2 == 1 => Err(format!("degree must be even, got {d}")),
                _ => Ok(()),
            }
        },
        run: truncated_poly_char2,
    },
    Scenario {
        name: "two-variable-char2",
        description:
            "Higher-derivative forms q_I in characteristic 2 for n = 2 and 3 (n selects one)",
        params: &["n"],
        validate: |p| in_range("n", p.n, 1, 4),
        run: two_variable_char2,
    },
];

pub fn find(name: &str) -> Option<&'static Scenario> {
    CATALOG.iter().find(|s| s.name == name)
}

fn in_range(key: &str, v: Option<usize>, lo: usize, hi: usize) -> Result<(), String> {
    match v {
        Some(x) if x < lo || x > hi => Err(format!("{key} must lie in {lo}..={hi}, got {x}")),
        _ => Ok(()),
    }
}

impl Scenario {
    /// Rejects keys the scenario does not read and values out of range.
    pub fn check_params(&self, params: &Params) -> Result<(), String> {
        if let Some(k) = params.keys().into_iter().find(|k| !self.params.contains(k)) {
            return Err(format!(
                "scenario {} does not take parameter `{k}`",
                self.name
            ));
        }
        (self.validate)(params).map_err(|e| format!("scenario {}: {e}", self.name))
    }

    pub fn run(&self, params: &Params) -> Report {
        let start = Instant::now();
        let mut checks = Checks::default();
        let outcome = (self.run)(params, &mut checks);
        let failed = checks.items.iter().any(|a| a.verdict == Verdict::Fail);
        let (status, error) = match outcome {
            Ok(()) if failed => (Status::Fail, None),
            Ok(()) => (Status::Pass, None),
            Err(e @ Error::GuardExceeded { .. }) => (Status::GuardExceeded, Some(e.to_string())),
            Err(e) => (Status::Fail, Some(e.to_string())),
        };
        Report {
            scenario: String::from(self.name),
            description: String::from(self.description),
            version: String::from(env!("CARGO_PKG_VERSION")),
            status,
            error,
            assertions: checks.items,
            elapsed_ms: Some(start.elapsed().as_millis() as u64),
        }
    }
}

#[derive(Default)]
pub struct Checks {
    items: Vec<Assertion>,
}

impl Checks {
    fn push(
        &mut self,
        name: String,
        op: &str,
        expected: String,
        computed: String,
        verdict: Verdict,
        witness: Option<String>,
    ) {
        self.items.push(Assertion {
            name,
            operation: String::from(op),
            expected,
            computed,
            verdict,
            witness,
        });
    }

    fn eq(
        &mut self,
        name: impl Into<String>,
        op: &str,
        expected: impl Display,
        computed: impl Display,
    ) {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let verdict = if expected == computed {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        self.push(name.into(), op, expected, computed, verdict, None);
    }

    fn holds(&mut self, name: impl Into<String>, op: &str, computed: bool) {
        self.eq(name, op, true, computed);
    }

    /// An axiom verdict against the expected one; the witness is kept
    /// whenever the check produced one.
    fn axiom(&mut self, label: &str, expected: AxiomVerdict, r: &AxiomReport) {
        let verdict = match (r.verdict == expected, r.verdict) {
            (false, _) => Verdict::Fail,
            (true, AxiomVerdict::NoCounterexampleFound) => Verdict::NoCounterexampleFound,
            (true, _) => Verdict::Pass,
        };
        self.push(
            format!("{label} {} ({})", r.axiom.name(), r.mode.name()),
            "axiom_check",
            String::from(expected.name()),
            String::from(r.verdict.name()),
            verdict,
            r.witness.as_ref().map(|w| w.render()),
        );
    }
}

fn f2() -> PrimeField {
    PrimeField::new(2).expect("prime")
}

fn f3() -> PrimeField {
    PrimeField::new(3).expect("prime")
}

fn gaussian() -> qflab_core::Result<FiniteDimAlgebra<Rationals>> {
    let q = Rationals;
    FiniteDimAlgebra::univariate(q, &[q.one(), q.zero(), q.one()], "i")
}

fn show_violation(v: Option<(usize, usize)>) -> String {
    match v {
        None => String::from("none"),
        Some((i, j)) => format!("basis pair ({i}, {j})"),
    }
}

/// `dim Q`, `dim W` and the star invariant.
fn qphi_checks<F: Field>(
    c: &mut Checks,
    over: &AlgebraOver<F>,
    dim_w: usize,
) -> qflab_core::Result<QPhi<F>> {
    let q = q_phi(over)?;
    c.eq("dim W", "q_phi", dim_w, q.dim_w());
    c.eq(
        "dim Q = dim S + dim W",
        "q_phi",
        over.s().dim() + dim_w,
        q.dim_q(),
    );
    c.eq(
        "star invariant violations",
        "q_phi",
        "none",
        show_violation(q.star_violation()),
    );
    Ok(q)
}

fn census_checks(c: &mut Checks, r: &CensusResult, relative: u128, absolute: u128) {
    c.eq(
        "relative count",
        "enumerate_quads",
        relative,
        r.count_relative,
    );
    c.eq(
        "absolute count",
        "enumerate_quads",
        absolute,
        r.count_absolute,
    );
    if let Some((forms, inside)) = r.oracles.gram {
        c.eq("Gram forms", "enumerate_quads", absolute, forms);
        c.holds(
            "Gram forms lie in the absolute solution set",
            "enumerate_quads",
            inside,
        );
    }
    if let Some((basis, ok)) = r.replay {
        c.holds(
            format!("{basis} basis maps replayed exhaustively"),
            "enumerate_quads",
            ok,
        );
    }
}

/// A separable field extension: `W = 0`, the census counts `|S|^3` maps on
/// `S^2`, and the audit ratio is `2^0`.
fn finite_field(c: &mut Checks, s: FiniteDimAlgebra<PrimeField>) -> qflab_core::Result<()> {
    let over = AlgebraOver::over_field(s);
    let q = qphi_checks(c, &over, 0)?;
    let model = model_for(&q)?;
    c.holds(
        "model inverse over and under S",
        model_name(&over),
        model.holds(),
    );
    c.eq("model dim", model_name(&over), over.s().dim(), model.dim());
    c.eq(
        "epimorphism",
        "epimorphism_check",
        false,
        epimorphism_check(&over)?,
    );
    let carrier = AlgebraCarrier::regular(over.clone(), 2).enumerable();
    let audit = dimension_audit(&carrier, &q)?;
    let size = order(over.s());
    census_checks(c, &audit.census, size.pow(3), size.pow(3));
    c.eq("dim Hom_S(W, S)", "dimension_audit", 0, audit.dim_hom_w);
    c.holds(
        "relative/absolute = 2^dim Hom_S(W, S)",
        "dimension_audit",
        audit.holds,
    );
    Ok(())
}

fn model_name<F: Field>(over: &AlgebraOver<F>) -> &'static str {
    if over.field().characteristic() == 2 {
        "frobenius_model"
    } else {
        "i_squared_model"
    }
}

fn order(s: &FiniteDimAlgebra<PrimeField>) -> u128 {
    u128::from(s.field().p()).pow(s.dim() as u32)
}

fn f4_over_f2(_: &Params, c: &mut Checks) -> qflab_core::Result<()> {
    finite_field(c, FiniteDimAlgebra::univariate(f2(), &[1, 1, 1], "a")?)
}

fn f8_over_f2(_: &Params, c: &mut Checks) -> qflab_core::Result<()> {
    finite_field(c, FiniteDimAlgebra::univariate(f2(), &[1, 1, 0, 1], "a")?)
}

fn f9_over_f3(_: &Params, c: &mut Checks) -> qflab_core::Result<()> {
    finite_field(c, FiniteDimAlgebra::univariate(f3(), &[1, 0, 1], "i")?)
}

fn gaussian_rationals(_: &Params, c: &mut Checks) -> qflab_core::Result<()> {
    let q = Rationals;
    let presented = PresentedAlgebra::univariate(q, &[q.one(), q.zero(), q.one()], "i")?;
    let over = AlgebraOver::over_field(gaussian()?);
    let qphi = qphi_checks(c, &over, 0)?;
    let omega = kaehler_module(&presented);
    c.eq("dim Omega", "kaehler_module", 0, omega.dim());
    c.holds(
        "W -> Omega bijective",
        "w_to_omega",
        w_to_omega(&qphi, &omega)?.bijective(),
    );
    let model = i_squared_model(&qphi)?;
    c.holds(
        "I^2 model inverse over and under S",
        "i_squared_model",
        model.holds(),
    );
    c.eq("I^2 model dim", "i_squared_model", 2, model.dim());
    let flat = flatness_comparison(&over)?;
    c.eq(
        "dim Delta",
        "flatness_comparison",
        flat.fixed_dim,
        flat.delta_dim,
    );
    c.holds(
        "Delta = flip-fixed points",
        "flatness_comparison",
        flat.equal,
    );
    c.eq(
        "epimorphism",
        "epimorphism_check",
        false,
        epimorphism_check(&over)?,
    );
    Ok(())
}

fn dual_numbers_char0(p: &Params, c: &mut Checks) -> qflab_core::Result<()> {
    let k = p.degree.unwrap_or(3);
    let presented = PresentedAlgebra::truncated(Rationals, "T", k)?;
    let over = AlgebraOver::over_field(presented.algebra().clone());
    let qphi = qphi_checks(c, &over, k - 1)?;
    let omega = kaehler_module(&presented);
    c.eq("dim Omega", "kaehler_module", k - 1, omega.dim());
    c.holds(
        "W -> Omega bijective",
        "w_to_omega",
        w_to_omega(&qphi, &omega)?.bijective(),
    );
    let model = i_squared_model(&qphi)?;
    c.holds(
        "I^2 model inverse over and under S",
        "i_squared_model",
        model.holds(),
    );
    c.eq("I^2 model dim", "i_squared_model", 2 * k - 1, model.dim());
    let d = Derivation {
        target: omega.module(),
        matrix: omega.d.clone(),
    };
    let form = derivation_form(AlgebraCarrier::new(over, omega.module(), 2)?, &d)?;
    for r in check_all(&form, &Mode::Basis)? {
        let expected = if r.axiom == Axiom::SBilinearity {
            AxiomVerdict::Fail
        } else {
            AxiomVerdict::Pass
        };
        c.axiom("d(s)s' - s d(s')", expected, &r);
    }
    Ok(())
}

fn truncated_poly_char2(p: &Params, c: &mut Checks) -> qflab_core::Result<()> {
    let k = p.degree.unwrap_or(4);
    let presented = PresentedAlgebra::truncated(f2(), "T", k)?;
    let over = AlgebraOver::over_field(presented.algebra().clone());
    // S is free of rank 2 over its squares B, dim B = k/2, so dim Q = 2 * 2 * dim B.
    let qphi = qphi_checks(c, &over, k)?;
    let model = frobenius_model(&qphi)?;
    c.holds(
        "Frobenius model inverse over and under S",
        "frobenius_model",
        model.holds(),
    );
    c.eq("Frobenius model dim", "frobenius_model", 2 * k, model.dim());
    let omega = kaehler_module(&presented);
    c.eq("dim Omega", "kaehler_module", k, omega.dim());
    let map = w_to_omega(&qphi, &omega)?;
    c.holds("W -> Omega surjective", "w_to_omega", map.surjective);
    c.eq(
        "dim ker(W -> Omega)",
        "w_to_omega",
        qphi.dim_w() - map.rank.min(qphi.dim_w()),
        map.kernel_dim,
    );
    let squares = AlgebraOver::over_subalgebra(over.s().clone(), squares_subalgebra(&over))?;
    c.eq(
        "squares inclusion is an epimorphism",
        "epimorphism_check",
        false,
        epimorphism_check(&squares)?,
    );

    let s = AlgebraModule::regular(over.s());
    let hom = qphi.w_module.hom_space(&s)?;
    c.eq("dim Hom_S(W, S)", "AlgebraModule::hom_space", k, hom.dim());
    let mut coords = vec![0; hom.dim()];
    coords[0] = 1;
    let f = Matrix::new(s.dim(), qphi.dim_w(), hom.combine(&f2(), &coords));
    let form = exotic_form(&qphi, s, &f)?.enumerable();
    for r in check_all(&form, &Mode::Exhaustive)? {
        let expected = if r.axiom == Axiom::SBilinearity {
            AxiomVerdict::Fail
        } else {
            AxiomVerdict::Pass
        };
        c.axiom("exotic form", expected, &r);
    }

    let carrier = AlgebraCarrier::regular(over, 2).enumerable();
    let audit = dimension_audit(&carrier, &qphi)?;
    let r = &audit.census;
    c.eq(
        "relative/absolute",
        "dimension_audit",
        1u128 << k,
        r.discrepancy(),
    );
    c.holds(
        "relative/absolute = 2^dim Hom_S(W, S)",
        "dimension_audit",
        audit.holds,
    );
    if let Some((basis, ok)) = r.replay {
        c.holds(
            format!("{basis} basis maps replayed exhaustively"),
            "enumerate_quads",
            ok,
        );
    }
    if let Some(w) = &r.witness {
        c.holds(
            "census witness passes the relative axioms",
            "enumerate_quads",
            w.relative_axioms_pass,
        );
        let values: Vec<String> = w
            .basis_values
            .iter()
            .map(|(e, v)| format!("q{e} = {v}"))
            .collect();
        let pols: Vec<String> = w
            .basis_polarisations
            .iter()
            .map(|(e, v)| format!("pol({e}) = {v}"))
            .collect();
        c.push(
            String::from("census exotic witness S-bilinearity"),
            "enumerate_quads",
            String::from("fail"),
            String::from(if w.s_bilinearity.is_some() {
                "fail"
            } else {
                "pass"
            }),
            if w.s_bilinearity.is_some() {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
            Some(format!(
                "{}; {}",
                [values, pols].concat().join(", "),
                w.s_bilinearity
                    .as_ref()
                    .map(|x| x.render())
                    .unwrap_or_default()
            )),
        );
    }
    Ok(())
}

fn function_field_witness(_: &Params, c: &mut Checks) -> qflab_core::Result<()> {
    fn one<F: Field + 'static>(c: &mut Checks, label: &str, base: F) -> qflab_core::Result<()> {
        let k = RatFuncField::new(base, &["T"]);
        let q = derivation_form_ring(RingCarrier::new(k.clone(), 2, "K"), 0)?;
        let (t, u, z) = (k.var(0), k.one(), k.zero());
        let lhs = polarize(&q, &[t.clone(), z.clone()], &[z.clone(), u.clone()])?;
        let base_pol = polarize(&q, &[u.clone(), z.clone()], &[z, u])?;
        c.eq(
            format!("{label} pol((T, 0), (0, 1))"),
            "polarize",
            "1",
            k.render(&lhs),
        );
        c.eq(
            format!("{label} T pol((1, 0), (0, 1))"),
            "polarize",
            "0",
            k.render(&k.mul(&t, &base_pol)),
        );
        let set = univariate_test_set(&k);
        // Biadditivity is cubic in the sample; it runs on the vectors with
        // entries in {0, 1, T, 1/T}.
        let small = [
            k.zero(),
            k.one(),
            t.clone(),
            k.inv(&t).expect("T is nonzero"),
        ];
        let mut triples = set.clone();
        triples
            .vectors
            .retain(|v| v.iter().all(|x| small.contains(x)));
        let (mode, triple_mode) = (Mode::Sampled(set), Mode::Sampled(triples));
        for axiom in Axiom::ALL {
            let m = if axiom == Axiom::Biadditivity {
                &triple_mode
            } else {
                &mode
            };
            let r = axiom_check(&q, axiom, m)?;
            let expected = if axiom == Axiom::SBilinearity {
                AxiomVerdict::Fail
            } else {
                AxiomVerdict::NoCounterexampleFound
            };
            c.axiom(label, expected, &r);
            if axiom == Axiom::SBilinearity {
                let w = r.witness.map(|w| w.render()).unwrap_or_default();
                c.eq(
                    format!("{label} S-bilinearity witness"),
                    "axiom_check",
                    "lambda = T, x = (1, 0), y = (0, 1): 1 != 0",
                    w,
                );
            }
        }
        Ok(())
    }
    one(c, "Q(T)", Rationals)?;
    one(c, "F3(T)", f3())
}

fn two_variable_char2(p: &Params, c: &mut Checks) -> qflab_core::Result<()> {
    let ring = PolyRing::new(f2(), &["X", "Y"]);
    let q = higher_derivative_form(RingCarrier::new(ring.clone(), 2, "F_2"), &[0, 1])?;
    let mode = Mode::Sampled(bounded_degree_test_set(&ring, 1));
    for axiom in Axiom::ALL {
        let expected = if axiom == Axiom::SBilinearity {
            AxiomVerdict::Fail
        } else {
            AxiomVerdict::NoCounterexampleFound
        };
        c.axiom("q_{1,2}", expected, &axiom_check(&q, axiom, &mode)?);
    }
    let ns = match p.n {
        Some(n) => vec![n],
        None => vec![2, 3],
    };
    for n in ns {
        let (k, m) = higher_derivative_matrix(n)?;
        let r = rank(&k, &m);
        c.eq(
            format!("n = {n}: rank of the q_I evaluation matrix"),
            "higher_derivative_form",
            1usize << n,
            r,
        );
        c.eq(
            format!("n = {n}: independent exotic forms"),
            "higher_derivative_form",
            (1usize << n) - 1,
            r.saturating_sub(1),
        );
    }
    Ok(())
}

fn inseparable_model(p: &Params, c: &mut Checks) -> qflab_core::Result<()> {
    let primes = match p.p {
        Some(v) => vec![v],
        None => vec![2, 3],
    };
    for p in primes {
        let id = inseparable_relation(p);
        c.eq(
            id.name.clone(),
            "inseparable_relation",
            &id.expected,
            &id.computed,
        );
        for id in exterior_model_check(1, p == 2).identities {
            c.eq(
                format!("p = {p}: {}", id.name),
                "exterior_model_check",
                id.expected,
                id.computed,
            );
        }
        // S = K(U)[T]/(T^p - U) over K(U) with K = F_p: d(T^p - U)/dT = 0, so
        // Omega is free of rank 1 over S, and W has the same dimension.
        let fp = PrimeField::new(p)?;
        let k = RatFuncField::new(fp, &["U"]);
        let mut modulus = vec![k.zero(); p as usize + 1];
        modulus[0] = k.neg(&k.var(0));
        modulus[p as usize] = k.one();
        let presented = PresentedAlgebra::univariate(k.clone(), &modulus, "T")?;
        let over = AlgebraOver::over_field(presented.algebra().clone());
        let q = q_phi(&over)?;
        let pn = p as usize;
        c.eq(
            format!("p = {p}: dim W over K(T^p)"),
            "q_phi",
            pn,
            q.dim_w(),
        );
        c.eq(
            format!("p = {p}: star invariant violations"),
            "q_phi",
            "none",
            show_violation(q.star_violation()),
        );
        let omega = kaehler_module(&presented);
        c.eq(
            format!("p = {p}: dim Omega over K(T^p)"),
            "kaehler_module",
            pn,
            omega.dim(),
        );
        c.holds(
            format!("p = {p}: W -> Omega bijective"),
            "w_to_omega",
            w_to_omega(&q, &omega)?.bijective(),
        );
        let model = model_for(&q)?;
        c.holds(
            format!("p = {p}: model inverse over and under S"),
            model_name(&over),
            model.holds(),
        );
        c.eq(
            format!("p = {p}: model dim"),
            model_name(&over),
            2 * pn,
            model.dim(),
        );
    }
    Ok(())
}

fn flatfixed_counterexample(_: &Params, c: &mut Checks) -> qflab_core::Result<()> {
    fn compare<F: Field>(
        c: &mut Checks,
        label: &str,
        over: &AlgebraOver<F>,
    ) -> qflab_core::Result<()> {
        let r = flatness_comparison(over)?;
        c.eq(
            format!("{label}: dim Delta"),
            "flatness_comparison",
            r.fixed_dim,
            r.delta_dim,
        );
        c.holds(
            format!("{label}: Delta = flip-fixed points"),
            "flatness_comparison",
            r.equal,
        );
        Ok(())
    }
    compare(
        c,
        "F4/F2",
        &AlgebraOver::over_field(FiniteDimAlgebra::univariate(f2(), &[1, 1, 1], "a")?),
    )?;
    compare(c, "Q(i)/Q", &AlgebraOver::over_field(gaussian()?))?;
    let t4 = FiniteDimAlgebra::truncated(f2(), "T", 4)?;
    let over = AlgebraOver::over_field(t4.clone());
    compare(c, "F2[T]/T^4", &over)?;
    compare(
        c,
        "F2[T]/T^4 over its squares",
        &AlgebraOver::over_subalgebra(t4, squares_subalgebra(&over))?,
    )?;

    let r = squarezero_counterexample_check();
    let op = "squarezero_counterexample_check";
    c.eq("diagonal elements sampled", op, 511, r.sampled);
    c.eq(
        "a^2 outside (X^2, Y^2, Z^2)",
        op,
        "none",
        r.diagonal_failure.as_deref().unwrap_or("none"),
    );
    c.eq("XYZ in (X^2, Y^2, Z^2)", op, false, r.xyz_member);
    c.holds("XY (x) Z moves to its flip", op, r.chain_valid);
    c.eq(
        "chain",
        op,
        "X*Y (x) Z = X (x) Y*Z = X*Z (x) Y = Z (x) X*Y",
        r.chain.join(" = "),
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_sorted_and_unique() {
        let names: Vec<&str> = CATALOG.iter().map(|s| s.name).collect();
        let mut sorted = names.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(names, sorted);
    }

    #[test]
    fn undeclared_and_out_of_range_params_are_rejected() {
        let f4 = find("f4-over-f2").unwrap();
        assert!(f4
            .check_params(&Params {
                p: Some(2),
                ..Params::default()
            })
            .is_err());
        let t = find("truncated-poly-char2").unwrap();
        assert!(t
            .check_params(&Params {
                degree: Some(3),
                ..Params::default()
            })
            .is_err());
        assert!(t
            .check_params(&Params {
                degree: Some(6),
                ..Params::default()
            })
            .is_ok());
        let i = find("inseparable-model").unwrap();
        assert!(i
            .check_params(&Params {
                p: Some(5),
                ..Params::default()
            })
            .is_err());
    }

    #[test]
    fn eq_and_holds_set_verdicts() {
        let mut c = Checks::default();
        c.eq("dim W", "q_phi", 1, 0);
        assert_eq!(c.items[0].verdict, Verdict::Fail);
        c.holds("x", "op", true);
        assert_eq!(c.items[1].verdict, Verdict::Pass);
    }
}
