use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::exact::{
    dual_shift, shift_substitution, shifted_value, MultiPoly, MultiquadraticAlgebra,
    PartialDifferentiable, PolyRing, PrimeField, RatFunc, RatFuncField, Rationals,
};
use crate::ring::{Field, Ring};

/// One checked identity: both sides rendered, and whether they agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub holds: bool,
}

impl Identity {
    fn compare<R: Ring>(ring: &R, name: String, expected: &R::Elem, computed: &R::Elem) -> Self {
        Identity {
            name,
            expected: ring.render(expected),
            computed: ring.render(computed),
            holds: expected == computed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExteriorReport {
    pub n: usize,
    pub char2: bool,
    pub identities: Vec<Identity>,
}

impl ExteriorReport {
    pub fn all_hold(&self) -> bool {
        self.identities.iter().all(|i| i.holds)
    }
}

fn var_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// `(T_i + S_i) + (T_i - S_i) = 2 T_i` and `(T_i + S_i)(T_i - S_i) = T_i^2` in
/// `K[T] (x) Lambda[S]`.
fn structure_relations<F: Field>(field: F, n: usize, out: &mut Vec<Identity>) {
    let names = var_names("T", n);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let polys = PolyRing::new(field, &refs);
    let ext = MultiquadraticAlgebra::exterior(polys.clone(), n);
    for i in 0..n {
        let t = ext.embed(&polys.var(i));
        let s = ext.generator(i);
        let x = ext.add(&t, &s);
        let y = ext.sub(&t, &s);
        out.push(Identity::compare(
            &ext,
            format!("(T{0} + S{0}) + (T{0} - S{0}) = 2*T{0}", i + 1),
            &ext.scale_int(2, &t),
            &ext.add(&x, &y),
        ));
        out.push(Identity::compare(
            &ext,
            format!("(T{0} + S{0})(T{0} - S{0}) = T{0}^2", i + 1),
            &ext.square(&t),
            &ext.mul(&x, &y),
        ));
    }
    if n >= 2 {
        let sum = ext.add(&ext.generator(0), &ext.generator(1));
        let prod = ext.mul(&ext.generator(0), &ext.generator(1));
        out.push(Identity::compare(
            &ext,
            String::from("(S1 + S2)^2 = 2*S1*S2"),
            &ext.scale_int(2, &prod),
            &ext.square(&sum),
        ));
    }
}

fn univariate_samples<F: Field>(k: &RatFuncField<F>) -> Vec<RatFunc<F::Elem>> {
    let t = k.var(0);
    let one = k.one();
    let t2 = k.square(&t);
    vec![
        t2.clone(),
        k.sub(&k.mul(&t2, &t), &k.scale_int(2, &t)),
        k.inv(&t).unwrap(),
        k.div(&k.add(&t2, &one), &t).unwrap(),
        k.inv(&k.add(&t, &one)).unwrap(),
    ]
}

/// `F(T + S) = F + F' S` by substitution against differentiation, and
/// `F(T + S) G(T - S) = FG + (F'G - FG') S`.
fn taylor_identities<F: Field>(field: F, out: &mut Vec<Identity>) {
    let k = RatFuncField::new(field, &["T"]);
    let dual = MultiquadraticAlgebra::dual(k.clone());
    let samples = univariate_samples(&k);
    for f in &samples {
        let (v, s) = dual_shift(&k, f, 0);
        let (sv, ss) = shifted_value(&k, f, 0);
        out.push(Identity::compare(
            &dual,
            format!("F(T + S) = F + F'*S for F = {}", k.render(f)),
            &vec![v, s],
            &vec![sv, ss],
        ));
    }
    for pair in samples.windows(2) {
        let (f, g) = (&pair[0], &pair[1]);
        let lhs = dual.mul(
            &shift_substitution(&k, f, &[1]),
            &shift_substitution(&k, g, &[-1]),
        );
        let fg = k.mul(f, g);
        let slope = k.sub(&k.mul(&k.partial(f, 0), g), &k.mul(f, &k.partial(g, 0)));
        out.push(Identity::compare(
            &dual,
            format!(
                "F(T + S)*G(T - S) = FG + (F'G - FG')*S for F = {}, G = {}",
                k.render(f),
                k.render(g)
            ),
            &vec![fg, slope],
            &lhs,
        ));
    }
}

/// `(T - S)^p - (T + S)^p = -2 S^p = 0` in `F_p[T] (x) Lambda[S]`, so the
/// relation `X^p - Y^p` dies under `X -> T + S`, `Y -> T - S`.
pub fn inseparable_relation(p: u64) -> Identity {
    let fp = PrimeField::new(p).expect("prime");
    let polys = PolyRing::new(fp, &["T"]);
    let ext = MultiquadraticAlgebra::dual(polys.clone());
    let t = ext.embed(&polys.var(0));
    let s = ext.generator(0);
    let lhs = ext.sub(&ext.pow(&ext.sub(&t, &s), p), &ext.pow(&ext.add(&t, &s), p));
    let minus_two_sp = ext.scale_int(-2, &ext.pow(&s, p));
    let mut id = Identity::compare(
        &ext,
        format!("(T - S)^{p} - (T + S)^{p} = -2*S^{p} = 0 over F_{p}"),
        &ext.zero(),
        &lhs,
    );
    id.holds = id.holds && minus_two_sp == ext.zero();
    id
}

/// Char-2 checks in `K[T] (x)_{K[T^2]} K[T]`, modelled as `P[U]/(U_i^2 - T_i^2)`
/// with `P = F_2[T_1..T_n]` the left factor and `U_i = 1 (x) T_i`.
fn char2_identities(n: usize, out: &mut Vec<Identity>) {
    let f2 = PrimeField::new(2).unwrap();
    let names = var_names("T", n);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let polys = PolyRing::new(f2, &refs);
    let squares: Vec<MultiPoly<u64>> = (0..n).map(|i| polys.square(&polys.var(i))).collect();
    let unames = var_names("U", n);
    let urefs: Vec<&str> = unames.iter().map(String::as_str).collect();
    let bal = MultiquadraticAlgebra::new(polys.clone(), squares, &urefs);
    let images: Vec<_> = (0..n)
        .map(|i| bal.add(&bal.generator(i), &bal.embed(&polys.var(i))))
        .collect();
    for (i, x) in images.iter().enumerate() {
        out.push(Identity::compare(
            &bal,
            format!("(1 (x) T{0} + T{0} (x) 1)^2 = 0", i + 1),
            &bal.zero(),
            &bal.square(x),
        ));
    }
    // Images of the monomials S^I: column I of a 2^n x 2^n matrix over P.
    let rank = 1usize << n;
    let mut unitriangular = true;
    for mask in 0..rank {
        let img = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .fold(bal.one(), |acc, i| bal.mul(&acc, &images[i]));
        // Supported on subsets of `mask`, with coefficient 1 on `mask` itself.
        for (row, c) in img.iter().enumerate() {
            let fine = if row == mask {
                polys.is_one(c)
            } else {
                row & !mask == 0 || polys.is_zero(c)
            };
            unitriangular &= fine;
        }
    }
    out.push(Identity {
        name: format!("S_i -> 1 (x) T_i + T_i (x) 1 has a unitriangular {rank}x{rank} matrix"),
        expected: String::from("unitriangular"),
        computed: String::from(if unitriangular {
            "unitriangular"
        } else {
            "not unitriangular"
        }),
        holds: unitriangular,
    });

    // Universal form: (FG)(T + S) = sum_I d_I(FG) S^I over F_2(T_1..T_n).
    let k = RatFuncField::new(f2, &refs);
    let ext = MultiquadraticAlgebra::exterior(k.clone(), n);
    let vars: Vec<_> = (0..n).map(|i| k.var(i)).collect();
    let all = vars.iter().fold(k.one(), |acc, v| k.mul(&acc, v));
    let pairs = vec![
        (vars[0].clone(), vars[n - 1].clone()),
        (all.clone(), k.add(&vars[0], &k.one())),
        (
            k.inv(&vars[0]).unwrap(),
            k.add(&k.square(&vars[n - 1]), &vars[0]),
        ),
    ];
    for (f, g) in pairs {
        let fg = k.mul(&f, &g);
        let lhs = ext.mul(
            &shift_substitution(&k, &f, &vec![1; n]),
            &shift_substitution(&k, &g, &vec![1; n]),
        );
        let expected: Vec<_> = (0..rank)
            .map(|mask| {
                (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .fold(fg.clone(), |acc, i| k.partial(&acc, i))
            })
            .collect();
        out.push(Identity::compare(
            &ext,
            format!(
                "F(T + S)*G(T + S) = sum_I d_I(FG)*S^I for F = {}, G = {}",
                k.render(&f),
                k.render(&g)
            ),
            &expected,
            &lhs,
        ));
    }
}

/// Verifies the model identities for `n` variables, over `Q` and `F_3` when
/// `char2` is false and over `F_2` when it is true.
pub fn exterior_model_check(n: usize, char2: bool) -> ExteriorReport {
    assert!((1..=4).contains(&n), "between one and four variables");
    let mut identities = Vec::new();
    if char2 {
        let f2 = PrimeField::new(2).unwrap();
        structure_relations(f2, n, &mut identities);
        taylor_identities(f2, &mut identities);
        identities.push(inseparable_relation(2));
        char2_identities(n, &mut identities);
    } else {
        structure_relations(Rationals, n, &mut identities);
        taylor_identities(Rationals, &mut identities);
        identities.push(inseparable_relation(3));
    }
    ExteriorReport {
        n,
        char2,
        identities,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_identities_hold() {
        for n in 1..=3 {
            for char2 in [false, true] {
                let r = exterior_model_check(n, char2);
                let failing: Vec<_> = r.identities.iter().filter(|i| !i.holds).collect();
                assert!(failing.is_empty(), "{failing:?}");
            }
        }
    }

    #[test]
    fn inseparable_for_two_and_three() {
        assert!(inseparable_relation(2).holds);
        assert!(inseparable_relation(3).holds);
    }
}
