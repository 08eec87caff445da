//! Exact arithmetic carriers.

mod extension;
mod multiquad;
mod poly;
mod prime;
mod ratfunc;
mod rational;
pub(crate) mod upoly;

pub use extension::{ExtensionField, Irreducibility};
pub use multiquad::{
    dual_shift, shift_substitution, shifted_value, ExteriorElement, MultiquadraticAlgebra,
};
pub use poly::{Monomial, MultiPoly, PartialDifferentiable, PolyRing};
pub use prime::{PrimeField, Zmod};
pub use ratfunc::{RatFunc, RatFuncField};
pub use rational::Rationals;

use alloc::string::String;

/// Joins signed terms as `a + b - c`. Each entry is `(negative, body)`.
pub(crate) fn join_signed(terms: &[(bool, String)]) -> String {
    if terms.is_empty() {
        return String::from("0");
    }
    let mut out = String::new();
    for (k, (negative, body)) in terms.iter().enumerate() {
        match (k, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(body);
    }
    out
}

/// Renders `coeff * monomial` where the coefficient is already rendered.
///
/// Returns `(negative, body)` suitable for [`join_signed`]. A coefficient that
/// is a compound expression is parenthesised.
pub(crate) fn term_body(coeff: &str, monomial: &str) -> (bool, String) {
    let (negative, magnitude) = match coeff.strip_prefix('-') {
        Some(rest) if !rest.contains([' ', '+', '-']) => (true, rest),
        _ => (false, coeff),
    };
    let compound = magnitude.contains([' ', '+']) || magnitude[1..].contains('-');
    let body = if monomial.is_empty() {
        if compound {
            alloc::format!("({magnitude})")
        } else {
            String::from(magnitude)
        }
    } else if magnitude == "1" {
        String::from(monomial)
    } else if compound {
        alloc::format!("({magnitude})*{monomial}")
    } else {
        alloc::format!("{magnitude}*{monomial}")
    };
    (negative, body)
}
