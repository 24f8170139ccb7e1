//! Canonical full-DNF rendering of valuation sets.

use crate::error::Result;
use crate::logic::{parse_formula, Formula, PropSet, Signature, Theory, Valuation};

fn minterm(v: Valuation, n: usize) -> Formula {
    (0..n)
        .map(|i| {
            if v.value(i, n) {
                Formula::Atom(i)
            } else {
                Formula::negation(Formula::Atom(i))
            }
        })
        .reduce(Formula::and)
        .expect("signature has at least one atom")
}

/// Full disjunctive normal form of `s`, minterms in ascending valuation order.
///
/// The empty set gives `false` and the full set gives `true`.
pub fn canonical_formula(s: &PropSet, sig: &Signature) -> Formula {
    if s.is_empty() {
        return Formula::False;
    }
    if s.is_full() {
        return Formula::True;
    }
    let n = sig.len();
    s.iter()
        .map(|v| minterm(v, n))
        .reduce(Formula::or)
        .expect("non-empty set")
}

/// [`canonical_formula`] rendered as text.
pub fn dnf(s: &PropSet, sig: &Signature) -> String {
    canonical_formula(s, sig).display(sig).to_string()
}

/// Theory literal: `bot` for `K_⊥`, otherwise a formula denoting `Cn` of it.
pub fn parse_theory(text: &str, sig: &Signature) -> Result<Theory> {
    if text.trim() == "bot" {
        return Ok(Theory::inconsistent(sig.universe()));
    }
    Ok(Theory::from_models(parse_formula(text, sig)?.models(sig)))
}

/// Text form of a theory: `bot` for `K_⊥`, else the DNF of its models.
pub fn theory_text(k: &Theory, sig: &Signature) -> String {
    if k.is_consistent() {
        dnf(k.models(), sig)
    } else {
        "bot".to_string()
    }
}
