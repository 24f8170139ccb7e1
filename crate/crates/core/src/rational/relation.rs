use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::logic::{PropSet, Signature, Theory};

/// A consequence relation given by its consequence operator `φ ↦ C(φ)`,
/// total over the valuation sets of a signature.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConsequenceRelation {
    universe: usize,
    table: Vec<Theory>,
}

impl ConsequenceRelation {
    pub fn from_fn(sig: &Signature, mut f: impl FnMut(&PropSet) -> Theory) -> Result<Self> {
        let table = sig.all_sets()?.map(|phi| f(&phi)).collect();
        Ok(ConsequenceRelation {
            universe: sig.universe(),
            table,
        })
    }

    /// Builds a relation from `C(φ)` listed in ascending index order of `φ`.
    pub fn from_table(sig: &Signature, table: Vec<Theory>) -> Result<Self> {
        let expected = sig.domain_size()?;
        if table.len() != expected {
            return Err(Error::UniverseMismatch {
                expected,
                found: table.len(),
            });
        }
        if let Some(bad) = table.iter().find(|t| t.universe() != sig.universe()) {
            return Err(Error::UniverseMismatch {
                expected: sig.universe(),
                found: bad.universe(),
            });
        }
        Ok(ConsequenceRelation {
            universe: sig.universe(),
            table,
        })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn consequences(&self, phi: &PropSet) -> &Theory {
        &self.table[phi.index() as usize]
    }

    /// `φ |~ ψ`.
    pub fn entails(&self, phi: &PropSet, psi: &PropSet) -> bool {
        self.consequences(phi).contains(psi)
    }

    pub fn iter(&self) -> impl Iterator<Item = (PropSet, &Theory)> + '_ {
        self.table
            .iter()
            .enumerate()
            .map(|(i, t)| (PropSet::from_index(self.universe, i as u64), t))
    }
}

/// Properties checked by [`check_rationality`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RationalProperty {
    /// Reflexivity: `φ |~ φ`.
    Ref,
    /// Left logical equivalence; holds by construction.
    Lle,
    /// Right weakening: `φ |~ ψ`, `ψ ⊨ χ` give `φ |~ χ`.
    Rw,
    /// `φ |~ ψ`, `φ |~ χ` give `φ |~ ψ∧χ`.
    And,
    /// `φ |~ χ`, `ψ |~ χ` give `φ∨ψ |~ χ`.
    Or,
    /// Cautious monotonicity: `φ |~ ψ`, `φ |~ χ` give `φ∧ψ |~ χ`.
    Cm,
    /// Rational monotonicity: `φ |~ χ`, `φ |/~ ¬ψ` give `φ∧ψ |~ χ`.
    Rm,
    /// Conditionalization: `φ∧ψ |~ χ` gives `φ |~ ψ→χ`.
    S,
    /// Consistency preservation: `φ |~ false` only for contradictory `φ`.
    Cp,
}

impl RationalProperty {
    pub const ALL: [RationalProperty; 9] = [
        RationalProperty::Ref,
        RationalProperty::Lle,
        RationalProperty::Rw,
        RationalProperty::And,
        RationalProperty::Or,
        RationalProperty::Cm,
        RationalProperty::Rm,
        RationalProperty::S,
        RationalProperty::Cp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RationalProperty::Ref => "REF",
            RationalProperty::Lle => "LLE",
            RationalProperty::Rw => "RW",
            RationalProperty::And => "AND",
            RationalProperty::Or => "OR",
            RationalProperty::Cm => "CM",
            RationalProperty::Rm => "RM",
            RationalProperty::S => "S",
            RationalProperty::Cp => "CP",
        }
    }
}

impl fmt::Display for RationalProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The first instance, in ascending `(φ, ψ, χ)` order, at which a property fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalityCounterexample {
    pub phi: PropSet,
    pub psi: Option<PropSet>,
    pub chi: Option<PropSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalityReport {
    pub results: Vec<(RationalProperty, Option<RationalityCounterexample>)>,
}

impl RationalityReport {
    pub fn passes(&self, prop: RationalProperty) -> bool {
        self.counterexample(prop).is_none()
    }

    pub fn counterexample(&self, prop: RationalProperty) -> Option<&RationalityCounterexample> {
        self.results
            .iter()
            .find(|(p, _)| *p == prop)
            .and_then(|(_, cx)| cx.as_ref())
    }

    pub fn passes_all(&self) -> bool {
        self.results.iter().all(|(_, cx)| cx.is_none())
    }

    pub fn failed(&self) -> Vec<RationalProperty> {
        self.results
            .iter()
            .filter(|(_, cx)| cx.is_some())
            .map(|(p, _)| *p)
            .collect()
    }
}

/// Exhaustive rationality check over every pair and triple of valuation sets.
pub const MAX_RATIONALITY_ATOMS: usize = 3;

/// Checks the rational-relation properties plus consistency preservation by
/// quantifying over all formula classes of the signature.
pub fn check_rationality(c: &ConsequenceRelation, sig: &Signature) -> Result<RationalityReport> {
    sig.require_enumerable("rationality check", MAX_RATIONALITY_ATOMS)?;
    if c.universe() != sig.universe() {
        return Err(Error::UniverseMismatch {
            expected: sig.universe(),
            found: c.universe(),
        });
    }
    let masks = Masks {
        c: c.table.iter().map(|t| t.models().index()).collect(),
        full: PropSet::full(sig.universe()).index(),
    };
    let universe = sig.universe();
    let results = RationalProperty::ALL
        .iter()
        .map(|&prop| {
            let cx = masks
                .first_failure(prop)
                .map(|(phi, psi, chi)| RationalityCounterexample {
                    phi: PropSet::from_index(universe, phi),
                    psi: psi.map(|x| PropSet::from_index(universe, x)),
                    chi: chi.map(|x| PropSet::from_index(universe, x)),
                });
            (prop, cx)
        })
        .collect();
    Ok(RationalityReport { results })
}

type Instance = (u64, Option<u64>, Option<u64>);

/// The relation as bitmasks: `c[φ]` is the model mask of `C(φ)`.
struct Masks {
    c: Vec<u64>,
    full: u64,
}

impl Masks {
    fn entails(&self, phi: u64, psi: u64) -> bool {
        self.c[phi as usize] & !psi == 0
    }

    fn not(&self, x: u64) -> u64 {
        self.full & !x
    }

    fn first_failure(&self, prop: RationalProperty) -> Option<Instance> {
        let n = self.c.len() as u64;
        let single =
            |holds: &dyn Fn(u64) -> bool| (0..n).find(|&a| !holds(a)).map(|a| (a, None, None));
        let triple = |holds: &dyn Fn(u64, u64, u64) -> bool| {
            for a in 0..n {
                for b in 0..n {
                    for x in 0..n {
                        if !holds(a, b, x) {
                            return Some((a, Some(b), Some(x)));
                        }
                    }
                }
            }
            None
        };
        match prop {
            RationalProperty::Ref => single(&|a| self.entails(a, a)),
            // C is indexed by equivalence classes, so LLE cannot fail.
            RationalProperty::Lle => None,
            RationalProperty::Rw => {
                triple(&|a, b, x| !(self.entails(a, b) && b & !x == 0) || self.entails(a, x))
            }
            RationalProperty::And => triple(&|a, b, x| {
                !(self.entails(a, b) && self.entails(a, x)) || self.entails(a, b & x)
            }),
            RationalProperty::Or => triple(&|a, b, x| {
                !(self.entails(a, x) && self.entails(b, x)) || self.entails(a | b, x)
            }),
            RationalProperty::Cm => triple(&|a, b, x| {
                !(self.entails(a, b) && self.entails(a, x)) || self.entails(a & b, x)
            }),
            RationalProperty::Rm => triple(&|a, b, x| {
                !(self.entails(a, x) && !self.entails(a, self.not(b))) || self.entails(a & b, x)
            }),
            RationalProperty::S => {
                triple(&|a, b, x| !self.entails(a & b, x) || self.entails(a, self.not(b) | x))
            }
            RationalProperty::Cp => single(&|a| !self.entails(a, 0) || a == 0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse_formula;
    use crate::rational::RankFunction;

    fn sig() -> Signature {
        Signature::new(["p", "q"]).unwrap()
    }

    fn m(text: &str) -> PropSet {
        parse_formula(text, &sig()).unwrap().models(&sig())
    }

    fn r0_relation() -> ConsequenceRelation {
        let r0 = RankFunction::new(vec![2, 1, 1, 0]).unwrap();
        ConsequenceRelation::from_fn(&sig(), |f| r0.consequences_of(f)).unwrap()
    }

    /// `C(true) = Cn(q)`, `C(p) = Cn(p ∧ ¬q)`, otherwise `C(φ) = Cn(φ)`.
    fn non_monotone_table() -> ConsequenceRelation {
        ConsequenceRelation::from_fn(&sig(), |f| {
            if *f == m("true") {
                Theory::from_models(m("q"))
            } else if *f == m("p") {
                Theory::from_models(m("p & !q"))
            } else {
                Theory::from_models(f.clone())
            }
        })
        .unwrap()
    }

    #[test]
    fn ranked_relation_is_rational() {
        let report = check_rationality(&r0_relation(), &sig()).unwrap();
        assert!(report.passes_all(), "{:?}", report.failed());
    }

    #[test]
    fn rational_monotonicity_failure() {
        let c = non_monotone_table();
        let report = check_rationality(&c, &sig()).unwrap();
        assert!(!report.passes(RationalProperty::Rm));

        // The instance φ = true, ψ = p, χ = q violates the RM clause directly.
        let (t, p, q) = (m("true"), m("p"), m("q"));
        assert!(c.entails(&t, &q));
        assert!(!c.entails(&t, &p.complement()));
        assert!(!c.entails(&p, &q));

        // The reported instance is the first in ascending (φ, ψ, χ) order and
        // is itself a genuine failure.
        let cx = report.counterexample(RationalProperty::Rm).unwrap();
        let (phi, psi, chi) = (&cx.phi, cx.psi.as_ref().unwrap(), cx.chi.as_ref().unwrap());
        assert!(c.entails(phi, chi));
        assert!(!c.entails(phi, &psi.complement()));
        assert!(!c.entails(&phi.intersection(psi), chi));
    }

    #[test]
    fn reflexivity_fails_when_false_is_consistent() {
        let c = ConsequenceRelation::from_fn(&sig(), |f| {
            if f.is_empty() {
                Theory::from_models(m("p"))
            } else {
                Theory::from_models(f.clone())
            }
        })
        .unwrap();
        let report = check_rationality(&c, &sig()).unwrap();
        let cx = report.counterexample(RationalProperty::Ref).unwrap();
        assert!(cx.phi.is_empty());
    }

    #[test]
    fn consistency_preservation_failure() {
        let c = ConsequenceRelation::from_fn(&sig(), |f| {
            if *f == m("p") {
                Theory::inconsistent(4)
            } else {
                Theory::from_models(f.clone())
            }
        })
        .unwrap();
        let report = check_rationality(&c, &sig()).unwrap();
        assert_eq!(
            report.counterexample(RationalProperty::Cp).unwrap().phi,
            m("p")
        );
    }

    #[test]
    fn from_table_validates_length() {
        assert!(ConsequenceRelation::from_table(&sig(), vec![Theory::inconsistent(4); 3]).is_err());
        assert!(check_rationality(&r0_relation(), &Signature::with_atoms(4).unwrap()).is_err());
    }
}
