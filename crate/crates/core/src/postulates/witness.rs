//! Searches that exhibit the impossibility results and the limits of
//! adapting a single row of a revision.

use crate::error::{Error, Result};
use crate::logic::{PropSet, Signature, Theory};
use crate::postulates::check::check_postulate;
use crate::postulates::clause::{evaluate, Bindings, PostulateId, Violation};
use crate::rational::{enumerate_rank_functions, RankFunction};
use crate::revision::{RankedRevision, Revision};

/// Postulate sets that no revision can satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Impossibility {
    /// `U8_1` together with `K4` and `K5`.
    U8_1VsK4K5,
    /// `C2` together with `K1`..`K4`.
    C2VsK1K4,
}

impl Impossibility {
    pub fn target(self) -> PostulateId {
        match self {
            Impossibility::U8_1VsK4K5 => PostulateId::U8_1,
            Impossibility::C2VsK1K4 => PostulateId::C2,
        }
    }

    pub fn premises(self) -> &'static [PostulateId] {
        use PostulateId::*;
        match self {
            Impossibility::U8_1VsK4K5 => &[K4, K5],
            Impossibility::C2VsK1K4 => &[K1, K2, K3, K4],
        }
    }
}

/// Finds a violation of the impossible postulate for a revision that
/// satisfies the premises.
///
/// Candidates from the impossibility arguments are tried first: for `U8_1`,
/// `K ⊆ K_⊥` revised by `true` for each consistent `K`; for `C2`, `K`
/// revised by `false` then `true`. Any remaining case falls back to the
/// exhaustive search.
pub fn find_impossibility_witness<R: Revision + ?Sized>(
    rv: &R,
    which: Impossibility,
    sig: &Signature,
) -> Result<Violation> {
    for &premise in which.premises() {
        if let Some(v) = check_postulate(rv, premise, sig)? {
            return Err(Error::Precondition(format!(
                "the revision violates {} so {:?} does not apply",
                v.postulate, which
            )));
        }
    }
    let universe = sig.universe();
    let bot = Theory::inconsistent(universe);
    let truth = PropSet::full(universe);
    let falsity = PropSet::empty(universe);
    let target = which.target();
    for k in sig.all_sets()?.filter(|k| !k.is_empty()) {
        let bindings = match which {
            Impossibility::U8_1VsK4K5 => Bindings {
                k: Theory::from_models(k),
                k_prime: Some(bot.clone()),
                phi: truth.clone(),
                psi: None,
            },
            Impossibility::C2VsK1K4 => Bindings {
                k: Theory::from_models(k),
                k_prime: None,
                phi: truth.clone(),
                psi: Some(falsity.clone()),
            },
        };
        if let Some(failure) = evaluate(target, rv, &bindings) {
            return Ok(Violation {
                postulate: target,
                bindings,
                observed: failure.observed,
                required: failure.required,
            });
        }
    }
    check_postulate(rv, target, sig)?.ok_or_else(|| {
        Error::NotFound(format!(
            "no {target} violation although the revision satisfies its premises"
        ))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImplicationVerdict {
    /// Whether the revision satisfies `K1`, `K2` and `K9_2P`.
    pub antecedent_holds: bool,
    /// A `K9_2` violation for a revision satisfying the antecedent.
    pub violation: Option<Violation>,
}

impl ImplicationVerdict {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks that `K1`, `K2` and `K9_2P` together entail `K9_2` for `rv`.
pub fn check_implication_9p_to_92<R: Revision + ?Sized>(
    rv: &R,
    sig: &Signature,
) -> Result<ImplicationVerdict> {
    use PostulateId::*;
    for id in [K1, K2, K9_2P] {
        if check_postulate(rv, id, sig)?.is_some() {
            return Ok(ImplicationVerdict {
                antecedent_holds: false,
                violation: None,
            });
        }
    }
    Ok(ImplicationVerdict {
        antecedent_holds: true,
        violation: check_postulate(rv, K9_2, sig)?,
    })
}

/// Two rankings whose revisions agree on every revision of `K` (the row
/// `χ ↦ K * χ`) but disagree on revising `K * ψ` by `φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Underdetermination {
    pub first: RankFunction,
    pub second: RankFunction,
    pub psi: PropSet,
    pub phi: PropSet,
}

impl Underdetermination {
    /// Re-derives both claims from the stored rankings.
    pub fn verify(&self, k: &Theory, sig: &Signature) -> Result<bool> {
        let a = RankedRevision::new(self.first.clone());
        let b = RankedRevision::new(self.second.clone());
        for chi in sig.all_sets()? {
            if a.revise(k, &chi) != b.revise(k, &chi) {
                return Ok(false);
            }
        }
        let after_a = a.revise(&a.revise(k, &self.psi), &self.phi);
        let after_b = b.revise(&b.revise(k, &self.psi), &self.phi);
        Ok(after_a != after_b)
    }
}

pub const MAX_UNDERDETERMINATION_ATOMS: usize = 2;

/// Searches all pairs of rankings, in enumeration order, for two revisions
/// sharing the row of `k` but differing after a further revision.
pub fn dynamic_underdetermination(sig: &Signature, k: &Theory) -> Result<Underdetermination> {
    sig.require_enumerable(
        "row under-determination search",
        MAX_UNDERDETERMINATION_ATOMS,
    )?;
    let sets: Vec<PropSet> = sig.all_sets()?.collect();
    let ranks: Vec<RankFunction> = enumerate_rank_functions(sig)?.collect();
    let revisions: Vec<RankedRevision> = ranks.iter().cloned().map(RankedRevision::new).collect();

    // row[i][χ] = K *_i χ and iterated[i][ψ][φ] = (K *_i ψ) *_i φ
    let rows: Vec<Vec<Theory>> = revisions
        .iter()
        .map(|rv| sets.iter().map(|chi| rv.revise(k, chi)).collect())
        .collect();
    let iterated: Vec<Vec<Vec<Theory>>> = revisions
        .iter()
        .zip(&rows)
        .map(|(rv, row)| {
            row.iter()
                .map(|after| sets.iter().map(|phi| rv.revise(after, phi)).collect())
                .collect()
        })
        .collect();

    for i in 0..ranks.len() {
        for j in i + 1..ranks.len() {
            if rows[i] != rows[j] {
                continue;
            }
            for (psi_idx, psi) in sets.iter().enumerate() {
                for (phi_idx, phi) in sets.iter().enumerate() {
                    if iterated[i][psi_idx][phi_idx] != iterated[j][psi_idx][phi_idx] {
                        return Ok(Underdetermination {
                            first: ranks[i].clone(),
                            second: ranks[j].clone(),
                            psi: psi.clone(),
                            phi: phi.clone(),
                        });
                    }
                }
            }
        }
    }
    Err(Error::NotFound(
        "every pair of rankings sharing this row also agrees on all iterated revisions".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse_formula;
    use crate::revision::TableRevision;

    fn sig() -> Signature {
        Signature::new(["p", "q"]).unwrap()
    }

    fn m(text: &str) -> PropSet {
        parse_formula(text, &sig()).unwrap().models(&sig())
    }

    fn cn(text: &str) -> Theory {
        Theory::from_models(m(text))
    }

    fn r0() -> RankedRevision {
        RankedRevision::new(RankFunction::new(vec![2, 1, 1, 0]).unwrap())
    }

    #[test]
    fn impossibility_witnesses_for_r0() {
        let u8 = find_impossibility_witness(&r0(), Impossibility::U8_1VsK4K5, &sig()).unwrap();
        assert_eq!(u8.bindings.k, cn("!p & !q"));
        assert_eq!(u8.bindings.k_prime, Some(Theory::inconsistent(4)));
        assert_eq!(u8.bindings.phi, m("true"));
        assert!(u8.replays(&r0()));

        let c2 = find_impossibility_witness(&r0(), Impossibility::C2VsK1K4, &sig()).unwrap();
        assert_eq!(c2.bindings.k, cn("!p & !q"));
        assert_eq!(c2.bindings.phi, m("true"));
        assert_eq!(c2.bindings.psi, Some(m("false")));
        assert_eq!(c2.observed, cn("p & q"));
        assert!(c2.replays(&r0()));
    }

    #[test]
    fn impossibility_needs_premises() {
        let broken = TableRevision::from_fn(&sig(), |_, _| Theory::inconsistent(4)).unwrap();
        assert!(matches!(
            find_impossibility_witness(&broken, Impossibility::U8_1VsK4K5, &sig()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn implication_for_r0_and_k2_breaker() {
        let v = check_implication_9p_to_92(&r0(), &sig()).unwrap();
        assert!(v.antecedent_holds && v.holds());

        let mut table = TableRevision::tabulate(&r0(), &sig()).unwrap();
        table.set(&cn("p"), &m("q"), cn("!q"));
        let v = check_implication_9p_to_92(&table, &sig()).unwrap();
        assert!(!v.antecedent_holds && v.holds());
    }

    #[test]
    fn underdetermination() {
        let found = dynamic_underdetermination(&sig(), &cn("p & q")).unwrap();
        assert!(found.verify(&cn("p & q"), &sig()).unwrap());
        assert_ne!(found.first, found.second);

        assert!(matches!(
            dynamic_underdetermination(&sig(), &Theory::inconsistent(4)),
            Err(Error::NotFound(_))
        ));
    }
}
