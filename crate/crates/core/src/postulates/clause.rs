use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::logic::{PropSet, Theory};
use crate::revision::Revision;

/// Identifier of a quantified clause.
///
/// `K1`..`K9` are the revision postulates including minimal influence,
/// `U8*` the intersection postulates, `C*` the iterated-revision postulates,
/// and `P_*` derived properties that hold for every operator satisfying
/// `K1`..`K9`.
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PostulateId {
    K1,
    K2,
    K3,
    K4,
    K5,
    K6,
    K7,
    K8,
    K9,
    K9_1,
    K9_2,
    K9_2P,
    U8,
    U8_1,
    U8_2,
    C1,
    C2,
    C2P,
    C3,
    C4,
    P_PHIANDPSI,
    P_PSI,
    P_GEN,
    P_KM1,
    P_K9U8_1,
}

/// Which variables a clause quantifies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantifiers {
    /// `K, φ`
    TheoryFormula,
    /// `K, φ, ψ`
    TheoryTwoFormulas,
    /// `K, K', φ`
    TwoTheoriesFormula,
}

impl Quantifiers {
    pub fn arity(self) -> usize {
        match self {
            Quantifiers::TheoryFormula => 2,
            _ => 3,
        }
    }
}

impl PostulateId {
    pub const ALL: [PostulateId; 25] = {
        use PostulateId::*;
        [
            K1,
            K2,
            K3,
            K4,
            K5,
            K6,
            K7,
            K8,
            K9,
            K9_1,
            K9_2,
            K9_2P,
            U8,
            U8_1,
            U8_2,
            C1,
            C2,
            C2P,
            C3,
            C4,
            P_PHIANDPSI,
            P_PSI,
            P_GEN,
            P_KM1,
            P_K9U8_1,
        ]
    };

    pub fn name(self) -> &'static str {
        use PostulateId::*;
        match self {
            K1 => "K1",
            K2 => "K2",
            K3 => "K3",
            K4 => "K4",
            K5 => "K5",
            K6 => "K6",
            K7 => "K7",
            K8 => "K8",
            K9 => "K9",
            K9_1 => "K9_1",
            K9_2 => "K9_2",
            K9_2P => "K9_2P",
            U8 => "U8",
            U8_1 => "U8_1",
            U8_2 => "U8_2",
            C1 => "C1",
            C2 => "C2",
            C2P => "C2P",
            C3 => "C3",
            C4 => "C4",
            P_PHIANDPSI => "P_PHIANDPSI",
            P_PSI => "P_PSI",
            P_GEN => "P_GEN",
            P_KM1 => "P_KM1",
            P_K9U8_1 => "P_K9U8_1",
        }
    }

    /// `K9` and `K9_2P` range over `(K, φ)`: the other theory of `K9` is
    /// `K_⊥`, and the `ψ` of `K9_2P` is the strongest one meeting the antecedent. Both
    /// reductions are exact.
    pub fn quantifiers(self) -> Quantifiers {
        use PostulateId::*;
        match self {
            K1 | K2 | K3 | K4 | K5 | K6 | K9 | K9_1 | K9_2 | K9_2P => Quantifiers::TheoryFormula,
            K7 | K8 | C1 | C2 | C2P | C3 | C4 | P_PHIANDPSI | P_PSI | P_GEN => {
                Quantifiers::TheoryTwoFormulas
            }
            U8 | U8_1 | U8_2 | P_KM1 | P_K9U8_1 => Quantifiers::TwoTheoriesFormula,
        }
    }

    /// The clause in words.
    pub fn statement(self) -> &'static str {
        use PostulateId::*;
        match self {
            K1 => "K*phi is a theory",
            K2 => "phi in K*phi",
            K3 => "K*phi subset of Cn(K, phi)",
            K4 => "if !phi not in K then Cn(K, phi) subset of K*phi",
            K5 => "if K*phi is inconsistent then phi is a contradiction",
            K6 => "if phi <-> psi is valid then K*phi = K*psi",
            K7 => "K*(phi & psi) subset of Cn(K*phi, psi)",
            K8 => "if !psi not in K*phi then Cn(K*phi, psi) subset of K*(phi & psi)",
            K9 => "if !phi in K and !phi in K' then K*phi = K'*phi",
            K9_1 => "if !phi in K then K*phi subset of bot*phi",
            K9_2 => "if !phi in K then bot*phi subset of K*phi",
            K9_2P => "if psi in K and psi in bot*phi then psi in K*phi",
            U8 => "(K cap K')*phi = (K*phi) cap (K'*phi)",
            U8_1 => "if K subset of K' then K*phi subset of K'*phi",
            U8_2 => "(K*phi) cap (K'*phi) subset of (K cap K')*phi",
            C1 => "if phi |= psi then (K*psi)*phi = K*phi",
            C2 => "if phi |= !psi then (K*psi)*phi = K*phi",
            C2P => "if !phi in K and phi |= !psi then (K*psi)*phi = K*phi",
            C3 => "if psi in K*phi then psi in (K*psi)*phi",
            C4 => "if !psi not in K*phi then !psi not in (K*psi)*phi",
            P_PHIANDPSI => "if !phi not in K*psi then (K*psi)*phi = K*(psi & phi)",
            P_PSI => "if !phi in K*(psi | phi) then (K*psi)*phi = K*phi",
            P_GEN => "if psi in K*phi then (K*psi)*phi = K*phi",
            P_KM1 => {
                "if !phi not in K and !phi not in K' then (K cap K')*phi = (K*phi) cap (K'*phi)"
            }
            P_K9U8_1 => "if !phi in K and !phi in K' then (K cap K')*phi = (K*phi) cap (K'*phi)",
        }
    }

    /// Parses a comma-separated list of ids and `A..B` ranges (inclusive, in
    /// catalogue order). `all` selects every id.
    pub fn parse_list(text: &str) -> Result<Vec<PostulateId>> {
        let mut out = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if item.eq_ignore_ascii_case("all") {
                out.extend(PostulateId::ALL);
            } else if let Some((a, b)) = item.split_once("..") {
                let (a, b): (PostulateId, PostulateId) = (a.trim().parse()?, b.trim().parse()?);
                if a > b {
                    return Err(Error::UnknownPostulate(item.to_string()));
                }
                out.extend(
                    PostulateId::ALL
                        .iter()
                        .copied()
                        .filter(|id| (a..=b).contains(id)),
                );
            } else {
                out.push(item.parse()?);
            }
        }
        if out.is_empty() {
            return Err(Error::UnknownPostulate(text.to_string()));
        }
        let mut seen = Vec::new();
        out.retain(|id| {
            let fresh = !seen.contains(id);
            seen.push(*id);
            fresh
        });
        Ok(out)
    }
}

impl fmt::Display for PostulateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PostulateId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_uppercase().replace(['.', '\''], "_");
        let wanted = match wanted.as_str() {
            "K9_2_" => "K9_2P".to_string(),
            "C2_" => "C2P".to_string(),
            _ => wanted,
        };
        PostulateId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == wanted)
            .ok_or_else(|| Error::UnknownPostulate(s.to_string()))
    }
}

/// Values of the quantified variables of a clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bindings {
    pub k: Theory,
    pub k_prime: Option<Theory>,
    pub phi: PropSet,
    pub psi: Option<PropSet>,
}

impl Bindings {
    fn k_prime(&self) -> &Theory {
        self.k_prime.as_ref().expect("clause binds K'")
    }

    fn psi(&self) -> &PropSet {
        self.psi.as_ref().expect("clause binds psi")
    }
}

/// A failed clause instance: the theory observed and what the clause required of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseFailure {
    pub observed: Theory,
    pub required: &'static str,
}

/// A clause instance that fails for some revision.
///
/// Replaying the bindings through the same revision reproduces the failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub postulate: PostulateId,
    pub bindings: Bindings,
    pub observed: Theory,
    pub required: &'static str,
}

impl Violation {
    pub fn replays<R: Revision + ?Sized>(&self, rv: &R) -> bool {
        evaluate(self.postulate, rv, &self.bindings).is_some_and(|f| f.observed == self.observed)
    }
}

/// Evaluates one clause instance; `None` when it holds.
pub fn evaluate<R: Revision + ?Sized>(
    id: PostulateId,
    rv: &R,
    b: &Bindings,
) -> Option<ClauseFailure> {
    use PostulateId::*;
    let universe = rv.universe();
    let k = &b.k;
    let phi = &b.phi;
    let bot = Theory::inconsistent(universe);
    let rev = |t: &Theory, f: &PropSet| rv.revise(t, f);
    let fail = |observed: Theory| {
        Some(ClauseFailure {
            observed,
            required: id.statement(),
        })
    };
    let check = |ok: bool, observed: Theory| if ok { None } else { fail(observed) };

    match id {
        K1 => {
            let out = rev(k, phi);
            check(out.universe() == universe, out)
        }
        K2 => {
            let out = rev(k, phi);
            check(out.contains(phi), out)
        }
        K3 => {
            let out = rev(k, phi);
            check(out.is_subtheory_of(&k.cn_with(phi)), out)
        }
        K4 => {
            let out = rev(k, phi);
            check(
                k.contains_negation(phi) || k.cn_with(phi).is_subtheory_of(&out),
                out,
            )
        }
        K5 => {
            let out = rev(k, phi);
            check(out.is_consistent() || phi.is_empty(), out)
        }
        K6 => {
            // Equivalent formulas share one valuation set, so the clause
            // reduces to the operator being a function of that set.
            let out = rev(k, phi);
            let again = rev(k, &phi.clone());
            check(out == again, again)
        }
        K7 => {
            let psi = b.psi();
            let lhs = rev(k, &phi.intersection(psi));
            check(lhs.is_subtheory_of(&rev(k, phi).cn_with(psi)), lhs)
        }
        K8 => {
            let psi = b.psi();
            let base = rev(k, phi);
            let lhs = rev(k, &phi.intersection(psi));
            check(
                base.contains_negation(psi) || base.cn_with(psi).is_subtheory_of(&lhs),
                lhs,
            )
        }
        K9 => {
            let kp = b.k_prime();
            let out = rev(k, phi);
            check(
                !(k.contains_negation(phi) && kp.contains_negation(phi)) || out == rev(kp, phi),
                out,
            )
        }
        K9_1 => {
            let out = rev(k, phi);
            check(
                !k.contains_negation(phi) || out.is_subtheory_of(&rev(&bot, phi)),
                out,
            )
        }
        K9_2 => {
            let out = rev(k, phi);
            check(
                !k.contains_negation(phi) || rev(&bot, phi).is_subtheory_of(&out),
                out,
            )
        }
        K9_2P => {
            let psi = b.psi();
            let out = rev(k, phi);
            check(
                !(k.contains(psi) && rev(&bot, phi).contains(psi)) || out.contains(psi),
                out,
            )
        }
        U8 | P_KM1 | P_K9U8_1 => {
            let kp = b.k_prime();
            let applies = match id {
                P_KM1 => !k.contains_negation(phi) && !kp.contains_negation(phi),
                P_K9U8_1 => k.contains_negation(phi) && kp.contains_negation(phi),
                _ => true,
            };
            let lhs = rev(&k.intersect(kp), phi);
            check(!applies || lhs == rev(k, phi).intersect(&rev(kp, phi)), lhs)
        }
        U8_1 => {
            let kp = b.k_prime();
            let out = rev(k, phi);
            check(
                !k.is_subtheory_of(kp) || out.is_subtheory_of(&rev(kp, phi)),
                out,
            )
        }
        U8_2 => {
            let kp = b.k_prime();
            let lhs = rev(&k.intersect(kp), phi);
            check(
                rev(k, phi).intersect(&rev(kp, phi)).is_subtheory_of(&lhs),
                lhs,
            )
        }
        C1 | C2 | C2P | C3 | C4 | P_PSI | P_GEN | P_PHIANDPSI => {
            let psi = b.psi();
            let by_phi = rev(k, phi);
            let twice = rev(&rev(k, psi), phi);
            let (applies, holds) = match id {
                C1 => (phi.is_subset(psi), twice == by_phi),
                C2 => (phi.is_disjoint(psi), twice == by_phi),
                C2P => (
                    k.contains_negation(phi) && phi.is_disjoint(psi),
                    twice == by_phi,
                ),
                C3 => (by_phi.contains(psi), twice.contains(psi)),
                C4 => (
                    !by_phi.contains_negation(psi),
                    !twice.contains_negation(psi),
                ),
                P_PSI => (
                    rev(k, &psi.union(phi)).contains_negation(phi),
                    twice == by_phi,
                ),
                P_GEN => (by_phi.contains(psi), twice == by_phi),
                P_PHIANDPSI => (
                    !rev(k, psi).contains_negation(phi),
                    twice == rev(k, &psi.intersection(phi)),
                ),
                _ => unreachable!(),
            };
            check(!applies || holds, twice)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ids_and_ranges() {
        use PostulateId::*;
        assert_eq!(
            PostulateId::parse_list("K1..K9").unwrap(),
            vec![K1, K2, K3, K4, K5, K6, K7, K8, K9]
        );
        assert_eq!(
            PostulateId::parse_list("u8_2, K9.2', C2',K2").unwrap(),
            vec![U8_2, K9_2P, C2P, K2]
        );
        assert_eq!(PostulateId::parse_list("all").unwrap().len(), 25);
        assert!(PostulateId::parse_list("K10").is_err());
        assert!(PostulateId::parse_list("K9..K1").is_err());
        assert!(PostulateId::parse_list("").is_err());
        for id in PostulateId::ALL {
            assert_eq!(id.name().parse::<PostulateId>().unwrap(), id);
        }
    }
}
