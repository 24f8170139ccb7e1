//! Revision operators and the constructions relating them to ranked
//! consequence relations.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::logic::{PropSet, Signature, Theory, Valuation};
use crate::rational::{ConsequenceRelation, RankFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RevisionKind {
    Ranked,
    Table,
    Conservative,
}

/// A two-place revision operator `(K, φ) ↦ K * φ`, total over all theories
/// of a signature including `K_⊥`.
pub trait Revision {
    fn revise(&self, k: &Theory, phi: &PropSet) -> Theory;

    fn kind(&self) -> RevisionKind;

    /// Number of valuations of the signature the operator is defined on.
    fn universe(&self) -> usize;
}

impl<R: Revision + ?Sized> Revision for &R {
    fn revise(&self, k: &Theory, phi: &PropSet) -> Theory {
        (**self).revise(k, phi)
    }
    fn kind(&self) -> RevisionKind {
        (**self).kind()
    }
    fn universe(&self) -> usize {
        (**self).universe()
    }
}

impl<R: Revision + ?Sized> Revision for Box<R> {
    fn revise(&self, k: &Theory, phi: &PropSet) -> Theory {
        (**self).revise(k, phi)
    }
    fn kind(&self) -> RevisionKind {
        (**self).kind()
    }
    fn universe(&self) -> usize {
        (**self).universe()
    }
}

impl<R: Revision + ?Sized> Revision for Arc<R> {
    fn revise(&self, k: &Theory, phi: &PropSet) -> Theory {
        (**self).revise(k, phi)
    }
    fn kind(&self) -> RevisionKind {
        (**self).kind()
    }
    fn universe(&self) -> usize {
        (**self).universe()
    }
}

/// Mild when `¬φ ∉ K`, severe when `¬φ ∈ K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Severity {
    Mild,
    Severe,
}

impl Severity {
    pub fn of(k: &Theory, phi: &PropSet) -> Severity {
        if k.contains_negation(phi) {
            Severity::Severe
        } else {
            Severity::Mild
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Mild => "mild",
            Severity::Severe => "severe",
        })
    }
}

/// Revision by a ranking: severe revisions adopt `C(φ)`, mild ones expand.
///
/// ```text
/// K * φ = C(φ)       if ¬φ ∈ K
///         Cn(K, φ)   otherwise
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankedRevision {
    rank: RankFunction,
}

impl RankedRevision {
    pub fn new(rank: RankFunction) -> Self {
        RankedRevision { rank }
    }

    /// The revision whose `K_⊥` row is the given relation.
    pub fn from_relation(c: &ConsequenceRelation) -> Result<Self> {
        Ok(RankedRevision::new(RankFunction::from_relation(c)?))
    }

    pub fn rank(&self) -> &RankFunction {
        &self.rank
    }
}

impl Revision for RankedRevision {
    fn revise(&self, k: &Theory, phi: &PropSet) -> Theory {
        if k.contains_negation(phi) {
            self.rank.consequences_of(phi)
        } else {
            k.cn_with(phi)
        }
    }

    fn kind(&self) -> RevisionKind {
        RevisionKind::Ranked
    }

    fn universe(&self) -> usize {
        self.rank.universe()
    }
}

/// Tables are limited to this many atoms (`2^(2^n)` squared cells).
pub const MAX_TABLE_ATOMS: usize = 3;

/// An explicit revision table over every `(K, φ)` pair of a signature.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TableRevision {
    universe: usize,
    domain: usize,
    cells: Vec<Theory>,
}

impl TableRevision {
    pub fn from_fn(
        sig: &Signature,
        mut f: impl FnMut(&Theory, &PropSet) -> Theory,
    ) -> Result<Self> {
        sig.require_enumerable("revision table", MAX_TABLE_ATOMS)?;
        let domain = sig.domain_size()?;
        let mut cells = Vec::with_capacity(domain * domain);
        for k in sig.all_sets()? {
            let k = Theory::from_models(k);
            for phi in sig.all_sets()? {
                let out = f(&k, &phi);
                if out.universe() != sig.universe() {
                    return Err(Error::UniverseMismatch {
                        expected: sig.universe(),
                        found: out.universe(),
                    });
                }
                cells.push(out);
            }
        }
        Ok(TableRevision {
            universe: sig.universe(),
            domain,
            cells,
        })
    }

    /// Records every value of `rv`.
    pub fn tabulate<R: Revision + ?Sized>(rv: &R, sig: &Signature) -> Result<Self> {
        TableRevision::from_fn(sig, |k, phi| rv.revise(k, phi))
    }

    pub fn set(&mut self, k: &Theory, phi: &PropSet, out: Theory) {
        assert_eq!(out.universe(), self.universe);
        let i = self.cell(k, phi);
        self.cells[i] = out;
    }

    /// Every cell drawn uniformly from the subsets of `φ`.
    pub fn random(sig: &Signature, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        TableRevision::from_fn(sig, |_, phi| {
            Theory::from_models(random_subset(&mut rng, phi))
        })
    }

    /// Random table that keeps only what `φ` allows and what either `K` or
    /// the `K_⊥` row already holds: the `K_⊥` row is drawn from the subsets
    /// of `φ`, every other cell from the subsets of `φ ∩ (Mod K ∪ Mod(K_⊥ * φ))`.
    pub fn random_retentive(sig: &Signature, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bottom_row: Vec<PropSet> = sig
            .all_sets()?
            .map(|phi| random_subset(&mut rng, &phi))
            .collect();
        TableRevision::from_fn(sig, |k, phi| {
            let row = &bottom_row[phi.index() as usize];
            if k.is_consistent() {
                let allowed = phi.intersection(&k.models().union(row));
                Theory::from_models(random_subset(&mut rng, &allowed))
            } else {
                Theory::from_models(row.clone())
            }
        })
    }

    fn cell(&self, k: &Theory, phi: &PropSet) -> usize {
        k.models().index() as usize * self.domain + phi.index() as usize
    }
}

fn random_subset(rng: &mut ChaCha8Rng, of: &PropSet) -> PropSet {
    PropSet::from_valuations(of.universe(), of.iter().filter(|_| rng.gen_bool(0.5)))
}

impl Revision for TableRevision {
    fn revise(&self, k: &Theory, phi: &PropSet) -> Theory {
        self.cells[self.cell(k, phi)].clone()
    }

    fn kind(&self) -> RevisionKind {
        RevisionKind::Table
    }

    fn universe(&self) -> usize {
        self.universe
    }
}

/// Extension of a revision from one anchor theory to all theories:
/// severe revisions of any `L` follow the source's row at the anchor,
/// mild ones expand.
///
/// ```text
/// L *_K φ = K * φ      if ¬φ ∈ L
///           Cn(L, φ)   otherwise
/// ```
#[derive(Debug, Clone)]
pub struct ConservativeExtension<R> {
    source: R,
    anchor: Theory,
}

impl<R: Revision> ConservativeExtension<R> {
    pub fn source(&self) -> &R {
        &self.source
    }

    pub fn anchor(&self) -> &Theory {
        &self.anchor
    }
}

pub fn conservative_extension<R: Revision>(rv: R, k: Theory) -> ConservativeExtension<R> {
    assert_eq!(rv.universe(), k.universe());
    ConservativeExtension {
        source: rv,
        anchor: k,
    }
}

impl<R: Revision> Revision for ConservativeExtension<R> {
    fn revise(&self, l: &Theory, phi: &PropSet) -> Theory {
        if l.contains_negation(phi) {
            self.source.revise(&self.anchor, phi)
        } else {
            l.cn_with(phi)
        }
    }

    fn kind(&self) -> RevisionKind {
        RevisionKind::Conservative
    }

    fn universe(&self) -> usize {
        self.source.universe()
    }
}

/// The ranking with a new bottom level holding the models of `k`.
///
/// Models of `k` get rank 0, every other valuation its old rank plus one;
/// the result is normalized, so `k = K_⊥` gives back `normalize(r)`.
pub fn build_m_k(r: &RankFunction, k: &Theory) -> RankFunction {
    assert_eq!(r.universe(), k.universe());
    let ranks = (0..r.universe())
        .map(|i| {
            let v = Valuation(i as u32);
            if k.models().contains(v) {
                0
            } else {
                r.rank(v) + 1
            }
        })
        .collect();
    RankFunction::new(ranks)
        .expect("same length as the source ranking")
        .normalize()
}

/// The relation `φ |~ ψ iff ψ ∈ base * φ`.
pub fn relation_of_revision<R: Revision + ?Sized>(
    rv: &R,
    base: &Theory,
    sig: &Signature,
) -> Result<ConsequenceRelation> {
    ConsequenceRelation::from_fn(sig, |phi| rv.revise(base, phi))
}

/// One step of an iterated revision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RevisionStep {
    pub input: Theory,
    pub formula: PropSet,
    pub output: Theory,
    pub severity: Severity,
}

/// Revises `k` by each formula in turn with the same operator.
pub fn iterate<R: Revision + ?Sized>(rv: &R, k: &Theory, fs: &[PropSet]) -> Vec<RevisionStep> {
    let mut current = k.clone();
    let mut steps = Vec::with_capacity(fs.len());
    for phi in fs {
        let output = rv.revise(&current, phi);
        let severity = Severity::of(&current, phi);
        let input = std::mem::replace(&mut current, output.clone());
        steps.push(RevisionStep {
            input,
            formula: phi.clone(),
            output,
            severity,
        });
    }
    steps
}

/// Pointwise equality of two revisions over every `(K, φ)` of the signature.
pub fn revisions_agree<A, B>(a: &A, b: &B, sig: &Signature) -> Result<bool>
where
    A: Revision + ?Sized,
    B: Revision + ?Sized,
{
    for k in sig.all_sets()? {
        let k = Theory::from_models(k);
        for phi in sig.all_sets()? {
            if a.revise(&k, &phi) != b.revise(&k, &phi) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
