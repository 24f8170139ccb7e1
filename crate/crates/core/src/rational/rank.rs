use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::logic::{PropSet, Signature, Theory, Valuation};
use crate::rational::ConsequenceRelation;

/// A total ranking of the valuations of a signature; lower is more normal.
///
/// `φ |~ ψ` holds when every minimum-rank model of `φ` satisfies `ψ`. Since
/// every valuation has a rank, the induced relation is consistency preserving.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankFunction {
    ranks: Vec<u32>,
}

impl RankFunction {
    /// Ranks indexed by valuation; the length must be `2^n` for `1 <= n <= 16`.
    pub fn new(ranks: Vec<u32>) -> Result<Self> {
        let len = ranks.len();
        if len < 2 || !len.is_power_of_two() || len > 1 << 16 {
            return Err(Error::InvalidRank(format!(
                "expected 2^n ranks for 1 <= n <= 16, got {len}"
            )));
        }
        Ok(RankFunction { ranks })
    }

    /// The function ranking every valuation at 0.
    pub fn flat(sig: &Signature) -> Self {
        RankFunction {
            ranks: vec![0; sig.universe()],
        }
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    pub fn rank(&self, v: Valuation) -> u32 {
        self.ranks[v.index()]
    }

    pub fn universe(&self) -> usize {
        self.ranks.len()
    }

    pub fn atoms(&self) -> usize {
        self.ranks.len().trailing_zeros() as usize
    }

    pub fn check_signature(&self, sig: &Signature) -> Result<()> {
        if sig.universe() != self.universe() {
            return Err(Error::UniverseMismatch {
                expected: sig.universe(),
                found: self.universe(),
            });
        }
        Ok(())
    }

    /// Relabels ranks to `0..=h` preserving their order.
    pub fn normalize(&self) -> RankFunction {
        let mut used: Vec<u32> = self.ranks.clone();
        used.sort_unstable();
        used.dedup();
        let ranks = self
            .ranks
            .iter()
            .map(|r| used.binary_search(r).expect("rank present") as u32)
            .collect();
        RankFunction { ranks }
    }

    pub fn is_normalized(&self) -> bool {
        let max = self.ranks.iter().copied().max().unwrap_or(0) as usize;
        let mut seen = vec![false; max + 1];
        for &r in &self.ranks {
            seen[r as usize] = true;
        }
        seen.into_iter().all(|s| s)
    }

    /// Valuation sets sharing a rank, lowest rank first.
    pub fn levels(&self) -> Vec<(u32, PropSet)> {
        let mut labels: Vec<u32> = self.ranks.clone();
        labels.sort_unstable();
        labels.dedup();
        labels
            .into_iter()
            .map(|label| {
                let members = self
                    .ranks
                    .iter()
                    .enumerate()
                    .filter(|&(_, &r)| r == label)
                    .map(|(i, _)| Valuation(i as u32));
                (label, PropSet::from_valuations(self.universe(), members))
            })
            .collect()
    }

    /// `C(φ)`: the theory whose models are the minimum-rank models of `φ`,
    /// or `K_⊥` when `φ` has no model.
    pub fn consequences_of(&self, f: &PropSet) -> Theory {
        let universe = self.universe();
        let Some(min) = f.iter().map(|v| self.rank(v)).min() else {
            return Theory::inconsistent(universe);
        };
        Theory::from_models(PropSet::from_valuations(
            universe,
            f.iter().filter(|&v| self.rank(v) == min),
        ))
    }

    /// Recovers the normalized ranking inducing `c`.
    ///
    /// Levels are peeled off from the bottom: level `i` is `C` of everything
    /// not yet ranked. Fails if `c` is not the relation of the result.
    pub fn from_relation(c: &ConsequenceRelation) -> Result<RankFunction> {
        let universe = c.universe();
        let mut ranks = vec![u32::MAX; universe];
        let mut remaining = PropSet::full(universe);
        let mut level = 0u32;
        while !remaining.is_empty() {
            let bottom = c.consequences(&remaining).models().clone();
            if bottom.is_empty() || !bottom.is_subset(&remaining) {
                return Err(Error::NotRanked(format!(
                    "C({remaining:?}) = {bottom:?} is not a non-empty subset of its antecedent"
                )));
            }
            for v in bottom.iter() {
                ranks[v.index()] = level;
            }
            remaining = remaining.difference(&bottom);
            level += 1;
        }
        let r = RankFunction { ranks };
        for (phi, theory) in c.iter() {
            if r.consequences_of(&phi) != *theory {
                return Err(Error::NotRanked(format!(
                    "C({phi:?}) = {:?} but the peeled ranking gives {:?}",
                    theory.models(),
                    r.consequences_of(&phi).models()
                )));
            }
        }
        Ok(r)
    }

    /// Each valuation drawn uniformly from `0..levels` with a ChaCha8 stream
    /// seeded by `seed`, then normalized.
    pub fn random(sig: &Signature, levels: u32, seed: u64) -> Result<RankFunction> {
        if levels == 0 {
            return Err(Error::InvalidRank("levels must be at least 1".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ranks = (0..sig.universe())
            .map(|_| rng.gen_range(0..levels))
            .collect();
        Ok(RankFunction { ranks }.normalize())
    }
}
