use crate::error::Result;
use crate::logic::Signature;
use crate::rational::RankFunction;

/// Enumeration of normalized rank functions is limited to this many atoms.
pub const MAX_ENUMERATION_ATOMS: usize = 3;

/// Every normalized rank function over the signature, each exactly once, in
/// lexicographic order of the rank vector.
///
/// Normalized rank vectors are the ordered set partitions of the valuations,
/// so the count is the Fubini number of `2^n` (3 for one atom, 75 for two,
/// 545835 for three).
pub fn enumerate_rank_functions(sig: &Signature) -> Result<RankFunctions> {
    sig.require_enumerable("rank function enumeration", MAX_ENUMERATION_ATOMS)?;
    Ok(RankFunctions {
        next: Some(vec![0; sig.universe()]),
    })
}

#[derive(Debug, Clone)]
pub struct RankFunctions {
    next: Option<Vec<u32>>,
}

impl Iterator for RankFunctions {
    type Item = RankFunction;

    fn next(&mut self) -> Option<RankFunction> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(RankFunction::new(current).expect("length is a power of two"))
    }
}

/// Lexicographic successor among vectors whose value set is `0..=h`.
fn successor(v: &[u32]) -> Option<Vec<u32>> {
    let m = v.len() as u32;
    for i in (0..v.len()).rev() {
        let rest = v.len() - 1 - i;
        for x in v[i] + 1..m {
            let mut prefix = v[..i].to_vec();
            prefix.push(x);
            let missing = missing_values(&prefix);
            if missing.len() <= rest {
                let mut out = prefix;
                out.extend(std::iter::repeat_n(0, rest - missing.len()));
                out.extend(missing);
                return Some(out);
            }
        }
    }
    None
}

/// Values below the maximum of `prefix` that do not occur in it, ascending.
fn missing_values(prefix: &[u32]) -> Vec<u32> {
    let max = prefix.iter().copied().max().unwrap_or(0);
    (0..max).filter(|x| !prefix.contains(x)).collect()
}
