use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// A truth assignment, stored as its index in `0..2^n`.
///
/// Bit `n - 1 - i` of the index holds the value of atom `i`, so the first
/// atom of the signature is the most significant bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Valuation(pub u32);

impl Valuation {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Truth value of atom `atom` in a signature of `n` atoms.
    pub fn value(self, atom: usize, n: usize) -> bool {
        (self.0 >> (n - 1 - atom)) & 1 == 1
    }

    /// Bit string in atom order, e.g. `10` for `p=1, q=0`.
    pub fn bits(self, n: usize) -> String {
        (0..n)
            .map(|i| if self.value(i, n) { '1' } else { '0' })
            .collect()
    }

    pub fn from_bits(bits: &str) -> Option<Valuation> {
        if bits.is_empty() || bits.len() > 16 {
            return None;
        }
        let mut idx = 0u32;
        for c in bits.chars() {
            idx = (idx << 1)
                | match c {
                    '0' => 0,
                    '1' => 1,
                    _ => return None,
                };
        }
        Some(Valuation(idx))
    }
}

/// A set of valuations over a fixed universe.
///
/// This is the semantic content of a formula: two formulas denote the same
/// `PropSet` exactly when they are logically equivalent.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PropSet {
    universe: u32,
    words: SmallVec<[u64; 1]>,
}

fn word_count(universe: usize) -> usize {
    universe.div_ceil(64)
}

impl PropSet {
    pub fn empty(universe: usize) -> Self {
        PropSet {
            universe: universe as u32,
            words: SmallVec::from_elem(0, word_count(universe)),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = PropSet::empty(universe);
        for w in set.words.iter_mut() {
            *w = u64::MAX;
        }
        set.trim();
        set
    }

    /// The set whose membership bitmask is `index`; needs `universe <= 64`.
    pub fn from_index(universe: usize, index: u64) -> Self {
        assert!(universe <= 64, "bitmask indices need at most 64 valuations");
        let mut set = PropSet::empty(universe);
        set.words[0] = index;
        set.trim();
        set
    }

    pub fn from_fn(universe: usize, mut member: impl FnMut(Valuation) -> bool) -> Self {
        PropSet::from_valuations(
            universe,
            (0..universe as u32).map(Valuation).filter(|&v| member(v)),
        )
    }

    pub fn from_valuations<I: IntoIterator<Item = Valuation>>(universe: usize, vals: I) -> Self {
        let mut set = PropSet::empty(universe);
        for v in vals {
            set.insert(v);
        }
        set
    }

    /// Membership bitmask, bit `v` set iff valuation `v` is a member.
    pub fn index(&self) -> u64 {
        assert!(
            self.universe <= 64,
            "bitmask indices need at most 64 valuations"
        );
        self.words[0]
    }

    pub fn universe(&self) -> usize {
        self.universe as usize
    }

    pub fn contains(&self, v: Valuation) -> bool {
        let i = v.index();
        i < self.universe() && (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn insert(&mut self, v: Valuation) {
        let i = v.index();
        assert!(i < self.universe(), "valuation {i} outside universe");
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, v: Valuation) {
        let i = v.index();
        if i < self.universe() {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe()
    }

    /// Members in ascending valuation order.
    pub fn iter(&self) -> impl Iterator<Item = Valuation> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros();
                rest &= rest - 1;
                Some(Valuation(wi as u32 * 64 + bit))
            })
        })
    }

    pub fn intersection(&self, other: &PropSet) -> PropSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn union(&self, other: &PropSet) -> PropSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn difference(&self, other: &PropSet) -> PropSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> PropSet {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.trim();
        out
    }

    pub fn is_subset(&self, other: &PropSet) -> bool {
        self.check_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &PropSet) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    fn zip_with(&self, other: &PropSet, op: impl Fn(u64, u64) -> u64) -> PropSet {
        self.check_universe(other);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a = op(*a, *b);
        }
        out
    }

    fn check_universe(&self, other: &PropSet) {
        assert_eq!(
            self.universe, other.universe,
            "valuation sets over different signatures"
        );
    }

    fn trim(&mut self) {
        let rem = self.universe() % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl Ord for PropSet {
    /// Numeric order of the membership bitmask.
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe
            .cmp(&other.universe)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for PropSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PropSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.universe().trailing_zeros() as usize;
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&v.bits(n))?;
        }
        f.write_str("}")
    }
}
