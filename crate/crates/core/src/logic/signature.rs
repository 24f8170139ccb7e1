use std::fmt;

use crate::error::{Error, Result};
use crate::logic::PropSet;

/// Largest signature accepted anywhere in the crate.
pub const MAX_ATOMS: usize = 16;

/// Signatures above this size cannot enumerate every valuation set.
pub const MAX_ENUMERABLE_ATOMS: usize = 4;

const DEFAULT_NAMES: [&str; MAX_ATOMS] = [
    "p", "q", "r", "s", "t", "u", "v", "w", "x", "y", "z", "a", "b", "c", "d", "e",
];

/// An ordered list of propositional atoms.
///
/// Valuations are indexed so that the first atom is the most significant bit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    atoms: Vec<String>,
}

impl Signature {
    pub fn new<I, S>(atoms: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        if atoms.is_empty() {
            return Err(Error::InvalidSignature(
                "at least one atom is required".into(),
            ));
        }
        if atoms.len() > MAX_ATOMS {
            return Err(Error::SignatureTooLarge {
                atoms: atoms.len(),
                max: MAX_ATOMS,
            });
        }
        for (i, atom) in atoms.iter().enumerate() {
            if !valid_atom_name(atom) {
                return Err(Error::InvalidSignature(format!("bad atom name `{atom}`")));
            }
            if atoms[..i].contains(atom) {
                return Err(Error::InvalidSignature(format!("duplicate atom `{atom}`")));
            }
        }
        Ok(Signature { atoms })
    }

    /// The signature `p, q, r, ...` with `n` atoms.
    pub fn with_atoms(n: usize) -> Result<Self> {
        if n > MAX_ATOMS {
            return Err(Error::SignatureTooLarge {
                atoms: n,
                max: MAX_ATOMS,
            });
        }
        Signature::new(DEFAULT_NAMES[..n].iter().copied())
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn index_of(&self, atom: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a == atom)
    }

    /// Number of valuations, `2^n`.
    pub fn universe(&self) -> usize {
        1 << self.atoms.len()
    }

    /// Number of valuation sets (formula classes, theories), `2^(2^n)`.
    ///
    /// Fails when the classes cannot be enumerated.
    pub fn domain_size(&self) -> Result<usize> {
        self.require_enumerable("enumeration of valuation sets", MAX_ENUMERABLE_ATOMS)?;
        Ok(1 << self.universe())
    }

    /// Every valuation set in ascending index order.
    pub fn all_sets(&self) -> Result<impl Iterator<Item = PropSet> + Clone> {
        let size = self.domain_size()? as u64;
        let universe = self.universe();
        Ok((0..size).map(move |idx| PropSet::from_index(universe, idx)))
    }

    pub(crate) fn require_enumerable(&self, what: &'static str, max: usize) -> Result<()> {
        if self.len() > max {
            Err(Error::DomainTooLarge {
                what,
                atoms: self.len(),
                max,
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.atoms.join(" "))
    }
}

fn valid_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    if matches!(name, "true" | "false" | "bot") {
        return false;
    }
    chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}
