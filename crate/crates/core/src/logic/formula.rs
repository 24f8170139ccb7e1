use std::fmt;

use crate::logic::{PropSet, Signature, Valuation};

/// Propositional formula over the atoms of a [`Signature`], referenced by index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    True,
    False,
    Atom(usize),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn negation(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn eval(&self, v: Valuation, n: usize) -> bool {
        match self {
            Formula::True => true,
            Formula::False => false,
            Formula::Atom(i) => v.value(*i, n),
            Formula::Not(f) => !f.eval(v, n),
            Formula::And(a, b) => a.eval(v, n) && b.eval(v, n),
            Formula::Or(a, b) => a.eval(v, n) || b.eval(v, n),
            Formula::Implies(a, b) => !a.eval(v, n) || b.eval(v, n),
            Formula::Iff(a, b) => a.eval(v, n) == b.eval(v, n),
        }
    }

    /// The valuations satisfying the formula.
    pub fn models(&self, sig: &Signature) -> PropSet {
        let n = sig.len();
        let universe = sig.universe();
        PropSet::from_valuations(
            universe,
            (0..universe as u32)
                .map(Valuation)
                .filter(|&v| self.eval(v, n)),
        )
    }

    /// Largest atom index referenced, if any.
    pub fn max_atom(&self) -> Option<usize> {
        match self {
            Formula::True | Formula::False => None,
            Formula::Atom(i) => Some(*i),
            Formula::Not(f) => f.max_atom(),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => a.max_atom().max(b.max_atom()),
        }
    }

    /// Renders the formula in the input grammar with the signature's atom names.
    pub fn display<'a>(&'a self, sig: &'a Signature) -> impl fmt::Display + 'a {
        Shown { f: self, sig }
    }

    fn binary(&self) -> Option<(&'static str, &Formula, &Formula)> {
        match self {
            Formula::And(a, b) => Some(("&", a, b)),
            Formula::Or(a, b) => Some(("|", a, b)),
            Formula::Implies(a, b) => Some(("->", a, b)),
            Formula::Iff(a, b) => Some(("<->", a, b)),
            _ => None,
        }
    }
}

struct Shown<'a> {
    f: &'a Formula,
    sig: &'a Signature,
}

impl Shown<'_> {
    fn write(&self, f: &Formula, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f {
            Formula::True => out.write_str("true"),
            Formula::False => out.write_str("false"),
            Formula::Atom(i) => out.write_str(&self.sig.atoms()[*i]),
            Formula::Not(inner) => {
                out.write_str("!")?;
                if inner.binary().is_some() {
                    self.parens(inner, out)
                } else {
                    self.write(inner, out)
                }
            }
            _ => {
                let (op, a, b) = f.binary().expect("binary connective");
                let left_assoc = matches!(f, Formula::And(..) | Formula::Or(..));
                self.operand(f, a, left_assoc, out)?;
                write!(out, " {op} ")?;
                self.operand(f, b, !left_assoc, out)
            }
        }
    }

    // Children that are binary are parenthesized unless they continue an
    // associative chain of the same connective on the associative side.
    fn operand(
        &self,
        parent: &Formula,
        child: &Formula,
        chain_side: bool,
        out: &mut fmt::Formatter<'_>,
    ) -> fmt::Result {
        let same = std::mem::discriminant(parent) == std::mem::discriminant(child);
        if child.binary().is_some() && !(same && chain_side) {
            self.parens(child, out)
        } else {
            self.write(child, out)
        }
    }

    fn parens(&self, f: &Formula, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str("(")?;
        self.write(f, out)?;
        out.write_str(")")
    }
}

impl fmt::Display for Shown<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(self.f, out)
    }
}
