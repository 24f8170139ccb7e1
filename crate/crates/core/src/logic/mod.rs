//! Finite propositional logic: signatures, formulas, valuation sets and
//! deductively closed theories represented by their models.

mod formula;
mod parser;
mod propset;
mod signature;
mod theory;

pub use formula::Formula;
pub use parser::parse_formula;
pub use propset::{PropSet, Valuation};
pub use signature::Signature;
pub use theory::Theory;
