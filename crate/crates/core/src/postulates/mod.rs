//! The postulates for revision, as clauses quantified over theories and
//! formula classes, with exhaustive and sampled checkers.

mod check;
mod clause;
mod suite;
mod witness;

pub use check::{check_postulate, check_postulate_in, Mode};
pub use clause::{evaluate, Bindings, ClauseFailure, PostulateId, Quantifiers, Violation};
pub use suite::{run_suite, PostulateResult, SuiteReport};
pub use witness::{
    check_implication_9p_to_92, dynamic_underdetermination, find_impossibility_witness,
    ImplicationVerdict, Impossibility, Underdetermination,
};
