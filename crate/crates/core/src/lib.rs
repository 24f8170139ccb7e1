//! Belief revision over a finite propositional language.
//!
//! Theories and formulas are handled semantically as sets of valuations.
//! Revisions are built from ranked orderings of valuations (the finite form of
//! rational, consistency-preserving consequence relations), and every
//! postulate of interest can be checked exhaustively on small signatures.

pub mod dnf;
pub mod error;
pub mod fixtures;
pub mod logic;
pub mod postulates;
pub mod rational;
pub mod revision;

pub use dnf::{canonical_formula, dnf, parse_theory, theory_text};
pub use error::{Error, Result};
pub use logic::{parse_formula, Formula, PropSet, Signature, Theory, Valuation};
pub use rational::{
    check_rationality, ConsequenceRelation, RankFunction, RationalProperty, RationalityReport,
};
pub use revision::{
    build_m_k, conservative_extension, iterate, relation_of_revision, ConservativeExtension,
    RankedRevision, Revision, RevisionKind, RevisionStep, Severity, TableRevision,
};
