//! Ranked orderings of valuations and the consequence relations they induce.

mod enumerate;
mod rank;
mod rank_file;
mod relation;

pub use enumerate::{enumerate_rank_functions, RankFunctions};
pub use rank::RankFunction;
pub use rank_file::{parse_rank_file, write_rank_file};
pub use relation::{
    check_rationality, ConsequenceRelation, RationalProperty, RationalityCounterexample,
    RationalityReport,
};
