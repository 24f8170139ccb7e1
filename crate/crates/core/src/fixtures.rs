//! Shipped rank-function fixtures.

use crate::error::Result;
use crate::logic::Signature;
use crate::rational::{parse_rank_file, RankFunction};

/// Running two-atom example: `11` lowest, then `01 10`, then `00`.
pub const R0: &str = include_str!("../fixtures/r0.rnk");

/// Rain in Paris and Orléans. Atoms: `c` (clouds over Paris), `rp` (rain in
/// Paris), `ro` (rain in Orléans). A cloudless Paris normally means no rain in
/// Paris and, as a weaker default, no rain in Orléans.
pub const PARIS: &str = include_str!("../fixtures/paris.rnk");

pub fn r0() -> (Signature, RankFunction) {
    parse_rank_file(R0).expect("fixture parses")
}

pub fn paris() -> (Signature, RankFunction) {
    parse_rank_file(PARIS).expect("fixture parses")
}

/// The theory and formulas of the Paris scenario, in the input grammar.
pub mod paris_scenario {
    /// It rains in Paris and in Orléans, and a cloudless Paris means no rain in Orléans.
    pub const THEORY: &str = "rp & ro & (!c -> !ro)";
    /// There are no clouds over Paris.
    pub const NEWS: &str = "!c";
    /// There are clouds over Paris.
    pub const CLOUDS: &str = "c";
}

pub fn load(name: &str) -> Option<&'static str> {
    match name {
        "r0" => Some(R0),
        "paris" => Some(PARIS),
        _ => None,
    }
}

pub fn parse(name: &str) -> Option<Result<(Signature, RankFunction)>> {
    load(name).map(parse_rank_file)
}
