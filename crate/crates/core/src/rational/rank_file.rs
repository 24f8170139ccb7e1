//! Text format for rank functions:
//!
//! ```text
//! atoms: p q
//! 0: 11
//! 1: 01 10
//! 2: 00
//! ```
//!
//! One line per level, lowest first, members as bit strings in atom order.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::logic::{Signature, Valuation};
use crate::rational::RankFunction;

pub fn write_rank_file(sig: &Signature, r: &RankFunction) -> Result<String> {
    r.check_signature(sig)?;
    let mut out = String::new();
    writeln!(out, "atoms: {sig}").unwrap();
    for (label, members) in r.levels() {
        write!(out, "{label}:").unwrap();
        for v in members.iter() {
            write!(out, " {}", v.bits(sig.len())).unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}

/// Parses a rank file. Blank lines and lines starting with `#` are ignored.
pub fn parse_rank_file(text: &str) -> Result<(Signature, RankFunction)> {
    let err = |line: usize, message: String| Error::RankFile { line, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_no, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing `atoms:` header".into()))?;
    let names = header
        .strip_prefix("atoms:")
        .ok_or_else(|| err(header_no, "expected `atoms: <names>`".into()))?;
    let sig =
        Signature::new(names.split_whitespace()).map_err(|e| err(header_no, e.to_string()))?;
    let n = sig.len();

    let mut ranks: Vec<Option<u32>> = vec![None; sig.universe()];
    let mut last_label: Option<u32> = None;
    for (no, line) in lines {
        let (label, members) = line
            .split_once(':')
            .ok_or_else(|| err(no, "expected `<rank>: <valuations>`".into()))?;
        let label: u32 = label
            .trim()
            .parse()
            .map_err(|_| err(no, format!("bad rank `{}`", label.trim())))?;
        if last_label.is_some_and(|prev| label <= prev) {
            return Err(err(no, "ranks must be strictly increasing".into()));
        }
        last_label = Some(label);
        let mut any = false;
        for bits in members.split_whitespace() {
            let v = Valuation::from_bits(bits)
                .filter(|_| bits.len() == n)
                .ok_or_else(|| err(no, format!("bad valuation `{bits}` for {n} atoms")))?;
            let slot = &mut ranks[v.index()];
            if slot.is_some() {
                return Err(err(no, format!("valuation {bits} listed twice")));
            }
            *slot = Some(label);
            any = true;
        }
        if !any {
            return Err(err(no, format!("rank {label} has no valuations")));
        }
    }
    let ranks = ranks
        .into_iter()
        .enumerate()
        .map(|(i, r)| {
            r.ok_or_else(|| {
                err(
                    0,
                    format!("valuation {} has no rank", Valuation(i as u32).bits(n)),
                )
            })
        })
        .collect::<Result<Vec<u32>>>()?;
    Ok((sig, RankFunction::new(ranks)?))
}
