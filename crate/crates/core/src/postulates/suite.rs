use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

use crate::dnf::theory_text;
use crate::error::Result;
use crate::logic::{Signature, Theory};
use crate::postulates::check::{check_postulate_in, Mode};
use crate::postulates::clause::{PostulateId, Violation};
use crate::revision::Revision;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PostulateResult {
    pub postulate: PostulateId,
    pub violation: Option<Violation>,
}

/// Verdicts for a set of postulates, in the order they were requested.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub signature: Signature,
    pub mode: Mode,
    pub results: Vec<PostulateResult>,
}

pub fn run_suite<R: Revision + ?Sized>(
    rv: &R,
    ids: &[PostulateId],
    sig: &Signature,
    mode: Mode,
) -> Result<SuiteReport> {
    let results = ids
        .iter()
        .map(|&id| {
            Ok(PostulateResult {
                postulate: id,
                violation: check_postulate_in(rv, id, sig, mode)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport {
        signature: sig.clone(),
        mode,
        results,
    })
}

#[derive(Serialize)]
struct JsonWitness {
    #[serde(rename = "K")]
    k: String,
    #[serde(rename = "Kprime", skip_serializing_if = "Option::is_none")]
    k_prime: Option<String>,
    phi: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    psi: Option<String>,
    observed: String,
    required: String,
}

#[derive(Serialize)]
struct JsonEntry {
    postulate: String,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<JsonWitness>,
    mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.violation.is_none())
    }

    pub fn violations(&self) -> impl Iterator<Item = &Violation> {
        self.results.iter().filter_map(|r| r.violation.as_ref())
    }

    /// `2^(2^n)`: how many theories, and how many formula classes, each
    /// variable ranges over.
    pub fn domain_size(&self) -> Option<u128> {
        let universe = self.signature.universe() as u32;
        2u128.checked_pow(universe)
    }

    pub fn to_json(&self) -> Value {
        let (mode, seed) = match self.mode {
            Mode::Exhaustive => ("exhaustive", None),
            Mode::Sampled { seed, .. } => ("sampled", Some(seed)),
        };
        let sig = &self.signature;
        let entries: Vec<JsonEntry> = self
            .results
            .iter()
            .map(|r| JsonEntry {
                postulate: r.postulate.to_string(),
                verdict: if r.violation.is_some() {
                    "fail"
                } else {
                    "pass"
                },
                witness: r.violation.as_ref().map(|v| JsonWitness {
                    k: theory_text(&v.bindings.k, sig),
                    k_prime: v.bindings.k_prime.as_ref().map(|t| theory_text(t, sig)),
                    phi: crate::dnf::dnf(&v.bindings.phi, sig),
                    psi: v.bindings.psi.as_ref().map(|s| crate::dnf::dnf(s, sig)),
                    observed: theory_text(&v.observed, sig),
                    required: v.required.to_string(),
                }),
                mode,
                seed,
            })
            .collect();
        serde_json::to_value(entries).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let sig = &self.signature;
        let mut out = String::new();
        match self.mode {
            Mode::Exhaustive => writeln!(out, "mode: exhaustive").unwrap(),
            Mode::Sampled { seed, samples } => writeln!(
                out,
                "mode: sampled (seed {seed}, {samples} samples per postulate)"
            )
            .unwrap(),
        }
        writeln!(out, "atoms: {sig}").unwrap();
        if let Some(size) = self.domain_size() {
            writeln!(out, "domain: {size} theories x {size} formula classes").unwrap();
        }
        for r in &self.results {
            match &r.violation {
                None => writeln!(out, "{} pass", r.postulate).unwrap(),
                Some(v) => {
                    let t = |k: &Theory| theory_text(k, sig);
                    write!(out, "{} FAIL K={}", r.postulate, t(&v.bindings.k)).unwrap();
                    if let Some(kp) = &v.bindings.k_prime {
                        write!(out, " K'={}", t(kp)).unwrap();
                    }
                    write!(out, " phi={}", crate::dnf::dnf(&v.bindings.phi, sig)).unwrap();
                    if let Some(psi) = &v.bindings.psi {
                        write!(out, " psi={}", crate::dnf::dnf(psi, sig)).unwrap();
                    }
                    writeln!(out, " observed={} required: {}", t(&v.observed), v.required).unwrap();
                }
            }
        }
        let failed = self.violations().count();
        writeln!(
            out,
            "{} of {} postulates pass",
            self.results.len() - failed,
            self.results.len()
        )
        .unwrap();
        out
    }
}
