//! Python bindings. Theories and formulas cross the boundary as text in the
//! formula grammar (`bot` for the inconsistent theory); results come back in
//! canonical DNF.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use rankrev::dnf::{dnf, parse_theory, theory_text};
use rankrev::fixtures;
use rankrev::postulates::{
    find_impossibility_witness, run_suite, Impossibility, Mode, PostulateId, SuiteReport,
};
use rankrev::rational::{enumerate_rank_functions, parse_rank_file, write_rank_file};
use rankrev::{
    check_rationality, iterate, parse_formula, relation_of_revision, Error, PropSet, RankFunction,
    RankedRevision, Revision, Severity, Signature, Theory,
};

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn signature(atoms: Vec<String>) -> Result<Signature, Error> {
    Signature::new(atoms)
}

/// A rank function over a named signature, with its revision operator.
#[pyclass(frozen, skip_from_py_object, module = "rankrev_py")]
#[derive(Clone)]
pub struct RankedModel {
    sig: Signature,
    rank: RankFunction,
}

impl RankedModel {
    fn new_checked(atoms: Vec<String>, ranks: Vec<u32>) -> Result<Self, Error> {
        let sig = signature(atoms)?;
        let rank = RankFunction::new(ranks)?;
        rank.check_signature(&sig)?;
        Ok(RankedModel { sig, rank })
    }

    fn formula(&self, text: &str) -> Result<PropSet, Error> {
        Ok(parse_formula(text, &self.sig)?.models(&self.sig))
    }

    fn revision(&self) -> RankedRevision {
        RankedRevision::new(self.rank.clone())
    }

    fn revise_text(&self, theory: &str, phi: &str) -> Result<(String, String), Error> {
        let k = parse_theory(theory, &self.sig)?;
        let phi = self.formula(phi)?;
        let out = self.revision().revise(&k, &phi);
        Ok((
            theory_text(&out, &self.sig),
            Severity::of(&k, &phi).to_string(),
        ))
    }

    fn suite(
        &self,
        postulates: &str,
        mode: &str,
        seed: u64,
        samples: u64,
    ) -> Result<SuiteReport, Error> {
        let ids = PostulateId::parse_list(postulates)?;
        let mode = match mode {
            "exhaustive" => Mode::Exhaustive,
            "sampled" => Mode::Sampled { seed, samples },
            other => return Err(Error::Precondition(format!("unknown mode `{other}`"))),
        };
        run_suite(&self.revision(), &ids, &self.sig, mode)
    }
}

#[pymethods]
impl RankedModel {
    /// `ranks[i]` is the rank of the valuation with index `i`, where the
    /// first atom is the most significant bit.
    #[new]
    fn py_new(atoms: Vec<String>, ranks: Vec<u32>) -> PyResult<Self> {
        Self::new_checked(atoms, ranks).map_err(py_err)
    }

    /// Reads the rank-file format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let (sig, rank) = parse_rank_file(text).map_err(py_err)?;
        Ok(RankedModel { sig, rank })
    }

    /// A shipped fixture: `r0` or `paris`.
    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        let parsed = fixtures::parse(name)
            .ok_or_else(|| PyValueError::new_err(format!("no fixture named `{name}`")))?;
        let (sig, rank) = parsed.map_err(py_err)?;
        Ok(RankedModel { sig, rank })
    }

    #[getter]
    fn atoms(&self) -> Vec<String> {
        self.sig.atoms().to_vec()
    }

    #[getter]
    fn ranks(&self) -> Vec<u32> {
        self.rank.ranks().to_vec()
    }

    fn to_text(&self) -> PyResult<String> {
        write_rank_file(&self.sig, &self.rank).map_err(py_err)
    }

    /// Minimum-rank models of `phi`, in canonical DNF.
    fn consequences(&self, phi: &str) -> PyResult<String> {
        let phi = self.formula(phi).map_err(py_err)?;
        Ok(theory_text(&self.rank.consequences_of(&phi), &self.sig))
    }

    /// Returns `(theory, "mild" | "severe")`.
    fn revise(&self, theory: &str, phi: &str) -> PyResult<(String, String)> {
        self.revise_text(theory, phi).map_err(py_err)
    }

    /// One `(input, formula, output, severity)` tuple per step.
    fn trace(
        &self,
        theory: &str,
        phis: Vec<String>,
    ) -> PyResult<Vec<(String, String, String, String)>> {
        let k = parse_theory(theory, &self.sig).map_err(py_err)?;
        let fs = phis
            .iter()
            .map(|f| self.formula(f))
            .collect::<Result<Vec<_>, _>>()
            .map_err(py_err)?;
        Ok(iterate(&self.revision(), &k, &fs)
            .into_iter()
            .map(|s| {
                (
                    theory_text(&s.input, &self.sig),
                    dnf(&s.formula, &self.sig),
                    theory_text(&s.output, &self.sig),
                    s.severity.to_string(),
                )
            })
            .collect())
    }

    /// `(postulate, passed)` pairs.
    #[pyo3(signature = (postulates = "K1..K9", mode = "exhaustive", seed = 0, samples = 1000))]
    fn check(
        &self,
        postulates: &str,
        mode: &str,
        seed: u64,
        samples: u64,
    ) -> PyResult<Vec<(String, bool)>> {
        let report = self
            .suite(postulates, mode, seed, samples)
            .map_err(py_err)?;
        Ok(report
            .results
            .iter()
            .map(|r| (r.postulate.to_string(), r.violation.is_none()))
            .collect())
    }

    /// The JSON suite report.
    #[pyo3(signature = (postulates = "K1..K9", mode = "exhaustive", seed = 0, samples = 1000))]
    fn report_json(
        &self,
        postulates: &str,
        mode: &str,
        seed: u64,
        samples: u64,
    ) -> PyResult<String> {
        let report = self
            .suite(postulates, mode, seed, samples)
            .map_err(py_err)?;
        Ok(report.to_json().to_string())
    }

    /// `kind` is `u8_1` or `c2`; returns the witness as JSON.
    fn witness(&self, kind: &str) -> PyResult<String> {
        let which = match kind {
            "u8_1" => Impossibility::U8_1VsK4K5,
            "c2" => Impossibility::C2VsK1K4,
            other => {
                return Err(PyValueError::new_err(format!(
                    "unknown witness kind `{other}`"
                )))
            }
        };
        let v = find_impossibility_witness(&self.revision(), which, &self.sig).map_err(py_err)?;
        let t = |k: &Theory| theory_text(k, &self.sig);
        let json = serde_json::json!({
            "postulate": v.postulate.to_string(),
            "K": t(&v.bindings.k),
            "Kprime": v.bindings.k_prime.as_ref().map(t),
            "phi": dnf(&v.bindings.phi, &self.sig),
            "psi": v.bindings.psi.as_ref().map(|s| dnf(s, &self.sig)),
            "observed": t(&v.observed),
            "required": v.required,
        });
        Ok(json.to_string())
    }

    /// Whether the relation `phi |~ psi iff psi in base * phi` passes every
    /// rationality property.
    #[pyo3(signature = (base = "bot"))]
    fn is_rational(&self, base: &str) -> PyResult<bool> {
        let k = parse_theory(base, &self.sig).map_err(py_err)?;
        let c = relation_of_revision(&self.revision(), &k, &self.sig).map_err(py_err)?;
        Ok(check_rationality(&c, &self.sig)
            .map_err(py_err)?
            .passes_all())
    }

    /// Rebuilds the ranking from its relation.
    fn roundtrip(&self) -> PyResult<RankedModel> {
        let bot = Theory::inconsistent(self.sig.universe());
        let c = relation_of_revision(&self.revision(), &bot, &self.sig).map_err(py_err)?;
        let rank = RankFunction::from_relation(&c).map_err(py_err)?;
        Ok(RankedModel {
            sig: self.sig.clone(),
            rank,
        })
    }

    fn __eq__(&self, other: &RankedModel) -> bool {
        self.sig == other.sig && self.rank == other.rank
    }

    fn __repr__(&self) -> String {
        format!(
            "RankedModel(atoms={:?}, ranks={:?})",
            self.sig.atoms(),
            self.rank.ranks()
        )
    }
}

/// Every normalized rank function over `n` atoms, in lexicographic order.
#[pyfunction]
fn enumerate_rankings(n: usize) -> PyResult<Vec<Vec<u32>>> {
    let sig = Signature::with_atoms(n).map_err(py_err)?;
    Ok(enumerate_rank_functions(&sig)
        .map_err(py_err)?
        .map(|r| r.ranks().to_vec())
        .collect())
}

/// Canonical DNF of a formula over the given atoms.
#[pyfunction]
fn canonical(formula: &str, atoms: Vec<String>) -> PyResult<String> {
    let sig = signature(atoms).map_err(py_err)?;
    let models = parse_formula(formula, &sig).map_err(py_err)?.models(&sig);
    Ok(dnf(&models, &sig))
}

/// Models of a formula as bit strings, first atom leftmost.
#[pyfunction]
fn models(formula: &str, atoms: Vec<String>) -> PyResult<Vec<String>> {
    let sig = signature(atoms).map_err(py_err)?;
    let models = parse_formula(formula, &sig).map_err(py_err)?.models(&sig);
    Ok(models.iter().map(|v| v.bits(sig.len())).collect())
}

#[pymodule]
fn rankrev_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<RankedModel>()?;
    m.add_function(wrap_pyfunction!(enumerate_rankings, m)?)?;
    m.add_function(wrap_pyfunction!(canonical, m)?)?;
    m.add_function(wrap_pyfunction!(models, m)?)?;
    Ok(())
}
