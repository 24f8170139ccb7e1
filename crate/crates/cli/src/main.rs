use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rankrev::dnf::{dnf, parse_theory, theory_text};
use rankrev::fixtures::{self, paris_scenario};
use rankrev::postulates::{
    dynamic_underdetermination, find_impossibility_witness, run_suite, Impossibility, Mode,
    PostulateId, Violation,
};
use rankrev::rational::{enumerate_rank_functions, parse_rank_file, write_rank_file};
use rankrev::{
    check_rationality, conservative_extension, iterate, parse_formula, relation_of_revision,
    PropSet, RankFunction, RankedRevision, Revision, RevisionStep, Severity, Signature, Theory,
};

/// Belief revision over ranked models of a finite propositional language.
#[derive(Parser)]
#[command(name = "rankrev", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Revise a theory by a formula.
    Revise {
        #[command(flatten)]
        model: ModelArgs,
        /// Theory to revise: a formula or `bot`.
        #[arg(long)]
        theory: String,
        #[arg(long)]
        phi: String,
    },
    /// Check postulates against the revision of a rank file.
    Check {
        #[command(flatten)]
        model: ModelArgs,
        /// Ids and ranges, e.g. `K1..K9,C2'`, or `all`.
        #[arg(long, default_value = "K1..K9")]
        postulates: String,
        /// Check the conservative extension anchored at this theory instead.
        #[arg(long)]
        anchor: Option<String>,
        #[command(flatten)]
        mode: ModeArgs,
        #[arg(long)]
        json: bool,
    },
    /// List every normalized rank function over a signature.
    Enumerate {
        /// Atom count or atom names.
        #[arg(long)]
        atoms: String,
        /// Print only the number of rank functions.
        #[arg(long)]
        count: bool,
        #[arg(long)]
        json: bool,
    },
    /// Search for a violation or an under-determination witness.
    Witness {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_enum)]
        kind: WitnessKind,
        /// Theory whose row is fixed (under-determination only).
        #[arg(long)]
        theory: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Rebuild the ranking from its relation and compare.
    Roundtrip {
        #[command(flatten)]
        model: ModelArgs,
    },
    /// Revise a theory by a sequence of formulas.
    Trace {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        theory: String,
        /// Repeat for each step.
        #[arg(long, required = true)]
        phi: Vec<String>,
    },
    /// Run a shipped example.
    Example {
        #[arg(value_enum)]
        name: ExampleName,
    },
}

#[derive(Args)]
struct ModelArgs {
    /// Rank file, or the name of a shipped fixture (`r0`, `paris`).
    #[arg(long)]
    rank: String,
    /// Atom count or names; must agree with the rank file.
    #[arg(long)]
    atoms: Option<String>,
}

#[derive(Args)]
struct ModeArgs {
    #[arg(long, value_enum, default_value = "exhaustive")]
    mode: ModeName,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    samples: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeName {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Copy, ValueEnum)]
enum WitnessKind {
    /// U8_1 against a revision satisfying K4 and K5.
    #[value(name = "u8_1")]
    U8_1,
    /// C2 against a revision satisfying K1..K4.
    C2,
    /// Two rankings agreeing on one row but not after iterating.
    Underdetermination,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExampleName {
    Paris,
}

/// Outcome of a command that ran to completion.
enum Verdict {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<Verdict> {
    match command {
        Command::Revise { model, theory, phi } => {
            let (sig, r) = model.load()?;
            let k = parse_theory(&theory, &sig)?;
            let phi = formula(&phi, &sig)?;
            let revised = RankedRevision::new(r).revise(&k, &phi);
            writeln!(
                out,
                "{} [{}]",
                theory_text(&revised, &sig),
                Severity::of(&k, &phi)
            )?;
            Ok(Verdict::Pass)
        }
        Command::Check {
            model,
            postulates,
            anchor,
            mode,
            json,
        } => {
            let (sig, r) = model.load()?;
            let ids = PostulateId::parse_list(&postulates)?;
            let mode = mode.mode();
            let rv = RankedRevision::new(r);
            let report = match anchor {
                Some(text) => {
                    let k = parse_theory(&text, &sig)?;
                    run_suite(&conservative_extension(&rv, k), &ids, &sig, mode)?
                }
                None => run_suite(&rv, &ids, &sig, mode)?,
            };
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report.to_json())?)?;
            } else {
                write!(out, "{}", report.render_text())?;
            }
            Ok(if report.all_pass() {
                Verdict::Pass
            } else {
                Verdict::Fail
            })
        }
        Command::Enumerate { atoms, count, json } => {
            let sig = signature(&atoms)?;
            let all = enumerate_rank_functions(&sig)?;
            if count {
                writeln!(out, "{}", all.count())?;
            } else if json {
                let list: Vec<Value> = all.map(|r| json!(r.ranks())).collect();
                writeln!(out, "{}", json!({ "atoms": sig.atoms(), "ranks": list }))?;
            } else {
                for r in all {
                    writeln!(out, "{}", levels_line(&sig, &r))?;
                }
            }
            Ok(Verdict::Pass)
        }
        Command::Witness {
            model,
            kind,
            theory,
            json,
        } => {
            let (sig, r) = model.load()?;
            let which = match kind {
                WitnessKind::U8_1 => Impossibility::U8_1VsK4K5,
                WitnessKind::C2 => Impossibility::C2VsK1K4,
                WitnessKind::Underdetermination => {
                    let Some(text) = theory else {
                        bail!("--kind underdetermination needs --theory");
                    };
                    let k = parse_theory(&text, &sig)?;
                    return underdetermination(&sig, &k, json, out);
                }
            };
            let rv = RankedRevision::new(r);
            match find_impossibility_witness(&rv, which, &sig) {
                Ok(v) => {
                    if json {
                        writeln!(out, "{}", violation_json(&v, &sig))?;
                    } else {
                        writeln!(out, "{}", violation_line(&v, &sig))?;
                    }
                    Ok(Verdict::Pass)
                }
                Err(rankrev::Error::NotFound(why)) => {
                    writeln!(out, "not found: {why}")?;
                    Ok(Verdict::Fail)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Roundtrip { model } => {
            let (sig, r) = model.load()?;
            let bot = Theory::inconsistent(sig.universe());
            let relation = relation_of_revision(&RankedRevision::new(r.clone()), &bot, &sig)?;
            let report = check_rationality(&relation, &sig)?;
            let failed = report.failed();
            if failed.is_empty() {
                writeln!(out, "relation: rational, consistency-preserving")?;
            } else {
                let names: Vec<&str> = failed.iter().map(|p| p.name()).collect();
                writeln!(out, "relation fails: {}", names.join(" "))?;
            }
            let back = RankFunction::from_relation(&relation)?;
            write!(out, "{}", write_rank_file(&sig, &back)?)?;
            let same = back == r.normalize();
            writeln!(
                out,
                "round trip: {}",
                if same { "identical" } else { "differs" }
            )?;
            Ok(if same && failed.is_empty() {
                Verdict::Pass
            } else {
                Verdict::Fail
            })
        }
        Command::Trace { model, theory, phi } => {
            let (sig, r) = model.load()?;
            let k = parse_theory(&theory, &sig)?;
            let fs = phi
                .iter()
                .map(|f| formula(f, &sig))
                .collect::<Result<Vec<_>>>()?;
            for (step, text) in iterate(&RankedRevision::new(r), &k, &fs).iter().zip(&phi) {
                writeln!(out, "{}", step_line(step, text, &sig))?;
            }
            Ok(Verdict::Pass)
        }
        Command::Example {
            name: ExampleName::Paris,
        } => paris(out),
    }
}

impl ModelArgs {
    fn load(&self) -> Result<(Signature, RankFunction)> {
        let text = match fixtures::load(&self.rank) {
            Some(text) if !Path::new(&self.rank).exists() => text.to_string(),
            _ => {
                let path = PathBuf::from(&self.rank);
                fs::read_to_string(&path)
                    .with_context(|| format!("cannot read rank file {}", path.display()))?
            }
        };
        let (sig, r) = parse_rank_file(&text).with_context(|| format!("in {}", self.rank))?;
        if let Some(atoms) = &self.atoms {
            let wanted = signature(atoms)?;
            let matches = if atoms.trim().parse::<usize>().is_ok() {
                wanted.len() == sig.len()
            } else {
                wanted == sig
            };
            if !matches {
                bail!("--atoms {atoms} does not match the rank file atoms `{sig}`");
            }
        }
        Ok((sig, r))
    }
}

impl ModeArgs {
    fn mode(&self) -> Mode {
        match self.mode {
            ModeName::Exhaustive => Mode::Exhaustive,
            ModeName::Sampled => Mode::Sampled {
                seed: self.seed,
                samples: self.samples,
            },
        }
    }
}

/// `3` gives the default atoms `p q r`; otherwise names separated by
/// spaces or commas.
fn signature(text: &str) -> Result<Signature> {
    if let Ok(n) = text.trim().parse::<usize>() {
        return Ok(Signature::with_atoms(n)?);
    }
    let names = text.split([',', ' ']).filter(|s| !s.is_empty());
    Ok(Signature::new(names)?)
}

fn formula(text: &str, sig: &Signature) -> Result<PropSet> {
    Ok(parse_formula(text, sig)
        .with_context(|| format!("in formula `{text}`"))?
        .models(sig))
}

fn levels_line(sig: &Signature, r: &RankFunction) -> String {
    let n = sig.len();
    r.levels()
        .iter()
        .map(|(_, set)| set.iter().map(|v| v.bits(n)).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" < ")
}

/// `formula` is echoed as given; theories are printed in canonical form.
fn step_line(step: &RevisionStep, formula: &str, sig: &Signature) -> String {
    format!(
        "{} * {} => {} [{}]",
        theory_text(&step.input, sig),
        formula,
        theory_text(&step.output, sig),
        step.severity
    )
}

fn violation_line(v: &Violation, sig: &Signature) -> String {
    let mut line = format!("{} K={}", v.postulate, theory_text(&v.bindings.k, sig));
    if let Some(kp) = &v.bindings.k_prime {
        line += &format!(" K'={}", theory_text(kp, sig));
    }
    line += &format!(" phi={}", dnf(&v.bindings.phi, sig));
    if let Some(psi) = &v.bindings.psi {
        line += &format!(" psi={}", dnf(psi, sig));
    }
    line + &format!(
        " observed={} required: {}",
        theory_text(&v.observed, sig),
        v.required
    )
}

fn violation_json(v: &Violation, sig: &Signature) -> Value {
    let mut witness = json!({
        "K": theory_text(&v.bindings.k, sig),
        "phi": dnf(&v.bindings.phi, sig),
        "observed": theory_text(&v.observed, sig),
        "required": v.required,
    });
    if let Some(kp) = &v.bindings.k_prime {
        witness["Kprime"] = json!(theory_text(kp, sig));
    }
    if let Some(psi) = &v.bindings.psi {
        witness["psi"] = json!(dnf(psi, sig));
    }
    json!({ "postulate": v.postulate.to_string(), "verdict": "fail", "witness": witness })
}

fn underdetermination(
    sig: &Signature,
    k: &Theory,
    json: bool,
    out: &mut impl Write,
) -> Result<Verdict> {
    let found = match dynamic_underdetermination(sig, k) {
        Ok(found) => found,
        Err(rankrev::Error::NotFound(why)) => {
            writeln!(out, "not found: {why}")?;
            return Ok(Verdict::Fail);
        }
        Err(e) => return Err(e.into()),
    };
    let (a, b) = (
        RankedRevision::new(found.first.clone()),
        RankedRevision::new(found.second.clone()),
    );
    let after = |rv: &RankedRevision| rv.revise(&rv.revise(k, &found.psi), &found.phi);
    if json {
        let v = json!({
            "K": theory_text(k, sig),
            "first": found.first.ranks(),
            "second": found.second.ranks(),
            "psi": dnf(&found.psi, sig),
            "phi": dnf(&found.phi, sig),
            "first_result": theory_text(&after(&a), sig),
            "second_result": theory_text(&after(&b), sig),
        });
        writeln!(out, "{v}")?;
    } else {
        writeln!(out, "K={}", theory_text(k, sig))?;
        writeln!(out, "first:  {}", levels_line(sig, &found.first))?;
        writeln!(out, "second: {}", levels_line(sig, &found.second))?;
        writeln!(out, "both agree on K * chi for every chi")?;
        writeln!(
            out,
            "(K * {}) * {}: {} vs {}",
            dnf(&found.psi, sig),
            dnf(&found.phi, sig),
            theory_text(&after(&a), sig),
            theory_text(&after(&b), sig)
        )?;
    }
    Ok(Verdict::Pass)
}

fn paris(out: &mut impl Write) -> Result<Verdict> {
    let (sig, r) = fixtures::paris();
    let rv = RankedRevision::new(r);
    let k = parse_theory(paris_scenario::THEORY, &sig)?;
    let bot = Theory::inconsistent(sig.universe());
    let news = formula(paris_scenario::NEWS, &sig)?;
    let clouds = formula(paris_scenario::CLOUDS, &sig)?;
    writeln!(out, "atoms: {sig}")?;
    writeln!(out, "K = Cn({})", paris_scenario::THEORY)?;
    let runs = [
        (&k, &news, paris_scenario::NEWS),
        (&k, &clouds, paris_scenario::CLOUDS),
        (&bot, &news, paris_scenario::NEWS),
    ];
    for (theory, phi, text) in runs {
        for step in iterate(&rv, theory, std::slice::from_ref(phi)) {
            writeln!(out, "{}", step_line(&step, text, &sig))?;
        }
    }
    Ok(Verdict::Pass)
}
