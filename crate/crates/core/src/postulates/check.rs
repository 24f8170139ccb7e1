use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::logic::{PropSet, Signature, Theory};
use crate::postulates::clause::{evaluate, Bindings, PostulateId, Quantifiers, Violation};
use crate::revision::Revision;

/// Exhaustive checking limits by clause arity.
pub const MAX_EXHAUSTIVE_ATOMS_TWO_VARS: usize = 3;
pub const MAX_EXHAUSTIVE_ATOMS_THREE_VARS: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Every binding of the quantified variables.
    Exhaustive,
    /// `samples` bindings drawn uniformly from a ChaCha8 stream seeded by `seed`.
    Sampled { seed: u64, samples: u64 },
}

/// Checks `id` over every binding, returning the first violation in
/// ascending binding order (theories, then formulas, by bitmask index).
pub fn check_postulate<R: Revision + ?Sized>(
    rv: &R,
    id: PostulateId,
    sig: &Signature,
) -> Result<Option<Violation>> {
    check_postulate_in(rv, id, sig, Mode::Exhaustive)
}

pub fn check_postulate_in<R: Revision + ?Sized>(
    rv: &R,
    id: PostulateId,
    sig: &Signature,
    mode: Mode,
) -> Result<Option<Violation>> {
    assert_eq!(
        rv.universe(),
        sig.universe(),
        "revision over another signature"
    );
    let quantifiers = id.quantifiers();
    let mut first = None;
    let mut visit = |b: Bindings| {
        let b = complete(id, rv, b);
        match evaluate(id, rv, &b) {
            Some(failure) => {
                first = Some(Violation {
                    postulate: id,
                    bindings: b,
                    observed: failure.observed,
                    required: failure.required,
                });
                false
            }
            None => true,
        }
    };
    match mode {
        Mode::Exhaustive => {
            let max = if quantifiers.arity() == 2 {
                MAX_EXHAUSTIVE_ATOMS_TWO_VARS
            } else {
                MAX_EXHAUSTIVE_ATOMS_THREE_VARS
            };
            sig.require_enumerable("postulate check", max)?;
            let sets: Vec<PropSet> = sig.all_sets()?.collect();
            exhaustive(quantifiers, &sets, &mut visit);
        }
        Mode::Sampled { seed, samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ stream_of(id));
            let universe = sig.universe();
            let mut draw = || PropSet::from_fn(universe, |_| rng.gen_bool(0.5));
            for _ in 0..samples {
                let (k, x, y) = (draw(), draw(), draw());
                if !visit(bind(quantifiers, k, x, y)) {
                    break;
                }
            }
        }
    }
    Ok(first)
}

/// Independent stream per postulate for one suite seed.
fn stream_of(id: PostulateId) -> u64 {
    (id as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn bind(q: Quantifiers, k: PropSet, x: PropSet, y: PropSet) -> Bindings {
    let k = Theory::from_models(k);
    match q {
        Quantifiers::TheoryFormula => Bindings {
            k,
            k_prime: None,
            phi: x,
            psi: None,
        },
        Quantifiers::TheoryTwoFormulas => Bindings {
            k,
            k_prime: None,
            phi: x,
            psi: Some(y),
        },
        Quantifiers::TwoTheoriesFormula => Bindings {
            k,
            k_prime: Some(Theory::from_models(x)),
            phi: y,
            psi: None,
        },
    }
}

fn exhaustive(q: Quantifiers, sets: &[PropSet], visit: &mut dyn FnMut(Bindings) -> bool) {
    for a in sets {
        for b in sets {
            if q.arity() == 2 {
                if !visit(bind(q, a.clone(), b.clone(), b.clone())) {
                    return;
                }
                continue;
            }
            for c in sets {
                if !visit(bind(q, a.clone(), b.clone(), c.clone())) {
                    return;
                }
            }
        }
    }
}

/// Fills the variables that the reduced clauses derive from `(K, φ)`.
fn complete<R: Revision + ?Sized>(id: PostulateId, rv: &R, mut b: Bindings) -> Bindings {
    let bot = Theory::inconsistent(rv.universe());
    match id {
        PostulateId::K9 => b.k_prime = Some(bot),
        PostulateId::K9_2P => {
            let strongest = b.k.models().union(rv.revise(&bot, &b.phi).models());
            b.psi = Some(strongest);
        }
        _ if id.quantifiers() == Quantifiers::TheoryFormula => b.psi = None,
        _ => {}
    }
    b
}
