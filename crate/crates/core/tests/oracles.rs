//! Independent oracles for the combinatorial and representation results.
//! Nothing here relies on the library's enumeration or rationality code.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rankrev::rational::enumerate_rank_functions;
use rankrev::{
    check_rationality, ConsequenceRelation, PropSet, RankFunction, RankedRevision, Revision,
    Signature, Theory,
};

/// Every map from `size` points onto `0..m` for some `m`, by brute force
/// over all `size^size` candidate maps.
fn brute_force_ordered_partitions(size: usize) -> Vec<Vec<u32>> {
    let total = (size as u64).pow(size as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let ranks: Vec<u32> = (0..size)
            .map(|_| {
                let r = (c % size as u64) as u32;
                c /= size as u64;
                r
            })
            .collect();
        let top = *ranks.iter().max().unwrap();
        if (0..=top).all(|level| ranks.contains(&level)) {
            out.push(ranks);
        }
    }
    out.sort();
    out
}

/// Ordered Bell numbers by the recurrence a(n) = sum_k C(n, k) a(n - k).
fn fubini(n: usize) -> u64 {
    let mut a = vec![1u64];
    for m in 1..=n {
        let mut binom = 1u64;
        let mut sum = 0;
        for k in 1..=m {
            binom = binom * (m - k + 1) as u64 / k as u64;
            sum += binom * a[m - k];
        }
        a.push(sum);
    }
    a[n]
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 1..=2 {
        let sig = Signature::with_atoms(n).unwrap();
        let listed: Vec<Vec<u32>> = enumerate_rank_functions(&sig)
            .unwrap()
            .map(|r| r.ranks().to_vec())
            .collect();
        let mut sorted = listed.clone();
        sorted.sort();
        assert_eq!(sorted, listed, "enumeration is in lexicographic order");
        assert_eq!(listed, brute_force_ordered_partitions(1 << n));
    }
    assert_eq!(brute_force_ordered_partitions(2).len(), 3);
    assert_eq!(brute_force_ordered_partitions(4).len(), 75);
}

#[test]
fn enumeration_count_at_three_atoms() {
    assert_eq!([fubini(2), fubini(4), fubini(8)], [3, 75, 545835]);
    let sig = Signature::with_atoms(3).unwrap();
    assert_eq!(
        enumerate_rank_functions(&sig).unwrap().count() as u64,
        fubini(8)
    );
}

/// Choice functions `C` on subsets of the universe with `C(φ) ⊆ φ`,
/// `C(φ) ≠ ∅` for nonempty `φ`, and the condition that whenever `ψ ⊆ φ`
/// meets `C(φ)`, `C(ψ) = C(φ) ∩ ψ`. Found by backtracking in ascending
/// index order, so every subset of `φ` is assigned before `φ`.
fn arrow_choice_functions(universe: usize) -> Vec<Vec<u64>> {
    fn go(phi: u64, domain: u64, choice: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if phi == domain {
            out.push(choice.clone());
            return;
        }
        if phi == 0 {
            choice.push(0);
            go(1, domain, choice, out);
            choice.pop();
            return;
        }
        // nonempty subsets of phi
        let mut c = phi;
        while c != 0 {
            let consistent = (1..phi)
                .filter(|psi| psi & phi == *psi)
                .all(|psi| c & psi == 0 || choice[psi as usize] == c & psi);
            if consistent {
                choice.push(c);
                go(phi + 1, domain, choice, out);
                choice.pop();
            }
            c = (c - 1) & phi;
        }
    }
    let mut out = Vec::new();
    go(0, 1u64 << universe, &mut Vec::new(), &mut out);
    out
}

fn relation_from_masks(sig: &Signature, masks: &[u64]) -> ConsequenceRelation {
    let u = sig.universe();
    let table = masks
        .iter()
        .map(|&m| Theory::from_models(PropSet::from_index(u, m)))
        .collect();
    ConsequenceRelation::from_table(sig, table).unwrap()
}

fn ranked_relation(sig: &Signature, r: &RankFunction) -> ConsequenceRelation {
    ConsequenceRelation::from_fn(sig, |phi| r.consequences_of(phi)).unwrap()
}

#[test]
fn rational_relations_are_exactly_the_ranked_ones() {
    let sig = Signature::with_atoms(2).unwrap();
    let found = arrow_choice_functions(sig.universe());
    assert_eq!(found.len(), 75);

    let ranked: Vec<ConsequenceRelation> = enumerate_rank_functions(&sig)
        .unwrap()
        .map(|r| ranked_relation(&sig, &r))
        .collect();
    for masks in &found {
        let c = relation_from_masks(&sig, masks);
        let report = check_rationality(&c, &sig).unwrap();
        assert!(report.passes_all(), "{masks:?} fails {:?}", report.failed());
        assert!(ranked.contains(&c));
        let r = RankFunction::from_relation(&c).unwrap();
        assert_eq!(ranked_relation(&sig, &r), c);
    }
}

#[test]
fn rationality_checker_agrees_with_choice_condition() {
    let sig = Signature::with_atoms(2).unwrap();
    let u = sig.universe();
    let domain = 1u64 << u;
    let arrow = |m: &[u64]| {
        (0..domain).all(|phi| {
            m[phi as usize] & !phi == 0
                && (phi == 0) == (m[phi as usize] == 0)
                && (0..domain).filter(|psi| psi & phi == *psi).all(|psi| {
                    m[phi as usize] & psi == 0 || m[psi as usize] == m[phi as usize] & psi
                })
        })
    };
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut rational = 0;
    for round in 0..4000 {
        // mostly perturbations of ranked relations, so both outcomes occur
        let mut masks: Vec<u64> = if round % 2 == 0 {
            let r = RankFunction::random(&sig, 4, rng.gen()).unwrap();
            (0..domain)
                .map(|phi| {
                    r.consequences_of(&PropSet::from_index(u, phi))
                        .models()
                        .index()
                })
                .collect()
        } else {
            (0..domain).map(|phi| rng.gen::<u64>() & phi).collect()
        };
        if round % 4 == 0 {
            let phi = rng.gen_range(0..domain) as usize;
            masks[phi] = rng.gen::<u64>() & (domain - 1);
        }
        let c = relation_from_masks(&sig, &masks);
        let passes = check_rationality(&c, &sig).unwrap().passes_all();
        assert_eq!(passes, arrow(&masks), "{masks:?}");
        rational += passes as usize;
    }
    assert!(rational > 100 && rational < 3900);
}

#[test]
fn ranked_revisions_are_pairwise_distinct() {
    let sig = Signature::with_atoms(2).unwrap();
    let revisions: Vec<RankedRevision> = enumerate_rank_functions(&sig)
        .unwrap()
        .map(RankedRevision::new)
        .collect();
    let bot = Theory::inconsistent(sig.universe());
    let rows: Vec<Vec<Theory>> = revisions
        .iter()
        .map(|rv| {
            sig.all_sets()
                .unwrap()
                .map(|phi| rv.revise(&bot, &phi))
                .collect()
        })
        .collect();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            assert_ne!(rows[i], rows[j], "rankings {i} and {j}");
        }
    }
}
