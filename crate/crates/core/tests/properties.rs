use proptest::prelude::*;
use rankrev::{
    build_m_k, canonical_formula, parse_formula, Formula, PropSet, RankFunction, RankedRevision,
    Revision, Severity, Signature, Theory, Valuation,
};

const N: usize = 3;

fn sig() -> Signature {
    Signature::with_atoms(N).unwrap()
}

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        Just(Formula::True),
        Just(Formula::False),
        (0..N).prop_map(Formula::Atom),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::negation),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::iff(a, b)),
        ]
    })
}

fn set() -> impl Strategy<Value = PropSet> {
    any::<u8>().prop_map(|m| PropSet::from_index(1 << N, m as u64))
}

fn ranking() -> impl Strategy<Value = RankFunction> {
    proptest::collection::vec(0u32..5, 1 << N)
        .prop_map(|r| RankFunction::new(r).unwrap().normalize())
}

proptest! {
    #[test]
    fn models_commute_with_connectives(a in formula(), b in formula()) {
        let s = sig();
        let (ma, mb) = (a.models(&s), b.models(&s));
        prop_assert_eq!(Formula::and(a.clone(), b.clone()).models(&s), ma.intersection(&mb));
        prop_assert_eq!(Formula::or(a.clone(), b.clone()).models(&s), ma.union(&mb));
        prop_assert_eq!(Formula::negation(a.clone()).models(&s), ma.complement());
        prop_assert_eq!(
            Formula::implies(a, b).models(&s),
            ma.complement().union(&mb)
        );
    }

    #[test]
    fn display_reparses_to_the_same_models(a in formula()) {
        let s = sig();
        let text = a.display(&s).to_string();
        let back = parse_formula(&text, &s).unwrap();
        prop_assert_eq!(back.models(&s), a.models(&s), "{}", text);
    }

    #[test]
    fn canonical_formula_is_a_section_of_models(a in formula()) {
        let s = sig();
        let m = a.models(&s);
        let c = canonical_formula(&m, &s);
        prop_assert_eq!(c.models(&s), m.clone());
        // equivalent formulas get the same canonical form
        let twin = Formula::negation(Formula::negation(a));
        prop_assert_eq!(canonical_formula(&twin.models(&s), &s), c);
    }

    #[test]
    fn expansion_is_monotone(k in set(), l in set(), phi in set()) {
        let (k, l) = (Theory::from_models(k), Theory::from_models(l));
        if k.is_subtheory_of(&l) {
            prop_assert!(k.cn_with(&phi).is_subtheory_of(&l.cn_with(&phi)));
        }
        prop_assert!(k.is_subtheory_of(&k.cn_with(&phi)));
        prop_assert!(k.cn_with(&phi).contains(&phi));
    }

    #[test]
    fn ranked_revision_succeeds_and_follows_behavior_law(r in ranking(), k in set(), phi in set()) {
        let rv = RankedRevision::new(r.clone());
        let k = Theory::from_models(k);
        let out = rv.revise(&k, &phi);
        prop_assert!(out.contains(&phi));
        let bot = Theory::inconsistent(1 << N);
        match Severity::of(&k, &phi) {
            Severity::Severe => prop_assert_eq!(&out, &rv.revise(&bot, &phi)),
            Severity::Mild => prop_assert_eq!(&out, &k.cn_with(&phi)),
        }
        prop_assert_eq!(rv.revise(&bot, &phi), r.consequences_of(&phi));
    }

    #[test]
    fn m_k_matches_revision(r in ranking(), k in set(), phi in set()) {
        let k = Theory::from_models(k);
        let m = build_m_k(&r, &k);
        prop_assert!(m.is_normalized());
        prop_assert_eq!(RankedRevision::new(r).revise(&k, &phi), m.consequences_of(&phi));
    }

    #[test]
    fn normalization_is_unobservable(raw in proptest::collection::vec(0u32..9, 1 << N), phi in set()) {
        let r = RankFunction::new(raw).unwrap();
        let n = r.normalize();
        prop_assert_eq!(r.consequences_of(&phi), n.consequences_of(&phi));
        for i in 0..(1u32 << N) {
            for j in 0..(1u32 << N) {
                let (a, b) = (Valuation(i), Valuation(j));
                prop_assert_eq!(r.rank(a) < r.rank(b), n.rank(a) < n.rank(b));
            }
        }
    }
}
