//! Property tests over randomly generated specs, rings and ideals.

mod common;

use common::*;
use idealab::factor::{check_ring_witness, DivisorGraph};
use idealab::report::{analyze, recheck_json, AnalyzeOptions};
use idealab::ring::{Ideal, DEFAULT_MAX_RING_SIZE};
use idealab::set::ElementSet;
use idealab::spec::{parse_module, parse_ring, parse_spec, ModuleExpr, RingExpr};
use proptest::prelude::*;

fn module_expr() -> impl Strategy<Value = ModuleExpr> {
    let leaf = prop_oneof![Just(ModuleExpr::SelfModule), (1usize..4).prop_map(ModuleExpr::Free)];
    leaf.prop_recursive(2, 4, 2, |inner| {
        (inner, prop::collection::vec(0usize..40, 0..3)).prop_map(|(m, g)| ModuleExpr::Quot(Box::new(m), g))
    })
}

fn poly() -> impl Strategy<Value = Vec<i64>> {
    (prop::collection::vec(-3i64..=3, 1..4), prop_oneof![Just(1i64), Just(2), Just(-1)]).prop_map(|(mut c, lead)| {
        c.push(lead);
        c
    })
}

fn ring_expr() -> impl Strategy<Value = RingExpr> {
    let leaf = prop_oneof![(2usize..100).prop_map(RingExpr::Zn), (1usize..=6).prop_map(RingExpr::Block)];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| RingExpr::Product(Box::new(a), Box::new(b))),
            (inner.clone(), poly()).prop_map(|(a, p)| RingExpr::PolyQuot(Box::new(a), p)),
            (inner.clone(), prop::collection::vec(0usize..50, 0..3)).prop_map(|(a, g)| RingExpr::Quot(Box::new(a), g)),
            (inner, module_expr()).prop_map(|(a, m)| RingExpr::Idealize(Box::new(a), Box::new(m))),
        ]
    })
}

/// Specs that stay small enough to build.
fn small_spec() -> impl Strategy<Value = String> {
    let field = prop_oneof![Just("Z2"), Just("Z3"), Just("Z5")];
    prop_oneof![
        (2usize..=64).prop_map(|n| format!("Z{n}")),
        ((2usize..=12), (2usize..=12)).prop_map(|(a, b)| format!("Z{a} x Z{b}")),
        (field.clone(), 1usize..=3, prop::collection::vec(0i64..5, 1..=3)).prop_map(|(f, _, c)| {
            let mut terms = vec!["t^3".to_string()];
            for (k, &v) in c.iter().enumerate().rev() {
                match (k, v) {
                    (_, 0) => {}
                    (0, v) => terms.push(v.to_string()),
                    (1, 1) => terms.push("t".into()),
                    (1, v) => terms.push(format!("{v}t")),
                    (k, 1) => terms.push(format!("t^{k}")),
                    (k, v) => terms.push(format!("{v}t^{k}")),
                }
            }
            format!("{f}[t]/({})", terms.join("+"))
        }),
        ((2usize..=7), prop_oneof![Just("self"), Just("free(1)"), Just("free(2)"), Just("mquot(free(2),[1])")])
            .prop_map(|(n, m)| format!("idealize(Z{n},{m})")),
        // generators stay inside (p), so the quotient is never zero
        ((2usize..=15), prop_oneof![Just(2usize), Just(3)], prop::collection::vec(0usize..30, 0..3)).prop_map(|(k, p, g)| {
            let n = k * p;
            let gens: Vec<String> = g.iter().map(|x| (x * p % n).to_string()).collect();
            format!("quot(Z{n},[{}])", gens.join(","))
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ring_specs_round_trip(e in ring_expr()) {
        let text = e.to_string();
        let back = parse_ring(&text).unwrap_or_else(|err| panic!("{text}: {err}"));
        prop_assert_eq!(&back, &e);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn module_specs_round_trip(e in module_expr()) {
        let text = e.to_string();
        prop_assert_eq!(parse_module(&text).unwrap(), e);
    }

    #[test]
    fn spaced_input_prints_canonically(e in ring_expr()) {
        let text = e.to_string();
        let spaced = text.replace(',', " , ").replace('(', "( ").replace(')', " )");
        prop_assert_eq!(parse_ring(&spaced).unwrap().to_string(), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn built_rings_satisfy_axioms(spec in small_spec()) {
        let s = parse_spec(&spec, DEFAULT_MAX_RING_SIZE).unwrap();
        let r = s.build(DEFAULT_MAX_RING_SIZE).unwrap();
        prop_assert!(r.check_axioms().is_ok(), "{}: {:?}", spec, r.check_axioms());
        prop_assert!(s.size_estimate >= r.size() as u128);
        // the canonical name rebuilds the same table
        let again = ring(&s.canonical());
        prop_assert_eq!(again.size(), r.size());
        prop_assert!(again.is_isomorphic_under(&r, &(0..r.size()).collect::<Vec<_>>()));
    }

    #[test]
    fn generated_ideals_are_closed(spec in small_spec(), seeds in prop::collection::vec(0usize..4096, 0..4)) {
        let r = ring(&spec);
        let gens: Vec<usize> = seeds.iter().map(|s| s % r.size()).collect();
        let i = Ideal::generated(&r, gens.iter().copied());
        prop_assert!(Ideal::verify(&r, i.members()).is_ok(), "{spec} {gens:?}");
        prop_assert!(gens.iter().all(|&g| i.contains(g)));
        // smallest: any ideal containing the generators contains it
        let whole = ElementSet::full(r.size());
        prop_assert!(i.members().is_subset(&whole));
        for &g in &gens {
            prop_assert!(Ideal::principal(&r, g).is_subset(&i));
        }
    }

    #[test]
    fn zn_lengths_match_layers(n in 2usize..=96) {
        let r = ring(&format!("Z{n}"));
        let g = DivisorGraph::of_ring(&r);
        let brute = brute_force_lengths(&r);
        for a in r.elements().filter(|&a| a != 0 && !r.is_unit(a)) {
            prop_assert_eq!(g.max_length(a), brute[a], "Z{} at {}", n, a);
            if let Some(w) = g.witness(a) {
                prop_assert!(check_ring_witness(&r, &w), "Z{} at {}", n, a);
            }
        }
    }

    #[test]
    fn report_witnesses_replay(spec in small_spec()) {
        let report = analyze(&spec, &AnalyzeOptions::default()).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        for outcome in recheck_json(&json, DEFAULT_MAX_RING_SIZE).unwrap() {
            prop_assert!(outcome.ok(), "{}: {:?}", spec, outcome.checks);
        }
    }
}
