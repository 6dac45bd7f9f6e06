use proptest::prelude::*;

use irrtools::bounds::{evaluate_all, evaluate_bound, BoundId, BoundInput, BoundParams, Verdict};
use irrtools::rational::uint;
use irrtools::search::canonical_form;
use irrtools::sequences::{random_gnp, random_tree, DerivedSequences};
use irrtools::{Convention, DegreeSequenceView, Error, Graph};

fn convention() -> impl Strategy<Value = Convention> {
    prop_oneof![Just(Convention::Standard), Just(Convention::PaperTable)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn evaluator_is_total(entries in prop::collection::vec(1u64..=30, 2..=12), conv in convention(), irr in prop::option::of(0u64..5000)) {
        let view = DegreeSequenceView::new(entries, conv).unwrap();
        let input = BoundInput::from_view(&view, irr).unwrap();
        for id in BoundId::ALL {
            match evaluate_bound(id, &input, &BoundParams::default()) {
                Ok(report) => {
                    // verdict agrees with the recomputed margin
                    if let (Some(l), Some(r)) = (&report.lhs, &report.rhs) {
                        let margin = report.relation.margin(l, r);
                        prop_assert_eq!(Some(&margin), report.margin.as_ref());
                        prop_assert_eq!(report.relation.decide(&margin), report.verdict);
                    } else {
                        prop_assert_eq!(report.verdict, Verdict::Undefined);
                        prop_assert!(!report.hypotheses_met);
                    }
                }
                Err(Error::MissingInput { .. }) => {}
                Err(e) => prop_assert!(false, "{id}: unexpected error {e}"),
            }
        }
    }

    #[test]
    fn exact_evaluation_is_repeatable(entries in prop::collection::vec(1u64..=30, 2..=12)) {
        let view = DegreeSequenceView::new(entries, Convention::PaperTable).unwrap();
        let input = BoundInput::from_view(&view, Some(100)).unwrap();
        let a = evaluate_all(&input, &BoundParams::default()).unwrap();
        let b = evaluate_all(&input, &BoundParams::default()).unwrap();
        prop_assert_eq!(&a, &b);
        for r in a.iter().filter(|r| r.bound_id != BoundId::B6 && r.bound_id != BoundId::B15b) {
            prop_assert!(r.lhs.as_ref().is_none_or(|v| v.is_exact()));
            prop_assert!(r.rhs.as_ref().is_none_or(|v| v.is_exact()));
        }
    }

    #[test]
    fn b9_rhs_is_monotone_in_p(n in 3usize..14, seed in any::<u64>()) {
        let g = random_tree(n, seed);
        let input = BoundInput::from_graph("t", &g).unwrap();
        let rhs = |p| {
            let params = BoundParams { p, ..BoundParams::default() };
            evaluate_bound(BoundId::B9, &input, &params).unwrap().rhs.unwrap().lo
        };
        prop_assert!(rhs(2) <= rhs(3));
        prop_assert!(rhs(3) <= rhs(7));
    }

    #[test]
    fn derived_sequences_reconstruct(entries in prop::collection::vec(1u64..=50, 2..=20)) {
        let d = DerivedSequences::from_entries(&entries).unwrap();
        let back: Vec<_> = entries.iter().map(|&e| uint(e)).collect();
        prop_assert_eq!(d.reconstruct(), back);
    }

    #[test]
    fn graph_invariants(n in 0usize..12, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = random_gnp(n, p, seed);
        let degree_sum: usize = g.degrees().iter().sum();
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
        prop_assert_eq!(g.complement().complement(), g.clone());
        let text = g.to_edge_list();
        prop_assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn product_degree_law(a in 1usize..6, b in 1usize..6, s1 in any::<u64>(), s2 in any::<u64>()) {
        let g = random_gnp(a, 0.5, s1);
        let h = random_gnp(b, 0.5, s2);
        let prod = g.cartesian_product(&h);
        for u in 0..a {
            for v in 0..b {
                prop_assert_eq!(prod.degree(u * b + v), g.degree(u) + h.degree(v));
            }
        }
    }

    #[test]
    fn canonical_form_ignores_labels(n in 1usize..16, seed in any::<u64>(), shift in 0usize..16) {
        let g = random_tree(n, seed);
        let relabel = |v: usize| (v * 7 + shift) % n;
        // 7 is invertible mod n unless n is a multiple of 7
        prop_assume!(n % 7 != 0);
        let h = Graph::from_edges(n, g.edges().map(|(u, v)| (relabel(u), relabel(v)))).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }
}
