use std::sync::Arc;

use proptest::prelude::*;

use tenslab::analysis::g_m;
use tenslab::cayley::delta;
use tenslab::io::{graph_from_json, graph_to_json, mapping_from_json, mapping_to_json};
use tenslab::search::{find_hom, find_tt, HomOptions, TtMethod, TtOptions};
use tenslab::tension::{
    elementary_tension_of_side, is_flow, is_tension, pullback, tension_from_potential, EdgeFunction, Potential,
};
use tenslab::verify::{certificate_holds, compose, ring_influence, verify_tt, verify_tt_oracle};
use tenslab::{EdgeImage, EdgeMapping, Graph, RingSpec};

const RINGS: [&str; 6] = ["Z2", "Z3", "Z4", "Z2xZ2", "Z6", "Z"];

fn graph(directed: bool, max_n: usize, max_e: usize) -> impl Strategy<Value = Arc<Graph>> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 1..=max_e)
            .prop_map(move |arcs| Arc::new(Graph::from_index_edges(format!("g{n}"), directed, n, &arcs)))
    })
}

fn ring() -> impl Strategy<Value = RingSpec> {
    prop::sample::select(RINGS.to_vec()).prop_map(|r| RingSpec::parse(r).unwrap())
}

/// A source, a target and an arbitrary edge map between them.
fn mapping(directed: bool) -> impl Strategy<Value = EdgeMapping> {
    (graph(directed, 4, 6), graph(directed, 4, 5)).prop_flat_map(move |(g, h)| {
        let k = h.edge_count();
        prop::collection::vec((0..k, any::<bool>()), g.edge_count()).prop_map(move |imgs| {
            let images = imgs
                .into_iter()
                .map(|(e, r)| if r && !directed { EdgeImage::flipped(e) } else { EdgeImage::plain(e) })
                .collect();
            EdgeMapping::new(g.clone(), h.clone(), images).unwrap()
        })
    })
}

fn gm_ge(a: Option<usize>, b: Option<usize>) -> bool {
    match (a, b) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(x), Some(y)) => x >= y,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn flow_image_check_matches_oracle_directed(f in mapping(true), spec in ring()) {
        prop_assert_eq!(verify_tt(&f, &spec).unwrap().is_tt, verify_tt_oracle(&f, &spec).unwrap().is_tt);
    }

    #[test]
    fn flow_image_check_matches_oracle_undirected(f in mapping(false), spec in ring()) {
        prop_assert_eq!(verify_tt(&f, &spec).unwrap().is_tt, verify_tt_oracle(&f, &spec).unwrap().is_tt);
    }

    #[test]
    fn negative_verdicts_carry_valid_certificates(f in mapping(true), spec in ring()) {
        let v = verify_tt(&f, &spec).unwrap();
        if !v.is_tt {
            prop_assert!(certificate_holds(&f, &spec, &v).unwrap());
        }
        let o = verify_tt_oracle(&f, &spec).unwrap();
        if !o.is_tt {
            prop_assert!(certificate_holds(&f, &spec, &o).unwrap());
        }
    }

    #[test]
    fn tt_mappings_pull_tensions_back_to_tensions(f in mapping(true), spec in ring(), side in prop::collection::vec(any::<bool>(), 4)) {
        if verify_tt(&f, &spec).unwrap().is_tt {
            let h = f.target();
            let tau = elementary_tension_of_side(h, &side[..h.vertex_count()], &spec);
            prop_assert!(is_tension(f.source(), &pullback(&tau, &f).unwrap()).unwrap());
        }
    }

    #[test]
    fn ring_implications_are_never_violated(f in mapping(true)) {
        let specs: Vec<RingSpec> = RINGS.iter().map(|r| RingSpec::parse(r).unwrap()).collect();
        let report = ring_influence(&f, &specs).unwrap();
        prop_assert!(report.violations().is_empty());
    }

    #[test]
    fn g_m_does_not_increase_along_tt_mappings(f in mapping(true), spec in ring()) {
        if verify_tt(&f, &spec).unwrap().is_tt {
            let a = g_m(f.source(), &spec).unwrap();
            let b = g_m(f.target(), &spec).unwrap();
            prop_assert!(gm_ge(a, b), "g_M {:?} < {:?}", a, b);
        }
    }

    #[test]
    fn composition_preserves_tension_continuity(
        f in mapping(true),
        imgs in prop::collection::vec(0usize..64, 6),
        spec in ring(),
    ) {
        // A second map out of f's target into f's source.
        let g = EdgeMapping::from_indices(
            f.target_arc().clone(),
            f.source_arc().clone(),
            &imgs[..f.target().edge_count()].iter().map(|i| i % f.source().edge_count()).collect::<Vec<_>>(),
        ).unwrap();
        if verify_tt(&f, &spec).unwrap().is_tt && verify_tt(&g, &spec).unwrap().is_tt {
            prop_assert!(verify_tt(&compose(&f, &g).unwrap(), &spec).unwrap().is_tt);
        }
    }

    #[test]
    fn potential_differences_are_tensions(g in graph(true, 5, 8), spec in ring(), p in prop::collection::vec(-7i64..7, 5)) {
        let values = p[..g.vertex_count()].iter().map(|&x| spec.int_embed(x)).collect();
        let pot = Potential::new(&g, &spec, values).unwrap();
        prop_assert!(is_tension(&g, &tension_from_potential(&g, &pot).unwrap()).unwrap());
    }

    #[test]
    fn zero_is_a_flow(g in graph(true, 5, 8), spec in ring()) {
        prop_assert!(is_flow(&g, &EdgeFunction::zero(&g, &spec)).unwrap());
    }

    #[test]
    fn induced_mappings_are_tension_continuous(g in graph(true, 4, 6), h in graph(true, 3, 6), spec in ring(), anti in any::<bool>()) {
        let opts = HomOptions { anti, ..HomOptions::default() };
        if let Some(m) = find_hom(g.clone(), h.clone(), &opts).witness() {
            let f = m.induced_mapping().unwrap();
            prop_assert!(verify_tt(&f, &spec).unwrap().is_tt);
        }
    }

    #[test]
    fn delta_and_backtracking_agree(g in graph(false, 5, 7), h in graph(false, 3, 3)) {
        let z2 = RingSpec::parse("Z2").unwrap();
        let a = find_tt(g.clone(), h.clone(), &z2, &TtOptions::with_method(TtMethod::Delta)).unwrap();
        let b = find_tt(g.clone(), h.clone(), &z2, &TtOptions::with_method(TtMethod::Backtrack)).unwrap();
        prop_assert_eq!(a.verdict(), b.verdict());
        for f in a.witness().into_iter().chain(b.witness()) {
            prop_assert!(verify_tt(f, &z2).unwrap().is_tt);
        }
    }

    #[test]
    fn delta_transfers_homs_and_tt_mappings(g in graph(false, 5, 7), h in graph(false, 3, 3)) {
        let z2 = RingSpec::parse("Z2").unwrap();
        let d = delta(&h, &z2, 4096).unwrap();
        if let Some(f) = find_tt(g.clone(), h.clone(), &z2, &TtOptions::with_method(TtMethod::Backtrack)).unwrap().witness() {
            let hom = d.push_tt_to_hom(f).unwrap();
            let back = d.pull_hom_to_tt(g.clone(), &hom).unwrap();
            prop_assert!(verify_tt(&back, &z2).unwrap().is_tt);
        }
    }

    #[test]
    fn graph_json_round_trips(g in graph(true, 5, 8)) {
        let (back, designated) = graph_from_json(&graph_to_json(&g, None)).unwrap();
        prop_assert_eq!(&back, &*g);
        prop_assert!(designated.is_none());
    }

    #[test]
    fn mapping_json_round_trips(f in mapping(false)) {
        let doc = mapping_to_json(&f, graph_to_json(f.source(), None), graph_to_json(f.target(), None));
        let back = mapping_from_json(&doc, &mut |v| Ok(Arc::new(graph_from_json(v)?.0))).unwrap();
        prop_assert_eq!(back, f);
    }
}
