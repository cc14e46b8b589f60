mod common;

use mostar_core::indices::index_report;
use mostar_core::polymer::{build_chain, build_tree_attach, compose, MonomerHandle, PolymerKind, PolymerSpec, TreeEdge};
use mostar_core::{Graph, Value};
use rand::Rng;

const KINDS: [PolymerKind; 5] =
    [PolymerKind::Link, PolymerKind::Chain, PolymerKind::Bouquet, PolymerKind::Circuit, PolymerKind::Tree];

fn expected_counts(spec: &PolymerSpec) -> (usize, usize) {
    let k = spec.monomers.len();
    let v: usize = spec.monomers.iter().map(|m| m.graph.vertex_count()).sum();
    let e: usize = spec.monomers.iter().map(|m| m.graph.edge_count()).sum();
    match spec.kind {
        PolymerKind::Link => (v, e + k - 1),
        PolymerKind::Chain | PolymerKind::Bouquet | PolymerKind::Tree => (v - (k - 1), e),
        PolymerKind::Circuit => (v, e + k),
    }
}

fn is_bridge(g: &Graph, e: (usize, usize)) -> bool {
    let rest = g.edges().iter().copied().filter(|&f| f != e);
    Graph::from_edge_list(g.vertex_count(), rest).unwrap().component_count() > 1
}

#[test]
fn counts_and_connectivity_for_every_construction() {
    let mut rng = common::rng(11);
    for round in 0..300 {
        let kind = KINDS[round % KINDS.len()];
        let count = rng.gen_range(if kind == PolymerKind::Circuit { 3 } else { 1 }..=6);
        let lo = if kind == PolymerKind::Chain { 2 } else { 1 };
        let spec = common::random_spec(&mut rng, kind, count, lo, 8);
        let built = compose(&spec).unwrap();
        let g = &built.graph;
        assert_eq!((g.vertex_count(), g.edge_count()), expected_counts(&spec), "{kind}");
        assert!(g.is_connected(), "{kind}");

        // vertex_map is onto, and each monomer keeps its own vertices apart
        let mut hit = vec![false; g.vertex_count()];
        for (i, map) in built.vertex_map.iter().enumerate() {
            assert_eq!(map.len(), spec.monomers[i].graph.vertex_count());
            let mut own = map.clone();
            own.sort_unstable();
            own.dedup();
            assert_eq!(own.len(), map.len());
            for &(u, v) in spec.monomers[i].graph.edges() {
                assert!(g.has_edge(map[u], map[v]));
            }
            for &c in map {
                hit[c] = true;
            }
        }
        assert!(hit.iter().all(|&h| h));
    }
}

#[test]
fn identified_vertices_share_an_id() {
    let mut rng = common::rng(12);
    for _ in 0..50 {
        let spec = common::random_spec(&mut rng, PolymerKind::Chain, 4, 2, 6);
        let built = compose(&spec).unwrap();
        for i in 0..3 {
            assert_eq!(built.map(i, spec.monomers[i].y), built.map(i + 1, spec.monomers[i + 1].x));
        }
        let spec = common::random_spec(&mut rng, PolymerKind::Bouquet, 4, 1, 6);
        let built = compose(&spec).unwrap();
        let hub = built.map(0, spec.monomers[0].x);
        assert!((1..4).all(|i| built.map(i, spec.monomers[i].x) == hub));
    }
}

#[test]
fn link_edges_are_bridges_and_circuit_handles_form_a_cycle() {
    let mut rng = common::rng(13);
    for _ in 0..60 {
        let k = rng.gen_range(2..=5);
        let spec = common::random_spec(&mut rng, PolymerKind::Link, k, 1, 7);
        let built = compose(&spec).unwrap();
        for i in 0..k - 1 {
            let e = (built.map(i, spec.monomers[i].y), built.map(i + 1, spec.monomers[i + 1].x));
            assert!(built.graph.has_edge(e.0, e.1));
            assert!(is_bridge(&built.graph, e));
        }

        let k = rng.gen_range(3..=6);
        let spec = common::random_spec(&mut rng, PolymerKind::Circuit, k, 1, 7);
        let built = compose(&spec).unwrap();
        for i in 0..k {
            let a = built.map(i, spec.monomers[i].x);
            let b = built.map((i + 1) % k, spec.monomers[(i + 1) % k].x);
            assert!(built.graph.has_edge(a, b));
        }
    }
}

#[test]
fn chain_equals_path_shaped_tree_attach() {
    let mut rng = common::rng(14);
    for _ in 0..80 {
        let k = rng.gen_range(1..=6);
        let monomers = common::random_monomers(&mut rng, k, 2, 7);
        let chain = build_chain(&monomers).unwrap().graph;
        let edges = (0..k - 1)
            .map(|i| TreeEdge { a: i, va: monomers[i].y, b: i + 1, vb: monomers[i + 1].x })
            .collect();
        let tree = build_tree_attach(&PolymerSpec::tree(monomers, edges)).unwrap().graph;
        assert_eq!(
            index_report::<Value>(&chain, false).unwrap(),
            index_report::<Value>(&tree, false).unwrap()
        );
    }
}

#[test]
fn identity_monomer_leaves_graph_unchanged() {
    let mut rng = common::rng(15);
    for _ in 0..20 {
        let g = common::random_connected(&mut rng, 7, 0.3);
        let v = rng.gen_range(0..7);
        let r = mostar_core::polymer::point_attach(&Graph::complete(1).unwrap(), 0, &g, v).unwrap();
        assert_eq!(
            index_report::<Value>(&r.graph, false).unwrap(),
            index_report::<Value>(&g, false).unwrap()
        );
    }
}

#[test]
fn single_monomer_constructions_are_identity() {
    let g = Graph::cycle(7).unwrap();
    for kind in [PolymerKind::Link, PolymerKind::Chain, PolymerKind::Bouquet, PolymerKind::Tree] {
        let spec = PolymerSpec::new(kind, vec![MonomerHandle::new(g.clone(), 2, 5)]);
        assert_eq!(compose(&spec).unwrap().graph, g, "{kind}");
    }
}
