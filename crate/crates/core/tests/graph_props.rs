mod common;

use mostar_core::graph::Hops;
use mostar_core::{io, Graph};
use proptest::prelude::*;

fn connected_graph() -> impl Strategy<Value = Graph> {
    (1usize..14, 0.0f64..0.6, any::<u64>())
        .prop_map(|(n, p, seed)| common::random_connected(&mut common::rng(seed), n, p))
}

proptest! {
    #[test]
    fn distance_rows_step_by_at_most_one(g in connected_graph()) {
        for row in g.all_pairs_distances() {
            prop_assert_eq!(row.dist[row.source], Hops::Finite(0));
            for (w, d) in row.dist.iter().enumerate() {
                if w != row.source {
                    prop_assert!(d.finite().unwrap() >= 1);
                }
            }
            for &(a, b) in g.edges() {
                let (da, db) = (row.dist[a].finite().unwrap(), row.dist[b].finite().unwrap());
                prop_assert!(da.abs_diff(db) <= 1);
            }
        }
    }

    #[test]
    fn distance_table_is_symmetric_and_matches_floyd(g in connected_graph()) {
        let rows = g.all_pairs_distances();
        let fw = common::floyd(&g);
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                prop_assert_eq!(rows[u].dist[v], rows[v].dist[u]);
                prop_assert_eq!(rows[u].dist[v].finite().unwrap() as u64, fw[u][v]);
            }
        }
        prop_assert_eq!(g.all_pairs_distances_par(), rows);
        prop_assert!(g.is_connected());
    }

    #[test]
    fn formats_reproduce_the_normalized_edge_list(g in connected_graph()) {
        prop_assert_eq!(&io::parse_edge_list(&io::to_edge_list(&g)).unwrap(), &g);
        prop_assert_eq!(&io::parse_json(&io::to_json(&g)).unwrap(), &g);
        let flipped: Vec<_> = g.edges().iter().rev().map(|&(u, v)| (v, u)).collect();
        prop_assert_eq!(Graph::from_edge_list(g.vertex_count(), flipped).unwrap(), g);
    }
}

#[test]
fn adjacency_and_edge_list_agree() {
    let mut rng = common::rng(7);
    for _ in 0..50 {
        let g = common::random_connected(&mut rng, 12, 0.3);
        let from_adj: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        assert_eq!(from_adj, 2 * g.edge_count());
        for &(u, v) in g.edges() {
            assert!(u < v);
            assert!(g.neighbors(u).contains(&v) && g.neighbors(v).contains(&u));
        }
    }
}

#[test]
fn disconnected_graph_rows_mark_other_components() {
    let g = Graph::from_edge_list(5, [(0, 1), (2, 3), (3, 4)]).unwrap();
    let row = g.bfs_distances(0);
    assert_eq!(row.dist, [Hops::Finite(0), Hops::Finite(1), Hops::Unreachable, Hops::Unreachable, Hops::Unreachable]);
    assert!(!g.is_connected());
}
