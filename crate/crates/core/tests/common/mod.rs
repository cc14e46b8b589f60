#![allow(dead_code)]

use mostar_core::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random connected graph on `n` vertices: a random tree plus each remaining
/// pair with probability `p`, with vertex ids shuffled.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        pairs.push((order[i], order[j]));
    }
    for u in 0..n {
        for v in u + 1..n {
            let tree = pairs.contains(&(u, v)) || pairs.contains(&(v, u));
            if !tree && rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, pairs).unwrap()
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// Floyd-Warshall distances, independent of the BFS code path.
pub fn floyd(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.vertex_count();
    let inf = u64::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Mo, Mo_e and W straight from the definitions over a Floyd-Warshall table.
pub fn naive_indices(g: &Graph) -> (i128, i128, i128) {
    let d = floyd(g);
    let n = g.vertex_count();
    let edges = g.edges();
    let mut mo = 0i128;
    let mut mo_e = 0i128;
    for &(u, v) in edges {
        let nu = (0..n).filter(|&w| d[w][u] < d[w][v]).count() as i128;
        let nv = (0..n).filter(|&w| d[w][v] < d[w][u]).count() as i128;
        mo += (nu - nv).abs();
        let fd = |x: usize, y: usize, w: usize| d[x][w].min(d[y][w]);
        let mu = edges.iter().filter(|&&(x, y)| fd(x, y, u) < fd(x, y, v)).count() as i128;
        let mv = edges.iter().filter(|&&(x, y)| fd(x, y, v) < fd(x, y, u)).count() as i128;
        mo_e += (mu - mv).abs();
    }
    let mut w = 0i128;
    for u in 0..n {
        for v in u + 1..n {
            w += d[u][v] as i128;
        }
    }
    (mo, mo_e, w)
}

use mostar_core::polymer::{MonomerHandle, PolymerKind, PolymerSpec, TreeEdge};

/// Random monomers on `lo..=hi` vertices with random handles (`x != y`).
pub fn random_monomers(rng: &mut impl Rng, count: usize, lo: usize, hi: usize) -> Vec<MonomerHandle> {
    (0..count)
        .map(|_| {
            let n = rng.gen_range(lo..=hi);
            let p = rng.gen_range(0.1..0.7);
            let g = random_connected(rng, n, p);
            let x = rng.gen_range(0..n);
            let mut y = rng.gen_range(0..n);
            while n > 1 && y == x {
                y = rng.gen_range(0..n);
            }
            MonomerHandle::new(g, x, y)
        })
        .collect()
}

/// Random spanning tree over the monomers with random attachment vertices.
pub fn random_tree_spec(rng: &mut impl Rng, monomers: Vec<MonomerHandle>) -> PolymerSpec {
    let edges = (1..monomers.len())
        .map(|b| {
            let a = rng.gen_range(0..b);
            TreeEdge {
                a,
                va: rng.gen_range(0..monomers[a].graph.vertex_count()),
                b,
                vb: rng.gen_range(0..monomers[b].graph.vertex_count()),
            }
        })
        .collect();
    PolymerSpec::tree(monomers, edges)
}

pub fn random_spec(rng: &mut impl Rng, kind: PolymerKind, count: usize, lo: usize, hi: usize) -> PolymerSpec {
    let monomers = random_monomers(rng, count, lo, hi);
    match kind {
        PolymerKind::Tree => random_tree_spec(rng, monomers),
        _ => PolymerSpec::new(kind, monomers),
    }
}
