#![allow(dead_code)]

use mesp_core::generators::gen_random_connected;
use mesp_core::{build_graph, Graph};
use proptest::prelude::*;

pub const INF: u32 = u32::MAX / 4;

/// Floyd–Warshall over the edge list.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for w in 0..n {
        for u in 0..n {
            for v in 0..n {
                let via = d[u][w] + d[w][v];
                if via < d[u][v] {
                    d[u][v] = via;
                }
            }
        }
    }
    d
}

pub fn set_ecc(d: &[Vec<u32>], set: &[usize]) -> u32 {
    (0..d.len())
        .map(|v| set.iter().map(|&s| d[v][s]).min().unwrap())
        .max()
        .unwrap()
}

/// Every shortest path in the graph, both orientations, found by extending
/// walks one vertex at a time while each prefix stays a shortest path.
pub fn all_shortest_paths(g: &Graph, d: &[Vec<u32>]) -> Vec<Vec<usize>> {
    fn grow(g: &Graph, d: &[Vec<u32>], walk: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(walk.clone());
        let start = walk[0];
        let last = *walk.last().unwrap();
        for &w in g.neighbors(last) {
            if d[start][w] as usize == walk.len() {
                walk.push(w);
                grow(g, d, walk, out);
                walk.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.n() {
        grow(g, d, &mut vec![s], &mut out);
    }
    out
}

pub struct Brute {
    pub k: u32,
    pub diam: u32,
    pub l: u32,
    pub s: u32,
    pub diameters: usize,
}

pub fn brute(g: &Graph) -> Brute {
    let d = floyd_warshall(g);
    let paths = all_shortest_paths(g, &d);
    let k = paths.iter().map(|p| set_ecc(&d, p)).min().unwrap();
    let diam = d.iter().flatten().copied().max().unwrap();
    let diams: Vec<_> = paths
        .iter()
        .filter(|p| p.len() as u32 - 1 == diam && p[0] <= p[p.len() - 1])
        .collect();
    let eccs: Vec<u32> = diams.iter().map(|p| set_ecc(&d, p)).collect();
    Brute {
        k,
        diam,
        l: *eccs.iter().min().unwrap(),
        s: *eccs.iter().max().unwrap(),
        diameters: diams.len(),
    }
}

/// Connected graph from a random spanning tree plus extra random edges.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let parents = proptest::collection::vec(any::<prop::sample::Index>(), n - 1);
            let extra = proptest::collection::vec((0..n, 0..n), 0..=2 * n);
            (Just(n), parents, extra)
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<_> = parents
                .iter()
                .enumerate()
                .map(|(i, p)| (p.index(i + 1), i + 1))
                .collect();
            edges.extend(extra.into_iter().filter(|(u, v)| u != v));
            build_graph(n, &edges).unwrap()
        })
}

/// The seeded corpus shared by the acceptance suite.
pub fn corpus(size: usize) -> Vec<(u64, Graph)> {
    const PS: [f64; 4] = [0.15, 0.3, 0.45, 0.6];
    (0..size as u64)
        .map(|seed| {
            let n = 2 + (seed % 9) as usize;
            let p = PS[(seed / 9 % 4) as usize];
            (seed, gen_random_connected(n, p, seed).unwrap())
        })
        .collect()
}
