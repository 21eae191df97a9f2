//! The search oracles against naive brute force on small random graphs.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use recgraph::euler::leastcode_euler;
use recgraph::oracles::{
    enumerate_colorings, enumerate_euler_paths, euler_path, euler_start, hamilton_paths, has_euler_path,
};
use recgraph::FiniteGraph;

fn random_graph(rng: &mut ChaCha8Rng, n: u64, p: f64) -> FiniteGraph {
    let edges: Vec<_> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    FiniteGraph::new(0..n, edges).unwrap()
}

fn permutations(items: &[u64]) -> Vec<Vec<u64>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

fn norm(u: u64, v: u64) -> (u64, u64) {
    (u.min(v), u.max(v))
}

fn sorted_edges(vertices: &[u64]) -> Vec<(u64, u64)> {
    let mut e: Vec<_> = vertices.windows(2).map(|w| norm(w[0], w[1])).collect();
    e.sort();
    e
}

#[test]
fn coloring_counts_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let n = rng.gen_range(0..7);
        let g = random_graph(&mut rng, n, 0.4);
        for k in 1..4usize {
            let brute = (0..k.pow(n as u32))
                .filter(|&code| {
                    let color = |v: u64| (code / k.pow(v as u32)) % k;
                    g.edges().all(|(u, v)| color(u) != color(v))
                })
                .count();
            assert_eq!(enumerate_colorings(&g, k, None).len(), brute, "{g:?} k={k}");
        }
    }
}

#[test]
fn hamilton_counts_match_permutations() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..40 {
        let n = rng.gen_range(1..7);
        let g = random_graph(&mut rng, n, 0.5);
        let vertices: Vec<u64> = g.vertices().collect();
        let brute: BTreeSet<Vec<u64>> = permutations(&vertices)
            .into_iter()
            .filter(|p| p.windows(2).all(|w| g.has_edge(w[0], w[1])))
            .filter(|p| p.first() <= p.last())
            .collect();
        let found: BTreeSet<Vec<u64>> = hamilton_paths(&g, None).into_iter().map(|p| p.vertices).collect();
        assert_eq!(found, brute, "{g:?}");
    }
}

#[test]
fn euler_enumeration_matches_edge_orderings() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..60 {
        let n = rng.gen_range(2..6);
        let g = random_graph(&mut rng, n, 0.5);
        let edges: Vec<(u64, u64)> = g.edges().collect();
        if edges.len() > 6 {
            continue;
        }
        let Some(start) = euler_start(&g) else {
            assert!(!has_euler_path(&g) || edges.is_empty());
            continue;
        };
        // walk every ordering of the edges from `start`
        let idx: Vec<u64> = (0..edges.len() as u64).collect();
        let mut brute = BTreeSet::new();
        for order in permutations(&idx) {
            let mut walk = vec![start];
            let ok = order.iter().all(|&i| {
                let (u, v) = edges[i as usize];
                let at = *walk.last().unwrap();
                let next = if at == u {
                    v
                } else if at == v {
                    u
                } else {
                    return false;
                };
                walk.push(next);
                true
            });
            if ok {
                brute.insert(walk);
            }
        }
        let found: BTreeSet<Vec<u64>> =
            enumerate_euler_paths(&g, start, None).into_iter().map(|p| p.vertices).collect();
        assert_eq!(found, brute, "{g:?}");
    }
}

#[test]
fn leastcode_covers_the_same_edges_as_hierholzer() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let mut tested = 0;
    while tested < 20 {
        let n = rng.gen_range(2..9);
        let g = random_graph(&mut rng, n, 0.45);
        let Some(reference) = euler_path(&g) else { continue };
        if g.edge_count() == 0 {
            continue;
        }
        let start = euler_start(&g).unwrap();
        let least = leastcode_euler(&g, start).unwrap();
        least.validate(&g).unwrap();
        assert_eq!(sorted_edges(&least.vertices), sorted_edges(&reference.vertices));
        tested += 1;
    }
}
