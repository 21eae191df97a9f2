use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use recgraph::colorability_seq::{build_clique_gadget, decide_colorability_window};
use recgraph::euler::{
    a_id, bean_euler_chunked, build_euler_gadget, decode_euler, leastcode_euler, pre_eulerian_check, OnlineEuler,
};
use recgraph::graph::{DisjointInjections, InjectionStream, Tree};
use recgraph::hamilton::{
    build_hamilton_range_gadget, decide_hamilton_corpus, decode_hamilton_range, extract_tree_path, harel_reduce,
};
use recgraph::online_coloring::{greedy_color, schmerl_color, OnlineColorer, PromiseMode, SeamColorer};
use recgraph::oracles::{
    enumerate_euler_paths, euler_path, euler_start, hamilton_paths, is_k_colorable, odd_vertices, tree_has_deep_path,
};
use recgraph::separation::build_flip_gadget;
use recgraph::verify::{random_banded_stream, random_tree};
use recgraph::{Event, FiniteGraph, GraphStream};

fn graph(max_n: u64) -> impl Strategy<Value = FiniteGraph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(u64, u64)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
            let edges = pairs.iter().zip(mask).filter(|(_, keep)| *keep).map(|(e, _)| *e);
            FiniteGraph::new(0..n, edges).unwrap()
        })
    })
}

/// The edges of a random trail, so the graph always has an Euler path.
fn trail_graph() -> impl Strategy<Value = FiniteGraph> {
    (2u64..8, proptest::collection::vec(0u64..8, 1..16)).prop_map(|(n, moves)| {
        let mut at = 0;
        let mut edges = BTreeSet::new();
        for m in moves {
            let next = m % n;
            let e = (at.min(next), at.max(next));
            if next != at && edges.insert(e) {
                at = next;
            }
        }
        let vertices: BTreeSet<u64> = edges.iter().flat_map(|&(u, v)| [u, v]).chain([0]).collect();
        // compact ids so that every vertex of the stream settles
        FiniteGraph::new(vertices, edges).unwrap().compact().0
    })
}

fn values(max: usize, below: u64) -> impl Strategy<Value = Vec<u64>> {
    proptest::sample::subsequence((0..below).collect::<Vec<_>>(), 0..=max).prop_shuffle()
}

fn norm(e: (u64, u64)) -> (u64, u64) {
    (e.0.min(e.1), e.0.max(e.1))
}

fn sorted_steps(trace: &recgraph::PathTrace) -> Vec<(u64, u64)> {
    let mut steps: Vec<_> = trace.steps().map(norm).collect();
    steps.sort();
    steps
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn revealed_prefixes_grow(g in graph(7)) {
        let s = GraphStream::bounded_from_graph(&g);
        for t in 0..s.len() {
            let r = s.revealed(t).unwrap();
            let next = s.revealed(t + 1).unwrap();
            prop_assert!(r.vertex_set().is_subset(&next.vertex_set()));
            prop_assert!(r.edge_set().is_subset(&next.edge_set()));
        }
    }

    #[test]
    fn burst_boundaries_are_induced(g in graph(7)) {
        // with edges as separate events, induced only holds between bursts
        let s = GraphStream::bounded_from_graph(&g);
        let full = s.full();
        let boundaries = (0..=s.len()).filter(|&t| t == s.len() || matches!(s.events()[t], Event::Vertex(_)));
        for t in boundaries {
            let r = s.revealed(t).unwrap();
            prop_assert_eq!(full.induced(&r.vertex_set()), r);
        }
    }

    #[test]
    fn settled_vertices_are_stable(g in graph(7)) {
        let s = GraphStream::bounded_from_graph(&g);
        let mut before = BTreeSet::new();
        for t in 0..=s.len() {
            let now = s.settled_vertices(t).unwrap();
            prop_assert!(before.is_subset(&now));
            let r = s.revealed(t).unwrap();
            for &v in &now {
                prop_assert_eq!(r.neighbor_set(v), g.neighbor_set(v));
            }
            before = now;
        }
    }

    #[test]
    fn double_delete_recovers_subgraph(g in graph(7), mask in proptest::collection::vec(any::<bool>(), 21)) {
        let kept: Vec<_> = g.edges().zip(mask).filter(|(_, k)| *k).map(|(e, _)| e).collect();
        let h = FiniteGraph::new(g.vertices(), kept).unwrap();
        let back = g.delete_subgraph(&g.delete_subgraph(&h).unwrap()).unwrap();
        prop_assert_eq!(back.edge_set(), h.edge_set());
    }

    #[test]
    fn components_partition(g in graph(8)) {
        let parts = g.components();
        let mut union = BTreeSet::new();
        for p in &parts {
            prop_assert!(p.iter().all(|v| union.insert(*v)));
            prop_assert!(g.induced(p).is_connected());
        }
        prop_assert_eq!(union, g.vertex_set());
        for (u, v) in g.edges() {
            prop_assert!(parts.iter().any(|p| p.contains(&u) && p.contains(&v)));
        }
    }

    #[test]
    fn colorability_is_monotone(g in graph(7), k in 1usize..4) {
        if let Some(chi) = is_k_colorable(&g, k) {
            prop_assert!(chi.is_proper(&g));
            let widened = recgraph::Coloring::new(chi.colors.clone(), k + 1);
            prop_assert!(widened.check(&g).is_ok());
            prop_assert!(is_k_colorable(&g, k + 1).is_some());
        }
    }

    #[test]
    fn euler_path_iff_condition(g in graph(7)) {
        let busy: BTreeSet<u64> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
        let odd = odd_vertices(&g).len();
        let condition = busy.is_empty() || (g.induced(&busy).is_connected() && (odd == 0 || odd == 2));
        match euler_path(&g) {
            Some(trace) => {
                prop_assert!(condition);
                prop_assert!(trace.validate(&g).is_ok());
                let mut edges: Vec<_> = g.edges().collect();
                edges.sort();
                prop_assert_eq!(sorted_steps(&trace), edges);
            }
            None => prop_assert!(!condition),
        }
    }

    #[test]
    fn hamilton_traces_are_canonical(g in graph(6)) {
        let paths = hamilton_paths(&g, None);
        let mut seen = BTreeSet::new();
        for p in &paths {
            prop_assert!(p.validate(&g).is_ok());
            prop_assert!(p.first() <= p.last());
            let mut rev = p.vertices.clone();
            rev.reverse();
            prop_assert!(seen.insert(p.vertices.clone()));
            prop_assert!(g.vertex_count() == 1 || !seen.contains(&rev));
        }
    }

    #[test]
    fn online_colorings_are_proper(seed in any::<u64>(), k in 2usize..4, n in 1u64..40, width in 1u64..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_banded_stream(&mut rng, n, k, width, 0.6);
        let full = s.full();
        let greedy = greedy_color(&s).unwrap();
        let seamed = schmerl_color(&s, k, PromiseMode::Checked).unwrap();
        for log in [&greedy, &seamed] {
            let chi = recgraph::Coloring::new(log.colors(), usize::MAX);
            prop_assert!(chi.is_proper(&full));
            prop_assert_eq!(log.len() as u64, n);
        }
        prop_assert!(seamed.max_color().unwrap() <= 2 * k - 2);
        // irrevocable: whatever was committed after t events stays as it was
        for t in [s.len() / 3, s.len() / 2, s.len() - 1] {
            let mut c = SeamColorer::new(s.bound().cloned().unwrap(), k, PromiseMode::Trusted).unwrap();
            let early: Vec<_> = c.feed(&s.events()[..t]).unwrap().iter().map(|c| (c.vertex, c.color)).collect();
            let expected: Vec<_> = seamed.up_to(t).map(|c| (c.vertex, c.color)).collect();
            prop_assert_eq!(early, expected);
        }
    }

    #[test]
    fn flip_prefixes_are_colorable(k in 2usize..4, f in values(3, 8), g in values(3, 8), extra in 0usize..3) {
        let g: Vec<u64> = g.into_iter().filter(|y| !f.contains(y)).collect();
        let steps = f.len().min(g.len());
        let fg = DisjointInjections::from_values(f[..steps].to_vec(), g[..steps].to_vec()).unwrap();
        for t in 0..=steps {
            let gadget = build_flip_gadget(k, &fg, t, steps + extra, Some(8)).unwrap();
            prop_assert!(is_k_colorable(gadget.graph(), k).is_some());
        }
    }

    #[test]
    fn pre_eulerian_has_no_false_positives(g in trail_graph()) {
        let s = GraphStream::bounded_from_graph(&g);
        for t in 0..=s.len() {
            let verdict = pre_eulerian_check(&s, t).unwrap();
            prop_assert!(!verdict.is_violated(), "stage {}: {:?}", t, verdict);
        }
    }

    #[test]
    fn online_euler_emission_only_grows(g in trail_graph(), chunk in 1usize..6) {
        let s = GraphStream::bounded_from_graph(&g);
        let mut b = OnlineEuler::new(s.bound().cloned().unwrap());
        let mut last = Vec::new();
        for ev in s.events() {
            b.feed(std::slice::from_ref(ev)).unwrap();
            let now = b.run_so_far().steps.clone();
            prop_assert!(now.starts_with(&last));
            last = now;
        }
        b.finish().unwrap();
        let done = b.run_so_far().clone();
        prop_assert!(done.steps.starts_with(&last));
        prop_assert!(done.trace().validate(&g).is_ok());
        prop_assert_eq!(done.trace(), bean_euler_chunked(&s, chunk).unwrap().trace());
    }

    #[test]
    fn leastcode_is_deterministic_and_valid(g in trail_graph()) {
        prop_assume!(g.edge_count() > 0);
        let start = euler_start(&g).unwrap();
        let a = leastcode_euler(&g, start).unwrap();
        prop_assert!(a.validate(&g).is_ok());
        prop_assert_eq!(a.first(), Some(start));
        prop_assert_eq!(leastcode_euler(&g, start).unwrap(), a);
    }

    #[test]
    fn euler_gadget_decodes_range(f in values(5, 9), window in 10u64..13) {
        let f = InjectionStream::new(f).unwrap();
        let gadget = build_euler_gadget(&f, f.len(), window).unwrap();
        for p in enumerate_euler_paths(gadget.graph(), a_id(0), Some(64)) {
            let decoded = decode_euler(&gadget, &p).unwrap();
            prop_assert_eq!(decoded.members(), &f.range(f.len()));
        }
    }

    #[test]
    fn hamilton_gadget_is_unique(f in values(8, 10), n in 0u64..10, window in 2u64..15) {
        let f = InjectionStream::new(f).unwrap();
        let gadget = build_hamilton_range_gadget(&f, n, window).unwrap();
        let paths = hamilton_paths(gadget.graph(), Some(2));
        prop_assert_eq!(paths.len(), 1);
        let member = f.values().iter().enumerate().any(|(j, &y)| y == n && (j as u64) + 2 < window);
        prop_assert_eq!(decode_hamilton_range(&gadget, &paths[0]).unwrap(), member);
    }

    #[test]
    fn reduction_round_trip(seed in any::<u64>(), depth in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_tree(&mut rng, depth, 3, 0.5);
        let out = harel_reduce(&t).unwrap();
        for p in hamilton_paths(out.graph(), None) {
            let branch = extract_tree_path(&out, &p).unwrap();
            prop_assert!(branch.len() == depth && t.contains(&branch));
        }
        let z = decide_hamilton_corpus(std::slice::from_ref(out.graph()));
        prop_assert_eq!(z.contains(0), tree_has_deep_path(&t, depth).unwrap());
    }

    #[test]
    fn corpus_decisions_follow_their_inputs(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let trees: Vec<Tree> = (0..5).map(|_| random_tree(&mut rng, 2, 2, 0.5)).collect();
        let mut graphs: Vec<FiniteGraph> = trees.iter().map(|t| harel_reduce(t).unwrap().graph().clone()).collect();
        let z = decide_hamilton_corpus(&graphs);
        prop_assert_eq!(&decide_hamilton_corpus(&graphs), &z);
        graphs.reverse();
        let r = decide_hamilton_corpus(&graphs);
        for i in 0..5u64 {
            prop_assert_eq!(z.contains(i), r.contains(4 - i));
        }
    }

    #[test]
    fn clique_verdicts(g in values(6, 10), i in 0u64..10, n in 0u64..12, grow in 0u64..4) {
        let g = InjectionStream::new(g).unwrap();
        let gadget = build_clique_gadget(&g, i, n);
        let v = decide_colorability_window(&gadget);
        prop_assert_eq!(v.is_stopped(), g.values().contains(&i));
        if v.is_stopped() {
            prop_assert!(is_k_colorable(gadget.graph(), v.clique_size() as usize).is_some());
        }
        let wider = decide_colorability_window(&build_clique_gadget(&g, i, n + grow));
        prop_assert!(!v.is_stopped() || wider.is_stopped());
    }
}
