//! Randomized invariants, 10 000 cases each.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use oddchrome::canon::{canonical_form, is_isomorphic};
use oddchrome::classifier;
use oddchrome::coloring::{self, verify_odd, verify_odd_away_from};
use oddchrome::family;
use oddchrome::io;
use oddchrome::sclass;
use oddchrome::structure;
use oddchrome::tjoin::{self, TJoinSpec};
use oddchrome::{EdgeSubset, MultiGraph};

const CASES: u32 = 10_000;

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(CASES)
}

/// Arbitrary multigraph on `1..=max_n` vertices, loops allowed.
fn multigraph(max_n: usize, max_m: usize) -> impl Strategy<Value = MultiGraph> {
    multigraph_with(max_n, 0, max_m)
}

fn multigraph_with(max_n: usize, min_m: usize, max_m: usize) -> impl Strategy<Value = MultiGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n), min_m..=max_m)
            .prop_map(move |edges| MultiGraph::from_edges(n, &edges).unwrap())
    })
}

/// Connected multigraph: a random tree plus extra edges.
fn connected(max_n: usize, max_extra: usize, loops: bool) -> impl Strategy<Value = MultiGraph> {
    connected_on(1..=max_n, max_extra, loops)
}

fn connected_on(
    order: impl Strategy<Value = usize>,
    max_extra: usize,
    loops: bool,
) -> impl Strategy<Value = MultiGraph> {
    order.prop_flat_map(move |n| {
        let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|v| (0..v).boxed()).collect();
        (parents, proptest::collection::vec((0..n, 0..n), 0..=max_extra)).prop_map(move |(parents, extra)| {
            let mut g = MultiGraph::new(n);
            for (i, p) in parents.into_iter().enumerate() {
                g.add_edge(p, i + 1).unwrap();
            }
            for (a, b) in extra {
                if a != b || loops {
                    g.add_edge(a, b).unwrap();
                }
            }
            g
        })
    })
}

/// Connected, loopless, exactly one cycle (possibly a digon).
fn unicyclic(max_n: usize) -> impl Strategy<Value = MultiGraph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|v| (0..v).boxed()).collect();
        (parents, (0..n, 1..n)).prop_map(move |(parents, (a, shift))| {
            let mut g = MultiGraph::new(n);
            for (i, p) in parents.into_iter().enumerate() {
                g.add_edge(p, i + 1).unwrap();
            }
            g.add_edge(a, (a + shift) % n).unwrap();
            g
        })
    })
}

/// Random forest on up to `max_n` vertices.
fn forest(max_n: usize) -> impl Strategy<Value = MultiGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let parents: Vec<BoxedStrategy<Option<usize>>> =
            (1..n).map(|v| proptest::option::weighted(0.85, 0..v).boxed()).collect();
        parents.prop_map(move |ps| {
            let mut g = MultiGraph::new(n);
            for (i, p) in ps.into_iter().enumerate() {
                if let Some(p) = p {
                    g.add_edge(p, i + 1).unwrap();
                }
            }
            g
        })
    })
}

fn relabel(g: &MultiGraph, seed: u64) -> MultiGraph {
    family::shuffled(g, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn even_subset(n: usize, bits: &[bool]) -> Vec<usize> {
    let mut t: Vec<usize> = (0..n).filter(|&i| bits[i % bits.len()]).collect();
    if t.len() % 2 == 1 {
        t.pop();
    }
    t
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn forest_colorings_are_odd_away_from_the_anchor(
        f in forest(50),
        anchor in any::<prop::sample::Index>(),
        use_anchor in any::<bool>(),
        seed_bits in proptest::collection::vec(0u8..3, 0..8),
    ) {
        let v = use_anchor.then(|| anchor.index(f.n()));
        let seed: Vec<(usize, u32)> = match v {
            Some(v) => f
                .incident_edges(v)
                .into_iter()
                .zip(seed_bits.iter())
                .filter(|(_, &b)| b > 0)
                .map(|(e, &b)| (e, b as u32))
                .collect(),
            None => Vec::new(),
        };
        let c = coloring::forest_color2(&f, v, &seed).unwrap();
        prop_assert!(c.max_color() <= 2);
        for &(e, col) in &seed {
            prop_assert_eq!(c.color(e), col);
        }
        match v {
            Some(v) => prop_assert!(verify_odd_away_from(&f, &c, v).unwrap()),
            None => prop_assert!(verify_odd(&f, &c).unwrap()),
        }
    }

    #[test]
    fn t_joins_have_the_prescribed_parities(
        g in connected(12, 14, true),
        bits in proptest::collection::vec(any::<bool>(), 1..12),
        bits2 in proptest::collection::vec(any::<bool>(), 1..12),
    ) {
        let t1 = even_subset(g.n(), &bits);
        let t2 = even_subset(g.n(), &bits2);
        let s1 = TJoinSpec::new(&g, &t1).unwrap();
        let s2 = TJoinSpec::new(&g, &t2).unwrap();
        prop_assert!(tjoin::t_join_exists(&s1));
        let forest = tjoin::t_join_forest(&s1).unwrap();
        let coforest = tjoin::t_join_coforest(&s1).unwrap();
        prop_assert!(tjoin::is_t_join(&g, &forest, &s1.t));
        prop_assert!(tjoin::is_t_join(&g, &coforest, &s1.t));
        prop_assert!(tjoin::is_acyclic(&g, &forest));
        prop_assert!(tjoin::is_acyclic(&g, &coforest.complement()));
        let other = tjoin::t_join_forest(&s2).unwrap();
        let sum = forest.symmetric_difference(&other).unwrap();
        let t12: Vec<bool> = (0..g.n()).map(|v| s1.t[v] != s2.t[v]).collect();
        prop_assert!(tjoin::is_t_join(&g, &sum, &t12));
    }

    #[test]
    fn odd_coforests_leave_a_forest(g in connected(14, 16, true)) {
        match tjoin::spanning_odd_coforest(&g) {
            Ok(h) => {
                prop_assert!(g.n() % 2 == 0);
                prop_assert!(g.vertices().all(|v| g.degree_in(&h, v) % 2 == 1));
                prop_assert!(tjoin::is_acyclic(&g, &h.complement()));
            }
            Err(_) => prop_assert!(g.n() % 2 == 1),
        }
    }

    #[test]
    fn coforest_avoiding_a_vertex(
        g in connected_on(2..=10usize, 14, false),
        pick in any::<prop::sample::Index>(),
        bits in proptest::collection::vec(any::<bool>(), 1..10),
    ) {
        let bd = structure::blocks(&g);
        let candidates: Vec<usize> = g.vertices().filter(|&v| g.degree(v) > 0 && !bd.is_cut_vertex(v)).collect();
        let v = candidates[pick.index(candidates.len())];
        let e = g.incident_edges(v)[0];
        let t = even_subset(g.n(), &bits);
        let h = tjoin::coforest_avoiding_vertex(&g, v, e, &t).unwrap();
        let spec = TJoinSpec::new(&g, &t).unwrap();
        prop_assert!(tjoin::is_t_join(&g, &h, &spec.t));
        let rest = h.complement();
        prop_assert!(tjoin::is_acyclic(&g, &rest));
        prop_assert!(g.incident_edges(v).into_iter().all(|f| f == e || h.contains(f)));
    }

    #[test]
    fn subdivide_then_suppress_is_identity(g in multigraph_with(7, 1, 9), pick in any::<prop::sample::Index>()) {
        let e = pick.index(g.m());
        let mut s = g.clone();
        s.subdivide(e, 1);
        let back = s.suppress(s.n() - 1).unwrap().graph;
        prop_assert!(is_isomorphic(&back, &g));
        prop_assert_eq!(s.m(), g.m() + 1);
    }

    #[test]
    fn split_then_identify_is_identity(g in multigraph(8, 12), pick in any::<prop::sample::Index>(), mask in any::<u32>()) {
        let v = pick.index(g.n());
        let inc = g.incident_edges(v);
        let (first, second): (Vec<usize>, Vec<usize>) =
            inc.iter().enumerate().fold((vec![], vec![]), |(mut a, mut b), (i, &e)| {
                if mask >> (i % 32) & 1 == 0 { a.push(e) } else { b.push(e) }
                (a, b)
            });
        let s = g.split(v, &first, &second).unwrap();
        let back = s.graph.identify(v, s.graph.n() - 1).unwrap().graph;
        let norm = |h: &MultiGraph| -> Vec<(usize, usize)> {
            h.edges().iter().map(|&(a, b)| (a.min(b), a.max(b))).collect()
        };
        prop_assert_eq!(norm(&back), norm(&g));
    }

    #[test]
    fn handshake_and_subset_algebra(g in multigraph(10, 16), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let total: usize = g.vertices().map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.m());
        let set = |bits: u64| EdgeSubset::from_ids(g.m(), (0..g.m()).filter(|&e| bits >> (e % 64) & 1 == 1)).unwrap();
        let (x, y, z) = (set(a), set(b), set(c));
        prop_assert_eq!(g.edge_complement(&g.edge_complement(&x).unwrap()).unwrap(), x.clone());
        prop_assert_eq!(x.symmetric_difference(&y).unwrap(), y.symmetric_difference(&x).unwrap());
        let left = x.symmetric_difference(&y).unwrap().symmetric_difference(&z).unwrap();
        let right = x.symmetric_difference(&y.symmetric_difference(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn parity_quotient_ignores_labels(seed in any::<u64>(), n in 2usize..14, relabel_seed in any::<u64>()) {
        let g = family::gen_s(seed, n).unwrap();
        let h = relabel(&g, relabel_seed);
        let q1 = sclass::parity_quotient(&sclass::subdivision_structure(&g).unwrap());
        let q2 = sclass::parity_quotient(&sclass::subdivision_structure(&h).unwrap());
        prop_assert_eq!(canonical_form(&q1.h), canonical_form(&q2.h));
        prop_assert_eq!(structure::is_bipartite(&q1.h), structure::is_bipartite(&q2.h));
    }

    #[test]
    fn thread_lengths_count_two_vertices(seed in any::<u64>(), n in 2usize..30) {
        let g = family::gen_s(seed, n).unwrap();
        let s = sclass::subdivision_structure(&g).unwrap();
        let interior: usize = s.threads.iter().map(|t| t.len() - 1).sum();
        prop_assert_eq!(interior, g.vertices_of_degree(2).len());
        prop_assert!(sclass::is_in_s_by_suppression(&g));
    }

    #[test]
    fn classifier_is_sound_and_label_free(seed in any::<u64>(), n in 2usize..24, relabel_seed in any::<u64>()) {
        let g = family::gen_s(seed, n).unwrap();
        let r = classifier::classify(&g).unwrap();
        prop_assert!(verify_odd(&g, &r.coloring).unwrap());
        prop_assert_eq!(r.coloring.k(), r.chi as usize);
        prop_assert_eq!(r.witness_edge.is_some(), r.chi == 4);
        let h = relabel(&g, relabel_seed);
        prop_assert_eq!(classifier::decide(&h).unwrap().chi(), r.chi);
    }

    #[test]
    fn canonical_form_ignores_labels(g in multigraph(8, 12), seed in any::<u64>()) {
        prop_assert_eq!(canonical_form(&g), canonical_form(&relabel(&g, seed)));
        prop_assert!(is_isomorphic(&canonical_form(&g).to_graph(), &g));
    }

    #[test]
    fn mel_round_trip(g in multigraph(20, 40)) {
        prop_assert_eq!(io::parse_mel(&io::serialize_mel(&g)).unwrap(), g);
    }

    #[test]
    fn unicyclic_colorings(g in unicyclic(16)) {
        prop_assume!(!g.is_odd_graph());
        let chi = coloring::unicyclic_chi(&g).unwrap();
        let c = coloring::unicyclic_color(&g).unwrap();
        prop_assert!(verify_odd(&g, &c).unwrap());
        prop_assert_eq!(c.k(), chi as usize);
    }

    #[test]
    fn even_order_three_colorings(g in connected_on((1..=8usize).prop_map(|k| 2 * k), 20, false)) {
        let c = coloring::even_order_color3(&g).unwrap();
        prop_assert!(verify_odd(&g, &c).unwrap());
        prop_assert!(c.max_color() <= 3);
    }
}
