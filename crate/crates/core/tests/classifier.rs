use oddchrome::census::Runner;
use oddchrome::classifier::{self, CaseTag, Color3Strategy};
use oddchrome::coloring::verify_odd;
use oddchrome::family;
use oddchrome::multigraph::named::*;
use oddchrome::oracle::{self, SearchConfig};
use oddchrome::{Error, MultiGraph};

fn oracle_chi(g: &MultiGraph) -> u32 {
    oracle::chi(g, &SearchConfig::default()).unwrap().chi
}

fn assert_report(g: &MultiGraph, chi: u32, case: CaseTag) {
    let r = classifier::classify(g).unwrap();
    assert_eq!((r.chi, r.case), (chi, case), "{g:?}");
    assert!(verify_odd(g, &r.coloring).unwrap());
    assert_eq!(r.coloring.k(), chi as usize);
    if let Some(e) = r.witness_edge {
        assert_eq!(classifier::fourth_class(&r.coloring).to_vec(), vec![e]);
    }
}

#[test]
fn named_instances() {
    assert_report(&MultiGraph::new(0), 0, CaseTag::Empty);
    assert_report(&star(3), 1, CaseTag::Odd);
    assert_report(&complete(4), 1, CaseTag::Odd);
    assert_report(&heawood(), 1, CaseTag::Odd);
    assert_report(&path(2), 2, CaseTag::QuotientBipartite);
    assert_report(&subdivided_once(complete(4), 0), 3, CaseTag::Otherwise);
    assert_report(&subdivided_once(complete_bipartite(3, 3), 0), 4, CaseTag::FamilyF);
    assert_report(&subdivided_once(complete_bipartite(3, 5), 0), 3, CaseTag::Otherwise);
    assert_report(&subdivided_once(cube(), 0), 4, CaseTag::FamilyF);
    assert_report(&shannon(2, 1, 1), 4, CaseTag::FamilyF);
    assert_report(&shannon(4, 1, 1), 4, CaseTag::FamilyF);
}

#[test]
fn named_instances_agree_with_oracle() {
    let graphs = [
        path(2),
        path(3),
        cycle(3),
        shannon(2, 1, 1),
        shannon(4, 1, 1),
        subdivided_once(complete(4), 0),
        subdivided_once(prism(3), 0),
        subdivided_once(complete_bipartite(3, 3), 0),
        subdivided_once(subdivided_once(complete_bipartite(3, 3), 0), 4),
    ];
    for g in &graphs {
        match classifier::classify(g) {
            Ok(r) => assert_eq!(r.chi, oracle_chi(g), "{g:?}"),
            Err(Error::NotInS) => assert!(!oddchrome::sclass::is_in_s(g)),
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn rejects_inputs_outside_the_domain() {
    assert!(matches!(classifier::classify(&cycle(5)), Err(Error::NotInS)));
    assert!(matches!(classifier::classify(&wheel(4)), Err(Error::NotInS)));
    let two = star(3).disjoint_union(&star(3));
    assert!(matches!(classifier::classify(&two), Err(Error::Disconnected)));
    assert!(classifier::witness_edge(&complete(4)).is_err());
}

#[test]
fn random_members_agree_with_oracle() {
    let graphs: Vec<MultiGraph> = (0u64..)
        .map(|seed| family::gen_s(seed, 10).unwrap())
        .filter(|g| g.m() <= 13)
        .take(1000)
        .collect();
    let cfg = SearchConfig::default();
    let results = Runner::from_env().map(&graphs, |g| {
        let r = classifier::classify(g).unwrap();
        (r.chi, verify_odd(g, &r.coloring).unwrap(), oracle::chi(g, &cfg).unwrap().chi)
    });
    for (g, (chi, ok, want)) in graphs.iter().zip(results) {
        assert!(ok, "{g:?}");
        assert_eq!(chi, want, "{g:?}");
    }
}

#[test]
fn family_f_members_need_four_colors() {
    let graphs: Vec<MultiGraph> = (0..200).map(|seed| family::gen_f(seed, 14).unwrap()).collect();
    let cfg = SearchConfig::default();
    let oracle_values = Runner::from_env().map(&graphs, |g| oracle::chi(g, &cfg).unwrap().chi);
    for (g, want) in graphs.iter().zip(oracle_values) {
        assert_eq!(want, 4, "{g:?}");
        assert_eq!(classifier::decide(g).unwrap(), CaseTag::FamilyF);
        let w = classifier::witness_edge(g).unwrap();
        assert_eq!(w.graph.m(), g.m() - 1);
        assert!(verify_odd(&w.graph, &w.coloring).unwrap());
        assert!(w.coloring.max_color() <= 3);
    }
}

#[test]
fn large_family_f_members_get_a_single_fourth_edge() {
    for seed in 0..20 {
        let g = family::gen_f(seed, 200).unwrap();
        let (c, e) = classifier::color4_singleton(&g).unwrap();
        assert!(verify_odd(&g, &c).unwrap());
        assert_eq!(classifier::fourth_class(&c).to_vec(), vec![e]);
    }
}

#[test]
fn augmentation_handles_complete_bipartite_graphs() {
    for (a, b) in [(3, 5), (5, 5), (3, 7)] {
        let g = subdivided_once(complete_bipartite(a, b), 0);
        let out = classifier::color3_via_augmentation(&g).unwrap();
        assert!(verify_odd(&g, &out.coloring).unwrap());
        assert!(out.coloring.max_color() <= 3);
        let (_, strategy) = classifier::color3_traced(&g).unwrap();
        assert!(matches!(strategy, Color3Strategy::Augmentation(_)), "K{a},{b}: {strategy:?}");
    }
}
