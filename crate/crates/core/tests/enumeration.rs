use std::collections::{BTreeMap, HashSet};

use oddchrome::canon::canonical_form;
use oddchrome::oracle::enumerate::{enumerate_s, MAX_EDGES};
use oddchrome::sclass::is_in_s;
use oddchrome::structure::is_connected;
use oddchrome::MultiGraph;

/// Every multiset of `m` vertex pairs on `n` vertices, filtered and deduped.
fn brute(n: usize, m: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut seen = HashSet::new();
    let mut pick = vec![0usize; m];
    fn rec(
        k: usize,
        from: usize,
        n: usize,
        pairs: &[(usize, usize)],
        pick: &mut Vec<usize>,
        seen: &mut HashSet<oddchrome::canon::CanonicalForm>,
    ) {
        if k == pick.len() {
            let edges: Vec<_> = pick.iter().map(|&i| pairs[i]).collect();
            let g = MultiGraph::from_edges(n, &edges).unwrap();
            if is_connected(&g) && is_in_s(&g) {
                seen.insert(canonical_form(&g));
            }
            return;
        }
        for i in from..pairs.len() {
            pick[k] = i;
            rec(k + 1, i, n, pairs, pick, seen);
        }
    }
    rec(0, 0, n, &pairs, &mut pick, &mut seen);
    seen.len()
}

#[test]
fn agrees_with_brute_force() {
    let table = enumerate_s(5, 5).unwrap();
    for n in 1..=5 {
        for m in 1..=5 {
            let got = table.get(&(n, m)).map_or(0, Vec::len);
            assert_eq!(got, brute(n, m), "n = {n}, m = {m}");
        }
    }
}

#[test]
fn golden_counts() {
    let table = enumerate_s(10, 9).unwrap();
    let mut by_m: BTreeMap<usize, usize> = BTreeMap::new();
    for ((_, m), list) in &table {
        *by_m.entry(*m).or_default() += list.len();
    }
    let got: Vec<usize> = by_m.values().copied().collect();
    assert_eq!(got, vec![1, 2, 7, 16, 47, 132, 408, 1318, 4528]);
    for list in table.values() {
        let forms: HashSet<_> = list.iter().map(canonical_form).collect();
        assert_eq!(forms.len(), list.len());
        assert!(list.iter().all(|g| is_in_s(g) && is_connected(g)));
    }
}

#[test]
fn refuses_large_bounds() {
    assert!(enumerate_s(30, MAX_EDGES + 1).is_err());
}
