//! Exhaustive generation of small connected members of S up to isomorphism.
//!
//! Underlying odd multigraphs (loops and parallel edges allowed) are built
//! from odd degree sequences by filling the multiplicity matrix row by row;
//! every distribution of subdivision vertices over their edges is then
//! applied. A member of S determines its underlying odd graph, so duplicates
//! can only arise inside one odd graph's family and are removed there.

use std::collections::{BTreeMap, HashSet};

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{precondition, Result};
use crate::multigraph::MultiGraph;
use crate::structure;

/// Largest edge bound accepted by [`enumerate_s`].
pub const MAX_EDGES: usize = 12;

/// Non-increasing degree sequences of length `n` summing to `total`, with
/// parts of the given parity filter.
fn degree_sequences(n: usize, total: usize, max_part: usize, odd_only: bool, out: &mut Vec<usize>, acc: &mut Vec<Vec<usize>>) {
    if out.len() == n {
        if total == 0 {
            acc.push(out.clone());
        }
        return;
    }
    let left = n - out.len();
    if total < left {
        return;
    }
    let step = if odd_only { 2 } else { 1 };
    let mut d = max_part.min(total - (left - 1));
    if odd_only && d.is_multiple_of(2) {
        d -= 1;
    }
    while d >= 1 {
        out.push(d);
        degree_sequences(n, total - d, d, odd_only, out, acc);
        out.pop();
        if d <= step {
            break;
        }
        d -= step;
    }
}

/// All symmetric multiplicity matrices realising `deg` (loops count twice
/// on the diagonal), visited as edge lists.
fn realise(deg: &[usize], loops: bool, visit: &mut impl FnMut(&MultiGraph)) {
    let n = deg.len();
    let mut res = deg.to_vec();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn row(
        i: usize,
        j: usize,
        n: usize,
        loops: bool,
        res: &mut [usize],
        edges: &mut Vec<(usize, usize)>,
        visit: &mut dyn FnMut(&MultiGraph),
    ) {
        if i == n {
            let g = MultiGraph::from_edges(n, edges).expect("in range");
            visit(&g);
            return;
        }
        if j == n {
            if res[i] == 0 {
                row(i + 1, i + 1, n, loops, res, edges, visit);
            }
            return;
        }
        // what later columns can still absorb
        let capacity: usize = res[j + 1..].iter().sum();
        if j == i {
            let max_loops = if loops { res[i] / 2 } else { 0 };
            for l in 0..=max_loops {
                let left = res[i] - 2 * l;
                if left > res[i + 1..].iter().sum::<usize>() {
                    continue;
                }
                res[i] = left;
                for _ in 0..l {
                    edges.push((i, i));
                }
                row(i, j + 1, n, loops, res, edges, visit);
                for _ in 0..l {
                    edges.pop();
                }
                res[i] = left + 2 * l;
            }
            return;
        }
        let hi = res[i].min(res[j]);
        for k in 0..=hi {
            if res[i] - k > capacity {
                continue;
            }
            res[i] -= k;
            res[j] -= k;
            for _ in 0..k {
                edges.push((i, j));
            }
            row(i, j + 1, n, loops, res, edges, visit);
            for _ in 0..k {
                edges.pop();
            }
            res[i] += k;
            res[j] += k;
        }
    }
    row(0, 0, n, loops, &mut res, &mut edges, visit);
}

/// Connected multigraphs with exactly `m` edges and between 1 and `max_n`
/// vertices, one per isomorphism class.
pub fn connected_multigraphs(m: usize, max_n: usize, odd_only: bool, loops: bool) -> Vec<MultiGraph> {
    let mut out = Vec::new();
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let step = if odd_only { 2 } else { 1 };
    let first = if odd_only { 2 } else { 1 };
    for n in (first..=max_n.min(m + 1)).step_by(step) {
        let mut seqs = Vec::new();
        degree_sequences(n, 2 * m, 2 * m, odd_only, &mut Vec::new(), &mut seqs);
        for deg in seqs {
            realise(&deg, loops, &mut |g: &MultiGraph| {
                if structure::is_connected(g) {
                    let f = canonical_form(g);
                    if !seen.contains(&f) {
                        seen.insert(f.clone());
                        out.push(f.to_graph());
                    }
                }
            });
        }
    }
    out.sort_by_key(canonical_form);
    out
}

/// Connected odd multigraphs (loops allowed) with exactly `m` edges and at
/// most `max_n` vertices, one per isomorphism class.
pub fn odd_multigraphs(m: usize, max_n: usize) -> Vec<MultiGraph> {
    connected_multigraphs(m, max_n, true, true)
}

fn compositions(total: usize, parts: usize, cur: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if cur.len() + 1 == parts {
        cur.push(total);
        visit(cur);
        cur.pop();
        return;
    }
    for x in 0..=total {
        cur.push(x);
        compositions(total - x, parts, cur, visit);
        cur.pop();
    }
}

/// All connected members of S with `n <= max_n` and `m <= max_m`, up to
/// isomorphism, grouped by (n, m).
pub fn enumerate_s(max_n: usize, max_m: usize) -> Result<BTreeMap<(usize, usize), Vec<MultiGraph>>> {
    if max_m > MAX_EDGES {
        return precondition(format!("enumeration is limited to at most {MAX_EDGES} edges"));
    }
    let mut out: BTreeMap<(usize, usize), Vec<MultiGraph>> = BTreeMap::new();
    for m0 in 1..=max_m {
        for g0 in odd_multigraphs(m0, max_n) {
            let mut seen: HashSet<CanonicalForm> = HashSet::new();
            for s in 0..=(max_m - m0).min(max_n.saturating_sub(g0.n())) {
                compositions(s, m0, &mut Vec::new(), &mut |split: &[usize]| {
                    let mut g = g0.clone();
                    for (e, &k) in split.iter().enumerate() {
                        if k > 0 {
                            g.subdivide(e, k);
                        }
                    }
                    let f = canonical_form(&g);
                    if seen.insert(f.clone()) {
                        out.entry((g.n(), g.m())).or_default().push(f.to_graph());
                    }
                });
            }
        }
    }
    for list in out.values_mut() {
        list.sort_by_key(canonical_form);
    }
    Ok(out)
}

/// Flattened [`enumerate_s`] in (n, m, canonical) order.
pub fn enumerate_s_list(max_n: usize, max_m: usize) -> Result<Vec<MultiGraph>> {
    Ok(enumerate_s(max_n, max_m)?.into_values().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::multigraph::named::*;
    use crate::sclass::is_in_s;

    #[test]
    fn small_odd_graphs() {
        // m = 1: K2 only
        assert_eq!(odd_multigraphs(1, 10).len(), 1);
        // m = 2: a vertex with a loop and a pendant edge (degrees 3, 1)
        let two = odd_multigraphs(2, 10);
        assert_eq!(two.len(), 1);
        // m = 3: dipole(3), star K1,3, K2 with a loop at each end, and the
        // path-with-loop shapes
        let three = odd_multigraphs(3, 10);
        assert!(three.iter().any(|g| is_isomorphic(g, &dipole(3))));
        assert!(three.iter().any(|g| is_isomorphic(g, &star(3))));
    }

    #[test]
    fn includes_expected_members() {
        let all = enumerate_s_list(3, 4).unwrap();
        assert!(all.iter().all(is_in_s));
        assert!(all.iter().any(|g| is_isomorphic(g, &shannon(2, 1, 1))));
        assert!(all.iter().any(|g| is_isomorphic(g, &path(1))));
        assert!(all.iter().any(|g| is_isomorphic(g, &path(2))));
        assert!(enumerate_s(20, 40).is_err());
    }
}
