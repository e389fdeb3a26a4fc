//! Exact odd chromatic index by exhaustive search.
//!
//! The search colors whole bouquets at once: each group of parallel edges
//! receives a composition of its size into per-color counts. Loops never
//! change a parity, so they are stripped before the search and afterwards
//! take any color already odd at their vertex.

pub mod enumerate;

use crate::coloring::{Color, EdgeColoring};
use crate::error::{precondition, Error, Result};
use crate::multigraph::{EdgeId, MultiGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_k: u32,
    pub node_budget: u64,
    /// Treat colors as interchangeable and only explore canonical color
    /// introductions.
    pub symmetry: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            max_k: 6,
            node_budget: 100_000_000,
            symmetry: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(EdgeColoring),
    Absent,
    /// The node budget ran out before the search space was exhausted.
    Inconclusive,
}

impl SearchOutcome {
    pub fn found(self) -> Option<EdgeColoring> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub chi: u32,
    pub coloring: EdgeColoring,
}

struct Group {
    u: VertexId,
    v: VertexId,
    edges: Vec<EdgeId>,
}

struct Search<'a> {
    groups: Vec<Group>,
    k: usize,
    /// counts[v * k + c]
    counts: Vec<u32>,
    remaining: Vec<u32>,
    assignment: Vec<Vec<u32>>,
    nodes: u64,
    cfg: &'a SearchConfig,
    /// Upper bound on the size of the last color class, if any.
    last_cap: Option<u32>,
    last_used: u32,
}

enum Step {
    Done,
    Fail,
    OutOfBudget,
}

impl Search<'_> {
    fn vertex_ok(&self, x: VertexId) -> bool {
        let row = &self.counts[x * self.k..(x + 1) * self.k];
        let even = row.iter().filter(|&&c| c > 0 && c % 2 == 0).count() as u32;
        let r = self.remaining[x];
        if r < even {
            return false;
        }
        if (r - even) % 2 == 1 {
            // an odd surplus needs a fresh color at x
            return row.contains(&0);
        }
        true
    }

    fn run(&mut self, i: usize, used: usize) -> Step {
        if i == self.groups.len() {
            return Step::Done;
        }
        let mu = self.groups[i].edges.len() as u32;
        let mut comp = vec![0u32; self.k];
        self.compose(i, used, 0, mu, &mut comp)
    }

    /// Enumerate compositions of `rem` over colors `c..k` for group `i`.
    fn compose(&mut self, i: usize, used: usize, c: usize, rem: u32, comp: &mut Vec<u32>) -> Step {
        if c == self.k {
            if rem != 0 {
                return Step::Fail;
            }
            return self.try_assignment(i, used, comp);
        }
        let (lo, hi) = if c == self.k - 1 {
            (rem, rem)
        } else {
            (0, rem)
        };
        let mut hi = hi;
        if self.cfg.symmetry && c >= used {
            // fresh colors: contiguous and non-increasing
            if c > used && comp[c - 1] == 0 {
                if lo > 0 {
                    return Step::Fail;
                }
                hi = 0;
            }
            if c > used {
                hi = hi.min(comp[c - 1]);
            }
        }
        if c == self.k - 1 {
            if let Some(cap) = self.last_cap {
                if self.last_used + rem > cap {
                    return Step::Fail;
                }
            }
        }
        if lo > hi {
            return Step::Fail;
        }
        // larger counts first tends to close bouquets quickly
        for cnt in (lo..=hi).rev() {
            comp[c] = cnt;
            match self.compose(i, used, c + 1, rem - cnt, comp) {
                Step::Done => return Step::Done,
                Step::OutOfBudget => return Step::OutOfBudget,
                Step::Fail => {}
            }
        }
        comp[c] = 0;
        Step::Fail
    }

    fn try_assignment(&mut self, i: usize, used: usize, comp: &[u32]) -> Step {
        self.nodes += 1;
        if self.nodes > self.cfg.node_budget {
            return Step::OutOfBudget;
        }
        let (u, v) = (self.groups[i].u, self.groups[i].v);
        let mu = self.groups[i].edges.len() as u32;
        for (c, &cnt) in comp.iter().enumerate() {
            self.counts[u * self.k + c] += cnt;
            self.counts[v * self.k + c] += cnt;
        }
        self.remaining[u] -= mu;
        self.remaining[v] -= mu;
        let last = comp[self.k - 1];
        self.last_used += last;
        let mut result = Step::Fail;
        if self.vertex_ok(u) && self.vertex_ok(v) {
            self.assignment[i] = comp.to_vec();
            let new_used = used.max(comp.iter().rposition(|&x| x > 0).map_or(0, |p| p + 1));
            result = self.run(i + 1, new_used);
        }
        self.last_used -= last;
        for (c, &cnt) in comp.iter().enumerate() {
            self.counts[u * self.k + c] -= cnt;
            self.counts[v * self.k + c] -= cnt;
        }
        self.remaining[u] += mu;
        self.remaining[v] += mu;
        result
    }
}

/// Bouquets of the loopless part, ordered so that vertices close early.
fn groups_in_order(g: &MultiGraph) -> Vec<Group> {
    // vertex order: BFS from a maximum-degree vertex
    let n = g.n();
    let mut pos = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut starts: Vec<VertexId> = g.vertices().collect();
    starts.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    for s in starts {
        if pos[s] != usize::MAX {
            continue;
        }
        pos[s] = order.len();
        order.push(s);
        let mut head = order.len() - 1;
        while head < order.len() {
            let x = order[head];
            head += 1;
            let mut nb: Vec<VertexId> = g.neighbors(x).into_iter().collect();
            nb.sort_by_key(|&y| std::cmp::Reverse(g.degree(y)));
            for y in nb {
                if pos[y] == usize::MAX {
                    pos[y] = order.len();
                    order.push(y);
                }
            }
        }
    }
    let mut map: std::collections::BTreeMap<(VertexId, VertexId), Vec<EdgeId>> = Default::default();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if a == b {
            continue;
        }
        let key = if pos[a] < pos[b] { (a, b) } else { (b, a) };
        map.entry(key).or_default().push(e);
    }
    let mut groups: Vec<Group> = map.into_iter().map(|((u, v), edges)| Group { u, v, edges }).collect();
    groups.sort_by_key(|gr| (pos[gr.v].max(pos[gr.u]), pos[gr.u].min(pos[gr.v])));
    groups
}

fn check_colorable(g: &MultiGraph) -> Result<()> {
    for v in g.vertices() {
        if g.degree(v) > 0 && g.incident(v).iter().all(|&e| g.is_loop(e)) {
            return Err(Error::NotOddColorable);
        }
    }
    Ok(())
}

/// Give every loop the smallest color already at its vertex, so loops never
/// enlarge the last color class.
fn color_loops(g: &MultiGraph, colors: &mut [Color]) {
    for e in 0..g.m() {
        if g.is_loop(e) {
            let (v, _) = g.endpoints(e);
            let c = g
                .incident(v)
                .iter()
                .filter(|&&f| !g.is_loop(f))
                .map(|&f| colors[f])
                .min()
                .expect("vertex has a link");
            colors[e] = c;
        }
    }
}

fn search(g: &MultiGraph, k: u32, cfg: &SearchConfig, last_cap: Option<u32>) -> Result<SearchOutcome> {
    if k == 0 {
        return precondition("search needs k >= 1");
    }
    check_colorable(g)?;
    let groups = groups_in_order(g);
    let k = k as usize;
    let mut s = Search {
        k,
        counts: vec![0; g.n() * k],
        remaining: g
            .vertices()
            .map(|v| g.incident(v).iter().filter(|&&e| !g.is_loop(e)).count() as u32)
            .collect(),
        assignment: vec![Vec::new(); groups.len()],
        groups,
        nodes: 0,
        cfg,
        last_cap,
        last_used: 0,
    };
    match s.run(0, 0) {
        Step::OutOfBudget => Ok(SearchOutcome::Inconclusive),
        Step::Fail => Ok(SearchOutcome::Absent),
        Step::Done => {
            let mut colors = vec![0 as Color; g.m()];
            for (gr, comp) in s.groups.iter().zip(&s.assignment) {
                let mut it = gr.edges.iter();
                for (c, &cnt) in comp.iter().enumerate() {
                    for _ in 0..cnt {
                        colors[*it.next().unwrap()] = c as Color + 1;
                    }
                }
            }
            color_loops(g, &mut colors);
            Ok(SearchOutcome::Found(EdgeColoring::new(colors)?))
        }
    }
}

/// An odd coloring with colors from `1..=k`, or a proof of absence.
pub fn search_k(g: &MultiGraph, k: u32, cfg: &SearchConfig) -> Result<SearchOutcome> {
    search(g, k, cfg, None)
}

/// Exact odd chromatic index with a witnessing coloring. Fails with
/// [`Error::BudgetExhausted`] if any search is cut short, and with a
/// precondition error if no coloring with at most `max_k` colors exists.
pub fn chi(g: &MultiGraph, cfg: &SearchConfig) -> Result<OracleResult> {
    check_colorable(g)?;
    if g.m() == 0 {
        return Ok(OracleResult {
            chi: 0,
            coloring: EdgeColoring::new(Vec::new())?,
        });
    }
    for k in 1..=cfg.max_k {
        match search_k(g, k, cfg)? {
            SearchOutcome::Found(c) => {
                return Ok(OracleResult {
                    chi: k,
                    coloring: c,
                })
            }
            SearchOutcome::Absent => {}
            SearchOutcome::Inconclusive => return Err(Error::BudgetExhausted(cfg.node_budget)),
        }
    }
    precondition(format!("no odd coloring with at most {} colors", cfg.max_k))
}

/// The least possible size of the fourth color class over odd 4-colorings,
/// with a coloring attaining it; `None` if no odd 4-coloring exists.
pub fn min_fourth_class(g: &MultiGraph, cfg: &SearchConfig) -> Result<Option<(u32, EdgeColoring)>> {
    let no_sym = SearchConfig {
        symmetry: false,
        ..*cfg
    };
    for cap in 0..=g.m() as u32 {
        match search(g, 4, &no_sym, Some(cap))? {
            SearchOutcome::Found(c) => {
                let size = c.colors().iter().filter(|&&x| x == 4).count() as u32;
                return Ok(Some((size, c)));
            }
            SearchOutcome::Absent => {}
            SearchOutcome::Inconclusive => return Err(Error::BudgetExhausted(cfg.node_budget)),
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_odd;
    use crate::multigraph::named::*;

    fn chi_of(g: &MultiGraph) -> u32 {
        let r = chi(g, &SearchConfig::default()).unwrap();
        assert!(verify_odd(g, &r.coloring).unwrap());
        assert_eq!(r.coloring.k() as u32, r.chi);
        r.chi
    }

    #[test]
    fn named_values() {
        assert_eq!(chi_of(&wheel(4)), 4);
        assert_eq!(chi_of(&shannon(2, 2, 2)), 6);
        assert_eq!(chi_of(&cycle(5)), 3);
        assert_eq!(chi_of(&cycle(6)), 2);
        assert_eq!(chi_of(&complete(4)), 1);
        assert_eq!(chi_of(&MultiGraph::new(3)), 0);
    }

    #[test]
    fn search_examples() {
        let cfg = SearchConfig::default();
        assert_eq!(search_k(&complete(3), 2, &cfg).unwrap(), SearchOutcome::Absent);
        assert!(search_k(&complete(3), 3, &cfg).unwrap().found().is_some());
        let k33 = subdivided_once(complete_bipartite(3, 3), 0);
        assert_eq!(search_k(&k33, 3, &cfg).unwrap(), SearchOutcome::Absent);
        let tiny = SearchConfig {
            node_budget: 3,
            ..cfg
        };
        assert_eq!(search_k(&k33, 3, &tiny).unwrap(), SearchOutcome::Inconclusive);
    }

    #[test]
    fn loops() {
        let mut g = path(1);
        g.add_edge(0, 0).unwrap();
        assert_eq!(chi_of(&g), 1);
        let mut h = MultiGraph::new(1);
        h.add_edge(0, 0).unwrap();
        assert_eq!(chi(&h, &SearchConfig::default()), Err(Error::NotOddColorable));
    }

    #[test]
    fn fourth_class() {
        let k33 = subdivided_once(complete_bipartite(3, 3), 0);
        let (size, c) = min_fourth_class(&k33, &SearchConfig::default()).unwrap().unwrap();
        assert_eq!(size, 1);
        assert!(verify_odd(&k33, &c).unwrap());
        assert!(min_fourth_class(&complete(3), &SearchConfig::default()).unwrap().is_some());
    }
}
