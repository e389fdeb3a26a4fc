//! Connectivity and block structure of multigraphs.
//!
//! Every traversal here walks edge ids rather than endpoint pairs, so a
//! parallel edge back to the DFS parent is recognised as a second route and
//! doubled edges never look like bridges.

use std::collections::VecDeque;

use crate::error::{precondition, Error, Result};
use crate::multigraph::{Derived, EdgeId, EdgeSubset, MultiGraph, VertexId};

/// Blocks and cut-vertices of a graph.
///
/// A loop forms a block of its own, so a vertex carrying a loop next to other
/// edges counts as a cut-vertex of the block-cutpoint forest. Isolated
/// vertices lie in no block.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub blocks: Vec<EdgeSubset>,
    /// Vertex set of each block, ascending.
    pub block_vertices: Vec<Vec<VertexId>>,
    pub cut_vertices: Vec<VertexId>,
    /// (cut-vertex, block index) incidences of the block-cutpoint graph.
    pub bcp_edges: Vec<(VertexId, usize)>,
    /// Non-cut vertices of each block.
    pub internal: Vec<Vec<VertexId>>,
}

impl BlockDecomposition {
    pub fn is_cut_vertex(&self, v: VertexId) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }

    /// A block with a single non-loop edge and no parallel partner.
    pub fn is_trivial_block(&self, g: &MultiGraph, b: usize) -> bool {
        self.blocks[b].len() == 1 && self.blocks[b].iter().all(|e| !g.is_loop(e))
    }
}

/// A 2-edge-cut `[X, X̄]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoEdgeCut {
    pub edges: (EdgeId, EdgeId),
    pub x: Vec<VertexId>,
    pub x_bar: Vec<VertexId>,
}

impl TwoEdgeCut {
    pub fn is_nontrivial(&self) -> bool {
        self.x.len() >= 2 && self.x_bar.len() >= 2
    }
}

/// Component id of every vertex, plus the number of components.
pub fn component_ids(g: &MultiGraph) -> (Vec<usize>, usize) {
    component_ids_masked(g, None, &[])
}

fn component_ids_masked(
    g: &MultiGraph,
    removed_edges: Option<&EdgeSubset>,
    removed_vertices: &[VertexId],
) -> (Vec<usize>, usize) {
    const NONE: usize = usize::MAX;
    let mut comp = vec![NONE; g.n()];
    let mut blocked = vec![false; g.n()];
    for &v in removed_vertices {
        blocked[v] = true;
    }
    let mut count = 0;
    let mut queue = VecDeque::new();
    for s in g.vertices() {
        if comp[s] != NONE || blocked[s] {
            continue;
        }
        comp[s] = count;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            for &e in g.incident(x) {
                if removed_edges.is_some_and(|r| r.contains(e)) {
                    continue;
                }
                let y = g.other_end(e, x);
                if comp[y] == NONE && !blocked[y] {
                    comp[y] = count;
                    queue.push_back(y);
                }
            }
        }
        count += 1;
    }
    (comp, count)
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &MultiGraph) -> Vec<Vec<VertexId>> {
    let (ids, k) = component_ids(g);
    let mut parts = vec![Vec::new(); k];
    for v in g.vertices() {
        parts[ids[v]].push(v);
    }
    parts
}

pub fn is_connected(g: &MultiGraph) -> bool {
    g.n() <= 1 || component_ids(g).1 == 1
}

/// Hopcroft-Tarjan block decomposition on edge ids.
pub fn blocks(g: &MultiGraph) -> BlockDecomposition {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut blocks: Vec<EdgeSubset> = Vec::new();

    for root in g.vertices() {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent edge, next incident index)
        let mut frames: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        while let Some(&mut (v, parent_edge, ref mut idx)) = frames.last_mut() {
            if *idx < g.incident(v).len() {
                let e = g.incident(v)[*idx];
                *idx += 1;
                if g.is_loop(e) || Some(e) == parent_edge {
                    continue;
                }
                let w = g.other_end(e, v);
                if disc[w] == UNSEEN {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, Some(e), 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let (Some(pe), Some(&(parent, _, _))) = (parent_edge, frames.last()) {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut block = EdgeSubset::empty(g.m());
                        while let Some(f) = edge_stack.pop() {
                            block.insert(f);
                            if f == pe {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    for e in 0..g.m() {
        if g.is_loop(e) {
            blocks.push(EdgeSubset::from_ids(g.m(), [e]).unwrap());
        }
    }
    // deterministic order: by smallest edge id
    blocks.sort_by_key(|b| b.iter().next());

    let mut membership = vec![0usize; n];
    let mut block_vertices = Vec::with_capacity(blocks.len());
    for b in &blocks {
        let mut vs: Vec<VertexId> = b
            .iter()
            .flat_map(|e| {
                let (x, y) = g.endpoints(e);
                [x, y]
            })
            .collect();
        vs.sort_unstable();
        vs.dedup();
        for &v in &vs {
            membership[v] += 1;
        }
        block_vertices.push(vs);
    }
    let cut_vertices: Vec<VertexId> = g.vertices().filter(|&v| membership[v] >= 2).collect();
    let mut bcp_edges = Vec::new();
    let mut internal = Vec::new();
    for (i, vs) in block_vertices.iter().enumerate() {
        let mut inner = Vec::new();
        for &v in vs {
            if membership[v] >= 2 {
                bcp_edges.push((v, i));
            } else {
                inner.push(v);
            }
        }
        internal.push(inner);
    }
    BlockDecomposition {
        blocks,
        block_vertices,
        cut_vertices,
        bcp_edges,
        internal,
    }
}

/// Connected, at least one edge, no cut-vertex and no loop-block. A doubled
/// edge qualifies; so does a single edge, which is a trivial block.
pub fn is_two_connected(g: &MultiGraph) -> bool {
    if g.n() < 2 || g.m() == 0 || !is_connected(g) {
        return false;
    }
    let bd = blocks(g);
    bd.blocks.len() == 1
}

pub fn bridges(g: &MultiGraph) -> EdgeSubset {
    let bd = blocks(g);
    let mut out = EdgeSubset::empty(g.m());
    for b in &bd.blocks {
        if b.len() == 1 {
            let e = b.iter().next().unwrap();
            if !g.is_loop(e) {
                out.insert(e);
            }
        }
    }
    out
}

/// Two-sided labelling (`false`/`true`) when the graph is bipartite.
pub fn bipartition(g: &MultiGraph) -> Option<Vec<bool>> {
    let mut side: Vec<Option<bool>> = vec![None; g.n()];
    let mut queue = VecDeque::new();
    for s in g.vertices() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            let sx = side[x].unwrap();
            for &e in g.incident(x) {
                let y = g.other_end(e, x);
                match side[y] {
                    None => {
                        side[y] = Some(!sx);
                        queue.push_back(y);
                    }
                    Some(sy) if sy == sx => return None,
                    _ => {}
                }
            }
        }
    }
    Some(side.into_iter().map(|s| s.unwrap()).collect())
}

pub fn is_bipartite(g: &MultiGraph) -> bool {
    bipartition(g).is_some()
}

/// A disconnecting edge set of size at most `k` (`k` is 1 or 2), if any.
/// A disconnected graph or one of order 1 yields the empty set.
pub fn edge_connectivity_at_most(g: &MultiGraph, k: usize) -> Result<Option<Vec<EdgeId>>> {
    if !(1..=2).contains(&k) {
        return precondition("edge_connectivity_at_most supports k in {1, 2}");
    }
    if g.n() <= 1 || !is_connected(g) {
        return Ok(Some(Vec::new()));
    }
    if let Some(b) = bridges(g).iter().next() {
        return Ok(Some(vec![b]));
    }
    if k == 1 {
        return Ok(None);
    }
    for f1 in 0..g.m() {
        if g.is_loop(f1) {
            continue;
        }
        let minus = g.without_edges(&[f1]);
        if let Some(b) = bridges(&minus.graph).iter().next() {
            let f2 = minus.edge_origin[b].unwrap();
            let mut pair = vec![f1, f2];
            pair.sort_unstable();
            return Ok(Some(pair));
        }
    }
    Ok(None)
}

/// The lexicographically smallest 2-edge-cut `{f1, f2}` whose two sides both
/// have at least two vertices. `x` is the side holding the smaller vertex id.
pub fn nontrivial_two_edge_cut(g: &MultiGraph) -> Result<Option<TwoEdgeCut>> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    for f1 in 0..g.m() {
        if g.is_loop(f1) {
            continue;
        }
        let minus = g.without_edges(&[f1]);
        let mut partners: Vec<EdgeId> = bridges(&minus.graph)
            .iter()
            .map(|b| minus.edge_origin[b].unwrap())
            .filter(|&f2| f2 > f1)
            .collect();
        partners.sort_unstable();
        for f2 in partners {
            if let Some(cut) = two_cut_sides(g, f1, f2) {
                if cut.is_nontrivial() {
                    return Ok(Some(cut));
                }
            }
        }
    }
    Ok(None)
}

/// Sides of `[X, X̄]` if deleting exactly `f1, f2` splits `g` into two parts
/// with both edges crossing.
pub fn two_cut_sides(g: &MultiGraph, f1: EdgeId, f2: EdgeId) -> Option<TwoEdgeCut> {
    let removed = EdgeSubset::from_ids(g.m(), [f1, f2]).ok()?;
    let (ids, k) = component_ids_masked(g, Some(&removed), &[]);
    if k != 2 {
        return None;
    }
    for f in [f1, f2] {
        let (a, b) = g.endpoints(f);
        if ids[a] == ids[b] {
            return None;
        }
    }
    let (x, x_bar): (Vec<VertexId>, Vec<VertexId>) = g.vertices().partition(|&v| ids[v] == ids[0]);
    Some(TwoEdgeCut {
        edges: (f1, f2),
        x,
        x_bar,
    })
}

/// Exhaustive reference for [`nontrivial_two_edge_cut`].
pub fn nontrivial_two_edge_cut_brute(g: &MultiGraph) -> Option<TwoEdgeCut> {
    for f1 in 0..g.m() {
        for f2 in f1 + 1..g.m() {
            if let Some(cut) = two_cut_sides(g, f1, f2) {
                if cut.is_nontrivial() {
                    return Some(cut);
                }
            }
        }
    }
    None
}

/// A cycle, as its vertex sequence and the edges joining consecutive
/// vertices (the last edge closes back to the first vertex).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Cycle {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }
}

/// Visit every cycle through `anchor` (each once per direction of travel
/// is avoided by requiring the first edge id to be smaller than the last).
/// The visitor returns `false` to stop. Returns `false` if stopped early or
/// the `limit` on visited cycles was reached.
pub fn for_each_cycle_through(
    g: &MultiGraph,
    anchor: VertexId,
    limit: usize,
    mut visit: impl FnMut(&Cycle) -> bool,
) -> bool {
    let mut seen = 0usize;
    let mut on_path = vec![false; g.n()];
    // loops at the anchor
    let mut done_loops = Vec::new();
    for &e in g.incident(anchor) {
        if g.is_loop(e) && !done_loops.contains(&e) {
            done_loops.push(e);
            seen += 1;
            if !visit(&Cycle {
                vertices: vec![anchor],
                edges: vec![e],
            }) || seen >= limit
            {
                return false;
            }
        }
    }
    on_path[anchor] = true;
    let starts = g.incident_edges(anchor);
    for &e0 in &starts {
        if g.is_loop(e0) {
            continue;
        }
        let b = g.other_end(e0, anchor);
        let mut vertices = vec![anchor, b];
        let mut edges = vec![e0];
        on_path[b] = true;
        // explicit DFS over (vertex, next incident index)
        let mut stack: Vec<usize> = vec![0];
        let mut stopped = false;
        while let Some(idx) = stack.last_mut() {
            let x = *vertices.last().unwrap();
            if *idx >= g.incident(x).len() {
                stack.pop();
                let y = vertices.pop().unwrap();
                on_path[y] = false;
                edges.pop();
                if vertices.len() < 2 {
                    break;
                }
                continue;
            }
            let e = g.incident(x)[*idx];
            *idx += 1;
            if g.is_loop(e) || edges.contains(&e) {
                continue;
            }
            let y = g.other_end(e, x);
            if y == anchor {
                if e > e0 {
                    edges.push(e);
                    seen += 1;
                    let keep_going = visit(&Cycle {
                        vertices: vertices.clone(),
                        edges: edges.clone(),
                    });
                    edges.pop();
                    if !keep_going || seen >= limit {
                        stopped = true;
                        break;
                    }
                }
                continue;
            }
            if on_path[y] {
                continue;
            }
            on_path[y] = true;
            vertices.push(y);
            edges.push(e);
            stack.push(0);
        }
        for &v in &vertices[1..] {
            on_path[v] = false;
        }
        if stopped {
            return false;
        }
    }
    true
}

/// A simple cycle through every vertex of `required` (at most two) with at
/// least `min_order` vertices, found by exhaustive search.
pub fn cycle_through(g: &MultiGraph, required: &[VertexId], min_order: usize) -> Option<Cycle> {
    assert!(required.len() <= 2, "cycle_through supports at most two required vertices");
    let anchors: Vec<VertexId> = match required.first() {
        Some(&a) => vec![a],
        None => g.vertices().collect(),
    };
    for a in anchors {
        let mut found = None;
        for_each_cycle_through(g, a, usize::MAX, |c| {
            if c.order() >= min_order && required.iter().all(|r| c.vertices.contains(r)) {
                found = Some(c.clone());
                false
            } else {
                true
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Whether `x` lies on a cycle of `g` that avoids every vertex in `blocked`.
pub fn lies_on_cycle_avoiding(g: &MultiGraph, x: VertexId, blocked: &[bool]) -> Option<Cycle> {
    // A loop, a doubled edge or two edges into one component of G - blocked - x.
    let mut first_edge_to: Vec<Option<EdgeId>> = vec![None; g.n()];
    for &e in g.incident(x) {
        if g.is_loop(e) {
            return Some(Cycle {
                vertices: vec![x],
                edges: vec![e],
            });
        }
    }
    let mut mask = blocked.to_vec();
    mask[x] = true;
    let keep: Vec<bool> = mask.iter().map(|b| !b).collect();
    let sub = g.induced_by_mask(&keep);
    let (ids, _) = component_ids(&sub.graph);
    let mut by_comp: std::collections::HashMap<usize, (EdgeId, VertexId)> = Default::default();
    for &e in g.incident(x) {
        let y = g.other_end(e, x);
        if blocked[y] {
            continue;
        }
        if let Some(prev) = first_edge_to[y] {
            return Some(Cycle {
                vertices: vec![x, y],
                edges: vec![prev, e],
            });
        }
        first_edge_to[y] = Some(e);
        let c = ids[sub.vertex_map[y].unwrap()];
        if let Some(&(e1, y1)) = by_comp.get(&c) {
            let path = shortest_path(&sub.graph, sub.vertex_map[y1].unwrap(), sub.vertex_map[y].unwrap())?;
            let mut vertices = vec![x];
            let mut edges = vec![e1];
            for (i, &pv) in path.0.iter().enumerate() {
                vertices.push(sub.vertex_origin[pv].unwrap());
                if i < path.1.len() {
                    edges.push(sub.edge_origin[path.1[i]].unwrap());
                }
            }
            edges.push(e);
            return Some(Cycle { vertices, edges });
        }
        by_comp.insert(c, (e, y));
    }
    None
}

/// BFS path from `s` to `t`: (vertices, edges).
pub fn shortest_path(g: &MultiGraph, s: VertexId, t: VertexId) -> Option<(Vec<VertexId>, Vec<EdgeId>)> {
    let mut via: Vec<Option<EdgeId>> = vec![None; g.n()];
    let mut seen = vec![false; g.n()];
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        if x == t {
            break;
        }
        for &e in g.incident(x) {
            let y = g.other_end(e, x);
            if !seen[y] {
                seen[y] = true;
                via[y] = Some(e);
                queue.push_back(y);
            }
        }
    }
    if !seen[t] {
        return None;
    }
    let mut vertices = vec![t];
    let mut edges = Vec::new();
    let mut cur = t;
    while cur != s {
        let e = via[cur].unwrap();
        edges.push(e);
        cur = g.other_end(e, cur);
        vertices.push(cur);
    }
    vertices.reverse();
    edges.reverse();
    Some((vertices, edges))
}

/// The `v`-lobes of `g`: for each component `V_i` of `G - v`, the subgraph
/// induced by `V_i ∪ {v}`. Loops at `v` are placed in the first lobe so the
/// lobes' edge sets partition `E(G)`.
pub fn lobes(g: &MultiGraph, v: VertexId) -> Result<Vec<Derived>> {
    g.check_vertex(v)?;
    let (_, before) = component_ids(g);
    let (ids, after) = component_ids_masked(g, None, &[v]);
    // components of G - v, ignoring v's own slot
    let comps_after = after;
    if comps_after <= before - 1 + 1 && !(comps_after > before) {
        return precondition(format!("vertex {v} is not a cut-vertex"));
    }
    let mut out = Vec::new();
    let mut first = true;
    let mut comp_ids: Vec<usize> = g
        .vertices()
        .filter(|&x| x != v)
        .map(|x| ids[x])
        .collect();
    comp_ids.sort_unstable();
    comp_ids.dedup();
    for c in comp_ids {
        let has_v_edge = g
            .incident(v)
            .iter()
            .any(|&e| !g.is_loop(e) && ids[g.other_end(e, v)] == c);
        if !has_v_edge {
            continue;
        }
        let mut keep = EdgeSubset::empty(g.m());
        for e in 0..g.m() {
            let (a, b) = g.endpoints(e);
            let in_comp = |x: VertexId| x != v && ids[x] == c;
            let link = (in_comp(a) || a == v) && (in_comp(b) || b == v) && (a != v || b != v);
            // loops at v go to the first lobe
            if link || (a == v && b == v && first) {
                keep.insert(e);
            }
        }
        first = false;
        out.push(g.edge_induced(&keep));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::named::*;

    fn bowtie() -> MultiGraph {
        MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn component_examples() {
        assert_eq!(components(&MultiGraph::new(3)).len(), 3);
        assert_eq!(components(&complete(4)).len(), 1);
        assert_eq!(components(&complete(4).disjoint_union(&path(1))).len(), 2);
    }

    #[test]
    fn block_examples() {
        let bd = blocks(&bowtie());
        assert_eq!(bd.blocks.len(), 2);
        assert_eq!(bd.cut_vertices, vec![0]);

        let bd = blocks(&dipole(2));
        assert_eq!(bd.blocks.len(), 1);
        assert!(bd.cut_vertices.is_empty());

        let bd = blocks(&path(3));
        assert_eq!(bd.blocks.len(), 3);
        assert_eq!(bd.cut_vertices, vec![1, 2]);
    }

    #[test]
    fn bridge_examples() {
        assert_eq!(bridges(&star(4)).len(), 4);
        assert!(bridges(&dipole(2)).is_empty());
        assert!(bridges(&cycle(5)).is_empty());
    }

    #[test]
    fn bipartite_examples() {
        assert!(is_bipartite(&cycle(4)));
        let mut g = path(2);
        g.add_edge(1, 1).unwrap();
        assert!(!is_bipartite(&g));
        assert!(is_bipartite(&dipole(3)));
        assert!(!is_bipartite(&cycle(5)));
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(edge_connectivity_at_most(&path(3), 1).unwrap().unwrap().len(), 1);
        assert_eq!(edge_connectivity_at_most(&cycle(4), 2).unwrap().unwrap().len(), 2);
        assert!(edge_connectivity_at_most(&complete(4), 2).unwrap().is_none());
        assert!(edge_connectivity_at_most(&complete(4), 3).is_err());
    }

    #[test]
    fn nontrivial_cut_examples() {
        let k33 = subdivided_once(complete_bipartite(3, 3), 0);
        assert!(nontrivial_two_edge_cut(&k33).unwrap().is_none());
        assert!(nontrivial_two_edge_cut(&shannon(2, 1, 1)).unwrap().is_none());
        let c6 = cycle(6);
        let cut = nontrivial_two_edge_cut(&c6).unwrap().unwrap();
        assert_eq!(cut.edges, (0, 2));
        assert_eq!(cut.x, vec![0, 3, 4, 5]);
        assert_eq!(cut.x_bar, vec![1, 2]);
        assert!(nontrivial_two_edge_cut(&MultiGraph::new(2)).is_err());
    }

    #[test]
    fn cycle_examples() {
        let c = cycle_through(&cycle(5), &[2], 5).unwrap();
        assert_eq!(c.order(), 5);
        assert!(cycle_through(&star(3), &[0], 1).is_none());
        let k35 = subdivided_once(complete_bipartite(3, 5), 0);
        let c = cycle_through(&k35, &[8, 1], 5).unwrap();
        assert!(c.vertices.contains(&8) && c.vertices.contains(&1) && c.order() >= 5);
        // a doubled edge is a 2-cycle
        assert_eq!(cycle_through(&dipole(2), &[0], 2).unwrap().edges, vec![0, 1]);
    }

    #[test]
    fn cycle_enumeration_counts() {
        // K4 has 7 cycles, 6 of which pass through any given vertex... 3 triangles + 3 squares
        let mut count = 0;
        for_each_cycle_through(&complete(4), 0, usize::MAX, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 6);
        let mut count = 0;
        for_each_cycle_through(&dipole(3), 0, usize::MAX, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 3);
    }

    #[test]
    fn lobe_examples() {
        let l = lobes(&bowtie(), 0).unwrap();
        assert_eq!(l.len(), 2);
        assert!(l.iter().all(|d| d.graph.n() == 3 && d.graph.m() == 3));
        let l = lobes(&path(2), 1).unwrap();
        assert_eq!(l.len(), 2);
        assert!(l.iter().all(|d| d.graph.m() == 1));
        assert!(lobes(&complete(4), 0).is_err());
    }

    #[test]
    fn two_connected_predicate() {
        assert!(is_two_connected(&dipole(2)));
        assert!(is_two_connected(&path(1)));
        assert!(is_two_connected(&shannon(2, 1, 1)));
        assert!(!is_two_connected(&bowtie()));
        assert!(!is_two_connected(&MultiGraph::new(1)));
    }
}
