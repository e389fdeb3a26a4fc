//! T-joins: spanning subgraphs whose odd-degree vertices are exactly `T`.
//!
//! All constructions go through one spanning forest and the subtree-parity
//! rule: a tree edge is in the join iff the subtree below it holds an odd
//! number of `T`-vertices. Co-forest variants start from the non-tree edges
//! and fix parities inside the tree, so their complement is a subforest.

use std::collections::VecDeque;

use crate::error::{precondition, Error, Result};
use crate::multigraph::{EdgeId, EdgeSubset, MultiGraph, VertexId};
use crate::structure;

#[derive(Clone, Debug)]
pub struct TJoinSpec<'a> {
    pub host: &'a MultiGraph,
    pub t: Vec<bool>,
}

impl<'a> TJoinSpec<'a> {
    pub fn new(host: &'a MultiGraph, t: &[VertexId]) -> Result<Self> {
        let mut mask = vec![false; host.n()];
        for &v in t {
            host.check_vertex(v)?;
            mask[v] = true;
        }
        Ok(Self { host, t: mask })
    }

    pub fn all_vertices(host: &'a MultiGraph) -> Self {
        Self {
            host,
            t: vec![true; host.n()],
        }
    }
}

/// A BFS spanning forest: parent edge per vertex and the visiting order.
struct SpanningForest {
    parent: Vec<Option<EdgeId>>,
    order: Vec<VertexId>,
}

/// BFS forest of `g` skipping the `blocked` vertex, rooted at the smallest
/// vertex of each component.
fn bfs_forest(g: &MultiGraph, blocked: Option<VertexId>) -> SpanningForest {
    let mut parent = vec![None; g.n()];
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    if let Some(b) = blocked {
        seen[b] = true;
    }
    let mut queue = VecDeque::new();
    for r in g.vertices() {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        queue.push_back(r);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &e in g.incident(x) {
                let y = g.other_end(e, x);
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some(e);
                    queue.push_back(y);
                }
            }
        }
    }
    SpanningForest { parent, order }
}

/// Tree edges selected by subtree parity of `t`. Requires every tree of the
/// forest to hold an even number of `t`-vertices.
fn forest_join(g: &MultiGraph, forest: &SpanningForest, t: &[bool]) -> EdgeSubset {
    let mut odd = t.to_vec();
    let mut join = EdgeSubset::empty(g.m());
    for &x in forest.order.iter().rev() {
        if let Some(e) = forest.parent[x] {
            if odd[x] {
                join.insert(e);
                let p = g.other_end(e, x);
                odd[p] = !odd[p];
            }
        }
    }
    join
}

pub fn t_join_exists(spec: &TJoinSpec) -> bool {
    let (ids, k) = structure::component_ids(spec.host);
    let mut parity = vec![false; k];
    for v in spec.host.vertices() {
        if spec.t[v] {
            parity[ids[v]] = !parity[ids[v]];
        }
    }
    parity.iter().all(|p| !p)
}

/// An acyclic T-join.
pub fn t_join_forest(spec: &TJoinSpec) -> Result<EdgeSubset> {
    if !t_join_exists(spec) {
        return Err(Error::InfeasibleTJoin);
    }
    let forest = bfs_forest(spec.host, None);
    Ok(forest_join(spec.host, &forest, &spec.t))
}

/// A T-join whose edge-complement is a forest.
pub fn t_join_coforest(spec: &TJoinSpec) -> Result<EdgeSubset> {
    if !t_join_exists(spec) {
        return Err(Error::InfeasibleTJoin);
    }
    let g = spec.host;
    let forest = bfs_forest(g, None);
    Ok(coforest_from(g, &forest, &spec.t))
}

fn coforest_from(g: &MultiGraph, forest: &SpanningForest, t: &[bool]) -> EdgeSubset {
    let mut tree = EdgeSubset::empty(g.m());
    for e in forest.parent.iter().flatten() {
        tree.insert(*e);
    }
    let outside = tree.complement();
    // parity still owed by the tree part
    let owed: Vec<bool> = g
        .vertices()
        .map(|v| t[v] ^ (g.degree_in(&outside, v) % 2 == 1))
        .collect();
    let fix = forest_join(g, forest, &owed);
    outside.union(&fix).expect("same host")
}

/// A spanning subgraph with every degree odd whose complement is a forest.
pub fn spanning_odd_coforest(g: &MultiGraph) -> Result<EdgeSubset> {
    if g.n() % 2 == 1 {
        return precondition("a spanning odd subgraph needs even order");
    }
    if !structure::is_connected(g) {
        return Err(Error::Disconnected);
    }
    t_join_coforest(&TJoinSpec::all_vertices(g))
}

/// A co-forest T-join `H` whose complement meets `v` in at most the edge `e`.
///
/// The complement is a spanning tree of `G - v` extended by `e`, so `v` is a
/// leaf of it; every other edge at `v` is forced into `H`.
pub fn coforest_avoiding_vertex(g: &MultiGraph, v: VertexId, e: EdgeId, t: &[VertexId]) -> Result<EdgeSubset> {
    g.check_vertex(v)?;
    g.check_edge(e)?;
    if g.has_loops() {
        return precondition("coforest_avoiding_vertex needs a loopless graph");
    }
    if !structure::is_connected(g) {
        return Err(Error::Disconnected);
    }
    let (a, b) = g.endpoints(e);
    if a != v && b != v {
        return precondition(format!("edge {e} is not incident with vertex {v}"));
    }
    if g.n() > 2 && !structure::is_connected(&g.remove_vertex(v).graph) {
        return precondition(format!("vertex {v} is a cut-vertex"));
    }
    let spec = TJoinSpec::new(g, t)?;
    if !t_join_exists(&spec) {
        return Err(Error::InfeasibleTJoin);
    }
    let mut forest = bfs_forest(g, Some(v));
    // v hangs below its neighbour; last in order, so its parity is settled first
    forest.parent[v] = Some(e);
    forest.order.push(v);
    let h = coforest_from(g, &forest, &spec.t);
    debug_assert!(g.vertices().all(|x| (g.degree_in(&h, x) % 2 == 1) == spec.t[x]));
    Ok(h)
}

/// Whether the spanning subgraph on `edges` is acyclic.
pub fn is_acyclic(g: &MultiGraph, edges: &EdgeSubset) -> bool {
    let mut parent: Vec<VertexId> = g.vertices().collect();
    fn find(p: &mut [VertexId], mut x: VertexId) -> VertexId {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for e in edges.iter() {
        let (a, b) = g.endpoints(e);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

/// Whether `h` has odd degree exactly on `t`.
pub fn is_t_join(g: &MultiGraph, h: &EdgeSubset, t: &[bool]) -> bool {
    g.vertices().all(|v| (g.degree_in(h, v) % 2 == 1) == t[v])
}
