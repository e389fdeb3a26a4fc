//! Subdivisions of odd graphs: recognition, thread structure, the parity
//! quotient and odd 2-colorings.

use crate::coloring::{Color, EdgeColoring};
use crate::error::{precondition, Error, Result};
use crate::multigraph::{EdgeId, MultiGraph, VertexId};
use crate::structure;

/// Where a vertex of `G` sits relative to the underlying odd graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRole {
    Branch(VertexId),
    /// Interior 2-vertex of a thread, with its 1-based position along it.
    Interior { thread: usize, position: usize },
}

#[derive(Clone, Debug)]
pub struct SubdivisionStructure {
    pub g0: MultiGraph,
    /// The edges of `P_e` in walking order, from the first endpoint of the
    /// g0-edge `e` to its second.
    pub threads: Vec<Vec<EdgeId>>,
    /// `true` when the g0-edge is even, i.e. its thread has odd length.
    pub even: Vec<bool>,
    pub vertex_map: Vec<VertexRole>,
    /// g0 vertex -> vertex of `G`.
    pub branch_origin: Vec<VertexId>,
}

impl SubdivisionStructure {
    pub fn is_even(&self, e: EdgeId) -> bool {
        self.even[e]
    }

    pub fn odd_edges(&self) -> Vec<EdgeId> {
        (0..self.even.len()).filter(|&e| !self.even[e]).collect()
    }
}

#[derive(Clone, Debug)]
pub struct ParityQuotient {
    pub h: MultiGraph,
    /// Component (vertex of `h`) for every g0 vertex.
    pub witness: Vec<VertexId>,
    /// g0-edge behind every edge of `h`.
    pub edge_origin: Vec<EdgeId>,
}

/// Degrees odd or exactly 2, no isolated vertex, no component without an
/// odd vertex.
pub fn is_in_s(g: &MultiGraph) -> bool {
    if g.vertices().any(|v| {
        let d = g.degree(v);
        d != 2 && d.is_multiple_of(2)
    }) {
        return false;
    }
    let (ids, k) = structure::component_ids(g);
    let mut has_odd = vec![false; k];
    for v in g.vertices() {
        if g.degree(v) % 2 == 1 {
            has_odd[ids[v]] = true;
        }
    }
    has_odd.into_iter().all(|b| b)
}

/// Suppress 2-vertices (smallest id first) until none can be suppressed.
pub fn suppression_fixpoint(g: &MultiGraph) -> MultiGraph {
    let mut cur = g.clone();
    loop {
        let next = cur.vertices().find_map(|v| match cur.suppress(v) {
            Ok(d) => Some(d.graph),
            Err(_) => None,
        });
        match next {
            Some(h) => cur = h,
            None => return cur,
        }
    }
}

/// Reference test for [`is_in_s`]: the suppression fixpoint is odd.
pub fn is_in_s_by_suppression(g: &MultiGraph) -> bool {
    suppression_fixpoint(g).is_odd_graph()
}

pub fn subdivision_structure(g: &MultiGraph) -> Result<SubdivisionStructure> {
    if !is_in_s(g) {
        return Err(Error::NotInS);
    }
    let branch: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) % 2 == 1).collect();
    let mut g0_id = vec![usize::MAX; g.n()];
    for (i, &v) in branch.iter().enumerate() {
        g0_id[v] = i;
    }
    let mut used = vec![false; g.m()];
    let mut raw: Vec<(VertexId, VertexId, Vec<EdgeId>)> = Vec::new();
    for &x in &branch {
        for &e0 in g.incident(x) {
            if used[e0] {
                continue;
            }
            let mut path = vec![e0];
            used[e0] = true;
            let mut cur = g.other_end(e0, x);
            let mut last = e0;
            while g.degree(cur) == 2 {
                let next = g
                    .incident(cur)
                    .iter()
                    .copied()
                    .find(|&f| f != last)
                    .expect("2-vertex has a second edge");
                used[next] = true;
                path.push(next);
                last = next;
                cur = g.other_end(next, cur);
            }
            raw.push((x, cur, path));
        }
    }
    debug_assert!(used.iter().all(|&u| u));
    raw.sort_by_key(|(_, _, p)| *p.iter().min().unwrap());

    let mut g0 = MultiGraph::new(branch.len());
    let mut vertex_map: Vec<VertexRole> = vec![VertexRole::Branch(0); g.n()];
    for &v in &branch {
        vertex_map[v] = VertexRole::Branch(g0_id[v]);
    }
    let mut threads = Vec::with_capacity(raw.len());
    let mut even = Vec::with_capacity(raw.len());
    for (t, (a, b, path)) in raw.into_iter().enumerate() {
        g0.add_edge(g0_id[a], g0_id[b])?;
        let mut cur = a;
        for (i, &e) in path.iter().enumerate() {
            cur = g.other_end(e, cur);
            if i + 1 < path.len() {
                vertex_map[cur] = VertexRole::Interior {
                    thread: t,
                    position: i + 1,
                };
            }
        }
        even.push(path.len() % 2 == 1);
        threads.push(path);
    }
    Ok(SubdivisionStructure {
        g0,
        threads,
        even,
        vertex_map,
        branch_origin: branch,
    })
}

pub fn parity_quotient(s: &SubdivisionStructure) -> ParityQuotient {
    let n0 = s.g0.n();
    let mut parent: Vec<usize> = (0..n0).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (e, &(a, b)) in s.g0.edges().iter().enumerate() {
        if s.even[e] {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut label = vec![usize::MAX; n0];
    let mut witness = vec![0; n0];
    let mut count = 0;
    for v in 0..n0 {
        let r = find(&mut parent, v);
        if label[r] == usize::MAX {
            label[r] = count;
            count += 1;
        }
        witness[v] = label[r];
    }
    let mut h = MultiGraph::new(count);
    let mut edge_origin = Vec::new();
    for (e, &(a, b)) in s.g0.edges().iter().enumerate() {
        if !s.even[e] {
            h.add_edge(witness[a], witness[b]).expect("in range");
            edge_origin.push(e);
        }
    }
    ParityQuotient {
        h,
        witness,
        edge_origin,
    }
}

pub fn chi_le_2(g: &MultiGraph) -> Result<bool> {
    let s = subdivision_structure(g)?;
    Ok(structure::is_bipartite(&parity_quotient(&s).h))
}

/// An odd 2-edge-coloring of a member of S with a 2-vertex and a bipartite
/// parity quotient.
///
/// Every thread is colored properly. Branch vertices in components on the
/// first side of the quotient see only color 1, the others only color 2.
pub fn color2(g: &MultiGraph) -> Result<EdgeColoring> {
    let s = subdivision_structure(g)?;
    if s.threads.iter().all(|t| t.len() == 1) {
        return precondition("color2 needs a 2-vertex (odd graphs are 1-colorable)");
    }
    let q = parity_quotient(&s);
    let side = structure::bipartition(&q.h)
        .ok_or_else(|| Error::Precondition("parity quotient is not bipartite".into()))?;
    let color_at = |x0: VertexId| -> Color { if side[q.witness[x0]] { 2 } else { 1 } };
    let mut colors = vec![0 as Color; g.m()];
    for (t, path) in s.threads.iter().enumerate() {
        let (a, _) = s.g0.endpoints(t);
        let mut c = color_at(a);
        for &e in path {
            colors[e] = c;
            c = 3 - c;
        }
    }
    EdgeColoring::new(colors)
}
