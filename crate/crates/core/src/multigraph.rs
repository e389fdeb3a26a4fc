//! Undirected multigraphs with stable edge identities.
//!
//! Vertices are dense ids `0..n`, edges are dense ids `0..m` in insertion
//! order. Loops and parallel edges are first-class. Operations that build a
//! new graph out of an old one return a [`Derived`] value that records where
//! every vertex and edge came from, so colorings can be moved between a graph
//! and the graphs derived from it without losing track of edge identity.

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{precondition, Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    // Edge-ends per vertex; a loop is listed twice.
    ends: Vec<Vec<EdgeId>>,
}

impl fmt::Debug for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiGraph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A graph built from a parent graph, with provenance maps in both
/// directions.
#[derive(Clone, Debug)]
pub struct Derived {
    pub graph: MultiGraph,
    /// parent vertex -> vertex of `graph` (None if the vertex was removed)
    pub vertex_map: Vec<Option<VertexId>>,
    /// vertex of `graph` -> parent vertex (None for newly created vertices)
    pub vertex_origin: Vec<Option<VertexId>>,
    /// edge of `graph` -> parent edge (None for newly created edges)
    pub edge_origin: Vec<Option<EdgeId>>,
}

impl Derived {
    /// Inverse of `edge_origin`: parent edge -> edge of `graph`.
    pub fn edge_map(&self, parent_m: usize) -> Vec<Option<EdgeId>> {
        let mut map = vec![None; parent_m];
        for (e, o) in self.edge_origin.iter().enumerate() {
            if let Some(p) = o {
                map[*p] = Some(e);
            }
        }
        map
    }
}

/// The set of parallel edges joining two distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bouquet {
    pub u: VertexId,
    pub v: VertexId,
    pub edge_ids: Vec<EdgeId>,
}

impl Bouquet {
    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }
}

/// A subset of the edges of a host graph with `host_m` edges.
#[derive(Clone, PartialEq, Eq)]
pub struct EdgeSubset {
    bits: FixedBitSet,
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl EdgeSubset {
    pub fn empty(host_m: usize) -> Self {
        EdgeSubset {
            bits: FixedBitSet::with_capacity(host_m),
        }
    }

    pub fn full(host_m: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(host_m);
        bits.insert_range(..);
        EdgeSubset { bits }
    }

    pub fn from_ids(host_m: usize, ids: impl IntoIterator<Item = EdgeId>) -> Result<Self> {
        let mut s = Self::empty(host_m);
        for e in ids {
            if e >= host_m {
                return Err(Error::EdgeOutOfRange { edge: e, m: host_m });
            }
            s.bits.insert(e);
        }
        Ok(s)
    }

    pub fn host_m(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.bits.contains(e)
    }

    pub fn insert(&mut self, e: EdgeId) {
        self.bits.insert(e);
    }

    pub fn remove(&mut self, e: EdgeId) {
        self.bits.set(e, false);
    }

    pub fn toggle(&mut self, e: EdgeId) {
        self.bits.toggle(e);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<EdgeId> {
        self.iter().collect()
    }

    pub fn complement(&self) -> EdgeSubset {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        EdgeSubset { bits }
    }

    pub fn symmetric_difference(&self, other: &EdgeSubset) -> Result<EdgeSubset> {
        self.same_host(other)?;
        let mut bits = self.bits.clone();
        bits.symmetric_difference_with(&other.bits);
        Ok(EdgeSubset { bits })
    }

    pub fn union(&self, other: &EdgeSubset) -> Result<EdgeSubset> {
        self.same_host(other)?;
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Ok(EdgeSubset { bits })
    }

    pub fn is_disjoint(&self, other: &EdgeSubset) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    fn same_host(&self, other: &EdgeSubset) -> Result<()> {
        if self.host_m() != other.host_m() {
            return Err(Error::HostMismatch(self.host_m(), other.host_m()));
        }
        Ok(())
    }
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        MultiGraph {
            n,
            edges: Vec::new(),
            ends: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = MultiGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.ends.push(Vec::new());
        self.n += 1;
        self.n - 1
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let e = self.edges.len();
        self.edges.push((u, v));
        self.ends[u].push(e);
        self.ends[v].push(e);
        Ok(e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (a, b) = self.edges[e];
        a == b
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(a, b)| a == b)
    }

    /// The endpoint of `e` other than `v` (`v` itself for a loop).
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v, "edge {e} is not incident to {v}");
            a
        }
    }

    /// Edge-ends at `v`; loops appear twice.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.ends[v]
    }

    /// `E_G(v)` as a set: every incident edge once.
    pub fn incident_edges(&self, v: VertexId) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self.ends[v].clone();
        out.dedup();
        out
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.ends[v].len()
    }

    pub fn checked_degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.degree(v))
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn neighbors(&self, v: VertexId) -> BTreeSet<VertexId> {
        self.ends[v].iter().map(|&e| self.other_end(e, v)).collect()
    }

    pub fn vertices_of_degree(&self, d: usize) -> Vec<VertexId> {
        self.vertices().filter(|&v| self.degree(v) == d).collect()
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        let c = self.ends[u]
            .iter()
            .filter(|&&e| self.other_end(e, u) == v)
            .count();
        if u == v {
            c / 2
        } else {
            c
        }
    }

    pub fn bouquet(&self, u: VertexId, v: VertexId) -> Result<Bouquet> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return precondition("a bouquet needs two distinct vertices");
        }
        let edge_ids = self.ends[u]
            .iter()
            .copied()
            .filter(|&e| self.other_end(e, u) == v)
            .collect();
        Ok(Bouquet { u, v, edge_ids })
    }

    pub fn is_odd_graph(&self) -> bool {
        self.vertices().all(|v| self.degree(v) % 2 == 1)
    }

    pub fn is_even_graph(&self) -> bool {
        self.vertices().all(|v| self.degree(v).is_multiple_of(2))
    }

    pub fn edge_complement(&self, h: &EdgeSubset) -> Result<EdgeSubset> {
        if h.host_m() != self.m() {
            return Err(Error::HostMismatch(h.host_m(), self.m()));
        }
        Ok(h.complement())
    }

    /// Degree of `v` counted only over the edges of `set`.
    pub fn degree_in(&self, set: &EdgeSubset, v: VertexId) -> usize {
        self.ends[v].iter().filter(|&&e| set.contains(e)).count()
    }

    /// Suppress the 2-vertex `v`: delete it and join its neighbours by a new
    /// edge, which becomes the last edge of the result.
    pub fn suppress(&self, v: VertexId) -> Result<Derived> {
        self.check_vertex(v)?;
        if self.degree(v) != 2 {
            return precondition(format!(
                "suppress needs a 2-vertex, vertex {v} has degree {}",
                self.degree(v)
            ));
        }
        let (e, f) = (self.ends[v][0], self.ends[v][1]);
        if e == f {
            return Err(Error::Unsuppressible(v));
        }
        let a = self.other_end(e, v);
        let b = self.other_end(f, v);
        let mut d = self.remove_vertex(v);
        let na = d.vertex_map[a].expect("neighbour survives");
        let nb = d.vertex_map[b].expect("neighbour survives");
        d.graph.add_edge(na, nb)?;
        d.edge_origin.push(None);
        Ok(d)
    }

    /// Split `v` into `v' = v` (keeping the edges in `first`) and a new last
    /// vertex `v''` (taking the edges in `second`). Loops go whole to one side.
    pub fn split(&self, v: VertexId, first: &[EdgeId], second: &[EdgeId]) -> Result<Derived> {
        self.check_vertex(v)?;
        let incident: BTreeSet<EdgeId> = self.ends[v].iter().copied().collect();
        let a: BTreeSet<EdgeId> = first.iter().copied().collect();
        let b: BTreeSet<EdgeId> = second.iter().copied().collect();
        if !a.is_disjoint(&b) || a.len() + b.len() != incident.len() || !a.union(&b).eq(incident.iter()) {
            return precondition(format!(
                "split partition does not cover the edges at vertex {v} exactly"
            ));
        }
        let mut g = self.clone();
        let v2 = g.add_vertex();
        for &e in &b {
            let (x, y) = g.edges[e];
            let nx = if x == v { v2 } else { x };
            let ny = if y == v { v2 } else { y };
            g.edges[e] = (nx, ny);
        }
        g.rebuild_ends();
        Ok(Derived {
            vertex_map: (0..self.n).map(Some).collect(),
            vertex_origin: (0..self.n).map(Some).chain(std::iter::once(None)).collect(),
            edge_origin: (0..self.m()).map(Some).collect(),
            graph: g,
        })
    }

    /// Identify `b` into `a` (edges keep their ids); `b` is deleted.
    pub fn identify(&self, a: VertexId, b: VertexId) -> Result<Derived> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return precondition("cannot identify a vertex with itself");
        }
        let keep: Vec<VertexId> = self.vertices().filter(|&x| x != b).collect();
        let mut vertex_map = vec![None; self.n];
        for (i, &x) in keep.iter().enumerate() {
            vertex_map[x] = Some(i);
        }
        vertex_map[b] = vertex_map[a];
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(x, y)| (vertex_map[x].unwrap(), vertex_map[y].unwrap()))
            .collect();
        Ok(Derived {
            graph: MultiGraph::from_edges(keep.len(), &edges)?,
            vertex_map,
            vertex_origin: keep.iter().map(|&x| Some(x)).collect(),
            edge_origin: (0..self.m()).map(Some).collect(),
        })
    }

    /// Delete `v` and its incident edges; remaining ids are compacted in order.
    pub fn remove_vertex(&self, v: VertexId) -> Derived {
        let mut keep = vec![true; self.n];
        keep[v] = false;
        self.induced_by_mask(&keep)
    }

    /// The subgraph induced by the vertices with `keep[v]`.
    pub fn induced_by_mask(&self, keep: &[bool]) -> Derived {
        let mut vertex_map = vec![None; self.n];
        let mut vertex_origin = Vec::new();
        for v in self.vertices() {
            if keep[v] {
                vertex_map[v] = Some(vertex_origin.len());
                vertex_origin.push(Some(v));
            }
        }
        let mut g = MultiGraph::new(vertex_origin.len());
        let mut edge_origin = Vec::new();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if let (Some(na), Some(nb)) = (vertex_map[a], vertex_map[b]) {
                g.push_edge_unchecked(na, nb);
                edge_origin.push(Some(e));
            }
        }
        Derived {
            graph: g,
            vertex_map,
            vertex_origin,
            edge_origin,
        }
    }

    /// Spanning subgraph keeping exactly the edges in `keep`.
    pub fn spanning(&self, keep: &EdgeSubset) -> Derived {
        let mut g = MultiGraph::new(self.n);
        let mut edge_origin = Vec::new();
        for e in keep.iter() {
            let (a, b) = self.edges[e];
            g.push_edge_unchecked(a, b);
            edge_origin.push(Some(e));
        }
        Derived {
            graph: g,
            vertex_map: (0..self.n).map(Some).collect(),
            vertex_origin: (0..self.n).map(Some).collect(),
            edge_origin,
        }
    }

    /// Subgraph formed by the edges in `keep` and only the vertices they touch.
    pub fn edge_induced(&self, keep: &EdgeSubset) -> Derived {
        let mut vertex_map = vec![None; self.n];
        let mut vertex_origin = Vec::new();
        for e in keep.iter() {
            let (a, b) = self.edges[e];
            for x in [a, b] {
                if vertex_map[x].is_none() {
                    vertex_map[x] = Some(vertex_origin.len());
                    vertex_origin.push(Some(x));
                }
            }
        }
        let mut g = MultiGraph::new(vertex_origin.len());
        let mut edge_origin = Vec::new();
        for e in keep.iter() {
            let (a, b) = self.edges[e];
            g.push_edge_unchecked(vertex_map[a].unwrap(), vertex_map[b].unwrap());
            edge_origin.push(Some(e));
        }
        Derived {
            graph: g,
            vertex_map,
            vertex_origin,
            edge_origin,
        }
    }

    /// Copy with the edges in `drop` deleted.
    pub fn without_edges(&self, drop: &[EdgeId]) -> Derived {
        let mut keep = EdgeSubset::full(self.m());
        for &e in drop {
            keep.remove(e);
        }
        self.spanning(&keep)
    }

    pub fn loopless(&self) -> Derived {
        let loops: Vec<EdgeId> = (0..self.m()).filter(|&e| self.is_loop(e)).collect();
        self.without_edges(&loops)
    }

    /// Disjoint union; the vertices and edges of `other` are shifted after ours.
    pub fn disjoint_union(&self, other: &MultiGraph) -> MultiGraph {
        let mut g = self.clone();
        let off = self.n;
        for _ in 0..other.n {
            g.add_vertex();
        }
        for &(a, b) in &other.edges {
            g.push_edge_unchecked(a + off, b + off);
        }
        g
    }

    /// Relabel vertices by `perm[old] = new`.
    pub fn permuted(&self, perm: &[VertexId]) -> MultiGraph {
        let edges: Vec<_> = self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        MultiGraph::from_edges(self.n, &edges).expect("permutation stays in range")
    }

    /// Replace edge `e` by a path of `extra + 1` edges through `extra` new
    /// 2-vertices. The first new edge reuses id `e`.
    pub fn subdivide(&mut self, e: EdgeId, extra: usize) -> Vec<EdgeId> {
        let mut path = vec![e];
        if extra == 0 {
            return path;
        }
        let (a, b) = self.edges[e];
        let mut prev = self.add_vertex();
        self.edges[e] = (a, prev);
        if a == b {
            // loop: one end leaves a, the other still hangs at a
            let pos = self.ends[a].iter().rposition(|&x| x == e).unwrap();
            self.ends[a].remove(pos);
        } else {
            let pos = self.ends[b].iter().position(|&x| x == e).unwrap();
            self.ends[b].remove(pos);
        }
        self.ends[prev].push(e);
        for _ in 1..extra {
            let next = self.add_vertex();
            path.push(self.push_edge_unchecked(prev, next));
            prev = next;
        }
        path.push(self.push_edge_unchecked(prev, b));
        path
    }

    pub(crate) fn push_edge_unchecked(&mut self, u: VertexId, v: VertexId) -> EdgeId {
        let e = self.edges.len();
        self.edges.push((u, v));
        self.ends[u].push(e);
        self.ends[v].push(e);
        e
    }

    fn rebuild_ends(&mut self) {
        self.ends = vec![Vec::new(); self.n];
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            self.ends[a].push(e);
            self.ends[b].push(e);
        }
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    pub(crate) fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e >= self.m() {
            return Err(Error::EdgeOutOfRange { edge: e, m: self.m() });
        }
        Ok(())
    }
}

/// A handful of named graphs used throughout the tests and generators.
pub mod named {
    use super::MultiGraph;

    pub fn cycle(n: usize) -> MultiGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        MultiGraph::from_edges(n, &edges).unwrap()
    }

    pub fn path(edges: usize) -> MultiGraph {
        let list: Vec<_> = (0..edges).map(|i| (i, i + 1)).collect();
        MultiGraph::from_edges(edges + 1, &list).unwrap()
    }

    pub fn complete(n: usize) -> MultiGraph {
        let mut g = MultiGraph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                g.push_edge_unchecked(i, j);
            }
        }
        g
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> MultiGraph {
        let mut g = MultiGraph::new(a + b);
        for i in 0..a {
            for j in 0..b {
                g.push_edge_unchecked(i, a + j);
            }
        }
        g
    }

    pub fn star(leaves: usize) -> MultiGraph {
        complete_bipartite(1, leaves)
    }

    /// `k` parallel edges between vertices 0 and 1.
    pub fn dipole(k: usize) -> MultiGraph {
        let mut g = MultiGraph::new(2);
        for _ in 0..k {
            g.push_edge_unchecked(0, 1);
        }
        g
    }

    /// Wheel: hub 0 joined to a rim cycle `1..=spokes`.
    pub fn wheel(spokes: usize) -> MultiGraph {
        let mut g = MultiGraph::new(spokes + 1);
        for i in 0..spokes {
            g.push_edge_unchecked(1 + i, 1 + (i + 1) % spokes);
        }
        for i in 0..spokes {
            g.push_edge_unchecked(0, 1 + i);
        }
        g
    }

    /// Three vertices with bouquets of sizes `a` (0-1), `b` (1-2), `c` (0-2).
    pub fn shannon(a: usize, b: usize, c: usize) -> MultiGraph {
        let mut g = MultiGraph::new(3);
        for _ in 0..a {
            g.push_edge_unchecked(0, 1);
        }
        for _ in 0..b {
            g.push_edge_unchecked(1, 2);
        }
        for _ in 0..c {
            g.push_edge_unchecked(0, 2);
        }
        g
    }

    /// Prism over the cycle `C_k`: rims `0..k` and `k..2k` with rungs.
    pub fn prism(k: usize) -> MultiGraph {
        let mut g = MultiGraph::new(2 * k);
        for i in 0..k {
            g.push_edge_unchecked(i, (i + 1) % k);
            g.push_edge_unchecked(k + i, k + (i + 1) % k);
            g.push_edge_unchecked(i, k + i);
        }
        g
    }

    /// 3-dimensional cube `Q3`.
    pub fn cube() -> MultiGraph {
        let mut g = MultiGraph::new(8);
        for i in 0..8usize {
            for bit in 0..3 {
                let j = i ^ (1 << bit);
                if i < j {
                    g.push_edge_unchecked(i, j);
                }
            }
        }
        g
    }

    /// Heawood graph (incidence graph of the Fano plane).
    pub fn heawood() -> MultiGraph {
        let mut g = MultiGraph::new(14);
        for i in 0..14 {
            g.push_edge_unchecked(i, (i + 1) % 14);
        }
        for i in (0..14).step_by(2) {
            g.push_edge_unchecked(i, (i + 5) % 14);
        }
        g
    }

    /// `g` with edge `e` subdivided once; the new 2-vertex is the last vertex.
    pub fn subdivided_once(mut g: MultiGraph, e: usize) -> MultiGraph {
        g.subdivide(e, 1);
        g
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    fn handshake(g: &MultiGraph) -> bool {
        g.vertices().map(|v| g.degree(v)).sum::<usize>() == 2 * g.m()
    }

    #[test]
    fn degrees() {
        let k3 = complete(3);
        assert!((0..3).all(|v| k3.degree(v) == 2));
        let mut lp = MultiGraph::new(1);
        lp.add_edge(0, 0).unwrap();
        assert_eq!(lp.degree(0), 2);
        let s = shannon(2, 1, 1);
        // vertex 2 lies on the two singleton bouquets
        assert_eq!(s.degree(2), 2);
        assert!(matches!(
            k3.checked_degree(7),
            Err(Error::VertexOutOfRange { vertex: 7, n: 3 })
        ));
        assert!(handshake(&s) && handshake(&lp));
    }

    #[test]
    fn bouquets() {
        assert_eq!(dipole(5).bouquet(0, 1).unwrap().len(), 5);
        assert_eq!(complete(3).bouquet(0, 1).unwrap().len(), 1);
        let s = shannon(2, 2, 2);
        for (a, b) in [(0, 1), (1, 2), (0, 2)] {
            assert_eq!(s.bouquet(a, b).unwrap().len(), 2);
        }
        assert!(s.bouquet(1, 1).is_err());
    }

    #[test]
    fn suppress_cases() {
        let p = path(2).suppress(1).unwrap();
        assert_eq!((p.graph.n(), p.graph.m()), (2, 1));
        assert_eq!(p.graph.endpoints(0), (0, 1));

        let c3 = cycle(3).suppress(0).unwrap().graph;
        assert_eq!((c3.n(), c3.m()), (2, 2));
        assert_eq!(c3.multiplicity(0, 1), 2);

        let c2 = dipole(2).suppress(0).unwrap().graph;
        assert_eq!((c2.n(), c2.m()), (1, 1));
        assert!(c2.is_loop(0));

        let mut lp = MultiGraph::new(1);
        lp.add_edge(0, 0).unwrap();
        assert_eq!(lp.suppress(0).unwrap_err(), Error::Unsuppressible(0));
        assert!(matches!(complete(4).suppress(0), Err(Error::Precondition(_))));
    }

    #[test]
    fn split_cases() {
        let mut g = MultiGraph::new(5);
        for i in 1..5 {
            g.add_edge(0, i).unwrap();
        }
        let d = g.split(0, &[0, 1], &[2, 3]).unwrap().graph;
        assert_eq!((d.degree(0), d.degree(5)), (2, 2));
        let d = g.split(0, &[0, 1, 2], &[3]).unwrap().graph;
        assert_eq!((d.degree(0), d.degree(5)), (3, 1));
        assert!(g.split(0, &[0, 1], &[2]).is_err());
        assert!(g.split(0, &[0, 1, 2], &[2, 3]).is_err());
    }

    #[test]
    fn split_into_pendants_then_identify_is_identity() {
        let g = wheel(4);
        let hub_edges = g.incident_edges(0);
        let mut cur = g.clone();
        let mut copies = Vec::new();
        for &e in &hub_edges[1..] {
            let rest: Vec<_> = cur.incident_edges(0).into_iter().filter(|&x| x != e).collect();
            cur = cur.split(0, &rest, &[e]).unwrap().graph;
            copies.push(cur.n() - 1);
        }
        assert!(cur.vertices().filter(|&v| v == 0 || copies.contains(&v)).all(|v| cur.degree(v) == 1));
        for &c in copies.iter().rev() {
            cur = cur.identify(0, c).unwrap().graph;
        }
        assert_eq!(cur, g);
    }

    #[test]
    fn subset_algebra() {
        let g = complete(4);
        let full = EdgeSubset::full(g.m());
        assert!(g.edge_complement(&full).unwrap().is_empty());
        assert_eq!(g.edge_complement(&EdgeSubset::empty(6)).unwrap(), full);
        let a = EdgeSubset::from_ids(6, [0, 2, 5]).unwrap();
        assert!(a.symmetric_difference(&a).unwrap().is_empty());
        assert_eq!(a.symmetric_difference(&EdgeSubset::empty(6)).unwrap(), a);
        assert!(matches!(
            a.symmetric_difference(&EdgeSubset::empty(5)),
            Err(Error::HostMismatch(6, 5))
        ));
        // two edge-disjoint 0-3 paths in C4 combine into the whole cycle
        let c4 = cycle(4);
        let p = EdgeSubset::from_ids(4, [0, 1]).unwrap();
        let q = EdgeSubset::from_ids(4, [2, 3]).unwrap();
        assert_eq!(p.symmetric_difference(&q).unwrap(), EdgeSubset::full(c4.m()));
    }

    #[test]
    fn parity_predicates() {
        assert!(complete(4).is_odd_graph());
        assert!(cycle(5).is_even_graph());
        assert!(complete_bipartite(3, 5).is_odd_graph());
        let iso = MultiGraph::new(1);
        assert!(!iso.is_odd_graph() && iso.is_even_graph());
    }

    #[test]
    fn subdivide_loop_and_link() {
        let mut g = MultiGraph::new(2);
        g.add_edge(0, 0).unwrap();
        g.add_edge(0, 1).unwrap();
        let path = g.subdivide(0, 2);
        assert_eq!(path.len(), 3);
        assert_eq!(g.n(), 4);
        assert!(handshake(&g));
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.vertices_of_degree(2), vec![2, 3]);
    }

    #[test]
    fn named_graphs_are_regular() {
        assert!(cube().vertices().all(|v| cube().degree(v) == 3));
        let h = heawood();
        assert!(h.vertices().all(|v| h.degree(v) == 3));
        let p = prism(4);
        assert!(p.vertices().all(|v| p.degree(v) == 3));
        let w = wheel(4);
        assert_eq!((w.n(), w.m(), w.degree(0)), (5, 8, 4));
    }
}
