//! Odd 3-colorings of 2-connected, essentially 3-edge-connected members of S
//! with a single 2-vertex `v`, a bipartite odd suppression and a vertex of
//! degree at least 5.
//!
//! Two routes are tried. The bouquet route grows a subgraph `H` from a cycle
//! through `v` and an odd bouquet of at least three parallel edges, so that
//! every vertex of degree at least 3 in `H` keeps its full degree; `H` is
//! 3-colored with the third color on one bouquet edge and everything else
//! gets color 3. The cycle-pair route looks for a cycle through `v` and a
//! second cycle meeting it in one vertex; their union is a connected even
//! subgraph of even order.

use crate::coloring::{verify_odd, Color, EdgeColoring};
use crate::error::{precondition, Error, Result};
use crate::multigraph::{EdgeId, EdgeSubset, MultiGraph, VertexId};
use crate::structure::{self, Cycle};
use crate::tjoin::{self, TJoinSpec};

/// Cycles through `v` examined per route before giving up.
const CYCLE_LIMIT: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Bouquets,
    CyclePair,
}

#[derive(Clone, Debug)]
pub struct Augmented {
    pub coloring: EdgeColoring,
    pub route: Route,
}

fn diverge<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::ConstructionDivergence(msg.into()))
}

/// Checks the structural hypotheses and returns the 2-vertex.
pub fn check_preconditions(g: &MultiGraph) -> Result<VertexId> {
    if g.has_loops() {
        return precondition("augmentation needs a loopless graph");
    }
    if !structure::is_two_connected(g) {
        return precondition("augmentation needs a 2-connected graph");
    }
    let twos = g.vertices_of_degree(2);
    let [v] = twos[..] else {
        return precondition("augmentation needs exactly one 2-vertex");
    };
    if g.vertices().any(|x| x != v && g.degree(x).is_multiple_of(2)) {
        return precondition("augmentation needs all other degrees odd");
    }
    if g.max_degree() < 5 || g.n() < 5 {
        return precondition("augmentation needs a vertex of degree at least 5 and order at least 5");
    }
    let s = g.suppress(v)?.graph;
    if !structure::is_bipartite(&s) || !structure::is_two_connected(&s) {
        return precondition("suppressing the 2-vertex must leave a bipartite 2-connected graph");
    }
    if structure::nontrivial_two_edge_cut(g)?.is_some() {
        return precondition("augmentation needs an essentially 3-edge-connected graph");
    }
    Ok(v)
}

/// A verified odd 3-coloring together with the route that produced it.
pub fn color3_via_augmentation(g: &MultiGraph) -> Result<Augmented> {
    let v = check_preconditions(g)?;
    match bouquet_route(g, v) {
        Ok(coloring) => {
            return Ok(Augmented {
                coloring,
                route: Route::Bouquets,
            })
        }
        Err(Error::ConstructionDivergence(_)) => {}
        Err(e) => return Err(e),
    }
    if let Some(coloring) = cycle_pair_route(g, v)? {
        return Ok(Augmented {
            coloring,
            route: Route::CyclePair,
        });
    }
    diverge("no odd bouquet augmentation and no forbidden cycle pair found")
}

/// Color 1 on an odd factor of the connected even subgraph `h`, 2 on the
/// rest of `h`, 3 elsewhere.
fn color_from_even_subgraph(g: &MultiGraph, h: &EdgeSubset) -> Result<Option<EdgeColoring>> {
    let sub = g.edge_induced(h);
    if sub.graph.n() % 2 == 1 || !structure::is_connected(&sub.graph) {
        return Ok(None);
    }
    let k = tjoin::t_join_forest(&TJoinSpec::all_vertices(&sub.graph))?;
    let mut colors = vec![3 as Color; g.m()];
    for (e, o) in sub.edge_origin.iter().enumerate() {
        colors[o.unwrap()] = if k.contains(e) { 1 } else { 2 };
    }
    let c = EdgeColoring::new(colors)?;
    Ok(verify_odd(g, &c)?.then_some(c))
}

fn cycle_pair_route(g: &MultiGraph, v: VertexId) -> Result<Option<EdgeColoring>> {
    let mut found = None;
    let mut failure = None;
    structure::for_each_cycle_through(g, v, CYCLE_LIMIT, |c| {
        let mut blocked = vec![false; g.n()];
        for &x in &c.vertices {
            blocked[x] = true;
        }
        for &x in &c.vertices {
            if x == v {
                continue;
            }
            blocked[x] = false;
            let other = structure::lies_on_cycle_avoiding(g, x, &blocked);
            blocked[x] = true;
            let Some(other) = other else { continue };
            let h = EdgeSubset::from_ids(g.m(), c.edges.iter().chain(&other.edges).copied()).expect("edges in range");
            match color_from_even_subgraph(g, &h) {
                Ok(Some(col)) => {
                    found = Some(col);
                    return false;
                }
                Ok(None) => {}
                Err(e) => {
                    failure = Some(e);
                    return false;
                }
            }
        }
        true
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(found)
}

/// One attempt of the bouquet route for a fixed cycle.
struct Attempt<'a> {
    g: &'a MultiGraph,
    /// `P = C - v` from `u` to `w`.
    p: Vec<VertexId>,
    /// `pe[k]` joins `p[k]` and `p[k + 1]` on `C`.
    pe: Vec<EdgeId>,
    uv: EdgeId,
    vw: EdgeId,
    pos: Vec<Option<usize>>,
    in_h: EdgeSubset,
    d_h: Vec<usize>,
    used: Vec<bool>,
    stacked: Vec<bool>,
    bouquets: Vec<Vec<EdgeId>>,
    paths: Vec<(VertexId, Vec<EdgeId>, VertexId)>,
}

impl<'a> Attempt<'a> {
    fn new(g: &'a MultiGraph, v: VertexId, c: &Cycle) -> Option<Self> {
        // rotate so the cycle reads v, u, ..., w
        let at = c.vertices.iter().position(|&x| x == v)?;
        let k = c.order();
        let verts: Vec<VertexId> = (0..k).map(|i| c.vertices[(at + i) % k]).collect();
        let edges: Vec<EdgeId> = (0..k).map(|i| c.edges[(at + i) % k]).collect();
        let p = verts[1..].to_vec();
        let uv = edges[0];
        let vw = edges[k - 1];
        let pe = edges[1..k - 1].to_vec();
        let mut pos = vec![None; g.n()];
        for (i, &x) in p.iter().enumerate() {
            pos[x] = Some(i);
        }
        let mut a = Attempt {
            g,
            p,
            pe,
            uv,
            vw,
            pos,
            in_h: EdgeSubset::empty(g.m()),
            d_h: vec![0; g.n()],
            used: vec![false; g.n()],
            stacked: vec![false; g.n()],
            bouquets: Vec::new(),
            paths: Vec::new(),
        };
        for &x in &verts {
            a.used[x] = true;
        }
        for &e in &edges {
            a.add(e);
        }
        Some(a)
    }

    fn add(&mut self, e: EdgeId) {
        if self.in_h.contains(e) {
            return;
        }
        self.in_h.insert(e);
        let (a, b) = self.g.endpoints(e);
        self.d_h[a] += 1;
        self.d_h[b] += 1;
    }

    fn gap(&self, x: VertexId) -> usize {
        self.g.degree(x) - self.d_h[x]
    }

    fn parallel(&self, x: VertexId, y: VertexId) -> Vec<EdgeId> {
        self.g
            .incident_edges(x)
            .into_iter()
            .filter(|&e| self.g.other_end(e, x) == y)
            .collect()
    }

    /// Whether `y` lies strictly beyond position `j` in direction `dir`.
    fn beyond(&self, y: VertexId, j: usize, dir: isize) -> bool {
        match self.pos[y] {
            Some(k) => (dir < 0 && k < j) || (dir > 0 && k > j),
            None => false,
        }
    }

    /// A path from `x` starting with `e` whose interior avoids `H` and whose
    /// other end lies on `P` beyond `j`.
    fn q_path(&self, x: VertexId, e: EdgeId, j: usize, dir: isize) -> Result<(Vec<EdgeId>, VertexId)> {
        let g = self.g;
        let y0 = g.other_end(e, x);
        if self.pos[y0].is_some() {
            if self.beyond(y0, j, dir) {
                return Ok((vec![e], y0));
            }
            return diverge("chord leaves toward the wrong side");
        }
        if self.used[y0] {
            return diverge("path meets the subgraph built so far");
        }
        let mut via: Vec<Option<EdgeId>> = vec![None; g.n()];
        let mut seen = vec![false; g.n()];
        seen[y0] = true;
        let mut queue = std::collections::VecDeque::from([y0]);
        while let Some(a) = queue.pop_front() {
            for &f in g.incident(a) {
                let b = g.other_end(f, a);
                if self.beyond(b, j, dir) {
                    let mut edges = vec![f];
                    let mut cur = a;
                    while let Some(h) = via[cur] {
                        edges.push(h);
                        cur = g.other_end(h, cur);
                    }
                    edges.push(e);
                    edges.reverse();
                    return Ok((edges, b));
                }
                if !seen[b] && !self.used[b] {
                    seen[b] = true;
                    via[b] = Some(f);
                    queue.push_back(b);
                }
            }
        }
        diverge("no path back to the cycle")
    }

    /// Grow `H` from `start` toward the end of `P` in direction `dir`.
    fn side(&mut self, start: usize, dir: isize) -> Result<()> {
        let last = if dir < 0 { 0 } else { self.p.len() - 1 };
        let mut j = start;
        loop {
            let x = self.p[j];
            let gap = self.gap(x);
            if gap == 0 {
                return Ok(());
            }
            if j == last {
                return diverge("stack ran past the end of the path");
            }
            if gap > 1 {
                let y = self.p[(j as isize + dir) as usize];
                let b = self.parallel(x, y);
                if b.len() < 3 {
                    return diverge("expected a bouquet of at least three edges");
                }
                for &e in &b {
                    self.add(e);
                }
                if self.gap(x) != 0 {
                    return diverge("bouquet does not saturate its vertex");
                }
                self.bouquets.push(b);
                j = self.pos[y].unwrap();
            } else {
                let e = self
                    .g
                    .incident_edges(x)
                    .into_iter()
                    .find(|&e| !self.in_h.contains(e))
                    .expect("gap one leaves one edge");
                let (path, end) = self.q_path(x, e, j, dir)?;
                let mut cur = x;
                for &f in &path {
                    self.add(f);
                    cur = self.g.other_end(f, cur);
                    self.used[cur] = true;
                }
                self.paths.push((x, path, end));
                j = self.pos[end].unwrap();
            }
            self.stacked[self.p[j]] = true;
        }
    }

    fn run(mut self, i: usize) -> Result<EdgeColoring> {
        let g = self.g;
        let r = self.p.len() - 1;
        let (z, zb) = (self.p[i], self.p[i + 1]);
        let main = self.parallel(z, zb);
        for &e in &main {
            self.add(e);
        }
        self.side(i, -1)?;
        self.side(i + 1, 1)?;
        if g.vertices().any(|x| self.d_h[x] > 2 && self.gap(x) != 0) {
            return diverge("a branch vertex of H is not saturated");
        }

        let mut colors = vec![0 as Color; g.m()];
        colors[self.uv] = 1;
        colors[self.vw] = 2;
        colors[self.pe[i]] = 3;
        let step = |prev: Color, x: VertexId| if self.stacked[x] { prev } else { 3 - prev };
        let mut prev = 1;
        for k in 0..i {
            prev = step(prev, self.p[k]);
            colors[self.pe[k]] = prev;
        }
        let mut prev = 2;
        for k in (i + 2..=r).rev() {
            prev = step(prev, self.p[k]);
            colors[self.pe[k - 1]] = prev;
        }
        for b in &self.bouquets {
            let c = b.iter().map(|&e| colors[e]).find(|&c| c != 0).expect("bouquet meets P");
            for &e in b {
                colors[e] = c;
            }
        }
        let mut first = true;
        for &e in &main {
            if e != self.pe[i] {
                colors[e] = if first { 1 } else { 2 };
                first = false;
            }
        }
        // the color every H-edge at a stacked vertex carries
        let tone = |colors: &[Color], x: VertexId| -> Color {
            let j = self.pos[x].unwrap();
            if j <= i {
                if j == 0 {
                    colors[self.uv]
                } else {
                    colors[self.pe[j - 1]]
                }
            } else if j == r {
                colors[self.vw]
            } else {
                colors[self.pe[j]]
            }
        };
        for (x, path, end) in &self.paths {
            let mut c = tone(&colors, *x);
            for &e in path {
                colors[e] = c;
                c = 3 - c;
            }
            if colors[*path.last().unwrap()] != tone(&colors, *end) {
                return diverge("path parity does not match its endpoints");
            }
        }
        for e in 0..g.m() {
            if !self.in_h.contains(e) {
                colors[e] = 3;
            }
        }
        let c = EdgeColoring::new(colors)?;
        if !verify_odd(g, &c)? {
            return diverge("augmented coloring failed to verify");
        }
        Ok(c)
    }
}

fn bouquet_route(g: &MultiGraph, v: VertexId) -> Result<EdgeColoring> {
    let mut result = None;
    structure::for_each_cycle_through(g, v, CYCLE_LIMIT, |c| {
        if c.order() < 5 || !c.vertices.iter().any(|&x| g.degree(x) >= 5) {
            return true;
        }
        let Some(probe) = Attempt::new(g, v, c) else {
            return true;
        };
        let r = probe.p.len() - 1;
        for i in 1..r.saturating_sub(1) {
            let m = g.multiplicity(probe.p[i], probe.p[i + 1]);
            if m < 3 || m.is_multiple_of(2) {
                continue;
            }
            let attempt = Attempt::new(g, v, c).expect("rotation succeeded above");
            if let Ok(col) = attempt.run(i) {
                result = Some(col);
                return false;
            }
        }
        true
    });
    result.ok_or_else(|| Error::ConstructionDivergence("no cycle with an odd large bouquet worked".into()))
}
