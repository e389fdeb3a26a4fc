//! Edge-colorings, the odd-coloring verifier and the elementary colorers.

use std::collections::VecDeque;

use crate::error::{precondition, Error, Result};
use crate::multigraph::{EdgeId, EdgeSubset, MultiGraph, VertexId};
use crate::structure;
use crate::tjoin;

pub type Color = u32;

/// A total edge-coloring with colors `1..`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(colors: Vec<Color>) -> Result<Self> {
        if let Some(e) = colors.iter().position(|&c| c == 0) {
            return precondition(format!("edge {e} is uncolored"));
        }
        Ok(Self { colors })
    }

    pub fn monochrome(m: usize) -> Self {
        Self { colors: vec![1; m] }
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, e: EdgeId) -> Color {
        self.colors[e]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors used.
    pub fn k(&self) -> usize {
        let mut seen: Vec<Color> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub fn max_color(&self) -> Color {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn class(&self, c: Color) -> Vec<EdgeId> {
        (0..self.colors.len()).filter(|&e| self.colors[e] == c).collect()
    }

    /// Relabel colors to `1..=k` in order of first appearance.
    pub fn normalized(&self) -> Self {
        self.normalized_keeping_last(None)
    }

    /// As [`normalized`](Self::normalized), but the class of `last` (if
    /// given) receives the largest label.
    pub fn normalized_keeping_last(&self, last: Option<EdgeId>) -> Self {
        let reserved = last.map(|e| self.colors[e]);
        let mut map = std::collections::HashMap::new();
        for &c in &self.colors {
            if Some(c) != reserved && !map.contains_key(&c) {
                map.insert(c, map.len() as Color + 1);
            }
        }
        if let Some(r) = reserved {
            map.insert(r, map.len() as Color + 1);
        }
        Self {
            colors: self.colors.iter().map(|c| map[c]).collect(),
        }
    }

    pub fn swap_colors(&mut self, a: Color, b: Color) {
        for c in &mut self.colors {
            if *c == a {
                *c = b;
            } else if *c == b {
                *c = a;
            }
        }
    }

    pub fn into_vec(self) -> Vec<Color> {
        self.colors
    }
}

/// Per-vertex, per-color incidence counts; loops count twice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalParityProfile {
    counts: Vec<Vec<u32>>,
}

impl LocalParityProfile {
    pub fn new(g: &MultiGraph, c: &EdgeColoring) -> Result<Self> {
        check_total(g, c)?;
        let width = c.max_color() as usize + 1;
        let mut counts = vec![vec![0u32; width]; g.n()];
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            let col = c.color(e) as usize;
            counts[a][col] += 1;
            counts[b][col] += 1;
        }
        Ok(Self { counts })
    }

    pub fn count(&self, v: VertexId, c: Color) -> u32 {
        self.counts[v].get(c as usize).copied().unwrap_or(0)
    }

    pub fn appears(&self, v: VertexId, c: Color) -> bool {
        self.count(v, c) > 0
    }

    /// Colors appearing at `v`, ascending.
    pub fn colors_at(&self, v: VertexId) -> Vec<Color> {
        (1..self.counts[v].len() as Color).filter(|&c| self.appears(v, c)).collect()
    }

    pub fn is_odd_at(&self, v: VertexId) -> bool {
        self.counts[v].iter().all(|&k| k == 0 || k % 2 == 1)
    }
}

/// A color that appears an even number of times at a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub vertex: VertexId,
    pub color: Color,
    pub count: u32,
}

fn check_total(g: &MultiGraph, c: &EdgeColoring) -> Result<()> {
    if c.len() != g.m() {
        return precondition(format!(
            "coloring covers {} edges but the graph has {}",
            c.len(),
            g.m()
        ));
    }
    Ok(())
}

/// All (vertex, color) pairs whose count is even and positive.
pub fn violations(g: &MultiGraph, c: &EdgeColoring) -> Result<Vec<Violation>> {
    let p = LocalParityProfile::new(g, c)?;
    let mut out = Vec::new();
    for v in g.vertices() {
        for (col, &k) in p.counts[v].iter().enumerate() {
            if k > 0 && k % 2 == 0 {
                out.push(Violation {
                    vertex: v,
                    color: col as Color,
                    count: k,
                });
            }
        }
    }
    Ok(out)
}

pub fn verify_odd(g: &MultiGraph, c: &EdgeColoring) -> Result<bool> {
    Ok(violations(g, c)?.is_empty())
}

pub fn verify_odd_away_from(g: &MultiGraph, c: &EdgeColoring, v: VertexId) -> Result<bool> {
    g.check_vertex(v)?;
    Ok(violations(g, c)?.iter().all(|x| x.vertex == v))
}

/// Extend a partial coloring (`0` = uncolored) of the forest `f` so that it
/// is odd at every vertex except the anchors.
///
/// Each tree is rooted at its anchor if it has one, otherwise at its
/// smallest vertex. Uncolored anchor edges take `palette.0`. A free root with
/// `k` children colors them all `palette.0` when `k` is odd and splits them
/// `k-1` / `1` otherwise. Below the root, a vertex entered by color `c` with
/// `k` children colors them all `c` when `k` is even and all `other(c)` when
/// `k` is odd.
pub(crate) fn extend_forest(
    f: &MultiGraph,
    colors: &mut [Color],
    anchors: &[VertexId],
    palette: (Color, Color),
) -> Result<()> {
    if !tjoin::is_acyclic(f, &EdgeSubset::full(f.m())) {
        return precondition("forest coloring needs an acyclic graph");
    }
    let other = |c: Color| if c == palette.0 { palette.1 } else { palette.0 };
    let mut seen = vec![false; f.n()];
    let mut queue: VecDeque<(VertexId, Option<EdgeId>)> = VecDeque::new();
    let roots = anchors.iter().copied().chain(f.vertices());
    for (i, r) in roots.enumerate() {
        let is_anchor = i < anchors.len();
        if seen[r] {
            if is_anchor && !anchors[..i].contains(&r) {
                return precondition("forest coloring: two anchors share a tree");
            }
            continue;
        }
        seen[r] = true;
        let children: Vec<EdgeId> = f.incident(r).to_vec();
        if is_anchor {
            for &e in &children {
                if colors[e] == 0 {
                    colors[e] = palette.0;
                }
            }
        } else {
            let k = children.len();
            for (i, &e) in children.iter().enumerate() {
                colors[e] = if k.is_multiple_of(2) && i == k - 1 { palette.1 } else { palette.0 };
            }
        }
        for &e in &children {
            let w = f.other_end(e, r);
            if seen[w] {
                return precondition("forest coloring: two anchors share a tree");
            }
            seen[w] = true;
            queue.push_back((w, Some(e)));
        }
        while let Some((x, pe)) = queue.pop_front() {
            let pe = pe.expect("non-root");
            let c = colors[pe];
            let kids: Vec<EdgeId> = f.incident(x).iter().copied().filter(|&e| e != pe).collect();
            let child_color = if kids.len().is_multiple_of(2) { c } else { other(c) };
            for &e in &kids {
                colors[e] = child_color;
                let w = f.other_end(e, x);
                if seen[w] {
                    return precondition("forest coloring: two anchors share a tree");
                }
                seen[w] = true;
                queue.push_back((w, Some(e)));
            }
        }
    }
    Ok(())
}

/// Extend `seed` (colors 1 and 2 on edges at `v`) to a 2-edge-coloring of
/// the forest `f` that is odd away from `v`; odd everywhere when `v` is None.
pub fn forest_color2(f: &MultiGraph, v: Option<VertexId>, seed: &[(EdgeId, Color)]) -> Result<EdgeColoring> {
    let mut colors = vec![0; f.m()];
    for &(e, c) in seed {
        f.check_edge(e)?;
        if !(1..=2).contains(&c) {
            return precondition("forest seed must use colors 1 and 2 only");
        }
        match v {
            Some(v) if f.endpoints(e).0 == v || f.endpoints(e).1 == v => colors[e] = c,
            _ => return precondition(format!("seed edge {e} is not at the anchor")),
        }
    }
    if let Some(v) = v {
        f.check_vertex(v)?;
    }
    let anchors: Vec<VertexId> = v.into_iter().collect();
    extend_forest(f, &mut colors, &anchors, (1, 2))?;
    EdgeColoring::new(colors)
}

/// A 2-edge-coloring odd away from `v`, for `g` with `g - v` a forest. When
/// `d(v)` is odd, color 1 is odd and color 2 even at `v`.
pub fn around_vertex_color2(g: &MultiGraph, v: VertexId) -> Result<EdgeColoring> {
    g.check_vertex(v)?;
    if g.has_loops() {
        return precondition("around_vertex_color2 needs a loopless graph");
    }
    // split v into one pendant copy per incident edge
    let mut f = g.clone();
    let at_v = g.incident_edges(v);
    let mut edges: Vec<(VertexId, VertexId)> = g.edges().to_vec();
    for &e in &at_v {
        let p = f.add_vertex();
        let (a, b) = edges[e];
        edges[e] = if a == v { (p, b) } else { (a, p) };
    }
    let f = MultiGraph::from_edges(f.n(), &edges)?;
    if !tjoin::is_acyclic(&f, &EdgeSubset::full(f.m())) {
        return precondition(format!("removing vertex {v} leaves a cycle"));
    }
    let mut colors = vec![0; f.m()];
    extend_forest(&f, &mut colors, &[], (1, 2))?;
    let mut c = EdgeColoring::new(colors)?;
    if g.degree(v) % 2 == 1 {
        let ones = at_v.iter().filter(|&&e| c.color(e) == 1).count();
        if ones % 2 == 0 {
            c.swap_colors(1, 2);
        }
    }
    Ok(c)
}

/// The cycle of a connected loopless unicyclic graph, as (vertices, edges)
/// in cyclic order.
fn unique_cycle(g: &MultiGraph) -> Result<(Vec<VertexId>, Vec<EdgeId>)> {
    if g.has_loops() {
        return precondition("unicyclic routines need a loopless graph");
    }
    if !structure::is_connected(g) || g.m() != g.n() || g.n() == 0 {
        return precondition("graph is not connected and unicyclic");
    }
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut alive = vec![true; g.n()];
    let mut stack: Vec<VertexId> = g.vertices().filter(|&v| deg[v] == 1).collect();
    while let Some(x) = stack.pop() {
        alive[x] = false;
        for &e in g.incident(x) {
            let y = g.other_end(e, x);
            if alive[y] {
                deg[y] -= 1;
                if deg[y] == 1 {
                    stack.push(y);
                }
            }
        }
    }
    let start = g.vertices().find(|&v| alive[v]).expect("one cycle remains");
    let mut vertices = vec![start];
    let mut edges = Vec::new();
    let mut prev_edge: Option<EdgeId> = None;
    let mut cur = start;
    loop {
        let e = g
            .incident(cur)
            .iter()
            .copied()
            .find(|&e| Some(e) != prev_edge && alive[g.other_end(e, cur)])
            .expect("cycle continues");
        edges.push(e);
        let nxt = g.other_end(e, cur);
        if nxt == start {
            break;
        }
        vertices.push(nxt);
        prev_edge = Some(e);
        cur = nxt;
    }
    Ok((vertices, edges))
}

/// Odd chromatic index (2 or 3) of a connected unicyclic graph that is not
/// odd.
pub fn unicyclic_chi(g: &MultiGraph) -> Result<u32> {
    let (cyc, _) = unique_cycle(g)?;
    if g.is_odd_graph() {
        return precondition("unicyclic_chi expects a graph that is not odd");
    }
    let twos = cyc.iter().filter(|&&v| g.degree(v) == 2).count();
    let even_big = cyc.iter().any(|&v| g.degree(v).is_multiple_of(2) && g.degree(v) != 2);
    Ok(if twos % 2 == 1 && !even_big { 3 } else { 2 })
}

/// True iff the unicyclic graph (no odd-degree cycle vertex) is not an odd
/// cycle.
pub fn unicyclic_chi2_special(g: &MultiGraph) -> Result<bool> {
    let (cyc, _) = unique_cycle(g)?;
    if cyc.iter().any(|&v| g.degree(v) % 2 == 1) {
        return precondition("a cycle vertex has odd degree");
    }
    Ok(!(g.m() == cyc.len() && cyc.len() % 2 == 1))
}

/// An odd coloring of a connected unicyclic non-odd graph with
/// [`unicyclic_chi`] colors.
pub fn unicyclic_color(g: &MultiGraph) -> Result<EdgeColoring> {
    let chi = unicyclic_chi(g)?;
    let (mut cyc, mut cyc_edges) = unique_cycle(g)?;
    let len = cyc.len();
    let mut colors = vec![0 as Color; g.m()];
    if chi == 2 {
        // rotate so the walk starts at a free vertex if there is one
        if let Some(i) = cyc.iter().position(|&v| g.degree(v).is_multiple_of(2) && g.degree(v) != 2) {
            cyc.rotate_left(i);
            cyc_edges.rotate_left(i);
        }
        // edge i joins cyc[i] and cyc[i+1]; switch color at 2-vertices
        let mut c: Color = 1;
        for i in 0..len {
            if i > 0 && g.degree(cyc[i]) == 2 {
                c = 3 - c;
            }
            colors[cyc_edges[i]] = c;
        }
    } else {
        for i in 0..len {
            colors[cyc_edges[i]] = if len % 2 == 1 && i == len - 1 { 3 } else { 1 + (i % 2) as Color };
        }
    }
    // edges hanging off each cycle vertex
    for (i, &x) in cyc.iter().enumerate() {
        let a = colors[cyc_edges[i]];
        let b = colors[cyc_edges[(i + len - 1) % len]];
        let tree: Vec<EdgeId> = g
            .incident(x)
            .iter()
            .copied()
            .filter(|e| !cyc_edges.contains(e))
            .collect();
        if tree.is_empty() {
            continue;
        }
        let third = (1..=3).find(|c| *c != a && *c != b).unwrap();
        if a == b {
            if g.degree(x) % 2 == 1 {
                for &e in &tree {
                    colors[e] = a;
                }
            } else {
                let alt = if chi == 2 { 3 - a } else { third };
                colors[tree[0]] = a;
                for &e in &tree[1..] {
                    colors[e] = alt;
                }
            }
        } else if g.degree(x) % 2 == 1 {
            for &e in &tree {
                colors[e] = third;
            }
        } else {
            for &e in &tree {
                colors[e] = a;
            }
        }
    }
    let mut keep = EdgeSubset::full(g.m());
    for &e in &cyc_edges {
        keep.remove(e);
    }
    let forest = g.spanning(&keep);
    let mut sub: Vec<Color> = forest.edge_origin.iter().map(|o| colors[o.unwrap()]).collect();
    let anchors: Vec<VertexId> = cyc.iter().copied().filter(|&x| forest.graph.degree(x) > 0).collect();
    extend_forest(&forest.graph, &mut sub, &anchors, (1, 2))?;
    for (i, o) in forest.edge_origin.iter().enumerate() {
        colors[o.unwrap()] = sub[i];
    }
    EdgeColoring::new(colors)
}

/// An odd coloring with at most 3 colors of a connected loopless graph of
/// even order: a spanning odd co-forest in color 1, its complement forest
/// in colors 2 and 3.
pub fn even_order_color3(g: &MultiGraph) -> Result<EdgeColoring> {
    if g.has_loops() {
        return precondition("even_order_color3 needs a loopless graph");
    }
    if g.n() % 2 == 1 {
        return precondition("even_order_color3 needs even order");
    }
    let h = tjoin::spanning_odd_coforest(g)?;
    even_order_from_coforest(g, &h)
}

/// Color the odd co-forest `h` with 1 and odd-2-color its complement forest
/// with 2 and 3.
pub(crate) fn even_order_from_coforest(g: &MultiGraph, h: &EdgeSubset) -> Result<EdgeColoring> {
    let mut colors = vec![0 as Color; g.m()];
    for e in h.iter() {
        colors[e] = 1;
    }
    let rest = g.spanning(&h.complement());
    let mut sub = vec![0; rest.graph.m()];
    extend_forest(&rest.graph, &mut sub, &[], (2, 3))?;
    for (i, o) in rest.edge_origin.iter().enumerate() {
        colors[o.unwrap()] = sub[i];
    }
    let c = EdgeColoring::new(colors)?;
    if !verify_odd(g, &c)? {
        return Err(Error::ConstructionDivergence("even-order coloring failed to verify".into()));
    }
    Ok(c)
}
