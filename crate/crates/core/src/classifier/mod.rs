//! The odd chromatic index of connected members of S, with certifying
//! colorings and, for index 4, an edge whose removal leaves a 3-colorable
//! graph.

pub mod augmentation;

use std::fmt;

use crate::coloring::{even_order_color3, verify_odd, Color, EdgeColoring, LocalParityProfile};
use crate::error::{precondition, Error, Result};
use crate::family;
use crate::multigraph::{Derived, EdgeId, EdgeSubset, MultiGraph, VertexId};
use crate::oracle::{self, SearchConfig, SearchOutcome};
use crate::sclass;
use crate::structure;

pub use augmentation::{color3_via_augmentation, Augmented, Route};

/// Which rule of the decision ladder fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    Empty,
    Odd,
    QuotientBipartite,
    FamilyF,
    Otherwise,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Empty => "empty",
            CaseTag::Odd => "odd",
            CaseTag::QuotientBipartite => "quotient-bipartite",
            CaseTag::FamilyF => "family-F",
            CaseTag::Otherwise => "otherwise",
        }
    }

    pub fn chi(self) -> u32 {
        match self {
            CaseTag::Empty => 0,
            CaseTag::Odd => 1,
            CaseTag::QuotientBipartite => 2,
            CaseTag::FamilyF => 4,
            CaseTag::Otherwise => 3,
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiReport {
    pub chi: u32,
    pub case: CaseTag,
    /// An odd coloring with exactly `chi` colors.
    pub coloring: EdgeColoring,
    /// Present iff `chi == 4`: the only edge of color 4.
    pub witness_edge: Option<EdgeId>,
}

/// How [`color3_traced`] obtained its coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Color3Strategy {
    EvenOrder,
    Bridge,
    Augmentation(Route),
    TwoVertexDeletion,
    Search,
}

#[derive(Clone, Debug)]
pub struct Witness {
    pub edge: EdgeId,
    /// `G - edge`, with the remaining edges in their original order.
    pub graph: MultiGraph,
    /// Odd coloring of `graph` with at most 3 colors.
    pub coloring: EdgeColoring,
}

fn check_input(g: &MultiGraph) -> Result<()> {
    if g.m() == 0 && g.n() <= 1 {
        return Ok(());
    }
    if !structure::is_connected(g) {
        return Err(Error::Disconnected);
    }
    if !sclass::is_in_s(g) {
        return Err(Error::NotInS);
    }
    Ok(())
}

/// Whether every block is a 2-connected member of F and every cut-vertex has
/// odd degree in exactly one of its blocks.
fn blocks_condition(g: &MultiGraph) -> Result<bool> {
    let bd = structure::blocks(g);
    for b in &bd.blocks {
        let sub = g.edge_induced(b).graph;
        if !structure::is_two_connected(&sub) || !sclass::is_in_s(&sub) || !family::is_in_f(&sub)? {
            return Ok(false);
        }
    }
    for &v in &bd.cut_vertices {
        let odd = bd
            .bcp_edges
            .iter()
            .filter(|&&(x, b)| x == v && g.degree_in(&bd.blocks[b], v) % 2 == 1)
            .count();
        if odd != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The decision ladder on a loopless connected member of S with edges.
fn decide_loopless(g: &MultiGraph) -> Result<CaseTag> {
    if g.is_odd_graph() {
        return Ok(CaseTag::Odd);
    }
    if sclass::chi_le_2(g)? {
        return Ok(CaseTag::QuotientBipartite);
    }
    if blocks_condition(g)? {
        return Ok(CaseTag::FamilyF);
    }
    Ok(CaseTag::Otherwise)
}

/// The odd chromatic index and the deciding case, without a coloring.
pub fn decide(g: &MultiGraph) -> Result<CaseTag> {
    check_input(g)?;
    if g.m() == 0 {
        return Ok(CaseTag::Empty);
    }
    decide_loopless(&g.loopless().graph)
}

/// Lift a coloring of the loopless part back to `g`; each loop takes the
/// smallest color present at its vertex.
fn with_loops(g: &MultiGraph, lp: &Derived, c: &EdgeColoring) -> Result<EdgeColoring> {
    let mut colors = vec![0 as Color; g.m()];
    for (e, o) in lp.edge_origin.iter().enumerate() {
        colors[o.unwrap()] = c.color(e);
    }
    let profile = LocalParityProfile::new(&lp.graph, c)?;
    for e in 0..g.m() {
        if g.is_loop(e) {
            let (x, _) = g.endpoints(e);
            colors[e] = *profile
                .colors_at(x)
                .first()
                .ok_or_else(|| Error::Precondition(format!("vertex {x} carries only loops")))?;
        }
    }
    EdgeColoring::new(colors)
}

fn checked(g: &MultiGraph, c: EdgeColoring, what: &str) -> Result<EdgeColoring> {
    if verify_odd(g, &c)? {
        Ok(c)
    } else {
        Err(Error::ConstructionDivergence(format!("{what} produced an invalid coloring")))
    }
}

pub fn classify(g: &MultiGraph) -> Result<ChiReport> {
    check_input(g)?;
    if g.m() == 0 {
        return Ok(ChiReport {
            chi: 0,
            case: CaseTag::Empty,
            coloring: EdgeColoring::new(Vec::new())?,
            witness_edge: None,
        });
    }
    let lp = g.loopless();
    let h = &lp.graph;
    let case = decide_loopless(h)?;
    let (inner, witness) = match case {
        CaseTag::Odd => (EdgeColoring::monochrome(h.m()), None),
        CaseTag::QuotientBipartite => (sclass::color2(h)?, None),
        CaseTag::Otherwise => (color3_loopless(h)?.0, None),
        CaseTag::FamilyF => {
            let (c, e) = color4_loopless(h)?;
            (c, Some(lp.edge_origin[e].unwrap()))
        }
        CaseTag::Empty => unreachable!("graph has edges"),
    };
    let coloring = checked(g, with_loops(g, &lp, &inner)?, "classifier")?;
    let chi = case.chi();
    if coloring.k() != chi as usize {
        return Err(Error::ConstructionDivergence(format!(
            "expected {chi} colors, the coloring uses {}",
            coloring.k()
        )));
    }
    Ok(ChiReport {
        chi,
        case,
        coloring,
        witness_edge: witness,
    })
}

/// An odd coloring with the least possible number of colors.
pub fn color_optimal(g: &MultiGraph) -> Result<EdgeColoring> {
    Ok(classify(g)?.coloring)
}

/// An odd coloring with at most 3 colors of a connected member of S whose
/// odd chromatic index is at most 3.
pub fn color3(g: &MultiGraph) -> Result<EdgeColoring> {
    Ok(color3_traced(g)?.0)
}

pub fn color3_traced(g: &MultiGraph) -> Result<(EdgeColoring, Color3Strategy)> {
    check_input(g)?;
    if g.m() == 0 {
        return precondition("nothing to color");
    }
    let lp = g.loopless();
    let (c, s) = color3_loopless(&lp.graph)?;
    Ok((checked(g, with_loops(g, &lp, &c)?, "color3")?, s))
}

fn absent_colors(g: &MultiGraph, colors: &[Color], x: VertexId) -> Vec<Color> {
    (1..=3)
        .filter(|&c| g.incident(x).iter().all(|&e| colors[e] != c))
        .collect()
}

/// Color the two sides of a bridge separately: the even side directly, the
/// odd side together with the bridge, then rename colors so the bridge gets
/// a color missing on the even side.
fn bridge_color3(g: &MultiGraph) -> Result<Option<EdgeColoring>> {
    let Some(b) = structure::bridges(g).iter().next() else {
        return Ok(None);
    };
    let minus = g.without_edges(&[b]);
    let (ids, _) = structure::component_ids(&minus.graph);
    let (x, y) = g.endpoints(b);
    let side_x: Vec<bool> = g.vertices().map(|t| ids[t] == ids[x]).collect();
    let n_x = side_x.iter().filter(|&&s| s).count();
    let (even_side, a) = if n_x % 2 == 0 { (side_x.clone(), x) } else { (side_x.iter().map(|s| !s).collect(), y) };
    let mut plus = even_side.iter().map(|s| !s).collect::<Vec<bool>>();
    plus[a] = true;

    let da = g.induced_by_mask(&even_side);
    let ca = even_order_color3(&da.graph)?;
    let db = g.induced_by_mask(&plus);
    let mut cb = even_order_color3(&db.graph)?;

    let mut colors = vec![0 as Color; g.m()];
    for (e, o) in da.edge_origin.iter().enumerate() {
        colors[o.unwrap()] = ca.color(e);
    }
    let free = absent_colors(g, &colors, a)[0];
    let bridge_in_b = db.edge_map(g.m())[b].unwrap();
    let bc = cb.color(bridge_in_b);
    cb.swap_colors(bc, free);
    for (e, o) in db.edge_origin.iter().enumerate() {
        colors[o.unwrap()] = cb.color(e);
    }
    let c = EdgeColoring::new(colors)?;
    Ok(verify_odd(g, &c)?.then_some(c))
}

/// Delete a 2-vertex, 3-color the even-order remainder and give the two
/// edges distinct colors missing at the respective neighbors.
fn two_vertex_color3(g: &MultiGraph) -> Result<Option<EdgeColoring>> {
    for v in g.vertices_of_degree(2) {
        let inc = g.incident_edges(v);
        let (e, f) = (inc[0], inc[1]);
        let (u, w) = (g.other_end(e, v), g.other_end(f, v));
        if u == w {
            continue;
        }
        let d = g.remove_vertex(v);
        if !structure::is_connected(&d.graph) {
            continue;
        }
        let c = even_order_color3(&d.graph)?;
        let mut colors = vec![0 as Color; g.m()];
        for (i, o) in d.edge_origin.iter().enumerate() {
            colors[o.unwrap()] = c.color(i);
        }
        let (au, aw) = (absent_colors(g, &colors, u), absent_colors(g, &colors, w));
        let pick = au.iter().find_map(|&a| aw.iter().find(|&&b| b != a).map(|&b| (a, b)));
        if let Some((a, b)) = pick {
            colors[e] = a;
            colors[f] = b;
            let c = EdgeColoring::new(colors)?;
            if verify_odd(g, &c)? {
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}

fn color3_loopless(g: &MultiGraph) -> Result<(EdgeColoring, Color3Strategy)> {
    if g.n().is_multiple_of(2) {
        if let Ok(c) = even_order_color3(g) {
            return Ok((c, Color3Strategy::EvenOrder));
        }
    }
    if let Some(c) = bridge_color3(g)? {
        return Ok((c, Color3Strategy::Bridge));
    }
    if augmentation::check_preconditions(g).is_ok() {
        if let Ok(a) = color3_via_augmentation(g) {
            return Ok((a.coloring, Color3Strategy::Augmentation(a.route)));
        }
    }
    if let Some(c) = two_vertex_color3(g)? {
        return Ok((c, Color3Strategy::TwoVertexDeletion));
    }
    match oracle::search_k(g, 3, &SearchConfig::default())? {
        SearchOutcome::Found(c) => Ok((c, Color3Strategy::Search)),
        SearchOutcome::Absent => precondition("the graph is not odd 3-edge-colorable"),
        SearchOutcome::Inconclusive => Err(Error::BudgetExhausted(SearchConfig::default().node_budget)),
    }
}

/// Removing an internal 2-vertex leaves a connected graph of even order;
/// 3-color it, close one edge at the 2-vertex with a missing color and give
/// the other edge color 4.
fn color4_loopless(g: &MultiGraph) -> Result<(EdgeColoring, EdgeId)> {
    if g.n().is_multiple_of(2) {
        return precondition("an odd 4-coloring with a single fourth edge needs odd order");
    }
    for v in g.vertices_of_degree(2) {
        let inc = g.incident_edges(v);
        let (e, f) = (inc[0], inc[1]);
        let w = g.other_end(f, v);
        if g.other_end(e, v) == w {
            continue;
        }
        let d = g.remove_vertex(v);
        if !structure::is_connected(&d.graph) {
            continue;
        }
        let c = even_order_color3(&d.graph)?;
        let mut colors = vec![0 as Color; g.m()];
        for (i, o) in d.edge_origin.iter().enumerate() {
            colors[o.unwrap()] = c.color(i);
        }
        colors[f] = absent_colors(g, &colors, w)[0];
        colors[e] = 4;
        let c = EdgeColoring::new(colors)?;
        if verify_odd(g, &c)? {
            return Ok((c, e));
        }
    }
    precondition("no internal 2-vertex with two distinct neighbors")
}

/// An odd coloring with colors `1..=4` in which color 4 appears on exactly
/// one edge, returned alongside. Works for any connected member of S with an
/// internal 2-vertex; when the index is 4 this is optimal.
pub fn color4_singleton(g: &MultiGraph) -> Result<(EdgeColoring, EdgeId)> {
    check_input(g)?;
    let lp = g.loopless();
    let (c, e) = color4_loopless(&lp.graph)?;
    let lifted = checked(g, with_loops(g, &lp, &c)?, "color4_singleton")?;
    Ok((lifted, lp.edge_origin[e].unwrap()))
}

/// For a graph of index 4: an edge whose removal leaves an odd
/// 3-edge-colorable graph, with the certifying coloring.
pub fn witness_edge(g: &MultiGraph) -> Result<Witness> {
    if decide(g)? != CaseTag::FamilyF {
        return precondition("a witness edge is only defined for index 4");
    }
    let (c, e) = color4_singleton(g)?;
    let minus = g.without_edges(&[e]);
    let coloring = EdgeColoring::new(minus.edge_origin.iter().map(|o| c.color(o.unwrap())).collect())?;
    let coloring = checked(&minus.graph, coloring, "witness")?;
    if coloring.max_color() > 3 {
        return Err(Error::ConstructionDivergence("witness coloring uses a fourth color".into()));
    }
    Ok(Witness {
        edge: e,
        graph: minus.graph,
        coloring,
    })
}

/// Edges carrying color 4.
pub fn fourth_class(c: &EdgeColoring) -> EdgeSubset {
    EdgeSubset::from_ids(c.len(), c.class(4)).expect("ids in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::named::*;

    fn chi(g: &MultiGraph) -> u32 {
        let r = classify(g).unwrap();
        assert!(verify_odd(g, &r.coloring).unwrap());
        assert_eq!(r.coloring.k(), r.chi as usize);
        r.chi
    }

    #[test]
    fn ladder_examples() {
        assert_eq!(chi(&complete_bipartite(3, 5)), 1);
        assert_eq!(chi(&complete(4)), 1);
        assert_eq!(chi(&subdivided_once(complete_bipartite(3, 3), 0)), 4);
        assert_eq!(chi(&subdivided_once(complete_bipartite(3, 5), 0)), 3);
        assert_eq!(chi(&subdivided_once(star(3), 0)), 2);
        assert_eq!(chi(&shannon(2, 1, 1)), 4);
        assert_eq!(chi(&path(2)), 2);
        assert_eq!(chi(&MultiGraph::new(1)), 0);
        assert_eq!(classify(&subdivided_once(complete_bipartite(3, 3), 0)).unwrap().case, CaseTag::FamilyF);
    }

    #[test]
    fn triangles_sharing_a_vertex() {
        // two triangles at vertex 0, pendant edges everywhere, one triangle
        // edge subdivided
        let mut g = MultiGraph::from_edges(
            10,
            &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (0, 9), (1, 5), (2, 6), (3, 7), (4, 8)],
        )
        .unwrap();
        g.subdivide(1, 1);
        assert!(sclass::is_in_s(&g));
        assert_eq!(chi(&g), 3);
        assert_eq!(color3_traced(&g).unwrap().1, Color3Strategy::Bridge);
    }

    #[test]
    fn rejects_outside_s() {
        assert!(matches!(classify(&cycle(5)), Err(Error::NotInS)));
        let two = complete(2).disjoint_union(&complete(2));
        assert!(matches!(classify(&two), Err(Error::Disconnected)));
    }

    #[test]
    fn loops_are_transparent() {
        let mut g = subdivided_once(complete_bipartite(3, 3), 0);
        g.add_edge(1, 1).unwrap();
        assert_eq!(chi(&g), 4);
        let mut k = complete(4);
        k.add_edge(0, 0).unwrap();
        assert_eq!(chi(&k), 1);
    }

    #[test]
    fn singleton_fourth_color() {
        for g in [subdivided_once(complete_bipartite(3, 3), 0), shannon(2, 1, 1)] {
            let (c, e) = color4_singleton(&g).unwrap();
            assert!(verify_odd(&g, &c).unwrap());
            assert_eq!(c.class(4), vec![e]);
            let w = witness_edge(&g).unwrap();
            assert_eq!(w.edge, e);
            assert!(verify_odd(&w.graph, &w.coloring).unwrap());
        }
        assert!(witness_edge(&complete(4)).is_err());
    }

    #[test]
    fn color3_strategies() {
        let g = subdivided_once(complete_bipartite(3, 5), 0);
        let (c, s) = color3_traced(&g).unwrap();
        assert!(verify_odd(&g, &c).unwrap());
        assert!(matches!(s, Color3Strategy::Augmentation(_)));
        let mut p = star(3);
        p.subdivide(0, 1);
        p.subdivide(1, 2);
        let (c, _) = color3_traced(&p).unwrap();
        assert!(verify_odd(&p, &c).unwrap());
    }
}
