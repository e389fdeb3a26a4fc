//! Shannon triangles, the family F of 2-connected graphs needing four
//! colors, gluing across 2-edge-cuts, and random generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{precondition, Error, Result};
use crate::multigraph::{named, EdgeId, MultiGraph, VertexId};
use crate::sclass;
use crate::structure::{self, TwoEdgeCut};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShannonType {
    /// Bouquet-size parities (2 = even, 1 = odd), non-increasing.
    pub parities: (u32, u32, u32),
    /// Bouquet sizes of 0-1, 1-2 and 0-2.
    pub sizes: [usize; 3],
}

pub fn shannon_type(g: &MultiGraph) -> Option<ShannonType> {
    if g.n() != 3 || g.has_loops() {
        return None;
    }
    let sizes = [g.multiplicity(0, 1), g.multiplicity(1, 2), g.multiplicity(0, 2)];
    if sizes.contains(&0) {
        return None;
    }
    let mut p: Vec<u32> = sizes.iter().map(|&s| if s % 2 == 0 { 2 } else { 1 }).collect();
    p.sort_unstable_by(|a, b| b.cmp(a));
    Some(ShannonType {
        parities: (p[0], p[1], p[2]),
        sizes,
    })
}

pub fn shannon_chi(t: &ShannonType) -> u32 {
    t.parities.0 + t.parities.1 + t.parities.2
}

/// Type (2,1,1) with minimum degree 2, i.e. both odd bouquets are single
/// edges.
pub fn is_shannon_211_min2(g: &MultiGraph) -> bool {
    matches!(shannon_type(g), Some(t) if t.parities == (2, 1, 1)) && g.min_degree() == 2
}

fn unique_two_vertex(g: &MultiGraph) -> Option<VertexId> {
    let twos = g.vertices_of_degree(2);
    (twos.len() == 1).then(|| twos[0])
}

pub fn is_subdivided_cubic_bipartite(g: &MultiGraph) -> bool {
    let Some(v) = unique_two_vertex(g) else {
        return false;
    };
    match g.suppress(v) {
        Ok(d) => {
            let h = d.graph;
            h.vertices().all(|x| h.degree(x) == 3) && structure::is_bipartite(&h) && structure::is_two_connected(&h)
        }
        Err(_) => false,
    }
}

/// The two halves of a graph across a nontrivial 2-edge-cut.
#[derive(Clone, Debug)]
pub struct GlueSplit {
    /// `x` holds the 2-vertex of the host.
    pub cut: TwoEdgeCut,
    /// `G[X]` plus the edge `x1 x2` (last edge).
    pub g_prime: MultiGraph,
    /// `G[X̄]` plus a new last vertex `z` joined to `y1` and `y2` (last two
    /// edges).
    pub g_dblprime: MultiGraph,
    /// Vertex of the host behind each vertex of `g_prime`.
    pub prime_origin: Vec<VertexId>,
    /// Vertex of the host behind each non-`z` vertex of `g_dblprime`.
    pub dblprime_origin: Vec<VertexId>,
}

fn check_one_two_vertex_block(g: &MultiGraph) -> Result<VertexId> {
    if !structure::is_two_connected(g) {
        return precondition("graph is not 2-connected");
    }
    unique_two_vertex(g).ok_or_else(|| Error::Precondition("graph needs exactly one 2-vertex".into()))
}

pub fn glue_split(g: &MultiGraph) -> Result<Option<GlueSplit>> {
    let v = check_one_two_vertex_block(g)?;
    Ok(split_unchecked(g, v))
}

fn split_unchecked(g: &MultiGraph, v: VertexId) -> Option<GlueSplit> {
    let mut cut = structure::nontrivial_two_edge_cut(g).ok()??;
    if !cut.x.contains(&v) {
        std::mem::swap(&mut cut.x, &mut cut.x_bar);
    }
    let mut in_x = vec![false; g.n()];
    for &x in &cut.x {
        in_x[x] = true;
    }
    let ends = |f: EdgeId| {
        let (a, b) = g.endpoints(f);
        if in_x[a] {
            (a, b)
        } else {
            (b, a)
        }
    };
    let (x1, y1) = ends(cut.edges.0);
    let (x2, y2) = ends(cut.edges.1);

    let gx = g.induced_by_mask(&in_x);
    let mut g_prime = gx.graph;
    g_prime.add_edge(gx.vertex_map[x1].unwrap(), gx.vertex_map[x2].unwrap()).ok()?;

    let not_x: Vec<bool> = in_x.iter().map(|b| !b).collect();
    let gy = g.induced_by_mask(&not_x);
    let mut g_dblprime = gy.graph;
    let z = g_dblprime.add_vertex();
    g_dblprime.add_edge(z, gy.vertex_map[y1].unwrap()).ok()?;
    g_dblprime.add_edge(z, gy.vertex_map[y2].unwrap()).ok()?;

    Some(GlueSplit {
        cut,
        g_prime,
        g_dblprime,
        prime_origin: gx.vertex_origin.into_iter().map(Option::unwrap).collect(),
        dblprime_origin: gy.vertex_origin.into_iter().map(Option::unwrap).collect(),
    })
}

/// Glue `g2` into the edge `edge = ab` of `g1` through the 2-vertex `z` of
/// `g2` (neighbours `y1, y2` in incidence order). The new edges are `a y1`
/// and `b y2`, or `a y2` and `b y1` when `swap` is set.
///
/// Vertices: those of `g1`, then those of `g2` without `z`. Edges: `g1`
/// without `edge`, `g2` without the two edges at `z`, then the two new ones.
pub fn glue_compose(g1: &MultiGraph, g2: &MultiGraph, edge: EdgeId, z: VertexId, swap: bool) -> Result<MultiGraph> {
    g1.check_edge(edge)?;
    g2.check_vertex(z)?;
    if g1.is_loop(edge) {
        return precondition("the broken edge must not be a loop");
    }
    if g2.degree(z) != 2 || g2.incident(z)[0] == g2.incident(z)[1] {
        return precondition(format!("vertex {z} of the second graph is not a 2-vertex"));
    }
    let (a, b) = g1.endpoints(edge);
    let y1 = g2.other_end(g2.incident(z)[0], z);
    let y2 = g2.other_end(g2.incident(z)[1], z);
    let off = g1.n();
    let shift = |x: VertexId| if x < z { x + off } else { x - 1 + off };
    let mut out = MultiGraph::new(g1.n() + g2.n() - 1);
    for (e, &(p, q)) in g1.edges().iter().enumerate() {
        if e != edge {
            out.add_edge(p, q)?;
        }
    }
    for &(p, q) in g2.edges() {
        if p != z && q != z {
            out.add_edge(shift(p), shift(q))?;
        }
    }
    let (t1, t2) = if swap { (y2, y1) } else { (y1, y2) };
    out.add_edge(a, shift(t1))?;
    out.add_edge(b, shift(t2))?;
    Ok(out)
}

/// Membership in F for a 2-connected member of S.
pub fn is_in_f(g: &MultiGraph) -> Result<bool> {
    if !structure::is_two_connected(g) {
        return precondition("is_in_f needs a 2-connected graph");
    }
    if !sclass::is_in_s(g) {
        return Err(Error::NotInS);
    }
    Ok(in_f(g))
}

fn in_f(g: &MultiGraph) -> bool {
    if !structure::is_two_connected(g) {
        return false;
    }
    let Some(v) = unique_two_vertex(g) else {
        return false;
    };
    let suppressed = match g.suppress(v) {
        Ok(d) => d.graph,
        Err(_) => return false,
    };
    if !(suppressed.is_odd_graph() && structure::is_bipartite(&suppressed) && structure::is_two_connected(&suppressed)) {
        return false;
    }
    if let Some(split) = split_unchecked(g, v) {
        return in_f(&split.g_prime) && in_f(&split.g_dblprime);
    }
    g.max_degree() == 3 || g.n() == 3
}

/// Bases for [`gen_f`]: 2-connected bipartite cubic graphs, each with one
/// edge subdivided.
pub fn cubic_catalog() -> Vec<(&'static str, MultiGraph)> {
    let mut out = vec![
        ("K3,3", named::complete_bipartite(3, 3)),
        ("Q3", named::cube()),
        ("Heawood", named::heawood()),
    ];
    for k in [4usize, 6] {
        out.push((if k == 4 { "prism4" } else { "prism6" }, named::prism(k)));
    }
    out.into_iter().map(|(s, g)| (s, named::subdivided_once(g, 0))).collect()
}

fn random_base(rng: &mut ChaCha8Rng, max_m: usize) -> Option<MultiGraph> {
    let mut options: Vec<MultiGraph> = [2usize, 4, 6].iter().map(|&a| named::shannon(a, 1, 1)).collect();
    options.extend(cubic_catalog().into_iter().map(|(_, g)| g));
    options.retain(|g| g.m() <= max_m);
    let mut g = options.choose(rng)?.clone();
    // subdivide a random edge of a cubic base instead of edge 0
    if g.n() > 3 && rng.gen_bool(0.5) {
        let v = g.vertices_of_degree(2)[0];
        let s = g.suppress(v).expect("base has a 2-vertex").graph;
        let e = rng.gen_range(0..s.m());
        g = named::subdivided_once(s, e);
    }
    Some(g)
}

/// Random relabelling of vertices and edges.
pub fn shuffled(g: &MultiGraph, rng: &mut impl Rng) -> MultiGraph {
    let mut perm: Vec<VertexId> = g.vertices().collect();
    perm.shuffle(rng);
    let mut edges: Vec<(VertexId, VertexId)> = g.edges().iter().map(|&(a, b)| (perm[a], perm[b])).collect();
    edges.shuffle(rng);
    MultiGraph::from_edges(g.n(), &edges).expect("relabelling stays in range")
}

#[derive(Clone, Copy, Debug)]
pub struct GenFConfig {
    /// Upper bound on the number of edges.
    pub budget: usize,
    /// Chance of stopping after each gluing step.
    pub stop_probability: f64,
}

impl GenFConfig {
    pub fn new(budget: usize) -> Self {
        Self {
            budget,
            stop_probability: 0.15,
        }
    }
}

/// A random member of F with at most `size_budget` edges (at least 4).
pub fn gen_f(seed: u64, size_budget: usize) -> Result<MultiGraph> {
    gen_f_with(seed, GenFConfig::new(size_budget))
}

pub fn gen_f_with(seed: u64, cfg: GenFConfig) -> Result<MultiGraph> {
    if cfg.budget < 4 {
        return precondition("gen_f needs an edge budget of at least 4");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = random_base(&mut rng, cfg.budget).expect("the 4-edge Shannon triangle fits");
    loop {
        if rng.gen_bool(cfg.stop_probability) {
            break;
        }
        let room = cfg.budget + 1 - g.m();
        let Some(b) = random_base(&mut rng, room) else {
            break;
        };
        let (g1, g2) = if rng.gen_bool(0.5) { (&g, &b) } else { (&b, &g) };
        let e = rng.gen_range(0..g1.m());
        let z = g2.vertices_of_degree(2)[0];
        g = glue_compose(g1, g2, e, z, rng.gen_bool(0.5))?;
    }
    Ok(shuffled(&g, &mut rng))
}

/// A random connected member of S with at most `n_budget` vertices (at
/// least 2): a random odd multigraph, possibly with loops and parallel
/// edges, with random edges subdivided.
pub fn gen_s(seed: u64, n_budget: usize) -> Result<MultiGraph> {
    if n_budget < 2 {
        return precondition("gen_s needs a vertex budget of at least 2");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_n0 = (n_budget / 2) * 2;
    let n0 = 2 * rng.gen_range(1..=max_n0 / 2);
    let mut g0 = MultiGraph::new(n0);
    for v in 1..n0 {
        let p = rng.gen_range(0..v);
        g0.add_edge(p, v)?;
    }
    for _ in 0..rng.gen_range(0..=n0 / 2 + 1) {
        let a = rng.gen_range(0..n0);
        let b = if rng.gen_bool(0.1) { a } else { rng.gen_range(0..n0) };
        g0.add_edge(a, b)?;
    }
    let mut even: Vec<VertexId> = g0.vertices().filter(|&v| g0.degree(v).is_multiple_of(2)).collect();
    even.shuffle(&mut rng);
    for pair in even.chunks(2) {
        g0.add_edge(pair[0], pair[1])?;
    }
    let extra = rng.gen_range(0..=n_budget - n0);
    for _ in 0..extra {
        let e = rng.gen_range(0..g0.m());
        g0.subdivide(e, 1);
    }
    Ok(shuffled(&g0, &mut rng))
}
