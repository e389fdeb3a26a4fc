//! Canonical forms of small multigraphs for isomorphism testing.
//!
//! Colour refinement followed by an individualisation search tree; the
//! canonical code is the lexicographically least upper-triangular
//! multiplicity matrix (loops on the diagonal) over all leaves. Two vertices
//! in one cell whose rows agree apart from each other are interchangeable,
//! so only one of them is individualised.

use crate::multigraph::{MultiGraph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub code: Vec<u16>,
}

impl CanonicalForm {
    /// The graph described by the code, vertices in canonical order.
    pub fn to_graph(&self) -> MultiGraph {
        let mut g = MultiGraph::new(self.n);
        let mut it = self.code.iter();
        for i in 0..self.n {
            for j in i..self.n {
                for _ in 0..*it.next().unwrap() {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        g
    }
}

fn matrix(g: &MultiGraph) -> Vec<Vec<u16>> {
    let mut a = vec![vec![0u16; g.n()]; g.n()];
    for &(x, y) in g.edges() {
        a[x][y] += 1;
        if x != y {
            a[y][x] += 1;
        }
    }
    a
}

/// Refine an ordered partition (cells as vertex lists) to equitability.
fn refine(a: &[Vec<u16>], mut cells: Vec<Vec<VertexId>>) -> Vec<Vec<VertexId>> {
    let n = a.len();
    loop {
        let mut cell_of = vec![0usize; n];
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let mut next = Vec::with_capacity(cells.len());
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, VertexId)> = c
                .iter()
                .map(|&v| {
                    let mut sig = vec![0u32; cells.len() + 1];
                    for w in 0..n {
                        if a[v][w] > 0 {
                            sig[cell_of[w]] += a[v][w] as u32;
                        }
                    }
                    sig[cells.len()] = a[v][v] as u32;
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn code_of(a: &[Vec<u16>], order: &[VertexId]) -> Vec<u16> {
    let n = order.len();
    let mut code = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            code.push(a[order[i]][order[j]]);
        }
    }
    code
}

fn twins(a: &[Vec<u16>], u: VertexId, w: VertexId) -> bool {
    a[u][u] == a[w][w] && (0..a.len()).all(|x| x == u || x == w || a[u][x] == a[w][x])
}

fn search(a: &[Vec<u16>], cells: Vec<Vec<VertexId>>, best: &mut Option<Vec<u16>>) {
    let cells = refine(a, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<VertexId> = cells.iter().map(|c| c[0]).collect();
        let code = code_of(a, &order);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    };
    let cell = cells[target].clone();
    let mut tried: Vec<VertexId> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&t| twins(a, t, v)) {
            continue;
        }
        tried.push(v);
        let mut next = cells[..target].to_vec();
        next.push(vec![v]);
        next.push(cell.iter().copied().filter(|&x| x != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        search(a, next, best);
    }
}

pub fn canonical_form(g: &MultiGraph) -> CanonicalForm {
    let a = matrix(g);
    let mut by_degree: Vec<(usize, VertexId)> = g.vertices().map(|v| (g.degree(v), v)).collect();
    by_degree.sort();
    let mut cells: Vec<Vec<VertexId>> = Vec::new();
    for (i, &(d, v)) in by_degree.iter().enumerate() {
        if i > 0 && by_degree[i - 1].0 == d {
            cells.last_mut().unwrap().push(v);
        } else {
            cells.push(vec![v]);
        }
    }
    let mut best = None;
    search(&a, cells, &mut best);
    CanonicalForm {
        n: g.n(),
        code: best.unwrap_or_default(),
    }
}

pub fn is_isomorphic(a: &MultiGraph, b: &MultiGraph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_form(a) == canonical_form(b)
}
