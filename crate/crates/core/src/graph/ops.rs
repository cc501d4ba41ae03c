//! Graph operators. Vertex numbering of the result is documented per function.

use super::Graph;

/// `G + H`: `g`'s vertices first, then `h`'s shifted by `g.order()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.order();
    let edges = g
        .edges()
        .chain(h.edges().map(|(u, v)| (u + shift, v + shift)));
    Graph::from_edges(g.order() + h.order(), edges).expect("union of simple graphs is simple")
}

/// `G ∨ H`: the disjoint union plus every edge between the two parts.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let shift = g.order();
    let cross = (0..g.order()).flat_map(|u| (0..h.order()).map(move |v| (u, v + shift)));
    let edges = g
        .edges()
        .chain(h.edges().map(|(u, v)| (u + shift, v + shift)))
        .chain(cross);
    Graph::from_edges(g.order() + h.order(), edges).expect("join of simple graphs is simple")
}

/// `G □ H` with vertex `(u, v)` at index `u * h.order() + v`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.order();
    let mut edges = Vec::new();
    for u in g.vertices() {
        for (a, b) in h.edges() {
            edges.push((u * m + a, u * m + b));
        }
    }
    for (a, b) in g.edges() {
        for v in h.vertices() {
            edges.push((a * m + v, b * m + v));
        }
    }
    Graph::from_edges(g.order() * m, edges).expect("product of simple graphs is simple")
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let edges = (0..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v));
    Graph::from_edges(n, edges).expect("complement of a simple graph is simple")
}
