//! Seeded random generators. Every generator is a pure function of its
//! arguments: the same inputs give the same graph on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;

/// Connectivity rejections tried before overlaying a random spanning tree.
pub const CONNECT_ATTEMPTS: usize = 64;

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform labeled tree on `n` vertices, decoded from a random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = rng_for(seed);
    Graph::from_edges(n, prufer_tree_edges(n, &mut rng)).expect("Prüfer decoding yields a tree")
}

fn prufer_tree_edges<R: Rng>(n: usize, rng: &mut R) -> Vec<(usize, usize)> {
    match n {
        0 | 1 => return Vec::new(),
        2 => return vec![(0, 1)],
        _ => {}
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    decode_prufer(n, &code)
}

/// Linear-time Prüfer decoding.
pub(crate) fn decode_prufer(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for &c in code {
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 && c < ptr {
            leaf = c;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

/// Connected G(n, p) sample. The edge set is resampled until connected; after
/// [`CONNECT_ATTEMPTS`] failures a uniform random spanning tree is overlaid
/// on the last sample.
pub fn random_connected_graph(n: usize, edge_prob: f64, seed: u64) -> Graph {
    assert!(n >= 1, "random_connected_graph needs n >= 1");
    assert!(
        edge_prob > 0.0 && edge_prob <= 1.0,
        "edge probability must be in (0, 1]"
    );
    let mut rng = rng_for(seed);
    let mut last = Vec::new();
    for _ in 0..CONNECT_ATTEMPTS {
        last = sample_edges(n, edge_prob, &mut rng);
        let g = Graph::from_edges(n, last.iter().copied()).unwrap();
        if g.is_connected() {
            return g;
        }
    }
    last.extend(prufer_tree_edges(n, &mut rng));
    Graph::from_edges(n, last).unwrap()
}

fn sample_edges<R: Rng>(n: usize, p: f64, rng: &mut R) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Connected triangle-free graph: a random spanning tree plus random extra
/// edges, each kept only if it closes no triangle.
pub fn random_triangle_free_graph(n: usize, extra_edges: usize, seed: u64) -> Graph {
    let mut rng = rng_for(seed);
    let mut edges = prufer_tree_edges(n, &mut rng);
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in &edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .filter(|&(u, v)| !adj[u][v])
        .collect();
    candidates.shuffle(&mut rng);
    let mut added = 0;
    for (u, v) in candidates {
        if added == extra_edges {
            break;
        }
        if (0..n).any(|w| adj[u][w] && adj[v][w]) {
            continue;
        }
        adj[u][v] = true;
        adj[v][u] = true;
        edges.push((u, v));
        added += 1;
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random connected `r`-regular graph by the pairing model. Falls back to the
/// circulant graph on offsets `1..=r/2` (plus the antipodal matching for odd
/// `r`) when no connected simple pairing is found. Requires `r < n` and `n·r`
/// even.
pub fn random_regular_graph(n: usize, r: usize, seed: u64) -> Option<Graph> {
    if r >= n.max(1) || (n * r) % 2 == 1 {
        return None;
    }
    let mut rng = rng_for(seed);
    'attempt: for _ in 0..1000 {
        let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
        points.shuffle(&mut rng);
        let mut edges = Vec::with_capacity(points.len() / 2);
        for pair in points.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || edges.iter().any(|&(a, b)| (a, b) == (u.min(v), u.max(v))) {
                continue 'attempt;
            }
            edges.push((u.min(v), u.max(v)));
        }
        let g = Graph::from_edges(n, edges).unwrap();
        if g.is_connected() {
            return Some(g);
        }
    }
    let mut edges = Vec::new();
    for v in 0..n {
        for k in 1..=r / 2 {
            edges.push((v, (v + k) % n));
        }
        if r % 2 == 1 && v < n / 2 {
            edges.push((v, v + n / 2));
        }
    }
    Graph::from_edges(n, edges).ok()
}
