//! Definition-level oracles shared by the integration tests. Nothing here
//! uses the library's validators or solvers.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rdrd::Graph;

fn adj(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Whether `f` is a (restrained) double Roman dominating function.
pub fn naive_drd(a: &[Vec<bool>], f: &[u8], restrained: bool) -> bool {
    let n = f.len();
    (0..n).all(|v| {
        let nb: Vec<u8> = (0..n).filter(|&u| a[v][u]).map(|u| f[u]).collect();
        match f[v] {
            0 => {
                let twos = nb.iter().filter(|&&x| x == 2).count();
                let threes = nb.iter().filter(|&&x| x == 3).count();
                (threes >= 1 || twos >= 2) && (!restrained || nb.contains(&0))
            }
            1 => nb.iter().any(|&x| x >= 2),
            _ => true,
        }
    })
}

/// Whether `f` is a (restrained) Roman dominating function.
pub fn naive_roman(a: &[Vec<bool>], f: &[u8], restrained: bool) -> bool {
    let n = f.len();
    (0..n).all(|v| {
        f[v] != 0
            || ((0..n).any(|u| a[v][u] && f[u] == 2)
                && (!restrained || (0..n).any(|u| a[v][u] && f[u] == 0)))
    }) && f.iter().all(|&x| x <= 2)
}

/// Whether `s` (a membership vector) is a dominating set of the given kind:
/// every outside vertex has at least `k` neighbors inside, plus an outside
/// neighbor when `restrained`.
pub fn naive_set(a: &[Vec<bool>], s: &[bool], k: usize, restrained: bool) -> bool {
    let n = s.len();
    (0..n).filter(|&v| !s[v]).all(|v| {
        let inside = (0..n).filter(|&u| a[v][u] && s[u]).count();
        inside >= k && (!restrained || (0..n).any(|u| a[v][u] && !s[u]))
    })
}

fn min_over_labelings(n: usize, base: u8, ok: impl Fn(&[u8]) -> bool) -> u32 {
    let mut best = u32::MAX;
    let mut f = vec![0u8; n];
    loop {
        let w: u32 = f.iter().map(|&x| x as u32).sum();
        if w < best && ok(&f) {
            best = w;
        }
        let mut i = 0;
        loop {
            if i == n {
                return best;
            }
            f[i] += 1;
            if f[i] < base {
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

fn min_over_sets(n: usize, ok: impl Fn(&[bool]) -> bool) -> u32 {
    (0u32..1 << n)
        .filter_map(|m| {
            let s: Vec<bool> = (0..n).map(|i| m >> i & 1 == 1).collect();
            ok(&s).then(|| m.count_ones())
        })
        .min()
        .unwrap()
}

/// All eight parameters by full enumeration, in the order
/// gamma, gamma_r, gamma_2, gamma_r2, gamma_R, gamma_rR, gamma_dR, gamma_rdR.
pub fn naive_params(g: &Graph) -> [u32; 8] {
    let a = adj(g);
    let n = g.order();
    [
        min_over_sets(n, |s| naive_set(&a, s, 1, false)),
        min_over_sets(n, |s| naive_set(&a, s, 1, true)),
        min_over_sets(n, |s| naive_set(&a, s, 2, false)),
        min_over_sets(n, |s| naive_set(&a, s, 2, true)),
        min_over_labelings(n, 3, |f| naive_roman(&a, f, false)),
        min_over_labelings(n, 3, |f| naive_roman(&a, f, true)),
        min_over_labelings(n, 4, |f| naive_drd(&a, f, false)),
        min_over_labelings(n, 4, |f| naive_drd(&a, f, true)),
    ]
}

pub fn naive_rdrd(g: &Graph) -> u32 {
    let a = adj(g);
    min_over_labelings(g.order(), 4, |f| naive_drd(&a, f, true))
}

/// All optimal RDRD labelings by full enumeration.
pub fn naive_rdrd_optima(g: &Graph) -> Vec<Vec<u8>> {
    let a = adj(g);
    let n = g.order();
    let best = naive_rdrd(g);
    let mut out = Vec::new();
    let mut f = vec![0u8; n];
    'outer: loop {
        if f.iter().map(|&x| x as u32).sum::<u32>() == best && naive_drd(&a, &f, true) {
            out.push(f.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                break 'outer;
            }
            f[i] += 1;
            if f[i] < 4 {
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
    out
}

/// Canonical string of a rooted tree (AHU encoding).
fn ahu(children: &[Vec<usize>], v: usize) -> String {
    let mut parts: Vec<String> = children[v].iter().map(|&c| ahu(children, c)).collect();
    parts.sort();
    format!("({})", parts.concat())
}

fn rooted_children(t: &Graph, root: usize) -> Vec<Vec<usize>> {
    let n = t.order();
    let mut children = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    let mut stack = vec![root];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        for &w in t.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                children[v].push(w);
                stack.push(w);
            }
        }
    }
    children
}

/// Isomorphism-invariant canonical form of a tree, rooted at its center(s).
pub fn tree_canonical(t: &Graph) -> String {
    let n = t.order();
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in t.neighbors(v) {
                if degree[w] == 0 {
                    continue;
                }
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
            degree[v] = 0;
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| ahu(&rooted_children(t, c), c))
        .min()
        .unwrap()
}

/// Every tree on `n` vertices up to isomorphism, for `1 <= n`.
pub fn all_trees(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1)];
    for m in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..m - 1 {
                let mut edges: Vec<(usize, usize)> = t.edges().collect();
                edges.push((v, m - 1));
                let grown = Graph::from_edges(m, edges).unwrap();
                if seen.insert(tree_canonical(&grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
}

/// All labeled graphs on `n` vertices that are connected.
pub fn all_connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let m = pairs.len();
    (0u64..1 << m).filter_map(move |mask| {
        let edges = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]);
        let g = Graph::from_edges(n, edges).unwrap();
        g.is_connected().then_some(g)
    })
}
