//! Linear-time γ_rdR on trees.
//!
//! Each vertex carries one of ten states describing its label and which of
//! its own obligations are still open after its subtree is fixed:
//!
//! | state | label | open obligation                                     |
//! |-------|-------|-----------------------------------------------------|
//! | 0..6  | 0     | coverage (none / one 2 / done) × has 0-neighbor      |
//! | 6     | 1     | still needs a neighbor labeled 2 or 3               |
//! | 7     | 1     | satisfied                                           |
//! | 8     | 2     | none                                                |
//! | 9     | 3     | none                                                |
//!
//! For label 0 the state is `2 * coverage + restrained`, with coverage 0 =
//! no 2- or 3-child, 1 = exactly one 2-child, 2 = satisfied.

use std::collections::VecDeque;
use std::time::Instant;

use crate::exact::{SolveError, SolveResult, Witness};
use crate::graph::Graph;
use crate::labelings::Labeling;

const STATES: usize = 10;
const ONE_OPEN: usize = 6;
const ONE_DONE: usize = 7;
const TWO: usize = 8;
const THREE: usize = 9;

fn label_of(s: usize) -> u8 {
    match s {
        0..=5 => 0,
        ONE_OPEN | ONE_DONE => 1,
        TWO => 2,
        _ => 3,
    }
}

/// State of a fresh vertex with label `x` and no children.
const INITIAL: [usize; 4] = [0, ONE_OPEN, TWO, THREE];

/// States whose obligations are all met without help from a parent.
const CLOSED: [usize; 4] = [5, ONE_DONE, TWO, THREE];

/// Whether a child in state `cs` is fully satisfied once its parent has
/// label `parent`.
fn child_closed_by(cs: usize, parent: u8) -> bool {
    match cs {
        0..=5 => {
            let (coverage, restrained) = (cs / 2, cs % 2);
            let covered = match coverage {
                0 => parent == 3,
                1 => parent >= 2,
                _ => true,
            };
            covered && (restrained == 1 || parent == 0)
        }
        ONE_OPEN => parent >= 2,
        _ => true,
    }
}

/// Parent state after adopting a child with label `child`.
fn absorb(ps: usize, child: u8) -> usize {
    match ps {
        0..=5 => {
            let (mut coverage, mut restrained) = (ps / 2, ps % 2);
            match child {
                0 => restrained = 1,
                2 => coverage = (coverage + 1).min(2),
                3 => coverage = 2,
                _ => {}
            }
            2 * coverage + restrained
        }
        ONE_OPEN if child >= 2 => ONE_DONE,
        _ => ps,
    }
}

/// γ_rdR of a tree, rooted at vertex 0.
pub fn gamma_rdrd_tree(t: &Graph) -> Result<SolveResult, SolveError> {
    gamma_rdrd_tree_rooted(t, 0)
}

/// γ_rdR of a tree, with the dynamic program rooted at `root`. The value does
/// not depend on the root; the witness may.
pub fn gamma_rdrd_tree_rooted(t: &Graph, root: usize) -> Result<SolveResult, SolveError> {
    let start = Instant::now();
    let n = t.order();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if !t.is_tree() || root >= n {
        return Err(SolveError::NotATree);
    }
    let inf = 3 * n as u32 + 1;

    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([root]);
    parent[root] = root;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in t.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }

    let mut dp = vec![[inf; STATES]; n];
    // back[c][s] = (parent state before folding c, state of c) for the parent
    // reaching state s right after folding child c
    let mut back = vec![[(usize::MAX, usize::MAX); STATES]; n];
    for &v in order.iter().rev() {
        let mut cur = [inf; STATES];
        for (x, &s) in INITIAL.iter().enumerate() {
            cur[s] = x as u32;
        }
        for &c in t.neighbors(v).iter().filter(|&&c| parent[c] == v) {
            let mut next = [inf; STATES];
            let mut ptr = [(usize::MAX, usize::MAX); STATES];
            for (ps, &pcost) in cur.iter().enumerate() {
                if pcost >= inf {
                    continue;
                }
                let pl = label_of(ps);
                for (cs, &ccost) in dp[c].iter().enumerate() {
                    if ccost >= inf || !child_closed_by(cs, pl) {
                        continue;
                    }
                    let ns = absorb(ps, label_of(cs));
                    let cost = pcost + ccost;
                    if cost < next[ns] {
                        next[ns] = cost;
                        ptr[ns] = (ps, cs);
                    }
                }
            }
            cur = next;
            back[c] = ptr;
        }
        dp[v] = cur;
    }

    let root_state = CLOSED
        .into_iter()
        .min_by_key(|&s| (dp[root][s], label_of(s)))
        .unwrap();
    let value = dp[root][root_state];

    let mut labels = vec![0u8; n];
    let mut stack = vec![(root, root_state)];
    while let Some((v, mut s)) = stack.pop() {
        let children = t.neighbors(v).iter().filter(|&&c| parent[c] == v);
        for &c in children.rev() {
            let (prev, cs) = back[c][s];
            stack.push((c, cs));
            s = prev;
        }
        labels[v] = label_of(s);
    }

    let witness = Labeling::new(labels).expect("labels in range");
    debug_assert!(crate::labelings::is_rdrd(t, &witness));
    debug_assert_eq!(witness.weight(), value);
    Ok(SolveResult {
        value,
        witness: Witness::Labeling(witness),
        nodes_explored: n as u64,
        elapsed: start.elapsed(),
    })
}
