//! Constructors for the named graph families.
//!
//! Every constructor is deterministic. [`FamilySpec`] bundles a family with
//! its parameters so callers (the CLI, fuzz logs) can record where a graph
//! came from.

use std::fmt;

use thiserror::Error;

use crate::analysis::{classify_small, Classification};
use crate::graph::{
    cartesian_product, complement, disjoint_union, join, to_graph6, Graph, GraphError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{0}")]
    OutOfRange(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{family} instance collapses to a smaller family ({found})")]
    Degenerate { family: String, found: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn out_of_range(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::OutOfRange(msg.into())
}

fn precondition(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::Precondition(msg.into())
}

/// `K_{1,n-1}` on `n ≥ 1` vertices, center 0.
pub fn star(n: usize) -> Result<Graph, ConstructionError> {
    if n == 0 {
        return Err(out_of_range("star needs n >= 1"));
    }
    Ok(Graph::from_edges(n, (1..n).map(|i| (0, i)))?)
}

/// `S_{p,q}`: centers 0 and 1, then `p` leaves on 0, then `q` leaves on 1.
pub fn double_star(p: usize, q: usize) -> Result<Graph, ConstructionError> {
    family_t1(p, q, 0)
}

pub fn path(n: usize) -> Result<Graph, ConstructionError> {
    if n == 0 {
        return Err(out_of_range("path needs n >= 1"));
    }
    Ok(Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?)
}

pub fn cycle(n: usize) -> Result<Graph, ConstructionError> {
    if n < 3 {
        return Err(out_of_range("cycle needs n >= 3"));
    }
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?)
}

pub fn complete(n: usize) -> Result<Graph, ConstructionError> {
    if n == 0 {
        return Err(out_of_range("complete graph needs n >= 1"));
    }
    Ok(complement(&Graph::empty(n)))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, ConstructionError> {
    if a == 0 || b == 0 {
        return Err(out_of_range("complete bipartite graph needs a, b >= 1"));
    }
    Ok(join(&Graph::empty(a), &Graph::empty(b)))
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i – i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, edges).unwrap()
}

/// Point–line incidences of the Fano plane with lines `{i, i+1, i+3} mod 7`;
/// points are `0..7`, line `i` is vertex `7 + i`.
pub const HEAWOOD_EDGES: [(usize, usize); 21] = [
    (0, 7),
    (1, 7),
    (3, 7),
    (1, 8),
    (2, 8),
    (4, 8),
    (2, 9),
    (3, 9),
    (5, 9),
    (3, 10),
    (4, 10),
    (6, 10),
    (4, 11),
    (5, 11),
    (0, 11),
    (5, 12),
    (6, 12),
    (1, 12),
    (6, 13),
    (0, 13),
    (2, 13),
];

pub fn heawood() -> Graph {
    Graph::from_edges(14, HEAWOOD_EDGES).unwrap()
}

/// `K_n` minus the perfect matching `{2i, 2i+1}`.
pub fn h_n(n: usize) -> Result<Graph, ConstructionError> {
    if n < 4 || n % 2 == 1 {
        return Err(out_of_range("h_n needs an even n >= 4"));
    }
    let edges = (0..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .filter(|&(u, v)| !(u % 2 == 0 && v == u + 1));
    Ok(Graph::from_edges(n, edges)?)
}

/// `K_p □ K_p`.
pub fn hamming(p: usize) -> Result<Graph, ConstructionError> {
    let k = complete(p)?;
    Ok(cartesian_product(&k, &k))
}

/// Cycle `0..t` with `t = (p+q)s`, then `x_1..x_p`, `y_1..y_q`, `z_1..z_q`.
/// `x_i` sees the `i`-th block of `s` consecutive cycle vertices; `y_j` and
/// `z_j` both see block `p + j`.
pub fn sharpness_h(s: usize, p: usize, q: usize) -> Result<Graph, ConstructionError> {
    if s < 4 || p == 0 || q == 0 {
        return Err(out_of_range("sharpness_H needs s >= 4, p >= 1, q >= 1"));
    }
    let t = (p + q) * s;
    let mut edges: Vec<(usize, usize)> = (0..t).map(|i| (i, (i + 1) % t)).collect();
    let block = |b: usize| b * s..(b + 1) * s;
    for i in 0..p {
        edges.extend(block(i).map(|c| (c, t + i)));
    }
    for j in 0..q {
        for c in block(p + j) {
            edges.push((c, t + p + j));
            edges.push((c, t + p + q + j));
        }
    }
    Ok(Graph::from_edges(t + p + 2 * q, edges)?)
}

/// For each vertex `v_i` of `g`, a gadget `a_i, b_i, c_i, d_i, e_i, f_i` at
/// indices `n + 6i .. n + 6i + 6`: `K_{2,4}` between `{a, b}` and
/// `{c, d, e, f}`, plus `cd`, `ef`, `v_i a_i` and `v_i f_i`.
pub fn hardness_gadget(g: &Graph) -> Result<Graph, ConstructionError> {
    let n = g.order();
    if n == 0 {
        return Err(out_of_range("gadget needs a nonempty graph"));
    }
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for i in 0..n {
        let [a, b, c, d, e, f] = std::array::from_fn(|k| n + 6 * i + k);
        for hub in [a, b] {
            edges.extend([c, d, e, f].map(|w| (hub, w)));
        }
        edges.extend([(c, d), (e, f), (i, a), (i, f)]);
    }
    Ok(Graph::from_edges(7 * n, edges)?)
}

/// Double star on centers `u = 0` and `v = subdivisions + 1` whose center edge
/// is subdivided by vertices `1..=subdivisions`; `p` leaves on `u` follow,
/// then `q` leaves on `v`.
pub fn family_t1(p: usize, q: usize, subdivisions: usize) -> Result<Graph, ConstructionError> {
    if p == 0 || q == 0 || subdivisions > 2 {
        return Err(out_of_range(
            "T1 needs p, q >= 1 and at most two subdivisions",
        ));
    }
    let v = subdivisions + 1;
    let mut edges: Vec<(usize, usize)> = (0..v).map(|i| (i, i + 1)).collect();
    let first = v + 1;
    edges.extend((first..first + p).map(|l| (0, l)));
    edges.extend((first + p..first + p + q).map(|l| (v, l)));
    Ok(Graph::from_edges(first + p + q, edges)?)
}

/// Checks the skeleton conditions: a tree on at least four vertices whose
/// support vertices carry at most two leaves each, with every pair of leaves
/// on different supports at distance divisible by three.
pub fn check_t2_skeleton(t: &Graph) -> Result<(), ConstructionError> {
    if !t.is_tree() {
        return Err(precondition("skeleton is not a tree"));
    }
    if t.order() < 4 {
        return Err(precondition("skeleton needs at least four vertices"));
    }
    let leaves: Vec<usize> = t.vertices().filter(|&v| t.degree(v) == 1).collect();
    let support = |l: usize| t.neighbors(l)[0];
    for &s in &t.predicates().support_vertices.iter().collect::<Vec<_>>() {
        let count = t.neighbors(s).iter().filter(|&&w| t.degree(w) == 1).count();
        if count > 2 {
            return Err(precondition(format!(
                "support vertex {s} has {count} leaves"
            )));
        }
    }
    for &a in &leaves {
        let dist = t.bfs_distances(a);
        for &b in leaves
            .iter()
            .filter(|&&b| b > a && support(b) != support(a))
        {
            let d = dist[b].unwrap();
            if !d.is_multiple_of(3) {
                return Err(precondition(format!(
                    "leaves {a} and {b} are at distance {d}"
                )));
            }
        }
    }
    Ok(())
}

/// Vertices of a valid skeleton that may receive pendant attachments: those at
/// distance divisible by three from the smallest leaf `x`, plus the other leaf
/// on `x`'s support if there is one.
pub fn t2_attachment_points(t: &Graph) -> Vec<usize> {
    let Some(x) = t.vertices().find(|&v| t.degree(v) == 1) else {
        return Vec::new();
    };
    let dist = t.bfs_distances(x);
    let sx = t.neighbors(x)[0];
    t.vertices()
        .filter(|&v| {
            let d = dist[v].unwrap();
            d.is_multiple_of(3) || (d == 2 && t.degree(v) == 1 && t.neighbors(v)[0] == sx)
        })
        .collect()
}

/// Skeleton plus `attach_counts[v]` new pendant vertices on each skeleton
/// vertex `v`; new vertices are numbered after the skeleton in vertex order.
pub fn family_t2(skeleton: &Graph, attach_counts: &[usize]) -> Result<Graph, ConstructionError> {
    check_t2_skeleton(skeleton)?;
    let n = skeleton.order();
    if attach_counts.len() != n {
        return Err(precondition(format!(
            "expected {n} attachment counts, got {}",
            attach_counts.len()
        )));
    }
    let eligible = t2_attachment_points(skeleton);
    let mut edges: Vec<(usize, usize)> = skeleton.edges().collect();
    let mut next = n;
    for (v, &r) in attach_counts.iter().enumerate() {
        if r > 0 && !eligible.contains(&v) {
            return Err(precondition(format!(
                "vertex {v} is not an attachment point"
            )));
        }
        for _ in 0..r {
            edges.push((v, next));
            next += 1;
        }
    }
    Ok(Graph::from_edges(next, edges)?)
}

fn require_no_isolated(h: &Graph, what: &str) -> Result<(), ConstructionError> {
    if h.order() == 0 {
        return Err(precondition(format!("{what} must be nonempty")));
    }
    if h.min_degree() == 0 {
        return Err(precondition(format!("{what} has an isolated vertex")));
    }
    Ok(())
}

/// Rejects instances the small-value classifier places in an earlier class
/// than `expected`.
fn require_class(g: Graph, family: &str, expected: u32) -> Result<Graph, ConstructionError> {
    let tag = classify_small(&g).expect("constructed graphs are connected");
    match tag.classification.implied_value() {
        Some(v) if v < expected => Err(ConstructionError::Degenerate {
            family: family.to_string(),
            found: tag.classification.to_string(),
        }),
        _ => Ok(g),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThetaVariant {
    /// `K̄₂ ∨ H`: the two joined vertices are `0` and `1`.
    K2barJoin,
    /// `K₁ ∨ (K₁ + H)`: universal vertex `0`, pendant `1`.
    K1JoinK1PlusH,
    P3,
}

impl ThetaVariant {
    pub fn name(self) -> &'static str {
        match self {
            ThetaVariant::K2barJoin => "k2bar_join",
            ThetaVariant::K1JoinK1PlusH => "k1_join_k1_plus_h",
            ThetaVariant::P3 => "p3",
        }
    }
}

/// A member of the `γ_rdR = 4` family. Instances that in fact have
/// `γ_rdR = 3` (for example `K̄₂ ∨ H` where `H` has a universal vertex) are
/// rejected as [`ConstructionError::Degenerate`].
pub fn family_theta(variant: ThetaVariant, h: Option<&Graph>) -> Result<Graph, ConstructionError> {
    let g = match (variant, h) {
        (ThetaVariant::P3, None) => return path(3),
        (ThetaVariant::P3, Some(_)) => return Err(precondition("the P3 variant takes no graph")),
        (_, None) => return Err(precondition("this variant needs a graph H")),
        (ThetaVariant::K2barJoin, Some(h)) => {
            require_no_isolated(h, "H")?;
            join(&Graph::empty(2), h)
        }
        (ThetaVariant::K1JoinK1PlusH, Some(h)) => {
            require_no_isolated(h, "H")?;
            join(&Graph::empty(1), &disjoint_union(&Graph::empty(1), h))
        }
    };
    require_class(g, &format!("theta {}", variant.name()), 4)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OmegaVariant {
    O1,
    O2,
    O3,
    O4,
    O5,
}

impl OmegaVariant {
    pub const ALL: [OmegaVariant; 5] = [
        OmegaVariant::O1,
        OmegaVariant::O2,
        OmegaVariant::O3,
        OmegaVariant::O4,
        OmegaVariant::O5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OmegaVariant::O1 => "o1",
            OmegaVariant::O2 => "o2",
            OmegaVariant::O3 => "o3",
            OmegaVariant::O4 => "o4",
            OmegaVariant::O5 => "o5",
        }
    }
}

/// A member of the `γ_rdR = 5` family built on `h`, whose vertices come first.
///
/// * O1: `x, y, z` at `m, m+1, m+2`; `x` and `y` see all of `h`; `xz`.
/// * O2: O1 plus `z` joined to `targets` (nonempty, non-universal in `h`).
/// * O3: O1 plus `zy`.
/// * O4: `x` universal at `m`, pendants `a, b` at `m+1, m+2`.
/// * O5: `x` at `m` sees all of `h`; `y` at `m+1` sees `targets`
///   (`1 ≤ |targets| ≤ m−1`).
///
/// `targets` must be empty for O1, O3 and O4. Instances whose classification
/// is `γ_rdR ≤ 4` are rejected as [`ConstructionError::Degenerate`].
pub fn family_omega(
    variant: OmegaVariant,
    h: &Graph,
    targets: &[usize],
) -> Result<Graph, ConstructionError> {
    require_no_isolated(h, "H")?;
    let m = h.order();
    if let Some(&t) = targets.iter().find(|&&t| t >= m) {
        return Err(precondition(format!("target {t} is not a vertex of H")));
    }
    let mut sorted = targets.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != targets.len() {
        return Err(precondition("targets repeat a vertex"));
    }
    let uses_targets = matches!(variant, OmegaVariant::O2 | OmegaVariant::O5);
    if !uses_targets && !targets.is_empty() {
        return Err(precondition(format!("{} takes no targets", variant.name())));
    }
    let mut edges: Vec<(usize, usize)> = h.edges().collect();
    let (x, y, z) = (m, m + 1, m + 2);
    let order = match variant {
        OmegaVariant::O1 | OmegaVariant::O2 | OmegaVariant::O3 => {
            edges.extend((0..m).flat_map(|v| [(v, x), (v, y)]));
            edges.push((x, z));
            if variant == OmegaVariant::O2 {
                if targets.is_empty() {
                    return Err(precondition("O2 needs at least one target"));
                }
                if let Some(&t) = targets.iter().find(|&&t| h.degree(t) == m - 1) {
                    return Err(precondition(format!("target {t} is universal in H")));
                }
                edges.extend(targets.iter().map(|&t| (t, z)));
            }
            if variant == OmegaVariant::O3 {
                edges.push((y, z));
            }
            m + 3
        }
        OmegaVariant::O4 => {
            edges.extend((0..m).map(|v| (v, x)));
            edges.extend([(x, m + 1), (x, m + 2)]);
            m + 3
        }
        OmegaVariant::O5 => {
            if targets.is_empty() || targets.len() >= m {
                return Err(precondition(format!(
                    "O5 needs between 1 and {} targets",
                    m - 1
                )));
            }
            edges.extend((0..m).map(|v| (v, x)));
            edges.extend(targets.iter().map(|&t| (t, y)));
            m + 2
        }
    };
    let g = Graph::from_edges(order, edges)?;
    require_class(g, &format!("omega {}", variant.name()), 5)
}

/// A family together with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Star {
        n: usize,
    },
    DoubleStar {
        p: usize,
        q: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    Petersen,
    Heawood,
    HN {
        n: usize,
    },
    Hamming {
        p: usize,
    },
    SharpnessH {
        s: usize,
        p: usize,
        q: usize,
    },
    Gadget {
        base: Graph,
    },
    T1 {
        p: usize,
        q: usize,
        subdivisions: usize,
    },
    T2 {
        skeleton: Graph,
        attach_counts: Vec<usize>,
    },
    Theta {
        variant: ThetaVariant,
        h: Option<Graph>,
    },
    Omega {
        variant: OmegaVariant,
        h: Graph,
        targets: Vec<usize>,
    },
}

impl FamilySpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::Star { .. } => "star",
            FamilySpec::DoubleStar { .. } => "double_star",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::CompleteBipartite { .. } => "complete_bipartite",
            FamilySpec::Petersen => "petersen",
            FamilySpec::Heawood => "heawood",
            FamilySpec::HN { .. } => "h_n",
            FamilySpec::Hamming { .. } => "hamming",
            FamilySpec::SharpnessH { .. } => "sharpness_H",
            FamilySpec::Gadget { .. } => "gadget",
            FamilySpec::T1 { .. } => "T1",
            FamilySpec::T2 { .. } => "T2",
            FamilySpec::Theta { .. } => "theta",
            FamilySpec::Omega { .. } => "omega",
        }
    }

    pub fn build(&self) -> Result<Graph, ConstructionError> {
        match self {
            FamilySpec::Star { n } => star(*n),
            FamilySpec::DoubleStar { p, q } => double_star(*p, *q),
            FamilySpec::Path { n } => path(*n),
            FamilySpec::Cycle { n } => cycle(*n),
            FamilySpec::Complete { n } => complete(*n),
            FamilySpec::CompleteBipartite { a, b } => complete_bipartite(*a, *b),
            FamilySpec::Petersen => Ok(petersen()),
            FamilySpec::Heawood => Ok(heawood()),
            FamilySpec::HN { n } => h_n(*n),
            FamilySpec::Hamming { p } => hamming(*p),
            FamilySpec::SharpnessH { s, p, q } => sharpness_h(*s, *p, *q),
            FamilySpec::Gadget { base } => hardness_gadget(base),
            FamilySpec::T1 { p, q, subdivisions } => family_t1(*p, *q, *subdivisions),
            FamilySpec::T2 {
                skeleton,
                attach_counts,
            } => family_t2(skeleton, attach_counts),
            FamilySpec::Theta { variant, h } => family_theta(*variant, h.as_ref()),
            FamilySpec::Omega {
                variant,
                h,
                targets,
            } => family_omega(*variant, h, targets),
        }
    }
}

fn g6(g: &Graph) -> String {
    to_graph6(g).unwrap_or_else(|_| format!("<order {}>", g.order()))
}

fn join_list(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// `family=<name> key=value ...`, the provenance line.
impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "family={}", self.family_name())?;
        match self {
            FamilySpec::Star { n }
            | FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::HN { n } => write!(f, " n={n}"),
            FamilySpec::DoubleStar { p, q } => write!(f, " p={p} q={q}"),
            FamilySpec::CompleteBipartite { a, b } => write!(f, " a={a} b={b}"),
            FamilySpec::Petersen | FamilySpec::Heawood => Ok(()),
            FamilySpec::Hamming { p } => write!(f, " p={p}"),
            FamilySpec::SharpnessH { s, p, q } => write!(f, " s={s} p={p} q={q}"),
            FamilySpec::Gadget { base } => write!(f, " base={}", g6(base)),
            FamilySpec::T1 { p, q, subdivisions } => {
                write!(f, " p={p} q={q} subdivisions={subdivisions}")
            }
            FamilySpec::T2 {
                skeleton,
                attach_counts,
            } => {
                write!(
                    f,
                    " skeleton={} attach={}",
                    g6(skeleton),
                    join_list(attach_counts)
                )
            }
            FamilySpec::Theta { variant, h } => {
                write!(f, " variant={}", variant.name())?;
                match h {
                    Some(h) => write!(f, " h={}", g6(h)),
                    None => Ok(()),
                }
            }
            FamilySpec::Omega {
                variant,
                h,
                targets,
            } => {
                write!(f, " variant={} h={}", variant.name(), g6(h))?;
                if !targets.is_empty() {
                    write!(f, " targets={}", join_list(targets))?;
                }
                Ok(())
            }
        }
    }
}

/// Small graphs without isolated vertices used as `H` when sweeping the
/// small-value families: `K₂, P₃, K₃, P₄, C₄, 2K₂, K₁,₃, paw, K₄−e, K₄`.
pub fn small_h_graphs() -> Vec<Graph> {
    let k2 = complete(2).unwrap();
    vec![
        k2.clone(),
        path(3).unwrap(),
        complete(3).unwrap(),
        path(4).unwrap(),
        cycle(4).unwrap(),
        disjoint_union(&k2, &k2),
        star(4).unwrap(),
        Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap(),
        Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)]).unwrap(),
        complete(4).unwrap(),
    ]
}

/// Every non-degenerate Θ and Ω instance over [`small_h_graphs`], with all
/// nonempty target subsets for O2 and O5.
pub fn small_value_family_instances() -> Vec<(FamilySpec, Graph)> {
    let mut specs = vec![FamilySpec::Theta {
        variant: ThetaVariant::P3,
        h: None,
    }];
    for h in small_h_graphs() {
        for variant in [ThetaVariant::K2barJoin, ThetaVariant::K1JoinK1PlusH] {
            specs.push(FamilySpec::Theta {
                variant,
                h: Some(h.clone()),
            });
        }
        let m = h.order();
        for variant in OmegaVariant::ALL {
            if matches!(variant, OmegaVariant::O2 | OmegaVariant::O5) {
                for mask in 1u32..(1 << m) {
                    let targets: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
                    specs.push(FamilySpec::Omega {
                        variant,
                        h: h.clone(),
                        targets,
                    });
                }
            } else {
                specs.push(FamilySpec::Omega {
                    variant,
                    h: h.clone(),
                    targets: Vec::new(),
                });
            }
        }
    }
    specs
        .into_iter()
        .filter_map(|s| s.build().ok().map(|g| (s, g)))
        .collect()
}

/// Structural expectation for a classification, used by round-trip tests.
pub fn expected_classification(spec: &FamilySpec) -> Option<Classification> {
    match spec {
        FamilySpec::Theta { .. } => Some(Classification::Rdrd4Theta),
        FamilySpec::Omega { variant, .. } => Some(Classification::Rdrd5Omega(*variant)),
        _ => None,
    }
}
