//! Bound evaluation and structural classifiers.
//!
//! Classifiers never call a solver; the exact solvers only referee them in
//! tests and fuzzing.

use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::constructions::{
    check_t2_skeleton, hardness_gadget, t2_attachment_points, OmegaVariant,
};
use crate::exact::{self, Parameter, SolveError};
use crate::graph::{Graph, VertexSet};
use crate::labelings::{is_rdrd, Labeling};
use crate::tree_dp;

pub type Rational = Ratio<i64>;

/// Largest number of optional hub choices the 𝒯₂ recognizer enumerates
/// (2^cap subsets).
pub const T2_CHOICE_CAP: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is too small: {0}")]
    TooSmall(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// The eight parameters of one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamTable {
    pub gamma: u32,
    pub gamma_r: u32,
    pub gamma_2: u32,
    pub gamma_r2: u32,
    pub gamma_roman: u32,
    pub gamma_rroman: u32,
    pub gamma_dr: u32,
    pub gamma_rdr: u32,
}

impl ParamTable {
    pub fn compute(g: &Graph, budget: Option<u64>) -> Result<ParamTable, SolveError> {
        let v = |p| exact::solve(g, p, budget).map(|r| r.value);
        Ok(ParamTable {
            gamma: v(Parameter::Dom)?,
            gamma_r: v(Parameter::RDom)?,
            gamma_2: v(Parameter::TwoDom)?,
            gamma_r2: v(Parameter::RTwoDom)?,
            gamma_roman: v(Parameter::Roman)?,
            gamma_rroman: v(Parameter::RRoman)?,
            gamma_dr: v(Parameter::Dr)?,
            gamma_rdr: v(Parameter::Rdrd)?,
        })
    }

    pub fn get(&self, p: Parameter) -> u32 {
        match p {
            Parameter::Dom => self.gamma,
            Parameter::RDom => self.gamma_r,
            Parameter::TwoDom => self.gamma_2,
            Parameter::RTwoDom => self.gamma_r2,
            Parameter::Roman => self.gamma_roman,
            Parameter::RRoman => self.gamma_rroman,
            Parameter::Dr => self.gamma_dr,
            Parameter::Rdrd => self.gamma_rdr,
        }
    }

    /// `(symbol, value)` pairs in a fixed order.
    pub fn entries(&self) -> Vec<(&'static str, u32)> {
        Parameter::ALL
            .iter()
            .map(|&p| (p.symbol(), self.get(p)))
            .collect()
    }
}

impl fmt::Display for ParamTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries()
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// One inequality `lhs <= rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundEntry {
    pub name: &'static str,
    pub statement: &'static str,
    pub applicable: bool,
    /// Why the bound does not apply, when it does not.
    pub precondition_failed: Option<String>,
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub params: ParamTable,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn violations(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| e.applicable && !e.holds)
    }

    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

fn int(x: impl Into<i64>) -> Rational {
    Rational::from_integer(x.into())
}

struct BoundBuilder {
    entries: Vec<BoundEntry>,
}

impl BoundBuilder {
    fn push(
        &mut self,
        name: &'static str,
        statement: &'static str,
        failed: Option<String>,
        lhs: Rational,
        rhs: Rational,
    ) {
        let applicable = failed.is_none();
        self.entries.push(BoundEntry {
            name,
            statement,
            applicable,
            precondition_failed: failed,
            lhs,
            rhs,
            holds: applicable && lhs <= rhs,
        });
    }
}

fn is_star(g: &Graph) -> bool {
    g.is_tree() && g.vertices().any(|v| g.degree(v) + 1 == g.order())
}

/// Evaluates every bound on `g` with exactly computed parameters.
pub fn evaluate_bounds(g: &Graph, budget: Option<u64>) -> Result<BoundReport, AnalysisError> {
    let params = ParamTable::compute(g, budget)?;
    let n = g.order() as i64;
    let pred = g.predicates();
    let rdr = int(params.gamma_rdr);
    let rr = params.gamma_rroman as i64;
    let mut b = BoundBuilder {
        entries: Vec::new(),
    };

    let delta = pred.max_degree as i64;
    let (failed, lhs) = if delta >= 1 {
        (
            None,
            Rational::new(2 * n + (delta - 2) * params.gamma_r as i64, delta),
        )
    } else {
        (Some("maximum degree is 0".to_string()), int(0))
    };
    b.push(
        "rest_lower",
        "gamma_rdR >= (2n + (Delta - 2) gamma_r) / Delta",
        failed,
        lhs,
        rdr,
    );

    b.push(
        "n_plus_gamma",
        "gamma_rdR <= n + gamma",
        None,
        rdr,
        int(n + params.gamma as i64),
    );

    let failed = match (pred.regular_degree, g.girth()) {
        (Some(r), _) if r < 3 => Some(format!("{r}-regular, needs r >= 3")),
        (None, _) => Some("not regular".to_string()),
        (Some(_), Some(girth)) if girth < 6 => Some(format!("girth {girth} < 6")),
        _ => None,
    };
    let r = pred.regular_degree.unwrap_or(0) as i64;
    b.push(
        "regular_girth6",
        "gamma_rdR <= 2(n - r^2) + 1",
        failed,
        rdr,
        int(2 * (n - r * r) + 1),
    );

    let failed = if !pred.is_connected {
        Some("not connected".to_string())
    } else if !pred.is_triangle_free {
        Some("contains a triangle".to_string())
    } else if n < 3 {
        Some(format!("order {n} < 3"))
    } else {
        None
    };
    b.push(
        "triangle_free",
        "gamma_rdR <= 2 gamma_rR - 2",
        failed,
        rdr,
        int(2 * rr - 2),
    );

    let failed = (g.size() == 0).then(|| "no edges".to_string());
    b.push(
        "nontrivial_rroman",
        "gamma_rdR <= 2 gamma_rR - 1",
        failed,
        rdr,
        int(2 * rr - 1),
    );

    b.push(
        "double_rroman",
        "gamma_rdR <= 2 gamma_rR",
        None,
        rdr,
        int(2 * rr),
    );

    let failed = (!pred.is_connected).then(|| "not connected".to_string());
    b.push(
        "frame_lower",
        "gamma_rdR >= gamma + gamma_r",
        failed,
        int(params.gamma as i64 + params.gamma_r as i64),
        rdr,
    );

    let failed = if !pred.is_tree {
        Some("not a tree".to_string())
    } else if n < 2 {
        Some("order < 2".to_string())
    } else {
        None
    };
    b.push(
        "tree_lower",
        "gamma_rdR >= n + 1",
        failed.clone(),
        int(n + 1),
        rdr,
    );
    let failed = failed.or_else(|| is_star(g).then(|| "tree is a star".to_string()));
    b.push(
        "tree_nonstar_lower",
        "gamma_rdR >= n + 2",
        failed,
        int(n + 2),
        rdr,
    );

    Ok(BoundReport {
        params,
        entries: b.entries,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrameCheck {
    pub gamma_rdr: u32,
    pub gamma: u32,
    pub gamma_r: u32,
    pub gamma_r2: u32,
    /// `γ_rdR = γ + γ_r`.
    pub equality_holds: bool,
    /// The graph is a star, or `γ_r2 = γ_r = γ`.
    pub condition_holds: bool,
}

pub fn check_frame_equality(g: &Graph, budget: Option<u64>) -> Result<FrameCheck, AnalysisError> {
    if !g.is_connected() {
        return Err(AnalysisError::Disconnected);
    }
    let v = |p| exact::solve(g, p, budget).map(|r| r.value);
    let (gamma_rdr, gamma, gamma_r, gamma_r2) = (
        v(Parameter::Rdrd)?,
        v(Parameter::Dom)?,
        v(Parameter::RDom)?,
        v(Parameter::RTwoDom)?,
    );
    Ok(FrameCheck {
        gamma_rdr,
        gamma,
        gamma_r,
        gamma_r2,
        equality_holds: gamma_rdr == gamma + gamma_r,
        condition_holds: is_star(g) || (gamma_r2 == gamma_r && gamma_r == gamma),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetIdentity {
    /// γ_rdR of the gadget graph.
    pub lhs: u32,
    /// `4n + γ_R(g)`.
    pub rhs: u32,
    pub holds: bool,
}

pub fn gadget_identity_check(
    g: &Graph,
    budget: Option<u64>,
) -> Result<GadgetIdentity, AnalysisError> {
    let gadget = hardness_gadget(g).map_err(|e| AnalysisError::TooSmall(e.to_string()))?;
    let lhs = exact::gamma_rdrd(&gadget, budget)?.value;
    let rhs = 4 * g.order() as u32 + exact::gamma_roman(g, budget)?.value;
    Ok(GadgetIdentity {
        lhs,
        rhs,
        holds: lhs == rhs,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Rdrd2K1,
    Rdrd3,
    Rdrd4Theta,
    Rdrd5Omega(OmegaVariant),
    Rdrd5K13,
    TreeStar,
    TreeT1,
    TreeT2,
    Other,
}

impl Classification {
    /// γ_rdR implied by a small-value tag.
    pub fn implied_value(self) -> Option<u32> {
        match self {
            Classification::Rdrd2K1 => Some(2),
            Classification::Rdrd3 => Some(3),
            Classification::Rdrd4Theta => Some(4),
            Classification::Rdrd5Omega(_) | Classification::Rdrd5K13 => Some(5),
            _ => None,
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Rdrd2K1 => f.write_str("RDRD_2_K1"),
            Classification::Rdrd3 => f.write_str("RDRD_3"),
            Classification::Rdrd4Theta => f.write_str("RDRD_4_THETA"),
            Classification::Rdrd5Omega(v) => write!(f, "RDRD_5_OMEGA({})", v.name().to_uppercase()),
            Classification::Rdrd5K13 => f.write_str("RDRD_5_K13"),
            Classification::TreeStar => f.write_str("TREE_STAR"),
            Classification::TreeT1 => f.write_str("TREE_T1"),
            Classification::TreeT2 => f.write_str("TREE_T2"),
            Classification::Other => f.write_str("OTHER"),
        }
    }
}

/// Named vertex roles that reconstruct the family decomposition, e.g.
/// `universal=[0] rest=[1,2,3]`.
type Roles = Vec<(&'static str, Vec<usize>)>;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Evidence {
    pub roles: Roles,
}

impl Evidence {
    fn new(roles: Roles) -> Evidence {
        Evidence { roles }
    }

    pub fn role(&self, name: &str) -> Option<&[usize]> {
        self.roles
            .iter()
            .find(|(k, _)| *k == name)
            .map(|(_, v)| v.as_slice())
    }
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .roles
            .iter()
            .map(|(k, v)| {
                let list: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                format!("{k}=[{}]", list.join(","))
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyTag {
    pub classification: Classification,
    pub evidence: Evidence,
}

impl FamilyTag {
    fn new(classification: Classification, roles: Roles) -> FamilyTag {
        FamilyTag {
            classification,
            evidence: Evidence::new(roles),
        }
    }
}

/// Vertices of `g` outside `removed`, if nonempty and inducing a subgraph
/// without isolated vertices.
fn rest_without_isolated(g: &Graph, removed: &[usize]) -> Option<Vec<usize>> {
    let rest: Vec<usize> = g.vertices().filter(|v| !removed.contains(v)).collect();
    let ok = !rest.is_empty()
        && rest
            .iter()
            .all(|&v| g.neighbors(v).iter().any(|w| !removed.contains(w)));
    ok.then_some(rest)
}

fn recognize_three(g: &Graph) -> Option<FamilyTag> {
    if g.order() == 2 && g.size() == 1 {
        return Some(FamilyTag::new(
            Classification::Rdrd3,
            vec![("k2", vec![0, 1])],
        ));
    }
    let n = g.order();
    g.vertices()
        .filter(|&u| g.degree(u) + 1 == n)
        .find_map(|u| {
            rest_without_isolated(g, &[u]).map(|rest| {
                FamilyTag::new(
                    Classification::Rdrd3,
                    vec![("universal", vec![u]), ("h", rest)],
                )
            })
        })
}

fn recognize_four(g: &Graph) -> Option<FamilyTag> {
    let n = g.order();
    if n == 3 && g.size() == 2 {
        let center = g.vertices().find(|&v| g.degree(v) == 2).unwrap();
        return Some(FamilyTag::new(
            Classification::Rdrd4Theta,
            vec![("p3_center", vec![center])],
        ));
    }
    // K̄₂ ∨ H₁
    let dominant: Vec<usize> = g.vertices().filter(|&v| g.degree(v) + 2 == n).collect();
    for (i, &x) in dominant.iter().enumerate() {
        for &y in &dominant[i + 1..] {
            if g.has_edge(x, y) {
                continue;
            }
            if let Some(rest) = rest_without_isolated(g, &[x, y]) {
                return Some(FamilyTag::new(
                    Classification::Rdrd4Theta,
                    vec![("k2bar", vec![x, y]), ("h1", rest)],
                ));
            }
        }
    }
    // K₁ ∨ (K₁ + H₂)
    for x in g.vertices().filter(|&v| g.degree(v) + 1 == n) {
        for y in g.vertices().filter(|&v| g.degree(v) == 1) {
            if let Some(rest) = rest_without_isolated(g, &[x, y]) {
                return Some(FamilyTag::new(
                    Classification::Rdrd4Theta,
                    vec![("universal", vec![x]), ("pendant", vec![y]), ("h2", rest)],
                ));
            }
        }
    }
    None
}

fn is_k13(g: &Graph) -> bool {
    g.order() == 4 && g.is_tree() && g.max_degree() == 3
}

fn recognize_omega(g: &Graph) -> Option<FamilyTag> {
    let n = g.order();
    let omega = |v, roles| Some(FamilyTag::new(Classification::Rdrd5Omega(v), roles));
    let mut found: Vec<(OmegaVariant, Roles)> = Vec::new();

    // O1–O3: x misses only y; y sees all of H; z sees x (and possibly more)
    for x in g.vertices().filter(|&v| g.degree(v) + 2 == n) {
        let y = g.vertices().find(|&v| v != x && !g.has_edge(x, v)).unwrap();
        for z in g.neighbors(x).iter().copied() {
            let removed = [x, y, z];
            let Some(h) = rest_without_isolated(g, &removed) else {
                continue;
            };
            if !h.iter().all(|&v| g.has_edge(y, v)) {
                continue;
            }
            let hset = VertexSet::from_members(n, h.iter().copied()).unwrap();
            let z_in_h: Vec<usize> = g
                .neighbors(z)
                .iter()
                .copied()
                .filter(|&w| hset.contains(w))
                .collect();
            let yz = g.has_edge(y, z);
            let roles = vec![
                ("x", vec![x]),
                ("y", vec![y]),
                ("z", vec![z]),
                ("h", h.clone()),
            ];
            if !yz && z_in_h.is_empty() {
                found.push((OmegaVariant::O1, roles));
            } else if !yz {
                let h_order = h.len();
                let universal_in_h = |w: usize| {
                    g.neighbors(w).iter().filter(|&&u| hset.contains(u)).count() + 1 == h_order
                };
                if z_in_h.iter().all(|&w| !universal_in_h(w)) {
                    let mut roles = roles;
                    roles.push(("z_targets", z_in_h));
                    found.push((OmegaVariant::O2, roles));
                }
            } else if z_in_h.is_empty() {
                found.push((OmegaVariant::O3, roles));
            }
        }
    }
    // O4: universal x with exactly two pendant vertices a, b
    for x in g.vertices().filter(|&v| g.degree(v) + 1 == n) {
        let pendants: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == 1).collect();
        if let [a, b] = pendants[..] {
            if let Some(h) = rest_without_isolated(g, &[x, a, b]) {
                found.push((
                    OmegaVariant::O4,
                    vec![("x", vec![x]), ("a", vec![a]), ("b", vec![b]), ("h", h)],
                ));
            }
        }
    }
    // O5: x sees all of H but not y; y sees between 1 and |H|-1 vertices of H
    for x in g.vertices().filter(|&v| g.degree(v) + 2 == n) {
        let y = g.vertices().find(|&v| v != x && !g.has_edge(x, v)).unwrap();
        let d = g.degree(y);
        if d >= 1 && d + 3 <= n {
            if let Some(h) = rest_without_isolated(g, &[x, y]) {
                let targets = g.neighbors(y).to_vec();
                found.push((
                    OmegaVariant::O5,
                    vec![
                        ("x", vec![x]),
                        ("y", vec![y]),
                        ("h", h),
                        ("y_targets", targets),
                    ],
                ));
            }
        }
    }
    found.sort_by_key(|(v, _)| *v as u8);
    found
        .into_iter()
        .next()
        .and_then(|(v, roles)| omega(v, roles))
}

/// Small-value classification of a connected graph, purely structural.
///
/// Classes are tried in increasing order of implied value, so a graph that
/// also matches a larger family by construction is reported with its true
/// (smallest) class.
pub fn classify_small(g: &Graph) -> Result<FamilyTag, AnalysisError> {
    if g.order() == 0 {
        return Err(AnalysisError::TooSmall("empty graph".into()));
    }
    if !g.is_connected() {
        return Err(AnalysisError::Disconnected);
    }
    if g.order() == 1 {
        return Ok(FamilyTag::new(
            Classification::Rdrd2K1,
            vec![("k1", vec![0])],
        ));
    }
    if let Some(tag) = recognize_three(g).or_else(|| recognize_four(g)) {
        return Ok(tag);
    }
    if is_k13(g) {
        let center = g.vertices().find(|&v| g.degree(v) == 3).unwrap();
        return Ok(FamilyTag::new(
            Classification::Rdrd5K13,
            vec![("center", vec![center])],
        ));
    }
    Ok(recognize_omega(g).unwrap_or(FamilyTag::new(Classification::Other, Vec::new())))
}

fn recognize_t1(t: &Graph) -> Option<FamilyTag> {
    let core: Vec<usize> = t.vertices().filter(|&v| t.degree(v) >= 2).collect();
    if !(2..=4).contains(&core.len()) {
        return None;
    }
    let core_set = VertexSet::from_members(t.order(), core.iter().copied()).unwrap();
    let core_degree = |v: usize| {
        t.neighbors(v)
            .iter()
            .filter(|&&w| core_set.contains(w))
            .count()
    };
    let ends: Vec<usize> = core
        .iter()
        .copied()
        .filter(|&v| core_degree(v) == 1)
        .collect();
    let [u, v] = ends[..] else { return None };
    // the core of a tree is connected, so two core ends mean it is a path
    let inner_ok = core
        .iter()
        .filter(|&&w| w != u && w != v)
        .all(|&w| t.degree(w) == 2);
    inner_ok.then(|| {
        let inner = core.iter().copied().filter(|&w| w != u && w != v).collect();
        FamilyTag::new(
            Classification::TreeT1,
            vec![("centers", vec![u, v]), ("subdivision", inner)],
        )
    })
}

/// The canonical labeling of a stripped 𝒯₂ skeleton `base` (given as a mask
/// over `t`), measured from its smallest leaf: leaves on a strong support get
/// 2, other leaves 3, inner vertices at distance ≡ 0 (mod 3) get 3, the rest
/// 0. Stripped vertices get 1.
fn t2_certificate(t: &Graph, in_base: &[bool]) -> Labeling {
    let n = t.order();
    let base_degree = |v: usize| t.neighbors(v).iter().filter(|&&w| in_base[w]).count();
    let x = (0..n).find(|&v| in_base[v] && base_degree(v) == 1).unwrap();
    let dist = t.bfs_distances(x);
    let support_of = |leaf: usize| *t.neighbors(leaf).iter().find(|&&w| in_base[w]).unwrap();
    let strong = |leaf: usize| {
        let s = support_of(leaf);
        t.neighbors(s)
            .iter()
            .filter(|&&w| in_base[w] && base_degree(w) == 1)
            .count()
            >= 2
    };
    let values = (0..n)
        .map(|v| {
            if !in_base[v] {
                1
            } else if base_degree(v) == 1 {
                if strong(v) {
                    2
                } else {
                    3
                }
            } else if dist[v].unwrap().is_multiple_of(3) {
                3
            } else {
                0
            }
        })
        .collect();
    Labeling::new(values).unwrap()
}

fn recognize_t2(t: &Graph) -> Option<FamilyTag> {
    let n = t.order();
    let is_leaf = |v: usize| t.degree(v) == 1;
    let supports: Vec<usize> = t
        .vertices()
        .filter(|&v| t.neighbors(v).iter().any(|&w| is_leaf(w)))
        .collect();
    let leaf_count = |s: usize| t.neighbors(s).iter().filter(|&&w| is_leaf(w)).count();
    let forced: Vec<usize> = supports
        .iter()
        .copied()
        .filter(|&s| leaf_count(s) >= 3)
        .collect();
    let optional: Vec<usize> = supports
        .iter()
        .copied()
        .filter(|&s| leaf_count(s) <= 2)
        .collect();
    if optional.len() as u32 > T2_CHOICE_CAP {
        return None;
    }
    for mask in 0u64..(1 << optional.len()) {
        let hubs: Vec<usize> = forced
            .iter()
            .copied()
            .chain(
                optional
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &s)| s),
            )
            .collect();
        let mut in_base = vec![true; n];
        for &h in &hubs {
            for &w in t.neighbors(h).iter().filter(|&&w| is_leaf(w)) {
                in_base[w] = false;
            }
        }
        let base_vertices: Vec<usize> = (0..n).filter(|&v| in_base[v]).collect();
        let keep = VertexSet::from_members(n, base_vertices.iter().copied()).unwrap();
        let base = t.induced(&keep);
        if check_t2_skeleton(&base).is_err() {
            continue;
        }
        let eligible: Vec<usize> = t2_attachment_points(&base)
            .into_iter()
            .map(|i| base_vertices[i])
            .collect();
        if !hubs.iter().all(|h| eligible.contains(h)) {
            continue;
        }
        let f = t2_certificate(t, &in_base);
        if is_rdrd(t, &f) && f.weight() == n as u32 + 2 {
            let mut hubs = hubs;
            hubs.sort_unstable();
            return Some(FamilyTag::new(
                Classification::TreeT2,
                vec![
                    ("skeleton", base_vertices),
                    ("hubs", hubs),
                    ("attached", (0..n).filter(|&v| !in_base[v]).collect()),
                ],
            ));
        }
    }
    None
}

/// Tree classification: star, 𝒯₁, 𝒯₂, or other, tried in that order.
pub fn classify_tree(t: &Graph) -> Result<FamilyTag, AnalysisError> {
    if !t.is_tree() {
        return Err(AnalysisError::NotATree);
    }
    let n = t.order();
    if n < 2 {
        return Err(AnalysisError::TooSmall(
            "tree classification needs n >= 2".into(),
        ));
    }
    if let Some(c) = t.vertices().find(|&v| t.degree(v) + 1 == n) {
        return Ok(FamilyTag::new(
            Classification::TreeStar,
            vec![("center", vec![c])],
        ));
    }
    Ok(recognize_t1(t)
        .or_else(|| recognize_t2(t))
        .unwrap_or(FamilyTag::new(Classification::Other, Vec::new())))
}

/// γ_rdR via the tree DP when `g` is a tree, the branch-and-bound otherwise.
pub fn gamma_rdrd_auto(g: &Graph, budget: Option<u64>) -> Result<u32, SolveError> {
    if g.order() > 0 && g.is_tree() {
        tree_dp::gamma_rdrd_tree(g).map(|r| r.value)
    } else {
        exact::gamma_rdrd(g, budget).map(|r| r.value)
    }
}

/// First failure of the structural facts about optimal RDRD labelings, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObservationFailure {
    /// An optimum labels a leaf 0.
    ZeroLeaf { labeling: Labeling, leaf: usize },
    /// An optimum with the most zeros has adjacent 1-vertices, or a
    /// 1-vertex next to a 0-vertex.
    OnesNotIsolated {
        labeling: Labeling,
        edge: (usize, usize),
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObservationReport {
    pub optimal_count: usize,
    pub max_zeros: usize,
    pub failure: Option<ObservationFailure>,
}

/// Checks every optimal RDRD labeling of `g` (enumerated exhaustively, so
/// `g.order() <= ceiling`).
pub fn check_observations(g: &Graph, ceiling: usize) -> Result<ObservationReport, AnalysisError> {
    let optima = exact::enumerate_optimal_rdrd(g, ceiling)?;
    let zeros = |f: &Labeling| f.values().iter().filter(|&&x| x == 0).count();
    let max_zeros = optima.iter().map(zeros).max().unwrap_or(0);
    let leaves: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == 1).collect();
    let mut failure = None;
    'outer: for f in &optima {
        if let Some(&leaf) = leaves.iter().find(|&&v| f.get(v) == 0) {
            failure = Some(ObservationFailure::ZeroLeaf {
                labeling: f.clone(),
                leaf,
            });
            break;
        }
        if zeros(f) != max_zeros {
            continue;
        }
        for (u, v) in g.edges() {
            let (a, b) = (f.get(u).min(f.get(v)), f.get(u).max(f.get(v)));
            if b == 1 && a <= 1 {
                failure = Some(ObservationFailure::OnesNotIsolated {
                    labeling: f.clone(),
                    edge: (u, v),
                });
                break 'outer;
            }
        }
    }
    Ok(ObservationReport {
        optimal_count: optima.len(),
        max_zeros,
        failure,
    })
}
