//! Exact solvers for the eight domination parameters.
//!
//! All parameters share one branch-and-bound engine driven by a small rule
//! table: which labels exist, what each label costs, how many "points" a
//! neighbor with that label supplies, and how many points a vertex with that
//! label needs. Set parameters use label 1 for members of the set.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::labelings::{self, Labeling, SetKind};

/// Default node cap for a single solve.
pub const DEFAULT_NODE_BUDGET: u64 = 2_000_000_000;

/// Default order limit for [`enumerate_optimal_rdrd`].
pub const DEFAULT_ENUMERATION_CEILING: usize = 8;

/// Order limit for [`brute_force`].
pub const BRUTE_FORCE_CEILING: usize = 11;

const UNSET: u8 = u8::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parameter {
    /// γ_rdR, restrained double Roman domination.
    Rdrd,
    /// γ_dR, double Roman domination.
    Dr,
    /// γ_R, Roman domination.
    Roman,
    /// γ_rR, restrained Roman domination.
    RRoman,
    /// γ, domination.
    Dom,
    /// γ_r, restrained domination.
    RDom,
    /// γ₂, 2-domination.
    TwoDom,
    /// γ_r2, restrained 2-domination.
    RTwoDom,
}

impl Parameter {
    pub const ALL: [Parameter; 8] = [
        Parameter::Dom,
        Parameter::RDom,
        Parameter::TwoDom,
        Parameter::RTwoDom,
        Parameter::Roman,
        Parameter::RRoman,
        Parameter::Dr,
        Parameter::Rdrd,
    ];

    /// Short name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Parameter::Rdrd => "rdrd",
            Parameter::Dr => "dr",
            Parameter::Roman => "roman",
            Parameter::RRoman => "rroman",
            Parameter::Dom => "dom",
            Parameter::RDom => "rdom",
            Parameter::TwoDom => "2dom",
            Parameter::RTwoDom => "r2dom",
        }
    }

    /// Conventional symbol, ASCII-spelled.
    pub fn symbol(self) -> &'static str {
        match self {
            Parameter::Rdrd => "gamma_rdR",
            Parameter::Dr => "gamma_dR",
            Parameter::Roman => "gamma_R",
            Parameter::RRoman => "gamma_rR",
            Parameter::Dom => "gamma",
            Parameter::RDom => "gamma_r",
            Parameter::TwoDom => "gamma_2",
            Parameter::RTwoDom => "gamma_r2",
        }
    }

    pub fn is_set_parameter(self) -> bool {
        matches!(
            self,
            Parameter::Dom | Parameter::RDom | Parameter::TwoDom | Parameter::RTwoDom
        )
    }

    fn set_kind(self) -> Option<SetKind> {
        match self {
            Parameter::Dom => Some(SetKind::Dominating),
            Parameter::RDom => Some(SetKind::RestrainedDominating),
            Parameter::TwoDom => Some(SetKind::TwoDominating),
            Parameter::RTwoDom => Some(SetKind::RestrainedTwoDominating),
            _ => None,
        }
    }

    /// Whether `w` is a feasible solution for this parameter on `g`.
    pub fn validates(self, g: &Graph, w: &Witness) -> bool {
        match (self.set_kind(), w) {
            (Some(kind), Witness::Set(s)) => labelings::check_set(g, s, kind).is_ok(),
            (None, Witness::Labeling(f)) => match self {
                Parameter::Rdrd => labelings::is_rdrd(g, f),
                Parameter::Dr => labelings::is_drd(g, f),
                Parameter::Roman => labelings::is_roman(g, f),
                Parameter::RRoman => labelings::is_rrd(g, f),
                _ => unreachable!(),
            },
            _ => false,
        }
    }

    fn rules(self) -> &'static Rules {
        match self {
            Parameter::Rdrd => &RDRD,
            Parameter::Dr => &DR,
            Parameter::Roman => &ROMAN,
            Parameter::RRoman => &RROMAN,
            Parameter::Dom => &DOM,
            Parameter::RDom => &RDOM,
            Parameter::TwoDom => &TWODOM,
            Parameter::RTwoDom => &RTWODOM,
        }
    }

    fn witness_from(self, values: Vec<u8>) -> Witness {
        if self.is_set_parameter() {
            Witness::Set(VertexSet::from_mask(
                values.iter().map(|&x| x == 1).collect(),
            ))
        } else {
            Witness::Labeling(Labeling::new(values).expect("search labels are in range"))
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown parameter `{0}` (expected rdrd, dr, roman, rroman, dom, rdom, 2dom or r2dom)")]
pub struct UnknownParameter(pub String);

impl FromStr for Parameter {
    type Err = UnknownParameter;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parameter::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| UnknownParameter(s.to_string()))
    }
}

/// An optimal solution: a labeling for the Roman-type parameters, a vertex
/// set for the set-type ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Labeling(Labeling),
    Set(VertexSet),
}

impl Witness {
    /// Labeling weight or set cardinality.
    pub fn weight(&self) -> u32 {
        match self {
            Witness::Labeling(f) => f.weight(),
            Witness::Set(s) => s.len() as u32,
        }
    }

    pub fn as_labeling(&self) -> Option<&Labeling> {
        match self {
            Witness::Labeling(f) => Some(f),
            Witness::Set(_) => None,
        }
    }

    pub fn as_set(&self) -> Option<&VertexSet> {
        match self {
            Witness::Set(s) => Some(s),
            Witness::Labeling(_) => None,
        }
    }

    /// The labeling text format, or one member index per line for sets.
    pub fn to_text(&self) -> String {
        match self {
            Witness::Labeling(f) => f.to_text(),
            Witness::Set(s) => labelings::set_to_text(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub value: u32,
    pub witness: Witness,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("node budget of {budget} exhausted")]
    BudgetExhausted { budget: u64 },
    #[error("order {n} exceeds the ceiling of {ceiling}")]
    CeilingExceeded { n: usize, ceiling: usize },
    #[error("input is not a tree")]
    NotATree,
}

struct Rules {
    search_values: &'static [u8],
    lex_values: &'static [u8],
    /// Weight of each label.
    cost: [u8; 4],
    /// Points a neighbor with this label supplies.
    points: [u8; 4],
    /// Points a vertex with this label needs from its neighbors.
    need: [u8; 4],
    /// Label-0 vertices need a label-0 neighbor.
    restrained: bool,
    /// Uniform labeling that is always feasible.
    trivial: u8,
}

impl Rules {
    fn max_points(&self) -> u32 {
        *self.points.iter().max().unwrap() as u32
    }

    fn providers(&self) -> impl Iterator<Item = (f64, u32)> + '_ {
        self.lex_values
            .iter()
            .filter(|&&x| self.points[x as usize] > 0)
            .map(|&x| (self.cost[x as usize] as f64, self.points[x as usize] as u32))
    }

    /// Cheapest positive label that supplies points, and the cheapest that
    /// supplies none (if any).
    fn self_costs(&self) -> (f64, Option<f64>) {
        let provider = self
            .providers()
            .map(|(c, _)| c)
            .fold(f64::INFINITY, f64::min);
        let passive = self
            .lex_values
            .iter()
            .filter(|&&x| x > 0 && self.points[x as usize] == 0)
            .map(|&x| self.cost[x as usize] as f64)
            .reduce(f64::min);
        (provider, passive)
    }
}

const DRD_SEARCH: &[u8] = &[0, 3, 2, 1];
const DRD_LEX: &[u8] = &[0, 1, 2, 3];
const ROMAN_SEARCH: &[u8] = &[0, 2, 1];
const ROMAN_LEX: &[u8] = &[0, 1, 2];
const SET_VALUES: &[u8] = &[0, 1];

static RDRD: Rules = Rules {
    search_values: DRD_SEARCH,
    lex_values: DRD_LEX,
    cost: [0, 1, 2, 3],
    points: [0, 0, 1, 2],
    need: [2, 1, 0, 0],
    restrained: true,
    trivial: 2,
};
static DR: Rules = Rules {
    restrained: false,
    ..RDRD
};
static ROMAN: Rules = Rules {
    search_values: ROMAN_SEARCH,
    lex_values: ROMAN_LEX,
    cost: [0, 1, 2, 0],
    points: [0, 0, 1, 0],
    need: [1, 0, 0, 0],
    restrained: false,
    trivial: 1,
};
static RROMAN: Rules = Rules {
    restrained: true,
    ..ROMAN
};
static DOM: Rules = Rules {
    search_values: SET_VALUES,
    lex_values: SET_VALUES,
    cost: [0, 1, 0, 0],
    points: [0, 1, 0, 0],
    need: [1, 0, 0, 0],
    restrained: false,
    trivial: 1,
};
static RDOM: Rules = Rules {
    restrained: true,
    ..DOM
};
static TWODOM: Rules = Rules {
    need: [2, 0, 0, 0],
    ..DOM
};
static RTWODOM: Rules = Rules {
    restrained: true,
    ..TWODOM
};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// Minimize; prune when the bound reaches the incumbent.
    Optimize,
    /// Stop at the first complete labeling of weight `target`.
    FirstAtTarget,
    /// Collect every complete labeling of weight `target`.
    AllAtTarget,
}

struct Exhausted;

struct Search<'a> {
    g: &'a Graph,
    rules: &'static Rules,
    order: Vec<usize>,
    values: &'static [u8],
    mode: Mode,
    label: Vec<u8>,
    pts: Vec<u32>,
    zeros: Vec<u32>,
    free: Vec<u32>,
    inv_closed: Vec<f64>,
    max_points: u32,
    self_cost: f64,
    passive_cost: Option<f64>,
    providers: Vec<(f64, u32)>,
    weight: u32,
    nodes: u64,
    budget: u64,
    target: u32,
    floor: u32,
    best: Option<Vec<u8>>,
    found: Vec<Vec<u8>>,
    done: bool,
}

impl<'a> Search<'a> {
    fn new(
        g: &'a Graph,
        rules: &'static Rules,
        order: Vec<usize>,
        mode: Mode,
        budget: u64,
    ) -> Self {
        let n = g.order();
        let (self_cost, passive_cost) = rules.self_costs();
        Search {
            g,
            rules,
            order,
            values: if mode == Mode::Optimize {
                rules.search_values
            } else {
                rules.lex_values
            },
            mode,
            label: vec![UNSET; n],
            pts: vec![0; n],
            zeros: vec![0; n],
            free: g.vertices().map(|v| g.degree(v) as u32).collect(),
            inv_closed: g
                .vertices()
                .map(|v| 1.0 / (g.degree(v) + 1) as f64)
                .collect(),
            max_points: rules.max_points(),
            self_cost,
            passive_cost,
            providers: rules.providers().collect(),
            weight: 0,
            nodes: 0,
            budget,
            target: 0,
            floor: 0,
            best: None,
            found: Vec::new(),
            done: false,
        }
    }

    fn feasible(&self, v: usize) -> bool {
        let x = self.label[v] as usize;
        if self.pts[v] + self.free[v] * self.max_points < self.rules.need[x] as u32 {
            return false;
        }
        !(self.rules.restrained && x == 0 && self.zeros[v] == 0 && self.free[v] == 0)
    }

    fn assign(&mut self, v: usize, x: u8) -> bool {
        self.label[v] = x;
        self.weight += self.rules.cost[x as usize] as u32;
        let p = self.rules.points[x as usize] as u32;
        for &w in self.g.neighbors(v) {
            self.pts[w] += p;
            self.zeros[w] += (x == 0) as u32;
            self.free[w] -= 1;
        }
        self.feasible(v)
            && self
                .g
                .neighbors(v)
                .iter()
                .all(|&w| self.label[w] == UNSET || self.feasible(w))
    }

    fn unassign(&mut self, v: usize, x: u8) {
        self.label[v] = UNSET;
        self.weight -= self.rules.cost[x as usize] as u32;
        let p = self.rules.points[x as usize] as u32;
        for &w in self.g.neighbors(v) {
            self.pts[w] -= p;
            self.zeros[w] -= (x == 0) as u32;
            self.free[w] += 1;
        }
    }

    /// Cheapest fractional charge for covering a deficit of `d` points with at
    /// most two unassigned neighbors whose closed-neighborhood shares are
    /// `s1 <= s2`.
    fn cover_cost(&self, d: u32, s1: f64, s2: f64) -> f64 {
        let mut best = f64::INFINITY;
        for &(c1, p1) in &self.providers {
            if p1 >= d {
                best = best.min(c1 * s1);
                continue;
            }
            for &(c2, p2) in &self.providers {
                if p1 + p2 >= d {
                    best = best.min(c1 * s1 + c2 * s2).min(c2 * s1 + c1 * s2);
                }
            }
        }
        best
    }

    /// Lower bound on the weight still to be placed on `order[depth..]`.
    ///
    /// Each provider's weight is spread evenly over its closed neighborhood;
    /// every unassigned vertex must then receive at least the cheapest charge
    /// compatible with some label it can still take.
    fn lower_bound(&self, depth: usize) -> u32 {
        let need0 = self.rules.need[0] as u32;
        let mut sum = 0.0;
        for &u in &self.order[depth..] {
            let mut best = self.self_cost * self.inv_closed[u];
            if let Some(c) = self.passive_cost {
                best = best.min(c);
            }
            let restraint_ok = !self.rules.restrained || self.zeros[u] > 0 || self.free[u] > 0;
            if restraint_ok {
                if self.pts[u] >= need0 {
                    continue;
                }
                let (mut s1, mut s2) = (f64::INFINITY, f64::INFINITY);
                for &w in self.g.neighbors(u) {
                    if self.label[w] == UNSET {
                        let s = self.inv_closed[w];
                        if s < s1 {
                            s2 = s1;
                            s1 = s;
                        } else if s < s2 {
                            s2 = s;
                        }
                    }
                }
                best = best.min(self.cover_cost(need0 - self.pts[u], s1, s2));
            }
            sum += best;
        }
        (sum - 1e-9).ceil().max(0.0) as u32
    }

    fn dfs(&mut self, depth: usize) -> Result<(), Exhausted> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Exhausted);
        }
        if depth == self.order.len() {
            match self.mode {
                Mode::Optimize => {
                    if self.weight < self.target {
                        self.target = self.weight;
                        self.best = Some(self.label.clone());
                        self.done = self.target <= self.floor;
                    }
                }
                Mode::FirstAtTarget => {
                    if self.weight == self.target {
                        self.best = Some(self.label.clone());
                        self.done = true;
                    }
                }
                Mode::AllAtTarget => {
                    if self.weight == self.target {
                        self.found.push(self.label.clone());
                    }
                }
            }
            return Ok(());
        }
        let bound = self.weight + self.lower_bound(depth);
        let pruned = match self.mode {
            Mode::Optimize => bound >= self.target,
            _ => bound > self.target,
        };
        if pruned {
            return Ok(());
        }
        let v = self.order[depth];
        for &x in self.values {
            if self.assign(v, x) {
                let r = self.dfs(depth + 1);
                if r.is_err() {
                    self.unassign(v, x);
                    return r;
                }
            }
            self.unassign(v, x);
            if self.done {
                break;
            }
        }
        Ok(())
    }
}

fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// Solves `param` exactly on `g` within `budget` search nodes (`None` uses
/// [`DEFAULT_NODE_BUDGET`]).
///
/// The witness is the lexicographically smallest optimal solution, comparing
/// label vectors indexed by vertex with labels ordered 0 < 1 < 2 < 3 (for set
/// parameters, non-members before members).
pub fn solve(g: &Graph, param: Parameter, budget: Option<u64>) -> Result<SolveResult, SolveError> {
    let start = Instant::now();
    let n = g.order();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    let budget = budget.unwrap_or(DEFAULT_NODE_BUDGET);
    let rules = param.rules();
    let mut nodes = 0u64;

    let floor = if param == Parameter::Rdrd {
        rdrd_floor(g, budget / 4, &mut nodes)
    } else {
        0
    };

    let mut first = Search::new(g, rules, degree_order(g), Mode::Optimize, budget - nodes);
    first.target = rules.trivial as u32 * n as u32;
    first.floor = floor;
    first.done = first.target <= floor;
    if !first.done {
        let r = first.dfs(0);
        nodes += first.nodes;
        if r.is_err() {
            return Err(SolveError::BudgetExhausted { budget });
        }
    }
    let value = first.target;

    let mut lex = Search::new(
        g,
        rules,
        g.vertices().collect(),
        Mode::FirstAtTarget,
        budget - nodes,
    );
    lex.target = value;
    let r = lex.dfs(0);
    nodes += lex.nodes;
    if r.is_err() {
        return Err(SolveError::BudgetExhausted { budget });
    }
    let values = lex.best.expect("an optimal labeling exists at the optimum");
    let witness = param.witness_from(values);
    debug_assert!(param.validates(g, &witness));
    Ok(SolveResult {
        value,
        witness,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

/// `⌈(2n + (Δ−2)γ_r) / Δ⌉`, a lower bound on γ_rdR used to stop the search
/// early. Falls back to `γ_r ≥ 1` if computing γ_r exceeds `budget`.
fn rdrd_floor(g: &Graph, budget: u64, nodes: &mut u64) -> u32 {
    let n = g.order() as i64;
    let delta = g.max_degree() as i64;
    if delta == 0 {
        return 2 * n as u32;
    }
    let mut s = Search::new(g, &RDOM, degree_order(g), Mode::Optimize, budget);
    s.target = n as u32;
    let gamma_r = match s.dfs(0) {
        Ok(()) => s.target as i64,
        Err(Exhausted) => 1,
    };
    *nodes += s.nodes;
    let num = 2 * n + (delta - 2) * gamma_r;
    ((num + delta - 1).div_euclid(delta)).max(0) as u32
}

pub fn gamma_rdrd(g: &Graph, budget: Option<u64>) -> Result<SolveResult, SolveError> {
    solve(g, Parameter::Rdrd, budget)
}

pub fn gamma_dr(g: &Graph, budget: Option<u64>) -> Result<SolveResult, SolveError> {
    solve(g, Parameter::Dr, budget)
}

pub fn gamma_roman(g: &Graph, budget: Option<u64>) -> Result<SolveResult, SolveError> {
    solve(g, Parameter::Roman, budget)
}

pub fn gamma_rroman(g: &Graph, budget: Option<u64>) -> Result<SolveResult, SolveError> {
    solve(g, Parameter::RRoman, budget)
}

pub fn gamma(g: &Graph, budget: Option<u64>) -> Result<SolveResult, SolveError> {
    solve(g, Parameter::Dom, budget)
}

pub fn gamma_r(g: &Graph, budget: Option<u64>) -> Result<SolveResult, SolveError> {
    solve(g, Parameter::RDom, budget)
}

pub fn gamma_2(g: &Graph, budget: Option<u64>) -> Result<SolveResult, SolveError> {
    solve(g, Parameter::TwoDom, budget)
}

pub fn gamma_r2(g: &Graph, budget: Option<u64>) -> Result<SolveResult, SolveError> {
    solve(g, Parameter::RTwoDom, budget)
}

/// Every RDRD labeling of minimum weight, in lexicographic order. Refuses
/// graphs with more than `ceiling` vertices.
pub fn enumerate_optimal_rdrd(g: &Graph, ceiling: usize) -> Result<Vec<Labeling>, SolveError> {
    let n = g.order();
    if n > ceiling {
        return Err(SolveError::CeilingExceeded { n, ceiling });
    }
    let value = gamma_rdrd(g, None)?.value;
    let mut s = Search::new(
        g,
        &RDRD,
        g.vertices().collect(),
        Mode::AllAtTarget,
        DEFAULT_NODE_BUDGET,
    );
    s.target = value;
    if s.dfs(0).is_err() {
        return Err(SolveError::BudgetExhausted {
            budget: DEFAULT_NODE_BUDGET,
        });
    }
    Ok(s.found
        .into_iter()
        .map(|v| Labeling::new(v).expect("labels in range"))
        .collect())
}

/// Full enumeration of every candidate labeling (or subset) in lexicographic
/// order, checked with the plain validators. Exponential; meant as a
/// reference for small graphs.
pub fn brute_force(g: &Graph, param: Parameter) -> Result<SolveResult, SolveError> {
    let start = Instant::now();
    let n = g.order();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if n > BRUTE_FORCE_CEILING {
        return Err(SolveError::CeilingExceeded {
            n,
            ceiling: BRUTE_FORCE_CEILING,
        });
    }
    let base = param.rules().lex_values.len() as u8;
    let mut values = vec![0u8; n];
    let mut best: Option<(u32, Witness)> = None;
    let mut nodes = 0u64;
    loop {
        nodes += 1;
        let w = param.witness_from(values.clone());
        if param.validates(g, &w) && best.as_ref().is_none_or(|(b, _)| w.weight() < *b) {
            best = Some((w.weight(), w));
        }
        // odometer with vertex 0 most significant
        let mut i = n;
        loop {
            if i == 0 {
                let (value, witness) = best.expect("the trivial labeling is always feasible");
                return Ok(SolveResult {
                    value,
                    witness,
                    nodes_explored: nodes,
                    elapsed: start.elapsed(),
                });
            }
            i -= 1;
            values[i] += 1;
            if values[i] < base {
                break;
            }
            values[i] = 0;
        }
    }
}
