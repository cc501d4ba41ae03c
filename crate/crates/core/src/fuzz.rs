//! Seeded fuzz harness: generates instances and referees the analysis layer
//! against the exact solvers.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::analysis::{self, Classification, ParamTable};
use crate::constructions;
use crate::exact::{self, Parameter};
use crate::graph::{self, Graph};
use crate::tree_dp;

/// Largest order for the brute-force oracle on general graphs.
pub const ORACLE_CEILING: usize = 7;
/// Largest order for the tree DP oracle.
pub const TREE_ORACLE_CEILING: usize = 12;
/// Largest order for enumerating all optima.
pub const OBSERVATION_CEILING: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FuzzMode {
    Graphs,
    Trees,
    Regular,
    TriangleFree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FuzzCheck {
    Bounds,
    Classify,
    Oracle,
    Observations,
    Frame,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown {kind} '{value}'")]
pub struct UnknownName {
    kind: &'static str,
    value: String,
}

impl FuzzMode {
    pub fn name(self) -> &'static str {
        match self {
            FuzzMode::Graphs => "graphs",
            FuzzMode::Trees => "trees",
            FuzzMode::Regular => "regular",
            FuzzMode::TriangleFree => "triangle_free",
        }
    }
}

impl FromStr for FuzzMode {
    type Err = UnknownName;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            FuzzMode::Graphs,
            FuzzMode::Trees,
            FuzzMode::Regular,
            FuzzMode::TriangleFree,
        ]
        .into_iter()
        .find(|m| m.name() == s)
        .ok_or(UnknownName {
            kind: "mode",
            value: s.to_string(),
        })
    }
}

impl FuzzCheck {
    pub const ALL: [FuzzCheck; 5] = [
        FuzzCheck::Bounds,
        FuzzCheck::Classify,
        FuzzCheck::Oracle,
        FuzzCheck::Observations,
        FuzzCheck::Frame,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FuzzCheck::Bounds => "bounds",
            FuzzCheck::Classify => "classify",
            FuzzCheck::Oracle => "oracle",
            FuzzCheck::Observations => "observations",
            FuzzCheck::Frame => "frame",
        }
    }
}

impl FromStr for FuzzCheck {
    type Err = UnknownName;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FuzzCheck::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or(UnknownName {
                kind: "check",
                value: s.to_string(),
            })
    }
}

impl fmt::Display for FuzzCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub count: usize,
    pub seed: u64,
    pub mode: FuzzMode,
    pub checks: Vec<FuzzCheck>,
    /// Worker threads; 0 means the rayon default.
    pub jobs: usize,
    pub budget: Option<u64>,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            n_min: 1,
            n_max: 7,
            count: 100,
            seed: 0,
            mode: FuzzMode::Graphs,
            checks: FuzzCheck::ALL.to_vec(),
            jobs: 0,
            budget: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FuzzError {
    #[error("invalid fuzz configuration: {0}")]
    InvalidConfig(String),
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<(), FuzzError> {
        let bad = |m: String| Err(FuzzError::InvalidConfig(m));
        if self.n_min < 1 || self.n_min > self.n_max {
            return bad(format!(
                "need 1 <= n_min <= n_max, got {}..{}",
                self.n_min, self.n_max
            ));
        }
        if self.checks.is_empty() {
            return bad("no checks selected".into());
        }
        let oracle_cap = if self.mode == FuzzMode::Trees {
            TREE_ORACLE_CEILING
        } else {
            ORACLE_CEILING
        };
        if self.checks.contains(&FuzzCheck::Oracle) && self.n_max > oracle_cap {
            return bad(format!(
                "oracle check needs n_max <= {oracle_cap} in mode {}",
                self.mode.name()
            ));
        }
        if self.checks.contains(&FuzzCheck::Observations) && self.n_max > OBSERVATION_CEILING {
            return bad(format!(
                "observations check needs n_max <= {OBSERVATION_CEILING}"
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub index: usize,
    pub graph6: String,
    pub check: FuzzCheck,
    pub detail: String,
    pub params: Option<ParamTable>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceOutcome {
    pub index: usize,
    pub graph6: String,
    /// Checks that ran (as opposed to being skipped as inapplicable).
    pub checks_run: Vec<FuzzCheck>,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzReport {
    pub instances: Vec<InstanceOutcome>,
}

impl FuzzReport {
    pub fn counterexamples(&self) -> impl Iterator<Item = &Counterexample> {
        self.instances.iter().flat_map(|i| i.counterexamples.iter())
    }

    pub fn counterexample_count(&self) -> usize {
        self.counterexamples().count()
    }

    pub fn checks_run(&self) -> usize {
        self.instances.iter().map(|i| i.checks_run.len()).sum()
    }
}

/// Instance `index` of a seeded corpus; the result depends only on the
/// arguments.
pub fn generate_instance(
    mode: FuzzMode,
    n_min: usize,
    n_max: usize,
    seed: u64,
    index: usize,
) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ index as u64);
    let n = rng.gen_range(n_min..=n_max);
    let sub_seed: u64 = rng.gen();
    match mode {
        FuzzMode::Graphs => {
            let p = rng.gen_range(0.15..0.85);
            graph::random_connected_graph(n, p, sub_seed)
        }
        FuzzMode::Trees => graph::random_tree(n, sub_seed),
        FuzzMode::TriangleFree => {
            let extra = rng.gen_range(0..=n);
            graph::random_triangle_free_graph(n, extra, sub_seed)
        }
        FuzzMode::Regular => {
            let degrees: Vec<usize> = (2..n).filter(|r| n * r % 2 == 0).collect();
            for attempt in 0..16u64 {
                if degrees.is_empty() {
                    break;
                }
                let r = degrees[rng.gen_range(0..degrees.len())];
                if let Some(g) = graph::random_regular_graph(n, r, sub_seed.wrapping_add(attempt)) {
                    return g;
                }
            }
            if n >= 3 {
                constructions::cycle(n).expect("n >= 3")
            } else {
                constructions::complete(n).expect("n >= 1")
            }
        }
    }
}

/// Runs the configured checks over the corpus. Results are ordered by
/// instance index whatever the worker count.
pub fn run(cfg: &FuzzConfig) -> Result<FuzzReport, FuzzError> {
    cfg.validate()?;
    let work = || {
        (0..cfg.count)
            .into_par_iter()
            .map(|i| run_instance(cfg, i))
            .collect::<Vec<_>>()
    };
    let instances = if cfg.jobs == 0 {
        work()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| FuzzError::InvalidConfig(e.to_string()))?
            .install(work)
    };
    Ok(FuzzReport { instances })
}

fn run_instance(cfg: &FuzzConfig, index: usize) -> InstanceOutcome {
    let g = generate_instance(cfg.mode, cfg.n_min, cfg.n_max, cfg.seed, index);
    let graph6 = graph::to_graph6(&g).expect("fuzz orders fit graph6");
    let mut checks_run = Vec::new();
    let mut counterexamples = Vec::new();
    let mut checks = cfg.checks.clone();
    checks.sort();
    checks.dedup();
    for check in checks {
        let outcome = match check {
            FuzzCheck::Bounds => check_bounds(&g, cfg.budget),
            FuzzCheck::Classify => check_classify(&g, cfg.budget),
            FuzzCheck::Oracle => check_oracle(&g, cfg.budget),
            FuzzCheck::Observations => check_observations(&g),
            FuzzCheck::Frame => check_frame(&g, cfg.budget),
        };
        let Some(failures) = outcome else { continue };
        checks_run.push(check);
        if !failures.is_empty() {
            let params = ParamTable::compute(&g, cfg.budget).ok();
            counterexamples.extend(failures.into_iter().map(|detail| Counterexample {
                index,
                graph6: graph6.clone(),
                check,
                detail,
                params,
            }));
        }
    }
    InstanceOutcome {
        index,
        graph6,
        checks_run,
        counterexamples,
    }
}

/// `None` when the check does not apply, otherwise the list of failures.
type CheckOutcome = Option<Vec<String>>;

fn check_bounds(g: &Graph, budget: Option<u64>) -> CheckOutcome {
    let report = match analysis::evaluate_bounds(g, budget) {
        Ok(r) => r,
        Err(e) => return Some(vec![format!("solver error: {e}")]),
    };
    let mut out: Vec<String> = report
        .violations()
        .map(|e| format!("{} violated: {} > {}", e.name, e.lhs, e.rhs))
        .collect();
    let p = report.params;
    let lattice = [
        ("gamma <= gamma_r", p.gamma <= p.gamma_r),
        ("gamma <= gamma_2", p.gamma <= p.gamma_2),
        ("gamma_2 <= gamma_r2", p.gamma_2 <= p.gamma_r2),
        ("gamma_R <= gamma_rR", p.gamma_roman <= p.gamma_rroman),
        ("gamma_dR <= gamma_rdR", p.gamma_dr <= p.gamma_rdr),
        ("gamma_rdR <= 2 gamma_rR", p.gamma_rdr <= 2 * p.gamma_rroman),
    ];
    out.extend(
        lattice
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(s, _)| format!("lattice violated: {s}")),
    );
    Some(out)
}

fn check_classify(g: &Graph, budget: Option<u64>) -> CheckOutcome {
    if !g.is_connected() {
        return None;
    }
    let value = match analysis::gamma_rdrd_auto(g, budget) {
        Ok(v) => v,
        Err(e) => return Some(vec![format!("solver error: {e}")]),
    };
    let mut out = Vec::new();
    let tag = analysis::classify_small(g).expect("connected");
    match tag.classification.implied_value() {
        Some(v) if v != value => out.push(format!(
            "classify_small says {} but gamma_rdR = {value}",
            tag.classification
        )),
        None if value <= 5 => {
            out.push(format!("classify_small says OTHER but gamma_rdR = {value}"))
        }
        _ => {}
    }
    if g.is_tree() && g.order() >= 2 {
        let n = g.order() as u32;
        let c = analysis::classify_tree(g).expect("tree").classification;
        let star = c == Classification::TreeStar;
        let near = matches!(c, Classification::TreeT1 | Classification::TreeT2);
        if value < n + 1 {
            out.push(format!("tree value {value} < n+1"));
        }
        if star != (value == n + 1) {
            out.push(format!(
                "classify_tree says {c} but gamma_rdR = {value} with n = {n}"
            ));
        }
        if !star && value < n + 2 {
            out.push(format!("non-star tree value {value} < n+2"));
        }
        if near != (value == n + 2) {
            out.push(format!(
                "classify_tree says {c} but gamma_rdR = {value} with n = {n}"
            ));
        }
    }
    Some(out)
}

fn check_oracle(g: &Graph, budget: Option<u64>) -> CheckOutcome {
    let n = g.order();
    let mut out = Vec::new();
    if g.is_tree() && n <= TREE_ORACLE_CEILING {
        match (tree_dp::gamma_rdrd_tree(g), exact::gamma_rdrd(g, budget)) {
            (Ok(dp), Ok(bb)) => {
                if dp.value != bb.value {
                    out.push(format!(
                        "tree DP {} != branch-and-bound {}",
                        dp.value, bb.value
                    ));
                }
                if !Parameter::Rdrd.validates(g, &dp.witness) || dp.witness.weight() != dp.value {
                    out.push("tree DP witness invalid".to_string());
                }
            }
            (Err(e), _) | (_, Err(e)) => out.push(format!("solver error: {e}")),
        }
    }
    if n <= ORACLE_CEILING {
        for p in Parameter::ALL {
            match (exact::solve(g, p, budget), exact::brute_force(g, p)) {
                (Ok(bb), Ok(bf)) => {
                    if bb.value != bf.value {
                        out.push(format!(
                            "{}: branch-and-bound {} != brute force {}",
                            p.symbol(),
                            bb.value,
                            bf.value
                        ));
                    }
                    if !p.validates(g, &bb.witness) || bb.witness.weight() != bb.value {
                        out.push(format!("{}: witness invalid", p.symbol()));
                    }
                }
                (Err(e), _) | (_, Err(e)) => out.push(format!("{}: solver error: {e}", p.symbol())),
            }
        }
    } else if !g.is_tree() {
        return None;
    }
    Some(out)
}

fn check_observations(g: &Graph) -> CheckOutcome {
    if g.order() > OBSERVATION_CEILING {
        return None;
    }
    Some(match analysis::check_observations(g, OBSERVATION_CEILING) {
        Ok(r) => r.failure.map(|f| format!("{f:?}")).into_iter().collect(),
        Err(e) => vec![format!("solver error: {e}")],
    })
}

fn check_frame(g: &Graph, budget: Option<u64>) -> CheckOutcome {
    if !g.is_connected() {
        return None;
    }
    Some(match analysis::check_frame_equality(g, budget) {
        Ok(f) if f.equality_holds != f.condition_holds => vec![format!(
            "equality {} but condition {} (gamma_rdR={} gamma={} gamma_r={} gamma_r2={})",
            f.equality_holds, f.condition_holds, f.gamma_rdr, f.gamma, f.gamma_r, f.gamma_r2
        )],
        Ok(_) => Vec::new(),
        Err(e) => vec![format!("solver error: {e}")],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_are_deterministic() {
        for mode in [
            FuzzMode::Graphs,
            FuzzMode::Trees,
            FuzzMode::Regular,
            FuzzMode::TriangleFree,
        ] {
            for i in 0..20 {
                let a = generate_instance(mode, 3, 9, 42, i);
                assert_eq!(a, generate_instance(mode, 3, 9, 42, i));
                assert!((3..=9).contains(&a.order()));
                match mode {
                    FuzzMode::Graphs => assert!(a.is_connected()),
                    FuzzMode::Trees => assert!(a.is_tree()),
                    FuzzMode::Regular => assert!(a.predicates().regular_degree.is_some()),
                    FuzzMode::TriangleFree => assert!(a.predicates().is_triangle_free),
                }
            }
        }
    }

    #[test]
    fn config_ceilings() {
        let mut cfg = FuzzConfig {
            n_max: 8,
            checks: vec![FuzzCheck::Oracle],
            ..FuzzConfig::default()
        };
        assert!(cfg.validate().is_err());
        cfg.mode = FuzzMode::Trees;
        assert!(cfg.validate().is_ok());
        cfg.checks = vec![FuzzCheck::Observations];
        assert!(cfg.validate().is_err());
        cfg.n_min = 9;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn small_run_is_clean_and_job_independent() {
        let cfg = FuzzConfig {
            n_min: 2,
            n_max: 6,
            count: 30,
            seed: 5,
            ..FuzzConfig::default()
        };
        let a = run(&cfg).unwrap();
        assert_eq!(
            a.counterexample_count(),
            0,
            "{:?}",
            a.counterexamples().collect::<Vec<_>>()
        );
        let b = run(&FuzzConfig { jobs: 1, ..cfg }).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn names_round_trip() {
        for c in FuzzCheck::ALL {
            assert_eq!(c.name().parse::<FuzzCheck>().unwrap(), c);
        }
        assert_eq!(
            "triangle_free".parse::<FuzzMode>().unwrap(),
            FuzzMode::TriangleFree
        );
        assert!("nope".parse::<FuzzMode>().is_err());
    }
}
