//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rdrd::analysis::{
    check_frame_equality, check_observations, classify_small, classify_tree, evaluate_bounds,
    gadget_identity_check, Classification,
};
use rdrd::constructions::*;
use rdrd::exact;
use rdrd::fuzz::{generate_instance, FuzzMode};
use rdrd::graph::{disjoint_union, join, parse_graph6, random_connected_graph, to_graph6};
use rdrd::tree_dp::gamma_rdrd_tree;
use rdrd::Graph;

const SEED: u64 = 2024;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    failures: Vec<String>,
    summary: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            failures: Vec::new(),
            summary: String::new(),
        }
    }

    fn fail(&mut self, msg: String) {
        self.failures.push(msg);
    }

    fn check_time(&mut self, start: Instant, limit: Duration) {
        let t = start.elapsed();
        if t > limit {
            self.fail(format!("took {t:?}, limit {limit:?}"));
        }
        self.summary = format!("{} in {:.2?}", self.summary, t);
    }
}

fn rdr(g: &Graph) -> u32 {
    exact::gamma_rdrd(g, None).unwrap().value
}

fn known_values() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let mut cases: Vec<(String, Graph, u32)> = vec![
        ("C3".into(), cycle(3).unwrap(), 3),
        ("C4".into(), cycle(4).unwrap(), 6),
        ("P3".into(), path(3).unwrap(), 4),
        ("K2".into(), complete(2).unwrap(), 3),
        ("K1".into(), complete(1).unwrap(), 2),
        ("Heawood".into(), heawood(), 11),
        ("H6".into(), h_n(6).unwrap(), 4),
        ("H8".into(), h_n(8).unwrap(), 4),
        ("K3xK3".into(), hamming(3).unwrap(), 6),
        (
            "sharpness_H(4,1,1)".into(),
            sharpness_h(4, 1, 1).unwrap(),
            7,
        ),
    ];
    for n in 3..=8 {
        cases.push((format!("K1,{}", n - 1), star(n).unwrap(), n as u32 + 1));
    }
    for (name, g, expected) in &cases {
        let v = rdr(g);
        if v != *expected {
            o.fail(format!("{name}: got {v}, expected {expected}"));
        }
    }
    let gr = exact::gamma_r(&heawood(), None).unwrap().value;
    if gr != 4 {
        o.fail(format!("gamma_r(Heawood) = {gr}, expected 4"));
    }
    o.summary = format!("{} values", cases.len() + 1);
    o.check_time(start, Duration::from_secs(60));
    o
}

fn gadget_identity() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let mut seen = Vec::new();
    for (name, g, expected) in [
        ("K1", complete(1).unwrap(), 5),
        ("K2", complete(2).unwrap(), 10),
        ("P3", path(3).unwrap(), 14),
    ] {
        let r = gadget_identity_check(&g, None).unwrap();
        if !r.holds || r.lhs != expected {
            o.fail(format!(
                "{name}: lhs {} rhs {} expected {expected}",
                r.lhs, r.rhs
            ));
        }
        seen.push(format!("{name}={}", r.lhs));
    }
    o.summary = seen.join(" ");
    o.check_time(start, Duration::from_secs(600));
    o
}

fn tree_corpus() -> Vec<Graph> {
    (0..500)
        .map(|i| generate_instance(FuzzMode::Trees, 2, 12, SEED, i))
        .collect()
}

fn tree_oracle(trees: &[Graph]) -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    for t in trees {
        let dp = gamma_rdrd_tree(t).unwrap().value;
        let bb = rdr(t);
        if dp != bb {
            o.fail(format!("{}: DP {dp} vs B&B {bb}", to_graph6(t).unwrap()));
        }
    }
    o.summary = format!("{} trees", trees.len());
    o.check_time(start, Duration::from_secs(300));
    o
}

fn tree_lower_bounds(trees: &[Graph]) -> Outcome {
    let mut o = Outcome::new();
    let (mut stars, mut near) = (0, 0);
    for t in trees {
        let n = t.order() as u32;
        let v = gamma_rdrd_tree(t).unwrap().value;
        let c = classify_tree(t).unwrap().classification;
        let star = c == Classification::TreeStar;
        let is_near = matches!(c, Classification::TreeT1 | Classification::TreeT2);
        stars += star as usize;
        near += is_near as usize;
        let g6 = to_graph6(t).unwrap();
        if v < n + 1 || (!star && v < n + 2) {
            o.fail(format!("{g6}: value {v} below the lower bound"));
        }
        if star != (v == n + 1) || is_near != (v == n + 2) {
            o.fail(format!("{g6}: tagged {c}, value {v}, n {n}"));
        }
    }
    o.summary = format!("{} trees, {stars} stars, {near} near-extremal", trees.len());
    o
}

fn connected_corpus(count: usize, n_max: usize, salt: u64) -> Vec<Graph> {
    (0..count)
        .map(|i| generate_instance(FuzzMode::Graphs, 1, n_max, SEED ^ salt, i))
        .collect()
}

fn bounds_sweep() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let graphs = connected_corpus(200, 8, 0x5);
    let mut applied = 0;
    for g in &graphs {
        let r = evaluate_bounds(g, None).unwrap();
        applied += r.entries.iter().filter(|e| e.applicable).count();
        for e in r.violations() {
            o.fail(format!(
                "{}: {} has {} > {}",
                to_graph6(g).unwrap(),
                e.name,
                e.lhs,
                e.rhs
            ));
        }
    }
    o.summary = format!("{} graphs, {applied} applicable bound checks", graphs.len());
    o.check_time(start, Duration::from_secs(600));
    o
}

fn small_value_classifier() -> Outcome {
    let mut o = Outcome::new();
    let mut graphs = connected_corpus(200, 8, 0x6);
    graphs.extend(small_value_family_instances().into_iter().map(|(_, g)| g));
    let mut tagged = 0;
    for g in &graphs {
        let v = rdr(g);
        let c = classify_small(g).unwrap().classification;
        let ok = match c.implied_value() {
            Some(i) => {
                tagged += 1;
                i == v
            }
            None => v > 5,
        };
        if !ok {
            o.fail(format!("{}: tagged {c}, value {v}", to_graph6(g).unwrap()));
        }
    }
    o.summary = format!("{} graphs, {tagged} small-value tags", graphs.len());
    o
}

fn observations() -> Outcome {
    let mut o = Outcome::new();
    let graphs = connected_corpus(100, 7, 0x7);
    let mut optima = 0;
    for g in &graphs {
        let r = check_observations(g, 7).unwrap();
        optima += r.optimal_count;
        if let Some(f) = r.failure {
            o.fail(format!("{}: {f:?}", to_graph6(g).unwrap()));
        }
    }
    o.summary = format!("{} graphs, {optima} optimal labelings", graphs.len());
    o
}

fn frame_equivalence() -> Outcome {
    let mut o = Outcome::new();
    let graphs = connected_corpus(200, 8, 0x8);
    let mut equal = 0;
    for g in &graphs {
        let f = check_frame_equality(g, None).unwrap();
        equal += f.equality_holds as usize;
        if f.equality_holds != f.condition_holds {
            o.fail(format!("{}: {f:?}", to_graph6(g).unwrap()));
        }
    }
    o.summary = format!("{} graphs, {equal} with equality", graphs.len());
    o
}

fn negative_controls() -> Outcome {
    let mut o = Outcome::new();
    let r = evaluate_bounds(&petersen(), None).unwrap();
    if r.entry("regular_girth6").unwrap().applicable {
        o.fail("regular girth-6 bound reported applicable on Petersen".into());
    }
    if r.params.gamma_rdr <= 3 {
        o.fail(format!("gamma_rdR(Petersen) = {}", r.params.gamma_rdr));
    }
    let g = join(
        &Graph::empty(1),
        &disjoint_union(&complete(2).unwrap(), &complete(2).unwrap()),
    );
    let r = evaluate_bounds(&g, None).unwrap();
    if r.params.gamma_rdr <= 2 * r.params.gamma_rroman - 2 {
        o.fail(format!(
            "K1 v 2K2: gamma_rdR {} not above 2 gamma_rR - 2 = {}",
            r.params.gamma_rdr,
            2 * r.params.gamma_rroman - 2
        ));
    }
    if r.entry("triangle_free").unwrap().applicable {
        o.fail("triangle-free bound reported applicable on K1 v 2K2".into());
    }
    o.summary = "Petersen, K1 v 2K2".into();
    o
}

fn graph6_round_trip() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=60);
        let p = rng.gen_range(0.0..1.0);
        let g = random_connected_graph(n, p, rng.gen());
        let s = to_graph6(&g).unwrap();
        match parse_graph6(s.as_bytes()) {
            Ok(h) if h == g => {}
            _ => o.fail(format!("round trip failed for {s}")),
        }
    }
    o.summary = "1000 graphs".into();
    o.check_time(start, Duration::from_secs(5));
    o
}

fn main() -> ExitCode {
    let trees = tree_corpus();
    let criteria: Vec<Criterion> = vec![
        ("known values", Box::new(known_values)),
        ("gadget identity", Box::new(gadget_identity)),
        ("tree oracle equivalence", Box::new(|| tree_oracle(&trees))),
        ("tree lower bounds", Box::new(|| tree_lower_bounds(&trees))),
        ("bounds sweep", Box::new(bounds_sweep)),
        ("small-value classifier", Box::new(small_value_classifier)),
        ("observation suite", Box::new(observations)),
        ("frame equality equivalence", Box::new(frame_equivalence)),
        ("negative controls", Box::new(negative_controls)),
        ("graph6 round trip", Box::new(graph6_round_trip)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let status = if o.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!("{status} [{}] {name}: {}", i + 1, o.summary.trim());
        for f in o.failures.iter().take(10) {
            println!("    {f}");
        }
        failed += !o.failures.is_empty() as usize;
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
