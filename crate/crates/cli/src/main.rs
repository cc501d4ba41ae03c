//! `rdrd`: exact solvers, validators, bounds, classifiers and a fuzz
//! harness for restrained double Roman domination.

mod construct;
mod input;

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rdrd::analysis::{self, FamilyTag};
use rdrd::exact::{self, Parameter, SolveError, SolveResult, Witness};
use rdrd::fuzz::{self, FuzzCheck, FuzzConfig, FuzzMode};
use rdrd::graph::to_graph6;
use rdrd::labelings::{self, parse_set_text, SetKind, Violation};
use rdrd::{tree_dp, Graph, Labeling, VertexSet};
use serde_json::{json, Value};

use input::{read_graphs, read_single, Input};

/// Outcomes other than success.
pub enum Failure {
    /// Bad usage or unreadable input: exit 2.
    Usage(String),
    /// A violated bound, invalid witness or fuzz counterexample: exit 1.
    Violation,
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<analysis::AnalysisError> for Failure {
    fn from(e: analysis::AnalysisError) -> Self {
        Failure::Usage(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "rdrd",
    version,
    about = "Restrained double Roman domination workbench"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct GraphInput {
    /// Graph in graph6 format, or `-` to read one graph6 per line from stdin.
    graph: Option<String>,
    /// File with one graph6 string per line (`#` comments and blank lines skipped).
    #[arg(long)]
    file: Option<String>,
    /// Emit one JSON record per line.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    /// Tree DP for trees when the parameter is rdrd, branch-and-bound otherwise.
    Auto,
    Bb,
    Tree,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a parameter exactly and print an optimal witness.
    Solve {
        #[command(flatten)]
        input: GraphInput,
        /// rdrd, dr, roman, rroman, dom, rdom, 2dom or r2dom.
        #[arg(long, default_value = "rdrd")]
        param: Parameter,
        /// Branch-and-bound node cap (overrides RDRD_BUDGET).
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value = "auto")]
        engine: Engine,
        /// Print every optimal RDRD labeling instead of one.
        #[arg(long)]
        all: bool,
        /// Largest order for --all.
        #[arg(long, default_value_t = exact::DEFAULT_ENUMERATION_CEILING)]
        ceiling: usize,
    },
    /// Check a labeling or vertex set against the definition.
    Verify {
        /// Graph in graph6 format.
        graph: String,
        /// Labeling file ("index label" per line; one index per line for set
        /// parameters), or `-` for stdin.
        #[arg(long, conflicts_with = "values", required_unless_present = "values")]
        labeling: Option<String>,
        /// Inline comma-separated labels (or set members for set parameters).
        #[arg(long)]
        values: Option<String>,
        #[arg(long, default_value = "rdrd")]
        param: Parameter,
        #[arg(long)]
        json: bool,
    },
    /// Print all eight parameters.
    Params {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Evaluate every bound; exit 1 when an applicable bound fails.
    Bounds {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Structural classification (small values, and tree classes for trees).
    Classify {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Build a named graph and print it as graph6 after a `#` provenance line.
    #[command(after_help = format!("Families: {}", construct::FAMILIES))]
    Construct {
        family: String,
        args: Vec<String>,
        /// Seed for the random families.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run seeded checks over generated graphs; exit 1 on any counterexample.
    Fuzz {
        #[arg(long, default_value = "graphs")]
        mode: FuzzMode,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated subset of bounds, classify, oracle, observations, frame.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "bounds,classify,oracle,observations,frame"
        )]
        checks: Vec<FuzzCheck>,
        /// Worker threads (0 = all cores). Output does not depend on it.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

fn budget_from(flag: Option<u64>) -> Result<Option<u64>, Failure> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var("RDRD_BUDGET") {
        Ok(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("RDRD_BUDGET must be a node count, got `{s}`"))),
        Err(_) => Ok(None),
    }
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Labeling(f) => json!(f.values()),
        Witness::Set(s) => json!(s.iter().collect::<Vec<_>>()),
    }
}

fn header(batch: bool, json: bool, inp: &Input) {
    if batch && !json {
        println!("# {}", inp.graph6);
    }
}

fn solve_one(
    g: &Graph,
    param: Parameter,
    budget: Option<u64>,
    engine: Engine,
) -> Result<(SolveResult, &'static str), Failure> {
    let tree_ok = g.order() > 0 && g.is_tree();
    match engine {
        Engine::Tree if param != Parameter::Rdrd => {
            Err(Failure::Usage("the tree engine only computes rdrd".into()))
        }
        Engine::Tree => Ok((tree_dp::gamma_rdrd_tree(g)?, "tree")),
        Engine::Auto if param == Parameter::Rdrd && tree_ok => {
            Ok((tree_dp::gamma_rdrd_tree(g)?, "tree"))
        }
        _ => Ok((exact::solve(g, param, budget)?, "bb")),
    }
}

fn cmd_solve(
    input: GraphInput,
    param: Parameter,
    budget: Option<u64>,
    engine: Engine,
    all: bool,
    ceiling: usize,
) -> Result<(), Failure> {
    let budget = budget_from(budget)?;
    let (graphs, batch) = read_graphs(input.graph.as_deref(), input.file.as_deref())?;
    if all && param != Parameter::Rdrd {
        return Err(Failure::Usage("--all is only available for rdrd".into()));
    }
    for inp in &graphs {
        header(batch, input.json, inp);
        if all {
            let optima = exact::enumerate_optimal_rdrd(&inp.graph, ceiling)?;
            let value = optima.first().map(Labeling::weight).unwrap_or(0);
            if input.json {
                let list: Vec<&[u8]> = optima.iter().map(|f| f.values()).collect();
                println!(
                    "{}",
                    json!({"graph6": inp.graph6, "param": param.name(), "value": value, "optima": list})
                );
            } else {
                println!("value={value}");
                println!("optima={}", optima.len());
                for f in &optima {
                    let row: Vec<String> = f.values().iter().map(u8::to_string).collect();
                    println!("{}", row.join(" "));
                }
            }
            continue;
        }
        let (r, used) = solve_one(&inp.graph, param, budget, engine)?;
        if input.json {
            println!(
                "{}",
                json!({
                    "graph6": inp.graph6,
                    "param": param.name(),
                    "value": r.value,
                    "witness": witness_json(&r.witness),
                    "engine": used,
                    "nodes": r.nodes_explored,
                })
            );
        } else {
            println!("value={}", r.value);
            print!("{}", r.witness.to_text());
        }
    }
    Ok(())
}

fn describe(param: Parameter) -> &'static str {
    match param {
        Parameter::Rdrd => "RDRD",
        Parameter::Dr => "DRD",
        Parameter::Roman => "Roman",
        Parameter::RRoman => "restrained Roman",
        Parameter::Dom => "dominating set",
        Parameter::RDom => "restrained dominating set",
        Parameter::TwoDom => "2-dominating set",
        Parameter::RTwoDom => "restrained 2-dominating set",
    }
}

fn set_kind(param: Parameter) -> Option<SetKind> {
    match param {
        Parameter::Dom => Some(SetKind::Dominating),
        Parameter::RDom => Some(SetKind::RestrainedDominating),
        Parameter::TwoDom => Some(SetKind::TwoDominating),
        Parameter::RTwoDom => Some(SetKind::RestrainedTwoDominating),
        _ => None,
    }
}

fn inline_list(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("bad value `{x}`")))
        })
        .collect()
}

fn cmd_verify(
    graph: String,
    labeling: Option<String>,
    values: Option<String>,
    param: Parameter,
    json_out: bool,
) -> Result<(), Failure> {
    let inp = read_single(&graph)?;
    let g = &inp.graph;
    let n = g.order();
    let text = match labeling.as_deref() {
        Some("-") => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            Some(s)
        }
        Some(path) => {
            Some(fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?)
        }
        None => None,
    };
    let (result, weight): (Result<(), Violation>, u32) = match set_kind(param) {
        Some(kind) => {
            let set = match (&text, &values) {
                (Some(t), _) => parse_set_text(n, t).map_err(|e| Failure::Usage(e.to_string()))?,
                (None, Some(v)) => {
                    let members = inline_list(v)?;
                    VertexSet::from_members(n, members)
                        .map_err(|e| Failure::Usage(e.to_string()))?
                }
                (None, None) => unreachable!("clap requires one of them"),
            };
            (labelings::check_set(g, &set, kind), set.len() as u32)
        }
        None => {
            let f = match (&text, &values) {
                (Some(t), _) => {
                    Labeling::parse_text(t).map_err(|e| Failure::Usage(e.to_string()))?
                }
                (None, Some(v)) => {
                    let vals = inline_list(v)?
                        .into_iter()
                        .map(|x| u8::try_from(x).unwrap_or(u8::MAX))
                        .collect();
                    Labeling::new(vals).map_err(|e| Failure::Usage(e.to_string()))?
                }
                (None, None) => unreachable!("clap requires one of them"),
            };
            let check = match param {
                Parameter::Rdrd => labelings::check_rdrd(g, &f),
                Parameter::Dr => labelings::check_drd(g, &f),
                Parameter::Roman => labelings::check_roman(g, &f),
                _ => labelings::check_rroman(g, &f),
            };
            (check, f.weight())
        }
    };
    let what = describe(param);
    if json_out {
        println!(
            "{}",
            json!({
                "graph6": inp.graph6,
                "param": param.name(),
                "valid": result.is_ok(),
                "weight": weight,
                "violation": result.as_ref().err().map(|v| v.to_string()),
            })
        );
    } else {
        match &result {
            Ok(()) => println!("valid {what}, weight {weight}"),
            Err(v) => println!("invalid {what}: {v}"),
        }
    }
    result.map_err(|_| Failure::Violation)
}

fn cmd_params(input: GraphInput, budget: Option<u64>) -> Result<(), Failure> {
    let budget = budget_from(budget)?;
    let (graphs, batch) = read_graphs(input.graph.as_deref(), input.file.as_deref())?;
    for inp in &graphs {
        header(batch, input.json, inp);
        let table = analysis::ParamTable::compute(&inp.graph, budget)?;
        if input.json {
            let mut rec = serde_json::Map::new();
            rec.insert("graph6".into(), json!(inp.graph6));
            for (k, v) in table.entries() {
                rec.insert(k.into(), json!(v));
            }
            println!("{}", Value::Object(rec));
        } else {
            println!("n={}", inp.graph.order());
            for (k, v) in table.entries() {
                println!("{k}={v}");
            }
        }
    }
    Ok(())
}

fn cmd_bounds(input: GraphInput, budget: Option<u64>) -> Result<(), Failure> {
    let budget = budget_from(budget)?;
    let (graphs, batch) = read_graphs(input.graph.as_deref(), input.file.as_deref())?;
    let mut violated = false;
    for inp in &graphs {
        header(batch, input.json, inp);
        let report = analysis::evaluate_bounds(&inp.graph, budget)?;
        for e in &report.entries {
            if input.json {
                println!(
                    "{}",
                    json!({
                        "graph6": inp.graph6,
                        "bound": e.name,
                        "statement": e.statement,
                        "applicable": e.applicable,
                        "precondition_failed": e.precondition_failed,
                        "lhs": e.lhs.to_string(),
                        "rhs": e.rhs.to_string(),
                        "holds": e.holds,
                    })
                );
            } else if e.applicable {
                let verdict = if e.holds { "holds" } else { "VIOLATED" };
                println!(
                    "{:<20} {} <= {}  {verdict}  [{}]",
                    e.name, e.lhs, e.rhs, e.statement
                );
            } else {
                println!(
                    "{:<20} not applicable ({})  [{}]",
                    e.name,
                    e.precondition_failed.as_deref().unwrap_or(""),
                    e.statement
                );
            }
        }
        violated |= report.violations().next().is_some();
    }
    if violated {
        Err(Failure::Violation)
    } else {
        Ok(())
    }
}

fn tag_json(graph6: &str, kind: &str, tag: &FamilyTag) -> Value {
    let evidence: serde_json::Map<String, Value> = tag
        .evidence
        .roles
        .iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    json!({"graph6": graph6, "kind": kind, "tag": tag.classification.to_string(), "evidence": evidence})
}

fn print_tag(tag: &FamilyTag) {
    if tag.evidence.roles.is_empty() {
        println!("{}", tag.classification);
    } else {
        println!("{} {}", tag.classification, tag.evidence);
    }
}

fn cmd_classify(input: GraphInput) -> Result<(), Failure> {
    let (graphs, batch) = read_graphs(input.graph.as_deref(), input.file.as_deref())?;
    for inp in &graphs {
        header(batch, input.json, inp);
        let g = &inp.graph;
        let mut tags = vec![("small", analysis::classify_small(g)?)];
        if g.is_tree() && g.order() >= 2 {
            tags.push(("tree", analysis::classify_tree(g)?));
        }
        for (kind, tag) in &tags {
            if input.json {
                println!("{}", tag_json(&inp.graph6, kind, tag));
            } else {
                print_tag(tag);
            }
        }
    }
    Ok(())
}

fn cmd_construct(family: String, args: Vec<String>, seed: u64) -> Result<(), Failure> {
    let (provenance, g) = construct::construct(&family, &args, seed)?;
    let text = to_graph6(&g).map_err(|e| Failure::Usage(e.to_string()))?;
    println!("# {provenance}");
    println!("{text}");
    Ok(())
}

fn cmd_fuzz(cfg: FuzzConfig, json_out: bool) -> Result<(), Failure> {
    let report = fuzz::run(&cfg).map_err(|e| Failure::Usage(e.to_string()))?;
    for c in report.counterexamples() {
        if json_out {
            let params = c.params.map(|p| {
                p.entries()
                    .into_iter()
                    .map(|(k, v)| (k.to_string(), json!(v)))
                    .collect::<serde_json::Map<_, _>>()
            });
            println!(
                "{}",
                json!({"index": c.index, "graph6": c.graph6, "check": c.check.name(), "detail": c.detail, "params": params})
            );
        } else {
            println!(
                "counterexample index={} check={} graph6={}",
                c.index, c.check, c.graph6
            );
            println!("  {}", c.detail);
            if let Some(p) = c.params {
                println!("  {p}");
            }
        }
    }
    let count = report.counterexample_count();
    if json_out {
        println!(
            "{}",
            json!({"summary": true, "instances": report.instances.len(), "checks_run": report.checks_run(), "counterexamples": count})
        );
    } else {
        println!(
            "{} instances, {} checks run, {count} counterexamples",
            report.instances.len(),
            report.checks_run()
        );
    }
    if count > 0 {
        Err(Failure::Violation)
    } else {
        Ok(())
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve {
            input,
            param,
            budget,
            engine,
            all,
            ceiling,
        } => cmd_solve(input, param, budget, engine, all, ceiling),
        Command::Verify {
            graph,
            labeling,
            values,
            param,
            json,
        } => cmd_verify(graph, labeling, values, param, json),
        Command::Params { input, budget } => cmd_params(input, budget),
        Command::Bounds { input, budget } => cmd_bounds(input, budget),
        Command::Classify { input } => cmd_classify(input),
        Command::Construct { family, args, seed } => cmd_construct(family, args, seed),
        Command::Fuzz {
            mode,
            n_min,
            n_max,
            count,
            seed,
            checks,
            jobs,
            budget,
            json,
        } => {
            let cfg = FuzzConfig {
                n_min,
                n_max,
                count,
                seed,
                mode,
                checks,
                jobs,
                budget: budget_from(budget)?,
            };
            cmd_fuzz(cfg, json)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
