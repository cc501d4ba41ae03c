use rdrd::constructions::{FamilySpec, OmegaVariant, ThetaVariant};
use rdrd::graph::{self, parse_graph6};
use rdrd::Graph;

use crate::Failure;

pub const FAMILIES: &str = "star N | double_star P Q | path N | cycle N | complete N | \
complete_bipartite A B | petersen | heawood | h_n N | hamming P | sharpness_h S P Q | \
gadget G6 | t1 P Q [SUBDIVISIONS] | t2 SKELETON_G6 COUNTS | theta VARIANT [H_G6] | \
omega VARIANT H_G6 [TARGETS] | random_tree N | random_graph N PROB | random_regular N R | \
random_triangle_free N EXTRA";

struct Args<'a> {
    family: &'a str,
    rest: &'a [String],
}

impl Args<'_> {
    fn expect(&self, lo: usize, hi: usize) -> Result<(), Failure> {
        if (lo..=hi).contains(&self.rest.len()) {
            Ok(())
        } else {
            Err(Failure::Usage(format!(
                "{} takes {} argument(s), got {}",
                self.family,
                if lo == hi {
                    lo.to_string()
                } else {
                    format!("{lo} to {hi}")
                },
                self.rest.len()
            )))
        }
    }

    fn get(&self, i: usize) -> Option<&str> {
        self.rest.get(i).map(String::as_str)
    }

    fn num(&self, i: usize) -> Result<usize, Failure> {
        let s = self.get(i).unwrap_or("");
        s.parse()
            .map_err(|_| Failure::Usage(format!("{}: expected a count, got `{s}`", self.family)))
    }

    fn graph(&self, i: usize) -> Result<Graph, Failure> {
        let s = self.get(i).unwrap_or("");
        parse_graph6(s.as_bytes()).map_err(|e| Failure::Usage(format!("{}: {e}", self.family)))
    }

    fn list(&self, i: usize) -> Result<Vec<usize>, Failure> {
        match self.get(i) {
            None | Some("") => Ok(Vec::new()),
            Some(s) => s
                .split(',')
                .map(|x| {
                    x.trim().parse().map_err(|_| {
                        Failure::Usage(format!("{}: bad list entry `{x}`", self.family))
                    })
                })
                .collect(),
        }
    }
}

fn theta_variant(s: &str) -> Result<ThetaVariant, Failure> {
    [
        ThetaVariant::K2barJoin,
        ThetaVariant::K1JoinK1PlusH,
        ThetaVariant::P3,
    ]
    .into_iter()
    .find(|v| v.name() == s)
    .ok_or_else(|| {
        Failure::Usage(format!(
            "unknown theta variant `{s}` (k2bar_join, k1_join_k1_plus_h, p3)"
        ))
    })
}

fn omega_variant(s: &str) -> Result<OmegaVariant, Failure> {
    OmegaVariant::ALL
        .into_iter()
        .find(|v| v.name() == s)
        .ok_or_else(|| Failure::Usage(format!("unknown omega variant `{s}` (o1..o5)")))
}

/// Builds the named graph. Returns the provenance text and the graph.
pub fn construct(family: &str, rest: &[String], seed: u64) -> Result<(String, Graph), Failure> {
    let lower = family.to_lowercase();
    let a = Args {
        family: &lower,
        rest,
    };
    let spec = match lower.as_str() {
        "star" | "path" | "cycle" | "complete" | "h_n" => {
            a.expect(1, 1)?;
            let n = a.num(0)?;
            match lower.as_str() {
                "star" => FamilySpec::Star { n },
                "path" => FamilySpec::Path { n },
                "cycle" => FamilySpec::Cycle { n },
                "complete" => FamilySpec::Complete { n },
                _ => FamilySpec::HN { n },
            }
        }
        "double_star" => {
            a.expect(2, 2)?;
            FamilySpec::DoubleStar {
                p: a.num(0)?,
                q: a.num(1)?,
            }
        }
        "complete_bipartite" => {
            a.expect(2, 2)?;
            FamilySpec::CompleteBipartite {
                a: a.num(0)?,
                b: a.num(1)?,
            }
        }
        "petersen" => {
            a.expect(0, 0)?;
            FamilySpec::Petersen
        }
        "heawood" => {
            a.expect(0, 0)?;
            FamilySpec::Heawood
        }
        "hamming" => {
            a.expect(1, 1)?;
            FamilySpec::Hamming { p: a.num(0)? }
        }
        "sharpness_h" => {
            a.expect(3, 3)?;
            FamilySpec::SharpnessH {
                s: a.num(0)?,
                p: a.num(1)?,
                q: a.num(2)?,
            }
        }
        "gadget" => {
            a.expect(1, 1)?;
            FamilySpec::Gadget { base: a.graph(0)? }
        }
        "t1" => {
            a.expect(2, 3)?;
            let subdivisions = if rest.len() == 3 { a.num(2)? } else { 0 };
            FamilySpec::T1 {
                p: a.num(0)?,
                q: a.num(1)?,
                subdivisions,
            }
        }
        "t2" => {
            a.expect(2, 2)?;
            FamilySpec::T2 {
                skeleton: a.graph(0)?,
                attach_counts: a.list(1)?,
            }
        }
        "theta" => {
            a.expect(1, 2)?;
            let h = if rest.len() == 2 {
                Some(a.graph(1)?)
            } else {
                None
            };
            FamilySpec::Theta {
                variant: theta_variant(&rest[0])?,
                h,
            }
        }
        "omega" => {
            a.expect(2, 3)?;
            FamilySpec::Omega {
                variant: omega_variant(&rest[0])?,
                h: a.graph(1)?,
                targets: a.list(2)?,
            }
        }
        "random_tree" | "random_graph" | "random_regular" | "random_triangle_free" => {
            return random_family(&a, seed);
        }
        _ => {
            return Err(Failure::Usage(format!(
                "unknown family `{family}`; families: {FAMILIES}"
            )))
        }
    };
    let g = spec.build().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok((spec.to_string(), g))
}

fn random_family(a: &Args, seed: u64) -> Result<(String, Graph), Failure> {
    let n = a.num(0)?;
    if n == 0 {
        return Err(Failure::Usage(format!(
            "{}: order must be positive",
            a.family
        )));
    }
    let (extra, g) = match a.family {
        "random_tree" => {
            a.expect(1, 1)?;
            (String::new(), graph::random_tree(n, seed))
        }
        "random_graph" => {
            a.expect(2, 2)?;
            let s = a.get(1).unwrap();
            let p: f64 = s
                .parse()
                .ok()
                .filter(|p| (0.0..=1.0).contains(p))
                .ok_or_else(|| Failure::Usage(format!("random_graph: bad probability `{s}`")))?;
            (format!(" p={s}"), graph::random_connected_graph(n, p, seed))
        }
        "random_regular" => {
            a.expect(2, 2)?;
            let r = a.num(1)?;
            let g = graph::random_regular_graph(n, r, seed).ok_or_else(|| {
                Failure::Usage(format!(
                    "random_regular: no {r}-regular graph on {n} vertices found"
                ))
            })?;
            (format!(" r={r}"), g)
        }
        _ => {
            a.expect(2, 2)?;
            let extra = a.num(1)?;
            (
                format!(" extra={extra}"),
                graph::random_triangle_free_graph(n, extra, seed),
            )
        }
    };
    Ok((format!("family={} n={n}{extra} seed={seed}", a.family), g))
}
