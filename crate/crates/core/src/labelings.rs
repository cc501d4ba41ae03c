//! Vertex labelings and validators for the Roman-type and set-type
//! domination variants.
//!
//! Validators report the first violated vertex (in index order) and the
//! condition it violates, so failing fuzz instances can be diagnosed.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// A total map from vertices `0..n` to labels in `{0, 1, 2, 3}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labeling {
    values: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("label {value} at vertex {vertex} is outside 0..=3")]
    ValueOutOfRange { vertex: usize, value: u8 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Labeling {
    pub fn new(values: Vec<u8>) -> Result<Labeling, LabelingError> {
        if let Some((vertex, &value)) = values.iter().enumerate().find(|(_, &x)| x > 3) {
            return Err(LabelingError::ValueOutOfRange { vertex, value });
        }
        Ok(Labeling { values })
    }

    pub fn constant(n: usize, value: u8) -> Labeling {
        Labeling::new(vec![value; n]).expect("constant label in range")
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: usize) -> u8 {
        self.values[v]
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// `ω(f)`, the sum of all labels.
    pub fn weight(&self) -> u32 {
        self.values.iter().map(|&x| x as u32).sum()
    }

    /// The level set `V_i = {v : f(v) = i}`.
    pub fn level_set(&self, i: u8) -> VertexSet {
        VertexSet::from_mask(self.values.iter().map(|&x| x == i).collect())
    }

    /// Parses the `index label` text format: one vertex per line, indices
    /// 0-based and ascending, blank lines and `#` comments ignored.
    pub fn parse_text(text: &str) -> Result<Labeling, LabelingError> {
        let mut values = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| LabelingError::Parse {
                line: lineno + 1,
                message,
            };
            let mut fields = line.split_whitespace();
            let (Some(idx), Some(label), None) = (fields.next(), fields.next(), fields.next())
            else {
                return Err(err("expected `index label`".into()));
            };
            let idx: usize = idx.parse().map_err(|_| err(format!("bad index `{idx}`")))?;
            let label: u8 = label
                .parse()
                .map_err(|_| err(format!("bad label `{label}`")))?;
            if idx != values.len() {
                return Err(err(format!("expected index {}, found {idx}", values.len())));
            }
            if label > 3 {
                return Err(err(format!("label {label} outside 0..=3")));
            }
            values.push(label);
        }
        Ok(Labeling { values })
    }

    pub fn to_text(&self) -> String {
        self.values
            .iter()
            .enumerate()
            .map(|(v, x)| format!("{v} {x}\n"))
            .collect()
    }
}

impl FromStr for Labeling {
    type Err = LabelingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Labeling::parse_text(s)
    }
}

impl fmt::Debug for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Labeling{:?}", self.values)
    }
}

/// Which condition a vertex fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    /// Label 0 without two neighbors labeled 2 or one labeled 3.
    ZeroUncovered,
    /// Label 1 without a neighbor labeled 2 or 3.
    OneUncovered,
    /// Label 0 without a neighbor labeled 2 (Roman functions).
    ZeroWithoutTwo,
    /// Label 0 with no neighbor labeled 0.
    IsolatedZero,
    /// Label 3 in a function restricted to `{0, 1, 2}`.
    LabelTooLarge,
    /// Vertex outside the set without a neighbor in the set.
    Undominated,
    /// Vertex outside the set with fewer than two neighbors in the set.
    NotTwoDominated,
    /// Vertex outside the set with no neighbor outside the set.
    Unrestrained,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::ZeroUncovered => "label 0 needs two neighbors labeled 2 or one labeled 3",
            Condition::OneUncovered => "label 1 needs a neighbor labeled 2 or 3",
            Condition::ZeroWithoutTwo => "label 0 needs a neighbor labeled 2",
            Condition::IsolatedZero => "label 0 needs a neighbor labeled 0",
            Condition::LabelTooLarge => "label 3 is not allowed",
            Condition::Undominated => "vertex outside the set needs a neighbor in the set",
            Condition::NotTwoDominated => "vertex outside the set needs two neighbors in the set",
            Condition::Unrestrained => "vertex outside the set needs a neighbor outside the set",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("labeling has {found} entries but the graph has {expected} vertices")]
    Unbound { expected: usize, found: usize },
    #[error("vertex {vertex}: {condition}")]
    At { vertex: usize, condition: Condition },
}

fn bound(g: &Graph, len: usize) -> Result<(), Violation> {
    if len != g.order() {
        return Err(Violation::Unbound {
            expected: g.order(),
            found: len,
        });
    }
    Ok(())
}

fn at(vertex: usize, condition: Condition) -> Violation {
    Violation::At { vertex, condition }
}

pub fn check_drd(g: &Graph, f: &Labeling) -> Result<(), Violation> {
    bound(g, f.len())?;
    for v in g.vertices() {
        let nb = g.neighbors(v);
        match f.get(v) {
            0 => {
                let twos = nb.iter().filter(|&&w| f.get(w) == 2).count();
                let threes = nb.iter().any(|&w| f.get(w) == 3);
                if !threes && twos < 2 {
                    return Err(at(v, Condition::ZeroUncovered));
                }
            }
            1 if !nb.iter().any(|&w| f.get(w) >= 2) => {
                return Err(at(v, Condition::OneUncovered));
            }
            _ => {}
        }
    }
    Ok(())
}

fn check_no_isolated_zero(g: &Graph, f: &Labeling) -> Result<(), Violation> {
    for v in g.vertices() {
        if f.get(v) == 0 && !g.neighbors(v).iter().any(|&w| f.get(w) == 0) {
            return Err(at(v, Condition::IsolatedZero));
        }
    }
    Ok(())
}

/// Restrained double Roman: a DRD function whose 0-labeled vertices induce a
/// subgraph without isolated vertices.
pub fn check_rdrd(g: &Graph, f: &Labeling) -> Result<(), Violation> {
    check_drd(g, f)?;
    check_no_isolated_zero(g, f)
}

pub fn check_roman(g: &Graph, f: &Labeling) -> Result<(), Violation> {
    bound(g, f.len())?;
    if let Some(v) = g.vertices().find(|&v| f.get(v) > 2) {
        return Err(at(v, Condition::LabelTooLarge));
    }
    for v in g.vertices() {
        if f.get(v) == 0 && !g.neighbors(v).iter().any(|&w| f.get(w) == 2) {
            return Err(at(v, Condition::ZeroWithoutTwo));
        }
    }
    Ok(())
}

pub fn check_rroman(g: &Graph, f: &Labeling) -> Result<(), Violation> {
    check_roman(g, f)?;
    check_no_isolated_zero(g, f)
}

pub fn is_drd(g: &Graph, f: &Labeling) -> bool {
    check_drd(g, f).is_ok()
}

pub fn is_rdrd(g: &Graph, f: &Labeling) -> bool {
    check_rdrd(g, f).is_ok()
}

pub fn is_roman(g: &Graph, f: &Labeling) -> bool {
    check_roman(g, f).is_ok()
}

pub fn is_rrd(g: &Graph, f: &Labeling) -> bool {
    check_rroman(g, f).is_ok()
}

/// Outcome of the four set-based validators on one set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SetReport {
    pub dominating: bool,
    pub restrained_dominating: bool,
    pub two_dominating: bool,
    pub restrained_two_dominating: bool,
}

/// Which set-based property [`check_set`] should verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetKind {
    Dominating,
    RestrainedDominating,
    TwoDominating,
    RestrainedTwoDominating,
}

pub fn check_set(g: &Graph, s: &VertexSet, kind: SetKind) -> Result<(), Violation> {
    bound(g, s.universe())?;
    let (need, restrained) = match kind {
        SetKind::Dominating => (1, false),
        SetKind::RestrainedDominating => (1, true),
        SetKind::TwoDominating => (2, false),
        SetKind::RestrainedTwoDominating => (2, true),
    };
    for v in g.vertices().filter(|&v| !s.contains(v)) {
        let inside = g.neighbors(v).iter().filter(|&&w| s.contains(w)).count();
        if inside < need {
            let condition = if need == 1 {
                Condition::Undominated
            } else {
                Condition::NotTwoDominated
            };
            return Err(at(v, condition));
        }
        if restrained && inside == g.degree(v) {
            return Err(at(v, Condition::Unrestrained));
        }
    }
    Ok(())
}

pub fn set_validators(g: &Graph, s: &VertexSet) -> Result<SetReport, Violation> {
    bound(g, s.universe())?;
    let ok = |kind| check_set(g, s, kind).is_ok();
    Ok(SetReport {
        dominating: ok(SetKind::Dominating),
        restrained_dominating: ok(SetKind::RestrainedDominating),
        two_dominating: ok(SetKind::TwoDominating),
        restrained_two_dominating: ok(SetKind::RestrainedTwoDominating),
    })
}

/// Parses a vertex set written one member index per line (`#` comments and
/// blank lines ignored).
pub fn parse_set_text(n: usize, text: &str) -> Result<VertexSet, LabelingError> {
    let mut set = VertexSet::empty(n);
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| LabelingError::Parse {
            line: lineno + 1,
            message,
        };
        let v: usize = line
            .parse()
            .map_err(|_| err(format!("bad vertex `{line}`")))?;
        if v >= n {
            return Err(err(format!("vertex {v} out of range for order {n}")));
        }
        set.insert(v);
    }
    Ok(set)
}

pub fn set_to_text(s: &VertexSet) -> String {
    s.iter().map(|v| format!("{v}\n")).collect()
}
