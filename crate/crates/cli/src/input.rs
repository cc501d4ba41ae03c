use std::fs;
use std::io::{self, Read};

use rdrd::graph::parse_graph6;
use rdrd::Graph;

use crate::Failure;

/// One parsed input graph together with its graph6 text.
pub struct Input {
    pub graph6: String,
    pub graph: Graph,
}

fn parse_lines(text: &str, origin: &str) -> Result<Vec<Input>, Failure> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(
            parse_one(line).map_err(|e| Failure::Usage(format!("{origin} line {}: {e}", i + 1)))?,
        );
    }
    if out.is_empty() {
        return Err(Failure::Usage(format!("{origin}: no graphs")));
    }
    Ok(out)
}

fn parse_one(text: &str) -> Result<Input, String> {
    let graph = parse_graph6(text.as_bytes()).map_err(|e| e.to_string())?;
    Ok(Input {
        graph6: text.to_string(),
        graph,
    })
}

/// Reads the graphs named on the command line: a graph6 string, `-` for
/// standard input, or `--file`. Returns the graphs and whether this is a
/// batch (several graphs possible).
pub fn read_graphs(
    positional: Option<&str>,
    file: Option<&str>,
) -> Result<(Vec<Input>, bool), Failure> {
    match (positional, file) {
        (Some(_), Some(_)) => Err(Failure::Usage(
            "give either a graph or --file, not both".into(),
        )),
        (None, None) => Err(Failure::Usage(
            "no graph given (graph6 string, `-`, or --file)".into(),
        )),
        (None, Some(path)) => {
            let text =
                fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
            Ok((parse_lines(&text, path)?, true))
        }
        (Some("-"), None) => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
            Ok((parse_lines(&text, "stdin")?, true))
        }
        (Some(g), None) => Ok((vec![parse_one(g).map_err(Failure::Usage)?], false)),
    }
}

pub fn read_single(positional: &str) -> Result<Input, Failure> {
    parse_one(positional.trim()).map_err(Failure::Usage)
}
