use std::fs;
use std::io::{self, Read};

use anyhow::{Context, Result};
use clap::ValueEnum;
use w2_core::format::{parse_edge_lists, parse_graph6, to_edge_list, to_graph6};
use w2_core::{Family, Graph};

/// Invalid user input, reported with exit code 2.
#[derive(Debug)]
pub struct Refused(pub String);

impl std::fmt::Display for Refused {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Refused {}

pub fn refuse(e: impl std::fmt::Display) -> anyhow::Error {
    anyhow::Error::new(Refused(e.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
}

/// One input record: its 1-based line number and either a graph or a parse error.
pub struct Record {
    pub line: usize,
    pub graph: Result<Graph, String>,
}

pub fn read_source(path: Option<&str>) -> Result<String> {
    match path {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading stdin")?;
            Ok(s)
        }
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {p}")),
    }
}

pub fn records(text: &str, format: Format) -> Vec<Record> {
    match format {
        Format::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| Record {
                line: i + 1,
                graph: parse_graph6(l.trim()).map_err(|e| e.to_string()),
            })
            .collect(),
        // Edge-list blocks span several lines; a malformed block stops parsing.
        Format::Edgelist => match parse_edge_lists(text) {
            Ok(gs) => gs
                .into_iter()
                .enumerate()
                .map(|(i, g)| Record {
                    line: i + 1,
                    graph: Ok(g),
                })
                .collect(),
            Err(e) => vec![Record {
                line: 0,
                graph: Err(e.to_string()),
            }],
        },
    }
}

/// A graph named on the command line: a gallery name (`q12`, `cycle:7`,
/// `cycle-complement:8`) or a graph6 string.
pub fn graph_argument(arg: &str) -> Result<Graph> {
    let (name, param) = match arg.split_once(':') {
        Some((name, p)) => (name, Some(p.parse::<usize>().map_err(|e| refuse(format!("bad parameter in {arg:?}: {e}")))?)),
        None => (arg, None),
    };
    if let Ok(family) = name.parse::<Family>() {
        return family.build(param).map_err(refuse);
    }
    parse_graph6(arg).map_err(|e| refuse(format!("{arg:?} is neither a gallery name nor valid graph6: {e}")))
}

pub fn render(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => to_graph6(g),
        Format::Edgelist => to_edge_list(g).trim_end().to_string(),
    }
}
