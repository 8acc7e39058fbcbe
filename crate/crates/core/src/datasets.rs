//! Bundled example networks and dataset resolution.
//!
//! Three small public networks ship inside the crate. A dataset argument is
//! resolved as a file path first, then as a registry name (with or without an
//! `.edges` suffix). When `LINKPRED_DATA_DIR` is set, `<dir>/<name>.edges`
//! takes precedence over the bundled copy.

use std::env;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::{load_edge_list, load_edge_list_file, Graph};

pub const DATA_DIR_ENV: &str = "LINKPRED_DATA_DIR";

#[derive(Debug, Clone, Copy)]
pub struct Dataset {
    pub name: &'static str,
    pub description: &'static str,
    pub edges: &'static str,
}

pub const BUNDLED: [Dataset; 3] = [
    Dataset {
        name: "karate",
        description: "Zachary karate club, 34 nodes, 78 edges",
        edges: include_str!("../data/karate.edges"),
    },
    Dataset {
        name: "dolphins",
        description: "Doubtful Sound dolphin social network, 62 nodes, 159 edges",
        edges: include_str!("../data/dolphins.edges"),
    },
    Dataset {
        name: "football",
        description: "US college football games, 115 nodes, 613 edges",
        edges: include_str!("../data/football.edges"),
    },
];

pub fn bundled(name: &str) -> Option<&'static Dataset> {
    BUNDLED.iter().find(|d| d.name.eq_ignore_ascii_case(name))
}

/// Loads a bundled network by name.
pub fn load_bundled(name: &str) -> Result<Graph> {
    let d = bundled(name).ok_or_else(|| Error::UnknownDataset(name.to_string()))?;
    load_edge_list(d.edges.as_bytes())
}

fn registry_name(arg: &str) -> &str {
    let file = Path::new(arg)
        .file_name()
        .and_then(|f| f.to_str())
        .unwrap_or(arg);
    file.strip_suffix(".edges").unwrap_or(file)
}

/// Short name used in reports: the file stem or the registry name.
pub fn display_name(arg: &str) -> String {
    registry_name(arg).to_string()
}

/// Where a dataset argument resolves to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    File(PathBuf),
    Bundled(&'static str),
}

pub fn resolve(arg: &str) -> Result<Source> {
    let path = Path::new(arg);
    if path.is_file() {
        return Ok(Source::File(path.to_path_buf()));
    }
    let name = registry_name(arg);
    if let Some(dir) = env::var_os(DATA_DIR_ENV) {
        let candidate = Path::new(&dir).join(format!("{name}.edges"));
        if candidate.is_file() {
            return Ok(Source::File(candidate));
        }
    }
    match bundled(name) {
        Some(d) => Ok(Source::Bundled(d.name)),
        None => Err(Error::UnknownDataset(arg.to_string())),
    }
}

/// Loads a dataset given as a path or a registry name.
pub fn load(arg: &str) -> Result<Graph> {
    match resolve(arg)? {
        Source::File(p) => load_edge_list_file(p),
        Source::Bundled(name) => load_bundled(name),
    }
}
