use std::path::Path;

use edgemu::families::FamilySpec;
use edgemu::{parse_edge_list, parse_graph6, Graph};

use crate::CliError;

/// A graph together with the literal input it came from.
pub struct Loaded {
    /// Cache key: the graph6 string, the family spec, or `edges:` followed
    /// by the file contents.
    pub key: String,
    /// Short name used in reports.
    pub subject: String,
    pub graph: Graph,
    pub labels: Option<Vec<u64>>,
    pub family: Option<FamilySpec>,
}

pub fn from_graph6(text: &str) -> Result<Loaded, CliError> {
    let graph = parse_graph6(text).map_err(|e| CliError::Input(format!("graph6 `{text}`: {e}")))?;
    Ok(Loaded {
        key: text.to_string(),
        subject: text.to_string(),
        graph,
        labels: None,
        family: None,
    })
}

pub fn from_edges(path: &Path) -> Result<Loaded, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let parsed = parse_edge_list(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(Loaded {
        key: format!("edges:{text}"),
        subject: path.display().to_string(),
        graph: parsed.graph,
        labels: Some(parsed.labels),
        family: None,
    })
}

pub fn from_family(spec: &str) -> Result<Loaded, CliError> {
    let parsed: FamilySpec = spec
        .parse()
        .map_err(|e| CliError::Input(format!("family `{spec}`: {e}")))?;
    Ok(Loaded {
        key: spec.to_string(),
        subject: parsed.to_string(),
        graph: parsed.generate(),
        labels: None,
        family: Some(parsed),
    })
}

pub fn family_range(spec: &str) -> Result<Vec<Loaded>, CliError> {
    let specs = FamilySpec::parse_range(spec).map_err(|e| CliError::Input(format!("family `{spec}`: {e}")))?;
    Ok(specs
        .into_iter()
        .map(|parsed| Loaded {
            key: parsed.to_string(),
            subject: parsed.to_string(),
            graph: parsed.generate(),
            labels: None,
            family: Some(parsed),
        })
        .collect())
}

pub fn load(graph6: Option<&str>, edges: Option<&Path>, family: Option<&str>) -> Result<Loaded, CliError> {
    match (graph6, edges, family) {
        (Some(s), None, None) => from_graph6(s),
        (None, Some(p), None) => from_edges(p),
        (None, None, Some(f)) => from_family(f),
        _ => Err(CliError::Input(
            "give exactly one of --graph6, --edges, --family".into(),
        )),
    }
}

/// Parses `A..B` (or `A..=B`) as an inclusive range.
pub fn t_range(text: &str) -> Result<std::ops::RangeInclusive<u32>, CliError> {
    let bad = || CliError::Input(format!("`{text}` is not a range A..B"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let a: u32 = a.trim().parse().map_err(|_| bad())?;
    let b: u32 = b.trim_start_matches('=').trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}
