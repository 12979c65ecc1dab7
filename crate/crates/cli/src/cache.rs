//! JSON-lines result cache, one [`ResultRecord`] per line.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Parameters that must match for a cached record to be reused.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub t_range: Option<[u32; 2]>,
    pub node_budget: u64,
    pub summary_only: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub key: String,
    pub solver_version: String,
    pub params: Params,
    /// The emitted document, verbatim.
    pub output: Value,
}

pub fn lookup(path: &Path, key: &str, version: &str, params: &Params) -> std::io::Result<Option<Value>> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e),
    };
    file.lock_shared()?;
    let mut found = None;
    for line in BufReader::new(&file).lines() {
        let line = line?;
        // Unreadable lines (older formats, partial writes) are ignored.
        let Ok(record) = serde_json::from_str::<ResultRecord>(&line) else {
            continue;
        };
        if record.key == key && record.solver_version == version && &record.params == params {
            found = Some(record.output);
        }
    }
    file.unlock()?;
    Ok(found)
}

pub fn store(path: &Path, record: &ResultRecord) -> std::io::Result<()> {
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    file.lock()?;
    let mut line = serde_json::to_string(record).map_err(std::io::Error::other)?;
    line.push('\n');
    file.write_all(line.as_bytes())?;
    file.flush()?;
    file.unlock()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(budget: u64) -> Params {
        Params {
            t_range: None,
            node_budget: budget,
            summary_only: false,
        }
    }

    #[test]
    fn exact_match_only() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        assert_eq!(lookup(&path, "cycle:4", "1", &params(10)).unwrap(), None);
        let record = ResultRecord {
            key: "cycle:4".into(),
            solver_version: "1".into(),
            params: params(10),
            output: serde_json::json!({"b": 1, "a": [1, 2]}),
        };
        store(&path, &record).unwrap();
        std::fs::OpenOptions::new()
            .append(true)
            .open(&path)
            .unwrap()
            .write_all(b"not json\n")
            .unwrap();
        assert_eq!(lookup(&path, "cycle:4", "1", &params(10)).unwrap(), Some(record.output.clone()));
        assert_eq!(lookup(&path, "cycle:4", "2", &params(10)).unwrap(), None);
        assert_eq!(lookup(&path, "cycle:4", "1", &params(11)).unwrap(), None);
        assert_eq!(lookup(&path, "cycle:5", "1", &params(10)).unwrap(), None);
    }
}
