use std::fs;
use std::path::Path;

use super::{CountError, CountResult};

/// One line `p n_points character_sum` of a count cache.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CachedCount {
    pub p: u64,
    pub n_points: i64,
    pub character_sum: i64,
}

impl From<&CountResult> for CachedCount {
    fn from(r: &CountResult) -> Self {
        CachedCount {
            p: r.p,
            n_points: r.n_points,
            character_sum: r.character_sum,
        }
    }
}

fn err(path: &Path, msg: impl Into<String>) -> CountError {
    CountError::Cache {
        path: path.display().to_string(),
        msg: msg.into(),
    }
}

pub fn read_cache(path: &Path) -> Result<Vec<CachedCount>, CountError> {
    let text = fs::read_to_string(path).map_err(|e| err(path, e.to_string()))?;
    let mut out: Vec<CachedCount> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parsed = match fields.as_slice() {
            [p, n, s] => (p.parse(), n.parse(), s.parse()),
            _ => return Err(err(path, format!("line {}: expected 3 fields", i + 1))),
        };
        let (Ok(p), Ok(n_points), Ok(character_sum)) = parsed else {
            return Err(err(path, format!("line {}: not an integer", i + 1)));
        };
        out.push(CachedCount {
            p,
            n_points,
            character_sum,
        });
    }
    out.sort_by_key(|c| c.p);
    Ok(out)
}

/// Write entries sorted by `p`; later duplicates replace earlier ones.
pub fn write_cache(path: &Path, entries: &[CachedCount]) -> Result<(), CountError> {
    let mut sorted: Vec<CachedCount> = Vec::new();
    for e in entries {
        match sorted.iter_mut().find(|s| s.p == e.p) {
            Some(s) => *s = *e,
            None => sorted.push(*e),
        }
    }
    sorted.sort_by_key(|c| c.p);
    let body: String = sorted
        .iter()
        .map(|c| format!("{} {} {}\n", c.p, c.n_points, c.character_sum))
        .collect();
    fs::write(path, body).map_err(|e| err(path, e.to_string()))
}
