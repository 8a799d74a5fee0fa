use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use super::ModformsError;

/// Hecke eigenvalues `a_p` of a newform, keyed by prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    pub label: String,
    pub weight: u32,
    pub level: u64,
    pub coeffs: BTreeMap<u64, i64>,
}

impl CoefficientTable {
    pub fn new(label: impl Into<String>, weight: u32, level: u64) -> Self {
        CoefficientTable {
            label: label.into(),
            weight,
            level,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn get(&self, p: u64) -> Option<i64> {
        self.coeffs.get(&p).copied()
    }

    /// The file format read by [`parse_table`].
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.label, self.weight, self.level);
        for (p, a) in &self.coeffs {
            s.push_str(&format!("{p} {a}\n"));
        }
        s
    }
}

/// `a^2 <= 4 p^(w-1)`, in exact integers.
pub fn weil_bound_ok(a: i64, p: u64, weight: u32) -> bool {
    let lhs = (a as i128) * (a as i128);
    let rhs = 4 * (p as i128).pow(weight.saturating_sub(1));
    lhs <= rhs
}

fn parse_err(line: usize, msg: impl Into<String>) -> ModformsError {
    ModformsError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Header `LABEL WEIGHT LEVEL`, then `p a_p` lines with `p` increasing.
/// Blank lines and `#` comments are ignored.
pub fn parse_table(text: &str) -> Result<CoefficientTable, ModformsError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let h: Vec<&str> = header.split_whitespace().collect();
    let [label, weight, level] = h.as_slice() else {
        return Err(parse_err(hl, "header must be LABEL WEIGHT LEVEL"));
    };
    let weight: u32 = weight.parse().map_err(|_| parse_err(hl, "weight is not an integer"))?;
    let level: u64 = level.parse().map_err(|_| parse_err(hl, "level is not an integer"))?;
    if weight < 2 || level == 0 {
        return Err(parse_err(hl, "weight must be at least 2 and level positive"));
    }
    let mut table = CoefficientTable::new(*label, weight, level);
    let mut last = 0;
    for (ln, line) in lines {
        let f: Vec<&str> = line.split_whitespace().collect();
        let [p, a] = f.as_slice() else {
            return Err(parse_err(ln, "expected `p a_p`"));
        };
        let p: u64 = p.parse().map_err(|_| parse_err(ln, "prime is not an integer"))?;
        let a: i64 = a.parse().map_err(|_| parse_err(ln, "coefficient is not an integer"))?;
        if p <= last {
            return Err(parse_err(ln, "primes must be strictly increasing"));
        }
        last = p;
        if level % p != 0 && !weil_bound_ok(a, p, weight) {
            return Err(ModformsError::BoundViolation { p, a_p: a, weight });
        }
        table.coeffs.insert(p, a);
    }
    Ok(table)
}

pub fn load_table(path: &Path) -> Result<CoefficientTable, ModformsError> {
    let text = fs::read_to_string(path).map_err(|e| ModformsError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    parse_table(&text)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeilReport {
    pub checked: usize,
    /// Primes whose coefficient exceeds the bound.
    pub violations: Vec<u64>,
}

impl WeilReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Re-check the bound for every prime not dividing the level.
pub fn weil_check(table: &CoefficientTable) -> WeilReport {
    let mut checked = 0;
    let mut violations = Vec::new();
    for (&p, &a) in &table.coeffs {
        if table.level % p == 0 {
            continue;
        }
        checked += 1;
        if !weil_bound_ok(a, p, table.weight) {
            violations.push(p);
        }
    }
    WeilReport {
        checked,
        violations,
    }
}
