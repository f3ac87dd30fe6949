//! Table of Frøyshov d-invariants for Brieskorn spheres, with user overrides.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// One override record as read from a JSON file.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DEntry {
    pub p: u64,
    pub q: u64,
    pub r: u64,
    pub d: i64,
}

/// A d-invariant together with where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DLookup {
    pub d: i64,
    pub source: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DTable {
    overrides: BTreeMap<(u64, u64, u64), i64>,
}

pub fn sorted_triple(p: u64, q: u64, r: u64) -> (u64, u64, u64) {
    let mut t = [p, q, r];
    t.sort_unstable();
    (t[0], t[1], t[2])
}

/// Built-in families. Exponents are compared after sorting.
pub fn builtin_d(p: u64, q: u64, r: u64) -> Option<DLookup> {
    let (a, b, c) = sorted_triple(p, q, r);
    let hit = |d: i64, source: &str| {
        Some(DLookup {
            d,
            source: format!("built-in: {source}"),
        })
    };
    if (a, b) == (2, 3) {
        match c % 12 {
            11 => return hit(2, "Σ(2,3,12k−1), d = 2"),
            5 => return hit(2, "Σ(2,3,12k−7), d = 2"),
            _ => {}
        }
    }
    if a % 2 == 1 && a >= 3 && b == 2 * a - 1 && c == 2 * a + 1 {
        return hit(a as i64 - 1, "Σ(p,2p−1,2p+1) for odd p, d = p − 1");
    }
    if c > 1 && (c - 1) % (a * b) == 0 {
        return hit(0, "Σ(p,q,pqn+1), d = 0");
    }
    None
}

impl DTable {
    pub fn builtin() -> Self {
        DTable::default()
    }

    pub fn from_entries(entries: &[DEntry]) -> Result<Self> {
        let mut t = DTable::default();
        for e in entries {
            t.insert(*e)?;
        }
        Ok(t)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let entries: Vec<DEntry> = serde_json::from_str(text)
            .map_err(|e| crate::Error::InvalidInput(format!("d-table: {e}")))?;
        DTable::from_entries(&entries)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            crate::Error::InvalidInput(format!("cannot read d-table {}: {e}", path.display()))
        })?;
        DTable::from_json(&text)
    }

    pub fn insert(&mut self, e: DEntry) -> Result<()> {
        if e.d % 2 != 0 {
            return invalid(format!(
                "d-table entry Σ({},{},{}) has odd d = {}",
                e.p, e.q, e.r, e.d
            ));
        }
        self.overrides.insert(sorted_triple(e.p, e.q, e.r), e.d);
        Ok(())
    }

    /// Overrides take precedence over the built-in families.
    pub fn lookup(&self, p: u64, q: u64, r: u64) -> Option<DLookup> {
        if let Some(&d) = self.overrides.get(&sorted_triple(p, q, r)) {
            return Some(DLookup {
                d,
                source: "user table".into(),
            });
        }
        builtin_d(p, q, r)
    }

    pub fn overrides(&self) -> impl Iterator<Item = DEntry> + '_ {
        self.overrides
            .iter()
            .map(|(&(p, q, r), &d)| DEntry { p, q, r, d })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(p: u64, q: u64, r: u64) -> Option<i64> {
        builtin_d(p, q, r).map(|l| l.d)
    }

    #[test]
    fn builtin_entries() {
        assert_eq!(d(2, 3, 5), Some(2));
        assert_eq!(d(7, 2, 3), Some(0));
        assert_eq!(d(2, 3, 11), Some(2));
        assert_eq!(d(2, 3, 17), Some(2));
        assert_eq!(d(2, 3, 23), Some(2));
        assert_eq!(d(2, 3, 13), Some(0));
        assert_eq!(d(5, 9, 11), Some(4));
        assert_eq!(d(3, 5, 7), Some(2));
        assert_eq!(d(3, 5, 16), Some(0));
        assert_eq!(d(2, 5, 7), None);
    }

    #[test]
    fn overrides_win() {
        let t =
            DTable::from_json(r#"[{"p":7,"q":3,"r":2,"d":4},{"p":2,"q":5,"r":7,"d":0}]"#).unwrap();
        assert_eq!(t.lookup(2, 3, 7).unwrap().d, 4);
        assert_eq!(t.lookup(2, 3, 7).unwrap().source, "user table");
        assert_eq!(t.lookup(5, 7, 2).unwrap().d, 0);
        assert!(DTable::from_json(r#"[{"p":2,"q":3,"r":7,"d":1}]"#).is_err());
        assert!(DTable::from_json("{").is_err());
    }
}
