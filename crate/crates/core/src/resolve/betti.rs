use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Graded Betti numbers `β_{i,j}` with `j` the absolute twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    nvars: usize,
    modulus: u32,
    grade: i64,
    entries: BTreeMap<(usize, i64), u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: i64,
    pub beta: u64,
}

#[derive(Serialize, Deserialize)]
struct BettiJson {
    nvars: usize,
    modulus: u32,
    betti: Vec<BettiEntry>,
    total: Vec<u64>,
    cm_type: u64,
    deviation: i64,
    max_socle_shift: i64,
}

impl BettiTable {
    pub fn new(nvars: usize, modulus: u32, grade: i64) -> Self {
        BettiTable { nvars, modulus, grade, entries: BTreeMap::new() }
    }

    /// Table of `R/I` from the twists of `F_1, F_2, …` (`β_{0,0} = 1` is implied).
    pub fn from_shifts(nvars: usize, modulus: u32, grade: i64, shifts: &[Vec<i64>]) -> Self {
        let mut t = Self::new(nvars, modulus, grade);
        t.add(0, 0, 1);
        for (k, s) in shifts.iter().enumerate() {
            for &j in s {
                t.add(k + 1, j, 1);
            }
        }
        t
    }

    pub fn add(&mut self, i: usize, j: i64, n: u64) {
        if n == 0 {
            return;
        }
        *self.entries.entry((i, j)).or_insert(0) += n;
    }

    pub fn set(&mut self, i: usize, j: i64, n: u64) {
        if n == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), n);
        }
    }

    pub fn get(&self, i: usize, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, i64), u64> {
        &self.entries
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn grade(&self) -> i64 {
        self.grade
    }

    /// Projective dimension: the last nonzero column.
    pub fn length(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// Twists of `F_i`, with multiplicity, ascending.
    pub fn shifts(&self, i: usize) -> Vec<i64> {
        let mut out = Vec::new();
        for (&(a, j), &b) in &self.entries {
            if a == i {
                out.extend(std::iter::repeat(j).take(b as usize));
            }
        }
        out
    }

    pub fn total(&self) -> Vec<u64> {
        let mut t = vec![0u64; self.length() + 1];
        for (&(i, _), &b) in &self.entries {
            t[i] += b;
        }
        t
    }

    /// `β_1 - grade`.
    pub fn deviation(&self) -> i64 {
        self.total().get(1).copied().unwrap_or(0) as i64 - self.grade
    }

    /// Last total Betti number.
    pub fn cm_type(&self) -> u64 {
        *self.total().last().unwrap_or(&0)
    }

    /// Largest twist in the last step.
    pub fn max_socle_shift(&self) -> i64 {
        let n = self.length();
        self.entries.keys().filter(|k| k.0 == n).map(|k| k.1).max().unwrap_or(0)
    }

    /// `Σ (-1)^i β_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.total()
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// Only the `(i, j) → β` map is compared.
    pub fn same_entries(&self, other: &BettiTable) -> bool {
        self.entries == other.entries
    }

    /// Entries that differ, as `(i, j, self, other)`.
    pub fn diff(&self, other: &BettiTable) -> Vec<(usize, i64, u64, u64)> {
        let mut keys: Vec<(usize, i64)> = self.entries.keys().chain(other.entries.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter(|&(i, j)| self.get(i, j) != other.get(i, j))
            .map(|(i, j)| (i, j, self.get(i, j), other.get(i, j)))
            .collect()
    }

    /// Restriction to `j <= j_max`.
    pub fn truncated(&self, j_max: i64) -> BettiTable {
        let mut t = self.clone();
        t.entries.retain(|k, _| k.1 <= j_max);
        t
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let betti = self
            .entries
            .iter()
            .filter(|(k, _)| k.0 > 0)
            .map(|(&(i, j), &beta)| BettiEntry { i, j, beta })
            .collect();
        serde_json::to_value(BettiJson {
            nvars: self.nvars,
            modulus: self.modulus,
            betti,
            total: self.total(),
            cm_type: self.cm_type(),
            deviation: self.deviation(),
            max_socle_shift: self.max_socle_shift(),
        })
        .expect("serializable")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<BettiTable, serde_json::Error> {
        let j: BettiJson = serde_json::from_value(v.clone())?;
        let mut t = BettiTable::new(j.nvars, j.modulus, 0);
        t.add(0, 0, 1);
        for e in j.betti {
            t.add(e.i, e.j, e.beta);
        }
        let b1 = t.total().get(1).copied().unwrap_or(0) as i64;
        t.grade = b1 - j.deviation;
        Ok(t)
    }

    pub fn from_json(s: &str) -> Result<BettiTable, serde_json::Error> {
        Self::from_json_value(&serde_json::from_str(s)?)
    }
}

/// Betti diagram: column `i`, row `j - i`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self.length();
        let rows: Vec<i64> = self.entries.keys().map(|&(i, j)| j - i as i64).collect();
        let (lo, hi) = (
            rows.iter().copied().min().unwrap_or(0),
            rows.iter().copied().max().unwrap_or(0),
        );
        let total = self.total();
        let cell = |v: u64| if v == 0 { ".".to_string() } else { v.to_string() };
        let mut widths = vec![1usize; len + 1];
        for (i, w) in widths.iter_mut().enumerate() {
            *w = (*w).max(i.to_string().len()).max(total[i].to_string().len());
            for r in lo..=hi {
                *w = (*w).max(cell(self.get(i, r + i as i64)).len());
            }
        }
        let label = (hi.to_string().len() + 1).max("total:".len());
        write!(f, "{:>label$}", "")?;
        for (i, w) in widths.iter().enumerate() {
            write!(f, " {i:>w$}")?;
        }
        writeln!(f)?;
        write!(f, "{:>label$}", "total:")?;
        for (i, w) in widths.iter().enumerate() {
            write!(f, " {:>w$}", total[i])?;
        }
        writeln!(f)?;
        for r in lo..=hi {
            write!(f, "{:>label$}", format!("{r}:"))?;
            for (i, w) in widths.iter().enumerate() {
                write!(f, " {:>w$}", cell(self.get(i, r + i as i64)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_field_diagram() {
        let t = BettiTable::from_shifts(3, 32003, 3, &[vec![1, 1, 1], vec![2, 2, 2], vec![3]]);
        let s = t.to_string();
        assert_eq!(s.lines().count(), 3);
        assert!(s.contains("total: 1 3 3 1"));
        assert_eq!(t.euler_characteristic(), 0);
    }

    #[test]
    fn json_round_trip() {
        let t = BettiTable::from_shifts(
            3,
            32003,
            3,
            &[vec![2, 2, 4, 7, 12], vec![3, 5, 8, 11, 13, 13], vec![12, 14]],
        );
        let v = t.to_json_value();
        assert_eq!(v["total"], serde_json::json!([1, 5, 6, 2]));
        assert_eq!(v["cm_type"], 2);
        assert_eq!(v["deviation"], 2);
        assert_eq!(v["max_socle_shift"], 14);
        assert_eq!(v["betti"][0], serde_json::json!({"i": 1, "j": 2, "beta": 2}));
        assert_eq!(BettiTable::from_json(&t.to_json()).unwrap(), t);
    }
}
