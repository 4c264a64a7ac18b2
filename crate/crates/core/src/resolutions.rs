//! Closed-form bigraded Betti tables of arrangement ideals.
//!
//! Homological degree `i` indexes the resolution of the ideal `I` itself:
//! `i = 0` counts minimal generators and `i = 1` their syzygies. The
//! resolution of `R/I` would shift every index up by one.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::staircase::{Arrangement, Bidegree};

/// Sparse table `(i, δ) -> β_{i,δ}`; zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Bidegree), usize>,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    i: usize,
    a: usize,
    b: usize,
    mult: usize,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: usize, deg: Bidegree, mult: usize) {
        if mult > 0 {
            *self.entries.entry((i, deg)).or_default() += mult;
        }
    }

    pub fn get(&self, i: usize, deg: Bidegree) -> usize {
        self.entries.get(&(i, deg)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, Bidegree, usize)> + '_ {
        self.entries.iter().map(|(&(i, d), &m)| (i, d, m))
    }

    /// Bidegrees carrying homological degree `i`, with multiplicity.
    pub fn degree(&self, i: usize) -> BTreeMap<Bidegree, usize> {
        self.entries().filter(|e| e.0 == i).map(|(_, d, m)| (d, m)).collect()
    }

    /// `Σ_δ β_{i,δ}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries().filter(|e| e.0 == i).map(|e| e.2).sum()
    }

    pub fn max_homological_degree(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    pub fn shifted(&self, by: Bidegree) -> Self {
        let entries = self.entries.iter().map(|(&(i, d), &m)| ((i, d + by), m)).collect();
        Self { entries }
    }

    /// Moves every entry up by `k` homological degrees.
    fn raised(&self, k: usize) -> Self {
        let entries = self.entries.iter().map(|(&(i, d), &m)| ((i + k, d), m)).collect();
        Self { entries }
    }

    fn merged(mut self, other: &Self) -> Self {
        for (i, d, m) in other.entries() {
            self.add(i, d, m);
        }
        self
    }

    /// Two-row rendering, one row per homological degree.
    pub fn render(&self) -> String {
        let top = self.max_homological_degree().unwrap_or(0).max(1);
        let mut out = String::new();
        for i in 0..=top {
            out.push_str(&format!("beta_{i}:"));
            let row = self.degree(i);
            if row.is_empty() {
                out.push_str(" -");
            }
            for (d, m) in row {
                if m == 1 {
                    out.push_str(&format!(" {d}"));
                } else {
                    out.push_str(&format!(" {d}^{m}"));
                }
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let list: Vec<Entry> = self.entries().map(|(i, d, mult)| Entry { i, a: d.a, b: d.b, mult }).collect();
        list.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let list = Vec::<Entry>::deserialize(d)?;
        let mut t = BettiTable::new();
        for e in list {
            t.add(e.i, Bidegree::new(e.a, e.b), e.mult);
        }
        Ok(t)
    }
}

/// Generator and syzygy bidegrees of the ACM point set with row counts
/// `alpha`:
///
/// `C = {(h,0), (0,α_1)} ∪ {(i-1, α_i) : α_i < α_{i-1}}`
/// `V = {(h,α_h)} ∪ {(i-1, α_{i-1}) : α_i < α_{i-1}}`
pub fn cx_vx(alpha: &Partition) -> Result<(BTreeSet<Bidegree>, BTreeSet<Bidegree>)> {
    if alpha.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let h = alpha.len();
    let mut c = BTreeSet::from([Bidegree::new(h, 0), Bidegree::new(0, alpha.largest())]);
    let mut v = BTreeSet::from([Bidegree::new(h, alpha.part(h))]);
    for i in 2..=h {
        if alpha.part(i) < alpha.part(i - 1) {
            c.insert(Bidegree::new(i - 1, alpha.part(i)));
            v.insert(Bidegree::new(i - 1, alpha.part(i - 1)));
        }
    }
    Ok((c, v))
}

pub fn betti_table(w: &Arrangement) -> BettiTable {
    let mut t = BettiTable::new();
    let shift = w.line_degree();
    match cx_vx(w.alpha()) {
        Err(_) => t.add(0, shift, 1),
        Ok((c, v)) => {
            for d in c {
                t.add(0, d + shift, 1);
            }
            for d in v {
                t.add(1, d + shift, 1);
            }
        }
    }
    t
}

/// `(β_0, β_1)`.
pub fn total_betti(t: &BettiTable) -> (usize, usize) {
    (t.total(0), t.total(1))
}

/// `β_{i,δ}(J) + β_{i,δ}(K) + β_{i-1,δ}(J∩K)` for every `(i, δ)`.
pub fn betti_splitting_sum(j: &BettiTable, k: &BettiTable, jk: &BettiTable) -> BettiTable {
    j.clone().merged(k).merged(&jk.raised(1))
}

pub fn check_betti_splitting_numeric(i: &BettiTable, j: &BettiTable, k: &BettiTable, jk: &BettiTable) -> bool {
    *i == betti_splitting_sum(j, k, jk)
}
