//! Finite posets and the posets `Ω(X)` of cyclic sub-`M`-sets.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde_json::{json, Value};

use super::mset::RightMSet;
use crate::error::{invalid, Error, Result};

/// A finite poset. `up[a]` holds every `b` with `a <= b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    pub labels: Vec<String>,
    up: Vec<FixedBitSet>,
}

impl Poset {
    /// Reflexive-transitive closure of the given pairs `(a, b)` meaning
    /// `a <= b`; fails if the closure is not antisymmetric.
    pub fn new(labels: Vec<String>, leq_pairs: &[(usize, usize)]) -> Result<Poset> {
        let n = labels.len();
        let mut up: Vec<FixedBitSet> = (0..n)
            .map(|a| {
                let mut s = FixedBitSet::with_capacity(n);
                s.insert(a);
                s
            })
            .collect();
        for &(a, b) in leq_pairs {
            if a >= n || b >= n {
                return invalid(format!("pair ({a}, {b}) out of range"));
            }
            up[a].insert(b);
        }
        for k in 0..n {
            for a in 0..n {
                if up[a].contains(k) {
                    let row = up[k].clone();
                    up[a].union_with(&row);
                }
            }
        }
        for a in 0..n {
            for b in up[a].ones() {
                if a != b && up[b].contains(a) {
                    return invalid(format!("{a} and {b} are mutually below each other"));
                }
            }
        }
        Ok(Poset { labels, up })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// Elements sorted so that `a < b` implies `a` comes first; ties by index.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.size()).collect();
        v.sort_by_key(|&a| ((0..self.size()).filter(|&b| self.lt(b, a)).count(), a));
        v
    }

    /// Whether `f` is order preserving.
    pub fn is_monotone(&self, f: &[usize]) -> bool {
        (0..self.size()).all(|a| self.up[a].ones().all(|b| self.leq(f[a], f[b])))
    }

    pub fn to_json(&self) -> Value {
        let mut pairs = Vec::new();
        for a in 0..self.size() {
            for b in self.up[a].ones() {
                if a != b {
                    pairs.push([a, b]);
                }
            }
        }
        json!({"elements": self.labels, "leq": pairs})
    }

    pub fn from_json(v: &Value) -> Result<Poset> {
        let labels: Vec<String> = serde_json::from_value(v.get("elements").cloned().ok_or_else(|| Error::Invalid("missing \"elements\"".into()))?)?;
        let pairs: Vec<(usize, usize)> = serde_json::from_value(v.get("leq").cloned().unwrap_or(json!([])))?;
        Poset::new(labels, &pairs)
    }
}

/// `Ω(X)`: the cyclic sub-`M`-sets `xM` of a right `M`-set, ordered by
/// inclusion. Elements are listed by increasing size, then by smallest
/// generator, which is a linear extension.
#[derive(Clone, Debug)]
pub struct OmegaPoset {
    pub poset: Poset,
    /// Smallest generator of each element.
    pub generators: Vec<usize>,
    /// The sets `xM`.
    pub sets: Vec<FixedBitSet>,
    /// Poset element `xM` for each `x`.
    pub class_of: Vec<usize>,
}

pub fn omega_poset(x: &RightMSet) -> OmegaPoset {
    let n = x.size();
    let orbit = |a: usize| {
        let mut s = FixedBitSet::with_capacity(n);
        for m in 0..x.monoid_size() {
            s.insert(x.act(a, m));
        }
        s
    };
    let mut seen: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut sets: Vec<FixedBitSet> = Vec::new();
    let mut generators = Vec::new();
    let mut raw_class = Vec::with_capacity(n);
    for a in 0..n {
        let s = orbit(a);
        let id = *seen.entry(s.clone()).or_insert_with(|| {
            sets.push(s);
            generators.push(a);
            sets.len() - 1
        });
        raw_class.push(id);
    }
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by_key(|&i| (sets[i].count_ones(..), generators[i]));
    let mut new_pos = vec![0; sets.len()];
    for (p, &i) in order.iter().enumerate() {
        new_pos[i] = p;
    }
    let sets: Vec<FixedBitSet> = order.iter().map(|&i| sets[i].clone()).collect();
    let generators: Vec<usize> = order.iter().map(|&i| generators[i]).collect();
    let class_of = raw_class.iter().map(|&c| new_pos[c]).collect();
    let mut pairs = Vec::new();
    for a in 0..sets.len() {
        for b in 0..sets.len() {
            if a != b && sets[a].is_subset(&sets[b]) {
                pairs.push((a, b));
            }
        }
    }
    let labels = generators.iter().map(|&g| format!("{}M", x.labels[g])).collect();
    OmegaPoset { poset: Poset::new(labels, &pairs).expect("inclusion is a partial order"), generators, sets, class_of }
}

/// Connected components of the comparability graph, as lists of elements.
pub fn path_components(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.size();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut stack = vec![s];
        comp[s] = id;
        let mut members = Vec::new();
        while let Some(a) = stack.pop() {
            members.push(a);
            for b in 0..n {
                if comp[b] == usize::MAX && (p.leq(a, b) || p.leq(b, a)) {
                    comp[b] = id;
                    stack.push(b);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}
