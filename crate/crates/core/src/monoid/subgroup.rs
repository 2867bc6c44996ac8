//! Maximal subgroups, the sets `R_e`, `R(e)`, `L_e`, `L(e)` and their
//! free `G_e`-orbit coordinates.

use std::collections::HashMap;

use serde_json::{json, Value};

use super::table::FiniteMonoid;
use crate::error::{invalid, Error, Result};

/// A finite group. The identity is index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    size: usize,
    table: Vec<u32>,
    inverse: Vec<usize>,
    /// Monoid element for each group index, when the group sits inside a monoid.
    pub embedding: Option<Vec<usize>>,
    labels: Vec<String>,
}

impl GroupTable {
    pub fn from_monoid(m: &FiniteMonoid) -> Result<GroupTable> {
        let n = m.size();
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| m.mul(a, b) == 0 && m.mul(b, a) == 0) {
                Some(b) => inverse[a] = b,
                None => return invalid(format!("element {a} has no inverse")),
            }
        }
        let table = (0..n * n).map(|k| m.mul(k / n, k % n) as u32).collect();
        Ok(GroupTable { size: n, table, inverse, embedding: None, labels: (0..n).map(|a| m.label(a)).collect() })
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    /// Group index of a monoid element, for embedded groups.
    pub fn index_of(&self, elem: usize) -> Option<usize> {
        self.embedding.as_ref()?.iter().position(|&x| x == elem)
    }

    pub fn to_monoid(&self) -> FiniteMonoid {
        FiniteMonoid::from_flat(self.size, self.table.clone(), Some(self.labels.clone())).expect("group tables are monoids")
    }

    pub fn generators(&self) -> Vec<usize> {
        self.to_monoid().generators()
    }

    /// Subgroup generated by `gens`, as a sorted list of indices.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = self.to_monoid().closure(gens).ones().collect();
        v.sort_unstable();
        v
    }

    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut current = self.subgroup_generated(gens);
        loop {
            let mut conj: Vec<usize> = Vec::new();
            for &x in &current {
                for g in 0..self.size {
                    conj.push(self.mul(self.mul(g, x), self.inv(g)));
                }
            }
            let next = self.subgroup_generated(&conj);
            if next == current {
                return current;
            }
            current = next;
        }
    }

    /// Quotient by a normal subgroup. Returns the quotient and the map
    /// from elements to cosets; cosets are ordered by smallest member.
    pub fn quotient(&self, normal: &[usize]) -> (GroupTable, Vec<usize>) {
        let mut coset = vec![usize::MAX; self.size];
        let mut reps = Vec::new();
        for g in 0..self.size {
            if coset[g] == usize::MAX {
                for &h in normal {
                    coset[self.mul(g, h)] = reps.len();
                }
                reps.push(g);
            }
        }
        let k = reps.len();
        let table = (0..k * k).map(|x| coset[self.mul(reps[x / k], reps[x % k])] as u32).collect();
        let inverse = (0..k).map(|c| coset[self.inv(reps[c])]).collect();
        let labels = reps.iter().map(|&r| format!("{}N", self.labels[r])).collect();
        (GroupTable { size: k, table, inverse, embedding: None, labels }, coset)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "size": self.size,
            "table": (0..self.size).map(|a| (0..self.size).map(|b| self.mul(a, b)).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "embedding": self.embedding,
            "labels": self.labels,
        })
    }
}

/// The maximal subgroup `G_e` (the unit group of `eMe`), with `e` first
/// and the rest in monoid index order.
pub fn maximal_subgroup(m: &FiniteMonoid, e: usize) -> GroupTable {
    assert!(m.is_idempotent(e), "maximal_subgroup needs an idempotent");
    let n = m.size();
    let mut corner: Vec<usize> = (0..n).map(|x| m.mul(m.mul(e, x), e)).collect();
    corner.sort_unstable();
    corner.dedup();
    let mut units: Vec<usize> = corner
        .iter()
        .copied()
        .filter(|&g| corner.iter().any(|&h| m.mul(g, h) == e && m.mul(h, g) == e))
        .collect();
    units.sort_by_key(|&g| (g != e, g));
    let pos: HashMap<usize, usize> = units.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    let k = units.len();
    let table = (0..k * k).map(|x| pos[&m.mul(units[x / k], units[x % k])] as u32).collect();
    let inverse = units.iter().map(|&g| pos[units.iter().find(|&&h| m.mul(g, h) == e).unwrap()]).collect();
    let labels = units.iter().map(|&g| m.label(g)).collect();
    GroupTable { size: k, table, inverse, embedding: Some(units), labels }
}

/// The local monoid `eMe` with identity `e`.
pub fn local_monoid(m: &FiniteMonoid, e: usize) -> Result<(FiniteMonoid, Vec<usize>)> {
    if !m.is_idempotent(e) {
        return invalid("local monoid needs an idempotent");
    }
    let mut corner: Vec<usize> = (0..m.size()).map(|x| m.mul(m.mul(e, x), e)).collect();
    corner.sort_unstable();
    corner.dedup();
    let sub = m.submonoid(&corner, e)?;
    let mut order = vec![e];
    order.extend(corner.iter().copied().filter(|&x| x != e));
    Ok((sub, order))
}

/// `R_e`, `R(e)`, `L_e`, `L(e)` for an idempotent together with `G_e`-orbit
/// coordinates: every `r ∈ R_e` is uniquely `g·t` with `t` an orbit
/// representative, and every `l ∈ L_e` is uniquely `t·g`.
#[derive(Clone, Debug)]
pub struct IdealData {
    pub e: usize,
    pub group: GroupTable,
    pub r_e: Vec<usize>,
    pub r_bad: Vec<usize>,
    pub l_e: Vec<usize>,
    pub l_bad: Vec<usize>,
    pub r_reps: Vec<usize>,
    pub l_reps: Vec<usize>,
    r_coord: HashMap<usize, (usize, usize)>,
    l_coord: HashMap<usize, (usize, usize)>,
}

impl IdealData {
    /// `(group index, representative index)` for an element of `R_e`.
    pub fn r_coord(&self, r: usize) -> Option<(usize, usize)> {
        self.r_coord.get(&r).copied()
    }

    /// `(group index, representative index)` for an element of `L_e`.
    pub fn l_coord(&self, l: usize) -> Option<(usize, usize)> {
        self.l_coord.get(&l).copied()
    }
}

pub fn ideal_data(m: &FiniteMonoid, e: usize) -> IdealData {
    let group = maximal_subgroup(m, e);
    let gm = m.right_ideal(e);
    let mg = m.left_ideal(e);
    let n = m.size();
    let r_e: Vec<usize> = gm.ones().filter(|&x| m.right_ideal(x) == gm).collect();
    let r_bad: Vec<usize> = gm.ones().filter(|&x| m.right_ideal(x) != gm).collect();
    let l_e: Vec<usize> = mg.ones().filter(|&x| m.left_ideal(x) == mg).collect();
    let l_bad: Vec<usize> = mg.ones().filter(|&x| m.left_ideal(x) != mg).collect();
    let emb = group.embedding.clone().unwrap();
    let mut r_coord = HashMap::new();
    let mut r_reps = Vec::new();
    for &r in &r_e {
        if r_coord.contains_key(&r) {
            continue;
        }
        let t = r_reps.len();
        r_reps.push(r);
        for (gi, &g) in emb.iter().enumerate() {
            r_coord.insert(m.mul(g, r), (gi, t));
        }
    }
    let mut l_coord = HashMap::new();
    let mut l_reps = Vec::new();
    for &l in &l_e {
        if l_coord.contains_key(&l) {
            continue;
        }
        let t = l_reps.len();
        l_reps.push(l);
        for (gi, &g) in emb.iter().enumerate() {
            l_coord.insert(m.mul(l, g), (gi, t));
        }
    }
    debug_assert!(r_coord.len() == r_e.len() && l_coord.len() == l_e.len() && n > 0);
    IdealData { e, group, r_e, r_bad, l_e, l_bad, r_reps, l_reps, r_coord, l_coord }
}

/// Checks the group axioms for a table given as rows with identity 0.
pub fn group_from_table(table: &[Vec<usize>]) -> Result<GroupTable> {
    let m = FiniteMonoid::from_table(table, 0, None)?;
    GroupTable::from_monoid(&m).map_err(|_| Error::Invalid("table is not a group".into()))
}
