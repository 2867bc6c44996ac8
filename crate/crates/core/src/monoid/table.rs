use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{invalid, Error, Result};

/// Largest supported monoid.
pub const MAX_SIZE: usize = 5000;
/// Tables up to this size get an exhaustive associativity check.
pub const EXHAUSTIVE_ASSOC_LIMIT: usize = 256;

/// A finite monoid given by its Cayley table. The identity is always
/// element 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMonoid {
    size: usize,
    table: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl FiniteMonoid {
    /// Validates a Cayley table and moves the identity to index 0, keeping
    /// the other elements in their given order.
    pub fn from_table(table: &[Vec<usize>], identity: usize, labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return invalid("empty table");
        }
        if n > MAX_SIZE {
            return Err(Error::TooLarge { what: "monoid".into(), size: n as u128, cap: MAX_SIZE as u128 });
        }
        if table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return invalid("table must be square with entries in range");
        }
        if identity >= n || (0..n).any(|a| table[identity][a] != a || table[a][identity] != a) {
            return Err(Error::NoIdentity);
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return invalid("label count differs from table size");
            }
        }
        let order: Vec<usize> = std::iter::once(identity).chain((0..n).filter(|&x| x != identity)).collect();
        let mut pos = vec![0usize; n];
        for (i, &x) in order.iter().enumerate() {
            pos[x] = i;
        }
        let mut flat = vec![0u32; n * n];
        for (i, &a) in order.iter().enumerate() {
            for (j, &b) in order.iter().enumerate() {
                flat[i * n + j] = pos[table[a][b]] as u32;
            }
        }
        let labels = labels.map(|l| order.iter().map(|&x| l[x].clone()).collect());
        let m = FiniteMonoid { size: n, table: flat, labels };
        m.check_associative()?;
        Ok(m)
    }

    /// Trusted constructor for tables produced internally; still verifies.
    pub(crate) fn from_flat(size: usize, table: Vec<u32>, labels: Option<Vec<String>>) -> Result<Self> {
        let m = FiniteMonoid { size, table, labels };
        if (0..size).any(|a| m.mul(0, a) != a || m.mul(a, 0) != a) {
            return Err(Error::NoIdentity);
        }
        m.check_associative()?;
        Ok(m)
    }

    /// Closes a set of generators under a multiplication, breadth first
    /// from the identity, and returns the resulting monoid together with
    /// the element values in index order.
    pub fn generate<T, F>(identity: T, gens: &[T], mul: F, label: impl Fn(&T) -> String) -> Result<(Self, Vec<T>)>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elems = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let y = mul(&elems[i], g);
                if !index.contains_key(&y) {
                    if elems.len() >= MAX_SIZE {
                        return Err(Error::TooLarge { what: "generated monoid".into(), size: MAX_SIZE as u128 + 1, cap: MAX_SIZE as u128 });
                    }
                    index.insert(y.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(y);
                }
            }
        }
        let m = Self::from_elements(&elems, &index, mul, label)?;
        Ok((m, elems))
    }

    /// Builds the table of an explicitly listed, closed set of elements
    /// whose first entry is the identity.
    pub fn from_elements<T, F>(elems: &[T], index: &HashMap<T, usize>, mul: F, label: impl Fn(&T) -> String) -> Result<Self>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let n = elems.len();
        if n > MAX_SIZE {
            return Err(Error::TooLarge { what: "monoid".into(), size: n as u128, cap: MAX_SIZE as u128 });
        }
        let mut table = vec![0u32; n * n];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                let p = mul(a, b);
                let k = *index.get(&p).ok_or_else(|| Error::Invalid("element set is not closed".into()))?;
                table[i * n + j] = k as u32;
            }
        }
        let labels = elems.iter().map(label).collect();
        Self::from_flat(n, table, Some(labels))
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.size;
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(Error::NotAssociative { a, b, c });
            }
            Ok(())
        };
        if n <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(Error::NotAssociative { a, b, c });
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x6d6f6e6f);
            for _ in 0..10 * n * n {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b] as usize
    }

    pub fn mul_all(&self, elems: &[usize]) -> usize {
        elems.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.size).map(|a| (0..self.size).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size).filter(|&a| self.is_idempotent(a)).collect()
    }

    /// Elements with a two-sided inverse.
    pub fn units(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&a| (0..self.size).any(|b| self.mul(a, b) == 0 && self.mul(b, a) == 0))
            .collect()
    }

    pub fn is_group(&self) -> bool {
        self.units().len() == self.size
    }

    pub fn opposite(&self) -> FiniteMonoid {
        let n = self.size;
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.table[b * n + a];
            }
        }
        FiniteMonoid { size: n, table, labels: self.labels.clone() }
    }

    /// `aM` as a bitset.
    pub fn right_ideal(&self, a: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.size);
        for x in 0..self.size {
            s.insert(self.mul(a, x));
        }
        s
    }

    /// `Ma` as a bitset.
    pub fn left_ideal(&self, a: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.size);
        for x in 0..self.size {
            s.insert(self.mul(x, a));
        }
        s
    }

    /// `MaM` as a bitset.
    pub fn two_sided_ideal(&self, a: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.size);
        let left = self.left_ideal(a);
        for b in left.ones() {
            for x in 0..self.size {
                s.insert(self.mul(b, x));
            }
        }
        s
    }

    /// Submonoid generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> FixedBitSet {
        let mut seen = FixedBitSet::with_capacity(self.size);
        seen.insert(0);
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen.contains(y) {
                    seen.insert(y);
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// Greedy generating set: scan elements in index order and keep those
    /// not already generated.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.closure(&gens);
        for a in 1..self.size {
            if !span.contains(a) {
                gens.push(a);
                span = self.closure(&gens);
                if span.count_ones(..) == self.size {
                    break;
                }
            }
        }
        gens
    }

    /// Checks that `map` is a monoid homomorphism into `target`.
    pub fn is_homomorphism(&self, map: &[usize], target: &FiniteMonoid) -> bool {
        map.len() == self.size
            && map.iter().all(|&x| x < target.size)
            && map[0] == 0
            && (0..self.size).all(|a| (0..self.size).all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b])))
    }

    /// Submonoid on a closed subset containing the identity, listed with
    /// the identity first.
    pub fn submonoid(&self, elems: &[usize], identity: usize) -> Result<FiniteMonoid> {
        let mut order = vec![identity];
        order.extend(elems.iter().copied().filter(|&x| x != identity));
        let pos: HashMap<usize, usize> = order.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let k = order.len();
        let mut table = vec![0u32; k * k];
        for (i, &a) in order.iter().enumerate() {
            for (j, &b) in order.iter().enumerate() {
                let p = self.mul(a, b);
                let idx = *pos.get(&p).ok_or_else(|| Error::Invalid("subset is not closed".into()))?;
                table[i * k + j] = idx as u32;
            }
        }
        let labels = order.iter().map(|&x| self.label(x)).collect();
        FiniteMonoid::from_flat(k, table, Some(labels))
    }

    pub fn direct_product(&self, other: &FiniteMonoid) -> FiniteMonoid {
        let (n, m) = (self.size, other.size);
        let k = n * m;
        let mut table = vec![0u32; k * k];
        for a in 0..k {
            for b in 0..k {
                let (a1, a2) = (a % n, a / n);
                let (b1, b2) = (b % n, b / n);
                table[a * k + b] = (self.mul(a1, b1) + n * other.mul(a2, b2)) as u32;
            }
        }
        let labels = (0..k).map(|a| format!("({},{})", self.label(a % n), other.label(a / n))).collect();
        FiniteMonoid { size: k, table, labels: Some(labels) }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "size": self.size,
            "identity": 0,
            "table": self.table_rows(),
        });
        if let Some(l) = &self.labels {
            v["labels"] = json!(l);
        }
        v
    }

    pub fn from_json(v: &Value) -> Result<FiniteMonoid> {
        let table: Vec<Vec<usize>> = serde_json::from_value(v.get("table").cloned().ok_or_else(|| Error::Invalid("missing \"table\"".into()))?)?;
        let identity = v.get("identity").and_then(Value::as_u64).unwrap_or(0) as usize;
        if let Some(s) = v.get("size").and_then(Value::as_u64) {
            if s as usize != table.len() {
                return invalid("\"size\" disagrees with the table");
            }
        }
        let labels: Option<Vec<String>> = match v.get("labels") {
            Some(l) if !l.is_null() => Some(serde_json::from_value(l.clone())?),
            _ => None,
        };
        FiniteMonoid::from_table(&table, identity, labels)
    }
}
