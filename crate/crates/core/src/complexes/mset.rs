//! Finite right and left `M`-sets.

use std::collections::HashMap;

use crate::error::{invalid, Result};
use crate::monoid::FiniteMonoid;

/// A right `M`-set stored as an action table `x·m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightMSet {
    size: usize,
    monoid_size: usize,
    act: Vec<u32>,
    pub labels: Vec<String>,
}

impl RightMSet {
    /// `act[x][m] = x·m`; checks the action axioms.
    pub fn new(m: &FiniteMonoid, act: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let size = act.len();
        let n = m.size();
        if act.iter().any(|r| r.len() != n || r.iter().any(|&y| y >= size)) {
            return invalid("right action table has the wrong shape");
        }
        let s = RightMSet {
            size,
            monoid_size: n,
            act: act.iter().flatten().map(|&y| y as u32).collect(),
            labels: labels.unwrap_or_else(|| (0..size).map(|x| x.to_string()).collect()),
        };
        for x in 0..size {
            if s.act(x, 0) != x {
                return invalid(format!("identity moves {x}"));
            }
            for a in 0..n {
                for b in 0..n {
                    if s.act(s.act(x, a), b) != s.act(x, m.mul(a, b)) {
                        return invalid(format!("(x·{a})·{b} != x·({a}{b}) at x = {x}"));
                    }
                }
            }
        }
        Ok(s)
    }

    /// A right ideal of `M` (any subset closed under right multiplication),
    /// elements listed in increasing order.
    pub fn from_right_ideal(m: &FiniteMonoid, subset: &[usize]) -> Result<Self> {
        let mut elems = subset.to_vec();
        elems.sort_unstable();
        elems.dedup();
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut act = Vec::with_capacity(elems.len());
        for &x in &elems {
            let mut row = Vec::with_capacity(m.size());
            for a in 0..m.size() {
                match pos.get(&m.mul(x, a)) {
                    Some(&y) => row.push(y),
                    None => return invalid(format!("subset is not a right ideal: {x}·{a} escapes")),
                }
            }
            act.push(row);
        }
        let labels = elems.iter().map(|&x| m.label(x)).collect();
        Ok(RightMSet { size: elems.len(), monoid_size: m.size(), act: act.iter().flatten().map(|&y| y as u32).collect(), labels })
    }

    /// `M` acting on itself by right multiplication.
    pub fn universe(m: &FiniteMonoid) -> Self {
        Self::from_right_ideal(m, &(0..m.size()).collect::<Vec<_>>()).unwrap()
    }

    /// `N` as a right `M`-set through a homomorphism `φ`: `y·m = y φ(m)`.
    pub fn through_hom(m: &FiniteMonoid, n: &FiniteMonoid, phi: &[usize]) -> Self {
        let act: Vec<Vec<usize>> = (0..n.size()).map(|y| (0..m.size()).map(|a| n.mul(y, phi[a])).collect()).collect();
        RightMSet::new(m, act, Some((0..n.size()).map(|y| n.label(y)).collect())).expect("homomorphisms induce actions")
    }

    /// Quotient of `M` by the left action of a group of units `G`: the
    /// orbits `Gx` with `(Gx)·m = G(xm)`. Returns the quotient and the orbit
    /// of each element.
    pub fn left_orbit_quotient(m: &FiniteMonoid, units: &[usize]) -> (Self, Vec<usize>) {
        let n = m.size();
        let mut orbit = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if orbit[x] == usize::MAX {
                for &g in units {
                    orbit[m.mul(g, x)] = reps.len();
                }
                reps.push(x);
            }
        }
        let act: Vec<Vec<usize>> = reps.iter().map(|&x| (0..n).map(|a| orbit[m.mul(x, a)]).collect()).collect();
        let labels = reps.iter().map(|&x| format!("G{}", m.label(x))).collect();
        (RightMSet::new(m, act, Some(labels)).expect("orbit quotients are M-sets"), orbit)
    }

    pub fn single_point(m: &FiniteMonoid) -> Self {
        RightMSet::new(m, vec![vec![0; m.size()]], Some(vec!["*".into()])).unwrap()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn monoid_size(&self) -> usize {
        self.monoid_size
    }

    #[inline]
    pub fn act(&self, x: usize, m: usize) -> usize {
        self.act[x * self.monoid_size + m] as usize
    }

    /// Whether `subset` is closed under the action.
    pub fn is_invariant(&self, subset: &[bool]) -> bool {
        (0..self.size).all(|x| !subset[x] || (0..self.monoid_size).all(|a| subset[self.act(x, a)]))
    }
}

/// A left `M`-set stored as an action table `m·y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftMSet {
    size: usize,
    monoid_size: usize,
    act: Vec<u32>,
    pub labels: Vec<String>,
}

impl LeftMSet {
    /// `act[y][m] = m·y`; checks the action axioms.
    pub fn new(m: &FiniteMonoid, act: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let size = act.len();
        let n = m.size();
        if act.iter().any(|r| r.len() != n || r.iter().any(|&y| y >= size)) {
            return invalid("left action table has the wrong shape");
        }
        let s = LeftMSet {
            size,
            monoid_size: n,
            act: act.iter().flatten().map(|&y| y as u32).collect(),
            labels: labels.unwrap_or_else(|| (0..size).map(|x| x.to_string()).collect()),
        };
        for y in 0..size {
            if s.act(0, y) != y {
                return invalid(format!("identity moves {y}"));
            }
            for a in 0..n {
                for b in 0..n {
                    if s.act(a, s.act(b, y)) != s.act(m.mul(a, b), y) {
                        return invalid(format!("{a}·({b}·y) != ({a}{b})·y at y = {y}"));
                    }
                }
            }
        }
        Ok(s)
    }

    /// `N` as a left `M`-set through a homomorphism `φ`: `m·y = φ(m) y`.
    pub fn through_hom(m: &FiniteMonoid, n: &FiniteMonoid, phi: &[usize]) -> Self {
        let act: Vec<Vec<usize>> = (0..n.size()).map(|y| (0..m.size()).map(|a| n.mul(phi[a], y)).collect()).collect();
        LeftMSet::new(m, act, Some((0..n.size()).map(|y| n.label(y)).collect())).expect("homomorphisms induce actions")
    }

    pub fn universe(m: &FiniteMonoid) -> Self {
        let act: Vec<Vec<usize>> = (0..m.size()).map(|y| (0..m.size()).map(|a| m.mul(a, y)).collect()).collect();
        LeftMSet::new(m, act, Some((0..m.size()).map(|y| m.label(y)).collect())).unwrap()
    }

    pub fn single_point(m: &FiniteMonoid) -> Self {
        LeftMSet::new(m, vec![vec![0; m.size()]], Some(vec!["*".into()])).unwrap()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn monoid_size(&self) -> usize {
        self.monoid_size
    }

    #[inline]
    pub fn act(&self, m: usize, y: usize) -> usize {
        self.act[y * self.monoid_size + m] as usize
    }
}
