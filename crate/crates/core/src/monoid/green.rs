//! Green's relations, structural flags, sandwich matrices and principal series.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::subgroup::{ideal_data, maximal_subgroup};
use super::table::FiniteMonoid;
use crate::error::{invalid, Result};

/// Class labels are assigned in order of each class's smallest element.
#[derive(Clone, Debug, Serialize)]
pub struct GreenStructure {
    pub r_class: Vec<usize>,
    pub l_class: Vec<usize>,
    pub h_class: Vec<usize>,
    pub j_class: Vec<usize>,
    pub r_classes: Vec<Vec<usize>>,
    pub l_classes: Vec<Vec<usize>>,
    pub h_classes: Vec<Vec<usize>>,
    pub j_classes: Vec<Vec<usize>>,
    /// `j_leq[a][b]` iff `J_a <= J_b`, i.e. `M J_a M ⊆ M J_b M`.
    pub j_leq: Vec<Vec<bool>>,
    pub regular_j: Vec<bool>,
    pub idempotents: Vec<usize>,
}

fn classes_by_key<K: std::hash::Hash + Eq>(keys: Vec<K>) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut ids: HashMap<K, usize> = HashMap::new();
    let mut label = Vec::with_capacity(keys.len());
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (x, k) in keys.into_iter().enumerate() {
        let next = ids.len();
        let id = *ids.entry(k).or_insert(next);
        if id == classes.len() {
            classes.push(Vec::new());
        }
        classes[id].push(x);
        label.push(id);
    }
    (label, classes)
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

pub fn green_structure(m: &FiniteMonoid) -> GreenStructure {
    let n = m.size();
    let right: Vec<FixedBitSet> = (0..n).map(|a| m.right_ideal(a)).collect();
    let left: Vec<FixedBitSet> = (0..n).map(|a| m.left_ideal(a)).collect();
    let (r_class, r_classes) = classes_by_key(right.clone());
    let (l_class, l_classes) = classes_by_key(left);
    let (h_class, h_classes) = classes_by_key((0..n).map(|a| (r_class[a], l_class[a])).collect());

    // J = D in a finite monoid, and D is generated by R and L.
    let mut parent: Vec<usize> = (0..n).collect();
    for cls in r_classes.iter().chain(l_classes.iter()) {
        for w in cls.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let roots: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
    let (j_class, j_classes) = classes_by_key(roots);

    let ideals: Vec<FixedBitSet> = j_classes.iter().map(|c| m.two_sided_ideal(c[0])).collect();
    let k = j_classes.len();
    let j_leq = (0..k).map(|a| (0..k).map(|b| ideals[b].contains(j_classes[a][0])).collect()).collect();
    let idempotents = m.idempotents();
    let mut regular_j = vec![false; k];
    for &e in &idempotents {
        regular_j[j_class[e]] = true;
    }
    GreenStructure { r_class, l_class, h_class, j_class, r_classes, l_classes, h_classes, j_classes, j_leq, regular_j, idempotents }
}

impl GreenStructure {
    pub fn j_less(&self, a: usize, b: usize) -> bool {
        a != b && self.j_leq[a][b]
    }

    /// Minimal J-class (the minimal ideal).
    pub fn minimal_j(&self) -> usize {
        (0..self.j_classes.len()).find(|&a| (0..self.j_classes.len()).all(|b| self.j_leq[a][b])).expect("finite monoids have a minimal ideal")
    }

    /// Smallest idempotent of a regular J-class.
    pub fn idempotent_of(&self, j: usize) -> Option<usize> {
        self.idempotents.iter().copied().find(|&e| self.j_class[e] == j)
    }

    /// Number of J-classes in a longest strictly increasing chain, minus one.
    pub fn longest_j_chain(&self) -> usize {
        let k = self.j_classes.len();
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&a| (0..k).filter(|&b| self.j_leq[b][a]).count());
        let mut best = vec![0usize; k];
        for &a in &order {
            for b in 0..k {
                if self.j_less(b, a) {
                    best[a] = best[a].max(best[b] + 1);
                }
            }
        }
        best.into_iter().max().unwrap_or(0)
    }
}

/// Structural properties of a monoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralFlags {
    pub regular: bool,
    pub right_pp: bool,
    pub left_pp: bool,
    pub dedekind_finite: bool,
}

/// Label vector of the kernel partition of `x -> f(x)`.
fn kernel_partition(n: usize, f: impl Fn(usize) -> usize) -> Vec<u32> {
    let mut first: HashMap<usize, u32> = HashMap::new();
    (0..n)
        .map(|x| {
            let next = first.len() as u32;
            *first.entry(f(x)).or_insert(next)
        })
        .collect()
}

fn pp_by(m: &FiniteMonoid, left_mult: bool) -> bool {
    let n = m.size();
    let mut has_idem: HashMap<Vec<u32>, bool> = HashMap::new();
    for a in 0..n {
        let key = if left_mult { kernel_partition(n, |x| m.mul(a, x)) } else { kernel_partition(n, |x| m.mul(x, a)) };
        let e = has_idem.entry(key).or_insert(false);
        *e |= m.is_idempotent(a);
    }
    has_idem.values().all(|&b| b)
}

pub fn structural_flags(m: &FiniteMonoid) -> StructuralFlags {
    let n = m.size();
    let regular = (0..n).all(|a| (0..n).any(|x| m.mul(m.mul(a, x), a) == a));
    let dedekind_finite = (0..n).all(|a| (0..n).all(|b| m.mul(a, b) != 0 || m.mul(b, a) == 0));
    StructuralFlags { regular, right_pp: pp_by(m, true), left_pp: pp_by(m, false), dedekind_finite }
}

/// Sandwich matrix of a regular J-class, indexed `[b][a]` over L-classes
/// `b` and R-classes `a`. Entries are group indices in `G_e`, or `None`.
#[derive(Clone, Debug, Serialize)]
pub struct SandwichMatrix {
    pub j_class: usize,
    pub idempotent: usize,
    /// R-classes of the J-class, the class of `e` first.
    pub r_classes: Vec<usize>,
    /// L-classes of the J-class, the class of `e` first.
    pub l_classes: Vec<usize>,
    /// `r_a`: element of `L_e` in R-class `a`.
    pub r_reps: Vec<usize>,
    /// `l_b`: element of `R_e` in L-class `b`.
    pub l_reps: Vec<usize>,
    pub entries: Vec<Vec<Option<usize>>>,
}

pub fn sandwich_matrix(m: &FiniteMonoid, green: &GreenStructure, j: usize) -> Result<SandwichMatrix> {
    if j >= green.j_classes.len() {
        return invalid(format!("no J-class {j}"));
    }
    let e = match green.idempotent_of(j) {
        Some(e) => e,
        None => return invalid(format!("J-class {j} is not regular")),
    };
    let group = maximal_subgroup(m, e);
    let ordered = |cls_of: &Vec<usize>, own: usize| -> Vec<usize> {
        let mut v: Vec<usize> = Vec::new();
        for &x in &green.j_classes[j] {
            if !v.contains(&cls_of[x]) {
                v.push(cls_of[x]);
            }
        }
        v.sort_by_key(|&c| (c != own, c));
        v
    };
    let r_classes = ordered(&green.r_class, green.r_class[e]);
    let l_classes = ordered(&green.l_class, green.l_class[e]);
    let r_reps: Vec<usize> = r_classes
        .iter()
        .map(|&a| *green.r_classes[a].iter().find(|&&x| green.l_class[x] == green.l_class[e]).unwrap())
        .collect();
    let l_reps: Vec<usize> = l_classes
        .iter()
        .map(|&b| *green.l_classes[b].iter().find(|&&x| green.r_class[x] == green.r_class[e]).unwrap())
        .collect();
    let entries = l_reps
        .iter()
        .map(|&lb| r_reps.iter().map(|&ra| group.index_of(m.mul(lb, ra))).collect())
        .collect();
    Ok(SandwichMatrix { j_class: j, idempotent: e, r_classes, l_classes, r_reps, l_reps, entries })
}

/// Ideals `∅ = I_0 ⊂ I_1 ⊂ ... ⊂ I_k = M`, each adjoining one J-class that
/// is minimal among those not yet included (smallest id on ties).
#[derive(Clone, Debug, Serialize)]
pub struct PrincipalSeries {
    /// J-class added at each step.
    pub j_order: Vec<usize>,
    /// `ideals[k]` lists the elements of `I_k`; `ideals[0]` is empty.
    pub ideals: Vec<Vec<usize>>,
}

pub fn principal_series(green: &GreenStructure) -> PrincipalSeries {
    let k = green.j_classes.len();
    let mut done = vec![false; k];
    let mut j_order = Vec::with_capacity(k);
    let mut ideals = vec![Vec::new()];
    for _ in 0..k {
        let next = (0..k).find(|&a| !done[a] && (0..k).all(|b| done[b] || b == a || !green.j_leq[b][a])).unwrap();
        done[next] = true;
        j_order.push(next);
        let mut ideal = ideals.last().unwrap().clone();
        ideal.extend(&green.j_classes[next]);
        ideal.sort_unstable();
        ideals.push(ideal);
    }
    PrincipalSeries { j_order, ideals }
}

/// Checks that every stored ideal really is a two-sided ideal.
pub fn is_ideal(m: &FiniteMonoid, elems: &[usize]) -> bool {
    let mut set = FixedBitSet::with_capacity(m.size());
    for &x in elems {
        set.insert(x);
    }
    elems.iter().all(|&x| (0..m.size()).all(|y| set.contains(m.mul(x, y)) && set.contains(m.mul(y, x))))
}

/// `|R_e| / |G_e|` and `|L_e| / |G_e|` for an idempotent: the sizes of the
/// free orbit sets behind coinduction and induction.
pub fn orbit_counts(m: &FiniteMonoid, e: usize) -> (usize, usize) {
    let d = ideal_data(m, e);
    (d.r_reps.len(), d.l_reps.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::builders::*;

    #[test]
    fn t3_green() {
        let t = full_transformation_monoid(3).unwrap().monoid;
        let g = green_structure(&t);
        assert_eq!(g.j_classes.len(), 3);
        let mut sizes: Vec<usize> = g.j_classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 6, 18]);
        assert_eq!(g.longest_j_chain(), 2);
        let f = structural_flags(&t);
        assert!(f.regular && f.right_pp && f.left_pp && f.dedekind_finite);
    }

    #[test]
    fn t2_constant_sandwich_is_one_by_two() {
        let t = full_transformation_monoid(2).unwrap().monoid;
        let g = green_structure(&t);
        let j = g.minimal_j();
        let s = sandwich_matrix(&t, &g, j).unwrap();
        assert_eq!(s.entries.len(), 1);
        assert_eq!(s.entries[0].len(), 2);
        assert!(s.entries[0].iter().all(|x| x.is_some()));
    }

    #[test]
    fn nil3_is_not_right_pp() {
        let f = structural_flags(&nilpotent_three());
        assert!(!f.regular && !f.right_pp);
    }

    #[test]
    fn series_of_matrix_monoid() {
        let m = matrix_monoid(2, 2).unwrap().monoid;
        let g = green_structure(&m);
        let s = principal_series(&g);
        assert_eq!(s.j_order.len(), 3);
        let sizes: Vec<usize> = s.ideals.iter().map(|i| i.len()).collect();
        assert_eq!(sizes, vec![0, 1, 10, 16]);
        assert!(s.ideals.iter().all(|i| is_ideal(&m, i)));
    }
}
