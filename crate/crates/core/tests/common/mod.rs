#![allow(dead_code)]

use std::sync::Arc;

use monoext::cli::{load_monoid, Loaded};
use monoext::linalg::{Field, Matrix};
use monoext::modules::fixtures::{cyclic_irreps, moved_points, perms_on_image, symmetric_irreps};
use monoext::modules::{GroupRep, MonRep};
use monoext::monoid::builders::TransformationMonoid;
use monoext::monoid::{transformation_monoid, FiniteMonoid, GroupTable};
use proptest::prelude::*;

/// Regular monoids used by the oracle comparisons.
pub const REGULAR_CORPUS: &[&str] = &["t2", "t3", "aff(1,2)", "aff(1,3)", "semilattice2", "band6", "m(2,2)"];

/// Small monoids of every kind, for cheap exhaustive checks.
pub const SMALL_CORPUS: &[&str] = &["t2", "aff(1,2)", "aff(1,3)", "semilattice2", "band6", "nil3", "z2", "z3", "s3"];

pub fn load(name: &str) -> Loaded {
    load_monoid(name).unwrap()
}

/// Irreducibles of `G_e` from the fixtures: symmetric groups through the
/// point action, cyclic groups otherwise.
pub fn irreps(points: Option<&[Vec<usize>]>, e: usize, group: Arc<GroupTable>, field: Field) -> Vec<(String, GroupRep)> {
    if group.size() == 1 {
        return vec![("trivial".into(), GroupRep::trivial(group, field))];
    }
    if let Some(points) = points {
        let perms = moved_points(&perms_on_image(&group, points, e));
        let k = perms[0].len();
        if (1..=k).product::<usize>() == group.size() {
            return symmetric_irreps(group, field, &perms).unwrap();
        }
    }
    cyclic_irreps(group, field).unwrap()
}

/// Maps on `degree` points; the generated monoid stays below 27 elements.
pub fn transformation_gens(degree: usize) -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(prop::collection::vec(0..degree, degree), 1..=3)
}

pub fn small_transformation_monoid() -> impl Strategy<Value = TransformationMonoid> {
    (2usize..=3).prop_flat_map(transformation_gens).prop_map(|gens| transformation_monoid(gens[0].len(), &gens).unwrap())
}

pub fn small_monoid() -> impl Strategy<Value = FiniteMonoid> {
    small_transformation_monoid().prop_map(|t| t.monoid)
}

/// `K[X]` for a left action table `act[m][x]`.
pub fn permutation_module(m: &Arc<FiniteMonoid>, field: Field, points: usize, act: impl Fn(usize, usize) -> usize) -> MonRep {
    let rho = (0..m.size())
        .map(|a| {
            let mut mat = Matrix::zeros(field, points, points);
            for x in 0..points {
                mat.set(act(a, x), x, field.one());
            }
            mat
        })
        .collect();
    MonRep::new(m.clone(), field, points, rho).unwrap()
}

pub fn left_regular(m: &Arc<FiniteMonoid>, field: Field) -> MonRep {
    let mm = m.clone();
    permutation_module(m, field, m.size(), move |a, x| mm.mul(a, x))
}

/// Unipotent upper triangular matrix with small off-diagonal entries.
pub fn unipotent(field: Field, n: usize, seed: &[i64]) -> Matrix {
    let mut p = Matrix::identity(field, n);
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            let s = if seed.is_empty() { 0 } else { seed[k % seed.len()] };
            p.set(i, j, field.from_i64(s));
            k += 1;
        }
    }
    p
}
