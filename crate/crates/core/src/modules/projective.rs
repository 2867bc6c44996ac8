//! Projectivity via a splitting of the free cover, and recognition of
//! induced modules coming from `M`-set pairs.

use std::sync::Arc;

use num_traits::Zero;

use super::rep::{GroupRep, MonRep};
use crate::complexes::LeftMSet;
use crate::error::{invalid, Result};
use crate::linalg::{sparse, Scalar, SparseMatrix};
use crate::monoid::{FiniteMonoid, IdealData};

/// Decides whether `π : KM^n -> V`, `(x, i) ↦ ρ(x) v_i`, splits
/// equivariantly. The unknown splitting sends `v_j` to `S_j`, with
/// coordinate `(x, i)` of `S_j` at `j·|M|·n + x·n + i`.
pub fn is_projective(v: &MonRep) -> Result<bool> {
    let m = &v.monoid;
    let (n, size) = (v.dim, m.size());
    if n == 0 {
        return Ok(true);
    }
    let block = size * n;
    let var = |j: usize, x: usize, i: usize| (j * block + x * n + i) as u32;
    let mut sys = SparseMatrix::new(n * block);
    let mut rhs = Vec::new();
    // s(g v_j) = g s(v_j) for every generator g.
    for g in m.generators() {
        let mut preimages: Vec<Vec<usize>> = vec![Vec::new(); size];
        for x in 0..size {
            preimages[m.mul(g, x)].push(x);
        }
        let a = &v.rho[g];
        for j in 0..n {
            for y in 0..size {
                for i in 0..n {
                    let mut row: Vec<(u32, Scalar)> = Vec::new();
                    for k in 0..n {
                        let c = a.get(k, j);
                        if !c.is_zero() {
                            row.push((var(k, y, i), c.clone()));
                        }
                    }
                    for &x in &preimages[y] {
                        row.push((var(j, x, i), -v.field.one()));
                    }
                    sys.push_row(row);
                    rhs.push(Scalar::zero());
                }
            }
        }
    }
    // π(S_j) = v_j.
    for j in 0..n {
        for r in 0..n {
            let mut row = Vec::new();
            for x in 0..size {
                for i in 0..n {
                    let c = v.rho[x].get(r, i);
                    if !c.is_zero() {
                        row.push((var(j, x, i), c.clone()));
                    }
                }
            }
            sys.push_row(row);
            rhs.push(if r == j { v.field.one() } else { Scalar::zero() });
        }
    }
    Ok(sparse::solve(v.field, &sys, &[rhs])?.is_some())
}

/// Witness that `KX/KY ≅ Ind_e(K[eX \ eY])`.
#[derive(Clone, Debug)]
pub struct InducedWitness {
    /// The points of `eX \ eY`.
    pub points: Vec<usize>,
    /// `G_e` permuting them.
    pub rep: GroupRep,
    /// `|L_e / G_e|`.
    pub orbits: usize,
}

/// Checks the three conditions for `KX/KY` to be induced from `e`:
/// `X \ Y ⊆ MeX`, `L(e)X ⊆ Y`, and for `x, x'` in `eX \ eY` and
/// `m, m' ∈ L_e` with `mx = m'x'`, `mG_e = m'G_e`.
pub fn induced_recognizer(
    m: &FiniteMonoid,
    data: &IdealData,
    x: &LeftMSet,
    y: &[bool],
    field: crate::linalg::Field,
) -> Result<Option<InducedWitness>> {
    if x.monoid_size() != m.size() || y.len() != x.size() {
        return invalid("M-set pair does not match the monoid");
    }
    let e = data.e;
    let n = x.size();
    if (0..n).any(|p| y[p] && (0..m.size()).any(|a| !y[x.act(a, p)])) {
        return invalid("Y is not an invariant subset");
    }
    // (1)
    let mut in_mex = vec![false; n];
    for p in 0..n {
        let ep = x.act(e, p);
        for a in 0..m.size() {
            in_mex[x.act(a, ep)] = true;
        }
    }
    if (0..n).any(|p| !y[p] && !in_mex[p]) {
        return Ok(None);
    }
    // (2)
    if data.l_bad.iter().any(|&l| (0..n).any(|p| !y[x.act(l, p)])) {
        return Ok(None);
    }
    // (3): the orbit of mG_e is l_coord(m).1.
    let points: Vec<usize> = (0..n).filter(|&p| !y[p] && x.act(e, p) == p).collect();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for &p in &points {
        for &l in &data.l_e {
            let q = x.act(l, p);
            let t = data.l_coord(l).expect("l lies in L_e").1;
            match owner[q] {
                Some(t2) if t2 != t => return Ok(None),
                _ => owner[q] = Some(t),
            }
        }
    }
    let pos = |p: usize| points.binary_search(&p).expect("G_e preserves eX minus eY");
    let emb = data.group.embedding.clone().expect("G_e carries its embedding");
    let perms: Vec<Vec<usize>> = emb.iter().map(|&g| points.iter().map(|&p| pos(x.act(g, p))).collect()).collect();
    let rep = GroupRep::permutation(Arc::new(data.group.clone()), field, &perms)?;
    Ok(Some(InducedWitness { points, rep, orbits: data.l_reps.len() }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Field, Matrix};
    use crate::monoid::builders::*;
    use crate::monoid::ideal_data;

    fn regular_module(m: Arc<FiniteMonoid>, field: Field) -> MonRep {
        let n = m.size();
        let rho = (0..n)
            .map(|a| {
                let mut mat = Matrix::zeros(field, n, n);
                for b in 0..n {
                    mat.set(m.mul(a, b), b, field.one());
                }
                mat
            })
            .collect();
        MonRep::new(m, field, n, rho).unwrap()
    }

    #[test]
    fn free_and_non_projective() {
        let m = Arc::new(FiniteMonoid::from_table(&[vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 2]], 0, None).unwrap());
        assert!(is_projective(&regular_module(m.clone(), Field::Rational)).unwrap());
        // With a zero element z, K ≅ Kz is projective; K_(G) is not when x^2 = 0.
        let nil = Arc::new(nilpotent_three());
        assert!(is_projective(&MonRep::trivial(nil.clone(), Field::Rational)).unwrap());
        let units = Arc::new(crate::modules::unit_group(&nil));
        let kg = crate::modules::inflate_units(nil, &GroupRep::trivial(units, Field::Rational)).unwrap();
        assert!(!is_projective(&kg).unwrap());
        let s3 = Arc::new(symmetric_group(3).unwrap().monoid);
        assert!(is_projective(&MonRep::trivial(s3.clone(), Field::Rational)).unwrap());
        assert!(!is_projective(&MonRep::trivial(s3, Field::Prime(3))).unwrap());
    }

    #[test]
    fn universe_is_induced_from_identity_for_a_group() {
        let s3 = symmetric_group(3).unwrap().monoid;
        let d = ideal_data(&s3, 0);
        let u = LeftMSet::universe(&s3);
        let w = induced_recognizer(&s3, &d, &u, &vec![false; 6], Field::Rational).unwrap().unwrap();
        assert_eq!(w.points.len(), 6);
        assert_eq!(w.rep.dim, 6);
    }

    #[test]
    fn violating_pair_is_rejected() {
        // For T_2 with e = 1, L(1) contains the constants, which fix nothing outside Y = ∅.
        let t2 = full_transformation_monoid(2).unwrap().monoid;
        let d = ideal_data(&t2, 0);
        let u = LeftMSet::universe(&t2);
        assert!(induced_recognizer(&t2, &d, &u, &vec![false; t2.size()], Field::Rational).unwrap().is_none());
    }
}
