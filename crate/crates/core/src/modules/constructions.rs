//! Inflation, restriction, duals, tensor and Hom modules, coinduction and
//! induction from maximal subgroups.

use std::sync::Arc;

use super::rep::{GroupRep, MonRep};
use crate::error::{invalid, Error, Result};
use crate::linalg::{rank_kernel, solve_right, Field, Matrix};
use crate::monoid::{maximal_subgroup, FiniteMonoid, GroupCompletion, GroupTable, IdealData};

fn same_group(a: &GroupTable, b: &GroupTable) -> bool {
    a.size() == b.size() && a.embedding == b.embedding && (0..a.size()).all(|x| (0..a.size()).all(|y| a.mul(x, y) == b.mul(x, y)))
}

/// Inflation along `ψ : M -> G(M)`.
pub fn inflate(monoid: Arc<FiniteMonoid>, gc: &GroupCompletion, w: &GroupRep) -> Result<MonRep> {
    if !same_group(&gc.group, &w.group) || gc.psi.len() != monoid.size() {
        return invalid("representation is not over the group completion of this monoid");
    }
    let rho = gc.psi.iter().map(|&g| w.rho[g].clone()).collect();
    MonRep::new(monoid, w.field, w.dim, rho)
}

/// The unit group `G_1` with its embedding into `M`.
pub fn unit_group(m: &FiniteMonoid) -> GroupTable {
    maximal_subgroup(m, m.identity())
}

/// Extends a representation of the unit group by zero on the singular
/// elements; `K_(G)` is the case of the trivial representation.
pub fn inflate_units(monoid: Arc<FiniteMonoid>, w: &GroupRep) -> Result<MonRep> {
    let units = unit_group(&monoid);
    if !same_group(&units, &w.group) {
        return invalid("representation is not over the unit group of this monoid");
    }
    let rho = (0..monoid.size())
        .map(|x| match units.index_of(x) {
            Some(g) => w.rho[g].clone(),
            None => Matrix::zeros(w.field, w.dim, w.dim),
        })
        .collect();
    MonRep::new(monoid, w.field, w.dim, rho)
}

/// Restriction of `V` to a subgroup given with its embedding. The
/// subgroup identity must act as the identity matrix.
pub fn restrict(v: &MonRep, group: Arc<GroupTable>) -> Result<GroupRep> {
    let emb = group.embedding.clone().ok_or_else(|| Error::Invalid("group has no embedding into the monoid".into()))?;
    if !v.rho[emb[0]].is_identity() {
        return invalid("the subgroup identity does not act as the identity on V");
    }
    let rho = emb.iter().map(|&x| v.rho[x].clone()).collect();
    GroupRep::new(group, v.field, v.dim, rho)
}

/// Column basis of the span of the given columns.
fn column_basis(field: Field, dim: usize, cols: impl IntoIterator<Item = Vec<crate::linalg::Scalar>>) -> Vec<Vec<crate::linalg::Scalar>> {
    let all: Vec<Vec<crate::linalg::Scalar>> = cols.into_iter().collect();
    if all.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_columns(field, dim, &all);
    let rk = rank_kernel(&m);
    rk.pivots.iter().map(|&j| all[j].clone()).collect()
}

/// The `G_e`-module `eV / R(e)V`.
pub fn top_of_corner(v: &MonRep, data: &IdealData) -> Result<GroupRep> {
    let f = v.field;
    let n = v.dim;
    let sub = column_basis(f, n, data.r_bad.iter().flat_map(|&r| (0..n).map(move |j| v.rho[r].column(j))));
    let mut basis = sub.clone();
    let mut top = Vec::new();
    for j in 0..n {
        let c = v.rho[data.e].column(j);
        let mut trial = basis.clone();
        trial.push(c.clone());
        if Matrix::from_columns(f, n, &trial).rank() == trial.len() {
            basis = trial;
            top.push(c);
        }
    }
    let k = top.len();
    let a = sub.len();
    let group = Arc::new(data.group.clone());
    if k == 0 {
        return GroupRep::new(group.clone(), f, 0, vec![Matrix::zeros(f, 0, 0); group.size()]);
    }
    let b = Matrix::from_columns(f, n, &basis);
    let emb = group.embedding.clone().unwrap();
    let mut rho = Vec::with_capacity(emb.len());
    for &g in &emb {
        let images: Vec<_> = top.iter().map(|c| v.rho[g].mul_vec(c)).collect();
        let x = solve_right(&b, &Matrix::from_columns(f, n, &images))?
            .ok_or_else(|| Error::NotARepresentation("G_e does not preserve eV".into()))?;
        let rows: Vec<usize> = (a..a + k).collect();
        rho.push(x.submatrix(&rows, &(0..k).collect::<Vec<_>>()));
    }
    GroupRep::new(group, f, k, rho)
}

/// `eV` as a module over the local monoid `eMe`, whose elements are
/// listed in `order` (as returned by `local_monoid`).
pub fn corner(v: &MonRep, e: usize, local: Arc<FiniteMonoid>, order: &[usize]) -> Result<MonRep> {
    let f = v.field;
    let n = v.dim;
    let basis = column_basis(f, n, (0..n).map(|j| v.rho[e].column(j)));
    let k = basis.len();
    let b = Matrix::from_columns(f, n, &basis);
    let mut rho = Vec::with_capacity(order.len());
    for &x in order {
        let images: Vec<_> = basis.iter().map(|c| v.rho[x].mul_vec(c)).collect();
        let sol = if k == 0 {
            Matrix::zeros(f, 0, 0)
        } else {
            solve_right(&b, &Matrix::from_columns(f, n, &images))?.ok_or_else(|| Error::NotARepresentation("eMe does not preserve eV".into()))?
        };
        rho.push(sol);
    }
    MonRep::new(local, f, k, rho)
}

/// `ρ*(g) = ρ(g^{-1})^T`.
pub fn contragredient(v: &GroupRep) -> GroupRep {
    let rho = (0..v.group.size()).map(|g| v.rho[v.group.inv(g)].transpose()).collect();
    GroupRep { group: v.group.clone(), field: v.field, dim: v.dim, rho }
}

/// The group `G^op` on the same index set, with the same embedding into `M^op`.
pub fn opposite_group(g: &GroupTable) -> GroupTable {
    let n = g.size();
    let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| g.mul(b, a)).collect()).collect();
    let mut op = crate::monoid::subgroup::group_from_table(&rows).expect("the opposite of a group is a group");
    op.embedding = g.embedding.clone();
    op
}

/// `W'(g) = W(g)^T` as a left module over `G^op`.
pub fn transpose_rep(w: &GroupRep, op_group: Arc<GroupTable>) -> Result<GroupRep> {
    let rho = w.rho.iter().map(|m| m.transpose()).collect();
    GroupRep::new(op_group, w.field, w.dim, rho)
}

/// The dual `V* = Hom_K(V, K)` as a left module over `M^op`: every element
/// acts by the transpose.
pub fn dual_op(v: &MonRep, op: Arc<FiniteMonoid>) -> Result<MonRep> {
    if op.size() != v.monoid.size() || (0..op.size()).any(|a| (0..op.size()).any(|b| op.mul(a, b) != v.monoid.mul(b, a))) {
        return invalid("target monoid is not the opposite monoid");
    }
    let rho = v.rho.iter().map(|m| m.transpose()).collect();
    MonRep::new(op, v.field, v.dim, rho)
}

/// `V*` for a representation by invertible matrices: `ρ*(m) = (ρ(m)^{-1})^T`.
pub fn monrep_contragredient(v: &MonRep) -> Result<MonRep> {
    let rho = v
        .rho
        .iter()
        .enumerate()
        .map(|(m, a)| a.inverse().map(|i| i.transpose()).ok_or_else(|| Error::Invalid(format!("element {m} does not act invertibly"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(MonRep::new_unchecked(v.monoid.clone(), v.field, v.dim, rho))
}

/// `m(v ⊗ w) = mv ⊗ mw`; basis index `i·dim W + j`.
pub fn tensor(v: &MonRep, w: &MonRep) -> Result<MonRep> {
    if !Arc::ptr_eq(&v.monoid, &w.monoid) && v.monoid.table_rows() != w.monoid.table_rows() {
        return invalid("tensor factors are over different monoids");
    }
    if v.field != w.field {
        return invalid("tensor factors are over different fields");
    }
    let rho = v.rho.iter().zip(&w.rho).map(|(a, b)| a.kron(b)).collect();
    Ok(MonRep::new_unchecked(v.monoid.clone(), v.field, v.dim * w.dim, rho))
}

/// `Hom_K(V, W)` with `(mf)(v) = m f(ψ(m)^{-1} v)`, for `V` acting by
/// invertible matrices. A map `f` is stored row-major: index `i·dim V + j`
/// holds `f_{ij}`.
pub fn hom_module(v: &MonRep, w: &MonRep) -> Result<MonRep> {
    let vstar = monrep_contragredient(v)?;
    if v.field != w.field || v.monoid.size() != w.monoid.size() {
        return invalid("Hom factors are over different monoids or fields");
    }
    let rho = w.rho.iter().zip(&vstar.rho).map(|(b, a)| b.kron(a)).collect();
    Ok(MonRep::new_unchecked(w.monoid.clone(), w.field, v.dim * w.dim, rho))
}

/// Permutation matrix `P` with `P · hom_module(V,W)(m) = tensor(V*, W)(m) · P`,
/// sending `f_{ij}` (index `i·dim V + j`) to `v_j* ⊗ w_i` (index `j·dim W + i`).
pub fn hom_tensor_iso(v: &MonRep, w: &MonRep) -> Matrix {
    let (dv, dw) = (v.dim, w.dim);
    let mut p = Matrix::zeros(v.field, dv * dw, dv * dw);
    for i in 0..dw {
        for j in 0..dv {
            p.set(j * dw + i, i * dv + j, v.field.one());
        }
    }
    p
}

fn check_group(data: &IdealData, w: &GroupRep) -> Result<()> {
    if !same_group(&data.group, &w.group) {
        return invalid("W is not a representation of the maximal subgroup at this idempotent");
    }
    Ok(())
}

/// `Coind_e(W) = Hom_{KG_e}(KR_e, W)`. A map `f` is stored by its values
/// `f(t)` at the orbit representatives `t` of `G_e` on `R_e`, block `t`.
/// Since `(xf)(t) = f(tx)` and `tx = g t'` with `f(g t') = g f(t')`, block
/// `(t, t')` of `x` is `W(g)`; it is zero when `tx ∈ R(e)`.
pub fn coinduce(monoid: Arc<FiniteMonoid>, data: &IdealData, w: &GroupRep) -> Result<MonRep> {
    check_group(data, w)?;
    let (k, d) = (data.r_reps.len(), w.dim);
    let rho = (0..monoid.size())
        .map(|x| {
            let mut a = Matrix::zeros(w.field, k * d, k * d);
            for (t, &r) in data.r_reps.iter().enumerate() {
                if let Some((g, t2)) = data.r_coord(monoid.mul(r, x)) {
                    place_block(&mut a, t * d, t2 * d, &w.rho[g]);
                }
            }
            a
        })
        .collect();
    MonRep::new(monoid, w.field, k * d, rho)
}

/// `Ind_e(W) = KL_e ⊗_{KG_e} W` with basis `t ⊗ w_i`, `t` an orbit
/// representative of `L_e / G_e`. If `x t = t' g` then `x(t ⊗ w) = t' ⊗ gw`;
/// terms with `x t ∈ L(e)` vanish.
pub fn induce(monoid: Arc<FiniteMonoid>, data: &IdealData, w: &GroupRep) -> Result<MonRep> {
    check_group(data, w)?;
    let (k, d) = (data.l_reps.len(), w.dim);
    let rho = (0..monoid.size())
        .map(|x| {
            let mut a = Matrix::zeros(w.field, k * d, k * d);
            for (t, &l) in data.l_reps.iter().enumerate() {
                if let Some((g, t2)) = data.l_coord(monoid.mul(x, l)) {
                    place_block(&mut a, t2 * d, t * d, &w.rho[g]);
                }
            }
            a
        })
        .collect();
    MonRep::new(monoid, w.field, k * d, rho)
}

fn place_block(a: &mut Matrix, r0: usize, c0: usize, b: &Matrix) {
    for i in 0..b.rows {
        for j in 0..b.cols {
            a.set(r0 + i, c0 + j, b.get(i, j).clone());
        }
    }
}
