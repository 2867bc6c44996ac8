//! `Ext` into coinduced modules from the `G_e`-module structure of the
//! reduced homology of `R(e)`, the degree-one shortcuts, and the dual
//! formula for induced modules over the opposite monoid.

use std::collections::{BTreeMap, HashMap};
use std::ops::RangeInclusive;
use std::sync::Arc;

use serde_json::json;

use super::report::{ExtReport, Method};
use crate::complexes::{
    chain_complex, g_action_on_homology, nerve_chain_complex, omega_poset, order_complex, path_components, GroupAction, OmegaPoset,
    RightMSet,
};
use crate::error::{invalid, Error, Result};
use crate::linalg::{Field, Matrix};
use crate::modules::{
    contragredient, dual_op, equivariant_hom, restrict, transpose_rep, unit_group, GroupRep, MonRep,
};
use crate::monoid::{group_completion, ideal_data, structural_flags, FiniteMonoid, GroupTable, IdealData};

/// The complex whose reduced homology stands in for `R(e)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexKind {
    /// `Δ(Ω(R(e)))`, valid for right p.p. monoids.
    OrderComplex,
    /// The nerve of `R(e) ⋊ M`, truncated.
    Nerve,
}

impl ComplexKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ComplexKind::OrderComplex => "order_complex",
            ComplexKind::Nerve => "nerve",
        }
    }
}

/// `H̃_d(R(e))` as `G_e`-modules.
#[derive(Clone, Debug)]
pub struct ReducedHomology {
    pub kind: ComplexKind,
    pub reps: BTreeMap<i64, GroupRep>,
    /// Highest degree for which the homology is exact (not truncated).
    pub valid_through: i64,
}

/// `R(e)` as a right `M`-set and the left action of `G_e` on it.
fn r_bad_set(m: &FiniteMonoid, data: &IdealData, group: &GroupTable) -> Result<(RightMSet, Vec<Vec<usize>>)> {
    let x = RightMSet::from_right_ideal(m, &data.r_bad)?;
    let mut elems = data.r_bad.clone();
    elems.sort_unstable();
    let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let emb = group.embedding.as_ref().ok_or_else(|| Error::Invalid("G_e carries no embedding".into()))?;
    let maps = emb.iter().map(|&g| elems.iter().map(|&r| pos[&m.mul(g, r)]).collect()).collect();
    Ok((x, maps))
}

fn vertex_maps(omega: &OmegaPoset, point_maps: &[Vec<usize>]) -> Vec<Vec<usize>> {
    point_maps.iter().map(|f| omega.generators.iter().map(|&x| omega.class_of[f[x]]).collect()).collect()
}

/// Reduced homology of `R(e)` with its `G_e`-action in the given degrees
/// (from `-1`). The nerve is built just far enough for the top degree.
pub fn reduced_homology_of_ideal(
    m: &FiniteMonoid,
    data: &IdealData,
    group: Arc<GroupTable>,
    degrees: RangeInclusive<i64>,
    field: Field,
    kind: ComplexKind,
    cap: u128,
) -> Result<ReducedHomology> {
    let (x, point_maps) = r_bad_set(m, data, &group)?;
    let mut reps = BTreeMap::new();
    match kind {
        ComplexKind::OrderComplex => {
            let omega = omega_poset(&x);
            let chains = chain_complex(&order_complex(&omega.poset), None, true)?;
            let action = GroupAction::Simplicial { chains: &chains, vertex_maps: vertex_maps(&omega, &point_maps) };
            for d in degrees {
                reps.insert(d, g_action_on_homology(group.clone(), &action, d, field)?);
            }
            Ok(ReducedHomology { kind, reps, valid_through: i64::MAX })
        }
        ComplexKind::Nerve => {
            let top = (*degrees.end()).max(0) as usize;
            let nerve = nerve_chain_complex(m, &x, None, top, true, cap)?;
            let action = GroupAction::Nerve { nerve: &nerve, object_maps: point_maps };
            for d in degrees {
                reps.insert(d, g_action_on_homology(group.clone(), &action, d, field)?);
            }
            Ok(ReducedHomology { kind, reps, valid_through: nerve.complex.valid_through })
        }
    }
}

/// Checks that `V` factors through `ψ : M -> G(M)`.
pub fn check_inflated(v: &MonRep) -> Result<()> {
    let gc = group_completion(&v.monoid);
    let mut first: HashMap<usize, usize> = HashMap::new();
    for (a, &g) in gc.psi.iter().enumerate() {
        let b = *first.entry(g).or_insert(a);
        if v.rho[a] != v.rho[b] {
            return Err(Error::NotApplicable(format!("V is not inflated from G(M): elements {b} and {a} have the same image but act differently")));
        }
    }
    Ok(())
}

fn same_table(a: &GroupTable, b: &GroupTable) -> bool {
    a.size() == b.size() && a.embedding == b.embedding && (0..a.size()).all(|x| (0..a.size()).all(|y| a.mul(x, y) == b.mul(x, y)))
}

/// `V* ⊗ W` as a `G_e`-module.
fn coefficient_module(v: &MonRep, w: &GroupRep) -> Result<GroupRep> {
    let vres = restrict(v, w.group.clone())?;
    Ok(contragredient(&vres).tensor(w))
}

fn validate(v: &MonRep, e: usize, w: &GroupRep) -> Result<IdealData> {
    let m = &v.monoid;
    if e >= m.size() || !m.is_idempotent(e) {
        return invalid(format!("element {e} is not an idempotent"));
    }
    if v.field != w.field {
        return invalid("V and W are over different fields");
    }
    let data = ideal_data(m, e);
    if !same_table(&data.group, &w.group) {
        return invalid("W is not a representation of the maximal subgroup at e");
    }
    check_inflated(v)?;
    Ok(data)
}

/// `Ext^n_{KM}(V, Coind_e(W)) = dim Hom_{G_e}(H̃_{n-1}(R(e)), V* ⊗ W)` in good
/// characteristic, with `H̃` from `Δ(Ω(R(e)))` when `M` is right p.p. and
/// from the truncated nerve of `R(e) ⋊ M` otherwise.
pub fn ext_topological(v: &MonRep, e: usize, w: &GroupRep, degrees: RangeInclusive<usize>, cap: u128) -> Result<ExtReport> {
    let data = validate(v, e, w)?;
    let m = &v.monoid;
    let order = data.group.size();
    if !v.field.is_good_for(order) {
        return Err(Error::BadCharacteristic { p: v.field.characteristic(), order });
    }
    let flags = structural_flags(m);
    let kind = if flags.right_pp { ComplexKind::OrderComplex } else { ComplexKind::Nerve };
    let (lo, hi) = (*degrees.start() as i64, *degrees.end() as i64);
    let homology = reduced_homology_of_ideal(m, &data, w.group.clone(), lo - 1..=hi - 1, v.field, kind, cap)?;
    let target = coefficient_module(v, w)?;
    let mut dims = BTreeMap::new();
    for n in lo..=hi {
        let h = &homology.reps[&(n - 1)];
        let d = if h.dim == 0 || target.dim == 0 { 0 } else { equivariant_hom(h, &target)?.dim };
        dims.insert(n as usize, d);
    }
    let valid = if homology.valid_through == i64::MAX { hi } else { hi.min(homology.valid_through + 1) };
    let mut rep = ExtReport::new(Method::Topological, v.field, dims, valid as usize);
    rep.assumptions.insert("e".into(), json!(e));
    rep.assumptions.insert("group_order".into(), json!(order));
    rep.assumptions.insert("characteristic_good".into(), json!(true));
    rep.assumptions.insert("regular".into(), json!(flags.regular));
    rep.assumptions.insert("right_pp".into(), json!(flags.right_pp));
    rep.assumptions.insert("eM_minimal".into(), json!(data.r_bad.is_empty()));
    rep.assumptions.insert("complex".into(), json!(kind.as_str()));
    rep.assumptions.insert("V_inflated".into(), json!(true));
    if data.r_bad.is_empty() {
        rep.notes.push("R(e) is empty; H̃_{-1} = K".into());
    }
    Ok(rep)
}

/// `Ext^1(V, Coind_e(W)) = dim Hom_{G_e}(H̃_0(Δ(Ω(R(e)))), V* ⊗ W)` when `eM`
/// is not minimal, in any characteristic. For `V = K`, `e = 1` and `W`
/// trivial this dispatches to [`ext1_two_trivials`].
pub fn ext1_fast(v: &MonRep, e: usize, w: &GroupRep) -> Result<ExtReport> {
    let data = validate(v, e, w)?;
    let m = &v.monoid;
    if data.r_bad.is_empty() {
        return Err(Error::NotApplicable("eM is a minimal right ideal".into()));
    }
    let trivial_w = w.dim == 1 && w.rho.iter().all(|a| a.is_identity());
    let trivial_v = v.dim == 1 && v.rho.iter().all(|a| a.is_identity());
    if e == m.identity() && trivial_v && trivial_w {
        return ext1_two_trivials(m, v.field);
    }
    let homology = reduced_homology_of_ideal(m, &data, w.group.clone(), 0..=0, v.field, ComplexKind::OrderComplex, u128::MAX)?;
    let target = coefficient_module(v, w)?;
    let h = &homology.reps[&0];
    let d = if h.dim == 0 || target.dim == 0 { 0 } else { equivariant_hom(h, &target)?.dim };
    let mut rep = ExtReport::new(Method::Ext1Fast, v.field, BTreeMap::from([(1, d)]), 1);
    rep.assumptions.insert("e".into(), json!(e));
    rep.assumptions.insert("group_order".into(), json!(data.group.size()));
    rep.assumptions.insert("characteristic_good".into(), json!(v.field.is_good_for(data.group.size())));
    rep.assumptions.insert("eM_minimal".into(), json!(false));
    Ok(rep)
}

/// `Ext^1(K, K_(G)) = dim H̃^0(Δ(Ω(S)))^G`, from the functions on path
/// components of `Ω(S)` modulo constants.
pub fn ext1_two_trivials(m: &FiniteMonoid, field: Field) -> Result<ExtReport> {
    let units = Arc::new(unit_group(m));
    if units.size() == m.size() {
        return Err(Error::NotApplicable("M is a group".into()));
    }
    let data = ideal_data(m, m.identity());
    let (x, point_maps) = r_bad_set(m, &data, &units)?;
    let omega = omega_poset(&x);
    let comps = path_components(&omega.poset);
    let mut comp_of = vec![0; omega.poset.size()];
    for (c, members) in comps.iter().enumerate() {
        for &p in members {
            comp_of[p] = c;
        }
    }
    let vmaps = vertex_maps(&omega, &point_maps);
    let k = comps.len();
    // g δ_c = δ_{gc}; in the quotient by constants δ_{k-1} = -Σ_{c<k-1} δ_c.
    let rho: Vec<Matrix> = vmaps
        .iter()
        .map(|f| {
            let mut a = Matrix::zeros(field, k - 1, k - 1);
            for c in 0..k - 1 {
                let gc = comp_of[f[comps[c][0]]];
                if gc < k - 1 {
                    a.set(gc, c, field.one());
                } else {
                    for r in 0..k - 1 {
                        a.set(r, c, field.from_i64(-1));
                    }
                }
            }
            a
        })
        .collect();
    let h0 = GroupRep::new(units.clone(), field, k - 1, rho)?;
    let d = if k <= 1 { 0 } else { equivariant_hom(&GroupRep::trivial(units.clone(), field), &h0)?.dim };
    let mut rep = ExtReport::new(Method::TwoTrivials, field, BTreeMap::from([(1, d)]), 1);
    rep.assumptions.insert("group_order".into(), json!(units.size()));
    rep.assumptions.insert("components".into(), json!(k));
    Ok(rep)
}

/// `Ext^n_{KM}(Ind_e(W), V)` as `Ext^n_{KM^op}(D(V), Coind_e(D(W)))`.
pub fn ext_from_induced(v: &MonRep, e: usize, w: &GroupRep, degrees: RangeInclusive<usize>, cap: u128) -> Result<ExtReport> {
    let m = &v.monoid;
    if e >= m.size() || !m.is_idempotent(e) {
        return invalid(format!("element {e} is not an idempotent"));
    }
    if !same_table(&ideal_data(m, e).group, &w.group) {
        return invalid("W is not a representation of the maximal subgroup at e");
    }
    let op = Arc::new(m.opposite());
    let dv = dual_op(v, op.clone())?;
    let gop = Arc::new(ideal_data(&op, e).group);
    let dw = transpose_rep(w, gop)?;
    let mut rep = ext_topological(&dv, e, &dw, degrees, cap)?;
    rep.method = Method::Induced;
    rep.assumptions.insert("computed_over".into(), json!("opposite monoid"));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ext::{ext_oracle, DEFAULT_COCHAIN_CAP};
    use crate::modules::fixtures::{perms_on_image, sign};
    use crate::modules::{inflate_units, induce};
    use crate::monoid::builders::*;

    #[test]
    fn t3_sign_in_degree_two() {
        let t = full_transformation_monoid(3).unwrap();
        let m = Arc::new(t.monoid.clone());
        let g = Arc::new(ideal_data(&m, 0).group);
        let perms = perms_on_image(&g, &t.maps, 0);
        let w = sign(g, Field::Rational, &perms).unwrap();
        let k = MonRep::trivial(m, Field::Rational);
        let r = ext_topological(&k, 0, &w, 0..=3, DEFAULT_COCHAIN_CAP).unwrap();
        assert_eq!(r.dims.values().copied().collect::<Vec<_>>(), vec![0, 0, 1, 0]);
    }

    #[test]
    fn minimal_ideal_uses_the_empty_slot() {
        // e = a constant map of T_2: eM is minimal and Ext^0 = Hom(K, K).
        let t = full_transformation_monoid(2).unwrap().monoid;
        let m = Arc::new(t);
        let e = (0..m.size()).find(|&x| x != 0 && m.is_idempotent(x) && m.right_ideal(x).count_ones(..) == 1).unwrap();
        let g = Arc::new(ideal_data(&m, e).group);
        let w = GroupRep::trivial(g, Field::Rational);
        let k = MonRep::trivial(m, Field::Rational);
        let r = ext_topological(&k, e, &w, 0..=2, DEFAULT_COCHAIN_CAP).unwrap();
        assert_eq!(r.dim(0), Some(1));
        assert_eq!(r.dim(1), Some(0));
    }

    #[test]
    fn nerve_fallback_matches_oracle_for_nil3() {
        let m = Arc::new(nilpotent_three());
        let units = Arc::new(unit_group(&m));
        let w = GroupRep::trivial(units.clone(), Field::Rational);
        let k = MonRep::trivial(m.clone(), Field::Rational);
        let r = ext_topological(&k, 0, &w, 0..=2, DEFAULT_COCHAIN_CAP).unwrap();
        assert_eq!(r.assumptions["complex"], json!("nerve"));
        let kg = inflate_units(m, &w).unwrap();
        let o = ext_oracle(&k, &kg, 2, DEFAULT_COCHAIN_CAP).unwrap();
        assert_eq!(r.dims, o.dims);
    }

    #[test]
    fn two_trivials_agree_with_ext1_formula() {
        let a = Arc::new(affine_monoid(1, 2).unwrap().monoid);
        let units = Arc::new(unit_group(&a));
        let k = MonRep::trivial(a.clone(), Field::Rational);
        let fast = ext1_two_trivials(&a, Field::Rational).unwrap();
        let data = ideal_data(&a, 0);
        let h = reduced_homology_of_ideal(&a, &data, units.clone(), 0..=0, Field::Rational, ComplexKind::OrderComplex, u128::MAX).unwrap();
        let hom = equivariant_hom(&h.reps[&0], &GroupRep::trivial(units, Field::Rational)).unwrap();
        assert_eq!(fast.dim(1), Some(hom.dim));
        assert_eq!(fast.dim(1), Some(0));
        let _ = k;
    }

    #[test]
    fn induced_from_identity_matches_oracle() {
        let t = full_transformation_monoid(3).unwrap();
        let m = Arc::new(t.monoid.clone());
        let data = ideal_data(&m, 0);
        let g = Arc::new(data.group.clone());
        let perms = perms_on_image(&g, &t.maps, 0);
        let w = sign(g, Field::Rational, &perms).unwrap();
        let k = MonRep::trivial(m.clone(), Field::Rational);
        let r = ext_from_induced(&k, 0, &w, 0..=2, DEFAULT_COCHAIN_CAP).unwrap();
        let ind = induce(m, &data, &w).unwrap();
        let o = ext_oracle(&ind, &k, 2, DEFAULT_COCHAIN_CAP).unwrap();
        assert_eq!(r.dims, o.dims);
    }
}
