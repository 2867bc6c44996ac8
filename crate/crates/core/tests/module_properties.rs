mod common;

use std::sync::Arc;

use common::{irreps, left_regular, load, permutation_module, small_transformation_monoid, unipotent, SMALL_CORPUS};
use monoext::ext::{monoid_cohomology, DEFAULT_COCHAIN_CAP};
use monoext::linalg::{Field, Matrix};
use monoext::modules::{
    coinduce, corner, hom_module, hom_tensor_iso, induce, inflate, inflate_units, is_projective, monoid_hom, monrep_contragredient, equivariant_hom, tensor, top_of_corner,
    GroupRep, MonRep,
};
use monoext::monoid::builders::{cyclic_group, TransformationMonoid};
use monoext::monoid::{group_completion, ideal_data, local_monoid, FiniteMonoid, GroupTable};
use proptest::prelude::*;

fn field_of(which: u8) -> Field {
    if which % 2 == 0 {
        Field::Rational
    } else {
        Field::Prime(2)
    }
}

fn group_reps(t: &TransformationMonoid, e: usize, group: Arc<GroupTable>, field: Field) -> Vec<GroupRep> {
    match field {
        Field::Rational => irreps(Some(&t.maps), e, group, field).into_iter().map(|(_, w)| w).collect(),
        _ => vec![GroupRep::trivial(group.clone(), field), GroupRep::regular(group, field)],
    }
}

/// A direct sum of permutation, coinduced and induced pieces, conjugated
/// by a unipotent change of basis.
fn random_module(t: &TransformationMonoid, field: Field, picks: &[u8], seed: &[i64]) -> MonRep {
    let m = Arc::new(t.monoid.clone());
    let idem = m.idempotents();
    let piece = |p: u8| -> MonRep {
        let e = idem[p as usize / 5 % idem.len()];
        let data = ideal_data(&m, e);
        let group = Arc::new(data.group.clone());
        match p % 5 {
            0 => MonRep::trivial(m.clone(), field),
            1 => {
                let me: Vec<usize> = m.left_ideal(e).ones().collect();
                let mm = m.clone();
                let me2 = me.clone();
                permutation_module(&m, field, me.len(), move |a, x| me2.binary_search(&mm.mul(a, me2[x])).unwrap())
            }
            2 => coinduce(m.clone(), &data, &group_reps(t, e, group, field)[0]).unwrap(),
            3 => induce(m.clone(), &data, group_reps(t, e, group, field).last().unwrap()).unwrap(),
            _ => {
                let maps = t.maps.clone();
                permutation_module(&m, field, t.degree, move |a, x| maps[a][x])
            }
        }
    };
    let mut v = piece(picks[0]);
    for &p in &picks[1..] {
        v = v.direct_sum(&piece(p));
    }
    let p = unipotent(field, v.dim, seed);
    v.conjugate(&p).unwrap()
}

fn multiplicative(v: &MonRep) -> bool {
    let m = &v.monoid;
    v.rho[m.identity()].is_identity() && (0..m.size()).all(|a| (0..m.size()).all(|b| v.rho[m.mul(a, b)] == v.rho[a].mul(&v.rho[b])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn coinduction_is_right_adjoint_to_the_top_of_the_corner(
        t in small_transformation_monoid(),
        which in any::<u8>(),
        picks in prop::collection::vec(any::<u8>(), 1..3),
        seed in prop::collection::vec(-2i64..3, 1..6),
    ) {
        let field = field_of(which);
        let v = random_module(&t, field, &picks, &seed);
        prop_assert!(multiplicative(&v));
        let m = v.monoid.clone();
        for e in m.idempotents() {
            let data = ideal_data(&m, e);
            let group = Arc::new(data.group.clone());
            let top = top_of_corner(&v, &data).unwrap();
            for w in group_reps(&t, e, group, field) {
                let coind = coinduce(m.clone(), &data, &w).unwrap();
                prop_assert!(multiplicative(&coind));
                let lhs = monoid_hom(&v, &coind).unwrap().dim;
                let rhs = if top.dim == 0 { 0 } else { equivariant_hom(&top, &w).unwrap().dim };
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn projectivity_is_invariant_under_change_of_basis(
        t in small_transformation_monoid(),
        which in any::<u8>(),
        picks in prop::collection::vec(any::<u8>(), 1..3),
        seed in prop::collection::vec(-2i64..3, 1..6),
    ) {
        let field = field_of(which);
        prop_assume!(t.monoid.size() <= 16);
        let v = random_module(&t, field, &picks, &[]);
        let w = v.conjugate(&unipotent(field, v.dim, &seed)).unwrap();
        prop_assert_eq!(is_projective(&v).unwrap(), is_projective(&w).unwrap());
        let m = Arc::new(t.monoid.clone());
        let free = left_regular(&m, field);
        prop_assert!(is_projective(&free).unwrap());
        prop_assert!(is_projective(&free.conjugate(&unipotent(field, free.dim, &seed)).unwrap()).unwrap());
    }

    #[test]
    fn cohomology_of_m_matches_its_corner_when_em_is_eme(t in small_transformation_monoid(), sign in any::<bool>()) {
        prop_assume!(t.monoid.size() <= 8);
        // M × Z/2 has a nontrivial group completion; the sign of the second factor is inflated.
        let m = Arc::new(t.monoid.direct_product(&cyclic_group(2).unwrap()));
        let n = t.monoid.size();
        let f = Field::Rational;
        let rho = (0..m.size()).map(|a| Matrix::from_i64(f, 1, 1, &[if sign && a / n == 1 { -1 } else { 1 }])).collect();
        let a = MonRep::new(m.clone(), f, 1, rho).unwrap();
        let whole = monoid_cohomology(&a, 2, DEFAULT_COCHAIN_CAP).unwrap();
        for e in m.idempotents() {
            let em: Vec<usize> = m.right_ideal(e).ones().collect();
            let mut eme: Vec<usize> = (0..m.size()).map(|x| m.mul(m.mul(e, x), e)).collect();
            eme.sort_unstable();
            eme.dedup();
            if em != eme {
                continue;
            }
            let (local, order) = local_monoid(&m, e).unwrap();
            let ae = corner(&a, e, Arc::new(local), &order).unwrap();
            prop_assert_eq!(&monoid_cohomology(&ae, 2, DEFAULT_COCHAIN_CAP).unwrap().dims, &whole.dims);
        }
    }
}

#[test]
fn corpus_representations_are_multiplicative() {
    for name in SMALL_CORPUS {
        let l = load(name);
        let m = l.monoid.clone();
        let mut mods = vec![MonRep::trivial(m.clone(), Field::Rational), left_regular(&m, Field::Rational)];
        for e in m.idempotents() {
            let data = ideal_data(&m, e);
            for (_, w) in irreps(l.points.as_deref(), e, Arc::new(data.group.clone()), Field::Rational) {
                let coind = coinduce(m.clone(), &data, &w).unwrap();
                // The top of the corner of Coind_e(W) gives W back.
                let top = top_of_corner(&coind, &data).unwrap();
                assert_eq!(top.dim, w.dim, "{name}, e = {e}");
                assert_eq!(equivariant_hom(&top, &w).unwrap().dim, equivariant_hom(&w, &w).unwrap().dim, "{name}, e = {e}");
                mods.push(coind);
                mods.push(induce(m.clone(), &data, &w).unwrap());
            }
        }
        // For groups the unit-group irreducibles above are already the inflations.
        if !m.is_group() {
            let gc = group_completion(&m);
            for (_, w) in irreps(None, 0, Arc::new(gc.group.clone()), Field::Rational) {
                mods.push(inflate(m.clone(), &gc, &w).unwrap());
            }
        }
        for v in &mods {
            assert!(multiplicative(v), "{name}");
            assert!(v.is_representation());
        }
    }
}

#[test]
fn hom_modules_are_isomorphic_to_tensors_with_the_dual() {
    for name in ["z2", "z3", "s3"] {
        let l = load(name);
        let m = l.monoid.clone();
        let g = Arc::new(ideal_data(&m, 0).group);
        let reps: Vec<MonRep> = irreps(l.points.as_deref(), 0, g, Field::Rational)
            .into_iter()
            .map(|(_, w)| inflate_units(m.clone(), &w).unwrap())
            .collect();
        for v in &reps {
            for w in &reps {
                let v2 = v.conjugate(&unipotent(Field::Rational, v.dim, &[1, -1, 2])).unwrap();
                let h = hom_module(&v2, w).unwrap();
                let t = tensor(&monrep_contragredient(&v2).unwrap(), w).unwrap();
                assert!(multiplicative(&h) && multiplicative(&t));
                let p = hom_tensor_iso(&v2, w);
                assert!(p.inverse().is_some());
                for a in 0..m.size() {
                    assert_eq!(p.mul(&h.rho[a]), t.rho[a].mul(&p), "{name}");
                }
            }
        }
    }
    // Inflated modules over a monoid with a nontrivial group completion.
    let m: Arc<FiniteMonoid> = Arc::new(load("t2").monoid.direct_product(&cyclic_group(3).unwrap()));
    let gc = group_completion(&m);
    let ws = irreps(None, 0, Arc::new(gc.group.clone()), Field::Rational);
    let v = inflate(m.clone(), &gc, &ws.last().unwrap().1).unwrap();
    let h = hom_module(&v, &v).unwrap();
    let t = tensor(&monrep_contragredient(&v).unwrap(), &v).unwrap();
    let p = hom_tensor_iso(&v, &v);
    for a in 0..m.size() {
        assert_eq!(p.mul(&h.rho[a]), t.rho[a].mul(&p));
    }
}
