mod common;

use std::collections::BTreeSet;

use common::{small_monoid, transformation_gens};
use monoext::monoid::builders::cyclic_group;
use monoext::monoid::{
    green_structure, group_completion, maximal_subgroup, monoid_from_json, structural_flags, system_from_section, transformation_monoid, CrossedSystem,
    FiniteMonoid,
};
use proptest::prelude::*;

fn right_ideal(m: &FiniteMonoid, a: usize) -> BTreeSet<usize> {
    (0..m.size()).map(|c| m.mul(a, c)).collect()
}

fn left_ideal(m: &FiniteMonoid, a: usize) -> BTreeSet<usize> {
    (0..m.size()).map(|c| m.mul(c, a)).collect()
}

fn two_sided(m: &FiniteMonoid, a: usize) -> BTreeSet<usize> {
    (0..m.size()).flat_map(|x| (0..m.size()).map(move |y| (x, y))).map(|(x, y)| m.mul(m.mul(x, a), y)).collect()
}

fn parity(f: &[usize]) -> bool {
    let mut seen = vec![false; f.len()];
    let mut odd = false;
    for s in 0..f.len() {
        let (mut i, mut len) = (s, 0);
        while !seen[i] {
            seen[i] = true;
            i = f[i];
            len += 1;
        }
        odd ^= len > 0 && len % 2 == 0;
    }
    odd
}

/// Actions of a transformation monoid on `Z/k` by endomorphisms: trivial,
/// identity on units and zero elsewhere, or the sign of units (for `k = 3`).
fn actions(top: &FiniteMonoid, maps: &[Vec<usize>], k: usize) -> Vec<Vec<Vec<usize>>> {
    let units: Vec<bool> = (0..top.size()).map(|n| top.units().contains(&n)).collect();
    let mut out = vec![vec![(0..k).collect(); top.size()]];
    out.push((0..top.size()).map(|n| if units[n] { (0..k).collect() } else { vec![0; k] }).collect());
    if k == 3 {
        out.push(
            (0..top.size())
                .map(|n| match (units[n], parity(&maps[n])) {
                    (false, _) => vec![0; k],
                    (true, false) => (0..k).collect(),
                    (true, true) => (0..k).map(|g| (k - g) % k).collect(),
                })
                .collect(),
        );
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn r_classes_match_right_ideals(m in small_monoid()) {
        let g = green_structure(&m);
        let ideals: Vec<_> = (0..m.size()).map(|a| right_ideal(&m, a)).collect();
        for a in 0..m.size() {
            for b in 0..m.size() {
                prop_assert_eq!(g.r_class[a] == g.r_class[b], ideals[a] == ideals[b]);
            }
        }
    }

    #[test]
    fn opposite_swaps_r_and_l(m in small_monoid()) {
        let g = green_structure(&m);
        let op = green_structure(&m.opposite());
        prop_assert_eq!(&op.r_class, &g.l_class);
        prop_assert_eq!(&op.l_class, &g.r_class);
        prop_assert_eq!(&op.j_class, &g.j_class);
    }

    #[test]
    fn regular_j_classes_factor(m in small_monoid()) {
        let g = green_structure(&m);
        for j in 0..g.j_classes.len() {
            let Some(e) = g.idempotent_of(j) else { continue };
            let rs: BTreeSet<usize> = g.j_classes[j].iter().map(|&x| g.r_class[x]).collect();
            let ls: BTreeSet<usize> = g.j_classes[j].iter().map(|&x| g.l_class[x]).collect();
            prop_assert_eq!(g.j_classes[j].len(), rs.len() * ls.len() * maximal_subgroup(&m, e).size());
        }
    }

    #[test]
    fn group_completion_is_multiplicative(m in small_monoid()) {
        let gc = group_completion(&m);
        for a in 0..m.size() {
            for b in 0..m.size() {
                prop_assert_eq!(gc.psi[m.mul(a, b)], gc.group.mul(gc.psi[a], gc.psi[b]));
            }
        }
    }

    #[test]
    fn table_json_roundtrip(m in small_monoid()) {
        prop_assert_eq!(monoid_from_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn semidirect_products_of_groups_by_monoids(gens in (2usize..=3).prop_flat_map(transformation_gens), k in 2usize..=3, which in 0usize..3) {
        let tm = transformation_monoid(gens[0].len(), &gens).unwrap();
        let top = tm.monoid.clone();
        let acts = actions(&top, &tm.maps, k);
        let alpha = acts[which % acts.len()].clone();
        let g = cyclic_group(k).unwrap();
        let prod = CrossedSystem::semidirect(g.clone(), top.clone(), alpha.clone()).build().unwrap();
        let n = &prod.monoid;
        let idx = |x: usize, m: usize| prod.index(x, m);
        // (1)
        if structural_flags(&top).regular {
            prop_assert!(structural_flags(n).regular);
        }
        let image = |m: usize| -> BTreeSet<usize> { (0..k).map(|x| alpha[m][x]).collect() };
        let coset = |h: usize, m: usize| -> BTreeSet<usize> { image(m).into_iter().map(|y| g.mul(h, y)).collect() };
        let (left_n, right_n, two_n): (Vec<_>, Vec<_>, Vec<_>) =
            ((0..n.size()).map(|a| left_ideal(n, a)).collect(), (0..n.size()).map(|a| right_ideal(n, a)).collect(), (0..n.size()).map(|a| two_sided(n, a)).collect());
        let (left_m, right_m, two_m): (Vec<_>, Vec<_>, Vec<_>) =
            ((0..top.size()).map(|a| left_ideal(&top, a)).collect(), (0..top.size()).map(|a| right_ideal(&top, a)).collect(), (0..top.size()).map(|a| two_sided(&top, a)).collect());
        for x in 0..n.size() {
            let (gx, mx) = prod.split(x);
            // (3)
            prop_assert_eq!(n.is_idempotent(x), top.is_idempotent(mx) && alpha[mx][gx] == 0);
            for y in 0..n.size() {
                let (hy, my) = prod.split(y);
                // (2), (5), (6)
                prop_assert_eq!(left_n[x].is_subset(&left_n[y]), left_m[mx].is_subset(&left_m[my]));
                prop_assert_eq!(
                    right_n[x].is_subset(&right_n[y]),
                    right_m[mx].is_subset(&right_m[my]) && coset(gx, mx).is_subset(&coset(hy, my))
                );
                prop_assert_eq!(two_n[x].is_subset(&two_n[y]), two_m[mx].is_subset(&two_m[my]));
            }
        }
        // (4)
        for e in top.idempotents() {
            let here: BTreeSet<usize> = maximal_subgroup(n, idx(0, e)).embedding.unwrap().into_iter().collect();
            let expected: BTreeSet<usize> =
                maximal_subgroup(&top, e).embedding.unwrap().into_iter().flat_map(|u| image(e).into_iter().map(move |x| (x, u))).map(|(x, u)| idx(x, u)).collect();
            prop_assert_eq!(here, expected);
        }
    }

    #[test]
    fn twisting_by_units_gives_isomorphic_products(m in small_monoid(), f in prop::collection::vec(0usize..3, 27)) {
        let g = cyclic_group(3).unwrap();
        let sys = CrossedSystem::semidirect(g.clone(), m.clone(), vec![(0..3).collect(); m.size()]);
        let mut f: Vec<usize> = f.into_iter().cycle().take(m.size()).collect();
        f[0] = 0;
        let twisted = sys.twisted_by(&f).unwrap();
        let (a, b) = (twisted.build().unwrap(), sys.build().unwrap());
        let phi: Vec<usize> = (0..a.monoid.size()).map(|x| { let (gx, n) = a.split(x); b.index(g.mul(gx, f[n]), n) }).collect();
        prop_assert!(a.monoid.is_homomorphism(&phi, &b.monoid));
        let distinct: BTreeSet<usize> = phi.iter().copied().collect();
        prop_assert_eq!(distinct.len(), phi.len());
        prop_assert_eq!(a.projection(), (0..a.monoid.size()).map(|x| b.projection()[phi[x]]).collect::<Vec<_>>());

        // Reading (α, c) back off the section n ↦ (1, n) rebuilds the same table.
        let back = system_from_section(&a.monoid, &g, &m, &a.base_embedding(), &a.section()).unwrap();
        prop_assert_eq!(&back, &twisted);
        prop_assert_eq!(back.build().unwrap().monoid, a.monoid);
    }
}
