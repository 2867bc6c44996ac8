//! `Tor` of permutation modules from two-sided bar complexes, and the
//! homological epimorphism test for monoid homomorphisms.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::complexes::{homology, two_sided_bar_complex, LeftMSet, RightMSet};
use crate::error::{invalid, Result};
use crate::linalg::Field;
use crate::monoid::FiniteMonoid;

/// `dim Tor_i^{KM}(KX, KY)` for `i ≤ max_n`.
#[derive(Clone, Debug, Serialize)]
pub struct TorReport {
    pub field: String,
    pub dims: BTreeMap<usize, usize>,
    pub certified: bool,
}

pub fn tor_bar(m: &FiniteMonoid, x: &RightMSet, y: &LeftMSet, max_n: usize, field: Field, cap: u128) -> Result<TorReport> {
    let c = two_sided_bar_complex(m, x, y, max_n, cap)?;
    let h = homology(&c, field, 0..=max_n as i64)?;
    let dims = h.dims.iter().map(|(&d, &v)| (d as usize, v)).collect();
    Ok(TorReport { field: field.to_string(), dims, certified: h.certified })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EpiStatus {
    /// Surjective, hence an epimorphism.
    Surjective,
    /// Not surjective; no zig-zag search is attempted.
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct EpiVerdict {
    pub epi_status: EpiStatus,
    /// `dim H_i(B(N, M, N))` for `0 ≤ i ≤ d`.
    pub tor_dims: BTreeMap<usize, usize>,
    /// True when `φ` is surjective and `H_i` vanishes for `1 ≤ i ≤ d`.
    pub homological_epi_up_to_d: bool,
    pub max_degree: usize,
    /// `|N| · dim H_i(M_base)` when `φ` is the projection of a crossed product.
    pub predicted: Option<BTreeMap<usize, usize>>,
    pub certified: bool,
}

/// Tests `φ : M -> N` through `H_i(B(N, M, N), K)`, with `N` a right and a
/// left `M`-set via `φ`.
pub fn homological_epi_check(m: &FiniteMonoid, n: &FiniteMonoid, phi: &[usize], d: usize, field: Field, cap: u128) -> Result<EpiVerdict> {
    if phi.len() != m.size() || phi.iter().any(|&y| y >= n.size()) {
        return invalid("φ has the wrong shape");
    }
    if !m.is_homomorphism(phi, n) {
        return invalid("φ is not a monoid homomorphism");
    }
    let surjective = {
        let mut hit = vec![false; n.size()];
        for &y in phi {
            hit[y] = true;
        }
        hit.into_iter().all(|b| b)
    };
    let x = RightMSet::through_hom(m, n, phi);
    let y = LeftMSet::through_hom(m, n, phi);
    let tor = tor_bar(m, &x, &y, d, field, cap)?;
    let vanish = (1..=d).all(|i| tor.dims.get(&i).copied() == Some(0));
    Ok(EpiVerdict {
        epi_status: if surjective { EpiStatus::Surjective } else { EpiStatus::Unknown },
        homological_epi_up_to_d: surjective && vanish,
        tor_dims: tor.dims,
        max_degree: d,
        predicted: None,
        certified: tor.certified,
    })
}

/// `H_i(B(N, M ⋊ N, N))` predicted as `|N|` copies of `H_i(M_base, K)`,
/// the monoid homology of the base computed from `B(pt, M_base, pt)`.
pub fn crossed_product_prediction(base: &FiniteMonoid, top_size: usize, d: usize, field: Field, cap: u128) -> Result<BTreeMap<usize, usize>> {
    let pt_r = RightMSet::single_point(base);
    let pt_l = LeftMSet::single_point(base);
    let h = tor_bar(base, &pt_r, &pt_l, d, field, cap)?;
    Ok(h.dims.into_iter().map(|(i, v)| (i, v * top_size)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::DEFAULT_CAP;
    use crate::monoid::builders::*;

    #[test]
    fn free_module_has_no_higher_tor() {
        let s3 = symmetric_group(3).unwrap().monoid;
        let r = tor_bar(&s3, &RightMSet::universe(&s3), &LeftMSet::universe(&s3), 2, Field::Rational, DEFAULT_CAP).unwrap();
        assert_eq!(r.dims.values().copied().collect::<Vec<_>>(), vec![6, 0, 0]);
    }

    #[test]
    fn identity_is_a_homological_epi() {
        let m = nilpotent_three();
        let id: Vec<usize> = (0..m.size()).collect();
        let v = homological_epi_check(&m, &m, &id, 2, Field::Rational, DEFAULT_CAP).unwrap();
        assert!(v.homological_epi_up_to_d);
        assert_eq!(v.tor_dims[&0], m.size());
    }

    #[test]
    fn z2_to_trivial_fails_mod_2() {
        let z2 = cyclic_group(2).unwrap();
        let one = FiniteMonoid::from_table(&[vec![0]], 0, None).unwrap();
        let v = homological_epi_check(&z2, &one, &[0, 0], 1, Field::Prime(2), DEFAULT_CAP).unwrap();
        assert_eq!(v.tor_dims[&1], 1);
        assert!(!v.homological_epi_up_to_d);
        let q = homological_epi_check(&z2, &one, &[0, 0], 2, Field::Rational, DEFAULT_CAP).unwrap();
        assert!(q.homological_epi_up_to_d);
    }
}
