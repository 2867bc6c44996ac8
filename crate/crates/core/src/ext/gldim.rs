//! Upper bound for the global dimension of regular monoids with right
//! invertible sandwich matrices, and their simple modules as coinduced
//! modules.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{group_algebra_right_inverse, Field, GroupAlgebraMatrix};
use crate::modules::{coinduce, equivariant_hom, GroupRep, MonRep};
use crate::monoid::{green_structure, ideal_data, maximal_subgroup, sandwich_matrix, structural_flags, FiniteMonoid};

/// Per-J-class evidence behind the bound.
#[derive(Clone, Debug)]
pub struct JClassWitness {
    pub j_class: usize,
    pub idempotent: Option<usize>,
    pub group_order: Option<usize>,
    pub characteristic_good: bool,
    /// `(|B|, |A|)` of the sandwich matrix.
    pub sandwich_shape: Option<(usize, usize)>,
    pub right_inverse: Option<GroupAlgebraMatrix>,
}

#[derive(Clone, Debug)]
pub struct GldimBound {
    pub field: Field,
    pub applicable: bool,
    /// Length of a longest chain of J-classes.
    pub chain_length: usize,
    pub regular: bool,
    pub witnesses: Vec<JClassWitness>,
    /// Why the bound does not apply, if it does not.
    pub failures: Vec<String>,
}

impl GldimBound {
    pub fn bound(&self) -> Option<usize> {
        self.applicable.then_some(self.chain_length)
    }

    pub fn to_json(&self) -> Value {
        let witnesses: Vec<Value> = self
            .witnesses
            .iter()
            .map(|w| {
                let q = w.right_inverse.as_ref().map(GroupAlgebraMatrix::to_json);
                json!({
                    "j_class": w.j_class,
                    "idempotent": w.idempotent,
                    "group_order": w.group_order,
                    "characteristic_good": w.characteristic_good,
                    "sandwich_shape": w.sandwich_shape,
                    "right_inverse": q,
                })
            })
            .collect();
        json!({
            "field": self.field.to_string(),
            "applicable": self.applicable,
            "bound": self.bound(),
            "j_chain_length": self.chain_length,
            "regular": self.regular,
            "witnesses": witnesses,
            "failures": self.failures,
        })
    }
}

/// Applicable iff `M` is regular, `char K` divides no maximal subgroup
/// order, and every sandwich matrix is right invertible over its group
/// algebra; the bound is then the length of the longest J-chain.
pub fn global_dimension_bound(m: &FiniteMonoid, field: Field) -> Result<GldimBound> {
    let green = green_structure(m);
    let regular = structural_flags(m).regular;
    let mut failures = Vec::new();
    if !regular {
        failures.push("M is not regular".into());
    }
    let mut witnesses = Vec::new();
    for j in 0..green.j_classes.len() {
        let Some(e) = green.idempotent_of(j) else {
            witnesses.push(JClassWitness {
                j_class: j,
                idempotent: None,
                group_order: None,
                characteristic_good: false,
                sandwich_shape: None,
                right_inverse: None,
            });
            continue;
        };
        let group = maximal_subgroup(m, e);
        let good = field.is_good_for(group.size());
        if !good {
            failures.push(format!("characteristic {} divides |G_e| = {} for J-class {j}", field.characteristic(), group.size()));
        }
        let s = sandwich_matrix(m, &green, j)?;
        let q = group_algebra_right_inverse(&s.entries, &group, field)?;
        if q.is_none() {
            failures.push(format!("sandwich matrix of J-class {j} is not right invertible"));
        }
        witnesses.push(JClassWitness {
            j_class: j,
            idempotent: Some(e),
            group_order: Some(group.size()),
            characteristic_good: good,
            sandwich_shape: Some((s.entries.len(), s.entries.first().map_or(0, |r| r.len()))),
            right_inverse: q,
        });
    }
    Ok(GldimBound { field, applicable: failures.is_empty(), chain_length: green.longest_j_chain(), regular, witnesses, failures })
}

/// A simple module `Coind_e(W)` with its apex.
#[derive(Clone, Debug)]
pub struct SimpleModule {
    pub apex: usize,
    pub idempotent: usize,
    pub name: String,
    pub module: MonRep,
}

/// `Coind_{e_J}(W)` for each supplied irreducible `W` of `G_{e_J}`. The
/// irreducibles are given per idempotent; pairwise non-isomorphism is
/// checked through `Hom` dimensions.
pub fn simple_modules_coind(m: Arc<FiniteMonoid>, field: Field, irreps: &[(usize, Vec<(String, GroupRep)>)]) -> Result<Vec<SimpleModule>> {
    let bound = global_dimension_bound(&m, field)?;
    if !bound.applicable {
        return Err(Error::NotApplicable(bound.failures.join("; ")));
    }
    let green = green_structure(&m);
    let mut seen_j = Vec::new();
    let mut out = Vec::new();
    for (e, list) in irreps {
        let e = *e;
        if e >= m.size() || !m.is_idempotent(e) {
            return Err(Error::Invalid(format!("element {e} is not an idempotent")));
        }
        let j = green.j_class[e];
        if seen_j.contains(&j) {
            return Err(Error::Invalid(format!("J-class {j} is listed twice")));
        }
        seen_j.push(j);
        for (a, (na, wa)) in list.iter().enumerate() {
            for (nb, wb) in &list[a + 1..] {
                if equivariant_hom(wa, wb)?.dim != 0 {
                    return Err(Error::Invalid(format!("irreducibles {na} and {nb} are isomorphic")));
                }
            }
        }
        let data = ideal_data(&m, e);
        for (name, w) in list {
            let module = coinduce(m.clone(), &data, w)?;
            out.push(SimpleModule { apex: j, idempotent: e, name: name.clone(), module });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::builders::*;

    #[test]
    fn affine_line_bound() {
        let a = affine_monoid(1, 3).unwrap().monoid;
        let b = global_dimension_bound(&a, Field::Rational).unwrap();
        assert!(b.applicable);
        assert_eq!(b.bound(), Some(1));
        let bad = global_dimension_bound(&a, Field::Prime(2)).unwrap();
        assert!(!bad.applicable);
    }

    #[test]
    fn nil3_is_not_regular() {
        let b = global_dimension_bound(&nilpotent_three(), Field::Rational).unwrap();
        assert!(!b.applicable && !b.regular);
    }
}
