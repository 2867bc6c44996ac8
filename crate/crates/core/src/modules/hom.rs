//! Spaces of module homomorphisms.

use rayon::prelude::*;

use super::rep::{GroupRep, MonRep};
use crate::error::{invalid, Result};
use crate::linalg::{sparse, Field, Matrix, Scalar, SparseMatrix};

/// A basis of `Hom_{KG}(U, V)`: matrices `f` with `f ρ_U(g) = ρ_V(g) f`.
#[derive(Clone, Debug)]
pub struct EquivariantHomSpace {
    pub source_dim: usize,
    pub target_dim: usize,
    pub basis: Vec<Matrix>,
    pub dim: usize,
}

/// Solves `f A_k = B_k f` for all pairs; the unknown `f` is
/// `target × source`, entry `(i, j)` at index `i·source + j`.
pub fn intertwiners(field: Field, pairs: &[(&Matrix, &Matrix)], source: usize, target: usize) -> Result<Vec<Matrix>> {
    let n = source * target;
    if n == 0 {
        return Ok(Vec::new());
    }
    let blocks: Vec<Vec<Vec<(u32, Scalar)>>> = pairs
        .par_iter()
        .map(|(a, b)| {
            let mut rows = Vec::with_capacity(n);
            for i in 0..target {
                for j in 0..source {
                    let mut row = Vec::new();
                    for k in 0..source {
                        let x = a.get(k, j);
                        if !num_traits::Zero::is_zero(x) {
                            row.push(((i * source + k) as u32, x.clone()));
                        }
                    }
                    for k in 0..target {
                        let x = b.get(i, k);
                        if !num_traits::Zero::is_zero(x) {
                            row.push(((k * source + j) as u32, -x.clone()));
                        }
                    }
                    rows.push(row);
                }
            }
            rows
        })
        .collect();
    let mut sys = SparseMatrix::new(n);
    for rows in blocks {
        for r in rows {
            sys.push_row(r);
        }
    }
    let kern = sparse::kernel(field, &sys)?;
    Ok(kern
        .into_iter()
        .map(|v| {
            let mut f = Matrix::zeros(field, target, source);
            for (c, x) in v {
                let c = c as usize;
                f.set(c / source, c % source, x);
            }
            f
        })
        .collect())
}

/// `Hom_{KG}(U, V)` solved over a generating set of the group.
pub fn equivariant_hom(u: &GroupRep, v: &GroupRep) -> Result<EquivariantHomSpace> {
    if u.group.size() != v.group.size() || u.group.embedding != v.group.embedding || u.field != v.field {
        return invalid("representations are over different groups or fields");
    }
    let gens = u.group.generators();
    let pairs: Vec<(&Matrix, &Matrix)> = gens.iter().map(|&g| (&u.rho[g], &v.rho[g])).collect();
    let basis = intertwiners(u.field, &pairs, u.dim, v.dim)?;
    Ok(EquivariantHomSpace { source_dim: u.dim, target_dim: v.dim, dim: basis.len(), basis })
}

/// `Hom_{KM}(U, V)` solved over the monoid generators.
pub fn monoid_hom(u: &MonRep, v: &MonRep) -> Result<EquivariantHomSpace> {
    if u.monoid.size() != v.monoid.size() || u.field != v.field {
        return invalid("modules are over different monoids or fields");
    }
    let gens = u.monoid.generators();
    let pairs: Vec<(&Matrix, &Matrix)> = gens.iter().map(|&g| (&u.rho[g], &v.rho[g])).collect();
    let basis = intertwiners(u.field, &pairs, u.dim, v.dim)?;
    Ok(EquivariantHomSpace { source_dim: u.dim, target_dim: v.dim, dim: basis.len(), basis })
}

/// `V^M = {v : mv = v for all m}`, the module of invariants.
pub fn invariants_dim(v: &MonRep) -> Result<usize> {
    let triv = MonRep::trivial(v.monoid.clone(), v.field);
    Ok(monoid_hom(&triv, v)?.dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules::fixtures::*;
    use crate::monoid::builders::*;
    use crate::monoid::maximal_subgroup;
    use std::sync::Arc;

    #[test]
    fn schur_for_s3() {
        let s3 = symmetric_group(3).unwrap();
        let g = Arc::new(maximal_subgroup(&s3.monoid, 0));
        let perms = perms_on_image(&g, &s3.maps, 0);
        let irr = symmetric_irreps(g, Field::Rational, &perms).unwrap();
        for (i, (_, a)) in irr.iter().enumerate() {
            for (j, (_, b)) in irr.iter().enumerate() {
                let h = equivariant_hom(a, b).unwrap();
                assert_eq!(h.dim, usize::from(i == j));
                for f in &h.basis {
                    for x in 0..a.group.size() {
                        assert_eq!(f.mul(&a.rho[x]), b.rho[x].mul(f));
                    }
                }
            }
        }
    }
}
