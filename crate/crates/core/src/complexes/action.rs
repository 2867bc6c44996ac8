//! Group actions on chain complexes and the induced representations on homology.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;

use super::chain::{homology_basis, ChainComplex, SimplicialChains};
use super::nerve::NerveComplex;
use crate::error::{Error, Result};
use crate::linalg::sparse::{self, SparseMatrix};
use crate::linalg::{Field, Matrix, Scalar};
use crate::modules::GroupRep;
use crate::monoid::GroupTable;

/// A group acting on a complex by cellular maps, one map per group element.
/// Cells that degenerate or land in the relative part map to zero.
pub enum GroupAction<'a> {
    /// Vertex maps on a simplicial chain complex.
    Simplicial { chains: &'a SimplicialChains, vertex_maps: Vec<Vec<usize>> },
    /// Object maps on a nerve that commute with the monoid action.
    Nerve { nerve: &'a NerveComplex, object_maps: Vec<Vec<usize>> },
}

impl GroupAction<'_> {
    pub fn complex(&self) -> &ChainComplex {
        match self {
            GroupAction::Simplicial { chains, .. } => &chains.complex,
            GroupAction::Nerve { nerve, .. } => &nerve.complex,
        }
    }

    fn len(&self) -> usize {
        match self {
            GroupAction::Simplicial { vertex_maps, .. } => vertex_maps.len(),
            GroupAction::Nerve { object_maps, .. } => object_maps.len(),
        }
    }
}

/// Per-degree lookup from basis simplex to index.
struct Lookup<'a> {
    pos: HashMap<i64, HashMap<&'a [u32], usize>>,
}

impl<'a> Lookup<'a> {
    fn new(chains: &'a SimplicialChains, degrees: &[i64]) -> Self {
        let mut pos = HashMap::new();
        for &d in degrees {
            if d >= 0 && (d as usize) < chains.bases.len() {
                pos.insert(d, chains.bases[d as usize].iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect());
            }
        }
        Lookup { pos }
    }
}

fn image_of_cell(action: &GroupAction, lookup: &Lookup, g: usize, d: i64, cell: usize) -> Option<(usize, i64)> {
    match action {
        GroupAction::Simplicial { chains, vertex_maps } => {
            if d < 0 {
                return Some((cell, 1));
            }
            let s = &chains.bases[d as usize][cell];
            let (img, sign) = chains_complex_map(chains, s, &vertex_maps[g])?;
            lookup.pos.get(&d)?.get(img.as_slice()).map(|&i| (i, sign))
        }
        GroupAction::Nerve { nerve, object_maps } => nerve.object_map(&object_maps[g], d, cell),
    }
}

fn chains_complex_map(chains: &SimplicialChains, s: &[u32], f: &[usize]) -> Option<(Vec<u32>, i64)> {
    // All bases come from one ambient complex ordered by the same vertex ranks;
    // sort the image by those ranks.
    let mut img: Vec<u32> = s.iter().map(|&v| f[v as usize] as u32).collect();
    let rank = |v: u32| chains.vertex_rank.get(v as usize).copied().unwrap_or(v as usize);
    let mut sign = 1i64;
    for i in 1..img.len() {
        let mut j = i;
        while j > 0 && rank(img[j - 1]) > rank(img[j]) {
            img.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if img.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((img, sign))
}

fn apply(action: &GroupAction, lookup: &Lookup, g: usize, d: i64, v: &[Scalar], out_len: usize, field: Field) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); out_len];
    for (cell, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        if let Some((t, s)) = image_of_cell(action, lookup, g, d, cell) {
            out[t] += x * Scalar::from_integer(s.into());
        }
    }
    out.into_iter().map(|y| field.reduce(&y).unwrap()).collect()
}

/// Checks that every group element commutes with the boundary in the
/// given degree.
fn check_chain_map(action: &GroupAction, lookup: &Lookup, d: i64) -> Result<()> {
    let c = action.complex();
    let Some(b) = c.boundary(d) else { return Ok(()) };
    if d <= c.min_degree {
        return Ok(());
    }
    for g in 0..action.len() {
        for cell in 0..b.ncols {
            // ∂(g σ)
            let mut lhs: HashMap<usize, i64> = HashMap::new();
            if let Some((t, s)) = image_of_cell(action, lookup, g, d, cell) {
                for &(r, v) in b.column(t) {
                    *lhs.entry(r as usize).or_default() += s * v as i64;
                }
            }
            // g ∂σ
            let mut rhs: HashMap<usize, i64> = HashMap::new();
            for &(r, v) in b.column(cell) {
                if let Some((t, s)) = image_of_cell(action, lookup, g, d - 1, r as usize) {
                    *rhs.entry(t).or_default() += s * v as i64;
                }
            }
            lhs.retain(|_, v| *v != 0);
            rhs.retain(|_, v| *v != 0);
            if lhs != rhs {
                return Err(Error::NotChainMap(format!("group element {g} does not commute with ∂ on cell {cell} of degree {d}")));
            }
        }
    }
    Ok(())
}

/// The representation of `group` on `H_d` in the basis of cycle
/// representatives from `homology_basis`; checked to be multiplicative.
pub fn g_action_on_homology(group: Arc<GroupTable>, action: &GroupAction, degree: i64, field: Field) -> Result<GroupRep> {
    if action.len() != group.size() {
        return Err(Error::Dimension("one cell map per group element is required".into()));
    }
    let c = action.complex();
    let degrees = [degree - 1, degree, degree + 1];
    let lookup = match action {
        GroupAction::Simplicial { chains, .. } => Lookup::new(chains, &degrees),
        GroupAction::Nerve { .. } => Lookup { pos: HashMap::new() },
    };
    check_chain_map(action, &lookup, degree)?;
    check_chain_map(action, &lookup, degree + 1)?;
    let hb = homology_basis(c, field, degree)?;
    let h = hb.reps.len();
    let n = c.dim(degree);
    if h == 0 {
        let rho = vec![Matrix::zeros(field, 0, 0); group.size()];
        return GroupRep::new(group, field, 0, rho);
    }
    // Columns: homology representatives, then a basis of the boundaries.
    let basis: Vec<&Vec<Scalar>> = hb.reps.iter().chain(hb.boundaries.iter()).collect();
    let mut a = SparseMatrix::new(basis.len());
    for i in 0..n {
        a.push_row(basis.iter().enumerate().filter(|(_, v)| !v[i].is_zero()).map(|(j, v)| (j as u32, v[i].clone())).collect());
    }
    let mut rho = Vec::with_capacity(group.size());
    for g in 0..group.size() {
        let rhs: Vec<Vec<Scalar>> = hb.reps.iter().map(|z| apply(action, &lookup, g, degree, z, n, field)).collect();
        let x = sparse::solve(field, &a, &rhs)?
            .ok_or_else(|| Error::NotChainMap(format!("group element {g} does not preserve cycles")))?;
        let mut m = Matrix::zeros(field, h, h);
        for (col, sol) in x.iter().enumerate() {
            for row in 0..h {
                m.set(row, col, sol[row].clone());
            }
        }
        rho.push(m);
    }
    GroupRep::new(group, field, h, rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::chain::chain_complex;
    use crate::complexes::simplicial::SimplicialComplex;

    #[test]
    fn rotation_and_reflection_of_circle() {
        // Z/2 swapping vertices 1 and 2 of a triangle boundary reverses orientation.
        let bdry = SimplicialComplex::from_facets(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let chains = chain_complex(&bdry, None, true).unwrap();
        let z2 = Arc::new(GroupTable::from_monoid(&crate::monoid::builders::cyclic_group(2).unwrap()).unwrap());
        let action = GroupAction::Simplicial { chains: &chains, vertex_maps: vec![vec![0, 1, 2], vec![0, 2, 1]] };
        let rep = g_action_on_homology(z2, &action, 1, Field::Rational).unwrap();
        assert_eq!(rep.dim, 1);
        assert_eq!(rep.rho[1].get(0, 0), &Scalar::from_integer((-1).into()));
    }
}
