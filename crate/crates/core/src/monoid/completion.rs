//! Group completion `G(M)` computed from an idempotent of the minimal ideal.

use super::green::green_structure;
use super::subgroup::{maximal_subgroup, GroupTable};
use super::table::FiniteMonoid;

/// `G(M) = G_e / N` with `ψ(m) = (eme)N`.
#[derive(Clone, Debug)]
pub struct GroupCompletion {
    /// Idempotent of the minimal ideal used for the construction.
    pub e: usize,
    /// `G_e`.
    pub local_group: GroupTable,
    /// Normal subgroup `N` as indices into `G_e`.
    pub kernel: Vec<usize>,
    pub group: GroupTable,
    /// `ψ` as a map from monoid elements to indices of `group`.
    pub psi: Vec<usize>,
}

pub fn group_completion(m: &FiniteMonoid) -> GroupCompletion {
    let green = green_structure(m);
    let jmin = green.minimal_j();
    let e = green.idempotent_of(jmin).expect("the minimal ideal is regular");
    let local = maximal_subgroup(m, e);
    let emb = local.embedding.clone().unwrap();

    // Products of idempotents of MeM that land in G_e.
    let ideal_idems: Vec<usize> = green.idempotents.iter().copied().filter(|&f| green.j_class[f] == jmin).collect();
    let span = m.closure(&ideal_idems);
    let gens: Vec<usize> = span.ones().filter_map(|x| local.index_of(x)).collect();
    let kernel = local.normal_closure(&gens);
    let (group, coset) = local.quotient(&kernel);
    let pos = |x: usize| emb.iter().position(|&g| g == x).expect("eme lies in G_e");
    let psi = (0..m.size()).map(|x| coset[pos(m.mul(m.mul(e, x), e))]).collect();
    GroupCompletion { e, local_group: local, kernel, group, psi }
}

impl GroupCompletion {
    /// Verifies that `ψ` is a surjective homomorphism.
    pub fn check(&self, m: &FiniteMonoid) -> bool {
        let n = m.size();
        let hom = self.psi[0] == 0 && (0..n).all(|a| (0..n).all(|b| self.psi[m.mul(a, b)] == self.group.mul(self.psi[a], self.psi[b])));
        let mut hit = vec![false; self.group.size()];
        for &g in &self.psi {
            hit[g] = true;
        }
        hom && hit.into_iter().all(|h| h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::builders::*;

    #[test]
    fn completion_of_group_is_itself() {
        let s3 = symmetric_group(3).unwrap().monoid;
        let gc = group_completion(&s3);
        assert_eq!(gc.group.size(), 6);
        assert!(gc.check(&s3));
    }

    #[test]
    fn completion_of_transformation_monoid_is_trivial() {
        let t = full_transformation_monoid(3).unwrap().monoid;
        let gc = group_completion(&t);
        assert_eq!(gc.group.size(), 1);
        assert!(gc.check(&t));
    }

    #[test]
    fn completion_of_group_times_semilattice() {
        let m = cyclic_group(3).unwrap().direct_product(&two_element_semilattice());
        let gc = group_completion(&m);
        assert_eq!(gc.group.size(), 3);
        assert!(gc.check(&m));
    }
}
