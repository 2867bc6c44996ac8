//! Global dimension of `QAff(n,q)`: the upper bound from sandwich matrices
//! and the lower bound from `Ext^n(Q, H̃_{n-1})`.

use std::sync::Arc;

use monoext::complexes::DEFAULT_CAP;
use monoext::ext::{ext_topological, global_dimension_bound, reduced_homology_of_ideal, ComplexKind};
use monoext::linalg::Field;
use monoext::modules::MonRep;
use monoext::monoid::{affine_monoid, ideal_data};

fn main() -> monoext::Result<()> {
    for (n, q) in [(1, 2), (1, 3), (2, 2)] {
        let m = Arc::new(affine_monoid(n, q)?.monoid);
        let bound = global_dimension_bound(&m, Field::Rational)?;
        let data = ideal_data(&m, 0);
        let group = Arc::new(data.group.clone());
        let top = n as i64 - 1;
        let h = reduced_homology_of_ideal(&m, &data, group, top..=top, Field::Rational, ComplexKind::OrderComplex, DEFAULT_CAP)?;
        let w = &h.reps[&top];
        let k = MonRep::trivial(m.clone(), Field::Rational);
        let ext = ext_topological(&k, 0, w, n..=n, DEFAULT_CAP)?;
        println!(
            "Aff({n},{q}): |M| = {}, bound {:?}, dim H̃_{top} = {}, dim Ext^{n}(Q, H̃_{top}) = {}",
            m.size(),
            bound.bound(),
            w.dim,
            ext.dims[&n]
        );
    }
    Ok(())
}
