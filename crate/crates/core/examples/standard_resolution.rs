//! The chain complex of `Δ(M/R)` resolving the trivial module, checked for
//! exactness, equivariance, cellularity and its principal-series layers.

use std::sync::Arc;

use monoext::ext::{ext_via_resolution, standard_resolution};
use monoext::linalg::Field;
use monoext::modules::MonRep;
use monoext::monoid::builders;

fn main() -> monoext::Result<()> {
    for name in ["aff(1,3)", "aff(1,2)", "t3", "band6"] {
        let m = Arc::new(builders::named(name)?);
        let res = standard_resolution(m.clone(), Field::Rational, true)?;
        let r = &res.report;
        println!(
            "{name:>8}: length {}, dims {:?}, verified {}, gldim hypotheses {}, projective terms {:?}",
            r.length,
            r.dims.values().collect::<Vec<_>>(),
            r.verified,
            r.hypotheses_hold,
            r.projective.values().collect::<Vec<_>>()
        );
        let ext = ext_via_resolution(&res, &MonRep::trivial(m, Field::Rational), 2)?;
        println!("          Ext^n(Q, Q) through the resolution: {:?}", ext.dims);
    }
    Ok(())
}
