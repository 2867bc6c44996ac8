//! `Tor` of permutation modules from the two-sided bar complex, and monoid
//! homology `H_n(M, K) = Tor_n(K, K)`.

use monoext::complexes::{LeftMSet, RightMSet, DEFAULT_CAP};
use monoext::ext::tor_bar;
use monoext::linalg::Field;
use monoext::monoid::builders;

fn main() -> monoext::Result<()> {
    for name in ["z2", "z3", "nil3", "semilattice2", "t2"] {
        let m = builders::named(name)?;
        for field in [Field::Rational, Field::Prime(2), Field::Prime(3)] {
            let t = tor_bar(&m, &RightMSet::single_point(&m), &LeftMSet::single_point(&m), 3, field, DEFAULT_CAP)?;
            println!("{name:>12} over {field:>3}: H_* = {:?}", t.dims.values().collect::<Vec<_>>());
        }
    }
    Ok(())
}
