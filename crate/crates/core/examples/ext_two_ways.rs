//! `Ext^n_{QT_3}(Q, W)` for the irreducibles `W` of `S_3` inflated to
//! `T_3`, from the homology of `Ω(S)` and from the bar resolution.

use std::sync::Arc;
use std::time::Instant;

use monoext::cli::{load_group_module, load_monoid};
use monoext::complexes::DEFAULT_CAP;
use monoext::ext::{ext_oracle, ext_topological, DEFAULT_COCHAIN_CAP};
use monoext::linalg::Field;
use monoext::modules::{coinduce, MonRep};
use monoext::monoid::ideal_data;

fn main() -> monoext::Result<()> {
    let l = load_monoid("t3")?;
    let m = &l.monoid;
    let data = ideal_data(m, 0);
    let group = Arc::new(data.group.clone());
    let k = MonRep::trivial(m.clone(), Field::Rational);
    // Over the identity, Coind_1(W) is W inflated along the units.
    let max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    for name in ["trivial", "sign", "standard"] {
        let w = load_group_module(name, &l, 0, group.clone(), Field::Rational)?;
        let t = Instant::now();
        let top = ext_topological(&k, 0, &w, 0..=max, DEFAULT_CAP)?;
        let t_top = t.elapsed();
        let t = Instant::now();
        let oracle = ext_oracle(&k, &coinduce(m.clone(), &data, &w)?, max, DEFAULT_COCHAIN_CAP)?;
        println!(
            "{name:>8}: topological {:?} ({t_top:.2?}), oracle {:?} ({:.2?}, certified {})",
            top.dims,
            oracle.dims,
            t.elapsed(),
            oracle.certified
        );
    }
    Ok(())
}
