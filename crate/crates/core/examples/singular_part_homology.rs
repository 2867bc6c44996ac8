//! Reduced homology of the order complex of `Ω(S)`, `S` the singular part,
//! with the action of the unit group. For `T_n` this is a sphere carrying
//! the sign representation; for `Aff(n,q)` a wedge of spheres.

use std::sync::Arc;

use monoext::cli::{load_group_module, load_monoid};
use monoext::complexes::DEFAULT_CAP;
use monoext::ext::{reduced_homology_of_ideal, ComplexKind};
use monoext::linalg::Field;
use monoext::modules::equivariant_hom;
use monoext::monoid::ideal_data;

fn main() -> monoext::Result<()> {
    for (name, top) in [("t3", 1), ("t4", 2), ("aff(1,2)", 1), ("aff(1,3)", 1), ("aff(2,2)", 2)] {
        let l = load_monoid(name)?;
        let data = ideal_data(&l.monoid, 0);
        let group = Arc::new(data.group.clone());
        let h = reduced_homology_of_ideal(&l.monoid, &data, group.clone(), -1..=top, Field::Rational, ComplexKind::OrderComplex, DEFAULT_CAP)?;
        let dims: Vec<(i64, usize)> = h.reps.iter().map(|(d, r)| (*d, r.dim)).collect();
        println!("{name:>9}: reduced dims {dims:?}");
        if name.starts_with('t') {
            let top_rep = &h.reps[&top];
            for w in ["trivial", "sign", "standard"] {
                let wr = load_group_module(w, &l, 0, group.clone(), Field::Rational)?;
                println!("           dim Hom(H_{top}, {w}) = {}", equivariant_hom(top_rep, &wr)?.dim);
            }
        }
    }
    Ok(())
}
