//! Simple modules of `QAff(1,3)` as coinduced modules, and the `Ext`
//! between them from the bar resolution.

use std::sync::Arc;

use monoext::ext::{ext_oracle, simple_modules_coind, DEFAULT_COCHAIN_CAP};
use monoext::linalg::Field;
use monoext::modules::fixtures::{perms_on_image, symmetric_irreps};
use monoext::modules::GroupRep;
use monoext::monoid::{affine_monoid, green_structure, ideal_data};

fn main() -> monoext::Result<()> {
    let aff = affine_monoid(1, 3)?;
    let m = Arc::new(aff.monoid.clone());
    let points: Vec<Vec<usize>> = (0..m.size()).map(|a| aff.point_action(a)).collect();
    let green = green_structure(&m);
    let mut irreps = Vec::new();
    for j in 0..green.j_classes.len() {
        let Some(e) = green.idempotent_of(j) else { continue };
        let g = Arc::new(ideal_data(&m, e).group);
        let list = if g.size() == 1 {
            vec![("trivial".to_string(), GroupRep::trivial(g, Field::Rational))]
        } else {
            let perms = perms_on_image(&g, &points, e);
            symmetric_irreps(g, Field::Rational, &perms)?
        };
        irreps.push((e, list));
    }
    let simples = simple_modules_coind(m.clone(), Field::Rational, &irreps)?;
    for a in &simples {
        for b in &simples {
            let ext = ext_oracle(&a.module, &b.module, 2, DEFAULT_COCHAIN_CAP)?;
            let dims: Vec<usize> = ext.dims.values().copied().collect();
            if dims.iter().any(|&d| d > 0) {
                println!("Ext^*({}@J{}, {}@J{}) = {dims:?}", a.name, a.apex, b.name, b.apex);
            }
        }
    }
    Ok(())
}
