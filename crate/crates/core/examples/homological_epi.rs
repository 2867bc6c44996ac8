//! Homological epimorphisms: `Aff(1,2) -> M_1(F_2)` over Q, and the
//! projection `Z/2 ⋊ 1 -> 1`, which fails in characteristic 2.

use monoext::complexes::DEFAULT_CAP;
use monoext::ext::homological_epi_check;
use monoext::linalg::Field;
use monoext::monoid::{affine_monoid, matrix_monoid, CrossedSystem, FiniteMonoid};

fn main() -> monoext::Result<()> {
    let aff = affine_monoid(1, 2)?;
    let mat = matrix_monoid(1, 2)?;
    let phi = aff.linear_part(&mat)?;
    let v = homological_epi_check(&aff.monoid, &mat.monoid, &phi, 2, Field::Rational, DEFAULT_CAP)?;
    println!("Aff(1,2) -> M_1(F_2) over Q: Tor {:?}, homological epi {}", v.tor_dims, v.homological_epi_up_to_d);

    let z2 = monoext::monoid::builders::cyclic_group(2)?;
    let one = FiniteMonoid::from_table(&[vec![0]], 0, None)?;
    let prod = CrossedSystem::semidirect(z2, one.clone(), vec![vec![0, 1]]).build()?;
    for field in [Field::Rational, Field::Prime(2)] {
        let v = homological_epi_check(&prod.monoid, &one, &prod.projection(), 2, field, DEFAULT_CAP)?;
        println!("Z/2 x 1 -> 1 over {field}: Tor {:?}, homological epi {}", v.tor_dims, v.homological_epi_up_to_d);
    }
    Ok(())
}
