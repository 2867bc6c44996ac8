//! Right inverses of sandwich matrices over group algebras: `M_2(F_2)` has
//! right invertible sandwich matrices over Q, but not over F_2.

use monoext::linalg::{group_algebra_right_inverse, Field};
use monoext::monoid::{builders, green_structure, maximal_subgroup, sandwich_matrix};

fn main() -> monoext::Result<()> {
    let m = builders::named("m(2,2)")?;
    let green = green_structure(&m);
    for field in [Field::Rational, Field::Prime(2), Field::Prime(3)] {
        for j in 0..green.j_classes.len() {
            let Some(e) = green.idempotent_of(j) else { continue };
            let s = sandwich_matrix(&m, &green, j)?;
            let g = maximal_subgroup(&m, e);
            let q = group_algebra_right_inverse(&s.entries, &g, field)?;
            println!(
                "{field}: J-class {j} ({}x{} over a group of order {}): {}",
                s.entries.len(),
                s.entries.first().map_or(0, Vec::len),
                g.size(),
                if q.is_some() { "right invertible" } else { "no right inverse" }
            );
        }
    }
    Ok(())
}
