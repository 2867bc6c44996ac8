//! Green's relations, structural flags and group completion of a few
//! monoids from the builders.

use monoext::monoid::{builders, green_structure, group_completion, principal_series, structural_flags};

fn main() -> monoext::Result<()> {
    for name in ["t3", "aff(1,3)", "m(2,2)", "band6", "nil3"] {
        let m = builders::named(name)?;
        let g = green_structure(&m);
        let flags = structural_flags(&m);
        let gc = group_completion(&m);
        println!(
            "{name:>9}: |M| = {:>2}, J-classes {}, R-classes {}, L-classes {}, longest J-chain {}",
            m.size(),
            g.j_classes.len(),
            g.r_classes.len(),
            g.l_classes.len(),
            g.longest_j_chain()
        );
        println!(
            "           regular {}, right p.p. {}, left p.p. {}, |G(M)| = {}",
            flags.regular,
            flags.right_pp,
            flags.left_pp,
            gc.group.size()
        );
        let series = principal_series(&g);
        let sizes: Vec<usize> = series.ideals.iter().map(Vec::len).collect();
        println!("           principal series ideal sizes {sizes:?}");
    }
    Ok(())
}
