//! Cataloged subgroups of S3, S4, S5, quotients and identification.
//!
//! cargo run --example subgroup_quotients

use almost_special::perm_groups::{catalog, identify, reference_fingerprints, resolve_pair, GroupKind};

fn main() -> anyhow::Result<()> {
    for (kind, fp) in reference_fingerprints() {
        println!("{kind:<6} {fp}");
    }
    println!();
    for (name, g) in catalog(&GroupKind::S5)? {
        let gens: Vec<_> = g.generators().iter().map(|p| p.to_string()).collect();
        println!("S5 > {name:<5} order {:<4} <{}>", g.order(), gens.join(", "));
    }
    println!();
    for (upper, lower) in [("S3S2", "S2"), ("S3S2", "S3"), ("D8", "S2S2"), ("S5", "1")] {
        let pair = resolve_pair(&GroupKind::S5, upper, lower)?;
        let gens: Vec<_> = pair.lower.generators().iter().map(|p| p.to_string()).collect();
        let q = pair.quotient()?;
        println!("{upper}/{lower} with H = <{}>: order {}, {}", gens.join(", "), q.order(), identify(&q.table));
    }
    Ok(())
}
