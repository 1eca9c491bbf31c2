//! Tensoring with sign by complementing symbol rows.
//!
//! cargo run --example sign_twist

use almost_special::dn_classification::{in_x, in_y};
use almost_special::sign_twist::{complements, tensor_sign, tensor_sign_class};
use almost_special::symbols::sym;

fn main() -> anyhow::Result<()> {
    let s = sym("0 1 2 3 4 / 2 3 4 5 6");
    let data = complements(&s, 6)?;
    println!("{s}: complements in 0..=6 are A={:?} B={:?}", data.top, data.bottom);

    let t = tensor_sign(&s, 6)?;
    println!("twist           {t}");
    for (name, symbol) in [("original", &s), ("twisted", &t)] {
        let c = symbol.canonical()?;
        println!("{name:<9} rank {} almost special {} 2-special {}", c.rank(), in_y(&c)?, in_x(&c)?);
    }

    // A larger cutoff lands in the same class.
    for cutoff in 6..=9 {
        println!("cutoff {cutoff}: {} ~ {}", tensor_sign(&s, cutoff)?, tensor_sign(&s, cutoff)?.canonical()?);
    }

    let d = sym("2 / 2").canonical()?;
    println!("degenerate {d} -> {}", tensor_sign_class(&d));
    Ok(())
}
