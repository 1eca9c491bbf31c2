//! Strata of the E8, F4 and G2 families and their groups H'/H.
//!
//! cargo run --example strata

use almost_special::strata_map::{gamma_sigma, special_stratum_kind, strata_table, StrataTable};

fn main() -> anyhow::Result<()> {
    for t in StrataTable::ALL {
        println!("{t} (family group {})", t.family_group());
        for e in strata_table(t) {
            let kind = gamma_sigma(&e)?;
            let note = if e.has_unipotent_class { "contains a unipotent class" } else { "" };
            println!("  {:<8} {:>4}/{:<4} = {:<3} {note}", e.rep.to_string(), e.upper_name, e.lower_name, kind.to_string());
        }
        println!("  special stratum: {}", special_stratum_kind(t)?);
    }
    Ok(())
}
