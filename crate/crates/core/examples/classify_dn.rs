//! Irr(W(D_n)) with almost special and 2-special flags.
//!
//! cargo run --example classify_dn -- 6

use almost_special::dn_classification::{enumerate_irr, is_almost_special, is_two_special, verify_two_special_in_almost_special};

fn main() -> anyhow::Result<()> {
    let n: u32 = std::env::args().nth(1).map(|a| a.parse()).transpose()?.unwrap_or(5);
    for label in enumerate_irr(n)? {
        let flags = match (is_almost_special(&label), is_two_special(&label)) {
            (true, true) => "almost special, 2-special",
            (true, false) => "almost special",
            (false, false) => "",
            (false, true) => unreachable!("2-special labels are almost special"),
        };
        println!("{:<28} {flags}", label.to_string());
    }
    if n >= 4 {
        let report = verify_two_special_in_almost_special(n)?;
        println!(
            "D{n}: {} labels, {} almost special, {} 2-special, {} violations",
            report.total,
            report.almost_special,
            report.two_special,
            report.violations.len()
        );
    }
    Ok(())
}
