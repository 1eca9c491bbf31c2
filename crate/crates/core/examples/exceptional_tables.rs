//! The E6/E7/E8 tables of almost special representations.
//!
//! cargo run --example exceptional_tables

use almost_special::exceptional_tables::{check_sign_closure, diff_ca_cs2, load_table, sign_twist_facts, GroupType, SignTwistFact};

fn main() -> anyhow::Result<()> {
    for g in GroupType::SIMPLY_LACED_EXCEPTIONAL {
        let table = load_table(g)?;
        let widest = table.rows.iter().max_by_key(|r| r.members.len()).expect("nonempty");
        let diff: Vec<_> = diff_ca_cs2(g)?.iter().map(|l| l.to_string()).collect();
        println!(
            "{g}: {} families, {} almost special, largest family has {} members; not 2-special: {:?}",
            table.rows.len(),
            table.almost_special().len(),
            widest.members.len(),
            diff
        );
        for fact in sign_twist_facts(g)? {
            match fact {
                SignTwistFact::Pair(p) => println!("  {} (x) sgn = {}   [{:?}]", p.left, p.right, p.provenance),
                SignTwistFact::LeavesAlmostSpecial { label, .. } => {
                    println!("  {label} (x) sgn is not almost special")
                }
            }
        }
        let report = check_sign_closure(g)?;
        println!("  {} facts checked against the table", report.checked);
    }
    Ok(())
}
