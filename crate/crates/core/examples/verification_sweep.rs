//! All verification sweeps at their default ranges.
//!
//! cargo run --release --example verification_sweep

use almost_special::verify;

fn main() {
    let reports = [
        verify::theorem12(24),
        verify::lemma_b(12, 3),
        verify::sign_closure(20),
        verify::twist_algebra(14),
        verify::tables(),
        verify::strata(),
    ];
    let mut failed = false;
    for r in &reports {
        failed |= !r.passed();
        println!(
            "{:<4} {:<13} {:<18} {:>8} instances {:>8.1} ms",
            if r.passed() { "ok" } else { "FAIL" },
            r.check,
            r.range,
            r.instances,
            r.wall_time_ms
        );
        for v in r.violations.iter().take(5) {
            println!("     {v}");
        }
    }
    if failed {
        std::process::exit(1);
    }
}
