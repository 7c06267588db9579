//! Run every verification battery against a unit-cutoff mirror and print
//! the per-check report.
//!
//! ```bash
//! cargo run --release --example verify_all
//! ```

use vacuum_mirror::quadrature::QuadratureConfig;
use vacuum_mirror::verify::{run_suite, Overrides, Suite};
use vacuum_mirror::MirrorModel;

fn main() {
    let model = MirrorModel::new(1.0).expect("valid cutoff");
    let cfg = QuadratureConfig::default();
    let checks = run_suite(&model, Suite::All, &cfg, &Overrides::new());

    println!(
        "{:<34} {:>14} {:>12} {:>8}",
        "check", "residual", "threshold", "verdict"
    );
    let mut failed = 0;
    for c in &checks {
        println!(
            "{:<34} {:>14.6e} {:>12.1e} {:>8}",
            c.name,
            c.residual,
            c.threshold,
            if c.passed { "pass" } else { "FAIL" }
        );
        if !c.passed {
            failed += 1;
        }
    }
    println!("\n{} checks, {} failed", checks.len(), failed);
}
