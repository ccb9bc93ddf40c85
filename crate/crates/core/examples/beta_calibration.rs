//! Monte Carlo calibration of the MST constant beta_m next to the large-m
//! closed form, saved as a table the estimator can load.
//!
//!     cargo run --release --example beta_calibration -- [table.csv]

use gmst::estimator::approx_beta;
use gmst::mst::{estimate_beta, BetaTable};

fn main() -> gmst::Result<()> {
    let mut table = BetaTable::default();
    println!("{:>3} {:>6} {:>10} {:>9} {:>10}", "m", "n", "beta_hat", "stderr", "approx");
    for m in 2..=5 {
        for n in [512, 2048] {
            let est = estimate_beta(m, 1.0, n, 16, 7)?;
            println!("{m:>3} {n:>6} {:>10.4} {:>9.4} {:>10.4}", est.beta_hat, est.stderr, approx_beta(m, 1.0));
            table.insert(est);
        }
    }
    if let Some(path) = std::env::args().nth(1) {
        table.save(&path)?;
        println!("wrote {path}");
    }
    Ok(())
}
