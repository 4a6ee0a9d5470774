//! |L(1, chi)| for every non-principal character modulo k, with the
//! certified truncation bound. A numerical check, not a proof.
//!
//! ```text
//! cargo run --release --example nonvanishing -- 20
//! ```

use dirichlet::lseries::nonvanishing_report;
use dirichlet::EvalOptions;

fn main() -> dirichlet::Result<()> {
    let max_k: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(12);
    let delta = 0.1;
    let mut smallest = f64::INFINITY;
    for k in 3..=max_k {
        for v in nonvanishing_report(k, delta, &EvalOptions::default())? {
            smallest = smallest.min(v.modulus);
            println!(
                "k = {k:>3}  L{:<12} {:<16} |L(1)| = {:.9}  bound {:.1e}  {}",
                format!("{:?}", v.label),
                v.class.to_string(),
                v.modulus,
                v.truncation_bound,
                if v.nonzero { "nonzero" } else { "inconclusive" }
            );
        }
    }
    println!("smallest |L(1, chi)| seen: {smallest:.9}");
    Ok(())
}
