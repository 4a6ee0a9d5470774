//! The character-weighted sum of log L(s, chi) grows without bound as s
//! falls toward 1, and tracks phi(k) times the prime sum over one residue
//! class up to a bounded error. Also shows the pole of the principal series.
//!
//! ```text
//! cargo run --release --example progression_divergence -- 4 3
//! ```

use dirichlet::lseries::{character_weighted_logl, principal_pole_check, principal_residue};
use dirichlet::EvalOptions;

fn main() -> dirichlet::Result<()> {
    let mut args = std::env::args().skip(1);
    let k: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(4);
    let m: i64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);
    let opts = EvalOptions::default();

    println!("k = {k}, m = {m}");
    println!("{:>6} {:>14} {:>14} {:>12} {:>12}", "s", "lhs", "phi*primes", "gap", "envelope");
    for s in [2.0, 1.5, 1.2, 1.1, 1.05, 1.01] {
        let r = character_weighted_logl(s, k, m, &opts)?;
        println!(
            "{s:>6} {:>14.8} {:>14.8} {:>12.6} {:>12.4}",
            r.lhs,
            r.class_sum,
            r.discrepancy,
            r.envelope()
        );
    }

    println!("\neps * L(1 + eps, principal mod {k}) -> {:.6}", principal_residue(k)?);
    for (eps, v) in principal_pole_check(k, &[1e-1, 1e-2, 1e-3, 1e-4])? {
        println!("  eps = {eps:<7} {v:.8}");
    }
    Ok(())
}
