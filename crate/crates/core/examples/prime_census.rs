//! Primes up to Q sorted into residue classes modulo k.
//!
//! ```text
//! cargo run --release --example prime_census -- 1000000 10
//! ```

use dirichlet::euler_phi;
use dirichlet::lseries::prime_census;

fn main() -> dirichlet::Result<()> {
    let mut args = std::env::args().skip(1);
    let q: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(1_000_000);
    let moduli: Vec<u64> = args.filter_map(|a| a.parse().ok()).collect();
    let moduli = if moduli.is_empty() { vec![3, 4, 5, 8, 10] } else { moduli };

    for k in moduli {
        let census = prime_census(q, k)?;
        let expected = 1.0 / euler_phi(k)? as f64;
        println!("k = {k}, pi({q}) = {}", census.total);
        for (r, count) in census.unit_classes() {
            let share = count as f64 / census.total as f64;
            println!(
                "  {r:>3} mod {k}: {count:>7}  share {share:.5}  (1/phi = {expected:.5}, off by {:+.2}%)",
                100.0 * (share / expected - 1.0)
            );
        }
    }
    Ok(())
}
