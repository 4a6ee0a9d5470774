//! L(s, chi) three ways: the direct series with a certified tail, the
//! truncated Euler product, and exp of the prime-power logarithm.
//!
//! ```text
//! cargo run --release --example euler_product -- 4 2
//! ```

use dirichlet::lseries::{euler_product, l_direct, log_l_prime_sum, zeta};
use dirichlet::{enumerate_characters, EvalOptions};

fn main() -> dirichlet::Result<()> {
    let mut args = std::env::args().skip(1);
    let k: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(5);
    let s: f64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(2.0);
    let opts = EvalOptions::default();

    let z = zeta(s)?;
    println!("zeta({s}) = {:.15} (+/- {:.1e})", z.re(), z.truncation_bound);

    for chi in enumerate_characters(k)? {
        let direct = l_direct(s, &chi, &opts)?;
        let product = euler_product(s, &chi, opts.prime_bound)?;
        let via_log = log_l_prime_sum(s, &chi, opts.prime_bound, opts.power_depth)?.exp();
        println!("L{:?} ({})", chi.label(), chi.classify());
        println!("  direct  {:.12} (+/- {:.1e})", direct.value, direct.truncation_bound);
        println!("  product {:.12} (+/- {:.1e})", product.value, product.truncation_bound);
        println!("  exp log {:.12} (+/- {:.1e})", via_log.value, via_log.truncation_bound);
        println!("  |direct - product| = {:.2e}", (direct.value - product.value).norm());
    }
    Ok(())
}
