//! Primitive roots and index tables for a few odd prime powers.
//!
//! ```text
//! cargo run --example primitive_roots -- 11 13 27
//! ```

use dirichlet::arith::{multiplicative_order, power_table};
use dirichlet::{euler_phi, find_primitive_root, index_of};

fn main() -> dirichlet::Result<()> {
    let moduli: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let moduli = if moduli.is_empty() { vec![7, 11, 13, 25] } else { moduli };

    for q in moduli {
        let g = find_primitive_root(q)?;
        let phi = euler_phi(q)?;
        let order = multiplicative_order(g, q).unwrap_or(0);
        println!("q = {q}: smallest primitive root {g}, order {order} = phi(q) = {phi}");

        let table = power_table(g, q)?;
        let powers: Vec<String> = table.powers().iter().map(u64::to_string).collect();
        println!("  g^0 .. g^{}: {}", phi - 1, powers.join(" "));

        // Non-units have no index and are skipped.
        let indices: Vec<String> = (1..q as i64)
            .filter_map(|n| index_of(n, g, q).ok().map(|i| format!("{n}:{i}")))
            .collect();
        println!("  ind(n): {}", indices.join(" "));
    }
    Ok(())
}
