//! Lagrange resolvents: recovering the roots of a system from its
//! resolvents, and the cyclotomic case where the p-th roots of unity are
//! ordered by powers of a primitive root.
//!
//! ```text
//! cargo run --example cyclotomy -- 11
//! ```

use dirichlet::find_primitive_root;
use dirichlet::resolvent::{cyclotomy_round_trip, power_ordering, recover_all, resolvents};
use dirichlet::ResolventSystem;
use num_complex::Complex64;

fn main() -> dirichlet::Result<()> {
    let p: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(7);

    let roots: Vec<Complex64> = (1..=5).map(|j| Complex64::new(j as f64, -(j as f64) / 2.0)).collect();
    let sys = ResolventSystem::standard(roots.clone())?;
    let xs = resolvents(&sys);
    let back = recover_all(&xs, sys.omega())?;
    let err = roots.iter().zip(&back).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    println!("generic system of 5 roots: recovery error {err:.1e}");

    let g = find_primitive_root(p)?;
    println!("\np = {p}, g = {g}");
    println!("ordering g^i mod p: {:?}", power_ordering(p, g)?);
    let demo = cyclotomy_round_trip(p, g)?;
    for (i, (x, t)) in demo.resolvents.iter().zip(&demo.recovered).enumerate() {
        println!(
            "  X_{i:<2} = {:>10.6} {:+10.6}i   recovered alpha^{:<3} = {:>9.6} {:+9.6}i",
            x.0, x.1, demo.ordering[i], t.0, t.1
        );
    }
    println!("max recovery error {:.1e}", demo.max_error);
    Ok(())
}
