//! Decomposition of `(Z/kZ)*` into cyclic factors, and the index vector of
//! every unit.
//!
//! ```text
//! cargo run --example unit_group -- 120
//! ```

use dirichlet::unit_group::{decompose, FactorKind};

fn main() -> dirichlet::Result<()> {
    let k: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(24);
    let g = decompose(k)?;
    println!("(Z/{k}Z)*: order {}, exponent {}", g.order(), g.exponent());
    for f in &g.factors {
        let what = match f.kind {
            FactorKind::MinusOne => "-1 on the 2-part".to_owned(),
            FactorKind::Five => "5 on the 2-part".to_owned(),
            FactorKind::OddPrimePower { prime, exponent } => {
                format!("primitive root {} mod {prime}^{exponent}", f.local_generator)
            }
        };
        println!("  generator {:>4}  order {:>3}  ({what})", f.generator, f.order);
    }

    println!("unit -> index vector -> unit");
    for n in g.units() {
        let v = g.index_vector(n as i64)?;
        let back = g.reconstruct(v.exponents())?;
        println!("  {n:>4} -> {:?} -> {back}", v.exponents());
    }
    Ok(())
}
