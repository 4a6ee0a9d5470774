//! Orthogonality relations checked exactly: each sum is a formal integer
//! combination of roots of unity, compared against its expected integer by
//! divisibility by a cyclotomic polynomial.
//!
//! ```text
//! cargo run --example exact_orthogonality -- 60
//! ```

use dirichlet::characters::{
    characters_of, orthogonality_over_characters_in, orthogonality_over_group,
    weighted_orthogonality_in,
};
use dirichlet::unit_group::decompose;
use std::sync::Arc;

fn main() -> dirichlet::Result<()> {
    let k: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(15);
    let structure = Arc::new(decompose(k)?);
    let chars = characters_of(&structure)?;
    let units = structure.units();

    let group_ok = chars.iter().filter(|c| orthogonality_over_group(c).holds).count();
    println!("sum over units of chi(n):      {group_ok}/{} exact", chars.len());

    let mut char_ok = 0;
    for &g in &units {
        char_ok += orthogonality_over_characters_in(&chars, g as i64)?.holds as usize;
    }
    println!("sum over chi of chi(g):        {char_ok}/{} exact", units.len());

    let mut weighted_ok = 0;
    for &g in &units {
        for &h in &units {
            weighted_ok += weighted_orthogonality_in(&chars, g as i64, h as i64)?.holds as usize;
        }
    }
    println!("sum over chi of chi(g)conj(h): {weighted_ok}/{} exact", units.len() * units.len());

    // One sum spelled out: its coefficients in powers of zeta_N.
    if let Some(chi) = chars.iter().find(|c| !c.is_principal()) {
        let check = orthogonality_over_group(chi);
        println!(
            "\nchi = L{:?}: coefficients over zeta({}) = {:?}, expected {}, holds {}",
            chi.label(),
            check.sum.order(),
            check.sum.coefficients(),
            check.expected,
            check.holds
        );
    }
    Ok(())
}
