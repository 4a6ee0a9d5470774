//! Test-only oracles shared by the integration targets.

#![allow(dead_code)]

use std::collections::BTreeSet;

use dirichlet::DirichletCharacter;

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn units(k: u64) -> Vec<u64> {
    if k == 1 {
        return vec![0];
    }
    (1..k).filter(|&n| gcd(n, k) == 1).collect()
}

/// Value table of a character as exponents of `ζ_M`, `None` off the units.
pub type Table = Vec<Option<u64>>;

/// Every homomorphism `(Z/kZ)* -> μ_M` with `M = φ(k)`, found by growing a
/// subgroup one generator at a time and trying every root for the new
/// generator, rejecting assignments that clash on the closure.
pub fn brute_force_characters(k: u64) -> BTreeSet<Table> {
    let us = units(k);
    let m = us.len() as u64;
    let mut empty: Table = vec![None; k as usize];
    empty[(1 % k) as usize] = Some(0);
    let mut out = BTreeSet::new();
    extend(k, m, &us, empty, &mut out);
    out
}

fn extend(k: u64, m: u64, us: &[u64], table: Table, out: &mut BTreeSet<Table>) {
    let Some(&g) = us.iter().find(|&&u| table[u as usize].is_none()) else {
        out.insert(table);
        return;
    };
    for a in 0..m {
        if let Some(t) = close(k, m, &table, g, a) {
            extend(k, m, us, t, out);
        }
    }
}

/// Adds `g -> ζ_M^a` and closes under multiplication; `None` on a clash.
fn close(k: u64, m: u64, table: &Table, g: u64, a: u64) -> Option<Table> {
    let mut t = table.clone();
    t[g as usize] = Some(a);
    loop {
        let known: Vec<(u64, u64)> = t
            .iter()
            .enumerate()
            .filter_map(|(n, v)| v.map(|e| (n as u64, e)))
            .collect();
        let mut changed = false;
        for &(x, ex) in &known {
            for &(y, ey) in &known {
                let z = (x * y % k) as usize;
                let ez = (ex + ey) % m;
                match t[z] {
                    Some(prev) if prev != ez => return None,
                    Some(_) => {}
                    None => {
                        t[z] = Some(ez);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return Some(t);
        }
    }
}

/// Values of `chi` as exponents of `ζ_m`.
pub fn table_of(chi: &DirichletCharacter, m: u64) -> Table {
    (0..chi.modulus() as i64)
        .map(|n| {
            let v = chi.evaluate(n);
            if v.is_zero() {
                None
            } else {
                Some(v.exponent_in(m).expect("value order divides phi(k)"))
            }
        })
        .collect()
}

/// Primality by trial division.
pub fn is_prime_trial(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `ζ(s)` from `N` direct terms, the integral tail and half the boundary term.
pub fn zeta_oracle(s: f64, n: u64) -> f64 {
    let direct: f64 = (1..=n).rev().map(|j| (j as f64).powf(-s)).sum();
    let nf = n as f64;
    direct + nf.powf(1.0 - s) / (s - 1.0) - 0.5 * nf.powf(-s)
}
