//! Lagrange resolvents and cyclotomy.
//!
//! For roots `t_0 … t_{n-1}` and a primitive `n`-th root of unity `ω`, the
//! resolvents are `x_i = Σ_j ω^(ij) t_j`. Multiplying by `ω^(-ik)` and summing
//! isolates `t_k = (1/n) Σ_i ω^(-ik) x_i`, because every other column is a
//! full sum of `n`-th roots of unity.
//!
//! In cyclotomy the roots are the nonzero powers of `α = e^(2πi/p)` taken in
//! primitive-root order, `t_i = α^(g^i)`, so that raising to `g^j` shifts
//! `t_i` to `t_{i+j}`.

use num_complex::Complex64;
use serde::Serialize;

use crate::arith::{is_prime, multiplicative_order, mul_mod};
use crate::cyclotomic::{unit_circle, RootValue};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct ResolventSystem {
    roots: Vec<Complex64>,
    omega: RootValue,
}

/// `(n, e)` for a primitive root of unity `ζ_n^e` of order exactly `n`.
fn primitive_parts(omega: RootValue, n: usize) -> Result<(u64, u64)> {
    match omega {
        RootValue::Root { order, exponent } if order == n as u64 => {
            if crate::arith::gcd(exponent, order) == 1 {
                Ok((order, exponent))
            } else {
                Err(Error::NonPrimitiveOmega(order))
            }
        }
        RootValue::Root { order, .. } => Err(Error::NonPrimitiveOmega(order)),
        RootValue::Zero => Err(Error::NonPrimitiveOmega(0)),
    }
}

impl ResolventSystem {
    pub fn new(roots: Vec<Complex64>, omega: RootValue) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::NotPositive("number of roots"));
        }
        primitive_parts(omega, roots.len())?;
        Ok(ResolventSystem { roots, omega })
    }

    /// System with `ω = e^(2πi/n)`.
    pub fn standard(roots: Vec<Complex64>) -> Result<Self> {
        let n = roots.len() as u64;
        Self::new(roots, RootValue::root(n.max(1), 1))
    }

    pub fn n(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Complex64] {
        &self.roots
    }

    pub fn omega(&self) -> RootValue {
        self.omega
    }
}

/// `x_i = Σ_j ω^(ij) t_j` for `i = 0 … n-1`.
pub fn resolvents(sys: &ResolventSystem) -> Vec<Complex64> {
    let n = sys.n();
    let (order, e) = primitive_parts(sys.omega, n).expect("validated on construction");
    (0..n as u64)
        .map(|i| {
            sys.roots
                .iter()
                .enumerate()
                .map(|(j, t)| unit_circle(mul_mod(e, i * j as u64 % order, order), order) * t)
                .sum()
        })
        .collect()
}

/// `t_k = (1/n) Σ_i ω^(-ik) x_i`.
pub fn recover(x: &[Complex64], omega: RootValue, k: usize) -> Result<Complex64> {
    let n = x.len();
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, len: n });
    }
    let (order, e) = primitive_parts(omega, n)?;
    let sum: Complex64 = x
        .iter()
        .enumerate()
        .map(|(i, xi)| {
            let rotation = (order - mul_mod(e, (i * k) as u64 % order, order)) % order;
            unit_circle(rotation, order) * xi
        })
        .sum();
    Ok(sum / n as f64)
}

pub fn recover_all(x: &[Complex64], omega: RootValue) -> Result<Vec<Complex64>> {
    (0..x.len()).map(|k| recover(x, omega, k)).collect()
}

fn check_primitive_mod_prime(p: u64, g: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if multiplicative_order(g % p, p) != Some(p - 1) {
        return Err(Error::NotPrimitive {
            generator: g,
            modulus: p,
        });
    }
    Ok(())
}

/// `[g^0, g^1, …, g^(p-2)] mod p`.
pub fn power_ordering(p: u64, g: u64) -> Result<Vec<u64>> {
    check_primitive_mod_prime(p, g)?;
    Ok(std::iter::successors(Some(1u64), |&x| Some(x * g % p))
        .take((p - 1) as usize)
        .collect())
}

/// `Σ_{i=0}^{p-2} α^(g^i) ω^i` with `α = e^(2πi/p)` and
/// `ω = e^(2πi · ω_exponent / (p-1))`.
pub fn cyclotomic_resolvent(p: u64, g: u64, omega_exponent: i64) -> Result<Complex64> {
    let order = power_ordering(p, g)?;
    let n = p - 1;
    let e = crate::arith::reduce(omega_exponent, n);
    Ok(order
        .iter()
        .enumerate()
        .map(|(i, &gi)| unit_circle(gi, p) * unit_circle(mul_mod(e, i as u64, n), n))
        .sum())
}

/// All `p - 1` cyclotomic resolvents, the roots recovered from them, and the
/// worst deviation from `α^(g^k)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CyclotomyDemo {
    pub p: u64,
    pub g: u64,
    pub ordering: Vec<u64>,
    pub resolvents: Vec<(f64, f64)>,
    pub recovered: Vec<(f64, f64)>,
    pub max_error: f64,
}

pub fn cyclotomy_round_trip(p: u64, g: u64) -> Result<CyclotomyDemo> {
    let ordering = power_ordering(p, g)?;
    let n = p - 1;
    let xs: Vec<Complex64> = (0..n as i64)
        .map(|j| cyclotomic_resolvent(p, g, j))
        .collect::<Result<_>>()?;
    let recovered = recover_all(&xs, RootValue::root(n, 1))?;
    let max_error = ordering
        .iter()
        .zip(&recovered)
        .map(|(&gk, r)| (unit_circle(gk, p) - r).norm())
        .fold(0.0, f64::max);
    Ok(CyclotomyDemo {
        p,
        g,
        ordering,
        resolvents: xs.iter().map(|z| (z.re, z.im)).collect(),
        recovered: recovered.iter().map(|z| (z.re, z.im)).collect(),
        max_error,
    })
}
