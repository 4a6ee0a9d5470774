//! Dirichlet L-series on the real axis.
//!
//! Every numeric result is an [`LValue`]: a complex value together with a
//! certified bound on what truncation and rounding dropped.
//!
//! - [`zeta`] uses Euler–Maclaurin summation.
//! - [`l_direct`] sums whole periods for non-principal characters; the tail is
//!   controlled by Abel summation since each period of values sums to zero.
//!   Principal characters go through `ζ(s) · Π_{p | k} (1 - p^-s)`.
//! - [`euler_product`] and [`log_l_prime_sum`] are prime-side routes: a finite
//!   Euler product, and its logarithm written as the prime-power series
//!   `Σ_q Σ_ν χ(q)^ν / (ν q^(νs))`. The latter is the definition of `log L`
//!   used everywhere here; no complex logarithm of `L` is ever taken.

use std::sync::Arc;

use num_complex::Complex64;
use serde::Serialize;

use crate::arith::{cached_primes, euler_phi, factorize, gcd, primes_le, sieve_primes};
use crate::characters::{enumerate_characters, CharacterClass, DirichletCharacter};
use crate::cyclotomic::root_conj;
use crate::error::{Error, Result};

const EPS: f64 = f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LValue {
    pub value: Complex64,
    pub truncation_bound: f64,
}

impl LValue {
    fn new(value: Complex64, truncation_bound: f64) -> Self {
        LValue {
            value,
            truncation_bound,
        }
    }

    fn real(value: f64, truncation_bound: f64) -> Self {
        Self::new(Complex64::new(value, 0.0), truncation_bound)
    }

    pub fn re(&self) -> f64 {
        self.value.re
    }

    pub fn im(&self) -> f64 {
        self.value.im
    }

    pub fn abs(&self) -> f64 {
        self.value.norm()
    }

    /// `exp` of a logarithm value, with the bound propagated through
    /// `|e^(a+t) - e^a| <= |e^a| (e^|t| - 1)`.
    pub fn exp(&self) -> LValue {
        let v = self.value.exp();
        let bound = v.norm() * self.truncation_bound.exp_m1() + 4.0 * EPS * v.norm();
        LValue::new(v, bound)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    /// Terms summed by [`l_direct`]; `None` means `max(10^5, 10^3 k)`.
    pub term_limit: Option<u64>,
    pub prime_bound: u64,
    /// Highest prime power `ν` kept in [`log_l_prime_sum`].
    pub power_depth: u32,
    /// [`l_direct`] extends its term count (up to 16×) until the certified
    /// bound drops below this.
    pub tolerance: f64,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            term_limit: None,
            prime_bound: 100_000,
            power_depth: 30,
            tolerance: 1e-6,
        }
    }
}

impl EvalOptions {
    pub fn terms_for(&self, k: u64) -> u64 {
        self.term_limit
            .unwrap_or_else(|| 100_000u64.max(1_000 * k))
            .max(1)
    }
}

fn require_above_one(s: f64) -> Result<()> {
    if s.is_nan() || s <= 1.0 {
        return Err(Error::Domain {
            what: "s must exceed 1",
            value: s,
        });
    }
    Ok(())
}

// B_2, B_4, ..., B_14
const BERNOULLI: [f64; 7] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
];

/// Riemann zeta for real `s > 1`.
///
/// Direct sum of the first `N - 1 = 63` terms, the integral and boundary
/// corrections, and six Bernoulli correction terms. The bound is twice the
/// first omitted correction plus a rounding allowance.
pub fn zeta(s: f64) -> Result<LValue> {
    require_above_one(s)?;
    const N: u64 = 64;
    const CORRECTIONS: usize = 6;
    let n = N as f64;
    let head: f64 = (1..N).rev().map(|j| (j as f64).powf(-s)).sum();
    let mut value = head + n.powf(1.0 - s) / (s - 1.0) + 0.5 * n.powf(-s);

    // term_j = B_2j / (2j)! * s(s+1)...(s+2j-2) * N^(-s-2j+1)
    let mut rising = s; // s(s+1)...(s+2j-2)
    let mut factorial = 2.0; // (2j)!
    let mut power = n.powf(-s - 1.0);
    let mut omitted = 0.0;
    for (j, b) in BERNOULLI.iter().enumerate() {
        let term = b / factorial * rising * power;
        if j < CORRECTIONS {
            value += term;
        } else {
            omitted = term.abs();
        }
        let m = (2 * j + 2) as f64;
        rising *= (s + m - 1.0) * (s + m);
        factorial *= (m + 1.0) * (m + 2.0);
        power /= n * n;
    }
    let rounding = (N as f64 + 16.0) * EPS * value;
    Ok(LValue::real(value, 2.0 * omitted + rounding))
}

/// Complex values of `χ` over one period, `χ(0), …, χ(k-1)`.
pub fn value_table(chi: &DirichletCharacter) -> Vec<Complex64> {
    chi.values().into_iter().map(|v| v.to_complex()).collect()
}

fn principal_factor(k: u64, s: f64) -> Result<f64> {
    Ok(factorize(k)?
        .primes()
        .map(|p| 1.0 - (p as f64).powf(-s))
        .product())
}

/// `L(s, χ) = Σ χ(n) n^-s`.
///
/// Principal characters need `s > 1`; others accept any `s > 0`.
pub fn l_direct(s: f64, chi: &DirichletCharacter, opts: &EvalOptions) -> Result<LValue> {
    let k = chi.modulus();
    if chi.is_principal() {
        let z = zeta(s)?;
        let f = principal_factor(k, s)?;
        return Ok(LValue::real(z.re() * f, z.truncation_bound * f + 4.0 * EPS * z.re()));
    }
    if s.is_nan() || s <= 0.0 {
        return Err(Error::Domain {
            what: "s must be positive for a non-principal character",
            value: s,
        });
    }
    let table = value_table(chi);
    let base = opts.terms_for(k);
    let mut result = block_sum(s, &table, base);
    let mut terms = base;
    while result.truncation_bound > opts.tolerance && terms < 16 * base {
        terms *= 2;
        result = block_sum(s, &table, terms);
    }
    Ok(result)
}

/// Sum over whole periods up to at least `terms` terms.
///
/// With `M` a multiple of the period and `A(x)` the partial sums of `χ`
/// starting after `M`, `|A| <= C := max_j |χ(1) + … + χ(j)|` and Abel
/// summation gives `|Σ_{n>M} χ(n) n^-s| <= C (M+1)^-s`.
fn block_sum(s: f64, table: &[Complex64], terms: u64) -> LValue {
    let k = table.len() as u64;
    let m = terms.div_ceil(k) * k;
    let mut partial = Complex64::new(0.0, 0.0);
    let mut c = 0.0f64;
    for j in 1..=k {
        partial += table[(j % k) as usize];
        c = c.max(partial.norm());
    }
    let c = c + 1e-12;

    // Neumaier-compensated sum
    let (mut sum, mut comp) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    let mut abs_sum = 0.0;
    for n in 1..=m {
        let v = table[(n % k) as usize];
        if v.re == 0.0 && v.im == 0.0 {
            continue;
        }
        let w = (n as f64).powf(-s);
        let term = v * w;
        abs_sum += w;
        sum.re = neumaier(sum.re, term.re, &mut comp.re);
        sum.im = neumaier(sum.im, term.im, &mut comp.im);
    }
    let value = sum + comp;
    let tail = c * ((m + 1) as f64).powf(-s);
    LValue::new(value, tail + 8.0 * EPS * abs_sum)
}

fn neumaier(sum: f64, x: f64, comp: &mut f64) -> f64 {
    let t = sum + x;
    if sum.abs() >= x.abs() {
        *comp += (sum - t) + x;
    } else {
        *comp += (x - t) + sum;
    }
    t
}

/// `Σ_{n>B} n^-s / (1 - n^-s)`, which dominates `Σ_{q>B} -log(1 - |χ(q)| q^-s)`.
fn prime_tail_bound(s: f64, bound: u64) -> f64 {
    let b = bound.max(1) as f64;
    b.powf(1.0 - s) / ((s - 1.0) * (1.0 - (b + 1.0).powf(-s)))
}

/// `Π_{q <= B, q ∤ k} (1 - χ(q) q^-s)^-1`.
pub fn euler_product(s: f64, chi: &DirichletCharacter, prime_bound: u64) -> Result<LValue> {
    require_above_one(s)?;
    let table = value_table(chi);
    let k = chi.modulus();
    let primes = cached_primes(prime_bound);
    let primes = primes_le(&primes, prime_bound);
    let mut product = Complex64::new(1.0, 0.0);
    for &q in primes {
        let v = table[(q % k) as usize];
        if v.re == 0.0 && v.im == 0.0 {
            continue;
        }
        product /= Complex64::new(1.0, 0.0) - v * (q as f64).powf(-s);
    }
    let tail = prime_tail_bound(s, prime_bound);
    let bound = product.norm() * tail.exp_m1() + 4.0 * (primes.len() as f64 + 1.0) * EPS * product.norm();
    Ok(LValue::new(product, bound))
}

/// `log L(s, χ)` as `Σ_{q <= B, q ∤ k} Σ_{ν=1}^{ν_max} χ(q)^ν / (ν q^(νs))`.
///
/// The bound covers the primes above `B` and the powers above `ν_max`.
pub fn log_l_prime_sum(
    s: f64,
    chi: &DirichletCharacter,
    prime_bound: u64,
    power_depth: u32,
) -> Result<LValue> {
    require_above_one(s)?;
    if power_depth == 0 {
        return Err(Error::NotPositive("power depth"));
    }
    let k = chi.modulus();
    let values = chi.values();
    let primes = cached_primes(prime_bound);
    let primes = primes_le(&primes, prime_bound);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    let mut depth_tail = 0.0;
    for &q in primes {
        let v = values[(q % k) as usize];
        if v.is_zero() {
            continue;
        }
        let w = (q as f64).powf(-s);
        let mut wv = 1.0;
        for nu in 1..=power_depth {
            wv *= w;
            let term = v.pow(nu as u64).to_complex() * (wv / nu as f64);
            sum += term;
            abs_sum += wv / nu as f64;
        }
        let next = (power_depth + 1) as f64;
        depth_tail += wv * w / (next * (1.0 - w));
    }
    let bound = prime_tail_bound(s, prime_bound) + depth_tail + 8.0 * EPS * abs_sum;
    Ok(LValue::new(sum, bound))
}

/// `Σ_{q <= B, q ≡ m (mod k)} q^-s`.
pub fn residue_class_prime_sum(s: f64, k: u64, m: u64, prime_bound: u64) -> Result<f64> {
    if k == 0 {
        return Err(Error::NotPositive("modulus"));
    }
    if s.is_nan() || s <= 0.0 {
        return Err(Error::Domain {
            what: "s must be positive",
            value: s,
        });
    }
    let primes = cached_primes(prime_bound);
    let r = m % k;
    Ok(primes_le(&primes, prime_bound)
        .iter()
        .rev()
        .filter(|&&q| q % k == r)
        .map(|&q| (q as f64).powf(-s))
        .sum())
}

/// Both sides of the character-weighted prime identity at one `s`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightedLogReport {
    pub s: f64,
    pub modulus: u64,
    pub residue: u64,
    /// `Σ_χ conj(χ(m)) log L(s, χ)` (real part).
    pub lhs: f64,
    pub imaginary_part: f64,
    /// Sum of the per-character truncation bounds.
    pub truncation_bound: f64,
    /// `φ(k) Σ_{q ≡ m} q^-s` over the same primes.
    pub class_sum: f64,
    pub discrepancy: f64,
    /// `φ(k) Σ_{n>=2} 1/(n(n-1)) = φ(k)`, the bound on the prime-power block.
    pub majorant: f64,
}

impl WeightedLogReport {
    pub fn envelope(&self) -> f64 {
        self.majorant + self.truncation_bound
    }

    pub fn within_envelope(&self) -> bool {
        self.discrepancy <= self.envelope()
    }

    pub fn imaginary_within_bound(&self) -> bool {
        self.imaginary_part.abs() <= self.truncation_bound + 1e-12
    }
}

/// `Σ_χ conj(χ(m)) log L(s, χ)` against `φ(k) Σ_{q ≡ m (mod k)} q^-s`.
pub fn character_weighted_logl(s: f64, k: u64, m: i64, opts: &EvalOptions) -> Result<WeightedLogReport> {
    require_above_one(s)?;
    let chars = enumerate_characters(k)?;
    character_weighted_logl_in(s, &chars, m, opts)
}

pub fn character_weighted_logl_in(
    s: f64,
    chars: &[DirichletCharacter],
    m: i64,
    opts: &EvalOptions,
) -> Result<WeightedLogReport> {
    require_above_one(s)?;
    let structure = chars[0].structure();
    let k = structure.modulus;
    if !structure.is_unit(m) {
        return Err(Error::NotCoprime { n: m, modulus: k });
    }
    let mut lhs = Complex64::new(0.0, 0.0);
    let mut bound = 0.0;
    for chi in chars {
        let weight = root_conj(chi.evaluate(m)).to_complex();
        let log_l = log_l_prime_sum(s, chi, opts.prime_bound, opts.power_depth)?;
        lhs += weight * log_l.value;
        bound += log_l.truncation_bound;
    }
    let phi = structure.order() as f64;
    let residue = crate::arith::reduce(m, k);
    let class_sum = phi * residue_class_prime_sum(s, k, residue, opts.prime_bound)?;
    Ok(WeightedLogReport {
        s,
        modulus: k,
        residue,
        lhs: lhs.re,
        imaginary_part: lhs.im,
        truncation_bound: bound,
        class_sum,
        discrepancy: (lhs - Complex64::new(class_sum, 0.0)).norm(),
        majorant: phi,
    })
}

/// `(ε, ε · L(1 + ε, χ_0))` for each `ε`; these approach `φ(k)/k`.
pub fn principal_pole_check(k: u64, eps_grid: &[f64]) -> Result<Vec<(f64, f64)>> {
    let chi = crate::characters::principal(k)?;
    eps_grid
        .iter()
        .map(|&eps| {
            if !(eps > 0.0 && eps <= 1.0) {
                return Err(Error::Domain {
                    what: "pole offset must lie in (0, 1]",
                    value: 1.0 + eps,
                });
            }
            let l = l_direct(1.0 + eps, &chi, &EvalOptions::default())?;
            Ok((eps, eps * l.re()))
        })
        .collect()
}

/// Residue of `L(s, χ_0)` at `s = 1`: `φ(k)/k = Π_{p | k} (1 - 1/p)`.
pub fn principal_residue(k: u64) -> Result<f64> {
    Ok(euler_phi(k)? as f64 / k as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NonvanishingVerdict {
    pub label: Vec<u64>,
    pub class: CharacterClass,
    pub re: f64,
    pub im: f64,
    pub modulus: f64,
    pub truncation_bound: f64,
    /// `|L(1, χ)| - bound > δ`.
    pub nonzero: bool,
}

/// `|L(1, χ)|` for every non-principal `χ` mod `k`, with the verdict that it
/// exceeds `δ` by more than the certified bound.
pub fn nonvanishing_report(k: u64, delta: f64, opts: &EvalOptions) -> Result<Vec<NonvanishingVerdict>> {
    let chars = enumerate_characters(k)?;
    chars
        .iter()
        .filter(|c| !c.is_principal())
        .map(|chi| {
            let l = l_direct(1.0, chi, opts)?;
            Ok(NonvanishingVerdict {
                label: chi.label(),
                class: chi.classify(),
                re: l.re(),
                im: l.im(),
                modulus: l.abs(),
                truncation_bound: l.truncation_bound,
                nonzero: l.abs() - l.truncation_bound > delta,
            })
        })
        .collect()
}

/// Prime counts per residue class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    pub limit: u64,
    pub modulus: u64,
    /// `counts[r]` = number of primes `q <= limit` with `q ≡ r (mod k)`.
    pub counts: Vec<u64>,
    pub total: u64,
}

impl Census {
    pub fn unit_classes(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        let k = self.modulus;
        self.counts
            .iter()
            .enumerate()
            .filter(move |&(r, _)| gcd(r as u64, k) == 1)
            .map(|(r, &c)| (r as u64, c))
    }
}

pub fn prime_census(limit: u64, k: u64) -> Result<Census> {
    if k == 0 {
        return Err(Error::NotPositive("modulus"));
    }
    let primes: Arc<Vec<u64>> = if limit <= 10_000_000 {
        cached_primes(limit)
    } else {
        Arc::new(sieve_primes(limit))
    };
    let primes = primes_le(&primes, limit);
    let mut counts = vec![0u64; k as usize];
    for &q in primes {
        counts[(q % k) as usize] += 1;
    }
    Ok(Census {
        limit,
        modulus: k,
        counts,
        total: primes.len() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{char_conj, character_from_label, principal};

    /// Direct sum to `m` terms plus the integral tail and its first boundary
    /// correction.
    fn zeta_oracle(s: f64, m: u64) -> f64 {
        let head: f64 = (1..=m).rev().map(|n| (n as f64).powf(-s)).sum();
        let mf = m as f64;
        head + mf.powf(1.0 - s) / (s - 1.0) - 0.5 * mf.powf(-s)
    }

    #[test]
    fn zeta_matches_oracle() {
        let z2 = zeta(2.0).unwrap();
        assert!((z2.re() - zeta_oracle(2.0, 10_000_000)).abs() < 1e-10);
        assert!((z2.re() - 1.644934).abs() < 1e-6);
        assert!(z2.truncation_bound < 1e-12);
        let z4 = zeta(4.0).unwrap();
        assert!((z4.re() - zeta_oracle(4.0, 100_000)).abs() < 1e-12);
        assert!((z4.re() - 1.082323).abs() < 1e-6);
        let d = zeta(20.0).unwrap().re() - 1.0;
        assert!(d > 0.0 && d < 2e-6);
        for s in [1.001, 1.01, 1.3, 2.5, 7.0] {
            let z = zeta(s).unwrap();
            let oracle = zeta_oracle(s, 2_000_000);
            assert!((z.re() - oracle).abs() < 1e-9 * oracle, "s = {s}");
        }
    }

    #[test]
    fn zeta_frozen_values() {
        // reference values to 15 digits
        assert!((zeta(2.0).unwrap().re() - 1.644_934_066_848_226).abs() < 1e-14);
        assert!((zeta(1.5).unwrap().re() - 2.612_375_348_685_488).abs() < 1e-13);
    }

    #[test]
    fn zeta_domain() {
        assert!(zeta(1.0).is_err());
        assert!(zeta(0.5).is_err());
        assert!(zeta(f64::NAN).is_err());
    }

    #[test]
    fn l_direct_principal_mod_one_is_zeta() {
        let chi = principal(1).unwrap();
        let l = l_direct(2.0, &chi, &EvalOptions::default()).unwrap();
        assert!((l.re() - 1.644934).abs() < 1e-6);
    }

    #[test]
    fn l_direct_principal_relation() {
        for k in [3u64, 4, 12] {
            let chi = principal(k).unwrap();
            let l = l_direct(1.5, &chi, &EvalOptions::default()).unwrap();
            let factor: f64 = factorize(k)
                .unwrap()
                .primes()
                .map(|p| 1.0 / (1.0 - (p as f64).powf(-1.5)))
                .product();
            assert!((l.re() * factor - zeta(1.5).unwrap().re()).abs() < 1e-9);
        }
        assert!(l_direct(1.0, &principal(4).unwrap(), &EvalOptions::default()).is_err());
    }

    #[test]
    fn l_one_mod_four_is_leibniz() {
        let chi = character_from_label(4, &[1]).unwrap();
        let l = l_direct(1.0, &chi, &EvalOptions::default()).unwrap();
        // oracle: alternating series with averaged partial sums
        let n = 2_000_000u64;
        let mut s = 0.0;
        for j in 0..n {
            s += if j % 2 == 0 { 1.0 } else { -1.0 } / (2 * j + 1) as f64;
        }
        let next = if n.is_multiple_of(2) { 1.0 } else { -1.0 } / (2 * n + 1) as f64;
        let oracle = s + next / 2.0;
        assert!((l.re() - oracle).abs() <= l.truncation_bound);
        assert!((oracle - std::f64::consts::FRAC_PI_4).abs() < 1e-12);
        assert!((l.re() - std::f64::consts::FRAC_PI_4).abs() <= l.truncation_bound + 1e-12);
        assert!(l.im().abs() <= l.truncation_bound + 1e-12);
        assert!(l_direct(0.0, &chi, &EvalOptions::default()).is_err());
    }

    #[test]
    fn l_one_mod_three() {
        let chi = character_from_label(3, &[1]).unwrap();
        let l = l_direct(1.0, &chi, &EvalOptions::default()).unwrap();
        // π / (3√3)
        assert!((l.re() - 0.604_599_788_078_072_6).abs() <= l.truncation_bound);
        assert!(l.truncation_bound < 1e-4);
    }

    #[test]
    fn certified_tail_survives_tenfold_terms() {
        let coarse = EvalOptions {
            term_limit: Some(10_000),
            tolerance: 1.0,
            ..Default::default()
        };
        let fine = EvalOptions {
            term_limit: Some(100_000),
            tolerance: 1.0,
            ..Default::default()
        };
        for k in [3u64, 5, 7, 8, 12] {
            for chi in enumerate_characters(k).unwrap().iter().skip(1) {
                for s in [0.5, 1.0, 1.5] {
                    let a = l_direct(s, chi, &coarse).unwrap();
                    let b = l_direct(s, chi, &fine).unwrap();
                    assert!((a.value - b.value).norm() <= a.truncation_bound + b.truncation_bound);
                }
            }
        }
    }

    #[test]
    fn conjugate_characters_give_conjugate_values() {
        for k in [5u64, 7, 13, 15] {
            for chi in enumerate_characters(k).unwrap().iter().skip(1) {
                for s in [1.0, 2.0] {
                    let a = l_direct(s, chi, &EvalOptions::default()).unwrap();
                    let b = l_direct(s, &char_conj(chi), &EvalOptions::default()).unwrap();
                    assert!((a.value - b.value.conj()).norm() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn euler_product_single_factor() {
        let chi = principal(1).unwrap();
        let p = euler_product(2.0, &chi, 2).unwrap();
        assert!((p.re() - 4.0 / 3.0).abs() < 1e-15);
        assert!(euler_product(1.0, &chi, 10).is_err());
    }

    #[test]
    fn euler_product_partials_increase_for_principal() {
        let chi = principal(1).unwrap();
        let mut last = 1.0;
        for bound in [2u64, 3, 5, 7, 11, 100, 1000, 10_000] {
            let v = euler_product(2.0, &chi, bound).unwrap().re();
            assert!(v > last);
            last = v;
        }
    }

    #[test]
    fn euler_product_mod_twelve() {
        for chi in enumerate_characters(12).unwrap() {
            let p = euler_product(2.0, &chi, 100_000).unwrap();
            let l = l_direct(2.0, &chi, &EvalOptions::default()).unwrap();
            assert!((p.value - l.value).norm() < 1e-6, "{:?}", chi.params());
            assert!((p.value - l.value).norm() <= p.truncation_bound + l.truncation_bound);
        }
    }

    #[test]
    fn log_zeta_two() {
        let chi = principal(1).unwrap();
        let l = log_l_prime_sum(2.0, &chi, 100_000, 30).unwrap();
        assert!((l.re() - 0.497680).abs() < 1e-4);
        assert!((l.re() - zeta(2.0).unwrap().re().ln()).abs() <= l.truncation_bound);
    }

    #[test]
    fn log_two_paths_mod_eight() {
        for chi in enumerate_characters(8).unwrap() {
            let log_l = log_l_prime_sum(2.0, &chi, 100_000, 30).unwrap();
            let l = l_direct(2.0, &chi, &EvalOptions::default()).unwrap();
            let e = log_l.exp();
            assert!((e.value - l.value).norm() < 1e-5);
            assert!((e.value - l.value).norm() <= e.truncation_bound + l.truncation_bound);
        }
    }

    #[test]
    fn higher_powers_are_bounded() {
        let chi = principal(1).unwrap();
        let full = log_l_prime_sum(2.0, &chi, 100_000, 30).unwrap().re();
        let first = log_l_prime_sum(2.0, &chi, 100_000, 1).unwrap().re();
        let diff = full - first;
        assert!(diff > 0.0 && diff < 0.645);
    }

    #[test]
    fn residue_class_sums() {
        let all: f64 = sieve_primes(100).iter().map(|&q| (q as f64).powi(-2)).sum();
        assert!((residue_class_prime_sum(2.0, 1, 1, 100).unwrap() - all).abs() < 1e-15);
        let expected: f64 = [5u64, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97]
            .iter()
            .map(|&q| (q as f64).powi(-2))
            .sum();
        assert!((residue_class_prime_sum(2.0, 4, 1, 100).unwrap() - expected).abs() < 1e-15);
        assert_eq!(residue_class_prime_sum(1.3, 4, 2, 10_000).unwrap(), 2f64.powf(-1.3));
        assert_eq!(residue_class_prime_sum(2.0, 5, 5, 1000).unwrap(), 0.04);
    }

    #[test]
    fn weighted_logl_mod_one_is_log_zeta() {
        let r = character_weighted_logl(2.0, 1, 1, &EvalOptions::default()).unwrap();
        let z = zeta(2.0).unwrap().re().ln();
        assert!((r.lhs - z).abs() <= r.truncation_bound);
    }

    #[test]
    fn weighted_logl_discrepancy_mod_three() {
        let r = character_weighted_logl(1.5, 3, 1, &EvalOptions::default()).unwrap();
        assert!(r.discrepancy < 1.5);
        assert!(r.within_envelope());
        assert!(r.imaginary_within_bound());
        // the difference is exactly the ν >= 2 block, which is positive
        assert!(r.lhs > r.class_sum);
    }

    #[test]
    fn weighted_logl_rejects_non_units() {
        assert!(character_weighted_logl(2.0, 4, 2, &EvalOptions::default()).is_err());
        assert!(character_weighted_logl(1.0, 4, 1, &EvalOptions::default()).is_err());
    }

    #[test]
    fn weighted_logl_grows_towards_one() {
        let chars = enumerate_characters(4).unwrap();
        let opts = EvalOptions::default();
        let values: Vec<f64> = [1.1, 1.05, 1.01]
            .iter()
            .map(|&s| character_weighted_logl_in(s, &chars, 3, &opts).unwrap().lhs)
            .collect();
        assert!(values[0] < values[1] && values[1] < values[2]);
    }

    #[test]
    fn pole_examples() {
        let r = principal_pole_check(1, &[1e-3]).unwrap();
        assert!((r[0].1 - 1.0).abs() < 0.01);
        let r = principal_pole_check(4, &[1e-3]).unwrap();
        assert!((r[0].1 - 0.5).abs() < 0.01);
        let r = principal_pole_check(12, &[0.1, 0.01, 0.001]).unwrap();
        let limit = principal_residue(12).unwrap();
        let d: Vec<f64> = r.iter().map(|(_, v)| (v - limit).abs()).collect();
        assert!(d[0] > d[1] && d[1] > d[2]);
        assert!(principal_pole_check(3, &[0.0]).is_err());
    }

    #[test]
    fn nonvanishing_examples() {
        let opts = EvalOptions::default();
        let r4 = nonvanishing_report(4, 0.1, &opts).unwrap();
        assert_eq!(r4.len(), 1);
        assert!((r4[0].modulus - std::f64::consts::FRAC_PI_4).abs() < 1e-5);
        let r3 = nonvanishing_report(3, 0.1, &opts).unwrap();
        assert!((r3[0].modulus - 0.604600).abs() < 1e-5);
        let r5 = nonvanishing_report(5, 0.1, &opts).unwrap();
        assert_eq!(r5.len(), 3);
        assert!(r5.iter().all(|v| v.nonzero));
        let complex: Vec<_> = r5.iter().filter(|v| v.class == CharacterClass::Complex).collect();
        assert_eq!(complex.len(), 2);
        assert!((complex[0].modulus - complex[1].modulus).abs() < 1e-10);
        assert!((complex[0].modulus - 0.888_576_587_631_673).abs() < 1e-5);
    }

    #[test]
    fn census_small() {
        let c = prime_census(20, 4).unwrap();
        assert_eq!(c.counts, vec![0, 3, 1, 4]);
        assert_eq!(c.total, 8);
        let one = prime_census(1000, 1).unwrap();
        assert_eq!(one.counts, vec![168]);
        for (r, count) in prime_census(10_000, 12).unwrap().counts.iter().enumerate() {
            if gcd(r as u64, 12) > 1 {
                assert!(*count <= 1);
            }
        }
    }
}
