//! Integer kernels: primes, factorization, totient, modular powers,
//! primitive roots and discrete logarithms ("indices").
//!
//! Everything here works on `u64` at desk scale. Discrete logarithms use a
//! full power table per `(generator, modulus)` pair, built once and shared
//! through a process-wide cache.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};

/// Canonical prime factorization `k = p1^e1 * p2^e2 * ...`, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub k: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// `Some((p, e))` when `k = p^e` with `e >= 1`.
    pub fn as_prime_power(&self) -> Option<(u64, u32)> {
        match self.factors.as_slice() {
            [single] => Some(*single),
            _ => None,
        }
    }

    pub fn product(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

/// All primes `<= limit`, ascending, by a marked-array sieve of Eratosthenes.
pub fn sieve_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut i = 2usize;
    while i * i <= n {
        if !composite[i] {
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n)
        .filter(|&m| !composite[m])
        .map(|m| m as u64)
        .collect()
}

struct PrimeCache {
    limit: u64,
    primes: Arc<Vec<u64>>,
}

static PRIME_CACHE: OnceLock<RwLock<PrimeCache>> = OnceLock::new();

/// Shared prime list covering at least `limit`.
///
/// The returned list may extend past `limit`; use [`primes_le`] to cut it.
pub fn cached_primes(limit: u64) -> Arc<Vec<u64>> {
    let cell = PRIME_CACHE.get_or_init(|| {
        RwLock::new(PrimeCache {
            limit: 0,
            primes: Arc::new(Vec::new()),
        })
    });
    {
        let guard = cell.read().unwrap_or_else(|e| e.into_inner());
        if guard.limit >= limit {
            return Arc::clone(&guard.primes);
        }
    }
    let mut guard = cell.write().unwrap_or_else(|e| e.into_inner());
    if guard.limit < limit {
        let target = limit.max(1 << 16);
        guard.primes = Arc::new(sieve_primes(target));
        guard.limit = target;
    }
    Arc::clone(&guard.primes)
}

/// Prefix of an ascending prime list holding the primes `<= limit`.
pub fn primes_le(primes: &[u64], limit: u64) -> &[u64] {
    &primes[..primes.partition_point(|&p| p <= limit)]
}

/// Trial-division factorization; `factorize(1)` has no factors.
pub fn factorize(k: u64) -> Result<Factorization> {
    if k == 0 {
        return Err(Error::NotPositive("k"));
    }
    let mut factors = Vec::new();
    let mut rest = k;
    let mut d = 2u64;
    while d.saturating_mul(d) <= rest {
        if rest.is_multiple_of(d) {
            let mut e = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { k, factors })
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).map(|f| f.factors == [(n, 1)]).unwrap_or(false)
}

/// Euler's totient, from the factorization.
pub fn euler_phi(k: u64) -> Result<u64> {
    let f = factorize(k)?;
    Ok(phi_of(&f))
}

pub(crate) fn phi_of(f: &Factorization) -> u64 {
    f.factors
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Inverse of `a` modulo `m`, when `gcd(a, m) = 1`.
pub fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0 == 1).then(|| s0.rem_euclid(m as i128) as u64)
}

/// `n mod m` in `[0, m)` for signed `n`.
pub fn reduce(n: i64, m: u64) -> u64 {
    (n as i128).rem_euclid(m as i128) as u64
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `b^e mod m` by binary exponentiation.
pub fn pow_mod(b: i64, e: u64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::ModulusTooSmall(m));
    }
    Ok(pow_mod_u(reduce(b, m), e, m))
}

pub(crate) fn pow_mod_u(base: u64, mut e: u64, m: u64) -> u64 {
    let mut result = 1 % m;
    let mut b = base % m;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(result, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    result
}

/// Multiplicative order of `a` modulo `m`, or `None` when `a` is not a unit.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(a % m, m) != 1 {
        return None;
    }
    let phi = euler_phi(m).ok()?;
    let mut order = phi;
    for (r, _) in factorize(phi).ok()?.factors {
        while order % r == 0 && pow_mod_u(a, order / r, m) == 1 {
            order /= r;
        }
    }
    Some(order)
}

fn odd_prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 3 || q.is_multiple_of(2) {
        return Err(Error::NotOddPrimePower(q));
    }
    factorize(q)?
        .as_prime_power()
        .ok_or(Error::NotOddPrimePower(q))
}

/// Smallest positive primitive root modulo an odd prime power.
///
/// Candidates are tried in increasing order; `g` is accepted when it is a
/// unit and `g^(phi/r) != 1` for every prime `r | phi(q)`.
pub fn find_primitive_root(q: u64) -> Result<u64> {
    let (p, e) = odd_prime_power(q)?;
    let phi = (p - 1) * p.pow(e - 1);
    let divisors: Vec<u64> = factorize(phi)?.primes().collect();
    (2..q)
        .find(|&g| {
            g % p != 0 && divisors.iter().all(|&r| pow_mod_u(g, phi / r, q) != 1)
        })
        .ok_or(Error::NotOddPrimePower(q))
}

/// Powers `g^0, g^1, ...` of a unit modulo `m` up to its order, with the
/// inverse lookup used for discrete logarithms.
#[derive(Debug)]
pub struct PowerTable {
    pub generator: u64,
    pub modulus: u64,
    powers: Vec<u64>,
    index: Vec<u32>,
}

const ABSENT: u32 = u32::MAX;

impl PowerTable {
    fn build(generator: u64, modulus: u64) -> Self {
        let mut powers = vec![1 % modulus];
        let mut index = vec![ABSENT; modulus as usize];
        index[(1 % modulus) as usize] = 0;
        let mut x = mul_mod(1, generator, modulus);
        while x != 1 % modulus && index[x as usize] == ABSENT {
            index[x as usize] = powers.len() as u32;
            powers.push(x);
            x = mul_mod(x, generator, modulus);
        }
        PowerTable {
            generator,
            modulus,
            powers,
            index,
        }
    }

    pub fn order(&self) -> u64 {
        self.powers.len() as u64
    }

    pub fn powers(&self) -> &[u64] {
        &self.powers
    }

    pub fn log(&self, n: u64) -> Option<u64> {
        match self.index[(n % self.modulus) as usize] {
            ABSENT => None,
            i => Some(i as u64),
        }
    }
}

type TableCache = RwLock<HashMap<(u64, u64), Arc<PowerTable>>>;
static TABLES: OnceLock<TableCache> = OnceLock::new();

/// Cached power table of `generator` modulo `modulus`.
pub fn power_table(generator: u64, modulus: u64) -> Result<Arc<PowerTable>> {
    if modulus < 2 {
        return Err(Error::ModulusTooSmall(modulus));
    }
    let g = generator % modulus;
    if gcd(g, modulus) != 1 {
        return Err(Error::NotCoprime {
            n: generator as i64,
            modulus,
        });
    }
    let cache = TABLES.get_or_init(Default::default);
    if let Some(t) = cache
        .read()
        .unwrap_or_else(|e| e.into_inner())
        .get(&(g, modulus))
    {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(PowerTable::build(g, modulus));
    let mut w = cache.write().unwrap_or_else(|e| e.into_inner());
    Ok(Arc::clone(w.entry((g, modulus)).or_insert(table)))
}

/// Index of `n` with respect to `g` modulo `q`: the unique `0 <= γ < ord(g)`
/// with `g^γ ≡ n (mod q)`.
pub fn index_of(n: i64, g: u64, q: u64) -> Result<u64> {
    if q < 2 {
        return Err(Error::ModulusTooSmall(q));
    }
    let r = reduce(n, q);
    if gcd(r, q) != 1 {
        return Err(Error::NotCoprime { n, modulus: q });
    }
    power_table(g, q)?.log(r).ok_or(Error::NotInSubgroup {
        n: r,
        generator: g % q,
        modulus: q,
    })
}
