//! Exact roots of unity and integer formal sums of them.
//!
//! A [`RootValue`] is either zero or `ζ_N^e = exp(2πi e/N)`. A [`CycSum`] is
//! an integer combination `Σ c_j ζ_N^j`. Whether such a sum equals an integer
//! is decided exactly: `P(ζ_N) = v` iff the `N`-th cyclotomic polynomial
//! divides `P(x) - v` over the integers.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Mul;
use std::sync::{Arc, OnceLock, RwLock};

use num_complex::Complex64;
use serde::Serialize;

use crate::arith::{gcd, lcm};
use crate::error::{Error, Result};

/// Zero, or the root of unity `ζ_order^exponent` with `exponent < order`.
#[derive(Debug, Clone, Copy, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootValue {
    Zero,
    Root { order: u64, exponent: u64 },
}

impl RootValue {
    pub const ONE: RootValue = RootValue::Root {
        order: 1,
        exponent: 0,
    };

    /// `ζ_order^exponent`, exponent reduced into `[0, order)`.
    ///
    /// # Panics
    ///
    /// Panics if `order == 0`.
    pub fn root(order: u64, exponent: i64) -> Self {
        assert!(order > 0, "root of unity needs a positive order");
        RootValue::Root {
            order,
            exponent: crate::arith::reduce(exponent, order),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, RootValue::Zero)
    }

    /// Same value with the smallest possible order.
    pub fn reduced(self) -> Self {
        match self {
            RootValue::Zero => RootValue::Zero,
            RootValue::Root { order, exponent } => {
                let g = gcd(exponent, order);
                RootValue::Root {
                    order: order / g,
                    exponent: exponent / g,
                }
            }
        }
    }

    /// Exponent of this value as a power of `ζ_order`, if it is one.
    pub fn exponent_in(self, order: u64) -> Option<u64> {
        match self.reduced() {
            RootValue::Zero => None,
            RootValue::Root { order: n, exponent } => {
                order.is_multiple_of(n).then(|| exponent * (order / n))
            }
        }
    }

    /// Real roots are exactly `±1`.
    pub fn is_real(self) -> bool {
        match self {
            RootValue::Zero => true,
            RootValue::Root { order, exponent } => (2 * exponent) % order == 0,
        }
    }

    pub fn conj(self) -> Self {
        root_conj(self)
    }

    pub fn pow(self, n: u64) -> Self {
        match self {
            RootValue::Zero if n == 0 => RootValue::ONE,
            RootValue::Zero => RootValue::Zero,
            RootValue::Root { order, exponent } => RootValue::Root {
                order,
                exponent: ((exponent as u128 * n as u128) % order as u128) as u64,
            },
        }
    }

    pub fn to_complex(self) -> Complex64 {
        to_complex(self)
    }
}

impl PartialEq for RootValue {
    fn eq(&self, other: &Self) -> bool {
        match (self.reduced(), other.reduced()) {
            (RootValue::Zero, RootValue::Zero) => true,
            (
                RootValue::Root {
                    order: a,
                    exponent: e,
                },
                RootValue::Root {
                    order: b,
                    exponent: f,
                },
            ) => a == b && e == f,
            _ => false,
        }
    }
}

impl Eq for RootValue {}

impl Hash for RootValue {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self.reduced() {
            RootValue::Zero => 0u8.hash(state),
            RootValue::Root { order, exponent } => {
                1u8.hash(state);
                order.hash(state);
                exponent.hash(state);
            }
        }
    }
}

impl fmt::Display for RootValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootValue::Zero => write!(f, "0"),
            RootValue::Root { order, exponent } => write!(f, "zeta({order})^{exponent}"),
        }
    }
}

impl Mul for RootValue {
    type Output = RootValue;

    fn mul(self, rhs: RootValue) -> RootValue {
        root_mul(self, rhs)
    }
}

/// Product of two values; mixed orders are lifted to their lcm.
pub fn root_mul(a: RootValue, b: RootValue) -> RootValue {
    match (a, b) {
        (
            RootValue::Root {
                order: n,
                exponent: e,
            },
            RootValue::Root {
                order: m,
                exponent: f,
            },
        ) => {
            let l = lcm(n, m);
            RootValue::Root {
                order: l,
                exponent: (e * (l / n) + f * (l / m)) % l,
            }
        }
        _ => RootValue::Zero,
    }
}

/// Complex conjugate, which is also the inverse of a nonzero root.
pub fn root_conj(a: RootValue) -> RootValue {
    match a {
        RootValue::Zero => RootValue::Zero,
        RootValue::Root { order, exponent } => RootValue::Root {
            order,
            exponent: (order - exponent) % order,
        },
    }
}

pub fn to_complex(a: RootValue) -> Complex64 {
    match a {
        RootValue::Zero => Complex64::new(0.0, 0.0),
        RootValue::Root { order, exponent } => unit_circle(exponent, order),
    }
}

/// `exp(2πi e/n)`, with exact values on the axes.
pub(crate) fn unit_circle(e: u64, n: u64) -> Complex64 {
    let e = e % n;
    // quarter turns are exact
    if (4 * e).is_multiple_of(n) {
        return match 4 * e / n {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    let theta = std::f64::consts::TAU * (e as f64 / n as f64);
    Complex64::new(theta.cos(), theta.sin())
}

type PolyCache = RwLock<HashMap<u64, Arc<Vec<i64>>>>;
static CYCLOTOMIC_CACHE: OnceLock<PolyCache> = OnceLock::new();

/// Coefficients of `Φ_N`, lowest degree first.
///
/// Computed as `x^N - 1` divided by `Φ_d` for every proper divisor `d | N`.
pub fn cyclotomic_polynomial(n: u64) -> Result<Arc<Vec<i64>>> {
    if n == 0 {
        return Err(Error::NotPositive("cyclotomic order"));
    }
    let cache = CYCLOTOMIC_CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap_or_else(|e| e.into_inner()).get(&n) {
        return Ok(Arc::clone(p));
    }
    let mut num = vec![0i128; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let phi_d = cyclotomic_polynomial(d)?;
        let (q, r) = divide_monic(&num, &phi_d);
        debug_assert!(r.iter().all(|&c| c == 0));
        num = q;
    }
    let coeffs: Vec<i64> = num
        .into_iter()
        .map(|c| i64::try_from(c).expect("cyclotomic coefficient fits in i64"))
        .collect();
    let coeffs = Arc::new(coeffs);
    cache
        .write()
        .unwrap_or_else(|e| e.into_inner())
        .entry(n)
        .or_insert_with(|| Arc::clone(&coeffs));
    Ok(coeffs)
}

/// Quotient and remainder of `num / den` for monic `den`.
fn divide_monic(num: &[i128], den: &[i64]) -> (Vec<i128>, Vec<i128>) {
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut rem = num.to_vec();
    while rem.len() > 1 && rem.last() == Some(&0) {
        rem.pop();
    }
    if rem.len() <= dd {
        return (vec![0], rem);
    }
    let mut quot = vec![0i128; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        if c == 0 {
            continue;
        }
        quot[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] = rem[i + j]
                .checked_sub(c.checked_mul(dj as i128).expect("coefficient overflow"))
                .expect("coefficient overflow");
        }
    }
    rem.truncate(dd.max(1));
    (quot, rem)
}

/// Integer combination `Σ_j coefficients[j] · ζ_order^j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycSum {
    order: u64,
    coefficients: Vec<i64>,
}

impl CycSum {
    pub fn zero(order: u64) -> Result<Self> {
        if order == 0 {
            return Err(Error::NotPositive("cyclotomic order"));
        }
        Ok(CycSum {
            order,
            coefficients: vec![0; order as usize],
        })
    }

    /// Sum with the given coefficients; the length fixes the order.
    pub fn from_coefficients(coefficients: Vec<i64>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::NotPositive("cyclotomic order"));
        }
        Ok(CycSum {
            order: coefficients.len() as u64,
            coefficients,
        })
    }

    /// Sum of the given values, each of which must be zero or a power of
    /// `ζ_order`.
    pub fn from_roots(order: u64, roots: impl IntoIterator<Item = RootValue>) -> Result<Self> {
        let mut sum = CycSum::zero(order)?;
        for r in roots {
            sum.add(r, 1)?;
        }
        Ok(sum)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    /// Adds `weight · root`; zero roots contribute nothing.
    pub fn add(&mut self, root: RootValue, weight: i64) -> Result<()> {
        if root.is_zero() {
            return Ok(());
        }
        let j = root.exponent_in(self.order).ok_or(match root.reduced() {
            RootValue::Root { order, .. } => Error::IncompatibleOrder {
                root_order: order,
                sum_order: self.order,
            },
            RootValue::Zero => unreachable!(),
        })?;
        let slot = &mut self.coefficients[j as usize];
        *slot = slot.checked_add(weight).expect("coefficient overflow");
        Ok(())
    }

    pub fn is_integer(&self, value: i64) -> bool {
        cycsum_is_integer(self, value)
    }

    pub fn evaluate(&self) -> Complex64 {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| unit_circle(j as u64, self.order) * c as f64)
            .sum()
    }
}

/// Exact test `P(ζ_N) == value` by divisibility of `P(x) - value` by `Φ_N`.
pub fn cycsum_is_integer(c: &CycSum, value: i64) -> bool {
    let phi = cyclotomic_polynomial(c.order).expect("order is positive");
    let mut p: Vec<i128> = c.coefficients.iter().map(|&x| x as i128).collect();
    p[0] -= value as i128;
    let (_, rem) = divide_monic(&p, &phi);
    rem.iter().all(|&x| x == 0)
}
