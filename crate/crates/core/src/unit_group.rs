//! Cyclic decomposition of `(Z/kZ)*` with canonical generators.
//!
//! For `k = 2^λ · p1^π1 ⋯ pj^πj` the unit group splits as
//!
//! - `λ >= 3`: `<-1> × <5>` of orders `2` and `2^(λ-2)` on the 2-part,
//! - `λ = 2`: `<-1>` of order 2,
//! - `λ <= 1`: nothing,
//!
//! followed by one cyclic factor per odd prime power, generated by its
//! smallest primitive root. Every generator is lifted to a residue mod `k`
//! that is 1 on the other prime-power components, so a unit `n` is
//! `∏ generator_i^(γ_i)` where `γ` is its index vector.

use serde::Serialize;

use crate::arith::{self, factorize, find_primitive_root, gcd, inverse_mod, lcm, mul_mod, pow_mod_u};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorKind {
    /// `-1` on the 2-part (λ >= 2).
    MinusOne,
    /// `5` on the 2-part (λ >= 3).
    Five,
    /// Primitive root on an odd prime power.
    OddPrimePower { prime: u64, exponent: u32 },
}

/// One cyclic factor: a generator mod `k` and its order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicFactor {
    pub generator: u64,
    pub order: u64,
    pub kind: FactorKind,
    /// The prime-power component `q` this factor lives on.
    pub component: u64,
    /// The generator reduced modulo `component`.
    pub local_generator: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitGroupStructure {
    pub modulus: u64,
    pub lambda: u32,
    pub factors: Vec<CyclicFactor>,
}

/// Exponent tuple of a unit with respect to the cyclic factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IndexVector(pub Vec<u64>);

impl IndexVector {
    pub fn exponents(&self) -> &[u64] {
        &self.0
    }
}

fn crt_lift(local: u64, component: u64, k: u64) -> u64 {
    let cofactor = k / component;
    if cofactor == 1 {
        return local % k;
    }
    // x = 1 + cofactor * t with x ≡ local (mod component)
    let inv = inverse_mod(cofactor % component, component).expect("coprime components");
    let t = mul_mod((local + component - 1) % component, inv, component);
    (1 + cofactor * t) % k
}

/// Canonical cyclic decomposition of `(Z/kZ)*`.
pub fn decompose(k: u64) -> Result<UnitGroupStructure> {
    let f = factorize(k)?;
    let mut lambda = 0;
    let mut factors = Vec::new();
    for &(p, e) in &f.factors {
        let q = p.pow(e);
        if p == 2 {
            lambda = e;
            if e >= 2 {
                factors.push(CyclicFactor {
                    generator: crt_lift(q - 1, q, k),
                    order: 2,
                    kind: FactorKind::MinusOne,
                    component: q,
                    local_generator: q - 1,
                });
            }
            if e >= 3 {
                factors.push(CyclicFactor {
                    generator: crt_lift(5, q, k),
                    order: q / 4,
                    kind: FactorKind::Five,
                    component: q,
                    local_generator: 5,
                });
            }
        } else {
            let g = find_primitive_root(q)?;
            factors.push(CyclicFactor {
                generator: crt_lift(g, q, k),
                order: (p - 1) * p.pow(e - 1),
                kind: FactorKind::OddPrimePower {
                    prime: p,
                    exponent: e,
                },
                component: q,
                local_generator: g,
            });
        }
    }
    Ok(UnitGroupStructure {
        modulus: k,
        lambda,
        factors,
    })
}

impl UnitGroupStructure {
    /// `|(Z/kZ)*|`, the product of the factor orders.
    pub fn order(&self) -> u64 {
        self.factors.iter().map(|f| f.order).product()
    }

    /// Group exponent: lcm of the factor orders (1 for the trivial group).
    pub fn exponent(&self) -> u64 {
        self.factors.iter().fold(1, |acc, f| lcm(acc, f.order))
    }

    pub fn orders(&self) -> Vec<u64> {
        self.factors.iter().map(|f| f.order).collect()
    }

    pub fn is_unit(&self, n: i64) -> bool {
        gcd(arith::reduce(n, self.modulus), self.modulus) == 1
    }

    /// Units in `[0, k)`, ascending. For `k = 1` this is `[0]`.
    pub fn units(&self) -> Vec<u64> {
        (0..self.modulus)
            .filter(|&n| gcd(n, self.modulus) == 1)
            .collect()
    }

    /// Index vector of a unit: the exponents `γ_i` with `n ≡ ∏ g_i^(γ_i)`.
    pub fn index_vector(&self, n: i64) -> Result<IndexVector> {
        if !self.is_unit(n) {
            return Err(Error::NotCoprime {
                n,
                modulus: self.modulus,
            });
        }
        self.factors
            .iter()
            .map(|f| component_index(f, arith::reduce(n, f.component)))
            .collect::<Result<Vec<_>>>()
            .map(IndexVector)
    }

    /// Inverse of [`index_vector`](Self::index_vector).
    pub fn reconstruct(&self, v: &[u64]) -> Result<u64> {
        if v.len() != self.factors.len() {
            return Err(Error::LengthMismatch {
                expected: self.factors.len(),
                got: v.len(),
            });
        }
        let k = self.modulus;
        let mut acc = 1 % k;
        for (position, (f, &e)) in self.factors.iter().zip(v).enumerate() {
            if e >= f.order {
                return Err(Error::ExponentOutOfRange {
                    position,
                    value: e,
                    order: f.order,
                });
            }
            acc = mul_mod(acc, pow_mod_u(f.generator, e, k), k);
        }
        Ok(acc)
    }

    /// Every exponent tuple in lexicographic order.
    pub fn all_index_vectors(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        let orders = self.orders();
        let total = self.order();
        (0..total).map(move |mut i| {
            let mut v = vec![0; orders.len()];
            for (slot, &o) in v.iter_mut().zip(&orders).rev() {
                *slot = i % o;
                i /= o;
            }
            v
        })
    }
}

fn component_index(f: &CyclicFactor, r: u64) -> Result<u64> {
    match f.kind {
        FactorKind::MinusOne => Ok(if r % 4 == 1 { 0 } else { 1 }),
        FactorKind::Five => {
            let q = f.component;
            let r = if r % 4 == 3 { q - r } else { r };
            arith::index_of(r as i64, 5, q)
        }
        FactorKind::OddPrimePower { .. } => {
            arith::index_of(r as i64, f.local_generator, f.component)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::euler_phi;
    use std::collections::HashSet;

    fn brute_order(a: u64, m: u64) -> u64 {
        if m == 1 {
            return 1;
        }
        let mut x = a % m;
        let mut k = 1;
        while x != 1 {
            x = x * a % m;
            k += 1;
        }
        k
    }

    #[test]
    fn decompose_eight() {
        let s = decompose(8).unwrap();
        assert_eq!(s.lambda, 3);
        let gens: Vec<_> = s.factors.iter().map(|f| (f.generator, f.order)).collect();
        assert_eq!(gens, vec![(7, 2), (5, 2)]);
    }

    #[test]
    fn decompose_eleven() {
        let s = decompose(11).unwrap();
        assert_eq!(s.lambda, 0);
        let gens: Vec<_> = s.factors.iter().map(|f| (f.generator, f.order)).collect();
        assert_eq!(gens, vec![(2, 10)]);
    }

    #[test]
    fn decompose_twelve() {
        let s = decompose(12).unwrap();
        let gens: Vec<_> = s.factors.iter().map(|f| (f.generator, f.order)).collect();
        // 7 ≡ -1 (mod 4), 7 ≡ 1 (mod 3); 5 ≡ 1 (mod 4), 5 ≡ 2 (mod 3)
        assert_eq!(gens, vec![(7, 2), (5, 2)]);
        let images: HashSet<u64> = s
            .all_index_vectors()
            .map(|v| s.reconstruct(&v).unwrap())
            .collect();
        assert_eq!(images, HashSet::from([1, 5, 7, 11]));
    }

    #[test]
    fn trivial_groups() {
        for k in [1, 2] {
            let s = decompose(k).unwrap();
            assert!(s.factors.is_empty());
            assert_eq!(s.order(), 1);
            assert_eq!(s.exponent(), 1);
            assert_eq!(s.index_vector(5).unwrap(), IndexVector(vec![]));
        }
        assert!(decompose(0).is_err());
        let four = decompose(4).unwrap();
        assert_eq!(four.factors.len(), 1);
        assert_eq!((four.factors[0].generator, four.factors[0].order), (3, 2));
    }

    #[test]
    fn index_vector_examples() {
        let s8 = decompose(8).unwrap();
        // brute force over the 4 exponent pairs: 7^a 5^b ≡ 3 (mod 8)
        let hits: Vec<_> = (0..2)
            .flat_map(|a| (0..2).map(move |b| (a, b)))
            .filter(|&(a, b)| 7u64.pow(a) * 5u64.pow(b) % 8 == 3)
            .collect();
        assert_eq!(hits, vec![(1, 1)]);
        assert_eq!(s8.index_vector(3).unwrap().0, vec![1, 1]);
        assert_eq!(s8.reconstruct(&[1, 1]).unwrap(), 3);

        let s11 = decompose(11).unwrap();
        assert_eq!(s11.index_vector(10).unwrap().0, vec![5]);
        assert_eq!(s11.index_vector(-1).unwrap().0, vec![5]);

        for k in 2..50 {
            let s = decompose(k).unwrap();
            assert!(s.index_vector(1).unwrap().0.iter().all(|&e| e == 0));
            assert_eq!(s.reconstruct(&vec![0; s.factors.len()]).unwrap(), 1);
        }
    }

    #[test]
    fn errors() {
        let s = decompose(12).unwrap();
        assert_eq!(s.index_vector(6), Err(Error::NotCoprime { n: 6, modulus: 12 }));
        assert!(matches!(
            s.reconstruct(&[2, 0]),
            Err(Error::ExponentOutOfRange { position: 0, .. })
        ));
        assert!(matches!(s.reconstruct(&[0]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn round_trip_mod_24() {
        let s = decompose(24).unwrap();
        let units = s.units();
        assert_eq!(units.len(), 8);
        for &n in &units {
            let v = s.index_vector(n as i64).unwrap();
            assert_eq!(s.reconstruct(&v.0).unwrap(), n);
        }
    }

    #[test]
    fn generators_have_declared_orders() {
        for k in 1..=500 {
            let s = decompose(k).unwrap();
            for f in &s.factors {
                assert_eq!(brute_order(f.generator, k), f.order, "k = {k}");
            }
        }
    }

    #[test]
    fn factor_orders_multiply_to_phi() {
        for k in 1..=500 {
            assert_eq!(decompose(k).unwrap().order(), euler_phi(k).unwrap(), "k = {k}");
        }
    }

    #[test]
    fn reconstruction_is_bijective() {
        for k in 1..=500 {
            let s = decompose(k).unwrap();
            let images: Vec<u64> = s
                .all_index_vectors()
                .map(|v| s.reconstruct(&v).unwrap())
                .collect();
            let distinct: HashSet<_> = images.iter().copied().collect();
            assert_eq!(distinct.len(), images.len(), "k = {k}");
            assert_eq!(distinct, s.units().into_iter().collect(), "k = {k}");
        }
    }

    #[test]
    fn index_vector_is_a_homomorphism() {
        for k in 1..=200u64 {
            let s = decompose(k).unwrap();
            let orders = s.orders();
            let units = s.units();
            for &m in &units {
                let vm = s.index_vector(m as i64).unwrap();
                for &n in &units {
                    let vn = s.index_vector(n as i64).unwrap();
                    let vmn = s.index_vector((m * n % k) as i64).unwrap();
                    let sum: Vec<u64> = vm
                        .0
                        .iter()
                        .zip(&vn.0)
                        .zip(&orders)
                        .map(|((a, b), o)| (a + b) % o)
                        .collect();
                    assert_eq!(vmn.0, sum, "k = {k}, m = {m}, n = {n}");
                }
            }
        }
    }
}
