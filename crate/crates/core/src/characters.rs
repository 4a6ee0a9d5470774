//! Dirichlet characters modulo `k`.
//!
//! A character is stored as an exponent tuple `params`, one entry per cyclic
//! factor of `(Z/kZ)*`. With `N` the group exponent and `γ(n)` the index
//! vector of a unit `n`,
//!
//! ```text
//! χ(n) = ζ_N^( Σ_i params_i · (N / order_i) · γ_i(n) )      gcd(n, k) = 1
//! χ(n) = 0                                                   otherwise
//! ```
//!
//! so `params_i` is the exponent of the canonical primitive root of unity
//! `ζ_{order_i}` assigned to the `i`-th generator. Under that canonical choice
//! the params tuple is also Dirichlet's historical label.

use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arith::{gcd, reduce};
use crate::cyclotomic::{root_conj, root_mul, CycSum, RootValue};
use crate::error::{Error, Result};
use crate::unit_group::{decompose, IndexVector, UnitGroupStructure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CharacterClass {
    Principal,
    RealNonPrincipal,
    Complex,
}

impl std::fmt::Display for CharacterClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CharacterClass::Principal => "Principal",
            CharacterClass::RealNonPrincipal => "RealNonPrincipal",
            CharacterClass::Complex => "Complex",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone)]
pub struct DirichletCharacter {
    structure: Arc<UnitGroupStructure>,
    params: Vec<u64>,
    order: u64,
}

impl PartialEq for DirichletCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.modulus() == other.modulus() && self.params == other.params
    }
}

impl Eq for DirichletCharacter {}

impl Serialize for DirichletCharacter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("DirichletCharacter", 3)?;
        s.serialize_field("modulus", &self.modulus())?;
        s.serialize_field("params", &self.params)?;
        s.serialize_field("label", &dirichlet_label(self))?;
        s.end()
    }
}

impl DirichletCharacter {
    pub fn new(structure: Arc<UnitGroupStructure>, params: Vec<u64>) -> Result<Self> {
        if params.len() != structure.factors.len() {
            return Err(Error::LengthMismatch {
                expected: structure.factors.len(),
                got: params.len(),
            });
        }
        for (position, (f, &value)) in structure.factors.iter().zip(&params).enumerate() {
            if value >= f.order {
                return Err(Error::ExponentOutOfRange {
                    position,
                    value,
                    order: f.order,
                });
            }
        }
        let order = structure.exponent();
        Ok(DirichletCharacter {
            structure,
            params,
            order,
        })
    }

    pub fn principal_of(structure: Arc<UnitGroupStructure>) -> Self {
        let params = vec![0; structure.factors.len()];
        Self::new(structure, params).expect("zero params are in range")
    }

    pub fn modulus(&self) -> u64 {
        self.structure.modulus
    }

    pub fn params(&self) -> &[u64] {
        &self.params
    }

    /// `N`: every nonzero value is an `N`-th root of unity.
    pub fn common_order(&self) -> u64 {
        self.order
    }

    pub fn structure(&self) -> &Arc<UnitGroupStructure> {
        &self.structure
    }

    pub fn is_principal(&self) -> bool {
        self.params.iter().all(|&p| p == 0)
    }

    pub fn evaluate(&self, n: i64) -> RootValue {
        match self.structure.index_vector(n) {
            Ok(v) => self.evaluate_index(&v),
            Err(_) => RootValue::Zero,
        }
    }

    /// Value at the unit with the given index vector.
    pub fn evaluate_index(&self, v: &IndexVector) -> RootValue {
        let n = self.order as u128;
        let e = self
            .structure
            .factors
            .iter()
            .zip(&self.params)
            .zip(v.exponents())
            .fold(0u128, |acc, ((f, &p), &g)| {
                (acc + p as u128 * (self.order / f.order) as u128 * g as u128) % n
            });
        RootValue::Root {
            order: self.order,
            exponent: e as u64,
        }
    }

    /// `χ(0), χ(1), …, χ(k-1)`.
    pub fn values(&self) -> Vec<RootValue> {
        (0..self.modulus() as i64).map(|n| self.evaluate(n)).collect()
    }

    /// Root of unity `ζ_{order_i}^{params_i}` attached to each generator.
    pub fn generator_roots(&self) -> Vec<RootValue> {
        self.structure
            .factors
            .iter()
            .zip(&self.params)
            .map(|(f, &p)| RootValue::root(f.order, p as i64))
            .collect()
    }

    pub fn classify(&self) -> CharacterClass {
        classify(self)
    }

    /// Classification read off the generator roots rather than the values:
    /// principal when every root is 1, real when every root is ±1.
    pub fn classify_by_roots(&self) -> CharacterClass {
        let roots = self.generator_roots();
        if roots.iter().all(|&r| r == RootValue::ONE) {
            CharacterClass::Principal
        } else if roots.iter().all(|r| r.is_real()) {
            CharacterClass::RealNonPrincipal
        } else {
            CharacterClass::Complex
        }
    }

    pub fn is_real(&self) -> bool {
        self.classify() != CharacterClass::Complex
    }

    pub fn label(&self) -> Vec<u64> {
        dirichlet_label(self)
    }
}

/// Principal character modulo `k`.
pub fn principal(k: u64) -> Result<DirichletCharacter> {
    Ok(DirichletCharacter::principal_of(Arc::new(decompose(k)?)))
}

/// All `φ(k)` characters, params in lexicographic order; the principal
/// character comes first.
pub fn enumerate_characters(k: u64) -> Result<Vec<DirichletCharacter>> {
    let structure = Arc::new(decompose(k)?);
    characters_of(&structure)
}

pub fn characters_of(structure: &Arc<UnitGroupStructure>) -> Result<Vec<DirichletCharacter>> {
    structure
        .all_index_vectors()
        .map(|params| DirichletCharacter::new(Arc::clone(structure), params))
        .collect()
}

fn same_modulus(a: &DirichletCharacter, b: &DirichletCharacter) -> Result<()> {
    if a.modulus() != b.modulus() {
        return Err(Error::ModulusMismatch(a.modulus(), b.modulus()));
    }
    Ok(())
}

/// Pointwise product: params add modulo the factor orders.
pub fn char_mul(a: &DirichletCharacter, b: &DirichletCharacter) -> Result<DirichletCharacter> {
    same_modulus(a, b)?;
    let params = a
        .structure
        .factors
        .iter()
        .zip(a.params.iter().zip(&b.params))
        .map(|(f, (&x, &y))| (x + y) % f.order)
        .collect();
    DirichletCharacter::new(Arc::clone(&a.structure), params)
}

/// Complex conjugate (= inverse): params negate modulo the factor orders.
pub fn char_conj(a: &DirichletCharacter) -> DirichletCharacter {
    let params = a
        .structure
        .factors
        .iter()
        .zip(&a.params)
        .map(|(f, &x)| (f.order - x) % f.order)
        .collect();
    DirichletCharacter::new(Arc::clone(&a.structure), params).expect("negated params are in range")
}

/// Classification by values over a full period.
pub fn classify(chi: &DirichletCharacter) -> CharacterClass {
    let k = chi.modulus();
    let units = (0..k).filter(|&n| gcd(n, k) == 1);
    let mut all_one = true;
    for n in units {
        let v = chi.evaluate(n as i64);
        if !v.is_real() {
            return CharacterClass::Complex;
        }
        all_one &= v == RootValue::ONE;
    }
    if all_one {
        CharacterClass::Principal
    } else {
        CharacterClass::RealNonPrincipal
    }
}

/// An exact orthogonality sum and whether it equals the expected integer.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrthogonalityCheck {
    pub sum: CycSum,
    pub expected: i64,
    pub holds: bool,
}

impl OrthogonalityCheck {
    fn new(sum: CycSum, expected: i64) -> Self {
        let holds = sum.is_integer(expected);
        OrthogonalityCheck {
            sum,
            expected,
            holds,
        }
    }
}

/// `Σ_{g unit} χ(g)`, expected `φ(k)` for the principal character and 0
/// otherwise.
pub fn orthogonality_over_group(chi: &DirichletCharacter) -> OrthogonalityCheck {
    let s = &chi.structure;
    let mut sum = CycSum::zero(chi.order).expect("positive order");
    for v in s.all_index_vectors() {
        sum.add(chi.evaluate_index(&IndexVector(v)), 1)
            .expect("values lie in the common order");
    }
    let expected = if chi.is_principal() { s.order() as i64 } else { 0 };
    OrthogonalityCheck::new(sum, expected)
}

fn unit_index(s: &UnitGroupStructure, g: i64) -> Result<IndexVector> {
    s.index_vector(g)
}

/// `Σ_χ χ(g)`, expected `φ(k)` when `g ≡ 1 (mod k)` and 0 otherwise.
pub fn orthogonality_over_characters(k: u64, g: i64) -> Result<OrthogonalityCheck> {
    let structure = Arc::new(decompose(k)?);
    let chars = characters_of(&structure)?;
    orthogonality_over_characters_in(&chars, g)
}

/// As [`orthogonality_over_characters`] over a precomputed character list.
pub fn orthogonality_over_characters_in(
    chars: &[DirichletCharacter],
    g: i64,
) -> Result<OrthogonalityCheck> {
    let s = chars[0].structure();
    let vg = unit_index(s, g)?;
    let mut sum = CycSum::zero(s.exponent())?;
    for chi in chars {
        sum.add(chi.evaluate_index(&vg), 1)?;
    }
    let expected = if reduce(g, s.modulus) == 1 % s.modulus {
        s.order() as i64
    } else {
        0
    };
    Ok(OrthogonalityCheck::new(sum, expected))
}

/// `Σ_χ χ(g)·conj(χ(h))`, expected `φ(k)` when `g ≡ h (mod k)` and 0
/// otherwise.
pub fn weighted_orthogonality(k: u64, g: i64, h: i64) -> Result<OrthogonalityCheck> {
    let structure = Arc::new(decompose(k)?);
    let chars = characters_of(&structure)?;
    weighted_orthogonality_in(&chars, g, h)
}

pub fn weighted_orthogonality_in(
    chars: &[DirichletCharacter],
    g: i64,
    h: i64,
) -> Result<OrthogonalityCheck> {
    let s = chars[0].structure();
    let vg = unit_index(s, g)?;
    let vh = unit_index(s, h)?;
    let mut sum = CycSum::zero(s.exponent())?;
    for chi in chars {
        sum.add(root_mul(chi.evaluate_index(&vg), root_conj(chi.evaluate_index(&vh))), 1)?;
    }
    let expected = if reduce(g, s.modulus) == reduce(h, s.modulus) {
        s.order() as i64
    } else {
        0
    };
    Ok(OrthogonalityCheck::new(sum, expected))
}

/// Historical label `(𝔞, 𝔟, 𝔠, 𝔠′, …)`: the exponents of the canonical
/// primitive roots of unity, one per generator.
///
/// Modulo 2 the unit group has no cyclic factor, but 1 is a primitive root
/// there, so its only character carries the label `(0)` like any other prime.
pub fn dirichlet_label(chi: &DirichletCharacter) -> Vec<u64> {
    if chi.modulus() == 2 {
        return vec![0];
    }
    chi.params.clone()
}

pub fn character_from_label(k: u64, label: &[u64]) -> Result<DirichletCharacter> {
    let structure = Arc::new(decompose(k)?);
    if k == 2 {
        return match label {
            [0] => Ok(DirichletCharacter::principal_of(structure)),
            [e] => Err(Error::ExponentOutOfRange {
                position: 0,
                value: *e,
                order: 1,
            }),
            _ => Err(Error::LengthMismatch {
                expected: 1,
                got: label.len(),
            }),
        };
    }
    DirichletCharacter::new(structure, label.to_vec())
}
