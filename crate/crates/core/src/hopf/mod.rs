//! Commutative graded polynomial Hopf algebras on generators indexed by the
//! positive integers.
//!
//! Elements are rational combinations of [`Monomial`]s in one generator
//! family (`delta_n`, `a_n` or `gamma_n`). Coproducts and antipodes are
//! given on generators and extended multiplicatively.

mod algebra;
mod axioms;
mod json;
mod tensor;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use algebra::{extend_antipode, extend_morphism, AlgebraElement};
pub use axioms::{augmentation, check_hopf_axioms, Axiom, AxiomFailure, AxiomReport};
pub use json::{AlgebraJson, MonomialTermJson, TensorJson, TensorTermJson};
pub use tensor::{extend_coproduct, TensorElement, TripleTensor};

/// Generator family label; elements of different families never mix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Delta,
    A,
    Gamma,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::Delta => "delta",
            Family::A => "a",
            Family::Gamma => "gamma",
        }
    }

    /// Symbol used in text rendering.
    pub fn symbol(self) -> &'static str {
        match self {
            Family::Delta => "δ",
            Family::A => "a",
            Family::Gamma => "γ",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Commutative monomial: a sorted multiset of generator indices. The empty
/// monomial is the unit.
///
/// Ordered by degree, then number of factors, then lexicographically on the
/// sorted indices.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn generator(n: u32) -> Self {
        assert!(n > 0, "generator indices are positive");
        Monomial(vec![n])
    }

    pub fn from_factors(mut factors: Vec<u32>) -> Self {
        assert!(!factors.contains(&0), "generator indices are positive");
        factors.sort_unstable();
        Monomial(factors)
    }

    pub fn factors(&self) -> &[u32] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] <= other.0[j] {
                v.push(self.0[i]);
                i += 1;
            } else {
                v.push(other.0[j]);
                j += 1;
            }
        }
        v.extend_from_slice(&self.0[i..]);
        v.extend_from_slice(&other.0[j..]);
        Monomial(v)
    }

    /// `(index, exponent)` pairs in ascending index order.
    pub fn powers(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &g in &self.0 {
            match out.last_mut() {
                Some((h, e)) if *h == g => *e += 1,
                _ => out.push((g, 1)),
            }
        }
        out
    }

    /// Renders e.g. `Γ₁²Γ₃`; the unit renders as `1`.
    pub fn render(&self, symbol: &str) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        let mut s = String::new();
        for (g, e) in self.powers() {
            s.push_str(symbol);
            s.push_str(&subscript(g));
            if e > 1 {
                s.push_str(&superscript(e));
            }
        }
        s
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree(), self.0.len(), &self.0).cmp(&(other.degree(), other.0.len(), &other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

fn map_digits(n: u32, digits: [char; 10]) -> String {
    n.to_string()
        .chars()
        .map(|c| digits[c.to_digit(10).unwrap() as usize])
        .collect()
}

pub(crate) fn subscript(n: u32) -> String {
    map_digits(n, ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'])
}

pub(crate) fn superscript(n: u32) -> String {
    map_digits(n, ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'])
}
