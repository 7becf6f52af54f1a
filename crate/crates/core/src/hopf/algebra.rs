use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{Family, Monomial};
use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

/// Rational combination of commutative monomials in one generator family.
///
/// Zero coefficients are never stored, so structural equality is equality
/// of polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    family: Family,
    terms: BTreeMap<Monomial, Rational>,
}

impl AlgebraElement {
    pub fn zero(family: Family) -> Self {
        AlgebraElement { family, terms: BTreeMap::new() }
    }

    pub fn one(family: Family) -> Self {
        Self::term(family, Monomial::unit(), Rational::one())
    }

    pub fn generator(family: Family, n: u32) -> Self {
        Self::term(family, Monomial::generator(n), Rational::one())
    }

    pub fn term(family: Family, m: Monomial, c: Rational) -> Self {
        let mut e = Self::zero(family);
        e.add_term(m, c);
        e
    }

    pub fn from_terms(family: Family, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut e = Self::zero(family);
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether every term has degree `n` (the zero element is homogeneous
    /// of every degree).
    pub fn is_homogeneous(&self, n: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == n)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_family(&self, other: &Self) -> Result<()> {
        if self.family != other.family {
            return Err(Error::FamilyMismatch {
                left: self.family.to_string(),
                right: other.family.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_family(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::from_terms(self.family, self.terms.iter().map(|(m, c)| (m.clone(), c * k)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_family(other)?;
        let mut out = Self::zero(self.family);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.family);
        for _ in 0..e {
            acc = acc.mul(self).expect("same family");
        }
        acc
    }

    /// Constant term (the augmentation of a graded connected algebra).
    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::unit())
    }

    /// Same polynomial relabelled as another family.
    pub fn relabel(&self, family: Family) -> Self {
        AlgebraElement { family, terms: self.terms.clone() }
    }

    /// Evaluates with `values[n-1]` substituted for generator `n`.
    pub fn evaluate(&self, values: &[Rational]) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for &g in m.factors() {
                let x = values
                    .get(g as usize - 1)
                    .ok_or(Error::OrderTooSmall { requested: g as usize, available: values.len() })?;
                v *= x;
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Text form such as `−Γ₃ + 4Γ₁Γ₂ − 2Γ₁³`, terms in monomial order.
    pub fn render(&self, symbol: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => s.push('−'),
                (0, false) => {}
                (_, true) => s.push_str(" − "),
                (_, false) => s.push_str(" + "),
            }
            let a = c.abs();
            if m.is_unit() {
                s.push_str(&format_rational(&a));
            } else {
                if !a.is_one() {
                    s.push_str(&format_rational(&a));
                }
                s.push_str(&m.render(symbol));
            }
        }
        s
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.family, self.render(self.family.symbol()))
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(self.family.symbol()))
    }
}

/// Algebra morphism determined by generator images; the result lives in the
/// family of the images (`target`).
pub fn extend_morphism(
    images: &BTreeMap<u32, AlgebraElement>,
    target: Family,
    x: &AlgebraElement,
) -> Result<AlgebraElement> {
    let mut powers: HashMap<(u32, u32), AlgebraElement> = HashMap::new();
    let mut out = AlgebraElement::zero(target);
    for (m, c) in x.terms() {
        let mut prod = AlgebraElement::one(target);
        for (g, e) in m.powers() {
            let img = images.get(&g).ok_or(Error::MissingImage(g))?;
            if img.family() != target {
                return Err(Error::FamilyMismatch {
                    left: target.to_string(),
                    right: img.family().to_string(),
                });
            }
            let p = powers.entry((g, e)).or_insert_with(|| img.pow(e));
            prod = prod.mul(p)?;
        }
        for (pm, pc) in prod.terms {
            out.add_term(pm, pc * c);
        }
    }
    Ok(out)
}

/// Multiplicative extension of an antipode given on generators.
pub fn extend_antipode(
    images: &BTreeMap<u32, AlgebraElement>,
    x: &AlgebraElement,
) -> Result<AlgebraElement> {
    extend_morphism(images, x.family(), x)
}
