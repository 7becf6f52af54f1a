use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{AlgebraElement, Family, Monomial};
use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

/// Rational combination of `left ⊗ right` monomial pairs.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    family: Family,
    terms: BTreeMap<(Monomial, Monomial), Rational>,
}

impl TensorElement {
    pub fn zero(family: Family) -> Self {
        TensorElement { family, terms: BTreeMap::new() }
    }

    /// `1 ⊗ 1`
    pub fn one(family: Family) -> Self {
        Self::from_terms(family, [((Monomial::unit(), Monomial::unit()), Rational::one())])
    }

    /// `x ⊗ 1 + 1 ⊗ x` for a generator `x`.
    pub fn primitive(family: Family, n: u32) -> Self {
        Self::from_terms(
            family,
            [
                ((Monomial::generator(n), Monomial::unit()), Rational::one()),
                ((Monomial::unit(), Monomial::generator(n)), Rational::one()),
            ],
        )
    }

    pub fn from_terms(
        family: Family,
        terms: impl IntoIterator<Item = ((Monomial, Monomial), Rational)>,
    ) -> Self {
        let mut t = Self::zero(family);
        for (k, c) in terms {
            t.add_term(k.0, k.1, c);
        }
        t
    }

    /// `left ⊗ right` expanded bilinearly.
    pub fn tensor(left: &AlgebraElement, right: &AlgebraElement) -> Result<Self> {
        if left.family() != right.family() {
            return Err(Error::FamilyMismatch {
                left: left.family().to_string(),
                right: right.family().to_string(),
            });
        }
        let mut t = Self::zero(left.family());
        for (a, ca) in left.terms() {
            for (b, cb) in right.terms() {
                t.add_term(a.clone(), b.clone(), ca * cb);
            }
        }
        Ok(t)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Same tensor relabelled as another family.
    pub fn relabel(&self, family: Family) -> Self {
        TensorElement { family, terms: self.terms.clone() }
    }

    pub fn terms(&self) -> &BTreeMap<(Monomial, Monomial), Rational> {
        &self.terms
    }

    pub fn coeff(&self, left: &Monomial, right: &Monomial) -> Rational {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
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

    pub fn add_term(&mut self, left: Monomial, right: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        let slot = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
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
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::from_terms(self.family, self.terms.iter().map(|(key, c)| (key.clone(), c * k)))
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_family(other)?;
        let mut out = Self::zero(self.family);
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &other.terms {
                out.add_term(a.mul(c), b.mul(d), c1 * c2);
            }
        }
        Ok(out)
    }

    /// Whether every term has bidegree summing to `n`.
    pub fn is_homogeneous(&self, n: u32) -> bool {
        self.terms.keys().all(|(l, r)| l.degree() + r.degree() == n)
    }

    /// Drops the two primitive-shape terms `x ⊗ 1` and `1 ⊗ x`, leaving the
    /// reduced coproduct.
    pub fn reduced(&self) -> Self {
        Self::from_terms(
            self.family,
            self.terms
                .iter()
                .filter(|((l, r), _)| !l.is_unit() && !r.is_unit())
                .map(|(k, c)| (k.clone(), c.clone())),
        )
    }

    /// Applies `f` to the left leg and `g` to the right leg of every term
    /// and sums the products of the resulting values.
    pub fn pair(
        &self,
        mut left: impl FnMut(&Monomial) -> Result<Rational>,
        mut right: impl FnMut(&Monomial) -> Result<Rational>,
    ) -> Result<Rational> {
        let mut acc = Rational::zero();
        for ((l, r), c) in &self.terms {
            acc += c * left(l)? * right(r)?;
        }
        Ok(acc)
    }

    /// Maps each leg through an algebra morphism given on monomials.
    pub fn map_legs(
        &self,
        target: Family,
        mut left: impl FnMut(&Monomial) -> Result<AlgebraElement>,
        mut right: impl FnMut(&Monomial) -> Result<AlgebraElement>,
    ) -> Result<Self> {
        let mut out = Self::zero(target);
        for ((l, r), c) in &self.terms {
            let t = Self::tensor(&left(l)?, &right(r)?)?;
            for ((a, b), d) in t.terms {
                out.add_term(a, b, d * c);
            }
        }
        Ok(out)
    }

    /// Text form grouped by right leg, e.g.
    /// `(Γ₂ + Γ₁²) ⊗ Γ₁ + 3Γ₁ ⊗ Γ₂`.
    pub fn render(&self, symbol: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut groups: BTreeMap<&Monomial, Vec<(&Monomial, &Rational)>> = BTreeMap::new();
        for ((l, r), c) in &self.terms {
            groups.entry(r).or_default().push((l, c));
        }
        let mut s = String::new();
        for (i, (right, lefts)) in groups.into_iter().enumerate() {
            if lefts.len() == 1 {
                let (l, c) = lefts[0];
                let neg = c.is_negative();
                match (i, neg) {
                    (0, true) => s.push('−'),
                    (0, false) => {}
                    (_, true) => s.push_str(" − "),
                    (_, false) => s.push_str(" + "),
                }
                let a = c.abs();
                if l.is_unit() {
                    s.push_str(&format_rational(&a));
                } else {
                    if !a.is_one() {
                        s.push_str(&format_rational(&a));
                    }
                    s.push_str(&l.render(symbol));
                }
            } else {
                if i > 0 {
                    s.push_str(" + ");
                }
                let left = AlgebraElement::from_terms(
                    self.family,
                    lefts.into_iter().map(|(l, c)| (l.clone(), c.clone())),
                );
                s.push('(');
                s.push_str(&left.render(symbol));
                s.push(')');
            }
            s.push_str(" ⊗ ");
            s.push_str(&right.render(symbol));
        }
        s
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.family, self.render(self.family.symbol()))
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(self.family.symbol()))
    }
}

/// Multiplicative extension of a coproduct given on generators; `Δ(1) = 1 ⊗ 1`.
pub fn extend_coproduct(
    images: &BTreeMap<u32, TensorElement>,
    x: &AlgebraElement,
) -> Result<TensorElement> {
    let family = x.family();
    let mut powers: HashMap<(u32, u32), TensorElement> = HashMap::new();
    let mut out = TensorElement::zero(family);
    for (m, c) in x.terms() {
        let mut prod = TensorElement::one(family);
        for (g, e) in m.powers() {
            let img = images.get(&g).ok_or(Error::MissingImage(g))?;
            if !powers.contains_key(&(g, e)) {
                let mut p = TensorElement::one(family);
                for _ in 0..e {
                    p = p.mul(img)?;
                }
                powers.insert((g, e), p);
            }
            prod = prod.mul(&powers[&(g, e)])?;
        }
        for ((l, r), pc) in prod.terms {
            out.add_term(l, r, pc * c);
        }
    }
    Ok(out)
}

/// Element of the triple tensor power, used to compare the two sides of
/// coassociativity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleTensor {
    terms: BTreeMap<(Monomial, Monomial, Monomial), Rational>,
}

impl TripleTensor {
    pub fn zero() -> Self {
        TripleTensor { terms: BTreeMap::new() }
    }

    pub fn terms(&self) -> &BTreeMap<(Monomial, Monomial, Monomial), Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, k: (Monomial, Monomial, Monomial), c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// `(Δ ⊗ id) t`
    pub fn coproduct_left(
        images: &BTreeMap<u32, TensorElement>,
        t: &TensorElement,
    ) -> Result<Self> {
        let mut out = Self::zero();
        let mut cache: HashMap<Monomial, TensorElement> = HashMap::new();
        for ((l, r), c) in t.terms() {
            if !cache.contains_key(l) {
                let x = AlgebraElement::term(t.family(), l.clone(), Rational::one());
                cache.insert(l.clone(), extend_coproduct(images, &x)?);
            }
            let dl = &cache[l];
            for ((a, b), d) in dl.terms() {
                out.add_term((a.clone(), b.clone(), r.clone()), d * c);
            }
        }
        Ok(out)
    }

    /// `(id ⊗ Δ) t`
    pub fn coproduct_right(
        images: &BTreeMap<u32, TensorElement>,
        t: &TensorElement,
    ) -> Result<Self> {
        let mut out = Self::zero();
        let mut cache: HashMap<Monomial, TensorElement> = HashMap::new();
        for ((l, r), c) in t.terms() {
            if !cache.contains_key(r) {
                let x = AlgebraElement::term(t.family(), r.clone(), Rational::one());
                cache.insert(r.clone(), extend_coproduct(images, &x)?);
            }
            let dr = &cache[r];
            for ((a, b), d) in dr.terms() {
                out.add_term((l.clone(), a.clone(), b.clone()), d * c);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn m(f: &[u32]) -> Monomial {
        Monomial::from_factors(f.to_vec())
    }

    #[test]
    fn componentwise_product() {
        let a = TensorElement::from_terms(Family::Delta, [((m(&[1]), m(&[1])), int(1))]);
        let b = TensorElement::from_terms(Family::Delta, [((m(&[]), m(&[1])), int(1))]);
        let p = a.mul(&b).unwrap();
        assert_eq!(p, TensorElement::from_terms(Family::Delta, [((m(&[1]), m(&[1, 1])), int(1))]));
    }

    #[test]
    fn coproduct_extension_of_primitive_square() {
        let images = BTreeMap::from([(1, TensorElement::primitive(Family::Delta, 1))]);
        let sq = AlgebraElement::generator(Family::Delta, 1).pow(2);
        let d = extend_coproduct(&images, &sq).unwrap();
        let expected = TensorElement::from_terms(
            Family::Delta,
            [
                ((m(&[1, 1]), m(&[])), int(1)),
                ((m(&[1]), m(&[1])), int(2)),
                ((m(&[]), m(&[1, 1])), int(1)),
            ],
        );
        assert_eq!(d, expected);
        let one = AlgebraElement::one(Family::Delta);
        assert_eq!(extend_coproduct(&images, &one).unwrap(), TensorElement::one(Family::Delta));
        assert_eq!(
            extend_coproduct(&images, &AlgebraElement::generator(Family::Delta, 2)),
            Err(Error::MissingImage(2))
        );
    }

    #[test]
    fn grouped_rendering() {
        let t = TensorElement::from_terms(
            Family::Delta,
            [
                ((m(&[2]), m(&[1])), int(1)),
                ((m(&[1, 1]), m(&[1])), int(1)),
                ((m(&[1]), m(&[2])), int(3)),
            ],
        );
        assert_eq!(t.render("Γ"), "(Γ₂ + Γ₁²) ⊗ Γ₁ + 3Γ₁ ⊗ Γ₂");
        assert_eq!(TensorElement::zero(Family::Delta).render("Γ"), "0");
    }
}
