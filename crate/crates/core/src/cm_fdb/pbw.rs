//! The enveloping algebra spanned by `X`, `Y`, `delta_n` with
//! `[Y, X] = X`, `[Y, δ_n] = n δ_n`, `[δ_n, δ_m] = 0`, `[X, δ_n] = δ_{n+1}`,
//! in the PBW basis `δ^α Y^b X^c`, and the recursive coproduct of `delta_n`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::hopf::{superscript, Family, Monomial, TensorElement};
use crate::rational::{int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Delta(u32),
    Y,
    X,
}

impl Letter {
    fn rank(self) -> u8 {
        match self {
            Letter::Delta(_) => 0,
            Letter::Y => 1,
            Letter::X => 2,
        }
    }
}

/// Normal-form word `δ^α Y^y X^x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NCWord {
    pub deltas: Monomial,
    pub y: u32,
    pub x: u32,
}

impl NCWord {
    pub fn unit() -> Self {
        NCWord { deltas: Monomial::unit(), y: 0, x: 0 }
    }

    pub fn delta(n: u32) -> Self {
        NCWord { deltas: Monomial::generator(n), y: 0, x: 0 }
    }

    pub fn is_delta_only(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn letters(&self) -> Vec<Letter> {
        let mut out: Vec<Letter> = self.deltas.factors().iter().map(|&n| Letter::Delta(n)).collect();
        out.extend(std::iter::repeat_n(Letter::Y, self.y as usize));
        out.extend(std::iter::repeat_n(Letter::X, self.x as usize));
        out
    }
}

impl fmt::Display for NCWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.deltas.is_unit() && self.is_delta_only() {
            return f.write_str("1");
        }
        if !self.deltas.is_unit() {
            f.write_str(&self.deltas.render("δ"))?;
        }
        for (sym, e) in [("Y", self.y), ("X", self.x)] {
            match e {
                0 => {}
                1 => f.write_str(sym)?,
                _ => write!(f, "{sym}{}", superscript(e))?,
            }
        }
        Ok(())
    }
}

/// Rational combination of normal-form words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NCElement {
    terms: BTreeMap<NCWord, Rational>,
}

impl NCElement {
    pub fn zero() -> Self {
        NCElement::default()
    }

    pub fn one() -> Self {
        Self::word(NCWord::unit())
    }

    pub fn word(w: NCWord) -> Self {
        let mut e = Self::zero();
        e.add_term(w, Rational::one());
        e
    }

    pub fn letter(l: Letter) -> Self {
        match l {
            Letter::Delta(n) => Self::word(NCWord::delta(n)),
            Letter::Y => Self::word(NCWord { deltas: Monomial::unit(), y: 1, x: 0 }),
            Letter::X => Self::word(NCWord { deltas: Monomial::unit(), y: 0, x: 1 }),
        }
    }

    pub fn terms(&self) -> &BTreeMap<NCWord, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: NCWord, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * k);
        }
        out
    }
}

/// `δ^α Y^b X^c · letter` in normal form.
fn word_times_letter(w: &NCWord, l: Letter, coeff: &Rational, out: &mut NCElement) {
    match l {
        Letter::X => out.add_term(NCWord { x: w.x + 1, ..w.clone() }, coeff.clone()),
        Letter::Y => {
            // X^c Y = (Y - c) X^c
            out.add_term(NCWord { y: w.y + 1, ..w.clone() }, coeff.clone());
            out.add_term(w.clone(), -(coeff * int(i64::from(w.x))));
        }
        Letter::Delta(n) => {
            // X^c δ_n = Σ_j C(c,j) δ_{n+j} X^(c-j); Y^b δ_m = δ_m (Y + m)^b
            for j in 0..=w.x {
                let cj = binomial(i64::from(w.x), i64::from(j));
                let m = n + j;
                let deltas = w.deltas.mul(&Monomial::generator(m));
                for i in 0..=w.y {
                    let bi = binomial(i64::from(w.y), i64::from(i));
                    let pow = num_traits::pow(num_bigint::BigInt::from(m), (w.y - i) as usize);
                    let c = coeff * int(cj as i64) * int(bi as i64) * Rational::from_integer(pow);
                    out.add_term(NCWord { deltas: deltas.clone(), y: i, x: w.x - j }, c);
                }
            }
        }
    }
}

fn element_times_letter(e: &NCElement, l: Letter) -> NCElement {
    let mut out = NCElement::zero();
    for (w, c) in &e.terms {
        word_times_letter(w, l, c, &mut out);
    }
    out
}

/// Product in the PBW basis, computed by right multiplication with the
/// letters of each word of `v` using closed commutation formulas.
pub fn nc_multiply(u: &NCElement, v: &NCElement) -> NCElement {
    let mut out = NCElement::zero();
    for (w, c) in &v.terms {
        let mut acc = u.scale(c);
        for l in w.letters() {
            acc = element_times_letter(&acc, l);
        }
        out = out.add(&acc);
    }
    out
}

/// Normal form of an arbitrary letter sequence by repeated application of
/// the rewriting rules on the leftmost out-of-order pair.
pub fn nc_normal_form(word: &[Letter]) -> NCElement {
    let mut pending: BTreeMap<Vec<Letter>, Rational> = BTreeMap::new();
    pending.insert(word.to_vec(), Rational::one());
    let mut out = NCElement::zero();
    while let Some((w, c)) = pending.pop_first() {
        if c.is_zero() {
            continue;
        }
        let pos = w.windows(2).position(|p| {
            p[0].rank() > p[1].rank() || matches!((p[0], p[1]), (Letter::Delta(a), Letter::Delta(b)) if a > b)
        });
        let Some(i) = pos else {
            let mut nw = NCWord::unit();
            let mut ds = Vec::new();
            for l in &w {
                match l {
                    Letter::Delta(n) => ds.push(*n),
                    Letter::Y => nw.y += 1,
                    Letter::X => nw.x += 1,
                }
            }
            nw.deltas = Monomial::from_factors(ds);
            out.add_term(nw, c);
            continue;
        };
        let mut push = |mid: Vec<Letter>, k: Rational| {
            let mut nw = w[..i].to_vec();
            nw.extend(mid);
            nw.extend_from_slice(&w[i + 2..]);
            *pending.entry(nw).or_insert_with(Rational::zero) += &c * k;
        };
        match (w[i], w[i + 1]) {
            (Letter::X, Letter::Delta(n)) => {
                push(vec![Letter::Delta(n), Letter::X], Rational::one());
                push(vec![Letter::Delta(n + 1)], Rational::one());
            }
            (Letter::Y, Letter::Delta(n)) => {
                push(vec![Letter::Delta(n), Letter::Y], Rational::one());
                push(vec![Letter::Delta(n)], int(i64::from(n)));
            }
            (Letter::X, Letter::Y) => {
                push(vec![Letter::Y, Letter::X], Rational::one());
                push(vec![Letter::X], -Rational::one());
            }
            (a @ Letter::Delta(_), b @ Letter::Delta(_)) => push(vec![b, a], Rational::one()),
            _ => unreachable!("pair is out of order"),
        }
    }
    out
}

/// Element of the tensor square of the PBW algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NCTensor {
    terms: BTreeMap<(NCWord, NCWord), Rational>,
}

impl NCTensor {
    pub fn zero() -> Self {
        NCTensor::default()
    }

    pub fn terms(&self) -> &BTreeMap<(NCWord, NCWord), Rational> {
        &self.terms
    }

    pub fn add_term(&mut self, l: NCWord, r: NCWord, c: Rational) {
        if c.is_zero() {
            return;
        }
        let k = (l, r);
        let slot = self.terms.entry(k.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// `x ⊗ 1 + 1 ⊗ x` for a normal-form word `x`.
    pub fn primitive(w: NCWord) -> Self {
        let mut t = Self::zero();
        t.add_term(w.clone(), NCWord::unit(), Rational::one());
        t.add_term(NCWord::unit(), w, Rational::one());
        t
    }

    /// Componentwise product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            for ((p, q), d) in &other.terms {
                let left = nc_multiply(&NCElement::word(a.clone()), &NCElement::word(p.clone()));
                let right = nc_multiply(&NCElement::word(b.clone()), &NCElement::word(q.clone()));
                let k = c * d;
                for (l, lc) in &left.terms {
                    for (r, rc) in &right.terms {
                        out.add_term(l.clone(), r.clone(), &k * lc * rc);
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        let mut out = self.mul(other);
        for ((l, r), c) in other.mul(self).terms {
            out.add_term(l, r, -c);
        }
        out
    }
}

/// `Δ(X) = X ⊗ 1 + 1 ⊗ X + δ_1 ⊗ Y`
pub fn coproduct_x() -> NCTensor {
    let mut t = NCTensor::primitive(NCWord { deltas: Monomial::unit(), y: 0, x: 1 });
    t.add_term(NCWord::delta(1), NCWord { deltas: Monomial::unit(), y: 1, x: 0 }, Rational::one());
    t
}

/// `Δ(δ_n)` in the tensor square of the PBW algebra, from
/// `Δ(δ_1) = δ_1 ⊗ 1 + 1 ⊗ δ_1` and `Δ(δ_{n+1}) = [Δ(X), Δ(δ_n)]`.
pub fn recursive_coproduct_nc(n: u32) -> Result<NCTensor> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let dx = coproduct_x();
    let mut d = NCTensor::primitive(NCWord::delta(1));
    for _ in 1..n {
        d = dx.commutator(&d);
    }
    Ok(d)
}

/// [`recursive_coproduct_nc`] read as a tensor of commutative `delta`
/// monomials. Any surviving `X` or `Y` letter is an error.
pub fn recursive_coproduct_delta(n: u32) -> Result<TensorElement> {
    let nc = recursive_coproduct_nc(n)?;
    let residual = nc.terms.keys().filter(|(l, r)| !l.is_delta_only() || !r.is_delta_only()).count();
    if residual > 0 {
        return Err(Error::ResidualLetters(residual));
    }
    Ok(TensorElement::from_terms(
        Family::Delta,
        nc.terms.into_iter().map(|((l, r), c)| ((l.deltas, r.deltas), c)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cm_fdb::formulas::coproduct_delta;

    fn e(l: &[Letter]) -> NCElement {
        nc_normal_form(l)
    }

    #[test]
    fn defining_relations() {
        use Letter::*;
        let expect = NCElement::word(NCWord { deltas: Monomial::generator(1), y: 0, x: 1 })
            .add(&NCElement::letter(Delta(2)));
        assert_eq!(e(&[X, Delta(1)]), expect);
        assert_eq!(nc_multiply(&NCElement::letter(X), &NCElement::letter(Delta(1))), expect);

        let expect = NCElement::word(NCWord { deltas: Monomial::generator(3), y: 1, x: 0 })
            .add(&NCElement::letter(Delta(3)).scale(&int(3)));
        assert_eq!(e(&[Y, Delta(3)]), expect);
        assert_eq!(nc_multiply(&NCElement::letter(Y), &NCElement::letter(Delta(3))), expect);

        let expect = NCElement::word(NCWord { deltas: Monomial::unit(), y: 1, x: 1 }).sub(&NCElement::letter(X));
        assert_eq!(e(&[X, Y]), expect);
        assert_eq!(nc_multiply(&NCElement::letter(X), &NCElement::letter(Y)), expect);
    }

    #[test]
    fn product_is_associative_on_x_y_delta() {
        use Letter::*;
        let (x, y, d) = (NCElement::letter(X), NCElement::letter(Y), NCElement::letter(Delta(1)));
        assert_eq!(nc_multiply(&nc_multiply(&x, &y), &d), nc_multiply(&x, &nc_multiply(&y, &d)));
        assert_eq!(nc_multiply(&nc_multiply(&y, &x), &d), nc_multiply(&y, &nc_multiply(&x, &d)));
    }

    #[test]
    fn closed_forms_agree_with_rewriting() {
        use Letter::*;
        let words: Vec<Vec<Letter>> = vec![
            vec![X, X, Delta(2)],
            vec![Y, Y, X, Delta(1), Y],
            vec![X, Y, X, Delta(1), Delta(3), X],
            vec![Delta(2), X, Y, Delta(1), X, Y],
        ];
        for w in &words {
            let mut acc = NCElement::one();
            for &l in w {
                acc = nc_multiply(&acc, &NCElement::letter(l));
            }
            assert_eq!(acc, nc_normal_form(w), "{w:?}");
        }
    }

    #[test]
    fn low_degree_recursion() {
        assert_eq!(recursive_coproduct_delta(1).unwrap(), TensorElement::primitive(Family::Delta, 1));
        let mut d2 = TensorElement::primitive(Family::Delta, 2);
        d2.add_term(Monomial::generator(1), Monomial::generator(1), int(1));
        assert_eq!(recursive_coproduct_delta(2).unwrap(), d2);
    }

    #[test]
    fn recursion_matches_closed_formula() {
        for n in 1..=6 {
            assert_eq!(recursive_coproduct_delta(n).unwrap(), coproduct_delta(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn word_display() {
        let w = NCWord { deltas: Monomial::from_factors(vec![1, 1, 2]), y: 2, x: 1 };
        assert_eq!(w.to_string(), "δ₁²δ₂Y²X");
        assert_eq!(NCWord::unit().to_string(), "1");
    }
}
