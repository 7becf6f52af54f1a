use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{shuffle_words, Composition};
use crate::rational::{format_rational, int, Rational};

/// Word over the positive integers; the empty word is the unit of the
/// shuffle algebra.
///
/// Ordered by weight, then length, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Panics on a zero letter.
    pub fn new(letters: impl Into<Vec<u32>>) -> Self {
        let letters = letters.into();
        assert!(!letters.contains(&0), "letters are positive");
        Word(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// The word as a composition, `None` for the empty word.
    pub fn to_composition(&self) -> Option<Composition> {
        Composition::new(self.0.clone()).ok()
    }

    /// All `(prefix, suffix)` pairs with `prefix · suffix = self`, including
    /// the two with an empty side.
    pub fn deconcatenations(&self) -> impl Iterator<Item = (Word, Word)> + '_ {
        (0..=self.0.len()).map(|i| (Word(self.0[..i].to_vec()), Word(self.0[i..].to_vec())))
    }
}

impl From<&Composition> for Word {
    fn from(c: &Composition) -> Self {
        Word(c.parts().to_vec())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.weight(), self.len(), &self.0).cmp(&(other.weight(), other.len(), &other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let inner: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "Z^({})", inner.join(","))
    }
}

/// Rational combination of words.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct WordElement {
    terms: BTreeMap<Word, Rational>,
}

impl WordElement {
    pub fn zero() -> Self {
        WordElement::default()
    }

    pub fn one() -> Self {
        Self::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, Rational::one())
    }

    pub fn term(w: Word, c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut e = Self::zero();
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn terms(&self) -> &BTreeMap<Word, Rational> {
        &self.terms
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
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
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), c * k)))
    }

    /// Pairs with a mould: `Σ c_w M^w`.
    pub fn evaluate(&self, mould: impl Fn(&Word) -> Rational) -> Rational {
        self.terms.iter().map(|(w, c)| c * mould(w)).sum()
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => s.push('−'),
                (0, false) => {}
                (_, true) => s.push_str(" − "),
                (_, false) => s.push_str(" + "),
            }
            let a = c.abs();
            if w.is_empty() {
                s.push_str(&format_rational(&a));
                continue;
            }
            if !a.is_one() {
                s.push_str(&format_rational(&a));
            }
            s.push_str(&w.to_string());
        }
        s
    }
}

impl fmt::Debug for WordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Rational combination of `left ⊗ right` word pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordTensor {
    terms: BTreeMap<(Word, Word), Rational>,
}

impl WordTensor {
    pub fn zero() -> Self {
        WordTensor::default()
    }

    pub fn terms(&self) -> &BTreeMap<(Word, Word), Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, l: Word, r: Word, c: Rational) {
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

    pub fn tensor(left: &WordElement, right: &WordElement) -> Self {
        let mut t = Self::zero();
        for (a, ca) in &left.terms {
            for (b, cb) in &right.terms {
                t.add_term(a.clone(), b.clone(), ca * cb);
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), -c.clone());
        }
        out
    }

    /// Componentwise shuffle product.
    pub fn shuffle(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            for ((p, q), d) in &other.terms {
                let left = shuffle_words(a.letters(), p.letters());
                let right = shuffle_words(b.letters(), q.letters());
                for (l, lm) in &left {
                    for (r, rm) in &right {
                        out.add_term(Word(l.clone()), Word(r.clone()), c * d * int((lm * rm) as i64));
                    }
                }
            }
        }
        out
    }
}

/// Shuffle product, extended bilinearly.
pub fn word_shuffle_multiply(u: &WordElement, v: &WordElement) -> WordElement {
    let mut out = WordElement::zero();
    for (a, ca) in &u.terms {
        for (b, cb) in &v.terms {
            let k = ca * cb;
            for (w, m) in shuffle_words(a.letters(), b.letters()) {
                out.add_term(Word(w), &k * int(m as i64));
            }
        }
    }
    out
}

/// Deconcatenation coproduct.
pub fn word_coproduct(x: &WordElement) -> WordTensor {
    let mut out = WordTensor::zero();
    for (w, c) in &x.terms {
        for (l, r) in w.deconcatenations() {
            out.add_term(l, r, c.clone());
        }
    }
    out
}

/// `S(Z^{n_1..n_s}) = (-1)^s Z^{n_s..n_1}`.
pub fn word_antipode(x: &WordElement) -> WordElement {
    WordElement::from_terms(x.terms.iter().map(|(w, c)| {
        let c = if w.len() % 2 == 0 { c.clone() } else { -c.clone() };
        (w.reversed(), c)
    }))
}

/// Counit: coefficient of the empty word.
pub fn word_counit(x: &WordElement) -> Rational {
    x.coeff(&Word::empty())
}
