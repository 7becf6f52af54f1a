use std::collections::HashMap;

use num_traits::Zero;

use crate::cm_fdb::{antipode_delta, coproduct_delta};
use crate::coefficients::coeff_q_closed;
use crate::combinatorics::enumerate_compositions;
use crate::error::{Error, Result};
use crate::hopf::{AlgebraElement, Family, Monomial, TensorElement};
use crate::rational::{factorial, Rational};

use super::words::{
    word_antipode, word_coproduct, word_counit, word_shuffle_multiply, Word, WordElement, WordTensor,
};

/// `Γ_n = n! Σ_{n in N_n} Q^n Z^n`.
pub fn gamma(n: u32) -> Result<WordElement> {
    let f = factorial(n);
    Ok(WordElement::from_terms(
        enumerate_compositions(n)?
            .iter()
            .map(|c| (Word::from(c), &f * Rational::from_integer(coeff_q_closed(c)))),
    ))
}

/// Algebra morphism `δ_k -> Γ_k` into the shuffle algebra.
#[derive(Default)]
pub struct GammaMap {
    generators: HashMap<u32, WordElement>,
    monomials: HashMap<Monomial, WordElement>,
}

impl GammaMap {
    pub fn new() -> Self {
        Self::default()
    }

    fn generator(&mut self, k: u32) -> Result<WordElement> {
        if let Some(g) = self.generators.get(&k) {
            return Ok(g.clone());
        }
        let g = gamma(k)?;
        self.generators.insert(k, g.clone());
        Ok(g)
    }

    pub fn monomial(&mut self, m: &Monomial) -> Result<WordElement> {
        if let Some(w) = self.monomials.get(m) {
            return Ok(w.clone());
        }
        let mut acc = WordElement::one();
        for &k in m.factors() {
            acc = word_shuffle_multiply(&acc, &self.generator(k)?);
        }
        self.monomials.insert(m.clone(), acc.clone());
        Ok(acc)
    }

    pub fn element(&mut self, x: &AlgebraElement) -> Result<WordElement> {
        if x.family() != Family::Delta {
            return Err(Error::FamilyMismatch { left: Family::Delta.to_string(), right: x.family().to_string() });
        }
        let mut out = WordElement::zero();
        for (m, c) in x.terms() {
            out = out.add(&self.monomial(m)?.scale(c));
        }
        Ok(out)
    }

    pub fn tensor(&mut self, t: &TensorElement) -> Result<WordTensor> {
        if t.family() != Family::Delta {
            return Err(Error::FamilyMismatch { left: Family::Delta.to_string(), right: t.family().to_string() });
        }
        let mut out = WordTensor::zero();
        for ((l, r), c) in t.terms() {
            let lw = self.monomial(l)?;
            let rw = self.monomial(r)?;
            for ((a, b), d) in WordTensor::tensor(&lw.scale(c), &rw).terms() {
                out.add_term(a.clone(), b.clone(), d.clone());
            }
        }
        Ok(out)
    }
}

/// Outcome of comparing a structure map on `Γ_n` with the image of the
/// corresponding closed formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaCheck {
    pub n: u32,
    pub terms_compared: usize,
    /// Rendered nonzero residual terms, empty on success.
    pub residual: Vec<String>,
}

impl GammaCheck {
    pub fn passed(&self) -> bool {
        self.residual.is_empty()
    }
}

/// Compares the deconcatenation coproduct of `Γ_n` with the image of
/// `Δ(δ_n)` under `δ_k -> Γ_k`.
pub fn verify_gamma_coproduct(n: u32) -> Result<GammaCheck> {
    let mut map = GammaMap::new();
    verify_gamma_coproduct_with(n, &coproduct_delta(n)?, &mut map)
}

pub fn verify_gamma_coproduct_with(n: u32, delta: &TensorElement, map: &mut GammaMap) -> Result<GammaCheck> {
    let lhs = word_coproduct(&gamma(n)?);
    let rhs = map.tensor(delta)?;
    let diff = lhs.sub(&rhs);
    Ok(GammaCheck {
        n,
        terms_compared: lhs.terms().len().max(rhs.terms().len()),
        residual: diff.terms().iter().map(|((l, r), c)| format!("{c} {l} ⊗ {r}")).collect(),
    })
}

/// Compares the antipode of `Γ_n` with the image of `S(δ_n)`.
pub fn verify_gamma_antipode(n: u32) -> Result<GammaCheck> {
    let mut map = GammaMap::new();
    verify_gamma_antipode_with(n, &antipode_delta(n)?, &mut map)
}

pub fn verify_gamma_antipode_with(n: u32, s: &AlgebraElement, map: &mut GammaMap) -> Result<GammaCheck> {
    let lhs = word_antipode(&gamma(n)?);
    let rhs = map.element(s)?;
    let diff = lhs.sub(&rhs);
    Ok(GammaCheck {
        n,
        terms_compared: lhs.terms().len().max(rhs.terms().len()),
        residual: diff.terms().iter().map(|(w, c)| format!("{c} {w}")).collect(),
    })
}

/// Failures of the bialgebra and antipode identities of the shuffle algebra
/// on every word of weight `<= max_weight`, as readable strings.
pub fn check_word_hopf_axioms(max_weight: u32) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let mut words = vec![Word::empty()];
    for n in 1..=max_weight {
        words.extend(enumerate_compositions(n)?.iter().map(Word::from));
    }
    for w in &words {
        let x = WordElement::word(w.clone());
        let d = word_coproduct(&x);

        let mut left = WordElement::zero();
        let mut right = WordElement::zero();
        let mut conv_l = WordElement::zero();
        let mut conv_r = WordElement::zero();
        let mut lhs3 = Vec::new();
        let mut rhs3 = Vec::new();
        for ((l, r), c) in d.terms() {
            let lw = WordElement::word(l.clone());
            let rw = WordElement::word(r.clone());
            left = left.add(&rw.scale(&(c * word_counit(&lw))));
            right = right.add(&lw.scale(&(c * word_counit(&rw))));
            conv_l = conv_l.add(&word_shuffle_multiply(&word_antipode(&lw), &rw).scale(c));
            conv_r = conv_r.add(&word_shuffle_multiply(&lw, &word_antipode(&rw)).scale(c));
            for ((a, b), e) in word_coproduct(&lw).terms() {
                lhs3.push(((a.clone(), b.clone(), r.clone()), c * e));
            }
            for ((a, b), e) in word_coproduct(&rw).terms() {
                rhs3.push(((l.clone(), a.clone(), b.clone()), c * e));
            }
        }
        let unit = WordElement::one().scale(&word_counit(&x));
        if left != x {
            failures.push(format!("left counit at {w}"));
        }
        if right != x {
            failures.push(format!("right counit at {w}"));
        }
        if conv_l != unit {
            failures.push(format!("left antipode at {w}: {}", conv_l.sub(&unit).render()));
        }
        if conv_r != unit {
            failures.push(format!("right antipode at {w}: {}", conv_r.sub(&unit).render()));
        }
        let collect = |v: Vec<((Word, Word, Word), Rational)>| {
            let mut m = std::collections::BTreeMap::new();
            for (k, c) in v {
                *m.entry(k).or_insert_with(Rational::zero) += c;
            }
            m.retain(|_, c: &mut Rational| !c.is_zero());
            m
        };
        if collect(lhs3) != collect(rhs3) {
            failures.push(format!("coassociativity at {w}"));
        }
    }
    Ok(failures)
}
