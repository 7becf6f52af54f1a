use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::combinatorics::{enumerate_compositions, shuffle_words, Composition};
use crate::error::{Error, Result};
use crate::rational::{factorial, format_rational, int, Rational};
use crate::series::{Diffeo, PowerSeries};

use super::gamma::gamma;
use super::words::Word;

/// Scalar function on words up to a weight bound; words outside the
/// stored range read as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mould {
    max_weight: u32,
    values: BTreeMap<Word, Rational>,
}

impl Mould {
    /// Builds a mould by evaluating `f` on the empty word and every
    /// composition of weight `<= max_weight`.
    pub fn from_fn(max_weight: u32, mut f: impl FnMut(&Word) -> Rational) -> Result<Self> {
        let mut values = BTreeMap::new();
        let empty = Word::empty();
        values.insert(empty.clone(), f(&empty));
        for n in 1..=max_weight {
            for c in enumerate_compositions(n)? {
                let w = Word::from(&c);
                let v = f(&w);
                values.insert(w, v);
            }
        }
        Ok(Mould { max_weight, values })
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    pub fn get(&self, w: &Word) -> Rational {
        self.values.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn values(&self) -> &BTreeMap<Word, Rational> {
        &self.values
    }
}

fn u_coeff(u: &[Rational], n: u32) -> Rational {
    u.get(n as usize - 1).cloned().unwrap_or_else(Rational::zero)
}

/// Mould of the formal conjugacy of `x' = u(x)` to `x' = x`, where
/// `u(x) = x + Σ u_n x^(n+1)`:
/// `M^n = (-1)^s u_{n_1}...u_{n_s} / (hat(n)_1 hat(n)_2 ... hat(n)_s)`.
pub fn conjugacy_mould(u: &[Rational], max_weight: u32) -> Result<Mould> {
    Mould::from_fn(max_weight, |w| {
        if w.is_empty() {
            return Rational::one();
        }
        let mut num = if w.len() % 2 == 0 { Rational::one() } else { -Rational::one() };
        let mut hat = w.weight();
        for &n in w.letters() {
            num *= u_coeff(u, n) / int(i64::from(hat));
            hat -= n;
        }
        num
    })
}

/// Mould of `exp(Σ c_n B_n)`: `F^n = c_{n_1}...c_{n_s} / s!`.
pub fn exponential_mould(c: &[Rational], max_weight: u32) -> Result<Mould> {
    Mould::from_fn(max_weight, |w| {
        let p: Rational = w.letters().iter().map(|&n| u_coeff(c, n)).product();
        p / factorial(w.len() as u32)
    })
}

/// One violated symmetrality relation `M^a M^b = Σ sh(a, b; w) M^w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetralityViolation {
    pub left: Word,
    pub right: Word,
    pub product: Rational,
    pub shuffle_sum: Rational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymmetralityReport {
    pub pairs_checked: usize,
    pub violations: Vec<SymmetralityViolation>,
}

impl SymmetralityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `M^∅ = 1` and the shuffle relation for every pair of nonempty
/// words of total weight `<= max_weight`.
pub fn symmetrality_check(m: &Mould, max_weight: u32) -> Result<SymmetralityReport> {
    if max_weight > m.max_weight() {
        return Err(Error::OrderTooSmall { requested: max_weight as usize, available: m.max_weight() as usize });
    }
    let mut report = SymmetralityReport::default();
    let empty = Word::empty();
    if !m.get(&empty).is_one() {
        report.violations.push(SymmetralityViolation {
            left: empty.clone(),
            right: empty.clone(),
            product: m.get(&empty),
            shuffle_sum: Rational::one(),
        });
    }
    let words: Vec<Composition> = (1..max_weight)
        .map(enumerate_compositions)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    for a in &words {
        for b in words.iter().filter(|b| a.weight() + b.weight() <= max_weight) {
            report.pairs_checked += 1;
            let product = m.get(&Word::from(a)) * m.get(&Word::from(b));
            let shuffle_sum: Rational = shuffle_words(a.parts(), b.parts())
                .into_iter()
                .map(|(w, k)| m.get(&Word::new(w)) * int(k as i64))
                .sum();
            if product != shuffle_sum {
                report.violations.push(SymmetralityViolation {
                    left: Word::from(a),
                    right: Word::from(b),
                    product,
                    shuffle_sum,
                });
            }
        }
    }
    Ok(report)
}

/// `φ_n = Σ_{n in N_n} (hat(n)_2 + 1) ... (hat(n)_s + 1) M^n`, the image
/// `F·x` of the operator `F = Σ M^n B_{n_1}...B_{n_s}` with `B_n = x^(n+1) d/dx`.
pub fn phi_from_mould(m: &Mould, order: usize) -> Result<Diffeo> {
    if order as u32 > m.max_weight() {
        return Err(Error::OrderTooSmall { requested: order, available: m.max_weight() as usize });
    }
    let mut phi = Vec::with_capacity(order);
    for n in 1..=order as u32 {
        let mut acc = Rational::zero();
        for c in enumerate_compositions(n)? {
            let pre: i64 = c.suffix_sums()[1..].iter().map(|&h| i64::from(h) + 1).product();
            acc += m.get(&Word::from(&c)) * int(pre);
        }
        phi.push(acc);
    }
    Diffeo::new(phi)
}

/// Formal conjugacy `φ` with `u(x) φ'(x) = φ(x)`, known to `x^(order+1)`.
pub fn conjugacy_phi(u: &[Rational], order: usize) -> Result<Diffeo> {
    phi_from_mould(&conjugacy_mould(u, order as u32)?, order)
}

/// `u(x) φ'(x) - φ(x)` modulo `x^(order+2)`, where `u(x) = x + Σ u_n x^(n+1)`.
pub fn conjugacy_residual(u: &[Rational], phi: &Diffeo) -> PowerSeries {
    let order = phi.order();
    // big_u[j] = [x^j] u, big_phi[j] = [x^j] φ
    let big_u = |j: usize| if j == 1 { Rational::one() } else if j >= 2 { u_coeff(u, j as u32 - 1) } else { Rational::zero() };
    let big_phi = |j: usize| if j == 1 { Rational::one() } else if j >= 2 && j - 1 <= order { phi.phi(j - 1).clone() } else { Rational::zero() };
    let mut coeffs = vec![Rational::zero(); order + 2];
    for (m, slot) in coeffs.iter_mut().enumerate().skip(1) {
        let mut acc = -big_phi(m);
        for j in 1..=m {
            let i = m + 1 - j;
            acc += big_u(j) * int(i as i64) * big_phi(i);
        }
        *slot = acc;
    }
    PowerSeries::from_coeffs(order + 1, coeffs)
}

/// `(Γ_n(F), γ_n(φ))` for the group-like operator with mould `m`, where
/// `Γ_n(F) = n! Σ Q^n F^n` and `φ = F·x`.
pub fn gamma_functional_check(m: &Mould, n: u32) -> Result<(Rational, Rational)> {
    let lhs = gamma(n)?.evaluate(|w| m.get(w));
    let phi = phi_from_mould(m, n as usize)?;
    let rhs = phi.gamma()[n as usize - 1].clone();
    Ok((lhs, rhs))
}

/// Renders `φ_1..φ_order`, one per line, as `phi_n = value`.
pub fn render_phi(phi: &Diffeo) -> String {
    phi.coefficients()
        .iter()
        .enumerate()
        .map(|(i, c)| format!("phi_{} = {}\n", i + 1, format_rational(c)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_rationals, seeded_rng};
    use crate::rational::ratio;

    fn w(l: &[u32]) -> Word {
        Word::new(l.to_vec())
    }

    #[test]
    fn conjugacy_mould_values() {
        let m = conjugacy_mould(&[int(1)], 3).unwrap();
        assert_eq!(m.get(&w(&[1])), int(-1));
        assert_eq!(m.get(&w(&[1, 1])), ratio(1, 2));
        assert_eq!(m.get(&w(&[2])), int(0));
        assert_eq!(m.get(&Word::empty()), int(1));
    }

    #[test]
    fn mould_recursions() {
        let mut rng = seeded_rng(5);
        let u = random_rationals(&mut rng, 5);
        let m = conjugacy_mould(&u, 5).unwrap();
        for n in 1..=5 {
            for c in enumerate_compositions(n).unwrap() {
                let parts = c.parts();
                let head = u_coeff(&u, parts[0]);
                let tail = Word::new(parts[1..].to_vec());
                // u_{n_1} M^{n_2..} + |n| M^n = 0
                assert_eq!(head * m.get(&tail) + int(i64::from(n)) * m.get(&Word::from(&c)), int(0));
            }
        }
    }

    #[test]
    fn phi_for_x_plus_x2() {
        let phi = conjugacy_phi(&[int(1), int(0)], 2).unwrap();
        assert_eq!(phi.coefficients(), &[int(-1), int(1)]);
        assert!(conjugacy_residual(&[int(1), int(0)], &phi).is_zero());
    }

    #[test]
    fn linear_field_is_already_linear() {
        let phi = conjugacy_phi(&vec![int(0); 4], 4).unwrap();
        assert_eq!(phi, Diffeo::identity(4));
    }

    #[test]
    fn random_fields_are_conjugated() {
        let mut rng = seeded_rng(17);
        for _ in 0..3 {
            let u = random_rationals(&mut rng, 6);
            let phi = conjugacy_phi(&u, 6).unwrap();
            assert!(conjugacy_residual(&u, &phi).is_zero());
        }
    }

    #[test]
    fn symmetrality() {
        let mut rng = seeded_rng(2);
        let u = random_rationals(&mut rng, 5);
        assert!(symmetrality_check(&conjugacy_mould(&u, 5).unwrap(), 5).unwrap().passed());
        assert!(symmetrality_check(&exponential_mould(&u, 5).unwrap(), 5).unwrap().passed());

        let bad = Mould::from_fn(3, |w| if w.len() <= 1 { int(1) } else { int(0) }).unwrap();
        let r = symmetrality_check(&bad, 3).unwrap();
        assert!(!r.passed());
        assert_eq!(r.violations[0].left, w(&[1]));
        assert_eq!(r.violations[0].right, w(&[1]));
        assert_eq!(r.violations[0].product, int(1));
        assert_eq!(r.violations[0].shuffle_sum, int(0));
    }

    #[test]
    fn gamma_evaluates_to_connes_moscovici_coordinate() {
        let mut rng = seeded_rng(8);
        let c = random_rationals(&mut rng, 5);
        let m = exponential_mould(&c, 5).unwrap();
        for n in 1..=5 {
            let (l, r) = gamma_functional_check(&m, n).unwrap();
            assert_eq!(l, r, "n = {n}");
        }
        let m = conjugacy_mould(&c, 5).unwrap();
        for n in 1..=5 {
            let (l, r) = gamma_functional_check(&m, n).unwrap();
            assert_eq!(l, r, "n = {n}");
        }
    }
}
