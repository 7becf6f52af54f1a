//! Scalar coefficient families indexed by compositions and block sequences.
//!
//! `A` and `B_k` weigh block splittings; `alpha` and `beta` are the
//! coefficients of the explicit coproduct and antipode of `delta_n`; `S`, `Q`
//! and `R` describe `Gamma_n` inside the shuffle algebra.
//!
//! Suffix sums `n_i + ... + n_s` are written `hat(n)_i` below.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{all_splits, binomial, shuffle_coefficient, splits_into, Composition};
use crate::error::{Error, Result};
use crate::rational::{factorial, int, Rational};

/// Nonempty ordered list of blocks, i.e. one element of `Split(n)` for the
/// concatenation `n` of the blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockSequence(Vec<Composition>);

impl BlockSequence {
    pub fn new(blocks: Vec<Composition>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidComposition("empty block sequence".into()));
        }
        Ok(BlockSequence(blocks))
    }

    pub fn blocks(&self) -> &[Composition] {
        &self.0
    }

    pub fn concat(&self) -> Composition {
        let mut parts = Vec::new();
        for b in &self.0 {
            parts.extend_from_slice(b.parts());
        }
        Composition::new(parts).expect("blocks are nonempty")
    }

    /// Weights of the blocks, as a composition.
    pub fn block_weights(&self) -> Composition {
        block_weights(&self.0)
    }
}

fn block_weights(blocks: &[Composition]) -> Composition {
    Composition::new(blocks.iter().map(Composition::weight).collect::<Vec<_>>())
        .expect("blocks have positive weight")
}

/// `A(n^1, ..., n^t) = prod 1 / (l(n^i)! (|n^i| + 1))`.
pub fn coeff_a(blocks: &[Composition]) -> Rational {
    let denom = blocks.iter().fold(int(1), |acc, b| {
        acc * factorial(b.length() as u32) * int(i64::from(b.weight()) + 1)
    });
    denom.recip()
}

/// `B_k(m^1, ..., m^s) = C(k, l(m^s)) * prod_{i<s} C(|m^{i+1}| + ... + |m^s| + k, l(m^i))`.
///
/// Vanishes exactly when one of the binomials has its lower index above the
/// upper one.
pub fn coeff_b(blocks: &[Composition], k: u32) -> BigInt {
    let mut acc = BigInt::one();
    let mut tail = i64::from(k);
    for b in blocks.iter().rev() {
        let c = binomial(tail, b.length() as i64);
        if c == 0 {
            return BigInt::zero();
        }
        acc *= c;
        tail += i64::from(b.weight());
    }
    acc
}

thread_local! {
    static U_CACHE: RefCell<HashMap<(Composition, u32), BigInt>> = RefCell::new(HashMap::new());
    static ALPHA_CACHE: RefCell<HashMap<(Composition, u32), Rational>> = RefCell::new(HashMap::new());
    static BETA_CACHE: RefCell<HashMap<Composition, Rational>> = RefCell::new(HashMap::new());
}

/// `U^m_k = sum_i (-1)^(i-1) sum_{m^1...m^i = m} B_k(m^1, ..., m^i)`.
pub fn coeff_u(m: &Composition, k: u32) -> BigInt {
    let key = (m.clone(), k);
    if let Some(v) = U_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return v;
    }
    let mut acc = BigInt::zero();
    for i in 1..=m.length() {
        let part: BigInt = splits_into(m, i).iter().map(|bs| coeff_b(bs, k)).sum();
        if i % 2 == 1 {
            acc += part;
        } else {
            acc -= part;
        }
    }
    U_CACHE.with(|c| c.borrow_mut().insert(key, acc.clone()));
    acc
}

/// `alpha^n_m = sum_t C(m, t) sum_{n^1...n^t = n} A(n^1, ..., n^t)`.
pub fn alpha(n: &Composition, m: u32) -> Rational {
    let key = (n.clone(), m);
    if let Some(v) = ALPHA_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return v;
    }
    let mut acc = Rational::zero();
    for t in 1..=n.length() {
        let c = binomial(i64::from(m), t as i64);
        if c == 0 {
            // C(m, t) stays zero for every larger t.
            break;
        }
        let inner: Rational = splits_into(n, t).iter().map(|bs| coeff_a(bs)).sum();
        acc += inner * int(c as i64);
    }
    ALPHA_CACHE.with(|c| c.borrow_mut().insert(key, acc.clone()));
    acc
}

/// Antipode coefficient: `-1` on one-part compositions; otherwise, for
/// `n = (n_1, ..., n_s, n_{s+1})`, the sum over splittings of the prefix
/// `(n_1, ..., n_s)` of `U^{block weights}_{n_{s+1}} * A(blocks)`.
pub fn beta(n: &Composition) -> Rational {
    let Some((prefix, last)) = n.split_last() else {
        return int(-1);
    };
    if let Some(v) = BETA_CACHE.with(|c| c.borrow().get(n).cloned()) {
        return v;
    }
    let mut acc = Rational::zero();
    for bs in all_splits(&prefix) {
        let u = coeff_u(&block_weights(&bs), last);
        if !u.is_zero() {
            acc += coeff_a(&bs) * Rational::from_integer(u);
        }
    }
    BETA_CACHE.with(|c| c.borrow_mut().insert(n.clone(), acc.clone()));
    acc
}

/// `S^n = prod_i (hat(n)_i + 1)`.
pub fn coeff_s(c: &Composition) -> BigInt {
    c.suffix_sums().into_iter().map(|h| BigInt::from(h + 1)).product()
}

/// Closed form `Q^n = (n_s + 1) prod_{i>=2} hat(n)_i`, with `Q^{(n_1)} = n_1 + 1`.
pub fn coeff_q_closed(c: &Composition) -> BigInt {
    let parts = c.parts();
    let last = *parts.last().expect("nonempty");
    let hats = c.suffix_sums();
    hats[1..]
        .iter()
        .fold(BigInt::from(last + 1), |acc, &h| acc * BigInt::from(h))
}

/// `Q^m` through its defining logarithm expansion:
/// `sum_t (-1)^(t-1)/t sum_{n^1..n^t} sh(n^1..n^t; m) S^{n^1} ... S^{n^t}`.
///
/// Exponential in the length of `m`; used to cross-check [`coeff_q_closed`].
pub fn coeff_q_dual(m: &Composition) -> Rational {
    let mut acc = Rational::zero();
    for t in 1..=m.length() {
        let mut sum = BigInt::zero();
        for words in shuffle_preimages(m, t) {
            let sh = shuffle_coefficient(&words, m);
            let s: BigInt = words.iter().map(coeff_s).product();
            sum += s * sh;
        }
        let w = Rational::new(if t % 2 == 1 { BigInt::one() } else { -BigInt::one() }, BigInt::from(t));
        acc += w * Rational::from_integer(sum);
    }
    acc
}

/// Distinct ordered `t`-tuples of nonempty words whose shuffle can produce `m`.
pub fn shuffle_preimages(m: &Composition, t: usize) -> BTreeSet<Vec<Composition>> {
    fn go(
        parts: &[u32],
        t: usize,
        labels: &mut Vec<usize>,
        used: &mut [usize],
        out: &mut BTreeSet<Vec<Composition>>,
    ) {
        let i = labels.len();
        if i == parts.len() {
            let mut words = vec![Vec::new(); t];
            for (&l, &p) in labels.iter().zip(parts) {
                words[l].push(p);
            }
            out.insert(words.into_iter().map(|w| Composition::new(w).unwrap()).collect());
            return;
        }
        let unused = used.iter().filter(|&&u| u == 0).count();
        for l in 0..t {
            // Leave enough positions to give every unused word a letter.
            let unused_after = unused - usize::from(used[l] == 0);
            if parts.len() - i - 1 < unused_after {
                continue;
            }
            used[l] += 1;
            labels.push(l);
            go(parts, t, labels, used, out);
            labels.pop();
            used[l] -= 1;
        }
    }
    let mut out = BTreeSet::new();
    if t == 0 || t > m.length() {
        return out;
    }
    go(m.parts(), t, &mut Vec::new(), &mut vec![0; t], &mut out);
    out
}

/// `R^p_k = prod_{i=2}^{l(p)+1} (hat(p)_i + k)`, where `hat(p)_{l(p)+1} = 0`.
pub fn coeff_r(p: &Composition, k: u32) -> BigInt {
    (1..=p.length())
        .map(|i| BigInt::from(p.suffix_sum(i) + k))
        .product()
}

/// Multinomial `(n_1 + ... + n_s)! / (n_1! ... n_s!)`.
pub fn multinomial(c: &Composition) -> Rational {
    factorial(c.weight()) / c.factorial_product()
}

/// Table value of the coproduct for the ordered sequence
/// `(n_1, ..., n_s, n_{s+1})`: `n!/(n_1!...n_{s+1}!) alpha^{n_1..n_s}_{n_{s+1}}`.
///
/// Returns `None` for one-part sequences, which only contribute the
/// primitive terms.
pub fn coproduct_table_value(seq: &Composition) -> Option<Rational> {
    let (prefix, last) = seq.split_last()?;
    Some(multinomial(seq) * alpha(&prefix, last))
}

/// Table value of the antipode: `n!/(n_1!...n_s!) beta^{n_1..n_s}`.
pub fn antipode_table_value(seq: &Composition) -> Rational {
    multinomial(seq) * beta(seq)
}
