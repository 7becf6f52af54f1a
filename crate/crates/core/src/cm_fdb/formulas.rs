//! Closed formulas for the coproduct and antipode of `delta_n` and `a_n`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coefficients::{antipode_table_value, coeff_b, coproduct_table_value};
use crate::combinatorics::{all_splits, binomial, enumerate_compositions, Composition};
use crate::error::Result;
use crate::hopf::{AlgebraElement, Family, Monomial, TensorElement};
use crate::rational::{int, Rational};

fn monomial_of(c: &Composition) -> Monomial {
    Monomial::from_factors(c.parts().to_vec())
}

/// Ordered coproduct coefficients of `delta_n`: one entry per sequence
/// `(n_1, ..., n_s, n_{s+1})` of weight `n` with `s >= 1`, valued
/// `n!/(n_1!...n_{s+1}!) alpha^{n_1..n_s}_{n_{s+1}}`, in canonical order.
pub fn coproduct_delta_ordered(n: u32) -> Result<Vec<(Composition, Rational)>> {
    Ok(enumerate_compositions(n)?
        .into_iter()
        .filter_map(|seq| coproduct_table_value(&seq).map(|v| (seq, v)))
        .collect())
}

/// Ordered antipode coefficients of `delta_n`: one entry per composition of
/// `n`, valued `n!/(n_1!...n_s!) beta^{n_1..n_s}`.
pub fn antipode_delta_ordered(n: u32) -> Result<Vec<(Composition, Rational)>> {
    Ok(enumerate_compositions(n)?
        .into_iter()
        .map(|seq| {
            let v = antipode_table_value(&seq);
            (seq, v)
        })
        .collect())
}

/// `Δ(δ_n) = δ_n ⊗ 1 + 1 ⊗ δ_n + Σ n!/(n_1!...n_{s+1}!) α^{n_1..n_s}_{n_{s+1}} δ_{n_1}...δ_{n_s} ⊗ δ_{n_{s+1}}`,
/// collected into commutative monomials.
pub fn coproduct_delta(n: u32) -> Result<TensorElement> {
    let mut t = TensorElement::primitive(Family::Delta, n);
    for (seq, v) in coproduct_delta_ordered(n)? {
        let (prefix, last) = seq.split_last().expect("length >= 2");
        t.add_term(monomial_of(&prefix), Monomial::generator(last), v);
    }
    Ok(t)
}

/// `S(δ_n) = Σ_{n in N_n} n!/(n_1!...n_s!) β^n δ_{n_1}...δ_{n_s}`, collected.
pub fn antipode_delta(n: u32) -> Result<AlgebraElement> {
    Ok(AlgebraElement::from_terms(
        Family::Delta,
        antipode_delta_ordered(n)?
            .into_iter()
            .map(|(seq, v)| (monomial_of(&seq), v)),
    ))
}

/// Ordered Faà di Bruno coproduct coefficients: entries
/// `((n_1, ..., n_s, n - k), C(n - k + 1, s))` for each `(n_1..n_s)` of
/// weight `k`, `1 <= k < n`.
pub fn coproduct_a_ordered(n: u32) -> Result<Vec<(Composition, Rational)>> {
    let mut out = Vec::new();
    for seq in enumerate_compositions(n)? {
        let Some((prefix, last)) = seq.split_last() else { continue };
        let c = binomial(i64::from(last) + 1, prefix.length() as i64);
        if c != 0 {
            out.push((seq, int(c as i64)));
        }
    }
    Ok(out)
}

/// `Δ(a_n) = a_n ⊗ 1 + 1 ⊗ a_n + Σ_k Σ_{n in N_k} C(n-k+1, l(n)) a_n ⊗ a_{n-k}`.
pub fn coproduct_a(n: u32) -> Result<TensorElement> {
    let mut t = TensorElement::primitive(Family::A, n);
    for (seq, v) in coproduct_a_ordered(n)? {
        let (prefix, last) = seq.split_last().expect("length >= 2");
        t.add_term(monomial_of(&prefix), Monomial::generator(last), v);
    }
    Ok(t)
}

/// Ordered Faà di Bruno antipode coefficients:
/// `Σ_{m^1...m^s = p} (-1)^s B_1(m^1, ..., m^s)` for each `p` of weight `n`.
pub fn antipode_a_ordered(n: u32) -> Result<Vec<(Composition, Rational)>> {
    Ok(enumerate_compositions(n)?
        .into_iter()
        .map(|p| {
            let mut acc = BigInt::zero();
            for blocks in all_splits(&p) {
                let b = coeff_b(&blocks, 1);
                if blocks.len() % 2 == 0 {
                    acc += b;
                } else {
                    acc -= b;
                }
            }
            (p, Rational::from_integer(acc))
        })
        .collect())
}

/// `S(a_n) = Σ_{p in N_n} (Σ_{m^1...m^s = p} (-1)^s B_1(m^1..m^s)) a_p`, collected.
pub fn antipode_a(n: u32) -> Result<AlgebraElement> {
    Ok(AlgebraElement::from_terms(
        Family::A,
        antipode_a_ordered(n)?
            .into_iter()
            .map(|(p, v)| (monomial_of(&p), v)),
    ))
}
