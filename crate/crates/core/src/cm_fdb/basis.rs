//! Change of generators between the Faà di Bruno coordinates `a_n` and the
//! Connes-Moscovici coordinates `gamma_n`.

use std::collections::BTreeMap;

use crate::combinatorics::{enumerate_compositions, Composition};
use crate::error::Result;
use crate::hopf::{extend_coproduct, extend_morphism, AlgebraElement, Family, Monomial, TensorElement};
use crate::rational::{factorial, int};

use super::formulas::coproduct_delta;

fn monomial_of(c: &Composition) -> Monomial {
    Monomial::from_factors(c.parts().to_vec())
}

/// `a_n = Σ_{n in N_n} γ_n / (l(n)! n_1!...n_s! (n+1))`, as a polynomial in
/// the `gamma` family.
pub fn a_in_gamma(n: u32) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero(Family::Gamma);
    for c in enumerate_compositions(n)? {
        let den = factorial(c.length() as u32) * c.factorial_product() * int(i64::from(n) + 1);
        out.add_term(monomial_of(&c), den.recip());
    }
    Ok(out)
}

/// `γ_n = n! Σ_{n in N_n} (-1)^(l-1)/l (n_1+1)...(n_s+1) a_n`, as a
/// polynomial in the `a` family.
pub fn gamma_in_a(n: u32) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero(Family::A);
    for c in enumerate_compositions(n)? {
        let l = c.length() as i64;
        let sign = if l % 2 == 1 { 1 } else { -1 };
        let prod: i64 = c.parts().iter().map(|&p| i64::from(p) + 1).product();
        let coeff = factorial(n) * int(sign * prod) / int(l);
        out.add_term(monomial_of(&c), coeff);
    }
    Ok(out)
}

fn images(max: u32, f: impl Fn(u32) -> Result<AlgebraElement>) -> Result<BTreeMap<u32, AlgebraElement>> {
    (1..=max).map(|k| Ok((k, f(k)?))).collect()
}

/// Rewrites an `a`-polynomial in the `gamma` generators.
pub fn a_to_gamma(x: &AlgebraElement, max_degree: u32) -> Result<AlgebraElement> {
    extend_morphism(&images(max_degree, a_in_gamma)?, Family::Gamma, x)
}

/// Rewrites a `gamma`-polynomial in the `a` generators.
pub fn gamma_to_a(x: &AlgebraElement, max_degree: u32) -> Result<AlgebraElement> {
    extend_morphism(&images(max_degree, gamma_in_a)?, Family::A, x)
}

/// `Δ(a_n)` obtained by expanding `a_n` in the `gamma` generators, applying the
/// coproduct of `delta_n` under `delta_k -> gamma_k`, and rewriting both legs
/// back in the `a` generators.
pub fn coproduct_a_via_gamma(n: u32) -> Result<TensorElement> {
    let a_n = a_in_gamma(n)?;
    let coproducts: BTreeMap<u32, TensorElement> = (1..=n)
        .map(|k| Ok((k, coproduct_delta(k)?.relabel(Family::Gamma))))
        .collect::<Result<_>>()?;
    let in_gamma = extend_coproduct(&coproducts, &a_n)?;
    let back = images(n, gamma_in_a)?;
    in_gamma.map_legs(
        Family::A,
        |m| extend_morphism(&back, Family::A, &AlgebraElement::term(Family::Gamma, m.clone(), int(1))),
        |m| extend_morphism(&back, Family::A, &AlgebraElement::term(Family::Gamma, m.clone(), int(1))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cm_fdb::formulas::coproduct_a;
    use crate::rational::ratio;

    #[test]
    fn degree_one() {
        assert_eq!(
            a_in_gamma(1).unwrap(),
            AlgebraElement::term(Family::Gamma, Monomial::generator(1), ratio(1, 2))
        );
        assert_eq!(
            gamma_in_a(1).unwrap(),
            AlgebraElement::term(Family::A, Monomial::generator(1), int(2))
        );
    }

    #[test]
    fn degree_two() {
        // gamma_2 = 2! ([x^2] log(1 + 2a_1 x + 3a_2 x^2)) = 6a_2 - 4a_1^2
        assert_eq!(
            gamma_in_a(2).unwrap(),
            AlgebraElement::from_terms(
                Family::A,
                [(Monomial::generator(2), int(6)), (Monomial::from_factors(vec![1, 1]), int(-4))]
            )
        );
    }

    #[test]
    fn substitutions_are_mutually_inverse() {
        for n in 1..=7 {
            let a = AlgebraElement::generator(Family::A, n);
            assert_eq!(gamma_to_a(&a_to_gamma(&a, n).unwrap(), n).unwrap(), a);
            let g = AlgebraElement::generator(Family::Gamma, n);
            assert_eq!(a_to_gamma(&gamma_to_a(&g, n).unwrap(), n).unwrap(), g);
        }
    }

    #[test]
    fn transport_matches_fdb() {
        for n in 1..=5 {
            assert_eq!(coproduct_a_via_gamma(n).unwrap(), coproduct_a(n).unwrap());
        }
    }
}
