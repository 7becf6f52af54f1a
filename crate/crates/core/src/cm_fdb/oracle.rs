//! Functional checks: the closed formulas evaluated on concrete
//! diffeomorphisms against direct composition and inversion of series.

use crate::error::{Error, Result};
use crate::hopf::{Monomial, TensorElement};
use crate::rational::Rational;
use crate::series::{compose, invert, Diffeo};

use super::formulas::{antipode_a, antipode_delta, coproduct_a, coproduct_delta};

fn eval_monomial(m: &Monomial, values: &[Rational]) -> Result<Rational> {
    m.factors()
        .iter()
        .map(|&g| {
            values
                .get(g as usize - 1)
                .cloned()
                .ok_or(Error::OrderTooSmall { requested: g as usize, available: values.len() })
        })
        .product()
}

fn check_order(n: u32, f: &Diffeo) -> Result<()> {
    if (n as usize) > f.order() {
        return Err(Error::OrderTooSmall { requested: n as usize, available: f.order() });
    }
    Ok(())
}

/// Pairs a coproduct with `f` on the left leg and `g` on the right leg,
/// where each leg is evaluated on the coordinate values supplied.
pub fn pair_coproduct(t: &TensorElement, left: &[Rational], right: &[Rational]) -> Result<Rational> {
    t.pair(|m| eval_monomial(m, left), |m| eval_monomial(m, right))
}

/// `(γ_n(g∘f), Σ γ_L(f) γ_R(g))` over the terms `L ⊗ R` of `Δ(δ_n)`.
pub fn oracle_coproduct_eval(n: u32, f: &Diffeo, g: &Diffeo) -> Result<(Rational, Rational)> {
    check_order(n, f)?;
    let h = compose(f, g)?;
    let lhs = h.gamma()[n as usize - 1].clone();
    let rhs = pair_coproduct(&coproduct_delta(n)?, &f.gamma(), &g.gamma())?;
    Ok((lhs, rhs))
}

/// `(γ_n(f⁻¹), S(δ_n) evaluated at γ(f))`.
pub fn oracle_antipode_eval(n: u32, f: &Diffeo) -> Result<(Rational, Rational)> {
    check_order(n, f)?;
    let lhs = invert(f).gamma()[n as usize - 1].clone();
    let rhs = antipode_delta(n)?.evaluate(&f.gamma())?;
    Ok((lhs, rhs))
}

/// `(a_n(g∘f), Σ a_L(f) a_R(g))` over the terms of `Δ(a_n)`.
pub fn oracle_coproduct_a_eval(n: u32, f: &Diffeo, g: &Diffeo) -> Result<(Rational, Rational)> {
    check_order(n, f)?;
    let h = compose(f, g)?;
    let lhs = h.phi(n as usize).clone();
    let rhs = pair_coproduct(&coproduct_a(n)?, f.coefficients(), g.coefficients())?;
    Ok((lhs, rhs))
}

/// `(a_n(f⁻¹), S(a_n) evaluated at a(f))`.
pub fn oracle_antipode_a_eval(n: u32, f: &Diffeo) -> Result<(Rational, Rational)> {
    check_order(n, f)?;
    let lhs = invert(f).phi(n as usize).clone();
    let rhs = antipode_a(n)?.evaluate(f.coefficients())?;
    Ok((lhs, rhs))
}
