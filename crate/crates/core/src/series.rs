//! Truncated power series over the rationals and the group of
//! identity-tangent formal diffeomorphisms.
//!
//! Every value carries its truncation order explicitly. Binary operations on
//! [`PowerSeries`] truncate to the smaller order; operations on [`Diffeo`]
//! require equal orders.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::coefficients::coeff_b;
use crate::combinatorics::{binomial, enumerate_compositions, Composition};
use crate::error::{Error, Result};
use crate::rational::{factorial, int, Rational};

/// `c_0 + c_1 x + ... + c_order x^order  (mod x^(order+1))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(order, 1, Rational::one())
    }

    pub fn monomial(order: usize, exp: usize, coeff: Rational) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = coeff;
        }
        s
    }

    /// Builds a series from its leading coefficients; missing ones are zero,
    /// extra ones are dropped.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.iter().cloned())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    pub fn derivative(&self) -> Self {
        let order = self.order().saturating_sub(1);
        Self::from_coeffs(
            order,
            (1..=self.order()).map(|n| &self.coeffs[n] * int(n as i64)),
        )
    }

    /// Antiderivative with zero constant term; gains one order.
    pub fn integral(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (n, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / int(n as i64 + 1));
        }
        PowerSeries { coeffs }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn recip(&self) -> Option<Self> {
        let c0 = self.coeffs[0].clone();
        if c0.is_zero() {
            return None;
        }
        let inv0 = c0.recip();
        let mut out = vec![Rational::zero(); self.coeffs.len()];
        out[0] = inv0.clone();
        for n in 1..self.coeffs.len() {
            let s: Rational = (1..=n).map(|k| &self.coeffs[k] * &out[n - k]).sum();
            out[n] = -(s * &inv0);
        }
        Some(PowerSeries { coeffs: out })
    }

    /// `log(self)` for a series with constant term 1, as the integral of the
    /// logarithmic derivative.
    pub fn log(&self) -> Option<Self> {
        if !self.coeffs[0].is_one() {
            return None;
        }
        if self.order() == 0 {
            return Some(Self::zero(0));
        }
        let ratio = &self.derivative() * &self.recip()?.truncate(self.order() - 1);
        Some(ratio.integral())
    }

    /// `exp(self)` for a series with zero constant term, via `E' = E f'`.
    pub fn exp(&self) -> Option<Self> {
        if !self.coeffs[0].is_zero() {
            return None;
        }
        let n_max = self.order();
        let mut e = vec![Rational::zero(); n_max + 1];
        e[0] = Rational::one();
        for n in 1..=n_max {
            let s: Rational = (1..=n)
                .map(|k| &self.coeffs[k] * int(k as i64) * &e[n - k])
                .sum();
            e[n] = s / int(n as i64);
        }
        Some(PowerSeries { coeffs: e })
    }

    /// `self(inner(x))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &PowerSeries) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Parse("inner series must have zero constant term".into()));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        // Horner: a_0 + inner (a_1 + inner (a_2 + ...)).
        let mut acc = Self::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries::from_coeffs(order, (0..=order).map(|n| &self.coeffs[n] + &rhs.coeffs[n]))
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries::from_coeffs(order, (0..=order).map(|n| &self.coeffs[n] - &rhs.coeffs[n]))
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        PowerSeries { coeffs: out }
    }
}

/// Identity-tangent diffeomorphism `x + phi_1 x^2 + ... + phi_order x^(order+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diffeo {
    phi: Vec<Rational>,
}

impl Diffeo {
    /// From `[phi_1, ..., phi_order]`.
    pub fn new(phi: Vec<Rational>) -> Result<Self> {
        if phi.is_empty() {
            return Err(Error::ZeroDegree);
        }
        Ok(Diffeo { phi })
    }

    pub fn identity(order: usize) -> Self {
        Diffeo { phi: vec![Rational::zero(); order.max(1)] }
    }

    pub fn order(&self) -> usize {
        self.phi.len()
    }

    /// `phi_n = a_n(self)` for `1 <= n <= order`.
    pub fn phi(&self, n: usize) -> &Rational {
        &self.phi[n - 1]
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.phi
    }

    /// The diffeomorphism as a series known modulo `x^(order+2)`.
    pub fn to_series(&self) -> PowerSeries {
        let order = self.order() + 1;
        let mut s = PowerSeries::x(order);
        for (n, p) in self.phi.iter().enumerate() {
            s.coeffs[n + 2] = p.clone();
        }
        s
    }

    fn from_series(s: &PowerSeries) -> Self {
        Diffeo { phi: s.coeffs[2..].to_vec() }
    }

    /// Product of `f` with an arbitrary word: `phi_{n_1} ... phi_{n_s}`.
    pub fn phi_product(&self, word: &Composition) -> Rational {
        word.parts().iter().map(|&p| self.phi(p as usize).clone()).product()
    }

    /// `gamma_n(self) = n! [x^n] log(self')` for `n = 1..=order`.
    pub fn gamma(&self) -> Vec<Rational> {
        gamma_from_phi(self)
    }
}

/// Group product `mu(f, g) = g o f`.
pub fn compose(f: &Diffeo, g: &Diffeo) -> Result<Diffeo> {
    if f.order() != g.order() {
        return Err(Error::OrderMismatch { left: f.order(), right: g.order() });
    }
    let h = g.to_series().compose(&f.to_series())?;
    Ok(Diffeo::from_series(&h))
}

/// Compositional inverse, solved one degree at a time.
pub fn invert(f: &Diffeo) -> Diffeo {
    let n_max = f.order();
    let fs = f.to_series();
    let mut h = Diffeo::identity(n_max);
    for n in 1..=n_max {
        // [x^(n+1)] f(h) = h_n + (terms in h_1..h_{n-1}).
        let residual = fs.compose(&h.to_series()).expect("zero constant term").coeff(n + 1);
        h.phi[n - 1] = -residual;
    }
    h
}

/// `gamma_n(f) = n! [x^n] log f'(x)`.
pub fn gamma_from_phi(f: &Diffeo) -> Vec<Rational> {
    let log = f
        .to_series()
        .derivative()
        .log()
        .expect("f' has constant term 1");
    (1..=f.order())
        .map(|n| log.coeff(n) * factorial(n as u32))
        .collect()
}

/// Inverse of [`gamma_from_phi`]: `phi(x) = int_0^x exp(sum gamma_n t^n / n!) dt`.
pub fn phi_from_gamma(gs: &[Rational]) -> Result<Diffeo> {
    if gs.is_empty() {
        return Err(Error::ZeroDegree);
    }
    let order = gs.len();
    let f = PowerSeries::from_coeffs(
        order,
        std::iter::once(Rational::zero())
            .chain(gs.iter().enumerate().map(|(i, g)| g / factorial(i as u32 + 1))),
    );
    let phi = f.exp().expect("zero constant term").integral();
    Ok(Diffeo::from_series(&phi))
}

/// Coefficient `c` in `F_n(x^k) = c x^(n+k)`, where `F = Id + sum F_n` is the
/// substitution automorphism `A -> A o f`:
/// `c = sum_{m in N_n} C(k, l(m)) phi_m`.
pub fn apply_homogeneous_component(f: &Diffeo, n: u32, k: u32) -> Result<Rational> {
    if n as usize > f.order() {
        return Err(Error::OrderTooSmall { requested: n as usize, available: f.order() });
    }
    let mut acc = Rational::zero();
    for m in enumerate_compositions(n)? {
        let c = binomial(i64::from(k), m.length() as i64);
        if c != 0 {
            acc += f.phi_product(&m) * int(c as i64);
        }
    }
    Ok(acc)
}

/// Coefficient of `F_{n_1} ... F_{n_s} x^k`, applying the homogeneous
/// components right to left.
pub fn apply_component_word(f: &Diffeo, word: &Composition, k: u32) -> Result<Rational> {
    let mut acc = Rational::one();
    let mut exp = k;
    for &n in word.parts().iter().rev() {
        acc *= apply_homogeneous_component(f, n, exp)?;
        exp += n;
    }
    Ok(acc)
}

/// Same coefficient as [`apply_component_word`], expanded as
/// `sum_{m^i in N_{n_i}} B_k(m^1, ..., m^s) phi_{m^1} ... phi_{m^s}`.
pub fn apply_component_word_via_b(f: &Diffeo, word: &Composition, k: u32) -> Result<Rational> {
    if word.weight() as usize > f.order() {
        return Err(Error::OrderTooSmall { requested: word.weight() as usize, available: f.order() });
    }
    let choices: Vec<Vec<Composition>> = word
        .parts()
        .iter()
        .map(|&n| enumerate_compositions(n))
        .collect::<Result<_>>()?;
    let mut acc = Rational::zero();
    let mut idx = vec![0usize; choices.len()];
    loop {
        let blocks: Vec<Composition> = idx.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
        let b = coeff_b(&blocks, k);
        if !b.is_zero() {
            let phis: Rational = blocks.iter().map(|m| f.phi_product(m)).product();
            acc += phis * Rational::from_integer(b);
        }
        // Odometer over the cartesian product.
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(acc);
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}
