use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{extend_antipode, AlgebraElement, Monomial, TensorElement, TripleTensor};
use crate::error::Result;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// `(Δ ⊗ id)Δ = (id ⊗ Δ)Δ`
    Coassociativity,
    /// `(ε ⊗ id)Δ = id`
    LeftCounit,
    /// `(id ⊗ ε)Δ = id`
    RightCounit,
    /// `m(S ⊗ id)Δ = uε`
    LeftAntipode,
    /// `m(id ⊗ S)Δ = uε`
    RightAntipode,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [
        Axiom::Coassociativity,
        Axiom::LeftCounit,
        Axiom::RightCounit,
        Axiom::LeftAntipode,
        Axiom::RightAntipode,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Coassociativity => "coassociativity",
            Axiom::LeftCounit => "left counit",
            Axiom::RightCounit => "right counit",
            Axiom::LeftAntipode => "left antipode",
            Axiom::RightAntipode => "right antipode",
        }
    }

    pub fn is_antipode(self) -> bool {
        matches!(self, Axiom::LeftAntipode | Axiom::RightAntipode)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub generator: u32,
    pub axiom: Axiom,
    /// Rendered nonzero residual, or the reason the check could not run.
    pub residual: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub max_degree: u32,
    pub checks_run: usize,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed(&self, axiom: Axiom) -> bool {
        self.failures.iter().any(|f| f.axiom == axiom)
    }
}

/// Counit of a graded connected algebra: `1` on the unit monomial, `0`
/// elsewhere.
pub fn augmentation(m: &Monomial) -> Rational {
    if m.is_unit() {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Checks coassociativity, both counit laws and both antipode laws on every
/// generator `1..=max_degree`. Failing identities are reported with their
/// residual instead of aborting.
pub fn check_hopf_axioms(
    coproducts: &BTreeMap<u32, TensorElement>,
    antipodes: &BTreeMap<u32, AlgebraElement>,
    counit: impl Fn(&Monomial) -> Rational,
    max_degree: u32,
) -> AxiomReport {
    let mut report = AxiomReport { max_degree, ..Default::default() };
    for n in 1..=max_degree {
        let Some(delta) = coproducts.get(&n) else {
            for axiom in Axiom::ALL {
                report.failures.push(AxiomFailure {
                    generator: n,
                    axiom,
                    residual: format!("no coproduct image for generator {n}"),
                });
            }
            continue;
        };
        let family = delta.family();
        let x = AlgebraElement::generator(family, n);
        let symbol = family.symbol();
        for axiom in Axiom::ALL {
            report.checks_run += 1;
            let residual: Result<Option<String>> = match axiom {
                Axiom::Coassociativity => (|| {
                    let lhs = TripleTensor::coproduct_left(coproducts, delta)?;
                    let rhs = TripleTensor::coproduct_right(coproducts, delta)?;
                    let diff = lhs.sub(&rhs);
                    Ok((!diff.is_zero()).then(|| format!("{} nonzero terms, e.g. {:?}", diff.terms().len(), diff.terms().iter().next())))
                })(),
                Axiom::LeftCounit | Axiom::RightCounit => (|| {
                    let mut acc = AlgebraElement::zero(family);
                    for ((l, r), c) in delta.terms() {
                        let (kept, dropped) = if axiom == Axiom::LeftCounit { (r, l) } else { (l, r) };
                        acc.add_term(kept.clone(), c * counit(dropped));
                    }
                    let diff = acc.sub(&x)?;
                    Ok((!diff.is_zero()).then(|| diff.render(symbol)))
                })(),
                Axiom::LeftAntipode | Axiom::RightAntipode => (|| {
                    let mut acc = AlgebraElement::zero(family);
                    for ((l, r), c) in delta.terms() {
                        let (sl, sr) = if axiom == Axiom::LeftAntipode {
                            (extend_antipode(antipodes, &AlgebraElement::term(family, l.clone(), c.clone()))?,
                             AlgebraElement::term(family, r.clone(), Rational::one()))
                        } else {
                            (AlgebraElement::term(family, l.clone(), c.clone()),
                             extend_antipode(antipodes, &AlgebraElement::term(family, r.clone(), Rational::one()))?)
                        };
                        acc = acc.add(&sl.mul(&sr)?)?;
                    }
                    let expected = AlgebraElement::one(family).scale(&counit(&Monomial::generator(n)));
                    let diff = acc.sub(&expected)?;
                    Ok((!diff.is_zero()).then(|| diff.render(symbol)))
                })(),
            };
            match residual {
                Ok(None) => {}
                Ok(Some(r)) => report.failures.push(AxiomFailure { generator: n, axiom, residual: r }),
                Err(e) => report.failures.push(AxiomFailure { generator: n, axiom, residual: e.to_string() }),
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::Family;
    use crate::rational::int;

    #[test]
    fn primitive_generator_passes() {
        let coproducts = BTreeMap::from([(1, TensorElement::primitive(Family::Delta, 1))]);
        let antipodes = BTreeMap::from([(1, AlgebraElement::generator(Family::Delta, 1).scale(&int(-1)))]);
        let report = check_hopf_axioms(&coproducts, &antipodes, augmentation, 1);
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.checks_run, 5);
    }

    #[test]
    fn wrong_antipode_is_reported() {
        let coproducts = BTreeMap::from([(1, TensorElement::primitive(Family::Delta, 1))]);
        let antipodes = BTreeMap::from([(1, AlgebraElement::generator(Family::Delta, 1))]);
        let report = check_hopf_axioms(&coproducts, &antipodes, augmentation, 1);
        assert!(report.failed(Axiom::LeftAntipode));
        assert!(report.failed(Axiom::RightAntipode));
        assert!(!report.failed(Axiom::Coassociativity));
        assert_eq!(report.failures[0].residual, "2δ₁");
    }

    #[test]
    fn missing_images_are_failures_not_panics() {
        let report = check_hopf_axioms(&BTreeMap::new(), &BTreeMap::new(), augmentation, 2);
        assert_eq!(report.failures.len(), 10);
    }
}
