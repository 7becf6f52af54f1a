//! JSON form of algebra and tensor elements.
//!
//! ```json
//! {"family":"delta","terms":[{"monomial":[1,1],"coeff":"1/2"}]}
//! {"family":"delta","terms":[{"left":[1],"right":[1],"coeff":"1"}]}
//! ```
//!
//! Terms follow the monomial order (degree, factor count, lexicographic);
//! tensor terms are ordered by `(left, right)`. Coefficients are rationals in
//! lowest terms with the sign on the numerator.

use serde::{Deserialize, Serialize};

use super::{AlgebraElement, Family, Monomial, TensorElement};
use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialTermJson {
    pub monomial: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub family: Family,
    pub terms: Vec<MonomialTermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorTermJson {
    pub left: Vec<u32>,
    pub right: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorJson {
    pub family: Family,
    pub terms: Vec<TensorTermJson>,
}

fn monomial_from_json(factors: &[u32]) -> Result<Monomial> {
    if factors.contains(&0) {
        return Err(Error::Parse("generator index 0 in monomial".into()));
    }
    Ok(Monomial::from_factors(factors.to_vec()))
}

impl AlgebraElement {
    pub fn to_json(&self) -> AlgebraJson {
        AlgebraJson {
            family: self.family(),
            terms: self
                .terms()
                .iter()
                .map(|(m, c)| MonomialTermJson { monomial: m.factors().to_vec(), coeff: format_rational(c) })
                .collect(),
        }
    }

    pub fn from_json(j: &AlgebraJson) -> Result<Self> {
        let mut e = AlgebraElement::zero(j.family);
        for t in &j.terms {
            e.add_term(monomial_from_json(&t.monomial)?, parse_rational(&t.coeff)?);
        }
        Ok(e)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: AlgebraJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&j)
    }
}

impl TensorElement {
    pub fn to_json(&self) -> TensorJson {
        TensorJson {
            family: self.family(),
            terms: self
                .terms()
                .iter()
                .map(|((l, r), c)| TensorTermJson {
                    left: l.factors().to_vec(),
                    right: r.factors().to_vec(),
                    coeff: format_rational(c),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &TensorJson) -> Result<Self> {
        let mut e = TensorElement::zero(j.family);
        for t in &j.terms {
            e.add_term(
                monomial_from_json(&t.left)?,
                monomial_from_json(&t.right)?,
                parse_rational(&t.coeff)?,
            );
        }
        Ok(e)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: TensorJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&j)
    }
}
