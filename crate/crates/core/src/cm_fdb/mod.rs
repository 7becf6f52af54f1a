//! Coproduct and antipode of the Connes-Moscovici generators `delta_n` and
//! the Faà di Bruno generators `a_n`, with independent checks.

mod basis;
mod formulas;
mod oracle;
mod pbw;

pub use basis::{a_in_gamma, a_to_gamma, coproduct_a_via_gamma, gamma_in_a, gamma_to_a};
pub use formulas::{
    antipode_a, antipode_a_ordered, antipode_delta, antipode_delta_ordered, coproduct_a,
    coproduct_a_ordered, coproduct_delta, coproduct_delta_ordered,
};
pub use oracle::{
    oracle_antipode_a_eval, oracle_antipode_eval, oracle_coproduct_a_eval, oracle_coproduct_eval,
    pair_coproduct,
};
pub use pbw::{
    coproduct_x, nc_multiply, nc_normal_form, recursive_coproduct_delta, recursive_coproduct_nc,
    Letter, NCElement, NCTensor, NCWord,
};

use std::collections::BTreeMap;

use crate::error::Result;
use crate::hopf::{AlgebraElement, TensorElement};

/// Generator images `Δ(δ_k)` for `k = 1..=max_degree`.
pub fn delta_coproduct_images(max_degree: u32) -> Result<BTreeMap<u32, TensorElement>> {
    (1..=max_degree).map(|k| Ok((k, coproduct_delta(k)?))).collect()
}

/// Generator images `S(δ_k)` for `k = 1..=max_degree`.
pub fn delta_antipode_images(max_degree: u32) -> Result<BTreeMap<u32, AlgebraElement>> {
    (1..=max_degree).map(|k| Ok((k, antipode_delta(k)?))).collect()
}

/// Generator images `Δ(a_k)` for `k = 1..=max_degree`.
pub fn a_coproduct_images(max_degree: u32) -> Result<BTreeMap<u32, TensorElement>> {
    (1..=max_degree).map(|k| Ok((k, coproduct_a(k)?))).collect()
}

/// Generator images `S(a_k)` for `k = 1..=max_degree`.
pub fn a_antipode_images(max_degree: u32) -> Result<BTreeMap<u32, AlgebraElement>> {
    (1..=max_degree).map(|k| Ok((k, antipode_a(k)?))).collect()
}
