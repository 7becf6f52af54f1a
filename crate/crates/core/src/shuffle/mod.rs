//! The shuffle Hopf algebra on words over the positive integers, the
//! elements `Γ_n` realizing the Connes-Moscovici generators in it, and
//! moulds for the formal conjugacy of one-dimensional vector fields.

mod gamma;
mod mould;
mod words;

pub use gamma::{
    check_word_hopf_axioms, gamma, verify_gamma_antipode, verify_gamma_antipode_with,
    verify_gamma_coproduct, verify_gamma_coproduct_with, GammaCheck, GammaMap,
};
pub use mould::{
    conjugacy_mould, conjugacy_phi, conjugacy_residual, exponential_mould, gamma_functional_check,
    phi_from_mould, render_phi, symmetrality_check, Mould, SymmetralityReport, SymmetralityViolation,
};
pub use words::{
    word_antipode, word_coproduct, word_counit, word_shuffle_multiply, Word, WordElement, WordTensor,
};
