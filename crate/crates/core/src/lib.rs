//! Exact coproduct and antipode formulas for the Connes-Moscovici Hopf
//! algebra and the Faà di Bruno Hopf algebra of formal diffeomorphisms
//! tangent to the identity, together with the shuffle-algebra realization of
//! the Connes-Moscovici generators and independent series-level checks.
//!
//! All arithmetic is exact over [`Rational`].

pub mod cm_fdb;
pub mod coefficients;
pub mod combinatorics;
mod error;
pub mod hopf;
pub mod random;
pub mod rational;
pub mod series;
pub mod shuffle;

pub use combinatorics::Composition;
pub use error::{Error, Result};
pub use hopf::{AlgebraElement, Family, Monomial, TensorElement};
pub use rational::Rational;
pub use series::{Diffeo, PowerSeries};
