//! The combinatorial algebras on parking functions and their relatives.
//!
//! Elements are plain linear combinations; the key type fixes the algebra and
//! the basis:
//!
//! | algebra | key | basis |
//! |---------|-----|-------|
//! | PQSym | [`ParkingFunction`] | `F_a` |
//! | CQSym | [`Ndpf`] | `P^π` |
//! | SQSym | [`QuasiRibbon`] | `P_q` |
//! | FQSym | [`Permutation`] | `G_σ` |
//! | WQSym | [`PackedWord`] | `M_u` |

pub mod axioms;
pub mod cqsym;
pub mod fqsym;
pub mod morphisms;
pub mod pqsym;
pub mod sqsym;
pub mod wqsym;

use crate::combinat::{Ndpf, PackedWord, ParkingFunction, Permutation, QuasiRibbon};
use crate::exact::{LinComb, Tensor};

pub type Pqsym<C> = LinComb<ParkingFunction, C>;
pub type Cqsym<C> = LinComb<Ndpf, C>;
pub type Sqsym<C> = LinComb<QuasiRibbon, C>;
pub type Fqsym<C> = LinComb<Permutation, C>;
pub type Wqsym<C> = LinComb<PackedWord, C>;
pub type CqsymTensor<C> = Tensor<Ndpf, C>;

pub use morphisms::{istar, istar_on_cqsym, istar_on_sqsym, psi};
