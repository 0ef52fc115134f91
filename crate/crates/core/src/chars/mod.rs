//! Characters of the parking-function algebras and their combinatorial payloads.

pub mod alpha;
pub mod chi;
pub mod narayana;
pub mod paths;
pub mod signed;

pub use alpha::{fixed_pair_counts, p_alpha, p_alpha_closed, psi_alpha, q_n, q_triangle, PsiAlphaReport};
pub use chi::{bar_distribution, chi, chi_sqsym, ChiReport};
pub use narayana::{
    lassalle_narayana, narayana_from_schroder, q_pochhammer, qt_f, qt_f_identity_check, s_character_check,
    schroder_polynomials, schroder_triangle, super_narayana_count, super_narayana_sym, SchroderPolynomials,
    SignedStatistic,
};
pub use paths::{
    dyck_decode, dyck_encode, dyck_paths, schroder_decode, schroder_encode, schroder_paths, schroder_sort, DyckPath,
    SchroderPath, Step,
};
pub use signed::{signed_parking_functions, signed_stats, SignedParkingFunction, SignedStats};

use crate::QPoly;

/// Polynomials indexed by `n`.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct CharacterTable {
    pub rows: Vec<(usize, QPoly)>,
}

impl CharacterTable {
    pub fn build(ns: impl IntoIterator<Item = usize>, mut f: impl FnMut(usize) -> crate::Result<QPoly>) -> crate::Result<Self> {
        Ok(CharacterTable { rows: ns.into_iter().map(|n| Ok((n, f(n)?))).collect::<crate::Result<_>>()? })
    }

    pub fn get(&self, n: usize) -> Option<&QPoly> {
        self.rows.iter().find(|(m, _)| *m == n).map(|(_, p)| p)
    }
}
