//! Words, compositions, trees and their enumerators.

pub mod composition;
pub mod enumerate;
pub mod quasi_ribbon;
pub mod tree;
pub mod word;
pub mod words;

pub use composition::{compositions, Composition};
pub use enumerate::{enumerate, ndpfs, packed_words, parking_functions, permutations, quasi_ribbons, Family};
pub use quasi_ribbon::{hypoplactic_quasi_ribbon, QuasiRibbon};
pub use tree::{BinaryTree, Side};
pub use word::{
    evaluation, is_parking, pack, packed_evaluation, parkize, shifted_concat_len, shifted_concat_max,
    shifted_shuffle, sort_ascending, standardize, Letter,
};
pub use words::{Ndpf, PackedWord, ParkingFunction, Permutation};
