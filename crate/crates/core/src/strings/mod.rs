//! Strings and bands of the gentle algebra, with the combinatorics built on them.

pub mod band;
pub mod basic;
pub mod classes;
pub mod enumerate;
pub mod word;

pub use band::{standard_band, Band};
pub use basic::{BasicStrings, EndData, HookDirection, WeakClass};
pub use classes::{root_to_classes, x_form, x_rank, SimilarityClass, XFamily};
pub use enumerate::{
    bands_within, canonical_string, enumerate_bands, enumerate_strings, strings_of_rank, strings_within, StringFilter,
};
pub use word::{StringWord, Trivial};
