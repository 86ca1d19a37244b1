//! Windings, push-forward to representations of `H`, and exact module-theoretic solvers.

pub mod ar;
pub mod duality;
pub mod rep;
pub mod winding;

pub use ar::{ar_translate, ar_translate_inv};
pub use duality::{dual_band, dual_word, opposite_quiver};
pub use rep::{ext1_dim, hom_basis, hom_dim, is_isomorphic, quotient, socle, thin, RepQuiver, Representation};
pub use winding::{
    band_host_rep, band_module, morphisms, pushforward, pushforward_morphism, string_module, winding_of_band,
    winding_of_string, Winding, WindingMorphism,
};
