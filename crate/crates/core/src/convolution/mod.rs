//! Constructible functions on locally free modules and their convolution product.

pub mod engine;
pub mod function;
pub mod symbol;
pub mod theta;

pub use engine::{default_t_samples, ConvolutionAlgebra, Universe, UniverseKind};
pub use function::{coefficient_rank, linear_independent, ConstructibleFunction};
pub use symbol::{Indecomposable, Symbol};
pub use theta::{stable_band, Recipe, ThetaCache, MAX_RHO_MULTIPLE};
