pub mod campaign;
pub mod cartan;
pub mod convolution;
pub mod error;
pub mod linalg;
pub mod modules;
pub mod quiver;
pub mod strings;

pub use cartan::{CartanData, RootVector};
pub use error::{Error, Result};
pub use quiver::{Arrow, Letter, Quiver, Side};
