//! Exact computations with finite-dimensional quiver algebras: path bases,
//! representations, minimal resolutions, shifted and coshifted tilting
//! modules, idempotent recollements and homotopy-category models.
//!
//! The runnable examples under `examples/` are the intended entry points:
//!
//! ```text
//! cargo run --example info
//! cargo run --example shift
//! cargo run --example intext
//! ```

pub mod algebra;
pub mod cli;
pub mod endo;
pub mod error;
pub mod fixtures;
pub mod homological;
pub mod homotopy;
pub mod linalg;
pub mod quiver;
pub mod recollement;
pub mod repmod;
pub mod rng;
pub mod tilting;

pub use error::{Error, Result};
