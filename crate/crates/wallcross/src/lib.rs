//! Exact wall-and-chamber computations for quiver moduli.
//!
//! The crate decides existence of simple and stable representations,
//! enumerates stability walls for primitive dimension vectors, classifies
//! wall-crossing diagrams (flips, flops, divisorial contractions, Mori
//! fiber spaces) with certificates and K-order tags, and checks the
//! enumerative generating-series identities (product expansion,
//! wall-crossing factors, DT/PT transform) on truncated Laurent series.
//!
//! All arithmetic is exact: rationals, Gaussian rationals and integers.
//! Every verdict that rests on an equality — chamber membership, series
//! identities — is an exact comparison.

pub mod arith;
pub mod classify;
pub mod error;
pub mod formats;
pub mod oracle;
pub mod presets;
pub mod quiver;
pub mod report;
pub mod series;
pub mod simples;
pub mod stability;

pub use error::{Error, Result};
pub use quiver::{DimVector, Quiver, TrivialType, VertexId};
