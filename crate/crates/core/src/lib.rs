//! Exact engine for Lusztig's algorithm on the Suzuki and Ree groups
//! ²B₂, ²G₂, ²F₄ and on the disconnected groups `(G×G)⋊⟨τ⟩` built from them.
//!
//! The pipeline is: case data ([`cosetdata`]) and twisted Weyl groups
//! ([`weylgroups`]) feed the Ω matrix, which [`lusztigcore`] factors as
//! `ᵗPΛP = Ω`; the characteristic functions on unipotent classes follow and
//! are compared cell by cell with the transcribed almost-character tables.

pub mod exactfield;
pub mod cosetdata;
pub mod disconnected;
pub mod finitegroup;
pub mod lusztigcore;
pub mod weylgroups;

pub use exactfield::{FieldError, MatrixRF, Poly, QuadRational, RatFunc};
