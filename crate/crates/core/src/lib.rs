//! Exact computation of the invariant Floer cohomology ring of Σ_g × S¹
//! as the quotient ℂ[α, β, γ]/J_g, with the checks that certify its
//! structure: Gröbner presentations, joint spectra of the multiplication
//! operators, local artinian decomposition and dimension tables.

pub mod error;
pub mod floerring;
pub mod groebner;
mod memo;
pub mod par;
pub mod poly;
pub mod relations;
pub mod scalars;
pub mod tables;

pub use error::{Error, Result};
