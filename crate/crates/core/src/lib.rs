//! Dirac-number multiplication.
//!
//! [`algebra`] holds the ground-truth table and the schoolbook product,
//! [`fastmult`] the factorized 88-multiplication pipeline, and [`slpgen`]
//! turns that pipeline into a straight-line program. Everything is generic
//! over the scalar rings in [`exactnum`].

pub mod algebra;
pub mod exactnum;
pub mod linalg;
pub mod fastmult;
pub mod slpgen;
