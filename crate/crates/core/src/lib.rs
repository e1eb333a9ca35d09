//! Exact computations for finite-dimensional bound quiver algebras: modules
//! and morphisms, minimal resolutions and Ext, Auslander-Reiten translates,
//! enumeration of indecomposables, tilting theory and Auslander algebras.
//!
//! All arithmetic is exact, over the rationals or a prime field.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod artheory;
pub mod auslander;
pub mod exactmat;
pub mod homology;
pub mod qalgebra;
pub mod reps;
pub mod scalar;
pub mod tilting;

pub use error::{Error, Result};
pub use exactmat::Matrix;
pub use qalgebra::{BoundQuiverAlgebra, Path, Quiver, Relation};
pub use reps::{ModuleMorphism, Representation};
pub use scalar::{Field, Scalar};
