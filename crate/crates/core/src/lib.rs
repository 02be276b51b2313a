//! Exact computational toolkit for tensor rings of nilpotent bimodules over
//! finite-dimensional algebras.
//!
//! Everything is computed over a prime field F_p with exact arithmetic. The
//! crate builds tensor rings `T = R (+) M (+) M⊗M (+) ...` from a base algebra
//! `R` and a nilpotent bimodule `M`, realizes the induction / coinduction /
//! stalk / cokernel functors between `Mod(R)` and `Mod(T)` as literal matrices,
//! and classifies modules (projective, injective, flat, Gorenstein projective /
//! injective / flat) by two independent routes: a monomorphism-category
//! criterion on the pair presentation and a direct homological test over the
//! tensor ring itself.

#![allow(clippy::needless_range_loop)]

mod error;

pub mod algebra;
pub mod campaign;
pub mod classify;
pub mod constructions;
pub mod formats;
pub mod hom;
pub mod hypotheses;
pub mod linalg;
pub mod module;
pub mod report;
pub mod resolution;
pub mod tensor;
pub mod tensor_ring;

pub use algebra::{Algebra, Quiver};
pub use classify::{DimBound, IgCertificate, Tri};
pub use error::Error;
pub use linalg::{FieldSpec, Mat};
pub use module::{Bimodule, FdModule, ModHom, RightModule};
pub use tensor_ring::{CopairModule, PairModule, TensorPowers};

pub type Result<T> = std::result::Result<T, Error>;
