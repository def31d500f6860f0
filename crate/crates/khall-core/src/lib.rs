//! Exact symbolic engine for the K-theoretic Hall algebra and the braided
//! multiplicative vertex coalgebra of a quiver.
//!
//! Everything here is exact arithmetic over the integers: K-classes are
//! symmetric Laurent polynomials in slot variables, Θ-kernels are kept in
//! factored form for rational identities and expanded into truncated Laurent
//! series (around z → ∞) with explicit valid windows when coefficients are
//! compared.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats and the CLI
//! live in the companion `khall-cli` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod axioms;
pub mod hall;
pub mod kclasses;
pub mod polyring;
pub mod quiver;
pub mod theta;
pub mod vertex;

pub use polyring::{
    ExpandSign, FormalSeries, FormalVar, LaurentPoly, Monomial, RationalFn, SeriesCmp,
    StructuralError, SymGroupAction, Tag, VarId, VarTable, Window,
};
pub use quiver::{DimVector, Quiver, QuiverKind};
