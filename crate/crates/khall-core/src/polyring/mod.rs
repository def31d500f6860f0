//! Exact arithmetic substrate: variable registry, Laurent polynomials,
//! rational functions, group symmetrization, truncated formal series and the
//! multiplicative expansion conventions (everything expanded around z → ∞).

mod divide;
mod expand;
mod iota;
mod monomial;
mod poly;
mod rational;
mod series;
mod symmetrize;
mod vars;

pub use divide::exact_div;
pub use expand::{expand_factor, expand_factor_spec, ExpandSign};
pub use iota::{iota_check, IotaReport, IotaSign};
pub use monomial::Monomial;
pub use poly::LaurentPoly;
pub use rational::RationalFn;
pub use series::{FormalSeries, FormalVar, SeriesCmp, SlotVec, Window, SLOT_NONE, SLOT_Z, SLOT_ZW, SLOT_W};
pub use symmetrize::{Permutation, SymGroupAction, SymmetrizeMode};
pub use vars::{SlotVar, StructuralError, Tag, VarId, VarKind, VarTable};

use alloc::string::String;

/// Shorthand used throughout for structural failures.
pub type Result<T> = core::result::Result<T, StructuralError>;

pub(crate) fn err(msg: impl Into<String>) -> StructuralError {
    StructuralError::new(msg.into())
}
