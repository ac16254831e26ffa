//! Exact invariants and growth bounds of polynomial mappings
//! `F = (F_1, ..., F_n): C^n -> C^n`, computed through Macaulay resultants.

pub mod analysis;
pub mod cli;
pub(crate) mod interp;
pub mod macaulay;
pub mod numeric;
pub mod pgcurve;
pub mod polyring;
