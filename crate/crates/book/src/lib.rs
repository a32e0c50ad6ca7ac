//! The guide's chapters, compiled so that every listing runs as a doctest.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}

#[doc = include_str!("../../../book/src/exact_arithmetic.md")]
pub mod exact_arithmetic {}

#[doc = include_str!("../../../book/src/grover_walk.md")]
pub mod grover_walk {}

#[doc = include_str!("../../../book/src/state_transfer.md")]
pub mod state_transfer {}

#[doc = include_str!("../../../book/src/walk_regularity.md")]
pub mod walk_regularity {}

#[doc = include_str!("../../../book/src/feasible_spectra.md")]
pub mod feasible_spectra {}

#[doc = include_str!("../../../book/src/command_line.md")]
pub mod command_line {}
