//! Centers, Jacobson radicals and socles of modular group algebras.
//!
//! The crate is layered: [`linalg`] supplies exact arithmetic over `F_p`,
//! [`group`] finite groups as Cayley tables, [`algebra`] the group algebra
//! `F_pG` and its center, and [`structure`] the structural analysis of groups
//! `G = G' ⋊ H` deciding whether `soc(Z F_pG)` is an ideal of `F_pG`.

pub mod algebra;
pub mod error;
pub mod group;
pub mod linalg;
pub mod structure;

pub use error::{Error, Result};
