//! Chain groups of finite groups and fusion rings.
//!
//! The chain group of a fusion ring is the free abelian group on its simple
//! labels modulo `[Z] = [X] + [Y]` whenever `Z` occurs in `X ⊗ Y`. For the
//! representation ring of a finite group it is isomorphic to the character
//! group of the center. This crate computes both sides exactly:
//!
//! * [`groups`]: permutation groups, conjugacy classes, center, catalog.
//! * [`charmod`]: character tables over a prime field (Dixon–Schneider).
//! * [`fusion`]: fusion rings, their axioms, and lazily presented oracles.
//! * [`chaingroup`]: the chain group as a Smith-normal-form cokernel and as
//!   a union-find quotient of the labels.
//! * [`centerdual`]: center structure, central characters, restriction map.
//! * [`verify`]: exhaustive checks relating all of the above.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod centerdual;
pub mod chaingroup;
pub mod charmod;
pub mod fusion;
pub mod groups;
pub mod verify;

mod error;

pub use analysis::{GroupAnalysis, RingAnalysis};
pub use error::Error;
