//! Exact rational GIT data for the action of a maximal torus on a flag
//! variety `G/B`: semistable Weyl sets, the GIT fan of the Weyl chamber,
//! codimension of the unstable locus, saturated root subsystems with the
//! highest-root path, and the Picard rank of the quotient.

pub mod cli;
pub mod error;
pub mod gitfan;
pub mod ratlinalg;
pub mod picard;
pub mod rootsys;
pub mod saturated;
pub mod stability;
pub mod weyl;

pub use error::{Error, Result};
