//! Exact matroid Euler characteristics on the permutohedral toric variety.

pub mod chain;
pub mod error;
pub mod euler;
pub mod genperm;
pub mod lp;
pub mod matroid;
mod parse;
pub mod subset;
pub mod tropical;

pub use chain::{enumerate_chains, Chain};
pub use error::{Error, Result};
pub use genperm::{build_polytope, Env, FaceSpec, SubmodularSpec};
pub use matroid::{catalog, CrossCheck, Matroid};
pub use subset::Subset;
pub use tropical::{initial_degeneration, sample_weight, InitialDegeneration, Weight};
