//! Euler characteristics, Snapper polynomials, h*-vectors and the kindred
//! calculus.

mod chi;
mod kindred;
mod macaulay;
mod pairs;
mod snapper;

pub use chi::{
    chi, hstar, hstar_of, numerical_dimension, omega, omega_from, sign_law_holds, snapper_from,
    snapper_polynomial, Transfer,
};
pub use kindred::{
    kindred_snapper, multidegree_and_progenitor, project_multisnapper, MultiSnapper, Multidegree,
};
pub use macaulay::{macaulay_bound, macaulay_check, macaulay_representation, MacaulayVerdict};
pub use pairs::{dhr_degree, pair_polytope, pairs_snapper_oracle, pairs_sum};
pub use snapper::{binomial_poly, HStarVector, SnapperPoly};
