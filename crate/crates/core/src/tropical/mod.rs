//! Permutohedral and Bergman fans, generic weights, and initial
//! degenerations.

mod cone;
mod degeneration;
mod fan;
mod ordering;
mod weight;

pub use crate::chain::{enumerate_chains, Chain};
pub use cone::{cone_meets, cone_meets_lp, span_rank, ConeMeet};
pub use degeneration::{
    indicator_direct, initial_degeneration, multiplicity_certificate, ChainEntry,
    InitialDegeneration, MultiplicityViolation, PIPELINE_CAP,
};
pub use fan::{bergman_fan, BergmanFan};
pub use weight::{
    balanced_sum_free, genericity_battery, sample_weight, Certificate, Weight, MAX_DRAWS,
    WEIGHT_RANGE,
};
