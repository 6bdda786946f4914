use crate::chain::{chains_in, Chain};
use crate::error::Result;
use crate::matroid::Matroid;

/// The Bergman fan of a loopless matroid, by its maximal cones: complete
/// flags of nonempty proper flats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BergmanFan {
    matroid: Matroid,
    maximal: Vec<Chain>,
}

impl BergmanFan {
    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn maximal_chains(&self) -> &[Chain] {
        &self.maximal
    }

    pub fn dim(&self) -> usize {
        self.matroid.rank().saturating_sub(1)
    }

    /// Every cone of the fan, including the origin.
    pub fn all_chains(&self) -> Vec<Chain> {
        let flats = self.matroid.proper_flats();
        chains_in(self.matroid.n(), 0, |s| flats.binary_search(&s).is_ok())
    }
}

pub fn bergman_fan(m: &Matroid) -> Result<BergmanFan> {
    m.require_loopless()?;
    let flats = m.proper_flats();
    let len = m.rank().saturating_sub(1);
    // Flags of flats are maximal exactly when they have r - 1 members.
    let maximal: Vec<Chain> = chains_in(m.n(), len, |s| flats.binary_search(&s).is_ok())
        .into_iter()
        .filter(|c| c.len() == len)
        .collect();
    Ok(BergmanFan {
        matroid: m.clone(),
        maximal,
    })
}
