//! The tropical initial degeneration and its Möbius coefficients.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::cone::cone_meets;
use super::fan::{bergman_fan, BergmanFan};
use super::ordering::{flat_table, meets_bergman};
use super::weight::Weight;
use crate::chain::{enumerate_chains, Chain};
use crate::error::{Error, Result};
use crate::matroid::Matroid;

/// Ground sets above this size are refused by the pipeline.
pub const PIPELINE_CAP: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainEntry {
    pub chain: Chain,
    pub indicator: bool,
    pub coefficient: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialDegeneration {
    matroid: Matroid,
    weight: Weight,
    components: Vec<Chain>,
    /// Every chain with at least `n - r` sets, in canonical order.
    entries: Vec<ChainEntry>,
}

impl InitialDegeneration {
    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn components(&self) -> &[Chain] {
        &self.components
    }

    pub fn entries(&self) -> &[ChainEntry] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Chains with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = (&Chain, i64)> {
        self.entries
            .iter()
            .filter(|e| e.coefficient != 0)
            .map(|e| (&e.chain, e.coefficient))
    }

    pub fn coefficient(&self, chain: &Chain) -> i64 {
        self.entries
            .binary_search_by(|e| e.chain.cmp(chain))
            .map_or(0, |k| self.entries[k].coefficient)
    }

    pub fn indicator(&self, chain: &Chain) -> bool {
        self.entries
            .binary_search_by(|e| e.chain.cmp(chain))
            .is_ok_and(|k| self.entries[k].indicator)
    }

    pub fn coefficient_sum(&self) -> i64 {
        self.entries.iter().map(|e| e.coefficient).sum()
    }

    /// Text report: a header line, then one line per nonzero coefficient
    /// with components marked by `*`.
    pub fn report(&self) -> String {
        let m = &self.matroid;
        let w: Vec<String> = self.weight.values().iter().map(|x| x.to_string()).collect();
        let seed = self
            .weight
            .seed()
            .map_or_else(|| "none".to_string(), |s| s.to_string());
        let mut out = format!(
            "indeg n={} r={} seed={} w={}\n",
            m.n(),
            m.rank(),
            seed,
            w.join(",")
        );
        for (chain, c) in self.support() {
            let star = if self.components.binary_search(chain).is_ok() { " *" } else { "" };
            let _ = writeln!(out, "{chain} c={c}{star}");
        }
        out
    }
}

pub fn initial_degeneration(m: &Matroid, w: &Weight) -> Result<InitialDegeneration> {
    let n = m.n();
    if n > PIPELINE_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: PIPELINE_CAP,
            what: "initial degenerations",
        });
    }
    if w.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: w.n(),
        });
    }
    if !m.is_loopless() {
        return Ok(InitialDegeneration {
            matroid: m.clone(),
            weight: w.clone(),
            components: Vec::new(),
            entries: Vec::new(),
        });
    }
    if !w.is_certified_for(m) {
        return Err(Error::WeightNotCertified);
    }
    let flats = flat_table(m);
    let floor = n - m.rank();
    let chains = enumerate_chains(n, floor);

    let mut index: HashMap<&Chain, usize> = HashMap::with_capacity(chains.len());
    let mut indicator = vec![false; chains.len()];
    for (k, chain) in chains.iter().enumerate() {
        // A cone meets w + Σ_M as soon as one of its faces does.
        let via_face = chain.len() > floor
            && (0..chain.len()).any(|d| index.get(&chain.without(d)).is_some_and(|&j| indicator[j]));
        indicator[k] = via_face || meets_bergman(chain, w.values(), &flats);
        index.insert(chain, k);
    }

    // c_σ = i_σ - Σ_{σ' ⊊ σ} c_{σ'}, over chains in the stored range.
    let mut coefficient = vec![0i64; chains.len()];
    for (k, chain) in chains.iter().enumerate() {
        if !indicator[k] {
            continue;
        }
        let len = chain.len();
        let mut below = 0i64;
        for mask in 0u64..(1 << len) - 1 {
            if (mask.count_ones() as usize) < floor {
                continue;
            }
            let sub = Chain::from_sorted(
                chain
                    .sets()
                    .iter()
                    .enumerate()
                    .filter(|(d, _)| mask >> d & 1 == 1)
                    .map(|(_, &s)| s)
                    .collect(),
            );
            below += coefficient[index[&sub]];
        }
        coefficient[k] = 1 - below;
    }

    let components: Vec<Chain> = chains
        .iter()
        .zip(&indicator)
        .filter(|(c, &i)| i && c.len() == floor)
        .map(|(c, _)| c.clone())
        .collect();
    let entries = chains
        .iter()
        .zip(indicator.iter().zip(&coefficient))
        .map(|(chain, (&indicator, &coefficient))| ChainEntry {
            chain: chain.clone(),
            indicator,
            coefficient,
        })
        .collect();
    Ok(InitialDegeneration {
        matroid: m.clone(),
        weight: w.clone(),
        components,
        entries,
    })
}

fn meets_shifted_fan(sigma: &Chain, w: &[i64], fan: &BergmanFan) -> bool {
    fan.maximal_chains()
        .iter()
        .any(|tau| cone_meets(sigma, w, tau).meets)
}

/// `i_σ` tested against every maximal Bergman cone separately, without
/// using faces or flat orderings. Used to cross-check
/// [`initial_degeneration`].
pub fn indicator_direct(m: &Matroid, w: &Weight, sigma: &Chain) -> Result<bool> {
    let fan = bergman_fan(m)?;
    Ok(meets_shifted_fan(sigma, w.values(), &fan))
}

/// A chain of codimension `r - 1` meeting two maximal shifted cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityViolation {
    pub sigma: Chain,
    pub first: Chain,
    pub second: Chain,
}

/// Checks that every chain with `n - r` sets meets at most one maximal cone
/// of `w + Σ_M`.
pub fn multiplicity_certificate(
    m: &Matroid,
    w: &Weight,
) -> Result<std::result::Result<(), MultiplicityViolation>> {
    if !w.is_certified_for(m) {
        return Err(Error::WeightNotCertified);
    }
    let fan = bergman_fan(m)?;
    let n = m.n();
    let floor = n - m.rank();
    for sigma in enumerate_chains(n, floor) {
        if sigma.len() != floor {
            continue;
        }
        let mut hits = fan
            .maximal_chains()
            .iter()
            .filter(|tau| cone_meets(&sigma, w.values(), tau).meets);
        if let (Some(first), Some(second)) = (hits.next(), hits.next()) {
            return Ok(Err(MultiplicityViolation {
                sigma: sigma.clone(),
                first: first.clone(),
                second: second.clone(),
            }));
        }
    }
    Ok(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize, text: &str) -> Chain {
        Chain::parse(n, text).unwrap()
    }

    #[test]
    fn golden_u23() {
        let m = Matroid::uniform(2, 3).unwrap();
        let w = Weight::certify_for(&m, vec![0, 1, 3]).unwrap();
        let d = initial_degeneration(&m, &w).unwrap();
        let comps: Vec<String> = d.components().iter().map(|c| c.to_string()).collect();
        assert_eq!(comps, ["3", "1,3", "2,3"]);
        let support: Vec<(String, i64)> = d.support().map(|(c, v)| (c.to_string(), v)).collect();
        assert_eq!(
            support,
            [
                ("3".to_string(), 1),
                ("1,3".to_string(), 1),
                ("2,3".to_string(), 1),
                ("3<1,3".to_string(), -1),
                ("3<2,3".to_string(), -1),
            ]
        );
        assert_eq!(d.coefficient(&chain(3, "1<1,3")), 0);
        assert_eq!(d.coefficient(&chain(3, "2<2,3")), 0);
        assert_eq!(d.coefficient_sum(), 1);
        assert_eq!(
            d.report(),
            "indeg n=3 r=2 seed=none w=0,1,3\n3 c=1 *\n1,3 c=1 *\n2,3 c=1 *\n3<1,3 c=-1\n3<2,3 c=-1\n"
        );
        assert_eq!(multiplicity_certificate(&m, &w).unwrap(), Ok(()));
    }

    #[test]
    fn rank_one_is_the_chamber_of_w() {
        let m = Matroid::uniform(1, 3).unwrap();
        let w = Weight::certify_for(&m, vec![5, 0, 2]).unwrap();
        let d = initial_degeneration(&m, &w).unwrap();
        // w lies in the chamber x_1 > x_3 > x_2, i.e. the cone of 1 ⊂ 1,3.
        assert_eq!(d.components(), &[chain(3, "1<1,3")]);
        let support: Vec<_> = d.support().collect();
        assert_eq!(support, vec![(&chain(3, "1<1,3"), 1)]);
    }

    #[test]
    fn free_matroid_telescopes() {
        let m = Matroid::uniform(3, 3).unwrap();
        let w = Weight::certify_for(&m, vec![0, 1, 3]).unwrap();
        let d = initial_degeneration(&m, &w).unwrap();
        assert!(d.entries().iter().all(|e| e.indicator));
        let support: Vec<_> = d.support().collect();
        assert_eq!(support, vec![(&Chain::origin(), 1)]);
    }

    #[test]
    fn loops_give_empty_degeneration() {
        let m = Matroid::validate(3, [crate::subset::Subset::from_elements([1, 2])]).unwrap();
        let d = initial_degeneration(&m, &Weight::uncertified(vec![0, 1, 3])).unwrap();
        assert!(d.is_empty());
        assert_eq!(d.coefficient_sum(), 0);
    }

    #[test]
    fn uncertified_weight_is_rejected() {
        let m = Matroid::uniform(2, 3).unwrap();
        assert_eq!(
            initial_degeneration(&m, &Weight::uncertified(vec![0, 1, 3])),
            Err(Error::WeightNotCertified)
        );
    }
}
