//! Generic weights with certificates.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::cone::cone_meets;
use super::fan::bergman_fan;
use crate::chain::{enumerate_chains, Chain};
use crate::error::{Error, Result};
use crate::matroid::Matroid;

pub const MAX_DRAWS: u32 = 64;
pub const WEIGHT_RANGE: i64 = 1 << 20;

/// How a weight was shown to be generic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// No two disjoint sets of equal size have equal weight sums. Any cone
    /// pair that is not transverse spans a subspace cut out by such a
    /// balanced relation, so this certifies genericity for every matroid on
    /// `[n]`.
    BalancedSums,
    /// The explicit battery passed for this matroid.
    Battery(Matroid),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    w: Vec<i64>,
    seed: Option<u64>,
    retries: u32,
    certificate: Option<Certificate>,
}

impl Weight {
    /// An unchecked weight; pipeline entry points reject it.
    pub fn uncertified(w: Vec<i64>) -> Self {
        Weight {
            w: normalize(w),
            seed: None,
            retries: 0,
            certificate: None,
        }
    }

    /// Certifies a user-supplied weight for `m`, trying the balanced-sum
    /// test first and falling back to the explicit battery.
    pub fn certify_for(m: &Matroid, w: Vec<i64>) -> Result<Self> {
        if w.len() != m.n() {
            return Err(Error::DimensionMismatch {
                expected: m.n(),
                found: w.len(),
            });
        }
        let w = normalize(w);
        let certificate = if balanced_sum_free(&w) {
            Certificate::BalancedSums
        } else if genericity_battery(m, &w)?.is_none() {
            Certificate::Battery(m.clone())
        } else {
            return Err(Error::WeightNotCertified);
        };
        Ok(Weight {
            w,
            seed: None,
            retries: 0,
            certificate: Some(certificate),
        })
    }

    pub fn values(&self) -> &[i64] {
        &self.w
    }

    pub fn n(&self) -> usize {
        self.w.len()
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn retries(&self) -> u32 {
        self.retries
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        self.certificate.as_ref()
    }

    pub fn is_certified_for(&self, m: &Matroid) -> bool {
        self.w.len() == m.n()
            && match &self.certificate {
                Some(Certificate::BalancedSums) => true,
                Some(Certificate::Battery(certified)) => certified == m,
                None => false,
            }
    }
}

/// Shifts along `e_[n]` so the smallest coordinate is 0.
fn normalize(mut w: Vec<i64>) -> Vec<i64> {
    if let Some(&min) = w.iter().min() {
        w.iter_mut().for_each(|x| *x -= min);
    }
    w
}

/// Draws a certified weight from a seeded generator.
pub fn sample_weight(m: &Matroid, seed: u64) -> Result<Weight> {
    m.require_loopless()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for retries in 0..MAX_DRAWS {
        let w: Vec<i64> = (0..m.n()).map(|_| rng.gen_range(0..WEIGHT_RANGE)).collect();
        let w = normalize(w);
        if balanced_sum_free(&w) {
            return Ok(Weight {
                w,
                seed: Some(seed),
                retries,
                certificate: Some(Certificate::BalancedSums),
            });
        }
    }
    Err(Error::GenericityExhausted {
        attempts: MAX_DRAWS,
    })
}

/// True when `w(A) != w(B)` for all disjoint nonempty `A`, `B` with
/// `|A| = |B|`.
pub fn balanced_sum_free(w: &[i64]) -> bool {
    fn go(w: &[i64], k: usize, balance: i32, sum: i64, used: bool) -> bool {
        if k == w.len() {
            return !(used && balance == 0 && sum == 0);
        }
        go(w, k + 1, balance, sum, used)
            && go(w, k + 1, balance + 1, sum + w[k], true)
            && go(w, k + 1, balance - 1, sum - w[k], true)
    }
    go(w, 0, 0, 0, false)
}

/// Checks every cone `σ` of the permutohedral fan against every cone `τ`
/// of the Bergman fan: whenever `σ` meets `w + τ` the meeting must be
/// transverse with `dim σ + dim τ >= n - 1`. Returns a failing pair.
pub fn genericity_battery(m: &Matroid, w: &[i64]) -> Result<Option<(Chain, Chain)>> {
    let n = m.n();
    let fan = bergman_fan(m)?;
    let taus = fan.all_chains();
    for sigma in enumerate_chains(n, 0) {
        for tau in &taus {
            let r = cone_meets(&sigma, w, tau);
            if r.meets && (!r.transverse || sigma.len() + tau.len() + 1 < n) {
                return Ok(Some((sigma, tau.clone())));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_weight_passes() {
        let m = Matroid::uniform(2, 3).unwrap();
        assert!(balanced_sum_free(&[0, 1, 3]));
        assert_eq!(genericity_battery(&m, &[0, 1, 3]).unwrap(), None);
        let w = Weight::certify_for(&m, vec![0, 1, 3]).unwrap();
        assert_eq!(w.certificate(), Some(&Certificate::BalancedSums));
    }

    #[test]
    fn degenerate_weights_fail() {
        let m = Matroid::uniform(2, 3).unwrap();
        assert!(!balanced_sum_free(&[0, 1, 1]));
        assert!(genericity_battery(&m, &[0, 1, 1]).unwrap().is_some());
        assert_eq!(
            Weight::certify_for(&m, vec![0, 1, 1]),
            Err(Error::WeightNotCertified)
        );
        // w = 0 lies on every cone.
        assert!(genericity_battery(&m, &[4, 4, 4]).unwrap().is_some());
    }

    #[test]
    fn rank_one_battery_is_easy() {
        // Σ_M is the origin, so only σ ∋ w matters and it must be maximal.
        let m = Matroid::uniform(1, 4).unwrap();
        assert_eq!(genericity_battery(&m, &[0, 1, 3, 7]).unwrap(), None);
        // Equal pairs are fine here even though the balanced test rejects.
        let w = vec![0, 1, 2, 3];
        assert!(!balanced_sum_free(&w));
        assert_eq!(genericity_battery(&m, &w).unwrap(), None);
        let cert = Weight::certify_for(&m, w).unwrap();
        assert!(matches!(cert.certificate(), Some(Certificate::Battery(_))));
        assert!(!cert.is_certified_for(&Matroid::uniform(2, 4).unwrap()));
    }

    #[test]
    fn sampling_is_deterministic() {
        let m = Matroid::uniform(2, 4).unwrap();
        let a = sample_weight(&m, 7).unwrap();
        let b = sample_weight(&m, 7).unwrap();
        assert_eq!(a, b);
        assert_ne!(a.values(), sample_weight(&m, 8).unwrap().values());
        assert!(a.values().iter().all(|&x| (0..WEIGHT_RANGE).contains(&x)));
        assert_eq!(genericity_battery(&m, a.values()).unwrap(), None);
    }
}
