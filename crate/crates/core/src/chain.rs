//! Chains of nonempty proper subsets, indexing cones of the permutohedral fan.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::subset::Subset;

/// A strictly nested chain `S_1 ⊂ ... ⊂ S_k` of nonempty proper subsets of
/// `[n]`. The empty chain is the origin cone.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Chain(Vec<Subset>);

impl Chain {
    pub fn origin() -> Self {
        Chain(Vec::new())
    }

    pub fn new(n: usize, sets: Vec<Subset>) -> Result<Self> {
        let full = Subset::full(n);
        for &s in &sets {
            if s.is_empty() || !s.is_proper_subset_of(full) {
                return Err(Error::parse(format!(
                    "chain member {s:?} is not a nonempty proper subset of [{n}]"
                )));
            }
        }
        for w in sets.windows(2) {
            if !w[0].is_proper_subset_of(w[1]) {
                return Err(Error::parse(format!("chain is not strictly nested at {:?}", w[1])));
            }
        }
        Ok(Chain(sets))
    }

    /// Caller guarantees strict nesting.
    pub(crate) fn from_sorted(sets: Vec<Subset>) -> Self {
        debug_assert!(sets.windows(2).all(|w| w[0].is_proper_subset_of(w[1])));
        Chain(sets)
    }

    /// Parses `1<1,3`; `()` or an empty string is the origin.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "()" {
            return Ok(Chain::origin());
        }
        let mut sets = Vec::new();
        for part in text.split('<') {
            let mut s = Subset::EMPTY;
            for tok in part.split(',') {
                let i: usize = tok
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(format!("bad chain element `{tok}`")))?;
                if i == 0 || i > n {
                    return Err(Error::parse(format!("chain element {i} outside [1, {n}]")));
                }
                s = s.insert(i);
            }
            sets.push(s);
        }
        Chain::new(n, sets)
    }

    pub fn sets(&self) -> &[Subset] {
        &self.0
    }

    /// Number of sets, equal to the cone dimension.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.0.binary_search_by(|t| t.len().cmp(&s.len())).is_ok_and(|k| self.0[k] == s)
    }

    /// Whether every set of `self` occurs in `other`.
    pub fn is_subchain_of(&self, other: &Chain) -> bool {
        self.0.iter().all(|&s| other.contains(s))
    }

    /// The chain with the set at `index` dropped.
    pub fn without(&self, index: usize) -> Chain {
        let mut sets = self.0.clone();
        sets.remove(index);
        Chain(sets)
    }

    /// Inserts `s`, which must be comparable with every member.
    pub fn with(&self, s: Subset) -> Option<Chain> {
        let pos = self.0.iter().position(|t| s.is_proper_subset_of(*t)).unwrap_or(self.0.len());
        let below_ok = pos == 0 || self.0[pos - 1].is_proper_subset_of(s);
        if !below_ok || self.0.get(pos) == Some(&s) {
            return None;
        }
        if pos < self.0.len() && !s.is_proper_subset_of(self.0[pos]) {
            return None;
        }
        let mut sets = self.0.clone();
        sets.insert(pos, s);
        Some(Chain(sets))
    }

    /// Sum of the ray generators `e_{S_i}`, a point in the relative interior.
    pub fn interior_point(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0; n];
        for s in &self.0 {
            for i in s.iter() {
                v[i - 1] += 1;
            }
        }
        v
    }
}

/// Shorter chains first, then lexicographic by set encodings.
impl Ord for Chain {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Chain {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "<")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chain({self})")
    }
}

/// Every chain on `[n]` with at least `min_dim` sets, in canonical order.
pub fn enumerate_chains(n: usize, min_dim: usize) -> Vec<Chain> {
    chains_in(n, min_dim, |_| true)
}

/// Chains whose members all satisfy `allowed`, with at least `min_dim` sets.
pub(crate) fn chains_in(n: usize, min_dim: usize, allowed: impl Fn(Subset) -> bool) -> Vec<Chain> {
    let full = Subset::full(n);
    let members: Vec<Subset> = Subset::all(n)
        .filter(|&s| !s.is_empty() && s != full && allowed(s))
        .collect();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    extend(&members, &mut stack, min_dim, &mut out);
    out.sort();
    out
}

fn extend(members: &[Subset], stack: &mut Vec<Subset>, min_dim: usize, out: &mut Vec<Chain>) {
    if stack.len() >= min_dim {
        out.push(Chain(stack.clone()));
    }
    let top = stack.last().copied();
    for &s in members {
        let fits = match top {
            None => true,
            Some(t) => t.is_proper_subset_of(s),
        };
        if fits {
            stack.push(s);
            extend(members, stack, min_dim, out);
            stack.pop();
        }
    }
}

/// Chains that cannot be extended inside `allowed`.
#[cfg(test)]
pub(crate) fn maximal_chains_in(n: usize, allowed: impl Fn(Subset) -> bool) -> Vec<Chain> {
    let all = chains_in(n, 0, &allowed);
    let full = Subset::full(n);
    let members: Vec<Subset> = Subset::all(n)
        .filter(|&s| !s.is_empty() && s != full && allowed(s))
        .collect();
    all.into_iter()
        .filter(|c| members.iter().all(|&s| c.contains(s) || c.with(s).is_none()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn chain_counts() {
        assert_eq!(enumerate_chains(3, 1).len(), 12);
        assert_eq!(enumerate_chains(2, 1).len(), 2);
        for n in 1..=5 {
            assert_eq!(enumerate_chains(n, n - 1).len(), factorial(n));
        }
        // Ordered set partitions of [4] (Fubini number 75) include the origin.
        assert_eq!(enumerate_chains(4, 0).len(), 75);
    }

    #[test]
    fn canonical_order_and_display() {
        let chains = enumerate_chains(3, 0);
        assert_eq!(chains[0], Chain::origin());
        assert_eq!(chains[0].to_string(), "()");
        assert_eq!(chains[1].to_string(), "1");
        let c = Chain::parse(3, "3<1,3").unwrap();
        assert_eq!(c.to_string(), "3<1,3");
        assert!(Chain::parse(3, "1,3<3").is_err());
        assert!(Chain::parse(3, "1,2,3").is_err());
    }

    #[test]
    fn insertion() {
        let c = Chain::parse(4, "2<1,2,3").unwrap();
        assert_eq!(c.with(Subset::from_elements([1, 2])).unwrap().to_string(), "2<1,2<1,2,3");
        assert!(c.with(Subset::from_elements([1])).is_none());
        assert!(c.with(Subset::from_elements([2])).is_none());
        assert!(c.without(0).is_subchain_of(&c));
    }
}
