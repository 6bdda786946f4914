//! The pairs formula through the Dilworth truncation, and the dragon
//! Hall-Rado degree.

use crate::error::{Error, Result};
use crate::genperm::SubmodularSpec;
use crate::matroid::{pair_list, Matroid};
use crate::subset::Subset;

/// `Σ_I Π_{{i,j} ∈ I} a_ij` over the independent sets `I` of the Dilworth
/// truncation. `a` is indexed like [`pair_list`].
pub fn pairs_snapper_oracle(m: &Matroid, a: &[u64]) -> Result<i128> {
    let dilworth = m.dilworth_truncation()?;
    pairs_sum(&dilworth, a)
}

/// The same sum for an already computed Dilworth truncation.
pub fn pairs_sum(dilworth: &Matroid, a: &[u64]) -> Result<i128> {
    if a.len() != dilworth.n() {
        return Err(Error::DimensionMismatch {
            expected: dilworth.n(),
            found: a.len(),
        });
    }
    let mut total: i128 = 0;
    for set in dilworth.independent_sets() {
        let mut term: i128 = 1;
        for p in set.iter() {
            term = term
                .checked_mul(a[p - 1] as i128)
                .ok_or(Error::Overflow("pairs oracle"))?;
        }
        total = total.checked_add(term).ok_or(Error::Overflow("pairs oracle"))?;
    }
    Ok(total)
}

/// `Σ a_ij · seg(i, j)` on `[n]`, the polytope matching the pairs oracle.
pub fn pair_polytope(n: usize, a: &[u64]) -> Result<SubmodularSpec> {
    let pairs = pair_list(n);
    if a.len() != pairs.len() {
        return Err(Error::DimensionMismatch {
            expected: pairs.len(),
            found: a.len(),
        });
    }
    let mut acc = SubmodularSpec::point(&vec![0; n]);
    for (&(i, j), &c) in pairs.iter().zip(a) {
        if c > 0 {
            let c = i64::try_from(c).map_err(|_| Error::Overflow("pair weight"))?;
            acc = acc.sum(&SubmodularSpec::seg(n, i, j)?.dilate(c)?)?;
        }
    }
    Ok(acc)
}

/// 1 when `rk(∪_{i∈I} J_i) >= |I| + 1` for every nonempty subfamily `I`,
/// else 0. The family must have `r - 1` members.
pub fn dhr_degree(m: &Matroid, family: &[Subset]) -> Result<u8> {
    m.require_loopless()?;
    let expected = m.rank().saturating_sub(1);
    if family.len() != expected || m.rank() == 0 {
        return Err(Error::WrongArity {
            expected,
            found: family.len(),
        });
    }
    for s in family {
        if !s.is_subset_of(m.ground()) {
            return Err(Error::OutOfRange { subset: *s, n: m.n() });
        }
    }
    let ok = (1u64..1 << family.len()).all(|mask| {
        let union = family
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .fold(Subset::EMPTY, |acc, (_, &s)| acc | s);
        m.rank_of(union) > mask.count_ones() as usize
    });
    Ok(u8::from(ok))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied())
    }

    #[test]
    fn oracle_examples() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(pairs_snapper_oracle(&u23, &[1, 1, 1]).unwrap(), 4);
        assert_eq!(pairs_snapper_oracle(&u23, &[2, 3, 5]).unwrap(), 11);
        let u34 = Matroid::uniform(3, 4).unwrap();
        assert_eq!(pairs_snapper_oracle(&u34, &[1; 6]).unwrap(), 22);
    }

    #[test]
    fn dhr_examples() {
        let u33 = Matroid::uniform(3, 3).unwrap();
        assert_eq!(dhr_degree(&u33, &[set(&[1, 2]), set(&[2, 3])]).unwrap(), 1);
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(dhr_degree(&u23, &[set(&[1])]).unwrap(), 0);
        let lines = crate::matroid::fano_lines();
        assert_eq!(dhr_degree(&Matroid::fano(), &[lines[0], lines[1]]).unwrap(), 1);
        assert_eq!(dhr_degree(&Matroid::fano(), &[lines[0], lines[0]]).unwrap(), 0);
        assert!(matches!(
            dhr_degree(&u23, &[set(&[1]), set(&[2])]),
            Err(Error::WrongArity { expected: 1, found: 2 })
        ));
    }
}
