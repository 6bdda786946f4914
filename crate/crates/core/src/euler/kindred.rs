//! Multilinear Snapper polynomials of kindred subschemes and their
//! progenitor matroids.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::Subset;

/// A multilinear polynomial in `a_1, ..., a_ℓ`: monomial `Π_{i∈I} a_i` is
/// keyed by `I`. Zero coefficients are not stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiSnapper {
    ell: usize,
    coeffs: BTreeMap<Subset, i64>,
}

impl MultiSnapper {
    pub fn new(ell: usize, terms: impl IntoIterator<Item = (Subset, i64)>) -> Result<Self> {
        let full = Subset::full(ell);
        let mut coeffs = BTreeMap::new();
        for (s, c) in terms {
            if !s.is_subset_of(full) {
                return Err(Error::OutOfRange { subset: s, n: ell });
            }
            *coeffs.entry(s).or_insert(0) += c;
        }
        coeffs.retain(|_, c| *c != 0);
        Ok(MultiSnapper { ell, coeffs })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn coefficient(&self, s: Subset) -> i64 {
        self.coeffs.get(&s).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Subset, i64)> + '_ {
        self.coeffs.iter().map(|(&s, &c)| (s, c))
    }

    pub fn eval(&self, a: &[i64]) -> Result<i128> {
        if a.len() != self.ell {
            return Err(Error::DimensionMismatch {
                expected: self.ell,
                found: a.len(),
            });
        }
        let mut total: i128 = 0;
        for (s, c) in self.terms() {
            let mut term = c as i128;
            for i in s.iter() {
                term = term
                    .checked_mul(a[i - 1] as i128)
                    .ok_or(Error::Overflow("multilinear evaluation"))?;
            }
            total = total.checked_add(term).ok_or(Error::Overflow("multilinear evaluation"))?;
        }
        Ok(total)
    }

    /// Parses text like `1 + a1 + 2*a1*a3 - a2`. The number of variables is
    /// `ell` when given, else the largest index used.
    pub fn parse(text: &str, ell: Option<usize>) -> Result<Self> {
        let mut terms = Vec::new();
        let mut rest = text.trim();
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        }
        loop {
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let body = rest[..end].trim();
            if body.is_empty() {
                return Err(Error::parse(format!("empty term in `{text}`")));
            }
            let mut coefficient = sign;
            let mut monomial = Subset::EMPTY;
            for factor in body.split('*').map(str::trim) {
                if let Some(index) = factor.strip_prefix('a') {
                    let i: usize = index
                        .parse()
                        .map_err(|_| Error::parse(format!("bad variable `{factor}`")))?;
                    if i == 0 || i > crate::subset::MAX_GROUND {
                        return Err(Error::parse(format!("variable index {i} out of range")));
                    }
                    if monomial.contains(i) {
                        return Err(Error::parse(format!("`{body}` is not multilinear")));
                    }
                    monomial = monomial.insert(i);
                } else {
                    let c: i64 = factor
                        .parse()
                        .map_err(|_| Error::parse(format!("bad factor `{factor}`")))?;
                    coefficient *= c;
                }
            }
            terms.push((monomial, coefficient));
            if end == rest.len() {
                break;
            }
            sign = if rest[end..].starts_with('-') { -1 } else { 1 };
            rest = &rest[end + 1..];
        }
        let used = terms.iter().filter_map(|(s, _)| s.max_element()).max().unwrap_or(0);
        let ell = ell.unwrap_or(used);
        MultiSnapper::new(ell, terms)
    }
}

impl fmt::Display for MultiSnapper {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (s, c)) in self.terms().enumerate() {
            let monomial: Vec<String> = s.iter().map(|i| format!("a{i}")).collect();
            let body = match (monomial.is_empty(), c.abs()) {
                (true, m) => m.to_string(),
                (false, 1) => monomial.join("*"),
                (false, m) => format!("{m}*{}", monomial.join("*")),
            };
            match (k, c < 0) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

/// Coefficient 1 on every independent set of `m`.
pub fn kindred_snapper(m: &Matroid) -> MultiSnapper {
    MultiSnapper {
        ell: m.n(),
        coeffs: m.independent_sets().into_iter().map(|s| (s, 1)).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multidegree {
    pub degree: usize,
    /// Coefficients of the degree-`d` monomials.
    pub top: BTreeMap<Subset, i64>,
    pub progenitor: Matroid,
}

/// Reads off the top-degree part and reconstructs the progenitor matroid.
pub fn multidegree_and_progenitor(ms: &MultiSnapper) -> Result<Multidegree> {
    let degree = ms
        .coeffs
        .keys()
        .map(|s| s.len())
        .max()
        .ok_or(Error::EmptySupport)?;
    let top: BTreeMap<Subset, i64> = ms
        .terms()
        .filter(|(s, _)| s.len() == degree)
        .collect();
    if let Some((monomial, coefficient)) = ms.terms().find(|&(_, c)| c != 1) {
        return Err(Error::NonUnitCoefficient {
            monomial,
            coefficient,
        });
    }
    for s in ms.coeffs.keys() {
        for i in s.iter() {
            let missing = s.remove(i);
            if !ms.coeffs.contains_key(&missing) {
                return Err(Error::NotDownwardClosed {
                    present: *s,
                    missing,
                });
            }
        }
    }
    let maximal: Vec<Subset> = ms
        .coeffs
        .keys()
        .copied()
        .filter(|&s| {
            (Subset::full(ms.ell) - s)
                .iter()
                .all(|i| !ms.coeffs.contains_key(&s.insert(i)))
        })
        .collect();
    if let Some(&other) = maximal.iter().find(|s| s.len() != degree) {
        let first = *top.keys().next().expect("top degree is attained");
        return Err(Error::NotPure { first, other });
    }
    let progenitor = Matroid::validate(ms.ell, maximal)?;
    Ok(Multidegree {
        degree,
        top,
        progenitor,
    })
}

/// Sets `a_i = 0` for `i ∉ J` and renumbers the surviving variables onto
/// `[|J|]` in increasing order, matching [`Matroid::restriction`].
pub fn project_multisnapper(ms: &MultiSnapper, j: Subset) -> MultiSnapper {
    let keep: Vec<usize> = (j & Subset::full(ms.ell)).iter().collect();
    let relabel = |s: Subset| -> Subset {
        keep.iter()
            .enumerate()
            .filter(|(_, &e)| s.contains(e))
            .map(|(k, _)| k + 1)
            .collect()
    };
    MultiSnapper {
        ell: keep.len(),
        coeffs: ms
            .terms()
            .filter(|(s, _)| s.is_subset_of(j))
            .map(|(s, c)| (relabel(s), c))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied())
    }

    #[test]
    fn kindred_examples() {
        let ms = kindred_snapper(&Matroid::uniform(1, 2).unwrap());
        assert_eq!(ms.to_string(), "1 + a1 + a2");
        let ms = kindred_snapper(&Matroid::uniform(2, 3).unwrap());
        assert_eq!(ms.to_string(), "1 + a1 + a2 + a1*a2 + a3 + a1*a3 + a2*a3");
        let rank0 = Matroid::validate(2, [Subset::EMPTY]).unwrap();
        assert_eq!(kindred_snapper(&rank0).to_string(), "1");
    }

    #[test]
    fn progenitor_examples() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        let md = multidegree_and_progenitor(&kindred_snapper(&u23)).unwrap();
        assert_eq!(md.degree, 2);
        assert_eq!(md.top.len(), 3);
        assert!(md.top.values().all(|&c| c == 1));
        assert_eq!(md.progenitor, u23);

        let not_pure = MultiSnapper::new(
            3,
            [(Subset::EMPTY, 1), (set(&[1]), 1), (set(&[2]), 1), (set(&[3]), 1), (set(&[1, 2]), 1)],
        )
        .unwrap();
        assert!(matches!(
            multidegree_and_progenitor(&not_pure),
            Err(Error::NotPure { .. })
        ));

        let two = MultiSnapper::new(1, [(Subset::EMPTY, 1), (set(&[1]), 2)]).unwrap();
        assert_eq!(
            multidegree_and_progenitor(&two),
            Err(Error::NonUnitCoefficient { monomial: set(&[1]), coefficient: 2 })
        );

        let gap = MultiSnapper::new(2, [(Subset::EMPTY, 1), (set(&[1, 2]), 1)]).unwrap();
        assert!(matches!(
            multidegree_and_progenitor(&gap),
            Err(Error::NotDownwardClosed { .. })
        ));
        let empty = MultiSnapper::new(2, []).unwrap();
        assert_eq!(multidegree_and_progenitor(&empty), Err(Error::EmptySupport));

        // Downward closed and pure, but {1,2}, {3,4} fail exchange.
        let mut terms = vec![(Subset::EMPTY, 1)];
        terms.extend((1..=4).map(|i| (Subset::singleton(i), 1)));
        terms.extend([(set(&[1, 2]), 1), (set(&[3, 4]), 1)]);
        let ms = MultiSnapper::new(4, terms).unwrap();
        assert!(matches!(
            multidegree_and_progenitor(&ms),
            Err(Error::ExchangeFailure { .. })
        ));
    }

    #[test]
    fn parse_round_trip() {
        let ms = kindred_snapper(&Matroid::uniform(2, 3).unwrap());
        assert_eq!(MultiSnapper::parse(&ms.to_string(), None).unwrap(), ms);
        let p = MultiSnapper::parse("-2*a1*a3 + 1 - a2 + a2", Some(4)).unwrap();
        assert_eq!(p.ell(), 4);
        assert_eq!(p.to_string(), "1 - 2*a1*a3");
        assert!(MultiSnapper::parse("1 + a1*a1", None).is_err());
        assert!(MultiSnapper::parse("1 + + a1", None).is_err());
        assert!(MultiSnapper::parse("1 + a0", None).is_err());
    }

    #[test]
    fn projection_examples() {
        let ms = kindred_snapper(&Matroid::uniform(2, 3).unwrap());
        let projected = project_multisnapper(&ms, set(&[1, 2]));
        assert_eq!(projected, kindred_snapper(&Matroid::uniform(2, 2).unwrap()));
        assert_eq!(project_multisnapper(&ms, Subset::full(3)), ms);
        let rank0 = kindred_snapper(&Matroid::validate(3, [Subset::EMPTY]).unwrap());
        assert_eq!(project_multisnapper(&rank0, set(&[2])).to_string(), "1");
    }
}
