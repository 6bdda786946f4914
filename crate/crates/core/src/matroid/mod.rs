//! Matroids given by their bases, stored as bit-sets over `[n]`.
//!
//! Every constructor funnels through [`Matroid::validate`], so a `Matroid`
//! value always satisfies the basis exchange axiom.

pub(crate) mod catalog;
mod enumerate;
mod io;

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::genperm::SubmodularSpec;
use crate::lp::{Lp, LpOutcome, Relation};
use crate::subset::{Subset, MAX_GROUND};
use num_traits::Zero;

pub use catalog::{catalog, catalog_with};
pub use enumerate::{enumerate_all, enumerate_loopless, ENUMERATION_CAP};
pub use io::{parse_matroid_file, write_matroid_file};

/// Rank tables are cached only up to this ground-set size.
const RANK_TABLE_MAX: usize = 16;

#[derive(Clone)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<Subset>,
    rank_table: OnceLock<Vec<u8>>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl std::hash::Hash for Matroid {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.bases.hash(state);
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid(n={}, r={}, bases={:?})", self.n, self.rank, self.bases)
    }
}

/// Optional second check run by [`Matroid::validate_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CrossCheck {
    #[default]
    None,
    /// Confirm that every edge of the base polytope is parallel to some
    /// `e_i - e_j`, using exact linear programming.
    PolytopeEdges,
}

impl Matroid {
    /// Builds a matroid from a basis family, checking the exchange axiom on
    /// every ordered pair of bases. Duplicate bases are merged.
    pub fn validate(n: usize, bases: impl IntoIterator<Item = Subset>) -> Result<Matroid> {
        Self::validate_with(n, bases, CrossCheck::None)
    }

    pub fn validate_with(
        n: usize,
        bases: impl IntoIterator<Item = Subset>,
        check: CrossCheck,
    ) -> Result<Matroid> {
        if n > MAX_GROUND {
            return Err(Error::CapExceeded {
                n,
                cap: MAX_GROUND,
                what: "bit-set ground sets",
            });
        }
        let mut bases: Vec<Subset> = bases.into_iter().collect();
        bases.sort_unstable();
        bases.dedup();
        let first = *bases.first().ok_or(Error::EmptyFamily)?;
        let ground = Subset::full(n);
        for &b in &bases {
            if !b.is_subset_of(ground) {
                return Err(Error::OutOfRange { subset: b, n });
            }
            if b.len() != first.len() {
                return Err(Error::MixedCardinality { first, other: b });
            }
        }
        check_exchange(&bases)?;
        if check == CrossCheck::PolytopeEdges && !edges_are_root_directions(n, &bases) {
            return Err(Error::Internal(
                "exchange axiom holds but a base polytope edge is not parallel to a root".into(),
            ));
        }
        Ok(Matroid {
            n,
            rank: first.len(),
            bases,
            rank_table: OnceLock::new(),
        })
    }

    pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
        if r > n {
            return Err(Error::parse(format!("uniform matroid needs r <= n, got r={r} n={n}")));
        }
        Matroid::validate(n, Subset::all(n).filter(|s| s.len() == r))
    }

    /// The Fano plane: seven points, lines are the seven 3-subsets below.
    pub fn fano() -> Matroid {
        let lines = fano_lines();
        Matroid::validate(
            7,
            Subset::all(7).filter(|s| s.len() == 3 && !lines.contains(s)),
        )
        .expect("the Fano plane is a matroid")
    }

    /// Direct sum; the ground set of `other` is shifted past that of `self`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let shift = self.n;
        if shift + other.n > MAX_GROUND {
            return Err(Error::CapExceeded {
                n: shift + other.n,
                cap: MAX_GROUND,
                what: "bit-set ground sets",
            });
        }
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &b1 in &self.bases {
            for &b2 in &other.bases {
                bases.push(b1 | Subset::from_bits(b2.bits() << shift));
            }
        }
        Matroid::validate(shift + other.n, bases)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.rank_of(s) == s.len()
    }

    /// Rank of `s`: the largest intersection of `s` with a basis.
    pub fn rank_of(&self, s: Subset) -> usize {
        match self.rank_table() {
            Some(table) => table[s.bits() as usize] as usize,
            None => self
                .bases
                .iter()
                .map(|&b| (b & s).len())
                .max()
                .unwrap_or(0),
        }
    }

    /// Rank and closure of `s`.
    pub fn rank_closure(&self, s: Subset) -> (usize, Subset) {
        (self.rank_of(s), self.closure(s))
    }

    pub fn closure(&self, s: Subset) -> Subset {
        let r = self.rank_of(s);
        (self.ground() - s)
            .iter()
            .filter(|&e| self.rank_of(s.insert(e)) == r)
            .fold(s, |acc, e| acc.insert(e))
    }

    pub fn is_flat(&self, s: Subset) -> bool {
        self.closure(s) == s
    }

    pub fn loops(&self) -> Subset {
        let covered = self.bases.iter().fold(Subset::EMPTY, |acc, &b| acc | b);
        self.ground() - covered
    }

    pub fn is_loopless(&self) -> bool {
        self.loops().is_empty()
    }

    pub(crate) fn require_loopless(&self) -> Result<()> {
        let loops = self.loops();
        if loops.is_empty() {
            Ok(())
        } else {
            Err(Error::HasLoops(loops))
        }
    }

    /// Nonempty proper flats in canonical order.
    pub fn proper_flats(&self) -> Vec<Subset> {
        let ground = self.ground();
        Subset::all(self.n)
            .filter(|&s| !s.is_empty() && s != ground && self.is_flat(s))
            .collect()
    }

    /// All independent sets in canonical order.
    pub fn independent_sets(&self) -> Vec<Subset> {
        let mut seen = HashSet::new();
        for &b in &self.bases {
            seen.extend(b.subsets());
        }
        let mut out: Vec<Subset> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// Rank function as a submodular set function on `[n]`.
    pub fn rank_function(&self) -> SubmodularSpec {
        SubmodularSpec::from_fn_unchecked(self.n, |s| self.rank_of(s) as i64)
    }

    /// Connected components, as the induced partition of the base polytope.
    /// The answer is cross-checked against rank additivity.
    pub fn connected_components(&self) -> Result<Vec<Subset>> {
        self.require_loopless()?;
        let (blocks, _) = self.rank_function().induced_partition();
        let separated = Subset::all(self.n).all(|a| {
            self.rank_of(a) == blocks.iter().map(|&t| self.rank_of(a & t)).sum::<usize>()
        });
        if !separated {
            return Err(Error::Internal(format!(
                "rank is not additive over the induced partition {blocks:?}"
            )));
        }
        Ok(blocks)
    }

    /// Restriction to `j`, relabelled onto `[|j|]` in increasing order.
    pub fn restriction(&self, j: Subset) -> Result<Matroid> {
        if !j.is_subset_of(self.ground()) {
            return Err(Error::OutOfRange { subset: j, n: self.n });
        }
        let r = self.rank_of(j);
        let elements: Vec<usize> = j.iter().collect();
        let relabel = |s: Subset| {
            Subset::from_elements(
                elements
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| s.contains(e))
                    .map(|(k, _)| k + 1),
            )
        };
        let bases = self
            .bases
            .iter()
            .map(|&b| b & j)
            .filter(|b| b.len() == r)
            .map(relabel);
        Matroid::validate(elements.len(), bases)
    }

    /// Dilworth truncation: the matroid on the pairs `{i, j}` whose
    /// independent sets satisfy the dragon Hall-Rado condition. Pairs are
    /// numbered as in [`pair_list`].
    pub fn dilworth_truncation(&self) -> Result<Matroid> {
        self.require_loopless()?;
        let pairs = pair_list(self.n);
        if pairs.len() > MAX_GROUND {
            return Err(Error::CapExceeded {
                n: self.n,
                cap: 11,
                what: "Dilworth truncation",
            });
        }
        let spans: Vec<Subset> = pairs
            .iter()
            .map(|&(i, j)| Subset::from_elements([i, j]))
            .collect();
        let mut best: Vec<Subset> = vec![Subset::EMPTY];
        let mut best_len = 0;
        let mut chosen: Vec<usize> = Vec::new();
        self.dhr_search(&spans, 0, &mut chosen, &mut best, &mut best_len);
        Matroid::validate(pairs.len(), best)
    }

    fn dhr_search(
        &self,
        spans: &[Subset],
        start: usize,
        chosen: &mut Vec<usize>,
        best: &mut Vec<Subset>,
        best_len: &mut usize,
    ) {
        for p in start..spans.len() {
            if !self.dhr_extends(spans, chosen, p) {
                continue;
            }
            chosen.push(p);
            let set = Subset::from_elements(chosen.iter().map(|&q| q + 1));
            match chosen.len().cmp(best_len) {
                std::cmp::Ordering::Greater => {
                    *best_len = chosen.len();
                    best.clear();
                    best.push(set);
                }
                std::cmp::Ordering::Equal => best.push(set),
                std::cmp::Ordering::Less => {}
            }
            self.dhr_search(spans, p + 1, chosen, best, best_len);
            chosen.pop();
        }
    }

    /// Whether adding pair `p` to a dragon Hall-Rado family keeps the
    /// condition; only subfamilies containing `p` need checking.
    fn dhr_extends(&self, spans: &[Subset], chosen: &[usize], p: usize) -> bool {
        let k = chosen.len();
        (0u64..1 << k).all(|mask| {
            let mut union = spans[p];
            for (idx, &q) in chosen.iter().enumerate() {
                if mask >> idx & 1 == 1 {
                    union = union | spans[q];
                }
            }
            // |T| = popcount + 1 pairs, so the bound is |T| + 1.
            self.rank_of(union) >= mask.count_ones() as usize + 2
        })
    }

    /// Applies a permutation of `[n]` (`perm[i - 1]` is the image of `i`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Matroid> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        Matroid::validate(
            self.n,
            self.bases
                .iter()
                .map(|b| b.iter().map(|i| perm[i - 1]).collect::<Subset>()),
        )
    }

    fn rank_table(&self) -> Option<&[u8]> {
        if self.n > RANK_TABLE_MAX {
            return None;
        }
        Some(self.rank_table.get_or_init(|| build_rank_table(self.n, &self.bases)))
    }
}

/// The seven lines of the Fano plane.
pub fn fano_lines() -> [Subset; 7] {
    [
        [1, 2, 3],
        [1, 4, 5],
        [1, 6, 7],
        [2, 4, 6],
        [2, 5, 7],
        [3, 4, 7],
        [3, 5, 6],
    ]
    .map(Subset::from_elements)
}

/// Pairs `{i, j}` with `i < j` in lexicographic order; pair `k` (0-based)
/// is element `k + 1` of the Dilworth truncation.
pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect()
}

fn check_exchange(bases: &[Subset]) -> Result<()> {
    let lookup: HashSet<Subset> = bases.iter().copied().collect();
    for &b1 in bases {
        for &b2 in bases {
            if b1 == b2 {
                continue;
            }
            for i in (b1 - b2).iter() {
                let without = b1.remove(i);
                let ok = (b2 - b1).iter().any(|j| lookup.contains(&without.insert(j)));
                if !ok {
                    return Err(Error::ExchangeFailure { b1, b2, element: i });
                }
            }
        }
    }
    Ok(())
}

fn build_rank_table(n: usize, bases: &[Subset]) -> Vec<u8> {
    let size = 1usize << n;
    let mut independent = vec![false; size];
    for b in bases {
        independent[b.bits() as usize] = true;
    }
    for s in (0..size).rev() {
        if independent[s] {
            continue;
        }
        independent[s] = (0..n).any(|e| s >> e & 1 == 0 && independent[s | 1 << e]);
    }
    let mut rank = vec![0u8; size];
    for s in 1..size {
        rank[s] = if independent[s] {
            s.count_ones() as u8
        } else {
            (0..n)
                .filter(|e| s >> e & 1 == 1)
                .map(|e| rank[s & !(1 << e)])
                .max()
                .unwrap_or(0)
        };
    }
    rank
}

/// Checks that every edge of `conv{e_B}` is parallel to some `e_i - e_j`.
///
/// Two vertices `u, v` span an edge exactly when their midpoint has no
/// convex representation putting weight on any other vertex; that weight is
/// maximised by an exact LP.
pub fn edges_are_root_directions(n: usize, bases: &[Subset]) -> bool {
    let points: Vec<Vec<i64>> = bases
        .iter()
        .map(|b| (1..=n).map(|i| b.contains(i) as i64).collect())
        .collect();
    for u in 0..points.len() {
        for v in u + 1..points.len() {
            let diff = (bases[u] ^ bases[v]).len();
            if diff == 2 {
                continue;
            }
            // Doubled midpoint keeps the LP integral.
            let mut lp = Lp::new(points.len());
            for coord in 0..n {
                let row: Vec<i64> = points.iter().map(|p| 2 * p[coord]).collect();
                lp.constraint(&row, Relation::Eq, points[u][coord] + points[v][coord]);
            }
            lp.constraint(&vec![1; points.len()], Relation::Eq, 1);
            let objective: Vec<i64> = (0..points.len())
                .map(|k| if k == u || k == v { 0 } else { -1 })
                .collect();
            let is_edge = match lp.minimize(&objective) {
                LpOutcome::Optimal { value, .. } => value.is_zero(),
                _ => false,
            };
            if is_edge {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied())
    }

    #[test]
    fn validate_examples() {
        let u24 = Matroid::validate(4, Subset::all(4).filter(|s| s.len() == 2)).unwrap();
        assert_eq!(u24.rank(), 2);
        assert_eq!(u24.bases().len(), 6);

        let err = Matroid::validate(4, [set(&[1, 2]), set(&[3, 4])]).unwrap_err();
        assert!(matches!(err, Error::ExchangeFailure { .. }), "{err:?}");

        let rank0 = Matroid::validate(1, [Subset::EMPTY]).unwrap();
        assert_eq!(rank0.rank(), 0);
        assert_eq!(rank0.loops(), set(&[1]));
    }

    #[test]
    fn validate_errors() {
        assert_eq!(
            Matroid::validate(3, std::iter::empty()).unwrap_err(),
            Error::EmptyFamily
        );
        assert!(matches!(
            Matroid::validate(3, [set(&[1]), set(&[1, 2])]).unwrap_err(),
            Error::MixedCardinality { .. }
        ));
        assert!(matches!(
            Matroid::validate(2, [set(&[3])]).unwrap_err(),
            Error::OutOfRange { .. }
        ));
    }

    #[test]
    fn exchange_witness_is_reported() {
        match Matroid::validate(4, [set(&[1, 2]), set(&[3, 4])]).unwrap_err() {
            Error::ExchangeFailure { b1, b2, element } => {
                assert!(b1.contains(element) && !b2.contains(element));
            }
            e => panic!("{e:?}"),
        }
    }

    #[test]
    fn rank_closure_examples() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(u23.rank_closure(set(&[1, 2])), (2, set(&[1, 2, 3])));
        let m = Matroid::validate(3, [set(&[1]), set(&[2])]).unwrap();
        assert_eq!(m.rank_closure(Subset::EMPTY), (0, set(&[3])));
        let fano = Matroid::fano();
        for line in fano_lines() {
            assert_eq!(fano.rank_closure(line), (2, line));
        }
    }

    #[test]
    fn proper_flat_examples() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(u23.proper_flats(), vec![set(&[1]), set(&[2]), set(&[3])]);
        assert!(Matroid::uniform(1, 5).unwrap().proper_flats().is_empty());
        let flats = Matroid::fano().proper_flats();
        assert_eq!(flats.len(), 14);
        assert_eq!(flats.iter().filter(|f| f.len() == 1).count(), 7);
        assert_eq!(flats.iter().filter(|f| f.len() == 3).count(), 7);
    }

    #[test]
    fn components_examples() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u24.connected_components().unwrap(), vec![Subset::full(4)]);
        let u12 = Matroid::uniform(1, 2).unwrap();
        let sum = u12.direct_sum(&u12).unwrap();
        assert_eq!(
            sum.connected_components().unwrap(),
            vec![set(&[1, 2]), set(&[3, 4])]
        );
        assert_eq!(
            Matroid::fano().connected_components().unwrap(),
            vec![Subset::full(7)]
        );
        let looped = Matroid::validate(2, [set(&[1])]).unwrap();
        assert!(matches!(
            looped.connected_components(),
            Err(Error::HasLoops(_))
        ));
    }

    #[test]
    fn restriction_examples() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(
            u23.restriction(set(&[1, 2])).unwrap(),
            Matroid::uniform(2, 2).unwrap()
        );
        let fano = Matroid::fano();
        assert_eq!(
            fano.restriction(set(&[2, 4, 6])).unwrap(),
            Matroid::uniform(2, 3).unwrap()
        );
        assert_eq!(fano.restriction(fano.ground()).unwrap(), fano);
    }

    #[test]
    fn dilworth_examples() {
        let d = Matroid::uniform(2, 3).unwrap().dilworth_truncation().unwrap();
        assert_eq!(d, Matroid::uniform(1, 3).unwrap());
        let d = Matroid::uniform(3, 4).unwrap().dilworth_truncation().unwrap();
        assert_eq!(d, Matroid::uniform(2, 6).unwrap());
        let d = Matroid::uniform(1, 2).unwrap().dilworth_truncation().unwrap();
        assert_eq!(d.n(), 1);
        assert_eq!(d.rank(), 0);
        assert!(matches!(
            Matroid::validate(2, [set(&[1])]).unwrap().dilworth_truncation(),
            Err(Error::HasLoops(_))
        ));
    }

    #[test]
    fn fano_dilworth_has_rank_two() {
        let d = Matroid::fano().dilworth_truncation().unwrap();
        assert_eq!(d.n(), 21);
        assert_eq!(d.rank(), 2);
    }

    #[test]
    fn polytope_edge_cross_check_accepts_matroids() {
        for m in [
            Matroid::uniform(2, 4).unwrap(),
            Matroid::uniform(1, 2).unwrap().direct_sum(&Matroid::uniform(1, 2).unwrap()).unwrap(),
        ] {
            assert!(edges_are_root_directions(m.n(), m.bases()));
        }
        assert!(!edges_are_root_directions(4, &[set(&[1, 2]), set(&[3, 4])]));
    }

    #[test]
    fn fano_has_28_bases() {
        assert_eq!(Matroid::fano().bases().len(), 28);
    }
}
