//! Faces of `P(z)` selected by chains, and exact lattice-point counts.

use super::SubmodularSpec;
use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::subset::Subset;

/// The face of `base` on which every functional `x(S_i)` of `tight` attains
/// its minimum, i.e. `x(S_i) = z([n]) - z([n] \ S_i)`.
///
/// The face is itself a generalized permutohedron; `restricted` is its
/// submodular function. Writing `U_1 ⊂ ... ⊂ U_k` for the complements of the
/// chain and `B_j = U_j \ U_{j-1}`, it is
/// `z_F(T) = Σ_j z(U_{j-1} ∪ (T ∩ B_j)) - z(U_{j-1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSpec {
    base: SubmodularSpec,
    tight: Chain,
    restricted: SubmodularSpec,
}

impl FaceSpec {
    pub fn new(base: &SubmodularSpec, tight: &Chain) -> Self {
        let n = base.n();
        let full = base.ground();
        let mut levels: Vec<Subset> = vec![Subset::EMPTY];
        levels.extend(tight.sets().iter().rev().map(|&s| full - s));
        levels.push(full);
        let restricted = SubmodularSpec::from_fn_unchecked(n, |t| {
            levels
                .windows(2)
                .map(|w| {
                    let block = w[1] - w[0];
                    base.z(w[0] | (t & block)) - base.z(w[0])
                })
                .sum()
        });
        FaceSpec {
            base: base.clone(),
            tight: tight.clone(),
            restricted,
        }
    }

    pub fn base(&self) -> &SubmodularSpec {
        &self.base
    }

    pub fn tight(&self) -> &Chain {
        &self.tight
    }

    /// Submodular function presenting the face.
    pub fn restricted(&self) -> &SubmodularSpec {
        &self.restricted
    }

    pub fn dim(&self) -> usize {
        self.restricted.dim()
    }

    /// Coordinates that are not constant on the face.
    pub fn varying(&self) -> Vec<usize> {
        let g = &self.restricted;
        let full = g.ground();
        (1..=g.n())
            .filter(|&k| g.z(Subset::singleton(k)) > g.total() - g.z(full.remove(k)))
            .collect()
    }

    /// The face as a single point, if it is one.
    pub fn vertex(&self) -> Option<Vec<i64>> {
        if !self.varying().is_empty() {
            return None;
        }
        let g = &self.restricted;
        Some((1..=g.n()).map(|k| g.z(Subset::singleton(k))).collect())
    }

    /// For a face of dimension at most one: the pair `(i, j)` with the face
    /// parallel to `e_i - e_j`, or `None` for a vertex.
    pub fn edge_direction(&self) -> Option<(usize, usize)> {
        match self.varying().as_slice() {
            [] => None,
            &[i, j] => Some((i, j)),
            other => panic!(
                "face of {} has varying coordinates {other:?}; expected at most an edge",
                self.tight
            ),
        }
    }

    /// Lattice points of the `a`-th dilate of the face.
    ///
    /// Coordinates are fixed one at a time. Fixing `x_k = v` leaves the
    /// polytope presented by `g'(T) = min(g(T), g(T + k) - v)`, which is
    /// again submodular, so the range of the next coordinate is exactly
    /// `[g(R) - g(R - k), g({k})]` and the search has no dead ends.
    pub fn lattice_count(&self, a: u64) -> Result<u128> {
        let a = i64::try_from(a).map_err(|_| Error::Overflow("dilation factor"))?;
        let g = self.restricted.dilate(a)?;
        Ok(count(g.table(), g.n()))
    }
}

fn count(g: &[i64], m: usize) -> u128 {
    if m <= 1 {
        return 1;
    }
    let full = (1usize << m) - 1;
    let lo = g[full] - g[full & !1];
    let hi = g[1];
    if lo > hi {
        return 0;
    }
    if m == 2 {
        return (hi - lo + 1) as u128;
    }
    let half = 1usize << (m - 1);
    let mut next = vec![0i64; half];
    let mut total = 0u128;
    for v in lo..=hi {
        for (t, slot) in next.iter_mut().enumerate() {
            *slot = g[t << 1].min(g[(t << 1) | 1] - v);
        }
        total += count(&next, m - 1);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::Matroid;

    fn three_segments() -> SubmodularSpec {
        let s = |i, j| SubmodularSpec::seg(3, i, j).unwrap();
        s(1, 2).sum(&s(1, 3)).unwrap().sum(&s(2, 3)).unwrap()
    }

    #[test]
    fn segment_face_of_segment_sum() {
        let p = three_segments();
        let f = p.face(&Chain::parse(3, "3").unwrap());
        assert_eq!(f.dim(), 1);
        assert_eq!(f.varying(), vec![1, 2]);
        // conv{(2,1,0), (1,2,0)}
        assert!(f.restricted().contains_point(&[2, 1, 0]));
        assert!(f.restricted().contains_point(&[1, 2, 0]));
        assert!(!f.restricted().contains_point(&[3, 0, 0]));
        assert_eq!(f.lattice_count(1).unwrap(), 2);
        assert_eq!(f.lattice_count(4).unwrap(), 5);
    }

    #[test]
    fn maximal_chain_faces_are_greedy_vertices() {
        let p = SubmodularSpec::rank(&Matroid::uniform(2, 4).unwrap());
        let f = p.face(&Chain::parse(4, "4<2,4<2,3,4").unwrap());
        // Minimizing x(4), x(2,4), x(2,3,4) means maximizing along 1, 3, 2, 4.
        assert_eq!(f.vertex(), Some(p.greedy_vertex(&[1, 3, 2, 4])));
    }

    #[test]
    fn tight_values_are_minima() {
        let p = three_segments();
        for chain in crate::chain::enumerate_chains(3, 1) {
            let g = p.face(&chain);
            for &s in chain.sets() {
                let r = g.restricted();
                assert_eq!(r.total() - r.z(r.ground() - s), p.min_of(s));
                assert_eq!(r.z(s), p.min_of(s), "{chain}");
            }
        }
    }
}
