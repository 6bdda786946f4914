//! Generalized permutohedra presented by integer submodular functions.
//!
//! `P(z) = {x : x(S) <= z(S) for all S, x([n]) = z([n])}`. The function is
//! stored as a full table indexed by subset encoding, with `z(∅) = 0`.

mod expr;
mod face;
mod io;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::Subset;

pub use expr::{build_polytope, Env};
pub use face::FaceSpec;
pub use io::{parse_genperm_file, write_genperm_file};

/// Largest ground set for a full `2^n` table.
pub const GENPERM_CAP: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubmodularSpec {
    n: usize,
    z: Vec<i64>,
}

impl std::fmt::Debug for SubmodularSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SubmodularSpec(n={}, z={:?})", self.n, self.z)
    }
}

impl SubmodularSpec {
    /// Validates `z`, given as a table of length `2^n` with `z[0] = 0`.
    pub fn new(n: usize, z: Vec<i64>) -> Result<Self> {
        if n > GENPERM_CAP {
            return Err(Error::CapExceeded {
                n,
                cap: GENPERM_CAP,
                what: "submodular function tables",
            });
        }
        if z.len() != 1 << n {
            return Err(Error::DimensionMismatch {
                expected: 1 << n,
                found: z.len(),
            });
        }
        if z[0] != 0 {
            return Err(Error::parse("z(∅) must be 0"));
        }
        let spec = SubmodularSpec { n, z };
        if let Some((s, t)) = spec.submodularity_witness() {
            return Err(Error::NotSubmodular { s, t });
        }
        Ok(spec)
    }

    pub fn from_fn(n: usize, f: impl Fn(Subset) -> i64) -> Result<Self> {
        let z = Subset::all(n).map(|s| if s.is_empty() { 0 } else { f(s) }).collect();
        Self::new(n, z)
    }

    /// For functions that are submodular by construction.
    pub(crate) fn from_fn_unchecked(n: usize, f: impl Fn(Subset) -> i64) -> Self {
        let z = Subset::all(n).map(|s| if s.is_empty() { 0 } else { f(s) }).collect();
        let spec = SubmodularSpec { n, z };
        debug_assert!(spec.submodularity_witness().is_none());
        spec
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn z(&self, s: Subset) -> i64 {
        self.z[s.bits() as usize]
    }

    pub fn table(&self) -> &[i64] {
        &self.z
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn total(&self) -> i64 {
        self.z(self.ground())
    }

    /// A pair `(S, T)` violating submodularity, if any.
    ///
    /// Checks the local form `z(A+i) + z(A+j) >= z(A+i+j) + z(A)`, which is
    /// equivalent to the full inequality and costs `O(2^n n^2)`.
    pub fn submodularity_witness(&self) -> Option<(Subset, Subset)> {
        for a in Subset::all(self.n) {
            let outside: Vec<usize> = (self.ground() - a).iter().collect();
            for (k, &i) in outside.iter().enumerate() {
                for &j in &outside[k + 1..] {
                    let ai = a.insert(i);
                    let aj = a.insert(j);
                    if self.z(ai) + self.z(aj) < self.z(ai | aj) + self.z(a) {
                        return Some((ai, aj));
                    }
                }
            }
        }
        None
    }

    /// Rank function of a matroid (the base polytope).
    pub fn rank(m: &Matroid) -> Self {
        m.rank_function()
    }

    /// The simplex `Δ_S = conv{e_i : i ∈ S}` in `R^n`.
    pub fn simplex(n: usize, s: Subset) -> Result<Self> {
        if s.is_empty() || !s.is_subset_of(Subset::full(n)) {
            return Err(Error::OutOfRange { subset: s, n });
        }
        Ok(Self::from_fn_unchecked(n, |t| i64::from(!(t & s).is_empty())))
    }

    /// The segment `conv{e_i, e_j}`.
    pub fn seg(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == j {
            return Err(Error::parse(format!("segment needs two distinct indices, got {i},{j}")));
        }
        Self::simplex(n, Subset::from_elements([i, j]))
    }

    /// The single lattice point `v`.
    pub fn point(v: &[i64]) -> Self {
        Self::from_fn_unchecked(v.len(), |s| s.sum_of(v))
    }

    /// Minkowski sum.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let z = self
            .z
            .iter()
            .zip(&other.z)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("polytope sum")))
            .collect::<Result<_>>()?;
        Ok(SubmodularSpec { n: self.n, z })
    }

    pub fn dilate(&self, c: i64) -> Result<Self> {
        if c < 0 {
            return Err(Error::parse(format!("dilation factor must be nonnegative, got {c}")));
        }
        let z = self
            .z
            .iter()
            .map(|a| a.checked_mul(c).ok_or(Error::Overflow("polytope dilation")))
            .collect::<Result<_>>()?;
        Ok(SubmodularSpec { n: self.n, z })
    }

    /// The negated polytope `-P`.
    pub fn neg(&self) -> Self {
        let full = self.ground();
        let total = self.total();
        Self::from_fn_unchecked(self.n, |s| {
            if s == full {
                -total
            } else {
                self.z(full - s) - total
            }
        })
    }

    /// Minimum of `x(S)` over `P`.
    pub fn min_of(&self, s: Subset) -> i64 {
        self.total() - self.z(self.ground() - s)
    }

    /// The greedy vertex for the ordering `perm` (1-based elements).
    pub fn greedy_vertex(&self, perm: &[usize]) -> Vec<i64> {
        let mut x = vec![0; self.n];
        let mut prefix = Subset::EMPTY;
        for &e in perm {
            let next = prefix.insert(e);
            x[e - 1] = self.z(next) - self.z(prefix);
            prefix = next;
        }
        x
    }

    /// Whether `x` satisfies every defining inequality.
    pub fn contains_point(&self, x: &[i64]) -> bool {
        x.len() == self.n
            && Subset::full(self.n).sum_of(x) == self.total()
            && Subset::all(self.n).all(|s| s.sum_of(x) <= self.z(s))
    }

    /// Sets `T` with `z(T) + z(T^c) = z([n])`: the polytope splits as a
    /// product along every such `T`.
    pub fn is_separator(&self, t: Subset) -> bool {
        self.z(t) + self.z(self.ground() - t) == self.total()
    }

    /// Blocks of the induced partition via separators: the block of `i` is
    /// the intersection of all separators containing `i`.
    pub fn separator_blocks(&self) -> Vec<Subset> {
        let full = self.ground();
        let separators: Vec<Subset> = Subset::all(self.n).filter(|&t| self.is_separator(t)).collect();
        let mut blocks: Vec<Subset> = Vec::new();
        for i in 1..=self.n {
            if blocks.iter().any(|b| b.contains(i)) {
                continue;
            }
            let block = separators
                .iter()
                .filter(|t| t.contains(i))
                .fold(full, |acc, &t| acc & t);
            blocks.push(block);
        }
        blocks.sort();
        blocks
    }

    /// Affine dimension, `n` minus the number of induced blocks.
    pub fn dim(&self) -> usize {
        self.n - self.separator_blocks().len()
    }

    /// Induced partition from edge directions, together with the dimension.
    ///
    /// Every codimension-one cone of the permutohedral fan (a chain with
    /// `n - 2` sets) selects a face; the faces of dimension one are edges
    /// and each is parallel to some `e_i - e_j`. Blocks are the connected
    /// components of the graph of these pairs.
    pub fn induced_partition(&self) -> (Vec<Subset>, usize) {
        let n = self.n;
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(parent: &mut [usize], i: usize) -> usize {
            let mut root = i;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = i;
            while parent[cur] != root {
                let next = parent[cur];
                parent[cur] = root;
                cur = next;
            }
            root
        }
        if n >= 2 {
            for chain in crate::chain::enumerate_chains(n, n - 2) {
                if chain.len() != n - 2 {
                    continue;
                }
                let face = FaceSpec::new(self, &chain);
                if let Some((i, j)) = face.edge_direction() {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
        let mut blocks: Vec<Subset> = Vec::new();
        for i in 1..=n {
            let root = find(&mut parent, i);
            let block: Subset = (1..=n).filter(|&j| find(&mut parent, j) == root).collect();
            if !blocks.contains(&block) {
                blocks.push(block);
            }
        }
        blocks.sort();
        let dim = n - blocks.len();
        (blocks, dim)
    }

    /// Face selected by the cone of `chain` (minimizing convention).
    pub fn face(&self, chain: &crate::chain::Chain) -> FaceSpec {
        FaceSpec::new(self, chain)
    }

    /// Number of lattice points of `a·P`.
    pub fn lattice_count(&self, a: u64) -> Result<u128> {
        FaceSpec::new(self, &crate::chain::Chain::origin()).lattice_count(a)
    }
}
