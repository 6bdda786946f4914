//! Seeded test corpora for the self-test criteria.

use anyhow::Result;
use permuto_core::euler::pair_polytope;
use permuto_core::matroid::{enumerate_all, enumerate_loopless, pair_list};
use permuto_core::{Matroid, SubmodularSpec, Subset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every loopless matroid on `[n]` for `1 <= n <= max_n`, all ranks.
pub fn loopless_upto(max_n: usize) -> Result<Vec<Matroid>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for r in 1..=n {
            out.extend(enumerate_loopless(n, r)?);
        }
    }
    Ok(out)
}

/// Every matroid on `[n]` for `0 <= n <= max_n`, loops allowed.
pub fn all_upto(max_n: usize) -> Result<Vec<Matroid>> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for r in 0..=n {
            out.extend(enumerate_all(n, r)?);
        }
    }
    Ok(out)
}

fn rng_for(seed: u64, n: usize, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream << 8 | n as u64);
    rng
}

/// A random generalized permutohedron: a sum of three terms `c·Δ_S` or
/// `c·(-Δ_S)` with `c ∈ {1, 2}` and `S` a random nonempty subset.
pub fn random_spec(n: usize, seed: u64, index: u64) -> Result<SubmodularSpec> {
    let mut rng = rng_for(seed, n, 1 + index);
    let mut acc = SubmodularSpec::point(&vec![0; n]);
    for _ in 0..3 {
        let bits = rng.gen_range(1..1u64 << n);
        let simplex = SubmodularSpec::simplex(n, Subset::from_bits(bits))?;
        let c = rng.gen_range(1..=2);
        let term = if rng.gen_bool(0.5) {
            simplex.dilate(c)?.neg()
        } else {
            simplex.dilate(c)?
        };
        acc = acc.sum(&term)?;
    }
    Ok(acc)
}

/// Polytopes paired with `m` in the Macaulay, degree and sign corpora.
pub fn polytopes_for(m: &Matroid, seed: u64) -> Result<Vec<(String, SubmodularSpec)>> {
    let n = m.n();
    let mut out = vec![(
        "simplex".to_string(),
        SubmodularSpec::simplex(n, Subset::full(n))?,
    )];
    if n >= 2 {
        out.push((
            format!("P(U(2,{n}))"),
            SubmodularSpec::rank(&Matroid::uniform(2, n)?),
        ));
    }
    out.push(("P(M)".to_string(), SubmodularSpec::rank(m)));
    out.push(("-P(M)".to_string(), SubmodularSpec::rank(m).neg()));
    out.push((
        "segments".to_string(),
        pair_polytope(n, &vec![1; pair_list(n).len()])?,
    ));
    for index in 0..2 {
        out.push((format!("random{index}"), random_spec(n, seed, index)?));
    }
    Ok(out)
}

/// `count` pair-weight maps on `[n]` with entries in `0..=3`.
pub fn pair_maps(n: usize, count: usize, seed: u64) -> Vec<Vec<u64>> {
    let mut rng = rng_for(seed, n, 0);
    let pairs = pair_list(n).len();
    (0..count)
        .map(|_| (0..pairs).map(|_| rng.gen_range(0..=3)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_sizes() {
        // Loopless labeled matroids: 1 on [1], 2 on [2], 6 on [3].
        assert_eq!(loopless_upto(1).unwrap().len(), 1);
        assert_eq!(loopless_upto(2).unwrap().len(), 3);
        assert_eq!(loopless_upto(3).unwrap().len(), 9);
    }

    #[test]
    fn random_specs_are_seeded() {
        assert_eq!(random_spec(4, 9, 0).unwrap(), random_spec(4, 9, 0).unwrap());
        assert_ne!(random_spec(4, 9, 0).unwrap(), random_spec(4, 9, 1).unwrap());
        let maps = pair_maps(4, 25, 3);
        assert_eq!(maps.len(), 25);
        assert!(maps.iter().flatten().all(|&a| a <= 3));
        assert_eq!(maps, pair_maps(4, 25, 3));
    }
}
