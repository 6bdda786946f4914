//! Exhaustive enumeration of small matroids.
//!
//! A matroid on `[n]` is determined by its deletion and contraction at `n`,
//! so all matroids of rank `r` on `[n]` are built from pairs of matroids on
//! `[n - 1]`: `n` is a loop, a coloop, or the bases split as
//! `B(M \ n) ∪ {B + n : B ∈ B(M / n)}`. Each candidate goes through
//! [`Matroid::validate`].

use std::collections::HashMap;

use super::Matroid;
use crate::error::{Error, Result};
use crate::subset::Subset;

pub const ENUMERATION_CAP: usize = 6;

/// Every matroid of rank `r` on `[n]`, sorted by basis list.
pub fn enumerate_all(n: usize, r: usize) -> Result<Vec<Matroid>> {
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: ENUMERATION_CAP,
            what: "matroid enumeration",
        });
    }
    if r > n {
        return Ok(Vec::new());
    }
    let mut memo = HashMap::new();
    Ok(all_rec(n, r, &mut memo).clone())
}

/// Every loopless matroid of rank `r` on `[n]`, each exactly once.
pub fn enumerate_loopless(n: usize, r: usize) -> Result<Vec<Matroid>> {
    let mut all = enumerate_all(n, r)?;
    all.retain(Matroid::is_loopless);
    Ok(all)
}

fn all_rec(n: usize, r: usize, memo: &mut HashMap<(usize, usize), Vec<Matroid>>) -> &Vec<Matroid> {
    if !memo.contains_key(&(n, r)) {
        let list = build(n, r, memo);
        memo.insert((n, r), list);
    }
    &memo[&(n, r)]
}

fn build(n: usize, r: usize, memo: &mut HashMap<(usize, usize), Vec<Matroid>>) -> Vec<Matroid> {
    if n == 0 {
        return if r == 0 {
            vec![Matroid::validate(0, [Subset::EMPTY]).expect("rank-0 matroid")]
        } else {
            Vec::new()
        };
    }
    let top = Subset::singleton(n);
    let deletions = if r < n { all_rec(n - 1, r, memo).clone() } else { Vec::new() };
    let contractions = if r > 0 { all_rec(n - 1, r - 1, memo).clone() } else { Vec::new() };

    let mut out = Vec::new();
    for d in &deletions {
        out.push(Matroid::validate(n, d.bases().iter().copied()).expect("loop extension"));
    }
    for c in &contractions {
        let bases = c.bases().iter().map(|&b| b | top);
        out.push(Matroid::validate(n, bases).expect("coloop extension"));
    }
    for d in &deletions {
        for c in &contractions {
            if !c.bases().iter().all(|&b| d.is_independent(b)) {
                continue;
            }
            let bases = d
                .bases()
                .iter()
                .copied()
                .chain(c.bases().iter().map(|&b| b | top));
            if let Ok(m) = Matroid::validate(n, bases) {
                out.push(m);
            }
        }
    }
    out.sort_by(|a, b| a.bases().cmp(b.bases()));
    out
}
