#![allow(dead_code)]

use std::sync::OnceLock;

use permuto_core::matroid::{enumerate_all, enumerate_loopless};
use permuto_core::{Matroid, SubmodularSpec, Subset};
use proptest::prelude::*;

/// Every matroid on at most four elements.
pub fn small_matroids() -> &'static [Matroid] {
    static ALL: OnceLock<Vec<Matroid>> = OnceLock::new();
    ALL.get_or_init(|| {
        (0..=4)
            .flat_map(|n| (0..=n).flat_map(move |r| enumerate_all(n, r).unwrap()))
            .collect()
    })
}

/// Every loopless matroid on one to four elements.
pub fn small_loopless() -> &'static [Matroid] {
    static ALL: OnceLock<Vec<Matroid>> = OnceLock::new();
    ALL.get_or_init(|| {
        (1..=4)
            .flat_map(|n| (1..=n).flat_map(move |r| enumerate_loopless(n, r).unwrap()))
            .collect()
    })
}

pub fn any_matroid() -> impl Strategy<Value = Matroid> {
    (0..small_matroids().len()).prop_map(|i| small_matroids()[i].clone())
}

pub fn any_loopless() -> impl Strategy<Value = Matroid> {
    (0..small_loopless().len()).prop_map(|i| small_loopless()[i].clone())
}

/// Sums of `±c·Δ_S` on `[n]`.
pub fn spec(n: usize) -> impl Strategy<Value = SubmodularSpec> {
    prop::collection::vec((1u64..1 << n, 1i64..=2, any::<bool>()), 1..=3).prop_map(move |terms| {
        let mut acc = SubmodularSpec::point(&vec![0; n]);
        for (bits, c, negate) in terms {
            let mut t = SubmodularSpec::simplex(n, Subset::from_bits(bits))
                .unwrap()
                .dilate(c)
                .unwrap();
            if negate {
                t = t.neg();
            }
            acc = acc.sum(&t).unwrap();
        }
        acc
    })
}

pub fn set(e: &[usize]) -> Subset {
    Subset::from_elements(e.iter().copied())
}

/// Lattice points of `a·P`, scanning its bounding box.
pub fn box_count(p: &SubmodularSpec, a: i64) -> u128 {
    let q = p.dilate(a).unwrap();
    let n = q.n();
    let full = Subset::full(n);
    let lo: Vec<i64> = (1..=n).map(|i| q.total() - q.z(full - Subset::singleton(i))).collect();
    let hi: Vec<i64> = (1..=n).map(|i| q.z(Subset::singleton(i))).collect();
    let mut count = 0;
    let mut x = lo.clone();
    loop {
        if Subset::all(n).all(|s| s.sum_of(&x) <= q.z(s)) && full.sum_of(&x) == q.total() {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return count;
            }
            if x[k] < hi[k] {
                x[k] += 1;
                break;
            }
            x[k] = lo[k];
            k += 1;
        }
    }
}

/// All permutations of `1..=n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for k in 0..rest.len() {
            let e = rest.remove(k);
            cur.push(e);
            go(rest, cur, out);
            cur.pop();
            rest.insert(k, e);
        }
    }
    let mut out = Vec::new();
    go(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    out
}
