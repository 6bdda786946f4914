//! Intersections of a permutohedral cone with a shifted cone.

use crate::chain::Chain;
use crate::lp::{Lp, Relation};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConeMeet {
    pub meets: bool,
    pub transverse: bool,
}

/// Level of each element: how many sets of the chain contain it.
fn levels(n: usize, chain: &Chain) -> Vec<usize> {
    (1..=n)
        .map(|e| chain.sets().iter().filter(|s| s.contains(e)).count())
        .collect()
}

/// Whether `σ ∩ (w + τ)` is nonempty in `R^n / R·e_[n]`, and whether the
/// two cones together span the quotient.
///
/// A point of `σ` is `α_{L(e)}` with `α` nondecreasing in the level `L`,
/// similarly for `τ`, so meeting is a system of difference constraints
/// `α_{L(e)} - β_{M(e)} = w_e` plus monotonicity. It is feasible exactly
/// when the constraint graph has no negative cycle.
pub fn cone_meets(sigma: &Chain, w: &[i64], tau: &Chain) -> ConeMeet {
    let n = w.len();
    let (ls, lt) = (levels(n, sigma), levels(n, tau));
    let (k, m) = (sigma.len() + 1, tau.len() + 1);
    let transverse = k + m - components(k, m, &ls, &lt) == n;

    // Nodes: α_0..α_{k-1}, then β_0..β_{m-1}. Edge (u, v, c) encodes
    // x_v - x_u <= c.
    let mut edges: Vec<(usize, usize, i64)> = Vec::with_capacity(2 * n + k + m);
    for l in 0..k - 1 {
        edges.push((l + 1, l, 0));
    }
    for j in 0..m - 1 {
        edges.push((k + j + 1, k + j, 0));
    }
    for e in 0..n {
        let (a, b) = (ls[e], k + lt[e]);
        edges.push((b, a, w[e]));
        edges.push((a, b, -w[e]));
    }
    let meets = !has_negative_cycle(k + m, &edges);
    ConeMeet { meets, transverse }
}

fn has_negative_cycle(nodes: usize, edges: &[(usize, usize, i64)]) -> bool {
    let mut dist = vec![0i64; nodes];
    for _ in 0..nodes {
        let mut changed = false;
        for &(u, v, c) in edges {
            if dist[u] + c < dist[v] {
                dist[v] = dist[u] + c;
                changed = true;
            }
        }
        if !changed {
            return false;
        }
    }
    true
}

/// Connected components of the bipartite graph on σ-levels and τ-levels
/// with one edge per element.
fn components(k: usize, m: usize, ls: &[usize], lt: &[usize]) -> usize {
    let mut parent: Vec<usize> = (0..k + m).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    let mut count = k + m;
    for (&a, &b) in ls.iter().zip(lt) {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, k + b));
        if ra != rb {
            parent[ra] = rb;
            count -= 1;
        }
    }
    count
}

/// The same feasibility question as an exact LP over
/// `λ, μ >= 0` and a free shift `t = t⁺ - t⁻`.
pub fn cone_meets_lp(sigma: &Chain, w: &[i64], tau: &Chain) -> bool {
    let n = w.len();
    let (k, m) = (sigma.len(), tau.len());
    let mut lp = Lp::new(k + m + 2);
    for e in 1..=n {
        let mut row = Vec::with_capacity(k + m + 2);
        row.extend(sigma.sets().iter().map(|s| i64::from(s.contains(e))));
        row.extend(tau.sets().iter().map(|s| -i64::from(s.contains(e))));
        row.push(-1);
        row.push(1);
        lp.constraint(&row, Relation::Eq, w[e - 1]);
    }
    lp.feasible()
}

/// Rank of `{e_S : S ∈ σ ∪ τ}` modulo `e_[n]`, by exact elimination.
pub fn span_rank(n: usize, sigma: &Chain, tau: &Chain) -> usize {
    let mut rows: Vec<Vec<i128>> = sigma
        .sets()
        .iter()
        .chain(tau.sets())
        .map(|s| indicator(n, *s))
        .collect();
    rows.push(vec![1; n]);
    rank_i128(rows) - 1
}

fn indicator(n: usize, s: Subset) -> Vec<i128> {
    (1..=n).map(|e| i128::from(s.contains(e))).collect()
}

fn rank_i128(mut rows: Vec<Vec<i128>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let (a, b) = (pivot[c], row[c]);
                for (v, &pv) in row.iter_mut().zip(&pivot) {
                    *v = *v * a - pv * b;
                }
                let g = row.iter().fold(0i128, |g, &v| gcd(g, v));
                if g > 1 {
                    row.iter_mut().for_each(|v| *v /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
