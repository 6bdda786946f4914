//! Meeting `w + Σ_M` by searching orderings of `x - w`.
//!
//! A point `y` lies in the Bergman fan exactly when every superlevel set
//! `{e : y_e >= t}` is a flat. For `x` in the cone of a chain, `x_e = α_l`
//! depends only on the level `l` of `e` and is nondecreasing in it, so
//! inside one level the order of `y = x - w` is fixed by `w`. The search
//! peels off groups of tied values from the top, keeping every prefix a
//! flat and the difference constraints on `α` feasible.

use crate::chain::Chain;
use crate::matroid::Matroid;
use crate::subset::Subset;

/// `flats[s.bits()]` for every subset of the ground set.
pub(crate) fn flat_table(m: &Matroid) -> Vec<bool> {
    Subset::all(m.n()).map(|s| m.is_flat(s)).collect()
}

struct Search<'a> {
    n: usize,
    w: &'a [i64],
    level: Vec<usize>,
    /// Per level, classes of equal weight in increasing weight order.
    blocks: Vec<Vec<Subset>>,
    flats: &'a [bool],
}

pub(crate) fn meets_bergman(sigma: &Chain, w: &[i64], flats: &[bool]) -> bool {
    let n = w.len();
    let k = sigma.len();
    let level: Vec<usize> = (1..=n)
        .map(|e| sigma.sets().iter().filter(|s| s.contains(e)).count())
        .collect();
    let mut blocks: Vec<Vec<Subset>> = vec![Vec::new(); k + 1];
    for (l, block) in blocks.iter_mut().enumerate() {
        let mut members: Vec<usize> = (1..=n).filter(|&e| level[e - 1] == l).collect();
        members.sort_by_key(|&e| w[e - 1]);
        for e in members {
            match block.last_mut() {
                Some(class) if w[class.min_element().unwrap() - 1] == w[e - 1] => {
                    *class = class.insert(e)
                }
                _ => block.push(Subset::singleton(e)),
            }
        }
    }
    // Edge (u, v, c) encodes α_v - α_u <= c.
    let edges: Vec<(usize, usize, i64)> = (0..k).map(|l| (l + 1, l, 0)).collect();
    let search = Search {
        n,
        w,
        level,
        blocks,
        flats,
    };
    search.extend(Subset::EMPTY, &mut vec![0; k + 1], None, &mut edges.clone())
}

impl Search<'_> {
    fn y_at_least(&self, e: usize, f: usize) -> (usize, usize, i64) {
        // α_{L(e)} - w_e >= α_{L(f)} - w_f
        (self.level[e - 1], self.level[f - 1], self.w[f - 1] - self.w[e - 1])
    }

    fn extend(
        &self,
        taken: Subset,
        pos: &mut Vec<usize>,
        last: Option<usize>,
        edges: &mut Vec<(usize, usize, i64)>,
    ) -> bool {
        if taken == Subset::full(self.n) {
            return true;
        }
        let heads: Vec<usize> = (0..self.blocks.len())
            .filter(|&l| pos[l] < self.blocks[l].len())
            .collect();
        let chosen = |mask: u64| {
            heads
                .iter()
                .enumerate()
                .filter(move |&(b, _)| mask >> b & 1 == 1)
                .map(|(_, &l)| l)
        };
        for mask in 1u64..1 << heads.len() {
            let group = chosen(mask).fold(Subset::EMPTY, |acc, l| acc | self.blocks[l][pos[l]]);
            let next = taken | group;
            if !self.flats[next.bits() as usize] {
                continue;
            }
            let rep = |l: usize| self.blocks[l][pos[l]].min_element().unwrap();
            let base = edges.len();
            let mut first = None;
            let mut prev_rep = None;
            for l in chosen(mask) {
                let r = rep(l);
                if let Some(p) = prev_rep {
                    edges.push(self.y_at_least(p, r));
                    edges.push(self.y_at_least(r, p));
                }
                first.get_or_insert(r);
                prev_rep = Some(r);
            }
            let first = first.unwrap();
            if let Some(prev) = last {
                edges.push(self.y_at_least(prev, first));
            }
            if feasible(self.blocks.len(), edges) {
                for l in chosen(mask) {
                    pos[l] += 1;
                }
                let found = self.extend(next, pos, Some(first), edges);
                for l in chosen(mask) {
                    pos[l] -= 1;
                }
                if found {
                    edges.truncate(base);
                    return true;
                }
            }
            edges.truncate(base);
        }
        false
    }
}

fn feasible(nodes: usize, edges: &[(usize, usize, i64)]) -> bool {
    let mut dist = [0i64; 66];
    for _ in 0..=nodes {
        let mut changed = false;
        for &(u, v, c) in edges {
            debug_assert!(u < nodes && v < nodes);
            if dist[u] + c < dist[v] {
                dist[v] = dist[u] + c;
                changed = true;
            }
        }
        if !changed {
            return true;
        }
    }
    false
}
