//! Macaulay's growth bound for Hilbert functions of standard graded algebras.

use super::snapper::binomial_poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MacaulayVerdict {
    pub ok: bool,
    /// First index where the vector fails.
    pub witness: Option<usize>,
}

impl std::fmt::Display for MacaulayVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.witness {
            Some(i) => write!(f, "macaulay={} witness={i}", self.ok),
            None => write!(f, "macaulay={} witness=none", self.ok),
        }
    }
}

/// The `i`-th Macaulay representation `h = C(a_i, i) + C(a_{i-1}, i-1) + ...`
/// with `a_i > a_{i-1} > ... >= j >= 1`, as pairs `(a_k, k)`.
pub fn macaulay_representation(mut h: i128, i: usize) -> Vec<(i128, usize)> {
    let mut out = Vec::new();
    let mut k = i;
    while h > 0 && k >= 1 {
        let mut a = k as i128;
        while binomial(a + 1, k) <= h {
            a += 1;
        }
        h -= binomial(a, k);
        out.push((a, k));
        k -= 1;
    }
    out
}

/// `h^<i>`: raise every top and bottom of the representation by one.
pub fn macaulay_bound(h: i128, i: usize) -> i128 {
    macaulay_representation(h, i)
        .into_iter()
        .map(|(a, k)| binomial(a + 1, k + 1))
        .sum()
}

fn binomial(a: i128, k: usize) -> i128 {
    binomial_poly(a, k).expect("Macaulay binomials stay small")
}

/// `h_0 = 1`, all entries nonnegative, and `h_{i+1} <= h_i^<i>` for
/// `1 <= i <= d - 1`.
pub fn macaulay_check(h: &[i128]) -> MacaulayVerdict {
    let fail = |i| MacaulayVerdict {
        ok: false,
        witness: Some(i),
    };
    if h.first() != Some(&1) {
        return fail(0);
    }
    if let Some(i) = h.iter().position(|&x| x < 0) {
        return fail(i);
    }
    for i in 1..h.len().saturating_sub(1) {
        if h[i + 1] > macaulay_bound(h[i], i) {
            return fail(i + 1);
        }
    }
    MacaulayVerdict {
        ok: true,
        witness: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representations() {
        // 5 = C(4,2) - 1 = C(3,2) + C(2,1)
        assert_eq!(macaulay_representation(5, 2), vec![(3, 2), (2, 1)]);
        assert_eq!(macaulay_bound(5, 2), 4 + 3);
        assert_eq!(macaulay_bound(4, 1), 10);
        assert_eq!(macaulay_bound(0, 3), 0);
        assert_eq!(macaulay_bound(1, 1), 1);
    }

    #[test]
    fn fixtures() {
        for bad in [&[1, 4, 21][..], &[1, 1, 28], &[1, 0, 1]] {
            assert_eq!(macaulay_check(bad), MacaulayVerdict { ok: false, witness: Some(2) });
        }
        for good in [&[1][..], &[1, 2], &[1, 3, 6]] {
            assert!(macaulay_check(good).ok);
        }
        assert_eq!(macaulay_check(&[2, 1]).witness, Some(0));
        assert_eq!(macaulay_check(&[1, -1]).witness, Some(1));
        assert_eq!(macaulay_check(&[]).witness, Some(0));
    }

    #[test]
    fn polynomial_rings_are_extremal() {
        // Hilbert function of k[x_1..x_4]: C(i+3, 3).
        let h: Vec<i128> = (0..8).map(|i| binomial(i + 3, 3)).collect();
        assert!(macaulay_check(&h).ok);
        let mut over = h.clone();
        over[5] += 1;
        assert_eq!(macaulay_check(&over).witness, Some(5));
    }
}
