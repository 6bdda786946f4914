//! Euler characteristics through the initial degeneration.

use crate::error::{Error, Result};
use crate::genperm::{FaceSpec, SubmodularSpec};
use crate::matroid::Matroid;
use crate::subset::Subset;
use crate::tropical::{initial_degeneration, InitialDegeneration, Weight};

use super::snapper::{HStarVector, SnapperPoly};

/// Faces of `P` over the support of a degeneration, ready for counting.
pub struct Transfer {
    terms: Vec<(i64, FaceSpec)>,
}

impl Transfer {
    pub fn new(deg: &InitialDegeneration, p: &SubmodularSpec) -> Result<Self> {
        let m = deg.matroid();
        m.require_loopless()?;
        if p.n() != m.n() {
            return Err(Error::DimensionMismatch {
                expected: m.n(),
                found: p.n(),
            });
        }
        let terms = deg.support().map(|(chain, c)| (c, p.face(chain))).collect();
        Ok(Transfer { terms })
    }

    /// `Σ_σ c_σ · #(a·face(P, σ) ∩ Z^n)`.
    pub fn chi(&self, a: u64) -> Result<i128> {
        let mut total: i128 = 0;
        for (c, face) in &self.terms {
            let count = i128::try_from(face.lattice_count(a)?)
                .map_err(|_| Error::Overflow("lattice count"))?;
            total = count
                .checked_mul(*c as i128)
                .and_then(|v| total.checked_add(v))
                .ok_or(Error::Overflow("Euler characteristic"))?;
        }
        Ok(total)
    }

    /// The Snapper polynomial of degree `degree`, fitted at `a = 0..=d` and
    /// checked at `a = d + 1, d + 2`.
    pub fn snapper(&self, degree: usize) -> Result<SnapperPoly> {
        let values = (0..=degree as u64 + 2)
            .map(|a| self.chi(a))
            .collect::<Result<Vec<_>>>()?;
        let poly = SnapperPoly::fit(degree, &values)?;
        for (a, &computed) in values.iter().enumerate().skip(degree + 1) {
            let fitted = poly.eval(a as i64)?;
            if fitted != computed {
                return Err(Error::DegreeMismatch {
                    degree,
                    power: a as i64,
                    fitted,
                    computed,
                });
            }
        }
        if poly.leading_times_factorial() == 0 {
            return Err(Error::DegreeMismatch {
                degree,
                power: degree as i64,
                fitted: 0,
                computed: values[degree],
            });
        }
        Ok(poly)
    }
}

pub fn chi(m: &Matroid, p: &SubmodularSpec, a: u64, w: &Weight) -> Result<i128> {
    m.require_loopless()?;
    let deg = initial_degeneration(m, w)?;
    Transfer::new(&deg, p)?.chi(a)
}

pub fn snapper_polynomial(m: &Matroid, p: &SubmodularSpec, w: &Weight) -> Result<SnapperPoly> {
    m.require_loopless()?;
    let deg = initial_degeneration(m, w)?;
    snapper_from(&deg, p)
}

/// Snapper polynomial from an already computed degeneration.
pub fn snapper_from(deg: &InitialDegeneration, p: &SubmodularSpec) -> Result<SnapperPoly> {
    let d = numerical_dimension(deg.matroid(), p)?;
    Transfer::new(deg, p)?.snapper(d)
}

/// h*-vector, with the checks `h_0 = 1` and `h_d = (-1)^d p(-1)`.
pub fn hstar(m: &Matroid, p: &SubmodularSpec, w: &Weight) -> Result<HStarVector> {
    hstar_of(&snapper_polynomial(m, p, w)?)
}

pub fn hstar_of(poly: &SnapperPoly) -> Result<HStarVector> {
    let h = poly.hstar();
    if h.0[0] != 1 {
        return Err(Error::Internal(format!("h*_0 = {} instead of 1", h.0[0])));
    }
    let d = poly.degree();
    if h.0[d] != sign(d) * poly.eval(-1)? {
        return Err(Error::Internal("h*_d differs from (-1)^d p(-1)".into()));
    }
    Ok(h)
}

fn sign(d: usize) -> i128 {
    if d.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `(-1)^d p(a) >= 0` for `a = -1, ..., -d`.
pub fn sign_law_holds(poly: &SnapperPoly) -> Result<bool> {
    let d = poly.degree();
    for a in 1..=d as i64 {
        if sign(d) * poly.eval(-a)? < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Minimum over coarsenings `T_1 ⊔ ... ⊔ T_k` of the induced partition of
/// `P` of `Σ (rk(T_i) - 1)`.
pub fn numerical_dimension(m: &Matroid, p: &SubmodularSpec) -> Result<usize> {
    m.require_loopless()?;
    if p.n() != m.n() {
        return Err(Error::DimensionMismatch {
            expected: m.n(),
            found: p.n(),
        });
    }
    let (blocks, dim) = p.induced_partition();
    let best = min_over_coarsenings(m, &blocks);

    let components = m.connected_components()?;
    let coarsens = components
        .iter()
        .all(|c| blocks.iter().any(|b| c.is_subset_of(*b)));
    if coarsens {
        let shortcut = m.rank() as i64 - m.n() as i64 + dim as i64;
        if shortcut != best as i64 {
            return Err(Error::Internal(format!(
                "partition minimum {best} disagrees with r - n + dim P = {shortcut}"
            )));
        }
    }
    Ok(best)
}

fn min_over_coarsenings(m: &Matroid, blocks: &[Subset]) -> usize {
    fn go(m: &Matroid, blocks: &[Subset], parts: &mut Vec<Subset>, best: &mut usize) {
        let Some((&first, rest)) = blocks.split_first() else {
            let value = parts.iter().map(|&t| m.rank_of(t) - 1).sum();
            *best = (*best).min(value);
            return;
        };
        for k in 0..parts.len() {
            parts[k] = parts[k] | first;
            go(m, rest, parts, best);
            parts[k] = parts[k] - first;
        }
        parts.push(first);
        go(m, rest, parts, best);
        parts.pop();
    }
    let mut best = usize::MAX;
    go(m, blocks, &mut Vec::new(), &mut best);
    best
}

/// `ω(M) = (-1)^d p(-1)` for the Snapper polynomial `p` of `-P(M)`, where
/// `d = r - n + dim P(M)`.
pub fn omega(m: &Matroid, w: &Weight) -> Result<i128> {
    m.require_loopless()?;
    let deg = initial_degeneration(m, w)?;
    omega_from(&deg)
}

pub fn omega_from(deg: &InitialDegeneration) -> Result<i128> {
    let m = deg.matroid();
    let p = SubmodularSpec::rank(m).neg();
    let d = m.rank() - m.connected_components()?.len();
    let poly = snapper_from(deg, &p)?;
    if poly.degree() != d {
        return Err(Error::Internal(format!(
            "omega degree {d} disagrees with the partition minimum {}",
            poly.degree()
        )));
    }
    Ok(sign(d) * poly.eval(-1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genperm::{build_polytope, Env};

    fn segments3() -> SubmodularSpec {
        build_polytope("sum(seg:1,2,seg:1,3,seg:2,3)", &Env::with_n(3)).unwrap()
    }

    #[test]
    fn golden_chi() {
        let m = Matroid::uniform(2, 3).unwrap();
        let w = Weight::certify_for(&m, vec![0, 1, 3]).unwrap();
        let p = segments3();
        for a in 0..=4u64 {
            assert_eq!(chi(&m, &p, a, &w).unwrap(), 3 * a as i128 + 1);
        }
        let poly = snapper_polynomial(&m, &p, &w).unwrap();
        assert_eq!(poly.degree(), 1);
        assert_eq!(hstar(&m, &p, &w).unwrap().0, vec![1, 2]);
    }

    #[test]
    fn trivial_cases() {
        let m = Matroid::uniform(1, 3).unwrap();
        let w = crate::tropical::sample_weight(&m, 3).unwrap();
        assert_eq!(chi(&m, &segments3(), 5, &w).unwrap(), 1);
        assert_eq!(hstar(&m, &segments3(), &w).unwrap().0, vec![1]);

        let free = Matroid::uniform(3, 3).unwrap();
        let w = crate::tropical::sample_weight(&free, 3).unwrap();
        let simplex = SubmodularSpec::simplex(3, Subset::full(3)).unwrap();
        let poly = snapper_polynomial(&free, &simplex, &w).unwrap();
        assert_eq!(poly.binomial_coefficients(), &[1, 0, 0]);

        let u22 = Matroid::uniform(2, 2).unwrap();
        let w = crate::tropical::sample_weight(&u22, 3).unwrap();
        let seg = SubmodularSpec::seg(2, 1, 2).unwrap();
        assert_eq!(hstar(&u22, &seg, &w).unwrap().0, vec![1, 0]);
    }

    #[test]
    fn numerical_dimension_examples() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        let full = SubmodularSpec::simplex(4, Subset::full(4)).unwrap();
        assert_eq!(numerical_dimension(&u24, &full).unwrap(), 1);
        let seg = SubmodularSpec::seg(4, 1, 2).unwrap();
        assert_eq!(numerical_dimension(&u24, &seg).unwrap(), 1);
        let point = SubmodularSpec::point(&[1, 2, 3, 4]);
        assert_eq!(numerical_dimension(&u24, &point).unwrap(), 0);
    }

    #[test]
    fn omega_examples() {
        for expr in ["uniform:1,2", "uniform:1,1", "directsum(uniform:1,2,uniform:1,2)"] {
            let m = crate::matroid::catalog(expr).unwrap();
            let w = crate::tropical::sample_weight(&m, 1).unwrap();
            assert_eq!(omega(&m, &w).unwrap(), 1, "{expr}");
        }
    }
}
