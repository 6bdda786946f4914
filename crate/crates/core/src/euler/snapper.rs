//! Integer-valued polynomials in the binomial basis.

use std::fmt;

use num_rational::Ratio;
use num_traits::Signed;

use crate::error::{Error, Result};

/// `C(x, k)` for any integer `x`, as the polynomial `x(x-1)...(x-k+1)/k!`.
pub fn binomial_poly(x: i128, k: usize) -> Result<i128> {
    let mut acc: i128 = 1;
    for t in 0..k as i128 {
        acc = acc
            .checked_mul(x - t)
            .ok_or(Error::Overflow("binomial evaluation"))?
            / (t + 1);
    }
    Ok(acc)
}

/// `p(a) = Σ_i h_i C(a + d - i, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SnapperPoly {
    degree: usize,
    h: Vec<i128>,
}

/// The numerator coefficients `(h_0, ..., h_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HStarVector(pub Vec<i128>);

impl HStarVector {
    pub fn as_slice(&self) -> &[i128] {
        &self.0
    }
}

impl fmt::Display for HStarVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|h| h.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl SnapperPoly {
    pub fn from_binomial(h: Vec<i128>) -> Self {
        assert!(!h.is_empty(), "binomial coefficients cannot be empty");
        SnapperPoly {
            degree: h.len() - 1,
            h,
        }
    }

    /// Fits the degree-`d` polynomial through `values[a]` for `a = 0..=d`.
    /// The basis is triangular with unit diagonal, so the fit is exact.
    pub fn fit(degree: usize, values: &[i128]) -> Result<Self> {
        if values.len() <= degree {
            return Err(Error::Internal(format!(
                "need {} values to fit degree {degree}, got {}",
                degree + 1,
                values.len()
            )));
        }
        let mut h: Vec<i128> = Vec::with_capacity(degree + 1);
        for (a, &value) in values.iter().enumerate().take(degree + 1) {
            let mut rest = value;
            for (i, &hi) in h.iter().enumerate() {
                let c = binomial_poly((a + degree - i) as i128, degree)?;
                rest = rest
                    .checked_sub(hi.checked_mul(c).ok_or(Error::Overflow("polynomial fit"))?)
                    .ok_or(Error::Overflow("polynomial fit"))?;
            }
            h.push(rest);
        }
        Ok(SnapperPoly { degree, h })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn binomial_coefficients(&self) -> &[i128] {
        &self.h
    }

    pub fn hstar(&self) -> HStarVector {
        HStarVector(self.h.clone())
    }

    pub fn eval(&self, a: i64) -> Result<i128> {
        let d = self.degree;
        let mut total: i128 = 0;
        for (i, &hi) in self.h.iter().enumerate() {
            let c = binomial_poly(a as i128 + (d - i) as i128, d)?;
            total = total
                .checked_add(hi.checked_mul(c).ok_or(Error::Overflow("polynomial evaluation"))?)
                .ok_or(Error::Overflow("polynomial evaluation"))?;
        }
        Ok(total)
    }

    /// Leading coefficient times `d!`; zero means the true degree is lower.
    pub fn leading_times_factorial(&self) -> i128 {
        self.h.iter().sum()
    }

    /// Coefficients of `1, a, a^2, ...`.
    pub fn monomial_coefficients(&self) -> Vec<Ratio<i128>> {
        let d = self.degree;
        let mut out = vec![Ratio::from_integer(0); d + 1];
        let factorial: i128 = (1..=d as i128).product();
        for (i, &hi) in self.h.iter().enumerate() {
            // C(a + d - i, d) = Π_{t<d} (a + d - i - t) / d!
            let mut poly: Vec<i128> = vec![1];
            for t in 0..d {
                let root = d as i128 - i as i128 - t as i128;
                let mut next = vec![0i128; poly.len() + 1];
                for (k, &c) in poly.iter().enumerate() {
                    next[k] += c * root;
                    next[k + 1] += c;
                }
                poly = next;
            }
            for (k, &c) in poly.iter().enumerate() {
                out[k] += Ratio::new(hi * c, factorial);
            }
        }
        out
    }

    /// `p(a) = h0*C(a+d,d) + ... ; monomial form: ...`
    pub fn render(&self) -> String {
        let d = self.degree;
        let binomial: Vec<String> = self
            .h
            .iter()
            .enumerate()
            .map(|(i, hi)| {
                let shift = d as i64 - i as i64;
                let arg = match shift {
                    0 => "a".to_string(),
                    s => format!("a+{s}"),
                };
                format!("{hi}*C({arg},{d})")
            })
            .collect();
        format!(
            "p(a) = {} ; monomial form: {}",
            binomial.join(" + "),
            render_monomial(&self.monomial_coefficients())
        )
    }
}

fn render_monomial(coeffs: &[Ratio<i128>]) -> String {
    let mut terms = Vec::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if *c.numer() == 0 {
            continue;
        }
        let magnitude = c.abs();
        let sign = if *c.numer() < 0 { "-" } else { "+" };
        let number = if magnitude == Ratio::from_integer(1) && k > 0 {
            String::new()
        } else if magnitude.is_integer() {
            magnitude.to_integer().to_string()
        } else {
            format!("({magnitude})")
        };
        let var = match k {
            0 => String::new(),
            1 => "a".to_string(),
            _ => format!("a^{k}"),
        };
        terms.push((sign, format!("{number}{var}")));
    }
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (sign, body)) in terms.iter().enumerate() {
        match (idx, *sign) {
            (0, "-") => out.push('-'),
            (0, _) => {}
            (_, s) => out.push_str(&format!(" {s} ")),
        }
        out.push_str(body);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generalized_binomials() {
        assert_eq!(binomial_poly(5, 2).unwrap(), 10);
        assert_eq!(binomial_poly(1, 2).unwrap(), 0);
        assert_eq!(binomial_poly(-1, 2).unwrap(), 1);
        assert_eq!(binomial_poly(-1, 3).unwrap(), -1);
        assert_eq!(binomial_poly(7, 0).unwrap(), 1);
    }

    #[test]
    fn fit_and_render() {
        let p = SnapperPoly::fit(1, &[1, 4]).unwrap();
        assert_eq!(p.binomial_coefficients(), &[1, 2]);
        assert_eq!(p.eval(2).unwrap(), 7);
        assert_eq!(p.eval(-1).unwrap(), -2);
        assert_eq!(p.render(), "p(a) = 1*C(a+1,1) + 2*C(a,1) ; monomial form: 3a + 1");

        let simplex = SnapperPoly::fit(2, &[1, 3, 6]).unwrap();
        assert_eq!(simplex.binomial_coefficients(), &[1, 0, 0]);
        assert_eq!(simplex.render().split(" ; ").nth(1).unwrap(), "monomial form: (1/2)a^2 + (3/2)a + 1");
        assert_eq!(SnapperPoly::fit(0, &[1]).unwrap().render(), "p(a) = 1*C(a,0) ; monomial form: 1");
    }

    #[test]
    fn monomials_match_evaluation() {
        let p = SnapperPoly::from_binomial(vec![1, 4, -2, 7]);
        let m = p.monomial_coefficients();
        for a in -4i64..6 {
            let by_monomials: Ratio<i128> = m
                .iter()
                .enumerate()
                .map(|(k, c)| c * Ratio::from_integer((a as i128).pow(k as u32)))
                .sum();
            assert_eq!(by_monomials, Ratio::from_integer(p.eval(a).unwrap()));
        }
    }
}
