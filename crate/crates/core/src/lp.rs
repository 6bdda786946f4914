//! Exact dense two-phase simplex over big rationals.
//!
//! Variables are nonnegative; callers split free variables themselves.
//! Bland's rule keeps the method finite on degenerate problems.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Le,
    Ge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: BigRational, x: Vec<BigRational> },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }
}

#[derive(Clone, Debug)]
pub struct Lp {
    nvars: usize,
    rows: Vec<(Vec<i64>, Relation, i64)>,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl Lp {
    pub fn new(nvars: usize) -> Self {
        Lp { nvars, rows: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Adds `coeffs · x (rel) rhs`. Missing trailing coefficients are zero.
    pub fn constraint(&mut self, coeffs: &[i64], rel: Relation, rhs: i64) -> &mut Self {
        assert!(coeffs.len() <= self.nvars, "constraint has too many coefficients");
        let mut row = coeffs.to_vec();
        row.resize(self.nvars, 0);
        self.rows.push((row, rel, rhs));
        self
    }

    pub fn feasible(&self) -> bool {
        self.minimize(&[]).is_feasible()
    }

    pub fn maximize(&self, objective: &[i64]) -> LpOutcome {
        let negated: Vec<i64> = objective.iter().map(|&c| -c).collect();
        match self.minimize(&negated) {
            LpOutcome::Optimal { value, x } => LpOutcome::Optimal { value: -value, x },
            other => other,
        }
    }

    pub fn minimize(&self, objective: &[i64]) -> LpOutcome {
        let m = self.rows.len();
        let nslack = self.rows.iter().filter(|r| r.1 != Relation::Eq).count();
        let nart = m;
        let ncols = self.nvars + nslack + nart;
        // Tableau rows: [coefficients | rhs].
        let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut slack = self.nvars;
        for (i, (coeffs, rel, rhs)) in self.rows.iter().enumerate() {
            let mut row = vec![BigRational::zero(); ncols + 1];
            for (j, &c) in coeffs.iter().enumerate() {
                row[j] = rat(c);
            }
            match rel {
                Relation::Le => {
                    row[slack] = BigRational::one();
                    slack += 1;
                }
                Relation::Ge => {
                    row[slack] = -BigRational::one();
                    slack += 1;
                }
                Relation::Eq => {}
            }
            row[ncols] = rat(*rhs);
            if row[ncols].is_negative() {
                for v in row.iter_mut() {
                    *v = -v.clone();
                }
            }
            let art = self.nvars + nslack + i;
            row[art] = BigRational::one();
            basis.push(art);
            tab.push(row);
        }

        // Phase one: minimise the sum of artificials.
        let mut cost = vec![BigRational::zero(); ncols];
        for c in cost.iter_mut().skip(self.nvars + nslack) {
            *c = BigRational::one();
        }
        if !run_simplex(&mut tab, &mut basis, &cost, ncols) {
            unreachable!("phase one is bounded below by zero");
        }
        let infeasibility: BigRational = basis
            .iter()
            .zip(&tab)
            .filter(|(&b, _)| b >= self.nvars + nslack)
            .map(|(_, row)| row[ncols].clone())
            .sum();
        if infeasibility.is_positive() {
            return LpOutcome::Infeasible;
        }
        // Drive zero-valued artificials out of the basis where possible.
        let first_art = self.nvars + nslack;
        for i in 0..m {
            if basis[i] < first_art {
                continue;
            }
            if let Some(j) = (0..first_art).find(|&j| !tab[i][j].is_zero()) {
                pivot(&mut tab, &mut basis, i, j);
            }
        }

        // Phase two on the original columns; artificials are frozen.
        let mut cost = vec![BigRational::zero(); ncols];
        for (j, &c) in objective.iter().enumerate() {
            cost[j] = rat(c);
        }
        if !run_simplex(&mut tab, &mut basis, &cost, first_art) {
            return LpOutcome::Unbounded;
        }
        let mut x = vec![BigRational::zero(); self.nvars];
        for (i, &b) in basis.iter().enumerate() {
            if b < self.nvars {
                x[b] = tab[i][ncols].clone();
            }
        }
        let value = objective
            .iter()
            .zip(&x)
            .map(|(&c, v)| rat(c) * v)
            .sum();
        LpOutcome::Optimal { value, x }
    }
}

fn pivot(tab: &mut [Vec<BigRational>], basis: &mut [usize], row: usize, col: usize) {
    let p = tab[row][col].clone();
    for v in tab[row].iter_mut() {
        *v = &*v / &p;
    }
    let pivot_row = tab[row].clone();
    for (i, r) in tab.iter_mut().enumerate() {
        if i == row || r[col].is_zero() {
            continue;
        }
        let factor = r[col].clone();
        for (v, pv) in r.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &factor * pv;
            }
        }
    }
    basis[row] = col;
}

/// Minimises `cost` over columns `< allowed`. Returns false when unbounded.
fn run_simplex(
    tab: &mut [Vec<BigRational>],
    basis: &mut [usize],
    cost: &[BigRational],
    allowed: usize,
) -> bool {
    let rhs = cost.len();
    loop {
        // Reduced cost of column j: cost_j - c_B · column_j.
        let entering = (0..allowed).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let mut reduced = cost[j].clone();
            for (i, &b) in basis.iter().enumerate() {
                if !tab[i][j].is_zero() && !cost[b].is_zero() {
                    reduced -= &cost[b] * &tab[i][j];
                }
            }
            reduced.is_negative()
        });
        let Some(col) = entering else {
            return true;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..tab.len() {
            if !tab[i][col].is_positive() {
                continue;
            }
            let ratio = &tab[i][rhs] / &tab[i][col];
            let better = match &leave {
                None => true,
                Some((k, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*k]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        match leave {
            Some((row, _)) => pivot(tab, basis, row, col),
            None => return false,
        }
    }
}
