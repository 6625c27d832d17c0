//! Exact rational linear programming: a two-phase primal simplex method
//! on dense tableaus with Bland's anti-cycling rule.
//!
//! Problems are given in standard form, minimize c.x subject to A.x = b
//! and x >= 0. Bland's rule (lowest eligible index enters, lowest-index
//! basic variable leaves on ties) guarantees termination and makes the
//! optimal basis, hence every reported certificate, deterministic.
//! Artificial columns are kept in the tableau through phase two, barred
//! from entering, so the equality-row duals can be read off their reduced
//! costs at optimality.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::par;
use crate::rational::Rational;

/// min objective.x subject to constraints.x = rhs, x >= 0.
#[derive(Debug, Clone)]
pub struct StandardForm {
    pub constraints: Vec<Vec<Rational>>,
    pub rhs: Vec<Rational>,
    pub objective: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    /// Primal optimum, one entry per variable.
    pub x: Vec<Rational>,
    /// Dual multipliers for the equality rows, in the row order and sign
    /// convention of the input (not of the internally flipped system).
    pub dual: Vec<Rational>,
    /// Optimal objective value.
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

/// Guards against a pivoting bug looping forever; Bland's rule needs no
/// cap in theory.
const MAX_PIVOTS: usize = 200_000;

struct Tableau {
    /// Constraint count.
    m: usize,
    /// Original variable count; artificials occupy columns n..n+m.
    n: usize,
    /// m rows of length n + m + 1; the last entry is the transformed rhs.
    rows: Vec<Vec<Rational>>,
    /// Reduced-cost row of length n + m + 1; the last entry is the negated
    /// current objective value.
    cost: Vec<Rational>,
    /// basis[i] = variable basic in row i.
    basis: Vec<usize>,
    /// Rows whose rhs sign was flipped to make the rhs nonnegative.
    flipped: Vec<bool>,
    pivots: usize,
}

impl Tableau {
    fn new(lp: &StandardForm) -> Result<Self> {
        let m = lp.constraints.len();
        let n = lp.objective.len();
        if lp.rhs.len() != m {
            return Err(Error::InvalidParameter(format!(
                "rhs has {} entries for {} constraint rows",
                lp.rhs.len(),
                m
            )));
        }
        let mut rows = Vec::with_capacity(m);
        let mut flipped = vec![false; m];
        for (i, row) in lp.constraints.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidParameter(format!(
                    "constraint row {i} has {} entries for {} variables",
                    row.len(),
                    n
                )));
            }
            let flip = lp.rhs[i].is_negative();
            flipped[i] = flip;
            let mut full = Vec::with_capacity(n + m + 1);
            for v in row {
                full.push(if flip { -v.clone() } else { v.clone() });
            }
            for j in 0..m {
                full.push(if j == i { Rational::one() } else { Rational::zero() });
            }
            full.push(if flip { -lp.rhs[i].clone() } else { lp.rhs[i].clone() });
            rows.push(full);
        }
        let basis = (n..n + m).collect();
        Ok(Tableau { m, n, rows, cost: Vec::new(), basis, flipped, pivots: 0 })
    }

    /// Rebuilds the reduced-cost row for an extended objective (length
    /// n + m) against the current basis.
    fn rebuild_cost(&mut self, objective: &[Rational]) {
        let width = self.n + self.m + 1;
        let mut cost = vec![Rational::zero(); width];
        cost[..self.n + self.m].clone_from_slice(objective);
        for (i, row) in self.rows.iter().enumerate() {
            let cb = objective[self.basis[i]].clone();
            if cb.is_zero() {
                continue;
            }
            for j in 0..width {
                if !row[j].is_zero() {
                    cost[j] -= &cb * &row[j];
                }
            }
        }
        self.cost = cost;
    }

    fn pivot(&mut self, r: usize, j: usize) -> Result<()> {
        self.pivots += 1;
        if self.pivots > MAX_PIVOTS {
            return Err(Error::LpFailure("pivot budget exhausted".into()));
        }
        let pivot = self.rows[r][j].clone();
        debug_assert!(!pivot.is_zero());
        let inv = Rational::one() / pivot;
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = self.rows[r].clone();
        par::for_each_indexed_mut(&mut self.rows, |i, row| {
            if i == r || row[j].is_zero() {
                return;
            }
            let factor = row[j].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        });
        if !self.cost[j].is_zero() {
            let factor = self.cost[j].clone();
            for (v, p) in self.cost.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        self.basis[r] = j;
        Ok(())
    }

    /// Runs simplex iterations until optimality (Ok(true)) or unboundedness
    /// (Ok(false)). Columns >= `col_limit` never enter.
    fn run(&mut self, col_limit: usize) -> Result<bool> {
        loop {
            let entering = (0..col_limit).find(|&j| self.cost[j].is_negative());
            let Some(j) = entering else {
                return Ok(true);
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.m {
                if !self.rows[i][j].is_positive() {
                    continue;
                }
                let ratio = &self.rows[i][self.n + self.m] / &self.rows[i][j];
                let better = match &leave {
                    None => true,
                    Some((r, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*r])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else {
                return Ok(false);
            };
            self.pivot(r, j)?;
        }
    }

    fn objective_value(&self) -> Rational {
        -self.cost[self.n + self.m].clone()
    }
}

/// Solves the LP exactly. The result is fully deterministic in the input.
pub fn solve(lp: &StandardForm) -> Result<LpOutcome> {
    let mut t = Tableau::new(lp)?;
    let n = t.n;
    let m = t.m;

    // Phase one: minimize the sum of artificials from the all-artificial
    // basis.
    let mut phase1 = vec![Rational::zero(); n + m];
    for j in n..n + m {
        phase1[j] = Rational::one();
    }
    t.rebuild_cost(&phase1);
    if !t.run(n + m)? {
        return Err(Error::LpFailure("phase one reported unbounded".into()));
    }
    if t.objective_value().is_positive() {
        return Ok(LpOutcome::Infeasible);
    }

    // Drive basic artificials out; a row with no eligible original column
    // is redundant and stays inert (its artificial never leaves, its dual
    // multiplier ends up 0).
    for r in 0..m {
        if t.basis[r] >= n {
            let col = (0..n).find(|&j| !t.rows[r][j].is_zero());
            if let Some(j) = col {
                t.pivot(r, j)?;
            }
        }
    }

    // Phase two over the original objective; artificial columns are barred
    // from entering but their reduced costs remain maintained.
    let mut phase2 = vec![Rational::zero(); n + m];
    phase2[..n].clone_from_slice(&lp.objective);
    t.rebuild_cost(&phase2);
    if !t.run(n)? {
        return Ok(LpOutcome::Unbounded);
    }

    let mut x = vec![Rational::zero(); n];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < n {
            x[b] = t.rows[i][n + m].clone();
        }
    }
    // At optimality the reduced cost of artificial i is -y_i for the
    // flipped system; undo the row flips to report duals for the input.
    let dual = (0..m)
        .map(|i| {
            let y = -t.cost[n + i].clone();
            if t.flipped[i] {
                -y
            } else {
                y
            }
        })
        .collect();
    Ok(LpOutcome::Optimal(LpSolution { x, dual, value: t.objective_value() }))
}
