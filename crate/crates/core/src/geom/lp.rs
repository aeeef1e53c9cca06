//! Exact rational linear programming: a dense two-phase simplex method with
//! Bland's anti-cycling rule.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{RatVec, Rational};

/// A linear system over `variables` unknowns: equality rows `a·x = b`,
/// inequality rows `a·x ≤ b`, and a per-variable nonnegativity mask.
#[derive(Clone, Debug, Default)]
pub struct LpProblem {
    pub variables: usize,
    pub equalities: Vec<(Vec<Rational>, Rational)>,
    pub inequalities: Vec<(Vec<Rational>, Rational)>,
    pub nonnegative: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Feasibility {
    Feasible(RatVec),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Rational, point: RatVec },
    Infeasible,
    Unbounded,
}

impl LpProblem {
    /// A problem with `variables` unknowns, all nonnegative, and no rows.
    pub fn nonnegative(variables: usize) -> Self {
        LpProblem {
            variables,
            nonnegative: vec![true; variables],
            ..Default::default()
        }
    }

    /// A problem with `variables` free unknowns and no rows.
    pub fn free(variables: usize) -> Self {
        LpProblem {
            variables,
            nonnegative: vec![false; variables],
            ..Default::default()
        }
    }

    pub fn add_equality(&mut self, row: Vec<Rational>, rhs: Rational) {
        self.equalities.push((row, rhs));
    }

    pub fn add_inequality(&mut self, row: Vec<Rational>, rhs: Rational) {
        self.inequalities.push((row, rhs));
    }

    fn validate(&self) -> Result<()> {
        if self.nonnegative.len() != self.variables {
            return Err(Error::MalformedLp(format!(
                "nonnegativity mask has length {}, expected {}",
                self.nonnegative.len(),
                self.variables
            )));
        }
        for (row, _) in self.equalities.iter().chain(&self.inequalities) {
            if row.len() != self.variables {
                return Err(Error::MalformedLp(format!(
                    "row has length {}, expected {}",
                    row.len(),
                    self.variables
                )));
            }
        }
        Ok(())
    }

    /// Checks that `x` satisfies every row exactly.
    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        x.len() == self.variables
            && self
                .nonnegative
                .iter()
                .zip(x)
                .all(|(&nn, v)| !nn || !v.is_negative())
            && self.equalities.iter().all(|(row, b)| &dot(row, x) == b)
            && self.inequalities.iter().all(|(row, b)| &dot(row, x) <= b)
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Decides feasibility exactly, returning a witness when feasible.
pub fn lp_feasible(prob: &LpProblem) -> Result<Feasibility> {
    let zero = vec![Rational::zero(); prob.variables];
    Ok(match maximize(prob, &zero)? {
        LpOutcome::Optimal { point, .. } => Feasibility::Feasible(point),
        LpOutcome::Infeasible => Feasibility::Infeasible,
        LpOutcome::Unbounded => unreachable!("zero objective cannot be unbounded"),
    })
}

/// Maximizes `objective · x` over the feasible set of `prob`.
pub fn maximize(prob: &LpProblem, objective: &[Rational]) -> Result<LpOutcome> {
    prob.validate()?;
    if objective.len() != prob.variables {
        return Err(Error::MalformedLp("objective length".into()));
    }

    // Column layout: one column per nonnegative variable, two (plus, minus)
    // per free variable, then one slack per inequality, then artificials.
    let mut var_cols: Vec<(usize, Option<usize>)> = Vec::with_capacity(prob.variables);
    let mut ncols = 0;
    for &nn in &prob.nonnegative {
        if nn {
            var_cols.push((ncols, None));
            ncols += 1;
        } else {
            var_cols.push((ncols, Some(ncols + 1)));
            ncols += 2;
        }
    }
    let structural = ncols;
    let nrows = prob.equalities.len() + prob.inequalities.len();
    let slack_start = structural;
    ncols += prob.inequalities.len();
    let art_start = ncols;
    ncols += nrows;

    let mut rows = Vec::with_capacity(nrows);
    let mut rhs = Vec::with_capacity(nrows);
    let all_rows = prob.equalities.iter().map(|r| (r, None)).chain(
        prob.inequalities
            .iter()
            .enumerate()
            .map(|(k, r)| (r, Some(slack_start + k))),
    );
    for (i, ((coeffs, b), slack)) in all_rows.enumerate() {
        let mut row = vec![Rational::zero(); ncols];
        for (j, c) in coeffs.iter().enumerate() {
            let (p, m) = var_cols[j];
            row[p] = c.clone();
            if let Some(m) = m {
                row[m] = -c;
            }
        }
        if let Some(s) = slack {
            row[s] = Rational::from_integer(1.into());
        }
        let mut b = b.clone();
        if b.is_negative() {
            row.iter_mut().for_each(|x| *x = -&*x);
            b = -b;
        }
        row[art_start + i] = Rational::from_integer(1.into());
        rows.push(row);
        rhs.push(b);
    }

    let mut t = Tableau {
        rows,
        rhs,
        basis: (art_start..art_start + nrows).collect(),
    };

    // Phase 1: maximize the negated sum of artificials.
    let mut cost1 = vec![Rational::zero(); ncols];
    for c in &mut cost1[art_start..] {
        *c = Rational::from_integer((-1).into());
    }
    let all = vec![true; ncols];
    t.optimize(&cost1, &all);
    let infeas: Rational = t
        .basis
        .iter()
        .zip(&t.rhs)
        .filter(|(&b, _)| b >= art_start)
        .fold(Rational::zero(), |acc, (_, v)| acc + v);
    if infeas.is_positive() {
        return Ok(LpOutcome::Infeasible);
    }

    // Drive remaining (zero-valued) artificials out of the basis; rows where
    // that is impossible are linearly dependent and can be dropped.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= art_start {
            match (0..art_start).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => {
                    t.pivot(i, j);
                    i += 1;
                }
                None => {
                    t.rows.remove(i);
                    t.rhs.remove(i);
                    t.basis.remove(i);
                }
            }
        } else {
            i += 1;
        }
    }

    // Phase 2.
    let mut cost2 = vec![Rational::zero(); ncols];
    for (j, c) in objective.iter().enumerate() {
        let (p, m) = var_cols[j];
        cost2[p] = c.clone();
        if let Some(m) = m {
            cost2[m] = -c;
        }
    }
    let mut allowed = vec![true; ncols];
    allowed[art_start..].iter_mut().for_each(|a| *a = false);
    if !t.optimize(&cost2, &allowed) {
        return Ok(LpOutcome::Unbounded);
    }

    let mut col_values = vec![Rational::zero(); ncols];
    for (i, &b) in t.basis.iter().enumerate() {
        col_values[b] = t.rhs[i].clone();
    }
    let point: Vec<Rational> = var_cols
        .iter()
        .map(|&(p, m)| match m {
            Some(m) => &col_values[p] - &col_values[m],
            None => col_values[p].clone(),
        })
        .collect();
    let value = dot(objective, &point);
    Ok(LpOutcome::Optimal {
        value,
        point: RatVec::new(point),
    })
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x /= &p;
            }
        }
        self.rhs[r] /= &p;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r {
                continue;
            }
            let f = self.rows[i][c].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in self.rows[i].iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            self.rhs[i] -= &f * &prhs;
        }
        self.basis[r] = c;
    }

    /// Runs primal simplex iterations maximizing `cost`. Returns `false` if
    /// the objective is unbounded. Bland's rule: lowest-index improving
    /// column enters; ratio ties leave by lowest basic index.
    fn optimize(&mut self, cost: &[Rational], allowed: &[bool]) -> bool {
        let ncols = cost.len();
        loop {
            let mut entering = None;
            for j in 0..ncols {
                if !allowed[j] || self.basis.contains(&j) {
                    continue;
                }
                let mut reduced = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    let a = &self.rows[i][j];
                    if !a.is_zero() && !cost[b].is_zero() {
                        reduced -= &cost[b] * a;
                    }
                }
                if reduced.is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(c) = entering else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if a.is_positive() {
                    let ratio = &self.rhs[i] / a;
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => {
                            ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn infeasible_bounds() {
        let mut p = LpProblem::nonnegative(1);
        p.add_inequality(vec![int(1)], int(-1));
        assert_eq!(lp_feasible(&p).unwrap(), Feasibility::Infeasible);
    }

    #[test]
    fn simplex_segment_feasible() {
        let mut p = LpProblem::nonnegative(2);
        p.add_equality(vec![int(1), int(1)], int(1));
        match lp_feasible(&p).unwrap() {
            Feasibility::Feasible(w) => assert!(p.satisfied_by(&w)),
            Feasibility::Infeasible => panic!("expected feasible"),
        }
    }

    #[test]
    fn free_variables_and_optimum() {
        // max x + y s.t. x - y <= 1, x + 2y <= 4, x free, y free, y >= -3
        let mut p = LpProblem::free(2);
        p.add_inequality(vec![int(1), int(-1)], int(1));
        p.add_inequality(vec![int(1), int(2)], int(4));
        p.add_inequality(vec![int(0), int(-1)], int(3));
        match maximize(&p, &[int(1), int(1)]).unwrap() {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, int(3));
                assert_eq!(point, RatVec::new(vec![int(2), int(1)]));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            maximize(&p, &[int(-1), int(0)]).unwrap(),
            LpOutcome::Unbounded
        );
    }

    #[test]
    fn redundant_equalities_are_dropped() {
        let mut p = LpProblem::nonnegative(2);
        p.add_equality(vec![int(1), int(1)], int(1));
        p.add_equality(vec![int(2), int(2)], int(2));
        match maximize(&p, &[int(1), int(0)]).unwrap() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, int(1)),
            other => panic!("unexpected {other:?}"),
        }
        let mut q = p.clone();
        q.add_equality(vec![int(1), int(0)], rat(1, 3));
        match maximize(&q, &[int(0), int(1)]).unwrap() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(2, 3)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_rows_are_rejected() {
        let mut p = LpProblem::nonnegative(2);
        p.add_inequality(vec![int(1)], int(1));
        assert!(matches!(lp_feasible(&p), Err(Error::MalformedLp(_))));
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's classic cycling instance, maximize form.
        let mut p = LpProblem::nonnegative(4);
        p.add_inequality(vec![rat(1, 4), int(-60), rat(-1, 25), int(9)], int(0));
        p.add_inequality(vec![rat(1, 2), int(-90), rat(-1, 50), int(3)], int(0));
        p.add_inequality(vec![int(0), int(0), int(1), int(0)], int(1));
        match maximize(&p, &[rat(3, 4), int(-150), rat(1, 50), int(-6)]).unwrap() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(1, 20)),
            other => panic!("unexpected {other:?}"),
        }
    }
}
