//! Exact two-phase simplex over the rationals.
//!
//! Programs are stated as `minimize c·x subject to A x = b` with each variable
//! either nonnegative or free. Inequality rows are supported by the builder,
//! which appends a nonnegative slack column. Pivoting follows Bland's rule, so
//! every solve terminates. Optimal outcomes carry a dual vector `y` with
//! `A^T y <= c` (equality on free columns) and `b·y = c·x`; infeasible
//! outcomes carry a Farkas vector `y` with `A^T y <= 0` (equality on free
//! columns) and `b·y > 0`.

use crate::error::{Error, Result};
use crate::exact::{Rational, RationalVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarSign {
    NonNegative,
    Free,
}

/// A linear program with equality constraints, built incrementally.
#[derive(Clone, Debug, Default)]
pub struct LinearProgram {
    costs: Vec<Rational>,
    signs: Vec<VarSign>,
    rows: Vec<Vec<(usize, Rational)>>,
    rhs: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimalSolution {
    pub primal: RationalVector,
    pub dual: RationalVector,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(OptimalSolution),
    /// Farkas certificate: `y` with `A^T y <= 0` and `b·y > 0`.
    Infeasible {
        farkas: RationalVector,
    },
    /// Feasible direction `d` with `A d = 0`, `d >= 0` on signed variables,
    /// and `c·d < 0`.
    Unbounded {
        ray: RationalVector,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn status(&self) -> LpStatus {
        match self {
            LpOutcome::Optimal(_) => LpStatus::Optimal,
            LpOutcome::Infeasible { .. } => LpStatus::Infeasible,
            LpOutcome::Unbounded { .. } => LpStatus::Unbounded,
        }
    }

    pub fn optimal(&self) -> Option<&OptimalSolution> {
        match self {
            LpOutcome::Optimal(s) => Some(s),
            _ => None,
        }
    }

    pub fn into_optimal(self) -> Option<OptimalSolution> {
        match self {
            LpOutcome::Optimal(s) => Some(s),
            _ => None,
        }
    }
}

impl LinearProgram {
    pub fn new() -> Self {
        Self::default()
    }

    /// Dense constructor: `minimize c·x s.t. A x = b`.
    pub fn from_dense(c: Vec<Rational>, a: Vec<Vec<Rational>>, b: Vec<Rational>, signs: Vec<VarSign>) -> Result<Self> {
        if signs.len() != c.len() {
            return Err(Error::MalformedProgram("sign markers do not match objective".into()));
        }
        if a.len() != b.len() {
            return Err(Error::MalformedProgram("row count does not match right-hand side".into()));
        }
        let mut lp = LinearProgram { costs: c, signs, rows: Vec::new(), rhs: Vec::new() };
        for (row, rhs) in a.into_iter().zip(b) {
            if row.len() != lp.num_vars() {
                return Err(Error::MalformedProgram("row length does not match variables".into()));
            }
            let terms = row.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
            lp.add_eq(terms, rhs);
        }
        Ok(lp)
    }

    pub fn add_var(&mut self, sign: VarSign, cost: Rational) -> usize {
        self.costs.push(cost);
        self.signs.push(sign);
        self.costs.len() - 1
    }

    /// Adds `count` variables of the same sign and zero cost; returns the
    /// index of the first.
    pub fn add_vars(&mut self, count: usize, sign: VarSign) -> usize {
        let first = self.costs.len();
        for _ in 0..count {
            self.add_var(sign, Rational::zero());
        }
        first
    }

    pub fn set_cost(&mut self, var: usize, cost: Rational) {
        self.costs[var] = cost;
    }

    /// Adds `Σ coef·x_var = rhs`; returns the row index.
    pub fn add_eq(&mut self, terms: Vec<(usize, Rational)>, rhs: Rational) -> usize {
        self.rows.push(terms);
        self.rhs.push(rhs);
        self.rows.len() - 1
    }

    /// Adds `Σ coef·x_var <= rhs` through a fresh nonnegative slack.
    pub fn add_le(&mut self, mut terms: Vec<(usize, Rational)>, rhs: Rational) -> usize {
        let slack = self.add_var(VarSign::NonNegative, Rational::zero());
        terms.push((slack, Rational::one()));
        self.add_eq(terms, rhs)
    }

    /// Adds `Σ coef·x_var >= rhs` through a fresh nonnegative surplus.
    pub fn add_ge(&mut self, mut terms: Vec<(usize, Rational)>, rhs: Rational) -> usize {
        let surplus = self.add_var(VarSign::NonNegative, Rational::zero());
        terms.push((surplus, -Rational::one()));
        self.add_eq(terms, rhs)
    }

    pub fn num_vars(&self) -> usize {
        self.costs.len()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn costs(&self) -> &[Rational] {
        &self.costs
    }

    pub fn signs(&self) -> &[VarSign] {
        &self.signs
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    fn validate(&self) -> Result<()> {
        for row in &self.rows {
            for (var, _) in row {
                if *var >= self.num_vars() {
                    return Err(Error::MalformedProgram(format!("variable {var} out of range")));
                }
            }
        }
        Ok(())
    }

    /// Dense row `i` of the constraint matrix.
    pub fn dense_row(&self, i: usize) -> Vec<Rational> {
        let mut row = vec![Rational::zero(); self.num_vars()];
        for (var, coef) in &self.rows[i] {
            row[*var] += coef;
        }
        row
    }

    /// `A x`, computed from the sparse rows.
    pub fn apply(&self, x: &RationalVector) -> Vec<Rational> {
        self.rows.iter().map(|row| row.iter().map(|(v, c)| c * &x[*v]).sum()).collect()
    }

    /// `A^T y`.
    pub fn apply_transpose(&self, y: &RationalVector) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.num_vars()];
        for (row, yi) in self.rows.iter().zip(y.iter()) {
            if yi.is_zero() {
                continue;
            }
            for (v, c) in row {
                out[*v] += &(c * yi);
            }
        }
        out
    }

    pub fn solve(&self) -> Result<LpOutcome> {
        solve(self)
    }

    /// Plain-text tableau dump for debugging.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        let signs: Vec<&str> = self.signs.iter().map(|g| if *g == VarSign::Free { "free" } else { ">=0" }).collect();
        s.push_str(&format!("min  {}\n", join(&self.costs)));
        s.push_str(&format!("sign {}\n", signs.join(" ")));
        for i in 0..self.num_rows() {
            s.push_str(&format!("     {} = {}\n", join(&self.dense_row(i)), self.rhs[i]));
        }
        s
    }
}

fn join(v: &[Rational]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

const DEGENERATE_LIMIT: usize = 64;

struct Tableau {
    /// m rows of `ncols + 1` entries; the last entry is the right-hand side.
    rows: Vec<Vec<Rational>>,
    /// Reduced-cost row; last entry is minus the objective value.
    z: Vec<Rational>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, q: usize) {
        let inv = self.rows[r][q].recip().expect("pivot element is nonzero");
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let support: Vec<usize> = (0..=self.ncols).filter(|&j| !pivot_row[j].is_zero()).collect();
        let eliminate = |row: &mut Vec<Rational>| {
            if row[q].is_zero() {
                return;
            }
            let f = row[q].clone();
            for &j in &support {
                let delta = &f * &pivot_row[j];
                row[j] -= &delta;
            }
        };
        for row in self.rows.iter_mut() {
            if !row.is_empty() {
                eliminate(row);
            }
        }
        eliminate(&mut self.z);
        self.rows[r] = pivot_row;
        self.basis[r] = q;
    }

    fn reset_costs(&mut self, costs: &[Rational]) {
        let mut z: Vec<Rational> = costs.to_vec();
        z.push(Rational::zero());
        for (row, &bv) in self.rows.iter().zip(&self.basis) {
            let cb = &costs[bv];
            if cb.is_zero() {
                continue;
            }
            for (zj, tj) in z.iter_mut().zip(row) {
                if !tj.is_zero() {
                    *zj -= &(cb * tj);
                }
            }
        }
        self.z = z;
    }

    /// Pivots over columns `< allowed` until optimal. Returns the unbounded
    /// entering column, if any.
    ///
    /// Entering columns follow the most negative reduced cost until
    /// `DEGENERATE_LIMIT` degenerate pivots have happened, then Bland's rule
    /// for good. Nondegenerate pivots strictly decrease the objective, so
    /// the first stage cannot cycle, and Bland's rule terminates.
    fn run(&mut self, allowed: usize) -> Option<usize> {
        let mut degenerate = 0;
        loop {
            let entering = if degenerate < DEGENERATE_LIMIT {
                let mut best: Option<usize> = None;
                for j in 0..allowed {
                    if self.z[j].is_negative() && best.is_none_or(|b| self.z[j] < self.z[b]) {
                        best = Some(j);
                    }
                }
                best
            } else {
                (0..allowed).find(|&j| self.z[j].is_negative())
            };
            let q = entering?;
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[q].is_positive() {
                    continue;
                }
                let ratio = &row[self.ncols] / &row[q];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((r, ratio)) => {
                    if ratio.is_zero() {
                        degenerate += 1;
                    }
                    self.pivot(r, q)
                }
                None => return Some(q),
            }
        }
    }
}

/// Solves the program. Free variables are split into differences of
/// nonnegative columns.
pub fn solve(lp: &LinearProgram) -> Result<LpOutcome> {
    lp.validate()?;
    let m = lp.num_rows();
    let n = lp.num_vars();

    // expanded column layout: original vars, then negative parts of free vars
    let mut neg_of: Vec<Option<usize>> = vec![None; n];
    let mut ncols = n;
    for (j, s) in lp.signs.iter().enumerate() {
        if *s == VarSign::Free {
            neg_of[j] = Some(ncols);
            ncols += 1;
        }
    }
    let mut costs = lp.costs.clone();
    for j in 0..n {
        if neg_of[j].is_some() {
            costs.push(-&lp.costs[j]);
        }
    }

    let flip: Vec<bool> = lp.rhs.iter().map(Rational::is_negative).collect();
    let mut dense: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = vec![Rational::zero(); ncols];
        for (v, c) in &lp.rows[i] {
            let c = if flip[i] { -c } else { c.clone() };
            if let Some(nj) = neg_of[*v] {
                row[nj] -= &c;
            }
            row[*v] += &c;
        }
        let b = if flip[i] { -&lp.rhs[i] } else { lp.rhs[i].clone() };
        row.push(b);
        dense.push(row);
    }

    // initial basis: reuse unit columns where possible, artificials elsewhere
    let mut init: Vec<Option<usize>> = vec![None; m];
    let mut used = vec![false; ncols];
    for j in 0..ncols {
        let mut hit = None;
        let mut unit = true;
        for (i, row) in dense.iter().enumerate() {
            if row[j].is_zero() {
                continue;
            }
            if hit.is_none() && row[j] == Rational::one() {
                hit = Some(i);
            } else {
                unit = false;
                break;
            }
        }
        if let (true, Some(i)) = (unit, hit) {
            if init[i].is_none() && !used[j] {
                init[i] = Some(j);
                used[j] = true;
            }
        }
    }
    let art_rows: Vec<usize> = (0..m).filter(|&i| init[i].is_none()).collect();
    let total = ncols + art_rows.len();
    let mut basis = vec![0; m];
    for (k, &i) in art_rows.iter().enumerate() {
        basis[i] = ncols + k;
    }
    for i in 0..m {
        if let Some(j) = init[i] {
            basis[i] = j;
        }
    }
    let init_col: Vec<usize> = basis.clone();
    let rows: Vec<Vec<Rational>> = dense
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            let b = row.pop().expect("rhs present");
            for &ai in &art_rows {
                row.push(if ai == i { Rational::one() } else { Rational::zero() });
            }
            row.push(b);
            row
        })
        .collect();
    let mut t = Tableau { rows, z: Vec::new(), basis, ncols: total };

    // dual of the sign-normalized system, read off the reduced costs of the
    // initial basis columns: y'_i = c_init - z_init
    let dual_from = |t: &Tableau, cost: &[Rational]| -> RationalVector {
        (0..m)
            .map(|i| {
                let y = &cost[init_col[i]] - &t.z[init_col[i]];
                if flip[i] {
                    -y
                } else {
                    y
                }
            })
            .collect()
    };

    if !art_rows.is_empty() {
        let mut phase1 = vec![Rational::zero(); total];
        for c in phase1.iter_mut().skip(ncols) {
            *c = Rational::one();
        }
        t.reset_costs(&phase1);
        let unbounded = t.run(total);
        debug_assert!(unbounded.is_none(), "phase one is bounded below by zero");
        if t.z[total].is_negative() {
            return Ok(LpOutcome::Infeasible { farkas: dual_from(&t, &phase1) });
        }
        // drive zero-level artificials out of the basis where possible
        for i in 0..m {
            if t.basis[i] < ncols {
                continue;
            }
            if let Some(q) = (0..ncols).find(|&j| !t.rows[i][j].is_zero()) {
                t.pivot(i, q);
            }
        }
    }

    let mut phase2 = costs.clone();
    phase2.resize(total, Rational::zero());
    t.reset_costs(&phase2);
    if let Some(q) = t.run(ncols) {
        let mut d = vec![Rational::zero(); ncols];
        d[q] = Rational::one();
        for (row, &bv) in t.rows.iter().zip(&t.basis) {
            if bv < ncols {
                d[bv] = -&row[q];
            }
        }
        return Ok(LpOutcome::Unbounded { ray: collapse(&d, &neg_of, n) });
    }

    let mut x = vec![Rational::zero(); ncols];
    for (row, &bv) in t.rows.iter().zip(&t.basis) {
        if bv < ncols {
            x[bv] = row[total].clone();
        }
    }
    let primal = collapse(&x, &neg_of, n);
    let value = primal.iter().zip(&lp.costs).map(|(a, b)| a * b).sum();
    Ok(LpOutcome::Optimal(OptimalSolution { primal, dual: dual_from(&t, &phase2), value }))
}

fn collapse(x: &[Rational], neg_of: &[Option<usize>], n: usize) -> RationalVector {
    (0..n)
        .map(|j| match neg_of[j] {
            Some(nj) => &x[j] - &x[nj],
            None => x[j].clone(),
        })
        .collect()
}

/// Independently rechecks an optimal outcome: primal feasibility, dual
/// feasibility, complementary slackness and strong duality.
pub fn verify_outcome(lp: &LinearProgram, sol: &OptimalSolution) -> bool {
    let n = lp.num_vars();
    if sol.primal.dim() != n || sol.dual.dim() != lp.num_rows() {
        return false;
    }
    if lp.apply(&sol.primal).as_slice() != lp.rhs() {
        return false;
    }
    let aty = lp.apply_transpose(&sol.dual);
    for j in 0..n {
        let reduced = &lp.costs[j] - &aty[j];
        match lp.signs[j] {
            VarSign::NonNegative => {
                if sol.primal[j].is_negative() || reduced.is_negative() {
                    return false;
                }
                if !(&sol.primal[j] * &reduced).is_zero() {
                    return false;
                }
            }
            VarSign::Free => {
                if !reduced.is_zero() {
                    return false;
                }
            }
        }
    }
    let cx: Rational = sol.primal.iter().zip(&lp.costs).map(|(a, b)| a * b).sum();
    let by: Rational = sol.dual.iter().zip(&lp.rhs).map(|(a, b)| a * b).sum();
    cx == by && cx == sol.value
}

/// Checks a Farkas infeasibility certificate.
pub fn verify_farkas(lp: &LinearProgram, y: &RationalVector) -> bool {
    if y.dim() != lp.num_rows() {
        return false;
    }
    let aty = lp.apply_transpose(y);
    let cols_ok = aty.iter().zip(&lp.signs).all(|(v, s)| match s {
        VarSign::NonNegative => !v.is_positive(),
        VarSign::Free => v.is_zero(),
    });
    let by: Rational = y.iter().zip(&lp.rhs).map(|(a, b)| a * b).sum();
    cols_ok && by.is_positive()
}

/// Checks an unboundedness ray.
pub fn verify_ray(lp: &LinearProgram, d: &RationalVector) -> bool {
    if d.dim() != lp.num_vars() {
        return false;
    }
    let signs_ok = d.iter().zip(&lp.signs).all(|(v, s)| *s == VarSign::Free || !v.is_negative());
    let cd: Rational = d.iter().zip(&lp.costs).map(|(a, b)| a * b).sum();
    signs_ok && lp.apply(d).iter().all(Rational::is_zero) && cd.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn r(n: i64) -> Rational {
        Rational::integer(n)
    }

    #[test]
    fn single_variable_optimum() {
        let lp =
            LinearProgram::from_dense(vec![r(1)], vec![vec![r(1)]], vec![r(1)], vec![VarSign::NonNegative]).unwrap();
        let out = lp.solve().unwrap();
        let sol = out.optimal().expect("optimal");
        assert_eq!(sol.primal, RationalVector::from_ints(&[1]));
        assert_eq!(sol.value, r(1));
        assert!(verify_outcome(&lp, sol));
    }

    #[test]
    fn negative_rhs_is_infeasible() {
        let lp =
            LinearProgram::from_dense(vec![r(0)], vec![vec![r(1)]], vec![r(-1)], vec![VarSign::NonNegative]).unwrap();
        match lp.solve().unwrap() {
            LpOutcome::Infeasible { farkas } => assert!(verify_farkas(&lp, &farkas)),
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn unbounded_direction() {
        let lp = LinearProgram::from_dense(
            vec![r(-1), r(0)],
            vec![vec![r(1), r(-1)]],
            vec![r(0)],
            vec![VarSign::NonNegative; 2],
        )
        .unwrap();
        match lp.solve().unwrap() {
            LpOutcome::Unbounded { ray } => assert!(verify_ray(&lp, &ray)),
            other => panic!("expected unbounded, got {other:?}"),
        }
    }

    #[test]
    fn perturbations_are_detected() {
        // min x + 2y s.t. x + y = 3, x - y = 1/2 ... with free y
        let lp = LinearProgram::from_dense(
            vec![r(1), r(2), r(0)],
            vec![vec![r(1), r(1), r(0)], vec![r(1), r(0), r(1)]],
            vec![r(3), rat(5, 2)],
            vec![VarSign::NonNegative, VarSign::Free, VarSign::NonNegative],
        )
        .unwrap();
        let sol = lp.solve().unwrap().into_optimal().unwrap();
        assert!(verify_outcome(&lp, &sol));

        let mut bumped = sol.clone();
        let mut coords = bumped.primal.clone().into_coords();
        coords[0] += &r(1);
        bumped.primal = coords.into();
        assert!(!verify_outcome(&lp, &bumped));

        let mut wrong_value = sol.clone();
        wrong_value.value += &rat(1, 7);
        assert!(!verify_outcome(&lp, &wrong_value));
    }

    #[test]
    fn free_variables_and_inequalities() {
        // min x s.t. x >= -5 (x free) -> -5
        let mut lp = LinearProgram::new();
        let x = lp.add_var(VarSign::Free, r(1));
        lp.add_ge(vec![(x, r(1))], r(-5));
        let sol = lp.solve().unwrap().into_optimal().unwrap();
        assert_eq!(sol.value, r(-5));
        assert!(verify_outcome(&lp, &sol));
    }

    #[test]
    fn redundant_rows_keep_valid_duals() {
        // x + y = 1 twice, min x - y
        let lp = LinearProgram::from_dense(
            vec![r(1), r(-1)],
            vec![vec![r(1), r(1)], vec![r(2), r(2)]],
            vec![r(1), r(2)],
            vec![VarSign::NonNegative; 2],
        )
        .unwrap();
        let sol = lp.solve().unwrap().into_optimal().unwrap();
        assert_eq!(sol.value, r(-1));
        assert!(verify_outcome(&lp, &sol));
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's example: cycles under the textbook largest-coefficient rule.
        let c = vec![rat(-3, 4), r(150), rat(-1, 50), r(6), r(0), r(0), r(0)];
        let a = vec![
            vec![rat(1, 4), r(-60), rat(-1, 25), r(9), r(1), r(0), r(0)],
            vec![rat(1, 2), r(-90), rat(-1, 50), r(3), r(0), r(1), r(0)],
            vec![r(0), r(0), r(1), r(0), r(0), r(0), r(1)],
        ];
        let lp = LinearProgram::from_dense(c, a, vec![r(0), r(0), r(1)], vec![VarSign::NonNegative; 7]).unwrap();
        let sol = lp.solve().unwrap().into_optimal().unwrap();
        assert_eq!(sol.value, rat(-1, 20));
        assert!(verify_outcome(&lp, &sol));
    }

    #[test]
    fn malformed_programs_are_rejected() {
        assert!(LinearProgram::from_dense(vec![r(1)], vec![vec![r(1), r(2)]], vec![r(0)], vec![VarSign::Free]).is_err());
        let mut lp = LinearProgram::new();
        lp.add_eq(vec![(3, r(1))], r(0));
        assert!(matches!(lp.solve(), Err(Error::MalformedProgram(_))));
    }

    #[test]
    fn dump_mentions_every_row() {
        let mut lp = LinearProgram::new();
        let x = lp.add_var(VarSign::Free, r(1));
        lp.add_eq(vec![(x, rat(1, 2))], r(3));
        let text = lp.dump();
        assert!(text.contains("free"));
        assert!(text.contains("1/2 = 3"));
    }
}
