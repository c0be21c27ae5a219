//! Dense two-phase simplex for standard-form programs
//!
//!     minimize c'x   subject to   Ax = b,  x >= 0.
//!
//! Everything downstream (gauge norms, hull membership, slice distances,
//! face maxima, section dual norms) reduces to this form. Bland's rule
//! keeps the method cycle-free; sizes here are tiny (m <= 9, n in the
//! low hundreds), so reduced costs are recomputed from the tableau every
//! iteration rather than updated incrementally.

use crate::error::{Error, Result};
use crate::linalg::Mat;

/// Pivot eligibility threshold for all exact polytope computations.
pub const PIVOT_TOL: f64 = 1e-12;
/// Phase-1 residual above which the program is declared infeasible.
const FEAS_TOL: f64 = 1e-9;
const MAX_ITERS: usize = 100_000;

#[derive(Debug, Clone)]
pub struct LpSolution {
    pub x: Vec<f64>,
    pub objective: f64,
}

struct Tableau {
    t: Vec<Vec<f64>>, // m rows of n_total + 1 (rhs last)
    basis: Vec<usize>,
    n_struct: usize,
    n_total: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> f64 {
        self.t[i][self.n_total]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let piv = self.t[row][col];
        for v in self.t[row].iter_mut() {
            *v /= piv;
        }
        for i in 0..self.t.len() {
            if i == row {
                continue;
            }
            let f = self.t[i][col];
            if f.abs() <= PIVOT_TOL {
                continue;
            }
            for j in 0..=self.n_total {
                let delta = f * self.t[row][j];
                self.t[i][j] -= delta;
            }
            self.t[i][col] = 0.0;
        }
        self.basis[row] = col;
    }

    /// One simplex phase: minimize `cost` over columns `0..limit`.
    fn run(&mut self, cost: &[f64], limit: usize) -> Result<()> {
        for _ in 0..MAX_ITERS {
            let m = self.t.len();
            // reduced costs r_j = c_j - c_B' B^-1 A_j, recomputed in full
            let mut entering = None;
            'cols: for j in 0..limit {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut r = cost[j];
                for i in 0..m {
                    let cb = cost[self.basis[i]];
                    if cb != 0.0 {
                        r -= cb * self.t[i][j];
                    }
                }
                if r < -FEAS_TOL {
                    entering = Some(j);
                    break 'cols; // Bland: smallest eligible index
                }
            }
            let Some(e) = entering else {
                return Ok(());
            };
            let mut leave: Option<(usize, f64)> = None;
            for i in 0..m {
                let a = self.t[i][e];
                if a > PIVOT_TOL {
                    let ratio = self.rhs(i) / a;
                    let better = match leave {
                        None => true,
                        Some((li, lr)) => {
                            ratio < lr - PIVOT_TOL
                                || (ratio <= lr + PIVOT_TOL && self.basis[i] < self.basis[li])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((l, _)) = leave else {
                return Err(Error::LpUnbounded);
            };
            self.pivot(l, e);
        }
        Err(Error::ConvergenceFailure {
            iterations: MAX_ITERS,
        })
    }

    fn objective(&self, cost: &[f64]) -> f64 {
        (0..self.t.len())
            .map(|i| cost[self.basis[i]] * self.rhs(i))
            .sum()
    }
}

/// Solve `min c'x : Ax = b, x >= 0`.
pub fn solve(c: &[f64], a: &Mat, b: &[f64]) -> Result<LpSolution> {
    let m = a.rows;
    let n = a.cols;
    assert_eq!(c.len(), n);
    assert_eq!(b.len(), m);

    let n_total = n + m;
    let mut t = Vec::with_capacity(m);
    for i in 0..m {
        let flip = if b[i] < 0.0 { -1.0 } else { 1.0 };
        let mut row = Vec::with_capacity(n_total + 1);
        for j in 0..n {
            row.push(flip * a[(i, j)]);
        }
        for k in 0..m {
            row.push(if k == i { 1.0 } else { 0.0 });
        }
        row.push(flip * b[i]);
        t.push(row);
    }
    let mut tab = Tableau {
        t,
        basis: (n..n_total).collect(),
        n_struct: n,
        n_total,
    };

    // Phase 1: minimize the sum of artificials.
    let mut phase1_cost = vec![0.0; n_total];
    for cj in phase1_cost.iter_mut().skip(n) {
        *cj = 1.0;
    }
    tab.run(&phase1_cost, n_total)?;
    let residual = tab.objective(&phase1_cost);
    if residual > FEAS_TOL {
        return Err(Error::LpInfeasible { residual });
    }
    // Drive artificials out of the basis where a structural pivot exists;
    // rows that admit none are redundant and stay put at level zero.
    for i in 0..m {
        if tab.basis[i] >= n {
            if let Some(j) = (0..n)
                .find(|&j| !tab.basis.contains(&j) && tab.t[i][j].abs() > 1e-9)
            {
                tab.pivot(i, j);
            }
        }
    }

    // Phase 2: artificial columns are barred from entering.
    let mut phase2_cost = vec![0.0; n_total];
    phase2_cost[..n].copy_from_slice(c);
    tab.run(&phase2_cost, tab.n_struct)?;

    let mut x = vec![0.0; n];
    for i in 0..m {
        if tab.basis[i] < n {
            x[tab.basis[i]] = tab.rhs(i);
        }
    }
    Ok(LpSolution {
        objective: tab.objective(&phase2_cost),
        x,
    })
}

/// Feasibility of `Ax = b, x >= 0` (phase 1 only).
pub fn feasible(a: &Mat, b: &[f64]) -> Result<bool> {
    match solve(&vec![0.0; a.cols], a, b) {
        Ok(_) => Ok(true),
        Err(Error::LpInfeasible { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Gauge of `x` with respect to the generators: min sum(c) with
/// sum c_i g_i = x, c >= 0. The generator list must positively span.
pub fn gauge(generators: &[Vec<f64>], x: &[f64]) -> Result<LpSolution> {
    let dim = x.len();
    let mut a = Mat::zeros(dim, generators.len());
    for (j, g) in generators.iter().enumerate() {
        for i in 0..dim {
            a[(i, j)] = g[i];
        }
    }
    solve(&vec![1.0; generators.len()], &a, x)
}

/// Membership of `x` in the convex hull of `points`.
pub fn in_convex_hull(points: &[Vec<f64>], x: &[f64]) -> Result<bool> {
    let dim = x.len();
    let mut a = Mat::zeros(dim + 1, points.len());
    for (j, p) in points.iter().enumerate() {
        for i in 0..dim {
            a[(i, j)] = p[i];
        }
        a[(dim, j)] = 1.0;
    }
    let mut b = x.to_vec();
    b.push(1.0);
    feasible(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[Vec<f64>]) -> Mat {
        Mat::from_rows(rows).unwrap()
    }

    #[test]
    fn basic_minimum() {
        // min x + y  s.t.  x + 2y = 4, x,y >= 0  -> y = 2
        let sol = solve(&[1.0, 1.0], &mat(&[vec![1.0, 2.0]]), &[4.0]).unwrap();
        assert!((sol.objective - 2.0).abs() < 1e-9);
        assert!((sol.x[1] - 2.0).abs() < 1e-9);
    }

    #[test]
    fn negative_rhs_is_flipped() {
        // x - y = -3 with min x + y -> x = 0, y = 3
        let sol = solve(&[1.0, 1.0], &mat(&[vec![1.0, -1.0]]), &[-3.0]).unwrap();
        assert!((sol.objective - 3.0).abs() < 1e-9);
    }

    #[test]
    fn detects_infeasible() {
        // x + y = -1 impossible for x,y >= 0... after flip: -x - y = 1
        let r = solve(&[0.0, 0.0], &mat(&[vec![1.0, 1.0]]), &[-1.0]);
        assert!(matches!(r, Err(Error::LpInfeasible { .. })));
    }

    #[test]
    fn detects_unbounded() {
        // min -x s.t. x - y = 0
        let r = solve(&[-1.0, 0.0], &mat(&[vec![1.0, -1.0]]), &[0.0]);
        assert!(matches!(r, Err(Error::LpUnbounded)));
    }

    #[test]
    fn gauge_of_cross_polytope() {
        let gens = vec![
            vec![1.0, 0.0],
            vec![-1.0, 0.0],
            vec![0.0, 1.0],
            vec![0.0, -1.0],
        ];
        let sol = gauge(&gens, &[0.5, -1.0]).unwrap();
        assert!((sol.objective - 1.5).abs() < 1e-9);
        assert!((gauge(&gens, &[0.0, 0.0]).unwrap().objective).abs() < 1e-12);
    }

    #[test]
    fn hull_membership() {
        let pts = vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]];
        assert!(in_convex_hull(&pts, &[0.3, 0.3]).unwrap());
        assert!(!in_convex_hull(&pts, &[0.8, 0.8]).unwrap());
        // boundary point
        assert!(in_convex_hull(&pts, &[0.5, 0.5]).unwrap());
    }

    #[test]
    fn degenerate_redundant_rows() {
        // duplicated constraint rows
        let a = mat(&[vec![1.0, 1.0], vec![1.0, 1.0]]);
        let sol = solve(&[1.0, 2.0], &a, &[2.0, 2.0]).unwrap();
        assert!((sol.objective - 2.0).abs() < 1e-9);
    }
}
