//! Exact-rational simplex: dual-cone membership with multiplier or Farkas
//! certificates, and a small general-purpose two-phase solver.
//!
//! Pivoting uses Bland's rule (smallest eligible index, ties in the ratio
//! test broken by smallest basis variable), which guarantees termination.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cone::{HCone, Ray};
use crate::error::Error;
use crate::num::dot;
use crate::Result;

/// Outcome of asking whether a functional lies in the dual cone of an
/// H-represented cone.
#[derive(Clone, Debug)]
pub enum DualWitness {
    /// `functional = sum multipliers[r] * row_r` with all multipliers >= 0;
    /// indexed by the cone's rows.
    Multipliers(Vec<BigRational>),
    /// A member of the cone on which the functional is strictly negative.
    FarkasRay(Ray),
}

/// Decides whether `functional . y >= 0` holds on all of `cone`, i.e. whether
/// the functional is a nonnegative combination of the defining rows.
///
/// Returns exact multipliers when it is, and otherwise a Farkas ray: a point
/// of the cone where the functional is negative. Both certificates re-verify
/// by plain arithmetic.
pub fn dual_membership(cone: &HCone, functional: &[BigRational]) -> Result<DualWitness> {
    let dim = cone.dim();
    if functional.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, got: functional.len() });
    }
    let rows = cone.rows();
    let nrows = rows.len();

    if functional.iter().all(Zero::is_zero) {
        return Ok(DualWitness::Multipliers(vec![BigRational::zero(); nrows]));
    }
    // Fast path: a positive multiple of a single row.
    for (r, row) in rows.iter().enumerate() {
        if let Some(t) = positive_multiple_of(functional, row) {
            let mut mult = vec![BigRational::zero(); nrows];
            mult[r] = t;
            return Ok(DualWitness::Multipliers(mult));
        }
    }

    // Phase-1 feasibility of { lambda >= 0 : sum_r lambda_r row_r = functional }.
    // Equations indexed by coordinate i, scaled so the right-hand side is
    // nonnegative; artificial columns form the identity.
    let sigma: Vec<i32> = functional
        .iter()
        .map(|c| if c.is_negative() { -1 } else { 1 })
        .collect();
    let mut t = Tableau::new(dim, nrows + dim);
    for i in 0..dim {
        for (j, row) in rows.iter().enumerate() {
            t.a[i][j] = if sigma[i] < 0 { -row[i].clone() } else { row[i].clone() };
        }
        t.a[i][nrows + i] = BigRational::one();
        t.rhs[i] = if sigma[i] < 0 { -functional[i].clone() } else { functional[i].clone() };
        t.basis[i] = nrows + i;
    }
    let mut costs = vec![BigRational::zero(); nrows + dim];
    for c in costs.iter_mut().skip(nrows) {
        *c = BigRational::one();
    }
    let end = t.optimize(&costs, nrows + dim);
    debug_assert!(matches!(end, SimplexEnd::Optimal));
    let value = t.objective_value(&costs);

    if value.is_zero() {
        let mut mult = vec![BigRational::zero(); nrows];
        for (r, &b) in t.basis.iter().enumerate() {
            if b < nrows {
                mult[b] = t.rhs[r].clone();
            }
        }
        debug_assert!(verify_multipliers(cone, &mult, functional));
        return Ok(DualWitness::Multipliers(mult));
    }

    // Infeasible: the simplex multipliers give y with y . row_j <= 0 for all
    // rows and y . functional > 0; -y is the Farkas ray.
    let mut farkas = Vec::with_capacity(dim);
    for i in 0..dim {
        let rc = t.reduced_cost(&costs, nrows + i);
        let yprime = BigRational::one() - rc;
        let yi = if sigma[i] < 0 { -yprime } else { yprime };
        farkas.push(-yi);
    }
    let ray = Ray::new(&farkas)?;
    debug_assert!(cone.contains_ray(&ray));
    debug_assert!(crate::num::dot_int(functional, ray.coords()).is_negative());
    Ok(DualWitness::FarkasRay(ray))
}

/// Exact re-verification of a multiplier certificate.
pub fn verify_multipliers(
    cone: &HCone,
    multipliers: &[BigRational],
    functional: &[BigRational],
) -> bool {
    if multipliers.len() != cone.rows().len() || functional.len() != cone.dim() {
        return false;
    }
    if multipliers.iter().any(Signed::is_negative) {
        return false;
    }
    let mut acc = vec![BigRational::zero(); cone.dim()];
    for (l, row) in multipliers.iter().zip(cone.rows()) {
        if l.is_zero() {
            continue;
        }
        for (x, y) in acc.iter_mut().zip(row) {
            *x += l * y;
        }
    }
    acc == functional
}

/// Exact re-verification of a Farkas certificate.
pub fn verify_farkas(cone: &HCone, ray: &Ray, functional: &[BigRational]) -> bool {
    ray.dim() == cone.dim()
        && cone.contains_ray(ray)
        && crate::num::dot_int(functional, ray.coords()).is_negative()
}

fn positive_multiple_of(c: &[BigRational], row: &[BigRational]) -> Option<BigRational> {
    let mut t: Option<BigRational> = None;
    for (ci, ri) in c.iter().zip(row) {
        match (ci.is_zero(), ri.is_zero()) {
            (true, true) => {}
            (false, false) => {
                let f = ci / ri;
                if f.is_negative() || matches!(&t, Some(prev) if *prev != f) {
                    return None;
                }
                t = Some(f);
            }
            _ => return None,
        }
    }
    t.filter(|f| f.is_positive())
}

/// Constraint relation for the general solver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Ge,
    Le,
}

/// One constraint `coeffs . x REL rhs` over variables `x >= 0`.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub relation: Relation,
    pub rhs: BigRational,
}

/// Result of minimizing a linear objective over `x >= 0` plus constraints.
#[derive(Clone, Debug)]
pub enum LpOutcome {
    Optimal { value: BigRational, solution: Vec<BigRational> },
    Infeasible,
    Unbounded,
}

/// Minimizes `objective . x` subject to the constraints and `x >= 0`, by
/// exact two-phase simplex.
pub fn solve_min(objective: &[BigRational], constraints: &[Constraint]) -> Result<LpOutcome> {
    let nvars = objective.len();
    for c in constraints {
        if c.coeffs.len() != nvars {
            return Err(Error::DimensionMismatch { expected: nvars, got: c.coeffs.len() });
        }
    }
    let nrows = constraints.len();
    let n_slack = constraints
        .iter()
        .filter(|c| c.relation != Relation::Eq)
        .count();
    let ncols = nvars + n_slack + nrows; // slacks then artificials
    let mut t = Tableau::new(nrows, ncols);
    let mut slack_at = nvars;
    for (i, c) in constraints.iter().enumerate() {
        let flip = c.rhs.is_negative();
        let sign = |x: &BigRational| if flip { -x.clone() } else { x.clone() };
        for j in 0..nvars {
            t.a[i][j] = sign(&c.coeffs[j]);
        }
        t.rhs[i] = sign(&c.rhs);
        let rel = match (c.relation, flip) {
            (Relation::Eq, _) => Relation::Eq,
            (Relation::Ge, false) | (Relation::Le, true) => Relation::Ge,
            (Relation::Le, false) | (Relation::Ge, true) => Relation::Le,
        };
        match rel {
            Relation::Le => {
                t.a[i][slack_at] = BigRational::one();
                t.basis[i] = slack_at;
                slack_at += 1;
            }
            Relation::Ge => {
                t.a[i][slack_at] = -BigRational::one();
                slack_at += 1;
                t.a[i][nvars + n_slack + i] = BigRational::one();
                t.basis[i] = nvars + n_slack + i;
            }
            Relation::Eq => {
                t.a[i][nvars + n_slack + i] = BigRational::one();
                t.basis[i] = nvars + n_slack + i;
            }
        }
    }
    // Rows whose basis slot is still an artificial get phase-1 cost 1.
    let art_start = nvars + n_slack;
    let mut phase1 = vec![BigRational::zero(); ncols];
    for c in phase1.iter_mut().skip(art_start) {
        *c = BigRational::one();
    }
    let end = t.optimize(&phase1, ncols);
    debug_assert!(matches!(end, SimplexEnd::Optimal));
    if !t.objective_value(&phase1).is_zero() {
        return Ok(LpOutcome::Infeasible);
    }
    // Drive artificials out of the basis; drop rows that turn out redundant.
    let mut r = 0;
    while r < t.nrows {
        if t.basis[r] >= art_start {
            if let Some(j) = (0..art_start).find(|&j| !t.a[r][j].is_zero()) {
                t.pivot(r, j);
            } else {
                t.drop_row(r);
                continue;
            }
        }
        r += 1;
    }

    let mut phase2 = vec![BigRational::zero(); art_start];
    phase2[..nvars].clone_from_slice(objective);
    match t.optimize(&phase2, art_start) {
        SimplexEnd::Unbounded => Ok(LpOutcome::Unbounded),
        SimplexEnd::Optimal => {
            let mut solution = vec![BigRational::zero(); nvars];
            for (row, &b) in t.basis.iter().enumerate() {
                if b < nvars {
                    solution[b] = t.rhs[row].clone();
                }
            }
            Ok(LpOutcome::Optimal { value: dot(objective, &solution), solution })
        }
    }
}

enum SimplexEnd {
    Optimal,
    Unbounded,
}

struct Tableau {
    nrows: usize,
    a: Vec<Vec<BigRational>>,
    rhs: Vec<BigRational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn new(nrows: usize, ncols: usize) -> Self {
        Tableau {
            nrows,
            a: vec![vec![BigRational::zero(); ncols]; nrows],
            rhs: vec![BigRational::zero(); nrows],
            basis: vec![usize::MAX; nrows],
        }
    }

    fn objective_value(&self, costs: &[BigRational]) -> BigRational {
        let mut v = BigRational::zero();
        for (r, &b) in self.basis.iter().enumerate() {
            if !costs[b].is_zero() {
                v += &costs[b] * &self.rhs[r];
            }
        }
        v
    }

    fn reduced_cost(&self, costs: &[BigRational], j: usize) -> BigRational {
        let mut z = BigRational::zero();
        for (r, &b) in self.basis.iter().enumerate() {
            if !costs[b].is_zero() && !self.a[r][j].is_zero() {
                z += &costs[b] * &self.a[r][j];
            }
        }
        costs[j].clone() - z
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.a[row][col].clone();
        for x in self.a[row].iter_mut() {
            *x /= &p;
        }
        self.rhs[row] /= &p;
        for r in 0..self.nrows {
            if r == row || self.a[r][col].is_zero() {
                continue;
            }
            let f = self.a[r][col].clone();
            let (pivot_row, this_row) = if r < row {
                let (a, b) = self.a.split_at_mut(row);
                (&b[0], &mut a[r])
            } else {
                let (a, b) = self.a.split_at_mut(r);
                (&a[row], &mut b[0])
            };
            for (x, y) in this_row.iter_mut().zip(pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            let delta = &f * &self.rhs[row];
            self.rhs[r] -= delta;
        }
        self.basis[row] = col;
    }

    fn drop_row(&mut self, row: usize) {
        self.a.remove(row);
        self.rhs.remove(row);
        self.basis.remove(row);
        self.nrows -= 1;
    }

    /// Minimizes over columns `0..allowed` with Bland's rule.
    fn optimize(&mut self, costs: &[BigRational], allowed: usize) -> SimplexEnd {
        loop {
            let entering = (0..allowed)
                .find(|&j| !self.basis.contains(&j) && self.reduced_cost(costs, j).is_negative());
            let Some(j) = entering else {
                return SimplexEnd::Optimal;
            };
            let mut best: Option<(BigRational, usize, usize)> = None; // (ratio, basis var, row)
            for r in 0..self.nrows {
                if self.a[r][j].is_positive() {
                    let ratio = &self.rhs[r] / &self.a[r][j];
                    let key = (ratio, self.basis[r], r);
                    if best.as_ref().is_none_or(|b| (&key.0, key.1) < (&b.0, b.1)) {
                        best = Some(key);
                    }
                }
            }
            let Some((_, _, row)) = best else {
                return SimplexEnd::Unbounded;
            };
            self.pivot(row, j);
        }
    }
}
