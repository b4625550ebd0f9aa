//! Exact rational polyhedral cones in H-representation: membership, extreme
//! rays by the double description method, and extremality verification.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::num::{dot, dot_int, primitive, primitive_int, rank};
use crate::Result;

/// A ray direction, stored as the unique primitive integer vector obtained by
/// positive scaling (entries with gcd 1; for the cones in this crate the
/// first nonzero entry is positive).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ray {
    coords: Vec<BigInt>,
}

impl Ray {
    pub fn new(direction: &[BigRational]) -> Result<Self> {
        let coords = primitive(direction)
            .ok_or_else(|| Error::InvalidInput("zero vector is not a ray".into()))?;
        Ok(Ray { coords })
    }

    pub fn from_integers(direction: &[BigInt]) -> Result<Self> {
        let coords = primitive_int(direction)
            .ok_or_else(|| Error::InvalidInput("zero vector is not a ray".into()))?;
        Ok(Ray { coords })
    }

    pub fn from_i64(direction: &[i64]) -> Result<Self> {
        let v: Vec<BigInt> = direction.iter().map(|&x| BigInt::from(x)).collect();
        Ray::from_integers(&v)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn to_rationals(&self) -> Vec<BigRational> {
        self.coords
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect()
    }

    /// Space-separated integer rendering, e.g. `1 2 2 3 4 5`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self.coords.iter().map(BigInt::to_string).collect();
        parts.join(" ")
    }
}

/// A rational polyhedral cone `{ y : a_r . y >= 0 for every row a_r }`.
///
/// Rows are canonicalized to primitive integer form (positive scaling only,
/// so the inequality is unchanged); exact duplicates are dropped and all-zero
/// rows rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HCone {
    dim: usize,
    rows: Vec<Vec<BigRational>>,
}

impl HCone {
    pub fn new(dim: usize, rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let mut canonical: Vec<Vec<BigRational>> = Vec::new();
        for row in &rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: row.len() });
            }
            let prim = primitive(row)
                .ok_or_else(|| Error::InvalidInput("all-zero cone row".into()))?;
            let as_rat: Vec<BigRational> =
                prim.into_iter().map(BigRational::from_integer).collect();
            if !canonical.contains(&as_rat) {
                canonical.push(as_rat);
            }
        }
        Ok(HCone { dim, rows: canonical })
    }

    pub fn from_i64_rows(dim: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| crate::num::rat(x)).collect())
            .collect();
        HCone::new(dim, rows)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    /// Exact membership: every row evaluates nonnegatively.
    pub fn contains(&self, point: &[BigRational]) -> bool {
        assert_eq!(point.len(), self.dim, "point/cone dimension mismatch");
        self.rows.iter().all(|r| !dot(r, point).is_negative())
    }

    pub fn contains_ray(&self, ray: &Ray) -> bool {
        assert_eq!(ray.dim(), self.dim, "ray/cone dimension mismatch");
        self.rows.iter().all(|r| !dot_int(r, ray.coords()).is_negative())
    }

    /// Indices of rows tight (exactly zero) at the given ray.
    pub fn tight_rows(&self, ray: &Ray) -> Vec<usize> {
        (0..self.rows.len())
            .filter(|&i| dot_int(&self.rows[i], ray.coords()).is_zero())
            .collect()
    }

    /// True iff `ray` lies in the cone and its tight rows have rank
    /// `dim - 1`, i.e. the ray spans a one-dimensional face.
    pub fn verify_extreme(&self, ray: &Ray) -> bool {
        if !self.contains_ray(ray) {
            return false;
        }
        let tight: Vec<Vec<BigRational>> = self
            .tight_rows(ray)
            .into_iter()
            .map(|i| self.rows[i].clone())
            .collect();
        rank(&tight) == self.dim - 1
    }

    /// Extreme rays by the double description method, as a sorted, normalized,
    /// minimal generating set. Rows are processed in a canonical order
    /// (ascending nonzero count, then lexicographic) so the result does not
    /// depend on input row order.
    ///
    /// Errors with a lineality basis if the cone is not pointed.
    pub fn extreme_rays(&self) -> Result<Vec<Ray>> {
        let dim = self.dim;
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| {
            let nz = self.rows[i].iter().filter(|x| !x.is_zero()).count();
            (nz, self.rows[i].clone())
        });

        // Start from all of R^dim: lineality basis = identity, no rays.
        let mut lineality: Vec<Vec<BigRational>> = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { crate::num::rat(1) } else { crate::num::rat(0) })
                    .collect()
            })
            .collect();
        struct DdRay {
            dir: Vec<BigRational>,
            tight: u64, // over processed steps
        }
        let mut rays: Vec<DdRay> = Vec::new();
        assert!(self.rows.len() <= 64, "double description limited to 64 rows");

        for (step, &ri) in order.iter().enumerate() {
            let a = &self.rows[ri];
            let bit = 1u64 << step;
            if let Some(pos) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
                // Split the lineality direction crossing this halfspace: keep
                // the nonnegative side as a ray, project everything else onto
                // the hyperplane.
                let mut l0 = lineality.swap_remove(pos);
                let mut al0 = dot(a, &l0);
                if al0.is_negative() {
                    for x in &mut l0 {
                        *x = -x.clone();
                    }
                    al0 = -al0;
                }
                for l in &mut lineality {
                    let f = dot(a, l) / &al0;
                    if !f.is_zero() {
                        for (x, y) in l.iter_mut().zip(&l0) {
                            *x -= &f * y;
                        }
                    }
                }
                for r in &mut rays {
                    let f = dot(a, &r.dir) / &al0;
                    if !f.is_zero() {
                        for (x, y) in r.dir.iter_mut().zip(&l0) {
                            *x -= &f * y;
                        }
                    }
                    r.tight |= bit;
                }
                // l0 is tight at every previously processed row but not here.
                rays.push(DdRay { dir: l0, tight: bit - 1 });
            } else {
                let vals: Vec<BigRational> = rays.iter().map(|r| dot(a, &r.dir)).collect();
                let mut next: Vec<DdRay> = Vec::new();
                let pos_idx: Vec<usize> =
                    (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
                let neg_idx: Vec<usize> =
                    (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
                let target_rank = dim - lineality.len() - 2;
                for (i, r) in rays.iter().enumerate() {
                    if !vals[i].is_negative() {
                        next.push(DdRay {
                            dir: r.dir.clone(),
                            tight: if vals[i].is_zero() { r.tight | bit } else { r.tight },
                        });
                    }
                }
                for &p in &pos_idx {
                    for &q in &neg_idx {
                        let common = rays[p].tight & rays[q].tight;
                        let common_rows: Vec<Vec<BigRational>> = (0..step)
                            .filter(|s| common >> s & 1 == 1)
                            .map(|s| self.rows[order[s]].clone())
                            .collect();
                        if rank(&common_rows) != target_rank {
                            continue;
                        }
                        // a.(new) = 0 and new is a positive combination.
                        let (vp, vq) = (&vals[p], &vals[q]);
                        let dir: Vec<BigRational> = rays[p]
                            .dir
                            .iter()
                            .zip(&rays[q].dir)
                            .map(|(xp, xq)| vp * xq - vq * xp)
                            .collect();
                        let dir: Vec<BigRational> = primitive(&dir)
                            .expect("combined ray is nonzero")
                            .into_iter()
                            .map(BigRational::from_integer)
                            .collect();
                        next.push(DdRay { dir, tight: common | bit });
                    }
                }
                rays = next;
            }
        }

        if !lineality.is_empty() {
            return Err(Error::NotPointed { lineality });
        }
        let mut out: Vec<Ray> = rays
            .iter()
            .map(|r| Ray::new(&r.dir).expect("double description rays are nonzero"))
            .collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Serialization with `dim` and `rows` headers followed by one primitive
    /// integer row per line.
    pub fn render(&self) -> String {
        let mut s = format!("dim {}\nrows {}\n", self.dim, self.rows.len());
        for row in &self.rows {
            let ints = primitive(row).expect("rows are nonzero");
            let parts: Vec<String> = ints.iter().map(BigInt::to_string).collect();
            s.push_str(&parts.join(" "));
            s.push('\n');
        }
        s
    }
}
