//! Small exact-arithmetic helpers used throughout the crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `i64 -> BigInt`.
pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

/// `i64 -> BigRational`.
pub fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `p/q` as an exact rational. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Exact dot product of two rational vectors of equal length.
pub fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = BigRational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// Dot product of a rational vector with an integer vector.
pub fn dot_int(a: &[BigRational], b: &[BigInt]) -> BigRational {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = BigRational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * BigRational::from_integer(y.clone());
        }
    }
    acc
}

/// Scale a rational vector to the unique primitive integer vector pointing the
/// same way: entries integral with gcd 1, obtained by a positive scaling.
/// Returns `None` for the zero vector.
pub fn primitive(v: &[BigRational]) -> Option<Vec<BigInt>> {
    if v.iter().all(Zero::is_zero) {
        return None;
    }
    let mut denom_lcm = BigInt::one();
    for x in v {
        denom_lcm = denom_lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&denom_lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    Some(ints.iter().map(|x| x / &g).collect())
}

/// Primitive form of an integer vector (positive scaling, gcd 1).
pub fn primitive_int(v: &[BigInt]) -> Option<Vec<BigInt>> {
    if v.iter().all(Zero::is_zero) {
        return None;
    }
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
    }
    Some(v.iter().map(|x| x / &g).collect())
}

/// Rank of a set of rational row vectors, by Gaussian elimination.
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut mat: Vec<Vec<BigRational>> = rows.to_vec();
    let ncols = mat.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..mat.len()).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let pivot = mat[r][c].clone();
        for i in 0..mat.len() {
            if i != r && !mat[i][c].is_zero() {
                let f = &mat[i][c] / &pivot;
                for j in c..ncols {
                    let delta = &f * &mat[r][j];
                    mat[i][j] -= delta;
                }
            }
        }
        r += 1;
        if r == mat.len() {
            break;
        }
    }
    r
}

/// Least common multiple of the denominators of a rational slice (≥ 1).
pub fn denominator_lcm(xs: &[BigRational]) -> BigInt {
    let mut l = BigInt::one();
    for x in xs {
        l = l.lcm(x.denom());
    }
    l
}

/// Natural log of a positive big integer as `f64`, stable for values far
/// beyond the `f64` range. Diagnostics only.
pub fn ln_big(x: &BigInt) -> f64 {
    assert!(x.is_positive(), "ln of non-positive integer");
    let bits = x.bits();
    if bits <= 52 {
        return x.to_f64().unwrap().ln();
    }
    let shift = bits - 52;
    let top: BigInt = x >> shift;
    top.to_f64().unwrap().ln() + (shift as f64) * std::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_clears_denominators_and_gcd() {
        let v = vec![ratio(2, 3), ratio(-4, 3), rat(2)];
        assert_eq!(primitive(&v).unwrap(), vec![int(1), int(-2), int(3)]);
        assert_eq!(primitive(&[rat(0), rat(0)]), None);
    }

    #[test]
    fn rank_of_small_systems() {
        let rows = vec![
            vec![rat(1), rat(0), rat(1)],
            vec![rat(0), rat(1), rat(1)],
            vec![rat(1), rat(1), rat(2)],
        ];
        assert_eq!(rank(&rows), 2);
        assert_eq!(rank(&rows[..2]), 2);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn ln_big_matches_f64_and_scales() {
        let x = BigInt::from(123456789u64);
        assert!((ln_big(&x) - 123456789f64.ln()).abs() < 1e-12);
        let huge = BigInt::from(10u32).pow(400);
        assert!((ln_big(&huge) - 400.0 * 10f64.ln()).abs() < 1e-6);
    }
}
