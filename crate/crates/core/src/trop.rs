//! The explicit tropicalized profile cones and their extreme-ray families.
//!
//! `profile_cone(m)` builds the cone in `R^{m+1}` (coordinates `y_0..y_m`,
//! with `y_0` the log of the vertex count and `y_i` the log of the
//! almost-star count `hom(S_{2,1^{i-1}}; G)`) cut out by the row families
//!
//! ```text
//!   -y1 + y2 >= 0                 4 y1 - 3 y2 >= 0
//!   3 y1 - 3 y3 + y4 >= 0         y1 + 2 y_{m-1} - 2 y_m >= 0
//!   y0 + y_{m-1} - y_m >= 0       y0 - 2 y1 + y3 >= 0
//!   y_{i-1} - 2 y_i + y_{i+1} >= 0   (2 <= i <= m-1)
//!   m y_{m-1} - (m-1) y_m >= 0
//! ```
//!
//! Its extreme rays fall into fifteen closed-form families (`d1..d5`,
//! `s1..s4`, `r1..r6`); the `d` rays are realized by explicit graph families
//! and every `s`/`r` ray is a tropical sum (componentwise max) of conical
//! combinations of `d` rays. `star_cone(m)` is the analogous cone for plain
//! star patterns.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::cone::{HCone, Ray};
use crate::error::Error;
use crate::graph::FamilyDescriptor;
use crate::hom::{pow_big, ProfileVector};
use crate::num::int;
use crate::Result;

/// Which pattern family a cone's coordinates refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternBasis {
    /// `y_0 = S_0`, `y_i = S_{2,1^{i-1}}`; atoms render as `V`, `T{i-1}`.
    AlmostStars,
    /// `y_i = S_i` (star with `i` branches); atoms render as `V`, `S{i}`.
    Stars,
}

impl PatternBasis {
    pub fn atom(&self, coordinate: usize) -> String {
        match (self, coordinate) {
            (_, 0) => "V".to_string(),
            (PatternBasis::AlmostStars, i) => format!("T{}", i - 1),
            (PatternBasis::Stars, i) => format!("S{i}"),
        }
    }
}

/// One cone row together with its human-readable renderings.
#[derive(Clone, Debug)]
pub struct RowInfo {
    pub coeffs: Vec<BigRational>,
    /// e.g. `4y1 - 3y2 >= 0`
    pub linear: String,
    /// e.g. `T0^4 >= T1^3`; re-parses under the inequality grammar.
    pub binomial: String,
}

/// An H-cone whose rows carry binomial renderings in a pattern basis.
#[derive(Clone, Debug)]
pub struct ProfileCone {
    m: usize,
    basis: PatternBasis,
    cone: HCone,
    rows: Vec<RowInfo>,
    verified: bool,
}

impl ProfileCone {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn basis(&self) -> PatternBasis {
        self.basis
    }

    pub fn cone(&self) -> &HCone {
        &self.cone
    }

    pub fn rows(&self) -> &[RowInfo] {
        &self.rows
    }

    /// False only for the literal-substitution build at `m = 4`, whose row
    /// set is not backed by the supported contract.
    pub fn is_verified(&self) -> bool {
        self.verified
    }
}

fn row_from_pairs(dim: usize, pairs: &[(usize, i64)]) -> Vec<BigRational> {
    let mut row = vec![BigRational::zero(); dim];
    for &(i, c) in pairs {
        row[i] += crate::num::rat(c);
    }
    row
}

/// Renders a row as a linear inequality in `y` coordinates.
pub fn render_linear(coeffs: &[BigRational]) -> String {
    let mut s = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let mag = if mag.is_integer() { mag.numer().to_string() } else { mag.to_string() };
        if s.is_empty() {
            if c.is_negative() {
                s.push('-');
            }
        } else {
            s.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if mag != "1" {
            s.push_str(&mag);
        }
        s.push_str(&format!("y{i}"));
    }
    s.push_str(" >= 0");
    s
}

/// Renders a row as the pure binomial inequality it encodes: positive
/// coefficients become left-side exponents, negative ones right-side.
pub fn render_binomial(coeffs: &[BigRational], basis: PatternBasis) -> String {
    let mut lhs: Vec<String> = Vec::new();
    let mut rhs: Vec<String> = Vec::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let exp = if mag.is_integer() { mag.numer().to_string() } else { mag.to_string() };
        let atom = basis.atom(i);
        let term = if exp == "1" { atom } else { format!("{atom}^{exp}") };
        if c.is_positive() {
            lhs.push(term);
        } else {
            rhs.push(term);
        }
    }
    assert!(!lhs.is_empty() && !rhs.is_empty(), "row has terms of both signs");
    format!("{} >= {}", lhs.join(" "), rhs.join(" "))
}

fn q_row_pairs(m: usize) -> Vec<Vec<(usize, i64)>> {
    let mi = m as i64;
    let mut rows = vec![
        vec![(1, -1), (2, 1)],
        vec![(1, 4), (2, -3)],
        vec![(1, 3), (3, -3), (4, 1)],
        vec![(1, 1), (m - 1, 2), (m, -2)],
        vec![(0, 1), (m - 1, 1), (m, -1)],
        vec![(0, 1), (1, -2), (3, 1)],
    ];
    for i in 2..m {
        rows.push(vec![(i - 1, 1), (i, -2), (i + 1, 1)]);
    }
    rows.push(vec![(m - 1, mi), (m, -(mi - 1))]);
    rows
}

fn labeled_cone(
    m: usize,
    basis: PatternBasis,
    pairs: Vec<Vec<(usize, i64)>>,
    verified: bool,
) -> Result<ProfileCone> {
    let dim = m + 1;
    let rows: Vec<Vec<BigRational>> = pairs.iter().map(|p| row_from_pairs(dim, p)).collect();
    let cone = HCone::new(dim, rows)?;
    let infos = cone
        .rows()
        .iter()
        .map(|r| RowInfo {
            coeffs: r.clone(),
            linear: render_linear(r),
            binomial: render_binomial(r, basis),
        })
        .collect();
    Ok(ProfileCone { m, basis, cone, rows: infos, verified })
}

/// The tropicalized profile cone for the almost-star family at size `m`.
/// Supported for `m >= 5`; the row families collide for smaller `m`.
pub fn profile_cone(m: usize) -> Result<ProfileCone> {
    if m < 5 {
        return Err(Error::InvalidParameter(format!(
            "profile cone is supported for m >= 5 (got {m}); \
             use profile_cone_unverified for m = 4"
        )));
    }
    let cone = labeled_cone(m, PatternBasis::AlmostStars, q_row_pairs(m), true)?;
    debug_assert_eq!(cone.cone.rows().len(), m + 5);
    Ok(cone)
}

/// Literal index substitution of the row families at `m = 4`, with duplicate
/// rows deduplicated. The result is flagged unverified: the supported
/// contract starts at `m = 5`. For `m <= 3` the rows reference `y_4`, which
/// does not exist, so no cone is built.
pub fn profile_cone_unverified(m: usize) -> Result<ProfileCone> {
    if m >= 5 {
        return profile_cone(m);
    }
    if m < 4 {
        return Err(Error::InvalidParameter(format!(
            "rows reference y4, so even literal substitution needs m >= 4 (got {m})"
        )));
    }
    labeled_cone(m, PatternBasis::AlmostStars, q_row_pairs(m), false)
}

/// The tropicalized profile cone for the star family `S_0..S_m` (`m >= 2`):
/// `-y1 + y2`, `y0 + y_{m-1} - y_m`, the gap rows for `1 <= i <= m-1`, and
/// `m y_{m-1} - (m-1) y_m`.
pub fn star_cone(m: usize) -> Result<ProfileCone> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("star cone needs m >= 2, got {m}")));
    }
    let mi = m as i64;
    let mut pairs = vec![vec![(1, -1), (2, 1)], vec![(0, 1), (m - 1, 1), (m, -1)]];
    for i in 1..m {
        pairs.push(vec![(i - 1, 1), (i, -2), (i + 1, 1)]);
    }
    pairs.push(vec![(m - 1, mi), (m, -(mi - 1))]);
    labeled_cone(m, PatternBasis::Stars, pairs, true)
}

/// The four doubly extreme rays of the star cone: `(1,0,...,0)`, the all-ones
/// vector, `(1,1,2,3,...,m)` and `(1,2,3,...,m+1)`.
pub fn star_doubly_extreme_rays(m: usize) -> Vec<Ray> {
    let mut out = Vec::with_capacity(4);
    let mut v = vec![int(1)];
    v.extend((1..=m).map(|_| int(0)));
    out.push(Ray::from_integers(&v).unwrap());
    out.push(Ray::from_integers(&vec![int(1); m + 1]).unwrap());
    let mut v = vec![int(1), int(1)];
    v.extend((2..=m).map(|i| int(i as i64)));
    out.push(Ray::from_integers(&v).unwrap());
    let v: Vec<BigInt> = (0..=m).map(|i| int(i as i64 + 1)).collect();
    out.push(Ray::from_integers(&v).unwrap());
    out
}

/// The fifteen extreme-ray families of the profile cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RayFamily {
    D1,
    D2,
    D3,
    D4,
    D5,
    S1,
    S2,
    S3,
    S4,
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
}

impl RayFamily {
    pub const ALL: [RayFamily; 15] = [
        RayFamily::D1,
        RayFamily::D2,
        RayFamily::D3,
        RayFamily::D4,
        RayFamily::D5,
        RayFamily::S1,
        RayFamily::S2,
        RayFamily::S3,
        RayFamily::S4,
        RayFamily::R1,
        RayFamily::R2,
        RayFamily::R3,
        RayFamily::R4,
        RayFamily::R5,
        RayFamily::R6,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            RayFamily::D1 => "d1",
            RayFamily::D2 => "d2",
            RayFamily::D3 => "d3",
            RayFamily::D4 => "d4",
            RayFamily::D5 => "d5",
            RayFamily::S1 => "s1",
            RayFamily::S2 => "s2",
            RayFamily::S3 => "s3",
            RayFamily::S4 => "s4",
            RayFamily::R1 => "r1",
            RayFamily::R2 => "r2",
            RayFamily::R3 => "r3",
            RayFamily::R4 => "r4",
            RayFamily::R5 => "r5",
            RayFamily::R6 => "r6",
        }
    }

    pub fn parse(s: &str) -> Option<RayFamily> {
        RayFamily::ALL.iter().copied().find(|f| f.name() == s)
    }

    /// The valid branch-index range at size `m`, for the families indexed by
    /// a branch position (empty ranges are possible, e.g. `r1` at `m = 5`).
    pub fn branch_range(&self, m: usize) -> Option<std::ops::RangeInclusive<usize>> {
        match self {
            RayFamily::R1 | RayFamily::R2 | RayFamily::R3 | RayFamily::R4 => Some(5..=m - 1),
            RayFamily::R5 => Some(3..=m - 1),
            RayFamily::R6 => Some(4..=m - 1),
            _ => None,
        }
    }

    pub fn is_doubly_extreme(&self) -> bool {
        matches!(
            self,
            RayFamily::D1 | RayFamily::D2 | RayFamily::D3 | RayFamily::D4 | RayFamily::D5
        )
    }
}

impl std::fmt::Display for RayFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A concrete ray family instance: the family plus the branch index where the
/// family needs one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RayId {
    pub family: RayFamily,
    pub branch: Option<usize>,
}

impl RayId {
    pub fn plain(family: RayFamily) -> RayId {
        RayId { family, branch: None }
    }

    pub fn branched(family: RayFamily, i: usize) -> RayId {
        RayId { family, branch: Some(i) }
    }

    fn validate(&self, m: usize) -> Result<()> {
        if m < 5 {
            return Err(Error::InvalidParameter("ray families need m >= 5".into()));
        }
        match (self.family.branch_range(m), self.branch) {
            (None, None) => Ok(()),
            (Some(range), Some(i)) if range.contains(&i) => Ok(()),
            (Some(range), got) => Err(Error::InvalidParameter(format!(
                "{} at m = {m} needs a branch index in {:?}, got {:?}",
                self.family, range, got
            ))),
            (None, Some(_)) => Err(Error::InvalidParameter(format!(
                "{} takes no branch index",
                self.family
            ))),
        }
    }
}

impl std::fmt::Display for RayId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.branch {
            None => write!(f, "{}", self.family),
            Some(i) => write!(f, "{}(i={})", self.family, i),
        }
    }
}

/// The literal integer vector of a ray family instance in `R^{m+1}`, exactly
/// as its arithmetic progressions define it (no gcd normalization; e.g.
/// `r2` at `m = 7, i = 6` is `(8, 18, 24, 30, 36, 42, 48, 56)`).
pub fn family_vector(id: RayId, m: usize) -> Result<Vec<BigInt>> {
    id.validate(m)?;
    let v = |x: i64| int(x);
    let out: Vec<BigInt> = match (id.family, id.branch) {
        (RayFamily::D1, _) => (0..=m).map(|j| v(i64::from(j == 0))).collect(),
        (RayFamily::D2, _) => vec![int(1); m + 1],
        (RayFamily::D3, _) => (0..=m)
            .map(|j| match j {
                0 => v(1),
                1 => v(2),
                _ => v(j as i64),
            })
            .collect(),
        (RayFamily::D4, _) => {
            (0..=m).map(|j| if j == 0 { v(1) } else { v(j as i64 + 2) }).collect()
        }
        (RayFamily::D5, _) => (0..=m)
            .map(|j| match j {
                0 => v(2),
                1 => v(4),
                _ => v(2 * j as i64 + 1),
            })
            .collect(),
        (RayFamily::S1, _) => (0..=m)
            .map(|j| match j {
                0 => v(3),
                1 => v(6),
                2 => v(8),
                3 => v(10),
                _ => v(3 * j as i64),
            })
            .collect(),
        (RayFamily::S2, _) => (0..=m)
            .map(|j| match j {
                0 => v(6),
                1 => v(12),
                2 => v(16),
                _ => v(6 * j as i64 + 3),
            })
            .collect(),
        (RayFamily::S3, _) => (0..=m)
            .map(|j| match j {
                0 => v(2),
                1 => v(4),
                2 => v(5),
                _ => v(2 * j as i64),
            })
            .collect(),
        (RayFamily::S4, _) => (0..=m)
            .map(|j| match j {
                0 => v(3),
                1 => v(6),
                2 => v(8),
                _ => v(3 * j as i64 + 1),
            })
            .collect(),
        (RayFamily::R1, Some(i)) => {
            let i = i as i64;
            (0..=m)
                .map(|j| match j as i64 {
                    0 => v(6 * i - 15),
                    1 => v(12 * i - 30),
                    2 => v(16 * i - 40),
                    j if j <= i => v(6 * i * j + 3 * i - 18 * j),
                    j => v((6 * i - 15) * j),
                })
                .collect()
        }
        (RayFamily::R2, Some(i)) => {
            let i = i as i64;
            (0..=m)
                .map(|j| match j as i64 {
                    0 => v(i + 2),
                    j if j <= i => v(i * (j + 2)),
                    j => v(j * (i + 2)),
                })
                .collect()
        }
        (RayFamily::R3, Some(i)) => {
            let i = i as i64;
            (0..=m)
                .map(|j| match j as i64 {
                    0 => v(3 * i - 9),
                    1 => v(6 * i - 18),
                    2 => v(8 * i - 24),
                    j if j <= i => v(3 * i * j + i - 10 * j),
                    j => v((3 * i - 9) * j),
                })
                .collect()
        }
        (RayFamily::R4, Some(i)) => {
            let i = i as i64;
            (0..=m)
                .map(|j| match j as i64 {
                    0 => v(2 * i - 5),
                    1 => v(4 * i - 10),
                    j if j <= i => v(2 * i * j + i - 6 * j),
                    j => v((2 * i - 5) * j),
                })
                .collect()
        }
        (RayFamily::R5, Some(i)) => (0..=m).map(|j| v(i.max(j) as i64)).collect(),
        (RayFamily::R6, Some(i)) => {
            let i = i as i64;
            (0..=m)
                .map(|j| match j as i64 {
                    0 => v(i + 1),
                    j if j <= i - 1 => v((j + 2) * i - j),
                    j => v(j * (i + 1)),
                })
                .collect()
        }
        _ => unreachable!("validated above"),
    };
    Ok(out)
}

/// The normalized ray of a family instance.
pub fn ray(id: RayId, m: usize) -> Result<Ray> {
    Ray::from_integers(&family_vector(id, m)?)
}

/// Componentwise maximum of two equal-length rational vectors.
pub fn tropical_sum(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    assert_eq!(a.len(), b.len(), "tropical sum needs equal lengths");
    a.iter().zip(b).map(|(x, y)| if x >= y { x.clone() } else { y.clone() }).collect()
}

/// A tropical sum of conical combinations of the doubly extreme rays: the
/// componentwise max, over `terms`, of `sum_j coeff * d_ray`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalDecomposition {
    pub id: RayId,
    pub terms: Vec<Vec<(RayFamily, u64)>>,
}

impl TropicalDecomposition {
    /// Evaluates the decomposition at size `m`, as a literal integer vector.
    pub fn evaluate(&self, m: usize) -> Result<Vec<BigInt>> {
        let mut best: Option<Vec<BigInt>> = None;
        for term in &self.terms {
            let mut acc = vec![BigInt::zero(); m + 1];
            for &(fam, coeff) in term {
                debug_assert!(fam.is_doubly_extreme());
                let base = family_vector(RayId::plain(fam), m)?;
                for (a, b) in acc.iter_mut().zip(&base) {
                    *a += b * int(coeff as i64);
                }
            }
            best = Some(match best {
                None => acc,
                Some(prev) => prev
                    .into_iter()
                    .zip(acc)
                    .map(|(x, y)| if x >= y { x } else { y })
                    .collect(),
            });
        }
        best.ok_or_else(|| Error::InvalidInput("decomposition with no terms".into()))
    }

    /// e.g. `(d3 + d5) (+) 2 d4` for `s4`.
    pub fn render(&self) -> String {
        let term = |t: &Vec<(RayFamily, u64)>| -> String {
            let parts: Vec<String> = t
                .iter()
                .map(|&(f, c)| if c == 1 { f.to_string() } else { format!("{c} {f}") })
                .collect();
            if parts.len() > 1 {
                format!("({})", parts.join(" + "))
            } else {
                parts.join("")
            }
        };
        self.terms.iter().map(term).collect::<Vec<_>>().join(" (+) ")
    }
}

/// The stored tropical decomposition of a family instance over the doubly
/// extreme rays (`d` rays decompose as themselves). Every decomposition
/// reproduces `family_vector(id, m)` exactly.
pub fn decomposition(id: RayId, m: usize) -> Result<TropicalDecomposition> {
    use RayFamily::*;
    id.validate(m)?;
    let c = |x: i64| -> u64 { x.try_into().expect("nonnegative coefficient") };
    let terms: Vec<Vec<(RayFamily, u64)>> = match (id.family, id.branch.map(|i| i as i64)) {
        (D1 | D2 | D3 | D4 | D5, _) => vec![vec![(id.family, 1)]],
        (S1, _) => vec![vec![(D3, 3)], vec![(D4, 2)]],
        (S2, _) => vec![vec![(D5, 3)], vec![(D4, 4)]],
        // corrected from the published (2 d3) (+) d5, which evaluates to d5
        (S3, _) => vec![vec![(D2, 1), (D4, 1)], vec![(D3, 2)]],
        (S4, _) => vec![vec![(D3, 1), (D5, 1)], vec![(D4, 2)]],
        (R1, Some(i)) => vec![
            vec![(D4, c(4 * i - 10))],
            vec![(D4, 6), (D5, c(3 * (i - 4)))],
            vec![(D3, c(6 * i - 15))],
        ],
        (R2, Some(i)) => vec![vec![(D4, c(i))], vec![(D3, c(i + 2))]],
        (R3, Some(i)) => vec![
            vec![(D2, 1), (D3, c(i - 5)), (D4, 1), (D5, c(i - 3))],
            vec![(D4, c(2 * (i - 3)))],
            vec![(D3, c(3 * i - 9))],
        ],
        (R4, Some(i)) => vec![vec![(D4, 2), (D5, c(i - 4))], vec![(D3, c(2 * i - 5))]],
        (R5, Some(i)) => vec![vec![(D2, c(i))], vec![(D3, 1)]],
        (R6, Some(i)) => vec![vec![(D2, 2), (D4, c(i - 1))], vec![(D3, c(i + 1))]],
        _ => unreachable!("validated above"),
    };
    let terms = terms
        .into_iter()
        .map(|t| t.into_iter().filter(|&(_, coeff)| coeff > 0).collect())
        .collect();
    Ok(TropicalDecomposition { id, terms })
}

/// All expected extreme rays of the profile cone at size `m >= 5`, in
/// canonical order: `d1..d5`, `s1..s4`, then each `r` family with ascending
/// branch index. The count is `6m - 18`.
pub fn expected_rays(m: usize) -> Result<Vec<(RayId, Ray)>> {
    if m < 5 {
        return Err(Error::InvalidParameter("expected rays need m >= 5".into()));
    }
    let mut out = Vec::new();
    for family in RayFamily::ALL {
        match family.branch_range(m) {
            None => {
                let id = RayId::plain(family);
                out.push((id, ray(id, m)?));
            }
            Some(range) => {
                for i in range {
                    let id = RayId::branched(family, i);
                    out.push((id, ray(id, m)?));
                }
            }
        }
    }
    Ok(out)
}

/// The realizing graph family of a doubly extreme ray at size parameter `n`.
pub fn realizing_family(d: RayFamily, n: u64) -> Result<FamilyDescriptor> {
    match d {
        RayFamily::D1 => Ok(FamilyDescriptor::IsolatedPlusEdge(n)),
        RayFamily::D2 => Ok(FamilyDescriptor::SingleEdge),
        RayFamily::D3 => Ok(FamilyDescriptor::Star(n)),
        RayFamily::D4 => Ok(FamilyDescriptor::CompleteBipartiteBalanced(n)),
        RayFamily::D5 => Ok(FamilyDescriptor::P2Blowup(n)),
        other => Err(Error::InvalidParameter(format!(
            "{other} has no single realizing family"
        ))),
    }
}

/// Closed-form profile vector of a realizing family member, exact for every
/// size (validated against the tree evaluator in tests). In the blow-up
/// count for `k >= 1` the middle term is `n^2 (n+1)^k 2n^2`: middle-part
/// vertices have degree `n + 1` and their neighbor degrees sum to `2 n^2`.
pub fn family_profile(desc: &FamilyDescriptor, m: usize) -> Result<ProfileVector> {
    if m < 1 {
        return Err(Error::InvalidParameter("profile needs m >= 1".into()));
    }
    let counts: Vec<BigInt> = match *desc {
        FamilyDescriptor::IsolatedPlusEdge(n) => {
            if n < 3 {
                return Err(Error::InvalidParameter("IsolatedPlusEdge needs n >= 3".into()));
            }
            let mut v = vec![int(n as i64)];
            v.extend(std::iter::repeat(int(2)).take(m));
            v
        }
        FamilyDescriptor::SingleEdge => vec![int(2); m + 1],
        FamilyDescriptor::Star(n) => {
            if n < 1 {
                return Err(Error::InvalidParameter("Star needs n >= 1".into()));
            }
            let n = int(n as i64);
            let mut v = vec![&n + 1];
            for k in 0..m as u64 {
                v.push(pow_big(&n, k + 1) + pow_big(&n, 2));
            }
            v
        }
        FamilyDescriptor::CompleteBipartiteBalanced(n) => {
            if n < 1 {
                return Err(Error::InvalidParameter(
                    "CompleteBipartiteBalanced needs n >= 1".into(),
                ));
            }
            let n = int(n as i64);
            let mut v = vec![2 * &n];
            for k in 0..m as u64 {
                v.push(2 * pow_big(&n, k + 3));
            }
            v
        }
        FamilyDescriptor::P2Blowup(n) => {
            if n < 1 {
                return Err(Error::InvalidParameter("P2Blowup needs n >= 1".into()));
            }
            let n = int(n as i64);
            let np1 = &n + 1;
            let mut v = vec![2 * pow_big(&n, 2) + 1];
            v.push(2 * pow_big(&n, 4) + pow_big(&n, 2) * pow_big(&np1, 2));
            for k in 1..m as u64 {
                let center_first = pow_big(&n, 2 * k + 2) * &np1;
                let center_middle = 2 * pow_big(&n, 4) * pow_big(&np1, k);
                let center_last = pow_big(&n, k + 3) * &np1;
                v.push(center_first + center_middle + center_last);
            }
            v
        }
    };
    Ok(ProfileVector::from_counts(counts))
}
