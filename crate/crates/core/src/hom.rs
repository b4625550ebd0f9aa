//! Exact homomorphism counting with arbitrary-precision integers.
//!
//! `hom_brute` is the enumeration oracle; `hom_tree` is the polynomial-time
//! evaluator for forests that everything downstream uses. Both count maps
//! `V(H) -> V(G)` sending every edge of `H` to an edge of `G`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;
use crate::graph::{Graph, Pattern};
use crate::num::ln_big;
use crate::Result;

/// Default cap on the number of maps `hom_brute` will enumerate.
pub const DEFAULT_BRUTE_BUDGET: u64 = 100_000_000;

/// Exact homomorphism count by exhaustive enumeration over all vertex maps.
pub fn hom_brute(h: &Graph, g: &Graph) -> Result<BigInt> {
    hom_brute_with_budget(h, g, DEFAULT_BRUTE_BUDGET)
}

/// `hom_brute` with an explicit enumeration budget (`n_G^{n_H}` maps).
pub fn hom_brute_with_budget(h: &Graph, g: &Graph, budget: u64) -> Result<BigInt> {
    let nh = h.vertex_count();
    let ng = g.vertex_count();
    if nh == 0 {
        return Ok(BigInt::one());
    }
    if ng == 0 {
        return Ok(BigInt::zero());
    }
    let total = (ng as f64).powi(nh as i32);
    if !total.is_finite() || total > budget as f64 {
        return Err(Error::BudgetExceeded(format!(
            "{ng}^{nh} maps exceed the budget of {budget}"
        )));
    }
    let mut assign = vec![0usize; nh];
    let mut count: u64 = 0;
    'outer: loop {
        let ok = h
            .edges()
            .iter()
            .all(|&(u, v)| g.has_edge(assign[u], assign[v]));
        if ok {
            count += 1;
        }
        for slot in assign.iter_mut() {
            *slot += 1;
            if *slot < ng {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
    Ok(BigInt::from(count))
}

/// Exact homomorphism count of a forest `t` into `g` by dynamic programming:
/// each tree component is rooted at its minimum-index vertex and folded, per
/// target vertex, as the product over children of the sum over neighbors.
///
/// Errors if `t` contains a cycle.
pub fn hom_tree(t: &Graph, g: &Graph) -> Result<BigInt> {
    let nt = t.vertex_count();
    let ng = g.vertex_count();
    if nt == 0 {
        return Ok(BigInt::one());
    }
    if ng == 0 {
        return Ok(BigInt::zero());
    }

    let mut seen = vec![false; nt];
    let mut total = BigInt::one();
    for root in 0..nt {
        if seen[root] {
            continue;
        }
        // DFS order from the component's minimum-index vertex.
        let mut order = Vec::new();
        let mut parent = vec![usize::MAX; nt];
        let mut stack = vec![root];
        seen[root] = true;
        let mut component_edges = 0usize;
        while let Some(v) = stack.pop() {
            order.push(v);
            for &u in t.neighbors(v) {
                if u != parent[v] {
                    component_edges += 1;
                    if seen[u] {
                        return Err(Error::InvalidInput(
                            "pattern has a cycle; hom_tree needs a forest".into(),
                        ));
                    }
                    seen[u] = true;
                    parent[u] = v;
                    stack.push(u);
                }
            }
        }
        debug_assert_eq!(component_edges, order.len() - 1);

        // cnt[v][u]: homomorphisms of the subtree at v mapping v to u.
        let mut cnt: Vec<Vec<BigInt>> = vec![Vec::new(); nt];
        for &v in order.iter().rev() {
            let mut col = vec![BigInt::one(); ng];
            for &c in t.neighbors(v) {
                if c == parent[v] {
                    continue;
                }
                for (u, entry) in col.iter_mut().enumerate() {
                    if entry.is_zero() {
                        continue;
                    }
                    let mut s = BigInt::zero();
                    for &w in g.neighbors(u) {
                        s += &cnt[c][w];
                    }
                    *entry *= s;
                }
            }
            cnt[v] = col;
        }
        let mut component: BigInt = BigInt::zero();
        for u in 0..ng {
            component += &cnt[root][u];
        }
        total *= component;
        if total.is_zero() {
            return Ok(total);
        }
    }
    Ok(total)
}

/// Exact homomorphism counts of the profile patterns into `g`: index 0 is the
/// single vertex, index `i >= 1` the almost-star with `i - 1` one-edge
/// branches. `counts.len() == m + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileVector {
    counts: Vec<BigInt>,
}

impl ProfileVector {
    pub fn from_counts(counts: Vec<BigInt>) -> Self {
        assert!(!counts.is_empty());
        ProfileVector { counts }
    }

    pub fn m(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// True iff every coordinate is strictly positive.
    pub fn is_positive(&self) -> bool {
        self.counts.iter().all(|c| !c.is_zero())
    }

    /// Componentwise product, used for tensor products of targets.
    pub fn product(&self, other: &ProfileVector) -> ProfileVector {
        assert_eq!(self.counts.len(), other.counts.len());
        ProfileVector {
            counts: self
                .counts
                .iter()
                .zip(&other.counts)
                .map(|(a, b)| a * b)
                .collect(),
        }
    }

    /// Componentwise sum, used for disjoint unions of targets.
    pub fn sum(&self, other: &ProfileVector) -> ProfileVector {
        assert_eq!(self.counts.len(), other.counts.len());
        ProfileVector {
            counts: self
                .counts
                .iter()
                .zip(&other.counts)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Componentwise integer power.
    pub fn pow(&self, e: u64) -> ProfileVector {
        ProfileVector {
            counts: self.counts.iter().map(|c| pow_big(c, e)).collect(),
        }
    }
}

pub(crate) fn pow_big(base: &BigInt, e: u64) -> BigInt {
    if e == 0 {
        return BigInt::one();
    }
    num_traits::pow::pow(base.clone(), e.to_usize().expect("exponent fits usize"))
}

/// The profile vector `(hom(S_0; g), hom(S_{2,1^0}; g), ..., hom(S_{2,1^{m-1}}; g))`.
pub fn profile_vector(m: usize, g: &Graph) -> Result<ProfileVector> {
    if m < 1 {
        return Err(Error::InvalidParameter("profile needs m >= 1".into()));
    }
    let mut counts = Vec::with_capacity(m + 1);
    for i in 0..=m {
        counts.push(hom_tree(&Pattern::for_coordinate(i).to_graph(), g)?);
    }
    Ok(ProfileVector { counts })
}

/// Star-family profile `(hom(S_0; g), hom(S_1; g), ..., hom(S_m; g))` where
/// `S_k` is the star with `k` branches, i.e. `hom(S_k; g) = sum_v deg(v)^k`.
pub fn star_profile_vector(m: usize, g: &Graph) -> ProfileVector {
    let mut counts = vec![BigInt::from(g.vertex_count() as u64)];
    for k in 1..=m {
        let mut s = BigInt::zero();
        for v in 0..g.vertex_count() {
            s += pow_big(&BigInt::from(g.degree(v) as u64), k as u64);
        }
        counts.push(s);
    }
    ProfileVector { counts }
}

/// Componentwise `log(counts[i]) / log(base_n)` as floats; slope diagnostics
/// only, never used for certification. Errors on zero counts.
pub fn log_ratio_vector(pv: &ProfileVector, base_n: u64) -> Result<Vec<f64>> {
    if base_n < 2 {
        return Err(Error::InvalidParameter("log ratio base must be >= 2".into()));
    }
    let ln_base = (base_n as f64).ln();
    pv.counts
        .iter()
        .map(|c| {
            if c.is_zero() {
                Err(Error::Domain("log ratio of a zero count".into()))
            } else {
                Ok(ln_big(c) / ln_base)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilyDescriptor;
    use crate::num::int;

    fn k2() -> Graph {
        FamilyDescriptor::SingleEdge.build().unwrap()
    }

    #[test]
    fn brute_basics() {
        // hom(S_{2,1^k}; K_2) = 2 for any k
        for k in 0..4 {
            let t = Pattern::AlmostStar(k).to_graph();
            assert_eq!(hom_brute(&t, &k2()).unwrap(), int(2));
        }
        // hom(S_0; G) = |V(G)|
        let g = Graph::new(5, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(hom_brute(&Pattern::SingleVertex.to_graph(), &g).unwrap(), int(5));
        // hom(P_2; K_{2,2}) = sum of squared degrees = 16
        let k22 = FamilyDescriptor::CompleteBipartiteBalanced(2).build().unwrap();
        let sq: u64 = (0..4).map(|v| (k22.degree(v) * k22.degree(v)) as u64).sum();
        assert_eq!(sq, 16);
        assert_eq!(hom_brute(&Pattern::AlmostStar(0).to_graph(), &k22).unwrap(), int(16));
    }

    #[test]
    fn brute_budget() {
        let t = Pattern::AlmostStar(5).to_graph(); // 8 vertices
        let g = FamilyDescriptor::Star(9).build().unwrap(); // 10 vertices
        assert!(matches!(
            hom_brute_with_budget(&t, &g, 1_000_000),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn tree_rejects_cycles() {
        let c3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(hom_tree(&c3, &k2()), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn tree_closed_forms() {
        // hom(S_{2,1^k}; Star(n)) = n^{k+1} + n^2
        // hom(S_{2,1^k}; K_{n,n}) = 2 n^{k+3}
        for n in 1..8u64 {
            let star = FamilyDescriptor::Star(n).build().unwrap();
            let knn = FamilyDescriptor::CompleteBipartiteBalanced(n).build().unwrap();
            for k in 0..4u64 {
                let t = Pattern::AlmostStar(k as usize).to_graph();
                let want = pow_big(&int(n as i64), k + 1) + pow_big(&int(n as i64), 2);
                assert_eq!(hom_tree(&t, &star).unwrap(), want);
                let want = 2 * pow_big(&int(n as i64), k + 3);
                assert_eq!(hom_tree(&t, &knn).unwrap(), want);
            }
        }
        // hom(S_{2,1^0}; P2Blowup(n)) = n^4 + n^2 (n+1)^2 + n^4
        for n in 1..5i64 {
            let g = FamilyDescriptor::P2Blowup(n as u64).build().unwrap();
            let want = 2 * pow_big(&int(n), 4) + pow_big(&int(n), 2) * pow_big(&int(n + 1), 2);
            assert_eq!(hom_tree(&Pattern::AlmostStar(0).to_graph(), &g).unwrap(), want);
        }
    }

    #[test]
    fn tree_matches_brute_on_fixed_pairs() {
        let targets = [
            Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap(),
            Graph::new(5, &[(0, 1), (0, 2), (0, 3), (3, 4), (1, 2)]).unwrap(),
            Graph::edgeless(3),
            Graph::new(1, &[]).unwrap(),
        ];
        let patterns = [
            Pattern::SingleVertex.to_graph(),
            Pattern::AlmostStar(0).to_graph(),
            Pattern::AlmostStar(2).to_graph(),
            Graph::new(5, &[(0, 1), (2, 3)]).unwrap(), // forest, two components
            Graph::edgeless(2),
        ];
        for t in &patterns {
            for g in &targets {
                assert_eq!(hom_tree(t, g).unwrap(), hom_brute(t, g).unwrap());
            }
        }
    }

    #[test]
    fn profiles() {
        // (m=3, K_2) -> (2,2,2,2)
        let pv = profile_vector(3, &k2()).unwrap();
        assert_eq!(pv.counts(), &[int(2), int(2), int(2), int(2)]);

        // (m=2, Star(2)) -> (3, 6, 8), cross-checked against the brute oracle
        let s2 = FamilyDescriptor::Star(2).build().unwrap();
        let pv = profile_vector(2, &s2).unwrap();
        assert_eq!(pv.counts(), &[int(3), int(6), int(8)]);
        for i in 0..=2 {
            assert_eq!(
                pv.counts()[i],
                hom_brute(&Pattern::for_coordinate(i).to_graph(), &s2).unwrap()
            );
        }

        // (m=1, edgeless graph on 5 vertices) -> (5, 0)
        let pv = profile_vector(1, &Graph::edgeless(5)).unwrap();
        assert_eq!(pv.counts(), &[int(5), int(0)]);
        assert!(!pv.is_positive());

        // counts[0] = |V|; with an edge present, all entries >= 2
        let g = Graph::new(6, &[(0, 1), (3, 4), (4, 5)]).unwrap();
        let pv = profile_vector(4, &g).unwrap();
        assert_eq!(pv.counts()[0], int(6));
        assert!(pv.counts().iter().all(|c| c >= &int(2)));
    }

    #[test]
    fn profile_additivity_multiplicativity() {
        let g1 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let g2 = FamilyDescriptor::Star(3).build().unwrap();
        let m = 3;
        let p1 = profile_vector(m, &g1).unwrap();
        let p2 = profile_vector(m, &g2).unwrap();
        let pu = profile_vector(m, &g1.disjoint_union(&g2)).unwrap();
        let pt = profile_vector(m, &g1.tensor_product(&g2)).unwrap();
        assert_eq!(pu, p1.sum(&p2));
        assert_eq!(pt, p1.product(&p2));
    }

    #[test]
    fn star_profile_matches_tree_dp() {
        let g = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (3, 4), (1, 2)]).unwrap();
        let pv = star_profile_vector(4, &g);
        assert_eq!(pv.counts()[0], int(5));
        for k in 1..=4 {
            let star: Vec<(usize, usize)> = (1..=k).map(|v| (0, v)).collect();
            let s = Graph::new(k + 1, &star).unwrap();
            assert_eq!(pv.counts()[k], hom_tree(&s, &g).unwrap(), "k={k}");
        }
    }

    #[test]
    fn log_ratios() {
        // IsolatedPlusEdge(10^6): first entry exactly 1, others about 0.05
        let n = 1_000_000u64;
        let mut counts = vec![int(n as i64)];
        counts.extend(std::iter::repeat_n(int(2), 4));
        let pv = ProfileVector::from_counts(counts);
        let lr = log_ratio_vector(&pv, n).unwrap();
        assert!((lr[0] - 1.0).abs() < 1e-12);
        for &x in &lr[1..] {
            assert!((x - 0.0501).abs() < 0.001, "{x}");
        }

        // all counts equal to the base give the all-ones vector
        let pv = ProfileVector::from_counts(vec![int(7); 3]);
        let lr = log_ratio_vector(&pv, 7).unwrap();
        assert!(lr.iter().all(|&x| (x - 1.0).abs() < 1e-12));

        let pv = ProfileVector::from_counts(vec![int(1), int(0)]);
        assert!(matches!(log_ratio_vector(&pv, 2), Err(Error::Domain(_))));
        let pv = ProfileVector::from_counts(vec![int(1)]);
        assert!(matches!(log_ratio_vector(&pv, 1), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn monotone_in_target() {
        // adding an edge never decreases any profile entry
        let g = Graph::new(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let base = profile_vector(4, &g).unwrap();
        for (u, v) in [(0usize, 2usize), (2, 3), (0, 4)] {
            let mut edges = g.edges().to_vec();
            edges.push((u, v));
            let g2 = Graph::new(5, &edges).unwrap();
            let bigger = profile_vector(4, &g2).unwrap();
            for i in 0..=4 {
                assert!(bigger.counts()[i] >= base.counts()[i]);
            }
        }
    }
}
