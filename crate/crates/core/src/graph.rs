//! Finite simple undirected graphs, the almost-star pattern family, and the
//! realizing graph families used to attain extreme rays.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::Error;
use crate::Result;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Immutable after construction; all operations are pure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and endpoints
    /// out of range. Edge order and orientation are canonicalized.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u}, {v}) has an endpoint >= n = {n}"
                )));
            }
            let e = (u.min(v), u.max(v));
            if !set.insert(e) {
                return Err(Error::InvalidInput(format!("duplicate edge ({}, {})", e.0, e.1)));
            }
        }
        Ok(Self::from_edge_set(n, set))
    }

    fn from_edge_set(n: usize, set: BTreeSet<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &set {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph { n, edges: set.into_iter().collect(), adj }
    }

    /// The graph with no vertices.
    pub fn empty() -> Self {
        Graph { n: 0, edges: Vec::new(), adj: Vec::new() }
    }

    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as canonical `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].binary_search(&v).is_ok()
    }

    /// Disjoint union; the second graph's vertices are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut set: BTreeSet<(usize, usize)> = self.edges.iter().copied().collect();
        for &(u, v) in &other.edges {
            set.insert((u + self.n, v + self.n));
        }
        Graph::from_edge_set(self.n + other.n, set)
    }

    /// Categorical (tensor) product: vertices are pairs, and
    /// `(u1, u2) ~ (v1, v2)` iff `u1 ~ v1` and `u2 ~ v2`.
    ///
    /// Homomorphism counts multiply over this product.
    pub fn tensor_product(&self, other: &Graph) -> Graph {
        let n2 = other.n;
        let idx = |a: usize, b: usize| a * n2 + b;
        let mut set = BTreeSet::new();
        for &(a, b) in &self.edges {
            for &(c, d) in &other.edges {
                for (x, y) in [(idx(a, c), idx(b, d)), (idx(a, d), idx(b, c))] {
                    set.insert((x.min(y), x.max(y)));
                }
            }
        }
        Graph::from_edge_set(self.n * n2, set)
    }

    /// A copy with vertex `i` renamed to `perm[i]` (`perm` must be a
    /// permutation of `0..n`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidInput("permutation length mismatch".into()));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::InvalidInput("not a permutation".into()));
            }
            seen[p] = true;
        }
        let edges: Vec<(usize, usize)> =
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, &edges)
    }

    /// All inclusion-maximal cliques, as sorted vertex sets in sorted order.
    /// Isolated vertices are singleton maximal cliques.
    ///
    /// Pivoted Bron–Kerbosch; intended for graphs with at most 64 vertices.
    pub fn maximal_cliques(&self) -> Result<Vec<Vec<usize>>> {
        if self.n > 64 {
            return Err(Error::BudgetExceeded(format!(
                "maximal_cliques supports at most 64 vertices, got {}",
                self.n
            )));
        }
        let nbr: Vec<u64> = (0..self.n)
            .map(|v| self.adj[v].iter().fold(0u64, |m, &u| m | (1 << u)))
            .collect();
        let mut out: Vec<u64> = Vec::new();
        let full: u64 = if self.n == 64 { !0 } else { (1u64 << self.n) - 1 };
        bron_kerbosch(0, full, 0, &nbr, &mut out);
        let mut cliques: Vec<Vec<usize>> = out
            .into_iter()
            .map(|mask| (0..self.n).filter(|&v| mask >> v & 1 == 1).collect())
            .collect();
        cliques.sort();
        Ok(cliques)
    }

    /// Whether the graph admits a perfect elimination ordering.
    pub fn is_chordal(&self) -> bool {
        // Maximum-cardinality search produces a perfect elimination ordering
        // iff the graph is chordal; verify the ordering it yields.
        let n = self.n;
        let mut weight = vec![0usize; n];
        let mut picked = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !picked[v])
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .unwrap();
            picked[v] = true;
            order.push(v);
            for &u in &self.adj[v] {
                if !picked[u] {
                    weight[u] += 1;
                }
            }
        }
        order.reverse(); // elimination order: earlier vertices eliminated first
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        for (i, &v) in order.iter().enumerate() {
            let later: Vec<usize> =
                self.adj[v].iter().copied().filter(|&u| pos[u] > i).collect();
            let Some(&w) = later.iter().min_by_key(|&&u| pos[u]) else {
                continue;
            };
            for &u in &later {
                if u != w && !self.has_edge(w, u) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether the graph has no `K_4` minor (treewidth at most 2), checked by
    /// exhaustively deleting degree-≤1 vertices and suppressing degree-2
    /// vertices while merging parallel edges.
    pub fn is_series_parallel(&self) -> bool {
        let mut adj: Vec<BTreeSet<usize>> =
            self.adj.iter().map(|a| a.iter().copied().collect()).collect();
        let mut alive: BTreeSet<usize> = (0..self.n).collect();
        loop {
            let Some(&v) = alive.iter().find(|&&v| adj[v].len() <= 2) else {
                return alive.is_empty();
            };
            let nbrs: Vec<usize> = adj[v].iter().copied().collect();
            for &u in &nbrs {
                adj[u].remove(&v);
            }
            if let [a, b] = nbrs[..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
            adj[v].clear();
            alive.remove(&v);
        }
    }

    /// Parses the text format: first non-comment line holds the vertex count,
    /// each following non-empty line holds one edge `u v` with `u < v`; `#`
    /// starts a comment line. Duplicate edges are rejected.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if n.is_none() {
                n = Some(line.parse().map_err(|_| {
                    Error::parse(lineno + 1, format!("expected vertex count, got {line:?}"))
                })?);
                continue;
            }
            let mut parts = line.split_whitespace();
            let (us, vs) = (parts.next(), parts.next());
            let (Some(us), Some(vs), None) = (us, vs, parts.next()) else {
                return Err(Error::parse(lineno + 1, format!("expected \"u v\", got {line:?}")));
            };
            let u: usize = us
                .parse()
                .map_err(|_| Error::parse(lineno + 1, format!("bad vertex {us:?}")))?;
            let v: usize = vs
                .parse()
                .map_err(|_| Error::parse(lineno + 1, format!("bad vertex {vs:?}")))?;
            if u >= v {
                return Err(Error::parse(lineno + 1, format!("edges need u < v, got {u} {v}")));
            }
            edges.push((u, v));
        }
        let Some(n) = n else {
            return Err(Error::parse(0, "missing vertex count line"));
        };
        Graph::new(n, &edges)
    }

    /// Renders the graph in the same text format `parse` reads.
    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.n);
        for &(u, v) in &self.edges {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }
}

fn bron_kerbosch(r: u64, mut p: u64, mut x: u64, nbr: &[u64], out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let pivot = {
        let candidates = p | x;
        (0..nbr.len())
            .filter(|&v| candidates >> v & 1 == 1)
            .max_by_key(|&v| (p & nbr[v]).count_ones())
            .unwrap()
    };
    let mut rest = p & !nbr[pivot];
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let bit = 1u64 << v;
        bron_kerbosch(r | bit, p & nbr[v], x & nbr[v], nbr, out);
        p &= !bit;
        x |= bit;
        rest &= !bit;
    }
}

/// One of the patterns whose homomorphism counts make up a profile vector:
/// the single vertex `S_0` or the almost-star tree `S_{2,1^k}` (a star with
/// `k` one-edge branches and one two-edge branch).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Pattern {
    SingleVertex,
    AlmostStar(usize),
}

impl Pattern {
    /// The pattern attached to profile coordinate `i` (`0` is the vertex,
    /// `i >= 1` is the almost-star with `i - 1` one-edge branches).
    pub fn for_coordinate(i: usize) -> Pattern {
        if i == 0 {
            Pattern::SingleVertex
        } else {
            Pattern::AlmostStar(i - 1)
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            Pattern::SingleVertex => 1,
            Pattern::AlmostStar(k) => k + 3,
        }
    }

    /// Materializes the pattern. `AlmostStar(k)` has vertices `0..k+3`:
    /// center 0 adjacent to `1..=k+1`, plus the pendant edge `(k+1, k+2)`.
    pub fn to_graph(&self) -> Graph {
        match *self {
            Pattern::SingleVertex => Graph::edgeless(1),
            Pattern::AlmostStar(k) => {
                let mut edges: Vec<(usize, usize)> = (1..=k + 1).map(|j| (0, j)).collect();
                edges.push((k + 1, k + 2));
                Graph::new(k + 3, &edges).expect("almost-star edges are valid")
            }
        }
    }
}

/// Descriptors for the graph families realizing the doubly extreme rays.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyDescriptor {
    /// `n - 2` isolated vertices plus one edge (`n >= 3`).
    IsolatedPlusEdge(u64),
    /// `K_2`; the size parameter is ignored.
    SingleEdge,
    /// Star with `n` leaves (`n >= 1`).
    Star(u64),
    /// Balanced complete bipartite graph `K_{n,n}` (`n >= 1`).
    CompleteBipartiteBalanced(u64),
    /// Blow-up of the two-edge path: parts of size 1, `n^2`, `n^2`; the
    /// singleton part complete to the middle part, and `n^3` middle-to-last
    /// edges wired so middle vertices have degree `n + 1` and last-part
    /// vertices degree `n` (first-coordinate matching, so builds are
    /// deterministic).
    P2Blowup(u64),
}

impl FamilyDescriptor {
    pub fn vertex_count(&self) -> u64 {
        match *self {
            FamilyDescriptor::IsolatedPlusEdge(n) => n,
            FamilyDescriptor::SingleEdge => 2,
            FamilyDescriptor::Star(n) => n + 1,
            FamilyDescriptor::CompleteBipartiteBalanced(n) => 2 * n,
            FamilyDescriptor::P2Blowup(n) => 2 * n * n + 1,
        }
    }

    /// Materializes the family member. Fails on out-of-range parameters.
    pub fn build(&self) -> Result<Graph> {
        const MAX_VERTICES: u64 = 2_000_000;
        let nv = self.vertex_count();
        if nv > MAX_VERTICES {
            return Err(Error::BudgetExceeded(format!(
                "family graph would have {nv} vertices"
            )));
        }
        match *self {
            FamilyDescriptor::IsolatedPlusEdge(n) => {
                if n < 3 {
                    return Err(Error::InvalidParameter(
                        "IsolatedPlusEdge needs n >= 3".into(),
                    ));
                }
                Graph::new(n as usize, &[(0, 1)])
            }
            FamilyDescriptor::SingleEdge => Graph::new(2, &[(0, 1)]),
            FamilyDescriptor::Star(n) => {
                if n < 1 {
                    return Err(Error::InvalidParameter("Star needs n >= 1".into()));
                }
                let edges: Vec<(usize, usize)> = (1..=n as usize).map(|v| (0, v)).collect();
                Graph::new(n as usize + 1, &edges)
            }
            FamilyDescriptor::CompleteBipartiteBalanced(n) => {
                if n < 1 {
                    return Err(Error::InvalidParameter(
                        "CompleteBipartiteBalanced needs n >= 1".into(),
                    ));
                }
                let n = n as usize;
                let mut edges = Vec::with_capacity(n * n);
                for u in 0..n {
                    for v in 0..n {
                        edges.push((u, n + v));
                    }
                }
                Graph::new(2 * n, &edges)
            }
            FamilyDescriptor::P2Blowup(n) => {
                if n < 1 {
                    return Err(Error::InvalidParameter("P2Blowup needs n >= 1".into()));
                }
                let n = n as usize;
                let nn = n * n;
                let b = |b1: usize, b2: usize| 1 + b1 * n + b2;
                let c = |c1: usize, c2: usize| 1 + nn + c1 * n + c2;
                let mut edges = Vec::with_capacity(nn + nn * n);
                for b1 in 0..n {
                    for b2 in 0..n {
                        edges.push((0, b(b1, b2)));
                        for c2 in 0..n {
                            edges.push((b(b1, b2), c(b1, c2)));
                        }
                    }
                }
                Graph::new(2 * nn + 1, &edges)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_shapes() {
        let s0 = Pattern::SingleVertex.to_graph();
        assert_eq!((s0.vertex_count(), s0.edge_count()), (1, 0));

        // S_{2,1^0} is the two-edge path on three vertices.
        let p2 = Pattern::AlmostStar(0).to_graph();
        assert_eq!((p2.vertex_count(), p2.edge_count()), (3, 2));
        let mut degs: Vec<usize> = (0..3).map(|v| p2.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, [1, 1, 2]);

        // S_{2,1^3}: six vertices, center adjacent to four, one of which has
        // a pendant.
        let t = Pattern::AlmostStar(3).to_graph();
        assert_eq!((t.vertex_count(), t.edge_count()), (6, 5));
        assert_eq!(t.degree(0), 4);
        let mut degs: Vec<usize> = (0..6).map(|v| t.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, [1, 1, 1, 1, 2, 4]);

        // |V| = k+3, |E| = k+2, degree sequence {k+1, 2, 1^(k+1)} for k >= 1.
        for k in 1..6 {
            let g = Pattern::AlmostStar(k).to_graph();
            assert_eq!(g.vertex_count(), k + 3);
            assert_eq!(g.edge_count(), k + 2);
            let mut degs: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
            degs.sort_unstable();
            let mut want = vec![1; k + 1];
            want.push(2);
            want.push(k + 1);
            assert_eq!(degs, want);
        }
    }

    #[test]
    fn families() {
        let star3 = FamilyDescriptor::Star(3).build().unwrap();
        assert_eq!((star3.vertex_count(), star3.edge_count()), (4, 3));
        assert_eq!(star3.degree(0), 3);

        // K_{2,2} is the 4-cycle.
        let k22 = FamilyDescriptor::CompleteBipartiteBalanced(2).build().unwrap();
        assert_eq!((k22.vertex_count(), k22.edge_count()), (4, 4));
        assert!((0..4).all(|v| k22.degree(v) == 2));
        assert!(!k22.is_chordal());

        let ipe = FamilyDescriptor::IsolatedPlusEdge(5).build().unwrap();
        assert_eq!((ipe.vertex_count(), ipe.edge_count()), (5, 1));
        assert!(FamilyDescriptor::IsolatedPlusEdge(2).build().is_err());
        assert!(FamilyDescriptor::Star(0).build().is_err());
    }

    #[test]
    fn p2blowup_structure() {
        let g = FamilyDescriptor::P2Blowup(2).build().unwrap();
        assert_eq!(g.vertex_count(), 9);
        // every middle-part vertex has degree 3, every last-part vertex 2
        for v in 1..=4 {
            assert_eq!(g.degree(v), 3);
        }
        for v in 5..=8 {
            assert_eq!(g.degree(v), 2);
        }
        for n in 1..6u64 {
            let g = FamilyDescriptor::P2Blowup(n).build().unwrap();
            let nn = (n * n) as usize;
            let ab = g.edges().iter().filter(|&&(u, _)| u == 0).count();
            let bc = g
                .edges()
                .iter()
                .filter(|&&(u, v)| u >= 1 && u <= nn && v > nn)
                .count();
            let ac = g.edges().iter().filter(|&&(u, v)| u == 0 && v > nn).count();
            assert_eq!(ab, nn);
            assert_eq!(bc, nn * n as usize);
            assert_eq!(ac, 0);
        }
    }

    #[test]
    fn union_and_product() {
        let k2 = FamilyDescriptor::SingleEdge.build().unwrap();
        let u = k2.disjoint_union(&k2);
        assert_eq!((u.vertex_count(), u.edge_count()), (4, 2));
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(Graph::empty().disjoint_union(&g), g);

        // K_2 x K_2: direct enumeration of the categorical product gives two
        // disjoint edges on four vertices.
        let p = k2.tensor_product(&k2);
        assert_eq!((p.vertex_count(), p.edge_count()), (4, 2));
        assert!((0..4).all(|v| p.degree(v) == 1));

        // tensor with an edgeless vertex annihilates edges
        let p = g.tensor_product(&Graph::edgeless(1));
        assert_eq!(p.edge_count(), 0);
    }

    #[test]
    fn cliques() {
        // S_0 + S_{2,1^2}: the isolated vertex plus the four edges.
        let f = Pattern::SingleVertex
            .to_graph()
            .disjoint_union(&Pattern::AlmostStar(2).to_graph());
        let cliques = f.maximal_cliques().unwrap();
        assert_eq!(cliques.len(), 5);
        assert_eq!(cliques[0], vec![0]);
        assert_eq!(cliques.iter().filter(|c| c.len() == 2).count(), 4);

        let k3 = Graph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(k3.maximal_cliques().unwrap(), vec![vec![0, 1, 2]]);

        let p2 = Pattern::AlmostStar(0).to_graph();
        let cl = p2.maximal_cliques().unwrap();
        assert_eq!(cl.len(), 2);
        assert!(cl.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn cliques_cover_and_are_maximal() {
        // on a few fixed graphs: every output is a clique, none contains
        // another, every vertex appears
        let graphs = [
            Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]).unwrap(),
            Graph::new(6, &[(0, 1), (0, 2), (1, 2), (3, 4)]).unwrap(),
            Graph::edgeless(4),
        ];
        for g in &graphs {
            let cliques = g.maximal_cliques().unwrap();
            let mut covered = vec![false; g.vertex_count()];
            for c in &cliques {
                for (i, &u) in c.iter().enumerate() {
                    covered[u] = true;
                    for &v in &c[i + 1..] {
                        assert!(g.has_edge(u, v));
                    }
                }
            }
            assert!(covered.iter().all(|&b| b));
            for a in &cliques {
                for b in &cliques {
                    if a != b {
                        assert!(!a.iter().all(|v| b.contains(v)));
                    }
                }
            }
        }
    }

    #[test]
    fn chordality() {
        assert!(Pattern::AlmostStar(4).to_graph().is_chordal());
        assert!(Graph::edgeless(3).is_chordal());
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(!c4.is_chordal());
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(k4.is_chordal());
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert!(!c5.is_chordal());
    }

    #[test]
    fn series_parallel() {
        assert!(Pattern::AlmostStar(3).to_graph().is_series_parallel());
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(c4.is_series_parallel());
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(!k4.is_series_parallel());
        // K_4 plus a subdivision is still not series-parallel
        let k4sub = Graph::new(5, &[(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        assert!(!k4sub.is_series_parallel());
    }

    #[test]
    fn file_format() {
        let g = Graph::parse("# triangle plus vertex\n4\n0 1\n1 2\n\n0 2\n").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 3));
        let round = Graph::parse(&g.render()).unwrap();
        assert_eq!(round, g);

        assert!(matches!(
            Graph::parse("3\n0 1\n0 1\n"),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(Graph::parse("3\n1 0\n"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(Graph::parse("x\n"), Err(Error::Parse { pos: 1, .. })));
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(2, &[(0, 0)]).is_err());
        assert!(Graph::new(2, &[(0, 2)]).is_err());
        assert!(Graph::new(3, &[(0, 1), (1, 0)]).is_err());
    }
}
