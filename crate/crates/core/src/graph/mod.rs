//! Simple undirected graphs and the concrete families the rest of the crate
//! works on: generalized Petersen graphs, the subdivided `K4`, and the
//! 36-vertex cubic example assembled from three subdivided `K4` copies.
//!
//! Vertex-id convention for `P(n,k)`: outer vertex `u_i` has id `i`, inner
//! vertex `v_i` has id `n + i`. Pattern constructors and the profile DP rely
//! on it.

mod io;

pub use io::{export_dot, parse_graph, serialize_graph};

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Undirected simple graph on vertices `0..n_vertices` with sorted adjacency
/// lists and optional human-readable labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    labels: BTreeMap<Vertex, String>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges and out-of-range endpoints.
    pub fn from_edges(n_vertices: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n_vertices];
        for (idx, &(a, b)) in edges.iter().enumerate() {
            if a >= n_vertices || b >= n_vertices {
                return Err(Error::input(format!(
                    "edge #{idx} ({a},{b}) has an endpoint outside 0..{n_vertices}"
                )));
            }
            if a == b {
                return Err(Error::input(format!("edge #{idx} is a self-loop at {a}")));
            }
            if adjacency[a].contains(&b) {
                return Err(Error::input(format!("edge #{idx} ({a},{b}) is duplicated")));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            adjacency,
            labels: BTreeMap::new(),
        })
    }

    /// Builds a graph from adjacency lists, validating symmetry.
    pub fn from_adjacency(adjacency: Vec<Vec<Vertex>>) -> Result<Self> {
        let n = adjacency.len();
        let mut edges = Vec::new();
        for (u, list) in adjacency.iter().enumerate() {
            for &v in list {
                if v >= n {
                    return Err(Error::input(format!("vertex {u} lists neighbor {v} outside 0..{n}")));
                }
                if !adjacency[v].contains(&u) {
                    return Err(Error::input(format!(
                        "adjacency is not symmetric: {v} in adjacency[{u}] but {u} not in adjacency[{v}]"
                    )));
                }
                if u < v {
                    edges.push((u, v));
                } else if u == v {
                    return Err(Error::input(format!("self-loop at {u}")));
                }
            }
            let mut sorted = list.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::input(format!("vertex {u} has duplicate neighbors")));
            }
        }
        Graph::from_edges(n, &edges)
    }

    pub fn with_labels(mut self, labels: BTreeMap<Vertex, String>) -> Self {
        self.labels = labels;
        self
    }

    pub fn n_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn n_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn adjacency(&self) -> &[Vec<Vertex>] {
        &self.adjacency
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, String> {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, list)| list.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adjacency.first().map(Vec::len)?;
        self.adjacency.iter().all(|l| l.len() == d).then_some(d)
    }
}

pub fn is_cubic(g: &Graph) -> bool {
    g.n_vertices() > 0 && g.regular_degree() == Some(3)
}

/// Two-colors every component by breadth-first search; the lowest-id vertex
/// of each component lands in part 0. `None` when an odd cycle exists.
pub fn bipartition(g: &Graph) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let n = g.n_vertices();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for (v, s) in side.iter().enumerate() {
        if s == &Some(false) {
            left.push(v);
        } else {
            right.push(v);
        }
    }
    Some((left, right))
}

/// Validated parameters of a generalized Petersen graph `P(n,k)`.
///
/// `k` is stored in canonical form `min(k, n-k)`; `P(n,k)` and `P(n,n-k)`
/// have identical edge sets under the id convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PetersenParams {
    n: usize,
    k: usize,
}

impl PetersenParams {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::domain(format!("P(n,k) needs n >= 3, got n = {n}")));
        }
        if k < 1 || k >= n {
            return Err(Error::domain(format!("P(n,k) needs 1 <= k <= n-1, got k = {k} for n = {n}")));
        }
        if 2 * k == n {
            return Err(Error::domain(format!("P({n},{k}) has 2k = n and is not cubic")));
        }
        Ok(PetersenParams { n, k: k.min(n - k) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Id of outer vertex `u_i` (index taken mod n).
    pub fn outer(&self, i: usize) -> Vertex {
        i % self.n
    }

    /// Id of inner vertex `v_i` (index taken mod n).
    pub fn inner(&self, i: usize) -> Vertex {
        self.n + i % self.n
    }

    /// `Some(c)` when `n = c·k`.
    pub fn multiplier(&self) -> Option<usize> {
        self.n.is_multiple_of(self.k).then_some(self.n / self.k)
    }
}

pub fn build_generalized_petersen(params: PetersenParams) -> Graph {
    let (n, k) = (params.n, params.k);
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((params.outer(i), params.outer(i + 1)));
        edges.push((params.outer(i), params.inner(i)));
    }
    // v_i v_{i+k} over all i lists each inner edge once since 2k != n
    for i in 0..n {
        edges.push((params.inner(i), params.inner(i + k)));
    }
    let labels = (0..n)
        .map(|i| (params.outer(i), format!("u{i}")))
        .chain((0..n).map(|i| (params.inner(i), format!("v{i}"))))
        .collect();
    Graph::from_edges(2 * n, &edges)
        .expect("generalized Petersen edge set is simple")
        .with_labels(labels)
}

/// The six edges of `K4` on branch vertices 0..4, in lexicographic order.
/// Subdivision vertex `4 + p` of a subdivided `K4` sits on `K4_PAIRS[p]`.
pub const K4_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Index into [`K4_PAIRS`] of the complementary pair.
pub fn complementary_pair(p: usize) -> usize {
    5 - p
}

fn subdivided_k4_edges(offset: usize) -> Vec<(Vertex, Vertex)> {
    K4_PAIRS
        .iter()
        .enumerate()
        .flat_map(|(p, &(a, b))| {
            let s = offset + 4 + p;
            [(offset + a, s), (offset + b, s)]
        })
        .collect()
}

/// `K4` with each edge replaced by a path of length two: ids 0..3 are the
/// branch vertices, 4..9 the subdivision vertices ordered as [`K4_PAIRS`].
pub fn build_subdivided_k4() -> Graph {
    let mut labels = BTreeMap::new();
    for b in 0..4 {
        labels.insert(b, format!("b{}", b + 1));
    }
    for (p, &(a, b)) in K4_PAIRS.iter().enumerate() {
        labels.insert(4 + p, format!("s{}{}", a + 1, b + 1));
    }
    Graph::from_edges(10, &subdivided_k4_edges(0))
        .expect("subdivided K4 is simple")
        .with_labels(labels)
}

/// Id layout of the 36-vertex example graph.
pub mod example_layout {
    /// Number of subdivided-`K4` copies.
    pub const COPIES: usize = 3;
    /// Vertices per copy.
    pub const COPY_SIZE: usize = 10;
    /// First hub id; hub `HUB_BASE + p` carries the color pair `K4_PAIRS[p]`
    /// (shifted to colors 1..=4).
    pub const HUB_BASE: usize = COPIES * COPY_SIZE;
    pub const N_VERTICES: usize = HUB_BASE + 6;

    pub fn branch(copy: usize, b: usize) -> usize {
        copy * COPY_SIZE + b
    }

    pub fn subdivision(copy: usize, pair: usize) -> usize {
        copy * COPY_SIZE + 4 + pair
    }

    pub fn hub(pair: usize) -> usize {
        HUB_BASE + pair
    }
}

/// Three subdivided `K4` copies plus six hubs, one per 2-subset `S` of
/// `{1,2,3,4}`. Branch vertex `b` of every copy is meant to carry color
/// `b+1`; hub `S` joins, in each copy, the subdivision vertex between the two
/// branch vertices carrying the colors of `{1,2,3,4} \ S`.
pub fn build_example_graph() -> Graph {
    use example_layout::*;
    let mut edges = Vec::with_capacity(54);
    let mut labels = BTreeMap::new();
    for copy in 0..COPIES {
        edges.extend(subdivided_k4_edges(copy * COPY_SIZE));
        for b in 0..4 {
            labels.insert(branch(copy, b), format!("H{copy}.b{}", b + 1));
        }
        for (p, &(a, b)) in K4_PAIRS.iter().enumerate() {
            labels.insert(subdivision(copy, p), format!("H{copy}.s{}{}", a + 1, b + 1));
        }
    }
    for (p, &(a, b)) in K4_PAIRS.iter().enumerate() {
        labels.insert(hub(p), format!("h{}{}", a + 1, b + 1));
        for copy in 0..COPIES {
            edges.push((subdivision(copy, complementary_pair(p)), hub(p)));
        }
    }
    Graph::from_edges(N_VERTICES, &edges)
        .expect("example graph is simple")
        .with_labels(labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn girth(g: &Graph) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..g.n_vertices() {
            let mut dist = vec![usize::MAX; g.n_vertices()];
            let mut parent = vec![usize::MAX; g.n_vertices()];
            dist[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &w in g.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        q.push_back(w);
                    } else if parent[u] != w {
                        let c = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(c, |b| b.min(c)));
                    }
                }
            }
        }
        best
    }

    fn petersen(n: usize, k: usize) -> Graph {
        build_generalized_petersen(PetersenParams::new(n, k).unwrap())
    }

    #[test]
    fn prism_four_is_the_cube() {
        let g = petersen(4, 1);
        assert_eq!(g.n_vertices(), 8);
        assert_eq!(g.n_edges(), 12);
        assert!(is_cubic(&g));
        assert_eq!(girth(&g), Some(4));
        assert!(bipartition(&g).is_some());
    }

    #[test]
    fn petersen_graph() {
        let g = petersen(5, 2);
        assert_eq!((g.n_vertices(), g.n_edges()), (10, 15));
        assert_eq!(girth(&g), Some(5));
        assert!(bipartition(&g).is_none());
    }

    #[test]
    fn p61_bipartite() {
        let g = petersen(6, 1);
        assert!(is_cubic(&g));
        let (a, b) = bipartition(&g).unwrap();
        assert_eq!((a.len(), b.len()), (6, 6));
        assert_eq!(a[0], 0);
    }

    #[test]
    fn rejects_half_k() {
        let err = PetersenParams::new(6, 3).unwrap_err();
        assert!(err.to_string().contains("2k = n"), "{err}");
        assert!(PetersenParams::new(6, 0).is_err());
        assert!(PetersenParams::new(6, 6).is_err());
        assert!(PetersenParams::new(2, 1).is_err());
    }

    #[test]
    fn canonical_k() {
        assert_eq!(PetersenParams::new(10, 7).unwrap().k(), 3);
        assert_eq!(petersen(10, 7), petersen(10, 3));
    }

    #[test]
    fn labels_follow_id_convention() {
        let g = petersen(6, 1);
        assert_eq!(g.label(2), Some("u2"));
        assert_eq!(g.label(8), Some("v2"));
    }

    #[test]
    fn subdivided_k4_shape() {
        let h = build_subdivided_k4();
        let degs: Vec<_> = (0..10).map(|v| h.degree(v)).collect();
        assert_eq!(degs, [3, 3, 3, 3, 2, 2, 2, 2, 2, 2]);
        assert_eq!(h.n_edges(), 12);
        assert!(!is_cubic(&h));
        let (a, b) = bipartition(&h).unwrap();
        assert_eq!(a, vec![0, 1, 2, 3]);
        assert_eq!(b, vec![4, 5, 6, 7, 8, 9]);
        assert_eq!(h.label(9), Some("s34"));
    }

    #[test]
    fn example_graph_shape() {
        use example_layout::*;
        let g = build_example_graph();
        assert_eq!(g.n_vertices(), 36);
        assert_eq!(g.n_edges(), 54);
        assert!(is_cubic(&g));
        assert!(bipartition(&g).is_some());
        for p in 0..6 {
            let h = hub(p);
            for copy in 0..COPIES {
                let in_copy = g
                    .neighbors(h)
                    .iter()
                    .filter(|&&w| w / COPY_SIZE == copy && w < HUB_BASE)
                    .count();
                assert_eq!(in_copy, 1);
            }
        }
        // hub {1,2} attaches to the subdivision vertex between colors 3 and 4
        assert_eq!(g.label(hub(0)), Some("h12"));
        assert!(g.neighbors(hub(0)).iter().all(|&w| g.label(w).unwrap().ends_with("s34")));
    }

    #[test]
    fn single_vertex_bipartition() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(bipartition(&g), Some((vec![0], vec![])));
    }

    #[test]
    fn petersen_family_invariants() {
        for n in 3..=30 {
            for k in 1..n {
                let Ok(p) = PetersenParams::new(n, k) else { continue };
                let g = build_generalized_petersen(p);
                assert!(is_cubic(&g), "P({n},{k})");
                assert_eq!(g.n_vertices(), 2 * n);
                assert_eq!(g.n_edges(), 3 * n);
                let bip = bipartition(&g).is_some();
                let expected = n % 2 == 0 && p.k() % 2 == 1;
                assert_eq!(bip, expected, "bipartite P({n},{k})");
            }
        }
    }

    #[test]
    fn from_adjacency_rejects_asymmetry() {
        let err = Graph::from_adjacency(vec![vec![1], vec![]]).unwrap_err();
        assert!(err.to_string().contains("not symmetric"));
    }
}
