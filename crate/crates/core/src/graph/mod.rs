//! Simple undirected graphs with dense bit-row adjacency.

mod format;

pub use format::{from_graph6, from_sparse6, parse_graph, to_graph6, to_sparse6, GraphFormat};

use std::collections::VecDeque;

use thiserror::Error;

use crate::groups::Perm;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("graph is acyclic, girth undefined")]
    Acyclic,
    #[error("permutation degree {perm} does not match {n} vertices")]
    DegreeMismatch { perm: usize, n: usize },
    #[error("malformed {format} input: {reason}")]
    Format { format: &'static str, reason: String },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    adj: Vec<Vec<u32>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={})", self.n, self.edge_count())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        Graph { n, words, rows: vec![0; n * words], adj: vec![Vec::new(); n] }
    }

    /// Repeated edges are merged; loops are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if !g.has_edge(u, v) {
                g.rows[u * g.words + v / 64] |= 1 << (v % 64);
                g.rows[v * g.words + u / 64] |= 1 << (u % 64);
                g.adj[u].push(v as u32);
                g.adj[v].push(u as u32);
            }
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Neighbours in increasing order.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    /// Bit row of `v`: bit `u` set iff `u ~ v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u].iter().map(|&v| v as usize).filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn regular_valency(&self) -> Option<usize> {
        let k = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == k).then_some(k)
    }

    /// BFS distances from `source`; `usize::MAX` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                let w = w as usize;
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Number of vertices at each distance from `source`.
    pub fn distance_profile(&self, source: usize) -> Vec<usize> {
        let mut profile = Vec::new();
        for d in self.distances_from(source) {
            if d == usize::MAX {
                continue;
            }
            if profile.len() <= d {
                profile.resize(d + 1, 0);
            }
            profile[d] += 1;
        }
        profile
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances_from(0).iter().all(|&d| d != usize::MAX)
    }

    /// A proper 2-colouring (vertex 0 of each component gets colour 0), if one exists.
    pub fn is_bipartite(&self) -> Option<Vec<u8>> {
        let mut colour = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if colour[start] != u8::MAX {
                continue;
            }
            colour[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    let w = w as usize;
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[u];
                        queue.push_back(w);
                    } else if colour[w] == colour[u] {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }

    /// True iff `vertices` are distinct and cyclically consecutive ones are adjacent.
    pub fn contains_cycle(&self, vertices: &[usize]) -> bool {
        if vertices.len() < 3 || vertices.iter().any(|&v| v >= self.n) {
            return false;
        }
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == vertices.len()
            && (0..vertices.len()).all(|i| self.has_edge(vertices[i], vertices[(i + 1) % vertices.len()]))
    }

    pub fn girth(&self) -> Result<usize, GraphError> {
        let mut best = usize::MAX;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    let w = w as usize;
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Err(GraphError::Acyclic)
        } else {
            Ok(best)
        }
    }

    /// Image of the graph under `p`: edge `{u, v}` becomes `{p(u), p(v)}`.
    pub fn relabel(&self, p: &Perm) -> Result<Graph, GraphError> {
        if p.degree() != self.n {
            return Err(GraphError::DegreeMismatch { perm: p.degree(), n: self.n });
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (p.apply(u), p.apply(v))))
    }

    /// True iff `p` maps every edge to an edge.
    pub fn is_automorphism(&self, p: &Perm) -> bool {
        p.degree() == self.n && self.edges().all(|(u, v)| self.has_edge(p.apply(u), p.apply(v)))
    }

    /// True iff `p` maps `self` edge-for-edge onto `other`.
    pub fn is_isomorphism_to(&self, other: &Graph, p: &Perm) -> bool {
        p.degree() == self.n
            && other.n == self.n
            && self.edge_count() == other.edge_count()
            && self.edges().all(|(u, v)| other.has_edge(p.apply(u), p.apply(v)))
    }

    /// Induced subgraph on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(vertices.len(), edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_queries() {
        let k6 = Graph::complete(6);
        assert!(k6.is_connected());
        assert_eq!(k6.regular_valency(), Some(5));
        assert!(k6.is_bipartite().is_none());
        assert!(k6.contains_cycle(&[0, 3, 5]));
        assert_eq!(k6.girth().unwrap(), 3);
        assert_eq!(k6.edge_count(), 15);

        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.regular_valency(), None);
        assert_eq!(path.girth(), Err(GraphError::Acyclic));

        let k55 = Graph::complete_bipartite(5, 5);
        assert_eq!(k55.is_bipartite().unwrap(), vec![0, 0, 0, 0, 0, 1, 1, 1, 1, 1]);
        assert_eq!(k55.girth().unwrap(), 4);
        assert_eq!(Graph::cycle(12).girth().unwrap(), 12);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn cycle_membership() {
        let c6 = Graph::cycle(6);
        assert!(c6.contains_cycle(&[0, 1, 2, 3, 4, 5]));
        assert!(!c6.contains_cycle(&[0, 1, 2, 3, 4]));
        assert!(!c6.contains_cycle(&[0, 1, 0]));
        assert!(!c6.contains_cycle(&[0, 1]));
    }

    #[test]
    fn bit_rows_wider_than_a_word() {
        let g = Graph::cycle(130);
        assert!(g.has_edge(129, 0));
        assert!(g.has_edge(64, 65));
        assert!(!g.has_edge(63, 65));
        assert_eq!(g.row(64).iter().map(|w| w.count_ones()).sum::<u32>(), 2);
    }

    fn random_graph() -> impl Strategy<Value = Graph> {
        (2usize..50).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..3 * n).prop_map(move |pairs| {
                Graph::from_edges(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
            })
        })
    }

    /// Search for an odd closed walk via BFS layers inside each component.
    fn has_odd_cycle(g: &Graph) -> bool {
        (0..g.vertex_count()).any(|s| {
            let d = g.distances_from(s);
            g.edges().any(|(u, v)| d[u] != usize::MAX && d[u] == d[v])
        })
    }

    proptest! {
        #[test]
        fn bipartite_excludes_odd_cycles(g in random_graph()) {
            prop_assert_eq!(g.is_bipartite().is_some(), !has_odd_cycle(&g));
            if let Some(c) = g.is_bipartite() {
                for (u, v) in g.edges() {
                    prop_assert_ne!(c[u], c[v]);
                }
            }
        }

        #[test]
        fn symmetric_rows(g in random_graph()) {
            for u in 0..g.vertex_count() {
                prop_assert!(!g.has_edge(u, u));
                for v in 0..g.vertex_count() {
                    prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
                }
            }
            let pop: u32 = (0..g.vertex_count()).flat_map(|v| g.row(v).iter().map(|w| w.count_ones())).sum();
            prop_assert_eq!(pop as usize, 2 * g.edge_count());
        }
    }
}
